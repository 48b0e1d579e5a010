#include "wcat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wcat/io.hpp"

namespace wcat {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitBounds = 3;
constexpr int kExitIo = 4;

// Signals exit code 2 after the message has been written.
struct CommandInvalid : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << text;
  if (!out.good()) throw ParseError("cannot write file: " + path);
}

Document load(const std::string& path) { return parse_document(read_file(path)); }

// Loads, checks the kind, and runs the kind's validator (documents must
// validate before any computation touches them).
Document load_checked(const std::string& path, std::initializer_list<const char*> kinds) {
  Document d = load(path);
  bool ok = false;
  for (const char* k : kinds)
    if (d.kind == k) ok = true;
  if (!ok) {
    std::string want;
    for (const char* k : kinds) {
      if (!want.empty()) want += " or ";
      want += k;
    }
    throw CommandInvalid(path + ": expected a " + want + " document, got '" + d.kind + "'");
  }
  Report r = validate_document(d);
  if (!r.ok) throw CommandInvalid(path + ":\n" + r.text());
  return d;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

PointSubset parse_point_set(const LawvereSpace& s, const std::string& text,
                            const std::string& what) {
  PointSubset set;
  for (const std::string& id : split_commas(text)) {
    int i = s.point_index(id);
    if (i < 0) throw CommandInvalid(what + ": unknown point '" + id + "'");
    set.push_back(i);
  }
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

Grid parse_grid_values(const std::string& text, const std::string& what) {
  Grid g;
  for (const std::string& v : split_commas(text)) {
    try {
      g.push_back(Rat::parse(v));
    } catch (const std::exception& e) {
      throw CommandInvalid(what + ": " + e.what());
    }
  }
  return g;
}

GridMode parse_mode(const std::string& name) {
  if (name == "eps") return GridMode::IEps;
  if (name == "eps-plus") return GridMode::IEpsPlus;
  if (name == "alpha-eps") return GridMode::IAlphaEps;
  if (name == "observable") return GridMode::Observable;
  throw CommandInvalid("unknown mode '" + name + "' (expected eps, eps-plus, alpha-eps, or observable)");
}

Rat parse_rat_arg(const std::string& text, const std::string& what) {
  try {
    return Rat::parse(text);
  } catch (const std::exception& e) {
    throw CommandInvalid(what + ": " + e.what());
  }
}

// Table maps "from:to,from:to" over the given id lists.
std::vector<int> parse_id_map(const std::string& text, const std::vector<std::string>& from_ids,
                              const std::vector<std::string>& to_ids, const std::string& what) {
  auto index_in = [&](const std::vector<std::string>& ids, const std::string& id) {
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (ids[i] == id) return static_cast<int>(i);
    throw CommandInvalid(what + ": unknown id '" + id + "'");
  };
  std::vector<int> map(from_ids.size(), -1);
  for (const std::string& entry : split_commas(text)) {
    auto colon = entry.find(':');
    if (colon == std::string::npos)
      throw CommandInvalid(what + ": entry '" + entry + "' is not of the form from:to");
    int f = index_in(from_ids, entry.substr(0, colon));
    int t = index_in(to_ids, entry.substr(colon + 1));
    map[f] = t;
  }
  for (std::size_t i = 0; i < map.size(); ++i)
    if (map[i] < 0) throw CommandInvalid(what + ": no image for '" + from_ids[i] + "'");
  return map;
}

// A pair of comparison functors against a shared target: either two functor
// documents (used as given) or two grid-module documents converted to linear
// maps over the field named by the module.
struct LoadedPair {
  Functor F, G;
};

LoadedPair load_functor_pair(const std::string& path_f, const std::string& path_g,
                             const std::string& search_spec) {
  Document df = load_checked(path_f, {"functor", "grid-module"});
  Document dg = load_checked(path_g, {"functor", "grid-module"});
  if (df.kind != dg.kind)
    throw CommandInvalid("'" + path_f + "' and '" + path_g + "' must have the same kind");
  LoadedPair p;
  if (df.kind == "functor") {
    if (!search_spec.empty() && search_spec != "finset")
      throw CommandInvalid("--search " + search_spec + " requires grid-module documents");
    p.F = *df.functor;
    p.G = *dg.functor;
    if (!p.F.target->same_tables(*p.G.target))
      throw CommandInvalid("the two functors must share their target category");
    p.G.target = p.F.target;
  } else {
    const GridModule& mf = *df.grid_module;
    const GridModule& mg = *dg.grid_module;
    if (mf.prime != mg.prime)
      throw CommandInvalid("the two modules must be over the same field");
    if (!search_spec.empty()) {
      if (search_spec == "finset") throw CommandInvalid("--search finset requires functor documents");
      std::string want = "finvect:" + std::to_string(mf.prime);
      if (search_spec != want)
        throw CommandInvalid("--search " + search_spec + " does not match the module field (" + want + ")");
    }
    int cap = 1;
    for (int d : mf.dims) cap = std::max(cap, d);
    for (int d : mg.dims) cap = std::max(cap, d);
    FinVectCategory target(mf.prime, cap);
    p.F = module_functor(mf, target);
    p.G = module_functor(mg, target);
    p.G.target = p.F.target;
  }
  return p;
}

// Rebinds functor endpoints onto the cospan's categories when the tables
// agree, so downstream pointer comparisons see one instance per category.
void align_with_cospan(const EmbeddingPair& e, LoadedPair& p) {
  if (!p.F.source->same_tables(*e.left()))
    throw CommandInvalid("F is not a functor out of the cospan's left category");
  if (!p.G.source->same_tables(*e.right()))
    throw CommandInvalid("G is not a functor out of the cospan's right category");
  p.F.source = e.left();
  p.G.source = e.right();
}

std::string weight_str(const Weight& w) { return w.str(); }

class Output {
 public:
  Output(std::ostream& out, bool as_json) : out_(out), json_(as_json) {}

  void line(const std::string& text) {
    if (!json_) out_ << text << "\n";
  }
  template <typename T>
  void field(const std::string& key, const T& value) {
    if (json_) payload_[key] = value;
  }
  void document(const Document& d, const std::string& dest) {
    std::string text = emit_document(d);
    if (!dest.empty()) {
      write_file(dest, text);
      field("output", dest);
      line("wrote " + dest);
    } else if (json_) {
      payload_["document"] = json::parse(text);
    } else {
      out_ << text;
    }
  }
  void finish() {
    if (json_) out_ << payload_.dump(2) << "\n";
  }

 private:
  std::ostream& out_;
  bool json_;
  json payload_ = json::object();
};

int run_validate(const std::string& file, Output& o) {
  Document d = load(file);
  Report r = validate_document(d);
  o.field("kind", d.kind);
  o.field("ok", r.ok);
  if (r.ok) {
    o.line("ok: " + d.kind + " document is valid");
    return kExitOk;
  }
  o.field("violations", r.violations);
  o.line(r.text());
  return kExitInvalid;
}

int run_hausdorff(const std::string& file, const std::string& a_text, const std::string& b_text,
                  bool symmetric, bool via_offsets, Output& o) {
  Document d = load_checked(file, {"lawvere"});
  const LawvereSpace& s = *d.lawvere;
  PointSubset A = parse_point_set(s, a_text, "A");
  PointSubset B = parse_point_set(s, b_text, "B");
  if (A.empty() || B.empty()) throw CommandInvalid("subsets must be non-empty");
  Weight w = symmetric      ? sym_hausdorff(s, A, B)
             : via_offsets ? hausdorff_via_offsets(s, A, B)
                           : hausdorff(s, A, B);
  o.field("value", weight_str(w));
  o.line(weight_str(w));
  return kExitOk;
}

int run_pushout(const std::string& file1, const std::string& file2, const std::string& dest,
                Output& o) {
  Document d1 = load_checked(file1, {"cospan"});
  Document d2 = load_checked(file2, {"cospan"});
  PushoutResult r;
  try {
    r = pushout(*d1.cospan, *d2.cospan);
  } catch (const std::invalid_argument& e) {
    throw CommandInvalid(e.what());
  }
  o.field("objects", r.pair.ambient()->object_count());
  o.field("morphisms", r.pair.ambient()->morphism_count());
  o.field("crossClasses", r.classes.size());
  o.line("pushout ambient: " + std::to_string(r.pair.ambient()->object_count()) + " objects, " +
         std::to_string(r.pair.ambient()->morphism_count()) + " morphisms, " +
         std::to_string(r.classes.size()) + " cross classes");
  Document out_doc;
  out_doc.kind = "cospan";
  out_doc.cospan = r.pair;
  o.document(out_doc, dest);
  return kExitOk;
}

int run_interleave(const std::string& cospan_file, const std::string& f_file,
                   const std::string& g_file, const std::string& search_spec,
                   const std::string& dest, Output& o) {
  Document dc = load_checked(cospan_file, {"cospan"});
  LoadedPair p = load_functor_pair(f_file, g_file, search_spec);
  align_with_cospan(*dc.cospan, p);
  SearchResult r = search_interleaving_extension(*dc.cospan, p.F, p.G);
  switch (r.status) {
    case SearchStatus::Found: {
      o.field("status", "found");
      o.line("interleaving extension found");
      if (r.extension) {
        Document out_doc;
        out_doc.kind = "functor";
        out_doc.functor = *r.extension;
        o.document(out_doc, dest);
      }
      return kExitOk;
    }
    case SearchStatus::NotFound:
      o.field("status", "not-found");
      o.line("no interleaving extension exists");
      return kExitNegative;
    case SearchStatus::BoundsExceeded:
    default:
      o.field("status", "bounds-exceeded");
      o.field("note", r.note);
      o.line("search bounds exceeded: " + r.note);
      return kExitBounds;
  }
}

int run_distance(const std::string& f_file, const std::string& g_file,
                 const std::string& family_file, bool symmetric, Output& o) {
  Document df = load_checked(family_file, {"family"});
  LoadedPair p = load_functor_pair(f_file, g_file, "");
  std::vector<FamilyMember> family = *df.family;
  for (FamilyMember& m : family) {
    if (!p.F.source->same_tables(*m.pair.left()) || !p.G.source->same_tables(*m.pair.right()))
      throw CommandInvalid("family member categories do not match the functors' sources");
    m.pair.leg_left.source = p.F.source;
    m.pair.leg_right.source = p.G.source;
  }
  DistanceResult r = interleaving_distance(p.F, p.G, family, symmetric);
  o.field("value", weight_str(r.value));
  o.field("upperBound", r.upper_bound);
  o.field("boundsExceeded", r.bounds_exceeded);
  o.line(weight_str(r.value));
  if (r.witness) {
    o.field("witness", *r.witness);
    o.line("witness: family member " + std::to_string(*r.witness));
  }
  o.line(std::string("upper bound: ") + (r.upper_bound ? "yes" : "no"));
  if (!r.bounds_exceeded.empty()) {
    std::string ids;
    for (int i : r.bounds_exceeded) ids += (ids.empty() ? "" : ", ") + std::to_string(i);
    o.line("bounds exceeded on members: " + ids);
  }
  if (r.witness) return kExitOk;
  return r.bounds_exceeded.empty() ? kExitNegative : kExitBounds;
}

int run_fut_validate(const std::string& file, Output& o) {
  Document d = load(file);
  if (d.kind != "future-equivalence")
    throw CommandInvalid(file + ": expected a future-equivalence document, got '" + d.kind + "'");
  Report r = validate_document(d);
  o.field("ok", r.ok);
  if (r.ok) {
    o.line("ok: future equivalence is valid");
    return kExitOk;
  }
  o.field("violations", r.violations);
  o.line(r.text());
  return kExitInvalid;
}

int run_fut_compose(const std::string& first_file, const std::string& second_file,
                    const std::string& dest, Output& o) {
  Document d1 = load_checked(first_file, {"future-equivalence"});
  Document d2 = load_checked(second_file, {"future-equivalence"});
  FutureEquivalence composite;
  try {
    composite = compose_future_equivalences(*d2.fut, *d1.fut);
  } catch (const std::invalid_argument& e) {
    throw CommandInvalid(e.what());
  }
  Document out_doc;
  out_doc.kind = "future-equivalence";
  out_doc.fut = composite;
  o.document(out_doc, dest);
  return kExitOk;
}

int run_fut_weight(const std::string& file, Output& o) {
  Document d = load_checked(file, {"future-equivalence"});
  FutWeight w = future_equivalence_weight(*d.fut);
  o.field("etaWeight", weight_str(w.w_eta));
  o.field("nuWeight", weight_str(w.w_nu));
  o.field("omega", weight_str(w.omega));
  o.line("eta weight: " + weight_str(w.w_eta));
  o.line("nu weight:  " + weight_str(w.w_nu));
  o.line("omega:      " + weight_str(w.omega));
  return kExitOk;
}

int run_fut_phi(const std::string& file, const std::string& dest, Output& o) {
  Document d = load_checked(file, {"future-equivalence"});
  PhiObject phi = phi_object(*d.fut);
  o.field("omega", weight_str(phi.omega));
  o.line("omega: " + weight_str(phi.omega));
  Document out_doc;
  out_doc.kind = "cospan";
  out_doc.cospan = phi.pair;
  o.document(out_doc, dest);
  return kExitOk;
}

int run_shift_equiv(const std::string& file1, const std::string& file2, std::int64_t lag,
                    bool search, const std::string& alpha_text, const std::string& beta_text,
                    Output& o) {
  Document d1 = load_checked(file1, {"dynsystem"});
  Document d2 = load_checked(file2, {"dynsystem"});
  const DynSystem& s1 = *d1.dynsystem;
  const DynSystem& s2 = *d2.dynsystem;
  auto describe = [&](const std::vector<int>& alpha, const std::vector<int>& beta) {
    auto text = [](const std::vector<std::string>& from, const std::vector<std::string>& to,
                   const std::vector<int>& map) {
      std::string s;
      for (std::size_t i = 0; i < map.size(); ++i)
        s += (s.empty() ? "" : ",") + from[i] + ":" + to[map[i]];
      return s;
    };
    o.field("alpha", text(s1.carrier, s2.carrier, alpha));
    o.field("beta", text(s2.carrier, s1.carrier, beta));
    o.line("alpha: " + text(s1.carrier, s2.carrier, alpha));
    o.line("beta:  " + text(s2.carrier, s1.carrier, beta));
  };
  if (search) {
    std::optional<ShiftWitness> w;
    try {
      w = search_shift_equivalence(s1, s2, lag);
    } catch (const std::invalid_argument& e) {
      o.field("status", "bounds-exceeded");
      o.field("note", e.what());
      o.line(std::string("search bounds exceeded: ") + e.what());
      return kExitBounds;
    }
    if (!w) {
      o.field("status", "not-found");
      o.line("no shift equivalence of lag " + std::to_string(lag) + " exists");
      return kExitNegative;
    }
    o.field("status", "found");
    o.line("shift equivalence of lag " + std::to_string(lag) + " found");
    describe(w->first, w->second);
    return kExitOk;
  }
  std::vector<int> alpha = parse_id_map(alpha_text, s1.carrier, s2.carrier, "--alpha");
  std::vector<int> beta = parse_id_map(beta_text, s2.carrier, s1.carrier, "--beta");
  bool ok = check_shift_equivalence(s1, s2, alpha, beta, lag);
  o.field("status", ok ? "valid" : "invalid");
  if (ok) {
    o.line("the given maps form a shift equivalence of lag " + std::to_string(lag));
    describe(alpha, beta);
    return kExitOk;
  }
  o.line("the given maps do not form a shift equivalence of lag " + std::to_string(lag));
  return kExitNegative;
}

int run_zoo_grid(const std::string& values, const std::string& dest, Output& o) {
  Grid g = parse_grid_values(values, "grid");
  Document d;
  d.kind = "category";
  d.category = grid_line_category(g);
  o.document(d, dest);
  return kExitOk;
}

int run_zoo_iepsilon(const std::string& values, const std::string& eps, const std::string& mode,
                     const std::string& alpha, const std::string& translation,
                     const std::string& grid_q, const std::string& dest, Output& o) {
  Grid g = parse_grid_values(values, "grid");
  std::optional<Grid> gq;
  if (!grid_q.empty()) gq = parse_grid_values(grid_q, "--grid-q");
  Document d;
  d.kind = "cospan";
  d.cospan = grid_interleaving_category(g, parse_mode(mode), parse_rat_arg(eps, "--eps"),
                                        parse_rat_arg(alpha, "--alpha"),
                                        parse_rat_arg(translation, "--translation"), gq);
  o.document(d, dest);
  return kExitOk;
}

int run_zoo_interval(const std::string& values, const std::string& birth,
                     const std::string& death, int prime, const std::string& dest, Output& o) {
  Grid g = parse_grid_values(values, "grid");
  std::optional<Rat> death_r;
  if (!death.empty()) death_r = parse_rat_arg(death, "--death");
  Document d;
  d.kind = "grid-module";
  d.grid_module = interval_module(g, parse_rat_arg(birth, "--birth"), death_r, prime);
  o.document(d, dest);
  return kExitOk;
}

int run_zoo_family(const std::string& values, const std::string& eps_list, const std::string& mode,
                   const std::string& alpha, const std::string& translation,
                   const std::string& grid_q, bool windowed, const std::string& dest, Output& o) {
  Grid g = parse_grid_values(values, "grid");
  std::optional<Grid> gq;
  if (!grid_q.empty()) gq = parse_grid_values(grid_q, "--grid-q");
  GridMode m = parse_mode(mode);
  Rat alpha_r = parse_rat_arg(alpha, "--alpha");
  Rat translation_r = parse_rat_arg(translation, "--translation");
  std::vector<FamilyMember> fam;
  for (const std::string& e : split_commas(eps_list)) {
    EmbeddingPair pair =
        grid_interleaving_category(g, m, parse_rat_arg(e, "--eps"), alpha_r, translation_r, gq);
    fam.push_back(windowed ? windowed_member(pair) : FamilyMember{pair, std::nullopt, std::nullopt});
  }
  Document d;
  d.kind = "family";
  d.family = std::move(fam);
  o.document(d, dest);
  return kExitOk;
}

}  // namespace

int execute_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"weighted-category interleaving toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a single JSON object instead of text");

  std::string v_file;
  CLI::App* validate = app.add_subcommand("validate", "validate a document");
  validate->add_option("FILE", v_file)->required();

  std::string h_file, h_a, h_b;
  bool h_sym = false, h_via = false;
  CLI::App* haus = app.add_subcommand("hausdorff", "Hausdorff distance between point subsets");
  haus->add_option("SPACE", h_file)->required();
  haus->add_option("A", h_a, "comma-separated point ids")->required();
  haus->add_option("B", h_b, "comma-separated point ids")->required();
  CLI::Option* h_sym_opt = haus->add_flag("--symmetric", h_sym, "symmetrized distance");
  haus->add_flag("--via-offsets", h_via, "compute through offset inclusions")->excludes(h_sym_opt);

  std::string p_file1, p_file2, p_out;
  CLI::App* push = app.add_subcommand("pushout", "compose two cospans along the shared middle");
  push->add_option("COSPAN1", p_file1)->required();
  push->add_option("COSPAN2", p_file2)->required();
  push->add_option("-o,--output", p_out, "write the resulting cospan document here")->required();

  std::string i_cospan, i_f, i_g, i_search, i_out;
  CLI::App* inter = app.add_subcommand("interleave", "search for an interleaving extension");
  inter->add_option("COSPAN", i_cospan)->required();
  inter->add_option("F", i_f, "functor or grid-module document")->required();
  inter->add_option("G", i_g, "functor or grid-module document")->required();
  inter->add_option("--search", i_search, "target search space: finset or finvect:P");
  inter->add_option("-o,--output", i_out, "write the found extension functor here");

  std::string d_f, d_g, d_family;
  bool d_sym = false;
  CLI::App* dist = app.add_subcommand("distance", "interleaving distance over a cospan family");
  dist->add_option("F", d_f, "functor or grid-module document")->required();
  dist->add_option("G", d_g, "functor or grid-module document")->required();
  dist->add_option("--family", d_family, "family document")->required();
  dist->add_flag("--symmetric", d_sym, "symmetrized Hausdorff weights");

  CLI::App* fut = app.add_subcommand("fut", "future-equivalence operations");
  fut->require_subcommand(1);
  std::string fv_file;
  CLI::App* fut_validate = fut->add_subcommand("validate", "validate a future equivalence");
  fut_validate->add_option("FILE", fv_file)->required();
  std::string fc_first, fc_second, fc_out;
  CLI::App* fut_compose = fut->add_subcommand("compose", "compose two future equivalences");
  fut_compose->add_option("FIRST", fc_first, "applied first")->required();
  fut_compose->add_option("SECOND", fc_second, "applied second")->required();
  fut_compose->add_option("-o,--output", fc_out, "write the composite here");
  std::string fw_file;
  CLI::App* fut_weight = fut->add_subcommand("weight", "weight of a future equivalence");
  fut_weight->add_option("FILE", fw_file)->required();
  std::string fp_file, fp_out;
  CLI::App* fut_phi = fut->add_subcommand("phi", "cospan associated to a future equivalence");
  fut_phi->add_option("FILE", fp_file)->required();
  fut_phi->add_option("-o,--output", fp_out, "write the cospan document here");

  std::string s_file1, s_file2, s_alpha, s_beta;
  std::int64_t s_lag = 0;
  bool s_search = false;
  CLI::App* shift = app.add_subcommand("shift-equiv", "check or search for a shift equivalence");
  shift->add_option("SYS1", s_file1)->required();
  shift->add_option("SYS2", s_file2)->required();
  shift->add_option("--lag", s_lag, "lag of the equivalence")->required();
  CLI::Option* s_search_opt = shift->add_flag("--search", s_search, "search for witness maps");
  CLI::Option* s_alpha_opt =
      shift->add_option("--alpha", s_alpha, "forward map as id:id,...")->excludes(s_search_opt);
  CLI::Option* s_beta_opt =
      shift->add_option("--beta", s_beta, "backward map as id:id,...")->excludes(s_search_opt);
  s_alpha_opt->needs(s_beta_opt);
  s_beta_opt->needs(s_alpha_opt);

  CLI::App* zoo = app.add_subcommand("zoo", "emit standard example documents");
  zoo->require_subcommand(1);
  std::string zg_values, zg_out;
  CLI::App* zoo_grid = zoo->add_subcommand("grid", "thin category of an ordered grid");
  zoo_grid->add_option("VALUES", zg_values, "comma-separated rationals")->required();
  zoo_grid->add_option("-o,--output", zg_out, "write the category document here");
  std::string zi_values, zi_eps = "0", zi_mode = "eps", zi_alpha = "0", zi_translation = "0",
              zi_grid_q, zi_out;
  CLI::App* zoo_ieps = zoo->add_subcommand("iepsilon", "two-copy interleaving cospan over a grid");
  zoo_ieps->add_option("VALUES", zi_values, "comma-separated rationals")->required();
  zoo_ieps->add_option("--eps", zi_eps, "shift parameter");
  zoo_ieps->add_option("--mode", zi_mode, "eps, eps-plus, alpha-eps, or observable");
  zoo_ieps->add_option("--alpha", zi_alpha, "chain start for alpha-eps mode");
  zoo_ieps->add_option("--translation", zi_translation, "position offset of the second copy");
  zoo_ieps->add_option("--grid-q", zi_grid_q, "second-copy grid when it differs");
  zoo_ieps->add_option("-o,--output", zi_out, "write the cospan document here");
  std::string zt_values, zt_birth, zt_death, zt_out;
  int zt_prime = 2;
  CLI::App* zoo_interval = zoo->add_subcommand("interval", "interval module over a grid");
  zoo_interval->add_option("VALUES", zt_values, "comma-separated rationals")->required();
  zoo_interval->add_option("--birth", zt_birth, "interval start")->required();
  zoo_interval->add_option("--death", zt_death, "interval end (absent: never closes)");
  zoo_interval->add_option("--prime", zt_prime, "field size");
  zoo_interval->add_option("-o,--output", zt_out, "write the grid-module document here");
  std::string zf_values, zf_eps, zf_mode = "eps", zf_alpha = "0", zf_translation = "0", zf_grid_q,
              zf_out;
  bool zf_windowed = false;
  CLI::App* zoo_family = zoo->add_subcommand("family", "family of interleaving cospans");
  zoo_family->add_option("VALUES", zf_values, "comma-separated rationals")->required();
  zoo_family->add_option("--eps", zf_eps, "comma-separated shift parameters")->required();
  zoo_family->add_option("--mode", zf_mode, "eps, eps-plus, alpha-eps, or observable");
  zoo_family->add_option("--alpha", zf_alpha, "chain start for alpha-eps mode");
  zoo_family->add_option("--translation", zf_translation, "position offset of the second copy");
  zoo_family->add_option("--grid-q", zf_grid_q, "second-copy grid when it differs");
  zoo_family->add_flag("--windowed", zf_windowed, "attach interior windows to each member");
  zoo_family->add_option("-o,--output", zf_out, "write the family document here");

  std::vector<std::string> full;
  full.push_back("wcat");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<char*> argv;
  argv.reserve(full.size());
  for (std::string& s : full) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitIo;
  }

  Output o(out, as_json);
  int code = kExitIo;
  try {
    if (*validate)
      code = run_validate(v_file, o);
    else if (*haus)
      code = run_hausdorff(h_file, h_a, h_b, h_sym, h_via, o);
    else if (*push)
      code = run_pushout(p_file1, p_file2, p_out, o);
    else if (*inter)
      code = run_interleave(i_cospan, i_f, i_g, i_search, i_out, o);
    else if (*dist)
      code = run_distance(d_f, d_g, d_family, d_sym, o);
    else if (*fut_validate)
      code = run_fut_validate(fv_file, o);
    else if (*fut_compose)
      code = run_fut_compose(fc_first, fc_second, fc_out, o);
    else if (*fut_weight)
      code = run_fut_weight(fw_file, o);
    else if (*fut_phi)
      code = run_fut_phi(fp_file, fp_out, o);
    else if (*shift) {
      if (!s_search && s_alpha.empty())
        throw CommandInvalid("shift-equiv needs either --search or --alpha/--beta");
      code = run_shift_equiv(s_file1, s_file2, s_lag, s_search, s_alpha, s_beta, o);
    } else if (*zoo_grid)
      code = run_zoo_grid(zg_values, zg_out, o);
    else if (*zoo_ieps)
      code = run_zoo_iepsilon(zi_values, zi_eps, zi_mode, zi_alpha, zi_translation, zi_grid_q,
                              zi_out, o);
    else if (*zoo_interval)
      code = run_zoo_interval(zt_values, zt_birth, zt_death, zt_prime, zt_out, o);
    else if (*zoo_family)
      code = run_zoo_family(zf_values, zf_eps, zf_mode, zf_alpha, zf_translation, zf_grid_q,
                            zf_windowed, zf_out, o);
  } catch (const CommandInvalid& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  o.finish();
  return code;
}

}  // namespace wcat
