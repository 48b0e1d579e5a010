#include "wcat/io.hpp"

#include "json.hpp"

#include <utility>

namespace wcat {

namespace {

using nlohmann::json;

std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw ParseError("schema error at " + where + ": " + what);
}

const json& need(const json& j, const char* field, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object");
  auto it = j.find(field);
  if (it == j.end()) schema_error(where, std::string("missing field '") + field + "'");
  return *it;
}

std::string need_string(const json& j, const char* field, const std::string& where) {
  const json& v = need(j, field, where);
  if (!v.is_string()) schema_error(where + "." + field, "expected a string");
  return v.get<std::string>();
}

int need_int(const json& j, const char* field, const std::string& where) {
  const json& v = need(j, field, where);
  if (!v.is_number_integer()) schema_error(where + "." + field, "expected an integer");
  return v.get<int>();
}

const json& need_array(const json& j, const char* field, const std::string& where) {
  const json& v = need(j, field, where);
  if (!v.is_array()) schema_error(where + "." + field, "expected an array");
  return v;
}

Weight parse_weight_text(const std::string& text, const std::string& where) {
  if (text == "inf") return Weight::infinity();
  Rat r;
  try {
    r = Rat::parse(text);
  } catch (const std::exception& e) {
    schema_error(where, e.what());
  }
  if (r < Rat(0)) schema_error(where, "weight must be non-negative");
  return Weight(r);
}

Weight json_weight(const json& v, const std::string& where) {
  if (!v.is_string()) schema_error(where, "expected a rational string like \"3/2\" or \"inf\"");
  return parse_weight_text(v.get<std::string>(), where);
}

Rat json_rat(const json& v, const std::string& where) {
  if (!v.is_string()) schema_error(where, "expected a rational string like \"3/2\"");
  try {
    return Rat::parse(v.get<std::string>());
  } catch (const std::exception& e) {
    schema_error(where, e.what());
  }
}

CatPtr parse_category_payload(const json& j, const std::string& where) {
  CategoryBuilder b;
  for (const json& o : need_array(j, "objects", where)) {
    if (!o.is_string()) schema_error(where + ".objects", "object ids must be strings");
    try {
      b.add_object(o.get<std::string>());
    } catch (const std::invalid_argument& e) {
      schema_error(where + ".objects", e.what());
    }
  }
  // resolve through a just-built shell after all objects exist
  std::vector<std::string> mor_ids;
  for (const json& m : need_array(j, "morphisms", where)) {
    std::string ww = where + ".morphisms[" + std::to_string(mor_ids.size()) + "]";
    std::string id = need_string(m, "id", ww);
    std::string src = need_string(m, "src", ww);
    std::string dst = need_string(m, "dst", ww);
    Weight w = m.contains("weight") ? json_weight(m.at("weight"), ww + ".weight") : Weight::zero();
    int si = -1, di = -1;
    const json& objs = j.at("objects");
    for (std::size_t o = 0; o < objs.size(); ++o) {
      if (objs[o].get<std::string>() == src) si = static_cast<int>(o);
      if (objs[o].get<std::string>() == dst) di = static_cast<int>(o);
    }
    if (si < 0) schema_error(ww + ".src", "unknown object '" + src + "'");
    if (di < 0) schema_error(ww + ".dst", "unknown object '" + dst + "'");
    try {
      b.add_morphism(id, si, di, w);
    } catch (const std::invalid_argument& e) {
      schema_error(ww, e.what());
    }
    mor_ids.push_back(id);
  }
  auto mor_of = [&](const std::string& id, const std::string& ww) {
    for (std::size_t i = 0; i < mor_ids.size(); ++i)
      if (mor_ids[i] == id) return static_cast<int>(i);
    schema_error(ww, "unknown morphism '" + id + "'");
  };
  const json& ids = need(j, "identities", where);
  if (!ids.is_object()) schema_error(where + ".identities", "expected an object");
  for (const auto& [obj, mor] : ids.items()) {
    const json& objs = j.at("objects");
    int oi = -1;
    for (std::size_t o = 0; o < objs.size(); ++o)
      if (objs[o].get<std::string>() == obj) oi = static_cast<int>(o);
    if (oi < 0) schema_error(where + ".identities", "unknown object '" + obj + "'");
    if (!mor.is_string()) schema_error(where + ".identities", "morphism ids must be strings");
    b.set_identity(oi, mor_of(mor.get<std::string>(), where + ".identities"));
  }
  std::size_t k = 0;
  for (const json& e : need_array(j, "compose", where)) {
    std::string ww = where + ".compose[" + std::to_string(k++) + "]";
    int f = mor_of(need_string(e, "first", ww), ww + ".first");
    int g = mor_of(need_string(e, "then", ww), ww + ".then");
    int gf = mor_of(need_string(e, "equals", ww), ww + ".equals");
    b.set_composite(g, f, gf);
  }
  return b.build();
}

json emit_category_payload(const WeightedFinCategory& c) {
  json j;
  j["objects"] = json::array();
  for (int o = 0; o < c.object_count(); ++o) j["objects"].push_back(c.object_id(o));
  j["morphisms"] = json::array();
  for (int m = 0; m < c.morphism_count(); ++m)
    j["morphisms"].push_back({{"id", c.morphism_id(m)},
                              {"src", c.object_id(c.src(m))},
                              {"dst", c.object_id(c.dst(m))},
                              {"weight", c.weight(m).str()}});
  j["identities"] = json::object();
  for (int o = 0; o < c.object_count(); ++o)
    if (c.identity(o) >= 0) j["identities"][c.object_id(o)] = c.morphism_id(c.identity(o));
  j["compose"] = json::array();
  for (int g = 0; g < c.morphism_count(); ++g)
    for (int f = 0; f < c.morphism_count(); ++f) {
      int gf = c.composite(g, f);
      if (gf >= 0)
        j["compose"].push_back({{"first", c.morphism_id(f)},
                                {"then", c.morphism_id(g)},
                                {"equals", c.morphism_id(gf)}});
    }
  return j;
}

// objMap/morMap/contract with known endpoint categories
Functor parse_functor_body(const json& j, const CatPtr& src, const CatPtr& tgt,
                           const std::string& where) {
  Functor f;
  f.source = src;
  f.target = tgt;
  const json& om = need(j, "objMap", where);
  if (!om.is_object()) schema_error(where + ".objMap", "expected an object");
  f.object_map.assign(src->object_count(), -1);
  for (const auto& [a, bv] : om.items()) {
    int o = src->object_index(a);
    if (o < 0) schema_error(where + ".objMap", "unknown source object '" + a + "'");
    if (!bv.is_string()) schema_error(where + ".objMap", "target ids must be strings");
    int t = tgt->object_index(bv.get<std::string>());
    if (t < 0)
      schema_error(where + ".objMap", "unknown target object '" + bv.get<std::string>() + "'");
    f.object_map[o] = t;
  }
  for (int o = 0; o < src->object_count(); ++o)
    if (f.object_map[o] < 0)
      schema_error(where + ".objMap", "no image for object '" + src->object_id(o) + "'");
  const json& mm = need(j, "morMap", where);
  if (!mm.is_object()) schema_error(where + ".morMap", "expected an object");
  f.morphism_map.assign(src->morphism_count(), -1);
  for (const auto& [a, bv] : mm.items()) {
    int m = src->morphism_index(a);
    if (m < 0) schema_error(where + ".morMap", "unknown source morphism '" + a + "'");
    if (!bv.is_string()) schema_error(where + ".morMap", "target ids must be strings");
    int t = tgt->morphism_index(bv.get<std::string>());
    if (t < 0)
      schema_error(where + ".morMap", "unknown target morphism '" + bv.get<std::string>() + "'");
    f.morphism_map[m] = t;
  }
  for (int m = 0; m < src->morphism_count(); ++m)
    if (f.morphism_map[m] < 0)
      schema_error(where + ".morMap", "no image for morphism '" + src->morphism_id(m) + "'");
  std::string c = j.contains("contract") ? need_string(j, "contract", where) : "none";
  try {
    f.contract = parse_contract(c);
  } catch (const std::invalid_argument& e) {
    schema_error(where + ".contract", e.what());
  }
  return f;
}

json emit_functor_body(const Functor& f) {
  json j;
  j["objMap"] = json::object();
  for (int o = 0; o < f.source->object_count(); ++o)
    j["objMap"][f.source->object_id(o)] = f.target->object_id(f.obj(o));
  j["morMap"] = json::object();
  for (int m = 0; m < f.source->morphism_count(); ++m)
    j["morMap"][f.source->morphism_id(m)] = f.target->morphism_id(f.mor(m));
  j["contract"] = contract_name(f.contract);
  return j;
}

Functor parse_functor_payload(const json& j, const std::string& where) {
  CatPtr src = parse_category_payload(need(j, "source", where), where + ".source");
  CatPtr tgt = parse_category_payload(need(j, "target", where), where + ".target");
  return parse_functor_body(j, src, tgt, where);
}

json emit_functor_payload(const Functor& f) {
  json j = emit_functor_body(f);
  j["source"] = emit_category_payload(*f.source);
  j["target"] = emit_category_payload(*f.target);
  return j;
}

EmbeddingPair parse_cospan_payload(const json& j, const std::string& where) {
  CatPtr p = parse_category_payload(need(j, "P", where), where + ".P");
  CatPtr q = parse_category_payload(need(j, "Q", where), where + ".Q");
  CatPtr amb = parse_category_payload(need(j, "I", where), where + ".I");
  EmbeddingPair e;
  e.leg_left = parse_functor_body(need(j, "legP", where), p, amb, where + ".legP");
  e.leg_right = parse_functor_body(need(j, "legQ", where), q, amb, where + ".legQ");
  return e;
}

json emit_cospan_payload(const EmbeddingPair& e) {
  json j;
  j["P"] = emit_category_payload(*e.left());
  j["Q"] = emit_category_payload(*e.right());
  j["I"] = emit_category_payload(*e.ambient());
  j["legP"] = emit_functor_body(e.leg_left);
  j["legQ"] = emit_functor_body(e.leg_right);
  return j;
}

std::vector<std::string> parse_window(const json& v, const std::string& where) {
  if (!v.is_array()) schema_error(where, "expected an array of object ids");
  std::vector<std::string> w;
  for (const json& s : v) {
    if (!s.is_string()) schema_error(where, "object ids must be strings");
    w.push_back(s.get<std::string>());
  }
  return w;
}

LawvereSpace parse_lawvere_payload(const json& j, const std::string& where) {
  LawvereSpace s;
  for (const json& p : need_array(j, "points", where)) {
    if (!p.is_string()) schema_error(where + ".points", "point ids must be strings");
    s.points.push_back(p.get<std::string>());
  }
  const json& rows = need_array(j, "dist", where);
  if (rows.size() != s.points.size())
    schema_error(where + ".dist", "expected one row per point");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != s.points.size())
      schema_error(where + ".dist", "row " + std::to_string(i) + " has the wrong length");
    for (std::size_t k = 0; k < rows[i].size(); ++k)
      s.dist.push_back(json_weight(rows[i][k], where + ".dist[" + std::to_string(i) + "][" +
                                                   std::to_string(k) + "]"));
  }
  return s;
}

json emit_lawvere_payload(const LawvereSpace& s) {
  json j;
  j["points"] = s.points;
  j["dist"] = json::array();
  int n = static_cast<int>(s.points.size());
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int k = 0; k < n; ++k) row.push_back(s.d(i, k).str());
    j["dist"].push_back(row);
  }
  return j;
}

std::vector<int> parse_components(const json& v, const CatPtr& objs_of, const CatPtr& mors_of,
                                  const std::string& where) {
  if (!v.is_object()) schema_error(where, "expected an object of objectId: morphismId");
  std::vector<int> comp(objs_of->object_count(), -1);
  for (const auto& [obj, mor] : v.items()) {
    int o = objs_of->object_index(obj);
    if (o < 0) schema_error(where, "unknown object '" + obj + "'");
    if (!mor.is_string()) schema_error(where, "morphism ids must be strings");
    int m = mors_of->morphism_index(mor.get<std::string>());
    if (m < 0) schema_error(where, "unknown morphism '" + mor.get<std::string>() + "'");
    comp[o] = m;
  }
  for (int o = 0; o < objs_of->object_count(); ++o)
    if (comp[o] < 0)
      schema_error(where, "no component for object '" + objs_of->object_id(o) + "'");
  return comp;
}

FutureEquivalence parse_fut_payload(const json& j, const std::string& where) {
  FutureEquivalence fe;
  fe.Gamma = parse_functor_payload(need(j, "Gamma", where), where + ".Gamma");
  fe.K = parse_functor_payload(need(j, "K", where), where + ".K");
  if (!fe.K.source->same_tables(*fe.Gamma.target) || !fe.K.target->same_tables(*fe.Gamma.source))
    schema_error(where, "K must run opposite to Gamma over the same two categories");
  // share one table instance per side
  fe.K.source = fe.Gamma.target;
  fe.K.target = fe.Gamma.source;
  fe.eta = parse_components(need(j, "eta", where), fe.Gamma.source, fe.Gamma.source,
                            where + ".eta");
  fe.nu = parse_components(need(j, "nu", where), fe.Gamma.target, fe.Gamma.target, where + ".nu");
  return fe;
}

json emit_fut_payload(const FutureEquivalence& fe) {
  json j;
  j["Gamma"] = emit_functor_payload(fe.Gamma);
  j["K"] = emit_functor_payload(fe.K);
  j["eta"] = json::object();
  const auto& p = *fe.Gamma.source;
  for (int o = 0; o < p.object_count(); ++o)
    j["eta"][p.object_id(o)] = p.morphism_id(fe.eta[o]);
  j["nu"] = json::object();
  const auto& q = *fe.K.source;
  for (int o = 0; o < q.object_count(); ++o) j["nu"][q.object_id(o)] = q.morphism_id(fe.nu[o]);
  return j;
}

GridModule parse_grid_module_payload(const json& j, const std::string& where) {
  GridModule m;
  for (const json& g : need_array(j, "grid", where))
    m.grid.push_back(json_rat(g, where + ".grid"));
  m.prime = need_int(j, "prime", where);
  for (const json& d : need_array(j, "dims", where)) {
    if (!d.is_number_integer()) schema_error(where + ".dims", "expected integers");
    m.dims.push_back(d.get<int>());
  }
  const json& maps = need_array(j, "maps", where);
  for (std::size_t i = 0; i < maps.size(); ++i) {
    std::string ww = where + ".maps[" + std::to_string(i) + "]";
    if (!maps[i].is_array()) schema_error(ww, "expected a matrix (array of rows)");
    Mat mat;
    mat.rows = static_cast<int>(maps[i].size());
    mat.cols = mat.rows == 0 && i < m.dims.size() ? m.dims[i] : 0;
    bool first_row = true;
    for (const json& row : maps[i]) {
      if (!row.is_array()) schema_error(ww, "expected a matrix (array of rows)");
      if (first_row) {
        mat.cols = static_cast<int>(row.size());
        first_row = false;
      }
      if (static_cast<int>(row.size()) != mat.cols) schema_error(ww, "ragged matrix rows");
      for (const json& e : row) {
        if (!e.is_number_integer()) schema_error(ww, "matrix entries must be integers");
        mat.a.push_back(e.get<int>());
      }
    }
    m.maps.push_back(std::move(mat));
  }
  return m;
}

json emit_grid_module_payload(const GridModule& m) {
  json j;
  j["grid"] = json::array();
  for (const Rat& g : m.grid) j["grid"].push_back(g.str());
  j["prime"] = m.prime;
  j["dims"] = m.dims;
  j["maps"] = json::array();
  for (const Mat& mat : m.maps) {
    json rows = json::array();
    for (int r = 0; r < mat.rows; ++r) {
      json row = json::array();
      for (int c = 0; c < mat.cols; ++c) row.push_back(mat.at(r, c));
      rows.push_back(row);
    }
    j["maps"].push_back(rows);
  }
  return j;
}

DynSystem parse_dynsystem_payload(const json& j, const std::string& where) {
  DynSystem s;
  for (const json& p : need_array(j, "carrier", where)) {
    if (!p.is_string()) schema_error(where + ".carrier", "point ids must be strings");
    s.carrier.push_back(p.get<std::string>());
  }
  const json& map = need(j, "map", where);
  if (!map.is_object()) schema_error(where + ".map", "expected an object of id: id");
  auto index_of = [&](const std::string& id) {
    for (std::size_t i = 0; i < s.carrier.size(); ++i)
      if (s.carrier[i] == id) return static_cast<int>(i);
    return -1;
  };
  s.map.assign(s.carrier.size(), -1);
  for (const auto& [from, to] : map.items()) {
    int fi = index_of(from);
    if (fi < 0) schema_error(where + ".map", "unknown point '" + from + "'");
    if (!to.is_string()) schema_error(where + ".map", "image ids must be strings");
    int ti = index_of(to.get<std::string>());
    if (ti < 0) schema_error(where + ".map", "unknown point '" + to.get<std::string>() + "'");
    s.map[fi] = ti;
  }
  for (std::size_t i = 0; i < s.carrier.size(); ++i)
    if (s.map[i] < 0) schema_error(where + ".map", "no image for point '" + s.carrier[i] + "'");
  return s;
}

json emit_dynsystem_payload(const DynSystem& s) {
  json j;
  j["carrier"] = s.carrier;
  j["map"] = json::object();
  for (std::size_t i = 0; i < s.carrier.size(); ++i) j["map"][s.carrier[i]] = s.carrier[s.map[i]];
  return j;
}

std::vector<FamilyMember> parse_family_payload(const json& j, const std::string& where) {
  std::vector<FamilyMember> fam;
  std::size_t k = 0;
  for (const json& c : need_array(j, "cospans", where)) {
    std::string ww = where + ".cospans[" + std::to_string(k++) + "]";
    FamilyMember m;
    m.pair = parse_cospan_payload(c, ww);
    if (c.contains("windowP")) m.window_left = parse_window(c.at("windowP"), ww + ".windowP");
    if (c.contains("windowQ")) m.window_right = parse_window(c.at("windowQ"), ww + ".windowQ");
    fam.push_back(std::move(m));
  }
  return fam;
}

json emit_family_payload(const std::vector<FamilyMember>& fam) {
  json j;
  j["cospans"] = json::array();
  for (const FamilyMember& m : fam) {
    json c = emit_cospan_payload(m.pair);
    if (m.window_left) c["windowP"] = *m.window_left;
    if (m.window_right) c["windowQ"] = *m.window_right;
    j["cospans"].push_back(c);
  }
  return j;
}

}  // namespace

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("syntax error at line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ": " + e.what());
  }
  if (!j.is_object()) throw ParseError("schema error at document: must be a JSON object");
  Document d;
  d.kind = need_string(j, "kind", "document");
  const std::string w = "document";
  if (d.kind == "category")
    d.category = parse_category_payload(j, w);
  else if (d.kind == "functor")
    d.functor = parse_functor_payload(j, w);
  else if (d.kind == "cospan")
    d.cospan = parse_cospan_payload(j, w);
  else if (d.kind == "lawvere")
    d.lawvere = parse_lawvere_payload(j, w);
  else if (d.kind == "future-equivalence")
    d.fut = parse_fut_payload(j, w);
  else if (d.kind == "grid-module")
    d.grid_module = parse_grid_module_payload(j, w);
  else if (d.kind == "dynsystem")
    d.dynsystem = parse_dynsystem_payload(j, w);
  else if (d.kind == "family")
    d.family = parse_family_payload(j, w);
  else
    schema_error("document.kind", "unknown kind '" + d.kind + "'");
  return d;
}

std::string emit_document(const Document& d) {
  json j;
  j["kind"] = d.kind;
  if (d.kind == "category" && d.category)
    j.update(emit_category_payload(*d.category));
  else if (d.kind == "functor" && d.functor)
    j.update(emit_functor_payload(*d.functor));
  else if (d.kind == "cospan" && d.cospan)
    j.update(emit_cospan_payload(*d.cospan));
  else if (d.kind == "lawvere" && d.lawvere)
    j.update(emit_lawvere_payload(*d.lawvere));
  else if (d.kind == "future-equivalence" && d.fut)
    j.update(emit_fut_payload(*d.fut));
  else if (d.kind == "grid-module" && d.grid_module)
    j.update(emit_grid_module_payload(*d.grid_module));
  else if (d.kind == "dynsystem" && d.dynsystem)
    j.update(emit_dynsystem_payload(*d.dynsystem));
  else if (d.kind == "family" && d.family)
    j.update(emit_family_payload(*d.family));
  else
    throw std::invalid_argument("emit_document: document kind and payload do not match");
  return j.dump(2) + "\n";
}

Report validate_document(const Document& d) {
  Report r;
  if (d.kind == "category" && d.category) {
    r = validate_category(*d.category);
    r.merge(validate_weighted(*d.category));
  } else if (d.kind == "functor" && d.functor) {
    r = validate_functor(*d.functor);
  } else if (d.kind == "cospan" && d.cospan) {
    r = validate_cospan(*d.cospan);
  } else if (d.kind == "lawvere" && d.lawvere) {
    r = validate_lawvere(*d.lawvere);
  } else if (d.kind == "future-equivalence" && d.fut) {
    r = validate_future_equivalence(*d.fut);
  } else if (d.kind == "grid-module" && d.grid_module) {
    r = validate_grid_module(*d.grid_module);
  } else if (d.kind == "dynsystem" && d.dynsystem) {
    r = validate_dyn_system(*d.dynsystem);
  } else if (d.kind == "family" && d.family) {
    for (std::size_t i = 0; i < d.family->size(); ++i) {
      const FamilyMember& m = (*d.family)[i];
      r.merge(validate_cospan(m.pair), "cospan " + std::to_string(i));
      auto check_window = [&](const std::optional<std::vector<std::string>>& win, const CatPtr& c,
                              const char* side) {
        if (!win) return;
        if (win->empty()) r.fail("cospan " + std::to_string(i) + ": empty window" + side);
        for (const std::string& id : *win)
          if (c->object_index(id) < 0)
            r.fail("cospan " + std::to_string(i) + ": window" + side + " id '" + id +
                   "' is not an object");
      };
      check_window(m.window_left, m.pair.left(), "P");
      check_window(m.window_right, m.pair.right(), "Q");
    }
  } else {
    r.fail("document kind and payload do not match");
  }
  return r;
}

}  // namespace wcat
