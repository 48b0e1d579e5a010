#include "wcat/dynsys.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wcat {

namespace {

int shift_src(ShiftKind k) { return k == ShiftKind::Phi || k == ShiftKind::A ? 0 : 1; }
int shift_dst(ShiftKind k) { return k == ShiftKind::Phi || k == ShiftKind::B ? 0 : 1; }

ShiftKind kind_for(int src, int dst) {
  if (src == 0) return dst == 0 ? ShiftKind::Phi : ShiftKind::A;
  return dst == 0 ? ShiftKind::B : ShiftKind::Psi;
}

void require_valid_system(const DynSystem& s, const char* who) {
  Report r = validate_dyn_system(s);
  if (!r.ok) throw std::invalid_argument(std::string(who) + ": " + r.text());
}

void require_total(const std::vector<int>& m, int dom, int cod, const char* who) {
  if (static_cast<int>(m.size()) != dom)
    throw std::invalid_argument(std::string(who) + ": map size does not match its domain");
  for (int v : m)
    if (v < 0 || v >= cod)
      throw std::invalid_argument(std::string(who) + ": map value out of range");
}

// outer after inner on index tables
std::vector<int> compose_tables(const std::vector<int>& outer, const std::vector<int>& inner) {
  std::vector<int> r(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) r[i] = outer[inner[i]];
  return r;
}

std::uint64_t pow_capped(std::uint64_t base, std::uint64_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (; e > 0; --e) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
    if (r > cap) return cap + 1;
  }
  return r;
}

// digits of n in the given base, most significant first
std::vector<int> decode_assignment(std::uint64_t n, int length, int base) {
  std::vector<int> a(length, 0);
  for (int i = length - 1; i >= 0; --i) {
    a[i] = static_cast<int>(n % base);
    n /= base;
  }
  return a;
}

}  // namespace

Report validate_dyn_system(const DynSystem& s) {
  Report r;
  for (std::size_t i = 0; i < s.carrier.size(); ++i) {
    if (s.carrier[i].empty()) r.fail("empty point id");
    for (std::size_t j = i + 1; j < s.carrier.size(); ++j)
      if (s.carrier[i] == s.carrier[j]) r.fail("duplicate point id " + s.carrier[i]);
  }
  if (s.map.size() != s.carrier.size()) {
    r.fail("self-map is not total on the carrier");
    return r;
  }
  for (std::size_t i = 0; i < s.map.size(); ++i)
    if (s.map[i] < 0 || s.map[i] >= static_cast<int>(s.carrier.size()))
      r.fail("image of " + s.carrier[i] + " is out of range");
  return r;
}

std::vector<int> iterate_map(const DynSystem& s, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("iterate_map: negative exponent");
  require_valid_system(s, "iterate_map");
  std::vector<int> r(s.carrier.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<int>(i);
  for (std::int64_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = s.map[r[i]];
  return r;
}

std::string shift_str(const ShiftMorphism& m) {
  switch (m.kind) {
    case ShiftKind::Phi:
      return "phi^" + std::to_string(m.exp);
    case ShiftKind::Psi:
      return "psi^" + std::to_string(m.exp);
    case ShiftKind::A:
      return "a_" + std::to_string(m.exp);
    default:
      return "b_" + std::to_string(m.exp);
  }
}

ShiftMorphism shift_compose(const ShiftCategory& c, const ShiftMorphism& g,
                            const ShiftMorphism& f) {
  if (c.lag < 0) throw std::invalid_argument("shift_compose: negative lag");
  if (f.exp < 0 || g.exp < 0) throw std::invalid_argument("shift_compose: negative exponent");
  if (shift_dst(f.kind) != shift_src(g.kind))
    throw std::invalid_argument("shift_compose: endpoint mismatch between " + shift_str(f) +
                                " and " + shift_str(g));
  bool crossing = (f.kind == ShiftKind::A && g.kind == ShiftKind::B) ||
                  (f.kind == ShiftKind::B && g.kind == ShiftKind::A);
  ShiftMorphism r;
  r.kind = kind_for(shift_src(f.kind), shift_dst(g.kind));
  r.exp = f.exp + g.exp + (crossing ? c.lag : 0);
  return r;
}

bool check_shift_equivalence(const DynSystem& s1, const DynSystem& s2,
                             const std::vector<int>& alpha, const std::vector<int>& beta,
                             std::int64_t lag) {
  if (lag < 0) throw std::invalid_argument("check_shift_equivalence: negative lag");
  require_valid_system(s1, "check_shift_equivalence: first system");
  require_valid_system(s2, "check_shift_equivalence: second system");
  const int nx = static_cast<int>(s1.carrier.size());
  const int ny = static_cast<int>(s2.carrier.size());
  require_total(alpha, nx, ny, "check_shift_equivalence: alpha");
  require_total(beta, ny, nx, "check_shift_equivalence: beta");

  const auto& f = s1.map;
  const auto& g = s2.map;
  for (int x = 0; x < nx; ++x)
    if (alpha[f[x]] != g[alpha[x]]) return false;
  for (int y = 0; y < ny; ++y)
    if (beta[g[y]] != f[beta[y]]) return false;
  std::vector<int> fl = iterate_map(s1, lag);
  for (int x = 0; x < nx; ++x)
    if (beta[alpha[x]] != fl[x]) return false;
  std::vector<int> gl = iterate_map(s2, lag);
  for (int y = 0; y < ny; ++y)
    if (alpha[beta[y]] != gl[y]) return false;
  return true;
}

namespace {

struct SearchSetup {
  int nx, ny;
  std::uint64_t na, nb;  // alpha / beta candidate counts
};

SearchSetup search_setup(const DynSystem& s1, const DynSystem& s2, std::int64_t lag,
                         const ShiftSearchCaps& caps) {
  if (lag < 0) throw std::invalid_argument("search_shift_equivalence: negative lag");
  require_valid_system(s1, "search_shift_equivalence: first system");
  require_valid_system(s2, "search_shift_equivalence: second system");
  SearchSetup su;
  su.nx = static_cast<int>(s1.carrier.size());
  su.ny = static_cast<int>(s2.carrier.size());
  su.na = pow_capped(su.ny, su.nx, caps.max_pairs);
  su.nb = pow_capped(su.nx, su.ny, caps.max_pairs);
  if (su.na > caps.max_pairs || su.nb > caps.max_pairs ||
      (su.nb != 0 && su.na > caps.max_pairs / std::max<std::uint64_t>(su.nb, 1)))
    throw std::invalid_argument("search_shift_equivalence: candidate count exceeds the cap");
  return su;
}

// the two equations that involve only alpha
bool alpha_feasible(const DynSystem& s1, const DynSystem& s2, const std::vector<int>& alpha) {
  for (std::size_t x = 0; x < s1.map.size(); ++x)
    if (alpha[s1.map[x]] != s2.map[alpha[x]]) return false;
  return true;
}

bool pair_works(const DynSystem& s1, const DynSystem& s2, const std::vector<int>& alpha,
                const std::vector<int>& beta, const std::vector<int>& fl,
                const std::vector<int>& gl) {
  for (std::size_t y = 0; y < s2.map.size(); ++y)
    if (beta[s2.map[y]] != s1.map[beta[y]]) return false;
  for (std::size_t x = 0; x < s1.map.size(); ++x)
    if (beta[alpha[x]] != fl[x]) return false;
  for (std::size_t y = 0; y < s2.map.size(); ++y)
    if (alpha[beta[y]] != gl[y]) return false;
  return true;
}

}  // namespace

std::optional<ShiftWitness> search_shift_equivalence_serial(const DynSystem& s1,
                                                            const DynSystem& s2, std::int64_t lag,
                                                            const ShiftSearchCaps& caps) {
  SearchSetup su = search_setup(s1, s2, lag, caps);
  std::vector<int> fl = iterate_map(s1, lag), gl = iterate_map(s2, lag);
  for (std::uint64_t n = 0; n < su.na; ++n) {
    std::vector<int> alpha = decode_assignment(n, su.nx, su.ny);
    if (!alpha_feasible(s1, s2, alpha)) continue;
    for (std::uint64_t m = 0; m < su.nb; ++m) {
      std::vector<int> beta = decode_assignment(m, su.ny, su.nx);
      if (pair_works(s1, s2, alpha, beta, fl, gl)) return ShiftWitness{alpha, beta};
    }
  }
  return std::nullopt;
}

std::optional<ShiftWitness> search_shift_equivalence(const DynSystem& s1, const DynSystem& s2,
                                                     std::int64_t lag,
                                                     const ShiftSearchCaps& caps) {
  SearchSetup su = search_setup(s1, s2, lag, caps);
  std::vector<int> fl = iterate_map(s1, lag), gl = iterate_map(s2, lag);
  const std::int64_t na = static_cast<std::int64_t>(su.na);
  std::int64_t best_n = -1;
  std::vector<int> best_alpha, best_beta;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t n = 0; n < na; ++n) {
    {
      bool skip;
#pragma omp critical(shift_search)
      skip = best_n >= 0 && best_n < n;
      if (skip) continue;
    }
    std::vector<int> alpha = decode_assignment(static_cast<std::uint64_t>(n), su.nx, su.ny);
    if (!alpha_feasible(s1, s2, alpha)) continue;
    for (std::uint64_t m = 0; m < su.nb; ++m) {
      std::vector<int> beta = decode_assignment(m, su.ny, su.nx);
      if (pair_works(s1, s2, alpha, beta, fl, gl)) {
#pragma omp critical(shift_search)
        if (best_n < 0 || n < best_n) {
          best_n = n;
          best_alpha = alpha;
          best_beta = beta;
        }
        break;
      }
    }
  }
  if (best_n < 0) return std::nullopt;
  return ShiftWitness{best_alpha, best_beta};
}

LagFutureEquivalence lag_future_equivalence(std::int64_t lag) {
  if (lag < 0) throw std::invalid_argument("lag_future_equivalence: negative lag");
  return LagFutureEquivalence{lag};
}

bool LagFutureEquivalence::check_interleaving(const DynSystem& f, const DynSystem& g,
                                              const std::vector<int>& alpha,
                                              const std::vector<int>& beta) const {
  require_valid_system(f, "check_interleaving: first system");
  require_valid_system(g, "check_interleaving: second system");
  require_total(alpha, static_cast<int>(f.carrier.size()), static_cast<int>(g.carrier.size()),
                "check_interleaving: alpha");
  require_total(beta, static_cast<int>(g.carrier.size()), static_cast<int>(f.carrier.size()),
                "check_interleaving: beta");
  // naturality squares of the two transformations on the generator
  if (compose_tables(alpha, f.map) != compose_tables(g.map, alpha)) return false;
  if (compose_tables(beta, g.map) != compose_tables(f.map, beta)) return false;
  // triangle identities against F(eta) = f^lag and G(nu) = g^lag
  if (compose_tables(beta, alpha) != iterate_map(f, lag)) return false;
  if (compose_tables(alpha, beta) != iterate_map(g, lag)) return false;
  return true;
}

namespace {

// morphism layout of the capped table: phi^0..cap, psi^0..cap, a_0..cap,
// b_0..cap, then one overflow per kind in the same order.
int encode_slot(ShiftKind k, std::int64_t exp, std::int64_t cap) {
  int block = static_cast<int>(k);
  if (exp > cap) return static_cast<int>(4 * (cap + 1)) + block;
  return static_cast<int>(block * (cap + 1) + exp);
}

CatPtr one_object_capped(const std::string& obj, const std::string& gen, std::int64_t cap) {
  CategoryBuilder b;
  int o = b.add_object(obj);
  for (std::int64_t k = 0; k <= cap; ++k) b.add_morphism(gen + "^" + std::to_string(k), o, o);
  int over = b.add_morphism(gen + "^inf", o, o);
  b.set_identity(o, 0);
  auto at = [&](std::int64_t v) { return v > cap ? over : static_cast<int>(v); };
  for (std::int64_t i = 0; i <= cap + 1; ++i)
    for (std::int64_t j = 0; j <= cap + 1; ++j) {
      std::int64_t v = (i > cap || j > cap) ? cap + 1 : i + j;
      b.set_composite(at(i), at(j), at(v));
    }
  return b.build();
}

}  // namespace

int ShiftCospan::encode(const ShiftMorphism& m) const {
  if (m.exp < 0 || m.exp > cap) return -1;
  return encode_slot(m.kind, m.exp, cap);
}

std::optional<ShiftMorphism> ShiftCospan::decode(int ambient_mor) const {
  if (ambient_mor < 0 || ambient_mor >= static_cast<int>(4 * (cap + 1)) + 4) return std::nullopt;
  if (ambient_mor >= 4 * (cap + 1)) return std::nullopt;  // overflow marker
  ShiftMorphism m;
  m.kind = static_cast<ShiftKind>(ambient_mor / (cap + 1));
  m.exp = ambient_mor % (cap + 1);
  return m;
}

ShiftCospan shift_cospan(std::int64_t lag, std::int64_t exponent_cap) {
  if (lag < 0) throw std::invalid_argument("shift_cospan: negative lag");
  if (exponent_cap < 2 * lag + 2)
    throw std::invalid_argument("shift_cospan: exponent cap must be at least 2*lag + 2");
  if (exponent_cap > 256) throw std::invalid_argument("shift_cospan: exponent cap too large");

  const std::int64_t cap = exponent_cap;
  CategoryBuilder b;
  int ox = b.add_object("x");
  int oy = b.add_object("y");
  const int kind_src[4] = {ox, oy, ox, oy};
  const int kind_dst[4] = {ox, oy, oy, ox};
  const char* kind_name[4] = {"phi^", "psi^", "a_", "b_"};
  for (int k = 0; k < 4; ++k)
    for (std::int64_t e = 0; e <= cap; ++e)
      b.add_morphism(kind_name[k] + std::to_string(e), kind_src[k], kind_dst[k]);
  for (int k = 0; k < 4; ++k)
    b.add_morphism(std::string(kind_name[k]) + "inf", kind_src[k], kind_dst[k]);
  b.set_identity(ox, encode_slot(ShiftKind::Phi, 0, cap));
  b.set_identity(oy, encode_slot(ShiftKind::Psi, 0, cap));

  const int total = 4 * static_cast<int>(cap + 1) + 4;
  auto kind_of = [&](int idx) {
    return static_cast<ShiftKind>(idx >= 4 * (cap + 1) ? idx - 4 * (cap + 1) : idx / (cap + 1));
  };
  auto exp_of = [&](int idx) { return idx >= 4 * (cap + 1) ? cap + 1 : idx % (cap + 1); };
  for (int f = 0; f < total; ++f)
    for (int g = 0; g < total; ++g) {
      ShiftKind kf = kind_of(f), kg = kind_of(g);
      if (shift_dst(kf) != shift_src(kg)) continue;
      bool crossing = (kf == ShiftKind::A && kg == ShiftKind::B) ||
                      (kf == ShiftKind::B && kg == ShiftKind::A);
      std::int64_t ef = exp_of(f), eg = exp_of(g);
      std::int64_t v = (ef > cap || eg > cap) ? cap + 1 : ef + eg + (crossing ? lag : 0);
      b.set_composite(g, f, encode_slot(kind_for(shift_src(kf), shift_dst(kg)), v, cap));
    }
  CatPtr amb = b.build();

  CatPtr px = one_object_capped("x", "phi", cap);
  CatPtr qy = one_object_capped("y", "psi", cap);
  Functor leg_left{px, amb, {ox}, {}, WeightContract::WeightPreserving};
  for (std::int64_t e = 0; e <= cap; ++e)
    leg_left.morphism_map.push_back(encode_slot(ShiftKind::Phi, e, cap));
  leg_left.morphism_map.push_back(encode_slot(ShiftKind::Phi, cap + 1, cap));
  Functor leg_right{qy, amb, {oy}, {}, WeightContract::WeightPreserving};
  for (std::int64_t e = 0; e <= cap; ++e)
    leg_right.morphism_map.push_back(encode_slot(ShiftKind::Psi, e, cap));
  leg_right.morphism_map.push_back(encode_slot(ShiftKind::Psi, cap + 1, cap));

  ShiftCospan out;
  out.pair = EmbeddingPair{std::move(leg_left), std::move(leg_right)};
  out.lag = lag;
  out.cap = cap;
  return out;
}

}  // namespace wcat
