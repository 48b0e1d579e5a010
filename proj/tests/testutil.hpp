#pragma once

// Shared generators and oracles for the test suites. Everything is seeded
// and deterministic.

#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wcat/futequiv.hpp"
#include "wcat/zoo.hpp"

namespace wcat::testutil {

// ---------------------------------------------------------------------------
// Random Lawvere spaces (triangle law enforced by min-plus closure).

inline Rat random_rat(std::mt19937& rng, int max_num = 12) {
  static const int dens[3] = {1, 2, 4};
  std::uniform_int_distribution<int> num(0, max_num);
  std::uniform_int_distribution<int> den(0, 2);
  return Rat(num(rng), dens[den(rng)]);
}

inline LawvereSpace random_space(std::mt19937& rng, int n, bool symmetric = false,
                                 bool allow_infinite = true) {
  LawvereSpace s;
  for (int i = 0; i < n; ++i) s.points.push_back("p" + std::to_string(i));
  s.dist.assign(static_cast<std::size_t>(n) * n, Weight::zero());
  std::uniform_int_distribution<int> inf_pick(0, 9);
  auto entry = [&](int i, int j) -> Weight& { return s.dist[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (symmetric && j < i) {
        entry(i, j) = entry(j, i);
        continue;
      }
      entry(i, j) = allow_infinite && inf_pick(rng) == 0 ? Weight::infinity()
                                                        : Weight(random_rat(rng));
    }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Weight via = s.d(i, k) + s.d(k, j);
        if (via <= s.d(i, j)) entry(i, j) = via;
      }
  return s;
}

inline PointSubset random_subset(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> coin(0, 1);
  PointSubset a;
  for (int i = 0; i < n; ++i)
    if (coin(rng)) a.push_back(i);
  if (a.empty()) a.push_back(std::uniform_int_distribution<int>(0, n - 1)(rng));
  return a;
}

// ---------------------------------------------------------------------------
// Thin categories from positions, with min-plus-closed weights.

// One morphism u -> v whenever pos[u] <= pos[v]. The seed weights (diagonal
// forced to 0) are min-plus closed over those arrows, which makes the result
// weighted-subadditive by construction.
inline CatPtr thin_from_positions(const std::vector<std::string>& ids, const std::vector<Rat>& pos,
                                  const std::function<Weight(int, int)>& seed) {
  int n = static_cast<int>(ids.size());
  std::vector<std::vector<Weight>> w(n, std::vector<Weight>(n, Weight::infinity()));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (pos[u] <= pos[v]) w[u][v] = u == v ? Weight::zero() : seed(u, v);
  for (int k = 0; k < n; ++k)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (pos[u] <= pos[k] && pos[k] <= pos[v]) w[u][v] = min(w[u][v], w[u][k] + w[k][v]);
  CategoryBuilder b;
  for (const std::string& id : ids) b.add_object(id);
  std::vector<std::vector<int>> arrow(n, std::vector<int>(n, -1));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (pos[u] <= pos[v]) arrow[u][v] = b.add_morphism(ids[u] + "<=" + ids[v], u, v, w[u][v]);
  for (int u = 0; u < n; ++u) b.set_identity(u, arrow[u][u]);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int x = 0; x < n; ++x)
        if (arrow[u][v] >= 0 && arrow[v][x] >= 0) b.set_composite(arrow[v][x], arrow[u][v], arrow[u][x]);
  return b.build();
}

struct RandomCospans {
  EmbeddingPair first;   // P -> I <- Q
  EmbeddingPair second;  // Q -> J <- R
};

// Composable cospan pair sharing the middle category Q. Shapes come from
// random positions; the ambient weights keep Q's table intact because every
// arrow touching a foreign object costs at least Q's largest finite weight.
inline RandomCospans random_cospan_pair(std::mt19937& rng) {
  std::uniform_int_distribution<int> small(1, 2), mid(1, 3);
  int np = small(rng), nq = mid(rng), nr = small(rng);
  auto positions = [&](int n) {
    std::vector<Rat> p;
    for (int i = 0; i < n; ++i) p.push_back(random_rat(rng, 8));
    return p;
  };
  std::vector<Rat> pq = positions(nq), pp = positions(np), pr = positions(nr);
  std::vector<std::string> qids, pids, rids;
  for (int i = 0; i < nq; ++i) qids.push_back("q" + std::to_string(i));
  for (int i = 0; i < np; ++i) pids.push_back("p" + std::to_string(i));
  for (int i = 0; i < nr; ++i) rids.push_back("r" + std::to_string(i));

  CatPtr Q = thin_from_positions(qids, pq, [&](int, int) { return Weight(random_rat(rng)); });
  Weight qmax = Weight::zero();
  for (int m = 0; m < Q->morphism_count(); ++m) qmax = max(qmax, Q->weight(m));

  auto ambient = [&](const std::vector<std::string>& oids, const std::vector<Rat>& opos,
                     bool q_first) {
    std::vector<std::string> ids;
    std::vector<Rat> pos;
    auto push = [&](const std::vector<std::string>& is, const std::vector<Rat>& ps) {
      ids.insert(ids.end(), is.begin(), is.end());
      pos.insert(pos.end(), ps.begin(), ps.end());
    };
    if (q_first) {
      push(qids, pq);
      push(oids, opos);
    } else {
      push(oids, opos);
      push(qids, pq);
    }
    int offset = q_first ? 0 : static_cast<int>(oids.size());
    auto in_q = [&](int u) { return u >= offset && u < offset + nq; };
    return thin_from_positions(ids, pos, [&](int u, int v) {
      if (in_q(u) && in_q(v)) {
        int mu = Q->object_index(ids[u]);
        int mv = Q->object_index(ids[v]);
        const auto& h = Q->hom(mu, mv);
        return Q->weight(h.front());
      }
      return Weight(random_rat(rng)) + qmax;
    });
  };

  CatPtr I = ambient(pids, pp, false);
  CatPtr J = ambient(rids, pr, true);

  auto restrict_to = [&](const CatPtr& amb, const std::vector<std::string>& oids,
                         const std::vector<Rat>& opos) {
    return thin_from_positions(oids, opos, [&](int u, int v) {
      int mu = amb->object_index(oids[u]);
      int mv = amb->object_index(oids[v]);
      return amb->weight(amb->hom(mu, mv).front());
    });
  };
  CatPtr P = restrict_to(I, pids, pp);
  CatPtr R = restrict_to(J, rids, pr);

  RandomCospans out;
  out.first = {thin_inclusion(P, I), thin_inclusion(Q, I)};
  out.second = {thin_inclusion(Q, J), thin_inclusion(R, J)};
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force oracle for pushout cross-class weights: enumerate every pair of
// morphisms joined at a middle object, push both through the inclusion
// functors, and keep the cheapest total per resulting morphism. Keys are
// morphism indices of the pushout ambient; entries exist for every morphism
// expressible as such a composite (including plain first/second morphisms).
inline std::map<int, Weight> brute_cross_minima(const PushoutResult& po,
                                                const EmbeddingPair& first,
                                                const EmbeddingPair& second) {
  const WeightedFinCategory& I = *first.ambient();
  const WeightedFinCategory& J = *second.ambient();
  const WeightedFinCategory& Q = *first.right();
  const WeightedFinCategory& R = *po.pair.ambient();
  std::map<int, Weight> best;
  auto note = [&](int rmor, Weight w) {
    auto it = best.find(rmor);
    if (it == best.end())
      best.emplace(rmor, w);
    else
      it->second = min(it->second, w);
  };
  for (int q = 0; q < Q.object_count(); ++q) {
    int gi = first.leg_right.obj(q);
    int hj = second.leg_left.obj(q);
    for (int x = 0; x < I.object_count(); ++x)
      for (int f : I.hom(x, gi))
        for (int y = 0; y < J.object_count(); ++y)
          for (int g : J.hom(hj, y))
            note(R.composite(po.include_second.mor(g), po.include_first.mor(f)),
                 I.weight(f) + J.weight(g));
    for (int y = 0; y < J.object_count(); ++y)
      for (int g : J.hom(y, hj))
        for (int x = 0; x < I.object_count(); ++x)
          for (int f : I.hom(gi, x))
            note(R.composite(po.include_first.mor(f), po.include_second.mor(g)),
                 J.weight(g) + I.weight(f));
  }
  return best;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration oracles for future equivalences.

// All natural-transformation component vectors alpha with
// alpha[o] in target.hom(F(o), G(o)), filtered by naturality.
inline std::vector<std::vector<int>> enumerate_nat_components(const Functor& F, const Functor& G) {
  const auto& c = *F.target;
  const auto& s = *F.source;
  std::vector<std::vector<int>> out;
  std::vector<const std::vector<int>*> options;
  for (int o = 0; o < s.object_count(); ++o) {
    options.push_back(&c.hom(F.obj(o), G.obj(o)));
    if (options.back()->empty()) return out;
  }
  std::vector<std::size_t> pick(options.size(), 0);
  while (true) {
    std::vector<int> comp;
    for (std::size_t i = 0; i < pick.size(); ++i) comp.push_back((*options[i])[pick[i]]);
    NatTrans t{F, G, comp};
    if (validate_nat_trans(t).ok) out.push_back(comp);
    std::size_t i = pick.size();
    while (i > 0) {
      --i;
      if (++pick[i] < options[i]->size()) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
  }
}

// All valid morphisms of future equivalences fe1 -> fe2 (same P, Q).
inline std::vector<FutMorphism> enumerate_fut_morphisms(const FutureEquivalence& fe1,
                                                        const FutureEquivalence& fe2) {
  std::vector<FutMorphism> out;
  const auto& p = *fe1.left();
  const auto& q = *fe1.right();
  std::vector<const std::vector<int>*> options;
  for (int o = 0; o < p.object_count(); ++o)
    options.push_back(&q.hom(fe1.Gamma.obj(o), fe2.Gamma.obj(o)));
  for (int o = 0; o < q.object_count(); ++o)
    options.push_back(&p.hom(fe1.K.obj(o), fe2.K.obj(o)));
  for (const auto* opt : options)
    if (opt->empty()) return out;
  std::vector<std::size_t> pick(options.size(), 0);
  while (true) {
    FutMorphism m;
    m.source = fe1;
    m.target = fe2;
    for (int o = 0; o < p.object_count(); ++o) m.alpha.push_back((*options[o])[pick[o]]);
    for (int o = 0; o < q.object_count(); ++o)
      m.beta.push_back((*options[p.object_count() + o])[pick[p.object_count() + o]]);
    if (validate_fut_morphism(m).ok) out.push_back(m);
    std::size_t i = pick.size();
    while (i > 0) {
      --i;
      if (++pick[i] < options[i]->size()) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
  }
}

// All functors between the ambients of two cospans over the same P and Q
// that commute with both legs (the cospan morphisms from `from` to `to`).
inline std::vector<Functor> enumerate_leg_functors(const EmbeddingPair& from,
                                                   const EmbeddingPair& to) {
  const auto& a = *from.ambient();
  const auto& b = *to.ambient();
  Functor base;
  base.source = from.ambient();
  base.target = to.ambient();
  base.object_map.assign(a.object_count(), -1);
  base.morphism_map.assign(a.morphism_count(), -1);
  auto set_from_leg = [&](const Functor& leg_from, const Functor& leg_to) {
    for (int o = 0; o < leg_from.source->object_count(); ++o)
      base.object_map[leg_from.obj(o)] = leg_to.obj(o);
    for (int m = 0; m < leg_from.source->morphism_count(); ++m)
      base.morphism_map[leg_from.mor(m)] = leg_to.mor(m);
  };
  set_from_leg(from.leg_left, to.leg_left);
  set_from_leg(from.leg_right, to.leg_right);
  std::vector<Functor> out;
  for (int o = 0; o < a.object_count(); ++o)
    if (base.object_map[o] < 0) return out;  // legs must cover all objects
  std::vector<int> free;
  std::vector<const std::vector<int>*> options;
  for (int m = 0; m < a.morphism_count(); ++m)
    if (base.morphism_map[m] < 0) {
      free.push_back(m);
      options.push_back(&b.hom(base.object_map[a.src(m)], base.object_map[a.dst(m)]));
      if (options.back()->empty()) return out;
    }
  std::vector<std::size_t> pick(free.size(), 0);
  while (true) {
    Functor f = base;
    for (std::size_t i = 0; i < free.size(); ++i) f.morphism_map[free[i]] = (*options[i])[pick[i]];
    if (validate_functor(f).ok) out.push_back(f);
    if (free.empty()) return out;
    std::size_t i = pick.size();
    while (i > 0) {
      --i;
      if (++pick[i] < options[i]->size()) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
  }
}

// ---------------------------------------------------------------------------
// Named small categories.

// Thin chain 0 -> 1 -> ... -> n-1 with unit steps.
inline CatPtr chain(int n) {
  Grid g;
  for (int i = 0; i < n; ++i) g.push_back(Rat(i));
  return grid_line_category(g);
}

// One object, one identity.
inline CatPtr terminal() {
  CategoryBuilder b;
  b.add_object("*");
  int id = b.add_morphism("id", 0, 0);
  b.set_identity(0, id);
  b.set_composite(id, id, id);
  return b.build();
}

// Two objects a, b with parallel arrows u, v : a -> b and a common
// retraction r : b -> a (r.u = r.v = id_a); 7 morphisms, not thin.
inline CatPtr parallel_pair_with_retraction() {
  CategoryBuilder b;
  b.add_object("a");
  b.add_object("b");
  int ida = b.add_morphism("ida", 0, 0);
  int idb = b.add_morphism("idb", 1, 1);
  int u = b.add_morphism("u", 0, 1);
  int v = b.add_morphism("v", 0, 1);
  int r = b.add_morphism("r", 1, 0);
  int e1 = b.add_morphism("ur", 1, 1);  // u . r
  int e2 = b.add_morphism("vr", 1, 1);  // v . r
  b.set_identity(0, ida);
  b.set_identity(1, idb);
  b.set_composite(r, u, ida);
  b.set_composite(r, v, ida);
  b.set_composite(u, r, e1);
  b.set_composite(v, r, e2);
  b.set_composite(r, e1, r);
  b.set_composite(r, e2, r);
  b.set_composite(e1, u, u);
  b.set_composite(e1, v, u);
  b.set_composite(e2, u, v);
  b.set_composite(e2, v, v);
  b.set_composite(e1, e1, e1);
  b.set_composite(e1, e2, e1);
  b.set_composite(e2, e1, e2);
  b.set_composite(e2, e2, e2);
  // identity composites
  b.set_composite(ida, ida, ida);
  b.set_composite(idb, idb, idb);
  b.set_composite(u, ida, u);
  b.set_composite(idb, u, u);
  b.set_composite(v, ida, v);
  b.set_composite(idb, v, v);
  b.set_composite(r, idb, r);
  b.set_composite(ida, r, r);
  b.set_composite(e1, idb, e1);
  b.set_composite(idb, e1, e1);
  b.set_composite(e2, idb, e2);
  b.set_composite(idb, e2, e2);
  return b.build();
}

}  // namespace wcat::testutil
