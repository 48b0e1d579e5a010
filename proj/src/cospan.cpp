#include "wcat/cospan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace wcat {
namespace {

// Shared context for pushout construction. `G` embeds the middle into the
// first ambient, `H` embeds it into the second.
struct PushCtx {
  const WeightedFinCategory* I = nullptr;
  const WeightedFinCategory* J = nullptr;
  const WeightedFinCategory* Q = nullptr;
  const Functor* G = nullptr;
  const Functor* H = nullptr;
  std::vector<int> qobj_of_i, qobj_of_j;  // middle preimage of an object, -1 if none
  std::vector<int> qmor_of_i, qmor_of_j;  // middle preimage of a morphism, -1 if none
};

// Canonical representative of a pushout morphism:
//   kind 0: a morphism of the first ambient (a = its index)
//   kind 1: a morphism of the second ambient with a strict endpoint
//   kind 2: a genuine forward pair (a = first-ambient part, b = second-ambient part)
//   kind 3: a genuine backward pair (a = second-ambient part, b = first-ambient part)
struct RV {
  int kind = 0;
  int a = -1, b = -1;
};

int preimage_i(const PushCtx& c, int imor) {
  int q = c.qmor_of_i[imor];
  if (q < 0) throw std::logic_error("pushout: missing preimage in first leg (fullness violated)");
  return q;
}

int preimage_j(const PushCtx& c, int jmor) {
  int q = c.qmor_of_j[jmor];
  if (q < 0) throw std::logic_error("pushout: missing preimage in second leg (fullness violated)");
  return q;
}

RV norm_j(const PushCtx& c, int jm) {
  int a = c.J->src(jm), b = c.J->dst(jm);
  if (c.qobj_of_j[a] >= 0 && c.qobj_of_j[b] >= 0) return RV{0, c.G->mor(preimage_j(c, jm)), -1};
  return RV{1, jm, -1};
}

// f : x -> G(q) in the first ambient, g : H(q) -> y in the second.
RV norm_fw(const PushCtx& c, int f, int g) {
  int x = c.I->src(f), y = c.J->dst(g);
  if (c.qobj_of_i[x] >= 0) return norm_j(c, c.J->composite(g, c.H->mor(preimage_i(c, f))));
  if (c.qobj_of_j[y] >= 0) return RV{0, c.I->composite(c.G->mor(preimage_j(c, g)), f), -1};
  return RV{2, f, g};
}

// g : y -> H(q) in the second ambient, f : G(q) -> x in the first.
RV norm_bw(const PushCtx& c, int g, int f) {
  int y = c.J->src(g), x = c.I->dst(f);
  if (c.qobj_of_j[y] >= 0) return RV{0, c.I->composite(f, c.G->mor(preimage_j(c, g))), -1};
  if (c.qobj_of_i[x] >= 0) return norm_j(c, c.J->composite(c.H->mor(preimage_i(c, f)), g));
  return RV{3, g, f};
}

// Composite m2 after m1 of canonical representatives. Well-definedness on
// equivalence classes is a property of valid cospans; the category validator
// run by callers would surface any failure as an associativity violation.
RV compose_rv(const PushCtx& c, const RV& m1, const RV& m2) {
  int k1 = m1.kind, k2 = m2.kind;
  if (k1 == 0 && k2 == 0) return RV{0, c.I->composite(m2.a, m1.a), -1};
  if (k1 == 1 && k2 == 1) return norm_j(c, c.J->composite(m2.a, m1.a));
  if (k1 == 0 && k2 == 1) return norm_fw(c, m1.a, m2.a);
  if (k1 == 1 && k2 == 0) return norm_bw(c, m1.a, m2.a);
  if (k1 == 0 && k2 == 2) return norm_fw(c, c.I->composite(m2.a, m1.a), m2.b);
  if (k1 == 2 && k2 == 1) return norm_fw(c, m1.a, c.J->composite(m2.a, m1.b));
  if (k1 == 2 && k2 == 3) {
    int mid = preimage_j(c, c.J->composite(m2.a, m1.b));
    return RV{0, c.I->composite(m2.b, c.I->composite(c.G->mor(mid), m1.a)), -1};
  }
  if (k1 == 3 && k2 == 2) {
    int mid = preimage_i(c, c.I->composite(m2.a, m1.b));
    return norm_j(c, c.J->composite(m2.b, c.J->composite(c.H->mor(mid), m1.a)));
  }
  if (k1 == 3 && k2 == 0) return norm_bw(c, m1.a, c.I->composite(m2.a, m1.b));
  if (k1 == 1 && k2 == 3) return norm_bw(c, c.J->composite(m2.a, m1.a), m2.b);
  throw std::logic_error("pushout: impossible composition shape");
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

EmbeddingPair identity_cospan(const CatPtr& p) {
  return EmbeddingPair{identity_functor(p), identity_functor(p)};
}

Report validate_cospan(const EmbeddingPair& e) {
  Report r;
  if (!e.leg_left.source || !e.leg_left.target || !e.leg_right.source || !e.leg_right.target) {
    r.fail("cospan: a leg is missing its source or target category");
    return r;
  }
  if (e.leg_left.target.get() != e.leg_right.target.get() &&
      !e.leg_left.target->same_tables(*e.leg_right.target)) {
    r.fail("cospan: legs target different ambient categories");
    return r;
  }
  r.merge(validate_category(*e.left()), "left: ");
  r.merge(validate_category(*e.right()), "right: ");
  r.merge(validate_category(*e.ambient()), "ambient: ");
  r.merge(validate_weighted(*e.ambient()), "ambient: ");
  r.merge(check_embedding(e.leg_left), "left leg: ");
  r.merge(check_embedding(e.leg_right), "right leg: ");
  return r;
}

PushoutResult pushout(const EmbeddingPair& first, const EmbeddingPair& second) {
  {
    Report r1 = validate_cospan(first);
    if (!r1.ok) throw std::invalid_argument("pushout: first cospan invalid: " + r1.violations.front());
    Report r2 = validate_cospan(second);
    if (!r2.ok) throw std::invalid_argument("pushout: second cospan invalid: " + r2.violations.front());
  }
  if (!first.right()->same_tables(*second.left()))
    throw std::invalid_argument("pushout: middle categories do not match");

  const WeightedFinCategory& I = *first.ambient();
  const WeightedFinCategory& J = *second.ambient();
  const WeightedFinCategory& Q = *first.right();

  PushCtx c;
  c.I = &I;
  c.J = &J;
  c.Q = &Q;
  c.G = &first.leg_right;
  c.H = &second.leg_left;
  c.qobj_of_i.assign(I.object_count(), -1);
  c.qobj_of_j.assign(J.object_count(), -1);
  c.qmor_of_i.assign(I.morphism_count(), -1);
  c.qmor_of_j.assign(J.morphism_count(), -1);
  for (int q = 0; q < Q.object_count(); ++q) {
    c.qobj_of_i[c.G->obj(q)] = q;
    c.qobj_of_j[c.H->obj(q)] = q;
  }
  for (int qm = 0; qm < Q.morphism_count(); ++qm) {
    c.qmor_of_i[c.G->mor(qm)] = qm;
    c.qmor_of_j[c.H->mor(qm)] = qm;
  }

  CategoryBuilder b;
  std::vector<int> io2r(I.object_count(), -1), jo2r(J.object_count(), -1);
  for (int x = 0; x < I.object_count(); ++x) {
    int q = c.qobj_of_i[x];
    io2r[x] = b.add_object(q >= 0 ? "q:" + Q.object_id(q) : "i:" + I.object_id(x));
  }
  for (int y = 0; y < J.object_count(); ++y) {
    int q = c.qobj_of_j[y];
    jo2r[y] = q >= 0 ? io2r[c.G->obj(q)] : b.add_object("j:" + J.object_id(y));
  }

  std::vector<int> rsrc, rdst;
  std::vector<RV> rv_of;
  std::vector<int> imor2r(I.morphism_count(), -1), jmor2r(J.morphism_count(), -1);
  auto add_mor = [&](const std::string& id, int s, int d, Weight w, RV rv) {
    int idx = b.add_morphism(id, s, d, w);
    rsrc.push_back(s);
    rdst.push_back(d);
    rv_of.push_back(rv);
    return idx;
  };
  for (int m = 0; m < I.morphism_count(); ++m) {
    int q = c.qmor_of_i[m];
    std::string id = q >= 0 ? "q:" + Q.morphism_id(q) : "i:" + I.morphism_id(m);
    imor2r[m] = add_mor(id, io2r[I.src(m)], io2r[I.dst(m)], I.weight(m), RV{0, m, -1});
  }
  for (int m = 0; m < J.morphism_count(); ++m) {
    int q = c.qmor_of_j[m];
    if (q >= 0) {
      jmor2r[m] = imor2r[c.G->mor(q)];
      continue;
    }
    jmor2r[m] =
        add_mor("j:" + J.morphism_id(m), jo2r[J.src(m)], jo2r[J.dst(m)], J.weight(m), RV{1, m, -1});
  }
  for (int x = 0; x < I.object_count(); ++x) b.set_identity(io2r[x], imor2r[I.identity(x)]);
  for (int y = 0; y < J.object_count(); ++y)
    if (c.qobj_of_j[y] < 0) b.set_identity(jo2r[y], jmor2r[J.identity(y)]);

  // Cross morphisms: equivalence classes of pairs joined at a middle object.
  std::vector<CrossClassInfo> classes;
  std::map<std::pair<int, int>, int> fw_class, bw_class;  // member pair -> result morphism

  auto build_block = [&](int x, int y, bool forward) {
    // forward: pairs (f : x -> G(q), g : H(q) -> y); backward: (g : y -> H(q), f : G(q) -> x).
    std::map<std::pair<int, int>, int> pidx;
    std::vector<std::pair<int, int>> plist;
    auto pair_at = [&](int u, int v) {
      auto it = pidx.find({u, v});
      if (it == pidx.end()) throw std::logic_error("pushout: cross pair missing from block");
      return it->second;
    };
    for (int q = 0; q < Q.object_count(); ++q) {
      if (forward) {
        for (int f : I.hom(x, c.G->obj(q)))
          for (int g : J.hom(c.H->obj(q), y)) {
            pidx.emplace(std::make_pair(f, g), static_cast<int>(plist.size()));
            plist.emplace_back(f, g);
          }
      } else {
        for (int g : J.hom(y, c.H->obj(q)))
          for (int f : I.hom(c.G->obj(q), x)) {
            pidx.emplace(std::make_pair(g, f), static_cast<int>(plist.size()));
            plist.emplace_back(g, f);
          }
      }
    }
    if (plist.empty()) return;
    UnionFind uf(plist.size());
    for (int qm = 0; qm < Q.morphism_count(); ++qm) {
      int qa = Q.src(qm), qb = Q.dst(qm);
      if (forward) {
        for (int f : I.hom(x, c.G->obj(qa)))
          for (int g : J.hom(c.H->obj(qb), y))
            uf.unite(pair_at(f, J.composite(g, c.H->mor(qm))),
                     pair_at(I.composite(c.G->mor(qm), f), g));
      } else {
        for (int g : J.hom(y, c.H->obj(qa)))
          for (int f : I.hom(c.G->obj(qb), x))
            uf.unite(pair_at(g, I.composite(f, c.G->mor(qm))),
                     pair_at(J.composite(c.H->mor(qm), g), f));
      }
    }
    std::map<int, std::vector<int>> by_root;
    for (std::size_t p = 0; p < plist.size(); ++p) by_root[uf.find(static_cast<int>(p))].push_back(static_cast<int>(p));
    for (auto& [root, members] : by_root) {
      std::sort(members.begin(), members.end(), [&](int u, int v) { return plist[u] < plist[v]; });
      const auto& rep = plist[members.front()];
      Weight w = Weight::infinity();
      for (int p : members) {
        Weight cand = forward ? I.weight(plist[p].first) + J.weight(plist[p].second)
                              : J.weight(plist[p].first) + I.weight(plist[p].second);
        w = std::min(w, cand);
      }
      std::string id, fid, sid;
      int s, d;
      RV rv;
      if (forward) {
        fid = I.morphism_id(rep.first);
        sid = J.morphism_id(rep.second);
        id = "fw[" + fid + ">" + sid + "]";
        s = io2r[x];
        d = jo2r[y];
        rv = RV{2, rep.first, rep.second};
      } else {
        fid = J.morphism_id(rep.first);
        sid = I.morphism_id(rep.second);
        id = "bw[" + fid + ">" + sid + "]";
        s = jo2r[y];
        d = io2r[x];
        rv = RV{3, rep.first, rep.second};
      }
      int idx = add_mor(id, s, d, w, rv);
      CrossClassInfo info;
      info.morphism = idx;
      info.forward = forward;
      for (int p : members) {
        if (forward) {
          info.members.emplace_back(plist[p].first, plist[p].second);
          fw_class[plist[p]] = idx;
        } else {
          info.members.emplace_back(plist[p].second, plist[p].first);
          bw_class[plist[p]] = idx;
        }
      }
      std::sort(info.members.begin(), info.members.end());
      classes.push_back(std::move(info));
    }
  };

  for (int x = 0; x < I.object_count(); ++x) {
    if (c.qobj_of_i[x] >= 0) continue;
    for (int y = 0; y < J.object_count(); ++y) {
      if (c.qobj_of_j[y] >= 0) continue;
      build_block(x, y, true);
      build_block(x, y, false);
    }
  }

  int total = static_cast<int>(rv_of.size());
  auto result_of = [&](const RV& rv) {
    switch (rv.kind) {
      case 0: return imor2r[rv.a];
      case 1: return jmor2r[rv.a];
      case 2: return fw_class.at({rv.a, rv.b});
      default: return bw_class.at({rv.a, rv.b});
    }
  };
  for (int r1 = 0; r1 < total; ++r1)
    for (int r2 = 0; r2 < total; ++r2) {
      if (rdst[r1] != rsrc[r2]) continue;
      b.set_composite(r2, r1, result_of(compose_rv(c, rv_of[r1], rv_of[r2])));
    }

  PushoutResult res;
  CatPtr R = b.build();
  res.include_first = Functor{first.leg_left.target, R, io2r, imor2r, WeightContract::WeightPreserving};
  res.include_second =
      Functor{second.leg_right.target, R, jo2r, jmor2r, WeightContract::WeightPreserving};
  res.pair.leg_left = compose_functors(res.include_first, first.leg_left);
  res.pair.leg_right = compose_functors(res.include_second, second.leg_right);
  res.classes = std::move(classes);
  return res;
}

Weight hausdorff_weight(const EmbeddingPair& e, bool symmetric,
                        const std::optional<std::vector<std::string>>& window_left,
                        const std::optional<std::vector<std::string>>& window_right) {
  LawvereSpace space = induced_metric(*e.ambient());
  auto image = [&](const Functor& leg, const std::optional<std::vector<std::string>>& window) {
    PointSubset s;
    if (window) {
      for (const auto& id : *window) {
        int o = leg.source->object_index(id);
        if (o < 0) throw std::invalid_argument("hausdorff_weight: unknown window object " + id);
        s.push_back(leg.obj(o));
      }
    } else {
      for (int o = 0; o < leg.source->object_count(); ++o) s.push_back(leg.obj(o));
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  };
  PointSubset a = image(e.leg_left, window_left);
  PointSubset bset = image(e.leg_right, window_right);
  return symmetric ? sym_hausdorff(space, a, bset) : hausdorff(space, a, bset);
}

bool check_interleaving_extension(const EmbeddingPair& e, const Functor& F, const Functor& G,
                                  const Functor& H) {
  if (!F.source || !F.target || !G.source || !G.target || !H.source || !H.target)
    throw std::invalid_argument("check_interleaving_extension: missing category");
  if (!H.source->same_tables(*e.ambient()) || !F.source->same_tables(*e.left()) ||
      !G.source->same_tables(*e.right()) || !F.target->same_tables(*G.target) ||
      !H.target->same_tables(*F.target))
    throw std::invalid_argument("check_interleaving_extension: endpoint mismatch");
  if (!validate_functor(H).ok) return false;
  return same_functor(compose_functors(H, e.leg_left), F) &&
         same_functor(compose_functors(H, e.leg_right), G);
}

SearchResult search_interleaving_extension(const EmbeddingPair& e, const Functor& F, const Functor& G,
                                           const SearchCaps& caps) {
  if (!F.source || !F.target || !G.source || !G.target)
    throw std::invalid_argument("search_interleaving_extension: missing category");
  if (!F.source->same_tables(*e.left()) || !G.source->same_tables(*e.right()) ||
      !F.target->same_tables(*G.target))
    throw std::invalid_argument("search_interleaving_extension: endpoint mismatch");

  const WeightedFinCategory& amb = *e.ambient();
  const WeightedFinCategory& C = *F.target;
  std::vector<int> oa(amb.object_count(), -1), ma(amb.morphism_count(), -1);

  auto seed_obj = [&](int o, int v) {
    if (oa[o] >= 0) return oa[o] == v;
    oa[o] = v;
    return true;
  };
  auto seed_mor = [&](int m, int v) {
    if (ma[m] >= 0) return ma[m] == v;
    ma[m] = v;
    return true;
  };
  for (int p = 0; p < e.left()->object_count(); ++p)
    if (!seed_obj(e.leg_left.obj(p), F.obj(p))) return {SearchStatus::NotFound, std::nullopt, "legs conflict"};
  for (int q = 0; q < e.right()->object_count(); ++q)
    if (!seed_obj(e.leg_right.obj(q), G.obj(q))) return {SearchStatus::NotFound, std::nullopt, "legs conflict"};
  for (int p = 0; p < e.left()->morphism_count(); ++p)
    if (!seed_mor(e.leg_left.mor(p), F.mor(p))) return {SearchStatus::NotFound, std::nullopt, "legs conflict"};
  for (int q = 0; q < e.right()->morphism_count(); ++q)
    if (!seed_mor(e.leg_right.mor(q), G.mor(q))) return {SearchStatus::NotFound, std::nullopt, "legs conflict"};

  // Static cap: simulate the forced-composite closure and count how many
  // assignments would require branching.
  {
    std::vector<char> known(amb.morphism_count(), 0);
    for (int m = 0; m < amb.morphism_count(); ++m)
      if (ma[m] >= 0) known[m] = 1;
    for (int o = 0; o < amb.object_count(); ++o) known[amb.identity(o)] = 1;
    int branch_points = 0;
    for (int o = 0; o < amb.object_count(); ++o)
      if (oa[o] < 0) ++branch_points;
    auto close = [&]() {
      bool changed = true;
      while (changed) {
        changed = false;
        for (int f = 0; f < amb.morphism_count(); ++f) {
          if (!known[f]) continue;
          for (int g = 0; g < amb.morphism_count(); ++g) {
            if (!known[g] || amb.dst(f) != amb.src(g)) continue;
            int gf = amb.composite(g, f);
            if (!known[gf]) {
              known[gf] = 1;
              changed = true;
            }
          }
        }
      }
    };
    close();
    for (int m = 0; m < amb.morphism_count(); ++m) {
      if (known[m]) continue;
      ++branch_points;
      known[m] = 1;
      close();
    }
    if (branch_points > caps.generator_cap)
      return {SearchStatus::BoundsExceeded, std::nullopt,
              "search needs " + std::to_string(branch_points) + " branch points, cap is " +
                  std::to_string(caps.generator_cap)};
  }

  auto propagate = [&](std::vector<int>& mor) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int f = 0; f < amb.morphism_count(); ++f) {
        if (mor[f] < 0) continue;
        for (int g = 0; g < amb.morphism_count(); ++g) {
          if (mor[g] < 0 || amb.dst(f) != amb.src(g)) continue;
          int gf = amb.composite(g, f);
          int img = C.composite(mor[g], mor[f]);
          if (img < 0) return false;
          if (mor[gf] < 0) {
            mor[gf] = img;
            changed = true;
          } else if (mor[gf] != img) {
            return false;
          }
        }
      }
    }
    return true;
  };

  std::function<std::optional<std::pair<std::vector<int>, std::vector<int>>>(
      std::vector<int>, std::vector<int>)>
      dfs = [&](std::vector<int> obj, std::vector<int> mor)
      -> std::optional<std::pair<std::vector<int>, std::vector<int>>> {
    if (!propagate(mor)) return std::nullopt;
    for (int o = 0; o < amb.object_count(); ++o) {
      if (obj[o] >= 0) continue;
      for (int cand = 0; cand < C.object_count(); ++cand) {
        auto obj2 = obj;
        auto mor2 = mor;
        obj2[o] = cand;
        if (mor2[amb.identity(o)] < 0)
          mor2[amb.identity(o)] = C.identity(cand);
        else if (mor2[amb.identity(o)] != C.identity(cand))
          continue;
        if (auto r = dfs(std::move(obj2), std::move(mor2))) return r;
      }
      return std::nullopt;
    }
    for (int m = 0; m < amb.morphism_count(); ++m) {
      if (mor[m] >= 0) continue;
      for (int cand : C.hom(obj[amb.src(m)], obj[amb.dst(m)])) {
        auto obj2 = obj;
        auto mor2 = mor;
        mor2[m] = cand;
        if (auto r = dfs(std::move(obj2), std::move(mor2))) return r;
      }
      return std::nullopt;
    }
    return std::make_pair(std::move(obj), std::move(mor));
  };

  // Identities of already-seeded objects.
  for (int o = 0; o < amb.object_count(); ++o) {
    if (oa[o] < 0) continue;
    if (!seed_mor(amb.identity(o), C.identity(oa[o])))
      return {SearchStatus::NotFound, std::nullopt, "legs conflict with identities"};
  }

  auto leaf = dfs(oa, ma);
  if (!leaf) return {SearchStatus::NotFound, std::nullopt, "no extension exists"};
  Functor ext{e.leg_left.target, F.target, std::move(leaf->first), std::move(leaf->second),
              WeightContract::None};
  if (!validate_functor(ext).ok)
    throw std::logic_error("search_interleaving_extension: produced an invalid functor");
  return {SearchStatus::Found, std::move(ext), ""};
}

namespace {

void require_member_shape(const Functor& F, const Functor& G, const FamilyMember& mem, int index) {
  if (!mem.pair.left()->same_tables(*F.source) || !mem.pair.right()->same_tables(*G.source))
    throw std::invalid_argument("interleaving_distance: family member " + std::to_string(index) +
                                " has mismatched endpoints");
  auto check_window = [&](const CatPtr& side, const std::optional<std::vector<std::string>>& win) {
    if (!win) return;
    if (win->empty())
      throw std::invalid_argument("interleaving_distance: family member " + std::to_string(index) +
                                  " has an empty window");
    for (const auto& id : *win)
      if (side->object_index(id) < 0)
        throw std::invalid_argument("interleaving_distance: family member " + std::to_string(index) +
                                    " window names unknown object " + id);
  };
  check_window(mem.pair.left(), mem.window_left);
  check_window(mem.pair.right(), mem.window_right);
}

DistanceResult reduce_members(const std::vector<int>& status, const std::vector<Weight>& weights,
                              std::vector<std::optional<Functor>>& extensions) {
  DistanceResult r;
  for (std::size_t i = 0; i < status.size(); ++i) {
    if (status[i] == static_cast<int>(SearchStatus::BoundsExceeded)) {
      r.bounds_exceeded.push_back(static_cast<int>(i));
      continue;
    }
    if (status[i] != static_cast<int>(SearchStatus::Found)) continue;
    if (!r.witness || weights[i] < r.value) {
      r.value = weights[i];
      r.witness = static_cast<int>(i);
      r.extension = std::move(extensions[i]);
    }
  }
  return r;
}

}  // namespace

DistanceResult interleaving_distance_serial(const Functor& F, const Functor& G,
                                            const std::vector<FamilyMember>& family, bool symmetric,
                                            const SearchCaps& caps) {
  int n = static_cast<int>(family.size());
  for (int i = 0; i < n; ++i) require_member_shape(F, G, family[i], i);
  std::vector<int> status(n, static_cast<int>(SearchStatus::NotFound));
  std::vector<Weight> weights(n, Weight::infinity());
  std::vector<std::optional<Functor>> extensions(n);
  for (int i = 0; i < n; ++i) {
    SearchResult s = search_interleaving_extension(family[i].pair, F, G, caps);
    status[i] = static_cast<int>(s.status);
    if (s.status == SearchStatus::Found) {
      weights[i] =
          hausdorff_weight(family[i].pair, symmetric, family[i].window_left, family[i].window_right);
      extensions[i] = std::move(s.extension);
    }
  }
  return reduce_members(status, weights, extensions);
}

DistanceResult interleaving_distance(const Functor& F, const Functor& G,
                                     const std::vector<FamilyMember>& family, bool symmetric,
                                     const SearchCaps& caps) {
  int n = static_cast<int>(family.size());
  for (int i = 0; i < n; ++i) require_member_shape(F, G, family[i], i);
  std::vector<int> status(n, static_cast<int>(SearchStatus::NotFound));
  std::vector<Weight> weights(n, Weight::infinity());
  std::vector<std::optional<Functor>> extensions(n);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    SearchResult s = search_interleaving_extension(family[i].pair, F, G, caps);
    status[i] = static_cast<int>(s.status);
    if (s.status == SearchStatus::Found) {
      weights[i] =
          hausdorff_weight(family[i].pair, symmetric, family[i].window_left, family[i].window_right);
      extensions[i] = std::move(s.extension);
    }
  }
  return reduce_members(status, weights, extensions);
}

DistanceResult family_hausdorff_minimum(const std::vector<FamilyMember>& family, bool symmetric) {
  DistanceResult r;
  for (std::size_t i = 0; i < family.size(); ++i) {
    Weight w =
        hausdorff_weight(family[i].pair, symmetric, family[i].window_left, family[i].window_right);
    if (!r.witness || w < r.value) {
      r.value = w;
      r.witness = static_cast<int>(i);
    }
  }
  return r;
}

bool postcompose_interleaving(const Functor& H, const EmbeddingPair& e, const Functor& F,
                              const Functor& G, const Functor& ext) {
  if (!check_interleaving_extension(e, F, G, ext))
    throw std::invalid_argument("postcompose_interleaving: extension does not verify");
  return check_interleaving_extension(e, compose_functors(H, F), compose_functors(H, G),
                                      compose_functors(H, ext));
}

std::vector<FamilyMember> gh_candidate_family(const CatPtr& P, const CatPtr& Q,
                                              const std::vector<Weight>& values,
                                              std::size_t max_candidates) {
  auto thin = [](const WeightedFinCategory& c) {
    for (int a = 0; a < c.object_count(); ++a)
      for (int b = 0; b < c.object_count(); ++b)
        if (c.hom(a, b).size() > 1) return false;
    return true;
  };
  if (!P || !Q || !thin(*P) || !thin(*Q))
    throw std::invalid_argument("gh_candidate_family: inputs must be thin categories");

  LawvereSpace dp = induced_metric(*P), dq = induced_metric(*Q);
  int m = P->object_count(), n = Q->object_count(), total = m + n;

  std::vector<Weight> opts = values;
  std::sort(opts.begin(), opts.end());
  opts.erase(std::unique(opts.begin(), opts.end()), opts.end());
  if (opts.empty() || !opts.back().is_infinite()) opts.push_back(Weight::infinity());

  // Distance matrix over P-then-Q points; cross cells are the unknowns.
  std::vector<std::vector<Weight>> d(total, std::vector<Weight>(total, Weight::infinity()));
  std::vector<std::vector<char>> known(total, std::vector<char>(total, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      d[i][j] = dp.d(i, j);
      known[i][j] = 1;
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      d[m + i][m + j] = dq.d(i, j);
      known[m + i][m + j] = 1;
    }

  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) cells.emplace_back(i, m + j);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) cells.emplace_back(m + j, i);

  auto consistent_after = [&](int u, int v) {
    // Triangles that involve the (u, v) entry and otherwise known entries.
    for (int k = 0; k < total; ++k) {
      if (known[v][k] && known[u][k] && d[u][k] > d[u][v] + d[v][k]) return false;
      if (known[k][u] && known[k][v] && d[k][v] > d[k][u] + d[u][v]) return false;
      if (known[u][k] && known[k][v] && d[u][v] > d[u][k] + d[k][v]) return false;
    }
    return true;
  };

  std::vector<FamilyMember> out;
  auto emit = [&]() {
    CategoryBuilder b;
    std::vector<std::string> ids(total);
    for (int i = 0; i < m; ++i) ids[i] = "p:" + P->object_id(i);
    for (int j = 0; j < n; ++j) ids[m + j] = "q:" + Q->object_id(j);
    for (int i = 0; i < total; ++i) b.add_object(ids[i]);
    std::vector<std::vector<int>> arrow(total, std::vector<int>(total, -1));
    for (int i = 0; i < total; ++i)
      for (int j = 0; j < total; ++j)
        if (!d[i][j].is_infinite()) arrow[i][j] = b.add_morphism(ids[i] + "->" + ids[j], i, j, d[i][j]);
    for (int i = 0; i < total; ++i) b.set_identity(i, arrow[i][i]);
    for (int i = 0; i < total; ++i)
      for (int j = 0; j < total; ++j)
        for (int k = 0; k < total; ++k)
          if (arrow[i][j] >= 0 && arrow[j][k] >= 0) b.set_composite(arrow[j][k], arrow[i][j], arrow[i][k]);
    CatPtr amb = b.build();
    auto leg = [&](const CatPtr& src, int offset) {
      Functor f;
      f.source = src;
      f.target = amb;
      f.contract = WeightContract::WeightPreserving;
      for (int o = 0; o < src->object_count(); ++o) f.object_map.push_back(offset + o);
      for (int mm = 0; mm < src->morphism_count(); ++mm)
        f.morphism_map.push_back(arrow[offset + src->src(mm)][offset + src->dst(mm)]);
      return f;
    };
    out.push_back(FamilyMember{EmbeddingPair{leg(P, 0), leg(Q, m)}, std::nullopt, std::nullopt});
  };

  std::function<void(std::size_t)> rec = [&](std::size_t cell) {
    if (out.size() >= max_candidates) return;
    if (cell == cells.size()) {
      emit();
      return;
    }
    auto [u, v] = cells[cell];
    for (const Weight& w : opts) {
      d[u][v] = w;
      known[u][v] = 1;
      if (consistent_after(u, v)) rec(cell + 1);
      known[u][v] = 0;
      if (out.size() >= max_candidates) break;
    }
    d[u][v] = Weight::infinity();
  };
  rec(0);
  return out;
}

}  // namespace wcat
