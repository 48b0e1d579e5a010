#include "wcat/functor.hpp"

#include <stdexcept>

namespace wcat {

std::string contract_name(WeightContract c) {
  switch (c) {
    case WeightContract::None: return "none";
    case WeightContract::Nonexpansive: return "nonexpansive";
    case WeightContract::WeightPreserving: return "weight-preserving";
  }
  return "none";
}

WeightContract parse_contract(const std::string& name) {
  if (name == "none") return WeightContract::None;
  if (name == "nonexpansive") return WeightContract::Nonexpansive;
  if (name == "weight-preserving") return WeightContract::WeightPreserving;
  throw std::invalid_argument("unknown weight contract: " + name);
}

Functor identity_functor(const CatPtr& c) {
  Functor f;
  f.source = c;
  f.target = c;
  f.object_map.resize(c->object_count());
  f.morphism_map.resize(c->morphism_count());
  for (int i = 0; i < c->object_count(); ++i) f.object_map[i] = i;
  for (int i = 0; i < c->morphism_count(); ++i) f.morphism_map[i] = i;
  f.contract = WeightContract::WeightPreserving;
  return f;
}

Report validate_functor(const Functor& F) {
  Report r;
  if (!F.source || !F.target) {
    r.fail("functor without source/target");
    return r;
  }
  const auto& s = *F.source;
  const auto& t = *F.target;
  if (static_cast<int>(F.object_map.size()) != s.object_count() ||
      static_cast<int>(F.morphism_map.size()) != s.morphism_count()) {
    r.fail("functor map sizes do not match the source category");
    return r;
  }
  for (int o = 0; o < s.object_count(); ++o)
    if (F.obj(o) < 0 || F.obj(o) >= t.object_count()) {
      r.fail("object image out of range for " + s.object_id(o));
      return r;
    }
  for (int m = 0; m < s.morphism_count(); ++m) {
    int fm = F.mor(m);
    if (fm < 0 || fm >= t.morphism_count()) {
      r.fail("morphism image out of range for " + s.morphism_id(m));
      return r;
    }
    if (t.src(fm) != F.obj(s.src(m)) || t.dst(fm) != F.obj(s.dst(m)))
      r.fail("image endpoints mismatch on " + s.morphism_id(m));
  }
  if (!r.ok) return r;
  for (int o = 0; o < s.object_count(); ++o)
    if (F.mor(s.identity(o)) != t.identity(F.obj(o)))
      r.fail("identity of " + s.object_id(o) + " not preserved");
  for (int g = 0; g < s.morphism_count(); ++g)
    for (int f = 0; f < s.morphism_count(); ++f) {
      if (s.dst(f) != s.src(g)) continue;
      int gf = s.composite(g, f);
      if (gf < 0) continue;
      if (F.mor(gf) != t.composite(F.mor(g), F.mor(f)))
        r.fail("composite not preserved on (" + s.morphism_id(f) + ", " + s.morphism_id(g) + ")");
    }
  for (int m = 0; m < s.morphism_count(); ++m) {
    const Weight& ws = s.weight(m);
    const Weight& wt = t.weight(F.mor(m));
    if (F.contract == WeightContract::Nonexpansive && wt > ws)
      r.fail("nonexpansive contract violated on " + s.morphism_id(m));
    if (F.contract == WeightContract::WeightPreserving && !(wt == ws))
      r.fail("weight-preserving contract violated on " + s.morphism_id(m));
  }
  return r;
}

Report check_embedding(const Functor& F) {
  Report r = validate_functor(F);
  if (!r.ok) return r;
  const auto& s = *F.source;
  const auto& t = *F.target;
  for (int a = 0; a < s.object_count(); ++a)
    for (int b = a + 1; b < s.object_count(); ++b)
      if (F.obj(a) == F.obj(b))
        r.fail("objects " + s.object_id(a) + " and " + s.object_id(b) + " collapse");
  if (!r.ok) return r;
  for (int a = 0; a < s.object_count(); ++a)
    for (int b = 0; b < s.object_count(); ++b) {
      const auto& dom = s.hom(a, b);
      const auto& cod = t.hom(F.obj(a), F.obj(b));
      if (dom.size() != cod.size()) {  // fullness/faithfulness by counting
        r.fail("hom(" + s.object_id(a) + ", " + s.object_id(b) + ") is not matched bijectively");
        continue;
      }
      std::vector<bool> hit(cod.size(), false);
      for (int m : dom) {
        int fm = F.mor(m);
        bool found = false;
        for (std::size_t i = 0; i < cod.size(); ++i)
          if (cod[i] == fm && !hit[i]) {
            hit[i] = true;
            found = true;
            break;
          }
        if (!found) r.fail("morphisms collapse inside hom(" + s.object_id(a) + ", " + s.object_id(b) + ")");
      }
    }
  for (int m = 0; m < s.morphism_count(); ++m)
    if (!(t.weight(F.mor(m)) == s.weight(m)))
      r.fail("weight not preserved on " + s.morphism_id(m));
  return r;
}

Functor compose_functors(const Functor& G, const Functor& F) {
  if (!F.target || !G.source || (F.target != G.source && !F.target->same_tables(*G.source)))
    throw std::invalid_argument("compose_functors: target of F differs from source of G");
  Functor h;
  h.source = F.source;
  h.target = G.target;
  h.object_map.resize(F.object_map.size());
  h.morphism_map.resize(F.morphism_map.size());
  for (std::size_t i = 0; i < F.object_map.size(); ++i) h.object_map[i] = G.obj(F.object_map[i]);
  for (std::size_t i = 0; i < F.morphism_map.size(); ++i) h.morphism_map[i] = G.mor(F.morphism_map[i]);
  h.contract = std::min(F.contract, G.contract);  // enum order: none < nonexpansive < preserving
  return h;
}

bool same_functor(const Functor& F, const Functor& G) {
  if (!F.source || !G.source || !F.target || !G.target) return false;
  if (F.source != G.source && !F.source->same_tables(*G.source)) return false;
  if (F.target != G.target && !F.target->same_tables(*G.target)) return false;
  return F.object_map == G.object_map && F.morphism_map == G.morphism_map;
}

Functor thin_inclusion(const CatPtr& sub, const CatPtr& super) {
  if (!sub || !super) throw std::invalid_argument("thin_inclusion: missing category");
  Functor f;
  f.source = sub;
  f.target = super;
  for (int o = 0; o < sub->object_count(); ++o) {
    int img = super->object_index(sub->object_id(o));
    if (img < 0) throw std::invalid_argument("thin_inclusion: no object named " + sub->object_id(o));
    f.object_map.push_back(img);
  }
  for (int m = 0; m < sub->morphism_count(); ++m) {
    const auto& cod = super->hom(f.obj(sub->src(m)), f.obj(sub->dst(m)));
    if (cod.size() != 1)
      throw std::invalid_argument("thin_inclusion: no unique parallel morphism for " +
                                  sub->morphism_id(m));
    f.morphism_map.push_back(cod.front());
  }
  return f;
}

NatTrans identity_nat_trans(const Functor& F) {
  NatTrans t;
  t.F = F;
  t.G = F;
  t.components.resize(F.object_map.size());
  for (std::size_t o = 0; o < F.object_map.size(); ++o)
    t.components[o] = F.target->identity(F.object_map[o]);
  return t;
}

Report validate_nat_trans(const NatTrans& t) {
  Report r;
  if (!t.F.source || !t.G.source) {
    r.fail("natural transformation without functors");
    return r;
  }
  if (!(t.F.source == t.G.source || t.F.source->same_tables(*t.G.source)) ||
      !(t.F.target == t.G.target || t.F.target->same_tables(*t.G.target))) {
    r.fail("functors do not share source/target");
    return r;
  }
  const auto& s = *t.F.source;
  const auto& c = *t.F.target;
  if (static_cast<int>(t.components.size()) != s.object_count()) {
    r.fail("component count does not match source objects");
    return r;
  }
  for (int o = 0; o < s.object_count(); ++o) {
    int m = t.at(o);
    if (m < 0 || m >= c.morphism_count() || c.src(m) != t.F.obj(o) || c.dst(m) != t.G.obj(o)) {
      r.fail("component at " + s.object_id(o) + " has wrong endpoints");
      return r;
    }
  }
  for (int f = 0; f < s.morphism_count(); ++f) {
    int a = s.src(f), b = s.dst(f);
    int lhs = c.composite(t.G.mor(f), t.at(a));
    int rhs = c.composite(t.at(b), t.F.mor(f));
    if (lhs != rhs || lhs < 0)
      r.fail("naturality square fails on " + s.morphism_id(f));
  }
  return r;
}

}  // namespace wcat
