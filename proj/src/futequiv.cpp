#include "wcat/futequiv.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace wcat {

namespace {

bool tables_match(const CatPtr& a, const CatPtr& b) {
  return a && b && (a == b || a->same_tables(*b));
}

// Weight of an already-validated future equivalence.
FutWeight fe_weight(const FutureEquivalence& fe) {
  const auto& p = *fe.Gamma.source;
  const auto& q = *fe.K.source;
  FutWeight w{Weight::zero(), Weight::zero(), Weight::zero()};
  for (int o = 0; o < p.object_count(); ++o) w.w_eta = max(w.w_eta, p.weight(fe.eta[o]));
  for (int o = 0; o < q.object_count(); ++o) w.w_nu = max(w.w_nu, q.weight(fe.nu[o]));
  w.omega = half(max(w.w_eta, w.w_nu));
  return w;
}

}  // namespace

FutureEquivalence identity_future_equivalence(const CatPtr& p) {
  if (!p) throw std::invalid_argument("identity_future_equivalence: null category");
  FutureEquivalence fe;
  fe.Gamma = identity_functor(p);
  fe.K = identity_functor(p);
  fe.eta.resize(p->object_count());
  fe.nu.resize(p->object_count());
  for (int o = 0; o < p->object_count(); ++o) fe.eta[o] = fe.nu[o] = p->identity(o);
  return fe;
}

Report validate_future_equivalence(const FutureEquivalence& fe) {
  Report r;
  if (!fe.Gamma.source || !fe.Gamma.target || !fe.K.source || !fe.K.target) {
    r.fail("future equivalence with a null category");
    return r;
  }
  if (!tables_match(fe.Gamma.source, fe.K.target) || !tables_match(fe.Gamma.target, fe.K.source)) {
    r.fail("Gamma and K do not form a round trip between the same two categories");
    return r;
  }
  r.merge(validate_functor(fe.Gamma), "Gamma");
  r.merge(validate_functor(fe.K), "K");
  if (!r.ok) return r;

  const auto& p = *fe.Gamma.source;
  const auto& q = *fe.K.source;
  for (int m = 0; m < p.morphism_count(); ++m)
    if (q.weight(fe.Gamma.mor(m)) > p.weight(m))
      r.fail("Gamma expands the weight of " + p.morphism_id(m));
  for (int m = 0; m < q.morphism_count(); ++m)
    if (p.weight(fe.K.mor(m)) > q.weight(m))
      r.fail("K expands the weight of " + q.morphism_id(m));

  if (static_cast<int>(fe.eta.size()) != p.object_count()) {
    r.fail("eta component count does not match the left category");
    return r;
  }
  if (static_cast<int>(fe.nu.size()) != q.object_count()) {
    r.fail("nu component count does not match the right category");
    return r;
  }
  NatTrans eta{identity_functor(fe.Gamma.source), compose_functors(fe.K, fe.Gamma), fe.eta};
  r.merge(validate_nat_trans(eta), "eta");
  NatTrans nu{identity_functor(fe.K.source), compose_functors(fe.Gamma, fe.K), fe.nu};
  r.merge(validate_nat_trans(nu), "nu");
  if (!r.ok) return r;

  for (int o = 0; o < p.object_count(); ++o)
    if (fe.Gamma.mor(fe.eta[o]) != fe.nu[fe.Gamma.obj(o)])
      r.fail("coherence Gamma(eta) = nu fails at " + p.object_id(o));
  for (int o = 0; o < q.object_count(); ++o)
    if (fe.K.mor(fe.nu[o]) != fe.eta[fe.K.obj(o)])
      r.fail("coherence K(nu) = eta fails at " + q.object_id(o));
  return r;
}

Report validate_fut_morphism(const FutMorphism& m) {
  Report r;
  r.merge(validate_future_equivalence(m.source), "source");
  r.merge(validate_future_equivalence(m.target), "target");
  if (!r.ok) return r;
  if (!tables_match(m.source.Gamma.source, m.target.Gamma.source) ||
      !tables_match(m.source.K.source, m.target.K.source)) {
    r.fail("source and target live over different category pairs");
    return r;
  }
  const auto& p = *m.source.Gamma.source;
  const auto& q = *m.source.K.source;
  if (static_cast<int>(m.alpha.size()) != p.object_count() ||
      static_cast<int>(m.beta.size()) != q.object_count()) {
    r.fail("component counts do not match");
    return r;
  }
  r.merge(validate_nat_trans(NatTrans{m.source.Gamma, m.target.Gamma, m.alpha}), "alpha");
  r.merge(validate_nat_trans(NatTrans{m.source.K, m.target.K, m.beta}), "beta");
  if (!r.ok) return r;

  for (int o = 0; o < p.object_count(); ++o) {
    // (beta * alpha)_o along both paths of the interchange square
    int via_target = p.composite(m.beta[m.target.Gamma.obj(o)], m.source.K.mor(m.alpha[o]));
    int via_source = p.composite(m.target.K.mor(m.alpha[o]), m.beta[m.source.Gamma.obj(o)]);
    if (via_target < 0 || via_target != via_source) {
      r.fail("interchange square fails at " + p.object_id(o));
    } else if (p.composite(via_target, m.source.eta[o]) != m.target.eta[o]) {
      r.fail("eta triangle fails at " + p.object_id(o));
    }
  }
  for (int o = 0; o < q.object_count(); ++o) {
    int via_target = q.composite(m.alpha[m.target.K.obj(o)], m.source.Gamma.mor(m.beta[o]));
    int via_source = q.composite(m.target.Gamma.mor(m.beta[o]), m.alpha[m.source.K.obj(o)]);
    if (via_target < 0 || via_target != via_source) {
      r.fail("interchange square fails at " + q.object_id(o));
    } else if (q.composite(via_target, m.source.nu[o]) != m.target.nu[o]) {
      r.fail("nu triangle fails at " + q.object_id(o));
    }
  }
  return r;
}

FutureEquivalence compose_future_equivalences(const FutureEquivalence& outer,
                                              const FutureEquivalence& inner) {
  Report ri = validate_future_equivalence(inner);
  if (!ri.ok) throw std::invalid_argument("compose_future_equivalences: inner: " + ri.text());
  Report ro = validate_future_equivalence(outer);
  if (!ro.ok) throw std::invalid_argument("compose_future_equivalences: outer: " + ro.text());
  if (!tables_match(inner.Gamma.target, outer.Gamma.source))
    throw std::invalid_argument("compose_future_equivalences: middle categories do not match");

  const auto& p = *inner.Gamma.source;
  const auto& r = *outer.K.source;
  FutureEquivalence fe;
  fe.Gamma = compose_functors(outer.Gamma, inner.Gamma);
  fe.K = compose_functors(inner.K, outer.K);
  fe.eta.resize(p.object_count());
  for (int o = 0; o < p.object_count(); ++o)
    fe.eta[o] = p.composite(inner.K.mor(outer.eta[inner.Gamma.obj(o)]), inner.eta[o]);
  fe.nu.resize(r.object_count());
  for (int o = 0; o < r.object_count(); ++o)
    fe.nu[o] = r.composite(outer.Gamma.mor(inner.nu[outer.K.obj(o)]), outer.nu[o]);
  return fe;
}

FutWeight future_equivalence_weight(const FutureEquivalence& fe) {
  Report v = validate_future_equivalence(fe);
  if (!v.ok) throw std::invalid_argument("future_equivalence_weight: " + v.text());
  return fe_weight(fe);
}

bool check_fut_interleaving(const FutureEquivalence& fe, const Functor& F, const Functor& G,
                            const NatTrans& phi, const NatTrans& psi) {
  Report v = validate_future_equivalence(fe);
  if (!v.ok) throw std::invalid_argument("check_fut_interleaving: " + v.text());
  if (!F.source || !F.target || !G.source || !G.target)
    throw std::invalid_argument("check_fut_interleaving: functor with a null category");
  if (!tables_match(F.source, fe.Gamma.source) || !tables_match(G.source, fe.K.source) ||
      !tables_match(F.target, G.target))
    throw std::invalid_argument("check_fut_interleaving: functor endpoints do not match");
  Report rf = validate_functor(F);
  if (!rf.ok) throw std::invalid_argument("check_fut_interleaving: F: " + rf.text());
  Report rg = validate_functor(G);
  if (!rg.ok) throw std::invalid_argument("check_fut_interleaving: G: " + rg.text());

  NatTrans phi2{F, compose_functors(G, fe.Gamma), phi.components};
  Report rphi = validate_nat_trans(phi2);
  if (!rphi.ok) throw std::invalid_argument("check_fut_interleaving: phi: " + rphi.text());
  NatTrans psi2{G, compose_functors(F, fe.K), psi.components};
  Report rpsi = validate_nat_trans(psi2);
  if (!rpsi.ok) throw std::invalid_argument("check_fut_interleaving: psi: " + rpsi.text());

  const auto& c = *F.target;
  const auto& p = *fe.Gamma.source;
  const auto& q = *fe.K.source;
  for (int o = 0; o < p.object_count(); ++o)
    if (c.composite(psi2.at(fe.Gamma.obj(o)), phi2.at(o)) != F.mor(fe.eta[o])) return false;
  for (int o = 0; o < q.object_count(); ++o)
    if (c.composite(phi2.at(fe.K.obj(o)), psi2.at(o)) != G.mor(fe.nu[o])) return false;
  return true;
}

PhiObject phi_object(const FutureEquivalence& fe) {
  Report v = validate_future_equivalence(fe);
  if (!v.ok) throw std::invalid_argument("phi_object: " + v.text());

  const CatPtr& pp = fe.Gamma.source;
  const CatPtr& qp = fe.K.source;
  const auto& p = *pp;
  const auto& q = *qp;
  const int np = p.object_count();

  PhiObject out;
  out.omega = fe_weight(fe).omega;

  CategoryBuilder b;
  for (int o = 0; o < p.object_count(); ++o) b.add_object("p:" + p.object_id(o));
  for (int o = 0; o < q.object_count(); ++o) b.add_object("q:" + q.object_id(o));

  // tag per ambient morphism, parallel to out.dir/out.bar
  struct Tag {
    int dir, x, bar;  // cross: x = source-side object; internal: x unused
  };
  std::vector<Tag> tags;
  std::vector<int> asrc, adst;
  std::vector<int> pmor(p.morphism_count()), qmor(q.morphism_count());

  auto add = [&](const std::string& id, int s, int d, const Weight& w, int dir, int x, int bar) {
    int idx = b.add_morphism(id, s, d, w);
    tags.push_back({dir, x, bar});
    asrc.push_back(s);
    adst.push_back(d);
    out.dir.push_back(dir);
    out.bar.push_back(bar);
    return idx;
  };

  for (int m = 0; m < p.morphism_count(); ++m)
    pmor[m] = add("p:" + p.morphism_id(m), p.src(m), p.dst(m), p.weight(m), 0, -1, m);
  for (int m = 0; m < q.morphism_count(); ++m)
    qmor[m] = add("q:" + q.morphism_id(m), np + q.src(m), np + q.dst(m), q.weight(m), 1, -1, m);
  for (int a = 0; a < p.object_count(); ++a)
    for (int c = 0; c < q.object_count(); ++c)
      for (int bar : q.hom(fe.Gamma.obj(a), c))
        out.fw_index[{a, c, bar}] = add("pq:" + p.object_id(a) + ":" + q.morphism_id(bar), a,
                                        np + c, q.weight(bar) + out.omega, 2, a, bar);
  for (int c = 0; c < q.object_count(); ++c)
    for (int a = 0; a < p.object_count(); ++a)
      for (int bar : p.hom(fe.K.obj(c), a))
        out.bw_index[{c, a, bar}] = add("qp:" + q.object_id(c) + ":" + p.morphism_id(bar), np + c,
                                        a, p.weight(bar) + out.omega, 3, c, bar);

  for (int o = 0; o < p.object_count(); ++o) b.set_identity(o, pmor[p.identity(o)]);
  for (int o = 0; o < q.object_count(); ++o) b.set_identity(np + o, qmor[q.identity(o)]);

  const int total = static_cast<int>(tags.size());
  for (int f = 0; f < total; ++f) {
    for (int g = 0; g < total; ++g) {
      if (adst[f] != asrc[g]) continue;
      const Tag& tf = tags[f];
      const Tag& tg = tags[g];
      int res = -1;
      switch (tf.dir * 4 + tg.dir) {
        case 0 * 4 + 0:
          res = pmor[p.composite(tg.bar, tf.bar)];
          break;
        case 1 * 4 + 1:
          res = qmor[q.composite(tg.bar, tf.bar)];
          break;
        case 2 * 4 + 1:  // forward cross then inside the right category
          res = out.fw_index.at({tf.x, adst[g] - np, q.composite(tg.bar, tf.bar)});
          break;
        case 0 * 4 + 2:  // inside the left category then forward cross
          res = out.fw_index.at({asrc[f], adst[g] - np, q.composite(tg.bar, fe.Gamma.mor(tf.bar))});
          break;
        case 2 * 4 + 3:  // forward then backward: lands in the left category
          res = pmor[p.composite(tg.bar, p.composite(fe.K.mor(tf.bar), fe.eta[tf.x]))];
          break;
        case 3 * 4 + 0:  // backward cross then inside the left category
          res = out.bw_index.at({tf.x, adst[g], p.composite(tg.bar, tf.bar)});
          break;
        case 1 * 4 + 3:  // inside the right category then backward cross
          res = out.bw_index.at({asrc[f] - np, adst[g], p.composite(tg.bar, fe.K.mor(tf.bar))});
          break;
        case 3 * 4 + 2:  // backward then forward: lands in the right category
          res = qmor[q.composite(tg.bar, q.composite(fe.Gamma.mor(tf.bar), fe.nu[tf.x]))];
          break;
        default:
          throw std::logic_error("phi_object: impossible composition shape");
      }
      b.set_composite(g, f, res);
    }
  }

  CatPtr amb = b.build();
  Report rc = validate_category(*amb);
  rc.merge(validate_weighted(*amb));
  if (!rc.ok) throw std::logic_error("phi_object built an invalid category: " + rc.text());

  Functor leg_left{pp, amb, {}, pmor, WeightContract::WeightPreserving};
  leg_left.object_map.resize(p.object_count());
  for (int o = 0; o < p.object_count(); ++o) leg_left.object_map[o] = o;
  Functor leg_right{qp, amb, {}, qmor, WeightContract::WeightPreserving};
  leg_right.object_map.resize(q.object_count());
  for (int o = 0; o < q.object_count(); ++o) leg_right.object_map[o] = np + o;
  out.pair = EmbeddingPair{std::move(leg_left), std::move(leg_right)};
  return out;
}

Functor phi_morphism(const FutMorphism& m) {
  Report v = validate_fut_morphism(m);
  if (!v.ok) throw std::invalid_argument("phi_morphism: " + v.text());

  PhiObject src_phi = phi_object(m.source);
  PhiObject tgt_phi = phi_object(m.target);
  const auto& p = *m.source.Gamma.source;
  const auto& q = *m.source.K.source;
  const auto& ta = *tgt_phi.pair.ambient();
  const int np = p.object_count();

  Functor f;
  f.source = tgt_phi.pair.ambient();
  f.target = src_phi.pair.ambient();
  f.contract = WeightContract::None;
  f.object_map.resize(ta.object_count());
  for (int o = 0; o < ta.object_count(); ++o) f.object_map[o] = o;
  f.morphism_map.resize(ta.morphism_count());
  for (int j = 0; j < ta.morphism_count(); ++j) {
    switch (tgt_phi.dir[j]) {
      case 0:
        f.morphism_map[j] = src_phi.pair.leg_left.mor(tgt_phi.bar[j]);
        break;
      case 1:
        f.morphism_map[j] = src_phi.pair.leg_right.mor(tgt_phi.bar[j]);
        break;
      case 2: {
        int a = ta.src(j);
        int c = ta.dst(j) - np;
        f.morphism_map[j] = src_phi.fw_index.at({a, c, q.composite(tgt_phi.bar[j], m.alpha[a])});
        break;
      }
      default: {
        int c = ta.src(j) - np;
        int a = ta.dst(j);
        f.morphism_map[j] = src_phi.bw_index.at({c, a, p.composite(tgt_phi.bar[j], m.beta[c])});
        break;
      }
    }
  }
  Report fv = validate_functor(f);
  if (!fv.ok) throw std::logic_error("phi_morphism built an invalid functor: " + fv.text());
  return f;
}

PhiComparison phi_comparison(const FutureEquivalence& inner, const FutureEquivalence& outer) {
  FutureEquivalence comp = compose_future_equivalences(outer, inner);
  PhiObject phi_i = phi_object(inner);
  PhiObject phi_j = phi_object(outer);
  PhiObject phi_l = phi_object(comp);
  PushoutResult po = pushout(phi_i.pair, phi_j.pair);

  const auto& p = *inner.Gamma.source;
  const auto& q = *inner.K.source;
  const auto& r_cat = *outer.K.source;
  const auto& la = *phi_l.pair.ambient();
  const auto& poa = *po.pair.ambient();
  const auto& ia = *phi_i.pair.ambient();
  const auto& ja = *phi_j.pair.ambient();
  const int np = p.object_count();
  const int nq = q.object_count();

  PhiComparison out;
  Report& r = out.report;

  std::map<std::pair<int, int>, int> member_class;
  for (int c = 0; c < static_cast<int>(po.classes.size()); ++c)
    for (const auto& mm : po.classes[c].members) member_class[mm] = c;

  // chi: every member of a pushout class must name the same composite-side
  // cross morphism.
  std::vector<int> chi(po.classes.size(), -1);
  for (int c = 0; c < static_cast<int>(po.classes.size()); ++c) {
    const auto& cls = po.classes[c];
    int value = -1;
    bool consistent = true;
    for (const auto& [im, jm] : cls.members) {
      int lm = -1;
      if (cls.forward) {
        if (phi_i.dir[im] != 2 || phi_j.dir[jm] != 2) {
          consistent = false;
          break;
        }
        int a = ia.src(im);
        int d = ja.dst(jm) - nq;
        int bar = r_cat.composite(phi_j.bar[jm], outer.Gamma.mor(phi_i.bar[im]));
        auto it = phi_l.fw_index.find({a, d, bar});
        if (it != phi_l.fw_index.end()) lm = it->second;
      } else {
        if (phi_i.dir[im] != 3 || phi_j.dir[jm] != 3) {
          consistent = false;
          break;
        }
        int d = ja.src(jm) - nq;
        int a = ia.dst(im);
        int bar = p.composite(phi_i.bar[im], inner.K.mor(phi_j.bar[jm]));
        auto it = phi_l.bw_index.find({d, a, bar});
        if (it != phi_l.bw_index.end()) lm = it->second;
      }
      if (lm < 0 || (value >= 0 && value != lm)) {
        consistent = false;
        break;
      }
      value = lm;
    }
    if (!consistent || value < 0)
      r.fail("chi is not well-defined on class " + poa.morphism_id(cls.morphism));
    else
      chi[c] = value;
  }

  // xi: composite-side cross morphism -> the class of (unit cross, lifted bar).
  std::vector<int> xi(la.morphism_count(), -1);
  for (int lm = 0; lm < la.morphism_count(); ++lm) {
    if (phi_l.dir[lm] == 2) {
      int a = la.src(lm);
      int d = la.dst(lm) - np;
      int ga = inner.Gamma.obj(a);
      int unit = phi_i.fw_index.at({a, ga, q.identity(ga)});
      auto lift = phi_j.fw_index.find({ga, d, phi_l.bar[lm]});
      if (lift == phi_j.fw_index.end()) {
        r.fail("xi has no lift for " + la.morphism_id(lm));
        continue;
      }
      auto it = member_class.find({unit, lift->second});
      if (it == member_class.end())
        r.fail("xi pair is not in any pushout class for " + la.morphism_id(lm));
      else
        xi[lm] = it->second;
    } else if (phi_l.dir[lm] == 3) {
      int d = la.src(lm) - np;
      int a = la.dst(lm);
      int kd = outer.K.obj(d);
      int unit = phi_j.bw_index.at({d, kd, q.identity(kd)});
      auto lift = phi_i.bw_index.find({kd, a, phi_l.bar[lm]});
      if (lift == phi_i.bw_index.end()) {
        r.fail("xi has no lift for " + la.morphism_id(lm));
        continue;
      }
      auto it = member_class.find({lift->second, unit});
      if (it == member_class.end())
        r.fail("xi pair is not in any pushout class for " + la.morphism_id(lm));
      else
        xi[lm] = it->second;
    }
  }

  for (int lm = 0; lm < la.morphism_count(); ++lm)
    if (phi_l.dir[lm] >= 2 && xi[lm] >= 0 && chi[xi[lm]] != lm)
      r.fail("chi(xi(-)) is not the identity on " + la.morphism_id(lm));
  for (int c = 0; c < static_cast<int>(po.classes.size()); ++c) {
    if (chi[c] >= 0 && xi[chi[c]] != c)
      r.fail("xi(chi(-)) is not the identity on " + poa.morphism_id(po.classes[c].morphism));
    if (chi[c] >= 0)
      out.matched_weights.emplace_back(la.weight(chi[c]), poa.weight(po.classes[c].morphism));
  }

  Functor emb;
  emb.source = phi_l.pair.ambient();
  emb.target = po.pair.ambient();
  emb.contract = WeightContract::None;
  emb.object_map.resize(la.object_count());
  for (int o = 0; o < np; ++o) emb.object_map[o] = po.pair.leg_left.obj(o);
  for (int o = 0; o < r_cat.object_count(); ++o)
    emb.object_map[np + o] = po.pair.leg_right.obj(o);
  emb.morphism_map.assign(la.morphism_count(), -1);
  for (int lm = 0; lm < la.morphism_count(); ++lm) {
    switch (phi_l.dir[lm]) {
      case 0:
        emb.morphism_map[lm] = po.pair.leg_left.mor(phi_l.bar[lm]);
        break;
      case 1:
        emb.morphism_map[lm] = po.pair.leg_right.mor(phi_l.bar[lm]);
        break;
      default:
        if (xi[lm] >= 0) emb.morphism_map[lm] = po.classes[xi[lm]].morphism;
        break;
    }
  }

  if (r.ok) {
    Report fv = validate_functor(emb);
    r.merge(fv, "comparison functor");
    if (fv.ok) {
      if (!same_functor(compose_functors(emb, phi_l.pair.leg_left), po.pair.leg_left))
        r.fail("left leg triangle does not commute");
      if (!same_functor(compose_functors(emb, phi_l.pair.leg_right), po.pair.leg_right))
        r.fail("right leg triangle does not commute");
    }
  }
  out.embedding = std::move(emb);
  return out;
}

namespace {

// All functors src -> dst whose morphism images never exceed the source
// weight, in lexicographic order of (object table, morphism table).
class FunctorEnum {
 public:
  FunctorEnum(const CatPtr& src, const CatPtr& dst) : sp_(src), dp_(dst), s_(*src), d_(*dst) {
    omap_.assign(s_.object_count(), -1);
    mmap_.assign(s_.morphism_count(), -1);
  }

  std::vector<Functor> run() {
    objects(0);
    return std::move(out_);
  }

 private:
  void objects(int o) {
    if (o == s_.object_count()) {
      for (int m = 0; m < s_.morphism_count(); ++m) mmap_[m] = -1;
      bool ok = true;
      for (int x = 0; x < s_.object_count(); ++x) {
        int im = d_.identity(omap_[x]);
        mmap_[s_.identity(x)] = im;
        if (!pair_checks(s_.identity(x))) {
          ok = false;
          break;
        }
      }
      if (ok) morphisms(0);
      return;
    }
    for (int t = 0; t < d_.object_count(); ++t) {
      omap_[o] = t;
      objects(o + 1);
    }
    omap_[o] = -1;
  }

  void morphisms(int m) {
    if (m == s_.morphism_count()) {
      out_.push_back(Functor{sp_, dp_, omap_, mmap_, WeightContract::Nonexpansive});
      return;
    }
    if (mmap_[m] >= 0) {  // identity, already forced
      morphisms(m + 1);
      return;
    }
    for (int img : d_.hom(omap_[s_.src(m)], omap_[s_.dst(m)])) {
      if (d_.weight(img) > s_.weight(m)) continue;
      mmap_[m] = img;
      if (pair_checks(m)) morphisms(m + 1);
      mmap_[m] = -1;
    }
  }

  // Composition constraints among morphisms whose images are already fixed.
  bool pair_checks(int m) {
    int n = s_.morphism_count();
    for (int f = 0; f < n; ++f) {
      if (mmap_[f] < 0) continue;
      int c = s_.composite(m, f);
      if (c >= 0 && mmap_[c] >= 0 && d_.composite(mmap_[m], mmap_[f]) != mmap_[c]) return false;
      c = s_.composite(f, m);
      if (c >= 0 && mmap_[c] >= 0 && d_.composite(mmap_[f], mmap_[m]) != mmap_[c]) return false;
      for (int g = 0; g < n; ++g) {
        if (mmap_[g] < 0) continue;
        if (s_.composite(g, f) == m && d_.composite(mmap_[g], mmap_[f]) != mmap_[m]) return false;
      }
    }
    return true;
  }

  CatPtr sp_, dp_;
  const WeightedFinCategory& s_;
  const WeightedFinCategory& d_;
  std::vector<int> omap_, mmap_;
  std::vector<Functor> out_;
};

// Quick naturality + coherence check used while enumerating; assumes the
// functors are valid and the components have the right endpoints by
// construction.
bool quadruple_valid(const WeightedFinCategory& p, const WeightedFinCategory& q,
                     const Functor& gamma, const Functor& k, const std::vector<int>& eta,
                     const std::vector<int>& nu) {
  for (int m = 0; m < p.morphism_count(); ++m) {
    int a = p.src(m), b = p.dst(m);
    int lhs = p.composite(k.mor(gamma.mor(m)), eta[a]);
    if (lhs < 0 || lhs != p.composite(eta[b], m)) return false;
  }
  for (int m = 0; m < q.morphism_count(); ++m) {
    int a = q.src(m), b = q.dst(m);
    int lhs = q.composite(gamma.mor(k.mor(m)), nu[a]);
    if (lhs < 0 || lhs != q.composite(nu[b], m)) return false;
  }
  for (int o = 0; o < p.object_count(); ++o)
    if (gamma.mor(eta[o]) != nu[gamma.obj(o)]) return false;
  for (int o = 0; o < q.object_count(); ++o)
    if (k.mor(nu[o]) != eta[k.obj(o)]) return false;
  return true;
}

}  // namespace

FutEnumeration enumerate_future_equivalences(const CatPtr& p, const CatPtr& q,
                                             const FutEnumCaps& caps) {
  if (!p || !q) throw std::invalid_argument("enumerate_future_equivalences: null category");
  if (p->object_count() > caps.max_objects || q->object_count() > caps.max_objects ||
      p->morphism_count() > caps.max_morphisms || q->morphism_count() > caps.max_morphisms)
    throw std::invalid_argument("enumerate_future_equivalences: caps exceeded");
  for (const auto* c : {p.get(), q.get()}) {
    Report rc = validate_category(*c);
    rc.merge(validate_weighted(*c));
    if (!rc.ok)
      throw std::invalid_argument("enumerate_future_equivalences: invalid category: " + rc.text());
  }

  std::vector<Functor> gammas = FunctorEnum(p, q).run();
  std::vector<Functor> ks = FunctorEnum(q, p).run();

  FutEnumeration out;
  std::size_t seen = 0;
  const auto& pc = *p;
  const auto& qc = *q;

  for (const Functor& gamma : gammas) {
    for (const Functor& k : ks) {
      // candidate unit components per object
      std::vector<const std::vector<int>*> eta_opts(pc.object_count());
      std::vector<const std::vector<int>*> nu_opts(qc.object_count());
      bool feasible = true;
      for (int o = 0; o < pc.object_count() && feasible; ++o) {
        eta_opts[o] = &pc.hom(o, k.obj(gamma.obj(o)));
        feasible = !eta_opts[o]->empty();
      }
      for (int o = 0; o < qc.object_count() && feasible; ++o) {
        nu_opts[o] = &qc.hom(o, gamma.obj(k.obj(o)));
        feasible = !nu_opts[o]->empty();
      }
      if (!feasible) continue;

      std::vector<int> eta(pc.object_count()), nu(qc.object_count());
      std::vector<std::size_t> pick(pc.object_count() + qc.object_count(), 0);
      const int slots = static_cast<int>(pick.size());
      while (true) {
        for (int o = 0; o < pc.object_count(); ++o) eta[o] = (*eta_opts[o])[pick[o]];
        for (int o = 0; o < qc.object_count(); ++o)
          nu[o] = (*nu_opts[o])[pick[pc.object_count() + o]];
        if (++seen > caps.max_candidates) {
          out.truncated = true;
          return out;
        }
        if (quadruple_valid(pc, qc, gamma, k, eta, nu))
          out.list.push_back(FutureEquivalence{gamma, k, eta, nu});

        int slot = slots - 1;
        while (slot >= 0) {
          const auto& opts = slot < pc.object_count() ? *eta_opts[slot]
                                                      : *nu_opts[slot - pc.object_count()];
          if (++pick[slot] < opts.size()) break;
          pick[slot] = 0;
          --slot;
        }
        if (slot < 0) break;
      }
    }
  }
  return out;
}

FutDistance future_equivalence_distance(const CatPtr& p, const CatPtr& q,
                                        const FutEnumCaps& caps) {
  FutEnumeration e = enumerate_future_equivalences(p, q, caps);
  FutDistance d = future_equivalence_distance(e.list);
  d.upper_bound = e.truncated;
  return d;
}

FutDistance future_equivalence_distance(const std::vector<FutureEquivalence>& list) {
  FutDistance d;
  d.upper_bound = true;
  for (int i = 0; i < static_cast<int>(list.size()); ++i) {
    Weight w = future_equivalence_weight(list[i]).omega;
    if (!d.witness || w < d.value) {
      d.value = w;
      d.witness = i;
    }
  }
  return d;
}

}  // namespace wcat
