#pragma once

#include <map>
#include <optional>
#include <tuple>

#include "wcat/cospan.hpp"

namespace wcat {

// Quadruple (Gamma, K, eta, nu): functors both ways plus unit-style natural
// transformations Id => K.Gamma and Id => Gamma.K, subject to coherence.
struct FutureEquivalence {
  Functor Gamma, K;          // Gamma: P -> Q, K: Q -> P
  std::vector<int> eta, nu;  // per object: eta_p in P(p, K Gamma p), nu_q in Q(q, Gamma K q)

  const CatPtr& left() const { return Gamma.source; }
  const CatPtr& right() const { return K.source; }
};

FutureEquivalence identity_future_equivalence(const CatPtr& p);

// Functor axioms and nonexpansiveness of both directions, naturality of
// eta/nu, and the coherence equations Gamma(eta_p) = nu_{Gamma p} and
// K(nu_q) = eta_{K q}.
Report validate_future_equivalence(const FutureEquivalence& fe);

struct FutMorphism {
  FutureEquivalence source, target;
  std::vector<int> alpha;  // per left object: right-category morphism Gamma(p) -> Gamma'(p)
  std::vector<int> beta;   // per right object: left-category morphism K(q) -> K'(q)
};

// Naturality of alpha/beta plus the two triangles
// (beta*alpha)_p . eta_p = eta'_p and (alpha*beta)_q . nu_q = nu'_q, with the
// horizontal compositions evaluated along both paths of the interchange
// square.
Report validate_fut_morphism(const FutMorphism& m);

// Horizontal composition: outer over (Q,R) after inner over (P,Q).
FutureEquivalence compose_future_equivalences(const FutureEquivalence& outer,
                                              const FutureEquivalence& inner);

struct FutWeight {
  Weight w_eta, w_nu, omega;  // omega = half of max(w_eta, w_nu)
};

FutWeight future_equivalence_weight(const FutureEquivalence& fe);

// phi: F => G.Gamma and psi: G => F.K interleave F and G along fe when
// psi_{Gamma p} . phi_p = F(eta_p) and phi_{K q} . psi_q = G(nu_q).
bool check_fut_interleaving(const FutureEquivalence& fe, const Functor& F, const Functor& G,
                            const NatTrans& phi, const NatTrans& psi);

// The cospan P -> I <- Q built from a future equivalence: cross hom-sets are
// tagged copies of right(Gamma p, q) and left(K q, p); every cross morphism
// remembers its underlying "bar" morphism so the bijections stay explicit.
struct PhiObject {
  EmbeddingPair pair;
  Weight omega;
  std::vector<int> dir;  // per ambient morphism: 0 internal-left, 1 internal-right,
                         // 2 forward cross, 3 backward cross
  std::vector<int> bar;  // original morphism in the appropriate category
  std::map<std::tuple<int, int, int>, int> fw_index;  // (left obj, right obj, bar) -> morphism
  std::map<std::tuple<int, int, int>, int> bw_index;  // (right obj, left obj, bar) -> morphism
};

PhiObject phi_object(const FutureEquivalence& fe);

// Contravariant action on morphisms of future equivalences: the functor
// phi_object(target) -> phi_object(source) pulling cross morphisms back
// along alpha / beta.
Functor phi_morphism(const FutMorphism& m);

// Comparison of phi_object(outer * inner) with the pushout of the two
// separate cospans: cross hom-sets must biject (chi/xi) and the legs must
// agree; matched weights are reported but not required to be equal.
struct PhiComparison {
  Report report;
  Functor embedding;  // phi_object(outer * inner) ambient -> pushout ambient
  std::vector<std::pair<Weight, Weight>> matched_weights;  // (composite side, pushout side)
};

PhiComparison phi_comparison(const FutureEquivalence& inner, const FutureEquivalence& outer);

struct FutEnumCaps {
  int max_objects = 4;
  int max_morphisms = 12;
  std::size_t max_candidates = 500000;  // quadruples examined before truncating
};

struct FutEnumeration {
  std::vector<FutureEquivalence> list;
  bool truncated = false;
};

// All valid future equivalences between two small categories, in canonical
// (lexicographic table) order. Throws when the categories exceed the caps.
FutEnumeration enumerate_future_equivalences(const CatPtr& p, const CatPtr& q,
                                             const FutEnumCaps& caps = {});

struct FutDistance {
  Weight value = Weight::infinity();
  bool upper_bound = false;
  std::optional<int> witness;
};

// Minimum omega over enumerated (or supplied) future equivalences.
FutDistance future_equivalence_distance(const CatPtr& p, const CatPtr& q,
                                        const FutEnumCaps& caps = {});
FutDistance future_equivalence_distance(const std::vector<FutureEquivalence>& list);

}  // namespace wcat
