#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wcat/cospan.hpp"

namespace wcat {

// Finite discrete dynamical system: points and a total self-map.
struct DynSystem {
  std::vector<std::string> carrier;
  std::vector<int> map;  // map[i] = image of point i
};

Report validate_dyn_system(const DynSystem& s);

// Table of the n-fold iterate of the self-map.
std::vector<int> iterate_map(const DynSystem& s, std::int64_t n);

enum class ShiftKind { Phi, Psi, A, B };

// Symbolic morphism of the two-object shift category:
// phi^e : x -> x, psi^e : y -> y, a_e : x -> y, b_e : y -> x.
struct ShiftMorphism {
  ShiftKind kind = ShiftKind::Phi;
  std::int64_t exp = 0;
  bool operator==(const ShiftMorphism&) const = default;
};

std::string shift_str(const ShiftMorphism& m);

struct ShiftCategory {
  std::int64_t lag = 0;
};

// g after f by normal-form arithmetic: exponents add, and each a/b crossing
// contributes the lag. Throws on endpoint mismatch or negative exponents.
ShiftMorphism shift_compose(const ShiftCategory& c, const ShiftMorphism& g,
                            const ShiftMorphism& f);

// alpha.f = g.alpha, beta.g = f.beta, beta.alpha = f^lag, alpha.beta = g^lag,
// checked pointwise. alpha/beta are index tables X -> Y and Y -> X.
bool check_shift_equivalence(const DynSystem& s1, const DynSystem& s2,
                             const std::vector<int>& alpha, const std::vector<int>& beta,
                             std::int64_t lag);

struct ShiftSearchCaps {
  std::uint64_t max_pairs = 4000000;  // |Y|^|X| * |X|^|Y| candidate pairs
};

using ShiftWitness = std::pair<std::vector<int>, std::vector<int>>;

// Lexicographically first (alpha, beta) witnessing a lag-`lag` shift
// equivalence, or nullopt. Throws when the candidate count exceeds the cap.
std::optional<ShiftWitness> search_shift_equivalence(const DynSystem& s1, const DynSystem& s2,
                                                     std::int64_t lag,
                                                     const ShiftSearchCaps& caps = {});
std::optional<ShiftWitness> search_shift_equivalence_serial(const DynSystem& s1,
                                                            const DynSystem& s2, std::int64_t lag,
                                                            const ShiftSearchCaps& caps = {});

// The future equivalence (identity, identity, phi^lag, psi^lag) between the
// one-object free categories, kept symbolic. Its interleaving check
// evaluates the naturality squares and triangle identities on the function
// tables of two concrete systems.
struct LagFutureEquivalence {
  std::int64_t lag = 0;

  bool check_interleaving(const DynSystem& f, const DynSystem& g, const std::vector<int>& alpha,
                          const std::vector<int>& beta) const;
};

LagFutureEquivalence lag_future_equivalence(std::int64_t lag);

// Finite table slice of the shift category with exponents <= cap; composites
// past the cap collapse to one absorbing overflow morphism per endpoint
// pair. Used to cross-validate shift_compose against table composition.
struct ShiftCospan {
  EmbeddingPair pair;
  std::int64_t lag = 0;
  std::int64_t cap = 0;

  int encode(const ShiftMorphism& m) const;  // ambient index; -1 when exp > cap
  std::optional<ShiftMorphism> decode(int ambient_mor) const;  // nullopt for overflow
};

ShiftCospan shift_cospan(std::int64_t lag, std::int64_t exponent_cap);

}  // namespace wcat
