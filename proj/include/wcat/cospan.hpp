#pragma once

#include <optional>

#include "wcat/functor.hpp"
#include "wcat/lawvere.hpp"

namespace wcat {

// Pairwise embedding P -> I <- Q; both legs share the ambient target.
struct EmbeddingPair {
  Functor leg_left, leg_right;

  const CatPtr& left() const { return leg_left.source; }
  const CatPtr& right() const { return leg_right.source; }
  const CatPtr& ambient() const { return leg_left.target; }
};

EmbeddingPair identity_cospan(const CatPtr& p);

// Both legs are weight-preserving embeddings and the ambient validates.
Report validate_cospan(const EmbeddingPair& e);

// One equivalence class of cross pairs in a pushout, kept for auditing:
// members are (morphism of first ambient, morphism of second ambient).
struct CrossClassInfo {
  int morphism = -1;  // index in the pushout ambient
  bool forward = true;  // true: from a strict-first object to a strict-second object
  std::vector<std::pair<int, int>> members;
};

struct PushoutResult {
  EmbeddingPair pair;      // over (left of first, right of second)
  Functor include_first;   // ambient of first -> pushout ambient
  Functor include_second;  // ambient of second -> pushout ambient
  std::vector<CrossClassInfo> classes;
};

// Horizontal composition of cospans along an identical shared middle.
PushoutResult pushout(const EmbeddingPair& first, const EmbeddingPair& second);

// Hausdorff distance between the leg images inside the ambient induced
// metric. Windows are given as left/right-category object ids.
Weight hausdorff_weight(const EmbeddingPair& e, bool symmetric = false,
                        const std::optional<std::vector<std::string>>& window_left = std::nullopt,
                        const std::optional<std::vector<std::string>>& window_right = std::nullopt);

// True iff H . leg_left = F, H . leg_right = G and H is a valid functor.
bool check_interleaving_extension(const EmbeddingPair& e, const Functor& F, const Functor& G,
                                  const Functor& H);

struct SearchCaps {
  int generator_cap = 40;  // unknown morphisms with no nontrivial factorization
};

enum class SearchStatus { Found, NotFound, BoundsExceeded };

struct SearchResult {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<Functor> extension;
  std::string note;
};

// Backtracking search for an extension H : ambient -> target of F/G,
// branching over target hom-sets and propagating by functoriality.
SearchResult search_interleaving_extension(const EmbeddingPair& e, const Functor& F, const Functor& G,
                                           const SearchCaps& caps = {});

struct FamilyMember {
  EmbeddingPair pair;
  std::optional<std::vector<std::string>> window_left, window_right;
};

struct DistanceResult {
  Weight value = Weight::infinity();
  std::optional<int> witness;
  bool upper_bound = true;  // family minima are upper bounds by construction
  std::vector<int> bounds_exceeded;
  std::optional<Functor> extension;
};

// Minimum hausdorff_weight over family members admitting an extension,
// with the lowest-index witness.
DistanceResult interleaving_distance(const Functor& F, const Functor& G,
                                     const std::vector<FamilyMember>& family, bool symmetric = false,
                                     const SearchCaps& caps = {});
DistanceResult interleaving_distance_serial(const Functor& F, const Functor& G,
                                            const std::vector<FamilyMember>& family,
                                            bool symmetric = false, const SearchCaps& caps = {});

// Family minimum without the extension requirement (Gromov-Hausdorff style).
DistanceResult family_hausdorff_minimum(const std::vector<FamilyMember>& family, bool symmetric = false);

// Stability: composes a verified extension with H and re-checks it.
bool postcompose_interleaving(const Functor& H, const EmbeddingPair& e, const Functor& F,
                              const Functor& G, const Functor& ext);

// Candidate cospans over thin P, Q: cross weights drawn from `values` (or
// absent), filtered by the triangle constraints; at most `max_candidates`.
std::vector<FamilyMember> gh_candidate_family(const CatPtr& P, const CatPtr& Q,
                                              const std::vector<Weight>& values,
                                              std::size_t max_candidates = 20000);

}  // namespace wcat
