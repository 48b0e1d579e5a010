#pragma once

#include "wcat/category.hpp"

namespace wcat {

// Finite Lawvere metric space: d may be asymmetric, infinite, or zero
// between distinct points; only d(x,x)=0 and the triangle law are required.
struct LawvereSpace {
  std::vector<std::string> points;
  std::vector<Weight> dist;  // row-major |points|^2, dist[i*n+j] = d(i, j)

  int point_index(const std::string& id) const;
  const Weight& d(int i, int j) const { return dist[static_cast<std::size_t>(i) * points.size() + j]; }
};

// Subset of point indices, kept sorted ascending.
using PointSubset = std::vector<int>;

Report validate_lawvere(const LawvereSpace& s);

// d(x,y) = minimum weight over hom(x,y), infinity when empty.
LawvereSpace induced_metric(const WeightedFinCategory& c);

enum class OffsetDirection { Future, Past };

// Future: { m : min_{a in A} d(a,m) <= r }. Past: { m : min_{a in A} d(m,a) <= r }.
PointSubset offset(const LawvereSpace& s, const PointSubset& A, const Weight& r, OffsetDirection dir);

// Directed Hausdorff distance, sup-inf form. Throws on empty subsets.
Weight hausdorff(const LawvereSpace& s, const PointSubset& A, const PointSubset& B);
Weight hausdorff_serial(const LawvereSpace& s, const PointSubset& A, const PointSubset& B);

// max of the two directed values.
Weight sym_hausdorff(const LawvereSpace& s, const PointSubset& A, const PointSubset& B);
Weight sym_hausdorff_serial(const LawvereSpace& s, const PointSubset& A, const PointSubset& B);

// Smallest r from the finite candidate set (matrix entries plus 0) with
// A inside the past r-offset of B and B inside the future r-offset of A.
Weight hausdorff_via_offsets(const LawvereSpace& s, const PointSubset& A, const PointSubset& B);
Weight hausdorff_via_offsets_serial(const LawvereSpace& s, const PointSubset& A, const PointSubset& B);

// Smallest r such that the two families of future offsets are r-interleaved
// at every candidate grid value a.
Weight offset_interleaving_distance(const LawvereSpace& s, const PointSubset& A, const PointSubset& B);
Weight offset_interleaving_distance_serial(const LawvereSpace& s, const PointSubset& A, const PointSubset& B);

// Forgetful image: one morphism x->y iff d(x,y) < infinity; weights all zero.
CatPtr underlying_category(const LawvereSpace& s);

}  // namespace wcat
