#include "wcat/lawvere.hpp"

#include <algorithm>
#include <stdexcept>

namespace wcat {

namespace {

void require_nonempty(const PointSubset& A, const PointSubset& B) {
  if (A.empty() || B.empty()) throw std::invalid_argument("hausdorff on empty subset");
}

bool subset_of(const PointSubset& A, const PointSubset& B) {
  return std::includes(B.begin(), B.end(), A.begin(), A.end());
}

// All finite matrix entries plus 0, sorted ascending, deduplicated.
std::vector<Weight> candidate_radii(const LawvereSpace& s) {
  std::vector<Weight> c;
  c.push_back(Weight::zero());
  for (const Weight& w : s.dist)
    if (!w.is_infinite()) c.push_back(w);
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

Weight min_into(const LawvereSpace& s, const PointSubset& from, int to) {
  Weight best = Weight::infinity();
  for (int a : from) best = min(best, s.d(a, to));
  return best;
}

Weight min_outof(const LawvereSpace& s, int from, const PointSubset& to) {
  Weight best = Weight::infinity();
  for (int b : to) best = min(best, s.d(from, b));
  return best;
}

}  // namespace

int LawvereSpace::point_index(const std::string& id) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i] == id) return static_cast<int>(i);
  return -1;
}

Report validate_lawvere(const LawvereSpace& s) {
  Report r;
  std::size_t n = s.points.size();
  if (s.dist.size() != n * n) {
    r.fail("distance matrix size mismatch");
    return r;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!(s.d(i, i) == Weight::zero())) r.fail("d(x,x) nonzero at " + s.points[i]);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (s.d(x, z) > s.d(x, y) + s.d(y, z)) {
          r.fail("triangle inequality fails on (" + s.points[x] + ", " + s.points[y] + ", " +
                 s.points[z] + ")");
          if (r.violations.size() > 16) return r;
        }
  return r;
}

LawvereSpace induced_metric(const WeightedFinCategory& c) {
  LawvereSpace s;
  int n = c.object_count();
  s.points.reserve(n);
  for (int i = 0; i < n; ++i) s.points.push_back(c.object_id(i));
  s.dist.assign(static_cast<std::size_t>(n) * n, Weight::infinity());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Weight best = Weight::infinity();
      for (int m : c.hom(a, b)) best = min(best, c.weight(m));
      s.dist[static_cast<std::size_t>(a) * n + b] = best;
    }
  return s;
}

PointSubset offset(const LawvereSpace& s, const PointSubset& A, const Weight& r, OffsetDirection dir) {
  PointSubset out;
  int n = static_cast<int>(s.points.size());
  for (int m = 0; m < n; ++m) {
    Weight best = dir == OffsetDirection::Future ? min_into(s, A, m) : min_outof(s, m, A);
    if (best <= r) out.push_back(m);
  }
  return out;
}

Weight hausdorff_serial(const LawvereSpace& s, const PointSubset& A, const PointSubset& B) {
  require_nonempty(A, B);
  Weight worst = Weight::zero();
  for (int a : A) worst = max(worst, min_outof(s, a, B));
  for (int b : B) worst = max(worst, min_into(s, A, b));
  return worst;
}

Weight hausdorff(const LawvereSpace& s, const PointSubset& A, const PointSubset& B) {
  require_nonempty(A, B);
  Weight worst = Weight::zero();
  int na = static_cast<int>(A.size());
  int nb = static_cast<int>(B.size());
#pragma omp parallel
  {
    Weight local = Weight::zero();
#pragma omp for nowait
    for (int i = 0; i < na; ++i) local = max(local, min_outof(s, A[i], B));
#pragma omp for nowait
    for (int j = 0; j < nb; ++j) local = max(local, min_into(s, A, B[j]));
#pragma omp critical
    worst = max(worst, local);
  }
  return worst;
}

Weight sym_hausdorff_serial(const LawvereSpace& s, const PointSubset& A, const PointSubset& B) {
  return max(hausdorff_serial(s, A, B), hausdorff_serial(s, B, A));
}

Weight sym_hausdorff(const LawvereSpace& s, const PointSubset& A, const PointSubset& B) {
  return max(hausdorff(s, A, B), hausdorff(s, B, A));
}

namespace {

bool offsets_cover(const LawvereSpace& s, const PointSubset& A, const PointSubset& B, const Weight& r) {
  return subset_of(A, offset(s, B, r, OffsetDirection::Past)) &&
         subset_of(B, offset(s, A, r, OffsetDirection::Future));
}

}  // namespace

Weight hausdorff_via_offsets_serial(const LawvereSpace& s, const PointSubset& A, const PointSubset& B) {
  require_nonempty(A, B);
  for (const Weight& r : candidate_radii(s))
    if (offsets_cover(s, A, B, r)) return r;
  return Weight::infinity();
}

Weight hausdorff_via_offsets(const LawvereSpace& s, const PointSubset& A, const PointSubset& B) {
  require_nonempty(A, B);
  std::vector<Weight> cand = candidate_radii(s);
  int n = static_cast<int>(cand.size());
  Weight best = Weight::infinity();
#pragma omp parallel
  {
    Weight local = Weight::infinity();
#pragma omp for nowait
    for (int i = 0; i < n; ++i)
      if (cand[i] < local && offsets_cover(s, A, B, cand[i])) local = cand[i];
#pragma omp critical
    best = min(best, local);
  }
  return best;
}

namespace {

bool offset_families_interleaved(const LawvereSpace& s, const PointSubset& A, const PointSubset& B,
                                 const std::vector<Weight>& grid, const Weight& r) {
  for (const Weight& a : grid) {
    PointSubset fa = offset(s, A, a, OffsetDirection::Future);
    PointSubset fb = offset(s, B, a, OffsetDirection::Future);
    if (!subset_of(fa, offset(s, B, a + r, OffsetDirection::Future))) return false;
    if (!subset_of(fb, offset(s, A, a + r, OffsetDirection::Future))) return false;
  }
  return true;
}

}  // namespace

Weight offset_interleaving_distance_serial(const LawvereSpace& s, const PointSubset& A,
                                           const PointSubset& B) {
  require_nonempty(A, B);
  std::vector<Weight> cand = candidate_radii(s);
  for (const Weight& r : cand)
    if (offset_families_interleaved(s, A, B, cand, r)) return r;
  return Weight::infinity();
}

Weight offset_interleaving_distance(const LawvereSpace& s, const PointSubset& A, const PointSubset& B) {
  require_nonempty(A, B);
  std::vector<Weight> cand = candidate_radii(s);
  int n = static_cast<int>(cand.size());
  Weight best = Weight::infinity();
#pragma omp parallel
  {
    Weight local = Weight::infinity();
#pragma omp for nowait
    for (int i = 0; i < n; ++i)
      if (cand[i] < local && offset_families_interleaved(s, A, B, cand, cand[i])) local = cand[i];
#pragma omp critical
    best = min(best, local);
  }
  return best;
}

CatPtr underlying_category(const LawvereSpace& s) {
  CategoryBuilder b;
  int n = static_cast<int>(s.points.size());
  for (int i = 0; i < n; ++i) b.add_object(s.points[i]);
  std::vector<std::vector<int>> arrow(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!s.d(i, j).is_infinite())
        arrow[i][j] = b.add_morphism(s.points[i] + "->" + s.points[j], i, j);
  for (int i = 0; i < n; ++i) b.set_identity(i, arrow[i][i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (arrow[i][j] >= 0 && arrow[j][k] >= 0 && arrow[i][k] >= 0)
          b.set_composite(arrow[j][k], arrow[i][j], arrow[i][k]);
  return b.build();
}

}  // namespace wcat
