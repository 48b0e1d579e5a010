#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "testutil.hpp"
#include "wcat/lawvere.hpp"
#include "wcat/zoo.hpp"

using namespace wcat;
using namespace wcat::testutil;

namespace {

// Symmetric |x - y| metric on the given rational points.
LawvereSpace line_space(const std::vector<Rat>& xs) {
  LawvereSpace s;
  for (const Rat& x : xs) s.points.push_back(x.str());
  int n = static_cast<int>(xs.size());
  s.dist.assign(static_cast<std::size_t>(n) * n, Weight::zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat d = xs[i] <= xs[j] ? xs[j] - xs[i] : xs[i] - xs[j];
      s.dist[static_cast<std::size_t>(i) * n + j] = Weight(d);
    }
  return s;
}

}  // namespace

TEST_CASE("validation checks the diagonal and the triangle law") {
  LawvereSpace s = line_space({Rat(0), Rat(1), Rat(3)});
  CHECK(validate_lawvere(s).ok);
  SUBCASE("nonzero diagonal") {
    s.dist[0] = Weight(Rat(1));
    CHECK(!validate_lawvere(s).ok);
  }
  SUBCASE("triangle violation") {
    s.dist[0 * 3 + 2] = Weight(Rat(9));  // d(0,3) > d(0,1) + d(1,3)
    CHECK(!validate_lawvere(s).ok);
  }
  SUBCASE("matrix size") {
    s.dist.pop_back();
    CHECK(!validate_lawvere(s).ok);
  }
  SUBCASE("asymmetry and infinity are allowed") {
    LawvereSpace t;
    t.points = {"a", "b"};
    t.dist = {Weight::zero(), Weight::infinity(), Weight(Rat(1)), Weight::zero()};
    CHECK(validate_lawvere(t).ok);
  }
}

TEST_CASE("random closed spaces validate") {
  std::mt19937 rng(11);
  for (int i = 0; i < 25; ++i) {
    CHECK(validate_lawvere(random_space(rng, 2 + i % 7)).ok);
    CHECK(validate_lawvere(random_space(rng, 2 + i % 5, true)).ok);
  }
}

TEST_CASE("induced metric takes hom minima") {
  CatPtr c = grid_line_category({Rat(0), Rat(1), Rat(3)});
  LawvereSpace s = induced_metric(*c);
  CHECK(validate_lawvere(s).ok);
  CHECK(s.d(0, 2) == Weight(Rat(3)));
  CHECK(s.d(2, 0).is_infinite());
  CHECK(s.d(1, 1) == Weight::zero());
  CHECK(s.point_index("3") == 2);
  CHECK(s.point_index("7") == -1);
}

TEST_CASE("offsets grow with the radius and respect direction") {
  LawvereSpace s = induced_metric(*grid_line_category({Rat(0), Rat(1), Rat(3)}));
  PointSubset A = {0};  // the point 0
  CHECK(offset(s, A, Weight::zero(), OffsetDirection::Future) == PointSubset{0});
  CHECK(offset(s, A, Weight(Rat(1)), OffsetDirection::Future) == PointSubset{0, 1});
  CHECK(offset(s, A, Weight(Rat(3)), OffsetDirection::Future) == PointSubset{0, 1, 2});
  // nothing reaches 0 from the future side except itself
  CHECK(offset(s, A, Weight(Rat(100)), OffsetDirection::Past) == PointSubset{0});
  PointSubset top = {2};
  CHECK(offset(s, top, Weight(Rat(2)), OffsetDirection::Past) == PointSubset{1, 2});
}

TEST_CASE("hausdorff on the 0-1-3 line") {
  LawvereSpace sym = line_space({Rat(0), Rat(1), Rat(3)});
  PointSubset A = {0}, B = {2};
  CHECK(hausdorff(sym, A, B) == Weight(Rat(3)));
  CHECK(hausdorff_via_offsets(sym, A, B) == Weight(Rat(3)));
  CHECK(hausdorff(sym, {0, 1}, {1, 2}) == Weight(Rat(2)));
  CHECK(sym_hausdorff(sym, A, B) == Weight(Rat(3)));
  LawvereSpace directed = induced_metric(*grid_line_category({Rat(0), Rat(1), Rat(3)}));
  CHECK(hausdorff(directed, A, B) == Weight(Rat(3)));
  CHECK(hausdorff(directed, B, A).is_infinite());
  CHECK(sym_hausdorff(directed, A, B).is_infinite());
  CHECK_THROWS_AS(hausdorff(sym, {}, B), std::invalid_argument);
}

TEST_CASE("hausdorff equals its offset formulation on random spaces") {
  std::mt19937 rng(12);
  for (int i = 0; i < 40; ++i) {
    int n = 2 + i % 7;
    LawvereSpace s = random_space(rng, n);
    PointSubset A = random_subset(rng, n), B = random_subset(rng, n);
    CHECK(hausdorff(s, A, B) == hausdorff_via_offsets(s, A, B));
  }
}

TEST_CASE("hausdorff inclusion characterization") {
  // d_H(A, B) <= r exactly when A lies in the past r-offset of B and B lies
  // in the future r-offset of A
  std::mt19937 rng(13);
  for (int i = 0; i < 25; ++i) {
    int n = 2 + i % 6;
    LawvereSpace s = random_space(rng, n);
    PointSubset A = random_subset(rng, n), B = random_subset(rng, n);
    Weight h = hausdorff(s, A, B);
    if (h.is_infinite()) continue;
    PointSubset past = offset(s, B, h, OffsetDirection::Past);
    PointSubset future = offset(s, A, h, OffsetDirection::Future);
    CHECK(std::includes(past.begin(), past.end(), A.begin(), A.end()));
    CHECK(std::includes(future.begin(), future.end(), B.begin(), B.end()));
  }
}

TEST_CASE("hausdorff satisfies the triangle inequality") {
  std::mt19937 rng(14);
  for (int i = 0; i < 40; ++i) {
    int n = 2 + i % 7;
    LawvereSpace s = random_space(rng, n);
    PointSubset A = random_subset(rng, n), B = random_subset(rng, n), C = random_subset(rng, n);
    CHECK(hausdorff(s, A, C) <= hausdorff(s, A, B) + hausdorff(s, B, C));
    CHECK(sym_hausdorff(s, A, C) <= sym_hausdorff(s, A, B) + sym_hausdorff(s, B, C));
  }
}

TEST_CASE("hausdorff is zero on identical subsets") {
  std::mt19937 rng(15);
  LawvereSpace s = random_space(rng, 5);
  PointSubset A = {1, 3};
  CHECK(hausdorff(s, A, A) == Weight::zero());
}

TEST_CASE("offset interleaving distance matches hausdorff on symmetric spaces") {
  std::mt19937 rng(16);
  for (int i = 0; i < 25; ++i) {
    int n = 2 + i % 5;
    LawvereSpace s = random_space(rng, n, true, false);
    PointSubset A = random_subset(rng, n), B = random_subset(rng, n);
    CHECK(offset_interleaving_distance(s, A, B) == sym_hausdorff(s, A, B));
  }
  LawvereSpace line = line_space({Rat(0), Rat(1), Rat(3)});
  CHECK(offset_interleaving_distance(line, {0}, {2}) == Weight(Rat(3)));
}

TEST_CASE("underlying category keeps finite-distance arrows only") {
  LawvereSpace s = induced_metric(*grid_line_category({Rat(0), Rat(2)}));
  CatPtr c = underlying_category(s);
  CHECK(validate_category(*c).ok);
  CHECK(validate_weighted(*c).ok);
  CHECK(c->hom(0, 1).size() == 1);
  CHECK(c->hom(1, 0).empty());
  CHECK(c->weight(c->hom(0, 1).front()) == Weight::zero());
}
