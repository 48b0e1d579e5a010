// Compares the OpenMP kernels with their serial reference implementations:
// same inputs, asserted-equal outputs, wall-clock timings side by side.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "wcat/cospan.hpp"
#include "wcat/dynsys.hpp"
#include "wcat/zoo.hpp"

using namespace wcat;

namespace {

int failures = 0;

template <typename T>
void expect_equal(const T& a, const T& b, const std::string& what) {
  if (!(a == b)) {
    std::printf("MISMATCH: %s\n", what.c_str());
    ++failures;
  }
}

template <typename F>
double time_ms(F&& f, int reps) {
  auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

void report(const std::string& name, double serial_ms, double parallel_ms) {
  std::printf("%-28s serial %9.3f ms   parallel %9.3f ms   ratio %.2fx\n", name.c_str(),
              serial_ms, parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

// Random space with the triangle law enforced by min-plus closure.
LawvereSpace random_space(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> num(0, 12);
  std::uniform_int_distribution<int> den_pick(0, 2);
  std::uniform_int_distribution<int> inf_pick(0, 9);
  const int dens[3] = {1, 2, 4};
  LawvereSpace s;
  for (int i = 0; i < n; ++i) s.points.push_back("p" + std::to_string(i));
  s.dist.assign(static_cast<std::size_t>(n) * n, Weight::zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      s.dist[static_cast<std::size_t>(i) * n + j] =
          inf_pick(rng) == 0 ? Weight::infinity() : Weight(Rat(num(rng), dens[den_pick(rng)]));
    }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Weight via = s.d(i, k) + s.d(k, j);
        if (via <= s.d(i, j)) s.dist[static_cast<std::size_t>(i) * n + j] = via;
      }
  return s;
}

PointSubset random_subset(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> coin(0, 1);
  PointSubset a;
  for (int i = 0; i < n; ++i)
    if (coin(rng)) a.push_back(i);
  if (a.empty()) a.push_back(std::uniform_int_distribution<int>(0, n - 1)(rng));
  return a;
}

void bench_hausdorff() {
  std::mt19937 rng(20240901);
  const int n = 8;
  std::vector<LawvereSpace> spaces;
  std::vector<PointSubset> as, bs;
  for (int i = 0; i < 200; ++i) {
    spaces.push_back(random_space(rng, n));
    as.push_back(random_subset(rng, n));
    bs.push_back(random_subset(rng, n));
  }
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    expect_equal(hausdorff_serial(spaces[i], as[i], bs[i]), hausdorff(spaces[i], as[i], bs[i]),
                 "hausdorff instance " + std::to_string(i));
    expect_equal(hausdorff_via_offsets_serial(spaces[i], as[i], bs[i]),
                 hausdorff_via_offsets(spaces[i], as[i], bs[i]),
                 "hausdorff_via_offsets instance " + std::to_string(i));
    expect_equal(offset_interleaving_distance_serial(spaces[i], as[i], bs[i]),
                 offset_interleaving_distance(spaces[i], as[i], bs[i]),
                 "offset_interleaving instance " + std::to_string(i));
  }
  auto run_all = [&](auto&& f) {
    for (std::size_t i = 0; i < spaces.size(); ++i) f(spaces[i], as[i], bs[i]);
  };
  report(
      "hausdorff",
      time_ms([&] { run_all([](auto&&... x) { return hausdorff_serial(x...); }); }, 5),
      time_ms([&] { run_all([](auto&&... x) { return hausdorff(x...); }); }, 5));
  report(
      "hausdorff_via_offsets",
      time_ms([&] { run_all([](auto&&... x) { return hausdorff_via_offsets_serial(x...); }); }, 5),
      time_ms([&] { run_all([](auto&&... x) { return hausdorff_via_offsets(x...); }); }, 5));
  report("offset_interleaving",
         time_ms([&] { run_all([](auto&&... x) { return offset_interleaving_distance_serial(x...); }); }, 2),
         time_ms([&] { run_all([](auto&&... x) { return offset_interleaving_distance(x...); }); }, 2));
}

void bench_distance() {
  Grid grid = {Rat(0), Rat(1, 2), Rat(1), Rat(3, 2), Rat(2)};
  GridModule m0 = interval_module(grid, Rat(0), Rat(1), 2);
  GridModule m1 = interval_module(grid, Rat(0), Rat(2), 2);
  FinVectCategory target(2, 1);
  Functor F = module_functor(m0, target);
  Functor G = module_functor(m1, target);
  G.target = F.target;
  std::vector<FamilyMember> family;
  for (const Rat& eps : {Rat(0), Rat(1, 2), Rat(1), Rat(3, 2)}) {
    EmbeddingPair pair = grid_interleaving_category(grid, GridMode::IEps, eps);
    family.push_back({pair, std::nullopt, std::nullopt});
  }
  for (FamilyMember& m : family) {
    m.pair.leg_left.source = F.source;
    m.pair.leg_right.source = G.source;
  }
  DistanceResult serial = interleaving_distance_serial(F, G, family);
  DistanceResult parallel = interleaving_distance(F, G, family);
  expect_equal(serial.value, parallel.value, "interleaving_distance value");
  expect_equal(serial.witness.value_or(-1), parallel.witness.value_or(-1),
               "interleaving_distance witness");
  report(
      "interleaving_distance",
      time_ms([&] { interleaving_distance_serial(F, G, family); }, 3),
      time_ms([&] { interleaving_distance(F, G, family); }, 3));
}

DynSystem random_system(std::mt19937& rng, int n, const std::string& prefix) {
  DynSystem s;
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < n; ++i) s.carrier.push_back(prefix + std::to_string(i));
  for (int i = 0; i < n; ++i) s.map.push_back(pick(rng));
  return s;
}

void bench_shift_search() {
  std::mt19937 rng(20240902);
  // 5-on-5 instances can reach 5^5 * 5^5 candidate pairs, past the default
  // cap, so the benchmark raises it explicitly.
  ShiftSearchCaps caps;
  caps.max_pairs = 16000000;
  std::vector<std::pair<DynSystem, DynSystem>> cases;
  for (int i = 0; i < 6; ++i) {
    DynSystem x = random_system(rng, 5, "x");
    DynSystem y = x;
    for (std::size_t k = 0; k < y.carrier.size(); ++k) y.carrier[k] = "y" + std::to_string(k);
    cases.emplace_back(x, y);
    cases.emplace_back(x, random_system(rng, 4, "y"));
  }
  for (std::size_t i = 0; i < cases.size(); ++i) {
    auto serial = search_shift_equivalence_serial(cases[i].first, cases[i].second, 1, caps);
    auto parallel = search_shift_equivalence(cases[i].first, cases[i].second, 1, caps);
    expect_equal(serial.has_value(), parallel.has_value(),
                 "shift search hit instance " + std::to_string(i));
    if (serial && parallel) {
      expect_equal(serial->first, parallel->first, "shift search alpha " + std::to_string(i));
      expect_equal(serial->second, parallel->second, "shift search beta " + std::to_string(i));
    }
  }
  auto run_all = [&](auto&& f) {
    for (auto& c : cases) f(c.first, c.second, 1, caps);
  };
  report(
      "search_shift_equivalence",
      time_ms([&] { run_all([](auto&&... x) { return search_shift_equivalence_serial(x...); }); }, 2),
      time_ms([&] { run_all([](auto&&... x) { return search_shift_equivalence(x...); }); }, 2));
}

}  // namespace

int main() {
  bench_hausdorff();
  bench_distance();
  bench_shift_search();
  if (failures > 0) {
    std::printf("%d mismatch(es) between serial and parallel kernels\n", failures);
    return 1;
  }
  std::printf("all kernels agree with their serial references\n");
  return 0;
}
