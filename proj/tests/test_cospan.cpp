#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "testutil.hpp"
#include "wcat/concrete.hpp"
#include "wcat/cospan.hpp"
#include "wcat/zoo.hpp"

using namespace wcat;
using namespace wcat::testutil;

namespace {

Grid half_grid() { return {Rat(0), Rat(1, 2), Rat(1), Rat(3, 2), Rat(2)}; }

// F, G : grid line -> FinVect for the two interval modules used throughout.
struct ModulePair {
  FinVectCategory vect{2, 1};
  Functor F, G;
  ModulePair() {
    F = module_functor(interval_module(half_grid(), Rat(0), Rat(1), 2), vect);
    G = module_functor(interval_module(half_grid(), Rat(0), Rat(2), 2), vect);
  }
};

std::vector<FamilyMember> windowed_eps_family(const std::vector<Rat>& epsilons) {
  std::vector<FamilyMember> fam;
  for (const Rat& e : epsilons)
    fam.push_back(windowed_member(grid_interleaving_category(half_grid(), GridMode::IEps, e)));
  return fam;
}

}  // namespace

TEST_CASE("identity cospan validates and extends trivially") {
  CatPtr c = chain(3);
  EmbeddingPair e = identity_cospan(c);
  CHECK(validate_cospan(e).ok);
  CHECK(hausdorff_weight(e) == Weight::zero());
  CHECK(hausdorff_weight(e, true) == Weight::zero());

  Functor f = identity_functor(c);
  CHECK(check_interleaving_extension(e, f, f, f));

  SearchResult s = search_interleaving_extension(e, f, f);
  REQUIRE(s.status == SearchStatus::Found);
  CHECK(same_functor(*s.extension, f));
}

TEST_CASE("cospans with non-embedding legs fail validation") {
  CategoryBuilder b;
  b.add_object("a");
  b.add_object("b");
  int ia = b.add_morphism("ida", 0, 0);
  int ib = b.add_morphism("idb", 1, 1);
  b.set_identity(0, ia);
  b.set_identity(1, ib);
  b.set_composite(ia, ia, ia);
  b.set_composite(ib, ib, ib);
  CatPtr discrete = b.build();
  CatPtr pt = terminal();

  Functor collapse{discrete, pt, {0, 0}, {0, 0}, WeightContract::None};
  CHECK(validate_functor(collapse).ok);
  CHECK(!check_embedding(collapse).ok);
  EmbeddingPair bad{collapse, identity_functor(pt)};
  CHECK(!validate_cospan(bad).ok);

  // Legs landing in different ambient categories are rejected as well.
  EmbeddingPair split{identity_functor(pt), identity_functor(chain(2))};
  CHECK(!validate_cospan(split).ok);
}

TEST_CASE("pushout of two unit-shift grid cospans") {
  Grid g = {Rat(0), Rat(1), Rat(2)};
  EmbeddingPair first = grid_interleaving_category(g, GridMode::IEps, Rat(1));
  EmbeddingPair second = grid_interleaving_category(g, GridMode::IEps, Rat(1));
  PushoutResult po = pushout(first, second);
  const WeightedFinCategory& R = *po.pair.ambient();

  CHECK(R.object_count() == 9);
  CHECK(R.object_index("q:1") >= 0);
  CHECK(R.object_index("i:(0,0)") >= 0);
  CHECK(R.object_index("j:(2,1)") >= 0);

  CHECK(validate_category(R).ok);
  CHECK(validate_weighted(R).ok);
  CHECK(validate_cospan(po.pair).ok);
  CHECK(po.pair.left()->same_tables(*first.left()));
  CHECK(po.pair.right()->same_tables(*second.right()));

  // Crossing the two shifts is only possible from position 0 to position 2,
  // in either direction, at total cost 2.
  REQUIRE(po.classes.size() == 2);
  int forward_seen = 0, backward_seen = 0;
  for (const CrossClassInfo& c : po.classes) {
    (c.forward ? forward_seen : backward_seen) += 1;
    CHECK(R.weight(c.morphism) == Weight(Rat(2)));
    CHECK(c.members.size() == 1);
  }
  CHECK(forward_seen == 1);
  CHECK(backward_seen == 1);

  auto brute = brute_cross_minima(po, first, second);
  for (const CrossClassInfo& c : po.classes) {
    REQUIRE(brute.count(c.morphism) == 1);
    CHECK(brute.at(c.morphism) == R.weight(c.morphism));
  }

  // Middles with different shapes cannot be composed.
  EmbeddingPair other = grid_interleaving_category({Rat(0), Rat(1)}, GridMode::IEps, Rat(1));
  CHECK_THROWS_AS((void)pushout(first, other), std::invalid_argument);
}

TEST_CASE("pushout cross-class weights match brute force on random cospans") {
  std::mt19937 rng(4711);
  for (int iter = 0; iter < 30; ++iter) {
    RandomCospans rc = random_cospan_pair(rng);
    REQUIRE(validate_cospan(rc.first).ok);
    REQUIRE(validate_cospan(rc.second).ok);
    PushoutResult po = pushout(rc.first, rc.second);
    const WeightedFinCategory& R = *po.pair.ambient();

    CHECK(validate_category(R).ok);
    CHECK(validate_weighted(R).ok);
    CHECK(validate_cospan(po.pair).ok);

    auto brute = brute_cross_minima(po, rc.first, rc.second);
    std::set<int> class_mors;
    for (const CrossClassInfo& c : po.classes) {
      class_mors.insert(c.morphism);
      REQUIRE(brute.count(c.morphism) == 1);
      CHECK(brute.at(c.morphism) == R.weight(c.morphism));

      Weight member_min = Weight::infinity();
      for (const auto& [f, g] : c.members) {
        member_min = min(member_min, rc.first.ambient()->weight(f) + rc.second.ambient()->weight(g));
        int via = c.forward
                      ? R.composite(po.include_second.mor(g), po.include_first.mor(f))
                      : R.composite(po.include_first.mor(f), po.include_second.mor(g));
        CHECK(via == c.morphism);
      }
      CHECK(member_min == R.weight(c.morphism));
    }

    // Every result morphism is an inclusion image or a cross class.
    std::set<int> covered(class_mors);
    for (int m : po.include_first.morphism_map) covered.insert(m);
    for (int m : po.include_second.morphism_map) covered.insert(m);
    CHECK(static_cast<int>(covered.size()) == R.morphism_count());

    // Hausdorff weights compose subadditively across the pushout.
    CHECK(hausdorff_weight(po.pair) <= hausdorff_weight(rc.first) + hausdorff_weight(rc.second));
    CHECK(hausdorff_weight(po.pair, true) <=
          hausdorff_weight(rc.first, true) + hausdorff_weight(rc.second, true));
  }
}

TEST_CASE("hausdorff weight of grid cospans") {
  EmbeddingPair unit = grid_interleaving_category(half_grid(), GridMode::IEps, Rat(1));
  FamilyMember wm = windowed_member(unit);
  CHECK(hausdorff_weight(unit, false) == Weight::infinity());
  CHECK(hausdorff_weight(unit, false, wm.window_left, wm.window_right) == Weight(Rat(1)));

  EmbeddingPair flat = grid_interleaving_category(half_grid(), GridMode::IEps, Rat(0));
  FamilyMember wflat = windowed_member(flat);
  CHECK(hausdorff_weight(flat, false, wflat.window_left, wflat.window_right) == Weight::zero());

  EmbeddingPair two = grid_interleaving_category(half_grid(), GridMode::IEps, Rat(2));
  FamilyMember wtwo = windowed_member(two);
  CHECK(hausdorff_weight(two, false, wtwo.window_left, wtwo.window_right) == Weight(Rat(2)));

  std::vector<std::string> bogus = {"missing"};
  CHECK_THROWS_AS((void)hausdorff_weight(unit, false, bogus, std::nullopt), std::invalid_argument);
}

TEST_CASE("extension search separates the two interval modules") {
  ModulePair mp;
  std::vector<FamilyMember> fam =
      windowed_eps_family({Rat(0), Rat(1, 2), Rat(1), Rat(3, 2)});

  CHECK(search_interleaving_extension(fam[0].pair, mp.F, mp.G).status == SearchStatus::NotFound);
  CHECK(search_interleaving_extension(fam[1].pair, mp.F, mp.G).status == SearchStatus::NotFound);

  SearchResult hit = search_interleaving_extension(fam[2].pair, mp.F, mp.G);
  REQUIRE(hit.status == SearchStatus::Found);
  REQUIRE(hit.extension.has_value());
  CHECK(validate_functor(*hit.extension).ok);
  CHECK(check_interleaving_extension(fam[2].pair, mp.F, mp.G, *hit.extension));

  // Damaging the extension breaks the leg equations (or functoriality).
  Functor broken = *hit.extension;
  broken.object_map[0] = broken.object_map[0] == 0 ? 1 : 0;
  CHECK(!check_interleaving_extension(fam[2].pair, mp.F, mp.G, broken));

  // Mismatched endpoints are reported as usage errors, not as "not found".
  CHECK_THROWS_AS(
      (void)search_interleaving_extension(fam[2].pair, identity_functor(chain(2)), mp.G),
      std::invalid_argument);
}

TEST_CASE("interleaving distance over a windowed epsilon family") {
  ModulePair mp;
  std::vector<FamilyMember> fam =
      windowed_eps_family({Rat(0), Rat(1, 2), Rat(1), Rat(3, 2)});

  DistanceResult d = interleaving_distance(mp.F, mp.G, fam, false);
  CHECK(d.value == Weight(Rat(1)));
  REQUIRE(d.witness.has_value());
  CHECK(*d.witness == 2);
  CHECK(d.upper_bound);
  CHECK(d.bounds_exceeded.empty());
  REQUIRE(d.extension.has_value());
  CHECK(check_interleaving_extension(fam[2].pair, mp.F, mp.G, *d.extension));

  DistanceResult ds = interleaving_distance_serial(mp.F, mp.G, fam, false);
  CHECK(ds.value == d.value);
  CHECK(ds.witness == d.witness);

  SearchCaps tight;
  tight.generator_cap = 0;
  DistanceResult capped = interleaving_distance(mp.F, mp.G, fam, false, tight);
  CHECK(!capped.witness.has_value());
  CHECK(capped.value == Weight::infinity());
  CHECK(capped.bounds_exceeded.size() == fam.size());

  DistanceResult hmin = family_hausdorff_minimum(fam, false);
  CHECK(hmin.value == Weight::zero());
  REQUIRE(hmin.witness.has_value());
  CHECK(*hmin.witness == 0);
}

TEST_CASE("verified interleavings survive postcomposition") {
  ModulePair mp;
  FamilyMember member = windowed_eps_family({Rat(1)}).front();
  SearchResult hit = search_interleaving_extension(member.pair, mp.F, mp.G);
  REQUIRE(hit.status == SearchStatus::Found);

  Functor ident = identity_functor(mp.vect.category());
  CHECK(postcompose_interleaving(ident, member.pair, mp.F, mp.G, *hit.extension));

  // Collapse everything onto the zero space: still a functor, still commutes.
  CatPtr v = mp.vect.category();
  int zero_obj = mp.vect.object_of(0);
  Functor collapse;
  collapse.source = v;
  collapse.target = v;
  collapse.object_map.assign(v->object_count(), zero_obj);
  collapse.morphism_map.assign(v->morphism_count(), v->identity(zero_obj));
  REQUIRE(validate_functor(collapse).ok);
  CHECK(postcompose_interleaving(collapse, member.pair, mp.F, mp.G, *hit.extension));

  Functor broken = *hit.extension;
  broken.object_map[0] = broken.object_map[0] == 0 ? 1 : 0;
  CHECK_THROWS_AS((void)postcompose_interleaving(ident, member.pair, mp.F, mp.G, broken),
                  std::invalid_argument);
}

TEST_CASE("candidate cospan families between thin categories") {
  CatPtr P = chain(2);
  CatPtr Q = chain(2);
  std::vector<Weight> zero_one = {Weight::zero(), Weight(Rat(1))};

  std::vector<FamilyMember> fam = gh_candidate_family(P, Q, zero_one);
  REQUIRE(!fam.empty());
  for (const FamilyMember& m : fam) {
    CHECK(validate_cospan(m.pair).ok);
    CHECK(validate_weighted(*m.pair.ambient()).ok);
  }
  CHECK(family_hausdorff_minimum(fam, false).value == Weight::zero());

  std::vector<FamilyMember> ones = gh_candidate_family(P, Q, {Weight(Rat(1))});
  REQUIRE(!ones.empty());
  CHECK(family_hausdorff_minimum(ones, false).value == Weight(Rat(1)));

  CHECK(gh_candidate_family(P, Q, zero_one, 5).size() <= 5);
  CHECK_THROWS_AS((void)gh_candidate_family(parallel_pair_with_retraction(), Q, zero_one),
                  std::invalid_argument);
}
