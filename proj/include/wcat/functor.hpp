#pragma once

#include "wcat/category.hpp"

namespace wcat {

enum class WeightContract { None, Nonexpansive, WeightPreserving };

std::string contract_name(WeightContract c);
WeightContract parse_contract(const std::string& name);  // throws on unknown

// Functor between finite categories, stored as index maps.
struct Functor {
  CatPtr source, target;
  std::vector<int> object_map;    // by source object index
  std::vector<int> morphism_map;  // by source morphism index
  WeightContract contract = WeightContract::None;

  int obj(int o) const { return object_map[o]; }
  int mor(int m) const { return morphism_map[m]; }
};

Functor identity_functor(const CatPtr& c);

// Functor axioms (endpoints, identities, composites) plus the declared
// weight contract.
Report validate_functor(const Functor& F);

// Full, faithful, injective on objects, weight-preserving.
Report check_embedding(const Functor& F);

// G after F; the weight contract of the composite is the weaker of the two.
Functor compose_functors(const Functor& G, const Functor& F);

bool same_functor(const Functor& F, const Functor& G);

// For thin categories: the functor matching objects by id and morphisms by
// their endpoints. Throws if an object or morphism of `sub` has no image.
Functor thin_inclusion(const CatPtr& sub, const CatPtr& super);

// Natural transformation F => G with one target-category morphism per
// source object.
struct NatTrans {
  Functor F, G;
  std::vector<int> components;  // by source object index

  int at(int o) const { return components[o]; }
};

NatTrans identity_nat_trans(const Functor& F);

Report validate_nat_trans(const NatTrans& t);

}  // namespace wcat
