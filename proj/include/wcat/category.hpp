#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "wcat/report.hpp"
#include "wcat/weight.hpp"

namespace wcat {

struct Morphism {
  std::string id;
  int src = -1;
  int dst = -1;
};

// Finite category given by full tables (objects, morphisms, identities, a
// composition entry for every composable pair), with one weight per morphism.
// Unweighted uses simply ignore the weights (all-zero by default).
// Build through CategoryBuilder; instances are immutable afterwards.
class WeightedFinCategory {
 public:
  int object_count() const { return static_cast<int>(objects_.size()); }
  int morphism_count() const { return static_cast<int>(morphisms_.size()); }

  const std::string& object_id(int o) const { return objects_[o]; }
  const std::string& morphism_id(int m) const { return morphisms_[m].id; }
  int object_index(const std::string& id) const;    // -1 if absent
  int morphism_index(const std::string& id) const;  // -1 if absent

  int src(int m) const { return morphisms_[m].src; }
  int dst(int m) const { return morphisms_[m].dst; }
  int identity(int o) const { return identity_[o]; }
  // g after f; -1 when the pair is not composable or the table has no entry.
  int composite(int g, int f) const { return compose_[static_cast<std::size_t>(g) * morphisms_.size() + f]; }
  const Weight& weight(int m) const { return weights_[m]; }
  // Morphism indices from object a to object b, in insertion order.
  const std::vector<int>& hom(int a, int b) const { return hom_[static_cast<std::size_t>(a) * objects_.size() + b]; }

  bool same_tables(const WeightedFinCategory& o) const;

 private:
  friend class CategoryBuilder;
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::unordered_map<std::string, int> obj_index_;
  std::unordered_map<std::string, int> mor_index_;
  std::vector<int> identity_;
  std::vector<int> compose_;
  std::vector<Weight> weights_;
  std::vector<std::vector<int>> hom_;
};

using CatPtr = std::shared_ptr<const WeightedFinCategory>;

class CategoryBuilder {
 public:
  // Duplicate ids and out-of-range endpoints throw std::invalid_argument.
  int add_object(const std::string& id);
  int add_morphism(const std::string& id, int src, int dst, const Weight& w = Weight::zero());
  void set_identity(int obj, int mor);
  void set_composite(int g, int f, int gf);  // g after f equals gf
  int object_count() const { return static_cast<int>(c_.objects_.size()); }
  int morphism_count() const { return static_cast<int>(c_.morphisms_.size()); }
  CatPtr build();

 private:
  WeightedFinCategory c_;
  std::vector<std::tuple<int, int, int>> composites_;
};

// Category axioms: identities present and neutral, composition total on
// composable pairs with matching endpoints, associativity on all triples.
Report validate_category(const WeightedFinCategory& c);

// Weight axioms on top of a valid base: w(1_a) = 0 and w(g.f) <= w(g) + w(f).
Report validate_weighted(const WeightedFinCategory& c);

}  // namespace wcat
