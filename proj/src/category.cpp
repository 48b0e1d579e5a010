#include "wcat/category.hpp"

#include <stdexcept>

namespace wcat {

int WeightedFinCategory::object_index(const std::string& id) const {
  auto it = obj_index_.find(id);
  return it == obj_index_.end() ? -1 : it->second;
}

int WeightedFinCategory::morphism_index(const std::string& id) const {
  auto it = mor_index_.find(id);
  return it == mor_index_.end() ? -1 : it->second;
}

bool WeightedFinCategory::same_tables(const WeightedFinCategory& o) const {
  if (objects_ != o.objects_) return false;
  if (morphisms_.size() != o.morphisms_.size()) return false;
  for (std::size_t i = 0; i < morphisms_.size(); ++i) {
    if (morphisms_[i].id != o.morphisms_[i].id || morphisms_[i].src != o.morphisms_[i].src ||
        morphisms_[i].dst != o.morphisms_[i].dst)
      return false;
    if (!(weights_[i] == o.weights_[i])) return false;
  }
  return identity_ == o.identity_ && compose_ == o.compose_;
}

int CategoryBuilder::add_object(const std::string& id) {
  if (c_.obj_index_.count(id)) throw std::invalid_argument("duplicate object id: " + id);
  int idx = static_cast<int>(c_.objects_.size());
  c_.objects_.push_back(id);
  c_.obj_index_[id] = idx;
  c_.identity_.push_back(-1);
  return idx;
}

int CategoryBuilder::add_morphism(const std::string& id, int src, int dst, const Weight& w) {
  if (c_.mor_index_.count(id)) throw std::invalid_argument("duplicate morphism id: " + id);
  if (src < 0 || src >= object_count() || dst < 0 || dst >= object_count())
    throw std::invalid_argument("morphism endpoint out of range: " + id);
  int idx = static_cast<int>(c_.morphisms_.size());
  c_.morphisms_.push_back({id, src, dst});
  c_.mor_index_[id] = idx;
  c_.weights_.push_back(w);
  return idx;
}

void CategoryBuilder::set_identity(int obj, int mor) {
  if (obj < 0 || obj >= object_count() || mor < 0 || mor >= morphism_count())
    throw std::invalid_argument("identity assignment out of range");
  c_.identity_[obj] = mor;
}

void CategoryBuilder::set_composite(int g, int f, int gf) {
  int m = morphism_count();
  if (g < 0 || g >= m || f < 0 || f >= m || gf < 0 || gf >= m)
    throw std::invalid_argument("composite assignment out of range");
  composites_.emplace_back(g, f, gf);
}

CatPtr CategoryBuilder::build() {
  std::size_t m = c_.morphisms_.size();
  std::size_t n = c_.objects_.size();
  c_.compose_.assign(m * m, -1);
  for (auto [g, f, gf] : composites_) c_.compose_[static_cast<std::size_t>(g) * m + f] = gf;
  c_.hom_.assign(n * n, {});
  for (std::size_t i = 0; i < m; ++i)
    c_.hom_[static_cast<std::size_t>(c_.morphisms_[i].src) * n + c_.morphisms_[i].dst].push_back(
        static_cast<int>(i));
  return std::make_shared<WeightedFinCategory>(std::move(c_));
}

Report validate_category(const WeightedFinCategory& c) {
  Report r;
  int n = c.object_count();
  int m = c.morphism_count();
  for (int o = 0; o < n; ++o) {
    int id = c.identity(o);
    if (id < 0) {
      r.fail("object " + c.object_id(o) + " has no identity morphism");
      continue;
    }
    if (c.src(id) != o || c.dst(id) != o)
      r.fail("identity of " + c.object_id(o) + " has wrong endpoints");
  }
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      int gf = c.composite(g, f);
      if (c.dst(f) != c.src(g)) {
        if (gf >= 0)
          r.fail("composition entry on non-composable pair (" + c.morphism_id(f) + ", " +
                 c.morphism_id(g) + ")");
        continue;
      }
      if (gf < 0) {
        r.fail("composition not total: missing " + c.morphism_id(g) + " after " + c.morphism_id(f));
        continue;
      }
      if (c.src(gf) != c.src(f) || c.dst(gf) != c.dst(g))
        r.fail("composite endpoints mismatch on (" + c.morphism_id(f) + ", " + c.morphism_id(g) + ")");
    }
  for (int o = 0; o < n && r.ok; ++o) {
    int id = c.identity(o);
    if (id < 0) continue;
    for (int f = 0; f < m; ++f) {
      if (c.dst(f) == o && c.composite(id, f) != f)
        r.fail("identity of " + c.object_id(o) + " not left-neutral on " + c.morphism_id(f));
      if (c.src(f) == o && c.composite(f, id) != f)
        r.fail("identity of " + c.object_id(o) + " not right-neutral on " + c.morphism_id(f));
    }
  }
  if (r.ok) {
    for (int f = 0; f < m; ++f)
      for (int g = 0; g < m; ++g) {
        if (c.dst(f) != c.src(g)) continue;
        int gf = c.composite(g, f);
        for (int h = 0; h < m; ++h) {
          if (c.dst(g) != c.src(h)) continue;
          int hg = c.composite(h, g);
          if (c.composite(h, gf) != c.composite(hg, f)) {
            r.fail("associativity fails on triple (" + c.morphism_id(f) + ", " + c.morphism_id(g) +
                   ", " + c.morphism_id(h) + ")");
            if (r.violations.size() > 16) return r;
          }
        }
      }
  }
  return r;
}

Report validate_weighted(const WeightedFinCategory& c) {
  Report r;
  for (int o = 0; o < c.object_count(); ++o) {
    int id = c.identity(o);
    if (id >= 0 && !(c.weight(id) == Weight::zero()))
      r.fail("identity weight nonzero on object " + c.object_id(o));
  }
  int m = c.morphism_count();
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      if (c.dst(f) != c.src(g)) continue;
      int gf = c.composite(g, f);
      if (gf < 0) continue;
      if (c.weight(gf) > c.weight(g) + c.weight(f))
        r.fail("subadditivity fails: w(" + c.morphism_id(gf) + ") > w(" + c.morphism_id(g) +
               ") + w(" + c.morphism_id(f) + ")");
    }
  return r;
}

}  // namespace wcat
