#pragma once

#include "wcat/category.hpp"

namespace wcat {

// Dense matrix over the prime field F_p, row-major.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<int> a;

  int at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
  bool operator==(const Mat&) const = default;
  static Mat zero(int r, int c);
  static Mat ident(int n);
};

Mat mat_mul(const Mat& A, const Mat& B, int p);  // A*B mod p

// Category of finite sets with the given cardinalities and all functions
// between them, materialized as explicit tables (weights all zero).
// Hom-sets are ordered lexicographically by function table.
class FinSetCategory {
 public:
  explicit FinSetCategory(std::vector<int> sizes);  // each in [0,6], at most 4 distinct

  const CatPtr& category() const { return cat_; }
  int object_of(int size) const;
  int size_of(int obj) const { return sizes_[obj]; }
  int morphism_of(int src_size, int dst_size, const std::vector<int>& table) const;
  const std::vector<int>& table_of(int mor) const { return tables_[mor]; }

 private:
  CatPtr cat_;
  std::vector<int> sizes_;
  std::vector<std::vector<int>> tables_;
};

// Category of F_p vector spaces of dimension <= dim_cap with all linear maps
// as matrices, materialized as explicit tables (weights all zero).
// Hom-sets are ordered lexicographically by matrix entries.
class FinVectCategory {
 public:
  FinVectCategory(int prime, int dim_cap);  // prime in {2,3}, dim_cap in {1,2}

  const CatPtr& category() const { return cat_; }
  int prime() const { return prime_; }
  int object_of(int dim) const;
  int dim_of(int obj) const { return obj; }
  int morphism_of(const Mat& m) const;
  const Mat& matrix_of(int mor) const { return mats_[mor]; }

 private:
  CatPtr cat_;
  int prime_;
  std::vector<Mat> mats_;
};

}  // namespace wcat
