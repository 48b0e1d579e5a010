#include "wcat/concrete.hpp"

#include <algorithm>
#include <stdexcept>

namespace wcat {

Mat Mat::zero(int r, int c) {
  Mat m;
  m.rows = r;
  m.cols = c;
  m.a.assign(static_cast<std::size_t>(r) * c, 0);
  return m;
}

Mat Mat::ident(int n) {
  Mat m = zero(n, n);
  for (int i = 0; i < n; ++i) m.a[static_cast<std::size_t>(i) * n + i] = 1;
  return m;
}

Mat mat_mul(const Mat& A, const Mat& B, int p) {
  if (A.cols != B.rows) throw std::invalid_argument("matrix shape mismatch");
  Mat r = Mat::zero(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      int aik = A.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < B.cols; ++j)
        r.a[static_cast<std::size_t>(i) * B.cols + j] =
            (r.a[static_cast<std::size_t>(i) * B.cols + j] + aik * B.at(k, j)) % p;
    }
  return r;
}

namespace {

std::string fun_id(int m, int n, const std::vector<int>& table) {
  std::string id = "f" + std::to_string(m) + "to" + std::to_string(n) + "[";
  for (int v : table) id += static_cast<char>('0' + v);
  return id + "]";
}

std::string mat_id(const Mat& m) {
  std::string id = "m" + std::to_string(m.rows) + "x" + std::to_string(m.cols) + "[";
  for (int v : m.a) id += static_cast<char>('0' + v);
  return id + "]";
}

// All function tables [m] -> [n] in lexicographic order.
std::vector<std::vector<int>> all_tables(int m, int n) {
  std::vector<std::vector<int>> out;
  if (m == 0) {
    out.push_back({});
    return out;
  }
  if (n == 0) return out;
  std::vector<int> t(m, 0);
  while (true) {
    out.push_back(t);
    int i = m - 1;
    while (i >= 0 && t[i] == n - 1) t[i--] = 0;
    if (i < 0) break;
    ++t[i];
  }
  return out;
}

}  // namespace

FinSetCategory::FinSetCategory(std::vector<int> sizes) {
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  if (sizes.empty() || sizes.size() > 4) throw std::invalid_argument("finite-set category: need 1..4 sizes");
  for (int s : sizes)
    if (s < 0 || s > 6) throw std::invalid_argument("finite-set category: size out of range");
  sizes_ = sizes;
  CategoryBuilder b;
  for (int s : sizes) b.add_object("set" + std::to_string(s));
  int no = static_cast<int>(sizes.size());
  std::vector<std::vector<std::vector<int>>> homidx(no, std::vector<std::vector<int>>(no));
  for (int i = 0; i < no; ++i)
    for (int j = 0; j < no; ++j)
      for (const auto& t : all_tables(sizes[i], sizes[j])) {
        int idx = b.add_morphism(fun_id(sizes[i], sizes[j], t), i, j);
        tables_.push_back(t);
        homidx[i][j].push_back(idx);
      }
  for (int i = 0; i < no; ++i) {
    std::vector<int> ident(sizes[i]);
    for (int k = 0; k < sizes[i]; ++k) ident[k] = k;
    // identity table exists in homidx by construction; find by recomputing its id
    int id_idx = -1;
    for (int m : homidx[i][i])
      if (tables_[m] == ident) id_idx = m;
    b.set_identity(i, id_idx);
  }
  // total composition: (g after f)[x] = g[f[x]]
  std::vector<std::pair<int, int>> ends(tables_.size());
  {
    int k = 0;
    for (int i = 0; i < no; ++i)
      for (int j = 0; j < no; ++j)
        for (std::size_t t = 0; t < homidx[i][j].size(); ++t) ends[homidx[i][j][t]] = {i, j}, ++k;
  }
  auto find_mor = [&](int i, int j, const std::vector<int>& t) {
    for (int m : homidx[i][j])
      if (tables_[m] == t) return m;
    return -1;
  };
  for (std::size_t f = 0; f < tables_.size(); ++f)
    for (std::size_t g = 0; g < tables_.size(); ++g) {
      if (ends[f].second != ends[g].first) continue;
      std::vector<int> comp(tables_[f].size());
      for (std::size_t x = 0; x < comp.size(); ++x) comp[x] = tables_[g][tables_[f][x]];
      b.set_composite(static_cast<int>(g), static_cast<int>(f),
                      find_mor(ends[f].first, ends[g].second, comp));
    }
  cat_ = b.build();
}

int FinSetCategory::object_of(int size) const {
  return cat_->object_index("set" + std::to_string(size));
}

int FinSetCategory::morphism_of(int src_size, int dst_size, const std::vector<int>& table) const {
  return cat_->morphism_index(fun_id(src_size, dst_size, table));
}

FinVectCategory::FinVectCategory(int prime, int dim_cap) : prime_(prime) {
  if (prime != 2 && prime != 3) throw std::invalid_argument("vector-space category: prime must be 2 or 3");
  if (dim_cap < 1 || dim_cap > 2) throw std::invalid_argument("vector-space category: dim cap must be 1 or 2");
  CategoryBuilder b;
  for (int d = 0; d <= dim_cap; ++d) b.add_object("vec" + std::to_string(d));
  std::vector<std::vector<std::vector<int>>> homidx(dim_cap + 1,
                                                    std::vector<std::vector<int>>(dim_cap + 1));
  for (int c = 0; c <= dim_cap; ++c)
    for (int r = 0; r <= dim_cap; ++r) {
      // enumerate all r x c matrices in lexicographic entry order
      std::size_t cells = static_cast<std::size_t>(r) * c;
      Mat m = Mat::zero(r, c);
      while (true) {
        int idx = b.add_morphism(mat_id(m), c, r);
        mats_.push_back(m);
        homidx[c][r].push_back(idx);
        std::size_t i = cells;
        while (i > 0 && m.a[i - 1] == prime - 1) m.a[--i] = 0;
        if (i == 0) break;
        ++m.a[i - 1];
      }
    }
  for (int d = 0; d <= dim_cap; ++d) {
    Mat ident = Mat::ident(d);
    int id_idx = -1;
    for (int m : homidx[d][d])
      if (mats_[m] == ident) id_idx = m;
    b.set_identity(d, id_idx);
  }
  auto find_mor = [&](const Mat& m) {
    for (int k : homidx[m.cols][m.rows])
      if (mats_[k] == m) return k;
    return -1;
  };
  for (std::size_t f = 0; f < mats_.size(); ++f)
    for (std::size_t g = 0; g < mats_.size(); ++g) {
      if (mats_[f].rows != mats_[g].cols) continue;
      b.set_composite(static_cast<int>(g), static_cast<int>(f),
                      find_mor(mat_mul(mats_[g], mats_[f], prime)));
    }
  cat_ = b.build();
}

int FinVectCategory::object_of(int dim) const {
  return cat_->object_index("vec" + std::to_string(dim));
}

int FinVectCategory::morphism_of(const Mat& m) const { return cat_->morphism_index(mat_id(m)); }

}  // namespace wcat
