#include "wcat/zoo.hpp"

#include <algorithm>
#include <stdexcept>

namespace wcat {
namespace {

Grid normalized(Grid grid) {
  if (grid.empty()) throw std::invalid_argument("grid must be nonempty");
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

using I128 = __int128;

std::int64_t floor_div(I128 n, I128 d) {
  I128 q = n / d, r = n % d;
  if (r != 0 && ((r < 0) != (d < 0))) --q;
  return static_cast<std::int64_t>(q);
}

// Integer range of n with lo <= alpha + n*eps <= hi; requires eps > 0.
std::pair<std::int64_t, std::int64_t> chain_range(const Rat& lo, const Rat& hi, const Rat& alpha,
                                                  const Rat& eps) {
  Rat dlo = lo - alpha, dhi = hi - alpha;
  I128 den = I128(dlo.den) * eps.num;  // eps.num > 0
  std::int64_t nmin = -floor_div(-(I128(dlo.num) * eps.den), den);
  den = I128(dhi.den) * eps.num;
  std::int64_t nmax = floor_div(I128(dhi.num) * eps.den, den);
  return {nmin, nmax};
}

}  // namespace

CatPtr grid_line_category(const Grid& grid_in) {
  Grid grid = normalized(grid_in);
  int n = static_cast<int>(grid.size());
  CategoryBuilder b;
  for (const Rat& a : grid) b.add_object(a.str());
  std::vector<std::vector<int>> arrow(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      arrow[i][j] = b.add_morphism(grid[i].str() + "<=" + grid[j].str(), i, j, Weight(grid[j] - grid[i]));
  for (int i = 0; i < n; ++i) b.set_identity(i, arrow[i][i]);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k) b.set_composite(arrow[j][k], arrow[i][j], arrow[i][k]);
  return b.build();
}

EmbeddingPair grid_interleaving_category(const Grid& grid_in, GridMode mode, const Rat& eps,
                                         const Rat& alpha, const Rat& translation_q,
                                         const std::optional<Grid>& grid_q) {
  if (eps < Rat(0)) throw std::invalid_argument("grid_interleaving_category: eps must be nonnegative");
  Grid g0 = normalized(grid_in);
  Grid g1 = normalized(grid_q.value_or(grid_in));
  int n0 = static_cast<int>(g0.size()), n1 = static_cast<int>(g1.size());
  int total = n0 + n1;

  // Node u < n0 is (g0[u], 0) at position g0[u]; node n0 + v is (g1[v], 1)
  // at position g1[v] + translation_q.
  std::vector<Rat> pos(total);
  std::vector<std::string> ids(total);
  for (int i = 0; i < n0; ++i) {
    pos[i] = g0[i];
    ids[i] = "(" + g0[i].str() + ",0)";
  }
  for (int j = 0; j < n1; ++j) {
    pos[n0 + j] = g1[j] + translation_q;
    ids[n0 + j] = "(" + g1[j].str() + ",1)";
  }
  auto side = [&](int u) { return u < n0 ? 0 : 1; };

  std::vector<std::vector<char>> rel(total, std::vector<char>(total, 0));
  for (int u = 0; u < total; ++u)
    for (int v = 0; v < total; ++v)
      if (side(u) == side(v) && pos[u] <= pos[v]) rel[u][v] = 1;

  if (mode == GridMode::IAlphaEps) {
    Rat lo = pos[0], hi = pos[0];
    for (const Rat& p : pos) {
      lo = std::min(lo, p);
      hi = std::max(hi, p);
    }
    auto on_side = [&](const Rat& p, int s) {
      for (int u = 0; u < total; ++u)
        if (side(u) == s && pos[u] == p) return u;
      return -1;
    };
    std::vector<Rat> chain;
    if (eps == Rat(0)) {
      if (alpha >= lo && alpha <= hi) chain.push_back(alpha);
    } else {
      auto [nmin, nmax] = chain_range(lo, hi, alpha, eps);
      for (std::int64_t n = nmin; n <= nmax; ++n) chain.push_back(alpha + Rat(n) * eps);
    }
    for (const Rat& p : chain)
      if (on_side(p, 0) < 0 || on_side(p, 1) < 0)
        throw std::invalid_argument("grid_interleaving_category: chain point " + p.str() +
                                    " is not on the grid");
    // Generators cross between consecutive chain points (or in place when
    // eps is zero), then the preorder is closed transitively.
    for (std::size_t k = 0; k < chain.size(); ++k) {
      const Rat& from = chain[k];
      Rat to = from + eps;
      if (eps != Rat(0) && (k + 1 >= chain.size() || !(chain[k + 1] == to))) continue;
      int a0 = on_side(from, 0), a1 = on_side(from, 1);
      int b0 = on_side(to, 0), b1 = on_side(to, 1);
      if (a0 >= 0 && b1 >= 0) rel[a0][b1] = 1;
      if (a1 >= 0 && b0 >= 0) rel[a1][b0] = 1;
    }
    for (int w = 0; w < total; ++w)
      for (int u = 0; u < total; ++u)
        if (rel[u][w])
          for (int v = 0; v < total; ++v)
            if (rel[w][v]) rel[u][v] = 1;
  } else {
    for (int u = 0; u < total; ++u)
      for (int v = 0; v < total; ++v) {
        if (side(u) == side(v)) continue;
        Rat gap = pos[v] - pos[u];
        bool cross = false;
        switch (mode) {
          case GridMode::IEps: cross = gap >= eps; break;
          case GridMode::IEpsPlus: cross = gap > eps; break;
          case GridMode::Observable: cross = gap > Rat(0); break;
          default: break;
        }
        if (cross) rel[u][v] = 1;
      }
  }

  CategoryBuilder b;
  for (int u = 0; u < total; ++u) b.add_object(ids[u]);
  std::vector<std::vector<int>> arrow(total, std::vector<int>(total, -1));
  for (int u = 0; u < total; ++u)
    for (int v = 0; v < total; ++v)
      if (rel[u][v]) arrow[u][v] = b.add_morphism(ids[u] + "<=" + ids[v], u, v, Weight(pos[v] - pos[u]));
  for (int u = 0; u < total; ++u) b.set_identity(u, arrow[u][u]);
  for (int u = 0; u < total; ++u)
    for (int v = 0; v < total; ++v)
      for (int w = 0; w < total; ++w)
        if (arrow[u][v] >= 0 && arrow[v][w] >= 0) {
          if (arrow[u][w] < 0)
            throw std::logic_error("grid_interleaving_category: relations are not transitive");
          b.set_composite(arrow[v][w], arrow[u][v], arrow[u][w]);
        }
  CatPtr amb = b.build();

  auto leg = [&](const Grid& g, int offset) {
    Functor f;
    f.source = grid_line_category(g);
    f.target = amb;
    f.contract = WeightContract::WeightPreserving;
    int n = static_cast<int>(g.size());
    for (int i = 0; i < n; ++i) f.object_map.push_back(offset + i);
    for (int m = 0; m < f.source->morphism_count(); ++m)
      f.morphism_map.push_back(arrow[offset + f.source->src(m)][offset + f.source->dst(m)]);
    return f;
  };
  return EmbeddingPair{leg(g0, 0), leg(g1, n0)};
}

Report validate_grid_module(const GridModule& m) {
  Report r;
  if (m.grid.empty()) r.fail("module grid is empty");
  if (!std::is_sorted(m.grid.begin(), m.grid.end()) ||
      std::adjacent_find(m.grid.begin(), m.grid.end()) != m.grid.end())
    r.fail("module grid is not sorted and distinct");
  if (m.prime != 2 && m.prime != 3) r.fail("unsupported field characteristic");
  if (m.dims.size() != m.grid.size()) r.fail("one dimension per grid point required");
  for (int d : m.dims)
    if (d < 0) r.fail("negative dimension");
  if (!r.ok) return r;
  if (m.maps.size() + 1 != m.grid.size()) {
    r.fail("one map per consecutive grid pair required");
    return r;
  }
  for (std::size_t i = 0; i < m.maps.size(); ++i)
    if (m.maps[i].rows != m.dims[i + 1] || m.maps[i].cols != m.dims[i])
      r.fail("map " + std::to_string(i) + " has the wrong shape");
  for (const Mat& mat : m.maps)
    for (int v : mat.a)
      if (v < 0 || v >= m.prime) r.fail("matrix entry outside the field");
  return r;
}

GridModule interval_module(const Grid& grid_in, const Rat& birth, const std::optional<Rat>& death,
                           int prime) {
  GridModule m;
  m.grid = normalized(grid_in);
  m.prime = prime;
  for (const Rat& a : m.grid) {
    bool alive = a >= birth && (!death || a < *death);
    m.dims.push_back(alive ? 1 : 0);
  }
  for (std::size_t i = 0; i + 1 < m.grid.size(); ++i) {
    if (m.dims[i] == 1 && m.dims[i + 1] == 1)
      m.maps.push_back(Mat::ident(1));
    else
      m.maps.push_back(Mat::zero(m.dims[i + 1], m.dims[i]));
  }
  Report r = validate_grid_module(m);
  if (!r.ok) throw std::invalid_argument("interval_module: " + r.violations.front());
  return m;
}

std::vector<EmbeddingPair> standard_family(const Grid& grid, std::vector<Rat> epsilons) {
  std::sort(epsilons.begin(), epsilons.end());
  epsilons.erase(std::unique(epsilons.begin(), epsilons.end()), epsilons.end());
  std::vector<EmbeddingPair> out;
  out.reserve(epsilons.size());
  for (const Rat& e : epsilons) out.push_back(grid_interleaving_category(grid, GridMode::IEps, e));
  return out;
}

Functor module_functor(const GridModule& m, const FinVectCategory& target) {
  Report r = validate_grid_module(m);
  if (!r.ok) throw std::invalid_argument("module_functor: " + r.violations.front());
  if (target.prime() != m.prime)
    throw std::invalid_argument("module_functor: field characteristic mismatch");
  Functor f;
  f.source = grid_line_category(m.grid);
  f.target = target.category();
  for (int d : m.dims) f.object_map.push_back(target.object_of(d));
  int n = static_cast<int>(m.grid.size());
  // Structure map for i <= j: the product of the consecutive maps.
  std::vector<std::vector<Mat>> span(n, std::vector<Mat>(n));
  for (int i = 0; i < n; ++i) {
    span[i][i] = Mat::ident(m.dims[i]);
    for (int j = i + 1; j < n; ++j) span[i][j] = mat_mul(m.maps[j - 1], span[i][j - 1], m.prime);
  }
  for (int mm = 0; mm < f.source->morphism_count(); ++mm)
    f.morphism_map.push_back(target.morphism_of(span[f.source->src(mm)][f.source->dst(mm)]));
  return f;
}

std::pair<std::vector<std::string>, std::vector<std::string>> interior_windows(const EmbeddingPair& e) {
  const auto& amb = *e.ambient();
  std::vector<std::string> left, right;
  for (int p = 0; p < e.left()->object_count(); ++p) {
    for (int q = 0; q < e.right()->object_count(); ++q)
      if (!amb.hom(e.leg_left.obj(p), e.leg_right.obj(q)).empty()) {
        left.push_back(e.left()->object_id(p));
        break;
      }
  }
  for (int q = 0; q < e.right()->object_count(); ++q) {
    for (int p = 0; p < e.left()->object_count(); ++p)
      if (!amb.hom(e.leg_left.obj(p), e.leg_right.obj(q)).empty()) {
        right.push_back(e.right()->object_id(q));
        break;
      }
  }
  return {std::move(left), std::move(right)};
}

FamilyMember windowed_member(const EmbeddingPair& pair) {
  auto [wl, wr] = interior_windows(pair);
  return FamilyMember{pair, std::move(wl), std::move(wr)};
}

}  // namespace wcat
