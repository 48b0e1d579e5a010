#pragma once

#include <optional>

#include "wcat/concrete.hpp"
#include "wcat/cospan.hpp"

namespace wcat {

// Finite sample of a line: rational positions, normalized to sorted unique.
using Grid = std::vector<Rat>;

// Thin category of the ordered grid: one morphism a -> b per a <= b, with
// weight b - a.
CatPtr grid_line_category(const Grid& grid);

// Cross-relation rules for the two-copy interleaving categories:
//   IEps       -- cross morphism when the position gap is at least eps
//   IEpsPlus   -- strict inequality variant
//   IAlphaEps  -- order-closure of the alternating chain alpha + n*eps
//   Observable -- strictly increasing crossings (gap > 0)
enum class GridMode { IEps, IEpsPlus, IAlphaEps, Observable };

// Two tagged copies of a grid joined by mode-specific cross relations; all
// weights are position differences. Copy-1 positions are its labels plus
// translation_q, and copy 1 may use its own grid.
EmbeddingPair grid_interleaving_category(const Grid& grid, GridMode mode, const Rat& eps = Rat(0),
                                         const Rat& alpha = Rat(0),
                                         const Rat& translation_q = Rat(0),
                                         const std::optional<Grid>& grid_q = std::nullopt);

// Pointwise finite-dimensional module over a grid: a dimension per point and
// a matrix per consecutive pair, over the field with `prime` elements.
struct GridModule {
  Grid grid;
  int prime = 2;
  std::vector<int> dims;
  std::vector<Mat> maps;
};

Report validate_grid_module(const GridModule& m);

// Dimension 1 on [birth, death), 0 elsewhere; identity maps inside the
// interval. Absent death means the interval never closes.
GridModule interval_module(const Grid& grid, const Rat& birth, const std::optional<Rat>& death,
                           int prime);

// IEps cospans for the given epsilons, in increasing order.
std::vector<EmbeddingPair> standard_family(const Grid& grid, std::vector<Rat> epsilons);

// The functor grid line -> matrix category determined by the module data.
Functor module_functor(const GridModule& m, const FinVectCategory& target);

// Object ids participating in at least one forward cross relation: left ids
// with an outgoing one, right ids with an incoming one. This is the usual
// window for Hausdorff measurements on truncated grids.
std::pair<std::vector<std::string>, std::vector<std::string>> interior_windows(const EmbeddingPair& e);

FamilyMember windowed_member(const EmbeddingPair& pair);

}  // namespace wcat
