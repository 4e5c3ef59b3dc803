#include "convlab/grid.hpp"

#include <cmath>
#include <string>

#include "convlab/errors.hpp"

namespace convlab {

Grid1D build_grid(double x_min, double x_max, int n_cells) {
  if (!(x_max > x_min))
    throw ConfigError("grid: x_max must exceed x_min");
  if (n_cells < 5)
    throw ConfigError("grid: need at least 5 cells, got " +
                      std::to_string(n_cells));
  Grid1D g;
  g.x_min = x_min;
  g.x_max = x_max;
  g.n_cells = n_cells;
  g.n_ghost = 2;
  g.dx = (x_max - x_min) / n_cells;
  return g;
}

bool Field::interior_finite() const {
  for (int i = 0; i < n_cells_; ++i)
    for (int c = 0; c < m_; ++c)
      if (!std::isfinite((*this)(i, c))) return false;
  return true;
}

void apply_bc(Field& f, const BoundarySpec& left, const BoundarySpec& right) {
  const int n = f.n_cells();
  const int ng = f.n_ghost();
  const int m = f.components();
  if ((left.kind == BcKind::Periodic) != (right.kind == BcKind::Periodic))
    throw ConfigError("periodic boundary requires both ends periodic");

  for (int c = 0; c < m; ++c) {
    if (left.kind == BcKind::Periodic) {
      for (int g = 1; g <= ng; ++g) {
        f(-g, c) = f(n - g, c);
        f(n - 1 + g, c) = f(g - 1, c);
      }
      continue;
    }
    switch (left.kind) {
      case BcKind::Transmissive:
        for (int g = 1; g <= ng; ++g) f(-g, c) = f(0, c);
        break;
      case BcKind::Dirichlet: {
        const double w = c < (int)left.values.size() ? left.values[c] : 0.0;
        for (int g = 1; g <= ng; ++g) f(-g, c) = 2.0 * w - f(g - 1, c);
        break;
      }
      case BcKind::Periodic: break;
    }
    switch (right.kind) {
      case BcKind::Transmissive:
        for (int g = 1; g <= ng; ++g) f(n - 1 + g, c) = f(n - 1, c);
        break;
      case BcKind::Dirichlet: {
        const double w = c < (int)right.values.size() ? right.values[c] : 0.0;
        for (int g = 1; g <= ng; ++g) f(n - 1 + g, c) = 2.0 * w - f(n - g, c);
        break;
      }
      case BcKind::Periodic: break;
    }
  }
}

} // namespace convlab
