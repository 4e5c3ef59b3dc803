#pragma once

#include <vector>

namespace convlab {

/// Uniform 1D cell-centered grid with ghost layers.
struct Grid1D {
  double x_min = 0.0;
  double x_max = 1.0;
  int n_cells = 0;
  int n_ghost = 2;
  double dx = 0.0;

  /// Center of cell i (interior cells are 0..n_cells-1, ghosts negative
  /// and >= n_cells).
  double center(int i) const { return x_min + (i + 0.5) * dx; }
};

/// Throws ConfigError unless x_max > x_min and n_cells >= 5.
Grid1D build_grid(double x_min, double x_max, int n_cells);

/// Cell data with m components over interior + ghost cells.
/// Cell index runs over [-n_ghost, n_cells + n_ghost).
class Field {
public:
  Field() = default;
  Field(int n_cells, int components, int n_ghost = 2)
      : n_cells_(n_cells), m_(components), n_ghost_(n_ghost),
        data_((n_cells + 2 * n_ghost) * components, 0.0) {}

  double& operator()(int cell, int comp = 0) {
    return data_[(cell + n_ghost_) * m_ + comp];
  }
  double operator()(int cell, int comp = 0) const {
    return data_[(cell + n_ghost_) * m_ + comp];
  }

  int n_cells() const { return n_cells_; }
  int components() const { return m_; }
  int n_ghost() const { return n_ghost_; }

  /// True when every interior entry is finite.
  bool interior_finite() const;

  const std::vector<double>& raw() const { return data_; }

private:
  int n_cells_ = 0;
  int m_ = 1;
  int n_ghost_ = 2;
  std::vector<double> data_;
};

enum class BcKind { Periodic, Transmissive, Dirichlet };

struct BoundarySpec {
  BcKind kind = BcKind::Transmissive;
  std::vector<double> values;  // per component, Dirichlet only
};

/// Fills ghost cells. Periodic wraps (both sides must be periodic),
/// Transmissive copies the nearest interior cell, Dirichlet reflects so
/// the wall face value equals the prescribed value.
void apply_bc(Field& f, const BoundarySpec& left, const BoundarySpec& right);

} // namespace convlab
