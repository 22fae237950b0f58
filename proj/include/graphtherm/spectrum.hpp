#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "graphtherm/graph.hpp"

namespace graphtherm {

/// One distinct Laplacian eigenvalue with its multiplicity.
struct SpectrumLevel {
  double energy = 0.0;
  int degeneracy = 0;
};

enum class SpectrumSource { Analytic, Numeric };

/// Relative tolerance for merging near-degenerate eigenvalues into levels.
/// Degeneracy counts feed the low-temperature formulas, so the grouping is
/// an explicit, reproducible parameter.
inline constexpr double kDefaultGroupTol = 1e-9;

/// Thrown when no closed-form spectrum exists; callers fall back to the
/// numeric path.
class UnsupportedFamilyError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Ascending Laplacian levels plus (optionally) an orthonormal eigenvector
/// matrix in the position basis. Columns are ordered by ascending energy,
/// so each level owns a contiguous column range. Immutable.
class Spectrum {
 public:
  Spectrum(std::vector<SpectrumLevel> levels, Eigen::MatrixXcd eigenvectors,
           SpectrumSource source);
  static Spectrum levels_only(std::vector<SpectrumLevel> levels,
                              SpectrumSource source);

  int dimension() const { return dimension_; }
  const std::vector<SpectrumLevel>& levels() const { return levels_; }
  int level_count() const { return static_cast<int>(levels_.size()); }
  /// First flat column index of level n.
  int level_offset(int n) const { return offsets_[n]; }
  /// Level index owning flat eigenvalue index k.
  int level_of(int k) const;
  /// Energy at flat index k.
  double energy_at(int k) const { return levels_[level_of(k)].energy; }
  double max_energy() const { return levels_.back().energy; }
  double energy_sum() const;
  double energy_square_sum() const;

  bool has_eigenvectors() const { return has_vectors_; }
  const Eigen::MatrixXcd& eigenvectors() const;
  /// |<j|e_k>|^2 as an N x N matrix (row j, column k).
  const Eigen::MatrixXd& site_weights() const;

  SpectrumSource source() const { return source_; }

 private:
  Spectrum() = default;

  std::vector<SpectrumLevel> levels_;
  std::vector<int> offsets_;
  Eigen::MatrixXcd vectors_;
  Eigen::MatrixXd site_weights_;
  int dimension_ = 0;
  bool has_vectors_ = false;
  SpectrumSource source_ = SpectrumSource::Numeric;
};

/// Closed-form spectrum for complete, cycle, path, complete-bipartite and
/// star graphs, and (by tensor composition) grids, torus grids, and
/// Cartesian products of supported factors. Circulant families carry
/// Fourier eigenvectors. Throws UnsupportedFamilyError otherwise.
Spectrum analytic_spectrum(const Graph& g);
bool has_analytic_spectrum(const Graph& g);

/// Dense symmetric eigendecomposition of L = D - A. Eigenvalues sorted
/// ascending; consecutive values within group_tol * max(1, E_max) merge
/// into one level whose energy is the group mean; an E_0 within group_tol
/// of zero is clamped to exactly zero. Requires a connected graph.
Spectrum numeric_spectrum(const Graph& g, double group_tol = kDefaultGroupTol);

enum class SpectrumMethod { Auto, Analytic, Numeric };

Spectrum make_spectrum(const Graph& g,
                       SpectrumMethod method = SpectrumMethod::Auto,
                       double group_tol = kDefaultGroupTol);

/// (E_1, g_1): energy and degeneracy of the second-lowest level.
std::pair<double, int> algebraic_connectivity(const Spectrum& s);

}  // namespace graphtherm
