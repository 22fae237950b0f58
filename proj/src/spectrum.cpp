#include "graphtherm/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

namespace graphtherm {

namespace {

void validate_levels(const std::vector<SpectrumLevel>& levels) {
  if (levels.empty()) throw std::invalid_argument("spectrum has no levels");
  if (levels.front().energy < -1e-12) {
    throw std::invalid_argument("Laplacian spectrum cannot be negative");
  }
  for (std::size_t n = 0; n < levels.size(); ++n) {
    if (levels[n].degeneracy < 1) {
      throw std::invalid_argument("level degeneracy must be positive");
    }
    if (n > 0 && !(levels[n].energy > levels[n - 1].energy)) {
      throw std::invalid_argument("levels must be strictly increasing");
    }
  }
}

std::vector<int> make_offsets(const std::vector<SpectrumLevel>& levels) {
  std::vector<int> offsets(levels.size() + 1, 0);
  for (std::size_t n = 0; n < levels.size(); ++n) {
    offsets[n + 1] = offsets[n] + levels[n].degeneracy;
  }
  return offsets;
}

}  // namespace

Spectrum::Spectrum(std::vector<SpectrumLevel> levels,
                   Eigen::MatrixXcd eigenvectors, SpectrumSource source)
    : levels_(std::move(levels)),
      vectors_(std::move(eigenvectors)),
      source_(source) {
  validate_levels(levels_);
  offsets_ = make_offsets(levels_);
  dimension_ = offsets_.back();
  if (vectors_.rows() != dimension_ || vectors_.cols() != dimension_) {
    throw std::invalid_argument("eigenvector matrix must be N x N");
  }
  has_vectors_ = true;
  site_weights_ = vectors_.cwiseAbs2();
}

Spectrum Spectrum::levels_only(std::vector<SpectrumLevel> levels,
                               SpectrumSource source) {
  validate_levels(levels);
  Spectrum s;
  s.levels_ = std::move(levels);
  s.offsets_ = make_offsets(s.levels_);
  s.dimension_ = s.offsets_.back();
  s.has_vectors_ = false;
  s.source_ = source;
  return s;
}

int Spectrum::level_of(int k) const {
  if (k < 0 || k >= dimension_) {
    throw std::invalid_argument("eigenvalue index out of range");
  }
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), k);
  return static_cast<int>(it - offsets_.begin()) - 1;
}

double Spectrum::energy_sum() const {
  double sum = 0.0;
  for (const auto& level : levels_) sum += level.energy * level.degeneracy;
  return sum;
}

double Spectrum::energy_square_sum() const {
  double sum = 0.0;
  for (const auto& level : levels_) {
    sum += level.energy * level.energy * level.degeneracy;
  }
  return sum;
}

const Eigen::MatrixXcd& Spectrum::eigenvectors() const {
  if (!has_vectors_) throw std::runtime_error("spectrum carries no eigenvectors");
  return vectors_;
}

const Eigen::MatrixXd& Spectrum::site_weights() const {
  if (!has_vectors_) throw std::runtime_error("spectrum carries no eigenvectors");
  return site_weights_;
}

namespace {

// Sorts columns by energy and merges near-degenerate neighbors into levels.
Spectrum group_columns(std::vector<double> energies, Eigen::MatrixXcd vectors,
                       SpectrumSource source, double group_tol) {
  const int n = static_cast<int>(energies.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return energies[a] < energies[b]; });

  Eigen::MatrixXcd sorted(vectors.rows(), vectors.cols());
  for (int k = 0; k < n; ++k) sorted.col(k) = vectors.col(order[k]);

  const double scale = std::max(1.0, energies[order.back()]);
  const double tol = group_tol * scale;

  std::vector<SpectrumLevel> levels;
  double group_sum = 0.0;
  int group_size = 0;
  double last = 0.0;
  for (int k = 0; k < n; ++k) {
    double e = energies[order[k]];
    if (group_size > 0 && e - last > tol) {
      levels.push_back({group_sum / group_size, group_size});
      group_sum = 0.0;
      group_size = 0;
    }
    group_sum += e;
    ++group_size;
    last = e;
  }
  levels.push_back({group_sum / group_size, group_size});
  if (std::abs(levels.front().energy) < group_tol) levels.front().energy = 0.0;
  return Spectrum(std::move(levels), std::move(sorted), source);
}

Eigen::VectorXcd fourier_column(int n, int k) {
  Eigen::VectorXcd col(n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j) {
    double phase = 2.0 * std::numbers::pi * k * j / n;
    col(j) = std::polar(norm, phase);
  }
  return col;
}

Spectrum analytic_complete(int n) {
  std::vector<SpectrumLevel> levels{{0.0, 1},
                                    {static_cast<double>(n), n - 1}};
  Eigen::MatrixXcd vectors(n, n);
  for (int k = 0; k < n; ++k) vectors.col(k) = fourier_column(n, k);
  return Spectrum(std::move(levels), std::move(vectors), SpectrumSource::Analytic);
}

Spectrum analytic_cycle(int n) {
  // E_k = 2[1 - cos(2 pi k / N)]; k and N-k are degenerate partners.
  std::vector<SpectrumLevel> levels;
  Eigen::MatrixXcd vectors(n, n);
  int col = 0;
  for (int k = 0; 2 * k <= n; ++k) {
    double energy =
        k == 0 ? 0.0 : 2.0 * (1.0 - std::cos(2.0 * std::numbers::pi * k / n));
    int degeneracy = (k == 0 || 2 * k == n) ? 1 : 2;
    levels.push_back({energy, degeneracy});
    vectors.col(col++) = fourier_column(n, k);
    if (degeneracy == 2) vectors.col(col++) = fourier_column(n, n - k);
  }
  return Spectrum(std::move(levels), std::move(vectors), SpectrumSource::Analytic);
}

Spectrum analytic_path(int n) {
  // Discrete-cosine eigenvectors of the path Laplacian (Neumann chain):
  // e_k(j) = c_k cos(pi k (2j+1) / 2N), nondegenerate spectrum.
  std::vector<SpectrumLevel> levels;
  Eigen::MatrixXcd vectors(n, n);
  for (int k = 0; k < n; ++k) {
    levels.push_back({2.0 * (1.0 - std::cos(std::numbers::pi * k / n)), 1});
    double norm = k == 0 ? std::sqrt(1.0 / n) : std::sqrt(2.0 / n);
    for (int j = 0; j < n; ++j) {
      vectors(j, k) = norm * std::cos(std::numbers::pi * k * (2 * j + 1) / (2.0 * n));
    }
  }
  return Spectrum(std::move(levels), std::move(vectors), SpectrumSource::Analytic);
}

// Levels {0, N1, N2, N1+N2}; the uniform ground state, zero-sum staircase
// vectors on each partite set, and the balanced two-block top vector.
Spectrum analytic_bipartite(int n1, int n2) {
  const int n = n1 + n2;
  struct Block {
    double energy;
    std::vector<Eigen::VectorXcd> columns;
  };
  std::vector<Block> blocks;

  Block ground{0.0, {}};
  ground.columns.push_back(Eigen::VectorXcd::Constant(n, 1.0 / std::sqrt(n)));
  blocks.push_back(std::move(ground));

  Block first{static_cast<double>(n1), {}};
  for (int m = 1; m <= n2 - 1; ++m) {
    // Supported on the second partite set (indices n1..n-1), zero sum.
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
    double norm = 1.0 / std::sqrt(static_cast<double>(m) * (m + 1));
    for (int k = 0; k < m; ++k) v(n1 + k) = norm;
    v(n1 + m) = -static_cast<double>(m) * norm;
    first.columns.push_back(std::move(v));
  }
  if (!first.columns.empty()) blocks.push_back(std::move(first));

  Block second{static_cast<double>(n2), {}};
  for (int m = 1; m <= n1 - 1; ++m) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
    double norm = 1.0 / std::sqrt(static_cast<double>(m) * (m + 1));
    for (int k = 0; k < m; ++k) v(k) = norm;
    v(m) = -static_cast<double>(m) * norm;
    second.columns.push_back(std::move(v));
  }
  if (!second.columns.empty()) blocks.push_back(std::move(second));

  Block top{static_cast<double>(n), {}};
  {
    Eigen::VectorXcd v(n);
    double a = std::sqrt(static_cast<double>(n2) / n1) / std::sqrt(n);
    double b = -std::sqrt(static_cast<double>(n1) / n2) / std::sqrt(n);
    for (int k = 0; k < n1; ++k) v(k) = a;
    for (int k = n1; k < n; ++k) v(k) = b;
    top.columns.push_back(std::move(v));
  }
  blocks.push_back(std::move(top));

  std::sort(blocks.begin(), blocks.end(),
            [](const Block& x, const Block& y) { return x.energy < y.energy; });

  std::vector<SpectrumLevel> levels;
  Eigen::MatrixXcd vectors(n, n);
  int col = 0;
  for (auto& block : blocks) {
    for (auto& column : block.columns) vectors.col(col++) = column;
    int deg = static_cast<int>(block.columns.size());
    if (!levels.empty() && levels.back().energy == block.energy) {
      levels.back().degeneracy += deg;  // N1 == N2 merges the middle levels
    } else {
      levels.push_back({block.energy, deg});
    }
  }
  return Spectrum(std::move(levels), std::move(vectors), SpectrumSource::Analytic);
}

// Tensor composition: energies add, eigenvectors are Kronecker products
// matching the (j,k) -> j*N2 + k vertex convention.
Spectrum analytic_product(const Spectrum& s1, const Spectrum& s2) {
  const int n1 = s1.dimension(), n2 = s2.dimension();
  const int n = n1 * n2;
  std::vector<double> energies(n);
  Eigen::MatrixXcd vectors(n, n);
  const auto& v1 = s1.eigenvectors();
  const auto& v2 = s2.eigenvectors();
  for (int a = 0; a < n1; ++a) {
    for (int b = 0; b < n2; ++b) {
      int col = a * n2 + b;
      energies[col] = s1.energy_at(a) + s2.energy_at(b);
      for (int j = 0; j < n1; ++j) {
        vectors.block(j * n2, col, n2, 1) = v1(j, a) * v2.col(b);
      }
    }
  }
  return group_columns(std::move(energies), std::move(vectors),
                       SpectrumSource::Analytic, kDefaultGroupTol);
}

Spectrum analytic_from_spec(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::Complete: return analytic_complete(spec.a);
    case FamilyKind::Cycle: return analytic_cycle(spec.a);
    case FamilyKind::Path: return analytic_path(spec.a);
    case FamilyKind::CompleteBipartite: return analytic_bipartite(spec.a, spec.b);
    case FamilyKind::Star: return analytic_bipartite(1, spec.a - 1);
    case FamilyKind::Grid:
      return analytic_product(analytic_path(spec.a), analytic_path(spec.b));
    case FamilyKind::TorusGrid:
      return analytic_product(analytic_cycle(spec.a), analytic_cycle(spec.b));
    case FamilyKind::Product:
      if (!spec.left || !spec.right) break;
      return analytic_product(analytic_from_spec(*spec.left),
                              analytic_from_spec(*spec.right));
    default: break;
  }
  throw UnsupportedFamilyError("no closed-form spectrum for family '" +
                               spec.to_string() + "'");
}

}  // namespace

Spectrum analytic_spectrum(const Graph& g) {
  if (!g.family()) {
    throw UnsupportedFamilyError("no closed-form spectrum for a custom graph");
  }
  return analytic_from_spec(*g.family());
}

bool has_analytic_spectrum(const Graph& g) {
  if (!g.family()) return false;
  struct Check {
    static bool supported(const FamilySpec& spec) {
      switch (spec.kind) {
        case FamilyKind::Complete:
        case FamilyKind::Cycle:
        case FamilyKind::Path:
        case FamilyKind::CompleteBipartite:
        case FamilyKind::Star:
        case FamilyKind::Grid:
        case FamilyKind::TorusGrid:
          return true;
        case FamilyKind::Product:
          return spec.left && spec.right && supported(*spec.left) &&
                 supported(*spec.right);
        default:
          return false;
      }
    }
  };
  return Check::supported(*g.family());
}

Spectrum numeric_spectrum(const Graph& g, double group_tol) {
  if (!(group_tol > 0)) throw std::invalid_argument("group_tol must be positive");
  if (!is_connected(g)) {
    throw std::invalid_argument("numeric_spectrum requires a connected graph");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g.laplacian_matrix());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigensolver failed to converge on " +
                             g.family_name() + " (N=" +
                             std::to_string(g.order()) + ")");
  }
  std::vector<double> energies(solver.eigenvalues().data(),
                               solver.eigenvalues().data() + g.order());
  return group_columns(std::move(energies),
                       solver.eigenvectors().cast<std::complex<double>>(),
                       SpectrumSource::Numeric, group_tol);
}

Spectrum make_spectrum(const Graph& g, SpectrumMethod method, double group_tol) {
  switch (method) {
    case SpectrumMethod::Analytic: return analytic_spectrum(g);
    case SpectrumMethod::Numeric: return numeric_spectrum(g, group_tol);
    case SpectrumMethod::Auto:
      if (has_analytic_spectrum(g)) return analytic_spectrum(g);
      return numeric_spectrum(g, group_tol);
  }
  throw std::invalid_argument("unknown spectrum method");
}

std::pair<double, int> algebraic_connectivity(const Spectrum& s) {
  if (s.level_count() < 2) {
    throw std::invalid_argument("algebraic connectivity needs >= 2 levels");
  }
  return {s.levels()[1].energy, s.levels()[1].degeneracy};
}

}  // namespace graphtherm
