#pragma once

#include <array>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qwalk/common.hpp"
#include "qwalk/walks.hpp"

namespace qwalk {

/// Distinct eigenphases of a walk unitary with orthonormal eigenspace bases.
/// Cluster k occupies eigenbasis columns [offsets[k], offsets[k+1]).
struct SpectralDecomposition {
  std::vector<double> phases;  // sorted ascending in [0, 2pi)
  std::vector<int> multiplicities;
  std::vector<int> offsets;
  Matrix eigenbasis;
  double residual = 0.0;
  int n_vertices = 0;
  int n_chiralities = 0;

  int dimension() const { return static_cast<int>(eigenbasis.rows()); }
  int num_distinct() const { return static_cast<int>(phases.size()); }

  Matrix cluster_basis(int k, int max_cols = -1) const;
  Matrix projector(int k) const;
  Vector project(int k, const Vector& psi) const;
  /// All components P_k psi at once.
  std::vector<Vector> project_all(const Vector& psi) const;
};

/// Numeric spectral decomposition of a unitary. Phases are clustered on the
/// circle with cluster_tol; eigenvectors are re-orthonormalized per cluster.
SpectralDecomposition decompose(const Matrix& u, int n_vertices,
                                int n_chiralities,
                                double cluster_tol = 1e-8);
SpectralDecomposition decompose(const UnitaryWalk& walk,
                                double cluster_tol = 1e-8);

/// Smallest distance along the unit circle between two angles; in [0, pi].
double circular_distance(double beta1, double beta2);

/// Minimum circular gap between adjacent distinct phases (sorted input).
double min_phase_gap(const std::vector<double>& sorted_phases);

/// t_rel = 1 / min gap. Infinity when m = 1 (no gap to invert).
double relaxation_time_from_phases(const std::vector<double>& sorted_phases);
double relaxation_time(const SpectralDecomposition& spec);

/// Inverse of the minimum chordal distance |lambda_k - lambda_l|.
/// Informational only; the arc definition above is the operative one.
double chordal_relaxation_time(const std::vector<double>& sorted_phases);

enum class GraphFamily { cycle, hypercube, complete };

/// Exact eigen-systems of the three example walks, with generators able to
/// reproduce the printed eigenvectors on demand and to project states even
/// above the dense cap (hypercube uses a Walsh-Hadamard sector transform).
class ClosedFormSpectrum {
 public:
  GraphFamily family() const { return family_; }
  int n() const { return n_; }
  int n_vertices() const { return n_vertices_; }
  int n_chiralities() const { return n_chiralities_; }
  int dimension() const { return n_vertices_ * n_chiralities_; }
  int num_distinct() const { return static_cast<int>(phases_.size()); }
  const std::vector<double>& phases() const { return phases_; }
  const std::vector<int>& multiplicities() const { return multiplicities_; }

  /// First max_cols (all if max_cols < 0) orthonormal eigenvectors of phase
  /// cluster k, as columns. Requires the dense representation to fit.
  Matrix eigenvectors(int k, int max_cols = -1) const;

  /// Components P_k psi for every cluster.
  std::vector<Vector> project_all(const Vector& psi) const;

 private:
  friend ClosedFormSpectrum closed_form_spectrum(GraphFamily family, int n);

  GraphFamily family_ = GraphFamily::cycle;
  int n_ = 0;
  int n_vertices_ = 0;
  int n_chiralities_ = 0;
  std::vector<double> phases_;
  std::vector<int> multiplicities_;

  // cycle: members (k, branch) of each phase cluster
  std::vector<std::vector<std::pair<int, int>>> cycle_members_;

  // hypercube: cluster tags
  struct HyperTag {
    enum class Type { plus_one, minus_one, lambda } type = Type::lambda;
    int k = 0;      // Hamming weight for lambda clusters
    int sign = +1;  // +1 or -1 branch
  };
  std::vector<HyperTag> hyper_tags_;
};

ClosedFormSpectrum closed_form_spectrum(GraphFamily family, int n);

/// Uniform read access to spectral data for the mixing machinery, backed by
/// either a numeric decomposition or a closed form.
class SpectralAccess {
 public:
  explicit SpectralAccess(SpectralDecomposition d) : impl_(std::move(d)) {}
  explicit SpectralAccess(ClosedFormSpectrum c) : impl_(std::move(c)) {}

  int dimension() const;
  int num_distinct() const;
  const std::vector<double>& phases() const;
  const std::vector<int>& multiplicities() const;
  std::vector<Vector> project_all(const Vector& psi) const;
  Matrix eigenvectors(int k, int max_cols) const;
  double relaxation_time() const;

  const SpectralDecomposition* numeric() const {
    return std::get_if<SpectralDecomposition>(&impl_);
  }

 private:
  std::variant<SpectralDecomposition, ClosedFormSpectrum> impl_;
};

struct CrossValidationReport {
  int m_numeric = 0;
  int m_closed = 0;
  double max_phase_error = 0.0;
  bool multiplicities_match = false;
  double max_eigen_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Match numeric clusters to closed-form clusters (nearest neighbor on the
/// circle) and verify phases, multiplicities and the eigen-residuals of the
/// generated closed-form eigenvectors against the walk itself.
CrossValidationReport cross_validate(const SpectralDecomposition& numeric,
                                     const ClosedFormSpectrum& closed,
                                     const UnitaryWalk& walk, double tol);

}  // namespace qwalk
