#pragma once

#include <optional>

#include "qwalk/common.hpp"

namespace qwalk {

/// Absolute tolerance for "exactly normalized" checks.
inline constexpr double kNormTol = 1e-12;
/// Constructors silently renormalize anything off by at most this much and
/// reject anything worse, so accumulated roundoff is absorbed without
/// masking genuine bugs.
inline constexpr double kRenormalizeTol = 1e-6;

/// Position of the walking particle: a vertex and an internal coin state.
/// Flat index = vertex * n_chiralities + chirality (vertex-major everywhere).
struct SiteIndex {
  int vertex = 0;
  int chirality = 0;
};

/// Unit-norm complex amplitude vector over vertex x chirality sites.
class WaveFunction {
 public:
  WaveFunction(Vector amplitudes, int n_vertices, int n_chiralities);

  static WaveFunction basis_state(int n_vertices, int n_chiralities,
                                  SiteIndex x);

  const Vector& amplitudes() const { return amps_; }
  int n_vertices() const { return n_vertices_; }
  int n_chiralities() const { return n_chiralities_; }
  int size() const { return static_cast<int>(amps_.size()); }
  int flat(SiteIndex x) const { return x.vertex * n_chiralities_ + x.chirality; }
  Complex at(int vertex, int chirality) const {
    return amps_[vertex * n_chiralities_ + chirality];
  }

 private:
  Vector amps_;
  int n_vertices_;
  int n_chiralities_;
};

/// Probability distribution over sites (nonnegative, sums to one).
class Distribution {
 public:
  Distribution(RealVector probabilities, int n_vertices, int n_chiralities);

  const RealVector& probabilities() const { return probs_; }
  int n_vertices() const { return n_vertices_; }
  int n_chiralities() const { return n_chiralities_; }
  int size() const { return static_cast<int>(probs_.size()); }

 private:
  RealVector probs_;
  int n_vertices_;
  int n_chiralities_;
};

/// Hermitian, positive semidefinite, unit-trace operator on the site space.
class DensityMatrix {
 public:
  DensityMatrix(Matrix rho, int n_vertices, int n_chiralities);

  static DensityMatrix pure(const WaveFunction& psi);
  static DensityMatrix maximally_mixed(int n_vertices, int n_chiralities);
  /// Projector |x><x| onto one site.
  static DensityMatrix site_projector(int n_vertices, int n_chiralities,
                                      SiteIndex x);

  const Matrix& matrix() const { return rho_; }
  int dimension() const { return static_cast<int>(rho_.rows()); }
  int n_vertices() const { return n_vertices_; }
  int n_chiralities() const { return n_chiralities_; }
  /// Site measurement probabilities <x|rho|x>.
  Distribution site_distribution() const;

 private:
  Matrix rho_;
  int n_vertices_;
  int n_chiralities_;
};

/// Hermitian operator without positivity or trace constraints.
class HermitianOperator {
 public:
  explicit HermitianOperator(Matrix h);

  const Matrix& matrix() const { return h_; }
  int dimension() const { return static_cast<int>(h_.rows()); }

 private:
  Matrix h_;
};

/// Overlap Q(phi, psi) = sum_x |phi(x) psi(x)|. Phase-insensitive; in [0, 1]
/// for unit vectors by Cauchy-Schwarz.
double overlap(const WaveFunction& phi, const WaveFunction& psi);
double overlap(const Vector& phi, const Vector& psi);

/// Total variation distance sum_x |p(x) - q(x)|, in [0, 2] for distributions.
double tv_distance(const Distribution& p, const Distribution& q);
double tv_distance(const RealVector& p, const RealVector& q);

enum class NormKind { trace, l2, l2_mu };

/// trace: sum of |eigenvalues|; l2: sqrt(Tr H^2); l2_mu: sqrt(Tr(mu H^2)).
double operator_norm(const HermitianOperator& h, NormKind kind,
                     const DensityMatrix* mu = nullptr);

/// Trace norm of a Hermitian matrix (helper shared with the channel module).
double trace_norm(const Matrix& hermitian);

}  // namespace qwalk
