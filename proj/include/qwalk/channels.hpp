#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qwalk/common.hpp"
#include "qwalk/states.hpp"
#include "qwalk/walks.hpp"

namespace qwalk {

/// Completely positive trace-preserving map in Kraus form, with the
/// vectorized N^2 x N^2 matrix sum_i K_i (x) conj(K_i) built on demand
/// (row-major vec convention) for spectral analysis.
class Superoperator {
 public:
  static constexpr int kVectorCap = 64;

  static Superoperator from_kraus(std::vector<Matrix> kraus, int n_vertices,
                                  int n_chiralities);

  /// T(rho) = U rho U*.
  static Superoperator unitary(const UnitaryWalk& walk);

  /// T(rho) = sum_i p_i U_i rho U_i*, p_i > 0, sum p_i = 1.
  static Superoperator mixture(const std::vector<double>& weights,
                               const std::vector<const UnitaryWalk*>& walks);

  /// T(rho) = p sum_x P_x rho P_x + (1-p) U rho U* with site-basis
  /// projectors P_x = |x><x|: measurement with probability p, else a step
  /// of the unitary walk.
  static Superoperator measured(const UnitaryWalk& walk, double p);

  /// T(rho) = p Tr(rho) I/N + (1-p) U rho U*.
  static Superoperator depolarizing(const UnitaryWalk& walk, double p);

  int dimension() const { return dim_; }
  int n_vertices() const { return n_vertices_; }
  int n_chiralities() const { return n_chiralities_; }
  const std::vector<Matrix>& kraus() const { return kraus_; }
  bool has_vector_form() const { return dim_ <= kVectorCap; }

  /// One application to an arbitrary matrix (linear extension of the map).
  Matrix apply_matrix(const Matrix& x) const;

  /// t-fold application to a density matrix.
  DensityMatrix apply(const DensityMatrix& rho, long t = 1) const;

  const Matrix& vectorized() const;

 private:
  enum class Structure { generic, measured, depolarizing };

  std::vector<Matrix> kraus_;
  int dim_ = 0;
  int n_vertices_ = 0;
  int n_chiralities_ = 0;
  Structure structure_ = Structure::generic;
  double structure_p_ = 0.0;
  Matrix structure_u_;
  mutable std::shared_ptr<const Matrix> vec_;
};

/// Verify the trace-norm contraction property on random Hermitian inputs
/// (mixed signs, unconstrained trace).
bool contraction_check(const Superoperator& channel, int samples,
                       std::uint64_t seed);

struct PrimitivityCertificate {
  enum class Verdict { primitive, not_primitive, inconclusive };

  Verdict verdict = Verdict::inconclusive;
  double tol = 0.0;
  double spectral_radius = 0.0;
  /// Eigenvalues of the vectorized form within 1e-9 of the spectral radius.
  std::vector<Complex> peripheral;
  /// Algebraic count of eigenvalues within 1e-9 of 1 (the paper's rank).
  int one_rank = 0;
  /// Geometric multiplicity (independent eigenvectors at eigenvalue 1).
  int one_multiplicity = 0;
  double fixed_point_min_eig = 0.0;
  /// Traceless spectral radius: largest modulus after removing one copy of
  /// the eigenvalue 1.
  double eta = 0.0;
  /// First step at which each probe state became strictly positive; -1 if
  /// not reached within the cap. Basis projectors first, then random pures.
  std::vector<long> probe_hits;
};

std::string to_string(PrimitivityCertificate::Verdict v);

/// Spectral route (authoritative below the vectorization cap) plus probe
/// iteration evidence. Above the cap only probes run and the verdict is at
/// most inconclusive.
PrimitivityCertificate primitivity_check(const Superoperator& channel,
                                         long probe_cap = 64,
                                         double tol = 1e-6);

struct StationaryDensity {
  DensityMatrix rho;
  double residual = 0.0;
};

/// Fixed point T(rho) = rho, Hermitized and trace-normalized, residual in
/// trace norm below tol.
StationaryDensity stationary_density(const Superoperator& channel,
                                     double tol = 1e-10);

struct ChannelMixingResult {
  /// Max over candidates; nullopt for non-primitive channels or when a
  /// candidate failed to stabilize within the cap.
  std::optional<long> time;
  double eta = 0.0;
  std::vector<long> per_candidate;  // -1 when not reached within the cap
};

/// Smallest t per candidate with d(t') <= eps for all t' in [t, t + window],
/// d(t) = sum_x |<x|T^t rho|x> - <x|rho_st|x>|. No time averaging is needed
/// for primitive channels, but non-normality precludes a rigorous tail
/// bound, so the window check is a heuristic certificate; eta is reported
/// alongside.
ChannelMixingResult channel_mixing_time(
    const Superoperator& channel, const PrimitivityCertificate& cert,
    const StationaryDensity& stationary, double eps,
    const std::vector<DensityMatrix>& candidates, int window = 16,
    long step_cap = 20'000);

}  // namespace qwalk
