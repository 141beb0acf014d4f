#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qwalk/common.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/states.hpp"
#include "qwalk/walks.hpp"

namespace qwalk {

/// Time-averaged distribution p(x) = sum_k |(P_k psi)(x)|^2.
Distribution averaged_distribution(const SpectralAccess& spec,
                                   const WaveFunction& psi);

enum class DistanceMode { spectral, bruteforce };

inline constexpr long kDefaultStepBudget = 2'000'000;

/// d(T, psi): total variation distance between the T-step averaged
/// distribution and its limit. The spectral mode evaluates the exact
/// geometric partial sums over eigenvalue pairs; the brute-force mode steps
/// the walk and averages measurement probabilities. Both agree to roundoff.
double averaged_distance(const UnitaryWalk& walk, const SpectralAccess& spec,
                         const WaveFunction& psi, long T, DistanceMode mode,
                         long step_budget = kDefaultStepBudget);

/// Spectral-only evaluation from precomputed components P_k psi.
double averaged_distance_from_components(const std::vector<Vector>& comps,
                                         const std::vector<double>& phases,
                                         long T);

/// Envelope constant B with d(T) <= B / T for all T >= 1:
/// B = 2 sum_{k != l} |c_k||c_l| / |lambda_k conj(lambda_l) - 1| over ordered
/// pairs, |c_k| = ||P_k psi||. Zero iff psi lies in a single eigenspace.
double distance_envelope(const SpectralAccess& spec, const WaveFunction& psi);

/// Smallest T >= 1 with d(T') <= eps for all T' >= T. The envelope makes the
/// tail check finite: d(T') <= B/T' <= eps once T' > B/eps, so scanning
/// T' in [1, ceil(B/eps)] certifies the infinite tail.
long mixing_time_for_state(const UnitaryWalk& walk, const SpectralAccess& spec,
                           const WaveFunction& psi, double eps);

struct CandidateFamily {
  enum class Kind { basis, eigenpair, random };
  Kind kind = Kind::basis;
  int count = 8;       // basis/random: states drawn; eigenpair: generators per side
  int top_gaps = 2;    // eigenpair: how many smallest phase gaps to probe
  std::uint64_t seed = 1;

  static CandidateFamily basis(int count, std::uint64_t seed = 1) {
    return {Kind::basis, count, 0, seed};
  }
  static CandidateFamily eigenpair(int generators_per_side = 3,
                                   int top_gaps = 2) {
    return {Kind::eigenpair, generators_per_side, top_gaps, 0};
  }
  static CandidateFamily random(int count, std::uint64_t seed = 1) {
    return {Kind::random, count, 0, seed};
  }
};

struct CandidateOutcome {
  std::string family;
  std::string label;
  long mixing_time = 0;
  double envelope = 0.0;
  // eigenpair extras: overlap and phase gap of the originating pair
  std::optional<double> overlap_q;
  std::optional<double> phase_gap;
};

struct TheoremTwoReading {
  double q = 0.0;
  double gap = 0.0;
  double epsilon = 0.0;
  double bound = 0.0;
};

struct MixingReport {
  double epsilon = 0.0;
  std::vector<CandidateOutcome> candidates;
  long sup_estimate = 0;
  std::map<std::string, long> family_max;
  double theorem1_bound = 0.0;
  // present only when the Theorem 2 hypotheses hold at this epsilon
  std::optional<TheoremTwoReading> theorem2;
  bool certified = false;
};

std::vector<std::pair<WaveFunction, CandidateOutcome>> generate_candidates(
    const UnitaryWalk& walk, const SpectralAccess& spec,
    const CandidateFamily& family);

/// Certified lower estimate of the sup over initial states: the max of
/// mixing_time_for_state over every generated candidate, with per-family
/// maxima so the basis-restricted mixing time stays separately visible.
MixingReport mixing_time_sup_estimate(const UnitaryWalk& walk,
                                      const SpectralAccess& spec,
                                      const std::vector<CandidateFamily>& families,
                                      double eps);

/// Theorem 1: t_mix(eps) <= 2 pi ln(2m) t_rel / eps (natural log).
double theorem1_upper_bound(int m, double t_rel, double eps);

/// Theorem 2: t_mix(eps) >= Q / (8 eps Delta), valid for walks with real
/// eigenvectors when Delta <= 2 and eps <= Q/80.
double theorem2_lower_bound(double q, double gap, double eps);

/// Exact averaged distance of the two-eigenvector state (psi + psi')/sqrt2
/// on a real-eigenvector unitary:
/// d(T) = (1/2T) |1 - cos(DT) + sin(DT) sin(D) / (1 - cos(D))| Q.
double two_eigenvector_distance(double q, double gap, long T);

/// Classical baseline: smallest t with max-over-starts TV distance to the
/// stationary distribution <= eps; nullopt if the chain fails to converge
/// within the step cap (periodic chains never do).
std::optional<long> classical_mixing_time(const RealMatrix& transition,
                                          double eps,
                                          long step_cap = 100'000);

/// Synthetic unitary with a real orthogonal eigenbasis and prescribed
/// phases: U = V diag(e^{i beta}) V^T. The Theorem 2 real-eigenvector
/// hypothesis holds by construction.
UnitaryWalk synthetic_real_eigenvector_unitary(
    const std::vector<double>& phases, std::uint64_t seed);

}  // namespace qwalk
