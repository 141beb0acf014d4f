#include "qwalk/mixing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qwalk/rng.hpp"

namespace qwalk {

namespace {

constexpr long kCertificationCap = 5'000'000;

RealVector distribution_from_components(const std::vector<Vector>& comps) {
  RealVector p = RealVector::Zero(comps.front().size());
  for (const auto& c : comps) p += c.cwiseAbs2();
  return p;
}

double envelope_from_components(const std::vector<Vector>& comps,
                                const std::vector<double>& phases) {
  const int m = static_cast<int>(comps.size());
  std::vector<double> norms(m);
  for (int k = 0; k < m; ++k) norms[k] = comps[k].norm();
  double b = 0.0;
  for (int k = 0; k < m; ++k)
    for (int l = k + 1; l < m; ++l) {
      const double denom =
          std::abs(std::polar(1.0, phases[k] - phases[l]) - 1.0);
      b += 4.0 * norms[k] * norms[l] / denom;
    }
  return b;
}

long certified_mixing_time(const UnitaryWalk& walk,
                           const std::vector<Vector>& comps,
                           const std::vector<double>& phases,
                           const Vector& psi, double eps) {
  if (!(eps > 0.0 && eps < 2.0))
    throw InputError("mixing time: eps must lie in (0, 2)");
  const double envelope = envelope_from_components(comps, phases);
  if (envelope == 0.0) return 1;
  const double window_real = std::ceil(envelope / eps);
  if (window_real > static_cast<double>(kCertificationCap))
    throw NumericError("mixing time: certification window " +
                       std::to_string(window_real) +
                       " exceeds the step cap");
  const long window = std::max<long>(1, static_cast<long>(window_real));

  const RealVector p = distribution_from_components(comps);
  const Eigen::Index n = psi.size();
  Vector cur = psi;
  Vector next(n);
  RealVector sums = RealVector::Zero(n);
  long last_exceed = 0;
  for (long t = 1; t <= window; ++t) {
    // sums accumulates |psi_s(x)|^2 for s = 0 .. t-1
    const double inv_t = 1.0 / static_cast<double>(t);
    double d = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      sums[i] += std::norm(cur[i]);
      d += std::abs(sums[i] * inv_t - p[i]);
    }
    if (d > eps) last_exceed = t;
    if (t < window) {
      walk.apply(cur, next);
      cur.swap(next);
    }
  }
  return last_exceed + 1;
}

}  // namespace

Distribution averaged_distribution(const SpectralAccess& spec,
                                   const WaveFunction& psi) {
  if (spec.dimension() != psi.size())
    throw InputError("averaged_distribution: dimension mismatch");
  const auto comps = spec.project_all(psi.amplitudes());
  return Distribution(distribution_from_components(comps), psi.n_vertices(),
                      psi.n_chiralities());
}

double averaged_distance_from_components(const std::vector<Vector>& comps,
                                         const std::vector<double>& phases,
                                         long T) {
  if (T < 1) throw InputError("averaged_distance: T must be >= 1");
  const int m = static_cast<int>(comps.size());
  const Eigen::Index n = comps.front().size();
  Vector acc = Vector::Zero(n);
  for (int k = 0; k < m; ++k)
    for (int l = k + 1; l < m; ++l) {
      const double delta = phases[k] - phases[l];
      const Complex z = std::polar(1.0, delta);
      const Complex zT = std::polar(1.0, delta * static_cast<double>(T));
      const Complex denom = z - 1.0;
      const Complex g =
          (std::abs(denom) < 1e-300) ? Complex(static_cast<double>(T))
                                     : (zT - 1.0) / denom;
      acc.array() +=
          comps[k].array() * comps[l].array().conjugate() * g;
    }
  return 2.0 * acc.real().cwiseAbs().sum() / static_cast<double>(T);
}

double averaged_distance(const UnitaryWalk& walk, const SpectralAccess& spec,
                         const WaveFunction& psi, long T, DistanceMode mode,
                         long step_budget) {
  if (T < 1) throw InputError("averaged_distance: T must be >= 1");
  if (walk.size() != psi.size() || spec.dimension() != psi.size())
    throw InputError("averaged_distance: dimension mismatch");
  const auto comps = spec.project_all(psi.amplitudes());
  if (mode == DistanceMode::spectral)
    return averaged_distance_from_components(comps, spec.phases(), T);

  if (T > step_budget)
    throw InputError("averaged_distance: T exceeds the brute-force step "
                     "budget");
  const RealVector p = distribution_from_components(comps);
  const Eigen::Index n = psi.size();
  Vector cur = psi.amplitudes();
  Vector next(n);
  RealVector sums = RealVector::Zero(n);
  for (long t = 0; t < T; ++t) {
    sums += cur.cwiseAbs2();
    if (t + 1 < T) {
      walk.apply(cur, next);
      cur.swap(next);
    }
  }
  return (sums / static_cast<double>(T) - p).lpNorm<1>();
}

double distance_envelope(const SpectralAccess& spec, const WaveFunction& psi) {
  if (spec.dimension() != psi.size())
    throw InputError("distance_envelope: dimension mismatch");
  return envelope_from_components(spec.project_all(psi.amplitudes()),
                                  spec.phases());
}

long mixing_time_for_state(const UnitaryWalk& walk, const SpectralAccess& spec,
                           const WaveFunction& psi, double eps) {
  if (walk.size() != psi.size() || spec.dimension() != psi.size())
    throw InputError("mixing_time_for_state: dimension mismatch");
  return certified_mixing_time(walk, spec.project_all(psi.amplitudes()),
                               spec.phases(), psi.amplitudes(), eps);
}

std::vector<std::pair<WaveFunction, CandidateOutcome>> generate_candidates(
    const UnitaryWalk& walk, const SpectralAccess& spec,
    const CandidateFamily& family) {
  std::vector<std::pair<WaveFunction, CandidateOutcome>> out;
  const int n = walk.size();
  const int nv = walk.n_vertices();
  const int nc = walk.n_chiralities();
  switch (family.kind) {
    case CandidateFamily::Kind::basis: {
      std::vector<int> idx(n);
      std::iota(idx.begin(), idx.end(), 0);
      int count = std::min(family.count, n);
      if (count <= 0) count = n;
      if (count < n) {
        CounterRng rng(family.seed, /*stream=*/17);
        for (int i = 0; i < count; ++i)
          std::swap(idx[i],
                    idx[i + static_cast<int>(rng.uniform_int(n - i))]);
      }
      for (int i = 0; i < count; ++i) {
        const SiteIndex site{idx[i] / nc, idx[i] % nc};
        CandidateOutcome oc;
        oc.family = "basis";
        oc.label = "basis:v" + std::to_string(site.vertex) + "s" +
                   std::to_string(site.chirality);
        out.emplace_back(WaveFunction::basis_state(nv, nc, site),
                         std::move(oc));
      }
      return out;
    }
    case CandidateFamily::Kind::random: {
      CounterRng rng(family.seed, /*stream=*/23);
      for (int i = 0; i < family.count; ++i) {
        CandidateOutcome oc;
        oc.family = "random";
        oc.label = "random:" + std::to_string(i);
        out.emplace_back(WaveFunction(rng.unit_vector(n), nv, nc),
                         std::move(oc));
      }
      return out;
    }
    case CandidateFamily::Kind::eigenpair: {
      const auto& phases = spec.phases();
      const int m = static_cast<int>(phases.size());
      if (m < 2) return out;
      // adjacent pairs on the sorted circle, smallest gaps first
      std::vector<std::pair<double, std::pair<int, int>>> gaps;
      for (int i = 0; i < m; ++i) {
        const int j = (i + 1) % m;
        gaps.push_back({circular_distance(phases[i], phases[j]), {i, j}});
      }
      std::sort(gaps.begin(), gaps.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      const int n_gaps = std::min<int>(family.top_gaps,
                                       static_cast<int>(gaps.size()));
      const int per_side = std::max(1, family.count);
      for (int g = 0; g < n_gaps; ++g) {
        const auto [k, l] = gaps[g].second;
        const Matrix a = spec.eigenvectors(k, per_side);
        const Matrix b = spec.eigenvectors(l, per_side);
        for (Eigen::Index ia = 0; ia < a.cols(); ++ia)
          for (Eigen::Index ib = 0; ib < b.cols(); ++ib) {
            Vector v = (a.col(ia) + b.col(ib)) / std::sqrt(2.0);
            CandidateOutcome oc;
            oc.family = "eigenpair";
            oc.label = "eigenpair:g" + std::to_string(g) + ":a" +
                       std::to_string(ia) + "b" + std::to_string(ib);
            oc.overlap_q = overlap(a.col(ia), b.col(ib));
            oc.phase_gap = gaps[g].first;
            out.emplace_back(WaveFunction(std::move(v), nv, nc),
                             std::move(oc));
          }
      }
      return out;
    }
  }
  throw InputError("generate_candidates: unknown family kind");
}

MixingReport mixing_time_sup_estimate(
    const UnitaryWalk& walk, const SpectralAccess& spec,
    const std::vector<CandidateFamily>& families, double eps) {
  if (families.empty())
    throw InputError("mixing_time_sup_estimate: no candidate families");
  MixingReport report;
  report.epsilon = eps;
  for (const auto& family : families) {
    auto candidates = generate_candidates(walk, spec, family);
    for (auto& [psi, outcome] : candidates) {
      const auto comps = spec.project_all(psi.amplitudes());
      outcome.envelope = envelope_from_components(comps, spec.phases());
      outcome.mixing_time = certified_mixing_time(walk, comps, spec.phases(),
                                                  psi.amplitudes(), eps);
      auto it = report.family_max.find(outcome.family);
      if (it == report.family_max.end())
        report.family_max[outcome.family] = outcome.mixing_time;
      else
        it->second = std::max(it->second, outcome.mixing_time);
      report.sup_estimate =
          std::max(report.sup_estimate, outcome.mixing_time);
      report.candidates.push_back(std::move(outcome));
    }
  }
  const double t_rel = spec.relaxation_time();
  report.theorem1_bound =
      std::isfinite(t_rel)
          ? theorem1_upper_bound(spec.num_distinct(), t_rel, eps)
          : std::numeric_limits<double>::infinity();
  // Theorem 2 reading, only when its checkable hypotheses hold at this eps
  for (const auto& oc : report.candidates) {
    if (!oc.overlap_q || !oc.phase_gap) continue;
    const double q = *oc.overlap_q;
    const double gap = *oc.phase_gap;
    if (!(q > 0.0) || gap > 2.0 || eps > q / 80.0) continue;
    const double bound = theorem2_lower_bound(q, gap, eps);
    if (!report.theorem2 || bound > report.theorem2->bound)
      report.theorem2 = TheoremTwoReading{q, gap, eps, bound};
  }
  report.certified = true;  // every reported time carries its tail window
  return report;
}

double theorem1_upper_bound(int m, double t_rel, double eps) {
  if (m < 1) throw InputError("theorem1_upper_bound: m must be >= 1");
  if (!(t_rel > 0.0))
    throw InputError("theorem1_upper_bound: t_rel must be positive");
  if (!(eps > 0.0))
    throw InputError("theorem1_upper_bound: eps must be positive");
  return kTwoPi * std::log(2.0 * m) * t_rel / eps;
}

double theorem2_lower_bound(double q, double gap, double eps) {
  if (!(q > 0.0 && q <= 1.0 + 1e-12))
    throw InputError("theorem2_lower_bound: Q must lie in (0, 1]");
  if (!(gap > 0.0))
    throw InputError("theorem2_lower_bound: gap must be positive");
  if (gap > 2.0)
    throw InputError(
        "theorem2_lower_bound: hypothesis d(lambda, lambda') <= 2 violated");
  if (!(eps > 0.0))
    throw InputError("theorem2_lower_bound: eps must be positive");
  if (eps > q / 80.0)
    throw InputError(
        "theorem2_lower_bound: hypothesis eps <= Q/80 violated");
  return q / (8.0 * eps * gap);
}

double two_eigenvector_distance(double q, double gap, long T) {
  if (T < 1) throw InputError("two_eigenvector_distance: T must be >= 1");
  if (!(gap > 0.0 && gap < kTwoPi))
    throw InputError(
        "two_eigenvector_distance: gap must lie in (0, 2 pi)");
  if (!(q >= 0.0 && q <= 1.0 + 1e-12))
    throw InputError("two_eigenvector_distance: Q must lie in [0, 1]");
  const double dt = gap * static_cast<double>(T);
  const double value =
      1.0 - std::cos(dt) +
      std::sin(dt) * std::sin(gap) / (1.0 - std::cos(gap));
  return 0.5 / static_cast<double>(T) * std::abs(value) * q;
}

std::optional<long> classical_mixing_time(const RealMatrix& transition,
                                          double eps, long step_cap) {
  if (transition.rows() != transition.cols())
    throw InputError("classical_mixing_time: matrix must be square");
  const Eigen::Index n = transition.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (transition.row(i).minCoeff() < -1e-12)
      throw InputError("classical_mixing_time: negative entry");
    if (std::abs(transition.row(i).sum() - 1.0) > 1e-12)
      throw InputError("classical_mixing_time: row " + std::to_string(i) +
                       " does not sum to 1");
  }
  // stationary distribution: kernel of (P^T - I)
  Eigen::FullPivLU<RealMatrix> lu(transition.transpose() -
                                  RealMatrix::Identity(n, n));
  const RealMatrix kernel = lu.kernel();
  if (kernel.cols() != 1) return std::nullopt;  // no unique stationary law
  RealVector pi = kernel.col(0);
  const double total = pi.sum();
  if (std::abs(total) < 1e-12) return std::nullopt;
  pi /= total;
  if (pi.minCoeff() < -1e-9) return std::nullopt;

  RealMatrix powers = RealMatrix::Identity(n, n);
  for (long t = 0; t <= step_cap; ++t) {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
      worst = std::max(worst,
                       (powers.row(i).transpose() - pi).lpNorm<1>());
    if (worst <= eps) return t;
    powers = powers * transition;
  }
  return std::nullopt;
}

UnitaryWalk synthetic_real_eigenvector_unitary(
    const std::vector<double>& phases, std::uint64_t seed) {
  const int n = static_cast<int>(phases.size());
  if (n < 2)
    throw InputError("synthetic unitary: need at least two phases");
  CounterRng rng(seed, /*stream=*/31);
  RealMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.gaussian();
  const Eigen::HouseholderQR<RealMatrix> qr(g);
  const RealMatrix v = qr.householderQ() * RealMatrix::Identity(n, n);
  Vector d(n);
  for (int i = 0; i < n; ++i) d[i] = std::polar(1.0, phases[i]);
  const Matrix u = v.cast<Complex>() * d.asDiagonal() *
                   v.transpose().cast<Complex>();
  return UnitaryWalk::from_dense(u, n, 1);
}

}  // namespace qwalk
