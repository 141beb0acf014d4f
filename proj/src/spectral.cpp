#include "qwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qwalk {

namespace {

/// Thin orthonormal factor of a full-column-rank matrix.
Matrix thin_q(const Matrix& a) {
  Eigen::HouseholderQR<Matrix> qr(a);
  const auto& packed = qr.matrixQR();
  const double scale =
      std::max(1.0, packed.diagonal().cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < a.cols(); ++i)
    if (std::abs(packed(i, i)) < 1e-9 * scale)
      throw NumericError("orthonormalization: basis is rank deficient");
  return qr.householderQ() * Matrix::Identity(a.rows(), a.cols());
}

int popcount(unsigned v) { return __builtin_popcount(v); }

/// Orthonormal sum-zero (Helmert) vectors over the index set `support`,
/// embedded in dimension dim. Yields support.size() - 1 columns.
Matrix helmert_columns(int dim, const std::vector<int>& support) {
  const int p = static_cast<int>(support.size());
  Matrix out = Matrix::Zero(dim, std::max(0, p - 1));
  for (int a = 1; a < p; ++a) {
    const double norm = std::sqrt(static_cast<double>(a) * (a + 1));
    for (int b = 0; b < a; ++b) out(support[b], a - 1) = 1.0 / norm;
    out(support[a], a - 1) = -static_cast<double>(a) / norm;
  }
  return out;
}

/// In-place orthonormal Walsh-Hadamard transform (self-inverse).
void wht_inplace(Vector& x) {
  const Eigen::Index n = x.size();
  for (Eigen::Index len = 1; len < n; len <<= 1)
    for (Eigen::Index i = 0; i < n; i += (len << 1))
      for (Eigen::Index j = i; j < i + len; ++j) {
        const Complex a = x[j];
        const Complex b = x[j + len];
        x[j] = a + b;
        x[j + len] = a - b;
      }
  x /= std::sqrt(static_cast<double>(n));
}

/// Normalized lambda_k^{+/-} eigenvector of the sector matrix A_t.
Vector hypercube_sector_eigenvector(int n, unsigned t, int k, int sign) {
  const Complex x =
      Complex(0.0, sign * std::sqrt(static_cast<double>(k) / (n - k)));
  Vector u(n);
  for (int j = 0; j < n; ++j) u[j] = ((t >> j) & 1u) ? Complex(1.0) : x;
  return u / std::sqrt(2.0 * k);
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

double circular_distance(double beta1, double beta2) {
  const double d = std::fabs(wrap_angle(beta1) - wrap_angle(beta2));
  return std::min(d, kTwoPi - d);
}

double min_phase_gap(const std::vector<double>& sorted_phases) {
  const int m = static_cast<int>(sorted_phases.size());
  if (m < 2)
    throw InputError("min_phase_gap: need at least two distinct phases");
  double gap = circular_distance(sorted_phases.front(), sorted_phases.back());
  for (int i = 1; i < m; ++i)
    gap = std::min(gap, circular_distance(sorted_phases[i - 1],
                                          sorted_phases[i]));
  return gap;
}

double relaxation_time_from_phases(
    const std::vector<double>& sorted_phases) {
  if (sorted_phases.size() < 2)
    return std::numeric_limits<double>::infinity();
  return 1.0 / min_phase_gap(sorted_phases);
}

double relaxation_time(const SpectralDecomposition& spec) {
  return relaxation_time_from_phases(spec.phases);
}

double chordal_relaxation_time(const std::vector<double>& sorted_phases) {
  const int m = static_cast<int>(sorted_phases.size());
  if (m < 2) return std::numeric_limits<double>::infinity();
  double min_chord = std::numeric_limits<double>::infinity();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      min_chord = std::min(
          min_chord, std::abs(std::polar(1.0, sorted_phases[i]) -
                              std::polar(1.0, sorted_phases[j])));
  return 1.0 / min_chord;
}

Matrix SpectralDecomposition::cluster_basis(int k, int max_cols) const {
  const int begin = offsets[k];
  int cols = offsets[k + 1] - begin;
  if (max_cols >= 0) cols = std::min(cols, max_cols);
  return eigenbasis.middleCols(begin, cols);
}

Matrix SpectralDecomposition::projector(int k) const {
  const Matrix v = cluster_basis(k);
  return v * v.adjoint();
}

Vector SpectralDecomposition::project(int k, const Vector& psi) const {
  const auto v = eigenbasis.middleCols(offsets[k], offsets[k + 1] - offsets[k]);
  return v * (v.adjoint() * psi);
}

std::vector<Vector> SpectralDecomposition::project_all(
    const Vector& psi) const {
  if (psi.size() != eigenbasis.rows())
    throw InputError("project_all: dimension mismatch");
  std::vector<Vector> out;
  out.reserve(phases.size());
  for (int k = 0; k < num_distinct(); ++k) out.push_back(project(k, psi));
  return out;
}

SpectralDecomposition decompose(const Matrix& u, int n_vertices,
                                int n_chiralities, double cluster_tol) {
  if (u.rows() != u.cols()) throw InputError("decompose: matrix not square");
  if (cluster_tol <= 0.0)
    throw InputError("decompose: cluster_tol must be positive");
  const Eigen::Index n = u.rows();
  if (n > UnitaryWalk::kDenseCap)
    throw InputError("decompose: dimension above the dense cap");

  // U is normal, so it is jointly diagonalized by the commuting Hermitian
  // pair A = (U + U*)/2 and B = (U - U*)/2i. Diagonalize A, then split each
  // near-degenerate cosine group by B. This stays within Hermitian
  // eigensolvers, which are both faster and more accurate here than a
  // general complex Schur decomposition.
  const Matrix a = 0.5 * (u + u.adjoint());
  const Matrix b = (u - u.adjoint()) / Complex(0.0, 2.0);
  Eigen::SelfAdjointEigenSolver<Matrix> esa(a);
  if (esa.info() != Eigen::Success)
    throw NumericError("decompose: Hermitian eigensolver failed");
  const RealVector cosines = esa.eigenvalues();

  Matrix vectors = esa.eigenvectors();
  RealVector raw_phase(n);
  constexpr double kCosGap = 1e-9;
  Eigen::Index begin = 0;
  while (begin < n) {
    Eigen::Index end = begin + 1;
    while (end < n && cosines[end] - cosines[end - 1] <= kCosGap) ++end;
    const Eigen::Index r = end - begin;
    const double c_mean = cosines.segment(begin, r).mean();
    if (r == 1) {
      const Vector q = vectors.col(begin);
      const double s = q.dot(b * q).real();
      raw_phase[begin] = wrap_angle(std::atan2(s, c_mean));
    } else {
      const Matrix qg = vectors.middleCols(begin, r);
      Matrix bg = qg.adjoint() * b * qg;
      bg = 0.5 * (bg + bg.adjoint().eval());
      Eigen::SelfAdjointEigenSolver<Matrix> esb(bg);
      if (esb.info() != Eigen::Success)
        throw NumericError("decompose: Hermitian eigensolver failed");
      vectors.middleCols(begin, r) = qg * esb.eigenvectors();
      for (Eigen::Index j = 0; j < r; ++j)
        raw_phase[begin + j] =
            wrap_angle(std::atan2(esb.eigenvalues()[j], c_mean));
    }
    begin = end;
  }

  // Cluster phases on the circle: sort, split at gaps above tolerance,
  // then merge across the 0/2pi seam if needed.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return raw_phase[i] < raw_phase[j]; });
  std::vector<std::vector<int>> clusters;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (i == 0 || raw_phase[order[i]] - raw_phase[order[i - 1]] > cluster_tol)
      clusters.emplace_back();
    clusters.back().push_back(order[i]);
  }
  if (clusters.size() > 1 &&
      circular_distance(raw_phase[clusters.front().front()],
                        raw_phase[clusters.back().back()]) <= cluster_tol) {
    auto& first = clusters.front();
    first.insert(first.begin(), clusters.back().begin(),
                 clusters.back().end());
    clusters.pop_back();
  }

  struct Built {
    double phase;
    Matrix basis;
    double residual;
  };
  std::vector<Built> built;
  built.reserve(clusters.size());
  for (const auto& cl : clusters) {
    Matrix block(n, cl.size());
    for (std::size_t j = 0; j < cl.size(); ++j)
      block.col(j) = vectors.col(cl[j]);
    Matrix q = thin_q(block);
    const Matrix uq = u * q;
    const Complex rayleigh = (q.adjoint() * uq).trace() /
                             static_cast<double>(cl.size());
    const double phase = wrap_angle(std::arg(rayleigh));
    const double resid =
        (uq - std::polar(1.0, phase) * q).norm();
    built.push_back({phase, std::move(q), resid});
  }
  std::sort(built.begin(), built.end(),
            [](const Built& x, const Built& y) { return x.phase < y.phase; });

  SpectralDecomposition spec;
  spec.n_vertices = n_vertices;
  spec.n_chiralities = n_chiralities;
  spec.eigenbasis.resize(n, n);
  spec.offsets.push_back(0);
  for (auto& bl : built) {
    spec.phases.push_back(bl.phase);
    spec.multiplicities.push_back(static_cast<int>(bl.basis.cols()));
    spec.eigenbasis.middleCols(spec.offsets.back(), bl.basis.cols()) =
        bl.basis;
    spec.offsets.push_back(spec.offsets.back() +
                           static_cast<int>(bl.basis.cols()));
    spec.residual = std::max(spec.residual, bl.residual);
  }
  if (spec.residual > 1e-6)
    throw NumericError(
        "decompose: residual " + std::to_string(spec.residual) +
        " exceeds 1e-6; the input is not unitary to working accuracy");
  return spec;
}

SpectralDecomposition decompose(const UnitaryWalk& walk, double cluster_tol) {
  return decompose(walk.matrix(), walk.n_vertices(), walk.n_chiralities(),
                   cluster_tol);
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

namespace {

/// Cycle eigenvector (v_k otimes chi_k)/norm for one (k, branch) member.
Vector cycle_eigenvector(int n, int k, int branch) {
  const double theta = kTwoPi * k / n;
  const double root = std::sqrt(1.0 + std::sin(theta) * std::sin(theta));
  const Complex t(std::cos(theta) / std::sqrt(2.0),
                  branch * root / std::sqrt(2.0));
  const Complex c =
      1.0 - std::sqrt(2.0) * t * std::polar(1.0, -theta);
  Vector out(2 * n);
  const double norm = std::sqrt(n * (1.0 + std::norm(c)));
  for (int r = 0; r < n; ++r) {
    const Complex chi = std::polar(1.0, kTwoPi * k * r / n);
    out[2 * r] = c * chi / norm;
    out[2 * r + 1] = chi / norm;
  }
  return out;
}

double cycle_phase(int n, int k, int branch) {
  const double theta = kTwoPi * k / n;
  return wrap_angle(branch *
                    std::acos(std::cos(theta) / std::sqrt(2.0)));
}

/// Flattened matrix eigenvectors of the complete-graph walk, one cluster at
/// a time (0: +1, 1: +i, 2: -1, 3: -i), orthonormalized.
Matrix complete_cluster_basis(int n, int cluster) {
  const int dim = n * n;
  auto flat = [n](const Matrix& x) {
    Vector v(static_cast<Eigen::Index>(n) * n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) v[r * n + c] = x(r, c);
    return v;
  };
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  const Matrix helm = helmert_columns(n, all);  // n-1 sum-zero columns
  Matrix raw;
  switch (cluster) {
    case 0: {  // +1: symmetric with zero column sums
      raw.resize(dim, n * (n - 1) / 2);
      int col = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          Matrix x = Matrix::Zero(n, n);
          x(i, i) = x(j, j) = 1.0;
          x(i, j) = x(j, i) = -1.0;
          raw.col(col++) = flat(x);
        }
      break;
    }
    case 2: {  // -1: all-ones matrix plus antisymmetric zero-column-sum
      raw.resize(dim, 1 + (n - 1) * (n - 2) / 2);
      raw.col(0) = flat(Matrix::Constant(n, n, 1.0));
      int col = 1;
      for (int i = 0; i + 1 < n - 1; ++i)
        for (int j = i + 1; j < n - 1; ++j) {
          Vector wi = Vector::Zero(n), wj = Vector::Zero(n);
          wi[i] = 1.0; wi[n - 1] = -1.0;
          wj[j] = 1.0; wj[n - 1] = -1.0;
          const Matrix x = wi * wj.transpose() - wj * wi.transpose();
          raw.col(col++) = flat(x);
        }
      break;
    }
    case 1:
    case 3: {  // +i / -i: X_{vs} = r_v -+ i r_s with sum-zero r
      const Complex unit = (cluster == 1) ? Complex(0.0, -1.0)
                                          : Complex(0.0, 1.0);
      raw.resize(dim, n - 1);
      for (int a = 0; a < n - 1; ++a) {
        Matrix x(n, n);
        for (int v = 0; v < n; ++v)
          for (int s = 0; s < n; ++s)
            x(v, s) = helm(v, a) + unit * helm(s, a);
        raw.col(a) = flat(x);
      }
      break;
    }
    default:
      throw InputError("complete_cluster_basis: bad cluster");
  }
  return thin_q(raw);
}

}  // namespace

ClosedFormSpectrum closed_form_spectrum(GraphFamily family, int n) {
  ClosedFormSpectrum cf;
  cf.family_ = family;
  cf.n_ = n;
  switch (family) {
    case GraphFamily::cycle: {
      if (n < 3) throw InputError("closed form: cycle requires n >= 3");
      cf.n_vertices_ = n;
      cf.n_chiralities_ = 2;
      struct Entry {
        double phase;
        int k;
        int branch;
      };
      std::vector<Entry> entries;
      for (int k = 0; k < n; ++k)
        for (int branch : {+1, -1})
          entries.push_back({cycle_phase(n, k, branch), k, branch});
      std::sort(entries.begin(), entries.end(),
                [](const Entry& a, const Entry& b) {
                  return a.phase < b.phase;
                });
      for (const auto& e : entries) {
        if (cf.phases_.empty() || e.phase - cf.phases_.back() > 1e-12) {
          cf.phases_.push_back(e.phase);
          cf.multiplicities_.push_back(0);
          cf.cycle_members_.emplace_back();
        }
        cf.multiplicities_.back() += 1;
        cf.cycle_members_.back().emplace_back(e.k, e.branch);
      }
      break;
    }
    case GraphFamily::hypercube: {
      if (n < 2) throw InputError("closed form: hypercube requires n >= 2");
      if (n > 24) throw InputError("closed form: hypercube too large");
      cf.n_vertices_ = 1 << n;
      cf.n_chiralities_ = n;
      struct Entry {
        double phase;
        ClosedFormSpectrum::HyperTag tag;
        int mult;
      };
      std::vector<Entry> entries;
      using Type = ClosedFormSpectrum::HyperTag::Type;
      int plus_mult = 1 + (n - 1);
      int minus_mult = 1 + (n - 1);
      for (int k = 1; k <= n - 1; ++k) {
        const double c = binomial(n, k);
        plus_mult += static_cast<int>(c) * (k - 1);
        minus_mult += static_cast<int>(c) * (n - k - 1);
        const double re = 1.0 - 2.0 * k / n;
        const double im = 2.0 * std::sqrt(static_cast<double>(k) * (n - k)) / n;
        entries.push_back({wrap_angle(std::atan2(im, re)),
                           {Type::lambda, k, +1},
                           static_cast<int>(c)});
        entries.push_back({wrap_angle(std::atan2(-im, re)),
                           {Type::lambda, k, -1},
                           static_cast<int>(c)});
      }
      entries.push_back({0.0, {Type::plus_one, 0, 0}, plus_mult});
      entries.push_back({kPi, {Type::minus_one, 0, 0}, minus_mult});
      std::sort(entries.begin(), entries.end(),
                [](const Entry& a, const Entry& b) {
                  return a.phase < b.phase;
                });
      for (const auto& e : entries) {
        cf.phases_.push_back(e.phase);
        cf.multiplicities_.push_back(e.mult);
        cf.hyper_tags_.push_back(e.tag);
      }
      break;
    }
    case GraphFamily::complete: {
      if (n < 2) throw InputError("closed form: complete requires n >= 2");
      cf.n_vertices_ = n;
      cf.n_chiralities_ = n;
      cf.phases_ = {0.0, kPi / 2.0, kPi, 3.0 * kPi / 2.0};
      cf.multiplicities_ = {n * (n - 1) / 2, n - 1,
                            1 + (n - 1) * (n - 2) / 2, n - 1};
      break;
    }
  }
  const long total = std::accumulate(cf.multiplicities_.begin(),
                                     cf.multiplicities_.end(), 0L);
  if (total != static_cast<long>(cf.dimension()))
    throw NumericError("closed form: multiplicity bookkeeping error");
  return cf;
}

Matrix ClosedFormSpectrum::eigenvectors(int k, int max_cols) const {
  if (k < 0 || k >= num_distinct())
    throw InputError("eigenvectors: cluster index out of range");
  const int want =
      (max_cols < 0) ? multiplicities_[k] : std::min(max_cols,
                                                     multiplicities_[k]);
  switch (family_) {
    case GraphFamily::cycle: {
      Matrix out(dimension(), want);
      for (int j = 0; j < want; ++j) {
        const auto [kk, branch] = cycle_members_[k][j];
        out.col(j) = cycle_eigenvector(n_, kk, branch);
      }
      return out;
    }
    case GraphFamily::complete: {
      static const int order[4] = {0, 1, 2, 3};  // +1, +i, -1, -i by phase
      const Matrix basis = complete_cluster_basis(n_, order[k]);
      return basis.leftCols(want);
    }
    case GraphFamily::hypercube: {
      Matrix out(dimension(), want);
      int col = 0;
      const int nv = n_vertices_;
      const double chi_norm = std::sqrt(static_cast<double>(nv));
      auto emit = [&](unsigned t, const Vector& u) {
        if (col >= want) return;
        for (int v = 0; v < nv; ++v) {
          const double chi =
              (popcount(t & static_cast<unsigned>(v)) % 2 ? -1.0 : 1.0) /
              chi_norm;
          for (int j = 0; j < n_; ++j) out(v * n_ + j, col) = u[j] * chi;
        }
        ++col;
      };
      const auto& tag = hyper_tags_[k];
      using Type = HyperTag::Type;
      for (unsigned t = 0; t < static_cast<unsigned>(nv) && col < want; ++t) {
        const int w = popcount(t);
        if (tag.type == Type::lambda) {
          if (w == tag.k)
            emit(t, hypercube_sector_eigenvector(n_, t, w, tag.sign));
        } else {
          const bool plus = tag.type == Type::plus_one;
          if (w == 0) {
            if (plus)
              emit(t, Vector::Constant(n_, 1.0 / std::sqrt(double(n_))));
            else {
              std::vector<int> all(n_);
              std::iota(all.begin(), all.end(), 0);
              const Matrix h = helmert_columns(n_, all);
              for (int a = 0; a < h.cols() && col < want; ++a)
                emit(t, h.col(a));
            }
          } else if (w == n_) {
            if (!plus)
              emit(t, Vector::Constant(n_, 1.0 / std::sqrt(double(n_))));
            else {
              std::vector<int> all(n_);
              std::iota(all.begin(), all.end(), 0);
              const Matrix h = helmert_columns(n_, all);
              for (int a = 0; a < h.cols() && col < want; ++a)
                emit(t, h.col(a));
            }
          } else {
            std::vector<int> support;
            for (int j = 0; j < n_; ++j)
              if (((t >> j) & 1u) == (plus ? 1u : 0u)) support.push_back(j);
            const Matrix h = helmert_columns(n_, support);
            for (int a = 0; a < h.cols() && col < want; ++a)
              emit(t, h.col(a));
          }
        }
      }
      if (col != want)
        throw NumericError("eigenvectors: generator under-produced");
      return out;
    }
  }
  throw InputError("eigenvectors: unknown family");
}

std::vector<Vector> ClosedFormSpectrum::project_all(const Vector& psi) const {
  if (psi.size() != dimension())
    throw InputError("project_all: dimension mismatch");
  const int m = num_distinct();
  std::vector<Vector> out(m);

  if (family_ == GraphFamily::hypercube) {
    const int nv = n_vertices_;
    const int nc = n_chiralities_;
    // sector amplitudes via a Walsh-Hadamard transform per chirality
    Matrix sec(nv, nc);
    Vector col(nv);
    for (int j = 0; j < nc; ++j) {
      for (int v = 0; v < nv; ++v) col[v] = psi[v * nc + j];
      wht_inplace(col);
      sec.col(j) = col;
    }
    int idx_plus = -1, idx_minus = -1;
    std::vector<std::array<int, 2>> idx_lambda(nc, {-1, -1});
    using Type = HyperTag::Type;
    for (int c = 0; c < m; ++c) {
      const auto& tag = hyper_tags_[c];
      if (tag.type == Type::plus_one) idx_plus = c;
      else if (tag.type == Type::minus_one) idx_minus = c;
      else idx_lambda[tag.k][tag.sign > 0 ? 0 : 1] = c;
    }
    std::vector<Matrix> acc(m, Matrix::Zero(nv, nc));
    Vector w(nc), rest(nc);
    for (unsigned t = 0; t < static_cast<unsigned>(nv); ++t) {
      w = sec.row(t).transpose();
      const int k = popcount(t);
      if (k == 0 || k == nc) {
        const Complex mean = w.sum() / static_cast<double>(nc);
        const int flat_idx = (k == 0) ? idx_plus : idx_minus;
        const int rest_idx = (k == 0) ? idx_minus : idx_plus;
        acc[flat_idx].row(t).setConstant(mean);
        acc[rest_idx].row(t) = (w.array() - mean).matrix().transpose();
      } else {
        const Vector up = hypercube_sector_eigenvector(nc, t, k, +1);
        const Vector um = hypercube_sector_eigenvector(nc, t, k, -1);
        const Complex ap = up.dot(w);
        const Complex am = um.dot(w);
        acc[idx_lambda[k][0]].row(t) = (ap * up).transpose();
        acc[idx_lambda[k][1]].row(t) = (am * um).transpose();
        rest = w - ap * up - am * um;
        // the remainder splits by support: ones-bits carry the +1 part,
        // zero-bits the -1 part
        for (int j = 0; j < nc; ++j) {
          const bool one = (t >> j) & 1u;
          acc[one ? idx_plus : idx_minus](t, j) = rest[j];
          acc[one ? idx_minus : idx_plus](t, j) = 0.0;
        }
      }
    }
    for (int c = 0; c < m; ++c) {
      out[c].resize(dimension());
      for (int j = 0; j < nc; ++j) {
        col = acc[c].col(j);
        wht_inplace(col);
        for (int v = 0; v < nv; ++v) out[c][v * nc + j] = col[v];
      }
    }
    return out;
  }

  // cycle / complete: sizes are small, project through the dense generators
  for (int c = 0; c < m; ++c) {
    const Matrix basis = eigenvectors(c);
    out[c] = basis * (basis.adjoint() * psi);
  }
  return out;
}

// ---------------------------------------------------------------------------
// SpectralAccess
// ---------------------------------------------------------------------------

int SpectralAccess::dimension() const {
  return std::visit([](const auto& s) { return s.dimension(); }, impl_);
}

int SpectralAccess::num_distinct() const {
  return std::visit([](const auto& s) { return s.num_distinct(); }, impl_);
}

const std::vector<double>& SpectralAccess::phases() const {
  if (const auto* d = std::get_if<SpectralDecomposition>(&impl_))
    return d->phases;
  return std::get<ClosedFormSpectrum>(impl_).phases();
}

const std::vector<int>& SpectralAccess::multiplicities() const {
  if (const auto* d = std::get_if<SpectralDecomposition>(&impl_))
    return d->multiplicities;
  return std::get<ClosedFormSpectrum>(impl_).multiplicities();
}

std::vector<Vector> SpectralAccess::project_all(const Vector& psi) const {
  return std::visit([&](const auto& s) { return s.project_all(psi); },
                    impl_);
}

Matrix SpectralAccess::eigenvectors(int k, int max_cols) const {
  if (const auto* d = std::get_if<SpectralDecomposition>(&impl_))
    return d->cluster_basis(k, max_cols);
  return std::get<ClosedFormSpectrum>(impl_).eigenvectors(k, max_cols);
}

double SpectralAccess::relaxation_time() const {
  return relaxation_time_from_phases(phases());
}

// ---------------------------------------------------------------------------
// Cross validation
// ---------------------------------------------------------------------------

CrossValidationReport cross_validate(const SpectralDecomposition& numeric,
                                     const ClosedFormSpectrum& closed,
                                     const UnitaryWalk& walk, double tol) {
  if (numeric.dimension() != closed.dimension() ||
      walk.size() != closed.dimension())
    throw InputError("cross_validate: dimension mismatch");
  CrossValidationReport rep;
  rep.tolerance = tol;
  rep.m_numeric = numeric.num_distinct();
  rep.m_closed = closed.num_distinct();

  // nearest-neighbor phase matching on the circle
  bool bijective = rep.m_numeric == rep.m_closed;
  bool mults_ok = bijective;
  std::vector<bool> used(numeric.phases.size(), false);
  for (int j = 0; j < rep.m_closed; ++j) {
    int best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (int i = 0; i < rep.m_numeric; ++i) {
      const double d =
          circular_distance(closed.phases()[j], numeric.phases[i]);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    rep.max_phase_error = std::max(rep.max_phase_error, best_d);
    if (best >= 0) {
      if (used[best]) bijective = false;
      used[best] = true;
      if (numeric.multiplicities[best] != closed.multiplicities()[j])
        mults_ok = false;
    }
  }
  rep.multiplicities_match = bijective && mults_ok;

  // eigen-residuals of the generated closed-form eigenvectors against U
  Vector image;
  for (int j = 0; j < rep.m_closed; ++j) {
    const Matrix basis = closed.eigenvectors(j);
    const Complex lambda = std::polar(1.0, closed.phases()[j]);
    for (Eigen::Index c = 0; c < basis.cols(); ++c) {
      walk.apply(basis.col(c), image);
      rep.max_eigen_residual = std::max(
          rep.max_eigen_residual, (image - lambda * basis.col(c)).norm());
    }
  }

  rep.pass = rep.multiplicities_match && rep.max_phase_error <= tol &&
             rep.max_eigen_residual <= tol;
  return rep;
}

}  // namespace qwalk
