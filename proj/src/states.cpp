#include "qwalk/states.hpp"

#include <cmath>

namespace qwalk {

namespace {

void check_dims(int n_vertices, int n_chiralities, Eigen::Index len,
                const char* what) {
  if (n_vertices < 1 || n_chiralities < 1)
    throw InputError(std::string(what) + ": dims must be positive");
  if (static_cast<Eigen::Index>(n_vertices) * n_chiralities != len)
    throw InputError(std::string(what) + ": length " + std::to_string(len) +
                     " does not match dims " + std::to_string(n_vertices) +
                     "x" + std::to_string(n_chiralities));
}

}  // namespace

WaveFunction::WaveFunction(Vector amplitudes, int n_vertices,
                           int n_chiralities)
    : amps_(std::move(amplitudes)),
      n_vertices_(n_vertices),
      n_chiralities_(n_chiralities) {
  check_dims(n_vertices, n_chiralities, amps_.size(), "WaveFunction");
  const double norm = amps_.norm();
  if (std::abs(norm - 1.0) > kRenormalizeTol)
    throw InputError("WaveFunction: norm " + std::to_string(norm) +
                     " too far from 1 to renormalize");
  amps_ /= norm;
}

WaveFunction WaveFunction::basis_state(int n_vertices, int n_chiralities,
                                       SiteIndex x) {
  if (x.vertex < 0 || x.vertex >= n_vertices || x.chirality < 0 ||
      x.chirality >= n_chiralities)
    throw InputError("basis_state: site index out of range");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(n_vertices) *
                          n_chiralities);
  v[static_cast<Eigen::Index>(x.vertex) * n_chiralities + x.chirality] = 1.0;
  return WaveFunction(std::move(v), n_vertices, n_chiralities);
}

Distribution::Distribution(RealVector probabilities, int n_vertices,
                           int n_chiralities)
    : probs_(std::move(probabilities)),
      n_vertices_(n_vertices),
      n_chiralities_(n_chiralities) {
  check_dims(n_vertices, n_chiralities, probs_.size(), "Distribution");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < probs_.size(); ++i) {
    if (probs_[i] < -kNormTol)
      throw InputError("Distribution: negative probability " +
                       std::to_string(probs_[i]));
    if (probs_[i] < 0.0) probs_[i] = 0.0;  // clamp roundoff dust
    sum += probs_[i];
  }
  if (std::abs(sum - 1.0) > kRenormalizeTol)
    throw InputError("Distribution: total mass " + std::to_string(sum) +
                     " too far from 1 to renormalize");
  probs_ /= sum;
}

DensityMatrix::DensityMatrix(Matrix rho, int n_vertices, int n_chiralities)
    : rho_(std::move(rho)),
      n_vertices_(n_vertices),
      n_chiralities_(n_chiralities) {
  if (rho_.rows() != rho_.cols())
    throw InputError("DensityMatrix: matrix must be square");
  check_dims(n_vertices, n_chiralities, rho_.rows(), "DensityMatrix");
  const double herm_err = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_err > 1e-12)
    throw InputError("DensityMatrix: not Hermitian (deviation " +
                     std::to_string(herm_err) + ")");
  rho_ = 0.5 * (rho_ + rho_.adjoint().eval());
  const double tr = rho_.trace().real();
  if (std::abs(tr - 1.0) > kRenormalizeTol)
    throw InputError("DensityMatrix: trace " + std::to_string(tr) +
                     " too far from 1 to renormalize");
  rho_ /= tr;
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho_,
                                           Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -1e-10)
    throw InputError("DensityMatrix: negative eigenvalue " +
                     std::to_string(min_eig));
}

DensityMatrix DensityMatrix::pure(const WaveFunction& psi) {
  const Vector& a = psi.amplitudes();
  return DensityMatrix(a * a.adjoint(), psi.n_vertices(),
                       psi.n_chiralities());
}

DensityMatrix DensityMatrix::maximally_mixed(int n_vertices,
                                             int n_chiralities) {
  const Eigen::Index n =
      static_cast<Eigen::Index>(n_vertices) * n_chiralities;
  return DensityMatrix(Matrix::Identity(n, n) / static_cast<double>(n),
                       n_vertices, n_chiralities);
}

DensityMatrix DensityMatrix::site_projector(int n_vertices, int n_chiralities,
                                            SiteIndex x) {
  return pure(WaveFunction::basis_state(n_vertices, n_chiralities, x));
}

Distribution DensityMatrix::site_distribution() const {
  return Distribution(rho_.diagonal().real(), n_vertices_, n_chiralities_);
}

HermitianOperator::HermitianOperator(Matrix h) : h_(std::move(h)) {
  if (h_.rows() != h_.cols())
    throw InputError("HermitianOperator: matrix must be square");
  const double herm_err = (h_ - h_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_err > 1e-12)
    throw InputError("HermitianOperator: not Hermitian (deviation " +
                     std::to_string(herm_err) + ")");
}

double overlap(const Vector& phi, const Vector& psi) {
  if (phi.size() != psi.size())
    throw InputError("overlap: dimension mismatch");
  return phi.cwiseProduct(psi).cwiseAbs().sum();
}

double overlap(const WaveFunction& phi, const WaveFunction& psi) {
  return overlap(phi.amplitudes(), psi.amplitudes());
}

double tv_distance(const RealVector& p, const RealVector& q) {
  if (p.size() != q.size())
    throw InputError("tv_distance: length mismatch");
  return (p - q).lpNorm<1>();
}

double tv_distance(const Distribution& p, const Distribution& q) {
  return tv_distance(p.probabilities(), q.probabilities());
}

double trace_norm(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian,
                                           Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

double operator_norm(const HermitianOperator& h, NormKind kind,
                     const DensityMatrix* mu) {
  switch (kind) {
    case NormKind::trace:
      if (mu) throw InputError("operator_norm: mu only valid for l2_mu");
      return trace_norm(h.matrix());
    case NormKind::l2:
      if (mu) throw InputError("operator_norm: mu only valid for l2_mu");
      // Tr H^2 = ||H||_F^2 for Hermitian H
      return h.matrix().norm();
    case NormKind::l2_mu: {
      if (!mu) throw InputError("operator_norm: l2_mu requires mu");
      if (mu->dimension() != h.dimension())
        throw InputError("operator_norm: mu dimension mismatch");
      const double v =
          (mu->matrix() * h.matrix() * h.matrix()).trace().real();
      return std::sqrt(std::max(0.0, v));
    }
  }
  throw InputError("operator_norm: unknown kind");
}

}  // namespace qwalk
