#include "qwalk/walks.hpp"

#include <cmath>

namespace qwalk {

Coin::Coin(Matrix c) : c_(std::move(c)) {
  if (c_.rows() != c_.cols() || c_.rows() < 1)
    throw InputError("Coin: matrix must be square and nonempty");
  const Matrix gram = c_.adjoint() * c_;
  const double err =
      (gram - Matrix::Identity(c_.rows(), c_.cols())).cwiseAbs().maxCoeff();
  if (err > 1e-12)
    throw InputError("Coin: not unitary (residual " + std::to_string(err) +
                     ")");
}

Coin standard_coin(CoinKind kind, int d) {
  if (d < 1) throw InputError("standard_coin: d must be positive");
  switch (kind) {
    case CoinKind::hadamard: {
      if (d != 2) throw InputError("hadamard coin requires d = 2");
      Matrix c(2, 2);
      const double s = 1.0 / std::sqrt(2.0);
      c << s, s, -s, s;
      return Coin(c);
    }
    case CoinKind::grover: {
      Matrix c = Matrix::Constant(d, d, Complex(-2.0 / d, 0.0));
      c.diagonal().setConstant(Complex(1.0 - 2.0 / d, 0.0));
      return Coin(c);
    }
  }
  throw InputError("standard_coin: unknown kind");
}

UnitaryWalk UnitaryWalk::coined(LabelledGraph graph, Coin coin,
                                WalkStorage storage) {
  graph.validate();
  if (coin.dimension() != graph.degree)
    throw InputError("coined walk: coin dimension " +
                     std::to_string(coin.dimension()) +
                     " does not match graph degree " +
                     std::to_string(graph.degree));
  UnitaryWalk w;
  w.kind_ = Kind::coined;
  w.n_vertices_ = graph.n_vertices;
  w.n_chiralities_ = graph.degree;
  w.coin_ = coin.matrix();
  const int d = graph.degree;
  w.labels_.resize(d);
  w.inv_labels_.resize(d);
  for (int s = 0; s < d; ++s) {
    w.labels_[s] = graph.label_permutation(s);
    w.inv_labels_[s] = graph.inverse_label_permutation(s);
  }
  const long n = static_cast<long>(w.n_vertices_) * d;
  const bool dense = storage == WalkStorage::dense ||
                     (storage == WalkStorage::automatic && n <= kDenseCap);
  if (dense) {
    if (n > kDenseCap && storage == WalkStorage::dense)
      throw InputError("coined walk: dense storage requested above cap");
    Matrix u = Matrix::Zero(n, n);
    for (int v = 0; v < w.n_vertices_; ++v)
      for (int s = 0; s < d; ++s)
        for (int sp = 0; sp < d; ++sp)
          u(static_cast<long>(w.labels_[sp][v]) * d + sp,
            static_cast<long>(v) * d + s) = w.coin_(sp, s);
    w.u_ = std::move(u);
  }
  w.graph_ = std::move(graph);
  return w;
}

UnitaryWalk UnitaryWalk::complete_graph(int n) {
  if (n < 2) throw InputError("complete graph walk requires n >= 2");
  const long dim = static_cast<long>(n) * n;
  if (dim > kDenseCap)
    throw InputError("complete graph walk: n^2 exceeds the dense cap");
  UnitaryWalk w;
  w.kind_ = Kind::dense;
  w.n_vertices_ = n;
  w.n_chiralities_ = n;
  w.all_pairs_adjacent_ = true;
  Matrix u = Matrix::Zero(dim, dim);
  const double diag = 1.0 - 2.0 / n;
  const double off = -2.0 / n;
  for (int v = 0; v < n; ++v)
    for (int s = 0; s < n; ++s) {
      const long col = static_cast<long>(v) * n + s;
      for (int sp = 0; sp < n; ++sp)
        u(static_cast<long>(s) * n + sp, col) = (sp == v) ? diag : off;
    }
  w.u_ = std::move(u);
  return w;
}

UnitaryWalk UnitaryWalk::hypercube(int n, WalkStorage storage) {
  LabelledGraph g = LabelledGraph::hypercube(n);
  UnitaryWalk w;
  w.kind_ = Kind::hypercube;
  w.n_vertices_ = g.n_vertices;
  w.n_chiralities_ = n;
  w.hyper_n_ = n;
  w.hyper_a_ = 2.0 / n - 1.0;
  w.hyper_b_ = 2.0 / n;
  const long dim = static_cast<long>(w.n_vertices_) * n;
  const bool dense = storage == WalkStorage::dense ||
                     (storage == WalkStorage::automatic && dim <= kDenseCap);
  if (dense) {
    if (dim > kDenseCap)
      throw InputError("hypercube walk: dense storage requested above cap");
    Matrix u = Matrix::Zero(dim, dim);
    for (int v = 0; v < w.n_vertices_; ++v)
      for (int j = 0; j < n; ++j) {
        const long col = static_cast<long>(v) * n + j;
        const long wv = v ^ (1 << j);
        for (int i = 0; i < n; ++i)
          u(wv * n + i, col) = (i == j) ? w.hyper_a_ : w.hyper_b_;
      }
    w.u_ = std::move(u);
  }
  w.graph_ = std::move(g);
  return w;
}

UnitaryWalk UnitaryWalk::from_dense(Matrix u, int n_vertices,
                                    int n_chiralities) {
  UnitaryWalk w;
  w.kind_ = Kind::dense;
  w.n_vertices_ = n_vertices;
  w.n_chiralities_ = n_chiralities;
  w.all_pairs_adjacent_ = true;
  if (u.rows() != u.cols() ||
      u.rows() != static_cast<long>(n_vertices) * n_chiralities)
    throw InputError("from_dense: matrix shape does not match dims");
  const double err =
      ((u.adjoint() * u) - Matrix::Identity(u.rows(), u.cols()))
          .cwiseAbs()
          .maxCoeff();
  if (err > 1e-10)
    throw InputError("from_dense: not unitary (residual " +
                     std::to_string(err) + ")");
  w.u_ = std::move(u);
  return w;
}

UnitaryWalk UnitaryWalk::from_dense(Matrix u, LabelledGraph graph,
                                    int n_chiralities) {
  graph.validate();
  UnitaryWalk w = from_dense(std::move(u), graph.n_vertices, n_chiralities);
  w.all_pairs_adjacent_ = false;
  w.graph_ = std::move(graph);
  return w;
}

const Matrix& UnitaryWalk::matrix() const {
  if (!u_)
    throw InputError(
        "walk has no dense matrix form (dimension above the dense cap)");
  return *u_;
}

void UnitaryWalk::apply(const Vector& in, Vector& out) const {
  if (in.size() != size()) throw InputError("apply: dimension mismatch");
  switch (kind_) {
    case Kind::dense:
      out.noalias() = *u_ * in;
      return;
    case Kind::coined: {
      const int d = n_chiralities_;
      // coin step per vertex, then shift each chirality along its label
      Vector tmp(in.size());
      for (int v = 0; v < n_vertices_; ++v)
        tmp.segment(static_cast<long>(v) * d, d).noalias() =
            coin_ * in.segment(static_cast<long>(v) * d, d);
      out.resize(in.size());
      for (int sp = 0; sp < d; ++sp) {
        const auto& inv = inv_labels_[sp];
        for (int w = 0; w < n_vertices_; ++w)
          out[static_cast<long>(w) * d + sp] =
              tmp[static_cast<long>(inv[w]) * d + sp];
      }
      return;
    }
    case Kind::hypercube: {
      const int n = hyper_n_;
      out.resize(in.size());
      for (int w = 0; w < n_vertices_; ++w) {
        Complex sum = 0.0;
        const long base = static_cast<long>(w) * n;
        // incoming component j lives at vertex w ^ (1 << j)
        for (int j = 0; j < n; ++j)
          sum += in[static_cast<long>(w ^ (1 << j)) * n + j];
        for (int i = 0; i < n; ++i)
          out[base + i] = hyper_b_ * sum +
                          (hyper_a_ - hyper_b_) *
                              in[static_cast<long>(w ^ (1 << i)) * n + i];
      }
      return;
    }
  }
}

Vector UnitaryWalk::apply(const Vector& in) const {
  Vector out;
  apply(in, out);
  return out;
}

bool UnitaryWalk::adjacent(int v, int w) const {
  if (all_pairs_adjacent_) return true;
  return graph_->adjacent(v, w);
}

void UnitaryWalk::for_each_column_entry(
    int col, const std::function<void(int, Complex)>& fn) const {
  switch (kind_) {
    case Kind::dense: {
      const Matrix& u = *u_;
      for (long r = 0; r < u.rows(); ++r) fn(static_cast<int>(r), u(r, col));
      return;
    }
    case Kind::coined: {
      const int d = n_chiralities_;
      const int v = col / d;
      const int s = col % d;
      for (int sp = 0; sp < d; ++sp)
        fn(labels_[sp][v] * d + sp, coin_(sp, s));
      return;
    }
    case Kind::hypercube: {
      const int n = hyper_n_;
      const int v = col / n;
      const int j = col % n;
      const int w = v ^ (1 << j);
      for (int i = 0; i < n; ++i)
        fn(w * n + i, (i == j) ? hyper_a_ : hyper_b_);
      return;
    }
  }
}

bool locality_check(const UnitaryWalk& walk) {
  const int nc = walk.n_chiralities();
  bool local = true;
  for (int col = 0; col < walk.size() && local; ++col) {
    const int v = col / nc;
    walk.for_each_column_entry(col, [&](int row, Complex val) {
      if (!local) return;
      if (std::abs(val) > 1e-12 && !walk.adjacent(v, row / nc)) local = false;
    });
  }
  return local;
}

WaveFunction evolve(const UnitaryWalk& walk, const WaveFunction& psi,
                    long t) {
  if (t < 0) throw InputError("evolve: t must be nonnegative");
  if (psi.size() != walk.size())
    throw InputError("evolve: dimension mismatch");
  Vector cur = psi.amplitudes();
  Vector next(cur.size());
  for (long step = 0; step < t; ++step) {
    walk.apply(cur, next);
    cur.swap(next);
  }
  return WaveFunction(std::move(cur), walk.n_vertices(),
                      walk.n_chiralities());
}

}  // namespace qwalk
