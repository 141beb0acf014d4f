#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qwalk/common.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/states.hpp"

namespace qwalk {

/// d x d unitary acting on the chirality register each step.
class Coin {
 public:
  explicit Coin(Matrix c);

  const Matrix& matrix() const { return c_; }
  int dimension() const { return static_cast<int>(c_.rows()); }

 private:
  Matrix c_;
};

enum class CoinKind { hadamard, grover };

/// hadamard (d = 2 only): (1/sqrt2) [[1, 1], [-1, 1]].
/// grover: 1 - 2/d on the diagonal, -2/d off the diagonal.
Coin standard_coin(CoinKind kind, int d);

enum class WalkStorage { automatic, dense, structured };

/// Unitary operator of a walk plus its graph/labelling metadata. Dense
/// matrix form is kept for sizes up to kDenseCap; structured walks expose
/// only application and column-support enumeration.
class UnitaryWalk {
 public:
  static constexpr int kDenseCap = 4096;

  /// Coined walk: coin on the chirality register, then shift each component
  /// along its (new) chirality label. Column (v,s) has entries C(s',s) at
  /// rows (v_{s'}, s').
  static UnitaryWalk coined(LabelledGraph graph, Coin coin,
                            WalkStorage storage = WalkStorage::automatic);

  /// Walk on the complete graph with |S| = n: from (v,s) the particle moves
  /// to vertex w = s, with amplitude 1-2/n onto chirality v and -2/n onto
  /// every other chirality. Self-transitions (w = v) are part of this
  /// construction, so its adjacency includes loops.
  static UnitaryWalk complete_graph(int n);

  /// Grover walk on (Z_2)^n in block form: block (i,j) equals a*S_j for
  /// i = j and b*S_j otherwise, with a = 2/n - 1, b = 2/n and S_j the
  /// bit-j flip.
  static UnitaryWalk hypercube(int n,
                               WalkStorage storage = WalkStorage::automatic);

  /// Wrap an explicit unitary. Adjacency defaults to all pairs (loops
  /// included); pass a graph to impose real locality structure.
  static UnitaryWalk from_dense(Matrix u, int n_vertices, int n_chiralities);
  static UnitaryWalk from_dense(Matrix u, LabelledGraph graph,
                                int n_chiralities);

  int n_vertices() const { return n_vertices_; }
  int n_chiralities() const { return n_chiralities_; }
  int size() const { return n_vertices_ * n_chiralities_; }

  bool has_dense() const { return u_.has_value(); }
  const Matrix& matrix() const;

  Vector apply(const Vector& in) const;
  void apply(const Vector& in, Vector& out) const;

  /// Walk-level adjacency used by the locality check.
  bool adjacent(int v, int w) const;

  /// Enumerate the structurally possible entries of one column as
  /// (row, value) pairs. Entries may be zero; callers filter by magnitude.
  void for_each_column_entry(
      int col, const std::function<void(int, Complex)>& fn) const;

  const LabelledGraph* graph() const {
    return graph_ ? &*graph_ : nullptr;
  }

 private:
  enum class Kind { dense, coined, hypercube };

  UnitaryWalk() = default;

  Kind kind_ = Kind::dense;
  int n_vertices_ = 0;
  int n_chiralities_ = 0;
  bool all_pairs_adjacent_ = false;
  std::optional<LabelledGraph> graph_;
  std::optional<Matrix> u_;

  // coined
  Matrix coin_;
  std::vector<std::vector<int>> labels_;      // labels_[s'][v] = v_{s'}
  std::vector<std::vector<int>> inv_labels_;  // inverse permutations

  // hypercube
  int hyper_n_ = 0;
  double hyper_a_ = 0.0;
  double hyper_b_ = 0.0;
};

/// True iff every entry of magnitude above 1e-12 connects adjacent vertices.
/// Strict reading: on a simple graph a vertex is not adjacent to itself, so
/// e.g. the identity operator is non-local.
bool locality_check(const UnitaryWalk& walk);

/// psi_t = U^t psi, t >= 0.
WaveFunction evolve(const UnitaryWalk& walk, const WaveFunction& psi, long t);

}  // namespace qwalk
