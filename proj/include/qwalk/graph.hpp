#pragma once

#include <vector>

#include "qwalk/common.hpp"

namespace qwalk {

/// d-regular graph with a labelling: labelling[v][i] is the neighbor of v
/// reached by moving along label i. Labellings must be consistent: no two
/// distinct vertices share a neighbor under the same label (each label map
/// is then a permutation of the vertex set).
struct LabelledGraph {
  int n_vertices = 0;
  int degree = 0;
  std::vector<std::vector<int>> labelling;

  /// Shape, range, self-loop, distinct-neighbor, per-label injectivity and
  /// adjacency symmetry checks. Throws InputError on the first violation.
  void validate() const;

  bool adjacent(int v, int w) const;

  /// Label map as a permutation, plus its inverse. Requires a validated graph.
  std::vector<int> label_permutation(int label) const;
  std::vector<int> inverse_label_permutation(int label) const;

  /// Cycle Z_n with label 0 = clockwise (v -> v+1 mod n) and label 1 =
  /// counter-clockwise (v -> v-1 mod n). Requires n >= 3.
  static LabelledGraph cycle(int n);

  /// Hypercube (Z_2)^n; label i flips bit i. Requires n >= 2.
  static LabelledGraph hypercube(int n);
};

}  // namespace qwalk
