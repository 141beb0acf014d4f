#include "qwalk/graph.hpp"

#include <algorithm>
#include <unordered_set>

namespace qwalk {

void LabelledGraph::validate() const {
  if (n_vertices < 1) throw InputError("graph: n_vertices must be positive");
  if (degree < 1) throw InputError("graph: degree must be positive");
  if (static_cast<int>(labelling.size()) != n_vertices)
    throw InputError("graph: labelling must have one row per vertex");
  for (int v = 0; v < n_vertices; ++v) {
    const auto& row = labelling[v];
    if (static_cast<int>(row.size()) != degree)
      throw InputError("graph: vertex " + std::to_string(v) + " has " +
                       std::to_string(row.size()) + " labels, expected " +
                       std::to_string(degree));
    std::unordered_set<int> seen;
    for (int i = 0; i < degree; ++i) {
      const int w = row[i];
      if (w < 0 || w >= n_vertices)
        throw InputError("graph: neighbor index out of range at vertex " +
                         std::to_string(v));
      if (w == v)
        throw InputError("graph: self-loop at vertex " + std::to_string(v));
      if (!seen.insert(w).second)
        throw InputError("graph: repeated neighbor at vertex " +
                         std::to_string(v));
    }
  }
  // Labelling consistency: v != w and v_i = w_j implies i != j, i.e. each
  // label map is injective.
  std::vector<int> hit(n_vertices);
  for (int i = 0; i < degree; ++i) {
    std::fill(hit.begin(), hit.end(), -1);
    for (int v = 0; v < n_vertices; ++v) {
      const int w = labelling[v][i];
      if (hit[w] != -1)
        throw InputError("graph: inconsistent labelling, vertices " +
                         std::to_string(hit[w]) + " and " + std::to_string(v) +
                         " share neighbor " + std::to_string(w) +
                         " under label " + std::to_string(i));
      hit[w] = v;
    }
  }
  // Undirected graph: adjacency must be symmetric.
  for (int v = 0; v < n_vertices; ++v)
    for (int w : labelling[v])
      if (!adjacent(w, v))
        throw InputError("graph: edge " + std::to_string(v) + "->" +
                         std::to_string(w) + " has no reverse edge");
}

bool LabelledGraph::adjacent(int v, int w) const {
  const auto& row = labelling[v];
  return std::find(row.begin(), row.end(), w) != row.end();
}

std::vector<int> LabelledGraph::label_permutation(int label) const {
  std::vector<int> perm(n_vertices);
  for (int v = 0; v < n_vertices; ++v) perm[v] = labelling[v][label];
  return perm;
}

std::vector<int> LabelledGraph::inverse_label_permutation(int label) const {
  std::vector<int> inv(n_vertices, -1);
  for (int v = 0; v < n_vertices; ++v) inv[labelling[v][label]] = v;
  return inv;
}

LabelledGraph LabelledGraph::cycle(int n) {
  if (n < 3) throw InputError("cycle graph requires n >= 3");
  LabelledGraph g;
  g.n_vertices = n;
  g.degree = 2;
  g.labelling.resize(n);
  for (int v = 0; v < n; ++v)
    g.labelling[v] = {(v + 1) % n, (v + n - 1) % n};
  return g;
}

LabelledGraph LabelledGraph::hypercube(int n) {
  if (n < 2) throw InputError("hypercube graph requires n >= 2");
  if (n > 24) throw InputError("hypercube graph too large");
  LabelledGraph g;
  g.n_vertices = 1 << n;
  g.degree = n;
  g.labelling.resize(g.n_vertices);
  for (int v = 0; v < g.n_vertices; ++v) {
    g.labelling[v].resize(n);
    for (int i = 0; i < n; ++i) g.labelling[v][i] = v ^ (1 << i);
  }
  return g;
}

}  // namespace qwalk
