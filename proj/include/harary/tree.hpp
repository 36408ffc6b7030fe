#pragma once

#include <string>
#include <utility>
#include <vector>

namespace harary {

/// Labeled tree on vertices 0..n-1.  Construction validates everything:
/// exactly n-1 edges, labels in range, no loops or duplicates, connected.
/// Immutable after construction; everything downstream treats it as a value.
struct Tree {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adj;
};

Tree build_tree(int n, std::vector<std::pair<int, int>> edges);

/// All-pairs hop counts, row-major n*n.  d(u,u)=0, d(u,v)=1 iff {u,v} is an
/// edge.  Built by one BFS per source, O(n^2) total.
struct DistanceMatrix {
  int n = 0;
  std::vector<int> d;

  int at(int u, int v) const { return d[static_cast<size_t>(u) * n + v]; }
};

DistanceMatrix distances(const Tree& t);

struct DegreeProfile {
  std::vector<int> degree;
  int pendent_count = 0;    // vertices of degree 1
  int degree_two_count = 0;
  int max_degree = 0;
};

DegreeProfile degree_profile(const Tree& t);

struct MetricProfile {
  std::vector<int> eccentricity;
  int diameter = 0;
  int radius = 0;
  std::vector<int> centers;  // 1 vertex, or 2 adjacent vertices
};

MetricProfile metric_profile(const Tree& t, const DistanceMatrix& dm);

/// Maximum matching size, via the leaf-stripping greedy (optimal on trees).
int matching_number(const Tree& t);

/// Maximum independent set size, via subtree DP.  Cross-checked against
/// n - matching_number(t); a mismatch throws InternalInconsistency.
int independence_number(const Tree& t);

/// Canonical form: balanced-parenthesis encoding of the tree rooted at its
/// center, children ordered lexicographically ascending at every node.
/// A bicentral tree is encoded as a virtual root over the two halves obtained
/// by removing the center edge, halves in ascending order; that code has
/// length 2n+2, the unicentral code has length 2n.  Equal codes iff the trees
/// are isomorphic.
using CanonicalCode = std::string;

CanonicalCode canonical_code(const Tree& t);

bool is_isomorphic(const Tree& a, const Tree& b);

}  // namespace harary
