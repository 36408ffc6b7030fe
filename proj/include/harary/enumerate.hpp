#pragma once

#include <optional>
#include <vector>

#include "harary/tree.hpp"

namespace harary {

/// Soft cap on enumeration order, 24 by default; the HARARY_ENUM_CAP
/// environment variable raises or lowers it.  Constructors take an explicit
/// override for callers that know what they are asking for.
int enumeration_cap();

/// Streams every non-isomorphic free tree of a given order, exactly once, in
/// a fixed canonical order.
///
/// Rooted trees are encoded as preorder level sequences (root level 0,
/// parent of vertex i = nearest j < i with level one less).  The canonical
/// representative of a rooted tree is the lexicographically largest such
/// sequence; the successor rule walks all of them in decreasing order:
/// find the last position p with level > 1, its parent q, and repeat the
/// block [q, p) cyclically to the end.
///
/// A free tree is emitted at exactly one rooting: the root must be a
/// centroid (every root subtree has at most floor(n/2) vertices), and for
/// bicentroidal trees (one subtree of exactly n/2) the candidate sequence
/// must be >= the canonical sequence rooted at the partner centroid.  That
/// keeps generation free of any cross-tree isomorphism checks or seen-sets.
class FreeTreeGenerator {
 public:
  explicit FreeTreeGenerator(int n, bool allow_above_cap = false);

  /// Advance to the next free tree.  False once exhausted.
  bool next();

  /// Level sequence of the current tree (valid after next() returned true).
  const std::vector<int>& levels() const { return levels_; }

  /// Current tree with preorder labels (vertex i = i-th preorder position).
  Tree tree() const;

  /// Bulk variant for scan workers: write up to max_trees level sequences
  /// (n ints each) into out; returns how many were written.
  int fill(int* out, int max_trees);

 private:
  bool advance_rooted();
  bool accepted() const;

  int n_;
  std::vector<int> levels_;
  bool fresh_ = true;
  bool done_ = false;
};

/// Materialize a tree from a preorder level sequence without revalidation.
Tree tree_from_levels(const int* levels, int n);

/// Number of free trees of order n (streamed, not materialized).
long long count_free_trees(int n, bool allow_above_cap = false);

/// Convenience for tests and small-n callers.
std::vector<Tree> free_trees(int n, bool allow_above_cap = false);

/// A class of n-vertex trees cut out by structural constraints.
struct TreeClass {
  int n = 0;
  std::optional<int> pendent_count;
  std::optional<int> degree_two_count;
  std::optional<int> matching;
  std::optional<int> independence;
  std::optional<int> diameter;
  std::optional<int> radius;
  std::optional<int> max_degree;

  /// Throws InconsistentClass when a constraint cannot be met by any
  /// n-vertex tree.
  void validate() const;
  std::string describe() const;
};

/// Lazy filtered stream over the free trees of order class.n.
class ClassTreeStream {
 public:
  explicit ClassTreeStream(TreeClass c, bool allow_above_cap = false);
  std::optional<Tree> next();

 private:
  TreeClass class_;
  FreeTreeGenerator gen_;
};

}  // namespace harary
