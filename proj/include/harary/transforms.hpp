#pragma once

#include <optional>
#include <vector>

#include "harary/tree.hpp"

namespace harary {

/// Integer partition: positive parts kept non-increasing.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  int sum() const { return sum_; }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }

 private:
  std::vector<int> parts_;
  int sum_ = 0;
};

/// True iff x majorizes y: equal length, equal sum, every prefix sum of x
/// dominating the one of y.  Length/sum mismatches are errors, not "false".
bool majorizes(const Partition& x, const Partition& y);

/// One step down the majorization order: decrement the last entry of the
/// leading maximal block, increment the first entry of the trailing minimal
/// block.  Returns nothing once the partition is balanced (max-min <= 1),
/// the minimal element of the order.
std::optional<Partition> majorization_step(const Partition& q);

/// A pendant path at v: the attached component is a bare path hanging off v,
/// listed from the vertex adjacent to v out to the far leaf.
struct PendantPath {
  std::vector<int> vertices;
  int start() const { return vertices.front(); }
  int end() const { return vertices.back(); }
  int length() const { return static_cast<int>(vertices.size()); }
};

std::vector<PendantPath> pendant_paths_at(const Tree& t, int v);

/// True iff v has degree m+1 with exactly m >= 2 pendant paths and one
/// remaining neighbor.
bool delta_applicable(const Tree& t, int v);

/// Re-attach all pendant paths at v except one longest to v's non-path
/// neighbor.  Keeps the vertex count and the pendent-vertex count.  Among
/// equally long paths the one with the smallest start label stays, which
/// fixes labels without affecting anything up to isomorphism.
Tree delta_transform(const Tree& t, int v);

/// Move one unit from the shorter pendant path at u (ending at short_end,
/// length m) to the longer one (ending at long_end, length k >= m >= 1):
/// the short leaf is detached and re-attached at the long end.  m = 1
/// removes the short path entirely.
Tree path_shift(const Tree& t, int u, int long_end, int short_end);

/// Glue `sub` onto `base` by identifying sub's `root` with base's `u`.
/// Base labels are kept; the remaining sub vertices get labels
/// n_base.. in increasing original order.
Tree attach(const Tree& base, int u, const Tree& sub, int root);

}  // namespace harary
