#pragma once

#include <string>
#include <variant>
#include <vector>

#include "harary/tree.hpp"

namespace harary {

// Named tree families.  Labelings are fixed so emitted edge lists are
// reproducible; see each constructor.
struct PathSpec {
  int n;
};
struct StarSpec {
  int n;
};
struct StarlikeSpec {
  std::vector<int> lengths;  // leg lengths, will be used non-increasing
};
struct BalancedStarlikeSpec {
  int n, k;
};
struct BroomSpec {
  int n, max_degree;
};
struct SpurSpec {
  int n, pendants;
};
struct CaterpillarSpec {
  int diameter;
  std::vector<int> pendants;  // p_1..p_{d-1} attached at spine vertices 1..d-1
};
struct PinnedCaterpillarSpec {
  int n, diameter, spine_index;
};
struct VolkmannSpec {
  int n, max_degree;
};

using FamilySpec = std::variant<PathSpec, StarSpec, StarlikeSpec, BalancedStarlikeSpec,
                                BroomSpec, SpurSpec, CaterpillarSpec,
                                PinnedCaterpillarSpec, VolkmannSpec>;

Tree make_family(const FamilySpec& spec);

/// Path 0-1-...-(n-1); vertex 0 is an end.
Tree path_tree(int n);
/// Star with hub 0.
Tree star_tree(int n);
/// Branching vertex 0, legs laid out consecutively, longest first.
/// k = 2 is allowed and yields a path.
Tree starlike_tree(std::vector<int> lengths);
/// Split n-1 into k leg lengths differing by at most one, non-increasing:
/// with n-1 = q*k + r, that is r copies of q+1 followed by k-r copies of q.
std::vector<int> balanced_lengths(int n, int k);
Tree balanced_starlike_tree(int n, int k);
/// Star with hub 0 and pendants 1..delta; a path of length n-delta-1
/// continues from vertex delta.
Tree broom_tree(int n, int delta);
/// Hub 0, first-level vertices 1..m, leaves m+1..n-1 attached to 1..n-m-1.
Tree spur_tree(int n, int m);
/// Spine 0..d, then pendants d+1.. grouped by spine position ascending.
Tree caterpillar_tree(int diameter, const std::vector<int>& pendants);
/// Caterpillar with all n-d-1 pendants at spine vertex i (1 <= i <= d-1).
Tree pinned_caterpillar_tree(int n, int diameter, int spine_index);
/// Complete max-degree-delta tree: root 0 gets delta children, every deeper
/// internal vertex delta-1 children, vertices filled in BFS order so the last
/// level fills leftmost-first.
Tree volkmann_tree(int n, int delta);

struct FamilyIdentityReport {
  int n = 0;
  int checked = 0;
  std::vector<std::string> identities;  // human-readable, one per verified identity
};

/// Verifies, up to isomorphism: spur(n,m) == balanced starlike (n,m) for all
/// m > (n-1)/2; balanced starlike collapses to the path at k=2 and the star
/// at k=n-1; same for the broom at delta=2 and delta=n-1.  Throws
/// IdentityViolated naming the failing pair.
FamilyIdentityReport family_identities_check(int n);

}  // namespace harary
