#include "harary/families.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "harary/error.hpp"

namespace harary {

Tree path_tree(int n) {
  if (n < 1) throw BadSpec("path needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return build_tree(n, std::move(e));
}

Tree star_tree(int n) {
  if (n < 1) throw BadSpec("star needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return build_tree(n, std::move(e));
}

Tree starlike_tree(std::vector<int> lengths) {
  if (lengths.size() < 2) throw BadSpec("starlike needs at least 2 legs");
  for (int l : lengths)
    if (l < 1) throw BadSpec("starlike leg lengths must be >= 1");
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  const int n = 1 + std::accumulate(lengths.begin(), lengths.end(), 0);
  std::vector<std::pair<int, int>> e;
  int next = 1;
  for (int l : lengths) {
    int prev = 0;
    for (int i = 0; i < l; ++i) {
      e.emplace_back(prev, next);
      prev = next++;
    }
  }
  return build_tree(n, std::move(e));
}

std::vector<int> balanced_lengths(int n, int k) {
  if (k < 2 || k > n - 1) throw OutOfRange("balanced lengths need 2 <= k <= n-1");
  const int q = (n - 1) / k, r = (n - 1) % k;
  std::vector<int> lengths(k, q);
  for (int i = 0; i < r; ++i) lengths[i] = q + 1;
  return lengths;
}

Tree balanced_starlike_tree(int n, int k) { return starlike_tree(balanced_lengths(n, k)); }

Tree broom_tree(int n, int delta) {
  if (delta < 2 || delta > n - 1) throw BadSpec("broom needs 2 <= delta <= n-1");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= delta; ++i) e.emplace_back(0, i);
  for (int v = delta + 1; v < n; ++v) e.emplace_back(v - 1, v);
  return build_tree(n, std::move(e));
}

Tree spur_tree(int n, int m) {
  if (m < 1 || m > n - 1 || 2 * m < n - 1)
    throw BadSpec("spur needs ceil((n-1)/2) <= m <= n-1");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= m; ++i) e.emplace_back(0, i);
  for (int i = 1; i <= n - m - 1; ++i) e.emplace_back(i, m + i);
  return build_tree(n, std::move(e));
}

Tree caterpillar_tree(int diameter, const std::vector<int>& pendants) {
  const int d = diameter;
  if (d < 1) throw BadSpec("caterpillar needs diameter >= 1");
  if (static_cast<int>(pendants.size()) != std::max(0, d - 1))
    throw BadSpec("caterpillar needs d-1 pendant counts");
  for (int p : pendants)
    if (p < 0) throw BadSpec("pendant counts must be >= 0");
  const int n = d + 1 + std::accumulate(pendants.begin(), pendants.end(), 0);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < d; ++i) e.emplace_back(i, i + 1);
  int next = d + 1;
  for (int i = 1; i <= d - 1; ++i)
    for (int j = 0; j < pendants[i - 1]; ++j) e.emplace_back(i, next++);
  return build_tree(n, std::move(e));
}

Tree pinned_caterpillar_tree(int n, int diameter, int spine_index) {
  const int d = diameter;
  if (d < 1 || d > n - 1) throw BadSpec("pinned caterpillar needs 1 <= d <= n-1");
  if (d == 1) {
    if (n != 2) throw BadSpec("diameter 1 forces n = 2");
    return path_tree(2);
  }
  if (spine_index < 1 || spine_index > d - 1)
    throw BadSpec("spine index must be in 1..d-1");
  std::vector<int> pendants(d - 1, 0);
  pendants[spine_index - 1] = n - d - 1;
  return caterpillar_tree(d, pendants);
}

Tree volkmann_tree(int n, int delta) {
  if (delta < 2 || delta > n - 1) throw BadSpec("volkmann needs 2 <= delta <= n-1");
  std::vector<std::pair<int, int>> e;
  int next = 1;
  for (int v = 0; next < n; ++v) {
    const int cap = v == 0 ? delta : delta - 1;
    for (int c = 0; c < cap && next < n; ++c) e.emplace_back(v, next++);
  }
  return build_tree(n, std::move(e));
}

Tree make_family(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> Tree {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, PathSpec>) return path_tree(s.n);
        if constexpr (std::is_same_v<S, StarSpec>) return star_tree(s.n);
        if constexpr (std::is_same_v<S, StarlikeSpec>) return starlike_tree(s.lengths);
        if constexpr (std::is_same_v<S, BalancedStarlikeSpec>)
          return balanced_starlike_tree(s.n, s.k);
        if constexpr (std::is_same_v<S, BroomSpec>) return broom_tree(s.n, s.max_degree);
        if constexpr (std::is_same_v<S, SpurSpec>) return spur_tree(s.n, s.pendants);
        if constexpr (std::is_same_v<S, CaterpillarSpec>)
          return caterpillar_tree(s.diameter, s.pendants);
        if constexpr (std::is_same_v<S, PinnedCaterpillarSpec>)
          return pinned_caterpillar_tree(s.n, s.diameter, s.spine_index);
        if constexpr (std::is_same_v<S, VolkmannSpec>)
          return volkmann_tree(s.n, s.max_degree);
      },
      spec);
}

FamilyIdentityReport family_identities_check(int n) {
  if (n < 4) throw OutOfRange("identity check needs n >= 4");
  FamilyIdentityReport rep;
  rep.n = n;
  auto expect = [&rep](const Tree& a, const Tree& b, const std::string& what) {
    if (!is_isomorphic(a, b)) throw IdentityViolated(what + " failed at n=" + std::to_string(rep.n));
    ++rep.checked;
    rep.identities.push_back(what);
  };
  // the spur/balanced-starlike identity is claimed for m > (n-1)/2
  for (int m = (n + 1) / 2; m <= n - 1; ++m)
    expect(spur_tree(n, m), balanced_starlike_tree(n, m),
           "spur(" + std::to_string(n) + "," + std::to_string(m) + ") == balanced-starlike");
  expect(balanced_starlike_tree(n, 2), path_tree(n), "balanced-starlike k=2 == path");
  expect(balanced_starlike_tree(n, n - 1), star_tree(n), "balanced-starlike k=n-1 == star");
  expect(broom_tree(n, 2), path_tree(n), "broom delta=2 == path");
  expect(broom_tree(n, n - 1), star_tree(n), "broom delta=n-1 == star");
  return rep;
}

}  // namespace harary
