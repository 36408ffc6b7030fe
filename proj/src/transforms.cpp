#include "harary/transforms.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "harary/error.hpp"

namespace harary {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw BadSpec("partition needs at least one part");
  for (int p : parts_)
    if (p < 1) throw BadSpec("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  sum_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool majorizes(const Partition& x, const Partition& y) {
  if (x.size() != y.size()) throw LengthMismatch("partitions differ in length");
  if (x.sum() != y.sum()) throw SumMismatch("partitions differ in sum");
  long long px = 0, py = 0;
  for (int i = 0; i < x.size(); ++i) {
    px += x.parts()[i];
    py += y.parts()[i];
    if (px < py) return false;
  }
  return true;
}

std::optional<Partition> majorization_step(const Partition& q) {
  const auto& p = q.parts();
  if (p.front() - p.back() <= 1) return std::nullopt;
  int s = 0;
  while (s + 1 < q.size() && p[s + 1] == p.front()) ++s;
  int r = q.size() - 1;
  while (r > 0 && p[r - 1] == p.back()) --r;
  std::vector<int> next = p;
  --next[s];
  ++next[r];
  return Partition(std::move(next));
}

std::vector<PendantPath> pendant_paths_at(const Tree& t, int v) {
  std::vector<PendantPath> out;
  for (int x : t.adj[v]) {
    PendantPath pp;
    int prev = v, cur = x;
    bool is_path = true;
    while (true) {
      pp.vertices.push_back(cur);
      int next = -1, fanout = 0;
      for (int w : t.adj[cur])
        if (w != prev) {
          next = w;
          ++fanout;
        }
      if (fanout == 0) break;
      if (fanout > 1) {
        is_path = false;
        break;
      }
      prev = cur;
      cur = next;
    }
    if (is_path) out.push_back(std::move(pp));
  }
  return out;
}

bool delta_applicable(const Tree& t, int v) {
  const int deg = static_cast<int>(t.adj[v].size());
  const int m = static_cast<int>(pendant_paths_at(t, v).size());
  return m >= 2 && deg == m + 1;
}

namespace {

Tree rewire(const Tree& t, const std::vector<std::pair<int, int>>& drop,
            const std::vector<std::pair<int, int>>& add) {
  auto edges = t.edges;
  for (auto [a, b] : drop) {
    auto key = std::minmax(a, b);
    auto it = std::find_if(edges.begin(), edges.end(), [&](const std::pair<int, int>& e) {
      return std::minmax(e.first, e.second) == key;
    });
    edges.erase(it);
  }
  for (auto e : add) edges.push_back(e);
  return build_tree(t.n, std::move(edges));
}

}  // namespace

Tree delta_transform(const Tree& t, int v) {
  if (v < 0 || v >= t.n) throw BadVertex("vertex out of range");
  auto paths = pendant_paths_at(t, v);
  const int m = static_cast<int>(paths.size());
  const int deg = static_cast<int>(t.adj[v].size());
  if (m < 2 || deg != m + 1)
    throw NotApplicable("vertex " + std::to_string(v) +
                        " does not carry m >= 2 pendant paths plus one other neighbor");
  int w = -1;
  for (int x : t.adj[v]) {
    bool is_start = std::any_of(paths.begin(), paths.end(),
                                [x](const PendantPath& p) { return p.start() == x; });
    if (!is_start) w = x;
  }
  std::sort(paths.begin(), paths.end(), [](const PendantPath& a, const PendantPath& b) {
    return a.length() != b.length() ? a.length() > b.length() : a.start() < b.start();
  });
  std::vector<std::pair<int, int>> drop, add;
  for (size_t i = 1; i < paths.size(); ++i) {
    drop.emplace_back(v, paths[i].start());
    add.emplace_back(w, paths[i].start());
  }
  return rewire(t, drop, add);
}

Tree path_shift(const Tree& t, int u, int long_end, int short_end) {
  if (u < 0 || u >= t.n || long_end < 0 || long_end >= t.n || short_end < 0 ||
      short_end >= t.n)
    throw BadVertex("vertex out of range");
  const auto paths = pendant_paths_at(t, u);
  const PendantPath* longer = nullptr;
  const PendantPath* shorter = nullptr;
  for (const auto& p : paths) {
    if (p.end() == long_end) longer = &p;
    if (p.end() == short_end) shorter = &p;
  }
  if (!longer || !shorter || longer == shorter)
    throw NotApplicable("need two distinct pendant paths at " + std::to_string(u) +
                        " ending at the given vertices");
  if (longer->length() < shorter->length())
    throw NotApplicable("long path is shorter than short path");
  const int detach_from = shorter->length() == 1 ? u : shorter->vertices[shorter->length() - 2];
  return rewire(t, {{detach_from, short_end}}, {{long_end, short_end}});
}

Tree attach(const Tree& base, int u, const Tree& sub, int root) {
  if (u < 0 || u >= base.n) throw BadVertex("attach point out of range in base");
  if (root < 0 || root >= sub.n) throw BadVertex("root out of range in attached tree");
  auto edges = base.edges;
  std::vector<int> remap(sub.n);
  int next = base.n;
  for (int v = 0; v < sub.n; ++v) remap[v] = v == root ? u : next++;
  for (auto [a, b] : sub.edges) edges.emplace_back(remap[a], remap[b]);
  return build_tree(base.n + sub.n - 1, std::move(edges));
}

}  // namespace harary
