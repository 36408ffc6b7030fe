#include "harary/tree.hpp"

#include <algorithm>
#include <set>

#include "harary/error.hpp"

namespace harary {

Tree build_tree(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1) throw NotATree("vertex count must be at least 1");
  if (static_cast<int>(edges.size()) != n - 1)
    throw NotATree("tree on " + std::to_string(n) + " vertices needs " +
                   std::to_string(n - 1) + " edges, got " + std::to_string(edges.size()));

  Tree t;
  t.n = n;
  t.adj.resize(n);
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw BadLabel("edge (" + std::to_string(u) + "," + std::to_string(v) +
                     ") out of range for n=" + std::to_string(n));
    if (u == v) throw NotATree("self-loop at vertex " + std::to_string(u));
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second)
      throw NotATree("duplicate edge (" + std::to_string(key.first) + "," +
                     std::to_string(key.second) + ")");
    t.adj[u].push_back(v);
    t.adj[v].push_back(u);
  }
  t.edges = std::move(edges);

  // n-1 edges + connected => acyclic
  std::vector<char> vis(n, 0);
  std::vector<int> queue{0};
  vis[0] = 1;
  for (size_t i = 0; i < queue.size(); ++i)
    for (int w : t.adj[queue[i]])
      if (!vis[w]) {
        vis[w] = 1;
        queue.push_back(w);
      }
  if (static_cast<int>(queue.size()) != n) throw NotATree("graph is not connected");
  return t;
}

DistanceMatrix distances(const Tree& t) {
  const int n = t.n;
  DistanceMatrix dm;
  dm.n = n;
  dm.d.assign(static_cast<size_t>(n) * n, -1);
  std::vector<int> queue;
  queue.reserve(n);
  for (int s = 0; s < n; ++s) {
    int* row = dm.d.data() + static_cast<size_t>(s) * n;
    queue.clear();
    queue.push_back(s);
    row[s] = 0;
    for (size_t i = 0; i < queue.size(); ++i) {
      const int u = queue[i];
      for (int w : t.adj[u])
        if (row[w] < 0) {
          row[w] = row[u] + 1;
          queue.push_back(w);
        }
    }
  }
  return dm;
}

DegreeProfile degree_profile(const Tree& t) {
  DegreeProfile p;
  p.degree.resize(t.n);
  for (int v = 0; v < t.n; ++v) p.degree[v] = static_cast<int>(t.adj[v].size());
  for (int d : p.degree) {
    if (d == 1) ++p.pendent_count;
    if (d == 2) ++p.degree_two_count;
    p.max_degree = std::max(p.max_degree, d);
  }
  return p;
}

MetricProfile metric_profile(const Tree& t, const DistanceMatrix& dm) {
  MetricProfile m;
  m.eccentricity.resize(t.n);
  m.radius = t.n;
  for (int v = 0; v < t.n; ++v) {
    int e = 0;
    for (int u = 0; u < t.n; ++u) e = std::max(e, dm.at(v, u));
    m.eccentricity[v] = e;
    m.diameter = std::max(m.diameter, e);
    m.radius = std::min(m.radius, e);
  }
  for (int v = 0; v < t.n; ++v)
    if (m.eccentricity[v] == m.radius) m.centers.push_back(v);
  return m;
}

namespace {

// Parent array with parents preceding children in `order` (BFS from root).
void bfs_order(const Tree& t, int root, std::vector<int>& order, std::vector<int>& parent) {
  order.clear();
  parent.assign(t.n, -1);
  order.push_back(root);
  std::vector<char> vis(t.n, 0);
  vis[root] = 1;
  for (size_t i = 0; i < order.size(); ++i)
    for (int w : t.adj[order[i]])
      if (!vis[w]) {
        vis[w] = 1;
        parent[w] = order[i];
        order.push_back(w);
      }
}

}  // namespace

int matching_number(const Tree& t) {
  if (t.n <= 1) return 0;
  std::vector<int> order, parent;
  bfs_order(t, 0, order, parent);
  std::vector<char> matched(t.n, 0);
  int beta = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    const int p = parent[v];
    if (p >= 0 && !matched[v] && !matched[p]) {
      matched[v] = matched[p] = 1;
      ++beta;
    }
  }
  return beta;
}

int independence_number(const Tree& t) {
  int alpha = 1;
  if (t.n > 1) {
    std::vector<int> order, parent;
    bfs_order(t, 0, order, parent);
    std::vector<int> take(t.n, 1), skip(t.n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const int v = *it;
      const int p = parent[v];
      if (p >= 0) {
        take[p] += skip[v];
        skip[p] += std::max(take[v], skip[v]);
      }
    }
    alpha = std::max(take[0], skip[0]);
  }
  const int beta = matching_number(t);
  if (alpha + beta != t.n)
    throw InternalInconsistency("independence DP (" + std::to_string(alpha) +
                                ") and n - matching (" + std::to_string(t.n - beta) +
                                ") disagree");
  return alpha;
}

namespace {

// Rooted code of the component containing `root` when the vertex `banned`
// (and everything behind it) is cut away; banned < 0 encodes no cut.
std::string rooted_code(const Tree& t, int root, int banned) {
  std::vector<int> order, parent;
  order.push_back(root);
  parent.assign(t.n, -2);
  parent[root] = -1;
  for (size_t i = 0; i < order.size(); ++i)
    for (int w : t.adj[order[i]])
      if (w != banned && parent[w] == -2) {
        parent[w] = order[i];
        order.push_back(w);
      }
  std::vector<std::vector<std::string>> kids(t.n);
  std::vector<std::string> code(t.n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    auto& ks = kids[v];
    std::sort(ks.begin(), ks.end());
    std::string s = "(";
    for (auto& k : ks) s += k;
    s += ")";
    if (parent[v] >= 0)
      kids[parent[v]].push_back(std::move(s));
    else
      code[v] = std::move(s);
  }
  return code[root];
}

}  // namespace

CanonicalCode canonical_code(const Tree& t) {
  if (t.n == 1) return "()";
  const MetricProfile m = metric_profile(t, distances(t));
  if (m.centers.size() == 1) return rooted_code(t, m.centers[0], -1);
  const int a = m.centers[0], b = m.centers[1];
  std::string sa = rooted_code(t, a, b);
  std::string sb = rooted_code(t, b, a);
  if (sb < sa) std::swap(sa, sb);
  return "(" + sa + sb + ")";
}

bool is_isomorphic(const Tree& a, const Tree& b) {
  if (a.n != b.n) return false;
  return canonical_code(a) == canonical_code(b);
}

}  // namespace harary
