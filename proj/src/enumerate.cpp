#include "harary/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "harary/error.hpp"
#include "harary/scan.hpp"

namespace harary {

int enumeration_cap() {
  if (const char* env = std::getenv("HARARY_ENUM_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return static_cast<int>(v);
  }
  return 24;
}

FreeTreeGenerator::FreeTreeGenerator(int n, bool allow_above_cap) : n_(n) {
  if (n < 1) throw OutOfRange("tree order must be >= 1");
  if (!allow_above_cap && n > enumeration_cap())
    throw OutOfRange("order " + std::to_string(n) + " above enumeration cap " +
                     std::to_string(enumeration_cap()) +
                     " (raise HARARY_ENUM_CAP or pass the override)");
  levels_.resize(n);
  for (int i = 0; i < n; ++i) levels_[i] = i;  // the path, lexicographic maximum
}

bool FreeTreeGenerator::advance_rooted() {
  if (fresh_) {
    fresh_ = false;
    return true;
  }
  int p = -1;
  for (int i = n_ - 1; i >= 0; --i)
    if (levels_[i] > 1) {
      p = i;
      break;
    }
  if (p < 0) return false;  // the star was the last sequence
  int q = p - 1;
  while (levels_[q] != levels_[p] - 1) --q;
  for (int i = p; i < n_; ++i) levels_[i] = levels_[i - (p - q)];
  return true;
}

namespace {

// Canonical (lexicographically largest) level sequence of the subtree of
// `root` looking away from `banned`, emitted relative to level `base`.
// Sibling blocks are sorted descending; a block that is a proper prefix of
// another sorts after it (the longer block's continuation is deeper than the
// shorter block's root, so the longer one wins the concatenation compare).
void canonical_levels_from(const std::vector<std::vector<int>>& adj, int root, int banned,
                           int base, std::vector<int>& out) {
  std::vector<std::vector<int>> blocks;
  for (int w : adj[root])
    if (w != banned) {
      std::vector<int> b;
      canonical_levels_from(adj, w, root, base + 1, b);
      blocks.push_back(std::move(b));
    }
  std::sort(blocks.begin(), blocks.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    const size_t m = std::min(a.size(), b.size());
    for (size_t i = 0; i < m; ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return a.size() > b.size();
  });
  out.push_back(base);
  for (auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
}

}  // namespace

bool FreeTreeGenerator::accepted() const {
  if (n_ <= 2) return true;
  // Root subtrees are the segments between consecutive level-1 positions.
  int max_size = 0, max_start = -1;
  int start = 1;
  for (int i = 2; i <= n_; ++i) {
    if (i == n_ || levels_[i] == 1) {
      const int size = i - start;
      if (size > max_size) {
        max_size = size;
        max_start = start;
      }
      start = i;
    }
  }
  if (2 * max_size < n_) return true;   // root is the unique centroid
  if (2 * max_size > n_) return false;  // centroid lies deeper
  // Bicentroidal: partner centroid is the child heading the n/2-subtree.
  std::vector<int> parent(n_, -1), anc(n_, 0);
  for (int i = 1; i < n_; ++i) {
    parent[i] = anc[levels_[i] - 1];
    anc[levels_[i]] = i;
  }
  std::vector<std::vector<int>> adj(n_);
  for (int i = 1; i < n_; ++i) {
    adj[i].push_back(parent[i]);
    adj[parent[i]].push_back(i);
  }
  std::vector<int> partner_seq;
  partner_seq.reserve(n_);
  canonical_levels_from(adj, max_start, -1, 0, partner_seq);
  return levels_ >= partner_seq;
}

bool FreeTreeGenerator::next() {
  if (done_) return false;
  while (advance_rooted()) {
    if (accepted()) return true;
  }
  done_ = true;
  return false;
}

Tree FreeTreeGenerator::tree() const { return tree_from_levels(levels_.data(), n_); }

int FreeTreeGenerator::fill(int* out, int max_trees) {
  int got = 0;
  while (got < max_trees && next()) {
    std::copy(levels_.begin(), levels_.end(), out + static_cast<size_t>(got) * n_);
    ++got;
  }
  return got;
}

Tree tree_from_levels(const int* levels, int n) {
  Tree t;
  t.n = n;
  t.adj.resize(n);
  t.edges.reserve(n - 1);
  std::vector<int> anc(n, 0);
  for (int i = 1; i < n; ++i) {
    const int p = anc[levels[i] - 1];
    anc[levels[i]] = i;
    t.edges.emplace_back(p, i);
    t.adj[p].push_back(i);
    t.adj[i].push_back(p);
  }
  return t;
}

long long count_free_trees(int n, bool allow_above_cap) {
  FreeTreeGenerator gen(n, allow_above_cap);
  long long count = 0;
  while (gen.next()) ++count;
  return count;
}

std::vector<Tree> free_trees(int n, bool allow_above_cap) {
  FreeTreeGenerator gen(n, allow_above_cap);
  std::vector<Tree> out;
  while (gen.next()) out.push_back(gen.tree());
  return out;
}

void TreeClass::validate() const {
  if (n < 1) throw InconsistentClass("tree order must be >= 1");
  auto need = [this](bool ok, const std::string& what) {
    if (!ok) throw InconsistentClass(what + " impossible for n=" + std::to_string(n));
  };
  if (pendent_count) {
    const int k = *pendent_count;
    if (n == 1)
      need(k == 0, "pendent count");
    else if (n == 2)
      need(k == 2, "pendent count");
    else
      need(k >= 2 && k <= n - 1, "pendent count");
  }
  if (degree_two_count) need(*degree_two_count >= 0 && *degree_two_count <= std::max(0, n - 2), "degree-two count");
  if (matching) need(*matching >= (n > 1 ? 1 : 0) && 2 * *matching <= n, "matching number");
  if (independence) need(2 * *independence >= n && *independence <= std::max(1, n - 1), "independence number");
  if (diameter) need(*diameter >= (n > 1 ? 1 : 0) && *diameter <= n - 1, "diameter");
  if (radius) need(*radius >= (n > 1 ? 1 : 0) && 2 * *radius <= n, "radius");
  if (max_degree) {
    if (n == 1)
      need(*max_degree == 0, "max degree");
    else if (n == 2)
      need(*max_degree == 1, "max degree");
    else
      need(*max_degree >= 2 && *max_degree <= n - 1, "max degree");
  }
}

std::string TreeClass::describe() const {
  std::ostringstream os;
  os << "n=" << n;
  if (pendent_count) os << " k=" << *pendent_count;
  if (degree_two_count) os << " q=" << *degree_two_count;
  if (matching) os << " beta=" << *matching;
  if (independence) os << " alpha=" << *independence;
  if (diameter) os << " d=" << *diameter;
  if (radius) os << " r=" << *radius;
  if (max_degree) os << " maxdeg=" << *max_degree;
  return os.str();
}

ClassTreeStream::ClassTreeStream(TreeClass c, bool allow_above_cap)
    : class_(std::move(c)), gen_(class_.n, allow_above_cap) {
  class_.validate();
}

std::optional<Tree> ClassTreeStream::next() {
  while (gen_.next()) {
    Tree t = gen_.tree();
    if (class_matches(class_, compute_tree_stats(t))) return t;
  }
  return std::nullopt;
}

}  // namespace harary
