#include "harary/indices.hpp"

#include <vector>

#include "harary/error.hpp"

namespace harary {

namespace {

// Histogram of pair distances (index = distance, 1..n-1); the n-1 reciprocal
// terms beat summing all n(n-1)/2 pairs through GMP.
std::vector<long long> distance_histogram(const Tree& t, const DistanceMatrix& dm) {
  std::vector<long long> hist(t.n, 0);
  for (int u = 0; u < t.n; ++u)
    for (int v = u + 1; v < t.n; ++v) ++hist[dm.at(u, v)];
  return hist;
}

}  // namespace

Rational harary_index(const Tree& t, const DistanceMatrix& dm) {
  Rational h;
  const auto hist = distance_histogram(t, dm);
  for (int d = 1; d < t.n; ++d)
    if (hist[d]) h += Rational(hist[d], d);
  return h;
}

Rational harary_index(const Tree& t) { return harary_index(t, distances(t)); }

long long wiener_index(const Tree& t, const DistanceMatrix& dm) {
  long long w = 0;
  const auto hist = distance_histogram(t, dm);
  for (int d = 1; d < t.n; ++d) w += static_cast<long long>(d) * hist[d];
  return w;
}

long long wiener_index(const Tree& t) { return wiener_index(t, distances(t)); }

Rational harmonic(int k) {
  if (k < 0) throw OutOfRange("harmonic number of negative index");
  Rational h;
  for (int i = 1; i <= k; ++i) h += Rational(1, i);
  return h;
}

Rational star_max(int n) {
  if (n < 1) throw OutOfRange("star_max needs n >= 1");
  return Rational(static_cast<long long>(n + 2) * (n - 1), 4);
}

Rational path_min(int n) {
  if (n < 1) throw OutOfRange("path_min needs n >= 1");
  if (n == 1) return Rational(0);
  Rational s(1);
  for (int k = 2; k <= n - 1; ++k) s += Rational(n, k);
  return s;
}

Rational spur_closed_form(int n, int m) {
  if (2 * m < n - 1 || m > n - 1)
    throw OutOfRange("spur parameters need (n-1)/2 <= m <= n-1");
  const long long N = n, M = m;
  return Rational(3 * N * N + 2 * M * N + M * M - 9 * M + 19 * N - 22, 24);
}

Rational broom_closed_form(int n, int delta) {
  if (delta < 2 || delta > n - 1)
    throw OutOfRange("broom parameters need 2 <= delta <= n-1");
  Rational h = Rational(n) * harmonic(n - delta);
  h += Rational(delta - n);
  h += Rational(static_cast<long long>(delta - 1) * (delta - 2), 4);
  h += Rational(delta - 1, n - delta + 1);
  return h;
}

Rational matching_bound(int n, int beta) {
  if (beta < 1 || 2 * beta > n)
    throw OutOfRange("matching bound needs 1 <= beta <= n/2");
  const long long N = n, B = beta;
  return Rational(6 * N * N - 4 * B * N + B * B + 9 * B + 10 * N - 22, 24);
}

Rational independence_bound(int n, int alpha) {
  if (2 * alpha < n || alpha > n - 1)
    throw OutOfRange("independence bound needs n/2 <= alpha <= n-1");
  return spur_closed_form(n, alpha);
}

Rational perfect_matching_bound(int n) {
  if (n < 2 || n % 2 != 0) throw OutOfRange("perfect matching bound needs even n");
  const long long N = n;
  return Rational(17 * N * N + 58 * N - 88, 96);
}

Rational closed_form(const FormulaId& f) {
  switch (f.kind) {
    case FormulaId::StarMax:
      return star_max(f.n);
    case FormulaId::PathMin:
      return path_min(f.n);
    case FormulaId::Spur:
      return spur_closed_form(f.n, f.param);
    case FormulaId::Broom:
      return broom_closed_form(f.n, f.param);
    case FormulaId::MatchingBound:
      return matching_bound(f.n, f.param);
    case FormulaId::IndependenceBound:
      return independence_bound(f.n, f.param);
    case FormulaId::PerfectMatchingBound:
      return perfect_matching_bound(f.n);
  }
  throw OutOfRange("unknown formula kind");
}

}  // namespace harary
