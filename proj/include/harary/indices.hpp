#pragma once

#include "harary/rational.hpp"
#include "harary/tree.hpp"

namespace harary {

/// Harary index: sum over unordered vertex pairs of 1/d(u,v).  Exact.
Rational harary_index(const Tree& t, const DistanceMatrix& dm);
Rational harary_index(const Tree& t);

/// Wiener index: sum over unordered vertex pairs of d(u,v).
long long wiener_index(const Tree& t, const DistanceMatrix& dm);
long long wiener_index(const Tree& t);

/// k-th harmonic number, H_0 = 0.
Rational harmonic(int k);

/// Closed forms for the extremal index values of the named families.
///   StarMax(n)               = (n+2)(n-1)/4, the n-vertex maximum (star)
///   PathMin(n)               = 1 + n * sum_{k=2}^{n-1} 1/k, the minimum (path)
///   Spur(n,m)                = (3n^2 + 2mn + m^2 - 9m + 19n - 22)/24
///   Broom(n,delta)           = n*H_{n-delta} - n + delta
///                              + (delta-1)(delta-2)/4 + (delta-1)/(n-delta+1)
///   MatchingBound(n,beta)    = (6n^2 - 4*beta*n + beta^2 + 9*beta + 10n - 22)/24
///   IndependenceBound(n,a)   = Spur(n,a)
///   PerfectMatchingBound(n)  = (17n^2 + 58n - 88)/96, n even
struct FormulaId {
  enum Kind {
    StarMax,
    PathMin,
    Spur,
    Broom,
    MatchingBound,
    IndependenceBound,
    PerfectMatchingBound,
  } kind;
  int n;
  int param = 0;  // m / delta / beta / alpha; unused for the others
};

Rational closed_form(const FormulaId& f);

// direct spellings of the same formulas
Rational star_max(int n);
Rational path_min(int n);
Rational spur_closed_form(int n, int m);
Rational broom_closed_form(int n, int delta);
Rational matching_bound(int n, int beta);
Rational independence_bound(int n, int alpha);
Rational perfect_matching_bound(int n);

}  // namespace harary
