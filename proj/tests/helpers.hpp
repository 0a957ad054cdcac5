#pragma once

#include "qbps/bps.hpp"
#include "qbps/kac.hpp"
#include "qbps/kac_hua.hpp"

#include <map>
#include <random>

namespace qbps::testing {

// Memoizes a provider across test cases (keyed by quiver hash and d).
inline KacProvider memoized(KacProvider inner) {
  auto cache = std::make_shared<std::map<std::pair<uint64_t, DimVector>, IntPoly>>();
  return [inner, cache](const Quiver& q, const DimVector& d) {
    auto key = std::make_pair(q.hash(), d);
    auto it = cache->find(key);
    if (it != cache->end()) return it->second;
    IntPoly p = inner(q, d);
    (*cache)[key] = p;
    return p;
  };
}

inline const KacProvider& oracle() {
  static KacProvider p = memoized(make_oracle_provider(KacOptions{}));
  return p;
}

inline const KacProvider& hua() {
  static KacProvider p = memoized(make_hua_provider());
  return p;
}

inline const KacProvider& hybrid() {
  static KacProvider p = memoized(make_hybrid_provider(KacOptions{}));
  return p;
}

// Deterministic RNG for property tests.
inline int rnd(std::mt19937& gen, int lo, int hi) {
  return lo + static_cast<int>(gen() % static_cast<unsigned>(hi - lo + 1));
}

// Truncated bivariate expansion oracle, independent of the plethystic
// machinery: a polynomial in x whose coefficients are t-windows.
struct WindowSeries {
  int xmax;
  int tmax;
  std::vector<TatePoly> c;  // index = x-degree

  WindowSeries(int xdeg, int tcap) : xmax(xdeg), tmax(tcap), c(xdeg + 1) {}

  static WindowSeries one(int xdeg, int tcap) {
    WindowSeries s(xdeg, tcap);
    s.c[0] = TatePoly(Rational(1));
    return s;
  }

  void clip() {
    for (auto& poly : c) {
      TatePoly kept;
      for (const auto& [e, v] : poly.terms())
        if (e <= tmax) kept.set_coeff(e, v);
      poly = kept;
    }
  }

  WindowSeries mul(const WindowSeries& o) const {
    WindowSeries r(xmax, tmax);
    for (int i = 0; i <= xmax; ++i)
      for (int j = 0; i + j <= xmax; ++j) r.c[i + j] += c[i] * o.c[j];
    r.clip();
    return r;
  }
};

// prod_{i >= 0} (1 + t^{j0 + step*i} x) within the window (fermionic factors).
inline WindowSeries window_product_odd(int j0, int step, int xmax, int tmax) {
  WindowSeries acc = WindowSeries::one(xmax, tmax);
  for (int j = j0; j <= tmax; j += step) {
    WindowSeries f = WindowSeries::one(xmax, tmax);
    if (xmax >= 1) f.c[1] = TatePoly::monomial(j);
    acc = acc.mul(f);
  }
  return acc;
}

// prod_{i >= 0} (1 - t^{j0 + step*i} x)^{-1} within the window.
inline WindowSeries window_product_even(int j0, int step, int xmax, int tmax) {
  WindowSeries acc = WindowSeries::one(xmax, tmax);
  for (int j = j0; j == 0 || j <= tmax; j += step) {
    WindowSeries f(xmax, tmax);
    for (int m = 0; m <= xmax; ++m) {
      long long texp = static_cast<long long>(j) * m;
      if (texp > tmax) break;
      f.c[m] = TatePoly::monomial(static_cast<int>(texp));
    }
    acc = acc.mul(f);
    if (j == 0 && step == 0) break;
  }
  return acc;
}

}  // namespace qbps::testing
