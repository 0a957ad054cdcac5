#include "qbps/kac_hua.hpp"

#include "qbps/graded_series.hpp"

#include <functional>
#include <map>

namespace qbps {

namespace {

using Partition = std::vector<int>;  // parts, weakly decreasing

void gen_partitions(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    gen_partitions(n - part, part, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  gen_partitions(n, n == 0 ? 1 : n, cur, out);
  return out;
}

// <l,m> = sum_i l'_i m'_i over conjugate parts.
long long conj_pairing(const Partition& l, const Partition& m) {
  if (l.empty() || m.empty()) return 0;
  int top = std::min(l[0], m[0]);
  long long s = 0;
  for (int i = 1; i <= top; ++i) {
    long long lp = 0, mp = 0;
    for (int part : l) lp += part >= i;
    for (int part : m) mp += part >= i;
    s += lp * mp;
  }
  return s;
}

// b_l(q^{-1}) = prod_j prod_{k=1}^{mult_j} (1 - q^{-k}) as a TatePoly in q.
TatePoly b_inv_q(const Partition& l) {
  TatePoly out(Rational(1));
  std::map<int, int> mult;
  for (int part : l) mult[part]++;
  for (const auto& [part, m] : mult) {
    (void)part;
    for (int k = 1; k <= m; ++k) {
      TatePoly factor(Rational(1));
      factor -= TatePoly::monomial(-k);
      out = out * factor;
    }
  }
  return out;
}

void tuples_rec(const std::vector<std::vector<Partition>>& choices, std::size_t i,
                std::vector<const Partition*>& cur,
                const std::function<void(const std::vector<const Partition*>&)>& fn) {
  if (i == choices.size()) {
    fn(cur);
    return;
  }
  for (const Partition& p : choices[i]) {
    cur[i] = &p;
    tuples_rec(choices, i + 1, cur, fn);
  }
}

}  // namespace

IntPoly kac_polynomial_hua(const Quiver& q, const DimVector& d) {
  check_dim(q, d);
  if (is_zero_dim(d)) throw input_error("Kac polynomials are indexed by nonzero dimension vectors");
  int n = q.num_vertices();
  int cutoff = static_cast<int>(dim_total(d));

  // Partition sets per weight, shared across vertices.
  std::vector<std::vector<Partition>> parts_of(cutoff + 1);
  for (int w = 0; w <= cutoff; ++w) parts_of[w] = partitions_of(w);

  GradedSeries series(n, cutoff);
  // Enumerate weight vectors e with sum <= cutoff, then partition tuples.
  DimVector e(n, 0);
  std::function<void(int, int)> rec = [&](int vtx, int left) {
    if (vtx == n) {
      std::vector<std::vector<Partition>> choices(n);
      for (int i = 0; i < n; ++i) choices[i] = parts_of[e[i]];
      std::vector<const Partition*> cur(n, nullptr);
      TateRational total;
      tuples_rec(choices, 0, cur, [&](const std::vector<const Partition*>& pi) {
        long long exp = 0;
        for (const Arrow& a : q.arrows()) exp += conj_pairing(*pi[a.from], *pi[a.to]);
        for (int i = 0; i < n; ++i) exp -= conj_pairing(*pi[i], *pi[i]);
        TatePoly den(Rational(1));
        for (int i = 0; i < n; ++i) den = den * b_inv_q(*pi[i]);
        total += TateRational(TatePoly::monomial(static_cast<int>(exp)), den);
      });
      series.set_coeff(e, total);
      return;
    }
    for (int w = 0; w <= left; ++w) {
      e[vtx] = w;
      rec(vtx + 1, left - w);
    }
    e[vtx] = 0;
  };
  rec(0, cutoff);

  GradedSeries lg = pleth_log(series);
  TatePoly qminus1 = TatePoly::monomial(1) - TatePoly(Rational(1));
  TateRational a_d = lg.coeff(d) * TateRational(qminus1);

  if (!a_d.is_polynomial())
    throw internal_error("generating-function Kac value is not a polynomial");
  IntPoly out;
  TatePoly poly = a_d.as_polynomial();
  for (const auto& [exp, c] : poly.terms()) {
    if (exp < 0 || c.get_den() != 1 || c < 0)
      throw internal_error("generating-function Kac value has a bad coefficient");
    out[exp] = static_cast<long long>(c.get_num().get_si());
  }
  return out;
}

}  // namespace qbps
