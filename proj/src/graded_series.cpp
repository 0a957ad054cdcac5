#include "qbps/graded_series.hpp"

namespace qbps {

GradedSeries::GradedSeries(int nvert, int cutoff) : nvert_(nvert), cutoff_(cutoff) {
  if (nvert < 1) throw input_error("series needs at least one vertex");
  if (cutoff < 0) throw input_error("series cutoff must be non-negative");
}

GradedSeries GradedSeries::one(int nvert, int cutoff) {
  GradedSeries s(nvert, cutoff);
  s.set_coeff(DimVector(nvert, 0), TateRational(Rational(1)));
  return s;
}

TateRational GradedSeries::coeff(const DimVector& d) const {
  auto it = c_.find(d);
  return it == c_.end() ? TateRational() : it->second;
}

TateRational GradedSeries::constant_term() const { return coeff(DimVector(nvert_, 0)); }

void GradedSeries::set_coeff(const DimVector& d, const TateRational& c) {
  if (static_cast<int>(d.size()) != nvert_) throw input_error("dimension vector length mismatch");
  if (dim_total(d) > cutoff_) return;
  if (c.is_zero())
    c_.erase(d);
  else
    c_[d] = c;
}

void GradedSeries::add_coeff(const DimVector& d, const TateRational& c) {
  if (static_cast<int>(d.size()) != nvert_) throw input_error("dimension vector length mismatch");
  if (dim_total(d) > cutoff_ || c.is_zero()) return;
  auto it = c_.find(d);
  if (it == c_.end()) {
    c_[d] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

std::vector<DimVector> GradedSeries::support() const {
  std::vector<DimVector> out;
  out.reserve(c_.size());
  for (const auto& [d, c] : c_) {
    (void)c;
    out.push_back(d);
  }
  return out;
}

void GradedSeries::check_compatible(const GradedSeries& o) const {
  if (nvert_ != o.nvert_ || cutoff_ != o.cutoff_)
    throw input_error("series grading/cutoff mismatch");
}

GradedSeries GradedSeries::operator+(const GradedSeries& o) const {
  check_compatible(o);
  GradedSeries r = *this;
  for (const auto& [d, c] : o.c_) r.add_coeff(d, c);
  return r;
}

GradedSeries GradedSeries::operator-(const GradedSeries& o) const {
  check_compatible(o);
  GradedSeries r = *this;
  for (const auto& [d, c] : o.c_) r.add_coeff(d, -c);
  return r;
}

GradedSeries GradedSeries::operator*(const GradedSeries& o) const {
  check_compatible(o);
  GradedSeries r(nvert_, cutoff_);
  for (const auto& [d1, c1] : c_) {
    long long t1 = dim_total(d1);
    for (const auto& [d2, c2] : o.c_) {
      if (t1 + dim_total(d2) > cutoff_) continue;
      DimVector d(nvert_);
      for (int i = 0; i < nvert_; ++i) d[i] = d1[i] + d2[i];
      r.add_coeff(d, c1 * c2);
    }
  }
  return r;
}

GradedSeries GradedSeries::scaled(const TateRational& c) const {
  GradedSeries r(nvert_, cutoff_);
  if (c.is_zero()) return r;
  for (const auto& [d, v] : c_) r.c_[d] = v * c;
  return r;
}

bool GradedSeries::operator==(const GradedSeries& o) const {
  if (nvert_ != o.nvert_ || cutoff_ != o.cutoff_) return false;
  if (c_.size() != o.c_.size()) return false;
  for (const auto& [d, c] : c_) {
    auto it = o.c_.find(d);
    if (it == o.c_.end() || !(it->second == c)) return false;
  }
  return true;
}

GradedSeries GradedSeries::psi(int k, PsiKind kind) const {
  if (k < 1) throw input_error("psi requires k >= 1");
  GradedSeries r(nvert_, cutoff_);
  for (const auto& [d, c] : c_) {
    if (dim_total(d) * k > cutoff_) continue;
    DimVector kd(nvert_);
    for (int i = 0; i < nvert_; ++i) kd[i] = d[i] * k;
    r.add_coeff(kd, kind == PsiKind::signed_super ? c.psi(k) : c.subst_power(k));
  }
  return r;
}

nlohmann::json GradedSeries::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [d, c] : c_) j.push_back({{"d", d}, {"coeff", c.to_json()}});
  return j;
}

GradedSeries series_exp(const GradedSeries& g) {
  if (!g.constant_term().is_zero())
    throw input_error("series_exp requires zero constant term");
  GradedSeries acc = GradedSeries::one(g.nvert(), g.cutoff());
  GradedSeries power = GradedSeries::one(g.nvert(), g.cutoff());
  Rational factorial(1);
  for (int m = 1; m <= g.cutoff(); ++m) {
    power = power * g;
    if (power.coeffs().empty()) break;
    factorial *= m;
    acc = acc + power.scaled(TateRational(Rational(1) / factorial));
  }
  return acc;
}

GradedSeries series_log(const GradedSeries& f) {
  if (!f.constant_term().is_one())
    throw input_error("series_log requires constant term 1");
  GradedSeries h = f - GradedSeries::one(f.nvert(), f.cutoff());
  GradedSeries acc(f.nvert(), f.cutoff());
  GradedSeries power = GradedSeries::one(f.nvert(), f.cutoff());
  for (int m = 1; m <= f.cutoff(); ++m) {
    power = power * h;
    if (power.coeffs().empty()) break;
    Rational c = Rational(m % 2 == 1 ? 1 : -1) / m;
    acc = acc + power.scaled(TateRational(c));
  }
  return acc;
}

namespace {

GradedSeries pleth_exp_impl(const GradedSeries& f, PsiKind kind) {
  if (!f.constant_term().is_zero())
    throw input_error("plethystic exponential requires zero constant term");
  GradedSeries acc(f.nvert(), f.cutoff());
  for (int k = 1; k <= f.cutoff(); ++k) {
    GradedSeries pk = f.psi(k, kind);
    if (pk.coeffs().empty()) continue;
    acc = acc + pk.scaled(TateRational(Rational(1, k)));
  }
  return series_exp(acc);
}

GradedSeries pleth_log_impl(const GradedSeries& f, PsiKind kind) {
  if (!f.constant_term().is_one())
    throw input_error("plethystic logarithm requires constant term 1");
  GradedSeries lg = series_log(f);
  GradedSeries acc(f.nvert(), f.cutoff());
  for (int k = 1; k <= f.cutoff(); ++k) {
    int mu = mobius(k);
    if (mu == 0) continue;
    GradedSeries pk = lg.psi(k, kind);
    if (pk.coeffs().empty()) continue;
    acc = acc + pk.scaled(TateRational(Rational(mu, k)));
  }
  return acc;
}

}  // namespace

GradedSeries super_exp(const GradedSeries& f) { return pleth_exp_impl(f, PsiKind::signed_super); }
GradedSeries super_log(const GradedSeries& f) { return pleth_log_impl(f, PsiKind::signed_super); }
GradedSeries pleth_exp(const GradedSeries& f) { return pleth_exp_impl(f, PsiKind::plain); }
GradedSeries pleth_log(const GradedSeries& f) { return pleth_log_impl(f, PsiKind::plain); }

GradedSeries sym_generators_product(int nvert, int cutoff,
                                    const std::vector<SymGenerator>& gens) {
  GradedSeries acc = GradedSeries::one(nvert, cutoff);
  for (const SymGenerator& g : gens) {
    if (g.mult < 0) throw input_error("generator multiplicities must be non-negative");
    if (g.mult == 0) continue;
    if (static_cast<int>(g.d.size()) != nvert) throw input_error("generator grading mismatch");
    long long step = dim_total(g.d);
    if (step == 0) throw input_error("generators must have nonzero x-degree");
    GradedSeries factor(nvert, cutoff);
    bool odd = ((g.t_exp % 2) + 2) % 2 == 1;
    Rational binom(1);
    for (int m = 0; m * step <= cutoff; ++m) {
      if (odd && m > g.mult) break;
      if (m > 0) {
        // binom(c,m) for odd degree, binom(c-1+m,m) for even degree.
        binom *= Rational(static_cast<long>(odd ? g.mult - m + 1 : g.mult - 1 + m));
        binom /= m;
      }
      DimVector d(nvert);
      for (int i = 0; i < nvert; ++i) d[i] = g.d[i] * m;
      factor.add_coeff(d, TateRational(TatePoly::monomial(g.t_exp * m, binom)));
    }
    acc = acc * factor;
  }
  return acc;
}

}  // namespace qbps
