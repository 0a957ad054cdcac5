#include "qbps/tate.hpp"

#include <sstream>

namespace qbps {

TatePoly::TatePoly(const Rational& c) {
  if (c != 0) c_[0] = c;
}

TatePoly::TatePoly(long long c) {
  if (c != 0) c_[0] = Rational(static_cast<long>(c));
}

TatePoly TatePoly::monomial(int exp, const Rational& c) {
  TatePoly p;
  if (c != 0) p.c_[exp] = c;
  return p;
}

bool TatePoly::is_one() const {
  return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1;
}

Rational TatePoly::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? Rational(0) : it->second;
}

void TatePoly::set_coeff(int exp, const Rational& c) {
  if (c == 0)
    c_.erase(exp);
  else
    c_[exp] = c;
}

int TatePoly::min_exp() const {
  if (c_.empty()) throw internal_error("min_exp of zero polynomial");
  return c_.begin()->first;
}

int TatePoly::max_exp() const {
  if (c_.empty()) throw internal_error("max_exp of zero polynomial");
  return c_.rbegin()->first;
}

TatePoly TatePoly::operator+(const TatePoly& o) const {
  TatePoly r = *this;
  r += o;
  return r;
}

TatePoly& TatePoly::operator+=(const TatePoly& o) {
  for (const auto& [e, c] : o.c_) {
    Rational s = coeff(e) + c;
    set_coeff(e, s);
  }
  return *this;
}

TatePoly TatePoly::operator-(const TatePoly& o) const {
  TatePoly r = *this;
  r -= o;
  return r;
}

TatePoly& TatePoly::operator-=(const TatePoly& o) {
  for (const auto& [e, c] : o.c_) set_coeff(e, coeff(e) - c);
  return *this;
}

TatePoly TatePoly::operator-() const {
  TatePoly r;
  for (const auto& [e, c] : c_) r.c_[e] = -c;
  return r;
}

TatePoly TatePoly::operator*(const TatePoly& o) const {
  TatePoly r;
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : o.c_) {
      Rational s = r.coeff(e1 + e2) + c1 * c2;
      r.set_coeff(e1 + e2, s);
    }
  return r;
}

TatePoly TatePoly::scaled(const Rational& c) const {
  TatePoly r;
  if (c == 0) return r;
  for (const auto& [e, v] : c_) r.c_[e] = v * c;
  return r;
}

TatePoly TatePoly::shifted(int dexp) const {
  TatePoly r;
  for (const auto& [e, v] : c_) r.c_[e + dexp] = v;
  return r;
}

TatePoly TatePoly::pow(unsigned e) const {
  TatePoly r(Rational(1));
  TatePoly base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1u;
  }
  return r;
}

TatePoly TatePoly::psi(int k) const {
  if (k < 1) throw input_error("psi requires k >= 1");
  TatePoly r;
  for (const auto& [e, c] : c_) {
    bool flip = (e % 2 != 0) && (k % 2 == 0);  // (-1)^{e(k+1)}
    r.c_[e * k] = flip ? Rational(-c) : c;
  }
  return r;
}

TatePoly TatePoly::subst_power(int k) const {
  if (k == 0) throw input_error("subst_power requires k != 0");
  TatePoly r;
  for (const auto& [e, c] : c_) r.c_[e * k] = c;
  return r;
}

std::string TatePoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : c_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool unit = (a == 1);
    if (e == 0) {
      os << rational_str(a);
    } else {
      if (!unit) os << rational_str(a) << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

nlohmann::json TatePoly::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [e, c] : c_) j["t^" + std::to_string(e)] = rational_str(c);
  return j;
}

TatePoly TatePoly::from_json(const nlohmann::json& j) {
  TatePoly p;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (key.rfind("t^", 0) != 0) throw input_error("bad TatePoly key '" + key + "'");
    p.set_coeff(std::stoi(key.substr(2)), parse_rational(it.value().get<std::string>()));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Dense polynomial helpers for gcd/division (valuation-0 coefficient vectors).

namespace {

using Dense = std::vector<Rational>;  // index = exponent, front() != 0 not required

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Dense to_dense(const TatePoly& p, int shift) {
  Dense out;
  if (p.is_zero()) return out;
  out.assign(p.max_exp() - shift + 1, Rational(0));
  for (const auto& [e, c] : p.terms()) out[e - shift] = c;
  return out;
}

TatePoly from_dense(const Dense& a, int shift) {
  TatePoly p;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) p.set_coeff(static_cast<int>(i) + shift, a[i]);
  return p;
}

// Remainder of a by monic-normalized b.
Dense poly_mod(Dense a, const Dense& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    trim(a);
  }
  return a;
}

void make_monic(Dense& a) {
  trim(a);
  if (a.empty()) return;
  Rational lead = a.back();
  for (auto& c : a) c /= lead;
}

Dense poly_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = poly_mod(a, b);
    make_monic(r);
    a = std::move(b);
    b = std::move(r);
  }
  make_monic(a);
  return a;
}

// Exact division; requires divisibility.
Dense poly_div_exact(Dense a, const Dense& b) {
  trim(a);
  Dense q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    q[off] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    trim(a);
  }
  if (!a.empty()) throw internal_error("inexact polynomial division");
  return q;
}

}  // namespace

// ---------------------------------------------------------------------------
// TateRational

TateRational::TateRational(const TatePoly& num) : num_(num), den_(Rational(1)) {}

TateRational::TateRational(const Rational& c) : num_(c), den_(Rational(1)) {}

TateRational::TateRational(const TatePoly& num, const TatePoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw input_error("zero denominator");
  reduce();
}

TateRational TateRational::monomial(int exp, const Rational& c) {
  return TateRational(TatePoly::monomial(exp, c));
}

TateRational TateRational::geometric(int exp, const Rational& c) {
  TatePoly den(Rational(1));
  den -= TatePoly::monomial(exp, c);
  return TateRational(TatePoly(Rational(1)), den);
}

bool TateRational::is_one() const { return num_.is_one() && den_.is_one(); }

bool TateRational::is_polynomial() const { return den_.is_one(); }

TatePoly TateRational::as_polynomial() const {
  if (!is_polynomial()) throw internal_error("TateRational is not a Laurent polynomial: " + str());
  return num_;
}

void TateRational::reduce() {
  if (num_.is_zero()) {
    den_ = TatePoly(Rational(1));
    return;
  }
  int vn = num_.min_exp();
  int vd = den_.min_exp();
  Dense n = to_dense(num_, vn);
  Dense d = to_dense(den_, vd);
  Dense g = poly_gcd(n, d);
  if (g.size() > 1) {
    n = poly_div_exact(std::move(n), g);
    d = poly_div_exact(std::move(d), g);
  }
  // Leave the monomial shift entirely on the numerator; normalize the
  // denominator to constant coefficient 1 (its valuation is 0 here).
  Rational unit = d.front();
  for (auto& c : n) c /= unit;
  for (auto& c : d) c /= unit;
  num_ = from_dense(n, vn - vd);
  den_ = from_dense(d, 0);
}

TateRational TateRational::operator+(const TateRational& o) const {
  return TateRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

TateRational& TateRational::operator+=(const TateRational& o) {
  *this = *this + o;
  return *this;
}

TateRational TateRational::operator-(const TateRational& o) const {
  return TateRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

TateRational TateRational::operator-() const {
  TateRational r = *this;
  r.num_ = -r.num_;
  return r;
}

TateRational TateRational::operator*(const TateRational& o) const {
  if (num_.is_zero() || o.num_.is_zero()) return TateRational();
  return TateRational(num_ * o.num_, den_ * o.den_);
}

TateRational TateRational::operator/(const TateRational& o) const {
  if (o.num_.is_zero()) throw input_error("division by zero rational function");
  if (num_.is_zero()) return TateRational();
  return TateRational(num_ * o.den_, den_ * o.num_);
}

bool TateRational::operator==(const TateRational& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

TateRational TateRational::psi(int k) const {
  return TateRational(num_.psi(k), den_.psi(k));
}

TateRational TateRational::subst_power(int k) const {
  return TateRational(num_.subst_power(k), den_.subst_power(k));
}

TatePoly TateRational::expand_descending(int lo) const {
  TatePoly out;
  if (num_.is_zero()) return out;
  TatePoly rem = num_;
  int dtop = den_.max_exp();
  Rational dlead = den_.coeff(dtop);
  while (!rem.is_zero()) {
    int e = rem.max_exp() - dtop;
    if (e < lo) break;
    Rational c = rem.coeff(rem.max_exp()) / dlead;
    out.set_coeff(e, c);
    rem -= den_.scaled(c).shifted(e);
  }
  return out;
}

TatePoly TateRational::expand_ascending(int hi) const {
  TatePoly out;
  if (num_.is_zero()) return out;
  TatePoly rem = num_;
  int dbot = den_.min_exp();
  Rational dlead = den_.coeff(dbot);
  while (!rem.is_zero()) {
    int e = rem.min_exp() - dbot;
    if (e > hi) break;
    Rational c = rem.coeff(rem.min_exp()) / dlead;
    out.set_coeff(e, c);
    rem -= den_.scaled(c).shifted(e);
  }
  return out;
}

std::string TateRational::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

nlohmann::json TateRational::to_json() const {
  return {{"num", num_.to_json()}, {"den", den_.to_json()}};
}

}  // namespace qbps
