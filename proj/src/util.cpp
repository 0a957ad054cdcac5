#include "qbps/util.hpp"

#include <cctype>

namespace qbps {

Rational parse_rational(std::string_view s) {
  auto bad = [&] { throw input_error("bad rational literal: '" + std::string(s) + "'"); };
  if (s.empty()) bad();
  std::string clean;
  clean.reserve(s.size());
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) clean.push_back(c);
  if (clean.empty()) bad();
  if (clean.front() == '+') clean.erase(clean.begin());
  if (clean.empty()) bad();
  std::size_t slash = clean.find('/');
  std::string num = slash == std::string::npos ? clean : clean.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : clean.substr(slash + 1);
  auto digits_ok = [](const std::string& t, bool sign_ok) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (sign_ok && (t[0] == '-')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (!digits_ok(num, true) || !digits_ok(den, false)) bad();
  mpq_class r;
  if (den == "0") throw input_error("zero denominator in rational literal");
  r = mpq_class(num) / mpq_class(den);
  r.canonicalize();
  return r;
}

std::string rational_str(const Rational& r) {
  return r.get_str();
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<int> first_primes(int n) {
  std::vector<int> ps;
  for (int c = 2; static_cast<int>(ps.size()) < n; ++c)
    if (is_prime(c)) ps.push_back(c);
  return ps;
}

int mobius(int n) {
  if (n < 1) throw internal_error("mobius of non-positive argument");
  int result = 1;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

}  // namespace qbps
