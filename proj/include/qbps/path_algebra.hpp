#pragma once

#include "qbps/quiver.hpp"

#include <map>
#include <string>
#include <vector>

namespace qbps {

// A path in the path algebra CQ.  Words compose left-to-right: the word
// (a, b) means a followed by b and requires t(a) = s(b).  An empty arrow
// list is the lazy path e_v at vertex v.
struct Path {
  std::string base;                 // vertex of e_v for lazy paths, else the source vertex
  std::vector<std::string> arrows;  // arrow ids

  static Path lazy(std::string vertex);
  // Validates composability against the quiver.
  static Path word(const Quiver& q, std::vector<std::string> arrow_ids);

  bool is_lazy() const { return arrows.empty(); }
  std::string source(const Quiver& q) const;
  std::string target(const Quiver& q) const;
  std::string str() const;  // "a.b.c" or "e_0"
};

bool operator<(const Path& a, const Path& b);   // (length, arrow ids, base)
bool operator==(const Path& a, const Path& b);

// Element of the free path algebra with rational coefficients.
class NCPoly {
public:
  NCPoly() = default;
  static NCPoly path(Path p, const Rational& c = Rational(1));
  static NCPoly lazy(const std::string& vertex, const Rational& c = Rational(1));

  bool is_zero() const { return t_.empty(); }
  const std::map<Path, Rational>& terms() const { return t_; }
  void add_term(const Path& p, const Rational& c);

  NCPoly operator+(const NCPoly& o) const;
  NCPoly operator-(const NCPoly& o) const;
  NCPoly operator-() const;
  NCPoly scaled(const Rational& c) const;
  bool operator==(const NCPoly& o) const { return t_ == o.t_; }

  // Path-algebra product; non-composable products vanish.
  NCPoly mul(const Quiver& q, const NCPoly& o) const;

  std::string str() const;

private:
  std::map<Path, Rational> t_;
};

// Text format: "1 * a.b - 1/2 * e_0"; terms are separated by " + " / " - ",
// a coefficient prefix "c *" is optional on input and always printed.
NCPoly parse_ncpoly(const Quiver& q, std::string_view text);
std::string ncpoly_str(const NCPoly& p);

namespace detail {
struct RawTerm {
  Rational coeff;
  std::string word;
};
bool is_zero_literal(std::string_view text);
std::vector<RawTerm> split_terms(std::string_view text);
std::vector<std::string> split_word(const std::string& w);
}  // namespace detail

}  // namespace qbps
