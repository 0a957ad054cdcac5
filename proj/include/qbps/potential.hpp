#pragma once

#include "qbps/path_algebra.hpp"

#include <map>
#include <string>
#include <vector>

namespace qbps {

// Canonical representative of a cyclic path: the lexicographically minimal
// rotation of its arrow-id sequence.
using CyclicWord = std::vector<std::string>;

// Throws input_error unless `word` is a nonempty closed composable path.
CyclicWord cyclic_normalize(const Quiver& q, const std::vector<std::string>& word);

// Rational linear combination of cyclic words, i.e. an element of
// CQ/[CQ,CQ].  Terms are stored in canonical rotation with no zeros.
class Potential {
public:
  Potential() = default;

  bool is_zero() const { return t_.empty(); }
  const std::map<CyclicWord, Rational>& terms() const { return t_; }
  // Normalizes the word cyclically before inserting.
  void add_word(const Quiver& q, const std::vector<std::string>& word, const Rational& c);
  void add_canonical(const CyclicWord& w, const Rational& c);

  Potential operator+(const Potential& o) const;
  Potential operator-(const Potential& o) const;
  Potential scaled(const Rational& c) const;
  bool operator==(const Potential& o) const { return t_ == o.t_; }

private:
  std::map<CyclicWord, Rational> t_;
};

// d/da of W: for each occurrence of a in a cyclic word, the word read
// cyclically starting just after that occurrence.  Result is a sum of
// paths from t(a) to s(a).
NCPoly cyclic_derivative(const Quiver& q, const Potential& w, const std::string& arrow);

// One relation per arrow of q, in arrow order.
std::vector<std::pair<std::string, NCPoly>> jacobi_relations(const Quiver& q, const Potential& w);

// The canonical cubic potential on triple_quiver(base): the expansion of
// (sum_a [a,a*]) (sum_i w_i) with non-composable products dropped, i.e.
// sum_a ( a.a*.w_{s(a)} - a*.a.w_{t(a)} ).
Potential tripled_potential(const Quiver& base);

// tripled_potential plus sum_i (mu_i/n) w_i^n.
Potential mu_potential(const Quiver& base, const MuVector& mu, int n);

struct KwData {
  Quiver quiver;  // double of the affine A_1 quiver
  Potential w;
};
// The quartic conifold potential on the doubled affine A_1 quiver, cyclically
// a.a*.b*.b - a*.a.b.b*.
KwData kw_potential();

// Substitutes sigma(arrow) for each arrow occurrence, multilinearly; each
// image must be a sum of paths parallel to the arrow it replaces.  Arrows
// absent from sigma map to themselves.
Potential substitute(const Quiver& q, const Potential& w,
                     const std::map<std::string, NCPoly>& sigma);
NCPoly substitute(const Quiver& q, const NCPoly& p, const std::map<std::string, NCPoly>& sigma);

bool potentials_equal(const Potential& a, const Potential& b);

// sum_c [c, dW/dc] over all arrows; identically zero for every potential.
NCPoly necklace_check(const Quiver& q, const Potential& w);

// Text format: "1/2 * w.w - 1 * a.b", parsed against the quiver's arrow
// table; printing emits the canonical form and round-trips bit-exactly.
Potential parse_potential(const Quiver& q, std::string_view text);
std::string potential_str(const Potential& w);

// Verifies that the Jacobi relations of the quadratically deformed tripled
// potential are exactly the deformed preprojective relations: at w_i the
// relation e_i (sum_a [a,a*]) e_i + mu_i w_i, at a the relation
// a*.w_{s(a)} - w_{t(a)}.a*, and at a* the relation w_{s(a)}.a - a.w_{t(a)}.
struct GkwReport {
  bool pass = false;
  std::string detail;
};
GkwReport check_gkw(const Quiver& base, const MuVector& mu);

// Verifies the noncommutative conifold change of variables: substituting
// w_0 -> w_0 - a.a* + b*.b, w_1 -> w_1 - a*.a + b.b* into the mu = (1,-1)
// deformed tripled potential of the affine A_1 quiver yields
// 1/2 w_0^2 - 1/2 w_1^2 + b*.b.a.a* - b.b*.a*.a up to cyclic equivalence.
struct ConifoldReport {
  bool pass = false;
  Potential computed;
  Potential expected;
  Potential residual;  // computed - expected
};
ConifoldReport check_conifold();

}  // namespace qbps
