#pragma once

#include "qbps/quiver.hpp"
#include "qbps/tate.hpp"

#include <map>
#include <vector>

namespace qbps {

enum class PsiKind {
  signed_super,  // t^j -> (-1)^{j(k+1)} t^{jk}: Sym on even, exterior on odd
  plain          // t^j -> t^{jk}
};

// Truncated formal series sum_d c_d(t) x^d over d in N^nvert with
// sum_i d_i <= cutoff and TateRational coefficients.
class GradedSeries {
public:
  GradedSeries(int nvert, int cutoff);
  static GradedSeries one(int nvert, int cutoff);

  int nvert() const { return nvert_; }
  int cutoff() const { return cutoff_; }
  const std::map<DimVector, TateRational>& coeffs() const { return c_; }
  TateRational coeff(const DimVector& d) const;
  TateRational constant_term() const;
  void set_coeff(const DimVector& d, const TateRational& c);
  void add_coeff(const DimVector& d, const TateRational& c);
  std::vector<DimVector> support() const;  // nonzero d (including 0 if present)

  GradedSeries operator+(const GradedSeries& o) const;
  GradedSeries operator-(const GradedSeries& o) const;
  GradedSeries operator*(const GradedSeries& o) const;  // truncated convolution
  GradedSeries scaled(const TateRational& c) const;
  bool operator==(const GradedSeries& o) const;

  // Adams operation: substitutes in t per `kind` and x^d -> x^{kd}; terms
  // leaving the cutoff are dropped.
  GradedSeries psi(int k, PsiKind kind) const;

  nlohmann::json to_json() const;  // [{"d":[...],"coeff":{"num":...,"den":...}}]

private:
  void check_compatible(const GradedSeries& o) const;
  int nvert_;
  int cutoff_;
  std::map<DimVector, TateRational> c_;
};

// exp of a series with zero constant term / log of a series with constant
// term 1, truncated at the cutoff.
GradedSeries series_exp(const GradedSeries& g);
GradedSeries series_log(const GradedSeries& f);

// Character-level free supercommutative algebra on the generators of f:
// exp(sum_{k>=1} psi_k(f)/k) with the signed Adams operation.  Requires
// zero constant term.
GradedSeries super_exp(const GradedSeries& f);
// Inverse of super_exp: sum_{k>=1} (mobius(k)/k) psi_k(log F).  Requires
// constant term 1.
GradedSeries super_log(const GradedSeries& f);

// Classical plethystic Exp/Log (plain Adams operation), used by the
// generating-function Kac backend.
GradedSeries pleth_exp(const GradedSeries& f);
GradedSeries pleth_log(const GradedSeries& f);

// One generator of a free supercommutative algebra: multiplicity `mult`
// in cohomological degree `t_exp` and x-degree `d`.
struct SymGenerator {
  int t_exp = 0;
  DimVector d;
  long long mult = 0;
};

// prod over generators of (1 - t^j x^d)^{-c} for even j and (1 + t^j x^d)^c
// for odd j; agrees with super_exp on the corresponding polynomial input.
GradedSeries sym_generators_product(int nvert, int cutoff,
                                    const std::vector<SymGenerator>& gens);

}  // namespace qbps
