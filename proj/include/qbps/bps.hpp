#pragma once

#include "qbps/graded_series.hpp"
#include "qbps/kac.hpp"
#include "qbps/quiver.hpp"
#include "qbps/tate.hpp"

namespace qbps {

// Multiset of half-integer Tate twists, stored as doubled exponents.
// L^{k/2} with multiplicity m is the entry {k, m}.
struct HodgeEntry {
  int twice_exp = 0;
  long long mult = 0;
  bool operator==(const HodgeEntry&) const = default;
};
using HodgeMultiset = std::vector<HodgeEntry>;  // ascending twice_exp

nlohmann::json hodge_to_json(const HodgeMultiset& h);  // [{"L_exp_times_2":-1,"mult":1}]
std::string hodge_str(const HodgeMultiset& h);         // "{L^-1/2, L^-3/2}"
// Character under L^{k/2} -> t^k; always reproduces the matching refined
// invariant.
TatePoly hodge_character(const HodgeMultiset& h);

// Refined BPS invariant of the quadratically mu-deformed tripled quiver:
// sum_i a_{Q,d,i} t^{-2i} when mu.d != 0, and the same times t^{-1} when
// mu.d = 0 (the undeformed grading).
TatePoly dt_refined(const Quiver& q, const MuVector& mu, const DimVector& d,
                    const KacProvider& kac);
// Hodge-theoretic refinement: L^{-i} (resp. L^{-i-1/2}) with multiplicity
// a_{Q,d,i}.
HodgeMultiset dt_hodge(const Quiver& q, const MuVector& mu, const DimVector& d,
                       const KacProvider& kac);

// The deformation power n enters only through two computed regimes:
// n = 2 is dt_refined; n = 1 keeps the undeformed invariant on mu.d = 0
// and kills everything else.
TatePoly dt_general_power(const Quiver& q, const MuVector& mu, const DimVector& d, int n,
                          const KacProvider& kac);

// sum_d x^d t^{chi(d,d)} prod_i prod_{k=1}^{d_i} (1 - t^{2k})^{-1}:
// the character of the free Hall algebra of Q (no potential).
GradedSeries free_coha_series(const Quiver& q, int cutoff);

// super_exp of sum_{d != 0} x^d dt_refined(Q,mu,d) t/(1-t^2): the full
// Hall-algebra character via its PBW generators.
GradedSeries coha_pbw_series(const Quiver& q, const MuVector& mu, int cutoff,
                             const KacProvider& kac);

// super_exp of sum_{d != 0, mu.d = 0} x^d (sum_i a_{Q,d,i} t^{2i+1})
// t^{-1}/(1-t^{-2}): the character of
// sum_d H_c(stack of Pi_{Q,mu}-modules of dim d) (x) L^{chi(d,d)} x^d.
GradedSeries stack_series_deformed(const Quiver& q, const MuVector& mu, int cutoff,
                                   const KacProvider& kac);

// {L^{1+i-chi(d,d)} with multiplicity a_{Q,d,i}}: the compactly supported
// cohomology of the smooth moduli scheme, for indivisible d and mu generic
// subject to mu.d = 0.  Genericity is verified within the given horizon.
HodgeMultiset moduli_cohomology_indivisible(const Quiver& q, const MuVector& mu,
                                            const DimVector& d, const KacProvider& kac,
                                            int genericity_horizon = 12);

// super_log(F) with every coefficient divided by vir_factor: recovers the
// BPS generator series from a total series.
GradedSeries integrality_invert(const GradedSeries& f, const TateRational& vir_factor);

// t/(1-t^2): character of Q[u] shifted by [-1] (the PBW tensor factor).
TateRational coha_vir_factor();
// t^{-1}/(1-t^{-2}): character of H_c(pt/C^*)_vir.
TateRational stack_vir_factor();

}  // namespace qbps
