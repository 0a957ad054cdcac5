#pragma once

#include "qbps/fp_linalg.hpp"
#include "qbps/quiver.hpp"

#include <json.hpp>

#include <functional>
#include <memory>
#include <vector>

namespace qbps {

struct OracleCaps {
  unsigned long long max_reps = 10'000'000ULL;
  unsigned long long max_group_order = 1'000'000ULL;
  unsigned long long max_end_algebra = 1ULL << 20;
};

// A point of the representation variety over F_p: one d_{t(a)} x d_{s(a)}
// matrix per arrow, in arrow order.  Representations own their quiver so
// they stay valid independently of the enumeration that produced them.
struct FqRep {
  std::shared_ptr<const Quiver> quiver;
  DimVector dim;
  int p = 2;
  std::vector<FpMat> mats;
};

// Bijection between representations and indices 0 .. p^K - 1, K the total
// number of matrix entries.  Entry (arrow, row, col) is the base-p digit at
// position offset(arrow) + row*cols + col, least significant first; the
// "minimal element" of an orbit means minimal index.
class RepSpace {
public:
  RepSpace(const Quiver& q, DimVector d, int p, const OracleCaps& caps);

  unsigned long long total() const { return total_; }
  int digit_count() const { return digits_; }
  FqRep decode(unsigned long long idx) const;
  unsigned long long encode(const FqRep& rep) const;

private:
  std::shared_ptr<const Quiver> q_;
  DimVector d_;
  int p_;
  int digits_;
  unsigned long long total_;
  std::vector<int> arrow_rows_, arrow_cols_, arrow_offset_;
};

// Every representation exactly once, in index order.
void for_each_rep(const Quiver& q, const DimVector& d, int p, const OracleCaps& caps,
                  const std::function<void(const FqRep&)>& fn);
std::vector<FqRep> enumerate_reps(const Quiver& q, const DimVector& d, int p,
                                  const OracleCaps& caps);

// prod_i prod_{j=0}^{d_i-1} (p^{d_i} - p^j), exact.
mpz_class group_order(const DimVector& d, int p);

// Basis of the intertwiner space {f : f_{t(a)} rho(a) = rho'(a) f_{s(a)}},
// each element a tuple of per-vertex matrices.
std::vector<std::vector<FpMat>> hom_space(const FqRep& rho, const FqRep& rho2);

// End(rho)/rad has dimension 1.  Computes End, then the radical
// J = {x : 1 - yx invertible for all y} by exhaustive scan over the at most
// caps.max_end_algebra elements of End; a sound Fitting-splitting shortcut
// answers the decomposable cases without the scan.
bool is_absolutely_indecomposable(const FqRep& rho, const OracleCaps& caps);

struct OrbitReport {
  unsigned long long total_reps = 0;
  long long orbit_count_all = 0;
  long long abs_indec_orbit_count = 0;
  mpz_class group_order;
  nlohmann::json to_json() const;
};

// Full orbit scan: iterates representations in index order and applies the
// whole change-of-basis group to each unvisited one (its orbit's canonical
// representative).  Verifies |orbit| * |stabilizer| = |group| per orbit.
OrbitReport count_orbits(const Quiver& q, const DimVector& d, int p, const OracleCaps& caps);

long long count_abs_indec_classes(const Quiver& q, const DimVector& d, int p,
                                  const OracleCaps& caps);

// Partition support: scans indices congruent to `stripe` mod `stripe_count`
// and returns those that are minimal in their orbit.  The union over all
// stripes, merged by sorting, is exactly the canonical representative set
// found by count_orbits.  Intended for small instances.
std::vector<unsigned long long> canonical_reps_in_stripe(const Quiver& q, const DimVector& d,
                                                         int p, const OracleCaps& caps,
                                                         int stripe, int stripe_count);

}  // namespace qbps
