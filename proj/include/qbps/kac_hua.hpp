#pragma once

#include "qbps/kac.hpp"
#include "qbps/quiver.hpp"

namespace qbps {

// Exact Kac polynomial via the partition generating function: with
// <l,m> = sum_i l'_i m'_i on conjugate partitions and
// b_l(u) = prod_j prod_{k=1}^{mult_j(l)} (1 - u^k),
//
//   sum_pi  q^{ sum_a <pi_{s(a)}, pi_{t(a)}> - sum_i <pi_i, pi_i> }
//           / prod_i b_{pi_i}(q^{-1})  *  x^{|pi|}
//     =  Exp( sum_{d != 0} a_{Q,d}(q) x^d / (q - 1) ),
//
// the sum over tuples of partitions indexed by the vertices.  Taking the
// plethystic logarithm and multiplying by q - 1 isolates a_{Q,d}.
// No enumeration caps apply; this serves as the extension backend beyond
// the oracle's reach and as an independent cross-check of it.
IntPoly kac_polynomial_hua(const Quiver& q, const DimVector& d);

}  // namespace qbps
