#pragma once

#include "qbps/util.hpp"

#include <cstdint>
#include <vector>

namespace qbps {

// Dense matrix over the prime field F_p, entries reduced mod p.
struct FpMat {
  int rows = 0, cols = 0, p = 2;
  std::vector<int32_t> a;

  FpMat() = default;
  FpMat(int r, int c, int prime) : rows(r), cols(c), p(prime), a(static_cast<std::size_t>(r) * c, 0) {}
  static FpMat identity(int n, int p);

  int32_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  int32_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  bool operator==(const FpMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool is_zero() const;
  bool is_identity() const;

  FpMat operator*(const FpMat& o) const;
  // out = x*y without allocation; out must be preshaped.
  static void mul_into(FpMat& out, const FpMat& x, const FpMat& y);
  FpMat operator+(const FpMat& o) const;
  FpMat operator-(const FpMat& o) const;
  void add_scaled(const FpMat& o, int32_t c);  // this += c*o mod p

  FpMat pow(int e) const;
  int rank() const;
  bool invertible() const;
  FpMat inverse() const;  // throws internal_error if singular
};

// Basis of {x : A x = 0} over F_p; `rows` lists the equations, each of
// length ncols.
std::vector<std::vector<int32_t>> nullspace(std::vector<std::vector<int32_t>> rows, int ncols,
                                            int p);

}  // namespace qbps
