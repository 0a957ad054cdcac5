#include "qbps/fp_linalg.hpp"

namespace qbps {

namespace {

int32_t inv_mod(int32_t x, int p) {
  // p is a small prime; extended Euclid.
  int32_t a = x % p, b = p, u = 1, v = 0;
  while (b) {
    int32_t t = a / b;
    a -= t * b;
    std::swap(a, b);
    u -= t * v;
    std::swap(u, v);
  }
  if (a != 1 && a != -1) throw internal_error("inverse of non-unit mod p");
  int32_t r = (a == 1 ? u : -u) % p;
  return r < 0 ? r + p : r;
}

}  // namespace

FpMat FpMat::identity(int n, int p) {
  FpMat m(n, n, p);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool FpMat::is_zero() const {
  for (int32_t x : a)
    if (x) return false;
  return true;
}

bool FpMat::is_identity() const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

void FpMat::mul_into(FpMat& out, const FpMat& x, const FpMat& y) {
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < y.cols; ++j) {
      int64_t s = 0;
      for (int k = 0; k < x.cols; ++k)
        s += static_cast<int64_t>(x.at(i, k)) * y.at(k, j);
      out.at(i, j) = static_cast<int32_t>(s % x.p);
    }
}

FpMat FpMat::operator*(const FpMat& o) const {
  if (cols != o.rows || p != o.p) throw internal_error("matrix shape/prime mismatch in product");
  FpMat r(rows, o.cols, p);
  mul_into(r, *this, o);
  return r;
}

FpMat FpMat::operator+(const FpMat& o) const {
  FpMat r = *this;
  for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = static_cast<int32_t>((r.a[i] + o.a[i]) % p);
  return r;
}

FpMat FpMat::operator-(const FpMat& o) const {
  FpMat r = *this;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int32_t v = (r.a[i] - o.a[i]) % p;
    r.a[i] = v < 0 ? v + p : v;
  }
  return r;
}

void FpMat::add_scaled(const FpMat& o, int32_t c) {
  c %= p;
  if (c < 0) c += p;
  if (c == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] = static_cast<int32_t>((a[i] + static_cast<int64_t>(c) * o.a[i]) % p);
}

FpMat FpMat::pow(int e) const {
  if (rows != cols) throw internal_error("power of non-square matrix");
  FpMat r = identity(rows, p);
  FpMat base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

int FpMat::rank() const {
  FpMat m = *this;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m.at(r, col)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    int32_t inv = inv_mod(m.at(rank, col), p);
    for (int j = 0; j < cols; ++j)
      m.at(rank, j) = static_cast<int32_t>((static_cast<int64_t>(m.at(rank, j)) * inv) % p);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || !m.at(r, col)) continue;
      int32_t f = m.at(r, col);
      for (int j = 0; j < cols; ++j) {
        int32_t v = static_cast<int32_t>((m.at(r, j) - static_cast<int64_t>(f) * m.at(rank, j)) % p);
        m.at(r, j) = v < 0 ? v + p : v;
      }
    }
    ++rank;
  }
  return rank;
}

bool FpMat::invertible() const { return rows == cols && rank() == rows; }

FpMat FpMat::inverse() const {
  if (rows != cols) throw internal_error("inverse of non-square matrix");
  FpMat m = *this;
  FpMat inv = identity(rows, p);
  for (int col = 0; col < cols; ++col) {
    int pivot = -1;
    for (int r = col; r < rows; ++r)
      if (m.at(r, col)) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw internal_error("inverse of singular matrix");
    for (int j = 0; j < cols; ++j) {
      std::swap(m.at(pivot, j), m.at(col, j));
      std::swap(inv.at(pivot, j), inv.at(col, j));
    }
    int32_t f = inv_mod(m.at(col, col), p);
    for (int j = 0; j < cols; ++j) {
      m.at(col, j) = static_cast<int32_t>((static_cast<int64_t>(m.at(col, j)) * f) % p);
      inv.at(col, j) = static_cast<int32_t>((static_cast<int64_t>(inv.at(col, j)) * f) % p);
    }
    for (int r = 0; r < rows; ++r) {
      if (r == col || !m.at(r, col)) continue;
      int32_t g = m.at(r, col);
      for (int j = 0; j < cols; ++j) {
        int32_t v = static_cast<int32_t>((m.at(r, j) - static_cast<int64_t>(g) * m.at(col, j)) % p);
        m.at(r, j) = v < 0 ? v + p : v;
        v = static_cast<int32_t>((inv.at(r, j) - static_cast<int64_t>(g) * inv.at(col, j)) % p);
        inv.at(r, j) = v < 0 ? v + p : v;
      }
    }
  }
  return inv;
}

std::vector<std::vector<int32_t>> nullspace(std::vector<std::vector<int32_t>> rows, int ncols,
                                            int p) {
  int nrows = static_cast<int>(rows.size());
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < ncols && rank < nrows; ++col) {
    int pivot = -1;
    for (int r = rank; r < nrows; ++r)
      if (rows[r][col]) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[pivot], rows[rank]);
    int32_t inv = inv_mod(rows[rank][col], p);
    for (int j = 0; j < ncols; ++j)
      rows[rank][j] = static_cast<int32_t>((static_cast<int64_t>(rows[rank][j]) * inv) % p);
    for (int r = 0; r < nrows; ++r) {
      if (r == rank || !rows[r][col]) continue;
      int32_t f = rows[r][col];
      for (int j = 0; j < ncols; ++j) {
        int32_t v =
            static_cast<int32_t>((rows[r][j] - static_cast<int64_t>(f) * rows[rank][j]) % p);
        rows[r][j] = v < 0 ? v + p : v;
      }
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<int32_t>> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<int32_t> v(ncols, 0);
    v[free] = 1;
    for (int r = 0; r < rank; ++r) {
      int32_t val = (-rows[r][free]) % p;
      v[pivot_col[r]] = val < 0 ? val + p : val;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qbps
