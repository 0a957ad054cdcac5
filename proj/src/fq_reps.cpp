#include "qbps/fq_reps.hpp"

#include <algorithm>

namespace qbps {

namespace {

void check_prime(int p) {
  if (!is_prime(p)) throw input_error("p = " + std::to_string(p) + " is not prime");
}

unsigned long long to_ull_clamped(const mpz_class& z) {
  if (!z.fits_ulong_p()) return ~0ULL;
  return z.get_ui();
}

// All invertible d x d matrices over F_p, with inverses, in a fixed order.
struct VertexGroup {
  std::vector<FpMat> elems;
  std::vector<FpMat> invs;
};

VertexGroup build_vertex_group(int d, int p) {
  VertexGroup g;
  if (d == 0) {
    g.elems.push_back(FpMat(0, 0, p));
    g.invs.push_back(FpMat(0, 0, p));
    return g;
  }
  int entries = d * d;
  FpMat m(d, d, p);
  // Odometer over all matrices; keep the invertible ones.
  while (true) {
    if (m.invertible()) {
      g.elems.push_back(m);
      g.invs.push_back(m.inverse());
    }
    int j = 0;
    for (; j < entries; ++j) {
      if (++m.a[j] < p) break;
      m.a[j] = 0;
    }
    if (j == entries) break;
  }
  return g;
}

struct ProductGroup {
  std::vector<VertexGroup> factors;
  unsigned long long order = 1;
};

ProductGroup build_group(const Quiver& q, const DimVector& d, int p, const OracleCaps& caps) {
  mpz_class order = group_order(d, p);
  if (order > static_cast<unsigned long>(caps.max_group_order))
    throw capacity_error("group order " + order.get_str() + " exceeds cap " +
                             std::to_string(caps.max_group_order),
                         to_ull_clamped(order));
  ProductGroup g;
  for (int i = 0; i < q.num_vertices(); ++i) g.factors.push_back(build_vertex_group(d[i], p));
  g.order = order.get_ui();
  return g;
}

// Calls fn for every group element, given as per-vertex indices into factors.
template <class Fn>
void for_each_group_element(const ProductGroup& g, Fn&& fn) {
  int n = static_cast<int>(g.factors.size());
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    fn(idx);
    int j = 0;
    for (; j < n; ++j) {
      if (++idx[j] < g.factors[j].elems.size()) break;
      idx[j] = 0;
    }
    if (j == n) break;
  }
}

}  // namespace

RepSpace::RepSpace(const Quiver& q, DimVector d, int p, const OracleCaps& caps)
    : q_(std::make_shared<const Quiver>(q)), d_(std::move(d)), p_(p) {
  check_prime(p);
  check_dim(q, d_);
  digits_ = 0;
  for (const Arrow& a : q.arrows()) {
    arrow_rows_.push_back(d_[a.to]);
    arrow_cols_.push_back(d_[a.from]);
    arrow_offset_.push_back(digits_);
    digits_ += d_[a.to] * d_[a.from];
  }
  mpz_class tot = 1;
  for (int j = 0; j < digits_; ++j) tot *= p;
  if (tot > static_cast<unsigned long>(caps.max_reps))
    throw capacity_error("representation count " + tot.get_str() + " exceeds cap " +
                             std::to_string(caps.max_reps),
                         to_ull_clamped(tot));
  total_ = tot.get_ui();
}

FqRep RepSpace::decode(unsigned long long idx) const {
  FqRep rep;
  rep.quiver = q_;
  rep.dim = d_;
  rep.p = p_;
  for (int a = 0; a < q_->num_arrows(); ++a) {
    FpMat m(arrow_rows_[a], arrow_cols_[a], p_);
    for (auto& x : m.a) {
      x = static_cast<int32_t>(idx % p_);
      idx /= p_;
    }
    rep.mats.push_back(std::move(m));
  }
  return rep;
}

unsigned long long RepSpace::encode(const FqRep& rep) const {
  unsigned long long idx = 0;
  unsigned long long base = 1;
  for (int a = 0; a < q_->num_arrows(); ++a) {
    for (int32_t x : rep.mats[a].a) {
      idx += base * static_cast<unsigned long long>(x);
      base *= p_;
    }
  }
  return idx;
}

void for_each_rep(const Quiver& q, const DimVector& d, int p, const OracleCaps& caps,
                  const std::function<void(const FqRep&)>& fn) {
  RepSpace space(q, d, p, caps);
  for (unsigned long long i = 0; i < space.total(); ++i) fn(space.decode(i));
}

std::vector<FqRep> enumerate_reps(const Quiver& q, const DimVector& d, int p,
                                  const OracleCaps& caps) {
  std::vector<FqRep> out;
  for_each_rep(q, d, p, caps, [&](const FqRep& r) { out.push_back(r); });
  return out;
}

mpz_class group_order(const DimVector& d, int p) {
  check_prime(p);
  mpz_class order = 1;
  for (int di : d) {
    if (di < 0) throw input_error("negative dimension");
    mpz_class pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), p, di);
    mpz_class pj = 1;
    for (int j = 0; j < di; ++j) {
      order *= (pd - pj);
      pj *= p;
    }
  }
  return order;
}

std::vector<std::vector<FpMat>> hom_space(const FqRep& rho, const FqRep& rho2) {
  if (rho.quiver->canonical_string() != rho2.quiver->canonical_string())
    throw input_error("hom_space requires representations of the same quiver");
  if (rho.p != rho2.p) throw input_error("hom_space requires a common prime");
  const Quiver& q = *rho.quiver;
  int p = rho.p;
  int n = q.num_vertices();
  std::vector<int> offset(n + 1, 0);
  for (int i = 0; i < n; ++i) offset[i + 1] = offset[i] + rho2.dim[i] * rho.dim[i];
  int nvars = offset[n];
  auto var = [&](int vtx, int r, int c) { return offset[vtx] + r * rho.dim[vtx] + c; };

  std::vector<std::vector<int32_t>> rows;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& arr = q.arrow(a);
    const FpMat& m = rho.mats[a];    // d_t x d_s
    const FpMat& m2 = rho2.mats[a];  // d'_t x d'_s
    // f_{t} m - m2 f_{s} = 0, entry (r, c): r < d'_t, c < d_s.
    for (int r = 0; r < rho2.dim[arr.to]; ++r)
      for (int c = 0; c < rho.dim[arr.from]; ++c) {
        std::vector<int32_t> row(nvars, 0);
        for (int k = 0; k < rho.dim[arr.to]; ++k)
          row[var(arr.to, r, k)] =
              static_cast<int32_t>((row[var(arr.to, r, k)] + m.at(k, c)) % p);
        for (int k = 0; k < rho2.dim[arr.from]; ++k) {
          int32_t v = static_cast<int32_t>((row[var(arr.from, k, c)] - m2.at(r, k)) % p);
          row[var(arr.from, k, c)] = v < 0 ? v + p : v;
        }
        rows.push_back(std::move(row));
      }
  }
  std::vector<std::vector<FpMat>> basis;
  for (const auto& vec : nullspace(std::move(rows), nvars, p)) {
    std::vector<FpMat> tuple;
    for (int i = 0; i < n; ++i) {
      FpMat f(rho2.dim[i], rho.dim[i], p);
      for (int r = 0; r < rho2.dim[i]; ++r)
        for (int c = 0; c < rho.dim[i]; ++c) f.at(r, c) = vec[var(i, r, c)];
      tuple.push_back(std::move(f));
    }
    basis.push_back(std::move(tuple));
  }
  return basis;
}

namespace {

// Steps a coefficient odometer in F_p^k and keeps `current` equal to
// sum_j c_j basis_j.  Returns false after the last element.
struct ElementWalker {
  const std::vector<std::vector<FpMat>>* basis;
  int p;
  std::vector<int> coeff;
  std::vector<FpMat> current;

  explicit ElementWalker(const std::vector<std::vector<FpMat>>& b, int prime,
                         const DimVector& dims) {
    basis = &b;
    p = prime;
    coeff.assign(b.size(), 0);
    for (std::size_t i = 0; i < dims.size(); ++i)
      current.push_back(FpMat(dims[i], dims[i], prime));
  }

  bool step() {
    for (std::size_t j = 0; j < coeff.size(); ++j) {
      for (std::size_t v = 0; v < current.size(); ++v)
        current[v].add_scaled((*basis)[j][v], 1);
      if (++coeff[j] < p) return true;
      coeff[j] = 0;
    }
    return false;
  }
};


}  // namespace

bool is_absolutely_indecomposable(const FqRep& rho, const OracleCaps& caps) {
  const Quiver& q = *rho.quiver;
  int p = rho.p;
  long long total_dim = dim_total(rho.dim);
  if (total_dim == 0) throw input_error("the zero representation has no endomorphism type");

  std::vector<std::vector<FpMat>> basis = hom_space(rho, rho);
  int dim_e = static_cast<int>(basis.size());
  if (dim_e < 1) throw internal_error("endomorphism algebra lost the identity");
  if (dim_e == 1) return true;  // End = F_p

  // Fitting splitting: for f in End and any scalar shift, ker((f-c)^N) and
  // im((f-c)^N) are subrepresentations; a proper split certifies
  // decomposability, hence dim(End/rad) >= 2.
  int n = q.num_vertices();
  for (const auto& f : basis) {
    for (int c = 0; c < p; ++c) {
      long long rank_sum = 0;
      for (int i = 0; i < n; ++i) {
        if (rho.dim[i] == 0) continue;
        FpMat s = f[i];
        for (int r = 0; r < rho.dim[i]; ++r) {
          int32_t v = (s.at(r, r) - c) % p;
          s.at(r, r) = v < 0 ? v + p : v;
        }
        rank_sum += s.pow(rho.dim[i]).rank();
      }
      if (rank_sum > 0 && rank_sum < total_dim) return false;
    }
  }

  mpz_class size;
  mpz_ui_pow_ui(size.get_mpz_t(), p, dim_e);
  if (size > static_cast<unsigned long>(caps.max_end_algebra))
    throw capacity_error("endomorphism algebra has " + size.get_str() +
                             " elements, exceeding cap " + std::to_string(caps.max_end_algebra),
                         size.fits_ulong_p() ? size.get_ui() : ~0ULL);
  unsigned long long e_count = size.get_ui();

  // Exhaustive radical scan: x is radical iff 1 - y x is invertible for all y.
  std::vector<FpMat> identity_tuple;
  for (int i = 0; i < n; ++i) identity_tuple.push_back(FpMat::identity(rho.dim[i], p));

  unsigned long long j_count = 1;  // x = 0
  ElementWalker x(basis, p, rho.dim);
  std::vector<FpMat> prod, z;
  for (int i = 0; i < n; ++i) {
    prod.push_back(FpMat(rho.dim[i], rho.dim[i], p));
    z.push_back(FpMat(rho.dim[i], rho.dim[i], p));
  }
  while (x.step()) {
    bool in_radical = true;
    ElementWalker y(basis, p, rho.dim);
    for (unsigned long long cnt = 0; cnt + 1 < e_count; ++cnt) {
      y.step();
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        if (rho.dim[i] == 0) continue;
        FpMat::mul_into(prod[i], y.current[i], x.current[i]);
        z[i] = identity_tuple[i] - prod[i];
        ok = z[i].invertible();
      }
      if (!ok) {
        in_radical = false;
        break;
      }
    }
    if (in_radical) ++j_count;
  }

  int dim_j = 0;
  {
    unsigned long long t = j_count;
    while (t > 1) {
      if (t % p != 0) throw internal_error("radical size is not a power of p");
      t /= p;
      ++dim_j;
    }
  }
  return dim_e - dim_j == 1;
}

nlohmann::json OrbitReport::to_json() const {
  return {{"total_reps", total_reps},
          {"orbit_count_all", orbit_count_all},
          {"abs_indec_orbit_count", abs_indec_orbit_count},
          {"group_order", group_order.get_str()}};
}

OrbitReport count_orbits(const Quiver& q, const DimVector& d, int p, const OracleCaps& caps) {
  RepSpace space(q, d, p, caps);

  OrbitReport report;
  report.total_reps = space.total();
  report.group_order = group_order(d, p);

  if (space.digit_count() == 0) {
    // No matrix entries: the single representation is its own orbit and the
    // change-of-basis action is trivial, so the group is never enumerated.
    report.orbit_count_all = 1;
    report.abs_indec_orbit_count = is_absolutely_indecomposable(space.decode(0), caps) ? 1 : 0;
    return report;
  }

  ProductGroup group = build_group(q, d, p, caps);
  std::vector<bool> visited(space.total(), false);
  unsigned long long visited_count = 0;
  int na = q.num_arrows();
  // Scratch matrices for g_t * M * g_s^{-1}.
  std::vector<FpMat> tmp;
  FqRep moved;
  for (unsigned long long idx = 0; idx < space.total(); ++idx) {
    if (visited[idx]) continue;
    FqRep rep = space.decode(idx);
    if (tmp.empty()) {
      moved = rep;
      for (int a = 0; a < na; ++a) tmp.push_back(rep.mats[a]);
    }
    unsigned long long orbit_size = 0, stab_hits = 0;
    for_each_group_element(group, [&](const std::vector<std::size_t>& gi) {
      for (int a = 0; a < na; ++a) {
        const Arrow& arr = q.arrow(a);
        const FpMat& gt = group.factors[arr.to].elems[gi[arr.to]];
        const FpMat& gs_inv = group.factors[arr.from].invs[gi[arr.from]];
        FpMat::mul_into(tmp[a], gt, rep.mats[a]);
        FpMat::mul_into(moved.mats[a], tmp[a], gs_inv);
      }
      unsigned long long e = space.encode(moved);
      if (e == idx) ++stab_hits;
      if (!visited[e]) {
        visited[e] = true;
        ++orbit_size;
      }
    });
    if (stab_hits == 0 || orbit_size * stab_hits != group.order)
      throw internal_error("orbit-stabilizer identity violated");
    visited_count += orbit_size;
    ++report.orbit_count_all;
    if (is_absolutely_indecomposable(rep, caps)) ++report.abs_indec_orbit_count;
  }
  if (visited_count != space.total())
    throw internal_error("orbit sizes do not sum to the representation count");
  return report;
}

long long count_abs_indec_classes(const Quiver& q, const DimVector& d, int p,
                                  const OracleCaps& caps) {
  return count_orbits(q, d, p, caps).abs_indec_orbit_count;
}

std::vector<unsigned long long> canonical_reps_in_stripe(const Quiver& q, const DimVector& d,
                                                         int p, const OracleCaps& caps,
                                                         int stripe, int stripe_count) {
  if (stripe_count < 1 || stripe < 0 || stripe >= stripe_count)
    throw input_error("bad stripe specification");
  RepSpace space(q, d, p, caps);
  if (space.digit_count() == 0)
    return stripe == 0 ? std::vector<unsigned long long>{0} : std::vector<unsigned long long>{};
  ProductGroup group = build_group(q, d, p, caps);
  int na = q.num_arrows();
  std::vector<unsigned long long> out;
  std::vector<FpMat> tmp;
  FqRep moved;
  for (unsigned long long idx = stripe; idx < space.total();
       idx += static_cast<unsigned long long>(stripe_count)) {
    FqRep rep = space.decode(idx);
    if (tmp.empty()) {
      moved = rep;
      for (int a = 0; a < na; ++a) tmp.push_back(rep.mats[a]);
    }
    bool minimal = true;
    for_each_group_element(group, [&](const std::vector<std::size_t>& gi) {
      if (!minimal) return;
      for (int a = 0; a < na; ++a) {
        const Arrow& arr = q.arrow(a);
        FpMat::mul_into(tmp[a], group.factors[arr.to].elems[gi[arr.to]], rep.mats[a]);
        FpMat::mul_into(moved.mats[a], tmp[a], group.factors[arr.from].invs[gi[arr.from]]);
      }
      if (space.encode(moved) < idx) minimal = false;
    });
    if (minimal) out.push_back(idx);
  }
  return out;
}

}  // namespace qbps
