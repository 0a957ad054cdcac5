#include "qbps/bps.hpp"

#include <functional>
#include <sstream>

namespace qbps {

nlohmann::json hodge_to_json(const HodgeMultiset& h) {
  nlohmann::json j = nlohmann::json::array();
  for (const HodgeEntry& e : h) j.push_back({{"L_exp_times_2", e.twice_exp}, {"mult", e.mult}});
  return j;
}

std::string hodge_str(const HodgeMultiset& h) {
  if (h.empty()) return "{}";
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const HodgeEntry& e : h) {
    for (long long m = 0; m < e.mult; ++m) {
      if (!first) os << ", ";
      first = false;
      os << "L^";
      if (e.twice_exp % 2 == 0)
        os << e.twice_exp / 2;
      else
        os << e.twice_exp << "/2";
    }
  }
  os << "}";
  return os.str();
}

TatePoly hodge_character(const HodgeMultiset& h) {
  TatePoly p;
  for (const HodgeEntry& e : h)
    p += TatePoly::monomial(e.twice_exp, Rational(static_cast<long>(e.mult)));
  return p;
}

namespace {

IntPoly kac_for(const Quiver& q, const MuVector& mu, const DimVector& d,
                const KacProvider& kac) {
  check_mu(q, mu);
  check_dim(q, d);
  if (is_zero_dim(d)) throw input_error("BPS invariants are indexed by nonzero dimension vectors");
  return kac(q, d);
}

}  // namespace

TatePoly dt_refined(const Quiver& q, const MuVector& mu, const DimVector& d,
                    const KacProvider& kac) {
  IntPoly a = kac_for(q, mu, d, kac);
  bool deformed_away = mu_dot(mu, d) != 0;
  TatePoly out;
  for (const auto& [i, c] : a)
    out += TatePoly::monomial(deformed_away ? -2 * i : -2 * i - 1,
                              Rational(static_cast<long>(c)));
  return out;
}

HodgeMultiset dt_hodge(const Quiver& q, const MuVector& mu, const DimVector& d,
                       const KacProvider& kac) {
  IntPoly a = kac_for(q, mu, d, kac);
  bool deformed_away = mu_dot(mu, d) != 0;
  HodgeMultiset h;
  for (auto it = a.rbegin(); it != a.rend(); ++it)
    h.push_back({deformed_away ? -2 * it->first : -2 * it->first - 1, it->second});
  return h;
}

TatePoly dt_general_power(const Quiver& q, const MuVector& mu, const DimVector& d, int n,
                          const KacProvider& kac) {
  if (n != 1 && n != 2)
    throw input_error("the deformation power is computed only for n in {1, 2}");
  if (n == 2) return dt_refined(q, mu, d, kac);
  if (mu_dot(mu, d) != 0) {
    kac_for(q, mu, d, kac);  // validates inputs
    return TatePoly();
  }
  return dt_refined(q, MuVector(q.num_vertices(), Rational(0)), d, kac);
}

namespace {

// Enumerates all d with sum <= cutoff (including zero), calling fn(d).
void for_each_dim(int nvert, int cutoff, const std::function<void(const DimVector&)>& fn) {
  DimVector d(nvert, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == nvert) {
      fn(d);
      return;
    }
    for (int w = 0; w <= left; ++w) {
      d[i] = w;
      rec(i + 1, left - w);
    }
    d[i] = 0;
  };
  rec(0, cutoff);
}

}  // namespace

GradedSeries free_coha_series(const Quiver& q, int cutoff) {
  GradedSeries out(q.num_vertices(), cutoff);
  for_each_dim(q.num_vertices(), cutoff, [&](const DimVector& d) {
    TateRational c(TatePoly::monomial(static_cast<int>(euler_form(q, d, d))));
    for (int i = 0; i < q.num_vertices(); ++i)
      for (int k = 1; k <= d[i]; ++k) c = c * TateRational::geometric(2 * k);
    out.set_coeff(d, c);
  });
  return out;
}

TateRational coha_vir_factor() {
  return TateRational(TatePoly::monomial(1)) * TateRational::geometric(2);
}

TateRational stack_vir_factor() {
  return TateRational(TatePoly::monomial(-1)) * TateRational::geometric(-2);
}

GradedSeries coha_pbw_series(const Quiver& q, const MuVector& mu, int cutoff,
                             const KacProvider& kac) {
  check_mu(q, mu);
  TateRational factor = coha_vir_factor();
  GradedSeries arg(q.num_vertices(), cutoff);
  for_each_dim(q.num_vertices(), cutoff, [&](const DimVector& d) {
    if (is_zero_dim(d)) return;
    arg.set_coeff(d, TateRational(dt_refined(q, mu, d, kac)) * factor);
  });
  return super_exp(arg);
}

GradedSeries stack_series_deformed(const Quiver& q, const MuVector& mu, int cutoff,
                                   const KacProvider& kac) {
  check_mu(q, mu);
  TateRational factor = stack_vir_factor();
  GradedSeries arg(q.num_vertices(), cutoff);
  for_each_dim(q.num_vertices(), cutoff, [&](const DimVector& d) {
    if (is_zero_dim(d) || mu_dot(mu, d) != 0) return;
    IntPoly a = kac(q, d);
    TatePoly dual;  // sum_i a_{Q,d,i} t^{2i+1}
    for (const auto& [i, c] : a)
      dual += TatePoly::monomial(2 * i + 1, Rational(static_cast<long>(c)));
    arg.set_coeff(d, TateRational(dual) * factor);
  });
  return super_exp(arg);
}

HodgeMultiset moduli_cohomology_indivisible(const Quiver& q, const MuVector& mu,
                                            const DimVector& d, const KacProvider& kac,
                                            int genericity_horizon) {
  check_mu(q, mu);
  check_dim(q, d);
  if (is_zero_dim(d)) throw input_error("dimension vector must be nonzero");
  if (!is_indivisible(d)) throw input_error("dimension vector is divisible");
  if (mu_dot(mu, d) != 0) throw input_error("mu . d must vanish");
  // Genericity within the horizon: mu.d' = 0 forces d' into Z d.
  HodgeMultiset out;
  std::string witness;
  for_each_dim(q.num_vertices(), genericity_horizon, [&](const DimVector& e) {
    if (is_zero_dim(e) || mu_dot(mu, e) != 0 || !witness.empty()) return;
    // e must be an integer multiple of d.
    long long ratio = -1;
    bool multiple = true;
    for (int i = 0; i < q.num_vertices(); ++i) {
      if (d[i] == 0) {
        if (e[i] != 0) multiple = false;
      } else {
        if (e[i] % d[i] != 0) {
          multiple = false;
        } else {
          long long r = e[i] / d[i];
          if (ratio == -1)
            ratio = r;
          else if (ratio != r)
            multiple = false;
        }
      }
    }
    if (!multiple) witness = dim_str(e);
  });
  if (!witness.empty())
    throw input_error("mu is not generic within horizon " + std::to_string(genericity_horizon) +
                      ": mu . (" + witness + ") = 0");
  IntPoly a = kac(q, d);
  long long chi = euler_form(q, d, d);
  for (const auto& [i, c] : a)
    out.push_back({static_cast<int>(2 * (1 + i - chi)), c});
  return out;
}

GradedSeries integrality_invert(const GradedSeries& f, const TateRational& vir_factor) {
  if (vir_factor.is_zero()) throw input_error("vir factor must be nonzero");
  GradedSeries lg = super_log(f);
  GradedSeries out(f.nvert(), f.cutoff());
  for (const auto& [d, c] : lg.coeffs()) out.set_coeff(d, c / vir_factor);
  return out;
}

}  // namespace qbps
