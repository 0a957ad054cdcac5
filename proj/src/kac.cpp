#include "qbps/kac.hpp"

#include "qbps/kac_hua.hpp"

#include <fstream>
#include <sstream>

namespace qbps {

std::string intpoly_str(const IntPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    auto [e, c] = *it;
    long long a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (e == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

nlohmann::json intpoly_to_json(const IntPoly& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [e, c] : p) j[std::to_string(e)] = c;
  return j;
}

IntPoly intpoly_from_json(const nlohmann::json& j) {
  IntPoly p;
  for (auto it = j.begin(); it != j.end(); ++it) {
    long long c = it.value().get<long long>();
    if (c != 0) p[std::stoi(it.key())] = c;
  }
  return p;
}

long long degree_bound(const Quiver& q, const DimVector& d) {
  long long chi = euler_form(q, d, d);
  return std::max(0LL, 1 - chi);
}

KacCache::KacCache(std::string path, const Quiver& q)
    : path_(std::move(path)), quiver_hash_(hex64(q.hash())) {
  load();
}

void KacCache::load() {
  std::ifstream in(path_);
  if (!in) return;
  nlohmann::json j;
  try {
    in >> j;
    if (j.at("quiver_hash").get<std::string>() != quiver_hash_) return;
    for (const auto& e : j.at("entries")) {
      Entry entry;
      entry.poly = intpoly_from_json(e.at("poly"));
      for (const auto& pr : e.at("primes")) entry.primes.push_back(pr.get<int>());
      entries_[e.at("d").get<DimVector>()] = std::move(entry);
    }
  } catch (const std::exception&) {
    // Advisory cache: unreadable content is discarded.
    entries_.clear();
  }
}

void KacCache::save() const {
  nlohmann::json j;
  j["quiver_hash"] = quiver_hash_;
  j["entries"] = nlohmann::json::array();
  for (const auto& [d, e] : entries_) {
    j["entries"].push_back(
        {{"d", d}, {"poly", intpoly_to_json(e.poly)}, {"primes", e.primes}});
  }
  std::ofstream out(path_);
  if (out) out << j.dump(2) << "\n";
}

std::optional<IntPoly> KacCache::lookup(const DimVector& d) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = entries_.find(d);
  if (it == entries_.end()) return std::nullopt;
  return it->second.poly;
}

void KacCache::store(const DimVector& d, const IntPoly& poly, const std::vector<int>& primes) {
  std::lock_guard<std::mutex> lock(mu_);
  entries_[d] = Entry{poly, primes};
  save();
}

namespace {

// Exact Lagrange interpolation through (x_j, y_j); returns coefficients.
std::vector<Rational> lagrange(const std::vector<int>& xs, const std::vector<long long>& ys) {
  std::size_t n = xs.size();
  std::vector<Rational> acc(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    // numerator polynomial prod_{k != j} (X - x_k), denominator scalar.
    std::vector<Rational> numer{Rational(1)};
    Rational denom(1);
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j) continue;
      std::vector<Rational> next(numer.size() + 1, Rational(0));
      for (std::size_t i = 0; i < numer.size(); ++i) {
        next[i + 1] += numer[i];
        next[i] -= numer[i] * xs[k];
      }
      numer = std::move(next);
      denom *= Rational(xs[j]) - Rational(xs[k]);
    }
    Rational scale = Rational(static_cast<long>(ys[j])) / denom;
    for (std::size_t i = 0; i < numer.size(); ++i) acc[i] += numer[i] * scale;
  }
  return acc;
}

IntPoly to_intpoly(const std::vector<Rational>& coeffs) {
  IntPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Rational& c = coeffs[i];
    if (c == 0) continue;
    if (c.get_den() != 1)
      throw internal_error("interpolated Kac coefficient is not an integer (oracle bug)");
    if (c < 0)
      throw internal_error("interpolated Kac coefficient is negative (oracle bug)");
    if (!c.get_num().fits_slong_p())
      throw internal_error("Kac coefficient overflows");
    p[static_cast<int>(i)] = c.get_num().get_si();
  }
  return p;
}

}  // namespace

IntPoly kac_polynomial(const Quiver& q, const DimVector& d, const KacOptions& opts) {
  check_dim(q, d);
  if (is_zero_dim(d)) throw input_error("Kac polynomials are indexed by nonzero dimension vectors");
  if (opts.cache) {
    if (auto hit = opts.cache->lookup(d)) return *hit;
  }
  long long bound = degree_bound(q, d);
  std::vector<int> primes = first_primes(static_cast<int>(bound) + 2);
  std::vector<long long> counts;
  for (int p : primes) counts.push_back(count_abs_indec_classes(q, d, p, opts.caps));

  std::vector<int> base_primes(primes.begin(), primes.end() - 1);
  std::vector<long long> base_counts(counts.begin(), counts.end() - 1);
  IntPoly poly = to_intpoly(lagrange(base_primes, base_counts));
  IntPoly stab = to_intpoly(lagrange(primes, counts));
  if (poly != stab)
    throw internal_error("Kac interpolation unstable: degree-bounded fit " + intpoly_str(poly) +
                         " vs extended fit " + intpoly_str(stab));
  if (opts.cache) opts.cache->store(d, poly, primes);
  return poly;
}

long long kac_coefficient(const Quiver& q, const DimVector& d, int i, const KacOptions& opts) {
  IntPoly p = kac_polynomial(q, d, opts);
  auto it = p.find(i);
  return it == p.end() ? 0 : it->second;
}

KacProvider make_oracle_provider(KacOptions opts) {
  return [opts](const Quiver& q, const DimVector& d) { return kac_polynomial(q, d, opts); };
}

KacProvider make_hua_provider() {
  return [](const Quiver& q, const DimVector& d) { return kac_polynomial_hua(q, d); };
}

KacProvider make_hybrid_provider(KacOptions opts) {
  return [opts](const Quiver& q, const DimVector& d) {
    try {
      return kac_polynomial(q, d, opts);
    } catch (const capacity_error&) {
      return kac_polynomial_hua(q, d);
    }
  };
}

}  // namespace qbps
