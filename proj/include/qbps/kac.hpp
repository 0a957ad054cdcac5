#pragma once

#include "qbps/fq_reps.hpp"
#include "qbps/quiver.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace qbps {

// Polynomial in q with integer coefficients, exponent -> coefficient,
// no zeros stored.
using IntPoly = std::map<int, long long>;

std::string intpoly_str(const IntPoly& p);             // "q + 1", "0"
nlohmann::json intpoly_to_json(const IntPoly& p);      // {"0":1,"1":1}
IntPoly intpoly_from_json(const nlohmann::json& j);

// max(0, 1 - chi(d,d)): the interpolation degree bound for a_{Q,d}.
long long degree_bound(const Quiver& q, const DimVector& d);

// Persistent advisory cache, one file per quiver (keyed by the canonical
// quiver hash; a mismatching file is ignored and rewritten).  Schema:
// {"quiver_hash": "...",
//  "entries": [{"d":[1,1], "poly":{"0":1,"1":1}, "primes":[2,3,5]}]}
class KacCache {
public:
  KacCache(std::string path, const Quiver& q);
  std::optional<IntPoly> lookup(const DimVector& d) const;
  void store(const DimVector& d, const IntPoly& poly, const std::vector<int>& primes);
  const std::string& path() const { return path_; }

private:
  void load();
  void save() const;
  struct Entry {
    IntPoly poly;
    std::vector<int> primes;
  };
  std::string path_;
  std::string quiver_hash_;
  std::map<DimVector, Entry> entries_;
  mutable std::mutex mu_;
};

struct KacOptions {
  OracleCaps caps;
  std::shared_ptr<KacCache> cache;  // may be null
};

// a_{Q,d}(q) by counting absolutely indecomposable orbits over the
// degree_bound+1 smallest primes and Lagrange interpolation, then
// recomputing with one extra prime and requiring the identical polynomial.
// Coefficients must come out as non-negative integers.
IntPoly kac_polynomial(const Quiver& q, const DimVector& d, const KacOptions& opts);
long long kac_coefficient(const Quiver& q, const DimVector& d, int i, const KacOptions& opts);

using KacProvider = std::function<IntPoly(const Quiver&, const DimVector&)>;

// The normative backend: oracle counting + interpolation.
KacProvider make_oracle_provider(KacOptions opts);
// Extension backend: the exact generating-function computation (kac_hua.hpp).
KacProvider make_hua_provider();
// Oracle where the caps allow it, generating-function backend beyond them.
KacProvider make_hybrid_provider(KacOptions opts);

}  // namespace qbps
