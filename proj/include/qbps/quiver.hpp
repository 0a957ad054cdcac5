#pragma once

#include "qbps/util.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace qbps {

struct Arrow {
  std::string id;
  int from = 0;  // vertex indices
  int to = 0;
};

// Finite directed multigraph with labelled arrows.  Vertex order is fixed
// at construction and determines the coordinate order of dimension vectors.
// Immutable after construction.
class Quiver {
public:
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  // JSON schema: {"vertices": ["0","1"],
  //               "arrows": [{"id":"a","from":"0","to":"1"}, ...]}
  static Quiver from_json(const nlohmann::json& j);
  static Quiver load_file(const std::string& path);
  nlohmann::json to_json() const;

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int k) const { return arrows_.at(k); }

  bool has_vertex(const std::string& name) const;
  bool has_arrow(const std::string& id) const;
  int vertex_index(const std::string& name) const;  // throws input_error
  int arrow_index(const std::string& id) const;     // throws input_error
  const Arrow& arrow_by_id(const std::string& id) const;

  // Deterministic serialization used for hashing and cache keys.
  std::string canonical_string() const;
  uint64_t hash() const;

private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, int> vertex_index_;
  std::map<std::string, int> arrow_index_;
};

using DimVector = std::vector<int>;
using MuVector = std::vector<Rational>;

void check_dim(const Quiver& q, const DimVector& d);
void check_mu(const Quiver& q, const MuVector& mu);
long long dim_total(const DimVector& d);
Rational mu_dot(const MuVector& mu, const DimVector& d);
bool is_zero_dim(const DimVector& d);
// No integer n >= 2 divides every coordinate.
bool is_indivisible(const DimVector& d);
DimVector parse_dim(std::string_view s);
MuVector parse_mu(std::string_view s);
std::string dim_str(const DimVector& d);

// chi_Q(d,e) = sum_i d_i e_i - sum_a d_{s(a)} e_{t(a)}
long long euler_form(const Quiver& q, const DimVector& d, const DimVector& e);

// One reversed arrow "a*" per arrow a; originals preserved.
Quiver double_quiver(const Quiver& q);
// double_quiver plus a loop at every vertex, named by omega_arrow_id.
Quiver triple_quiver(const Quiver& q);
// All arrows reversed, ids suffixed "*".
Quiver opposite_quiver(const Quiver& q);
// Same vertices, exactly one loop per vertex, no other arrows.
Quiver omega_quiver(const Quiver& q);
// New vertex "∞" appended, with f_i arrows from ∞ to vertex i.
Quiver frame_quiver(const Quiver& q, const DimVector& f);
bool is_symmetric(const Quiver& q);

std::string omega_arrow_id(const std::string& vertex);

// The standard small quivers used throughout.
Quiver point_quiver();                 // one vertex, no arrows
Quiver jordan_quiver();                // one vertex, one loop "l"
Quiver loop_quiver(int loops);         // one vertex, loops "l1".."lk"
Quiver affine_a1_quiver();             // 0 -a-> 1, 1 -b-> 0

}  // namespace qbps
