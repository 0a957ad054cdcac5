#include "qbps/quiver.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

namespace qbps {

namespace {

void check_id(const std::string& id, const char* what) {
  if (id.empty()) throw input_error(std::string(what) + " id is empty");
  for (char c : id)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '.' || c == ',')
      throw input_error(std::string(what) + " id '" + id + "' contains whitespace, '.' or ','");
}

}  // namespace

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  for (int i = 0; i < num_vertices(); ++i) {
    check_id(vertices_[i], "vertex");
    if (!vertex_index_.emplace(vertices_[i], i).second)
      throw input_error("duplicate vertex '" + vertices_[i] + "'");
  }
  for (int k = 0; k < num_arrows(); ++k) {
    const Arrow& a = arrows_[k];
    check_id(a.id, "arrow");
    if (a.from < 0 || a.from >= num_vertices() || a.to < 0 || a.to >= num_vertices())
      throw input_error("arrow '" + a.id + "' references an undeclared vertex");
    if (!arrow_index_.emplace(a.id, k).second)
      throw input_error("duplicate arrow id '" + a.id + "'");
  }
}

Quiver Quiver::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
    throw input_error("quiver JSON must be an object with 'vertices' and 'arrows'");
  std::vector<std::string> verts;
  for (const auto& v : j.at("vertices")) {
    if (!v.is_string()) throw input_error("quiver vertices must be strings");
    verts.push_back(v.get<std::string>());
  }
  std::map<std::string, int> vidx;
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) vidx[verts[i]] = i;
  std::vector<Arrow> arrows;
  for (const auto& a : j.at("arrows")) {
    if (!a.is_object() || !a.contains("id") || !a.contains("from") || !a.contains("to"))
      throw input_error("each arrow needs 'id', 'from', 'to'");
    std::string from = a.at("from").get<std::string>();
    std::string to = a.at("to").get<std::string>();
    if (!vidx.count(from) || !vidx.count(to))
      throw input_error("arrow endpoints must be declared vertices");
    arrows.push_back({a.at("id").get<std::string>(), vidx[from], vidx[to]});
  }
  return Quiver(std::move(verts), std::move(arrows));
}

Quiver Quiver::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open quiver file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw input_error("cannot parse quiver file '" + path + "': " + e.what());
  }
  return from_json(j);
}

nlohmann::json Quiver::to_json() const {
  nlohmann::json j;
  j["vertices"] = vertices_;
  j["arrows"] = nlohmann::json::array();
  for (const Arrow& a : arrows_)
    j["arrows"].push_back({{"id", a.id}, {"from", vertices_[a.from]}, {"to", vertices_[a.to]}});
  return j;
}

bool Quiver::has_vertex(const std::string& name) const { return vertex_index_.count(name) != 0; }
bool Quiver::has_arrow(const std::string& id) const { return arrow_index_.count(id) != 0; }

int Quiver::vertex_index(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) throw input_error("unknown vertex '" + name + "'");
  return it->second;
}

int Quiver::arrow_index(const std::string& id) const {
  auto it = arrow_index_.find(id);
  if (it == arrow_index_.end()) throw input_error("unknown arrow '" + id + "'");
  return it->second;
}

const Arrow& Quiver::arrow_by_id(const std::string& id) const { return arrows_[arrow_index(id)]; }

std::string Quiver::canonical_string() const {
  std::ostringstream os;
  os << "V[";
  for (const auto& v : vertices_) os << v << ";";
  os << "]A[";
  for (const auto& a : arrows_) os << a.id << ":" << a.from << ">" << a.to << ";";
  os << "]";
  return os.str();
}

uint64_t Quiver::hash() const { return fnv1a64(canonical_string()); }

void check_dim(const Quiver& q, const DimVector& d) {
  if (static_cast<int>(d.size()) != q.num_vertices())
    throw input_error("dimension vector has length " + std::to_string(d.size()) +
                      ", quiver has " + std::to_string(q.num_vertices()) + " vertices");
  for (int x : d)
    if (x < 0) throw input_error("dimension vector entries must be non-negative");
}

void check_mu(const Quiver& q, const MuVector& mu) {
  if (static_cast<int>(mu.size()) != q.num_vertices())
    throw input_error("deformation parameter has length " + std::to_string(mu.size()) +
                      ", quiver has " + std::to_string(q.num_vertices()) + " vertices");
}

long long dim_total(const DimVector& d) {
  return std::accumulate(d.begin(), d.end(), 0LL);
}

Rational mu_dot(const MuVector& mu, const DimVector& d) {
  if (mu.size() != d.size()) throw input_error("mu/dimension length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < d.size(); ++i) s += mu[i] * d[i];
  return s;
}

bool is_zero_dim(const DimVector& d) {
  for (int x : d)
    if (x != 0) return false;
  return true;
}

bool is_indivisible(const DimVector& d) {
  long long g = 0;
  for (int x : d) g = std::gcd(g, static_cast<long long>(x));
  return g == 1;
}

DimVector parse_dim(std::string_view s) {
  DimVector d;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw input_error("bad dimension vector literal");
    d.push_back(std::stoi(cur));
    cur.clear();
  };
  for (char c : s) {
    if (c == ',') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw input_error("dimension vector entries must be non-negative integers");
      cur.push_back(c);
    }
  }
  flush();
  return d;
}

MuVector parse_mu(std::string_view s) {
  MuVector mu;
  std::string cur;
  auto flush = [&] {
    mu.push_back(parse_rational(cur));
    cur.clear();
  };
  for (char c : s) {
    if (c == ',')
      flush();
    else
      cur.push_back(c);
  }
  flush();
  return mu;
}

std::string dim_str(const DimVector& d) {
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(d[i]);
  }
  return out;
}

long long euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  check_dim(q, d);
  check_dim(q, e);
  long long s = 0;
  for (int i = 0; i < q.num_vertices(); ++i) s += static_cast<long long>(d[i]) * e[i];
  for (const Arrow& a : q.arrows()) s -= static_cast<long long>(d[a.from]) * e[a.to];
  return s;
}

Quiver double_quiver(const Quiver& q) {
  std::vector<Arrow> arrows = q.arrows();
  for (const Arrow& a : q.arrows()) {
    std::string star = a.id + "*";
    if (q.has_arrow(star))
      throw input_error("arrow id '" + star + "' collides with a generated name");
    arrows.push_back({star, a.to, a.from});
  }
  return Quiver(q.vertices(), std::move(arrows));
}

Quiver triple_quiver(const Quiver& q) {
  Quiver dbl = double_quiver(q);
  std::vector<Arrow> arrows = dbl.arrows();
  for (int i = 0; i < q.num_vertices(); ++i) {
    std::string id = omega_arrow_id(q.vertices()[i]);
    if (dbl.has_arrow(id))
      throw input_error("arrow id '" + id + "' collides with a generated name");
    arrows.push_back({id, i, i});
  }
  return Quiver(q.vertices(), std::move(arrows));
}

Quiver opposite_quiver(const Quiver& q) {
  std::vector<Arrow> arrows;
  for (const Arrow& a : q.arrows()) arrows.push_back({a.id + "*", a.to, a.from});
  return Quiver(q.vertices(), std::move(arrows));
}

Quiver omega_quiver(const Quiver& q) {
  std::vector<Arrow> arrows;
  for (int i = 0; i < q.num_vertices(); ++i)
    arrows.push_back({omega_arrow_id(q.vertices()[i]), i, i});
  return Quiver(q.vertices(), std::move(arrows));
}

Quiver frame_quiver(const Quiver& q, const DimVector& f) {
  check_dim(q, f);
  std::vector<std::string> verts = q.vertices();
  if (q.has_vertex("∞")) throw input_error("vertex '∞' collides with the framing vertex");
  verts.push_back("∞");
  int inf = static_cast<int>(verts.size()) - 1;
  std::vector<Arrow> arrows = q.arrows();
  for (int i = 0; i < q.num_vertices(); ++i) {
    for (int k = 1; k <= f[i]; ++k) {
      std::string id = "f_" + q.vertices()[i] + "_" + std::to_string(k);
      if (q.has_arrow(id))
        throw input_error("arrow id '" + id + "' collides with a generated name");
      arrows.push_back({id, inf, i});
    }
  }
  return Quiver(std::move(verts), std::move(arrows));
}

bool is_symmetric(const Quiver& q) {
  int n = q.num_vertices();
  std::vector<long long> counts(static_cast<std::size_t>(n) * n, 0);
  for (const Arrow& a : q.arrows()) counts[a.from * n + a.to]++;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (counts[i * n + j] != counts[j * n + i]) return false;
  return true;
}

std::string omega_arrow_id(const std::string& vertex) { return "ω_" + vertex; }

Quiver point_quiver() { return Quiver({"0"}, {}); }

Quiver jordan_quiver() { return Quiver({"0"}, {{"l", 0, 0}}); }

Quiver loop_quiver(int loops) {
  std::vector<Arrow> arrows;
  for (int k = 1; k <= loops; ++k) arrows.push_back({"l" + std::to_string(k), 0, 0});
  return Quiver({"0"}, std::move(arrows));
}

Quiver affine_a1_quiver() {
  return Quiver({"0", "1"}, {{"a", 0, 1}, {"b", 1, 0}});
}

}  // namespace qbps
