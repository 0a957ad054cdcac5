#include "qbps/potential.hpp"

#include <algorithm>
#include <sstream>

namespace qbps {

CyclicWord cyclic_normalize(const Quiver& q, const std::vector<std::string>& word) {
  if (word.empty()) throw input_error("cyclic word must be nonempty");
  std::size_t n = word.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Arrow& x = q.arrow_by_id(word[i]);
    const Arrow& y = q.arrow_by_id(word[(i + 1) % n]);
    if (x.to != y.from)
      throw input_error("word is not a closed composable cycle at '" + word[i] + "." +
                        word[(i + 1) % n] + "'");
  }
  CyclicWord best = word;
  for (std::size_t r = 1; r < n; ++r) {
    CyclicWord rot(word.begin() + r, word.end());
    rot.insert(rot.end(), word.begin(), word.begin() + r);
    if (rot < best) best = rot;
  }
  return best;
}

void Potential::add_word(const Quiver& q, const std::vector<std::string>& word,
                         const Rational& c) {
  if (c == 0) return;
  add_canonical(cyclic_normalize(q, word), c);
}

void Potential::add_canonical(const CyclicWord& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = t_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

Potential Potential::operator+(const Potential& o) const {
  Potential r = *this;
  for (const auto& [w, c] : o.t_) r.add_canonical(w, c);
  return r;
}

Potential Potential::operator-(const Potential& o) const {
  Potential r = *this;
  for (const auto& [w, c] : o.t_) r.add_canonical(w, -c);
  return r;
}

Potential Potential::scaled(const Rational& c) const {
  Potential r;
  if (c == 0) return r;
  for (const auto& [w, v] : t_) r.t_[w] = v * c;
  return r;
}

NCPoly cyclic_derivative(const Quiver& q, const Potential& w, const std::string& arrow) {
  q.arrow_index(arrow);  // validates
  NCPoly out;
  for (const auto& [word, c] : w.terms()) {
    std::size_t n = word.size();
    for (std::size_t m = 0; m < n; ++m) {
      if (word[m] != arrow) continue;
      std::vector<std::string> rot(word.begin() + m + 1, word.end());
      rot.insert(rot.end(), word.begin(), word.begin() + m);
      if (rot.empty()) {
        // Length-one cycle: the derivative is the lazy path at the loop vertex.
        const Arrow& a = q.arrow_by_id(arrow);
        out.add_term(Path::lazy(q.vertices()[a.to]), c);
      } else {
        out.add_term(Path::word(q, std::move(rot)), c);
      }
    }
  }
  return out;
}

std::vector<std::pair<std::string, NCPoly>> jacobi_relations(const Quiver& q,
                                                             const Potential& w) {
  for (const auto& [word, c] : w.terms()) {
    (void)c;
    for (const auto& id : word) q.arrow_index(id);
  }
  std::vector<std::pair<std::string, NCPoly>> out;
  for (const Arrow& a : q.arrows()) out.emplace_back(a.id, cyclic_derivative(q, w, a.id));
  return out;
}

Potential tripled_potential(const Quiver& base) {
  Quiver tq = triple_quiver(base);
  Potential w;
  // Expand (sum_a [a,a*]) (sum_i w_i), dropping non-composable products.
  for (const Arrow& a : base.arrows()) {
    std::string star = a.id + "*";
    for (const std::string& v : base.vertices()) {
      std::string wi = omega_arrow_id(v);
      int vi = base.vertex_index(v);
      if (a.from == vi) w.add_word(tq, {a.id, star, wi}, Rational(1));
      if (a.to == vi) w.add_word(tq, {star, a.id, wi}, Rational(-1));
    }
  }
  return w;
}

Potential mu_potential(const Quiver& base, const MuVector& mu, int n) {
  check_mu(base, mu);
  if (n < 1) throw input_error("potential power must be >= 1");
  Quiver tq = triple_quiver(base);
  Potential w = tripled_potential(base);
  for (int i = 0; i < base.num_vertices(); ++i) {
    if (mu[i] == 0) continue;
    std::vector<std::string> word(static_cast<std::size_t>(n),
                                  omega_arrow_id(base.vertices()[i]));
    w.add_word(tq, word, mu[i] / n);
  }
  return w;
}

KwData kw_potential() {
  Quiver dq = double_quiver(affine_a1_quiver());
  Potential w;
  w.add_word(dq, {"a", "a*", "b*", "b"}, Rational(1));
  w.add_word(dq, {"a*", "a", "b", "b*"}, Rational(-1));
  return {std::move(dq), std::move(w)};
}

namespace {

void check_sigma(const Quiver& q, const std::map<std::string, NCPoly>& sigma) {
  for (const auto& [id, img] : sigma) {
    const Arrow& a = q.arrow_by_id(id);
    const std::string src = q.vertices()[a.from];
    const std::string tgt = q.vertices()[a.to];
    for (const auto& [p, c] : img.terms()) {
      (void)c;
      if (p.source(q) != src || p.target(q) != tgt)
        throw input_error("substitution image of '" + id + "' contains a path " + p.str() +
                          " that is not parallel to it");
    }
  }
}

// Expands sigma over one linear word; returns a sum of (possibly lazy) paths.
NCPoly expand_word(const Quiver& q, const std::vector<std::string>& word,
                   const std::map<std::string, NCPoly>& sigma) {
  NCPoly acc = NCPoly::lazy(q.vertices()[q.arrow_by_id(word.front()).from]);
  for (const std::string& id : word) {
    auto it = sigma.find(id);
    NCPoly factor =
        it == sigma.end() ? NCPoly::path(Path::word(q, {id})) : it->second;
    acc = acc.mul(q, factor);
  }
  return acc;
}

}  // namespace

Potential substitute(const Quiver& q, const Potential& w,
                     const std::map<std::string, NCPoly>& sigma) {
  check_sigma(q, sigma);
  Potential out;
  for (const auto& [word, c] : w.terms()) {
    NCPoly expanded = expand_word(q, word, sigma);
    for (const auto& [p, v] : expanded.terms()) {
      if (p.is_lazy())
        throw input_error("substitution produced a length-zero cyclic word");
      out.add_word(q, p.arrows, c * v);
    }
  }
  return out;
}

NCPoly substitute(const Quiver& q, const NCPoly& p, const std::map<std::string, NCPoly>& sigma) {
  check_sigma(q, sigma);
  NCPoly out;
  for (const auto& [path, c] : p.terms()) {
    if (path.is_lazy()) {
      out.add_term(path, c);
      continue;
    }
    NCPoly expanded = expand_word(q, path.arrows, sigma);
    out = out + expanded.scaled(c);
  }
  return out;
}

bool potentials_equal(const Potential& a, const Potential& b) { return a == b; }

NCPoly necklace_check(const Quiver& q, const Potential& w) {
  NCPoly acc;
  for (const Arrow& a : q.arrows()) {
    NCPoly d = cyclic_derivative(q, w, a.id);
    if (d.is_zero()) continue;
    NCPoly c = NCPoly::path(Path::word(q, {a.id}));
    acc = acc + c.mul(q, d) - d.mul(q, c);
  }
  return acc;
}

Potential parse_potential(const Quiver& q, std::string_view text) {
  Potential out;
  if (detail::is_zero_literal(text)) return out;
  for (const detail::RawTerm& t : detail::split_terms(text))
    out.add_word(q, detail::split_word(t.word), t.coeff);
  return out;
}

std::string potential_str(const Potential& w) {
  if (w.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [word, c] : w.terms()) {
    Rational a = c;
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
    os << rational_str(a) << " * ";
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (i) os << ".";
      os << word[i];
    }
  }
  return os.str();
}

GkwReport check_gkw(const Quiver& base, const MuVector& mu) {
  check_mu(base, mu);
  Quiver tq = triple_quiver(base);
  Potential w = mu_potential(base, mu, 2);
  auto relations = jacobi_relations(tq, w);

  // Independently constructed deformed preprojective relations.
  std::map<std::string, NCPoly> expected;
  for (int i = 0; i < base.num_vertices(); ++i) {
    const std::string v = base.vertices()[i];
    NCPoly rel;
    for (const Arrow& a : base.arrows()) {
      if (a.from == i) rel.add_term(Path::word(tq, {a.id, a.id + "*"}), Rational(1));
      if (a.to == i) rel.add_term(Path::word(tq, {a.id + "*", a.id}), Rational(-1));
    }
    rel.add_term(Path::word(tq, {omega_arrow_id(v)}), mu[i]);
    expected[omega_arrow_id(v)] = rel;
  }
  for (const Arrow& a : base.arrows()) {
    const std::string ws = omega_arrow_id(base.vertices()[a.from]);
    const std::string wt = omega_arrow_id(base.vertices()[a.to]);
    NCPoly rel_a = NCPoly::path(Path::word(tq, {a.id + "*", ws})) -
                   NCPoly::path(Path::word(tq, {wt, a.id + "*"}));
    NCPoly rel_star = NCPoly::path(Path::word(tq, {ws, a.id})) -
                      NCPoly::path(Path::word(tq, {a.id, wt}));
    expected[a.id] = rel_a;
    expected[a.id + "*"] = rel_star;
  }

  GkwReport rep;
  rep.pass = true;
  std::ostringstream detail;
  for (const auto& [id, rel] : relations) {
    const NCPoly& want = expected.at(id);
    if (!(rel == want)) {
      rep.pass = false;
      detail << "relation at '" << id << "': computed " << rel.str() << ", expected "
             << want.str() << "\n";
    }
  }
  rep.detail = detail.str();
  return rep;
}

ConifoldReport check_conifold() {
  Quiver base = affine_a1_quiver();
  Quiver tq = triple_quiver(base);
  MuVector mu = {Rational(1), Rational(-1)};
  Potential w = mu_potential(base, mu, 2);

  std::map<std::string, NCPoly> sigma;
  sigma[omega_arrow_id("0")] = parse_ncpoly(tq, "1 * ω_0 - 1 * a.a* + 1 * b*.b");
  sigma[omega_arrow_id("1")] = parse_ncpoly(tq, "1 * ω_1 - 1 * a*.a + 1 * b.b*");

  ConifoldReport rep;
  rep.computed = substitute(tq, w, sigma);

  Potential expected;
  expected.add_word(tq, {"ω_0", "ω_0"}, Rational(1, 2));
  expected.add_word(tq, {"ω_1", "ω_1"}, Rational(-1, 2));
  expected.add_word(tq, {"b*", "b", "a", "a*"}, Rational(1));
  expected.add_word(tq, {"b", "b*", "a*", "a"}, Rational(-1));
  rep.expected = expected;
  rep.residual = rep.computed - expected;
  rep.pass = rep.residual.is_zero();
  return rep;
}

}  // namespace qbps
