#include "qbps/path_algebra.hpp"

#include <cctype>
#include <sstream>

namespace qbps {

Path Path::lazy(std::string vertex) {
  Path p;
  p.base = std::move(vertex);
  return p;
}

Path Path::word(const Quiver& q, std::vector<std::string> arrow_ids) {
  if (arrow_ids.empty()) throw input_error("path word must contain at least one arrow");
  for (std::size_t i = 0; i + 1 < arrow_ids.size(); ++i) {
    const Arrow& x = q.arrow_by_id(arrow_ids[i]);
    const Arrow& y = q.arrow_by_id(arrow_ids[i + 1]);
    if (x.to != y.from)
      throw input_error("non-composable word at '" + arrow_ids[i] + "." + arrow_ids[i + 1] + "'");
  }
  Path p;
  p.base = q.vertices()[q.arrow_by_id(arrow_ids.front()).from];
  p.arrows = std::move(arrow_ids);
  return p;
}

std::string Path::source(const Quiver& q) const {
  if (is_lazy()) return base;
  return q.vertices()[q.arrow_by_id(arrows.front()).from];
}

std::string Path::target(const Quiver& q) const {
  if (is_lazy()) return base;
  return q.vertices()[q.arrow_by_id(arrows.back()).to];
}

std::string Path::str() const {
  if (is_lazy()) return "e_" + base;
  std::string out;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (i) out += ".";
    out += arrows[i];
  }
  return out;
}

bool operator<(const Path& a, const Path& b) {
  if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
  if (a.arrows != b.arrows) return a.arrows < b.arrows;
  return a.base < b.base;
}

bool operator==(const Path& a, const Path& b) {
  return a.base == b.base && a.arrows == b.arrows;
}

NCPoly NCPoly::path(Path p, const Rational& c) {
  NCPoly r;
  r.add_term(p, c);
  return r;
}

NCPoly NCPoly::lazy(const std::string& vertex, const Rational& c) {
  return path(Path::lazy(vertex), c);
}

void NCPoly::add_term(const Path& p, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = t_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
  NCPoly r = *this;
  for (const auto& [p, c] : o.t_) r.add_term(p, c);
  return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
  NCPoly r = *this;
  for (const auto& [p, c] : o.t_) r.add_term(p, -c);
  return r;
}

NCPoly NCPoly::operator-() const {
  NCPoly r;
  for (const auto& [p, c] : t_) r.t_[p] = -c;
  return r;
}

NCPoly NCPoly::scaled(const Rational& c) const {
  NCPoly r;
  if (c == 0) return r;
  for (const auto& [p, v] : t_) r.t_[p] = v * c;
  return r;
}

NCPoly NCPoly::mul(const Quiver& q, const NCPoly& o) const {
  NCPoly r;
  for (const auto& [p1, c1] : t_)
    for (const auto& [p2, c2] : o.t_) {
      if (p1.target(q) != p2.source(q)) continue;
      Path prod;
      if (p1.is_lazy() && p2.is_lazy()) {
        prod = p1;
      } else {
        prod.base = p1.source(q);
        prod.arrows = p1.arrows;
        prod.arrows.insert(prod.arrows.end(), p2.arrows.begin(), p2.arrows.end());
      }
      r.add_term(prod, c1 * c2);
    }
  return r;
}

std::string NCPoly::str() const { return ncpoly_str(*this); }

std::string ncpoly_str(const NCPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [path, c] : p.terms()) {
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
    os << rational_str(a) << " * " << path.str();
  }
  return os.str();
}

namespace detail {

bool is_zero_literal(std::string_view text) {
  std::string trimmed;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
  return trimmed == "0";
}

std::vector<RawTerm> split_terms(std::string_view text) {
  std::vector<RawTerm> out;
  std::vector<std::pair<int, std::string>> pieces;  // sign, chunk
  int sign = 1;
  std::string cur;
  std::size_t i = 0;
  // Leading sign.
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    sign = text[i] == '-' ? -1 : 1;
    ++i;
  }
  for (; i < text.size(); ++i) {
    char c = text[i];
    bool sep = (c == '+' || c == '-') && i > 0 &&
               std::isspace(static_cast<unsigned char>(text[i - 1])) && i + 1 < text.size() &&
               std::isspace(static_cast<unsigned char>(text[i + 1]));
    if (sep) {
      pieces.emplace_back(sign, cur);
      cur.clear();
      sign = c == '-' ? -1 : 1;
      ++i;  // skip the space after the sign
    } else {
      cur.push_back(c);
    }
  }
  pieces.emplace_back(sign, cur);
  for (auto& [sg, chunk] : pieces) {
    // Optional "coeff *" prefix: split at the first '*' that is surrounded
    // by whitespace (arrow ids like "a*" carry their star unspaced).
    std::size_t star = std::string::npos;
    for (std::size_t k = 1; k + 1 < chunk.size(); ++k)
      if (chunk[k] == '*' && std::isspace(static_cast<unsigned char>(chunk[k - 1])) &&
          std::isspace(static_cast<unsigned char>(chunk[k + 1]))) {
        star = k;
        break;
      }
    RawTerm t;
    std::string word_part;
    if (star == std::string::npos) {
      t.coeff = Rational(1);
      word_part = chunk;
    } else {
      t.coeff = parse_rational(chunk.substr(0, star));
      word_part = chunk.substr(star + 1);
    }
    if (sg < 0) t.coeff = -t.coeff;
    // Trim whitespace.
    std::string w;
    for (char c : word_part)
      if (!std::isspace(static_cast<unsigned char>(c))) w.push_back(c);
    if (w.empty()) throw input_error("empty term in expression");
    t.word = w;
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<std::string> split_word(const std::string& w) {
  std::vector<std::string> ids;
  std::string cur;
  for (char c : w) {
    if (c == '.') {
      if (cur.empty()) throw input_error("empty arrow id in word '" + w + "'");
      ids.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (cur.empty()) throw input_error("trailing '.' in word '" + w + "'");
  ids.push_back(cur);
  return ids;
}

}  // namespace detail

NCPoly parse_ncpoly(const Quiver& q, std::string_view text) {
  NCPoly out;
  if (detail::is_zero_literal(text)) return out;
  for (const detail::RawTerm& t : detail::split_terms(text)) {
    std::vector<std::string> ids = detail::split_word(t.word);
    if (ids.size() == 1 && !q.has_arrow(ids[0]) && ids[0].rfind("e_", 0) == 0) {
      std::string v = ids[0].substr(2);
      q.vertex_index(v);  // validates
      out.add_term(Path::lazy(v), t.coeff);
    } else {
      out.add_term(Path::word(q, std::move(ids)), t.coeff);
    }
  }
  return out;
}

}  // namespace qbps
