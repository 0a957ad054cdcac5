#include "qbps/potential.hpp"

#include <doctest.h>

#include <random>

using namespace qbps;

namespace {

// Random closed composable word: a walk in the tripled quiver starting at a
// random vertex until it returns (tripled quivers always have loops).
std::vector<std::string> random_cycle(std::mt19937& gen, const Quiver& tq, int max_len) {
  int start = static_cast<int>(gen() % tq.num_vertices());
  int at = start;
  std::vector<std::string> word;
  for (int step = 0; step < max_len; ++step) {
    std::vector<int> outgoing;
    for (int k = 0; k < tq.num_arrows(); ++k)
      if (tq.arrow(k).from == at) outgoing.push_back(k);
    int pick = outgoing[gen() % outgoing.size()];
    word.push_back(tq.arrow(pick).id);
    at = tq.arrow(pick).to;
    if (at == start && gen() % 2 == 0) break;
  }
  while (at != start) {
    // Close up via loops if the walk ended elsewhere: walk arrows greedily.
    std::vector<int> outgoing;
    for (int k = 0; k < tq.num_arrows(); ++k)
      if (tq.arrow(k).from == at) outgoing.push_back(k);
    int pick = outgoing[gen() % outgoing.size()];
    word.push_back(tq.arrow(pick).id);
    at = tq.arrow(pick).to;
  }
  return word;
}

Potential random_potential(std::mt19937& gen, const Quiver& tq) {
  Potential w;
  int terms = 1 + static_cast<int>(gen() % 5);
  for (int i = 0; i < terms; ++i) {
    int num = static_cast<int>(gen() % 7) - 3;
    if (num == 0) num = 1;
    int den = 1 + static_cast<int>(gen() % 3);
    w.add_word(tq, random_cycle(gen, tq, 6), Rational(num) / den);
  }
  return w;
}

}  // namespace

TEST_CASE("cyclic normalization") {
  Quiver tj = triple_quiver(jordan_quiver());  // arrows l, l*, ω_0
  CyclicWord w1 = cyclic_normalize(tj, {"l", "l*"});
  CyclicWord w2 = cyclic_normalize(tj, {"l*", "l"});
  CHECK(w1 == w2);
  CHECK(w1 == CyclicWord{"l", "l*"});

  Quiver a1 = affine_a1_quiver();
  CHECK_THROWS_AS(cyclic_normalize(a1, {"a"}), input_error);
  CHECK_THROWS_AS(cyclic_normalize(a1, {}), input_error);
  CHECK(cyclic_normalize(a1, {"b", "a"}) == CyclicWord{"a", "b"});
}

TEST_CASE("cyclic derivative of the tripled Jordan potential") {
  Quiver base = jordan_quiver();
  Quiver tq = triple_quiver(base);
  Potential w = tripled_potential(base);
  // W = l.l*.ω_0 - l*.l.ω_0 up to rotation.
  CHECK(potentials_equal(w, parse_potential(tq, "1 * ω_0.l.l* - 1 * ω_0.l*.l")));

  CHECK(cyclic_derivative(tq, w, "ω_0") == parse_ncpoly(tq, "1 * l.l* - 1 * l*.l"));
  CHECK(cyclic_derivative(tq, w, "l") == parse_ncpoly(tq, "1 * l*.ω_0 - 1 * ω_0.l*"));
  CHECK(cyclic_derivative(tq, w, "l*") == parse_ncpoly(tq, "1 * ω_0.l - 1 * l.ω_0"));

  // d/da vanishes when a does not occur.
  Potential only_omega = parse_potential(tq, "1/2 * ω_0.ω_0");
  CHECK(cyclic_derivative(tq, only_omega, "l").is_zero());
  CHECK_THROWS_AS(cyclic_derivative(tq, w, "nope"), input_error);
}

TEST_CASE("jacobi relations") {
  Quiver base = jordan_quiver();
  Quiver tq = triple_quiver(base);

  // Quadratic deformation on the point quiver: W = 1/2 ω^2, relation ω.
  Quiver tp = triple_quiver(point_quiver());
  Potential w2 = mu_potential(point_quiver(), {Rational(1)}, 2);
  auto rel2 = jacobi_relations(tp, w2);
  REQUIRE(rel2.size() == 1);
  CHECK(rel2[0].second == parse_ncpoly(tp, "1 * ω_0"));

  // Golden relations for the tripled Jordan quiver.
  auto rels = jacobi_relations(tq, tripled_potential(base));
  REQUIRE(rels.size() == 3);
  CHECK(rels[0].first == "l");
  CHECK(rels[0].second == parse_ncpoly(tq, "1 * l*.ω_0 - 1 * ω_0.l*"));
  CHECK(rels[1].first == "l*");
  CHECK(rels[1].second == parse_ncpoly(tq, "1 * ω_0.l - 1 * l.ω_0"));
  CHECK(rels[2].first == "ω_0");
  CHECK(rels[2].second == parse_ncpoly(tq, "1 * l.l* - 1 * l*.l"));

  // Zero potential: all relations vanish.
  for (const auto& [id, rel] : jacobi_relations(tq, Potential())) {
    (void)id;
    CHECK(rel.is_zero());
  }
}

TEST_CASE("canonical tripled potential") {
  CHECK(tripled_potential(point_quiver()).is_zero());

  Quiver base = affine_a1_quiver();
  Quiver tq = triple_quiver(base);
  Potential w = tripled_potential(base);
  // Left-to-right composition puts a.a* at the source vertex of a:
  // W = ω_0.(a.a* - b*.b) + ω_1.(b.b* - a*.a) as cyclic words.
  Potential expected = parse_potential(
      tq, "1 * a.a*.ω_0 - 1 * b*.b.ω_0 + 1 * b.b*.ω_1 - 1 * a*.a.ω_1");
  CHECK(potentials_equal(w, expected));
}

TEST_CASE("mu-deformed potentials") {
  Quiver tp = triple_quiver(point_quiver());
  Potential half_omega_sq = parse_potential(tp, "1/2 * ω_0.ω_0");
  CHECK(potentials_equal(mu_potential(point_quiver(), {Rational(1)}, 2), half_omega_sq));

  Quiver base = affine_a1_quiver();
  Quiver tq = triple_quiver(base);
  Potential w = mu_potential(base, {Rational(1), Rational(-1)}, 2);
  Potential expected = tripled_potential(base) +
                       parse_potential(tq, "1/2 * ω_0.ω_0 - 1/2 * ω_1.ω_1");
  CHECK(potentials_equal(w, expected));

  // n = 1: linear terms.
  Potential w1 = mu_potential(base, {Rational(2), Rational(3)}, 1);
  Potential expected1 =
      tripled_potential(base) + parse_potential(tq, "2 * ω_0 + 3 * ω_1");
  CHECK(potentials_equal(w1, expected1));
  // Linear terms differentiate to lazy paths.
  NCPoly d = cyclic_derivative(tq, w1, "ω_0");
  bool has_lazy = false;
  for (const auto& [p, c] : d.terms())
    if (p.is_lazy()) {
      has_lazy = true;
      CHECK(c == 2);
    }
  CHECK(has_lazy);

  CHECK_THROWS_AS(mu_potential(base, {Rational(1)}, 2), input_error);
  CHECK_THROWS_AS(mu_potential(base, {Rational(1), Rational(0)}, 0), input_error);
}

TEST_CASE("the quartic conifold potential") {
  KwData kw = kw_potential();
  REQUIRE(kw.w.terms().size() == 2);
  std::vector<Rational> coeffs;
  for (const auto& [word, c] : kw.w.terms()) {
    CHECK(word.size() == 4);
    coeffs.push_back(c);
  }
  CHECK(((coeffs[0] == 1 && coeffs[1] == -1) || (coeffs[0] == -1 && coeffs[1] == 1)));

  CHECK(cyclic_derivative(kw.quiver, kw.w, "a") ==
        parse_ncpoly(kw.quiver, "1 * a*.b*.b - 1 * b.b*.a*"));
  CHECK(necklace_check(kw.quiver, kw.w).is_zero());
}

TEST_CASE("substitution") {
  Quiver base = affine_a1_quiver();
  Quiver tq = triple_quiver(base);
  Potential w = mu_potential(base, {Rational(1), Rational(-1)}, 2);

  // Identity substitution.
  std::map<std::string, NCPoly> id_sigma;
  id_sigma["a"] = parse_ncpoly(tq, "1 * a");
  CHECK(potentials_equal(substitute(tq, w, id_sigma), w));

  // Scaling an arrow multiplies each term by 2^(occurrences).
  std::map<std::string, NCPoly> scale;
  scale["a"] = parse_ncpoly(tq, "2 * a");
  Potential scaled = substitute(tq, w, scale);
  for (const auto& [word, c] : scaled.terms()) {
    int occ = 0;
    for (const auto& id : word) occ += id == "a";
    Rational expected = w.terms().at(word);
    for (int i = 0; i < occ; ++i) expected *= 2;
    CHECK(c == expected);
  }

  // Type mismatch is rejected: a is not parallel to a*.
  std::map<std::string, NCPoly> bad;
  bad["a"] = parse_ncpoly(tq, "1 * a*");
  CHECK_THROWS_AS(substitute(tq, w, bad), input_error);
}

TEST_CASE("noncommutative conifold change of variables") {
  ConifoldReport rep = check_conifold();
  CHECK(rep.pass);
  CHECK(rep.residual.is_zero());
  Quiver tq = triple_quiver(affine_a1_quiver());
  Potential expected = parse_potential(
      tq, "1/2 * ω_0.ω_0 - 1/2 * ω_1.ω_1 + 1 * b*.b.a.a* - 1 * b.b*.a*.a");
  CHECK(potentials_equal(rep.computed, expected));
  // The non-loop part is exactly the quartic conifold potential.
  Potential quartic;
  for (const auto& [word, c] : rep.computed.terms())
    if (word.size() == 4) quartic.add_canonical(word, c);
  Potential kw_on_tq;
  KwData kw = kw_potential();
  for (const auto& [word, c] : kw.w.terms()) kw_on_tq.add_word(tq, word, c);
  CHECK(potentials_equal(quartic, kw_on_tq));
}

TEST_CASE("potentials_equal is rotation-invariant") {
  Quiver tj = triple_quiver(jordan_quiver());
  Potential p1 = parse_potential(tj, "1 * ω_0.l.l*");
  Potential p2 = parse_potential(tj, "1 * l.l*.ω_0");
  Potential p3 = parse_potential(tj, "1 * ω_0.l*.l");
  CHECK(potentials_equal(p1, p2));
  CHECK_FALSE(potentials_equal(p1, p3));
}

TEST_CASE("necklace identity on fixed and random potentials") {
  Quiver tj = triple_quiver(jordan_quiver());
  CHECK(necklace_check(tj, tripled_potential(jordan_quiver())).is_zero());
  Quiver ta = triple_quiver(affine_a1_quiver());
  CHECK(necklace_check(ta, tripled_potential(affine_a1_quiver())).is_zero());

  std::mt19937 gen(31);
  std::vector<Quiver> bases = {point_quiver(), jordan_quiver(), affine_a1_quiver(),
                               Quiver({"0", "1"}, {{"a", 0, 1}})};
  for (int trial = 0; trial < 60; ++trial) {
    const Quiver& base = bases[trial % bases.size()];
    Quiver tq = triple_quiver(base);
    CHECK(necklace_check(tq, random_potential(gen, tq)).is_zero());
  }
}

TEST_CASE("cyclic derivative is linear") {
  std::mt19937 gen(37);
  Quiver tq = triple_quiver(affine_a1_quiver());
  for (int trial = 0; trial < 50; ++trial) {
    Potential w1 = random_potential(gen, tq);
    Potential w2 = random_potential(gen, tq);
    Rational c = Rational(static_cast<long>(1 + gen() % 5)) / static_cast<long>(1 + gen() % 3);
    for (const Arrow& a : tq.arrows()) {
      NCPoly lhs = cyclic_derivative(tq, w1 + w2.scaled(c), a.id);
      NCPoly rhs = cyclic_derivative(tq, w1, a.id) + cyclic_derivative(tq, w2, a.id).scaled(c);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("deformed preprojective relations match the derivative route") {
  std::vector<std::pair<Quiver, MuVector>> cases = {
      {point_quiver(), {Rational(0)}},
      {point_quiver(), {Rational(1)}},
      {jordan_quiver(), {Rational(0)}},
      {jordan_quiver(), {Rational(1)}},
      {affine_a1_quiver(), {Rational(0), Rational(0)}},
      {affine_a1_quiver(), {Rational(1), Rational(-1)}},
  };
  for (const auto& [q, mu] : cases) {
    GkwReport rep = check_gkw(q, mu);
    CHECK_MESSAGE(rep.pass, rep.detail);
  }
}

TEST_CASE("substitution away from a potential's arrows commutes with the derivative") {
  // sigma fixes every arrow occurring in W, so it acts trivially on W and on
  // each derivative.
  std::mt19937 gen(67);
  Quiver base = affine_a1_quiver();
  Quiver tq = triple_quiver(base);
  for (int trial = 0; trial < 20; ++trial) {
    Potential w;
    // Words in a, a*, w_0, w_1 only; sigma rewrites b.
    w.add_word(tq, {"a", "a*", "ω_0"}, Rational(1 + static_cast<int>(gen() % 3)));
    w.add_word(tq, {"ω_1", "ω_1"}, Rational(static_cast<int>(gen() % 5) - 2));
    std::map<std::string, NCPoly> sigma;
    sigma["b"] = parse_ncpoly(tq, "2 * b + 1 * b.ω_0.ω_0");
    CHECK(potentials_equal(substitute(tq, w, sigma), w));
    for (const std::string id : {"a", "a*", "ω_0", "ω_1"}) {
      NCPoly lhs = cyclic_derivative(tq, substitute(tq, w, sigma), id);
      NCPoly rhs = substitute(tq, cyclic_derivative(tq, w, id), sigma);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("potential text format round trip") {
  Quiver tq = triple_quiver(affine_a1_quiver());
  Potential w = mu_potential(affine_a1_quiver(), {Rational(1, 2), Rational(-3)}, 2);
  std::string text = potential_str(w);
  CHECK(potentials_equal(parse_potential(tq, text), w));
  CHECK(potential_str(parse_potential(tq, text)) == text);
  CHECK(potential_str(Potential()) == "0");
  CHECK(parse_potential(tq, "0").is_zero());
  CHECK(parse_ncpoly(tq, " 0 ").is_zero());
}
