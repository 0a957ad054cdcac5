#include "qbps/quiver.hpp"

#include <doctest.h>

#include <random>

using namespace qbps;

namespace {

Quiver random_quiver(std::mt19937& gen, int max_vertices, int max_arrows) {
  int nv = 1 + static_cast<int>(gen() % max_vertices);
  std::vector<std::string> verts;
  for (int i = 0; i < nv; ++i) verts.push_back(std::to_string(i));
  int na = static_cast<int>(gen() % (max_arrows + 1));
  std::vector<Arrow> arrows;
  for (int k = 0; k < na; ++k)
    arrows.push_back({"r" + std::to_string(k), static_cast<int>(gen() % nv),
                      static_cast<int>(gen() % nv)});
  return Quiver(std::move(verts), std::move(arrows));
}

DimVector random_dim(std::mt19937& gen, int nv, int max_entry) {
  DimVector d(nv);
  for (int i = 0; i < nv; ++i) d[i] = static_cast<int>(gen() % (max_entry + 1));
  return d;
}

}  // namespace

TEST_CASE("euler form on the standard quivers") {
  Quiver q0 = point_quiver();
  CHECK(euler_form(q0, {3}, {3}) == 9);
  CHECK(euler_form(q0, {1}, {1}) == 1);

  Quiver q1 = jordan_quiver();
  CHECK(euler_form(q1, {1}, {1}) == 0);
  CHECK(euler_form(q1, {2}, {2}) == 0);

  Quiver a1 = affine_a1_quiver();
  CHECK(euler_form(a1, {1, 1}, {1, 1}) == 0);
  CHECK(euler_form(a1, {1, 0}, {1, 0}) == 1);
  CHECK(euler_form(a1, {2, 1}, {2, 1}) == 1);

  CHECK_THROWS_AS(euler_form(a1, {1}, {1, 1}), input_error);
}

TEST_CASE("euler form is bilinear") {
  std::mt19937 gen(7);
  for (int trial = 0; trial < 60; ++trial) {
    Quiver q = random_quiver(gen, 3, 4);
    DimVector d = random_dim(gen, q.num_vertices(), 3);
    DimVector d2 = random_dim(gen, q.num_vertices(), 3);
    DimVector e = random_dim(gen, q.num_vertices(), 3);
    DimVector sum(q.num_vertices());
    for (int i = 0; i < q.num_vertices(); ++i) sum[i] = d[i] + d2[i];
    CHECK(euler_form(q, sum, e) == euler_form(q, d, e) + euler_form(q, d2, e));
    DimVector esum(q.num_vertices());
    for (int i = 0; i < q.num_vertices(); ++i) esum[i] = d[i] + e[i];
    CHECK(euler_form(q, d2, esum) == euler_form(q, d2, d) + euler_form(q, d2, e));
  }
}

TEST_CASE("doubling and tripling") {
  CHECK(double_quiver(point_quiver()).num_arrows() == 0);

  Quiver da1 = double_quiver(affine_a1_quiver());
  CHECK(da1.num_arrows() == 4);
  CHECK(da1.arrow_by_id("a*").from == da1.vertex_index("1"));
  CHECK(da1.arrow_by_id("a*").to == da1.vertex_index("0"));
  CHECK(da1.arrow_by_id("b*").from == da1.vertex_index("0"));

  CHECK(double_quiver(jordan_quiver()).num_arrows() == 2);

  // triple(point) is the one-loop quiver; triple(jordan) has three loops.
  Quiver tp = triple_quiver(point_quiver());
  CHECK(tp.num_vertices() == 1);
  CHECK(tp.num_arrows() == 1);
  CHECK(tp.arrow(0).from == tp.arrow(0).to);

  Quiver tj = triple_quiver(jordan_quiver());
  CHECK(tj.num_arrows() == 3);
  for (const Arrow& a : tj.arrows()) CHECK(a.from == a.to);

  Quiver ta1 = triple_quiver(affine_a1_quiver());
  CHECK(ta1.num_arrows() == 6);
  CHECK(ta1.has_arrow("ω_0"));
  CHECK(ta1.has_arrow("ω_1"));
  CHECK(ta1.arrow_by_id("ω_0").from == ta1.vertex_index("0"));
}

TEST_CASE("opposite and loops-only quivers") {
  CHECK(opposite_quiver(point_quiver()).num_arrows() == 0);

  Quiver q({"0", "1"}, {{"a", 0, 1}});
  Quiver op = opposite_quiver(q);
  CHECK(op.num_arrows() == 1);
  CHECK(op.arrow(0).from == 1);
  CHECK(op.arrow(0).to == 0);

  Quiver opop = opposite_quiver(op);
  REQUIRE(opop.num_arrows() == 1);
  CHECK(opop.arrow(0).from == q.arrow(0).from);
  CHECK(opop.arrow(0).to == q.arrow(0).to);

  Quiver om = omega_quiver(affine_a1_quiver());
  CHECK(om.num_vertices() == 2);
  CHECK(om.num_arrows() == 2);
  for (const Arrow& a : om.arrows()) CHECK(a.from == a.to);
  CHECK(omega_quiver(point_quiver()).num_arrows() == 1);
}

TEST_CASE("framing") {
  Quiver f1 = frame_quiver(point_quiver(), {1});
  CHECK(f1.num_vertices() == 2);
  CHECK(f1.num_arrows() == 1);
  CHECK(f1.vertices().back() == "∞");
  CHECK(f1.arrow(0).from == f1.vertex_index("∞"));

  Quiver f0 = frame_quiver(point_quiver(), {0});
  CHECK(f0.num_vertices() == 2);
  CHECK(f0.num_arrows() == 0);

  Quiver fa = frame_quiver(affine_a1_quiver(), {2, 1});
  CHECK(fa.num_vertices() == 3);
  CHECK(fa.num_arrows() == 5);

  CHECK_THROWS_AS(frame_quiver(affine_a1_quiver(), {1}), input_error);
}

TEST_CASE("symmetry") {
  CHECK(is_symmetric(jordan_quiver()));
  CHECK_FALSE(is_symmetric(Quiver({"0", "1"}, {{"a", 0, 1}})));
  std::mt19937 gen(11);
  for (int trial = 0; trial < 40; ++trial) {
    Quiver q = random_quiver(gen, 3, 4);
    CHECK(is_symmetric(triple_quiver(q)));
  }
}

TEST_CASE("triple quiver euler form identity") {
  std::mt19937 gen(13);
  for (int trial = 0; trial < 60; ++trial) {
    Quiver q = random_quiver(gen, 3, 4);
    Quiver t = triple_quiver(q);
    DimVector d = random_dim(gen, q.num_vertices(), 3);
    DimVector e = random_dim(gen, q.num_vertices(), 3);
    long long dot = 0;
    for (int i = 0; i < q.num_vertices(); ++i) dot += static_cast<long long>(d[i]) * e[i];
    CHECK(euler_form(t, d, e) == euler_form(t, e, d));
    CHECK(euler_form(t, d, e) == euler_form(q, d, e) + euler_form(q, e, d) - 2 * dot);
  }
}

TEST_CASE("construction arrow counts") {
  std::mt19937 gen(17);
  for (int trial = 0; trial < 40; ++trial) {
    Quiver q = random_quiver(gen, 3, 4);
    CHECK(double_quiver(q).num_arrows() == 2 * q.num_arrows());
    CHECK(triple_quiver(q).num_arrows() == 2 * q.num_arrows() + q.num_vertices());
    DimVector f = random_dim(gen, q.num_vertices(), 2);
    CHECK(frame_quiver(q, f).num_arrows() == q.num_arrows() + dim_total(f));
  }
}

TEST_CASE("quiver JSON round trip and validation") {
  Quiver a1 = affine_a1_quiver();
  Quiver back = Quiver::from_json(a1.to_json());
  CHECK(back.canonical_string() == a1.canonical_string());
  CHECK(back.hash() == a1.hash());

  nlohmann::json bad = {{"vertices", {"0"}},
                        {"arrows", {{{"id", "a"}, {"from", "0"}, {"to", "7"}}}}};
  CHECK_THROWS_AS(Quiver::from_json(bad), input_error);

  CHECK_THROWS_AS(Quiver({"0", "0"}, {}), input_error);
  CHECK_THROWS_AS(Quiver({"0"}, {{"a", 0, 0}, {"a", 0, 0}}), input_error);
}

TEST_CASE("generated name collisions are input errors") {
  CHECK_THROWS_AS(double_quiver(Quiver({"0"}, {{"a", 0, 0}, {"a*", 0, 0}})), input_error);
  CHECK_THROWS_AS(triple_quiver(Quiver({"0"}, {{"ω_0", 0, 0}})), input_error);
}

TEST_CASE("dimension vector helpers") {
  CHECK(is_indivisible({1, 1}));
  CHECK(is_indivisible({2, 3}));
  CHECK_FALSE(is_indivisible({2, 2}));
  CHECK_FALSE(is_indivisible({0, 3}));
  CHECK(parse_dim("1,1") == DimVector{1, 1});
  CHECK(parse_dim(" 2 , 0 ") == DimVector{2, 0});
  CHECK_THROWS_AS(parse_dim("1,-1"), input_error);
  MuVector mu = parse_mu("1/2,-1");
  CHECK(mu[0] == Rational(1, 2));
  CHECK(mu[1] == -1);
  CHECK(mu_dot(parse_mu("1,-1"), {2, 2}) == 0);
  CHECK(mu_dot(parse_mu("1,-1"), {2, 1}) == 1);
}
