#include "doctest.h"
#include "krc/classical.hpp"
#include "krc/monomial.hpp"
#include "krc/verify.hpp"

using namespace krc;

namespace {

std::vector<CrystalShape> desk_shapes(int max_n, int max_m) {
  std::vector<CrystalShape> out;
  for (int n = 1; n <= max_n; ++n)
    for (int m = 0; m <= max_m; ++m)
      for (int i = 1; i <= n; ++i) out.emplace_back(n, m, i);
  return out;
}

}  // namespace

TEST_CASE("monomial arithmetic keeps the support canonical") {
  const auto y = Monomial::generator(1, 0);
  CHECK(y.times(y.inverse()).is_one());
  CHECK(Monomial::generator(2, 1, 0).is_one());
  CHECK(Monomial::generator(1, 1, -1).times(Monomial::generator(2, 0)).to_string() ==
        "Y_1(1)^-1 Y_2(0)");
  CHECK(Monomial().to_string() == "1");
  CHECK(Monomial::generator(2, 0, 3).pow(2).exponent(2, 0) == 6);
}

TEST_CASE("monomial stats worked values") {
  const auto hw = Monomial::generator(2, 0, 3);  // Y_2(0)^3 in A_3
  const auto stats = monomial_stats(hw, 2, 3);
  CHECK(stats.wt.omega == std::vector<Int>{0, 3, 0});
  CHECK(stats.phi == 3);
  CHECK(stats.eps == 0);
  CHECK(stats.n_f == 0);

  const auto mixed = Monomial::generator(1, 1, -1).times(Monomial::generator(2, 0));  // A_2
  const auto s1 = monomial_stats(mixed, 1, 2);
  CHECK(s1.eps == 1);
  CHECK(s1.phi == 0);
  CHECK(s1.n_e == 0);

  const auto empty = monomial_stats(Monomial(), 1, 2);
  CHECK(empty.phi == 0);
  CHECK(empty.eps == 0);
  CHECK(empty.wt.omega == std::vector<Int>{0, 0});
}

TEST_CASE("a_factor worked values") {
  const auto upper = COffsets::upper(2);
  CHECK(a_factor(2, 2, 0, upper) ==
        Monomial::generator(2, 0).times(Monomial::generator(2, 1)).times(
            Monomial::generator(1, 1, -1)));
  CHECK(a_factor(2, 1, 0, upper) ==
        Monomial::generator(1, 0).times(Monomial::generator(1, 1)).times(
            Monomial::generator(2, 0, -1)));
  CHECK(a_factor(2, 1, 0, upper).times(a_factor(2, 1, 0, upper).inverse()).is_one());
}

TEST_CASE("monomial operators worked values") {
  const auto upper = COffsets::upper(2);
  const auto down = m_f(Monomial::generator(2, 0), 2, 2, upper);
  REQUIRE(down.has_value());
  CHECK(*down == Monomial::generator(2, 1, -1).times(Monomial::generator(1, 1)));

  const auto hw = Monomial::generator(1, 0, 2);
  for (int l = 1; l <= 2; ++l) CHECK_FALSE(m_e(hw, l, 2, upper).has_value());
}

TEST_CASE("monomial e undoes f") {
  const auto upper = COffsets::upper(3);
  const auto component = generate_component(CrystalShape(3, 2, 2), upper);
  for (const auto& monomial : component.vertices) {
    for (int l = 1; l <= 3; ++l) {
      const auto down = m_f(monomial, l, 3, upper);
      if (down) CHECK(*m_e(*down, l, 3, upper) == monomial);
    }
  }
}

TEST_CASE("component sizes match the dimension") {
  CHECK(generate_component(CrystalShape(2, 1, 1), COffsets::upper(2)).size() == 3);
  CHECK(generate_component(CrystalShape(2, 3, 2), COffsets::upper(2)).size() == 10);
  CHECK(generate_component(CrystalShape(2, 0, 1), COffsets::upper(2)).size() == 1);
  for (const auto& shape : desk_shapes(3, 2))
    CHECK(generate_component(shape, COffsets::upper(shape.n)).size() == weyl_dimension(shape));
}

TEST_CASE("generated components are semiregular crystals") {
  for (const auto& shape : desk_shapes(3, 2)) {
    MonomialCrystal model(shape.n, COffsets::upper(shape.n),
                          static_cast<Int>(shape.m) * shape.i);
    const auto graph = generate_component(shape, COffsets::upper(shape.n));
    CHECK(verify_axioms(graph, model).ok());
  }
}

TEST_CASE("both canonical offset choices give the same crystal") {
  for (const auto& shape : desk_shapes(3, 2)) {
    const auto a = generate_component(shape, COffsets::upper(shape.n));
    const auto b = generate_component(shape, COffsets::lower(shape.n));
    REQUIRE(a.size() == b.size());
    const auto roots_a = source_vertices(a.size(), a.edges);
    const auto roots_b = source_vertices(b.size(), b.edges);
    REQUIRE(roots_a.size() == 1);
    REQUIRE(roots_b.size() == 1);
    const auto match = rooted_match(a, roots_a[0], b, roots_b[0]);
    CHECK(match.ok);
  }
}

TEST_CASE("monomial component agrees with the pattern crystal") {
  for (const auto& shape : desk_shapes(3, 2)) {
    PatternCrystal patterns(shape);
    MonomialCrystal monomials(shape.n, COffsets::upper(shape.n),
                              static_cast<Int>(shape.m) * shape.i);
    const auto gp = build_graph(patterns, {Pattern(shape)});
    const auto gm = generate_component(shape, COffsets::upper(shape.n));
    REQUIRE(gp.size() == gm.size());

    const auto roots_p = source_vertices(gp.size(), gp.edges);
    const auto roots_m = source_vertices(gm.size(), gm.edges);
    REQUIRE(roots_p.size() == 1);
    REQUIRE(roots_m.size() == 1);
    const auto match = rooted_match(gp, roots_p[0], gm, roots_m[0]);
    REQUIRE(match.ok);
    for (int v = 0; v < gp.size(); ++v)
      CHECK(patterns.weight(gp.vertices[v]) == monomials.weight(gm.vertices[match.map[v]]));
  }
}

TEST_CASE("offset table validation") {
  CHECK_THROWS_AS(COffsets(3, {}), std::invalid_argument);
  std::map<std::pair<int, int>, int> bad{{{1, 2}, 1}, {{2, 1}, 1}, {{2, 3}, 1}, {{3, 2}, 0}};
  CHECK_THROWS_AS(COffsets(3, bad), std::invalid_argument);
}
