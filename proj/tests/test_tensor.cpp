#include "doctest.h"
#include "krc/classical.hpp"
#include "krc/graph.hpp"
#include "krc/tensor.hpp"
#include "krc/verify.hpp"

using namespace krc;

namespace {

using EpsPhi = std::vector<std::pair<Int, Int>>;

}  // namespace

TEST_CASE("signature reduction worked values") {
  const auto cancelled = l_signature(EpsPhi{{0, 1}, {1, 0}});
  CHECK(cancelled.minus_from.empty());
  CHECK(cancelled.plus_from.empty());

  const auto plus_plus = l_signature(EpsPhi{{0, 1}, {0, 1}});
  CHECK(plus_plus.minus_from.empty());
  CHECK(plus_plus.plus_from == std::vector<int>{0, 1});

  const auto mixed = l_signature(EpsPhi{{2, 0}, {0, 1}});
  CHECK(mixed.minus_from == std::vector<int>{0, 0});
  CHECK(mixed.plus_from == std::vector<int>{1});
}

TEST_CASE("signature counts reproduce the closed two-factor formulas") {
  for (Int e1 = 0; e1 <= 3; ++e1)
    for (Int p1 = 0; p1 <= 3; ++p1)
      for (Int e2 = 0; e2 <= 3; ++e2)
        for (Int p2 = 0; p2 <= 3; ++p2) {
          const auto sig = l_signature(EpsPhi{{e1, p1}, {e2, p2}});
          CHECK(sig.phi() == std::max(p2, p1 + p2 - e2));
          CHECK(sig.eps() == std::max(e1, e1 + e2 - p1));
        }
}

TEST_CASE("two-factor operators follow the branch rule") {
  const CrystalShape left_shape(2, 1, 1);
  const CrystalShape right_shape(2, 1, 2);
  PatternCrystal left(left_shape), right(right_shape);
  TensorCrystal<PatternCrystal> pair({left, right});

  const auto lefts = enumerate_patterns(left_shape);
  const auto rights = enumerate_patterns(right_shape);
  for (const auto& b1 : lefts) {
    for (const auto& b2 : rights) {
      const std::vector<Pattern> x{b1, b2};
      for (int l = 1; l <= 2; ++l) {
        const Int phi1 = string_data(b1, l).phi;
        const Int eps2 = string_data(b2, l).eps;
        const auto down = pair.f(x, l);
        if (phi1 > eps2) {
          const auto expect = f(b1, l);
          CHECK(down.has_value() == expect.has_value());
          if (down) CHECK(*down == std::vector<Pattern>{*expect, b2});
        } else {
          const auto expect = f(b2, l);
          CHECK(down.has_value() == expect.has_value());
          if (down) CHECK(*down == std::vector<Pattern>{b1, *expect});
        }
        const Int eps1 = string_data(b1, l).eps;
        const Int phi1b = phi1;
        const auto up = pair.e(x, l);
        if (phi1b >= eps2) {
          const auto expect = e(b1, l);
          CHECK(up.has_value() == expect.has_value());
          if (up) CHECK(*up == std::vector<Pattern>{*expect, b2});
        } else {
          const auto expect = e(b2, l);
          CHECK(up.has_value() == expect.has_value());
          if (up) CHECK(*up == std::vector<Pattern>{b1, *expect});
        }
        (void)eps1;
      }
    }
  }
}

TEST_CASE("two-factor stats worked values") {
  const auto a = l_signature(EpsPhi{{0, 1}, {1, 0}});
  CHECK(a.phi() == 0);
  CHECK(a.eps() == 0);
  const auto b = l_signature(EpsPhi{{0, 2}, {0, 1}});
  CHECK(b.phi() == 3);
  CHECK(b.eps() == 0);
}

TEST_CASE("tensor weight is the sum of factor weights") {
  const CrystalShape s1(2, 1, 1), s2(2, 2, 2);
  TensorCrystal<PatternCrystal> pair({PatternCrystal(s1), PatternCrystal(s2)});
  for (const auto& b1 : enumerate_patterns(s1))
    for (const auto& b2 : enumerate_patterns(s2))
      CHECK(pair.weight({b1, b2}) == weight(b1) + weight(b2));
}

TEST_CASE("tensors of crystals satisfy the axioms componentwise") {
  const CrystalShape s1(2, 1, 1), s2(2, 1, 2);
  TensorCrystal<PatternCrystal> pair({PatternCrystal(s1), PatternCrystal(s2)});
  std::vector<std::vector<Pattern>> all;
  for (const auto& b1 : enumerate_patterns(s1))
    for (const auto& b2 : enumerate_patterns(s2)) all.push_back({b1, b2});
  const auto graph = build_graph(pair, all);
  AxiomOptions opts;
  opts.check_connectivity = false;  // a full tensor product splits into components
  CHECK(verify_axioms(graph, pair, opts).ok());

  TensorCrystal<PatternCrystal> triple(
      {PatternCrystal(s1), PatternCrystal(s1), PatternCrystal(s2)});
  std::vector<std::vector<Pattern>> seeds;
  for (const auto& b1 : enumerate_patterns(s1))
    for (const auto& b2 : enumerate_patterns(s1))
      for (const auto& b3 : enumerate_patterns(s2)) seeds.push_back({b1, b2, b3});
  const auto big = build_graph(triple, seeds);
  CHECK(verify_axioms(big, triple, opts).ok());
}

TEST_CASE("component of the zero tensor passes the local conditions") {
  const CrystalShape s1(2, 1, 1), s2(2, 1, 2);
  TensorCrystal<PatternCrystal> pair({PatternCrystal(s1), PatternCrystal(s2)});
  const std::vector<Pattern> zero{Pattern(s1), Pattern(s2)};
  const auto component = build_graph(pair, {zero});
  CHECK(component.size() == 8);
  CHECK(verify_stembridge(component).ok());

  AxiomOptions opts;
  CHECK(verify_axioms(component, pair, opts).ok());
}
