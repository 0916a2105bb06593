// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "krc/classical.hpp"
#include "krc/monomial.hpp"
#include "krc/promotion.hpp"
#include "krc/tableaux.hpp"
#include "krc/verify.hpp"

using namespace krc;

namespace {

int failures = 0;

void criterion(int id, const std::string& name, const std::function<std::string()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string message;
  try {
    message = body();
  } catch (const std::exception& err) {
    message = std::string("exception: ") + err.what();
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  if (message.empty()) {
    std::printf("PASS criterion %d: %s (%lld ms)\n", id, name.c_str(),
                static_cast<long long>(ms));
  } else {
    std::printf("FAIL criterion %d: %s (%lld ms) -- %s\n", id, name.c_str(),
                static_cast<long long>(ms), message.c_str());
    ++failures;
  }
}

std::vector<CrystalShape> desk_shapes(int max_n, int max_m) {
  std::vector<CrystalShape> out;
  for (int n = 1; n <= max_n; ++n)
    for (int m = 0; m <= max_m; ++m)
      for (int i = 1; i <= n; ++i) out.emplace_back(n, m, i);
  return out;
}

std::string shape_tag(const CrystalShape& shape) {
  std::ostringstream os;
  os << "(n=" << shape.n << ", m=" << shape.m << ", i=" << shape.i << ")";
  return os.str();
}

std::string membership_goldens() {
  if (!is_member(CrystalShape(4, 5, 2), {{1, 0}, {2, 1}, {0, 1}}))
    return "the level-5 width-2 example must be a member";
  if (is_member(CrystalShape(5, 5, 3), {{1, 0, 0}, {0, 1, 3}, {1, 0, 1}}))
    return "the level-5 width-3 example must not be a member";
  return "";
}

std::string enumeration_matches_dimension() {
  for (const auto& shape : desk_shapes(4, 3)) {
    const Int counted = static_cast<Int>(enumerate_patterns(shape).size());
    const Int predicted = weyl_dimension(shape);
    if (counted != predicted)
      return shape_tag(shape) + ": counted " + std::to_string(counted) + ", formula gives " +
             std::to_string(predicted);
  }
  return "";
}

std::string classical_axioms() {
  for (const auto& shape : desk_shapes(4, 3)) {
    PatternCrystal model(shape);
    const auto graph = build_graph(model, {Pattern(shape)});
    if (static_cast<Int>(graph.size()) != weyl_dimension(shape))
      return shape_tag(shape) + ": closure misses members";
    const auto report = verify_axioms(graph, model);
    if (!report.ok()) return shape_tag(shape) + ": " + report.violations.front().check;
  }
  return "";
}

std::string stembridge_and_tableau_isomorphism() {
  for (const auto& shape : desk_shapes(4, 3)) {
    PatternCrystal patterns(shape);
    const auto gp = build_graph(patterns, {Pattern(shape)});
    const auto stem = verify_stembridge(gp);
    if (!stem.ok()) return shape_tag(shape) + ": " + stem.violations.front().check;

    TableauCrystal tableaux(shape);
    const auto gt = build_graph(tableaux, {Tableau::highest_weight(shape)});
    const auto roots_p = source_vertices(gp.size(), gp.edges);
    const auto roots_t = source_vertices(gt.size(), gt.edges);
    if (roots_p.size() != 1 || roots_t.size() != 1)
      return shape_tag(shape) + ": highest weight is not unique";
    const auto match = rooted_match(gp, roots_p[0], gt, roots_t[0]);
    if (!match.ok) return shape_tag(shape) + ": " + match.mismatches.front();

    if (character(gp, patterns) != character(gt, tableaux))
      return shape_tag(shape) + ": characters differ";
  }
  return "";
}

std::string monomial_model_agreement() {
  for (const auto& shape : desk_shapes(3, 2)) {
    PatternCrystal patterns(shape);
    const auto gp = build_graph(patterns, {Pattern(shape)});
    const auto upper = generate_component(shape, COffsets::upper(shape.n));
    const auto lower = generate_component(shape, COffsets::lower(shape.n));

    const auto roots_p = source_vertices(gp.size(), gp.edges);
    const auto roots_u = source_vertices(upper.size(), upper.edges);
    const auto roots_l = source_vertices(lower.size(), lower.edges);
    if (roots_p.size() != 1 || roots_u.size() != 1 || roots_l.size() != 1)
      return shape_tag(shape) + ": highest weight is not unique";

    if (!rooted_match(gp, roots_p[0], upper, roots_u[0]).ok)
      return shape_tag(shape) + ": monomial component differs from the pattern crystal";
    if (!rooted_match(upper, roots_u[0], lower, roots_l[0]).ok)
      return shape_tag(shape) + ": the two offset choices disagree";
  }
  return "";
}

std::string promotion_goldens() {
  {
    const Pattern p(CrystalShape(5, 3, 3), {{1, 1, 1}, {2, 0, 0}, {0, 0, 0}});
    const auto result = promote(p);
    if (result.image.grid() != Grid{{0, 1, 1}, {1, 2, 0}, {2, 0, 0}})
      return "first example: wrong image";
    if (result.trace.steps.size() != 2) return "first example: wrong step count";
    if (result.trace.steps[0].l_sequence != std::vector<int>{3, 4, 5} ||
        result.trace.steps[1].l_sequence != std::vector<int>{3, 4, 5})
      return "first example: wrong index sequences";
    if (result.trace.steps[0].out_column != std::vector<Int>{1, 0, 0})
      return "first example: wrong produced column";
    if (result.trace.steps[0].aux_column != std::vector<Int>{2, 0, 0})
      return "first example: wrong fused column";
    if (result.trace.steps[1].out_column != std::vector<Int>{1, 2, 0})
      return "first example: wrong second produced column";
  }
  {
    const Pattern p(CrystalShape(6, 7, 4), {{1, 0, 1, 1}, {0, 1, 3, 2}, {1, 0, 2, 0}});
    const auto result = promote(p);
    if (result.image.grid() != Grid{{0, 1, 0, 3}, {1, 0, 1, 1}, {3, 1, 0, 2}})
      return "second example: wrong image";
    if (result.trace.steps.size() != 3) return "second example: wrong step count";
    if (result.trace.steps[0].l_sequence != std::vector<int>{5, 6})
      return "second example: wrong first index sequence";
    if (result.trace.steps[1].l_sequence != std::vector<int>{4, 5, 6} ||
        result.trace.steps[2].l_sequence != std::vector<int>{4, 5, 6})
      return "second example: wrong later index sequences";
    if (result.trace.steps[0].out_column != std::vector<Int>{3, 1, 2})
      return "second example: wrong produced column";
    if (result.trace.steps[0].aux_column != std::vector<Int>{1, 3, 2} ||
        result.trace.steps[1].aux_column != std::vector<Int>{0, 4, 2})
      return "second example: wrong fused columns";
  }
  return "";
}

std::string weak_promotion_everywhere() {
  for (const auto& shape : desk_shapes(4, 3)) {
    const auto report = verify_weak_promotion(shape);
    if (!report.ok()) return shape_tag(shape) + ": " + report.violations.front().check;
  }
  return "";
}

std::string first_column_identity() {
  for (const auto& shape : desk_shapes(4, 3)) {
    for (const auto& p : enumerate_patterns(shape)) {
      const Pattern image = promote(p).image;  // non-negativity asserted inside
      Int produced = 0;
      for (int q = shape.i; q <= shape.n; ++q) produced += image.entry(1, q);
      Int last_row = 0;
      for (int j = 1; j <= shape.i; ++j) last_row += p.entry(j, shape.n);
      if (shape.m - produced != last_row) return shape_tag(shape) + ": identity fails";
    }
  }
  return "";
}

std::string affine_graphs_and_oracle() {
  for (const auto& shape : desk_shapes(3, 3)) {
    const auto graph = build_affine_graph(shape);
    if (!is_connected(graph.size(), graph.edges))
      return shape_tag(shape) + ": affine graph disconnected";
    AffinePatternCrystal model(shape);
    const auto axioms = verify_axioms(graph, model);
    if (!axioms.ok()) return shape_tag(shape) + ": " + axioms.violations.front().check;
    const auto comparison = compare_models(shape);
    if (!comparison.report.ok())
      return shape_tag(shape) + ": " + comparison.report.violations.front().check;
    if (shape.n == 2 && shape.m == 3 && shape.i == 2 && comparison.vertex_count != 10)
      return "the rank-2 level-3 crystal must have 10 vertices";
  }
  return "";
}

std::string membership_against_path_enumeration() {
  std::mt19937 rng(910273541u);
  for (const auto& shape : desk_shapes(4, 3)) {
    const auto paths = dyck_paths(shape);
    std::uniform_int_distribution<Int> entry(0, shape.m + 2);
    for (int trial = 0; trial < 1000; ++trial) {
      Grid grid(shape.rows(), std::vector<Int>(shape.cols()));
      for (auto& row : grid)
        for (auto& v : row) v = entry(rng);
      Int brute = 0;
      for (const auto& path : paths) brute = std::max(brute, path_sum(shape, grid, path));
      if (max_dyck_sum(shape, grid) != brute)
        return shape_tag(shape) + ": corner recurrence disagrees with the path maximum";
      if (is_member(shape, grid) != (brute <= shape.m))
        return shape_tag(shape) + ": membership disagrees with the path maximum";
    }
  }
  return "";
}

}  // namespace

int main() {
  criterion(1, "membership goldens", membership_goldens);
  criterion(2, "enumeration count equals the Weyl dimension", enumeration_matches_dimension);
  criterion(3, "classical crystal axioms with semiregularity and connectivity",
            classical_axioms);
  criterion(4, "local conditions and rooted tableau isomorphism with equal characters",
            stembridge_and_tableau_isomorphism);
  criterion(5, "monomial component agreement for both offset choices", monomial_model_agreement);
  criterion(6, "promotion goldens with all printed intermediates", promotion_goldens);
  criterion(7, "weak promotion conditions on every shape", weak_promotion_everywhere);
  criterion(8, "first-column non-negativity and the level identity", first_column_identity);
  criterion(9, "affine graphs: connectivity, axioms, tableau oracle agreement",
            affine_graphs_and_oracle);
  criterion(10, "corner recurrence against explicit path enumeration",
            membership_against_path_enumeration);
  return failures == 0 ? 0 : 1;
}
