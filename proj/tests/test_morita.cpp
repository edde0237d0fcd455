#include <cmath>
#include <random>

#include "doctest.h"
#include "mfckit/morita.hpp"

using namespace mfc;
using FT = FusionTreeOmega;

namespace {

CategoryPtr load(const std::string& name) { return load_category_file(std::string(MFCKIT_TEST_DATA) + "/" + name + ".json"); }

std::vector<cx> random_f(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mod(0.5, 2), ph(-M_PI, M_PI);
  std::vector<cx> f(n);
  for (auto& z : f) z = std::polar(mod(rng), ph(rng));
  return f;
}

double table_distance(const LambdaTable& a, const LambdaTable& b) {
  double r = std::max(std::abs(a.eta0 - b.eta0), std::abs(a.eps0 - b.eps0));
  for (size_t k = 0; k < a.lo.size(); ++k) r = std::max({r, std::abs(a.lo[k] - b.lo[k]), std::abs(a.up[k] - b.up[k])});
  return r;
}

double distance_to_one(const LambdaTable& t) {
  double r = std::max(std::abs(t.eta0 - 1.0), std::abs(t.eps0 - 1.0));
  const int n = t.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (t.adm(i, j, k)) r = std::max({r, std::abs(t.lower(i, j, k) - 1.0), std::abs(t.upper(i, j, k) - 1.0)});
  return r;
}

std::vector<std::vector<cx>> constant(int n, cx c) { return std::vector<std::vector<cx>>(n, std::vector<cx>(n, c)); }

}  // namespace

TEST_CASE("table of Z(1) is identically one") {
  for (const char* nm : {"ising", "fibonacci", "su2_4"}) {
    auto C = load(nm);
    auto t = extract_lambda(z_unit_algebra(C), C);
    CAPTURE(nm);
    CHECK(distance_to_one(t) < 1e-12);
    auto inv = lambda_invariants(t);
    CHECK(inv.lowering < 1e-12);
    CHECK(inv.raising < 1e-12);
    CHECK(inv.commutativity < 1e-12);
  }
}

TEST_CASE("twisting transforms the constants by f_k / (f_i f_j)") {
  auto C = load("fibonacci");
  std::mt19937_64 rng(1);
  auto f = random_f(C->size(), rng);
  auto t = extract_lambda(twist_algebra(z_unit_algebra(C), C, f), C);
  for (int i = 0; i < C->size(); ++i)
    for (int j = 0; j < C->size(); ++j)
      for (int k = 0; k < C->size(); ++k)
        if (t.adm(i, j, k)) {
          CHECK(std::abs(t.lower(i, j, k) - f[k] / (f[i] * f[j])) < 1e-12);
          CHECK(std::abs(t.upper(i, j, k) - f[i] * f[j] / f[k]) < 1e-12);
        }
  CHECK(table_distance(t, apply_f(unit_table(C->ring), f)) < 1e-12);
}

TEST_CASE("ising twist by (1, -1, i)") {
  auto C = load("ising");
  std::vector<cx> f{1.0, -1.0, cx(0, 1)};
  auto t = extract_lambda(twist_algebra(z_unit_algebra(C), C, f), C);
  CHECK(std::abs(t.lower(2, 2, 1) - 1.0) < 1e-12);
  CHECK(std::abs(t.lower(2, 2, 0) + 1.0) < 1e-12);
  CHECK(std::abs(t.lower(1, 2, 2) + 1.0) < 1e-12);
}

TEST_CASE("extraction refuses objects outside the diagonal pattern") {
  auto C = load("ising");
  auto R = induce_frobenius(r_functor(ising_one_plus_psi(C)));
  CHECK_THROWS_AS(extract_lambda(R, C), MoritaError);
}

TEST_CASE("tree weights") {
  auto C = load("ising");
  auto U = unit_table(C->ring);
  for (int i = 0; i < C->size(); ++i) CHECK(std::abs(lambda_of_tree(U, FT::node(0, FT::leaf(i), FT::leaf(C->dual(i)))) - 1.0) < 1e-14);
  CHECK_THROWS_AS(lambda_of_tree(U, FT::node(0, FT::leaf(1), FT::leaf(2))), MoritaError);

  // grafting multiplies weights
  std::mt19937_64 rng(9);
  auto t = apply_f(U, random_f(C->size(), rng));
  FT base = FT::node(0, FT::leaf(2), FT::leaf(2));
  FT sub = FT::node(2, FT::leaf(1), FT::leaf(2));
  FT g = graft(base, 1, sub);
  CHECK(g.leaves() == std::vector<int>{2, 1, 2});
  CHECK(std::abs(lambda_of_tree(t, g) - lambda_of_tree(t, base) * lambda_of_tree(t, sub)) < 1e-12);
  CHECK_THROWS(graft(base, 0, FT::node(1, FT::leaf(2), FT::leaf(2))));
}

TEST_CASE("unit-rooted trees have weight one after the first stage") {
  auto C = load("ising");
  auto gr = grading(C->ring);
  std::mt19937_64 rng(4);
  auto t = apply_f(unit_table(C->ring), random_f(C->size(), rng));
  auto res = normalize(t, gr);
  REQUIRE(res.success);
  auto t1 = apply_f(t, res.stages[0].f_total);
  const int n = C->size();
  int counted = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int ib = C->dual(i), jb = C->dual(j);
      for (int a = 0; a < n; ++a) {
        const int ab = C->dual(a);
        // ((i ibar) (j jbar)) and the reordering ((i j) (ibar jbar))
        if (C->n(i, ib, a) && C->n(j, jb, ab)) {
          CHECK(std::abs(lambda_of_tree(t1, FT::node(0, FT::node(a, FT::leaf(i), FT::leaf(ib)),
                                                     FT::node(ab, FT::leaf(j), FT::leaf(jb)))) - 1.0) < 1e-10);
          ++counted;
        }
        if (C->n(i, j, a) && C->n(ib, jb, ab)) {
          CHECK(std::abs(lambda_of_tree(t1, FT::node(0, FT::node(a, FT::leaf(i), FT::leaf(j)),
                                                     FT::node(ab, FT::leaf(ib), FT::leaf(jb)))) - 1.0) < 1e-10);
          ++counted;
        }
      }
    }
  CHECK(counted > 10);
}

TEST_CASE("handle trees follow the witnesses") {
  auto C = load("su2_6");
  auto gr = grading(C->ring);
  for (int i : gr.I_ad) {
    if (i == 0) continue;
    FT t = handle_tree(gr, i);
    CHECK(t.label == i);
    CHECK(t.leaves().size() == 2 * gr.witness[i].m.size());
    CHECK(std::abs(lambda_of_tree(unit_table(C->ring), t) - 1.0) < 1e-14);
  }
}

TEST_CASE("normalising Z(1) needs no twist") {
  auto C = load("ising");
  auto res = normalize(unit_table(C->ring), grading(C->ring));
  REQUIRE(res.success);
  for (cx z : res.f) CHECK(std::abs(z - 1.0) < 1e-12);
}

TEST_CASE("round trips on every bundled category") {
  std::vector<std::string> names{"trivial", "semion", "ising", "fibonacci", "fibonacci_galois"};
  for (int k = 1; k <= 10; ++k) names.push_back("su2_" + std::to_string(k));
  std::mt19937_64 rng(2024);
  for (const auto& nm : names) {
    auto C = load(nm);
    auto gr = grading(C->ring);
    auto U = z_unit_algebra(C);
    for (int trial = 0; trial < 3; ++trial) {
      auto Z = twist_algebra(U, C, random_f(C->size(), rng));
      auto t = extract_lambda(Z, C);
      auto res = normalize(t, gr);
      CAPTURE(nm);
      REQUIRE(res.success);
      CHECK(distance_to_one(res.table) < 1e-8);
      CHECK(algebra_distance(twist_algebra(Z, C, res.f), U) < 1e-8);
      // every stage table is the table of the correspondingly twisted algebra
      for (const auto& st : res.stages) {
        CHECK(st.passed);
        CHECK(table_distance(apply_f(t, st.f_total), extract_lambda(twist_algebra(Z, C, st.f_total), C)) < 1e-9);
      }
    }
  }
}

TEST_CASE("a perturbed table is rejected at the handle-tree check") {
  auto C = load("ising");
  auto t = unit_table(C->ring);
  t.upper(2, 2, 1) *= 1.5;
  auto res = normalize(t, grading(C->ring));
  CHECK_FALSE(res.success);
  CHECK(res.failed_stage.find("step 2") != std::string::npos);
  CHECK(res.failed_property.find("handle trees") != std::string::npos);
  auto j = normalize_to_json(res, C->ring);
  CHECK(j["success"] == false);
}

TEST_CASE("cocycle solver") {
  auto Z2 = cyclic_group(2);
  auto g1 = solve_symmetric_coboundary(Z2, constant(2, 1.0));
  CHECK(std::abs(g1[0] - 1.0) < 1e-14);
  CHECK(std::abs(g1[1] - 1.0) < 1e-14);

  const cx c(-0.3, 0.8);
  auto w = constant(2, 1.0);
  w[1][1] = c;
  auto g2 = solve_symmetric_coboundary(Z2, w);
  CHECK(std::abs(g2[1] - std::sqrt(c)) < 1e-14);
  CHECK(coboundary_residual(Z2, w, g2) < 1e-14);

  auto V = direct_product(cyclic_group(2), cyclic_group(2));
  std::mt19937_64 rng(17);
  for (int t = 0; t < 10; ++t) {
    auto om = random_symmetric_cocycle(V, rng);
    auto r = cocycle_residual(V, om);
    CHECK(r.cocycle < 1e-12);
    CHECK(r.symmetry < 1e-12);
    CHECK(coboundary_residual(V, om, solve_symmetric_coboundary(V, om)) < 1e-9);
  }

  auto bad = constant(2, 1.0);
  bad[0][1] = 2.0;
  CHECK_THROWS_AS(solve_symmetric_coboundary(Z2, bad), CocycleError);
}

TEST_CASE("cyclic decompositions") {
  auto Z4 = cyclic_group(4);
  auto d = cyclic_decomposition(Z4);
  CHECK(d.orders == std::vector<int>{4});
  auto G = direct_product(cyclic_group(2), cyclic_group(4));
  auto e = cyclic_decomposition(G);
  CHECK(e.orders == std::vector<int>{4, 2});
}

TEST_CASE("classification") {
  auto I = load("ising");
  auto r = classify(unit_algebra(I));
  CHECK(r.exit_code == 0);
  CHECK(r.isomorphism);
  CHECK(r.hypothesis_holds);

  auto r1 = classify(unit_algebra(load("su2_1")));
  CHECK(r1.exit_code == 0);
  CHECK(r1.hypothesis_holds);
  for (const auto& a : r1.audit) {
    CHECK(a.checked);
    CHECK(a.commutant == 1);
  }

  auto r4 = classify(unit_algebra(load("su2_4")));
  REQUIRE_FALSE(r4.audit.empty());
  CHECK(r4.audit[0].genus == 1);
  CHECK(r4.audit[0].commutant == 2);
  CHECK_FALSE(r4.hypothesis_holds);
  CHECK(r4.verdict.find("hypothesis fails") != std::string::npos);

  auto rp = classify(ising_one_plus_psi(I));
  CHECK(rp.exit_code == 0);
  CHECK(rp.isomorphism_residual < 1e-8);
}
