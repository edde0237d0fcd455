#include <cmath>
#include <random>

#include "doctest.h"
#include "mfckit/centre.hpp"
#include "mfckit/mcg.hpp"
#include "mfckit/morita.hpp"

using namespace mfc;

namespace {

CategoryPtr load(const std::string& name) { return load_category_file(std::string(MFCKIT_TEST_DATA) + "/" + name + ".json"); }

// 1 + x where x (x) x = 1, with the product on x (x) x -> 1 set to c
AlgebraObject one_plus(CategoryPtr C, int x, cx c) {
  std::vector<int> mult(C->size(), 0);
  mult[0] = 1;
  mult[x] = 1;
  AlgebraObject A(C, mult);
  const int u = A.slot(0, 0), v = A.slot(x, 0);
  A.m(u, u, u) = 1;
  A.m(u, v, v) = 1;
  A.m(v, u, v) = 1;
  A.m(v, v, u) = c;
  A.eta[0] = 1;
  return A;
}

}  // namespace

TEST_CASE("unit object is an algebra with zero residuals") {
  auto C = load("ising");
  auto U = unit_algebra(C);
  auto r = check_algebra(U);
  CHECK(r.associativity == 0);
  CHECK(r.unitality == 0);
  CHECK(r.commutativity == 0);
  auto ph = phi(U);
  REQUIRE(ph.blocks.size() >= 1);
  CHECK(std::abs(ph.blocks[0](0, 0) - 1.0) < 1e-14);
  CHECK(is_nondegenerate(U));
  auto F = induce_frobenius(U);
  CHECK(std::abs(F.delta[0] - 1.0) < 1e-14);
  CHECK(std::abs(F.eps[0] - 1.0) < 1e-14);
  auto p = predicates(F);
  CHECK(p.delta_separable);
  CHECK(p.special);
  CHECK(p.symmetric);
  CHECK(p.haploid);
  CHECK(p.simple);
}

TEST_CASE("Z(1) of ising is an algebra") {
  auto Z = z_unit(load("ising")).algebra;
  auto r = check_algebra(Z);
  CHECK(r.associativity < 1e-9);
  CHECK(r.unitality < 1e-9);
  CHECK(r.commutativity < 1e-9);
  auto f = check_frobenius(Z);
  CHECK(f.frobenius < 1e-9);
  CHECK(f.counit < 1e-9);
  CHECK(f.coassociativity < 1e-9);
}

TEST_CASE("perturbing one product constant shows up in associativity") {
  auto Z = z_unit(load("ising")).algebra;
  for (auto& x : Z.mu)
    if (std::abs(x) > 0.5) {
      x *= 1.001;
      break;
    }
  CHECK(check_algebra(Z).associativity == doctest::Approx(1e-3).epsilon(0.2));
}

TEST_CASE("non-degeneracy") {
  auto I = load("ising");
  CHECK(is_nondegenerate(z_unit(I).algebra));
  // 1 + psi with psi psi = 0 is associative but its pairing vanishes on psi
  auto A = one_plus(I, 1, 0.0);
  CHECK(check_algebra(A).associativity < 1e-12);
  CHECK_FALSE(is_nondegenerate(A));
  CHECK(phi(A).min_singular < 1e-12);
  CHECK_THROWS(induce_frobenius(A));
  auto B = one_plus(I, 1, 1.0);
  CHECK(check_algebra(B).associativity < 1e-12);
  CHECK(is_nondegenerate(B));
}

TEST_CASE("induced Frobenius structure of Z(1) reproduces its coproduct") {
  for (const char* nm : {"ising", "fibonacci", "semion", "su2_3"}) {
    auto Z = z_unit(load(nm)).algebra;
    AlgebraObject bare = Z;
    std::fill(bare.delta.begin(), bare.delta.end(), cx(0));
    std::fill(bare.eps.begin(), bare.eps.end(), cx(0));
    bare.frobenius = false;
    auto F = induce_frobenius(bare);
    double r = 0;
    for (size_t k = 0; k < Z.delta.size(); ++k) r = std::max(r, std::abs(F.delta[k] - Z.delta[k]));
    for (size_t k = 0; k < Z.eps.size(); ++k) r = std::max(r, std::abs(F.eps[k] - Z.eps[k]));
    CAPTURE(nm);
    CHECK(r < 1e-10);
  }
  // the Fibonacci coproduct constant on (tau, tau -> tau) is d_tau / D^2
  auto Fb = load("fibonacci");
  auto Z = z_unit(Fb).algebra;
  const int t = Z.slot(Z.C->pair(1, 1), 0);
  CHECK(std::abs(Z.dl(t, t, t) - Fb->d[1] / Fb->D2()) < 1e-12);
}

TEST_CASE("rescaled Z(1) still induces a separable coproduct") {
  auto C = load("ising");
  auto Z = z_unit(C).algebra;
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> mod(0.5, 2), ph(-M_PI, M_PI);
  for (int t = 0; t < 5; ++t) {
    std::vector<cx> f(C->size());
    for (auto& z : f) z = std::polar(mod(rng), ph(rng));
    AlgebraObject A = twist_algebra(Z, C, f);
    A.frobenius = false;
    auto F = induce_frobenius(A);
    auto p = predicates(F);
    CHECK(p.separability_residual < 1e-10);
    CHECK(p.delta_separable);
    CHECK(check_frobenius(F).frobenius < 1e-10);
  }
}

TEST_CASE("predicates on Z(1) and on a non-simple algebra") {
  auto Z = induce_frobenius(z_unit(load("ising")).algebra);
  auto p = predicates(Z);
  CHECK(p.haploid);
  CHECK(p.simple);
  CHECK(p.symmetric);
  CHECK(p.delta_separable);
  CHECK(p.bimodule_endomorphisms == 1);

  auto UU = unit_squared(load("ising"));
  CHECK(check_algebra(UU).associativity < 1e-12);
  CHECK(bimodule_endomorphism_dim(UU) == 2);
  CHECK_FALSE(predicates(induce_frobenius(UU)).simple);
  CHECK_FALSE(predicates(induce_frobenius(UU)).haploid);
}

TEST_CASE("modular invariance") {
  auto I = load("ising");
  auto Z = z_unit(I).algebra;
  auto r = check_modular_invariant(Z);
  CHECK(r.theta < 1e-8);
  CHECK(r.s_invariance < 1e-8);

  auto U = unit_algebra(Z.C);
  auto ru = check_modular_invariant(U);
  CHECK(ru.theta == 0);
  CHECK(ru.s_invariance > 0.1);

  // 1 x 1 + psi x 1 has twist -1 on the second summand
  auto B = one_plus(Z.C, Z.C->pair(1, 0), 1.0);
  CHECK(check_algebra(B).associativity < 1e-12);
  CHECK(check_modular_invariant(B).theta == doctest::Approx(std::abs(I->theta[1] - 1.0)));
}

TEST_CASE("genus zero correlator is the dimension") {
  auto Z = z_unit(load("ising")).algebra;
  CHECK(std::abs(correlator(Z, 0).scalar - 4.0) < 1e-12);
  CHECK(std::abs(Z.eps_eta() - 4.0) < 1e-12);
  auto T = z_unit(load("trivial")).algebra;
  auto c1 = correlator(T, 1);
  REQUIRE(c1.flat.size() == 1);
  CHECK(std::abs(c1.flat(0) - 1.0) < 1e-12);
}

TEST_CASE("correlators are invariant and independent of the comb shape") {
  for (const char* nm : {"ising", "semion", "fibonacci"}) {
    auto Z = z_unit(load(nm)).algebra;
    for (int g = 1; g <= 2; ++g) {
      auto c = correlator(Z, g);
      auto rep = build_rep(*Z.C, g);
      REQUIRE(c.flat.size() == rep.dim);
      double res = 0;
      for (const auto& M : rep.gens) res = std::max(res, (M * c.flat - c.flat).cwiseAbs().maxCoeff());
      CAPTURE(nm);
      CAPTURE(g);
      CHECK(c.flat.norm() > 1e-6);
      CHECK(res < 1e-8);
      CHECK((correlator(Z, g, true).flat - c.flat).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("topological algebra checks") {
  auto U = induce_frobenius(unit_algebra(load("ising")));
  auto a = atop_checks(U);
  CHECK(a.pairing.rows() == 1);
  CHECK(std::abs(a.pairing(0, 0) - 1.0) < 1e-14);
  CHECK(std::abs(a.p(0, 0) - 1.0) < 1e-14);
  CHECK(a.image_rank == 1);
  CHECK(std::abs(a.eta_eta - 1.0) < 1e-14);

  auto Z = z_unit(load("ising")).algebra;
  auto b = atop_checks(Z);
  CHECK(b.idempotent < 1e-10);
  CHECK(b.unit_fixed < 1e-10);
  CHECK(b.invariance < 1e-10);
  CHECK(b.image_rank == 1);
  CHECK(std::abs(b.eta_eta - 4.0) < 1e-10);
}

TEST_CASE("algebra files round trip") {
  auto I = load("ising");
  auto A = ising_one_plus_psi(I);
  auto B = load_algebra_json(algebra_to_json(A), I);
  CHECK(B.mult == A.mult);
  double r = 0;
  for (size_t k = 0; k < A.mu.size(); ++k) r = std::max(r, std::abs(A.mu[k] - B.mu[k]));
  CHECK(r == 0);
}

TEST_CASE("algebras without a unit slot are rejected") {
  auto I = load("ising");
  CHECK_THROWS_AS(AlgebraObject(I, std::vector<int>{0, 1, 0}), AlgebraError);
}
