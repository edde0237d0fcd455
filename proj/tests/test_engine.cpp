#include <cmath>
#include <random>

#include "doctest.h"
#include "mfckit/engine.hpp"

using namespace mfc;

namespace {

CategoryPtr load(const std::string& name) { return load_category_file(std::string(MFCKIT_TEST_DATA) + "/" + name + ".json"); }

Mat matrix_of(const Category& C, const std::vector<int>& leaves, int root,
              const std::function<State(const State&)>& f) {
  FusionBasis in(C, leaves, root);
  return op_matrix(in, make_basis(C, leaves, root), f, C.tol);
}

}  // namespace

TEST_CASE("basis sizes for ising") {
  auto C = load("ising");
  CHECK(make_basis(*C, {2, 2})->size() == 1);
  CHECK(make_basis(*C, {2, 2, 2, 2})->size() == 2);
  CHECK(make_basis(*C, {})->size() == 1);
  CHECK(make_basis(*C, {2})->size() == 0);
  CHECK(make_basis(*C, {2, 2, 2}, 2)->size() == 2);
}

TEST_CASE("basis size matches the brute-force hom dimension") {
  for (const char* nm : {"ising", "fibonacci", "su2_3"}) {
    auto C = load(nm);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> lab(0, C->size() - 1);
    for (int len = 0; len <= 8; ++len)
      for (int t = 0; t < 4; ++t) {
        std::vector<int> leaves(len);
        for (auto& x : leaves) x = lab(rng);
        for (int root = 0; root < C->size(); ++root) {
          CAPTURE(nm);
          CAPTURE(len);
          CHECK(make_basis(*C, leaves, root)->size() == hom_dimension(*C, leaves, root));
        }
      }
  }
}

TEST_CASE("fibonacci recoupling reproduces the F block and inverts") {
  auto C = load("fibonacci");
  const int t = 1;
  auto B = make_basis(*C, {t, t, t}, t);
  REQUIRE(B->size() == 2);
  auto P = make_basis(*C, {t, t, t}, t, 2);
  const FBlock& blk = C->block(t, t, t, t);
  for (int k = 0; k < B->size(); ++k) {
    MorphismVector v{B, Vec::Unit(B->size(), k)};
    MorphismVector w = f_move(*C, v, 2);
    const int e = B->tree(k)[2];
    for (int l = 0; l < P->size(); ++l) {
      const int f = P->tree(l)[2];
      CHECK(std::abs(w.coef(l) - blk.F(blk.row(e), blk.col(f))) < 1e-12);
    }
    MorphismVector back = f_move_back(*C, w);
    CHECK((back.coef - v.coef).cwiseAbs().maxCoeff() < 1e-12);
  }
  // F^{ttt}_t of Fibonacci is [[1/phi, 1/sqrt(phi)], [1/sqrt(phi), -1/phi]] in the gauge used here
  const double phi = (1 + std::sqrt(5.0)) / 2;
  CHECK(std::abs(std::abs(blk.F(blk.row(0), blk.col(0))) - 1 / phi) < 1e-12);
  CHECK(std::abs(std::abs(blk.F(blk.row(1), blk.col(1))) - 1 / phi) < 1e-12);
}

TEST_CASE("strand twists") {
  auto C = load("ising");
  Engine eng{*C};
  Mat id = matrix_of(*C, {0, 2, 2}, 0, [&](const State& s) { return eng.twist_strand(s, 1); });
  CHECK((id - Mat::Identity(id.rows(), id.cols())).cwiseAbs().maxCoeff() < 1e-14);
  Mat tw2 = matrix_of(*C, {2, 2, 2, 2}, 0, [&](const State& s) { return eng.twist_strand(eng.twist_strand(s, 3), 3); });
  CHECK((tw2 - C->theta[2] * C->theta[2] * Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("ising pair twist on two sigmas") {
  auto C = load("ising");
  Engine eng{*C};
  // basis of (sigma, sigma, sigma, sigma -> 1), the pair (1,2) fuses to 1 or psi
  FusionBasis in(*C, {2, 2, 2, 2}, 0);
  Mat M = op_matrix(in, make_basis(*C, {2, 2, 2, 2}), [&](const State& s) { return eng.pair_twist(s, 1); }, 1e-12);
  for (int k = 0; k < in.size(); ++k) {
    const int e = in.tree(k)[2];
    CHECK(std::abs(M(k, k) - (e == 0 ? 1.0 : -1.0)) < 1e-12);
  }
  CHECK(std::abs(M(0, 1)) < 1e-12);
  CHECK(std::abs(M(1, 0)) < 1e-12);
}

TEST_CASE("pair twist equals strand twists times the double braid") {
  for (const char* nm : {"ising", "fibonacci", "su2_3"}) {
    auto C = load(nm);
    Engine eng{*C};
    const int x = C->size() - 1;
    std::vector<int> leaves{x, 1, 1, C->dual(x), x, C->dual(x)};
    REQUIRE(hom_dimension(*C, leaves) > 0);
    for (int k = 1; k < 6; ++k) {
      Mat A = matrix_of(*C, leaves, 0, [&](const State& s) { return eng.pair_twist(s, k); });
      Mat B = matrix_of(*C, leaves, 0, [&](const State& s) {
        return eng.twist_strand(eng.twist_strand(eng.braid(eng.braid(s, k), k), k), k + 1);
      });
      CAPTURE(nm);
      CAPTURE(k);
      CHECK((A - B).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("braid and inverse braid cancel") {
  auto C = load("ising");
  Engine eng{*C};
  Mat M = matrix_of(*C, {2, 2, 1, 2, 2}, 0, [&](const State& s) { return eng.braid(eng.braid(s, 2), 2, true); });
  REQUIRE(M.rows() == 2);
  CHECK((M - Mat::Identity(M.rows(), M.cols())).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("closed loop values") {
  for (const char* nm : {"ising", "fibonacci", "semion", "su2_4"}) {
    auto C = load(nm);
    CAPTURE(nm);
    for (int i = 0; i < C->size(); ++i) {
      CHECK(std::abs(closed_loop_value(*C, 0, i) - 1.0) < 1e-12);
      CHECK(std::abs(closed_loop_value(*C, i, 0) - C->d[i]) < 1e-12);
      for (int c = 0; c < C->size(); ++c) CHECK(std::abs(loop_contraction(*C, i, c) - closed_loop_value(*C, i, c)) < 1e-12);
    }
  }
  auto S = load("semion");
  CHECK(std::abs(closed_loop_value(*S, 1, 1) + 1.0) < 1e-12);
}

TEST_CASE("engine maps are linear") {
  auto C = load("fibonacci");
  Engine eng{*C};
  auto B = make_basis(*C, {1, 1, 1, 1});
  REQUIRE(B->size() == 2);
  State a = single_tree(*B, 0), b = single_tree(*B, 1);
  State sum = a;
  const cx ca(0.3, -1.2), cb(2.0, 0.5);
  sum = eng.scale(a, ca);
  for (const auto& [t, c] : b.terms) sum.add(t, cb * c);
  auto apply = [&](const State& s) { return eng.pair_twist(eng.braid(s, 2), 1); };
  MorphismVector lhs = to_vector(apply(sum), B, 1e-12);
  MorphismVector ra = to_vector(apply(a), B, 1e-12), rb = to_vector(apply(b), B, 1e-12);
  CHECK((lhs.coef - (ca * ra.coef + cb * rb.coef)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("s loop on a single handle is s over D") {
  for (const char* nm : {"ising", "fibonacci", "semion"}) {
    auto C = load(nm);
    for (int i = 0; i < C->size(); ++i)
      for (int j = 0; j < C->size(); ++j) {
        auto B = make_basis(*C, {i, C->dual(i)});
        MorphismVector v{B, Vec::Unit(1, 0)};
        MorphismVector w = s_loop(*C, v, 1, j);
        CAPTURE(nm);
        CHECK(std::abs(w.coef(0) - C->s(i, j) / C->D) < 1e-12);
      }
  }
}
