#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mfckit/engine.hpp"
#include "mfckit/io.hpp"

namespace mfc {

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A slot is one copy of a simple object inside the algebra object.
struct Slot {
  int label;
  int copy;
};

// Structure constants relative to the vertex basis:
//   mu(iota_a (x) iota_b) = sum_c mu[a][b][c] iota_c V+^{ab}_c
//   Delta iota_c          = sum_{a,b} delta[c][a][b] (iota_a (x) iota_b) V^{ab}_c
//   eta = sum_u eta[u] iota_u,  eps iota_u = eps[u]   (u on the unit label)
class AlgebraObject {
 public:
  CategoryPtr C;
  std::vector<int> mult;
  std::vector<Slot> slots;
  std::vector<std::vector<int>> slots_of;  // per label
  std::vector<cx> mu, delta, eta, eps;
  bool frobenius = false;

  AlgebraObject() = default;
  AlgebraObject(CategoryPtr cat, std::vector<int> multiplicities);

  int S() const { return static_cast<int>(slots.size()); }
  int label(int s) const { return slots[s].label; }
  int slot(int label, int copy) const { return slots_of[label][copy]; }
  size_t idx3(int a, int b, int c) const { return (static_cast<size_t>(a) * S() + b) * S() + c; }
  cx& m(int a, int b, int c) { return mu[idx3(a, b, c)]; }
  cx m(int a, int b, int c) const { return mu[idx3(a, b, c)]; }
  cx& dl(int c, int a, int b) { return delta[idx3(c, a, b)]; }
  cx dl(int c, int a, int b) const { return delta[idx3(c, a, b)]; }
  // admissible slot triple for a product a (x) b -> c
  bool adm(int a, int b, int c) const { return C->n(label(a), label(b), label(c)) > 0; }
  const std::vector<int>& unit_slots() const { return slots_of[0]; }
  cx eps_eta() const;
};

// unit object with mu = 1, eta = 1; Frobenius with Delta = 1, eps = 1
AlgebraObject unit_algebra(CategoryPtr C);

struct AlgebraReport {
  double associativity = 0, unitality = 0, commutativity = 0;
};
AlgebraReport check_algebra(const AlgebraObject& A);

struct FrobeniusReport {
  double frobenius = 0, counit = 0, coassociativity = 0;
};
FrobeniusReport check_frobenius(const AlgebraObject& A);

// Counit candidate: dimension-weighted trace of left multiplication.
std::vector<cx> natural_counit(const AlgebraObject& A);

struct PhiPairing {
  std::vector<Mat> blocks;  // per label a: rows copies of a, cols copies of abar
  double min_singular = 0;
};
// P[x][y] = eps(mu(x,y)), with eps the algebra counit or the natural one
Mat pairing_matrix(const AlgebraObject& A);
PhiPairing phi(const AlgebraObject& A);
bool is_nondegenerate(const AlgebraObject& A);
// Coefficient of the Phi pairing between the slot y (label xbar) on the even strand and x.
cx phi_coef(const AlgebraObject& A, const Mat& P, int y, int x);

AlgebraObject induce_frobenius(const AlgebraObject& A);

struct Predicates {
  bool delta_separable = false, special = false, symmetric = false, haploid = false, simple = false;
  double separability_residual = 0, symmetry_residual = 0;
  cx zeta = 0;  // mu Delta = zeta id
  int bimodule_endomorphisms = 0;
};
Predicates predicates(const AlgebraObject& A);
int bimodule_endomorphism_dim(const AlgebraObject& A, double rel_tol = 1e-8);

struct ModularReport {
  double theta = 0;
  double s_invariance = 0;
};
ModularReport check_modular_invariant(const AlgebraObject& B, bool s_inverse = false);

struct Correlator {
  int genus = 0;
  cx scalar = 0;  // genus 0
  MorphismVector vec;
  std::vector<std::vector<int>> blocks;  // multi-index per block, genus >= 1
  Vec flat;                               // concatenation in build_rep basis order
};
// Delta^{(2g)} built by splitting the last leaf, or the first leaf when first_leaf is set.
Correlator correlator(const AlgebraObject& B, int g, bool first_leaf = false);

struct AtopReport {
  Mat pairing;
  int pairing_rank = 0;
  Mat p;
  double idempotent = 0, unit_fixed = 0, invariance = 0;
  int image_rank = 0;
  cx eta_eta = 0;
  bool simple = false;
};
AtopReport atop_checks(const AlgebraObject& A);

// Algebra file I/O
AlgebraObject load_algebra_json(const json& j, CategoryPtr C);
json algebra_to_json(const AlgebraObject& A);

}  // namespace mfc
