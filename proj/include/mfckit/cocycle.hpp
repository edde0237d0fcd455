#pragma once

#include <random>
#include <vector>

#include "mfckit/grading.hpp"

namespace mfc {

struct CocycleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// omega[g][h] on a finite abelian group; gamma[g] a 1-cochain.
struct CocycleData {
  std::vector<std::vector<cx>> omega;
  std::vector<cx> gamma;
};

struct CocycleResidual {
  double normalisation = 0, symmetry = 0, cocycle = 0;
};
CocycleResidual cocycle_residual(const FiniteGroup& G, const std::vector<std::vector<cx>>& omega);

// max |omega(g,h) gamma_gh / (gamma_g gamma_h) - 1|
double coboundary_residual(const FiniteGroup& G, const std::vector<std::vector<cx>>& omega,
                           const std::vector<cx>& gamma);

// Generators g_1..g_r with orders n_1..n_r such that (a_t) -> prod g_t^{a_t} is a bijection.
struct CyclicDecomposition {
  std::vector<int> gens, orders;
};
CyclicDecomposition cyclic_decomposition(const FiniteGroup& G);

// gamma with gamma_e = 1 and omega(g,h) = gamma_g gamma_h / gamma_gh, for omega symmetric and normalised.
std::vector<cx> solve_symmetric_coboundary(const FiniteGroup& G, const std::vector<std::vector<cx>>& omega,
                                           double tol = 1e-9);

// omega = delta(gamma) for a random gamma with gamma_e = 1
std::vector<std::vector<cx>> random_symmetric_cocycle(const FiniteGroup& G, std::mt19937_64& rng);

}  // namespace mfc
