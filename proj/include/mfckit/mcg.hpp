#pragma once

#include <string>
#include <vector>

#include "mfckit/engine.hpp"

namespace mfc {

struct RepOptions {
  long cap_dim = 10000;
  bool s_inverse = false;
};

struct GenusRep {
  int genus = 0;
  int dim = 1;
  std::vector<std::string> names;  // T_alpha_k, T_gamma_k, S_k
  std::vector<Mat> gens;
  std::vector<std::vector<int>> summand;  // multi-index of each basis vector
  std::vector<std::vector<int>> blocks;   // multi-indices in basis order
  std::vector<int> offset;                // first basis index of each block
  std::vector<BasisPtr> bases;
  std::vector<bool> diagonal;              // generator known to be diagonal
};

struct DimensionCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All multi-indices in I^g, lexicographic; the basis order of V_g follows it.
std::vector<std::vector<int>> multi_indices(int n, int g);
std::vector<int> handle_leaves(const Category& C, const std::vector<int>& m);
long genus_dimension(const Category& C, int g);
GenusRep build_rep(const Category& C, int g, const RepOptions& opt = {});

struct RankReport {
  int dim = 0;
  int unknowns = 0;
  double smallest_kept = 0;
  double largest_dropped = 0;
};

RankReport commutant(const GenusRep& rep, double rel_tol = 1e-6);
inline int commutant_dim(const GenusRep& rep, double rel_tol = 1e-6) { return commutant(rep, rel_tol).dim; }
bool is_irreducible(const GenusRep& rep, double rel_tol = 1e-6);

struct FixedSpace {
  Mat basis;
  RankReport rank;
};
FixedSpace invariant_subspace(const GenusRep& rep, double rel_tol = 1e-6);

// Commutant of an arbitrary family of square matrices.
RankReport commutant_of(const std::vector<Mat>& gens, const std::vector<bool>& diagonal, double rel_tol);

}  // namespace mfc
