#pragma once

#include <string>

#include "mfckit/algebra.hpp"

namespace mfc {

struct CentreVerification {
  AlgebraReport algebra;
  FrobeniusReport frobenius;
  Predicates predicates;
  bool nondegenerate = false;
  double phi_min_singular = 0;
  ModularReport modular;
  cx dim = 0;          // sum_x m_x d_x
  cx eps_eta = 0;
  double dim_residual = 0;  // |dim - D^2| with D^2 of the base category
  bool diagonal_pattern = false;  // m_(xbar,x) = 1, other m = 0
  double idempotent = 0;          // ||P_l^2 - P_l|| when a left centre was taken
  bool passed(double tol) const;
};

struct CentreResult {
  AlgebraObject algebra;
  std::string source;
  CentreVerification verification;
};

// Z(1) in C x C^rev on the object sum_i ibar x i.
AlgebraObject z_unit_algebra(CategoryPtr C, CategoryPtr doubled_cat = nullptr);
CentreResult z_unit(CategoryPtr C, CategoryPtr doubled_cat = nullptr);

struct RFunctorOptions {
  bool braid_inverse = false;
};
AlgebraObject r_functor(const AlgebraObject& A, CategoryPtr doubled_cat = nullptr, const RFunctorOptions& opt = {});

struct LeftCentreOptions {
  bool braid_inverse = false;
  double cluster_tol = 1e-7;
};
Mat left_centre_idempotent(const AlgebraObject& B, const LeftCentreOptions& opt = {});
AlgebraObject left_centre(const AlgebraObject& B, const LeftCentreOptions& opt = {}, double* idem_residual = nullptr);

CentreResult full_centre(const AlgebraObject& A, CategoryPtr doubled_cat = nullptr);

CentreVerification verify_centre(const AlgebraObject& Z, const Category& base);

// The algebra 1 + psi in Ising with mu(psi, psi -> 1) = 1.
AlgebraObject ising_one_plus_psi(CategoryPtr ising);
// 1 + 1 with componentwise product (not simple).
AlgebraObject unit_squared(CategoryPtr C);

}  // namespace mfc
