#pragma once

#include <string>
#include <vector>

#include "mfckit/centre.hpp"
#include "mfckit/cocycle.hpp"
#include "mfckit/grading.hpp"
#include "mfckit/io.hpp"

namespace mfc {

struct MoritaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structure constants of a Frobenius algebra on sum_i ibar x i relative to Z(1).
// lower(i,j,k) is the product constant for i (x) j -> k, upper(i,j,k) the coproduct
// constant for k -> i (x) j. Inadmissible triples hold 0.
struct LambdaTable {
  FusionRing ring;
  cx eta0 = 1, eps0 = 1;
  std::vector<cx> lo, up;

  explicit LambdaTable(FusionRing r = {});
  int size() const { return ring.size(); }
  size_t idx(int i, int j, int k) const { return (static_cast<size_t>(i) * size() + j) * size() + k; }
  cx& lower(int i, int j, int k) { return lo[idx(i, j, k)]; }
  cx lower(int i, int j, int k) const { return lo[idx(i, j, k)]; }
  cx& upper(int i, int j, int k) { return up[idx(i, j, k)]; }
  cx upper(int i, int j, int k) const { return up[idx(i, j, k)]; }
  bool adm(int i, int j, int k) const { return ring.n(i, j, k) > 0; }
};

LambdaTable unit_table(const FusionRing& ring);
// The table of f_*(Z) given the table of Z.
LambdaTable apply_f(const LambdaTable& t, const std::vector<cx>& f);

struct LambdaInvariants {
  double lowering = 0, raising = 0, commutativity = 0;
  double smallest = 0;  // min |lambda| over admissible triples
};
LambdaInvariants lambda_invariants(const LambdaTable& t);

// Reads eta0, eps0 and all lambda from Z by dividing by the constants of Z(1).
// Z must live over the doubled category of C with one copy of each ibar x i and nothing else.
LambdaTable extract_lambda(const AlgebraObject& Z, CategoryPtr C, double tol = 1e-9);

// f_*(Z) for f = sum_i f_i e_i r_i, with f indexed by labels of the base category.
AlgebraObject twist_algebra(const AlgebraObject& Z, CategoryPtr C, const std::vector<cx>& f);
// max entrywise distance between two algebras on the same object
double algebra_distance(const AlgebraObject& A, const AlgebraObject& B);

// Rooted 3-valent tree with labelled edges; a node without children is a leaf.
struct FusionTreeOmega {
  int label = 0;
  std::vector<FusionTreeOmega> children;  // empty or two

  static FusionTreeOmega leaf(int l) { return {l, {}}; }
  static FusionTreeOmega node(int l, FusionTreeOmega a, FusionTreeOmega b) {
    return {l, {std::move(a), std::move(b)}};
  }
  std::vector<int> leaves() const;
};

// product of upper(i, j, k) over vertices; throws on an inadmissible vertex
cx lambda_of_tree(const LambdaTable& t, const FusionTreeOmega& omega);
// replace the leaf at position pos (in leaf order) by sub, whose root label must match
FusionTreeOmega graft(const FusionTreeOmega& base, int pos, const FusionTreeOmega& sub);
// the tree witnessing that i lies in (m1 m1bar)...(mn mnbar)
FusionTreeOmega handle_tree(const GradingData& g, int i);

struct StageCheck {
  std::string property;
  double residual = 0;
  bool passed = true;
};

struct Stage {
  std::string name;
  std::vector<cx> f;        // renormalisation applied in this stage
  std::vector<cx> f_total;  // composed with all earlier stages
  std::vector<StageCheck> checks;
  bool passed = true;
};

struct NormalizeResult {
  bool success = false;
  std::vector<cx> f;  // composed: f_*(Z) has the unit table when success
  LambdaTable table;
  std::vector<Stage> stages;
  std::string failed_stage, failed_property;
  std::vector<cx> omega_gamma;  // gamma from the final step
};

NormalizeResult normalize(const LambdaTable& t, const GradingData& g, double tol = 1e-9);

struct ClassifyOptions {
  double tol = 1e-9;
  int genus_cap = 3;
  long cap_dim = 40;  // largest V_g for which the commutant is computed
};

struct AuditEntry {
  int genus = 0;
  long dim = 0;
  bool checked = false;
  int commutant = 0;
  std::string note;
};

struct ClassifyReport {
  bool isomorphism = false;
  int exit_code = 2;
  std::string verdict;
  std::vector<AuditEntry> audit;
  bool hypothesis_holds = true;  // every checked genus is irreducible
  int max_genus_required = 0;    // 3N+2
  NormalizeResult normal;
  double isomorphism_residual = 0;
  json certificate;
};

// Audit of V_g irreducibility for g = 1 .. min(3N+2, cap).
std::vector<AuditEntry> irreducibility_audit(const Category& C, int N, const ClassifyOptions& opt);

// Pipeline on a candidate full centre Z over the doubled category.
ClassifyReport classify_centre(const AlgebraObject& Z, CategoryPtr C, const ClassifyOptions& opt = {});
// full_centre(A) followed by classify_centre.
ClassifyReport classify(const AlgebraObject& A, const ClassifyOptions& opt = {});

json lambda_table_to_json(const LambdaTable& t);
json normalize_to_json(const NormalizeResult& r, const FusionRing& ring);

}  // namespace mfc
