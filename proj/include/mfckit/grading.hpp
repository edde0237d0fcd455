#pragma once

#include <stdexcept>
#include <vector>

#include "mfckit/category.hpp"

namespace mfc {

struct GradingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite group given by its multiplication table, element 0 is the identity.
struct FiniteGroup {
  std::vector<std::vector<int>> mul;
  int size() const { return static_cast<int>(mul.size()); }
  int op(int g, int h) const { return mul[g][h]; }
  int inv(int g) const;
  int order(int g) const;
  bool abelian() const;
};

FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B);

// A handle witness for i in the adjoint subring: i in (m1 m1bar)(m2 m2bar)...
// k[t] in m[t] (x) mbar[t], partial[t] the running product label with partial.back() == i.
struct HandleWitness {
  std::vector<int> m, k, partial;
};

struct GradingData {
  FusionRing ring;
  std::vector<int> I_ad;               // ascending
  std::vector<bool> in_ad;
  FiniteGroup G;
  std::vector<int> partition;          // label -> group element
  std::vector<std::vector<int>> components;  // group element -> labels, ascending
  std::vector<int> n;                  // filtration degree, -1 outside I_ad
  int N = 0;
  std::vector<HandleWitness> witness;  // for labels in I_ad
};

GradingData grading(const FusionRing& ring);

// Individual invariant checks; each returns an empty string when it holds.
std::string check_partition_respects_fusion(const GradingData& g);
std::string check_transitive_components(const GradingData& g);
std::string check_filtration_monotone(const GradingData& g);

}  // namespace mfc
