#pragma once

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

#include "mfckit/category.hpp"

namespace mfc {

// Internal edge labels E[0..n] of a splitting tree with leaves x_1..x_n.
// Left comb: E[0] = 0, E[t] in E[t-1] (x) x_t, E[n] = root.
// Pair shape at m: E[m] is the channel of x_m (x) x_{m+1} and E[m+1] in E[m-1] (x) E[m].
using Tree = std::vector<int>;

struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct State {
  std::vector<int> leaves;
  int root = 0;
  int pair_at = 0;  // 0 for the left comb
  std::map<Tree, cx> terms;

  void add(const Tree& t, cx c) {
    if (c == 0.0) return;
    terms[t] += c;
  }
  int n() const { return static_cast<int>(leaves.size()); }
};

class FusionBasis {
 public:
  FusionBasis(const Category& C, std::vector<int> leaves, int root = 0, int pair_at = 0);
  const std::vector<int>& leaves() const { return leaves_; }
  int root() const { return root_; }
  int pair_at() const { return pair_at_; }
  int size() const { return static_cast<int>(trees_.size()); }
  const Tree& tree(int i) const { return trees_[i]; }
  int find(const Tree& t) const {
    auto it = index_.find(t);
    return it == index_.end() ? -1 : it->second;
  }

 private:
  std::vector<int> leaves_;
  int root_, pair_at_;
  std::vector<Tree> trees_;
  std::map<Tree, int> index_;
};

using BasisPtr = std::shared_ptr<const FusionBasis>;

struct MorphismVector {
  BasisPtr basis;
  Vec coef;
};

BasisPtr make_basis(const Category& C, const std::vector<int>& leaves, int root = 0, int pair_at = 0);
// brute-force count of the Hom-space dimension from fusion multiplicities
long hom_dimension(const Category& C, const std::vector<int>& leaves, int root = 0);

State to_state(const MorphismVector& v);
// Components outside the basis must vanish within tol.
MorphismVector to_vector(const State& s, BasisPtr basis, double tol);

struct Engine {
  const Category& C;
  // chirality used for the monodromy inside the S-move
  bool s_inverse = false;

  State to_pair(const State& s, int m) const;
  State from_pair(const State& s, int m) const;
  State braid(const State& s, int m, bool inverse = false) const;
  State twist_strand(const State& s, int k) const;
  State pair_twist(const State& s, int k) const;
  State insert_cup(const State& s, int p, int j) const;
  State cap(const State& s, int p) const;
  State fuse(const State& s, int p, int c, cx coef = 1.0) const;
  State split(const State& s, int p, int a, int b, cx coef = 1.0) const;
  // Component of the S-move on the pair (p, p+1) = (i, ibar) landing in the (j, jbar) summand.
  State s_move(const State& s, int p, int j) const;
  State scale(State s, cx c) const;
};

// MorphismVector level wrappers
MorphismVector f_move(const Category& C, const MorphismVector& v, int position);
MorphismVector f_move_back(const Category& C, const MorphismVector& v);
MorphismVector twist_strand(const Category& C, const MorphismVector& v, int k);
MorphismVector pair_twist(const Category& C, const MorphismVector& v, int k);
MorphismVector s_loop(const Category& C, const MorphismVector& v, int handle, int j);

cx closed_loop_value(const Category& C, int i, int c);
// The same scalar obtained by contracting the diagram with engine moves.
cx loop_contraction(const Category& C, int i, int c);

// Matrix of a linear map given on single trees.
Mat op_matrix(const FusionBasis& in, BasisPtr out, const std::function<State(const State&)>& f, double tol);
State single_tree(const FusionBasis& B, int idx);

}  // namespace mfc
