#include "mfckit/mcg.hpp"

#include <map>

#include "mfckit/linalg.hpp"

namespace mfc {

std::vector<std::vector<int>> multi_indices(int n, int g) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(g, 0);
  if (g == 0) return {{}};
  while (true) {
    out.push_back(cur);
    int t = g - 1;
    while (t >= 0 && ++cur[t] == n) cur[t--] = 0;
    if (t < 0) break;
  }
  return out;
}

std::vector<int> handle_leaves(const Category& C, const std::vector<int>& m) {
  std::vector<int> L;
  for (int i : m) {
    L.push_back(i);
    L.push_back(C.dual(i));
  }
  return L;
}

long genus_dimension(const Category& C, int g) {
  long total = 0;
  for (const auto& m : multi_indices(C.size(), g)) total += hom_dimension(C, handle_leaves(C, m));
  return total;
}

GenusRep build_rep(const Category& C, int g, const RepOptions& opt) {
  if (g < 0) throw std::invalid_argument("genus must be non-negative");
  GenusRep rep;
  rep.genus = g;
  if (g == 0) {
    rep.dim = 1;
    rep.summand = {{}};
    return rep;
  }
  long dim = genus_dimension(C, g);
  if (dim > opt.cap_dim)
    throw DimensionCapError("dim V_" + std::to_string(g) + " = " + std::to_string(dim) + " exceeds cap " +
                            std::to_string(opt.cap_dim));
  std::map<std::vector<int>, int> block_of;
  int off = 0;
  for (const auto& m : multi_indices(C.size(), g)) {
    BasisPtr B = make_basis(C, handle_leaves(C, m));
    if (B->size() == 0) continue;
    block_of[m] = static_cast<int>(rep.blocks.size());
    rep.blocks.push_back(m);
    rep.offset.push_back(off);
    rep.bases.push_back(B);
    for (int t = 0; t < B->size(); ++t) rep.summand.push_back(m);
    off += B->size();
  }
  rep.dim = off;
  const int n = rep.dim;
  Engine eng{C, opt.s_inverse};

  // operator that keeps the multi-index
  auto local = [&](const std::function<State(const State&)>& f) {
    Mat M = Mat::Zero(n, n);
    for (size_t b = 0; b < rep.blocks.size(); ++b) {
      Mat blk = op_matrix(*rep.bases[b], rep.bases[b], f, C.tol);
      M.block(rep.offset[b], rep.offset[b], blk.rows(), blk.cols()) = blk;
    }
    return M;
  };

  for (int k = 1; k <= g; ++k) {
    Mat M = Mat::Zero(n, n);
    for (int t = 0; t < n; ++t) M(t, t) = C.theta[rep.summand[t][k - 1]];
    rep.names.push_back("T_alpha_" + std::to_string(k));
    rep.gens.push_back(M);
    rep.diagonal.push_back(true);
  }
  for (int k = 1; k < g; ++k) {
    rep.names.push_back("T_gamma_" + std::to_string(k));
    rep.gens.push_back(local([&](const State& s) { return eng.pair_twist(s, 2 * k); }));
    rep.diagonal.push_back(false);
  }
  for (int k = 1; k <= g; ++k) {
    Mat M = Mat::Zero(n, n);
    for (size_t b = 0; b < rep.blocks.size(); ++b) {
      const FusionBasis& B = *rep.bases[b];
      for (int t = 0; t < B.size(); ++t) {
        State col = single_tree(B, t);
        for (int j = 0; j < C.size(); ++j) {
          std::vector<int> m2 = rep.blocks[b];
          m2[k - 1] = j;
          auto it = block_of.find(m2);
          if (it == block_of.end()) continue;
          State r = eng.s_move(col, 2 * k - 1, j);
          MorphismVector v = to_vector(r, rep.bases[it->second], C.tol);
          M.block(rep.offset[it->second], rep.offset[b] + t, v.coef.size(), 1) = v.coef;
        }
      }
    }
    rep.names.push_back("S_" + std::to_string(k));
    rep.gens.push_back(M);
    rep.diagonal.push_back(false);
  }
  return rep;
}

RankReport commutant_of(const std::vector<Mat>& gens, const std::vector<bool>& diagonal, double rel_tol) {
  RankReport out;
  if (gens.empty()) {
    out.dim = 1;
    return out;
  }
  const int n = static_cast<int>(gens[0].rows());
  // X commutes with a diagonal matrix iff X_ab = 0 whenever the diagonal entries differ.
  std::vector<std::vector<int>> allowed(n);  // allowed[a] = list of b
  std::map<std::pair<int, int>, int> var;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      bool ok = true;
      for (size_t g = 0; g < gens.size() && ok; ++g)
        if (diagonal[g]) ok = std::abs(gens[g](a, a) - gens[g](b, b)) <= 1e-9 * std::max(1.0, std::abs(gens[g](a, a)));
      if (ok) {
        var[{a, b}] = static_cast<int>(var.size());
        allowed[a].push_back(b);
      }
    }
  const int u = static_cast<int>(var.size());
  out.unknowns = u;
  std::vector<Vec> rows;
  for (size_t g = 0; g < gens.size(); ++g) {
    if (diagonal[g]) continue;
    const Mat& M = gens[g];
    // (XM - MX)_ab = sum_c X_ac M_cb - M_ac X_cb
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Vec r = Vec::Zero(u);
        bool any = false;
        for (int c : allowed[a])
          if (M(c, b) != 0.0) {
            r(var[{a, c}]) += M(c, b);
            any = true;
          }
        for (int c = 0; c < n; ++c) {
          if (M(a, c) == 0.0) continue;
          auto it = var.find({c, b});
          if (it == var.end()) continue;
          r(it->second) -= M(a, c);
          any = true;
        }
        if (any && r.cwiseAbs().maxCoeff() > 0) rows.push_back(std::move(r));
      }
  }
  Mat A(rows.size(), u);
  for (size_t i = 0; i < rows.size(); ++i) A.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  NullSpace ns = nullspace(A, rel_tol);
  out.dim = ns.nullity;
  out.smallest_kept = ns.smallest_kept;
  out.largest_dropped = ns.largest_dropped;
  return out;
}

RankReport commutant(const GenusRep& rep, double rel_tol) {
  if (rep.genus == 0) return RankReport{1, 1, 0, 0};
  return commutant_of(rep.gens, rep.diagonal, rel_tol);
}

bool is_irreducible(const GenusRep& rep, double rel_tol) { return commutant(rep, rel_tol).dim == 1; }

FixedSpace invariant_subspace(const GenusRep& rep, double rel_tol) {
  FixedSpace out;
  if (rep.genus == 0) {
    out.basis = Mat::Identity(1, 1);
    out.rank.dim = 1;
    return out;
  }
  const int n = rep.dim;
  Mat A(static_cast<Eigen::Index>(rep.gens.size()) * n, n);
  for (size_t g = 0; g < rep.gens.size(); ++g)
    A.middleRows(static_cast<Eigen::Index>(g) * n, n) = rep.gens[g] - Mat::Identity(n, n);
  NullSpace ns = nullspace(A, rel_tol);
  out.basis = ns.basis;
  out.rank.dim = ns.nullity;
  out.rank.unknowns = n;
  out.rank.smallest_kept = ns.smallest_kept;
  out.rank.largest_dropped = ns.largest_dropped;
  return out;
}

}  // namespace mfc
