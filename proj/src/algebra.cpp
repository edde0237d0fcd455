#include "mfckit/algebra.hpp"

#include <Eigen/Sparse>
#include <map>

#include "mfckit/linalg.hpp"
#include "mfckit/mcg.hpp"

namespace mfc {

AlgebraObject::AlgebraObject(CategoryPtr cat, std::vector<int> multiplicities)
    : C(std::move(cat)), mult(std::move(multiplicities)) {
  if (static_cast<int>(mult.size()) != C->size()) throw AlgebraError("multiplicity vector has wrong length");
  if (mult[0] < 1) throw AlgebraError("algebra has no unit slot");
  slots_of.assign(C->size(), {});
  for (int l = 0; l < C->size(); ++l) {
    if (mult[l] < 0) throw AlgebraError("negative multiplicity");
    for (int k = 0; k < mult[l]; ++k) {
      slots_of[l].push_back(static_cast<int>(slots.size()));
      slots.push_back({l, k});
    }
  }
  const size_t s = slots.size();
  mu.assign(s * s * s, 0.0);
  delta.assign(s * s * s, 0.0);
  eta.assign(s, 0.0);
  eps.assign(s, 0.0);
}

cx AlgebraObject::eps_eta() const {
  cx v = 0;
  for (int u : unit_slots()) v += eps[u] * eta[u];
  return v;
}

AlgebraObject unit_algebra(CategoryPtr C) {
  std::vector<int> m(C->size(), 0);
  m[0] = 1;
  AlgebraObject A(C, m);
  A.m(0, 0, 0) = 1.0;
  A.dl(0, 0, 0) = 1.0;
  A.eta[0] = 1.0;
  A.eps[0] = 1.0;
  A.frobenius = true;
  return A;
}

AlgebraReport check_algebra(const AlgebraObject& A) {
  AlgebraReport r;
  const Category& C = *A.C;
  const int S = A.S();
  for (int a = 0; a < S; ++a)
    for (int b = 0; b < S; ++b)
      for (int c = 0; c < S; ++c)
        for (int d = 0; d < S; ++d) {
          const int la = A.label(a), lb = A.label(b), lc = A.label(c), ld = A.label(d);
          const FBlock& B = C.block(la, lb, lc, ld);
          for (int lf : B.cols) {
            cx lhs = 0;
            for (int e = 0; e < S; ++e) {
              cx x = A.m(a, b, e) * A.m(e, c, d);
              if (x != 0.0) lhs += x * C.Finv(la, lb, lc, ld, lf, A.label(e));
            }
            cx rhs = 0;
            for (int f : A.slots_of[lf]) rhs += A.m(b, c, f) * A.m(a, f, d);
            r.associativity = std::max(r.associativity, std::abs(lhs - rhs));
          }
        }
  for (int b = 0; b < S; ++b)
    for (int c = 0; c < S; ++c) {
      if (A.label(b) != A.label(c)) continue;
      cx l = 0, rr = 0;
      for (int u : A.unit_slots()) {
        l += A.eta[u] * A.m(u, b, c);
        rr += A.eta[u] * A.m(b, u, c);
      }
      double want = b == c ? 1.0 : 0.0;
      r.unitality = std::max({r.unitality, std::abs(l - want), std::abs(rr - want)});
    }
  for (int a = 0; a < S; ++a)
    for (int b = 0; b < S; ++b)
      for (int c = 0; c < S; ++c) {
        if (!A.adm(a, b, c)) continue;
        cx v = A.m(a, b, c) - C.R(A.label(a), A.label(b), A.label(c)) * A.m(b, a, c);
        r.commutativity = std::max(r.commutativity, std::abs(v));
      }
  return r;
}

namespace {

// Residual rows of the two Frobenius identities, callback receives (lhs, rhs1, rhs2).
template <class Fn>
void frobenius_terms(const AlgebraObject& A, Fn&& fn) {
  const Category& C = *A.C;
  const int S = A.S();
  for (int a = 0; a < S; ++a)
    for (int b = 0; b < S; ++b)
      for (int c = 0; c < S; ++c)
        for (int d = 0; d < S; ++d) {
          const int la = A.label(a), lb = A.label(b), lc = A.label(c), ld = A.label(d);
          for (int le : C.channels(la, lb)) {
            if (!C.n(lc, ld, le)) continue;
            fn(a, b, c, d, le);
          }
        }
}

}  // namespace

FrobeniusReport check_frobenius(const AlgebraObject& A) {
  FrobeniusReport r;
  const Category& C = *A.C;
  const int S = A.S();
  frobenius_terms(A, [&](int a, int b, int c, int d, int le) {
    const int la = A.label(a), lb = A.label(b), lc = A.label(c), ld = A.label(d);
    cx lhs = 0, r1 = 0, r2 = 0;
    for (int e : A.slots_of[le]) lhs += A.m(a, b, e) * A.dl(e, c, d);
    for (int c2 = 0; c2 < S; ++c2) {
      cx x = A.dl(b, c2, d) * A.m(a, c2, c);
      if (x != 0.0) r1 += x * C.Finv(la, A.label(c2), ld, le, lb, lc);
    }
    for (int d2 = 0; d2 < S; ++d2) {
      cx x = A.dl(a, c, d2) * A.m(d2, b, d);
      if (x != 0.0) r2 += x * C.F(lc, A.label(d2), lb, le, la, ld);
    }
    r.frobenius = std::max({r.frobenius, std::abs(lhs - r1), std::abs(lhs - r2)});
  });
  for (int c = 0; c < S; ++c)
    for (int b = 0; b < S; ++b) {
      if (A.label(b) != A.label(c)) continue;
      cx l = 0, rr = 0;
      for (int u : A.unit_slots()) {
        l += A.eps[u] * A.dl(c, u, b);
        rr += A.dl(c, b, u) * A.eps[u];
      }
      double want = b == c ? 1.0 : 0.0;
      r.counit = std::max({r.counit, std::abs(l - want), std::abs(rr - want)});
    }
  for (int d = 0; d < S; ++d)
    for (int a = 0; a < S; ++a)
      for (int b = 0; b < S; ++b)
        for (int c = 0; c < S; ++c) {
          const int la = A.label(a), lb = A.label(b), lc = A.label(c), ld = A.label(d);
          const FBlock& B = C.block(la, lb, lc, ld);
          for (int lf : B.cols) {
            cx lhs = 0;
            for (int e = 0; e < S; ++e) {
              cx x = A.dl(d, e, c) * A.dl(e, a, b);
              if (x != 0.0) lhs += x * C.F(la, lb, lc, ld, A.label(e), lf);
            }
            cx rhs = 0;
            for (int f : A.slots_of[lf]) rhs += A.dl(d, a, f) * A.dl(f, b, c);
            r.coassociativity = std::max(r.coassociativity, std::abs(lhs - rhs));
          }
        }
  return r;
}

std::vector<cx> natural_counit(const AlgebraObject& A) {
  std::vector<cx> e(A.S(), 0.0);
  for (int u : A.unit_slots()) {
    cx t = 0;
    for (int z = 0; z < A.S(); ++z) t += A.C->d[A.label(z)] * A.m(u, z, z);
    e[u] = t;
  }
  return e;
}

Mat pairing_matrix(const AlgebraObject& A) {
  const int S = A.S();
  std::vector<cx> e = A.frobenius ? A.eps : natural_counit(A);
  Mat P = Mat::Zero(S, S);
  for (int x = 0; x < S; ++x)
    for (int y = 0; y < S; ++y) {
      if (A.label(y) != A.C->dual(A.label(x))) continue;
      cx v = 0;
      for (int w : A.unit_slots()) v += A.m(x, y, w) * e[w];
      P(x, y) = v;
    }
  return P;
}

cx phi_coef(const AlgebraObject& A, const Mat& P, int y, int x) { return P(y, x) * A.C->zig_inv(A.label(y)); }

PhiPairing phi(const AlgebraObject& A) {
  PhiPairing out;
  Mat P = pairing_matrix(A);
  const Category& C = *A.C;
  out.min_singular = std::numeric_limits<double>::infinity();
  for (int a = 0; a < C.size(); ++a) {
    const auto& xs = A.slots_of[a];
    const auto& ys = A.slots_of[C.dual(a)];
    Mat B(xs.size(), ys.size());
    for (size_t i = 0; i < xs.size(); ++i)
      for (size_t k = 0; k < ys.size(); ++k) B(i, k) = P(xs[i], ys[k]) * C.zig_inv(a);
    out.blocks.push_back(B);
    if (B.size() > 0) out.min_singular = std::min(out.min_singular, min_singular_value(B));
  }
  return out;
}

bool is_nondegenerate(const AlgebraObject& A) { return phi(A).min_singular > A.C->tol; }

AlgebraObject induce_frobenius(const AlgebraObject& A0) {
  if (!is_nondegenerate(A0)) throw AlgebraError("Phi is singular, no Frobenius structure can be induced");
  AlgebraObject A = A0;
  const Category& C = *A.C;
  const int S = A.S();
  A.eps = natural_counit(A0);
  std::fill(A.delta.begin(), A.delta.end(), cx(0));
  // unknowns: admissible (c; a, b)
  std::map<size_t, int> var;
  for (int c = 0; c < S; ++c)
    for (int a = 0; a < S; ++a)
      for (int b = 0; b < S; ++b)
        if (C.n(A.label(a), A.label(b), A.label(c))) var.emplace(A.idx3(c, a, b), static_cast<int>(var.size()));
  const int u = static_cast<int>(var.size());
  std::vector<Eigen::Triplet<cx>> trip;
  std::vector<cx> rhs;
  int row = 0;
  auto v = [&](int c, int a, int b) { return var.at(A.idx3(c, a, b)); };
  frobenius_terms(A, [&](int a, int b, int c, int d, int le) {
    const int la = A.label(a), lb = A.label(b), lc = A.label(c), ld = A.label(d);
    std::map<int, cx> r1, r2;
    for (int e : A.slots_of[le])
      if (A.m(a, b, e) != 0.0) {
        r1[v(e, c, d)] += A.m(a, b, e);
        r2[v(e, c, d)] += A.m(a, b, e);
      }
    for (int c2 = 0; c2 < S; ++c2) {
      if (A.m(a, c2, c) == 0.0 || !C.n(A.label(c2), ld, lb)) continue;
      r1[v(b, c2, d)] -= A.m(a, c2, c) * C.Finv(la, A.label(c2), ld, le, lb, lc);
    }
    for (int d2 = 0; d2 < S; ++d2) {
      if (A.m(d2, b, d) == 0.0 || !C.n(lc, A.label(d2), la)) continue;
      r2[v(a, c, d2)] -= A.m(d2, b, d) * C.F(lc, A.label(d2), lb, le, la, ld);
    }
    for (auto* r : {&r1, &r2}) {
      bool any = false;
      for (auto& [k, x] : *r)
        if (std::abs(x) > 0) {
          trip.emplace_back(row, k, x);
          any = true;
        }
      if (any) {
        rhs.push_back(0.0);
        ++row;
      }
    }
  });
  for (int c = 0; c < S; ++c)
    for (int b = 0; b < S; ++b) {
      if (A.label(b) != A.label(c)) continue;
      bool any = false;
      for (int w : A.unit_slots())
        if (A.eps[w] != 0.0) {
          trip.emplace_back(row, v(c, w, b), A.eps[w]);
          any = true;
        }
      if (any) {
        rhs.push_back(b == c ? 1.0 : 0.0);
        ++row;
      }
      any = false;
      for (int w : A.unit_slots())
        if (A.eps[w] != 0.0) {
          trip.emplace_back(row, v(c, b, w), A.eps[w]);
          any = true;
        }
      if (any) {
        rhs.push_back(b == c ? 1.0 : 0.0);
        ++row;
      }
    }
  Eigen::SparseMatrix<cx> M(row, u);
  M.setFromTriplets(trip.begin(), trip.end());
  Vec bvec = Eigen::Map<Vec>(rhs.data(), static_cast<Eigen::Index>(rhs.size()));
  Eigen::SparseMatrix<cx> Mh = M.adjoint();
  Mat N = Mat(Mh * M);
  Vec y = Mh * bvec;
  Vec x = N.fullPivLu().solve(y);
  for (const auto& [k, i] : var) A.delta[k] = x(i);
  A.frobenius = true;
  FrobeniusReport fr = check_frobenius(A);
  double scale = 1.0;
  for (cx z : A.mu) scale = std::max(scale, std::abs(z));
  if (fr.frobenius > 1e-8 * scale || fr.counit > 1e-8)
    throw AlgebraError("induced coproduct fails the Frobenius identities (residual " +
                       std::to_string(std::max(fr.frobenius, fr.counit)) + ")");
  return A;
}

int bimodule_endomorphism_dim(const AlgebraObject& A, double rel_tol) {
  const int S = A.S();
  std::map<std::pair<int, int>, int> var;
  for (int x = 0; x < S; ++x)
    for (int y = 0; y < S; ++y)
      if (A.label(x) == A.label(y)) var.emplace(std::make_pair(x, y), static_cast<int>(var.size()));
  const int u = static_cast<int>(var.size());
  std::vector<Vec> rows;
  for (int a = 0; a < S; ++a)
    for (int b = 0; b < S; ++b)
      for (int c = 0; c < S; ++c) {
        if (!A.adm(a, b, c)) continue;
        Vec l = Vec::Zero(u), r = Vec::Zero(u);
        for (int c2 : A.slots_of[A.label(c)]) {
          l(var.at({c2, c})) -= A.m(a, b, c2);
          r(var.at({c2, c})) -= A.m(a, b, c2);
        }
        for (int a2 : A.slots_of[A.label(a)]) l(var.at({a, a2})) += A.m(a2, b, c);
        for (int b2 : A.slots_of[A.label(b)]) r(var.at({b, b2})) += A.m(a, b2, c);
        if (l.cwiseAbs().maxCoeff() > 0) rows.push_back(l);
        if (r.cwiseAbs().maxCoeff() > 0) rows.push_back(r);
      }
  if (rows.empty()) return u;
  Mat M(rows.size(), u);
  for (size_t i = 0; i < rows.size(); ++i) M.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  return nullspace(M, rel_tol).nullity;
}

Predicates predicates(const AlgebraObject& A0) {
  Predicates p;
  const AlgebraObject A = A0.frobenius ? A0 : induce_frobenius(A0);
  const Category& C = *A.C;
  const int S = A.S();
  const double tol = std::max(C.tol, 1e-9);
  // mu Delta as a matrix on slots
  Mat MD = Mat::Zero(S, S);
  for (int c = 0; c < S; ++c)
    for (int c2 = 0; c2 < S; ++c2) {
      if (A.label(c) != A.label(c2)) continue;
      cx t = 0;
      for (int a = 0; a < S; ++a)
        for (int b = 0; b < S; ++b) t += A.dl(c, a, b) * A.m(a, b, c2);
      MD(c2, c) = t;
    }
  p.separability_residual = (MD - Mat::Identity(S, S)).cwiseAbs().maxCoeff();
  p.delta_separable = p.separability_residual < tol;
  p.zeta = MD(0, 0);
  double zres = (MD - p.zeta * Mat::Identity(S, S)).cwiseAbs().maxCoeff();
  p.special = zres < tol && std::abs(p.zeta) > tol && std::abs(A.eps_eta()) > tol;
  Mat P = pairing_matrix(A);
  for (int x = 0; x < S; ++x)
    for (int y = 0; y < S; ++y) {
      const int a = A.label(x);
      if (A.label(y) != C.dual(a)) continue;
      const int ab = C.dual(a);
      cx lhs = P(x, y) * C.zig_inv(a);
      cx rhs = P(y, x) * C.zig(a) / (C.d[ab] * C.zig_inv(ab));
      p.symmetry_residual = std::max(p.symmetry_residual, std::abs(lhs - rhs));
    }
  p.symmetric = p.symmetry_residual < tol * std::max(1.0, P.cwiseAbs().maxCoeff());
  p.haploid = A.mult[0] == 1;
  p.bimodule_endomorphisms = bimodule_endomorphism_dim(A);
  p.simple = p.bimodule_endomorphisms == 1;
  return p;
}

namespace {

// The part of the genus-one correlator attached to one coproduct, as a vector over
// trees with leaves (x, xbar) and root lc, for the root slot gamma.
State handle_piece(const AlgebraObject& B, const Mat& P, int gamma, int x) {
  const Category& C = *B.C;
  const int lc = B.label(gamma);
  State s;
  s.leaves = {x, C.dual(x)};
  s.root = lc;
  if (!C.n(x, C.dual(x), lc)) return s;
  cx t = 0;
  for (int a : B.slots_of[x])
    for (int b : B.slots_of[C.dual(x)]) t += B.dl(gamma, a, b) * phi_coef(B, P, b, a);
  s.add(Tree{0, x, lc}, t);
  return s;
}

}  // namespace

ModularReport check_modular_invariant(const AlgebraObject& B0, bool s_inverse) {
  ModularReport r;
  const Category& C = *B0.C;
  for (int l = 0; l < C.size(); ++l)
    if (B0.mult[l] > 0) r.theta = std::max(r.theta, std::abs(C.theta[l] - 1.0));
  const AlgebraObject B = B0.frobenius ? B0 : induce_frobenius(B0);
  Mat P = pairing_matrix(B);
  Engine eng{C, s_inverse};
  for (int gamma = 0; gamma < B.S(); ++gamma) {
    const int lc = B.label(gamma);
    for (int j = 0; j < C.size(); ++j) {
      if (!C.n(j, C.dual(j), lc)) continue;
      State want = handle_piece(B, P, gamma, j);
      cx got = 0;
      for (int i = 0; i < C.size(); ++i) {
        State h = handle_piece(B, P, gamma, i);
        if (h.terms.empty()) continue;
        State t = eng.s_move(h, 1, j);
        auto it = t.terms.find(Tree{0, j, lc});
        if (it != t.terms.end()) got += it->second;
      }
      auto w = want.terms.find(Tree{0, j, lc});
      cx wv = w == want.terms.end() ? cx(0) : w->second;
      r.s_invariance = std::max(r.s_invariance, std::abs(got - wv));
    }
  }
  return r;
}

Correlator correlator(const AlgebraObject& B0, int g, bool first_leaf) {
  const AlgebraObject B = B0.frobenius ? B0 : induce_frobenius(B0);
  const Category& C = *B.C;
  Correlator out;
  out.genus = g;
  if (g == 0) {
    out.scalar = B.eps_eta();
    return out;
  }
  Engine eng{C};
  std::map<std::vector<int>, State> cur;
  for (int u : B.unit_slots()) {
    if (B.eta[u] == 0.0) continue;
    State s;
    s.leaves = {0};
    s.root = 0;
    s.add(Tree{0, 0}, B.eta[u]);
    cur[{u}] = s;
  }
  for (int step = 1; step < 2 * g; ++step) {
    std::map<std::vector<int>, State> nxt;
    for (const auto& [tup, st] : cur) {
      const int p = first_leaf ? 1 : static_cast<int>(tup.size());
      const int c = tup[p - 1];
      for (int a = 0; a < B.S(); ++a)
        for (int b = 0; b < B.S(); ++b) {
          cx k = B.dl(c, a, b);
          if (k == 0.0) continue;
          State s2 = eng.split(st, p, B.label(a), B.label(b), k);
          std::vector<int> t2 = tup;
          t2[p - 1] = a;
          t2.insert(t2.begin() + p, b);
          auto [it, fresh] = nxt.try_emplace(t2, s2);
          if (!fresh)
            for (const auto& [T, v] : s2.terms) it->second.add(T, v);
        }
    }
    cur = std::move(nxt);
  }
  Mat P = pairing_matrix(B);
  std::map<std::vector<int>, State> by_block;
  for (const auto& [tup, st] : cur) {
    cx w = 1.0;
    std::vector<int> m;
    for (int k = 0; k < g && w != 0.0; ++k) {
      const int x = tup[2 * k], y = tup[2 * k + 1];
      if (B.label(y) != C.dual(B.label(x))) w = 0.0;
      else w *= phi_coef(B, P, y, x);
      m.push_back(B.label(x));
    }
    if (w == 0.0) continue;
    auto [it, fresh] = by_block.try_emplace(m, eng.scale(st, w));
    if (!fresh)
      for (const auto& [T, v] : st.terms) it->second.add(T, v * w);
  }
  std::vector<Vec> parts;
  Eigen::Index total = 0;
  for (const auto& m : multi_indices(C.size(), g)) {
    BasisPtr Bs = make_basis(C, handle_leaves(C, m));
    if (Bs->size() == 0) continue;
    out.blocks.push_back(m);
    auto it = by_block.find(m);
    Vec v = it == by_block.end() ? Vec::Zero(Bs->size()) : to_vector(it->second, Bs, 1e-9).coef;
    total += v.size();
    parts.push_back(v);
  }
  out.flat = Vec::Zero(total);
  Eigen::Index off = 0;
  for (const auto& v : parts) {
    out.flat.segment(off, v.size()) = v;
    off += v.size();
  }
  return out;
}

AtopReport atop_checks(const AlgebraObject& A0) {
  const AlgebraObject A = A0.frobenius ? A0 : induce_frobenius(A0);
  AtopReport r;
  const auto& U = A.unit_slots();
  const int m = static_cast<int>(U.size());
  const int S = A.S();
  r.pairing = Mat::Zero(m, m);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) {
      cx v = 0;
      for (int w : U) v += A.m(U[i], U[k], w) * A.eps[w];
      r.pairing(i, k) = v;
    }
  r.pairing_rank = numerical_rank(r.pairing, 1e-10);
  r.p = Mat::Zero(m, m);
  for (int wi = 0; wi < m; ++wi)
    for (int vi = 0; vi < m; ++vi) {
      cx t = 0;
      for (int u : U) {
        if (A.eta[u] == 0.0) continue;
        for (int a = 0; a < S; ++a)
          for (int b = 0; b < S; ++b) {
            cx k = A.eta[u] * A.dl(u, a, b);
            if (k == 0.0) continue;
            for (int z : A.slots_of[A.label(a)]) t += k * A.m(a, U[wi], z) * A.m(z, b, U[vi]);
          }
      }
      r.p(vi, wi) = t;
    }
  Vec eta(m);
  for (int i = 0; i < m; ++i) eta(i) = A.eta[U[i]];
  r.idempotent = m ? (r.p * r.p - r.p).cwiseAbs().maxCoeff() : 0.0;
  r.unit_fixed = m ? (r.p * eta - eta).cwiseAbs().maxCoeff() : 0.0;
  r.invariance = m ? (r.p.transpose() * r.pairing - r.pairing * r.p).cwiseAbs().maxCoeff() : 0.0;
  r.image_rank = numerical_rank(r.p, 1e-8);
  r.eta_eta = eta.transpose() * r.pairing * eta;
  r.simple = bimodule_endomorphism_dim(A) == 1;
  return r;
}

AlgebraObject load_algebra_json(const json& j, CategoryPtr C) {
  AlgebraObject A(C, j.at("mult").get<std::vector<int>>());
  auto slot = [&](int l, int k) {
    if (l < 0 || l >= C->size() || k < 0 || k >= A.mult[l]) throw AlgebraError("slot out of range");
    return A.slot(l, k);
  };
  for (const auto& q : j.at("mu")) {
    if (q.size() != 8) throw AlgebraError("mu entries must be [a,alpha,b,beta,c,gamma,re,im]");
    A.m(slot(q[0], q[1]), slot(q[2], q[3]), slot(q[4], q[5])) = cx(q[6].get<double>(), q[7].get<double>());
  }
  for (const auto& q : j.at("eta")) A.eta[slot(0, q[0])] = cx(q[1].get<double>(), q[2].get<double>());
  if (j.contains("delta")) {
    for (const auto& q : j.at("delta")) {
      if (q.size() != 8) throw AlgebraError("delta entries must be [c,gamma,a,alpha,b,beta,re,im]");
      A.dl(slot(q[0], q[1]), slot(q[2], q[3]), slot(q[4], q[5])) = cx(q[6].get<double>(), q[7].get<double>());
    }
    for (const auto& q : j.at("eps")) A.eps[slot(0, q[0])] = cx(q[1].get<double>(), q[2].get<double>());
    A.frobenius = true;
  }
  for (size_t k = 0; k < A.mu.size(); ++k) {
    int a = static_cast<int>(k / (A.S() * A.S())), b = static_cast<int>(k / A.S() % A.S()), c = static_cast<int>(k % A.S());
    if ((A.mu[k] != 0.0 || A.delta[A.idx3(c, a, b)] != 0.0) && !A.adm(a, b, c))
      throw AlgebraError("structure constant on an inadmissible channel");
  }
  AlgebraReport rep = check_algebra(A);
  if (rep.associativity > C->tol * 1e3 || rep.unitality > C->tol * 1e3)
    throw AlgebraError("input is not an associative unital algebra (residuals " + std::to_string(rep.associativity) +
                       ", " + std::to_string(rep.unitality) + ")");
  return A;
}

json algebra_to_json(const AlgebraObject& A) {
  json j;
  j["mult"] = A.mult;
  json mu = json::array(), de = json::array(), eta = json::array(), eps = json::array();
  const int S = A.S();
  for (int a = 0; a < S; ++a)
    for (int b = 0; b < S; ++b)
      for (int c = 0; c < S; ++c) {
        cx v = A.m(a, b, c);
        if (v != 0.0)
          mu.push_back({A.label(a), A.slots[a].copy, A.label(b), A.slots[b].copy, A.label(c), A.slots[c].copy,
                        v.real(), v.imag()});
        cx w = A.dl(c, a, b);
        if (w != 0.0)
          de.push_back({A.label(c), A.slots[c].copy, A.label(a), A.slots[a].copy, A.label(b), A.slots[b].copy,
                        w.real(), w.imag()});
      }
  for (int u : A.unit_slots()) {
    eta.push_back({A.slots[u].copy, A.eta[u].real(), A.eta[u].imag()});
    eps.push_back({A.slots[u].copy, A.eps[u].real(), A.eps[u].imag()});
  }
  j["mu"] = mu;
  j["eta"] = eta;
  if (A.frobenius) {
    j["delta"] = de;
    j["eps"] = eps;
  }
  return j;
}

}  // namespace mfc
