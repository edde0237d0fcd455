#include "mfckit/centre.hpp"

#include <Eigen/Eigenvalues>
#include <map>

namespace mfc {

bool CentreVerification::passed(double tol) const {
  return algebra.associativity < tol && algebra.unitality < tol && algebra.commutativity < tol &&
         frobenius.frobenius < tol && frobenius.counit < tol && predicates.haploid && nondegenerate &&
         modular.theta < tol && modular.s_invariance < tol && dim_residual < tol && idempotent < tol;
}

AlgebraObject z_unit_algebra(CategoryPtr C, CategoryPtr D) {
  if (!D) D = doubled(C);
  const int n = C->size();
  std::vector<int> m(D->size(), 0);
  auto X = [&](int i) { return D->pair(C->dual(i), i); };
  for (int i = 0; i < n; ++i) m[X(i)] = 1;
  AlgebraObject A(D, m);
  const cx D2 = C->D2();
  auto s = [&](int i) { return A.slot(X(i), 0); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k : C->channels(i, j)) {
        A.m(s(i), s(j), s(k)) = 1.0;
        A.dl(s(k), s(i), s(j)) = C->d[i] * C->d[j] / (C->d[k] * D2);
      }
  A.eta[s(0)] = 1.0;
  A.eps[s(0)] = D2;
  A.frobenius = true;
  return A;
}

CentreResult z_unit(CategoryPtr C, CategoryPtr D) {
  CentreResult r{z_unit_algebra(C, D), "unit", {}};
  r.verification = verify_centre(r.algebra, *C);
  return r;
}

AlgebraObject r_functor(const AlgebraObject& A, CategoryPtr D, const RFunctorOptions& opt) {
  const CategoryPtr C = A.C;
  if (!D) D = doubled(C);
  const int n = C->size();
  // summands (a, i, p) with p in label(a) (x) ibar, living in the doubled label (p, i)
  struct Sum {
    int a, i, p;
  };
  std::vector<int> mult(D->size(), 0);
  std::vector<Sum> sums;
  std::vector<int> copy_of;
  for (int a = 0; a < A.S(); ++a)
    for (int i = 0; i < n; ++i)
      for (int p : C->channels(A.label(a), C->dual(i))) {
        sums.push_back({a, i, p});
        copy_of.push_back(mult[D->pair(p, i)]++);
      }
  AlgebraObject B(D, mult);
  std::vector<int> slot(sums.size());
  for (size_t t = 0; t < sums.size(); ++t) slot[t] = B.slot(D->pair(sums[t].p, sums[t].i), copy_of[t]);
  Engine eng{*C};
  for (size_t x = 0; x < sums.size(); ++x)
    for (size_t y = 0; y < sums.size(); ++y) {
      const auto [a, i, p] = sums[x];
      const auto [b, j, q] = sums[y];
      const int la = A.label(a), lb = A.label(b);
      for (size_t z = 0; z < sums.size(); ++z) {
        const auto [c, k, r] = sums[z];
        if (!C->n(i, j, k) || !C->n(p, q, r)) continue;
        cx mu = A.m(a, b, c);
        if (mu == 0.0) continue;
        const int lc = A.label(c);
        if (!C->n(C->dual(i), C->dual(j), C->dual(k))) continue;
        FusionBasis start(*C, {p, q}, r);
        State s = single_tree(start, 0);
        s = eng.split(s, 1, la, C->dual(i));
        s = eng.split(s, 3, lb, C->dual(j));
        s = eng.braid(s, 2, opt.braid_inverse);
        s = eng.fuse(s, 1, lc, mu);
        s = eng.fuse(s, 2, C->dual(k));
        s = eng.fuse(s, 1, r);
        auto it = s.terms.find(Tree{0, r});
        if (it == s.terms.end()) continue;
        B.m(slot[x], slot[y], slot[z]) += it->second;
      }
    }
  for (size_t t = 0; t < sums.size(); ++t)
    if (sums[t].i == 0 && A.label(sums[t].a) == 0) B.eta[slot[t]] = A.eta[sums[t].a];
  return B;
}

Mat left_centre_idempotent(const AlgebraObject& B0, const LeftCentreOptions& opt) {
  const AlgebraObject B = B0.frobenius ? B0 : induce_frobenius(B0);
  const Category& C = *B.C;
  Engine eng{C};
  const int S = B.S();
  Mat P = Mat::Zero(S, S);
  for (int x = 0; x < S; ++x) {
    const int lx = B.label(x);
    FusionBasis start(C, {lx}, lx);
    for (int u : B.unit_slots()) {
      if (B.eta[u] == 0.0) continue;
      for (int a = 0; a < S; ++a)
        for (int b : B.slots_of[C.dual(B.label(a))]) {
          cx k = B.eta[u] * B.dl(u, a, b);
          if (k == 0.0) continue;
          State s0 = eng.insert_cup(single_tree(start, 0), 0, B.label(a));
          s0 = eng.braid(s0, 2, opt.braid_inverse);
          for (int z = 0; z < S; ++z) {
            if (!B.adm(a, x, z)) continue;
            cx m1 = B.m(a, x, z);
            if (m1 == 0.0) continue;
            State s1 = eng.fuse(s0, 1, B.label(z), k * m1);
            for (int y : B.slots_of[lx]) {
              cx m2 = B.m(z, b, y);
              if (m2 == 0.0) continue;
              State s2 = eng.fuse(s1, 1, lx, m2);
              auto it = s2.terms.find(Tree{0, lx});
              if (it != s2.terms.end()) P(y, x) += it->second;
            }
          }
        }
    }
  }
  return P;
}

AlgebraObject left_centre(const AlgebraObject& B0, const LeftCentreOptions& opt, double* idem_residual) {
  const AlgebraObject B = B0.frobenius ? B0 : induce_frobenius(B0);
  const Category& C = *B.C;
  Mat P = left_centre_idempotent(B, opt);
  double idem = (P * P - P).cwiseAbs().maxCoeff();
  if (idem_residual) *idem_residual = idem;
  if (idem > 1e-7) throw AlgebraError("left-centre map is not idempotent (residual " + std::to_string(idem) + ")");
  // per label: inclusion U (old x new) and projection W (new x old)
  std::vector<Mat> U(C.size()), W(C.size());
  std::vector<int> mult(C.size(), 0);
  for (int l = 0; l < C.size(); ++l) {
    const auto& sl = B.slots_of[l];
    const int k = static_cast<int>(sl.size());
    if (k == 0) continue;
    Mat Pl(k, k);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) Pl(r, c) = P(sl[r], sl[c]);
    if ((Pl - Mat::Identity(k, k)).cwiseAbs().maxCoeff() < opt.cluster_tol) {
      U[l] = W[l] = Mat::Identity(k, k);
      mult[l] = k;
      continue;
    }
    Eigen::ComplexEigenSolver<Mat> es(Pl);
    const Vec& ev = es.eigenvalues();
    std::vector<int> ones;
    for (int t = 0; t < k; ++t) {
      if (std::abs(ev(t) - 1.0) < opt.cluster_tol)
        ones.push_back(t);
      else if (std::abs(ev(t)) >= opt.cluster_tol)
        throw AlgebraError("left-centre spectrum does not cluster at {0,1}");
    }
    Mat V = es.eigenvectors();
    Mat Vi = V.inverse();
    U[l] = Mat(k, ones.size());
    W[l] = Mat(ones.size(), k);
    for (size_t t = 0; t < ones.size(); ++t) {
      U[l].col(t) = V.col(ones[t]);
      W[l].row(t) = Vi.row(ones[t]);
    }
    mult[l] = static_cast<int>(ones.size());
  }
  AlgebraObject Z(B.C, mult);
  auto oldpos = [&](int s) { return B.slots[s].copy; };
  for (int a2 = 0; a2 < Z.S(); ++a2)
    for (int b2 = 0; b2 < Z.S(); ++b2)
      for (int c2 = 0; c2 < Z.S(); ++c2) {
        if (!Z.adm(a2, b2, c2)) continue;
        const int la = Z.label(a2), lb = Z.label(b2), lc = Z.label(c2);
        cx t = 0;
        for (int a : B.slots_of[la])
          for (int b : B.slots_of[lb])
            for (int c : B.slots_of[lc]) {
              cx v = B.m(a, b, c);
              if (v == 0.0) continue;
              t += W[lc](Z.slots[c2].copy, oldpos(c)) * v * U[la](oldpos(a), Z.slots[a2].copy) *
                   U[lb](oldpos(b), Z.slots[b2].copy);
            }
        Z.m(a2, b2, c2) = t;
      }
  for (int u2 : Z.unit_slots()) {
    cx t = 0;
    for (int u : B.unit_slots()) t += W[0](Z.slots[u2].copy, oldpos(u)) * B.eta[u];
    Z.eta[u2] = t;
  }
  return induce_frobenius(Z);
}

CentreVerification verify_centre(const AlgebraObject& Z, const Category& base) {
  CentreVerification v;
  v.algebra = check_algebra(Z);
  v.frobenius = check_frobenius(Z);
  v.predicates = predicates(Z);
  PhiPairing ph = phi(Z);
  v.phi_min_singular = ph.min_singular;
  v.nondegenerate = ph.min_singular > Z.C->tol;
  v.modular = check_modular_invariant(Z);
  for (int l = 0; l < Z.C->size(); ++l) v.dim += static_cast<double>(Z.mult[l]) * Z.C->d[l];
  v.eps_eta = Z.eps_eta();
  v.dim_residual = std::abs(v.dim - base.D2());
  if (Z.C->is_product()) {
    v.diagonal_pattern = true;
    for (int l = 0; l < Z.C->size(); ++l) {
      int want = Z.C->first(l) == base.dual(Z.C->second(l)) ? 1 : 0;
      if (Z.mult[l] != want) v.diagonal_pattern = false;
    }
  }
  return v;
}

CentreResult full_centre(const AlgebraObject& A, CategoryPtr D) {
  AlgebraObject RA = induce_frobenius(r_functor(A, D));
  double idem = 0;
  AlgebraObject Z = left_centre(RA, {}, &idem);
  CentreResult r{Z, "algebra", verify_centre(Z, *A.C)};
  r.verification.idempotent = idem;
  return r;
}

AlgebraObject ising_one_plus_psi(CategoryPtr C) {
  std::vector<int> m(C->size(), 0);
  m[0] = 1;
  m[1] = 1;
  AlgebraObject A(C, m);
  const int e = A.slot(0, 0), p = A.slot(1, 0);
  A.m(e, e, e) = 1.0;
  A.m(e, p, p) = 1.0;
  A.m(p, e, p) = 1.0;
  A.m(p, p, e) = 1.0;
  A.eta[e] = 1.0;
  return A;
}

AlgebraObject unit_squared(CategoryPtr C) {
  std::vector<int> m(C->size(), 0);
  m[0] = 2;
  AlgebraObject A(C, m);
  A.m(0, 0, 0) = 1.0;
  A.m(1, 1, 1) = 1.0;
  A.eta[0] = 1.0;
  A.eta[1] = 1.0;
  return A;
}

}  // namespace mfc
