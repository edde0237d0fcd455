#include "mfckit/category.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

namespace mfc {

const FBlock Category::empty_block_{};

std::vector<int> FusionRing::channels(int a, int b) const {
  std::vector<int> out;
  for (int c = 0; c < size(); ++c)
    if (n(a, b, c) > 0) out.push_back(c);
  return out;
}

bool FusionRing::multiplicity_free() const {
  return std::all_of(N.begin(), N.end(), [](int v) { return v <= 1; });
}

namespace {

std::string tuple_str(std::initializer_list<int> xs) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (int x : xs) {
    if (!first) os << ",";
    os << x;
    first = false;
  }
  os << ")";
  return os.str();
}

}  // namespace

std::string check_ring(const FusionRing& R) {
  const int n = R.size();
  if (n == 0) return "empty label set";
  if (static_cast<int>(R.dual.size()) != n) return "dual array has wrong length";
  if (R.N.size() != static_cast<size_t>(n) * n * n) return "fusion tensor has wrong size";
  for (int v : R.N)
    if (v < 0) return "negative fusion multiplicity";
  for (int a = 0; a < n; ++a) {
    int b = R.dual[a];
    if (b < 0 || b >= n || R.dual[b] != a) return "dual is not an involution at " + tuple_str({a});
  }
  if (R.dual[0] != 0) return "unit is not self-dual";
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      if (R.n(0, j, k) != (j == k) || R.n(j, 0, k) != (j == k))
        return "unit axiom fails at " + tuple_str({j, k});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (R.n(i, j, 0) != (j == R.dual[i])) return "duality axiom fails at " + tuple_str({i, j});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          long lhs = 0, rhs = 0;
          for (int e = 0; e < n; ++e) {
            lhs += static_cast<long>(R.n(i, j, e)) * R.n(e, k, l);
            rhs += static_cast<long>(R.n(j, k, e)) * R.n(i, e, l);
          }
          if (lhs != rhs) return "associativity fails at " + tuple_str({i, j, k, l});
        }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (R.n(i, j, k) != R.n(R.dual[k], i, R.dual[j]))
          return "dual compatibility fails at " + tuple_str({i, j, k});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool ok = false;
      for (int k = 0; k < n && !ok; ++k) ok = R.n(i, k, j) > 0;
      if (!ok) return "transitivity fails at " + tuple_str({i, j});
    }
  return "";
}

void Category::build_channels() {
  const int n = size();
  chan_.assign(static_cast<size_t>(n) * n, {});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) chan_[static_cast<size_t>(a) * n + b] = ring.channels(a, b);
}

const FBlock& Category::block(int a, int b, int c, int d) const {
  const uint64_t n = static_cast<uint64_t>(size());
  const uint64_t key = ((a * n + b) * n + c) * n + d;
  if (!A_) return blocks_[key];
  std::lock_guard<std::mutex> lock(cache_mu_);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  const Category& P = *A_;
  const Category& Q = *B_;
  const FBlock& X = P.block(first(a), first(b), first(c), first(d));
  const FBlock& Y = Q.block(second(a), second(b), second(c), second(d));
  FBlock out;
  if (!X.empty() && !Y.empty()) {
    for (int e1 : X.rows)
      for (int e2 : Y.rows) out.rows.push_back(pair(e1, e2));
    for (int f1 : X.cols)
      for (int f2 : Y.cols) out.cols.push_back(pair(f1, f2));
    out.F = Eigen::kroneckerProduct(X.F, Y.F);
    out.Finv = Eigen::kroneckerProduct(X.Finv, Y.Finv);
  }
  return cache_.emplace(key, std::move(out)).first->second;
}

cx Category::F(int a, int b, int c, int d, int e, int f) const {
  const FBlock& B = block(a, b, c, d);
  int r = B.row(e), k = B.col(f);
  if (r < 0 || k < 0) return 0.0;
  return B.F(r, k);
}

cx Category::Finv(int a, int b, int c, int d, int f, int e) const {
  const FBlock& B = block(a, b, c, d);
  int r = B.row(e), k = B.col(f);
  if (r < 0 || k < 0) return 0.0;
  return B.Finv(k, r);
}

cx Category::R(int a, int b, int c) const {
  if (!A_) {
    const size_t n = static_cast<size_t>(size());
    return R_[(a * n + b) * n + c];
  }
  int a1 = first(a), a2 = second(a), b1 = first(b), b2 = second(b), c1 = first(c), c2 = second(c);
  cx r1 = A_->R(a1, b1, c1);
  cx r2 = rev_ ? B_->Rinv(a2, b2, c2) : B_->R(a2, b2, c2);
  if (r1 == 0.0 || r2 == 0.0) return 0.0;
  return r1 * r2;
}

namespace {

bool is_character(const FusionRing& ring, const std::vector<double>& d, double tol) {
  const int n = ring.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double rhs = 0;
      for (int c = 0; c < n; ++c) rhs += ring.n(a, b, c) * d[c];
      if (std::abs(d[a] * d[b] - rhs) > tol * std::max(1.0, std::abs(rhs))) return false;
    }
  return true;
}

}  // namespace

void Category::derive() {
  const int n = size();
  if (A_) {
    d.resize(n);
    theta.resize(n);
    kappa.resize(n);
    for (int x = 0; x < n; ++x) {
      d[x] = A_->d[first(x)] * B_->d[second(x)];
      kappa[x] = A_->kappa[first(x)] * B_->kappa[second(x)];
      cx tb = B_->theta[second(x)];
      theta[x] = A_->theta[first(x)] * (rev_ ? 1.0 / tb : tb);
    }
  } else {
    std::vector<double> mag(n);
    for (int a = 0; a < n; ++a) {
      cx z = zig(a);
      if (std::abs(z) < tol) throw LoadError("vanishing F[a,abar,a,a,0,0] at label " + std::to_string(a));
      mag[a] = 1.0 / std::abs(z);
    }
    // orbit representatives under duality (unit excluded)
    std::vector<int> reps;
    for (int a = 1; a < n; ++a)
      if (a <= dual(a)) reps.push_back(a);
    bool found = false;
    if (reps.size() > 24) throw LoadError("too many dual orbits for the sign search");
    for (uint64_t mask = 0; mask < (uint64_t{1} << reps.size()) && !found; ++mask) {
      std::vector<double> cand = mag;
      for (size_t t = 0; t < reps.size(); ++t)
        if (mask >> t & 1) {
          cand[reps[t]] = -cand[reps[t]];
          if (dual(reps[t]) != reps[t]) cand[dual(reps[t])] = -cand[dual(reps[t])];
        }
      if (is_character(ring, cand, std::max(tol, 1e-9))) {
        d = cand;
        found = true;
      }
    }
    if (!found) throw LoadError("no sign choice makes |F[a,abar,a,a,0,0]|^-1 a fusion character");
    kappa.resize(n);
    theta.resize(n);
    for (int a = 0; a < n; ++a) {
      kappa[a] = d[a] * zig(a);
      cx t = 0;
      for (int c : channels(a, a)) t += d[c] * R(a, a, c);
      theta[a] = t / d[a];
    }
  }
  s = Mat::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      cx v = 0;
      for (int c : channels(a, b)) v += d[c] * R(a, b, c) * R(b, a, c);
      s(a, b) = v;
    }
  double sum = 0;
  for (double x : d) sum += x * x;
  D = std::sqrt(cx(sum, 0));
}

std::shared_ptr<Category> Category::from_data(FusionRing ring,
                                              const std::vector<std::array<int, 6>>& fidx,
                                              const std::vector<cx>& fval,
                                              const std::vector<std::array<int, 3>>& ridx,
                                              const std::vector<cx>& rval, double tol, bool mirror,
                                              bool validate, std::string name) {
  std::string bad = check_ring(ring);
  if (!bad.empty()) throw LoadError("fusion ring invalid: " + bad);
  if (!ring.multiplicity_free()) throw LoadError("F/R data requires multiplicity-free fusion");
  auto C = std::make_shared<Category>();
  C->ring = std::move(ring);
  C->tol = tol;
  C->name = std::move(name);
  C->build_channels();
  const int n = C->size();
  const uint64_t un = n;
  auto k6 = [un](int a, int b, int c, int d, int e, int f) {
    return ((((a * un + b) * un + c) * un + d) * un + e) * un + f;
  };

  std::unordered_map<uint64_t, cx> given;
  for (size_t t = 0; t < fidx.size(); ++t) {
    const auto& x = fidx[t];
    for (int v : x)
      if (v < 0 || v >= n) throw LoadError("F entry label out of range");
    int a = x[0], b = x[1], c = x[2], d = x[3], e = x[4], f = x[5];
    const auto& R = C->ring;
    if (!(R.n(a, b, e) && R.n(e, c, d) && R.n(b, c, f) && R.n(a, f, d)))
      throw LoadError("F entry for inadmissible tuple " + tuple_str({a, b, c, d, e, f}));
    given[k6(a, b, c, d, e, f)] = fval[t];
  }

  C->blocks_.resize(un * un * un * un);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          FBlock& B = C->blocks_[((a * un + b) * un + c) * un + d];
          for (int e : C->channels(a, b))
            if (C->n(e, c, d)) B.rows.push_back(e);
          for (int f : C->channels(b, c))
            if (C->n(a, f, d)) B.cols.push_back(f);
          if (B.rows.size() != B.cols.size())
            throw LoadError("recoupling block not square at " + tuple_str({a, b, c, d}));
          if (B.rows.empty()) continue;
          const int m = static_cast<int>(B.rows.size());
          B.F = Mat::Zero(m, m);
          for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
              int e = B.rows[i], f = B.cols[j];
              auto it = given.find(k6(a, b, c, d, e, f));
              if (it != given.end())
                B.F(i, j) = it->second;
              else if (a == 0 || b == 0 || c == 0)
                B.F(i, j) = 1.0;
              else
                throw LoadError("missing F entry " + tuple_str({a, b, c, d, e, f}));
            }
          Eigen::FullPivLU<Mat> lu(B.F);
          if (!lu.isInvertible()) throw LoadError("singular recoupling block at " + tuple_str({a, b, c, d}));
          B.Finv = lu.inverse();
        }

  std::vector<cx> Rraw(un * un * un, 0.0);
  std::vector<char> have(un * un * un, 0);
  for (size_t t = 0; t < ridx.size(); ++t) {
    int a = ridx[t][0], b = ridx[t][1], c = ridx[t][2];
    if (a < 0 || b < 0 || c < 0 || a >= n || b >= n || c >= n) throw LoadError("R entry label out of range");
    if (!C->n(a, b, c)) throw LoadError("R entry for inadmissible tuple " + tuple_str({a, b, c}));
    Rraw[(a * un + b) * un + c] = rval[t];
    have[(a * un + b) * un + c] = 1;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c : C->channels(a, b)) {
        size_t k = (a * un + b) * un + c;
        if (have[k]) continue;
        if (a == 0 || b == 0) {
          Rraw[k] = 1.0;
        } else {
          throw LoadError("missing R entry " + tuple_str({a, b, c}));
        }
      }
  for (cx v : Rraw)
    if (v != 0.0 && std::abs(v) < tol) throw LoadError("R entry too close to zero");
  if (mirror) {
    C->R_.assign(Rraw.size(), 0.0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c : C->channels(a, b)) C->R_[(a * un + b) * un + c] = 1.0 / Rraw[(b * un + a) * un + c];
  } else {
    C->R_ = std::move(Rraw);
  }

  C->derive();
  if (validate) {
    Residual p = validate_pentagon(*C);
    if (p.value >= tol) {
      std::ostringstream os;
      os << "pentagon violated at (a,b,c,d,e,f,g,k,l)=(";
      for (size_t i = 0; i < p.where.size(); ++i) os << (i ? "," : "") << p.where[i];
      os << ") residual " << p.value;
      throw LoadError(os.str());
    }
    Residual h = validate_hexagon(*C);
    if (h.value >= tol) {
      std::ostringstream os;
      os << "hexagon violated at (a,b,c,d,e,g)=(";
      for (size_t i = 0; i < h.where.size(); ++i) os << (i ? "," : "") << h.where[i];
      os << ") residual " << h.value;
      throw LoadError(os.str());
    }
    if (std::abs(C->theta[0] - 1.0) > tol || std::abs(C->d[0] - 1.0) > tol)
      throw LoadError("unit has nontrivial twist or dimension");
    double gap = modularity_gap(*C);
    if (gap <= tol) throw LoadError("s-matrix is singular, braiding is not modular");
  }
  return C;
}

Residual validate_pentagon(const Category& C) {
  Residual out;
  const int n = C.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int f : C.channels(a, b))
            for (int g : C.channels(f, c))
              for (int e : C.channels(g, d))
                for (int l : C.channels(c, d)) {
                  if (!C.n(f, l, e)) continue;
                  for (int k : C.channels(b, l)) {
                    if (!C.n(a, k, e)) continue;
                    cx lhs = C.F(f, c, d, e, g, l) * C.F(a, b, l, e, f, k);
                    cx rhs = 0;
                    for (int h : C.channels(b, c)) {
                      if (!C.n(a, h, g) || !C.n(h, d, k)) continue;
                      rhs += C.F(a, b, c, g, f, h) * C.F(a, h, d, e, g, k) * C.F(b, c, d, k, h, l);
                    }
                    double r = std::abs(lhs - rhs);
                    if (r > out.value) {
                      out.value = r;
                      out.where = {a, b, c, d, e, f, g, k, l};
                    }
                  }
                }
  return out;
}

Residual validate_hexagon(const Category& C) {
  Residual out;
  const int n = C.size();
  for (int inv = 0; inv < 2; ++inv) {
    auto R = [&](int x, int y, int z) { return inv ? C.Rinv(x, y, z) : C.R(x, y, z); };
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int e : C.channels(a, b))
            for (int d : C.channels(e, c))
              for (int g : C.channels(a, c)) {
                if (!C.n(b, g, d)) continue;
                cx lhs = 0;
                for (int f : C.channels(b, c)) {
                  if (!C.n(a, f, d)) continue;
                  lhs += C.F(a, b, c, d, e, f) * R(a, f, d) * C.F(b, c, a, d, f, g);
                }
                cx rhs = R(a, b, e) * C.F(b, a, c, d, e, g) * R(a, c, g);
                double r = std::abs(lhs - rhs);
                if (r > out.value) {
                  out.value = r;
                  out.where = {a, b, c, d, e, g};
                }
              }
  }
  return out;
}

const Mat& s_matrix(const Category& C) { return C.s; }

std::shared_ptr<Category> deligne_product(CategoryPtr A, CategoryPtr B, bool rev) {
  auto P = std::make_shared<Category>();
  const int na = A->size(), nb = B->size();
  FusionRing& R = P->ring;
  R.labels.resize(static_cast<size_t>(na) * nb);
  R.dual.resize(R.labels.size());
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b) {
      int x = a * nb + b;
      R.labels[x] = "(" + A->ring.labels[a] + "," + B->ring.labels[b] + ")";
      R.dual[x] = A->dual(a) * nb + B->dual(b);
    }
  const size_t n = R.labels.size();
  R.N.assign(n * n * n, 0);
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y)
      for (size_t z = 0; z < n; ++z)
        R.N[(x * n + y) * n + z] =
            A->n(x / nb, y / nb, z / nb) * B->n(x % nb, y % nb, z % nb);
  P->tol = std::max(A->tol, B->tol);
  P->name = A->name + (rev ? "_x_rev_" : "_x_") + B->name;
  P->A_ = std::move(A);
  P->B_ = std::move(B);
  P->rev_ = rev;
  P->build_channels();
  P->derive();
  return P;
}

bool is_pseudo_unitary(const Category& C) {
  return std::all_of(C.d.begin(), C.d.end(), [&](double x) { return x > C.tol; });
}

double modularity_gap(const Category& C) {
  Eigen::JacobiSVD<Mat> svd(C.s);
  return svd.singularValues().minCoeff();
}

double s_unitarity_residual(const Category& C) {
  const int n = C.size();
  Mat P = Mat::Zero(n, n);
  for (int a = 0; a < n; ++a) P(a, C.dual(a)) = 1.0;
  Mat lhs = C.s * C.s.conjugate();
  return (lhs - C.D2() * P).cwiseAbs().maxCoeff();
}

}  // namespace mfc
