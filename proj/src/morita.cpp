#include "mfckit/morita.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "mfckit/mcg.hpp"

namespace mfc {

LambdaTable::LambdaTable(FusionRing r) : ring(std::move(r)) {
  const size_t n = static_cast<size_t>(ring.size());
  lo.assign(n * n * n, 0.0);
  up.assign(n * n * n, 0.0);
}

LambdaTable unit_table(const FusionRing& ring) {
  LambdaTable t(ring);
  for (int i = 0; i < t.size(); ++i)
    for (int j = 0; j < t.size(); ++j)
      for (int k : ring.channels(i, j)) t.lower(i, j, k) = t.upper(i, j, k) = 1.0;
  return t;
}

LambdaTable apply_f(const LambdaTable& t, const std::vector<cx>& f) {
  LambdaTable r = t;
  for (int i = 0; i < t.size(); ++i)
    for (int j = 0; j < t.size(); ++j)
      for (int k : t.ring.channels(i, j)) {
        r.lower(i, j, k) = t.lower(i, j, k) * f[k] / (f[i] * f[j]);
        r.upper(i, j, k) = t.upper(i, j, k) * f[i] * f[j] / f[k];
      }
  r.eta0 = t.eta0 * f[0];
  r.eps0 = t.eps0 / f[0];
  return r;
}

LambdaInvariants lambda_invariants(const LambdaTable& t) {
  LambdaInvariants v;
  v.smallest = INFINITY;
  const auto& R = t.ring;
  for (int i = 0; i < t.size(); ++i) {
    const int ib = R.dual[i];
    for (int j = 0; j < t.size(); ++j)
      for (int k : R.channels(i, j)) {
        v.smallest = std::min(v.smallest, std::min(std::abs(t.lower(i, j, k)), std::abs(t.upper(i, j, k))));
        v.commutativity = std::max(v.commutativity, std::abs(t.lower(i, j, k) - t.lower(j, i, k)));
        // lowering: lower(i,j,k) = eps0 lower(i,ib,0) upper(ib,k,j)
        v.lowering = std::max(v.lowering,
                              std::abs(t.lower(i, j, k) - t.eps0 * t.lower(i, ib, 0) * t.upper(ib, k, j)));
        // raising: upper(i,j,k) = eta0 upper(i,ib,0) lower(ib,k,j)
        v.raising = std::max(v.raising,
                             std::abs(t.upper(i, j, k) - t.eta0 * t.upper(i, ib, 0) * t.lower(ib, k, j)));
      }
  }
  return v;
}

namespace {

int zslot(const AlgebraObject& Z, const Category& C, int i) {
  const Category& D = *Z.C;
  return Z.slot(D.pair(C.dual(i), i), 0);
}

void require_pattern(const AlgebraObject& Z, const Category& C) {
  const Category& D = *Z.C;
  if (!D.is_product() || D.factor_a()->size() != C.size() || D.factor_b()->size() != C.size())
    throw MoritaError("algebra does not live over the doubled category");
  for (int l = 0; l < D.size(); ++l) {
    const int want = D.first(l) == C.dual(D.second(l)) ? 1 : 0;
    if (Z.mult[l] != want)
      throw MoritaError("object pattern mismatch: multiplicity " + std::to_string(Z.mult[l]) + " of " +
                        C.ring.labels[D.first(l)] + " x " + C.ring.labels[D.second(l)] + ", expected " +
                        std::to_string(want));
  }
}

}  // namespace

LambdaTable extract_lambda(const AlgebraObject& Z0, CategoryPtr C, double tol) {
  if (!C->ring.multiplicity_free()) throw MoritaError("extraction needs a multiplicity-free category");
  require_pattern(Z0, *C);
  const AlgebraObject Z = Z0.frobenius ? Z0 : induce_frobenius(Z0);
  const AlgebraObject U = z_unit_algebra(C, Z.C);
  LambdaTable t(C->ring);
  const int n = C->size();
  auto sz = [&](int i) { return zslot(Z, *C, i); };
  auto su = [&](int i) { return zslot(U, *C, i); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k : C->channels(i, j)) {
        t.lower(i, j, k) = Z.m(sz(i), sz(j), sz(k)) / U.m(su(i), su(j), su(k));
        t.upper(i, j, k) = Z.dl(sz(k), sz(i), sz(j)) / U.dl(su(k), su(i), su(j));
      }
  t.eta0 = Z.eta[sz(0)] / U.eta[su(0)];
  t.eps0 = Z.eps[sz(0)] / U.eps[su(0)];
  // entries that must vanish
  double stray = 0;
  for (int a = 0; a < Z.S(); ++a)
    for (int b = 0; b < Z.S(); ++b)
      for (int c = 0; c < Z.S(); ++c) {
        if (U.m(a, b, c) == 0.0) stray = std::max(stray, std::abs(Z.m(a, b, c)));
        if (U.dl(c, a, b) == 0.0) stray = std::max(stray, std::abs(Z.dl(c, a, b)));
      }
  if (stray > tol) throw MoritaError("algebra has structure constants outside the fusion-allowed pattern");
  const LambdaInvariants inv = lambda_invariants(t);
  if (!(inv.smallest > tol)) throw MoritaError("vanishing structure constant; input is not a full centre");
  const double scale = 1.0 + std::max(std::abs(t.eta0), std::abs(t.eps0));
  if (inv.commutativity > tol * scale) throw MoritaError("structure constants are not commutative");
  if (inv.lowering > tol * scale || inv.raising > tol * scale)
    throw MoritaError("index lowering/raising relation fails");
  return t;
}

AlgebraObject twist_algebra(const AlgebraObject& Z0, CategoryPtr C, const std::vector<cx>& f) {
  require_pattern(Z0, *C);
  AlgebraObject Z = Z0;
  const int n = C->size();
  std::vector<cx> fs(Z.S());
  for (int i = 0; i < n; ++i) fs[zslot(Z, *C, i)] = f[i];
  for (int a = 0; a < Z.S(); ++a)
    for (int b = 0; b < Z.S(); ++b)
      for (int c = 0; c < Z.S(); ++c) {
        Z.m(a, b, c) = Z0.m(a, b, c) * fs[c] / (fs[a] * fs[b]);
        Z.dl(c, a, b) = Z0.dl(c, a, b) * fs[a] * fs[b] / fs[c];
      }
  for (int u : Z.unit_slots()) {
    Z.eta[u] = Z0.eta[u] * fs[u];
    Z.eps[u] = Z0.eps[u] / fs[u];
  }
  return Z;
}

double algebra_distance(const AlgebraObject& A, const AlgebraObject& B) {
  if (A.mult != B.mult) return INFINITY;
  double r = 0;
  for (size_t t = 0; t < A.mu.size(); ++t) r = std::max({r, std::abs(A.mu[t] - B.mu[t]), std::abs(A.delta[t] - B.delta[t])});
  for (size_t t = 0; t < A.eta.size(); ++t) r = std::max({r, std::abs(A.eta[t] - B.eta[t]), std::abs(A.eps[t] - B.eps[t])});
  return r;
}

std::vector<int> FusionTreeOmega::leaves() const {
  if (children.empty()) return {label};
  std::vector<int> l = children[0].leaves();
  std::vector<int> r = children[1].leaves();
  l.insert(l.end(), r.begin(), r.end());
  return l;
}

cx lambda_of_tree(const LambdaTable& t, const FusionTreeOmega& w) {
  if (w.children.empty()) return 1.0;
  if (w.children.size() != 2) throw MoritaError("tree vertex is not 3-valent");
  const int i = w.children[0].label, j = w.children[1].label, k = w.label;
  if (!t.adm(i, j, k))
    throw MoritaError("inadmissible vertex " + t.ring.labels[k] + " -> " + t.ring.labels[i] + "," + t.ring.labels[j]);
  return t.upper(i, j, k) * lambda_of_tree(t, w.children[0]) * lambda_of_tree(t, w.children[1]);
}

namespace {

bool graft_rec(FusionTreeOmega& w, int& pos, const FusionTreeOmega& sub) {
  if (w.children.empty()) {
    if (pos-- == 0) {
      if (w.label != sub.label) throw MoritaError("graft: root label does not match the leaf");
      w = sub;
      return true;
    }
    return false;
  }
  return graft_rec(w.children[0], pos, sub) || graft_rec(w.children[1], pos, sub);
}

}  // namespace

FusionTreeOmega graft(const FusionTreeOmega& base, int pos, const FusionTreeOmega& sub) {
  FusionTreeOmega w = base;
  int p = pos;
  if (!graft_rec(w, p, sub)) throw MoritaError("graft: leaf position out of range");
  return w;
}

FusionTreeOmega handle_tree(const GradingData& g, int i) {
  if (!g.in_ad[i]) throw MoritaError("label is not in the adjoint subring");
  const HandleWitness& w = g.witness[i];
  if (w.m.empty()) throw MoritaError("the unit has no handle tree");
  auto pairnode = [&](size_t t) {
    const int m = w.m[t];
    return FusionTreeOmega::node(w.k[t], FusionTreeOmega::leaf(m), FusionTreeOmega::leaf(g.ring.dual[m]));
  };
  FusionTreeOmega cur = pairnode(0);
  for (size_t t = 1; t < w.m.size(); ++t) cur = FusionTreeOmega::node(w.partial[t], cur, pairnode(t));
  return cur;
}

namespace {

using FT = FusionTreeOmega;

struct StageBuilder {
  const LambdaTable* t;
  double tol;
  Stage s;
  void check(const std::string& prop, double residual) {
    StageCheck c{prop, residual, residual < tol};
    if (!c.passed) s.passed = false;
    s.checks.push_back(c);
  }
};

double worst_one(const std::vector<cx>& v) {
  double r = 0;
  for (cx z : v) r = std::max(r, std::abs(z - 1.0));
  return r;
}

// every (1; i, ibar, j, jbar)-tree in the shapes used by the proof, plus the
// reordered leaves (i, j, ibar, jbar)
double handle_tree_residual(const LambdaTable& t, int genus) {
  const auto& R = t.ring;
  const int n = t.size();
  double r = 0;
  for (int i = 0; i < n; ++i) {
    const int ib = R.dual[i];
    if (genus == 1) {
      r = std::max(r, std::abs(lambda_of_tree(t, FT::node(0, FT::leaf(i), FT::leaf(ib))) - 1.0));
      continue;
    }
    for (int j = 0; j < n; ++j) {
      const int jb = R.dual[j];
      // balanced ((i ibar)(j jbar)) and ((i j)(ibar jbar))
      for (int a = 0; a < n; ++a) {
        const int ab = R.dual[a];
        if (t.adm(i, ib, a) && t.adm(j, jb, ab))
          r = std::max(r, std::abs(lambda_of_tree(t, FT::node(0, FT::node(a, FT::leaf(i), FT::leaf(ib)),
                                                               FT::node(ab, FT::leaf(j), FT::leaf(jb)))) -
                                   1.0));
        if (t.adm(i, j, a) && t.adm(ib, jb, ab))
          r = std::max(r, std::abs(lambda_of_tree(t, FT::node(0, FT::node(a, FT::leaf(i), FT::leaf(j)),
                                                               FT::node(ab, FT::leaf(ib), FT::leaf(jb)))) -
                                   1.0));
      }
      // left comb (((i ibar) j) jbar)
      for (int a : R.channels(i, ib))
        for (int b : R.channels(a, j))
          if (t.adm(b, jb, 0))
            r = std::max(r, std::abs(lambda_of_tree(t, FT::node(0, FT::node(b, FT::node(a, FT::leaf(i), FT::leaf(ib)),
                                                                             FT::leaf(j)),
                                                                 FT::leaf(jb))) -
                                     1.0));
    }
  }
  return r;
}

Stage finish(StageBuilder& b, const std::vector<cx>& f, std::vector<cx>& total) {
  for (size_t i = 0; i < total.size(); ++i) total[i] *= f[i];
  b.s.f = f;
  b.s.f_total = total;
  return b.s;
}

}  // namespace

NormalizeResult normalize(const LambdaTable& t0, const GradingData& g, double tol) {
  const auto& R = t0.ring;
  const int n = R.size();
  NormalizeResult res;
  res.f.assign(n, 1.0);
  LambdaTable t = t0;

  auto fail = [&](const Stage& st) {
    res.failed_stage = st.name;
    for (const auto& c : st.checks)
      if (!c.passed) {
        res.failed_property = c.property;
        break;
      }
    res.table = t;
    return res;
  };

  // Step 1: unit legs and the pairing constants
  {
    StageBuilder b{&t, tol, {"step 1: unit and pairing constants", {}, {}, {}, true}};
    std::vector<cx> f(n, 1.0);
    const cx l000 = t.lower(0, 0, 0);
    f[0] = l000;
    for (int i = 1; i < n; ++i) {
      const int ib = R.dual[i];
      if (ib < i) continue;
      f[i] = f[ib] = std::sqrt(l000 * t.lower(i, ib, 0));
    }
    t = apply_f(t, f);
    std::vector<cx> v{t.eta0, t.eps0};
    for (int i = 0; i < n; ++i) {
      v.push_back(t.lower(i, 0, i));
      v.push_back(t.lower(0, i, i));
      v.push_back(t.lower(i, R.dual[i], 0));
    }
    b.check("unit, counit and pairing constants equal 1", worst_one(v));
    res.stages.push_back(finish(b, f, res.f));
    if (!b.s.passed) return fail(res.stages.back());
  }

  // Step 2: the adjoint subring, via handle trees
  {
    StageBuilder b{&t, tol, {"step 2: adjoint subring", {}, {}, {}, true}};
    b.check("handle trees have unit weight (genus 1)", handle_tree_residual(t, 1));
    b.check("handle trees have unit weight (genus 2)", handle_tree_residual(t, 2));
    std::vector<cx> f(n, 1.0);
    if (b.s.passed) {
      for (int i : g.I_ad)
        if (i != 0) f[i] = lambda_of_tree(t, handle_tree(g, i));
      double pair_res = 0;
      for (int i : g.I_ad) pair_res = std::max(pair_res, std::abs(f[i] * f[R.dual[i]] - 1.0));
      b.check("handle trees of i and ibar are inverse", pair_res);
      t = apply_f(t, f);
      std::vector<cx> v;
      for (int i : g.I_ad)
        for (int j : g.I_ad)
          for (int k : R.channels(i, j)) v.push_back(t.upper(i, j, k));
      b.check("adjoint constants equal 1", worst_one(v));
      std::vector<cx> w;
      for (int i : g.I_ad)
        if (i != 0) w.push_back(lambda_of_tree(t, handle_tree(g, i)));
      b.check("handle trees of adjoint labels equal 1", worst_one(w));
      std::vector<cx> inv;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k : R.channels(i, j)) inv.push_back(t.upper(R.dual[i], R.dual[j], R.dual[k]) * t.upper(i, j, k));
      b.check("conjugate constants are inverse", worst_one(inv));
    }
    res.stages.push_back(finish(b, f, res.f));
    if (!b.s.passed) return fail(res.stages.back());
  }

  // Step 3: one representative per graded component
  {
    StageBuilder b{&t, tol, {"step 3: graded components", {}, {}, {}, true}};
    std::vector<cx> f(n, 1.0);
    const FiniteGroup& G = g.G;
    std::vector<int> kg(G.size());
    for (int x = 0; x < G.size(); ++x) kg[x] = g.components[x].front();
    std::vector<bool> done(G.size(), false);
    done[0] = true;
    for (int x = 1; x < G.size(); ++x) {
      if (done[x]) continue;
      const int xi = G.inv(x);
      int ig = -1;
      for (int i : g.I_ad)
        if (R.n(i, R.dual[kg[x]], kg[xi])) {
          ig = i;
          break;
        }
      if (ig < 0) throw MoritaError("no adjoint label links the representatives of a component and its inverse");
      const cx v = std::sqrt(t.upper(ig, R.dual[kg[x]], kg[xi]));
      f[kg[x]] = f[kg[xi]] = v;
      done[x] = done[xi] = true;
    }
    for (int x = 1; x < G.size(); ++x)
      for (int k : g.components[x]) {
        if (k == kg[x]) continue;
        int i = -1;
        for (int a : g.I_ad)
          if (R.n(a, kg[x], k)) {
            i = a;
            break;
          }
        f[k] = t.upper(i, kg[x], k) * f[kg[x]];
      }
    t = apply_f(t, f);
    std::vector<cx> v, pairs;
    for (int i : g.I_ad)
      for (int k = 0; k < n; ++k)
        for (int kp : R.channels(i, k)) v.push_back(t.upper(i, k, kp));
    b.check("constants with an adjoint leg equal 1", worst_one(v));
    for (int i = 0; i < n; ++i) pairs.push_back(f[i] * f[R.dual[i]]);
    b.check("renormalisation keeps f_i f_ibar = 1", worst_one(pairs));
    double spread = 0;
    for (int x = 0; x < G.size(); ++x)
      for (int y = 0; y < G.size(); ++y) {
        cx ref = 0;
        bool have = false;
        for (int i : g.components[x])
          for (int j : g.components[y])
            for (int k : R.channels(i, j)) {
              if (!have) {
                ref = t.upper(i, j, k);
                have = true;
              }
              spread = std::max(spread, std::abs(t.upper(i, j, k) - ref));
            }
      }
    b.check("constants depend only on the grading", spread);
    res.stages.push_back(finish(b, f, res.f));
    if (!b.s.passed) return fail(res.stages.back());
  }

  // Final step: the symmetric cocycle on the grading group
  {
    StageBuilder b{&t, tol, {"final step: grading cocycle", {}, {}, {}, true}};
    const FiniteGroup& G = g.G;
    std::vector<std::vector<cx>> omega(G.size(), std::vector<cx>(G.size(), 1.0));
    for (int x = 0; x < G.size(); ++x)
      for (int y = 0; y < G.size(); ++y) {
        bool found = false;
        for (int i : g.components[x]) {
          for (int j : g.components[y]) {
            auto ch = R.channels(i, j);
            if (!ch.empty()) {
              omega[x][y] = t.upper(i, j, ch.front());
              found = true;
              break;
            }
          }
          if (found) break;
        }
      }
    const CocycleResidual cr = cocycle_residual(G, omega);
    b.check("cocycle is normalised", cr.normalisation);
    b.check("cocycle is symmetric", cr.symmetry);
    b.check("cocycle identity", cr.cocycle);
    std::vector<cx> f(n, 1.0);
    if (b.s.passed) {
      std::vector<cx> gamma = solve_symmetric_coboundary(G, omega, std::max(tol, 1e-12));
      b.check("coboundary solve", coboundary_residual(G, omega, gamma));
      res.omega_gamma = gamma;
      for (int i = 0; i < n; ++i) f[i] = 1.0 / gamma[g.partition[i]];
      t = apply_f(t, f);
      std::vector<cx> v{t.eta0, t.eps0};
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k : R.channels(i, j)) {
            v.push_back(t.lower(i, j, k));
            v.push_back(t.upper(i, j, k));
          }
      b.check("all constants equal 1", worst_one(v));
    }
    res.stages.push_back(finish(b, f, res.f));
    if (!b.s.passed) return fail(res.stages.back());
  }
  res.success = true;
  res.table = t;
  return res;
}

std::vector<AuditEntry> irreducibility_audit(const Category& C, int N, const ClassifyOptions& opt) {
  std::vector<AuditEntry> out;
  const int top = std::min(3 * N + 2, opt.genus_cap);
  for (int g = 1; g <= std::max(top, 1); ++g) {
    AuditEntry e;
    e.genus = g;
    e.dim = genus_dimension(C, g);
    if (e.dim > opt.cap_dim) {
      e.note = "skipped: dimension above cap";
      out.push_back(e);
      continue;
    }
    GenusRep rep = build_rep(C, g, {opt.cap_dim, false});
    e.commutant = commutant_dim(rep);
    e.checked = true;
    e.note = e.commutant == 1 ? "irreducible" : "hypothesis fails: reducible";
    out.push_back(e);
  }
  return out;
}

json lambda_table_to_json(const LambdaTable& t) {
  json j;
  j["eta0"] = to_json(t.eta0);
  j["eps0"] = to_json(t.eps0);
  json lo = json::array(), up = json::array();
  for (int i = 0; i < t.size(); ++i)
    for (int k = 0; k < t.size(); ++k)
      for (int c : t.ring.channels(i, k)) {
        lo.push_back({t.ring.labels[i], t.ring.labels[k], t.ring.labels[c], to_json(t.lower(i, k, c))});
        up.push_back({t.ring.labels[i], t.ring.labels[k], t.ring.labels[c], to_json(t.upper(i, k, c))});
      }
  j["lower"] = lo;
  j["upper"] = up;
  return j;
}

namespace {

json f_json(const std::vector<cx>& f, const FusionRing& R) {
  json j = json::object();
  for (size_t i = 0; i < f.size(); ++i) j[R.labels[i]] = to_json(f[i]);
  return j;
}

}  // namespace

json normalize_to_json(const NormalizeResult& r, const FusionRing& R) {
  json j;
  j["success"] = r.success;
  json st = json::array();
  for (const auto& s : r.stages) {
    json c = json::array();
    for (const auto& k : s.checks) c.push_back({{"property", k.property}, {"residual", k.residual}, {"passed", k.passed}});
    st.push_back({{"name", s.name}, {"passed", s.passed}, {"f", f_json(s.f, R)}, {"f_total", f_json(s.f_total, R)},
                  {"checks", c}});
  }
  j["stages"] = st;
  j["f"] = f_json(r.f, R);
  if (!r.success) {
    j["failed_stage"] = r.failed_stage;
    j["failed_property"] = r.failed_property;
  }
  if (!r.omega_gamma.empty()) {
    json g = json::array();
    for (cx z : r.omega_gamma) g.push_back(to_json(z));
    j["gamma"] = g;
  }
  return j;
}

ClassifyReport classify_centre(const AlgebraObject& Z, CategoryPtr C, const ClassifyOptions& opt) {
  ClassifyReport rep;
  const GradingData gd = grading(C->ring);
  rep.max_genus_required = 3 * gd.N + 2;
  rep.audit = irreducibility_audit(*C, gd.N, opt);
  for (const auto& e : rep.audit)
    if (e.checked && e.commutant != 1) rep.hypothesis_holds = false;

  json cert;
  cert["category"] = C->name;
  cert["grading"] = {{"group_order", gd.G.size()}, {"N", gd.N}};
  json audit = json::array();
  for (const auto& e : rep.audit)
    audit.push_back({{"genus", e.genus}, {"dim", e.dim}, {"checked", e.checked}, {"commutant", e.commutant},
                     {"note", e.note}});
  cert["irreducibility_audit"] = audit;
  cert["genus_bound"] = rep.max_genus_required;
  cert["hypothesis_holds_on_checked_genera"] = rep.hypothesis_holds;

  try {
    LambdaTable t = extract_lambda(Z, C, opt.tol);
    cert["lambda"] = lambda_table_to_json(t);
    const LambdaInvariants inv = lambda_invariants(t);
    cert["lambda_invariants"] = {{"lowering", inv.lowering}, {"raising", inv.raising},
                                 {"commutativity", inv.commutativity}, {"smallest", inv.smallest}};
    rep.normal = normalize(t, gd, opt.tol);
    cert["normalize"] = normalize_to_json(rep.normal, C->ring);
    if (rep.normal.success) {
      const AlgebraObject mapped = twist_algebra(Z, C, rep.normal.f);
      rep.isomorphism_residual = algebra_distance(mapped, z_unit_algebra(C, Z.C));
      cert["isomorphism_residual"] = rep.isomorphism_residual;
      rep.isomorphism = rep.isomorphism_residual < std::max(opt.tol, 1e-8);
    }
  } catch (const MoritaError& e) {
    cert["error"] = e.what();
  }
  if (rep.isomorphism) {
    rep.exit_code = 0;
    rep.verdict = "Z(A) isomorphic to Z(1) as algebras; A is Morita-equivalent to 1";
  } else {
    rep.exit_code = 2;
    rep.verdict = "no isomorphism exhibited";
  }
  if (!rep.hypothesis_holds) rep.verdict += " (irreducibility hypothesis fails on a checked genus)";
  cert["verdict"] = rep.verdict;
  rep.certificate = cert;
  return rep;
}

ClassifyReport classify(const AlgebraObject& A, const ClassifyOptions& opt) {
  CentreResult Z = full_centre(A);
  ClassifyReport r = classify_centre(Z.algebra, A.C, opt);
  r.certificate["full_centre"] = {{"associativity", Z.verification.algebra.associativity},
                                  {"commutativity", Z.verification.algebra.commutativity},
                                  {"idempotent", Z.verification.idempotent},
                                  {"dim_residual", Z.verification.dim_residual},
                                  {"diagonal_pattern", Z.verification.diagonal_pattern}};
  return r;
}

}  // namespace mfc
