#include "mfckit/engine.hpp"

#include <string>

namespace mfc {

FusionBasis::FusionBasis(const Category& C, std::vector<int> leaves, int root, int pair_at)
    : leaves_(std::move(leaves)), root_(root), pair_at_(pair_at) {
  const int n = static_cast<int>(leaves_.size());
  if (pair_at_ < 0 || (pair_at_ > 0 && pair_at_ >= n)) throw EngineError("pair position out of range");
  Tree E(n + 1, 0);
  std::function<void(int)> rec = [&](int t) {
    if (t > n) {
      if (E[n] == root_) {
        index_[E] = static_cast<int>(trees_.size());
        trees_.push_back(E);
      }
      return;
    }
    std::vector<int> opts;
    if (t == pair_at_)
      opts = C.channels(leaves_[t - 1], leaves_[t]);
    else if (pair_at_ > 0 && t == pair_at_ + 1)
      opts = C.channels(E[t - 2], E[t - 1]);
    else
      opts = C.channels(E[t - 1], leaves_[t - 1]);
    for (int e : opts) {
      E[t] = e;
      rec(t + 1);
    }
  };
  if (n == 0) {
    if (root_ == 0) {
      index_[E] = 0;
      trees_.push_back(E);
    }
  } else {
    rec(1);
  }
}

BasisPtr make_basis(const Category& C, const std::vector<int>& leaves, int root, int pair_at) {
  return std::make_shared<FusionBasis>(C, leaves, root, pair_at);
}

long hom_dimension(const Category& C, const std::vector<int>& leaves, int root) {
  // multiplicity vector of the running product x_1 (x) ... (x) x_t
  const int r = C.size();
  std::vector<long> v(r, 0);
  v[0] = 1;
  for (int x : leaves) {
    std::vector<long> w(r, 0);
    for (int a = 0; a < r; ++a)
      if (v[a])
        for (int c = 0; c < r; ++c) w[c] += v[a] * C.n(a, x, c);
    v = std::move(w);
  }
  return v[root];
}

State to_state(const MorphismVector& v) {
  State s;
  s.leaves = v.basis->leaves();
  s.root = v.basis->root();
  s.pair_at = v.basis->pair_at();
  for (int i = 0; i < v.basis->size(); ++i) s.add(v.basis->tree(i), v.coef(i));
  return s;
}

MorphismVector to_vector(const State& s, BasisPtr basis, double tol) {
  if (s.leaves != basis->leaves() || s.root != basis->root() || s.pair_at != basis->pair_at())
    throw EngineError("state does not match basis");
  MorphismVector v{basis, Vec::Zero(basis->size())};
  for (const auto& [t, c] : s.terms) {
    int i = basis->find(t);
    if (i < 0) {
      if (std::abs(c) > tol) throw EngineError("state has weight on a tree outside the basis");
      continue;
    }
    v.coef(i) += c;
  }
  return v;
}

State single_tree(const FusionBasis& B, int idx) {
  State s;
  s.leaves = B.leaves();
  s.root = B.root();
  s.pair_at = B.pair_at();
  s.add(B.tree(idx), 1.0);
  return s;
}

namespace {

void need_comb(const State& s, const char* what) {
  if (s.pair_at != 0) throw EngineError(std::string(what) + " needs a left-comb state");
}

void need_pos(const State& s, int m, int span, const char* what) {
  if (m < 1 || m + span - 1 > s.n()) throw EngineError(std::string(what) + ": position out of range");
}

}  // namespace

State Engine::to_pair(const State& s, int m) const {
  need_comb(s, "to_pair");
  need_pos(s, m, 2, "to_pair");
  State out;
  out.leaves = s.leaves;
  out.root = s.root;
  out.pair_at = m;
  const int x = s.leaves[m - 1], y = s.leaves[m];
  for (const auto& [E, c] : s.terms) {
    const int a = E[m - 1], e = E[m], b = E[m + 1];
    for (int f : C.channels(x, y)) {
      if (!C.n(a, f, b)) continue;
      Tree T = E;
      T[m] = f;
      out.add(T, c * C.F(a, x, y, b, e, f));
    }
  }
  return out;
}

State Engine::from_pair(const State& s, int m) const {
  if (s.pair_at != m) throw EngineError("from_pair: state is not paired at this position");
  State out;
  out.leaves = s.leaves;
  out.root = s.root;
  out.pair_at = 0;
  const int x = s.leaves[m - 1], y = s.leaves[m];
  for (const auto& [E, c] : s.terms) {
    const int a = E[m - 1], f = E[m], b = E[m + 1];
    for (int e : C.channels(a, x)) {
      if (!C.n(e, y, b)) continue;
      Tree T = E;
      T[m] = e;
      out.add(T, c * C.Finv(a, x, y, b, f, e));
    }
  }
  return out;
}

State Engine::braid(const State& s, int m, bool inverse) const {
  State p = to_pair(s, m);
  const int x = s.leaves[m - 1], y = s.leaves[m];
  State q;
  q.leaves = p.leaves;
  std::swap(q.leaves[m - 1], q.leaves[m]);
  q.root = p.root;
  q.pair_at = m;
  for (const auto& [E, c] : p.terms) {
    const int f = E[m];
    q.add(E, c * (inverse ? C.Rinv(x, y, f) : C.R(x, y, f)));
  }
  return from_pair(q, m);
}

State Engine::twist_strand(const State& s, int k) const {
  need_pos(s, k, 1, "twist_strand");
  return scale(s, C.theta[s.leaves[k - 1]]);
}

State Engine::pair_twist(const State& s, int k) const {
  State p = to_pair(s, k);
  for (auto& [E, c] : p.terms) c *= C.theta[E[k]];
  return from_pair(p, k);
}

State Engine::insert_cup(const State& s, int p, int j) const {
  need_comb(s, "insert_cup");
  if (p < 0 || p > s.n()) throw EngineError("insert_cup: position out of range");
  State q;
  q.leaves = s.leaves;
  q.leaves.insert(q.leaves.begin() + p, {j, C.dual(j)});
  q.root = s.root;
  q.pair_at = p + 1;
  for (const auto& [E, c] : s.terms) {
    Tree T;
    T.reserve(E.size() + 2);
    T.insert(T.end(), E.begin(), E.begin() + p + 1);
    T.push_back(0);
    T.insert(T.end(), E.begin() + p, E.end());
    q.add(T, c);
  }
  return from_pair(q, p + 1);
}

State Engine::cap(const State& s, int p) const {
  need_pos(s, p, 2, "cap");
  const int x = s.leaves[p - 1];
  if (s.leaves[p] != C.dual(x)) throw EngineError("cap: strands are not dual");
  State q = to_pair(s, p);
  State out;
  out.leaves = s.leaves;
  out.leaves.erase(out.leaves.begin() + p - 1, out.leaves.begin() + p + 1);
  out.root = s.root;
  for (const auto& [E, c] : q.terms) {
    if (E[p] != 0) continue;
    Tree T(E.begin(), E.begin() + p);
    T.insert(T.end(), E.begin() + p + 2, E.end());
    out.add(T, c * C.d[x]);
  }
  return out;
}

State Engine::fuse(const State& s, int p, int c0, cx coef) const {
  State q = to_pair(s, p);
  State out;
  out.leaves = s.leaves;
  out.leaves.erase(out.leaves.begin() + p - 1, out.leaves.begin() + p + 1);
  out.leaves.insert(out.leaves.begin() + p - 1, c0);
  out.root = s.root;
  for (const auto& [E, c] : q.terms) {
    if (E[p] != c0) continue;
    Tree T = E;
    T.erase(T.begin() + p);
    out.add(T, c * coef);
  }
  return out;
}

State Engine::split(const State& s, int p, int a, int b, cx coef) const {
  need_comb(s, "split");
  need_pos(s, p, 1, "split");
  const int x = s.leaves[p - 1];
  if (!C.n(a, b, x)) throw EngineError("split: inadmissible vertex");
  State q;
  q.leaves = s.leaves;
  q.leaves[p - 1] = a;
  q.leaves.insert(q.leaves.begin() + p, b);
  q.root = s.root;
  q.pair_at = p;
  for (const auto& [E, c] : s.terms) {
    Tree T = E;
    T.insert(T.begin() + p, x);
    q.add(T, c * coef);
  }
  return from_pair(q, p);
}

State Engine::s_move(const State& s, int p, int j) const {
  State t = insert_cup(s, p + 1, j);
  t = braid(t, p + 1, s_inverse);
  t = braid(t, p + 1, s_inverse);
  t = cap(t, p);
  return scale(std::move(t), C.d[j] / C.D);
}

State Engine::scale(State s, cx c) const {
  for (auto& [E, v] : s.terms) v *= c;
  return s;
}

MorphismVector f_move(const Category& C, const MorphismVector& v, int position) {
  Engine eng{C};
  State s = eng.to_pair(to_state(v), position);
  return to_vector(s, make_basis(C, v.basis->leaves(), v.basis->root(), position), C.tol);
}

MorphismVector f_move_back(const Category& C, const MorphismVector& v) {
  Engine eng{C};
  State s = eng.from_pair(to_state(v), v.basis->pair_at());
  return to_vector(s, make_basis(C, v.basis->leaves(), v.basis->root()), C.tol);
}

MorphismVector twist_strand(const Category& C, const MorphismVector& v, int k) {
  Engine eng{C};
  return to_vector(eng.twist_strand(to_state(v), k), v.basis, C.tol);
}

MorphismVector pair_twist(const Category& C, const MorphismVector& v, int k) {
  Engine eng{C};
  return to_vector(eng.pair_twist(to_state(v), k), v.basis, C.tol);
}

MorphismVector s_loop(const Category& C, const MorphismVector& v, int handle, int j) {
  Engine eng{C};
  const int p = 2 * handle - 1;
  const auto& L = v.basis->leaves();
  if (p < 1 || p + 1 > static_cast<int>(L.size()) || L[p] != C.dual(L[p - 1]))
    throw EngineError("s_loop: strands of the handle are not a dual pair");
  State s = eng.s_move(to_state(v), p, j);
  return to_vector(s, make_basis(C, s.leaves, s.root), C.tol);
}

cx closed_loop_value(const Category& C, int i, int c) { return C.s(i, c) / C.d[c]; }

cx loop_contraction(const Category& C, int i, int c) {
  Engine eng{C};
  FusionBasis B(C, {i, C.dual(i)});
  State s = single_tree(B, 0);
  s = eng.insert_cup(s, 2, c);
  s = eng.braid(s, 2);
  s = eng.braid(s, 2);
  s = eng.cap(s, 1);
  // the only tree left is (0, c, 0)
  auto it = s.terms.find(Tree{0, c, 0});
  return it == s.terms.end() ? cx(0) : it->second;
}

Mat op_matrix(const FusionBasis& in, BasisPtr out, const std::function<State(const State&)>& f, double tol) {
  Mat M = Mat::Zero(out->size(), in.size());
  for (int k = 0; k < in.size(); ++k) {
    State r = f(single_tree(in, k));
    M.col(k) = to_vector(r, out, tol).coef;
  }
  return M;
}

}  // namespace mfc
