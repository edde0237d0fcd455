#include "mfckit/cocycle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace mfc {

CocycleResidual cocycle_residual(const FiniteGroup& G, const std::vector<std::vector<cx>>& w) {
  CocycleResidual r;
  const int n = G.size();
  for (int g = 0; g < n; ++g) {
    r.normalisation = std::max({r.normalisation, std::abs(w[0][g] - 1.0), std::abs(w[g][0] - 1.0)});
    for (int h = 0; h < n; ++h) {
      r.symmetry = std::max(r.symmetry, std::abs(w[g][h] - w[h][g]));
      for (int k = 0; k < n; ++k) {
        cx lhs = w[g][h] * w[G.op(g, h)][k];
        cx rhs = w[h][k] * w[g][G.op(h, k)];
        r.cocycle = std::max(r.cocycle, std::abs(lhs - rhs));
      }
    }
  }
  return r;
}

double coboundary_residual(const FiniteGroup& G, const std::vector<std::vector<cx>>& w, const std::vector<cx>& gamma) {
  double r = 0;
  for (int g = 0; g < G.size(); ++g)
    for (int h = 0; h < G.size(); ++h)
      r = std::max(r, std::abs(w[g][h] * gamma[G.op(g, h)] / (gamma[g] * gamma[h]) - 1.0));
  return r;
}

namespace {

std::vector<int> span(const FiniteGroup& G, const std::vector<int>& gens) {
  std::vector<bool> in(G.size(), false);
  std::vector<int> out{0};
  in[0] = true;
  for (size_t i = 0; i < out.size(); ++i)
    for (int s : gens) {
      int y = G.op(out[i], s);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  return out;
}

}  // namespace

CyclicDecomposition cyclic_decomposition(const FiniteGroup& G) {
  if (!G.abelian()) throw CocycleError("group is not abelian");
  const int n = G.size();
  // depth-first search over generator tuples, largest orders first, keeping
  // |<g_1..g_t>| = n_1 ... n_t so the product map stays injective
  std::vector<int> by_order(n);
  for (int g = 0; g < n; ++g) by_order[g] = g;
  std::stable_sort(by_order.begin(), by_order.end(), [&](int a, int b) { return G.order(a) > G.order(b); });
  CyclicDecomposition best;
  std::function<bool(CyclicDecomposition&, long)> dfs = [&](CyclicDecomposition& cur, long prod) {
    if (prod == n) {
      best = cur;
      return true;
    }
    for (int g : by_order) {
      if (g == 0) continue;
      const int o = G.order(g);
      if (!cur.orders.empty() && o > cur.orders.back()) continue;
      if (n % (prod * o) != 0) continue;
      cur.gens.push_back(g);
      cur.orders.push_back(o);
      if (static_cast<long>(span(G, cur.gens).size()) == prod * o && dfs(cur, prod * o)) return true;
      cur.gens.pop_back();
      cur.orders.pop_back();
    }
    return false;
  };
  CyclicDecomposition cur;
  if (!dfs(cur, 1)) throw CocycleError("no cyclic decomposition found");
  return best;
}

std::vector<cx> solve_symmetric_coboundary(const FiniteGroup& G, const std::vector<std::vector<cx>>& w, double tol) {
  const CocycleResidual res = cocycle_residual(G, w);
  if (res.normalisation > tol || res.symmetry > tol || res.cocycle > tol)
    throw CocycleError("input is not a symmetric normalised cocycle (normalisation " +
                       std::to_string(res.normalisation) + ", symmetry " + std::to_string(res.symmetry) +
                       ", cocycle " + std::to_string(res.cocycle) + ")");
  const int n = G.size();
  const CyclicDecomposition dec = cyclic_decomposition(G);
  std::vector<cx> gamma(n, 0.0);
  std::vector<bool> known(n, false);
  gamma[0] = 1.0;
  known[0] = true;
  std::vector<int> H{0};  // elements spanned so far
  for (size_t t = 0; t < dec.gens.size(); ++t) {
    const int e = dec.gens[t], o = dec.orders[t];
    // on <e>: gamma_{(a+1)e} = gamma_{ae} gamma_e / omega(ae, e), closing requires gamma_e^o = prod omega(ae, e)
    cx prod = 1.0;
    for (int a = 1, x = e; a < o; ++a, x = G.op(x, e)) prod *= w[x][e];
    const cx ge = std::pow(prod, 1.0 / o);  // principal branch
    std::vector<int> cyc{0};
    std::vector<cx> gc{1.0};
    for (int a = 1; a < o; ++a) {
      int prev = cyc.back();
      cyc.push_back(G.op(prev, e));
      gc.push_back(a == 1 ? ge : gc.back() * ge / w[prev][e]);
    }
    // extend: gamma_{h + c} = gamma_h gamma_c / omega(h, c)
    std::vector<int> nextH;
    for (int h : H)
      for (size_t a = 0; a < cyc.size(); ++a) {
        int x = G.op(h, cyc[a]);
        gamma[x] = gamma[h] * gc[a] / w[h][cyc[a]];
        known[x] = true;
        nextH.push_back(x);
      }
    H = std::move(nextH);
  }
  for (int g = 0; g < n; ++g)
    if (!known[g]) throw CocycleError("cyclic decomposition does not cover the group");
  const double r = coboundary_residual(G, w, gamma);
  if (r > tol) throw CocycleError("coboundary residual " + std::to_string(r) + " exceeds tolerance");
  return gamma;
}

std::vector<std::vector<cx>> random_symmetric_cocycle(const FiniteGroup& G, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mod(0.5, 2.0), ph(-M_PI, M_PI);
  const int n = G.size();
  std::vector<cx> gamma(n);
  gamma[0] = 1.0;
  for (int g = 1; g < n; ++g) gamma[g] = std::polar(mod(rng), ph(rng));
  std::vector<std::vector<cx>> w(n, std::vector<cx>(n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) w[g][h] = gamma[g] * gamma[h] / gamma[G.op(g, h)];
  return w;
}

}  // namespace mfc
