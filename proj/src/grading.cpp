#include "mfckit/grading.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace mfc {

int FiniteGroup::inv(int g) const {
  for (int h = 0; h < size(); ++h)
    if (mul[g][h] == 0) return h;
  throw GradingError("group element without inverse");
}

int FiniteGroup::order(int g) const {
  int k = 1;
  for (int x = g; x != 0; x = mul[x][g]) ++k;
  return k;
}

bool FiniteGroup::abelian() const {
  for (int g = 0; g < size(); ++g)
    for (int h = 0; h < size(); ++h)
      if (mul[g][h] != mul[h][g]) return false;
  return true;
}

FiniteGroup cyclic_group(int n) {
  FiniteGroup G;
  G.mul.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) G.mul[a][b] = (a + b) % n;
  return G;
}

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
  const int a = A.size(), b = B.size();
  FiniteGroup G;
  G.mul.assign(a * b, std::vector<int>(a * b));
  for (int x = 0; x < a * b; ++x)
    for (int y = 0; y < a * b; ++y) G.mul[x][y] = A.op(x / b, y / b) * b + B.op(x % b, y % b);
  return G;
}

namespace {

// labels appearing in some product of the given sets
std::set<int> closure(const FusionRing& R, std::set<int> S) {
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(S.begin(), S.end());
    for (int a : cur)
      for (int b : cur)
        for (int c : R.channels(a, b))
          if (S.insert(c).second) grew = true;
  }
  return S;
}

}  // namespace

GradingData grading(const FusionRing& R) {
  const int n = R.size();
  GradingData g;
  g.ring = R;

  std::set<int> gen{0};
  for (int i = 0; i < n; ++i)
    for (int c : R.channels(i, R.dual[i])) gen.insert(c);
  std::set<int> ad = closure(R, gen);
  g.I_ad.assign(ad.begin(), ad.end());
  g.in_ad.assign(n, false);
  for (int i : g.I_ad) g.in_ad[i] = true;

  // components: connect x and y when N_{x i}^y != 0 for some i in I_ad
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::queue<int> q;
    q.push(s);
    comp[s] = ncomp;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int i : g.I_ad)
        for (int y : R.channels(x, i))
          if (comp[y] < 0) {
            comp[y] = ncomp;
            q.push(y);
          }
      // the relation is symmetric through duals; follow it backwards too
      for (int y = 0; y < n; ++y)
        if (comp[y] < 0)
          for (int i : g.I_ad)
            if (R.n(y, i, x)) {
              comp[y] = ncomp;
              q.push(y);
              break;
            }
    }
    ++ncomp;
  }
  if (comp[0] != 0) throw GradingError("unit is not in the first component");
  for (int x = 0; x < n; ++x)
    if ((comp[x] == 0) != g.in_ad[x])
      throw GradingError("neutral component differs from the adjoint subring");

  g.G.mul.assign(ncomp, std::vector<int>(ncomp, -1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z : R.channels(x, y)) {
        int& slot = g.G.mul[comp[x]][comp[y]];
        if (slot < 0)
          slot = comp[z];
        else if (slot != comp[z])
          throw GradingError("fusion of " + R.labels[x] + " and " + R.labels[y] +
                             " meets two components; grading is inconsistent");
      }
  for (auto& row : g.G.mul)
    for (int v : row)
      if (v < 0) throw GradingError("component product is empty");
  g.partition = comp;
  g.components.assign(ncomp, {});
  for (int x = 0; x < n; ++x) g.components[comp[x]].push_back(x);

  // filtration degree by breadth-first search; labels are scanned in increasing
  // order so the first witness found at a given depth is the lexicographically smallest one
  g.n.assign(n, -1);
  g.witness.assign(n, {});
  g.n[0] = 0;
  std::vector<int> frontier{0};
  int depth = 0;
  while (!frontier.empty()) {
    ++depth;
    std::vector<int> next;
    std::sort(frontier.begin(), frontier.end());
    for (int p : frontier)
      for (int m = 0; m < n; ++m)
        for (int k : R.channels(m, R.dual[m]))
          for (int q : R.channels(p, k)) {
            if (g.n[q] >= 0) continue;
            g.n[q] = depth;
            HandleWitness w = g.witness[p];
            w.m.push_back(m);
            w.k.push_back(k);
            w.partial.push_back(q);
            g.witness[q] = w;
            next.push_back(q);
          }
    frontier = std::move(next);
  }
  g.N = 0;
  for (int i : g.I_ad) {
    if (g.n[i] < 0) throw GradingError("adjoint label without a handle witness");
    g.N = std::max(g.N, g.n[i]);
  }
  if (g.N > n) throw GradingError("filtration length exceeds the number of labels");
  return g;
}

std::string check_partition_respects_fusion(const GradingData& g) {
  const auto& R = g.ring;
  for (int x = 0; x < R.size(); ++x)
    for (int y = 0; y < R.size(); ++y)
      for (int z : R.channels(x, y))
        if (g.G.op(g.partition[x], g.partition[y]) != g.partition[z])
          return "grading violated at " + R.labels[x] + "," + R.labels[y] + "->" + R.labels[z];
  return "";
}

std::string check_transitive_components(const GradingData& g) {
  const auto& R = g.ring;
  for (const auto& comp : g.components)
    for (int x : comp)
      for (int y : comp) {
        bool ok = false;
        for (int i : g.I_ad)
          if (R.n(x, i, y)) ok = true;
        if (!ok) return "no adjoint label connects " + R.labels[x] + " to " + R.labels[y];
      }
  return "";
}

std::string check_filtration_monotone(const GradingData& g) {
  // R^(n) as label sets must grow and stabilise at N on I_ad
  std::set<int> prev;
  for (int deg = 0; deg <= g.N + 1; ++deg) {
    std::set<int> cur;
    for (int i : g.I_ad)
      if (g.n[i] <= deg) cur.insert(i);
    if (!std::includes(cur.begin(), cur.end(), prev.begin(), prev.end())) return "filtration not monotone";
    if (deg < g.N && cur.size() == g.I_ad.size()) return "filtration saturates before N";
    if (deg >= g.N && cur.size() != g.I_ad.size()) return "filtration not saturated at N";
    prev = cur;
  }
  return "";
}

}  // namespace mfc
