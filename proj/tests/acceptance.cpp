// One line per acceptance criterion; exits nonzero when any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mfckit/centre.hpp"
#include "mfckit/cocycle.hpp"
#include "mfckit/mcg.hpp"
#include "mfckit/morita.hpp"

using namespace mfc;

namespace {

CategoryPtr load(const std::string& name) { return load_category_file(std::string(MFCKIT_TEST_DATA) + "/" + name + ".json"); }

std::vector<std::string> bundled() {
  std::vector<std::string> names{"trivial", "semion", "ising", "fibonacci", "fibonacci_galois"};
  for (int k = 1; k <= 10; ++k) names.push_back("su2_" + std::to_string(k));
  return names;
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail.str("");
    pass = false;
    detail << why << "; ";
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double time_limit, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (time_limit > 0 && dt > time_limit) o.fail("runtime " + std::to_string(dt) + " s over " + std::to_string(time_limit) + " s");
  if (!o.pass) ++failures;
  std::printf("%s %2d %s (%.2f s) %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), dt, o.detail.str().c_str());
  std::fflush(stdout);
}

int divisor_pairs(int r) {
  int c = 0;
  for (int d = 1; d * d < r; ++d)
    if (r % d == 0) ++c;
  return c;
}

double max_abs(const std::vector<cx>& a, const std::vector<cx>& b) {
  double r = 0;
  for (size_t k = 0; k < a.size(); ++k) r = std::max(r, std::abs(a[k] - b[k]));
  return r;
}

}  // namespace

int main() {
  criterion(1, "genus-one fixed spaces of doubled su2_k follow the divisor rule, k = 1..10", 10, [](Outcome& o) {
    for (int k = 1; k <= 10; ++k) {
      const int r = k + 2;
      auto D = doubled(load("su2_" + std::to_string(k)));
      const int got = invariant_subspace(build_rep(*D, 1)).rank.dim;
      o.detail << "r=" << r << ":" << got << " ";
      if (got != divisor_pairs(r)) o.fail("r=" + std::to_string(r) + " expected " + std::to_string(divisor_pairs(r)) + " got " + std::to_string(got));
    }
  });

  criterion(2, "su2 at prime r = 3, 5: V_1 and V_2 irreducible", 120, [](Outcome& o) {
    for (const char* nm : {"su2_1", "su2_3"})
      for (int g = 1; g <= 2; ++g) {
        const int c = commutant_dim(build_rep(*load(nm), g));
        o.detail << nm << " g=" << g << ":" << c << " ";
        if (c != 1) o.fail(std::string(nm) + " genus " + std::to_string(g) + " commutant " + std::to_string(c));
      }
  });

  criterion(3, "ising V_1, V_2, V_3 irreducible", 300, [](Outcome& o) {
    auto C = load("ising");
    for (int g = 1; g <= 3; ++g) {
      auto rep = build_rep(*C, g);
      const int c = commutant_dim(rep);
      o.detail << "g=" << g << " dim " << rep.dim << ":" << c << " ";
      if (g == 2 && rep.dim != 10) o.fail("dim V_2 = " + std::to_string(rep.dim));
      if (c != 1) o.fail("genus " + std::to_string(g) + " commutant " + std::to_string(c));
    }
  });

  criterion(4, "correlators of Z(1) invariant under all generators, genus 1 and 2", 0, [](Outcome& o) {
    double worst = 0;
    for (const char* nm : {"ising", "fibonacci", "semion"}) {
      auto Z = z_unit(load(nm)).algebra;
      for (int g = 1; g <= 2; ++g) {
        auto c = correlator(Z, g);
        auto rep = build_rep(*Z.C, g);
        if (rep.gens.size() != static_cast<size_t>(3 * g - 1)) o.fail("wrong generator count");
        if (c.flat.norm() < 1e-6) o.fail(std::string(nm) + " correlator vanishes");
        for (const auto& M : rep.gens) worst = std::max(worst, (M * c.flat - c.flat).cwiseAbs().maxCoeff());
      }
    }
    o.detail << "max residual " << worst << " ";
    if (worst >= 1e-8) o.fail("invariance residual " + std::to_string(worst));
  });

  criterion(5, "Z(1) checklist on every bundled category; full centre of the unit agrees", 0, [](Outcome& o) {
    double worst = 0;
    for (const auto& nm : bundled()) {
      auto C = load(nm);
      auto Z = z_unit(C);
      const auto& v = Z.verification;
      const double r = std::max({v.algebra.commutativity, v.modular.theta, v.modular.s_invariance, v.dim_residual,
                                 v.algebra.associativity, v.algebra.unitality});
      worst = std::max(worst, r);
      if (!v.predicates.haploid) o.fail(nm + " not haploid");
      if (!v.nondegenerate) o.fail(nm + " degenerate");
      if (r >= 1e-8) o.fail(nm + " residual " + std::to_string(r));
      auto F = full_centre(unit_algebra(C), Z.algebra.C);
      if (F.algebra.mult != Z.algebra.mult) {
        o.fail(nm + " full centre object differs");
        continue;
      }
      const double d = std::max(max_abs(F.algebra.mu, Z.algebra.mu), max_abs(F.algebra.eta, Z.algebra.eta));
      worst = std::max(worst, d);
      if (d >= 1e-8) o.fail(nm + " full centre distance " + std::to_string(d));
    }
    o.detail << "max residual " << worst << " ";
  });

  criterion(6, "normalisation round trip, 20 seeded twists per bundled category", 0, [](Outcome& o) {
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> mod(0.5, 2), ph(-M_PI, M_PI);
    double worst_table = 0, worst_iso = 0;
    for (const auto& nm : bundled()) {
      auto C = load(nm);
      auto gr = grading(C->ring);
      auto U = z_unit_algebra(C);
      for (int t = 0; t < 20; ++t) {
        std::vector<cx> f(C->size());
        for (auto& z : f) z = std::polar(mod(rng), ph(rng));
        auto Z = twist_algebra(U, C, f);
        auto res = normalize(extract_lambda(Z, C), gr);
        if (!res.success) {
          o.fail(nm + " failed at " + res.failed_stage + ": " + res.failed_property);
          continue;
        }
        const LambdaTable& tb = res.table;
        double d = std::max(std::abs(tb.eta0 - 1.0), std::abs(tb.eps0 - 1.0));
        for (int i = 0; i < tb.size(); ++i)
          for (int j = 0; j < tb.size(); ++j)
            for (int k = 0; k < tb.size(); ++k)
              if (tb.adm(i, j, k)) d = std::max({d, std::abs(tb.lower(i, j, k) - 1.0), std::abs(tb.upper(i, j, k) - 1.0)});
        worst_table = std::max(worst_table, d);
        worst_iso = std::max(worst_iso, algebra_distance(twist_algebra(Z, C, res.f), U));
      }
    }
    o.detail << "lambda " << worst_table << " isomorphism " << worst_iso << " ";
    if (worst_table >= 1e-8) o.fail("final constants off by " + std::to_string(worst_table));
    if (worst_iso >= 1e-8) o.fail("isomorphism residual " + std::to_string(worst_iso));
  });

  criterion(7, "topological algebra projector on Z(1) and on ising 1 + psi", 0, [](Outcome& o) {
    std::vector<std::pair<std::string, AlgebraObject>> cases;
    for (const auto& nm : bundled()) cases.emplace_back("Z(1) " + nm, z_unit(load(nm)).algebra);
    cases.emplace_back("ising 1+psi", induce_frobenius(ising_one_plus_psi(load("ising"))));
    double worst = 0;
    for (const auto& [name, A] : cases) {
      auto a = atop_checks(A);
      worst = std::max({worst, a.idempotent, a.unit_fixed});
      if (a.idempotent >= 1e-10 || a.unit_fixed >= 1e-10) o.fail(name + " projector residual");
      if (!predicates(A).simple) {
        o.fail(name + " is not simple");
        continue;
      }
      cx dim = 0;
      for (int l = 0; l < A.C->size(); ++l) dim += static_cast<double>(A.mult[l]) * A.C->d[l];
      if (a.image_rank != 1) o.fail(name + " image rank " + std::to_string(a.image_rank));
      if (std::abs(std::abs(a.eta_eta) - std::abs(dim)) >= 1e-8 || std::abs(a.eta_eta) <= 1e-6)
        o.fail(name + " <eta,eta> does not match the dimension");
    }
    o.detail << "max projector residual " << worst << " ";
  });

  criterion(8, "universal gradings", 0, [](Outcome& o) {
    auto expect = [&](const std::string& nm, int order, int N) {
      auto g = grading(load(nm)->ring);
      if (g.G.size() != order) o.fail(nm + " group order " + std::to_string(g.G.size()));
      if (N >= 0 && g.N != N) o.fail(nm + " N = " + std::to_string(g.N));
      if (g.N > g.ring.size()) o.fail(nm + " N exceeds the rank");
      const std::string c = check_partition_respects_fusion(g) + check_transitive_components(g) + check_filtration_monotone(g);
      if (!c.empty()) o.fail(nm + ": " + c);
    };
    expect("ising", 2, 1);
    expect("semion", 2, 0);
    expect("fibonacci", 1, -1);
    for (int k = 1; k <= 10; ++k) expect("su2_" + std::to_string(k), 2, -1);
  });

  criterion(9, "symmetric cocycles trivialised on Z/2, Z/3, Z/2 x Z/2, Z/4", 1, [](Outcome& o) {
    std::vector<std::pair<std::string, FiniteGroup>> groups{{"Z2", cyclic_group(2)},
                                                            {"Z3", cyclic_group(3)},
                                                            {"Z2xZ2", direct_product(cyclic_group(2), cyclic_group(2))},
                                                            {"Z4", cyclic_group(4)}};
    std::mt19937_64 rng(99);
    double worst = 0;
    for (const auto& [name, G] : groups)
      for (int t = 0; t < 100; ++t) {
        auto w = random_symmetric_cocycle(G, rng);
        worst = std::max(worst, coboundary_residual(G, w, solve_symmetric_coboundary(G, w, 1e-9)));
      }
    o.detail << "max residual " << worst << " ";
    if (worst >= 1e-9) o.fail("residual " + std::to_string(worst));
  });

  criterion(10, "pentagon and hexagon on every bundled file", 0, [](Outcome& o) {
    double worst = 0;
    for (const auto& nm : bundled()) {
      auto C = load(nm);
      const double r = std::max(validate_pentagon(*C).value, validate_hexagon(*C).value);
      worst = std::max(worst, r);
      if (r >= 1e-9) o.fail(nm + " residual " + std::to_string(r));
    }
    o.detail << "max residual " << worst << " ";
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
