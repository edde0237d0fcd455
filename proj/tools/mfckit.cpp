// mfckit command-line front end. Every command prints one JSON document.
// Exit codes: 0 success, 1 input or validation error, 2 pipeline did not succeed.

#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "mfckit/centre.hpp"
#include "mfckit/mcg.hpp"
#include "mfckit/morita.hpp"

using namespace mfc;

namespace {

struct Config {
  std::string category;
  std::string algebra;
  std::string genus = "1";
  double tol = -1;
  long cap_dim = 10000;
  long audit_cap = 40;
  int genus_cap = 3;
  unsigned long seed = 7;
  std::string out;
  bool doubled = false, zunit = false, selftest_twist = false;
};

int emit(const Config& cfg, const json& j) {
  const std::string text = dump17(j) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.out);
    if (!f) throw std::runtime_error("cannot write " + cfg.out);
    f << text;
  }
  return 0;
}

std::vector<int> genus_range(const std::string& s) {
  const auto dash = s.find('-');
  int lo = std::stoi(s.substr(0, dash));
  int hi = dash == std::string::npos ? lo : std::stoi(s.substr(dash + 1));
  if (lo < 0 || hi < lo) throw std::invalid_argument("bad genus range " + s);
  std::vector<int> g;
  for (int x = lo; x <= hi; ++x) g.push_back(x);
  return g;
}

CategoryPtr load(const Config& cfg, bool validate = true) {
  LoadOptions o;
  o.tol = cfg.tol;
  o.validate = validate;
  return load_category_file(cfg.category, o);
}

// Algebra files carry "over": "base" (default) or "doubled".
AlgebraObject load_algebra(const Config& cfg, CategoryPtr C, CategoryPtr D) {
  std::ifstream in(cfg.algebra);
  if (!in) throw LoadError("cannot open algebra file " + cfg.algebra);
  json j = json::parse(in);
  const bool over_doubled = j.value("over", std::string("base")) == "doubled";
  return load_algebra_json(j, over_doubled ? D : C);
}

json residual_json(const Residual& r) { return {{"residual", r.value}, {"where", r.where}}; }

int cmd_validate(const Config& cfg) {
  CategoryPtr C = load(cfg, false);
  const Residual p = validate_pentagon(*C), h = validate_hexagon(*C);
  json j;
  j["category"] = C->name;
  j["tol"] = C->tol;
  j["ring"] = check_ring(C->ring).empty() ? "ok" : check_ring(C->ring);
  j["pentagon"] = residual_json(p);
  j["hexagon"] = residual_json(h);
  j["modularity_gap"] = modularity_gap(*C);
  j["pseudo_unitary"] = is_pseudo_unitary(*C);
  json d = json::array(), th = json::array();
  for (int a = 0; a < C->size(); ++a) {
    d.push_back(C->d[a]);
    th.push_back(to_json(C->theta[a]));
  }
  j["dimensions"] = d;
  j["twists"] = th;
  j["global_dimension_squared"] = to_json(C->D2());
  const bool ok = check_ring(C->ring).empty() && p.value < C->tol && h.value < C->tol;
  j["passed"] = ok;
  if (!ok) {
    std::string what = !check_ring(C->ring).empty() ? check_ring(C->ring)
                       : p.value >= C->tol            ? "pentagon violated at tuple"
                                                      : "hexagon violated at tuple";
    if (check_ring(C->ring).empty())
      for (int x : (p.value >= C->tol ? p.where : h.where)) what += " " + std::to_string(x);
    j["error"] = what;
  }
  emit(cfg, j);
  return ok ? 0 : 1;
}

int cmd_rep(const Config& cfg) {
  CategoryPtr C = load(cfg);
  CategoryPtr T = cfg.doubled ? doubled(C) : C;
  json out;
  out["category"] = C->name;
  out["doubled"] = cfg.doubled;
  json per = json::array();
  for (int g : genus_range(cfg.genus)) {
    GenusRep rep = build_rep(*T, g, {cfg.cap_dim, false});
    json r;
    r["genus"] = g;
    r["dim"] = rep.dim;
    const RankReport cm = commutant(rep);
    r["commutant_dim"] = cm.dim;
    r["commutant_smallest_kept"] = cm.smallest_kept;
    r["commutant_largest_dropped"] = cm.largest_dropped;
    r["irreducible"] = cm.dim == 1;
    if (cfg.doubled) {
      const FixedSpace fs = invariant_subspace(rep);
      r["fixed_space_dim"] = fs.rank.dim;
      r["fixed_smallest_kept"] = fs.rank.smallest_kept;
      r["fixed_largest_dropped"] = fs.rank.largest_dropped;
    }
    json gens = json::object();
    for (size_t k = 0; k < rep.gens.size(); ++k) gens[rep.names[k]] = to_json(rep.gens[k]);
    r["generators"] = gens;
    per.push_back(r);
  }
  out["genera"] = per;
  return emit(cfg, out);
}

AlgebraObject doubled_algebra(const Config& cfg, CategoryPtr C, CategoryPtr D) {
  if (cfg.zunit || cfg.algebra.empty()) return z_unit_algebra(C, D);
  AlgebraObject B = load_algebra(cfg, C, D);
  if (B.C != D) throw std::invalid_argument("correlator needs an algebra over the doubled category");
  return B;
}

int cmd_correlator(const Config& cfg) {
  CategoryPtr C = load(cfg);
  CategoryPtr D = doubled(C);
  AlgebraObject B = doubled_algebra(cfg, C, D);
  if (!B.frobenius) B = induce_frobenius(B);
  const PhiPairing ph = phi(B);
  if (!(ph.min_singular > D->tol)) {
    std::cerr << "algebra is degenerate (smallest pairing singular value " << ph.min_singular << ")\n";
    return 1;
  }
  json out;
  out["category"] = C->name;
  json per = json::array();
  for (int g : genus_range(cfg.genus)) {
    const Correlator c = correlator(B, g);
    json r;
    r["genus"] = g;
    if (g == 0) {
      r["value"] = to_json(c.scalar);
      r["invariance_residual"] = 0.0;
    } else {
      GenusRep rep = build_rep(*D, g, {cfg.cap_dim, false});
      double res = 0;
      for (const Mat& M : rep.gens) res = std::max(res, (M * c.flat - c.flat).cwiseAbs().maxCoeff());
      r["components"] = to_json(c.flat);
      json blocks = json::array();
      for (const auto& m : c.blocks) {
        json lab = json::array();
        for (int x : m) lab.push_back(D->ring.labels[x]);
        blocks.push_back(lab);
      }
      r["blocks"] = blocks;
      r["invariance_residual"] = res;
      r["generators_checked"] = rep.gens.size();
    }
    per.push_back(r);
  }
  out["genera"] = per;
  return emit(cfg, out);
}

json verification_json(const CentreVerification& v) {
  return {{"associativity", v.algebra.associativity},
          {"unitality", v.algebra.unitality},
          {"commutativity", v.algebra.commutativity},
          {"frobenius", v.frobenius.frobenius},
          {"counit", v.frobenius.counit},
          {"haploid", v.predicates.haploid},
          {"symmetric", v.predicates.symmetric},
          {"nondegenerate", v.nondegenerate},
          {"phi_min_singular", v.phi_min_singular},
          {"twist_residual", v.modular.theta},
          {"s_invariance_residual", v.modular.s_invariance},
          {"dim", to_json(v.dim)},
          {"dim_residual", v.dim_residual},
          {"diagonal_pattern", v.diagonal_pattern},
          {"idempotent_residual", v.idempotent}};
}

int cmd_centre(const Config& cfg) {
  CategoryPtr C = load(cfg);
  CategoryPtr D = doubled(C);
  CentreResult r;
  if (cfg.zunit) {
    r = z_unit(C, D);
  } else {
    AlgebraObject A = cfg.algebra.empty() ? unit_algebra(C) : load_algebra(cfg, C, D);
    r = full_centre(A, D);
  }
  json out;
  out["category"] = C->name;
  out["source"] = cfg.zunit ? "z_unit" : (cfg.algebra.empty() ? "unit" : cfg.algebra);
  out["verification"] = verification_json(r.verification);
  out["passed"] = r.verification.passed(1e-8);
  json mult = json::object();
  for (int l = 0; l < D->size(); ++l)
    if (r.algebra.mult[l]) mult[D->ring.labels[l]] = r.algebra.mult[l];
  out["object"] = mult;
  out["algebra"] = algebra_to_json(r.algebra);
  emit(cfg, out);
  return 0;
}

int cmd_grading(const Config& cfg) {
  CategoryPtr C = load(cfg);
  const GradingData g = grading(C->ring);
  json out;
  out["category"] = C->name;
  json ad = json::array();
  for (int i : g.I_ad) ad.push_back(C->ring.labels[i]);
  out["I_ad"] = ad;
  out["group_order"] = g.G.size();
  out["group_table"] = g.G.mul;
  json part = json::object(), deg = json::object();
  for (int i = 0; i < C->size(); ++i) {
    part[C->ring.labels[i]] = g.partition[i];
    if (g.in_ad[i]) deg[C->ring.labels[i]] = g.n[i];
  }
  out["partition"] = part;
  out["filtration_degree"] = deg;
  out["N"] = g.N;
  out["N_le_rank"] = g.N <= C->size();
  std::string err = check_partition_respects_fusion(g) + check_transitive_components(g) + check_filtration_monotone(g);
  out["checks"] = err.empty() ? "ok" : err;
  emit(cfg, out);
  return err.empty() ? 0 : 1;
}

int cmd_classify(const Config& cfg) {
  CategoryPtr C = load(cfg);
  ClassifyOptions o;
  o.tol = C->tol;
  o.genus_cap = cfg.genus_cap;
  o.cap_dim = cfg.audit_cap;
  ClassifyReport rep;
  if (cfg.selftest_twist) {
    CategoryPtr D = doubled(C);
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> mod(0.5, 2.0), ph(-M_PI, M_PI);
    std::vector<cx> f(C->size());
    for (auto& z : f) z = std::polar(mod(rng), ph(rng));
    rep = classify_centre(twist_algebra(z_unit_algebra(C, D), C, f), C, o);
    json fj = json::array();
    for (cx z : f) fj.push_back(to_json(z));
    rep.certificate["selftest_twist"] = {{"seed", cfg.seed}, {"f", fj}};
  } else {
    CategoryPtr D = doubled(C);
    AlgebraObject A = cfg.algebra.empty() ? unit_algebra(C) : load_algebra(cfg, C, D);
    if (A.C != C) throw std::invalid_argument("classify needs an algebra over the base category");
    rep = classify(A, o);
  }
  rep.certificate["exit_code"] = rep.exit_code;
  emit(cfg, rep.certificate);
  return rep.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mfckit: modular fusion category toolkit"};
  app.require_subcommand(1);
  Config cfg;
  auto common = [&](CLI::App* sc) {
    sc->add_option("category", cfg.category, "category file or bundled name")->required();
    sc->add_option("--tol", cfg.tol, "tolerance override")->check(CLI::PositiveNumber);
    sc->add_option("--out", cfg.out, "write the report to a file");
  };
  auto* v = app.add_subcommand("validate", "pentagon, hexagon and derived data");
  common(v);
  auto* r = app.add_subcommand("rep", "mapping class group representation and commutant");
  common(r);
  r->add_option("--genus", cfg.genus, "genus or range a-b");
  r->add_flag("--doubled", cfg.doubled, "use the doubled category and report the fixed space");
  r->add_option("--cap-dim", cfg.cap_dim, "largest allowed dimension");
  auto* c = app.add_subcommand("correlator", "modular invariant vectors of an algebra over the doubled category");
  common(c);
  c->add_option("--genus", cfg.genus, "genus or range a-b");
  c->add_flag("--zunit", cfg.zunit, "use Z(1)");
  c->add_option("--algebra", cfg.algebra, "algebra file");
  c->add_option("--cap-dim", cfg.cap_dim, "largest allowed dimension");
  auto* z = app.add_subcommand("centre", "full centre of an algebra (default: the unit)");
  common(z);
  z->add_flag("--zunit", cfg.zunit, "report the closed-form Z(1)");
  z->add_option("--algebra", cfg.algebra, "algebra file");
  auto* gr = app.add_subcommand("grading", "universal grading group and filtration");
  common(gr);
  auto* cl = app.add_subcommand("classify", "decide Z(A) = Z(1) and write a certificate");
  common(cl);
  cl->add_option("--algebra", cfg.algebra, "algebra file (default: the unit)");
  cl->add_flag("--selftest-twist", cfg.selftest_twist, "classify a randomly twisted Z(1)");
  cl->add_option("--seed", cfg.seed, "seed for the twist");
  cl->add_option("--genus", cfg.genus_cap, "highest genus for the irreducibility audit");
  cl->add_option("--cap-dim", cfg.audit_cap, "largest V_g dimension for the audit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  try {
    if (*v) return cmd_validate(cfg);
    if (*r) return cmd_rep(cfg);
    if (*c) return cmd_correlator(cfg);
    if (*z) return cmd_centre(cfg);
    if (*gr) return cmd_grading(cfg);
    if (*cl) return cmd_classify(cfg);
  } catch (const DimensionCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
