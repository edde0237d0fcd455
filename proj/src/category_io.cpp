#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mfckit/category.hpp"

namespace mfc {

using nlohmann::json;

namespace {

CategoryPtr parse(const json& j, const LoadOptions& opt, std::string name) {
  FusionRing ring;
  if (!j.contains("labels") || !j.contains("dual")) throw LoadError("category file needs 'labels' and 'dual'");
  ring.labels = j.at("labels").get<std::vector<std::string>>();
  ring.dual = j.at("dual").get<std::vector<int>>();
  const size_t n = ring.labels.size();
  ring.N.assign(n * n * n, 0);
  for (const auto& q : j.value("fusion", json::array())) {
    if (!q.is_array() || q.size() != 4) throw LoadError("fusion entries must be [a,b,c,N]");
    int a = q[0], b = q[1], c = q[2], m = q[3];
    if (a < 0 || b < 0 || c < 0 || size_t(a) >= n || size_t(b) >= n || size_t(c) >= n)
      throw LoadError("fusion entry label out of range");
    ring.N[(a * n + b) * n + c] = m;
  }
  std::vector<std::array<int, 6>> fidx;
  std::vector<cx> fval;
  for (const auto& q : j.value("F", json::array())) {
    if (!q.is_array() || q.size() != 8) throw LoadError("F entries must be [a,b,c,d,e,f,re,im]");
    std::array<int, 6> k;
    for (int t = 0; t < 6; ++t) k[t] = q[t].get<int>();
    fidx.push_back(k);
    fval.emplace_back(q[6].get<double>(), q[7].get<double>());
  }
  std::vector<std::array<int, 3>> ridx;
  std::vector<cx> rval;
  for (const auto& q : j.value("R", json::array())) {
    if (!q.is_array() || q.size() != 5) throw LoadError("R entries must be [a,b,c,re,im]");
    ridx.push_back({q[0].get<int>(), q[1].get<int>(), q[2].get<int>()});
    rval.emplace_back(q[3].get<double>(), q[4].get<double>());
  }
  double tol = j.value("tol", 1e-9);
  if (opt.tol > 0) tol = opt.tol;
  if (!(tol > 0)) throw LoadError("tolerance must be positive");
  return Category::from_data(std::move(ring), fidx, fval, ridx, rval, tol, opt.mirror, opt.validate,
                             std::move(name));
}

}  // namespace

CategoryPtr load_category_text(const std::string& text, const LoadOptions& opt) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw LoadError(std::string("parse error: ") + e.what());
  }
  try {
    return parse(j, opt, j.value("name", std::string("unnamed")));
  } catch (const json::exception& e) {
    throw LoadError(std::string("parse error: ") + e.what());
  }
}

CategoryPtr load_category_file(const std::string& path, const LoadOptions& opt) {
  std::string p = resolve_category_path(path);
  std::ifstream in(p);
  if (!in) throw LoadError("cannot open category file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  json j;
  try {
    j = json::parse(ss.str());
    return parse(j, opt, std::filesystem::path(p).stem().string());
  } catch (const json::exception& e) {
    throw LoadError(std::string("parse error: ") + e.what());
  }
}

std::string resolve_category_path(const std::string& s) {
  namespace fs = std::filesystem;
  if (fs::exists(s)) return s;
  std::vector<std::string> dirs;
  if (const char* env = std::getenv("MFCKIT_DATA")) dirs.emplace_back(env);
#ifdef MFCKIT_DEFAULT_DATA
  dirs.emplace_back(MFCKIT_DEFAULT_DATA);
#endif
  for (const auto& d : dirs) {
    for (const std::string& cand : {s, s + ".json"}) {
      fs::path p = fs::path(d) / cand;
      if (fs::exists(p)) return p.string();
      p = fs::path(d) / fs::path(cand).filename();
      if (fs::exists(p)) return p.string();
    }
  }
  return s;
}

}  // namespace mfc
