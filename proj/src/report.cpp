#include <cmath>
#include <cstdio>
#include <sstream>

#include "mfckit/io.hpp"

namespace mfc {

namespace {

void put_string(std::ostringstream& os, const std::string& s) { os << json(s).dump(); }

void put_number(std::ostringstream& os, double v) {
  if (!std::isfinite(v)) {
    os << "null";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  os << buf;
}

void emit(std::ostringstream& os, const json& j, int indent, int depth) {
  auto nl = [&](int d) {
    if (indent < 0) return;
    os << '\n' << std::string(static_cast<size_t>(indent * d), ' ');
  };
  // short arrays of scalars stay on one line
  auto flat = [](const json& a) {
    if (!a.is_array() || a.size() > 12) return false;
    for (const auto& x : a)
      if (x.is_structured()) return false;
    return true;
  };
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',';
        first = false;
        nl(depth + 1);
        put_string(os, it.key());
        os << (indent < 0 ? ":" : ": ");
        emit(os, it.value(), indent, depth + 1);
      }
      nl(depth);
      os << '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      bool one_line = flat(j) || indent < 0;
      os << '[';
      bool first = true;
      for (const auto& x : j) {
        if (!first) os << (one_line ? (indent < 0 ? "," : ", ") : ",");
        first = false;
        if (!one_line) nl(depth + 1);
        emit(os, x, one_line ? -1 : indent, depth + 1);
      }
      if (!one_line) nl(depth);
      os << ']';
      return;
    }
    case json::value_t::number_float:
      put_number(os, j.get<double>());
      return;
    default:
      os << j.dump();
  }
}

}  // namespace

std::string dump17(const json& j, int indent) {
  std::ostringstream os;
  emit(os, j, indent, 0);
  return os.str();
}

json to_json(cx z) { return json::array({z.real(), z.imag()}); }

json to_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (int k = 0; k < m.cols(); ++k) r.push_back(to_json(m(i, k)));
    rows.push_back(r);
  }
  return rows;
}

json to_json(const Vec& v) {
  json out = json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

json category_to_json(const Category& C) {
  const int n = C.size();
  json j;
  j["name"] = C.name;
  j["labels"] = C.ring.labels;
  j["dual"] = C.ring.dual;
  json fus = json::array();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (C.n(a, b, c)) fus.push_back({a, b, c, C.n(a, b, c)});
  j["fusion"] = fus;
  json F = json::array();
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      for (int c = 1; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const FBlock& B = C.block(a, b, c, d);
          for (size_t r = 0; r < B.rows.size(); ++r)
            for (size_t k = 0; k < B.cols.size(); ++k) {
              cx v = B.F(static_cast<int>(r), static_cast<int>(k));
              F.push_back({a, b, c, d, B.rows[r], B.cols[k], v.real(), v.imag()});
            }
        }
  j["F"] = F;
  json R = json::array();
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      for (int c : C.channels(a, b)) {
        cx v = C.R(a, b, c);
        R.push_back({a, b, c, v.real(), v.imag()});
      }
  j["R"] = R;
  j["tol"] = C.tol;
  return j;
}

}  // namespace mfc
