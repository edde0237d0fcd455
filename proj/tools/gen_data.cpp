// Writes the bundled category files. Every candidate is loaded back through the
// validating loader, so a file is only written if pentagon and hexagon hold.
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include "mfckit/category.hpp"
#include "mfckit/io.hpp"

using namespace mfc;

namespace {

const double PI = std::acos(-1.0);

struct Raw {
  std::string name;
  std::vector<std::string> labels;
  std::vector<int> dual;
  std::function<int(int, int, int)> N;
  std::function<cx(int, int, int, int, int, int)> F;
  std::function<cx(int, int, int)> R;
};

json raw_json(const Raw& r) {
  const int n = static_cast<int>(r.labels.size());
  json j;
  j["name"] = r.name;
  j["labels"] = r.labels;
  j["dual"] = r.dual;
  json fus = json::array(), F = json::array(), R = json::array();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (r.N(a, b, c)) fus.push_back({a, b, c, r.N(a, b, c)});
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      for (int c = 1; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e)
            for (int f = 0; f < n; ++f)
              if (r.N(a, b, e) && r.N(e, c, d) && r.N(b, c, f) && r.N(a, f, d)) {
                cx v = r.F(a, b, c, d, e, f);
                F.push_back({a, b, c, d, e, f, v.real(), v.imag()});
              }
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (r.N(a, b, c)) {
          cx v = r.R(a, b, c);
          R.push_back({a, b, c, v.real(), v.imag()});
        }
  j["fusion"] = fus;
  j["F"] = F;
  j["R"] = R;
  j["tol"] = 1e-9;
  return j;
}

// Returns the first candidate that loads cleanly.
json first_valid(const std::vector<Raw>& cands) {
  std::string last;
  for (const auto& r : cands) {
    json j = raw_json(r);
    try {
      load_category_text(dump17(j, -1));
      return j;
    } catch (const LoadError& e) {
      last = e.what();
    }
  }
  throw std::runtime_error("no valid candidate: " + last);
}

Raw trivial() {
  Raw r;
  r.name = "trivial";
  r.labels = {"1"};
  r.dual = {0};
  r.N = [](int a, int b, int c) { return a == 0 && b == 0 && c == 0; };
  r.F = [](int, int, int, int, int, int) { return cx(1); };
  r.R = [](int, int, int) { return cx(1); };
  return r;
}

int z2(int a, int b, int c) { return (a ^ b) == c; }

std::vector<Raw> semion() {
  std::vector<Raw> out;
  for (int conj = 0; conj < 2; ++conj) {
    Raw r;
    r.name = "semion";
    r.labels = {"1", "s"};
    r.dual = {0, 1};
    r.N = z2;
    r.F = [](int a, int b, int c, int, int, int) { return (a && b && c) ? cx(-1) : cx(1); };
    cx i(0, conj ? -1 : 1);
    r.R = [i](int a, int b, int) { return (a && b) ? i : cx(1); };
    out.push_back(r);
  }
  return out;
}

std::vector<Raw> ising() {
  // 0 = 1, 1 = psi, 2 = sigma
  auto N = [](int a, int b, int c) -> int {
    if (a == 0) return b == c;
    if (b == 0) return a == c;
    if (a == 1 && b == 1) return c == 0;
    if ((a == 1) != (b == 1)) return c == 2;
    return c == 0 || c == 1;  // sigma sigma
  };
  auto F = [](int a, int b, int c, int d, int e, int f) -> cx {
    if (a == 2 && b == 2 && c == 2 && d == 2) return (e == 1 && f == 1 ? -1.0 : 1.0) / std::sqrt(2.0);
    if (a == 1 && b == 2 && c == 1 && d == 2) return -1.0;
    if (a == 2 && b == 1 && c == 2 && d == 1) return -1.0;
    (void)e;
    (void)f;
    return 1.0;
  };
  std::vector<Raw> out;
  for (int conj = 0; conj < 2; ++conj) {
    Raw r;
    r.name = "ising";
    r.labels = {"1", "psi", "sigma"};
    r.dual = {0, 1, 2};
    r.N = N;
    r.F = F;
    r.R = [conj](int a, int b, int c) -> cx {
      cx v = 1.0;
      if (a == 2 && b == 2) v = std::polar(1.0, c == 0 ? -PI / 8 : 3 * PI / 8);
      else if (a + b == 3) v = cx(0, -1);
      else if (a == 1 && b == 1) v = -1.0;
      return conj ? std::conj(v) : v;
    };
    out.push_back(r);
  }
  return out;
}

int fib_N(int a, int b, int c) {
  if (a == 0) return b == c;
  if (b == 0) return a == c;
  return 1;  // tau tau = 1 + tau
  (void)c;
}

std::vector<Raw> fibonacci() {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  std::vector<Raw> out;
  for (int conj = 0; conj < 2; ++conj) {
    Raw r;
    r.name = "fibonacci";
    r.labels = {"1", "tau"};
    r.dual = {0, 1};
    r.N = fib_N;
    r.F = [phi](int a, int b, int c, int d, int e, int f) -> cx {
      if (a && b && c && d) {
        if (e == 0 && f == 0) return 1 / phi;
        if (e == 1 && f == 1) return -1 / phi;
        return 1 / std::sqrt(phi);
      }
      return 1.0;
    };
    r.R = [conj](int a, int b, int c) -> cx {
      cx v = 1.0;
      if (a && b) v = std::polar(1.0, c == 0 ? -4 * PI / 5 : 3 * PI / 5);
      return conj ? std::conj(v) : v;
    };
    out.push_back(r);
  }
  return out;
}

std::vector<Raw> fibonacci_galois() {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  std::vector<Raw> out;
  for (int m = 0; m < 5; ++m)
    for (int k = 0; k < 5; ++k)
      for (int sgn = 0; sgn < 4; ++sgn) {
        Raw r;
        r.name = "fibonacci_galois";
        r.labels = {"1", "tau"};
        r.dual = {0, 1};
        r.N = fib_N;
        r.F = [phi](int a, int b, int c, int d, int e, int f) -> cx {
          if (a && b && c && d) {
            if (e == 0 && f == 0) return -phi;
            if (e == 1 && f == 1) return phi;
            return cx(0, std::sqrt(phi));
          }
          return 1.0;
        };
        cx r1 = std::polar(sgn & 1 ? -1.0 : 1.0, 2 * PI * m / 5);
        cx rt = std::polar(sgn & 2 ? -1.0 : 1.0, 2 * PI * k / 5);
        r.R = [r1, rt](int a, int b, int c) -> cx {
          if (a && b) return c == 0 ? r1 : rt;
          return 1.0;
        };
        out.push_back(r);
      }
  return out;
}

// quantum integer for r = k+2
struct QInt {
  int r;
  double operator()(int n) const { return std::sin(PI * n / r) / std::sin(PI / r); }
  double fact(int n) const {
    double p = 1;
    for (int i = 1; i <= n; ++i) p *= (*this)(i);
    return p;
  }
};

// arguments are twice the spin
int su2_N(int k, int a, int b, int c) {
  if (a > k || b > k || c > k) return 0;
  if ((a + b + c) % 2) return 0;
  if (c < std::abs(a - b) || c > a + b || a + b + c > 2 * k) return 0;
  return 1;
}

double tri(const QInt& q, int a, int b, int c) {
  return std::sqrt(q.fact((a + b - c) / 2) * q.fact((a - b + c) / 2) * q.fact((-a + b + c) / 2) /
                   q.fact((a + b + c) / 2 + 1));
}

// q-6j symbol {a b e; c d f} with twice-spin arguments
double sixj(const QInt& q, int a, int b, int e, int c, int d, int f) {
  double pre = tri(q, a, b, e) * tri(q, e, c, d) * tri(q, b, c, f) * tri(q, a, f, d);
  int lo = std::max({a + b + e, e + c + d, b + c + f, a + f + d}) / 2;
  int hi = std::min({a + b + c + d, a + c + e + f, b + d + e + f}) / 2;
  double sum = 0;
  for (int z = lo; z <= hi; ++z) {
    double den = q.fact(z - (a + b + e) / 2) * q.fact(z - (e + c + d) / 2) * q.fact(z - (b + c + f) / 2) *
                 q.fact(z - (a + f + d) / 2) * q.fact((a + b + c + d) / 2 - z) *
                 q.fact((a + c + e + f) / 2 - z) * q.fact((b + d + e + f) / 2 - z);
    sum += (z % 2 ? -1.0 : 1.0) * q.fact(z + 1) / den;
  }
  return pre * sum;
}

std::vector<Raw> su2(int k) {
  QInt q{k + 2};
  const int r = k + 2;
  std::vector<Raw> out;
  for (int variant = 0; variant < 4; ++variant) {
    Raw R;
    R.name = "su2_" + std::to_string(k);
    for (int a = 0; a <= k; ++a) {
      R.labels.push_back(a % 2 ? std::to_string(a) + "/2" : std::to_string(a / 2));
      R.dual.push_back(a);
    }
    R.N = [k](int a, int b, int c) { return su2_N(k, a, b, c); };
    R.F = [q](int a, int b, int c, int d, int e, int f) -> cx {
      double sign = ((a + b + c + d) / 2) % 2 ? -1.0 : 1.0;
      return sign * std::sqrt(q(e + 1) * q(f + 1)) * sixj(q, a, b, e, c, d, f);
    };
    bool conj = variant & 1, plain_sign = variant & 2;
    R.R = [r, conj, plain_sign](int a, int b, int c) -> cx {
      double sign = (!plain_sign && ((a + b - c) / 2) % 2) ? -1.0 : 1.0;
      double ex = (c * (c + 2) - a * (a + 2) - b * (b + 2)) / 8.0;
      cx v = std::polar(sign, 2 * PI * ex / r);
      return conj ? std::conj(v) : v;
    };
    out.push_back(R);
  }
  return out;
}

void write(const std::string& dir, const json& j) {
  std::string path = dir + "/" + j["name"].get<std::string>() + ".json";
  std::ofstream(path) << dump17(j, 1) << "\n";
  auto C = load_category_file(path);
  std::cout << path << ": labels " << C->size() << ", pentagon " << validate_pentagon(*C).value
            << ", hexagon " << validate_hexagon(*C).value << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "data";
  try {
    write(dir, first_valid({trivial()}));
    write(dir, first_valid(semion()));
    write(dir, first_valid(ising()));
    write(dir, first_valid(fibonacci()));
    write(dir, first_valid(fibonacci_galois()));
    for (int k = 1; k <= 10; ++k) write(dir, first_valid(su2(k)));
  } catch (const std::exception& e) {
    std::cerr << "gen_data: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
