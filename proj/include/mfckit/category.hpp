#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

namespace mfc {

using cx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

struct LoadError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Grothendieck ring data, general multiplicities allowed.
struct FusionRing {
  std::vector<std::string> labels;
  std::vector<int> dual;
  std::vector<int> N;  // N[(a*n+b)*n+c]

  int size() const { return static_cast<int>(labels.size()); }
  int n(int a, int b, int c) const {
    int r = size();
    return N[(static_cast<size_t>(a) * r + b) * r + c];
  }
  // channels c with N_ab^c > 0, ascending
  std::vector<int> channels(int a, int b) const;
  bool multiplicity_free() const;
};

// First violated ring axiom, empty string if none.
std::string check_ring(const FusionRing& R);

// Recoupling block for leaves a,b,c and total d: rows are e in a(x)b, cols f in b(x)c.
struct FBlock {
  std::vector<int> rows, cols;
  Mat F, Finv;  // Finv has shape cols x rows
  int row(int e) const {
    for (size_t i = 0; i < rows.size(); ++i)
      if (rows[i] == e) return static_cast<int>(i);
    return -1;
  }
  int col(int f) const {
    for (size_t i = 0; i < cols.size(); ++i)
      if (cols[i] == f) return static_cast<int>(i);
    return -1;
  }
  bool empty() const { return rows.empty(); }
};

struct Residual {
  double value = 0;
  std::vector<int> where;  // worst label tuple
};

struct LoadOptions {
  double tol = -1;       // <0 keeps the file value or the default
  bool mirror = false;   // replace every R^{ab}_c by 1/R^{ba}_c
  bool validate = true;
};

class Category : public std::enable_shared_from_this<Category> {
 public:
  FusionRing ring;
  double tol = 1e-9;
  std::string name;

  // derived
  std::vector<double> d;
  std::vector<cx> kappa;  // d_a * F[a,abar,a,a,0,0]
  std::vector<cx> theta;
  Mat s;
  cx D;

  int size() const { return ring.size(); }
  int dual(int a) const { return ring.dual[a]; }
  int n(int a, int b, int c) const { return ring.n(a, b, c); }
  const std::vector<int>& channels(int a, int b) const {
    return chan_[static_cast<size_t>(a) * size() + b];
  }

  const FBlock& block(int a, int b, int c, int d) const;
  cx F(int a, int b, int c, int d, int e, int f) const;
  cx Finv(int a, int b, int c, int d, int f, int e) const;
  cx R(int a, int b, int c) const;
  cx Rinv(int a, int b, int c) const { return 1.0 / R(b, a, c); }

  cx zig(int a) const { return F(a, dual(a), a, a, 0, 0); }
  cx zig_inv(int a) const { return Finv(a, dual(a), a, a, 0, 0); }
  cx D2() const { return D * D; }

  bool is_product() const { return static_cast<bool>(A_); }
  std::shared_ptr<const Category> factor_a() const { return A_; }
  std::shared_ptr<const Category> factor_b() const { return B_; }
  bool reversed() const { return rev_; }
  // label of the pair (a,b) in a product
  int pair(int a, int b) const { return a * B_->size() + b; }
  int first(int x) const { return x / B_->size(); }
  int second(int x) const { return x % B_->size(); }

  // Builders
  static std::shared_ptr<Category> from_data(FusionRing ring,
                                             const std::vector<std::array<int, 6>>& fidx,
                                             const std::vector<cx>& fval,
                                             const std::vector<std::array<int, 3>>& ridx,
                                             const std::vector<cx>& rval, double tol,
                                             bool mirror, bool validate, std::string name = "");
  friend std::shared_ptr<Category> deligne_product(std::shared_ptr<const Category> A,
                                                   std::shared_ptr<const Category> B, bool rev);

 private:
  void build_channels();
  void derive();

  std::vector<std::vector<int>> chan_;
  // base storage
  std::vector<FBlock> blocks_;  // n^4, only for base categories
  std::vector<cx> R_;
  // product storage
  std::shared_ptr<const Category> A_, B_;
  bool rev_ = false;
  mutable std::mutex cache_mu_;
  mutable std::unordered_map<uint64_t, FBlock> cache_;
  static const FBlock empty_block_;
};

using CategoryPtr = std::shared_ptr<const Category>;

CategoryPtr load_category_text(const std::string& text, const LoadOptions& opt = {});
CategoryPtr load_category_file(const std::string& path, const LoadOptions& opt = {});
// Resolve a bundled name ("ising") or a path; honours MFCKIT_DATA.
std::string resolve_category_path(const std::string& name_or_path);

Residual validate_pentagon(const Category& C);
Residual validate_hexagon(const Category& C);
const Mat& s_matrix(const Category& C);
std::shared_ptr<Category> deligne_product(CategoryPtr A, CategoryPtr B, bool rev);
inline CategoryPtr doubled(CategoryPtr C) { return deligne_product(C, C, true); }
bool is_pseudo_unitary(const Category& C);

// Smallest singular value of s and the residual of s * conj(s) = D^2 * duality permutation.
double modularity_gap(const Category& C);
double s_unitarity_residual(const Category& C);

}  // namespace mfc
