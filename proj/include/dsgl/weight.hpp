#pragma once

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "dsgl/superalg.hpp"

namespace dsgl {

/// Integral weight sum_k c_k eps_k over k = 1..2n, with delta_j = eps_{n+j}.
struct Weight {
  int n = 0;
  std::vector<long> coeffs;  // length 2n: eps_1..eps_n, delta_1..delta_n

  Weight() = default;
  explicit Weight(int rank) : n(rank), coeffs(2 * rank, 0) {}
  Weight(int rank, std::vector<long> c) : n(rank), coeffs(std::move(c)) {
    if (coeffs.size() != static_cast<std::size_t>(2 * n))
      throw std::invalid_argument("weight needs 2n coefficients");
  }
  static Weight from_parts(const std::vector<long>& eps, const std::vector<long>& del) {
    if (eps.size() != del.size()) throw std::invalid_argument("eps/delta length mismatch");
    Weight w(static_cast<int>(eps.size()));
    for (std::size_t k = 0; k < eps.size(); ++k) {
      w.coeffs[k] = eps[k];
      w.coeffs[eps.size() + k] = del[k];
    }
    return w;
  }
  static Weight of_root(const Root& r) {
    Weight w(r.n);
    w.coeffs[r.i - 1] += 1;
    w.coeffs[r.j - 1] -= 1;
    return w;
  }
  static Weight ber(int rank) {
    Weight w(rank);
    for (int k = 0; k < rank; ++k) {
      w.coeffs[k] = 1;
      w.coeffs[rank + k] = -1;
    }
    return w;
  }

  long eps(int i) const { return coeffs.at(i - 1); }
  long del(int j) const { return coeffs.at(n + j - 1); }
  /// Coefficient of the k-th functional, k = 1..2n.
  long operator[](int k) const { return coeffs.at(k - 1); }

  Weight& operator+=(const Weight& o) {
    check(o);
    for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] += o.coeffs[k];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check(o);
    for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] -= o.coeffs[k];
    return *this;
  }
  Weight operator+(const Weight& o) const { return Weight(*this) += o; }
  Weight operator-(const Weight& o) const { return Weight(*this) -= o; }
  Weight operator+(const Root& r) const { return *this + of_root(r); }
  Weight operator-(const Root& r) const { return *this - of_root(r); }
  Weight scaled(long s) const {
    Weight w(*this);
    for (auto& c : w.coeffs) c *= s;
    return w;
  }
  bool is_zero() const {
    for (auto c : coeffs)
      if (c != 0) return false;
    return true;
  }

  auto operator<=>(const Weight&) const = default;

  /// "-e2+d1"; "0" for the zero weight.
  std::string str() const {
    std::string s;
    for (int k = 1; k <= 2 * n; ++k) {
      long c = coeffs[k - 1];
      if (c == 0) continue;
      if (c < 0) s += "-";
      else if (!s.empty()) s += "+";
      long a = c < 0 ? -c : c;
      if (a != 1) s += std::to_string(a);
      s += functional_name(k, n);
    }
    return s.empty() ? "0" : s;
  }

  void check(const Weight& o) const {
    if (n != o.n) throw std::invalid_argument("weight rank mismatch");
  }
};

/// An ordered choice of m even and m odd indices of gl(n|n), identified with
/// gl(m|m) by order.  Used for Levi factors and for the DS subalgebra gl(J).
struct IndexEmbedding {
  int n = 0;                // ambient rank
  std::vector<int> even;    // sorted, subset of 1..n
  std::vector<int> odd;     // sorted, subset of n+1..2n

  int rank() const { return static_cast<int>(even.size()); }

  /// ambient index of the small-algebra index k (1..2m)
  int ambient(int k) const {
    int m = rank();
    return k <= m ? even.at(k - 1) : odd.at(k - m - 1);
  }
  /// small-algebra index of an ambient index, 0 if not in the subset
  int local(int a) const {
    for (std::size_t r = 0; r < even.size(); ++r)
      if (even[r] == a) return static_cast<int>(r) + 1;
    for (std::size_t r = 0; r < odd.size(); ++r)
      if (odd[r] == a) return rank() + static_cast<int>(r) + 1;
    return 0;
  }
  bool contains(int a) const { return local(a) != 0; }

  static IndexEmbedding complement_of(int n, int a, int b) {
    IndexEmbedding e{n, {}, {}};
    for (int k = 1; k <= n; ++k)
      if (k != a && k != b) e.even.push_back(k);
    for (int k = n + 1; k <= 2 * n; ++k)
      if (k != a && k != b) e.odd.push_back(k);
    if (e.even.size() != e.odd.size())
      throw std::invalid_argument("removed indices must be one even and one odd");
    return e;
  }
  static IndexEmbedding of(int n, std::vector<int> indices) {
    IndexEmbedding e{n, {}, {}};
    std::sort(indices.begin(), indices.end());
    for (int k : indices) (k <= n ? e.even : e.odd).push_back(k);
    if (e.even.size() != e.odd.size()) throw std::invalid_argument("unbalanced index set");
    return e;
  }

  Weight restrict(const Weight& w) const {
    Weight out(rank());
    for (int k = 1; k <= 2 * rank(); ++k) out.coeffs[k - 1] = w[ambient(k)];
    return out;
  }
  Weight extend(const Weight& small) const {
    Weight out(n);
    for (int k = 1; k <= 2 * rank(); ++k) out.coeffs[ambient(k) - 1] = small[k];
    return out;
  }
  MatrixUnit lift(MatrixUnit u) const { return {ambient(u.i), ambient(u.j)}; }
  Root lift(const Root& r) const { return {n, ambient(r.i), ambient(r.j)}; }
};

}  // namespace dsgl
