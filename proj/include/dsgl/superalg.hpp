#pragma once

// gl(n|n): matrix units, parity, supercommutator, roots, the principal good
// grading and the two involutive automorphisms (c) and (at).
// Indices are 1-based; 1..n are even, n+1..2n are odd.

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dsgl/exactq.hpp"

namespace dsgl {

enum class Parity : int { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) & 1);
}
inline Parity parity_of(long v) { return (v & 1) ? Parity::Odd : Parity::Even; }
inline int bit(Parity p) { return static_cast<int>(p); }
inline const char* parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

inline int index_parity(int i, int n) { return i > n ? 1 : 0; }

struct MatrixUnit {
  int i = 1;
  int j = 1;
  auto operator<=>(const MatrixUnit&) const = default;
};

inline Parity unit_parity(MatrixUnit u, int n) {
  return parity_of(index_parity(u.i, n) + index_parity(u.j, n));
}

inline void check_unit(MatrixUnit u, int n) {
  if (u.i < 1 || u.j < 1 || u.i > 2 * n || u.j > 2 * n)
    throw std::out_of_range("matrix unit index outside 1.." + std::to_string(2 * n));
}

/// Name of the basis functional eps_k (k <= n) or delta_{k-n}.
inline std::string functional_name(int k, int n) {
  return k <= n ? "e" + std::to_string(k) : "d" + std::to_string(k - n);
}

inline std::string unit_name(MatrixUnit u) {
  return "e_{" + std::to_string(u.i) + "," + std::to_string(u.j) + "}";
}

class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(int n) : n_(n) {}

  static AlgebraElement unit(int n, int i, int j, const Rational& c = 1) {
    AlgebraElement a(n);
    a.add({i, j}, c);
    return a;
  }

  int rank() const { return n_; }
  const std::map<MatrixUnit, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(MatrixUnit u) const {
    auto it = terms_.find(u);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(MatrixUnit u, const Rational& c) {
    check_unit(u, n_);
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(u, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    check_rank(o);
    for (const auto& [u, c] : o.terms_) add(u, c);
    return *this;
  }
  AlgebraElement operator+(const AlgebraElement& o) const { return AlgebraElement(*this) += o; }
  AlgebraElement operator-(const AlgebraElement& o) const { return *this + o.scaled(-1); }

  AlgebraElement scaled(const Rational& s) const {
    AlgebraElement out(n_);
    for (const auto& [u, c] : terms_) out.add(u, c * s);
    return out;
  }

  /// Parity when all terms share one; nullopt for the zero element or mixed terms.
  std::optional<Parity> parity() const {
    std::optional<Parity> p;
    for (const auto& [u, c] : terms_) {
      Parity q = unit_parity(u, n_);
      if (p && *p != q) return std::nullopt;
      p = q;
    }
    return p;
  }

  bool operator==(const AlgebraElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [u, c] : terms_) {
      if (!s.empty()) s += c > 0 ? " + " : " - ";
      else if (c < 0) s += "-";
      Rational a = abs(c);
      if (a != 1) s += a.get_str() + "*";
      s += unit_name(u);
    }
    return s;
  }

  void check_rank(const AlgebraElement& o) const {
    if (n_ != o.n_) throw std::invalid_argument("rank mismatch between algebra elements");
  }

 private:
  int n_ = 0;
  std::map<MatrixUnit, Rational> terms_;
};

/// [e_ij, e_kl] = d_jk e_il - (-1)^{(|i|+|j|)(|k|+|l|)} d_li e_kj
inline AlgebraElement bracket_units(int n, MatrixUnit a, MatrixUnit b) {
  AlgebraElement out(n);
  if (a.j == b.i) out.add({a.i, b.j}, 1);
  if (b.j == a.i) {
    int sign = (bit(unit_parity(a, n)) && bit(unit_parity(b, n))) ? -1 : 1;
    out.add({b.i, a.j}, -sign);
  }
  return out;
}

inline AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b) {
  a.check_rank(b);
  AlgebraElement out(a.rank());
  for (const auto& [u, c] : a.terms())
    for (const auto& [v, d] : b.terms()) out += bracket_units(a.rank(), u, v).scaled(c * d);
  return out;
}

/// Principal good grading.
inline int good_degree(MatrixUnit u, int n) {
  bool row_even = u.i <= n;
  bool col_even = u.j <= n;
  if (row_even == col_even) return u.j - u.i;
  if (row_even) return u.j - u.i - n;
  return u.j - u.i + n;
}

/// A root eps_i - eps_j (i != j, delta_k = eps_{n+k}); root vector e_ij.
struct Root {
  int n = 1;
  int i = 1;
  int j = 2;

  auto operator<=>(const Root&) const = default;

  Parity parity() const { return unit_parity({i, j}, n); }
  bool is_odd() const { return parity() == Parity::Odd; }
  MatrixUnit root_vector() const { return {i, j}; }
  Root negated() const { return {n, j, i}; }

  std::vector<int> coordinates() const {
    std::vector<int> c(2 * n, 0);
    c[i - 1] = 1;
    c[j - 1] = -1;
    return c;
  }

  std::string str() const { return functional_name(i, n) + "-" + functional_name(j, n); }
};

inline std::optional<Root> root_of(MatrixUnit u, int n) {
  check_unit(u, n);
  if (u.i == u.j) return std::nullopt;
  return Root{n, u.i, u.j};
}

/// All roots of gl(n|n), ordered by (i, j).
inline std::vector<Root> all_roots(int n) {
  std::vector<Root> out;
  for (int i = 1; i <= 2 * n; ++i)
    for (int j = 1; j <= 2 * n; ++j)
      if (i != j) out.push_back({n, i, j});
  return out;
}

struct SignedUnit {
  int sign = 1;
  MatrixUnit unit;
  auto operator<=>(const SignedUnit&) const = default;
};

namespace detail {
// e_ij lies in the odd part of the (n^n) Borel: delta_{i-n} - eps_j.
inline bool in_full_box_odd_borel(MatrixUnit u, int n) { return u.i > n && u.j <= n; }
}  // namespace detail

/// (.)^c : e_ij -> +-e_{w0(j), w0(i)}, w0 the longest element of S_n x S_n.
/// Induces taking the complement of a partition inside the n x n box.
inline SignedUnit automorphism_c(MatrixUnit u, int n) {
  check_unit(u, n);
  auto w0 = [n](int k) { return k <= n ? n + 1 - k : 3 * n + 1 - k; };
  int sign = detail::in_full_box_odd_borel(u, n) ? 1 : -1;
  return {sign, {w0(u.j), w0(u.i)}};
}

/// (.)^at : e_ij -> +-e_{2n-j+1, 2n-i+1}; antidiagonal transpose of partitions.
inline SignedUnit automorphism_at(MatrixUnit u, int n) {
  check_unit(u, n);
  int sign = detail::in_full_box_odd_borel(u, n) ? 1 : -1;
  return {sign, {2 * n - u.j + 1, 2 * n - u.i + 1}};
}

template <class UnitMap>
AlgebraElement apply_unit_map(const AlgebraElement& a, UnitMap&& f) {
  AlgebraElement out(a.rank());
  for (const auto& [u, c] : a.terms()) {
    SignedUnit s = f(u, a.rank());
    out.add(s.unit, c * s.sign);
  }
  return out;
}

/// The root of the image root vector under a signed unit map.
template <class UnitMap>
Root map_root(const Root& r, UnitMap&& f) {
  SignedUnit s = f(r.root_vector(), r.n);
  return Root{r.n, s.unit.i, s.unit.j};
}

}  // namespace dsgl
