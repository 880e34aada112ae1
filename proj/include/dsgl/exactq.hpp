#pragma once

// Exact linear algebra over Q: sparse matrices, rank, canonical kernel /
// image bases and quotient coordinates.  Everything downstream (homology,
// singular vectors, SES checks) is built on these four operations.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dsgl {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

inline std::string to_string(const Rational& q) { return q.get_str(); }

class SparseMatrix {
 public:
  using Key = std::pair<std::size_t, std::size_t>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& dense) {
    std::size_t r = dense.size();
    std::size_t c = r == 0 ? 0 : dense.front().size();
    SparseMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (dense[i].size() != c) throw std::invalid_argument("ragged dense matrix");
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, dense[i][j]);
    }
    return m;
  }

  static SparseMatrix from_columns(std::size_t rows, const std::vector<Vector>& columns) {
    SparseMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m.set(i, j, columns[j][i]);
    }
    return m;
  }

  static SparseMatrix identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::map<Key, Rational>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  Rational at(std::size_t r, std::size_t c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Rational(0) : it->second;
  }

  void set(std::size_t r, std::size_t c, const Rational& v) {
    check_index(r, c);
    if (v == 0) {
      entries_.erase({r, c});
    } else {
      entries_[{r, c}] = v;
    }
  }

  void add(std::size_t r, std::size_t c, const Rational& v) {
    check_index(r, c);
    if (v == 0) return;
    auto [it, inserted] = entries_.try_emplace({r, c}, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) entries_.erase(it);
    }
  }

  Vector column(std::size_t c) const {
    Vector v(rows_);
    for (const auto& [k, val] : entries_)
      if (k.second == c) v[k.first] = val;
    return v;
  }

  std::vector<Vector> columns() const {
    std::vector<Vector> out(cols_, Vector(rows_));
    for (const auto& [k, val] : entries_) out[k.second][k.first] = val;
    return out;
  }

  std::vector<std::vector<Rational>> row_lists() const {
    std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols_));
    for (const auto& [k, val] : entries_) out[k.first][k.second] = val;
    return out;
  }

  SparseMatrix transpose() const {
    SparseMatrix t(cols_, rows_);
    for (const auto& [k, val] : entries_) t.entries_[{k.second, k.first}] = val;
    return t;
  }

  Vector apply(const Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
    Vector out(rows_);
    for (const auto& [k, val] : entries_) out[k.first] += val * v[k.second];
    return out;
  }

  SparseMatrix operator*(const SparseMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("multiply: dimension mismatch");
    std::vector<std::vector<std::pair<std::size_t, Rational>>> by_row(o.rows_);
    for (const auto& [k, val] : o.entries_) by_row[k.first].emplace_back(k.second, val);
    SparseMatrix out(rows_, o.cols_);
    for (const auto& [k, val] : entries_)
      for (const auto& [c, w] : by_row[k.second]) out.add(k.first, c, val * w);
    return out;
  }

  SparseMatrix operator+(const SparseMatrix& o) const {
    check_same_shape(o);
    SparseMatrix out = *this;
    for (const auto& [k, val] : o.entries_) out.add(k.first, k.second, val);
    return out;
  }

  SparseMatrix operator-(const SparseMatrix& o) const {
    check_same_shape(o);
    SparseMatrix out = *this;
    for (const auto& [k, val] : o.entries_) out.add(k.first, k.second, -val);
    return out;
  }

  SparseMatrix scaled(const Rational& s) const {
    SparseMatrix out(rows_, cols_);
    if (s == 0) return out;
    for (const auto& [k, val] : entries_) out.entries_[k] = val * s;
    return out;
  }

  bool operator==(const SparseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

 private:
  void check_index(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of bounds");
  }
  void check_same_shape(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<Key, Rational> entries_;
};

namespace detail {

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

// Reduced row echelon form of the span of the given rows.  Rows are inserted
// one at a time: reduced against the current pivots, normalised to a leading
// 1, then used to clear their pivot column from the earlier rows.  The RREF
// of a row space is unique, so the insertion order never changes the output.
struct Echelon {
  std::size_t width = 0;
  std::vector<SparseRow> rows;       // sorted by pivot column
  std::vector<std::size_t> pivots;   // pivots[k] = leading column of rows[k]

  explicit Echelon(std::size_t w) : width(w) {}

  // Returns false when the row was already in the span.
  bool insert(const Vector& dense_in) {
    Vector acc = dense_in;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      Rational coeff = acc[pivots[k]];
      if (coeff == 0) continue;
      for (const auto& [c, v] : rows[k]) acc[c] -= coeff * v;
    }
    std::size_t lead = width;
    for (std::size_t c = 0; c < width; ++c)
      if (acc[c] != 0) {
        lead = c;
        break;
      }
    if (lead == width) return false;
    Rational inv = 1 / acc[lead];
    SparseRow fresh;
    for (std::size_t c = lead; c < width; ++c)
      if (acc[c] != 0) fresh.emplace_back(c, acc[c] * inv);

    for (auto& row : rows) {
      auto it = std::lower_bound(row.begin(), row.end(), lead,
                                 [](const auto& e, std::size_t col) { return e.first < col; });
      if (it == row.end() || it->first != lead) continue;
      Rational coeff = it->second;
      std::map<std::size_t, Rational> merged(row.begin(), row.end());
      for (const auto& [c, v] : fresh) {
        auto& slot = merged[c];
        slot -= coeff * v;
      }
      row.clear();
      for (auto& [c, v] : merged)
        if (v != 0) row.emplace_back(c, std::move(v));
    }

    auto pos = std::lower_bound(pivots.begin(), pivots.end(), lead);
    auto idx = static_cast<std::size_t>(pos - pivots.begin());
    pivots.insert(pos, lead);
    rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(idx), std::move(fresh));
    return true;
  }

  Vector dense_row(std::size_t k) const {
    Vector v(width);
    for (const auto& [c, val] : rows[k]) v[c] = val;
    return v;
  }
};

inline Echelon echelon_of_rows(const SparseMatrix& m) {
  Echelon e(m.cols());
  for (const auto& row : m.row_lists()) e.insert(row);
  return e;
}

}  // namespace detail

inline std::size_t rank(const SparseMatrix& m) {
  if (m.is_zero()) return 0;
  return detail::echelon_of_rows(m).pivots.size();
}

/// Basis of ker m.  One vector per free column f of rref(m): entry 1 at f,
/// 0 at every other free column, ordered by f.
inline std::vector<Vector> kernel_basis(const SparseMatrix& m) {
  detail::Echelon e = detail::echelon_of_rows(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < e.rows.size(); ++k) {
      for (const auto& [c, val] : e.rows[k])
        if (c == f) v[e.pivots[k]] = -val;
    }
    out.push_back(std::move(v));
  }
  return out;
}

/// Basis of the column space in reduced column echelon form (leading 1s).
inline std::vector<Vector> image_basis(const SparseMatrix& m) {
  detail::Echelon e = detail::echelon_of_rows(m.transpose());
  std::vector<Vector> out;
  out.reserve(e.rows.size());
  for (std::size_t k = 0; k < e.rows.size(); ++k) out.push_back(e.dense_row(k));
  return out;
}

/// Canonical basis of span(vectors), same convention as image_basis.
inline std::vector<Vector> span_basis(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  detail::Echelon e(ambient_dim);
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw std::invalid_argument("span_basis: vector length mismatch");
    e.insert(v);
  }
  std::vector<Vector> out;
  for (std::size_t k = 0; k < e.rows.size(); ++k) out.push_back(e.dense_row(k));
  return out;
}

struct QuotientBasis {
  std::vector<Vector> representatives;  // standard vectors e_k, k a non-pivot coordinate
  std::vector<std::size_t> rep_coordinates;
  SparseMatrix projection;              // (ambient - dim sub) x ambient
};

/// Coset representatives for ambient / span(subspace) and the projection onto
/// coset coordinates.  The subspace vectors must be independent.
inline QuotientBasis quotient_basis(std::size_t ambient_dim, const std::vector<Vector>& subspace) {
  detail::Echelon e(ambient_dim);
  for (const auto& v : subspace) {
    if (v.size() != ambient_dim)
      throw std::invalid_argument("quotient_basis: vector does not lie in the ambient space");
    if (!e.insert(v))
      throw std::invalid_argument("quotient_basis: subspace vectors are dependent (stated " +
                                  std::to_string(subspace.size()) + ", rank " +
                                  std::to_string(e.pivots.size()) + ")");
  }
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto p : e.pivots) is_pivot[p] = true;

  QuotientBasis q;
  q.projection = SparseMatrix(ambient_dim - e.pivots.size(), ambient_dim);
  std::size_t t = 0;
  for (std::size_t k = 0; k < ambient_dim; ++k) {
    if (is_pivot[k]) continue;
    Vector rep(ambient_dim);
    rep[k] = 1;
    q.representatives.push_back(std::move(rep));
    q.rep_coordinates.push_back(k);
    q.projection.set(t, k, 1);
    for (std::size_t r = 0; r < e.rows.size(); ++r)
      for (const auto& [c, val] : e.rows[r])
        if (c == k) q.projection.set(t, e.pivots[r], -val);
    ++t;
  }
  return q;
}

/// Some x with a x = b, or nullopt when b is outside the column space.
inline std::optional<Vector> solve(const SparseMatrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
  // eliminate on the augmented rows [a | b]
  detail::Echelon e(a.cols() + 1);
  auto rows = a.row_lists();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Vector row = rows[r];
    row.push_back(b[r]);
    e.insert(row);
  }
  Vector x(a.cols());
  for (std::size_t k = 0; k < e.rows.size(); ++k) {
    if (e.pivots[k] == a.cols()) return std::nullopt;
    Rational rhs = 0;
    for (const auto& [c, v] : e.rows[k])
      if (c == a.cols()) rhs = v;
    x[e.pivots[k]] = rhs;
  }
  return x;
}

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

inline bool in_span(const std::vector<Vector>& basis, const Vector& v) {
  detail::Echelon e(v.size());
  for (const auto& b : basis) e.insert(b);
  return !e.insert(v);
}

}  // namespace dsgl
