#pragma once

// Borel subalgebras of gl(n|n) with standard even part, labelled by
// partitions in the n x n box.  The dictionary used throughout:
//
//   partition b = (b_1 >= ... >= b_n)  <->  eps/delta sequence of length 2n
//   b_{n+1-i} = number of deltas preceding eps_i
//
// so () is eps^n delta^n (all eps_i - delta_j positive) and (n^n) is
// delta^n eps^n.  Positions in the sequence give the shuffle tau, and
// eps_a - eps_b is positive iff tau(a) < tau(b).

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dsgl/superalg.hpp"
#include "dsgl/weight.hpp"

namespace dsgl {

enum class Symbol : char { Eps = 'e', Delta = 'd' };

using EpsDeltaSequence = std::vector<Symbol>;

inline std::string sequence_str(const EpsDeltaSequence& s) {
  std::string out;
  for (auto c : s) out += static_cast<char>(c);
  return out;
}

class BorelLabel {
 public:
  BorelLabel() = default;
  BorelLabel(int n, std::vector<int> parts) : n_(n), parts_(std::move(parts)) { normalize(); }

  int rank() const { return n_; }
  const std::vector<int>& parts() const { return parts_; }
  /// b_r for r = 1..n, zero past the length.
  int part(int r) const {
    return r <= static_cast<int>(parts_.size()) ? parts_[static_cast<std::size_t>(r - 1)] : 0;
  }
  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }
  /// Transpose partition: b'_j = #{r : b_r >= j}.
  int conjugate_part(int j) const {
    int c = 0;
    for (int p : parts_)
      if (p >= j) ++c;
    return c;
  }

  auto operator<=>(const BorelLabel& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    return parts_ <=> o.parts_;
  }
  bool operator==(const BorelLabel&) const = default;

  /// Exponent notation, e.g. (21^2), (3^22), ().  Parts >= 10 fall back to commas.
  std::string str() const {
    if (parts_.empty()) return "()";
    bool commas = std::any_of(parts_.begin(), parts_.end(), [](int p) { return p >= 10; });
    std::string s = "(";
    std::size_t k = 0;
    bool first = true;
    while (k < parts_.size()) {
      std::size_t e = k;
      while (e < parts_.size() && parts_[e] == parts_[k]) ++e;
      if (commas && !first) s += ",";
      s += std::to_string(parts_[k]);
      if (e - k > 1) s += "^" + std::to_string(e - k);
      first = false;
      k = e;
    }
    return s + ")";
  }

 private:
  void normalize() {
    if (n_ < 0) throw std::invalid_argument("rank must be >= 0");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    if (static_cast<int>(parts_.size()) > n_)
      throw std::invalid_argument("partition has more than n parts");
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (parts_[k] < 0 || parts_[k] > n_)
        throw std::invalid_argument("partition part outside 0..n");
      if (k > 0 && parts_[k] > parts_[k - 1])
        throw std::invalid_argument("partition must be weakly decreasing");
    }
  }

  int n_ = 1;
  std::vector<int> parts_;
};

/// Parse "(21^2)", "()", "(3^22)" or comma form "(2,1,1)"; parentheses optional.
inline BorelLabel parse_label(int n, const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw std::invalid_argument("label: missing ')' at position " + std::to_string(s.size()));
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> parts;
  bool commas = s.find(',') != std::string::npos;
  std::size_t k = 0;
  auto read_int = [&](std::size_t& pos, bool multi) {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw std::invalid_argument("label: expected digit at position " + std::to_string(pos + 1));
    int v = 0;
    do {
      v = v * 10 + (s[pos] - '0');
      ++pos;
    } while (multi && pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])));
    return v;
  };
  while (k < s.size()) {
    int part = read_int(k, commas);
    int mult = 1;
    if (k < s.size() && s[k] == '^') {
      ++k;
      // compact form "(3^22)" = (3,3,2): exponents are single digits
      mult = read_int(k, commas);
    }
    for (int r = 0; r < mult; ++r) parts.push_back(part);
    if (commas && k < s.size()) {
      if (s[k] != ',') throw std::invalid_argument("label: expected ',' at position " + std::to_string(k + 1));
      ++k;
    }
  }
  return BorelLabel(n, parts);
}

inline EpsDeltaSequence to_sequence(const BorelLabel& b) {
  int n = b.rank();
  EpsDeltaSequence seq;
  int deltas = 0;
  for (int i = 1; i <= n; ++i) {
    int before = b.part(n + 1 - i);
    while (deltas < before) {
      seq.push_back(Symbol::Delta);
      ++deltas;
    }
    seq.push_back(Symbol::Eps);
  }
  while (deltas < n) {
    seq.push_back(Symbol::Delta);
    ++deltas;
  }
  return seq;
}

inline BorelLabel from_sequence(const EpsDeltaSequence& seq) {
  int n = static_cast<int>(seq.size()) / 2;
  if (static_cast<int>(seq.size()) != 2 * n || n < 1) throw std::invalid_argument("sequence length must be 2n");
  std::vector<int> before_eps;
  int deltas = 0;
  for (auto c : seq) {
    if (c == Symbol::Delta) ++deltas;
    else before_eps.push_back(deltas);
  }
  if (static_cast<int>(before_eps.size()) != n) throw std::invalid_argument("sequence needs n eps symbols");
  std::vector<int> parts(before_eps.rbegin(), before_eps.rend());
  return BorelLabel(n, parts);
}

/// Functional indices (1..2n) in sequence order: position p holds order[p-1].
inline std::vector<int> functional_order(const BorelLabel& b) {
  int n = b.rank();
  std::vector<int> order;
  int e = 0, d = 0;
  for (auto c : to_sequence(b)) order.push_back(c == Symbol::Eps ? ++e : n + ++d);
  return order;
}

/// tau(k) for k = 1..2n (index 0 unused).
inline std::vector<int> shuffle(const BorelLabel& b) {
  auto order = functional_order(b);
  std::vector<int> tau(order.size() + 1, 0);
  for (std::size_t p = 0; p < order.size(); ++p) tau[static_cast<std::size_t>(order[p])] = static_cast<int>(p) + 1;
  return tau;
}

inline bool is_positive(const BorelLabel& b, const Root& r) {
  auto tau = shuffle(b);
  return tau[static_cast<std::size_t>(r.i)] < tau[static_cast<std::size_t>(r.j)];
}

inline std::set<Root> positive_roots(const BorelLabel& b) {
  auto tau = shuffle(b);
  std::set<Root> out;
  for (const auto& r : all_roots(b.rank()))
    if (tau[static_cast<std::size_t>(r.i)] < tau[static_cast<std::size_t>(r.j)]) out.insert(r);
  return out;
}

inline std::set<Root> odd_positive_roots(const BorelLabel& b) {
  std::set<Root> out;
  for (const auto& r : positive_roots(b))
    if (r.is_odd()) out.insert(r);
  return out;
}

/// Inverse of positive_roots: recover the label from a positive system with
/// standard even part.
inline BorelLabel label_from_positive_roots(int n, const std::set<Root>& pos) {
  if (pos.size() != static_cast<std::size_t>(n * (2 * n - 1)))
    throw std::invalid_argument("not a positive system: wrong root count");
  std::vector<int> outranks(static_cast<std::size_t>(2 * n + 1), 0);
  for (const auto& r : pos) ++outranks[static_cast<std::size_t>(r.i)];
  std::vector<int> order(static_cast<std::size_t>(2 * n));
  std::vector<bool> seen(static_cast<std::size_t>(2 * n), false);
  for (int k = 1; k <= 2 * n; ++k) {
    auto p = static_cast<std::size_t>(2 * n - 1 - outranks[static_cast<std::size_t>(k)]);
    if (seen[p]) throw std::invalid_argument("not a positive system: inconsistent order");
    seen[p] = true;
    order[p] = k;
  }
  EpsDeltaSequence seq;
  int last_e = 0, last_d = n;
  for (int k : order) {
    if (k <= n) {
      if (k != ++last_e) throw std::invalid_argument("even part is not standard");
      seq.push_back(Symbol::Eps);
    } else {
      if (k != ++last_d) throw std::invalid_argument("even part is not standard");
      seq.push_back(Symbol::Delta);
    }
  }
  return from_sequence(seq);
}

/// The 2n-1 simple roots, consecutive differences in sequence order.
inline std::vector<Root> simple_roots(const BorelLabel& b) {
  auto order = functional_order(b);
  std::vector<Root> out;
  for (std::size_t p = 0; p + 1 < order.size(); ++p) out.push_back({b.rank(), order[p], order[p + 1]});
  return out;
}

inline std::vector<Root> odd_simple_roots(const BorelLabel& b) {
  std::vector<Root> out;
  for (const auto& r : simple_roots(b))
    if (r.is_odd()) out.push_back(r);
  return out;
}

inline std::vector<BorelLabel> enumerate_borels(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<BorelLabel> out;
  std::vector<int> parts;
  // parts in nonincreasing order, each <= the previous
  auto rec = [&](auto&& self, int remaining_rows, int max_part) -> void {
    out.emplace_back(n, parts);
    if (remaining_rows == 0) return;
    for (int p = 1; p <= max_part; ++p) {
      parts.push_back(p);
      self(self, remaining_rows - 1, p);
      parts.pop_back();
    }
  };
  rec(rec, n, n);
  std::sort(out.begin(), out.end());
  return out;
}

/// Labels differing by one corner box (odd reflections).
inline std::vector<BorelLabel> odd_reflection_neighbors(const BorelLabel& b) {
  int n = b.rank();
  std::vector<BorelLabel> out;
  for (int r = 1; r <= n; ++r) {
    std::vector<int> padded;
    for (int k = 1; k <= n; ++k) padded.push_back(b.part(k));
    auto& cur = padded[static_cast<std::size_t>(r - 1)];
    int above = r == 1 ? n : b.part(r - 1);
    int below = b.part(r + 1);
    if (cur < n && cur < above) {
      auto add = padded;
      ++add[static_cast<std::size_t>(r - 1)];
      out.emplace_back(n, add);
    }
    if (cur > 0 && cur > below) {
      auto rem = padded;
      --rem[static_cast<std::size_t>(r - 1)];
      out.emplace_back(n, rem);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// rho^b from the closed form
///   sum_i (b_{n+1-i} - i + 1) eps_i + sum_j (n - j - b'_j) delta_j.
inline Weight rho(const BorelLabel& b) {
  int n = b.rank();
  Weight w(n);
  for (int i = 1; i <= n; ++i) w.coeffs[static_cast<std::size_t>(i - 1)] = b.part(n + 1 - i) - i + 1;
  for (int j = 1; j <= n; ++j) w.coeffs[static_cast<std::size_t>(n + j - 1)] = n - j - b.conjugate_part(j);
  return w;
}

/// rho^b = rho_0 - rho_1^b + ber/2 assembled from explicit half sums over
/// the positive roots.  Independent route used to cross-check rho().
inline Weight rho_from_half_sums(const BorelLabel& b) {
  int n = b.rank();
  Weight twice(n);
  for (const auto& r : positive_roots(b)) {
    if (r.is_odd()) twice -= Weight::of_root(r);
    else twice += Weight::of_root(r);
  }
  twice += Weight::ber(n);
  Weight out(n);
  for (std::size_t k = 0; k < twice.coeffs.size(); ++k) {
    if (twice.coeffs[k] % 2 != 0) throw std::logic_error("rho is not integral");
    out.coeffs[k] = twice.coeffs[k] / 2;
  }
  return out;
}

/// Positional height functional: xi(eps_k) = 2n - tau(k).  Every b-positive
/// root has xi >= 1.
inline std::vector<int> height_functional(const BorelLabel& b) {
  auto tau = shuffle(b);
  std::vector<int> xi(tau.size(), 0);
  for (std::size_t k = 1; k < tau.size(); ++k) xi[k] = 2 * b.rank() - tau[k];
  return xi;
}

inline long evaluate(const std::vector<int>& xi, const Weight& w) {
  long s = 0;
  for (int k = 1; k <= 2 * w.n; ++k) s += static_cast<long>(xi[static_cast<std::size_t>(k)]) * w[k];
  return s;
}

inline long evaluate(const std::vector<int>& xi, const Root& r) {
  return xi[static_cast<std::size_t>(r.i)] - xi[static_cast<std::size_t>(r.j)];
}

inline BorelLabel distinguished_o(int n) {
  std::vector<int> parts;
  for (int k = n - 1; k >= 1; --k) parts.push_back(k);
  return BorelLabel(n, parts);
}

inline BorelLabel distinguished_i(int n) {
  std::vector<int> parts;
  for (int k = n; k >= 1; --k) parts.push_back(k);
  return BorelLabel(n, parts);
}

/// b_gamma = (n-1+g_n, ..., 1+g_2, g_1).
inline BorelLabel hypercube_label(const std::vector<int>& gamma) {
  int n = static_cast<int>(gamma.size());
  std::vector<int> parts;
  for (int r = 1; r <= n; ++r) {
    int g = gamma[static_cast<std::size_t>(n - r)];
    if (g != 0 && g != 1) throw std::invalid_argument("gamma entries must be 0 or 1");
    parts.push_back(n - r + g);
  }
  return BorelLabel(n, parts);
}

/// b1 * b2 = (b2_1 + 1, ..., b2_{n-1} + 1, b1_1).
inline BorelLabel star(const BorelLabel& b1, const BorelLabel& b2) {
  if (b1.rank() != 1) throw std::invalid_argument("star: first factor must have rank 1");
  int n = b2.rank() + 1;
  std::vector<int> parts;
  for (int r = 1; r <= n - 1; ++r) parts.push_back(b2.part(r) + 1);
  parts.push_back(b1.part(1));
  return BorelLabel(n, parts);
}

/// Complement in the n x n box: the sequence read backwards.
inline BorelLabel complement_label(const BorelLabel& b) {
  auto s = to_sequence(b);
  std::reverse(s.begin(), s.end());
  return from_sequence(s);
}

/// Antidiagonal transpose: the sequence read backwards with eps <-> delta.
inline BorelLabel antitranspose_label(const BorelLabel& b) {
  auto s = to_sequence(b);
  std::reverse(s.begin(), s.end());
  for (auto& c : s) c = c == Symbol::Eps ? Symbol::Delta : Symbol::Eps;
  return from_sequence(s);
}

/// The Borel of gl(J) cut out by b, J = all indices except the two of alpha:
/// positive roots of b avoiding alpha's indices, relabelled by order.
inline BorelLabel restrict_label(const BorelLabel& b, const Root& alpha) {
  if (!alpha.is_odd()) throw std::invalid_argument("restrict_label: root must be odd");
  if (b.rank() < 1) throw std::invalid_argument("restrict_label: rank must be >= 1");
  if (b.rank() == 1) return BorelLabel(0, {});
  auto emb = IndexEmbedding::complement_of(b.rank(), alpha.i, alpha.j);
  std::set<Root> small;
  for (const auto& r : positive_roots(b))
    if (emb.contains(r.i) && emb.contains(r.j)) small.insert(Root{emb.rank(), emb.local(r.i), emb.local(r.j)});
  return label_from_positive_roots(emb.rank(), small);
}

inline std::vector<std::pair<BorelLabel, BorelLabel>> borel_graph_edges(int n) {
  std::vector<std::pair<BorelLabel, BorelLabel>> edges;
  for (const auto& b : enumerate_borels(n))
    for (const auto& c : odd_reflection_neighbors(b))
      if (b < c) edges.emplace_back(b, c);
  return edges;
}

enum class GraphFormat { Dot, Json };

/// DOT or JSON adjacency rendering of the odd-reflection graph.
inline std::string emit_borel_graph(int n, GraphFormat format) {
  if (n < 1 || n > 6) throw std::invalid_argument("borel graph: n must be in 1..6");
  auto labels = enumerate_borels(n);
  std::ostringstream os;
  if (format == GraphFormat::Dot) {
    os << "graph L" << n << n << " {\n";
    for (const auto& b : labels) os << "  \"" << b.str() << "\";\n";
    for (const auto& [a, b] : borel_graph_edges(n)) os << "  \"" << a.str() << "\" -- \"" << b.str() << "\";\n";
    os << "}\n";
  } else {
    os << "{\"n\":" << n << ",\"vertices\":[";
    for (std::size_t k = 0; k < labels.size(); ++k) os << (k ? "," : "") << "\"" << labels[k].str() << "\"";
    os << "],\"adjacency\":{";
    for (std::size_t k = 0; k < labels.size(); ++k) {
      os << (k ? "," : "") << "\"" << labels[k].str() << "\":[";
      auto nb = odd_reflection_neighbors(labels[k]);
      for (std::size_t m = 0; m < nb.size(); ++m) os << (m ? "," : "") << "\"" << nb[m].str() << "\"";
      os << "]";
    }
    os << "}}\n";
  }
  return os.str();
}

}  // namespace dsgl
