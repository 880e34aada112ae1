#pragma once

// Weights, the rho-shifted tuple encoding, atypicality, antidominance, the
// parity function, coordinate projections and truncated formal characters.

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dsgl/borelcomb.hpp"
#include "dsgl/weight.hpp"

namespace dsgl {

/// (x, y) with (eps_i, eps_i) = 1 and (delta_j, delta_j) = -1.
inline long bilinear_form(const Weight& x, const Weight& y) {
  x.check(y);
  long s = 0;
  for (int i = 1; i <= x.n; ++i) s += x.eps(i) * y.eps(i);
  for (int j = 1; j <= x.n; ++j) s -= x.del(j) * y.del(j);
  return s;
}

inline long bilinear_form(const Weight& x, const Root& r) { return bilinear_form(x, Weight::of_root(r)); }

/// (lambda_1..lambda_n | lambda_{n+1}..lambda_{2n}) with lambda_k = (lambda + rho, eps_k).
struct RhoTuple {
  int n = 0;
  std::vector<long> values;

  RhoTuple() = default;
  RhoTuple(int rank, std::vector<long> v) : n(rank), values(std::move(v)) {
    if (values.size() != static_cast<std::size_t>(2 * n)) throw std::invalid_argument("tuple needs 2n entries");
  }
  long operator[](int k) const { return values.at(static_cast<std::size_t>(k - 1)); }
  auto operator<=>(const RhoTuple&) const = default;

  std::string str() const {
    std::string s = "(";
    for (int k = 1; k <= 2 * n; ++k) {
      if (k > 1) s += k == n + 1 ? "|" : ",";
      s += std::to_string(values[static_cast<std::size_t>(k - 1)]);
    }
    return s + ")";
  }
};

/// Parse "1,2|2,1" (parentheses optional).  Errors name the offending position.
inline RhoTuple parse_tuple(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  std::size_t start = 0, end = s.size();
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw std::invalid_argument("tuple: missing ')' at position " + std::to_string(s.size()));
    start = 1;
    end = s.size() - 1;
  }
  std::vector<long> first, second;
  bool in_second = false;
  std::size_t k = start;
  while (k < end) {
    std::size_t begin = k;
    if (s[k] == '-' || s[k] == '+') ++k;
    if (k >= end || !std::isdigit(static_cast<unsigned char>(s[k])))
      throw std::invalid_argument("tuple: expected integer at position " + std::to_string(begin + 1));
    while (k < end && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
    (in_second ? second : first).push_back(std::stol(s.substr(begin, k - begin)));
    if (k < end) {
      if (s[k] == '|') {
        if (in_second) throw std::invalid_argument("tuple: second '|' at position " + std::to_string(k + 1));
        in_second = true;
      } else if (s[k] != ',') {
        throw std::invalid_argument("tuple: unexpected '" + std::string(1, s[k]) + "' at position " + std::to_string(k + 1));
      }
      ++k;
    }
  }
  if (!in_second) throw std::invalid_argument("tuple: missing '|'");
  if (first.size() != second.size() || first.empty())
    throw std::invalid_argument("tuple: blocks must have equal nonzero length");
  std::vector<long> v = first;
  v.insert(v.end(), second.begin(), second.end());
  return RhoTuple(static_cast<int>(first.size()), v);
}

/// The weight sum t_i eps_i - sum t_{n+j} delta_j, i.e. the weight w with (w, eps_k) = t_k.
inline Weight tuple_weight(const RhoTuple& t) {
  Weight w(t.n);
  for (int i = 1; i <= t.n; ++i) w.coeffs[static_cast<std::size_t>(i - 1)] = t[i];
  for (int j = 1; j <= t.n; ++j) w.coeffs[static_cast<std::size_t>(t.n + j - 1)] = -t[t.n + j];
  return w;
}

inline RhoTuple to_tuple(const Weight& lambda) {
  Weight shifted = lambda + rho(BorelLabel(lambda.n, {}));
  std::vector<long> v;
  for (int i = 1; i <= lambda.n; ++i) v.push_back(shifted.eps(i));
  for (int j = 1; j <= lambda.n; ++j) v.push_back(-shifted.del(j));
  return RhoTuple(lambda.n, v);
}

/// Highest weight of M^b(t): lambda + rho - rho^b where lambda has tuple t.
inline Weight from_tuple(const RhoTuple& t, const BorelLabel& b) {
  if (b.rank() != t.n) throw std::invalid_argument("from_tuple: rank mismatch");
  return tuple_weight(t) - rho(b);
}

/// Maximal matching between equal values of the two blocks.
inline int atypicality(const RhoTuple& t) {
  std::map<long, std::pair<int, int>> counts;
  for (int i = 1; i <= t.n; ++i) ++counts[t[i]].first;
  for (int j = 1; j <= t.n; ++j) ++counts[t[t.n + j]].second;
  int a = 0;
  for (const auto& [v, c] : counts) a += std::min(c.first, c.second);
  return a;
}

inline bool is_antidominant(const RhoTuple& t) {
  for (int i = 1; i < t.n; ++i)
    if (t[i] > t[i + 1]) return false;
  for (int j = 1; j < t.n; ++j)
    if (t[t.n + j] < t[t.n + j + 1]) return false;
  return true;
}

inline RhoTuple antidominant_representative(const RhoTuple& t) {
  std::vector<long> v = t.values;
  auto mid = v.begin() + t.n;
  std::sort(v.begin(), mid);
  std::sort(mid, v.end(), std::greater<>());
  return RhoTuple(t.n, v);
}

/// par(lambda) = sum of delta coefficients mod 2.
inline Parity par(const Weight& w) {
  long s = 0;
  for (int j = 1; j <= w.n; ++j) s += w.del(j);
  return parity_of(s);
}

inline Weight pr_alpha(const Weight& w, const Root& alpha) {
  if (!alpha.is_odd()) throw std::invalid_argument("pr_alpha: root must be odd");
  if (alpha.n != w.n) throw std::invalid_argument("pr_alpha: rank mismatch");
  return IndexEmbedding::complement_of(w.n, alpha.i, alpha.j).restrict(w);
}

inline IndexEmbedding levi_I(int n) { return IndexEmbedding::of(n, {1, n + 1}); }
inline IndexEmbedding levi_J(int n) { return IndexEmbedding::complement_of(n, 1, n + 1); }

inline Weight pr_I(const Weight& w) { return levi_I(w.n).restrict(w); }
inline Weight pr_J(const Weight& w) { return levi_J(w.n).restrict(w); }

inline RhoTuple tuple_pr_J(const RhoTuple& t) {
  std::vector<long> v;
  for (int k = 2; k <= t.n; ++k) v.push_back(t[k]);
  for (int k = t.n + 2; k <= 2 * t.n; ++k) v.push_back(t[k]);
  return RhoTuple(t.n - 1, v);
}

inline int diagonal_matches(const RhoTuple& t) {
  int m = 0;
  for (int i = 1; i <= t.n; ++i)
    if (t[i] == t[t.n + i]) ++m;
  return m;
}

inline bool in_lambda_maBG(const RhoTuple& t) { return diagonal_matches(t) == t.n; }
inline bool in_lambda_BG(const RhoTuple& t) { return atypicality(t) == diagonal_matches(t); }

/// Region on which a truncated character / module is complete:
/// all mu with xi(top - mu) <= depth.
struct Region {
  Weight top;
  std::vector<int> xi;
  long depth = 0;

  long depth_of(const Weight& mu) const { return evaluate(xi, top - mu); }
  bool contains(const Weight& mu) const { return depth_of(mu) <= depth; }
};

struct Dims {
  long even = 0;
  long odd = 0;
  long total() const { return even + odd; }
  long super() const { return even - odd; }
  void add(Parity p, long d) { (p == Parity::Even ? even : odd) += d; }
  bool operator==(const Dims&) const = default;
};

struct Character {
  std::map<Weight, Dims> support;
  Region region;

  Dims at(const Weight& mu) const {
    auto it = support.find(mu);
    return it == support.end() ? Dims{} : it->second;
  }
};

namespace detail {

// e^top * prod_even (1 - e^{beta})^{-1} * prod_odd (1 + e^{beta}), beta the
// lowering roots, truncated to the region.  Parity starts at par(top) and
// flips with every odd factor.
inline Character product_character(const Region& region, const std::vector<Root>& even_lowering,
                                   const std::vector<Root>& odd_lowering) {
  std::map<Weight, std::pair<long, long>> acc;  // (parity-0 count, parity-1 count) relative to top
  if (region.depth >= 0) acc[region.top] = {1, 0};
  for (const auto& beta : odd_lowering) {
    long cost = -evaluate(region.xi, beta);
    if (cost < 1) throw std::invalid_argument("lowering root with non-positive depth cost");
    auto next = acc;
    for (const auto& [mu, c] : acc) {
      Weight nu = mu + beta;
      if (!region.contains(nu)) continue;
      auto& slot = next[nu];
      slot.first += c.second;
      slot.second += c.first;
    }
    acc = std::move(next);
  }
  for (const auto& beta : even_lowering) {
    long cost = -evaluate(region.xi, beta);
    if (cost < 1) throw std::invalid_argument("lowering root with non-positive depth cost");
    auto next = acc;
    for (const auto& [mu, c] : acc) {
      Weight nu = mu + beta;
      while (region.contains(nu)) {
        auto& slot = next[nu];
        slot.first += c.first;
        slot.second += c.second;
        nu = nu + beta;
      }
    }
    acc = std::move(next);
  }
  Character ch;
  ch.region = region;
  Parity top_par = par(region.top);
  for (const auto& [mu, c] : acc) {
    Dims d;
    d.add(top_par, c.first);
    d.add(top_par + Parity::Odd, c.second);
    if (d.total() > 0) ch.support[mu] = d;
  }
  return ch;
}

}  // namespace detail

inline std::vector<Root> even_positive_standard(int n) {
  std::vector<Root> out;
  for (const auto& r : all_roots(n))
    if (!r.is_odd() && r.i < r.j) out.push_back(r);
  return out;
}

/// Truncated character of M^b(t) (highest weight from_tuple(t, b)).
inline Character verma_character(const BorelLabel& b, const RhoTuple& t, long depth) {
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");
  Region region{from_tuple(t, b), height_functional(b), depth};
  std::vector<Root> even, odd;
  for (const auto& r : positive_roots(b)) (r.is_odd() ? odd : even).push_back(r.negated());
  return detail::product_character(region, even, odd);
}

/// Odd roots positive for both b_o and b_i.
inline std::vector<Root> common_odd_positive(int n) {
  auto a = odd_positive_roots(distinguished_o(n));
  auto b = odd_positive_roots(distinguished_i(n));
  std::vector<Root> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// ch BG(t) = ch L^o(t) * prod_{even+} (1-e^{-a})^{-1} * prod_{common odd} (1+e^{-g}).
inline Character bg_character(const RhoTuple& t, long depth) {
  int n = t.n;
  Region region{tuple_weight(t), height_functional(distinguished_o(n)), depth};
  std::vector<Root> even, odd;
  for (const auto& r : even_positive_standard(n)) even.push_back(r.negated());
  for (const auto& r : common_odd_positive(n)) odd.push_back(r.negated());
  for (int k = 1; k <= n; ++k)
    if (t[k] != t[n + k]) odd.push_back(Root{n, n + k, k});  // typical factor: L = M
  return detail::product_character(region, even, odd);
}

/// Character of the simple gl(1|1)-module L^{()}(a|b).
inline Character gl11_simple_character(long a, long b) {
  RhoTuple t(1, {a, b});
  Region region{tuple_weight(t), height_functional(BorelLabel(1, {})), 1};
  std::vector<Root> odd;
  if (a != b) odd.push_back(Root{1, 2, 1});
  return detail::product_character(region, {}, odd);
}

/// [M^o(lambda) : L^o(mu)] as a product of gl(1|1) factor multiplicities.
inline long bg_multiplicity(const RhoTuple& lambda, const RhoTuple& mu) {
  if (lambda.n != mu.n) throw std::invalid_argument("bg_multiplicity: rank mismatch");
  long m = 1;
  for (int k = 1; k <= lambda.n; ++k) {
    long c = lambda[k], d = lambda[lambda.n + k];
    long c2 = mu[k], d2 = mu[mu.n + k];
    bool top = c2 == c && d2 == d;
    bool below = c == d && c2 == c - 1 && d2 == d - 1;
    if (!top && !below) return 0;
  }
  return m;
}

}  // namespace dsgl
