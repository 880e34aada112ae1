#pragma once

// Truncated induced modules Ind_s^a V over gl(n|n): PBW monomial bases over an
// ordered complement, a memoised straightening action, and the data for the
// Verma, BG and parabolic inductions used elsewhere.

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dsgl/borelcomb.hpp"
#include "dsgl/exactq.hpp"
#include "dsgl/superalg.hpp"
#include "dsgl/weight.hpp"
#include "dsgl/weightlat.hpp"

namespace dsgl {

struct TruncationOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidDatum : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Ind from s = h + (inducing roots) to the ambient algebra h + (ambient roots).
/// Without an inner module, s acts on the vacuum by hw on h and by 0 on roots.
struct InductionDatum {
  int n = 1;
  std::string name;
  std::vector<Root> ambient_roots;
  std::vector<Root> inducing_roots;
  std::vector<Root> complement_order;
  Weight hw;
  Parity parity_shift = Parity::Even;
  std::vector<int> height;  // xi, indexed 1..2n
};

/// Sorted by (row, column) of the root vector.
inline std::vector<Root> pbw_order(std::vector<Root> roots) {
  std::sort(roots.begin(), roots.end());
  return roots;
}

inline std::vector<Root> levi_IJ_roots(int n) {
  IndexEmbedding i = levi_I(n), j = levi_J(n);
  std::vector<Root> out;
  for (const auto& r : all_roots(n))
    if ((i.contains(r.i) && i.contains(r.j)) || (j.contains(r.i) && j.contains(r.j))) out.push_back(r);
  return out;
}

namespace detail {

inline std::vector<Root> as_vector(const std::set<Root>& s) { return {s.begin(), s.end()}; }

inline std::vector<Root> minus(const std::vector<Root>& all, const std::vector<Root>& drop) {
  std::set<Root> d(drop.begin(), drop.end());
  std::vector<Root> out;
  for (const auto& r : all)
    if (!d.count(r)) out.push_back(r);
  return out;
}

inline InductionDatum borel_style(const std::string& name, int n, std::vector<Root> inducing, const Weight& hw,
                                  const std::vector<int>& height) {
  InductionDatum d;
  d.n = n;
  d.name = name;
  d.ambient_roots = all_roots(n);
  std::sort(inducing.begin(), inducing.end());
  inducing.erase(std::unique(inducing.begin(), inducing.end()), inducing.end());
  d.inducing_roots = inducing;
  d.complement_order = pbw_order(minus(d.ambient_roots, inducing));
  d.hw = hw;
  d.parity_shift = par(hw);
  d.height = height;
  return d;
}

}  // namespace detail

inline InductionDatum verma_datum_weight(const BorelLabel& b, const Weight& hw) {
  return detail::borel_style("M^" + b.str() + "[" + hw.str() + "]", b.rank(), detail::as_vector(positive_roots(b)), hw,
                             height_functional(b));
}

inline InductionDatum verma_datum(const BorelLabel& b, const RhoTuple& t) {
  InductionDatum d = verma_datum_weight(b, from_tuple(t, b));
  d.name = "M^" + b.str() + t.str();
  return d;
}

/// One gl(1|1) factor of a BG-module, as a tuple pair (c|d).
struct BGFactor {
  enum class Kind { VermaO, VermaI, Simple };
  Kind kind = Kind::Simple;
  long c = 0;
  long d = 0;

  /// factor highest weight in gl(1|1) coordinates (eps, delta)
  std::pair<long, long> highest_weight() const {
    if (kind == Kind::VermaI) return {c - 1, -d + 1};
    return {c, -d};
  }
  std::string str() const {
    std::string body = "(" + std::to_string(c) + "|" + std::to_string(d) + ")";
    switch (kind) {
      case Kind::VermaO: return "M^()" + body;
      case Kind::VermaI: return "M^(1)" + body;
      case Kind::Simple: return "L^()" + body;
    }
    return body;
  }
};

/// BG(X_1 [x] ... [x] X_n) as induction from the degree >= 0 part plus the
/// factor Borels; simple factors must be atypical (typical L = M^()).
inline InductionDatum bg_factor_datum(const std::vector<BGFactor>& factors) {
  int n = static_cast<int>(factors.size());
  if (n < 1) throw InvalidDatum("bg datum needs at least one factor");
  std::vector<Root> inducing;
  for (const auto& r : all_roots(n))
    if (good_degree(r.root_vector(), n) > 0) inducing.push_back(r);
  Weight hw(n);
  std::vector<int> gamma;
  std::string name = "BG(";
  for (int k = 1; k <= n; ++k) {
    const auto& f = factors[static_cast<std::size_t>(k - 1)];
    if (f.kind == BGFactor::Kind::Simple && f.c != f.d)
      throw InvalidDatum("simple factor " + f.str() + " is typical; use the Verma factor");
    if (f.kind != BGFactor::Kind::VermaI) inducing.push_back(Root{n, k, n + k});
    if (f.kind != BGFactor::Kind::VermaO) inducing.push_back(Root{n, n + k, k});
    auto [e, dl] = f.highest_weight();
    hw.coeffs[static_cast<std::size_t>(k - 1)] = e;
    hw.coeffs[static_cast<std::size_t>(n + k - 1)] = dl;
    gamma.push_back(f.kind == BGFactor::Kind::VermaI ? 1 : 0);
    name += (k > 1 ? "[x]" : "") + f.str();
  }
  return detail::borel_style(name + ")", n, inducing, hw, height_functional(hypercube_label(gamma)));
}

inline std::vector<BGFactor> bg_factors_of(const RhoTuple& t) {
  std::vector<BGFactor> out;
  for (int k = 1; k <= t.n; ++k) {
    long c = t[k], d = t[t.n + k];
    out.push_back({c == d ? BGFactor::Kind::Simple : BGFactor::Kind::VermaO, c, d});
  }
  return out;
}

inline InductionDatum bg_datum(const RhoTuple& t) {
  InductionDatum d = bg_factor_datum(bg_factors_of(t));
  d.name = "BG" + t.str();
  return d;
}

/// Induction from the sum of two Borel subalgebras (e.g. ()+(1)); the height
/// functional is that of the first.
inline InductionDatum borel_sum_datum(const BorelLabel& b1, const BorelLabel& b2, const Weight& hw) {
  std::vector<Root> r = detail::as_vector(positive_roots(b1));
  for (const auto& x : positive_roots(b2)) r.push_back(x);
  return detail::borel_style("Ind_" + b1.str() + "+" + b2.str() + "[" + hw.str() + "]", b1.rank(), r, hw,
                             height_functional(b1));
}

/// A module over the Levi gl(1|1)+gl(n-1|n-1): induced from the lifts of the
/// Borels b1 in L(1,1) and b2 in L(n-1,n-1).
inline InductionDatum levi_verma_datum(const BorelLabel& b1, const BorelLabel& b2, const Weight& hw) {
  int n = b2.rank() + 1;
  if (b1.rank() != 1) throw InvalidDatum("levi datum: first Borel must be in L(1,1)");
  IndexEmbedding ei = levi_I(n), ej = levi_J(n);
  InductionDatum d;
  d.n = n;
  d.name = "M^" + b1.str() + "[x]M^" + b2.str() + "[" + hw.str() + "]";
  d.ambient_roots = levi_IJ_roots(n);
  for (const auto& r : positive_roots(b1)) d.inducing_roots.push_back(ei.lift(r));
  for (const auto& r : positive_roots(b2)) d.inducing_roots.push_back(ej.lift(r));
  std::sort(d.inducing_roots.begin(), d.inducing_roots.end());
  d.complement_order = pbw_order(detail::minus(d.ambient_roots, d.inducing_roots));
  d.hw = hw;
  d.parity_shift = par(hw);
  d.height = height_functional(star(b1, b2));
  return d;
}

/// Ind from p_IJ = l_IJ + u_IJ; the inner module supplies the l_IJ action.
inline InductionDatum parabolic_IJ_datum(int n, const Weight& hw, const std::vector<int>& height) {
  IndexEmbedding ei = levi_I(n);
  InductionDatum d;
  d.n = n;
  d.name = "Ind_pIJ[" + hw.str() + "]";
  d.ambient_roots = all_roots(n);
  for (const auto& r : all_roots(n)) {
    bool in_u_minus = !ei.contains(r.i) && ei.contains(r.j);
    if (!in_u_minus) d.inducing_roots.push_back(r);
  }
  d.complement_order = pbw_order(detail::minus(d.ambient_roots, d.inducing_roots));
  d.hw = hw;
  d.parity_shift = par(hw);
  d.height = height;
  return d;
}

using Word = std::vector<int>;
using WordVector = std::map<Word, Rational>;

inline void add_into(WordVector& acc, const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = acc.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

class InducedModule {
 public:
  InducedModule(InductionDatum datum, long depth, std::shared_ptr<const InducedModule> inner = nullptr)
      : datum_(std::move(datum)), depth_(depth), inner_(std::move(inner)) {
    if (depth_ < 0) throw InvalidDatum("depth must be >= 0");
    generators_ = datum_.complement_order;
    if (inner_) {
      const auto& g = inner_->generators();
      generators_.insert(generators_.end(), g.begin(), g.end());
    }
    validate();
    enumerate();
  }

  const InductionDatum& datum() const { return datum_; }
  int rank() const { return datum_.n; }
  long depth() const { return depth_; }
  const std::vector<Root>& generators() const { return generators_; }
  std::size_t outer_count() const { return datum_.complement_order.size(); }
  Region region() const { return Region{datum_.hw, datum_.height, depth_}; }

  long cost(const Root& r) const { return -evaluate(datum_.height, r); }

  Weight weight_of(const Word& w) const {
    Weight out = datum_.hw;
    for (std::size_t k = 0; k < w.size(); ++k)
      if (w[k]) out += Weight::of_root(generators_[k]).scaled(w[k]);
    return out;
  }
  long depth_of(const Word& w) const {
    long s = 0;
    for (std::size_t k = 0; k < w.size(); ++k) s += w[k] * cost(generators_[k]);
    return s;
  }
  Parity parity_of(const Word& w) const {
    long odd = 0;
    for (std::size_t k = 0; k < w.size(); ++k)
      if (generators_[k].is_odd()) odd += w[k];
    return datum_.parity_shift + parity_of_count(odd);
  }

  /// Weights with a nonzero space, ordered by (depth, weight).
  const std::vector<Weight>& weights() const { return weight_order_; }
  const std::vector<Word>& basis(const Weight& mu) const {
    static const std::vector<Word> empty;
    auto it = spaces_.find(mu);
    return it == spaces_.end() ? empty : it->second.words;
  }
  std::size_t dim(const Weight& mu) const { return basis(mu).size(); }
  Dims dims(const Weight& mu) const {
    Dims d;
    auto it = spaces_.find(mu);
    if (it != spaces_.end()) d.add(it->second.parity, static_cast<long>(it->second.words.size()));
    return d;
  }
  std::optional<Parity> space_parity(const Weight& mu) const {
    auto it = spaces_.find(mu);
    if (it == spaces_.end()) return std::nullopt;
    return it->second.parity;
  }
  std::size_t index_of(const Word& w) const {
    const auto& sp = spaces_.at(weight_of(w));
    return sp.index.at(w);
  }
  Word vacuum() const { return Word(generators_.size(), 0); }

  /// Census as a Character on the module's region.
  Character census() const {
    Character ch;
    ch.region = region();
    for (const auto& [mu, sp] : spaces_) ch.support[mu] = dims(mu);
    return ch;
  }

  /// Straightened x * w, with no truncation check.
  WordVector apply_unit(MatrixUnit x, const Word& w) const {
    std::lock_guard lock(mutex_);
    return apply_locked(x, w);
  }

  /// g * v; every output word must lie in the truncation.
  WordVector act(const AlgebraElement& g, const WordVector& v) const {
    WordVector out;
    for (const auto& [u, c] : g.terms())
      for (const auto& [w, coeff] : v)
        for (const auto& [w2, c2] : apply_unit(u, w)) add_into(out, w2, c * coeff * c2);
    for (const auto& [w, c] : out)
      if (depth_of(w) > depth_)
        throw TruncationOverflow("action leaves the truncation: depth " + std::to_string(depth_of(w)) + " > " +
                                 std::to_string(depth_) + " at weight " + weight_of(w).str());
    return out;
  }

  /// Matrix of the unit between canonical weight-space bases, source mu.
  SparseMatrix generator_matrix(MatrixUnit g, const Weight& mu) const {
    Weight target = mu;
    if (g.i != g.j) target += Weight::of_root(Root{rank(), g.i, g.j});
    if (!region().contains(mu) || !region().contains(target))
      throw TruncationOverflow("generator " + unit_name(g) + " from " + mu.str() + " leaves the truncation");
    {
      std::lock_guard lock(mutex_);
      auto it = matrix_cache_.find({g, mu});
      if (it != matrix_cache_.end()) return it->second;
    }
    const auto& src = basis(mu);
    std::size_t rows = dim(target);
    SparseMatrix m(rows, src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      for (const auto& [w, v] : apply_unit(g, src[c])) {
        auto it = spaces_.find(target);
        if (it == spaces_.end()) throw std::logic_error("straightening produced a word outside the basis");
        m.set(it->second.index.at(w), c, v);
      }
    }
    std::lock_guard lock(mutex_);
    matrix_cache_.emplace(std::make_pair(g, mu), m);
    return m;
  }

  /// Joint kernel at mu of the simple raising operators of b.
  std::vector<Vector> singular_vectors(const BorelLabel& b, const Weight& mu) const {
    std::size_t d = dim(mu);
    if (d == 0) return {};
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : simple_roots(b)) {
      SparseMatrix m = generator_matrix(r.root_vector(), mu);
      auto rl = m.row_lists();
      rows.insert(rows.end(), rl.begin(), rl.end());
    }
    if (rows.empty()) {
      std::vector<Vector> all;
      for (std::size_t k = 0; k < d; ++k) {
        Vector v(d);
        v[k] = 1;
        all.push_back(v);
      }
      return all;
    }
    return kernel_basis(SparseMatrix::from_dense(rows));
  }

  WordVector to_words(const Weight& mu, const Vector& v) const {
    WordVector out;
    const auto& b = basis(mu);
    for (std::size_t k = 0; k < v.size(); ++k) add_into(out, b[k], v[k]);
    return out;
  }

 private:
  struct Space {
    std::vector<Word> words;
    std::map<Word, std::size_t> index;
    Parity parity = Parity::Even;
  };

  static Parity parity_of_count(long k) { return dsgl::parity_of(k); }

  bool in_list(const std::vector<Root>& list, const Root& r) const {
    return std::binary_search(list.begin(), list.end(), r);
  }

  void validate() {
    const int n = datum_.n;
    auto sorted = [](std::vector<Root> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    ambient_ = sorted(datum_.ambient_roots);
    inducing_ = sorted(datum_.inducing_roots);
    complement_sorted_ = sorted(datum_.complement_order);
    if (datum_.hw.n != n) throw InvalidDatum(datum_.name + ": weight rank mismatch");
    if (datum_.height.size() != static_cast<std::size_t>(2 * n + 1))
      throw InvalidDatum(datum_.name + ": height functional has wrong length");
    std::vector<Root> u;
    std::set_union(inducing_.begin(), inducing_.end(), complement_sorted_.begin(), complement_sorted_.end(),
                   std::back_inserter(u));
    if (u != ambient_ || inducing_.size() + complement_sorted_.size() != ambient_.size())
      throw InvalidDatum(datum_.name + ": inducing roots and complement do not partition the ambient roots");
    for (const auto& r : generators_)
      if (cost(r) < 1) throw InvalidDatum(datum_.name + ": complement root " + r.str() + " has depth cost < 1");

    auto check_closed = [&](const std::vector<Root>& set, bool allow_cartan, const char* what) {
      for (const auto& a : set)
        for (const auto& b : set) {
          AlgebraElement br = bracket_units(n, a.root_vector(), b.root_vector());
          for (const auto& [unit, c] : br.terms()) {
            if (unit.i == unit.j) {
              if (!allow_cartan)
                throw InvalidDatum(datum_.name + ": " + what + " not closed (Cartan part in [" + a.str() + ", " +
                                   b.str() + "])");
              continue;
            }
            if (!in_list(set, Root{n, unit.i, unit.j}))
              throw InvalidDatum(datum_.name + ": " + what + " not closed ([" + a.str() + ", " + b.str() + "])");
          }
        }
    };
    check_closed(inducing_, true, "inducing subalgebra");
    check_closed(complement_sorted_, false, "complement");

    if (!inner_) {
      for (const auto& a : inducing_) {
        if (!in_list(inducing_, a.negated())) continue;
        AlgebraElement h = bracket_units(n, a.root_vector(), a.negated().root_vector());
        Rational val = 0;
        for (const auto& [unit, c] : h.terms()) val += c * datum_.hw[unit.i];
        if (val != 0)
          throw InvalidDatum(datum_.name + ": weight is not one-dimensional on the inducing algebra ([" + a.str() +
                             ", " + a.negated().str() + "] acts by " + to_string(val) + ")");
      }
      return;
    }
    // the inner module's ambient is a subalgebra l, the rest of s is an ideal acting by 0
    if (inner_->rank() != n || inner_->datum().hw != datum_.hw)
      throw InvalidDatum(datum_.name + ": inner module has a different rank or highest weight");
    std::vector<Root> levi = sorted(inner_->datum().ambient_roots);
    for (const auto& r : levi)
      if (!in_list(inducing_, r)) throw InvalidDatum(datum_.name + ": inner algebra not inside the inducing algebra");
    std::vector<Root> ideal = detail::minus(inducing_, levi);
    for (const auto& a : inducing_)
      for (const auto& b : ideal) {
        AlgebraElement br = bracket_units(n, a.root_vector(), b.root_vector());
        for (const auto& [unit, c] : br.terms())
          if (unit.i == unit.j || !in_list(ideal, Root{n, unit.i, unit.j}))
            throw InvalidDatum(datum_.name + ": complement of the inner algebra is not an ideal");
      }
  }

  void enumerate() {
    Word w(generators_.size(), 0);
    enumerate_from(0, 0, w);
    for (auto& [mu, sp] : spaces_) {
      std::sort(sp.words.begin(), sp.words.end());
      sp.parity = parity_of(sp.words.front());
      for (std::size_t k = 0; k < sp.words.size(); ++k) {
        sp.index[sp.words[k]] = k;
        if (parity_of(sp.words[k]) != sp.parity) throw std::logic_error("weight space is not parity-homogeneous");
      }
      weight_order_.push_back(mu);
    }
    std::stable_sort(weight_order_.begin(), weight_order_.end(), [&](const Weight& a, const Weight& b) {
      return region().depth_of(a) < region().depth_of(b);
    });
  }

  void enumerate_from(std::size_t k, long used, Word& w) {
    if (k == generators_.size()) {
      spaces_[weight_of(w)].words.push_back(w);
      return;
    }
    long c = cost(generators_[k]);
    int cap = generators_[k].is_odd() ? 1 : static_cast<int>((depth_ - used) / c);
    for (int e = 0; e <= cap && used + e * c <= depth_; ++e) {
      w[k] = e;
      enumerate_from(k + 1, used + e * c, w);
    }
    w[k] = 0;
  }

  std::optional<std::size_t> outer_index(const Root& r) const {
    const auto& co = datum_.complement_order;
    for (std::size_t k = 0; k < co.size(); ++k)
      if (co[k] == r) return k;
    return std::nullopt;
  }

  WordVector apply_locked(MatrixUnit x, const Word& w) const {
    auto key = std::make_pair(x, w);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    WordVector out = straighten(x, w);
    memo_.emplace(std::move(key), out);
    return out;
  }

  WordVector straighten(MatrixUnit x, const Word& w) const {
    const int n = datum_.n;
    const std::size_t outer = outer_count();
    std::optional<Root> xr = root_of(x, n);
    std::optional<std::size_t> xc = xr ? outer_index(*xr) : std::nullopt;

    std::size_t k = 0;
    while (k < outer && w[k] == 0) ++k;

    WordVector out;
    if (xc && *xc <= k) {
      // x is a complement generator not after the leading factor: it is already in PBW position
      if (*xc == k && k < outer && generators_[k].is_odd()) return out;
      Word w2 = w;
      ++w2[*xc];
      out.emplace(std::move(w2), 1);
      return out;
    }
    if (k == outer) {
      // vacuum of the outer induction
      if (!xr) {
        if (inner_) return embed_inner(inner_->apply_unit(x, suffix(w)), w);
        out.emplace(w, Rational(datum_.hw[x.i]));
        if (out.begin()->second == 0) out.clear();
        return out;
      }
      if (!in_list(ambient_, *xr)) throw std::invalid_argument(unit_name(x) + " is not in the ambient algebra of " + datum_.name);
      if (!in_list(inducing_, *xr)) throw std::logic_error("complement generator missed the PBW branch");
      if (inner_ && in_list(inner_->ambient_, *xr)) return embed_inner(inner_->apply_unit(x, suffix(w)), w);
      return out;  // inducing root: acts by 0 on the vacuum
    }
    // w = f_k w' ; x f_k w' = (-1)^{|x||f_k|} f_k (x w') + [x, f_k] w'
    if (xr && !in_list(ambient_, *xr)) throw std::invalid_argument(unit_name(x) + " is not in the ambient algebra of " + datum_.name);
    MatrixUnit fk = generators_[k].root_vector();
    Word rest = w;
    --rest[k];
    int sign = (bit(unit_parity(x, n)) && bit(unit_parity(fk, n))) ? -1 : 1;
    for (const auto& [w1, c1] : apply_locked(x, rest))
      for (const auto& [w2, c2] : apply_locked(fk, w1)) add_into(out, w2, c1 * c2 * sign);
    AlgebraElement br = bracket_units(n, x, fk);
    for (const auto& [u, c] : br.terms())
      for (const auto& [w1, c1] : apply_locked(u, rest)) add_into(out, w1, c * c1);
    return out;
  }

  Word suffix(const Word& w) const { return Word(w.begin() + static_cast<std::ptrdiff_t>(outer_count()), w.end()); }

  WordVector embed_inner(const WordVector& v, const Word& w) const {
    WordVector out;
    for (const auto& [iw, c] : v) {
      Word full(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(outer_count()));
      full.insert(full.end(), iw.begin(), iw.end());
      out.emplace(std::move(full), c);
    }
    return out;
  }

  InductionDatum datum_;
  long depth_;
  std::shared_ptr<const InducedModule> inner_;
  std::vector<Root> generators_;
  std::vector<Root> ambient_, inducing_, complement_sorted_;
  std::map<Weight, Space> spaces_;
  std::vector<Weight> weight_order_;

  mutable std::recursive_mutex mutex_;
  mutable std::map<std::pair<MatrixUnit, Word>, WordVector> memo_;
  mutable std::map<std::pair<MatrixUnit, Weight>, SparseMatrix> matrix_cache_;
};

inline std::shared_ptr<const InducedModule> induce(const InductionDatum& d, long depth) {
  return std::make_shared<const InducedModule>(d, depth);
}

/// Ind from the outer datum of the inner module; the inner's own truncation is
/// irrelevant, only its straightening is used.
inline std::shared_ptr<const InducedModule> induce_module(const InductionDatum& outer,
                                                          std::shared_ptr<const InducedModule> inner, long depth) {
  return std::make_shared<const InducedModule>(outer, depth, std::move(inner));
}

}  // namespace dsgl
