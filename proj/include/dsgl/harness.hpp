#pragma once

// Verification scenarios: the DS conjecture over Borels and tuple grids, the
// star-Borel and maBG theorems, and structural invariant suites.

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dsgl/borelcomb.hpp"
#include "dsgl/dsfunctor.hpp"
#include "dsgl/envmod.hpp"
#include "dsgl/report.hpp"
#include "dsgl/superalg.hpp"
#include "dsgl/weightlat.hpp"

namespace dsgl {

inline long default_depth(int n) { return n <= 1 ? 8 : n == 2 ? 6 : 4; }

/// All tuples with entries in [lo, hi], lexicographic.
inline std::vector<RhoTuple> tuple_grid(int n, long lo, long hi) {
  std::vector<RhoTuple> out;
  std::vector<long> v(static_cast<std::size_t>(2 * n), lo);
  while (true) {
    out.emplace_back(n, v);
    std::size_t k = v.size();
    while (k > 0 && v[k - 1] == hi) v[--k] = lo;
    if (k == 0) break;
    ++v[k - 1];
  }
  return out;
}

/// Deterministic sample of tuples; every other one has t_1 = t_{n+1}.
inline std::vector<RhoTuple> tuple_sample(int n, long lo, long hi, std::size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> dist(lo, hi);
  std::vector<RhoTuple> out;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<long> v(static_cast<std::size_t>(2 * n));
    for (auto& x : v) x = dist(rng);
    if (k % 2 == 0) v[static_cast<std::size_t>(n)] = v[0];
    out.emplace_back(n, v);
  }
  return out;
}

/// One conjecture case: DS_alpha M^b(t) against M^{b_alpha}(pr_alpha hw) + Pi copy, or 0.
inline CaseResult conjecture_case(const BorelLabel& b, const Root& alpha, const RhoTuple& t, long depth) {
  CaseResult c;
  c.key = b.str() + "|" + alpha.str() + "|" + t.str();
  auto m = induce(verma_datum(b, t), depth);
  DSResult r = ds_homology(m, alpha);
  Weight hw = m->datum().hw;
  bool zero = bilinear_form(hw, alpha) != 0;
  auto [i, j] = root_indices(alpha);
  BorelLabel tb = restrict_label(b, alpha);
  Weight thw = IndexEmbedding::complement_of(b.rank(), i, j).restrict(hw);
  CertReport rep = certify_verma_iso(r, tb, thw, zero);
  c.verdict = rep.verdict;
  c.detail = (zero ? "(l,a)!=0: " : "(l,a)=0: ") + rep.detail;
  if (rep.census_flipped) c.detail += " [parity orientation flipped]";
  return c;
}

struct ConjectureParams {
  int n = 2;
  std::vector<BorelLabel> borels;  // empty = all
  std::optional<Root> alpha;       // empty = every odd simple root
  long lo = -2, hi = 2;
  long depth = -1;                 // -1 = default for n
  std::size_t sample = 0;          // 0 = full grid
  unsigned seed = 1;
};

inline ScenarioReport verify_conjecture(const ConjectureParams& p) {
  Stopwatch sw;
  ScenarioReport rep;
  rep.scenario = "conjecture";
  long depth = p.depth < 0 ? default_depth(p.n) : p.depth;
  std::vector<BorelLabel> borels = p.borels.empty() ? enumerate_borels(p.n) : p.borels;
  std::vector<RhoTuple> tuples = p.sample ? tuple_sample(p.n, p.lo, p.hi, p.sample, p.seed) : tuple_grid(p.n, p.lo, p.hi);
  rep.params = {{"n", p.n}, {"depth", depth}, {"grid", {p.lo, p.hi}}, {"sample", p.sample}};
  struct Job {
    BorelLabel b;
    Root alpha;
    RhoTuple t;
  };
  std::vector<Job> jobs;
  for (const auto& b : borels) {
    std::vector<Root> roots;
    if (p.alpha) {
      auto simple = odd_simple_roots(b);
      if (std::find(simple.begin(), simple.end(), *p.alpha) == simple.end())
        throw std::invalid_argument(p.alpha->str() + " is not an odd simple root of " + b.str());
      roots.push_back(*p.alpha);
    } else {
      roots = odd_simple_roots(b);
    }
    for (const auto& a : roots)
      for (const auto& t : tuples) jobs.push_back({b, a, t});
  }
  rep.cases = run_cases(jobs.size(), [&](std::size_t k) { return conjecture_case(jobs[k].b, jobs[k].alpha, jobs[k].t, depth); });
  rep.sort_cases();
  rep.wall_time_ms = sw.ms();
  return rep;
}

/// DS_{e1-d1} M^{() * b'}(t) for every b' in L(n-1,n-1), sampled tuples.
inline ScenarioReport verify_star(int n, std::size_t samples, long depth, unsigned seed = 7) {
  Stopwatch sw;
  ScenarioReport rep;
  rep.scenario = "star";
  rep.params = {{"n", n}, {"depth", depth}, {"samples", samples}};
  Root alpha{n, 1, n + 1};
  struct Job {
    BorelLabel inner;
    RhoTuple t;
  };
  std::vector<Job> jobs;
  unsigned s = seed;
  for (const auto& bp : enumerate_borels(n - 1))
    for (const auto& t : tuple_sample(n, -2, 2, samples, s++)) jobs.push_back({bp, t});
  rep.cases = run_cases(jobs.size(), [&](std::size_t k) {
    const auto& [bp, t] = jobs[k];
    BorelLabel b = star(BorelLabel(1, {}), bp);
    CaseResult c = conjecture_case(b, alpha, t, depth);
    c.key = "()*" + bp.str() + "|" + t.str();
    if (restrict_label(b, alpha) != bp) {
      c.verdict = Verdict::Fail;
      c.detail = "restricted Borel differs from " + bp.str();
    }
    RhoTuple pr_i(1, {t[1], t[n + 1]});
    bool typical = atypicality(pr_i) == 0;
    bool zero_case = c.detail.rfind("(l,a)!=0", 0) == 0;
    if (typical != zero_case) {
      c.verdict = Verdict::Fail;
      c.detail += " [typicality of pr_I disagrees with (l,a)]";
    }
    return c;
  });
  rep.sort_cases();
  rep.wall_time_ms = sw.ms();
  return rep;
}

/// BG_{n|n} target term for DS of a BG-module: Pi^{flip} BG_{n-1}(s) at (ci, cj).
inline PlacedTerm bg_term(const std::string& label, long ci, long cj, bool flip, const RhoTuple& s) {
  PlacedTerm t;
  t.label = label;
  t.coord_i = ci;
  t.coord_j = cj;
  t.flip = flip;
  t.top = tuple_weight(s);
  t.xi = height_functional(distinguished_o(s.n));
  t.build = [s](long depth) { return bg_character(s, depth); };
  return t;
}

inline CaseResult mabg_case(const RhoTuple& t, long depth) {
  if (!in_lambda_maBG(t)) throw std::invalid_argument("verify_maBG: " + t.str() + " is not in Lambda^maBG");
  int n = t.n;
  CaseResult c;
  c.key = t.str();
  auto m = induce(bg_datum(t), depth);
  Root alpha{n, 1, n + 1};
  DSResult r = ds_homology(m, alpha);
  Weight hw = m->datum().hw;
  bool flip = bit(par(pr_I(hw))) == 1;
  std::vector<PlacedTerm> terms;
  if (n == 1) {
    terms.push_back(verma_term("k", hw[1], hw[2], flip, BorelLabel(0, {}), Weight(0)));
  } else {
    terms.push_back(bg_term("BG", hw[1], hw[n + 1], flip, tuple_pr_J(t)));
  }
  auto cmp = compare_census(r, terms, false);
  if (!cmp.match) {
    c.verdict = Verdict::Refuted;
    c.detail = "census " + cmp.first_mismatch->str();
    return c;
  }
  c.verdict = Verdict::Pass;
  c.detail = "DS census = Pi^" + std::to_string(bit(par(pr_I(hw)))) + " BG" + (n > 1 ? tuple_pr_J(t).str() : "()") +
             " on " + std::to_string(cmp.weights_compared) + " weights";
  if (n == 2) {
    Character ch = r.census();
    bool single = ch.support.size() == 1 && ch.support.count(hw) && ch.support.at(hw).total() == 1;
    if (!single) {
      c.verdict = Verdict::Fail;
      c.detail += "; ch DS BG != e^lambda";
    } else {
      c.detail += "; ch DS BG = e^lambda";
    }
  }
  return c;
}

/// maBG tuples (v | v) with v in [lo, hi]^n (or a deterministic sample).
inline std::vector<RhoTuple> mabg_tuples(int n, long lo, long hi, std::size_t sample, unsigned seed) {
  std::vector<RhoTuple> out;
  if (sample == 0) {
    for (const auto& half : tuple_grid(n, lo, hi)) {
      bool diag = true;
      for (int k = 1; k <= n; ++k) diag = diag && half[k] == half[n + k];
      if (diag) out.push_back(half);
    }
    return out;
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> dist(lo, hi);
  for (std::size_t k = 0; k < sample; ++k) {
    std::vector<long> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = dist(rng);
    std::vector<long> full = v;
    full.insert(full.end(), v.begin(), v.end());
    out.emplace_back(n, full);
  }
  return out;
}

inline ScenarioReport verify_maBG(int n, long lo, long hi, long depth, std::size_t sample = 0, unsigned seed = 3) {
  Stopwatch sw;
  ScenarioReport rep;
  rep.scenario = "mabg";
  if (depth < 0) depth = default_depth(n);
  rep.params = {{"n", n}, {"depth", depth}, {"grid", {lo, hi}}, {"sample", sample}};
  auto tuples = mabg_tuples(n, lo, hi, sample, seed);
  rep.cases = run_cases(tuples.size(), [&](std::size_t k) { return mabg_case(tuples[k], depth); });
  rep.sort_cases();
  rep.wall_time_ms = sw.ms();
  return rep;
}

// ---------------------------------------------------------------------------
// Structural suites.

inline CaseResult make_case(const std::string& key, bool ok, const std::string& detail) {
  return CaseResult{key, ok ? Verdict::Pass : Verdict::Fail, detail};
}

/// Super-antisymmetry and super-Jacobi on all unit pairs / triples.
inline CaseResult check_superalgebra_exhaustive(int n) {
  std::vector<MatrixUnit> units;
  for (int i = 1; i <= 2 * n; ++i)
    for (int j = 1; j <= 2 * n; ++j) units.push_back({i, j});
  long checked = 0;
  for (auto a : units)
    for (auto b : units) {
      int s = (bit(unit_parity(a, n)) && bit(unit_parity(b, n))) ? 1 : -1;  // [b,a] = -(-1)^{|a||b|}[a,b]
      if (!(bracket_units(n, b, a) + bracket_units(n, a, b).scaled(-s)).is_zero())
        return make_case("superalgebra n=" + std::to_string(n), false, "antisymmetry fails for " + unit_name(a) + "," + unit_name(b));
    }
  for (auto a : units)
    for (auto b : units)
      for (auto c : units) {
        AlgebraElement ea = AlgebraElement::unit(n, a.i, a.j), eb = AlgebraElement::unit(n, b.i, b.j),
                       ec = AlgebraElement::unit(n, c.i, c.j);
        int s = (bit(unit_parity(a, n)) && bit(unit_parity(b, n))) ? -1 : 1;
        AlgebraElement lhs = bracket(ea, bracket(eb, ec));
        AlgebraElement rhs = bracket(bracket(ea, eb), ec) + bracket(eb, bracket(ea, ec)).scaled(s);
        if (!(lhs - rhs).is_zero())
          return make_case("superalgebra n=" + std::to_string(n), false,
                           "Jacobi fails for " + unit_name(a) + "," + unit_name(b) + "," + unit_name(c));
        ++checked;
      }
  return make_case("superalgebra n=" + std::to_string(n), true, std::to_string(checked) + " triples");
}

/// Super-Jacobi on random homogeneous triples (three units of one parity, small coefficients).
inline CaseResult check_superalgebra_random(int n, long triples, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> idx(1, 2 * n), coef(-3, 3), par01(0, 1);
  auto random_elem = [&](Parity& p) {
    int want = par01(rng);
    AlgebraElement e(n);
    while (e.is_zero()) {
      for (int k = 0; k < 3; ++k) {
        int i = idx(rng), j = idx(rng);
        if (index_parity(i, n) ^ index_parity(j, n) ^ want) continue;
        e.add({i, j}, coef(rng));
      }
    }
    p = want ? Parity::Odd : Parity::Even;
    return e;
  };
  for (long t = 0; t < triples; ++t) {
    Parity pa, pb, pc;
    AlgebraElement a = random_elem(pa), b = random_elem(pb), c = random_elem(pc);
    int s = (bit(pa) && bit(pb)) ? -1 : 1;
    AlgebraElement lhs = bracket(a, bracket(b, c));
    AlgebraElement rhs = bracket(bracket(a, b), c) + bracket(b, bracket(a, c)).scaled(s);
    if (!(lhs - rhs).is_zero()) return make_case("jacobi-random n=" + std::to_string(n), false, "fails on " + a.str());
    int s2 = (bit(pa) && bit(pb)) ? 1 : -1;
    if (!(bracket(b, a) + bracket(a, b).scaled(-s2)).is_zero())
      return make_case("jacobi-random n=" + std::to_string(n), false, "antisymmetry fails on " + a.str());
  }
  return make_case("jacobi-random n=" + std::to_string(n), true, std::to_string(triples) + " random triples");
}

inline long binomial(int a, int b) {
  long r = 1;
  for (int k = 1; k <= b; ++k) r = r * (a - b + k) / k;
  return r;
}

inline CaseResult check_borel_counts(int max_n) {
  std::string detail;
  bool ok = true;
  for (int n = 1; n <= max_n; ++n) {
    long c = static_cast<long>(enumerate_borels(n).size());
    detail += (n > 1 ? "," : "") + std::to_string(c);
    ok = ok && c == binomial(2 * n, n);
  }
  return make_case("borel-counts", ok, "|L(n,n)| = " + detail);
}

/// Odd-reflection graph at n=3: listed edges and the hypercube sub-cube.
inline CaseResult check_borel_graph_n3() {
  auto edges = borel_graph_edges(3);
  std::set<std::pair<std::string, std::string>> es;
  for (const auto& [a, b] : edges) {
    es.insert({a.str(), b.str()});
    es.insert({b.str(), a.str()});
  }
  std::vector<std::pair<std::string, std::string>> want = {{"()", "(1)"},     {"(21)", "(1^2)"}, {"(21)", "(2)"},
                                                           {"(21)", "(2^2)"}, {"(21)", "(31)"},  {"(21)", "(21^2)"}};
  for (const auto& e : want)
    if (!es.count(e)) return make_case("borel-graph n=3", false, "missing edge " + e.first + "--" + e.second);
  // (21) has exactly the five listed neighbours
  long deg21 = 0;
  for (const auto& e : es)
    if (e.first == "(21)") ++deg21;
  if (deg21 != 5) return make_case("borel-graph n=3", false, "(21) has degree " + std::to_string(deg21));
  std::set<std::string> cube;
  for (int g = 0; g < 8; ++g) cube.insert(hypercube_label({g & 1, (g >> 1) & 1, (g >> 2) & 1}).str());
  long inner = 0;
  for (const auto& e : es)
    if (cube.count(e.first) && cube.count(e.second)) ++inner;
  inner /= 2;
  bool ok = cube.size() == 8 && inner == 12 && enumerate_borels(3).size() == 20;
  return make_case("borel-graph n=3", ok, "20 vertices, " + std::to_string(edges.size()) + " edges, cube edges " + std::to_string(inner));
}

inline bool proportional_to_ber(const Weight& w) {
  // w = c * ber: eps coefficients all c, delta coefficients all -c
  long c = w.eps(1);
  for (int i = 1; i <= w.n; ++i)
    if (w.eps(i) != c || w.del(i) != -c) return false;
  return true;
}

inline CaseResult check_rho(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& b : enumerate_borels(n)) {
      if (rho(b) != rho_from_half_sums(b)) return make_case("rho", false, "closed form != half sum for " + b.str());
      bool special = b == distinguished_o(n) || b == distinguished_i(n);
      if (proportional_to_ber(rho(b)) != special)
        return make_case("rho", false, "proportionality to ber wrong for " + b.str());
    }
    if (!rho(distinguished_o(n)).is_zero()) return make_case("rho", false, "rho^o != 0");
    if (rho(distinguished_i(n)) != Weight::ber(n)) return make_case("rho", false, "rho^i != ber");
  }
  return make_case("rho", true, "closed form = half sum for all labels, n <= " + std::to_string(max_n));
}

/// ch M^b at fixed lambda + rho agrees across Borels on the common region,
/// and each equals the envmod census.
inline CaseResult check_character_independence(int n, long depth, const std::vector<RhoTuple>& tuples) {
  auto borels = enumerate_borels(n);
  for (const auto& t : tuples) {
    std::vector<Character> chars;
    for (const auto& b : borels) {
      chars.push_back(verma_character(b, t, depth));
      auto m = induce(verma_datum(b, t), depth);
      if (m->census().support != chars.back().support)
        return make_case("ch-independence n=" + std::to_string(n), false, "census != product formula for " + b.str() + t.str());
    }
    std::set<Weight> keys;
    for (const auto& c : chars)
      for (const auto& [mu, d] : c.support) keys.insert(mu);
    for (const auto& mu : keys) {
      bool everywhere = std::all_of(chars.begin(), chars.end(), [&](const Character& c) { return c.region.contains(mu); });
      if (!everywhere) continue;
      Dims d0 = chars[0].at(mu);
      for (const auto& c : chars)
        if (!(c.at(mu) == d0))
          return make_case("ch-independence n=" + std::to_string(n), false, "differs at " + mu.str() + " for " + t.str());
    }
  }
  return make_case("ch-independence n=" + std::to_string(n), true, std::to_string(tuples.size()) + " tuples, all Borels");
}

inline CaseResult check_bg_characters(int n, long depth, const std::vector<RhoTuple>& tuples) {
  for (const auto& t : tuples) {
    auto m = induce(bg_datum(t), depth);
    if (m->census().support != bg_character(t, depth).support)
      return make_case("bg-character n=" + std::to_string(n), false, "census != product formula for " + t.str());
  }
  return make_case("bg-character n=" + std::to_string(n), true, std::to_string(tuples.size()) + " tuples, depth " + std::to_string(depth));
}

/// BG(M^gamma(t)) and M^{b_gamma}(t) have equal censuses.
inline CaseResult check_bg_of_verma(int n, long depth, const std::vector<RhoTuple>& tuples) {
  for (int g = 0; g < (1 << n); ++g) {
    std::vector<int> gamma;
    for (int k = 0; k < n; ++k) gamma.push_back((g >> k) & 1);
    BorelLabel bg = hypercube_label(gamma);
    for (const auto& t : tuples) {
      std::vector<BGFactor> f;
      for (int k = 1; k <= n; ++k)
        f.push_back({gamma[static_cast<std::size_t>(k - 1)] ? BGFactor::Kind::VermaI : BGFactor::Kind::VermaO, t[k], t[n + k]});
      auto a = induce(bg_factor_datum(f), depth);
      auto b = induce(verma_datum(bg, t), depth);
      if (a->datum().hw != b->datum().hw || a->census().support != b->census().support)
        return make_case("bg-of-verma n=" + std::to_string(n), false, "mismatch for gamma " + bg.str() + " " + t.str());
    }
  }
  return make_case("bg-of-verma n=" + std::to_string(n), true, "all gamma, " + std::to_string(tuples.size()) + " tuples");
}

/// Generator matrices of a module satisfy the bracket relations.
inline CaseResult check_module_brackets(const InducedModule& m, const std::vector<std::pair<MatrixUnit, MatrixUnit>>& pairs) {
  int n = m.rank();
  long checked = 0;
  for (const auto& [a, b] : pairs) {
    Weight wa = a.i == a.j ? Weight(n) : Weight::of_root(Root{n, a.i, a.j});
    Weight wb = b.i == b.j ? Weight(n) : Weight::of_root(Root{n, b.i, b.j});
    AlgebraElement br = bracket_units(n, a, b);
    int s = (bit(unit_parity(a, n)) && bit(unit_parity(b, n))) ? -1 : 1;
    for (const auto& mu : m.weights()) {
      Region r = m.region();
      if (!r.contains(mu + wa) || !r.contains(mu + wb) || !r.contains(mu + wa + wb)) continue;
      std::size_t cols = m.dim(mu), rows = m.dim(mu + wa + wb);
      SparseMatrix lhs(rows, cols);
      for (const auto& [u, c] : br.terms()) lhs = lhs + m.generator_matrix(u, mu).scaled(c);
      SparseMatrix ab = m.generator_matrix(a, mu + wb) * m.generator_matrix(b, mu);
      SparseMatrix ba = m.generator_matrix(b, mu + wa) * m.generator_matrix(a, mu);
      if (!(lhs == ab - ba.scaled(s)))
        return make_case("module-brackets", false, "fails for " + unit_name(a) + "," + unit_name(b) + " at " + mu.str());
      ++checked;
    }
  }
  return make_case("module-brackets " + m.datum().name, true, std::to_string(checked) + " checks");
}

/// Induced gl(J) matrices on DS_{e_{1,n+1}} satisfy the bracket relations;
/// pairs are local gl(n-1|n-1) units.
inline CaseResult check_induced_brackets(const DSResult& r, const std::vector<std::pair<MatrixUnit, MatrixUnit>>& local_pairs) {
  const InducedModule& m = r.module();
  int n = m.rank();
  auto [i, j] = root_indices(r.alpha());
  IndexEmbedding emb = IndexEmbedding::complement_of(n, i, j);
  auto shift = [n](MatrixUnit u) { return u.i == u.j ? Weight(n) : Weight::of_root(Root{n, u.i, u.j}); };
  long checked = 0;
  for (const auto& [la, lb] : local_pairs) {
    MatrixUnit a = emb.lift(la), b = emb.lift(lb);
    Weight wa = shift(a), wb = shift(b);
    AlgebraElement br = bracket_units(n, a, b);
    int s = (bit(unit_parity(a, n)) && bit(unit_parity(b, n))) ? -1 : 1;
    for (const auto& [mu, sp] : r.spaces()) {
      if (sp.dim() == 0) continue;
      if (!r.valid(mu + wa) || !r.valid(mu + wb) || !r.valid(mu + wa + wb)) continue;
      SparseMatrix rhs = r.induced_action(a, mu + wb) * r.induced_action(b, mu) -
                         (r.induced_action(b, mu + wa) * r.induced_action(a, mu)).scaled(s);
      SparseMatrix lhs(rhs.rows(), rhs.cols());
      for (const auto& [u, c] : br.terms()) lhs = lhs + r.induced_action(u, mu).scaled(c);
      if (!(lhs == rhs))
        return make_case("induced-brackets", false, "fails for " + unit_name(a) + "," + unit_name(b) + " at " + mu.str());
      ++checked;
    }
  }
  return make_case("induced-brackets " + m.datum().name, checked > 0, std::to_string(checked) + " matrix identities");
}

/// All unit pairs of gl(k|k), or a deterministic sample of them.
inline std::vector<std::pair<MatrixUnit, MatrixUnit>> unit_pairs(int k, std::size_t sample, unsigned seed) {
  std::vector<std::pair<MatrixUnit, MatrixUnit>> all;
  for (int a = 1; a <= 2 * k; ++a)
    for (int b = 1; b <= 2 * k; ++b)
      for (int c = 1; c <= 2 * k; ++c)
        for (int d = 1; d <= 2 * k; ++d) all.push_back({{a, b}, {c, d}});
  if (sample == 0 || sample >= all.size()) return all;
  std::mt19937 rng(seed);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(sample);
  std::sort(all.begin(), all.end());
  return all;
}

/// Criterion-style induced action check: M^{b_o}(t) with t_1 = t_{n+1}, x = e_{1,n+1}.
inline CaseResult check_induced_action(int n, long depth, std::size_t sample) {
  std::vector<long> v;
  for (int k = 0; k < 2 * n; ++k) v.push_back(k % n == 0 ? 1 : (k < n ? k : 2 - k));
  RhoTuple t(n, v);
  auto m = induce(verma_datum(distinguished_o(n), t), depth);
  DSResult r = ds_homology(m, Root{n, 1, n + 1});
  if (r.total_dim() == 0) return make_case("induced-brackets n=" + std::to_string(n), false, "homology vanished for " + t.str());
  CaseResult c = check_induced_brackets(r, unit_pairs(n - 1, sample, 17));
  c.key = "induced-brackets n=" + std::to_string(n);
  c.detail += " on DS of M^" + distinguished_o(n).str() + t.str() + ", homology dim " + std::to_string(r.total_dim());
  return c;
}

/// gl(1|1) table: L(a|a) -> 1, M^()(a|a) -> k + Pi k, M^(1)(a|a) -> 0, typical -> 0.
inline CaseResult check_gl11_table(long lo, long hi, long depth) {
  Root x{1, 1, 2};
  auto total = [&](const InductionDatum& d) { return ds_homology(induce(d, depth), x).total_dim(); };
  for (long a = lo; a <= hi; ++a) {
    RhoTuple at(1, {a, a});
    long simple = total(bg_datum(at));
    auto mo = ds_homology(induce(verma_datum(BorelLabel(1, {}), at), depth), x);
    long verma_i = total(verma_datum(BorelLabel(1, {1}), at));
    long typical = total(verma_datum(BorelLabel(1, {}), RhoTuple(1, {a, a + 1}))) +
                   total(verma_datum(BorelLabel(1, {1}), RhoTuple(1, {a, a + 1})));
    bool pair = mo.total_dim() == 2;
    if (pair) {
      Dims d;
      for (const auto& [mu, sp] : mo.spaces()) d.add(sp.parity, static_cast<long>(sp.dim()));
      pair = d.even == 1 && d.odd == 1;
    }
    if (simple != 1 || !pair || verma_i != 0 || typical != 0)
      return make_case("gl11-table", false,
                       "a=" + std::to_string(a) + ": dims " + std::to_string(simple) + "," + std::to_string(mo.total_dim()) +
                           "," + std::to_string(verma_i) + "," + std::to_string(typical));
  }
  return make_case("gl11-table", true, "a in [" + std::to_string(lo) + "," + std::to_string(hi) + "], depth " + std::to_string(depth));
}

/// Ind_{p_IJ}(M^{b1} [x] M^{b2}) has the census of M^{b1 * b2}.
inline CaseResult check_nested_induction(int n, long depth, const std::vector<RhoTuple>& tuples) {
  long compared = 0;
  for (const auto& b1 : enumerate_borels(1))
    for (const auto& b2 : enumerate_borels(n - 1))
      for (const auto& t : tuples) {
        BorelLabel b = star(b1, b2);
        Weight hw = from_tuple(t, b);
        auto inner = induce(levi_verma_datum(b1, b2, hw), depth);
        auto nested = induce_module(parabolic_IJ_datum(n, hw, height_functional(b)), inner, depth);
        auto direct = induce(verma_datum_weight(b, hw), depth);
        if (nested->census().support != direct->census().support)
          return make_case("nested-induction n=" + std::to_string(n), false, "census differs for " + b.str() + t.str());
        // DS of the induced module against DS over the Levi
        Root alpha{n, 1, n + 1};
        DSResult outer_ds = ds_homology(nested, alpha), levi_ds = ds_homology(inner, alpha);
        std::set<Weight> keys;
        for (const auto& [mu, sp] : outer_ds.spaces()) keys.insert(mu);
        for (const auto& [mu, sp] : levi_ds.spaces()) keys.insert(mu);
        for (const auto& mu : keys)
          if (outer_ds.valid(mu) && levi_ds.valid(mu) && !(outer_ds.dims(mu) == levi_ds.dims(mu)))
            return make_case("nested-induction n=" + std::to_string(n), false,
                             "DS of Ind differs from DS over the Levi at " + mu.str() + " for " + b.str() + t.str());
        ++compared;
      }
  return make_case("nested-induction n=" + std::to_string(n), true,
                   std::to_string(compared) + " modules, census and DS census agree with the Levi side");
}

/// DS along a root of the first factor of an outer tensor product.
inline CaseResult check_tensor_factor(long depth) {
  for (long a = -1; a <= 1; ++a) {
    OuterTensor t{induce(verma_datum(BorelLabel(1, {}), RhoTuple(1, {a, a})), depth),
                  induce(verma_datum(BorelLabel(1, {1}), RhoTuple(1, {1, a})), depth)};
    auto r = ds_tensor_factor(t, Root{1, 1, 2});
    if (!r.match) return make_case("tensor-factor", false, r.detail);
  }
  return make_case("tensor-factor", true, "DS(M [x] N) = DS(M) [x] N on gl(1|1)+gl(1|1) samples");
}

/// Structural suites; `quick` drops the slower n=3 parts.
inline ScenarioReport verify_structure(bool quick = false) {
  Stopwatch sw;
  ScenarioReport rep;
  rep.scenario = "structure";
  rep.params = {{"quick", quick}};
  std::vector<std::function<CaseResult()>> jobs = {
      [] { return check_superalgebra_exhaustive(2); },
      [=] { return check_superalgebra_random(3, quick ? 1000 : 10000, 11); },
      [=] { return check_borel_counts(quick ? 4 : 5); },
      [] { return check_borel_graph_n3(); },
      [] { return check_rho(4); },
      [] { return check_gl11_table(-3, 3, 8); },
      [] { return check_character_independence(2, 4, tuple_sample(2, -2, 2, 8, 5)); },
      [] { return check_bg_characters(2, 5, tuple_sample(2, -2, 2, 8, 5)); },
      [] { return check_bg_characters(3, 4, tuple_sample(3, -2, 2, 3, 5)); },
      [] { return check_bg_of_verma(2, 4, tuple_sample(2, -2, 2, 6, 5)); },
      [] {
        auto c = contraction_check(2, 6);
        return make_case("contraction n=2", c.ok(), std::to_string(c.monomials_checked) + " monomials " + c.detail);
      },
      [] {
        auto m = induce(verma_datum(BorelLabel(2, {}), RhoTuple(2, {1, 0, 1, 2})), 4);
        return check_module_brackets(*m, unit_pairs(2, 0, 0));
      },
      [] { return check_induced_action(2, 4, 0); },
      [] { return check_nested_induction(2, 4, tuple_sample(2, -2, 2, 4, 9)); },
      [] { return check_tensor_factor(4); },
  };
  if (!quick) {
    jobs.push_back([] {
      auto c = contraction_check(3, 6);
      return make_case("contraction n=3", c.ok(), std::to_string(c.monomials_checked) + " monomials " + c.detail);
    });
    jobs.push_back([] { return check_induced_action(3, 4, 60); });
    jobs.push_back([] { return check_nested_induction(3, 3, tuple_sample(3, -2, 2, 1, 9)); });
  }
  rep.cases = run_cases(jobs.size(), [&](std::size_t k) { return jobs[k](); });
  rep.sort_cases();
  rep.wall_time_ms = sw.ms();
  return rep;
}

// ---------------------------------------------------------------------------
// gl(2|2) short exact sequences and explicit action formulas.

namespace gl22 {

using Kind = BGFactor::Kind;

inline PlacedTerm simple_at(long s, long ci, long cj, bool flip) {
  return bg_term("L(" + std::to_string(s) + ")", ci, cj, flip, RhoTuple(1, {s, s}));
}
inline PlacedTerm verma_o_at(long s, long ci, long cj, bool flip) {
  return verma_term("M()(" + std::to_string(s) + ")", ci, cj, flip, BorelLabel(1, {}), Weight(1, {s, -s}));
}
/// M^(1)(s|s) of gl(1|1): highest weight (s-1 | s-1) in tuple terms.
inline PlacedTerm verma_i_at(long s, long ci, long cj, bool flip) {
  return verma_term("M(1)(" + std::to_string(s) + ")", ci, cj, flip, BorelLabel(1, {1}), Weight(1, {s - 1, -(s - 1)}));
}

struct Expectation {
  std::vector<PlacedTerm> terms;  // empty = DS is zero
  bool allow_flip = false;
};

struct Sequence {
  int index = 0;
  InductionDatum l, m, nn;
  Expectation ds_l, ds_m, ds_n;
  std::map<Weight, long> e;  // dim E per projected weight
  std::optional<Expectation> literal_m;  // printed display for M when it differs from ds_m
};

inline InductionDatum bg2(Kind k1, long c1, Kind k2, long c2) { return bg_factor_datum({{k1, c1, c1}, {k2, c2, c2}}); }

/// The eight sequences at (a, b); all are taken along e1 - d1.
inline Sequence sequence(int index, long a, long b) {
  Sequence q;
  q.index = index;
  auto pair = [](PlacedTerm x, PlacedTerm y) { return Expectation{{std::move(x), std::move(y)}, true}; };
  auto one = [](PlacedTerm x) { return Expectation{{std::move(x)}, false}; };
  const bool fa = a & 1, fa1 = !fa;
  switch (index) {
    case 1:
      q.l = bg_datum(RhoTuple(2, {a - 1, b, a - 1, b}));
      q.m = bg2(Kind::VermaO, a, Kind::Simple, b);
      q.nn = bg_datum(RhoTuple(2, {a, b, a, b}));
      q.ds_l = one(simple_at(b, a - 1, -a + 1, fa1));
      q.ds_m = pair(simple_at(b, a, -a, false), simple_at(b, a - 1, -a + 1, true));
      q.ds_n = one(simple_at(b, a, -a, fa));
      break;
    case 2:
      q.l = bg_datum(RhoTuple(2, {a, b - 1, a, b - 1}));
      q.m = bg2(Kind::Simple, a, Kind::VermaO, b);
      q.nn = bg_datum(RhoTuple(2, {a, b, a, b}));
      q.ds_l = one(simple_at(b - 1, a, -a, fa));
      q.ds_m = one(verma_o_at(b, a, -a, fa));
      q.ds_n = one(simple_at(b, a, -a, fa));
      break;
    case 3:
      q.l = bg2(Kind::VermaO, a, Kind::Simple, b - 1);
      q.m = verma_datum(BorelLabel(2, {1}), RhoTuple(2, {a, b, a, b}));
      q.nn = bg2(Kind::VermaO, a, Kind::Simple, b);
      q.ds_l = pair(simple_at(b - 1, a, -a, false), simple_at(b - 1, a - 1, -a + 1, true));
      q.ds_m = pair(verma_o_at(b, a, -a, false), verma_o_at(b, a - 1, -a + 1, true));
      q.ds_n = pair(simple_at(b, a, -a, false), simple_at(b, a - 1, -a + 1, true));
      q.literal_m = pair(verma_o_at(b, a, -a, false), verma_o_at(b - 1, a - 1, -a + 1, true));
      break;
    case 4:
      q.l = bg2(Kind::Simple, a - 1, Kind::VermaO, b);
      q.m = verma_datum(BorelLabel(2, {1}), RhoTuple(2, {a, b, a, b}));
      q.nn = bg2(Kind::Simple, a, Kind::VermaO, b);
      q.ds_l = one(verma_o_at(b, a - 1, -a + 1, fa1));
      q.ds_m = pair(verma_o_at(b, a, -a, false), verma_o_at(b, a - 1, -a + 1, true));
      q.ds_n = one(verma_o_at(b, a, -a, fa));
      break;
    case 5:
      q.l = bg_datum(RhoTuple(2, {a + 1, b, a + 1, b}));
      q.m = bg2(Kind::VermaI, a + 1, Kind::Simple, b);
      q.nn = bg_datum(RhoTuple(2, {a, b, a, b}));
      q.ds_l = one(simple_at(b, a + 1, -a - 1, fa1));
      q.ds_n = one(simple_at(b, a, -a, fa));
      q.e[Weight(1, {b, -b})] = 1;
      break;
    case 6:
      q.l = bg_datum(RhoTuple(2, {a, b + 1, a, b + 1}));
      q.m = bg2(Kind::Simple, a, Kind::VermaI, b + 1);
      q.nn = bg_datum(RhoTuple(2, {a, b, a, b}));
      q.ds_l = one(simple_at(b + 1, a, -a, fa));
      q.ds_m = one(verma_i_at(b + 1, a, -a, fa));
      q.ds_n = one(simple_at(b, a, -a, fa));
      break;
    case 7:
      q.l = bg2(Kind::VermaO, a, Kind::Simple, b + 1);
      q.m = verma_datum(BorelLabel(2, {2}), RhoTuple(2, {a, b + 1, a, b + 1}));
      q.nn = bg2(Kind::VermaO, a, Kind::Simple, b);
      q.ds_l = pair(simple_at(b + 1, a, -a, false), simple_at(b + 1, a - 1, -a + 1, true));
      q.ds_m = pair(verma_i_at(b + 1, a, -a, false), verma_i_at(b + 1, a - 1, -a + 1, true));
      q.ds_n = pair(simple_at(b, a, -a, false), simple_at(b, a - 1, -a + 1, true));
      break;
    case 8:
      q.l = bg2(Kind::Simple, a + 1, Kind::VermaO, b);
      q.m = verma_datum(BorelLabel(2, {1, 1}), RhoTuple(2, {a + 1, b, a + 1, b}));
      q.nn = bg2(Kind::Simple, a, Kind::VermaO, b);
      q.ds_l = one(verma_o_at(b, a + 1, -a - 1, fa1));
      q.ds_n = one(verma_o_at(b, a, -a, fa));
      q.e[Weight(1, {b, -b})] = 1;
      q.e[Weight(1, {b - 1, -b + 1})] = 1;
      break;
    default:
      throw std::invalid_argument("sequence index must be 1..8");
  }
  return q;
}

inline std::string compare_detail(const char* which, const CensusComparison& c) {
  if (c.match) return "";
  return std::string(which) + ": " + c.first_mismatch->str();
}

/// Exactness, DS of each term, and the character-level six-term check.
inline CaseResult sequence_case(int index, long a, long b, long depth) {
  CaseResult c;
  c.key = "seq" + std::to_string(index) + " a=" + std::to_string(a) + " b=" + std::to_string(b);
  Sequence q = sequence(index, a, b);
  auto l = induce(q.l, depth), m = induce(q.m, depth), nn = induce(q.nn, depth);
  Root alpha{2, 1, 3};
  std::vector<std::string> problems;
  SESReport ses = ses_census(*l, *m, *nn);
  if (!ses.exact) problems.push_back("not exact: " + ses.first_mismatch->str());
  DSResult rl = ds_homology(l, alpha), rm = ds_homology(m, alpha), rn = ds_homology(nn, alpha);
  for (auto [name, r, ex] : {std::tuple{"DS L", &rl, &q.ds_l}, std::tuple{"DS M", &rm, &q.ds_m}, std::tuple{"DS N", &rn, &q.ds_n}}) {
    auto cmp = compare_census(*r, ex->terms, ex->allow_flip);
    if (!cmp.match) problems.push_back(compare_detail(name, cmp));
  }
  HinichReport h = hinich_supercharacter_check(rl, rm, rn, q.e);
  if (!h.ok()) problems.push_back("six-term: " + h.detail);
  std::string note;
  if (q.literal_m) {
    bool literal = compare_census(rm, q.literal_m->terms, true).match;
    note = literal ? "; printed display for DS M also matches" : "; printed display for DS M is inconsistent, corrected form holds";
  }
  if (problems.empty()) {
    c.verdict = Verdict::Pass;
    c.detail = "exact on " + std::to_string(ses.weights_compared) + " weights, DS L/M/N as expected, " +
               std::to_string(h.keys_compared) + " strings balanced" + note;
  } else {
    c.verdict = Verdict::Fail;
    c.detail = problems.front();
    for (std::size_t k = 1; k < problems.size(); ++k) c.detail += "; " + problems[k];
  }
  return c;
}

inline Word word_of(std::initializer_list<int> e) { return Word(e); }

/// Compares x * w against an expected vector for every word in a box.
template <class Expected>
CaseResult golden_case(const std::string& key, const InducedModule& m, MatrixUnit x, const std::vector<int>& caps,
                       Expected&& expected) {
  long checked = 0;
  Word w(caps.size(), 0);
  std::function<std::optional<std::string>(std::size_t)> rec = [&](std::size_t k) -> std::optional<std::string> {
    if (k == caps.size()) {
      Word full = m.vacuum();
      std::copy(w.begin(), w.end(), full.begin());
      WordVector got = m.apply_unit(x, full);
      WordVector want;
      for (const auto& [ww, cc] : expected(w)) {
        Word f = m.vacuum();
        std::copy(ww.begin(), ww.end(), f.begin());
        add_into(want, f, cc);
      }
      ++checked;
      if (got != want) {
        std::string s = "mismatch at exponents (";
        for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
        return s + ")";
      }
      return std::nullopt;
    }
    for (int e = 0; e <= caps[k]; ++e) {
      w[k] = e;
      if (auto r = rec(k + 1)) return r;
    }
    w[k] = 0;
    return std::nullopt;
  };
  if (auto r = rec(0)) return make_case(key, false, *r);
  return make_case(key, true, std::to_string(checked) + " monomials");
}

/// e_{1,3} on BG of a maBG weight; words (a21, a23, a41, a43).
inline CaseResult golden_bg(const RhoTuple& t) {
  auto m = induce(bg_datum(t), 18);
  return golden_case("formula e13 on BG" + t.str(), *m, {1, 3}, {3, 1, 1, 3}, [](const Word& w) {
    WordVector v;
    int a21 = w[0], a23 = w[1], a41 = w[2], a43 = w[3];
    if (a23 == 0 && a41 == 0) {
      if (a21) add_into(v, {a21 - 1, 1, 0, a43}, -a21);
    } else if (a23 == 0 && a41 == 1) {
      add_into(v, {a21, 0, 0, a43 + 1}, 1);
      if (a21) add_into(v, {a21 - 1, 1, 1, a43}, -a21);
    } else if (a23 == 1 && a41 == 1) {
      add_into(v, {a21, 1, 0, a43 + 1}, -1);
    }
    return v;
  });
}

/// Ind_{b() + b(1)} k_lambda, words (a21, a31, a41, a42, a43).
inline std::shared_ptr<const InducedModule> sum_module(const Weight& lambda, long depth) {
  return induce(borel_sum_datum(BorelLabel(2, {}), BorelLabel(2, {1}), lambda), depth);
}

inline Weight sum_weight(long a, long b, long c) { return Weight(2, {a, b, -b, -c}); }

inline CaseResult golden_e23(long a, long b, long c) {
  auto m = sum_module(sum_weight(a, b, c), 16);
  return golden_case("formula e23 on Ind(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")",
                     *m, {2, 3}, {3, 1, 1, 1, 3}, [](const Word& w) {
                       WordVector v;
                       int a21 = w[0], a31 = w[1], a41 = w[2], a42 = w[3], a43 = w[4];
                       int s = (a41 % 2) ? -1 : 1;
                       if (a31 == 1 && a42 == 0) {
                         add_into(v, {a21 + 1, 0, a41, 0, a43}, 1);
                       } else if (a31 == 0 && a42 == 1) {
                         add_into(v, {a21, 0, a41, 0, a43 + 1}, s);
                       } else if (a31 == 1 && a42 == 1) {
                         add_into(v, {a21 + 1, 0, a41, 1, a43}, 1);
                         add_into(v, {a21, 1, a41, 0, a43 + 1}, -s);
                       }
                       return v;
                     });
}

inline CaseResult golden_e32(long a, long b, long c) {
  auto m = sum_module(sum_weight(a, b, c), 16);
  return golden_case("formula e32 on Ind(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")",
                     *m, {3, 2}, {3, 1, 1, 1, 3}, [](const Word& w) {
                       WordVector v;
                       int a21 = w[0], a31 = w[1], a41 = w[2], a42 = w[3], a43 = w[4];
                       int s = (a41 % 2) ? -1 : 1;
                       if (a31 == 0 && a42 == 0) {
                         if (a21) add_into(v, {a21 - 1, 1, a41, 0, a43}, a21);
                         if (a43) add_into(v, {a21, 0, a41, 1, a43 - 1}, -a43 * s);
                       } else if (a31 == 0 && a42 == 1) {
                         if (a21) add_into(v, {a21 - 1, 1, a41, 1, a43}, a21);
                       } else if (a31 == 1 && a42 == 0) {
                         if (a43) add_into(v, {a21, 1, a41, 1, a43 - 1}, a43 * s);
                       }
                       return v;
                     });
}

/// 0 -> Ind k_{lambda -+ (e2 - d1)} -> M(lambda) -> Ind k_lambda -> 0 and DS along e23 (or e32).
inline CaseResult sum_sequence_case(bool raising, long a, long b, long c, long depth) {
  std::string key = std::string(raising ? "ses e23" : "ses e32") + " (" + std::to_string(a) + "," + std::to_string(b) +
                    "," + std::to_string(c) + ")";
  Weight lambda = sum_weight(a, b, c);
  Root shift{2, 2, 3};
  Root alpha = raising ? shift : shift.negated();
  BorelLabel vb = raising ? BorelLabel(2, {}) : BorelLabel(2, {1});
  auto sub = sum_module(raising ? lambda - shift : lambda + shift, depth);
  auto mid = induce(verma_datum_weight(vb, lambda), depth);
  auto quo = sum_module(lambda, depth);
  std::vector<std::string> problems;
  SESReport ses = ses_census(*sub, *mid, *quo);
  if (!ses.exact) problems.push_back("not exact: " + ses.first_mismatch->str());
  DSResult rs = ds_homology(sub, alpha), rm = ds_homology(mid, alpha), rq = ds_homology(quo, alpha);
  Weight target(1, {a, -c});
  auto q = compare_census(rq, {verma_o_at(0, b, -b, b & 1)}, false);
  // verma_o_at fixes the target by s; rebuild with the projected weight
  PlacedTerm pt = verma_term("M()", b, -b, b & 1, BorelLabel(1, {}), target);
  q = compare_census(rq, {pt}, false);
  if (!q.match) problems.push_back("DS Ind k_lambda: " + q.first_mismatch->str());
  CertReport cm = certify_verma_iso(rm, restrict_label(vb, alpha), target, false);
  if (cm.verdict != Verdict::Certified) problems.push_back("DS M: " + cm.detail);
  if (restrict_label(vb, alpha) != BorelLabel(1, {})) problems.push_back("restricted Borel is not ()");
  HinichReport h = hinich_supercharacter_check(rs, rm, rq);
  if (!h.ok()) problems.push_back("six-term: " + h.detail);
  if (problems.empty()) return make_case(key, true, "exact, DS M = M()(a|c) + Pi copy, DS Ind = Pi^b M()(a|c), E = 0");
  std::string d = problems.front();
  for (std::size_t k = 1; k < problems.size(); ++k) d += "; " + problems[k];
  return make_case(key, false, d);
}

}  // namespace gl22

inline ScenarioReport verify_gl22_examples(long lo, long hi, long depth) {
  Stopwatch sw;
  ScenarioReport rep;
  rep.scenario = "gl22";
  if (depth < 0) depth = 6;
  rep.params = {{"depth", depth}, {"grid", {lo, hi}}};
  struct Job {
    int kind;  // 0..7 sequences, 8 golden, 9 sum sequences
    long a, b, c;
  };
  std::vector<Job> jobs;
  for (int s = 1; s <= 8; ++s)
    for (long a = lo; a <= hi; ++a)
      for (long b = lo; b <= hi; ++b) jobs.push_back({s, a, b, 0});
  for (long a = lo; a <= hi; ++a)
    for (long b = lo; b <= hi; ++b) {
      jobs.push_back({9, a, b, 0});
      jobs.push_back({10, a, b, a - b});
      jobs.push_back({11, a, b, a + b});
      jobs.push_back({12, a, b, a - b});
      jobs.push_back({13, a, b, b - a});
    }
  rep.cases = run_cases(jobs.size(), [&](std::size_t k) {
    const Job& j = jobs[k];
    switch (j.kind) {
      case 9: return gl22::golden_bg(RhoTuple(2, {j.a, j.b, j.a, j.b}));
      case 10: return gl22::golden_e23(j.a, j.b, j.c);
      case 11: return gl22::golden_e32(j.a, j.b, j.c);
      case 12: return gl22::sum_sequence_case(true, j.a, j.b, j.c, depth);
      case 13: return gl22::sum_sequence_case(false, j.a, j.b, j.c, depth);
      default: return gl22::sequence_case(j.kind, j.a, j.b, depth);
    }
  });
  rep.sort_cases();
  rep.wall_time_ms = sw.ms();
  return rep;
}

}  // namespace dsgl
