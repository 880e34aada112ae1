// Command-line front end: Borel combinatorics, characters, DS homology and
// the verification scenarios.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dsgl/harness.hpp"

namespace {

using namespace dsgl;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<long, long> parse_pair(const std::string& text, const char* what) {
  std::istringstream in(text);
  long a = 0, b = 0;
  char comma = 0;
  if (!(in >> a >> comma >> b) || comma != ',' || !in.eof())
    throw UsageError(std::string(what) + ": expected two integers 'a,b', got '" + text + "'");
  return {a, b};
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("expected a comma-separated list of integers, got '" + text + "'");
    }
  }
  return out;
}

Root parse_root(int n, const std::string& text) {
  auto [i, j] = parse_pair(text, "--alpha");
  if (i < 1 || j < 1 || i > 2 * n || j > 2 * n || i == j)
    throw UsageError("--alpha: indices must be distinct and in 1.." + std::to_string(2 * n));
  return Root{n, static_cast<int>(i), static_cast<int>(j)};
}

RhoTuple tuple_for(int n, const std::string& text) {
  RhoTuple t = parse_tuple(text);
  if (t.n != n) throw UsageError("tuple " + t.str() + " has rank " + std::to_string(t.n) + ", expected " + std::to_string(n));
  return t;
}

int report_exit(const ScenarioReport& r, bool json, bool timing) {
  if (json) {
    std::cout << to_json(r, timing).dump(2) << "\n";
  } else {
    for (const auto& c : r.cases)
      if (!verdict_ok(c.verdict)) std::cout << verdict_name(c.verdict) << "  " << c.key << "  " << c.detail << "\n";
    std::cout << r.scenario << ": " << r.cases.size() << " cases, " << r.count(Verdict::Certified) << " certified, "
              << r.count(Verdict::Pass) << " pass, " << r.count(Verdict::Refuted) << " refuted, " << r.count(Verdict::Fail)
              << " fail, " << r.count(Verdict::Inconclusive) << " inconclusive";
    if (timing) std::cout << " (" << r.wall_time_ms << " ms)";
    std::cout << "\n";
  }
  bool bad = r.count(Verdict::Refuted) + r.count(Verdict::Fail) > 0;
  return bad ? 1 : 0;
}

void print_character(const Character& ch, const std::vector<Weight>& order) {
  for (const auto& mu : order) {
    Dims d = ch.at(mu);
    if (d.total() == 0) continue;
    std::cout << mu.str() << "  depth " << ch.region.depth_of(mu) << "  even " << d.even << "  odd " << d.odd << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gl(n|n) Borel combinatorics, truncated Verma modules and Duflo-Serganova homology"};
  app.set_config("--config", "", "TOML/INI file with the same keys as the flags");
  app.require_subcommand(1);

  int n = 2;
  std::string graph, label, tuple_text, alpha_text, kind;
  long depth = -1;
  bool json = false, timing = true;

  auto* borels = app.add_subcommand("borels", "List L(n,n) or emit the odd-reflection graph");
  borels->add_option("n", n, "rank")->required()->check(CLI::Range(0, 8));
  borels->add_option("--graph", graph, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  auto* rho_cmd = app.add_subcommand("rho", "rho vector of a Borel label");
  rho_cmd->add_option("n", n)->required()->check(CLI::Range(1, 8));
  rho_cmd->add_option("label", label, "partition, e.g. \"(21^2)\"")->required();

  auto* aty = app.add_subcommand("aty", "atypicality of a rho-shifted tuple");
  aty->add_option("tuple", tuple_text, "e.g. \"1,2|2,0\"")->required();

  auto* chr = app.add_subcommand("char", "truncated character of a Verma or BG module");
  chr->add_option("kind", kind)->required()->check(CLI::IsMember({"verma", "bg"}));
  chr->add_option("n", n)->required()->check(CLI::Range(1, 4));
  chr->add_option("label", label, "Borel label (ignored for bg)")->required();
  chr->add_option("tuple", tuple_text)->required();
  chr->add_option("--depth", depth)->check(CLI::NonNegativeNumber);

  auto* ds = app.add_subcommand("ds", "DS homology of a truncated Verma module");
  ds->add_option("n", n)->required()->check(CLI::Range(1, 4));
  ds->add_option("label", label)->required();
  ds->add_option("tuple", tuple_text)->required();
  ds->add_option("--alpha", alpha_text, "odd root e_ij as 'i,j'")->required();
  ds->add_option("--depth", depth)->check(CLI::NonNegativeNumber);
  ds->add_flag("--json", json);

  auto* verify = app.add_subcommand("verify", "run a verification scenario");
  verify->require_subcommand(1);

  std::string grid = "-2,2", n_list = "2", borel_list, seed_text = "1";
  std::size_t sample = 0;
  bool quick = false;

  auto* v_conj = verify->add_subcommand("conjecture", "DS of Verma modules over Borels and tuple grids");
  v_conj->add_option("--n", n)->check(CLI::Range(1, 3));
  v_conj->add_option("--borel", borel_list, "semicolon-separated labels (default: all)");
  v_conj->add_option("--alpha", alpha_text, "odd simple root 'i,j' (default: all odd simple roots)");
  v_conj->add_option("--grid", grid, "tuple entry range 'lo,hi'");
  v_conj->add_option("--depth", depth);
  v_conj->add_option("--sample", sample, "random tuples instead of the full grid");
  v_conj->add_option("--seed", seed_text);

  auto* v_star = verify->add_subcommand("star", "DS on M^(() * b') along e1-d1");
  int star_n = 3;
  v_star->add_option("--n", star_n)->check(CLI::Range(2, 3));
  v_star->add_option("--depth", depth);
  v_star->add_option("--sample", sample);
  v_star->add_option("--seed", seed_text);

  auto* v_mabg = verify->add_subcommand("mabg", "DS of BG modules with maximally atypical weight");
  v_mabg->add_option("--n", n_list, "rank or list of ranks, e.g. 2,3");
  v_mabg->add_option("--grid", grid);
  v_mabg->add_option("--depth", depth);
  v_mabg->add_option("--sample", sample, "random tuples for ranks >= 3 (default 40)");
  v_mabg->add_option("--seed", seed_text);

  auto* v_gl22 = verify->add_subcommand("gl22", "gl(2|2) exact sequences and action formulas");
  v_gl22->add_option("--depth", depth);
  v_gl22->add_option("--grid", grid, "range for a and b");

  auto* v_struct = verify->add_subcommand("structure", "structural invariant suites");
  v_struct->add_flag("--quick", quick);

  for (auto* sub : {v_conj, v_star, v_mabg, v_gl22, v_struct}) {
    sub->add_flag("--json", json, "print the JSON report");
    sub->add_flag("!--no-timing", timing, "omit wall time (byte-identical output)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*borels) {
      if (graph == "dot") {
        std::cout << emit_borel_graph(n, GraphFormat::Dot);
      } else if (graph == "json") {
        std::cout << emit_borel_graph(n, GraphFormat::Json);
      } else {
        for (const auto& b : enumerate_borels(n)) std::cout << b.str() << "  " << sequence_str(to_sequence(b)) << "\n";
      }
      return 0;
    }
    if (*rho_cmd) {
      std::cout << rho(parse_label(n, label)).str() << "\n";
      return 0;
    }
    if (*aty) {
      RhoTuple t = parse_tuple(tuple_text);
      std::cout << "atypicality " << atypicality(t) << "\n";
      std::cout << "antidominant " << (is_antidominant(t) ? "yes" : "no") << "\n";
      std::cout << "BG-admissible " << (in_lambda_BG(t) ? "yes" : "no") << "\n";
      return 0;
    }
    if (*chr) {
      RhoTuple t = tuple_for(n, tuple_text);
      long d = depth < 0 ? default_depth(n) : depth;
      auto m = kind == "bg" ? induce(bg_datum(t), d) : induce(verma_datum(parse_label(n, label), t), d);
      std::cout << m->datum().name << "  highest weight " << m->datum().hw.str() << "\n";
      print_character(m->census(), m->weights());
      return 0;
    }
    if (*ds) {
      BorelLabel b = parse_label(n, label);
      RhoTuple t = tuple_for(n, tuple_text);
      Root alpha = parse_root(n, alpha_text);
      if (!alpha.is_odd()) throw UsageError("--alpha must be an odd root");
      long d = depth < 0 ? default_depth(n) : depth;
      auto m = induce(verma_datum(b, t), d);
      DSResult r = ds_homology(m, alpha);
      auto simple = odd_simple_roots(b);
      bool is_simple = std::find(simple.begin(), simple.end(), alpha) != simple.end();
      std::optional<CaseResult> cert;
      if (is_simple) cert = conjecture_case(b, alpha, t, d);
      if (json) {
        auto j = to_json(r);
        j["module"] = m->datum().name;
        if (cert) j["verdict"] = {{"verdict", verdict_name(cert->verdict)}, {"detail", cert->detail}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "DS_" << alpha.str() << " " << m->datum().name << ", valid to depth " << r.valid_region().depth << "\n";
        for (const auto& [mu, sp] : r.spaces())
          if (r.valid(mu) && sp.dim() > 0)
            std::cout << mu.str() << "  " << parity_name(sp.parity) << " " << sp.dim() << "\n";
        std::cout << "total " << r.total_dim() << "\n";
        if (cert)
          std::cout << verdict_name(cert->verdict) << "  " << cert->detail << "\n";
        else
          std::cout << "alpha is not simple for " << b.str() << ": homology only, no claim\n";
      }
      return cert && !verdict_ok(cert->verdict) ? 1 : 0;
    }
    if (*verify) {
      unsigned seed = static_cast<unsigned>(parse_int_list(seed_text).at(0));
      auto [lo, hi] = parse_pair(grid, "--grid");
      if (*v_conj) {
        ConjectureParams p;
        p.n = n;
        p.lo = lo;
        p.hi = hi;
        p.depth = depth;
        p.sample = sample;
        p.seed = seed;
        if (!alpha_text.empty()) p.alpha = parse_root(n, alpha_text);
        std::istringstream in(borel_list);
        std::string item;
        while (std::getline(in, item, ';'))
          if (!item.empty()) p.borels.push_back(parse_label(n, item));
        return report_exit(verify_conjecture(p), json, timing);
      }
      if (*v_star) {
        return report_exit(verify_star(star_n, sample ? sample : 40, depth < 0 ? default_depth(star_n) : depth, seed), json, timing);
      }
      if (*v_mabg) {
        ScenarioReport all;
        all.scenario = "mabg";
        all.params = nlohmann::ordered_json::array();
        Stopwatch sw;
        for (int rank : parse_int_list(n_list)) {
          if (rank < 1 || rank > 4) throw UsageError("--n: ranks must be in 1..4");
          std::size_t s = rank >= 3 ? (sample ? sample : 40) : sample;
          ScenarioReport r = verify_maBG(rank, lo, hi, depth < 0 ? default_depth(rank) : depth, s, seed);
          for (auto& c : r.cases) c.key = "n=" + std::to_string(rank) + " " + c.key;
          all.params.push_back(r.params);
          all.append(r);
        }
        all.wall_time_ms = sw.ms();
        return report_exit(all, json, timing);
      }
      if (*v_gl22) return report_exit(verify_gl22_examples(lo, hi, depth), json, timing);
      if (*v_struct) return report_exit(verify_structure(quick), json, timing);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
