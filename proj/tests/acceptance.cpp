// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "dsgl/harness.hpp"

using namespace dsgl;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

Outcome from_cases(const std::vector<CaseResult>& cases) {
  Outcome o;
  long pass = 0;
  for (const auto& c : cases) {
    if (verdict_ok(c.verdict)) {
      ++pass;
    } else if (o.ok) {
      o.ok = false;
      o.note = c.key + " " + verdict_name(c.verdict) + ": " + c.detail;
    }
  }
  if (cases.empty()) {
    o.ok = false;
    o.note = "no cases ran";
  }
  if (o.ok) o.note = std::to_string(pass) + " cases";
  return o;
}

std::vector<CaseResult> with_prefix(const ScenarioReport& r, const std::vector<std::string>& prefixes) {
  std::vector<CaseResult> out;
  for (const auto& c : r.cases)
    for (const auto& p : prefixes)
      if (c.key.rfind(p, 0) == 0) {
        out.push_back(c);
        break;
      }
  return out;
}

}  // namespace

int main() {
  ScenarioReport gl22 = verify_gl22_examples(-2, 2, 6);

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"C1 superalgebra axioms",
       [] { return from_cases({check_superalgebra_exhaustive(2), check_superalgebra_random(3, 10000, 11)}); }},
      {"C2 Borel combinatorics", [] { return from_cases({check_borel_counts(5), check_borel_graph_n3()}); }},
      {"C3 rho vectors", [] { return from_cases({check_rho(4)}); }},
      {"C4 gl(1|1) DS table", [] { return from_cases({check_gl11_table(-3, 3, 8)}); }},
      {"C5 contraction identities",
       [] {
         std::vector<CaseResult> cs;
         for (int n = 2; n <= 3; ++n) {
           auto c = contraction_check(n, 6);
           cs.push_back(make_case("contraction n=" + std::to_string(n), c.ok(), c.detail));
         }
         return from_cases(cs);
       }},
      {"C6 Verma DS at n=2, full grid",
       [] {
         ConjectureParams p;
         p.n = 2;
         p.depth = 6;
         auto r = verify_conjecture(p);
         Outcome o = from_cases(r.cases);
         if (r.cases.size() != 7500) o = {false, "expected 7500 cases, ran " + std::to_string(r.cases.size())};
         return o;
       }},
      {"C7 DS on star Vermas at n=3", [] { return from_cases(verify_star(3, 40, 4).cases); }},
      {"C8 DS on maximally atypical BG",
       [] {
         auto r = verify_maBG(2, -2, 2, 6);
         r.append(verify_maBG(3, -2, 2, 4, 40));
         return from_cases(r.cases);
       }},
      {"C9 gl(2|2) sequences", [&] { return from_cases(with_prefix(gl22, {"seq", "ses"})); }},
      {"C10 PBW golden formulas", [&] { return from_cases(with_prefix(gl22, {"formula"})); }},
      {"C11 character identities",
       [] {
         return from_cases({check_character_independence(2, 4, tuple_grid(2, -1, 1)),
                            check_bg_characters(2, 5, tuple_sample(2, -2, 2, 30, 5)),
                            check_bg_characters(3, 4, tuple_sample(3, -2, 2, 8, 5)),
                            check_bg_of_verma(2, 4, tuple_sample(2, -2, 2, 20, 5))});
       }},
      {"C12 induced action brackets",
       [] { return from_cases({check_induced_action(2, 4, 0), check_induced_action(3, 4, 60)}); }},
  };

  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Stopwatch sw;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failed;
    std::printf("%s %s (%s) [%ld ms]\n", o.ok ? "PASS" : "FAIL", name.c_str(), o.note.c_str(), sw.ms());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
