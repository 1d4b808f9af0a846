// Acceptance suite: every release criterion, one pass/fail line each.

#include "verify.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace qchrom;

namespace {

struct Criterion {
  int id;
  std::string description;
  // suites to run: (name, max_n, filter)
  struct Part {
    std::string suite;
    int max_n;
    std::string filter;
  };
  std::vector<Part> parts;
};

} // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "pinned binomial-basis monomial expansion at q=1", {{"thm3_1", 3, "pinned-binomial-coords"}}},
      {2, "pinned falling-factorial expansion at q=1", {{"thm4_2", 3, "pinned-falling-parts"}}},
      {3,
       "pinned rook statistics (inv=8, torus stat=10)",
       {{"gr_identity", 1, "pinned-inv-8"}, {"qhit", 1, "pinned-torus-stat-10"}}},
      {4,
       "pinned P-descent data (hitstat=19, inv=5)",
       {{"qhit", 1, "pinned-hitstat-19"}, {"f_expansion", 1, "pinned-pdes-and-inv"}}},
      {5, "principal specialization product formula, n<=6", {{"prop2_6", 6, "principal-product"}}},
      {6,
       "three-route alpha-csf agreement, n<=5",
       {{"thm3_1", 5, "three-route"}}},
      {7, "falling-factorial expansion via set partitions, n<=6", {{"thm4_2", 6, "falling-reassembly"}}},
      {8,
       "Garsia-Remmel and factorization identities, boards in [5]x[5]",
       {{"gr_identity", 5, "garsia-remmel"}, {"gjw", 5, "gjw-q1"}}},
      {9,
       "new q-hit solution on B_pi (n<=6) and board reduction (n<=5)",
       {{"qhit", 6, "new-hit-vs-algebraic"}, {"qhit", 5, "board-reduce"}}},
      {10, "fundamental quasisymmetric reconstruction, n<=6", {{"f_expansion", 6, "f-reconstruction"}}},
      {11,
       "Schur positivity in the shifted binomial basis (n<=6) and at integer alpha (n<=5)",
       {{"schur_qbinom", 6, "qbinom-positivity"}, {"schur_qbinom", 5, "integer-alpha-positivity"}}},
      {12, "falling-basis integrality sweep (conjecture check), n<=6", {{"conj5_3", 6, ""}}},
      {13, "Schur coefficient symmetry, n<=5", {{"symmetry5_6", 5, ""}}},
      {14, "LLT Schur recovery from both limit formulas, n<=5", {{"llt_limit", 5, ""}}},
      {15, "e-expansion mass identity, n<=6", {{"hikita", 6, ""}}},
      {16, "modular law at q=1 for csf, LLT and integer alpha, n<=5", {{"modular_law", 5, ""}}},
      {17, "complete-graph charge formula, n<=4", {{"complete_graph", 4, ""}}},
      {18, "Schur principal specialization vs SYT formula, n<=6", {{"schur_spec", 6, ""}}},
      {19,
       "Kronecker plethysm identity (deg<=4) and XY double specialization (n<=4)",
       {{"kronecker_id", 4, ""}, {"xy_check", 4, "xy-double-spec"}}},
  };

  int failures = 0;
  long long total_ms = 0;
  for (const Criterion& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::string detail;
    for (const auto& part : c.parts) {
      VerifyOptions opts;
      opts.max_n = part.max_n;
      opts.filter = part.filter;
      SuiteReport rep = run_suite(part.suite, opts);
      if (rep.checks.empty()) {
        pass = false;
        detail = "no checks matched filter '" + part.filter + "' in " + part.suite;
      }
      for (const CheckResult& r : rep.checks)
        if (!r.pass) {
          pass = false;
          detail = r.name + (r.witness.empty() ? "" : ": " + r.witness);
        }
    }
    long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    total_ms += ms;
    std::printf("[%s] criterion %2d: %s (%lld ms)%s%s\n", pass ? "PASS" : "FAIL", c.id,
                c.description.c_str(), ms, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  }
  std::printf("%d/%zu criteria passed in %lld ms\n", static_cast<int>(criteria.size()) - failures,
              criteria.size(), total_ms);
  return failures == 0 ? 0 : 1;
}
