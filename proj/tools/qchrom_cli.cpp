// Command-line front end; talks to the library through the C API only.

#include <qchrom/qchrom.h>

#include <CLI11.hpp>

#include <cstdio>
#include <string>

namespace {

int usage_error() {
  std::fprintf(stderr, "error: %s\n", qch_last_error());
  return 2;
}

int emit_string(char* s) {
  std::fputs(s, stdout);
  std::fputc('\n', stdout);
  qch_string_free(s);
  return 0;
}

int emit_symfun(qch_symfun* f, const std::string& format) {
  char* s = nullptr;
  qch_status st = format == "json" ? qch_symfun_to_json(f, &s) : qch_symfun_to_text(f, &s);
  qch_symfun_free(f);
  if (st != QCH_OK) return usage_error();
  return emit_string(s);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact chromatic quasisymmetric functions, unicellular LLT polynomials, "
               "alpha-chromatic expansions and q-rook/q-hit polynomials"};
  app.require_subcommand(1);
  app.fallthrough(); // global flags may follow the subcommand

  std::string format = "text";
  int max_n = 0;
  int parallel = 0;
  unsigned seed = 12345;
  app.add_option("--format", format, "output format: text|json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-n", max_n, "bound for verification sweeps (0 = suite default)");
  app.add_option("--parallel", parallel, "worker threads (0 = QCHROM_WORKERS or 1)");
  app.add_option("--seed", seed, "seed for randomized property subsets");

  auto* paths_cmd = app.add_subcommand("paths", "list all n-Dyck paths");
  int paths_n = 3;
  paths_cmd->add_option("--n", paths_n, "path size")->required();

  std::string path_str, basis = "m", board_str, route = "wordproduct", alpha_basis = "qbinom";
  std::string hit_mode;
  bool q1 = false, new_stat = false, algebraic = false, torus_stat = false;
  int alpha = 0, rook_k = 0;

  auto* csf_cmd = app.add_subcommand("csf", "chromatic quasisymmetric function of a path");
  csf_cmd->add_option("--path", path_str, "Hessenberg vector (2,3,3) or step string")->required();
  csf_cmd->add_option("--basis", basis, "m|e|h|p|s");

  auto* llt_cmd = app.add_subcommand("llt", "unicellular LLT polynomial of a path");
  llt_cmd->add_option("--path", path_str, "Hessenberg vector or step string")->required();
  llt_cmd->add_option("--basis", basis, "m|e|h|p|s");

  auto* alpha_cmd = app.add_subcommand("alpha-csf", "alpha-chromatic symmetric function");
  alpha_cmd->add_option("--path", path_str, "Hessenberg vector or step string")->required();
  alpha_cmd->add_option("--route", route, "biword|wordproduct|decorated");
  alpha_cmd->add_option("--alpha-basis", alpha_basis, "qbinom|falling");
  alpha_cmd->add_flag("--q1", q1, "evaluate coefficients at q=1");
  alpha_cmd->add_option("--alpha", alpha, "integer alpha for the decorated route");

  auto* rook_cmd = app.add_subcommand("rook", "q-rook polynomial of a Ferrers board");
  rook_cmd->add_option("--board", board_str, "column heights, e.g. 0,1,3,4,4,4")->required();
  rook_cmd->add_option("--k", rook_k, "number of rooks")->required();

  auto* hit_cmd = app.add_subcommand("hit", "q-hit polynomials");
  hit_cmd->add_option("--board", board_str, "column heights");
  hit_cmd->add_option("--path", path_str, "Dyck path (for the P-descent statistic)");
  hit_cmd->add_flag("--algebraic", algebraic, "defining-identity route (board)");
  hit_cmd->add_flag("--torus-stat", torus_stat, "torus-statistic route (board)");
  hit_cmd->add_flag("--new-stat", new_stat, "P-descent statistic route (path)");

  auto* verify_cmd = app.add_subcommand("verify", "run a named verification suite");
  std::string suite = "all";
  bool big_biword = false;
  verify_cmd->add_option("--suite", suite,
                         "prop2_6 thm3_1 thm4_2 gr_identity gjw f_expansion qhit schur_qbinom "
                         "conj5_3 symmetry5_6 llt_limit hikita modular_law complete_graph "
                         "schur_spec kronecker_id xy_check all");
  verify_cmd->add_flag("--big-biword", big_biword, "run the full n=6 bi-word sweep");

  CLI11_PARSE(app, argc, argv);

  if (paths_cmd->parsed()) {
    char* s = nullptr;
    if (qch_paths_json(paths_n, &s) != QCH_OK) return usage_error();
    return emit_string(s);
  }
  if (csf_cmd->parsed() || llt_cmd->parsed()) {
    qch_symfun* f = nullptr;
    qch_status st = csf_cmd->parsed() ? qch_csf(path_str.c_str(), basis.c_str(), &f)
                                      : qch_llt(path_str.c_str(), basis.c_str(), &f);
    if (st != QCH_OK) return usage_error();
    return emit_symfun(f, format);
  }
  if (alpha_cmd->parsed()) {
    char* s = nullptr;
    if (qch_alpha_csf_json(path_str.c_str(), route.c_str(), alpha_basis.c_str(), q1 ? 1 : 0,
                           alpha, &s) != QCH_OK)
      return usage_error();
    return emit_string(s);
  }
  if (rook_cmd->parsed()) {
    char* s = nullptr;
    if (qch_rook_poly_json(board_str.c_str(), rook_k, &s) != QCH_OK) return usage_error();
    return emit_string(s);
  }
  if (hit_cmd->parsed()) {
    char* s = nullptr;
    qch_status st;
    if (new_stat || (!board_str.size() && path_str.size())) {
      if (path_str.empty()) {
        std::fprintf(stderr, "error: --new-stat needs --path\n");
        return 2;
      }
      st = qch_hit_path_json(path_str.c_str(), &s);
    } else {
      if (board_str.empty()) {
        std::fprintf(stderr, "error: hit needs --board or --path\n");
        return 2;
      }
      st = qch_hit_board_json(board_str.c_str(), torus_stat ? "torus-stat" : "algebraic", &s);
    }
    (void)algebraic;
    if (st != QCH_OK) return usage_error();
    return emit_string(s);
  }
  if (verify_cmd->parsed()) {
    qch_report* rep = nullptr;
    if (qch_verify(suite.c_str(), max_n, parallel, seed, big_biword ? 1 : 0, &rep) != QCH_OK)
      return usage_error();
    char* s = nullptr;
    qch_status st = format == "json" ? qch_report_to_json(rep, &s) : qch_report_to_text(rep, &s);
    if (st != QCH_OK) {
      qch_report_free(rep);
      return usage_error();
    }
    emit_string(s);
    int passed = 0;
    qch_report_passed(rep, &passed);
    qch_report_free(rep);
    return passed ? 0 : 1;
  }
  return 2;
}
