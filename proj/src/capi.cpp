#include "qchrom/qchrom.h"

#include "alphachrom.hpp"
#include "jsonio.hpp"
#include "rook.hpp"
#include "verify.hpp"

#include <cstdlib>
#include <cstring>
#include <sstream>

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
qch_status guarded(F&& f) {
  try {
    return f();
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return QCH_ERR_USAGE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QCH_ERR_INTERNAL;
  }
}

qchrom::FerrersBoard parse_board(const char* text) {
  if (!text) throw std::domain_error("board string is null");
  std::vector<int> c;
  std::string tok;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      c.push_back(v);
    } catch (const std::exception&) {
      throw std::domain_error("bad token '" + tok + "' in board string");
    }
  }
  return qchrom::FerrersBoard(std::move(c));
}

qchrom::DyckPath parse_path(const char* text) {
  if (!text) throw std::domain_error("path string is null");
  return qchrom::DyckPath::parse(text);
}

} // namespace

struct qch_symfun {
  qchrom::SymFun f;
};

struct qch_report {
  qchrom::SuiteReport r;
};

extern "C" {

const char* qch_last_error(void) { return g_last_error.c_str(); }

void qch_string_free(char* s) { std::free(s); }

const char* qch_version(void) { return "qchromatic 1.0"; }

qch_status qch_paths_json(int n, char** out) {
  return guarded([&]() {
    qchrom::json arr = qchrom::json::array();
    for (const auto& p : qchrom::all_paths(n)) arr.push_back(qchrom::to_json(p));
    *out = dup_string(arr.dump());
    return QCH_OK;
  });
}

qch_status qch_csf(const char* path, const char* basis, qch_symfun** out) {
  return guarded([&]() {
    qchrom::SymFun f = qchrom::csf_m(parse_path(path));
    if (basis && *basis) f = qchrom::convert(f, qchrom::basis_from_name(basis));
    *out = new qch_symfun{std::move(f)};
    return QCH_OK;
  });
}

qch_status qch_llt(const char* path, const char* basis, qch_symfun** out) {
  return guarded([&]() {
    qchrom::SymFun f = qchrom::llt_m(parse_path(path));
    if (basis && *basis) f = qchrom::convert(f, qchrom::basis_from_name(basis));
    *out = new qch_symfun{std::move(f)};
    return QCH_OK;
  });
}

qch_status qch_symfun_convert(const qch_symfun* f, const char* basis, qch_symfun** out) {
  return guarded([&]() {
    if (!f) throw std::domain_error("null symfun handle");
    *out = new qch_symfun{qchrom::convert(f->f, qchrom::basis_from_name(basis ? basis : "m"))};
    return QCH_OK;
  });
}

qch_status qch_symfun_degree(const qch_symfun* f, int* out) {
  return guarded([&]() {
    if (!f) throw std::domain_error("null symfun handle");
    *out = f->f.degree();
    return QCH_OK;
  });
}

qch_status qch_symfun_to_json(const qch_symfun* f, char** out) {
  return guarded([&]() {
    if (!f) throw std::domain_error("null symfun handle");
    *out = dup_string(qchrom::to_json(f->f).dump());
    return QCH_OK;
  });
}

qch_status qch_symfun_to_text(const qch_symfun* f, char** out) {
  return guarded([&]() {
    if (!f) throw std::domain_error("null symfun handle");
    *out = dup_string(f->f.to_string());
    return QCH_OK;
  });
}

void qch_symfun_free(qch_symfun* f) { delete f; }

qch_status qch_alpha_csf_json(const char* path, const char* route, const char* alpha_basis,
                              int q1, int alpha, char** out) {
  return guarded([&]() {
    qchrom::DyckPath pi = parse_path(path);
    std::string rt = route ? route : "wordproduct";
    qchrom::json j;
    if (rt == "decorated") {
      if (alpha < 1) throw std::domain_error("decorated route needs alpha >= 1");
      j = qchrom::to_json(qchrom::alpha_csf_decorated(pi, alpha));
      j["alpha"] = alpha;
    } else {
      qchrom::AlphaBasis basis = qchrom::AlphaBasis::QBinomialShift;
      if (alpha_basis && std::string(alpha_basis) == "falling")
        basis = qchrom::AlphaBasis::FallingFactorial;
      else if (alpha_basis && *alpha_basis && std::string(alpha_basis) != "qbinom")
        throw std::domain_error(std::string("unknown alpha basis '") + alpha_basis + "'");
      qchrom::AlphaSymFun f = rt == "biword" ? qchrom::alpha_csf_biword(pi).to_alpha_symfun()
                          : rt == "wordproduct"
                              ? qchrom::alpha_csf_wordproduct(pi)
                              : throw std::domain_error("unknown route '" + rt + "'");
      qchrom::json terms = qchrom::json::array();
      for (const auto& [lam, coeff] : f.terms()) {
        qchrom::AlphaExpansion exp = qchrom::alpha_to_basis(coeff, basis, pi.n());
        qchrom::json coords = qchrom::json::array();
        for (std::size_t i = 0; i < exp.coord.size(); ++i) {
          if (exp.coord[i].is_zero()) continue;
          qchrom::json cj;
          if (q1) {
            cj = exp.coord[i].to_zpoly().eval_at_one().str();
          } else {
            cj = qchrom::to_json(exp.coord[i]);
          }
          coords.push_back(
              qchrom::json{{"k", static_cast<int>(i) + exp.k_offset()}, {"coeff", cj}});
        }
        terms.push_back(qchrom::json{{"partition", qchrom::to_json(lam)}, {"coords", coords}});
      }
      j = qchrom::json{{"degree", pi.n()},
                       {"route", rt},
                       {"alpha_basis",
                        basis == qchrom::AlphaBasis::FallingFactorial ? "falling" : "qbinom"},
                       {"q1", q1 != 0},
                       {"terms", terms}};
    }
    *out = dup_string(j.dump());
    return QCH_OK;
  });
}

qch_status qch_alpha_schur_json(const char* path, const char* alpha_basis, char** out) {
  return guarded([&]() {
    qchrom::DyckPath pi = parse_path(path);
    qchrom::AlphaBasis basis = alpha_basis && std::string(alpha_basis) == "falling"
                                   ? qchrom::AlphaBasis::FallingFactorial
                                   : qchrom::AlphaBasis::QBinomialShift;
    qchrom::json terms = qchrom::json::array();
    for (const auto& [lam, exp] : qchrom::alpha_schur(pi, basis))
      terms.push_back(qchrom::json{{"partition", qchrom::to_json(lam)}, {"expansion", qchrom::to_json(exp)}});
    qchrom::json j{{"degree", pi.n()}, {"terms", terms}};
    *out = dup_string(j.dump());
    return QCH_OK;
  });
}

qch_status qch_rook_poly_json(const char* board, int k, char** out) {
  return guarded([&]() {
    qchrom::FerrersBoard b = parse_board(board);
    if (k < 0 || k > b.n()) throw std::domain_error("k out of range");
    qchrom::json j{{"board", b.heights()}, {"k", k}, {"r_poly", qchrom::to_json(qchrom::r_poly(b, k))}};
    *out = dup_string(j.dump());
    return QCH_OK;
  });
}

qch_status qch_hit_board_json(const char* board, const char* mode, char** out) {
  return guarded([&]() {
    qchrom::FerrersBoard b = parse_board(board);
    std::string m = mode ? mode : "algebraic";
    qchrom::json hs = qchrom::json::array();
    if (m == "algebraic") {
      for (const auto& h : qchrom::hit_algebraic(b)) hs.push_back(qchrom::to_json(h));
    } else if (m == "torus-stat") {
      for (int k = 0; k <= b.n(); ++k) hs.push_back(qchrom::to_json(qchrom::hit_stat_route(b, k)));
    } else {
      throw std::domain_error("unknown hit mode '" + m + "'");
    }
    qchrom::json j{{"board", b.heights()}, {"mode", m}, {"hit", hs}};
    *out = dup_string(j.dump());
    return QCH_OK;
  });
}

qch_status qch_hit_path_json(const char* path, char** out) {
  return guarded([&]() {
    qchrom::DyckPath pi = parse_path(path);
    qchrom::json hs = qchrom::json::array();
    for (int k = 0; k <= pi.n(); ++k) hs.push_back(qchrom::to_json(qchrom::new_hit_poly(pi, k)));
    qchrom::json j{{"path", qchrom::to_json(pi)},
                   {"board", qchrom::board_from_dyck(pi).heights()},
                   {"mode", "new-stat"},
                   {"hit", hs}};
    *out = dup_string(j.dump());
    return QCH_OK;
  });
}

qch_status qch_verify(const char* suite, int max_n, int workers, unsigned seed, int big_biword,
                      qch_report** out) {
  return guarded([&]() {
    qchrom::VerifyOptions opts;
    opts.max_n = max_n;
    opts.workers = workers;
    opts.seed = seed;
    opts.big_biword = big_biword != 0;
    qchrom::SuiteReport r = qchrom::run_suite(suite ? suite : "all", opts);
    *out = new qch_report{std::move(r)};
    return QCH_OK;
  });
}

qch_status qch_report_passed(const qch_report* r, int* out) {
  return guarded([&]() {
    if (!r) throw std::domain_error("null report handle");
    *out = r->r.passed() ? 1 : 0;
    return QCH_OK;
  });
}

qch_status qch_report_only_conjecture_failures(const qch_report* r, int* out) {
  return guarded([&]() {
    if (!r) throw std::domain_error("null report handle");
    *out = r->r.only_conjecture_failures() ? 1 : 0;
    return QCH_OK;
  });
}

qch_status qch_report_to_json(const qch_report* r, char** out) {
  return guarded([&]() {
    if (!r) throw std::domain_error("null report handle");
    *out = dup_string(r->r.to_json_string());
    return QCH_OK;
  });
}

qch_status qch_report_to_text(const qch_report* r, char** out) {
  return guarded([&]() {
    if (!r) throw std::domain_error("null report handle");
    *out = dup_string(r->r.to_text());
    return QCH_OK;
  });
}

void qch_report_free(qch_report* r) { delete r; }

} // extern "C"
