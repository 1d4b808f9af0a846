#include "jsonio.hpp"

namespace qchrom {

json to_json(const ZPolyQ& p) {
  json out = json::array();
  p.for_terms([&](int e, const BigInt& c) { out.push_back(json::array({e, c.str()})); });
  return out;
}

json to_json(const RatQ& r) {
  if (r.is_laurent()) return to_json(r.num());
  return json{{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

json to_json(const Partition& p) {
  json out = json::array();
  for (int v : p.parts()) out.push_back(v);
  return out;
}

json to_json(const DyckPath& p) {
  json out = json::array();
  for (int v : p.heights()) out.push_back(v);
  return out;
}

json to_json(const SymFun& f) {
  json terms = json::array();
  for (const auto& [lam, c] : f.terms())
    terms.push_back(json{{"partition", to_json(lam)}, {"coeff", to_json(c)}});
  return json{{"degree", f.degree()}, {"basis", basis_name(f.basis())}, {"terms", terms}};
}

json to_json(const AlphaElem& e) {
  json arr = json::array();
  for (int k = 0; k <= e.deg(); ++k) {
    RatQ c = e.coeff(k);
    if (!c.is_zero()) arr.push_back(json::array({k, to_json(c)}));
  }
  return json{{"t_coeffs", arr}};
}

json to_json(const AlphaExpansion& e) {
  json arr = json::array();
  for (std::size_t i = 0; i < e.coord.size(); ++i) {
    if (e.coord[i].is_zero()) continue;
    arr.push_back(json{{"k", static_cast<int>(i) + e.k_offset()}, {"coeff", to_json(e.coord[i])}});
  }
  return json{{"basis", e.basis == AlphaBasis::FallingFactorial ? "falling" : "qbinom"},
              {"n", e.n},
              {"coords", arr},
              {"integral", e.integral()}};
}

json to_json(const AlphaSymFun& f) {
  json terms = json::array();
  for (const auto& [lam, c] : f.terms())
    terms.push_back(json{{"partition", to_json(lam)}, {"coeff", to_json(c)}});
  return json{{"degree", f.degree()}, {"basis", basis_name(f.basis())}, {"terms", terms}};
}

json to_json(const FExpansion& fe) {
  json arr = json::array();
  for (const FTriple& t : fe.triples) {
    json sigma = json::array();
    for (int v : t.sigma) sigma.push_back(v);
    json d = json::array();
    for (int v : t.pdes) d.push_back(v);
    arr.push_back(json{{"sigma", sigma}, {"exponent", t.exponent}, {"pdes", d}});
  }
  return json{{"n", fe.n}, {"triples", arr}};
}

ZPolyQ zpoly_from_json(const json& j) {
  ZPolyQ p;
  for (const auto& term : j) p.add_term(BigInt(term.at(1).get<std::string>()), term.at(0).get<int>());
  return p;
}

RatQ ratq_from_json(const json& j) {
  if (j.is_array()) return RatQ(zpoly_from_json(j));
  return RatQ(zpoly_from_json(j.at("num")), zpoly_from_json(j.at("den")));
}

Partition partition_from_json(const json& j) {
  std::vector<int> parts;
  for (const auto& v : j) parts.push_back(v.get<int>());
  return Partition(std::move(parts));
}

DyckPath path_from_json(const json& j) {
  std::vector<int> h;
  for (const auto& v : j) h.push_back(v.get<int>());
  return DyckPath(std::move(h));
}

SymFun symfun_from_json(const json& j) {
  SymFun f(j.at("degree").get<int>(), basis_from_name(j.at("basis").get<std::string>()));
  for (const auto& t : j.at("terms"))
    f.add_term(partition_from_json(t.at("partition")), ratq_from_json(t.at("coeff")));
  return f;
}

AlphaElem alpha_elem_from_json(const json& j) {
  AlphaElem e;
  for (const auto& t : j.at("t_coeffs")) e.set_coeff(t.at(0).get<int>(), ratq_from_json(t.at(1)));
  return e;
}

} // namespace qchrom
