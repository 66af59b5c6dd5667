#include "specht/serialize.hpp"

#include <stdexcept>

namespace specht::serialize {

using qlaurent::CoeffRing;
using qlaurent::LaurentPoly;

json to_json(const LaurentPoly& f) {
  json coeffs = json::object();
  for (const auto& [e, c] : f.terms()) coeffs[std::to_string(e)] = c.get_str();
  return {{"ring", f.ring().to_string()}, {"coeffs", coeffs}};
}

LaurentPoly poly_from_json(const json& j) {
  const CoeffRing ring = CoeffRing::parse(j.at("ring").get<std::string>());
  std::vector<std::pair<LaurentPoly::Exponent, mpq_class>> terms;
  for (const auto& [e, c] : j.at("coeffs").items()) {
    mpq_class v(c.get<std::string>());
    v.canonicalize();
    terms.emplace_back(std::stoll(e), v);
  }
  return LaurentPoly::from_terms(terms, ring);
}

json to_json(const coxeter::Perm& w) { return w.one_line(); }

coxeter::Perm perm_from_json(const json& j) { return coxeter::Perm::from_one_line(j.get<std::vector<int>>()); }

json to_json(const tableaux::Tableau& t) { return t.rows(); }

tableaux::Tableau tableau_from_json(const json& j) {
  return tableaux::Tableau(j.get<std::vector<std::vector<int>>>());
}

json to_json(const hecke::HeckeElt& h) {
  json terms = json::array();
  for (const auto& [w, c] : h.terms()) terms.push_back(json::array({to_json(w), to_json(c)}));
  return {{"n", h.n()}, {"ring", h.ring().to_string()}, {"terms", terms}};
}

hecke::HeckeElt hecke_from_json(const json& j) {
  const CoeffRing ring = CoeffRing::parse(j.at("ring").get<std::string>());
  hecke::HeckeElt h(j.at("n").get<int>(), ring);
  for (const auto& t : j.at("terms")) h.add_term(perm_from_json(t.at(0)), poly_from_json(t.at(1)));
  return h;
}

json to_json(const gram::GramMatrix& g) {
  json order = json::array();
  for (const auto& t : g.order) order.push_back(to_json(t));
  json entries = json::array();
  for (const auto& row : g.entries) {
    json r = json::array();
    for (const auto& e : row) r.push_back(to_json(e));
    entries.push_back(std::move(r));
  }
  return {{"partition", g.lambda.to_string()},
          {"order", order},
          {"kind", g.kind == gram::GramMatrix::Kind::Plain ? "plain" : "mixed"},
          {"entries", entries}};
}

gram::GramMatrix gram_from_json(const json& j) {
  gram::GramMatrix g;
  g.lambda = tableaux::Partition::parse(j.at("partition").get<std::string>());
  for (const auto& t : j.at("order")) g.order.push_back(tableau_from_json(t));
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "plain") {
    g.kind = gram::GramMatrix::Kind::Plain;
  } else if (kind == "mixed") {
    g.kind = gram::GramMatrix::Kind::Mixed;
  } else {
    throw std::invalid_argument("unknown Gram matrix kind '" + kind + "'");
  }
  for (const auto& row : j.at("entries")) {
    std::vector<LaurentPoly> r;
    for (const auto& e : row) r.push_back(poly_from_json(e));
    g.entries.push_back(std::move(r));
  }
  if (g.entries.size() != g.order.size()) throw std::invalid_argument("Gram matrix size does not match its order");
  return g;
}

json to_json(const snf::EDList& e) {
  json divisors = json::array();
  for (const auto& d : e.divisors) {
    if (e.ring.kind() == CoeffRing::Kind::Integer) {
      divisors.push_back(d.is_zero() ? std::string("0") : d.leading_coeff().get_str());
    } else {
      divisors.push_back(to_json(d));
    }
  }
  return {{"ring", e.ring.to_string()}, {"divisors", divisors}};
}

snf::EDList edlist_from_json(const json& j) {
  snf::EDList e;
  e.ring = CoeffRing::parse(j.at("ring").get<std::string>());
  for (const auto& d : j.at("divisors")) {
    if (e.ring.kind() == CoeffRing::Kind::Integer) {
      e.divisors.push_back(LaurentPoly::constant(mpq_class(mpz_class(d.get<std::string>())), e.ring));
    } else {
      e.divisors.push_back(poly_from_json(d));
    }
  }
  return e;
}

json to_json(const snf::JumpNotation& j, std::int64_t max_m) {
  json steps = json::array();
  for (const auto& s : j.steps) {
    steps.push_back({{"factor", snf::factor_label(s.factor, max_m)}, {"multiplicity", s.multiplicity}});
  }
  return {{"ring", j.ring.to_string()}, {"steps", steps}, {"text", snf::render(j, max_m)}};
}

json to_json(const snf::ObstructionReport& r) {
  const auto& pr = r.problem;
  json f = json::array();
  for (std::size_t i = 0; i < pr.f_labels.size(); ++i) {
    f.push_back({{"factor", pr.f_labels[i]}, {"valuations", pr.f_counts[i]}});
  }
  json g = json::array();
  for (std::size_t i = 0; i < pr.g_labels.size(); ++i) {
    g.push_back({{"factor", pr.g_labels[i]}, {"weights", pr.weights[i]}, {"valuations", pr.g_counts[i]}});
  }
  json out = {{"p", r.p},
              {"status", r.status_text()},
              {"reason", r.reason},
              {"rows", pr.rows},
              {"rational_factors", f},
              {"derived", g},
              {"dominance", pr.dominance}};
  if (!r.assignment.empty()) out["assignment"] = r.assignment;
  return out;
}

}  // namespace specht::serialize
