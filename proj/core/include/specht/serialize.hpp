#pragma once

// JSON encodings of the public data types.
//
// LaurentPoly: {"ring": "Q", "coeffs": {"<exponent>": "<rational>"}}
// GramMatrix:  {"partition": "3,2", "order": [[[1,2,3],[4,5]], ...], "kind": "plain"|"mixed",
//               "entries": [[LaurentPoly, ...], ...]}
// EDList:      {"ring": "Q"|"Fp:<p>"|"Z", "divisors": [LaurentPoly | "<integer>", ...]}

#include <json.hpp>

#include "specht/edlist.hpp"
#include "specht/gram.hpp"
#include "specht/hecke.hpp"
#include "specht/obstruction.hpp"

namespace specht::serialize {

using nlohmann::json;

json to_json(const qlaurent::LaurentPoly& f);
qlaurent::LaurentPoly poly_from_json(const json& j);

json to_json(const coxeter::Perm& w);
coxeter::Perm perm_from_json(const json& j);

json to_json(const tableaux::Tableau& t);
tableaux::Tableau tableau_from_json(const json& j);

// [[one-line image, LaurentPoly], ...] in increasing permutation order.
json to_json(const hecke::HeckeElt& h);
hecke::HeckeElt hecke_from_json(const json& j);

json to_json(const gram::GramMatrix& g);
gram::GramMatrix gram_from_json(const json& j);

json to_json(const snf::EDList& e);
snf::EDList edlist_from_json(const json& j);

json to_json(const snf::JumpNotation& j, std::int64_t max_m);
json to_json(const snf::ObstructionReport& r);

}  // namespace specht::serialize
