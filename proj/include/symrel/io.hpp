#ifndef SYMREL_IO_HPP
#define SYMREL_IO_HPP

#include <memory>
#include <string>

#include <json.hpp>

#include "symrel/relations.hpp"
#include "symrel/symfun.hpp"

namespace symrel {

using json = nlohmann::ordered_json;

// {"p":..., "k":..., "modulus":[c0,...,ck]}
json field_to_json(const Field& f);
// Heap allocation keeps FieldElement back-pointers valid.
std::unique_ptr<const Field> field_from_json(const json& j);

// {"n":..., "field":{...}, "terms":[{"alpha":[...],"coeff":index},...]}
// with terms in canonical order.
json epoly_to_json(const EPoly& p);
EPoly epoly_from_json(const Field& f, const json& j);

struct LoadedEPoly {
    std::unique_ptr<const Field> field;
    EPoly poly;
};
LoadedEPoly read_epoly(std::istream& in);

// {"q","p","k","modulus","n","dim","pivot_columns","basis"}
json basis_to_json(const RelationBasis& rb);

// [{"op":"A","i":..,"j":..,"factor":index} | {"op":"L"|"C","i":..,"j":..}, ...]
json oplog_to_json(std::span<const GaussOp> ops);

// ASCII rendering, e.g. "2 e1 e2 + e1 e2^2"; extension-field coefficients
// print as element indices. The zero polynomial prints as "0".
std::string epoly_to_text(const EPoly& p, const std::string& var = "e");
// "... = 0"
std::string relation_line(const EPoly& p);

} // namespace symrel

#endif
