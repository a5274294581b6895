#include "symrel/io.hpp"

#include <istream>
#include <sstream>

namespace symrel {

json field_to_json(const Field& f) {
    return json{{"p", f.p()}, {"k", f.k()}, {"modulus", f.modulus()}};
}

std::unique_ptr<const Field> field_from_json(const json& j) {
    try {
        unsigned p = j.at("p").get<unsigned>();
        unsigned k = j.at("k").get<unsigned>();
        if (j.contains("modulus"))
            return std::make_unique<Field>(p, k, j.at("modulus").get<std::vector<unsigned>>());
        return std::make_unique<Field>(p, k);
    } catch (const json::exception& e) {
        throw error(std::string("malformed field descriptor: ") + e.what());
    }
}

json epoly_to_json(const EPoly& p) {
    json terms = json::array();
    for (const auto& [a, c] : p.terms())
        terms.push_back(json{{"alpha", a}, {"coeff", c}});
    return json{{"n", p.n()}, {"field", field_to_json(p.field())}, {"terms", std::move(terms)}};
}

EPoly epoly_from_json(const Field& f, const json& j) {
    try {
        unsigned n = j.at("n").get<unsigned>();
        EPoly p(f, n);
        for (const auto& t : j.at("terms")) {
            auto alpha = t.at("alpha").get<std::vector<std::uint16_t>>();
            auto coeff = t.at("coeff").get<std::uint32_t>();
            if (coeff >= f.q()) throw error("coefficient index out of range");
            p.add_term(alpha, elem_index(coeff));
        }
        return p;
    } catch (const json::exception& e) {
        throw error(std::string("malformed polynomial: ") + e.what());
    }
}

LoadedEPoly read_epoly(std::istream& in) {
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.contains("field")) throw error("polynomial file lacks a field descriptor");
    auto field = field_from_json(j.at("field"));
    EPoly poly = epoly_from_json(*field, j);
    return {std::move(field), std::move(poly)};
}

json basis_to_json(const RelationBasis& rb) {
    const Field& f = *rb.field;
    json basis = json::array();
    for (const EPoly& p : rb.basis) basis.push_back(epoly_to_json(p));
    return json{{"q", f.q()},
                {"p", f.p()},
                {"k", f.k()},
                {"modulus", f.modulus()},
                {"n", rb.n},
                {"dim", rb.basis.size()},
                {"pivot_columns", rb.pivot_columns},
                {"basis", std::move(basis)}};
}

json oplog_to_json(std::span<const GaussOp> ops) {
    json out = json::array();
    for (const GaussOp& op : ops) {
        json o{{"op", std::string(1, char(op.kind))}, {"i", op.i}, {"j", op.j}};
        if (op.kind == GaussOp::Kind::RowAdd) o["factor"] = op.factor;
        out.push_back(std::move(o));
    }
    return out;
}

std::string epoly_to_text(const EPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [a, c] : p.terms()) {
        if (!first) out << " + ";
        first = false;
        bool constant = true;
        for (auto e : a)
            if (e != 0) constant = false;
        if (c != 1 || constant) out << c;
        bool lead = (c == 1 && !constant);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            if (!lead)
                out << " ";
            lead = false;
            out << var << (i + 1);
            if (a[i] > 1) out << "^" << a[i];
        }
    }
    return out.str();
}

std::string relation_line(const EPoly& p) { return epoly_to_text(p) + " = 0"; }

} // namespace symrel
