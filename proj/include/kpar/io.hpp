#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kpar/algebra.hpp"
#include "kpar/dinf.hpp"
#include "kpar/factor_set.hpp"
#include "kpar/groupoid.hpp"
#include "kpar/idempotent.hpp"
#include "kpar/membership.hpp"
#include "kpar/monoid.hpp"
#include "kpar/s4.hpp"
#include "kpar/spectrum.hpp"

namespace kpar::io {

using nlohmann::json;

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

// ---- groups ----

inline FiniteGroup group_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw SchemaError("group: missing kind");
    std::string kind = j.at("kind");
    if (kind == "builtin") {
        std::string name = j.at("name");
        int param = j.value("param", 0);
        if (name == "cyclic") return FiniteGroup::cyclic(param);
        if (name == "dihedral") return FiniteGroup::dihedral(param);
        if (name == "symmetric") return FiniteGroup::symmetric(param);
        if (name == "klein") return FiniteGroup::klein();
        throw SchemaError("group: unknown builtin " + name);
    }
    if (kind == "cayley") {
        int n = j.at("n");
        std::vector<std::vector<int>> table = j.at("table");
        if (static_cast<int>(table.size()) != n) throw SchemaError("group: table size != n");
        std::vector<std::string> names;
        if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
        return FiniteGroup::from_table(std::move(table), std::move(names));
    }
    throw SchemaError("group: unknown kind " + kind);
}

/// "builtin:cyclic:4", "builtin:klein", or a path to a group JSON file.
inline FiniteGroup group_from_spec(const std::string& spec) {
    if (spec.rfind("builtin:", 0) == 0) {
        std::string rest = spec.substr(8);
        auto colon = rest.find(':');
        json j{{"kind", "builtin"}};
        if (colon == std::string::npos) {
            j["name"] = rest;
        } else {
            j["name"] = rest.substr(0, colon);
            try {
                j["param"] = std::stoi(rest.substr(colon + 1));
            } catch (const std::exception&) {
                throw ParseError("bad builtin parameter in " + spec);
            }
        }
        return group_from_json(j);
    }
    return group_from_json(load_json_file(spec));
}

inline json group_to_json(const FiniteGroup& g) {
    json names = json::array();
    for (int i = 0; i < g.order(); ++i) names.push_back(g.name(i));
    return json{{"kind", "cayley"}, {"n", g.order()}, {"table", g.table()}, {"names", names}};
}

// ---- scalars and factor sets ----

inline json field_to_json(Field f) {
    if (f.kind == Field::Kind::rationals) return json{{"kind", "Q"}};
    return json{{"kind", "GF"}, {"p", f.p}};
}

inline Field field_from_json(const json& j) {
    std::string kind = j.at("kind");
    if (kind == "Q") return Field::rationals();
    if (kind == "GF") return Field::gf(j.at("p").get<std::uint32_t>());
    throw SchemaError("field: unknown kind " + kind);
}

inline json scalar_to_json(const FieldScalar& s) {
    if (s.field().kind == Field::Kind::rationals) return s.str();
    return s.res();
}

inline FieldScalar scalar_from_json(Field f, const json& j) {
    if (f.kind == Field::Kind::rationals) {
        if (j.is_number_integer()) return FieldScalar::from_int(f, j.get<long long>());
        if (j.is_string()) {
            try {
                return FieldScalar::rational(Rational::parse(j.get<std::string>()));
            } catch (const ParseError& e) {
                throw SchemaError(e.what());
            }
        }
        throw SchemaError("rational literal must be a string or integer");
    }
    if (j.is_number_integer()) return FieldScalar::from_int(f, j.get<long long>());
    if (j.is_string()) {
        try {
            return FieldScalar::from_int(f, std::stoll(j.get<std::string>()));
        } catch (const std::exception&) {
            throw SchemaError("bad residue literal");
        }
    }
    throw SchemaError("residue literal must be an integer");
}

inline json factor_set_to_json(const FactorSet& s) {
    int n = s.order();
    json rows = json::array();
    for (int g = 0; g < n; ++g) {
        json row = json::array();
        for (int h = 0; h < n; ++h) row.push_back(scalar_to_json(s.at(g, h)));
        rows.push_back(std::move(row));
    }
    return json{{"field", field_to_json(s.field())}, {"n", n}, {"entries", rows}};
}

inline FactorSet factor_set_from_json(const FiniteGroup& g, const json& j) {
    Field f = field_from_json(j.at("field"));
    int n = j.at("n");
    if (n != g.order()) throw SchemaError("factor set order does not match the group");
    const json& rows = j.at("entries");
    if (static_cast<int>(rows.size()) != n) throw SchemaError("factor set: wrong row count");
    FactorSet s(g, f);
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(rows[a].size()) != n)
            throw SchemaError("factor set: wrong column count");
        for (int b = 0; b < n; ++b) s.set(a, b, scalar_from_json(f, rows[a][b]));
    }
    return s;
}

// ---- generators ----

inline IdempotentGenerator generator_from_json(const json& j) {
    IdempotentGenerator g;
    int keys = j.contains("diagonal") + j.contains("lateral") + j.contains("general");
    if (keys != 1)
        throw SchemaError("generator: exactly one of diagonal/lateral/general expected");
    if (j.contains("diagonal")) {
        g.kind = IdempotentGenerator::Kind::diagonal;
        for (int idx : j.at("diagonal").get<std::vector<int>>()) g.diag |= Mask(1) << idx;
        return g;
    }
    const json& arr = j.contains("lateral") ? j.at("lateral") : j.at("general");
    g.kind = j.contains("lateral") ? IdempotentGenerator::Kind::lateral
                                   : IdempotentGenerator::Kind::general;
    for (const auto& p : arr) {
        if (!p.is_array() || p.size() != 2) throw SchemaError("generator: pairs expected");
        g.pairs.insert({p[0].get<int>(), p[1].get<int>()});
    }
    return g;
}

inline FactorSet generate(const FiniteGroup& g, Field field, const IdempotentGenerator& gen) {
    switch (gen.kind) {
        case IdempotentGenerator::Kind::diagonal: return diagonal(g, field, gen.diag);
        case IdempotentGenerator::Kind::lateral: return lateral(g, field, gen.pairs);
        default: return general(g, field, gen.pairs);
    }
}

inline DInfGenerator dinf_generator_from_json(const json& j) {
    DInfGenerator g;
    for (long long v : j.value("nu0_zeros", std::vector<long long>{})) g.nu0_zeros.insert(v);
    for (long long v : j.value("nu1_zeros", std::vector<long long>{})) g.nu1_zeros.insert(v);
    for (const auto& p : j.value("omega0_zeros", json::array()))
        g.omega0_zeros.insert({p.at(0).get<long long>(), p.at(1).get<long long>()});
    for (const auto& p : j.value("omega1_zeros", json::array()))
        g.omega1_zeros.insert({p.at(0).get<long long>(), p.at(1).get<long long>()});
    g.validate();
    return g;
}

// ---- report emission ----

inline json mask_to_json(Mask m) { return mask_elements(m); }

inline json algebra_element_to_json(const AlgebraElement& x) {
    json out = json::array();
    for (const auto& [k, c] : x.terms()) {
        out.push_back(json{{"U", mask_to_json(k.u)}, {"g", k.g}, {"coeff", scalar_to_json(c)}});
    }
    return out;
}

inline AlgebraElement algebra_element_from_json(const FiniteGroup&, Field f, const json& j) {
    AlgebraElement x;
    for (const auto& t : j) {
        Mask u = 0;
        for (int e : t.at("U").get<std::vector<int>>()) u |= Mask(1) << e;
        x.add_term(BasisKey{u, t.at("g").get<int>()}, scalar_from_json(f, t.at("coeff")));
    }
    return x;
}

inline json omega_report_to_json(const Spectrum& sp) {
    json t1 = json::array(), t2 = json::array(), members = json::array();
    for (Mask m : sp.prohibitions().type1) t1.push_back(mask_to_json(m));
    for (Mask m : sp.prohibitions().type2) t2.push_back(mask_to_json(m));
    for (Mask m : sp.members()) members.push_back(mask_to_json(m));
    FreenessReport fr = freeness_report(sp);
    json fixed = json::array();
    for (const auto& e : fr.fixed_points) {
        json fs = json::array();
        for (Mask m : e.fixed) fs.push_back(mask_to_json(m));
        fixed.push_back(json{{"g", e.g}, {"fixed", fs}});
    }
    json points = json::array();
    for (const auto& p : fr.points) {
        points.push_back(json{{"xi", mask_to_json(p.xi)},
                              {"size", p.size},
                              {"admissible_count", p.admissible_count}});
    }
    long long null_size = 0;
    for (int a = 0; a < sp.group().order(); ++a)
        for (int b = 0; b < sp.group().order(); ++b)
            null_size += sp.sigma().at(a, b).is_zero();
    return json{{"group_order", sp.group().order()},
                {"null_size", null_size},
                {"prohibitions", json{{"type1", t1}, {"type2", t2}}},
                {"omega", members},
                {"dimension", dimension(sp)},
                {"fixed_points", fixed},
                {"points", points},
                {"topologically_free", fr.topologically_free}};
}

inline json decomposition_to_json(const Spectrum&, const DecompositionReport& rep) {
    json summands = json::array();
    for (const auto& s : rep.summands) {
        json sigma_i = json::array();
        for (const auto& row : s.iso.cocycle) {
            json r = json::array();
            for (const auto& v : row) r.push_back(scalar_to_json(v));
            sigma_i.push_back(std::move(r));
        }
        json objects = json::array();
        for (Mask m : s.objects) objects.push_back(mask_to_json(m));
        summands.push_back(json{{"n_i", s.n},
                                {"H_i", json{{"order", mask_size(s.iso.subgroup)},
                                             {"elements", mask_to_json(s.iso.subgroup)}}},
                                {"sigma_i", sigma_i},
                                {"objects", objects},
                                {"base", mask_to_json(s.base)}});
    }
    return json{{"summands", summands},
                {"dim_check", json{{"lhs", rep.dim_algebra}, {"rhs", rep.dim_summands}}},
                {"simple", rep.summands.size() == 1 && rep.summands.front().n == 1 &&
                               mask_size(rep.summands.front().iso.subgroup) == 1}};
}

inline json membership_to_json(const MembershipCertificate& c) {
    json v = json::array();
    for (const auto& x : c.violations) {
        v.push_back(json{{"axiom", x.axiom}, {"g", x.g}, {"h", x.h}, {"what", x.what}});
    }
    return json{{"member", c.member}, {"violations", v}};
}

inline json dinf_certificate_to_json(const DInfCertificate& c) {
    auto words = [](const std::vector<DWord>& ws) {
        json out = json::array();
        for (const auto& w : ws) out.push_back(json{{"b", w.refl}, {"k", w.k}});
        return out;
    };
    return json{{"ok", c.ok},
                {"window", c.window},
                {"point", words(c.point)},
                {"blocked", words(c.blocked)},
                {"witnesses", words(c.witnesses)},
                {"formula_agrees", c.formula_agrees},
                {"note", c.note}};
}

} // namespace kpar::io
