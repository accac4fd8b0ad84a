#ifndef HZETA_SERIALIZATION_HPP
#define HZETA_SERIALIZATION_HPP

#include <json.hpp>

#include "hzeta/const_combo.hpp"
#include "hzeta/gamma_poly.hpp"
#include "hzeta/laurent.hpp"
#include "hzeta/neg_values.hpp"

namespace hzeta {

using ordered_json = nlohmann::ordered_json;

// BigRational <-> "p/q" (or "p" when q = 1); GammaPoly <-> ascending
// coefficient array; ConstCombo <-> {monomial-key: "p/q"} with keys sorted.

inline ordered_json to_json(const GammaPoly& p) {
    ordered_json arr = ordered_json::array();
    for (auto& c : p.coefficients()) arr.push_back(rat_to_string(c));
    return arr;
}

inline GammaPoly gamma_poly_from_json(const ordered_json& j) {
    std::vector<Rational> c;
    for (auto& e : j) c.push_back(rat_from_string(e.get<std::string>()));
    return GammaPoly(std::move(c));
}

inline ordered_json to_json(const ConstCombo& c) {
    ordered_json obj = ordered_json::object();
    for (auto& [m, q] : c.terms()) obj[monomial_key(m)] = rat_to_string(q);
    return obj;
}

inline ConstCombo const_combo_from_json(const ordered_json& j) {
    ConstCombo c;
    for (auto& [key, val] : j.items())
        c += ConstCombo::monomial(monomial_from_key(key), rat_from_string(val.get<std::string>()));
    return c;
}

// ---------------------------------------------------------------------------
// The paper's three tables, regenerated from the library. Golden copies are
// checked in under golden/ and compared byte-for-byte; entries are exact
// strings only, never decimals, so regeneration is precision-independent.
// ---------------------------------------------------------------------------

/// Table 1: J^2(-n) for n = 0..10.
inline ordered_json make_table1() {
    ordered_json rows = ordered_json::array();
    for (unsigned n = 0; n <= 10; ++n) {
        ordered_json row;
        row["n"] = n;
        row["J2"] = to_json(j2_negative(n));
        rows.push_back(row);
    }
    ordered_json out;
    out["table"] = 1;
    out["value"] = "J^2(-n)";
    out["rows"] = rows;
    return out;
}

/// Table 2: residues H^m(k) at k = 1..-4. Each row carries the a-coefficient
/// vector (a_n(0..n), n = 1-k) that defines the binomial-gamma form, plus the
/// instantiated residues for m = 1..4.
inline ordered_json make_table2() {
    ordered_json rows = ordered_json::array();
    for (long k = 1; k >= -4; --k) {
        ordered_json row;
        row["point"] = k;
        unsigned n = (unsigned)(1 - k);
        ordered_json acoeffs = ordered_json::array();
        for (unsigned l = 0; l <= n; ++l) acoeffs.push_back(rat_to_string(a_coeff(n, l)));
        row["a"] = acoeffs;
        ordered_json res = ordered_json::object();
        for (unsigned m = 1; m <= 4; ++m) res["m=" + std::to_string(m)] = to_json(residue(m, k));
        row["residues"] = res;
        rows.push_back(row);
    }
    ordered_json out;
    out["table"] = 2;
    out["value"] = "residues H^m(k)";
    out["rows"] = rows;
    return out;
}

/// Table 3: a_n(l) for n = 1..9, l = 1..4.
inline ordered_json make_table3() {
    ordered_json rows = ordered_json::array();
    for (unsigned n = 1; n <= 9; ++n) {
        ordered_json row;
        row["n"] = n;
        ordered_json vals = ordered_json::array();
        for (unsigned l = 1; l <= 4; ++l) vals.push_back(rat_to_string(a_coeff(n, l)));
        row["a"] = vals;
        rows.push_back(row);
    }
    ordered_json out;
    out["table"] = 3;
    out["value"] = "a_n(l)";
    out["rows"] = rows;
    return out;
}

inline ordered_json make_table(int which) {
    switch (which) {
        case 1: return make_table1();
        case 2: return make_table2();
        case 3: return make_table3();
        default: throw std::domain_error("make_table: tables 1, 2, 3");
    }
}

} // namespace hzeta

#endif
