#pragma once
// Text dumps of catalogued matrices, forms and constants.
//
// Matrix: a header line "matrix <dim> <conductor>", then one line per row with the
// entries in cyclo serialization separated by " | ".
// Form: MultiPoly::dump(), one "e1 ... e6 : coeff" line per term.
// Constant: the value on one line.

#include "constants.hpp"
#include "forms.hpp"
#include "invariants.hpp"
#include "matrep.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace hurwitz {

inline std::string dump_matrix(const Mat& m) {
    std::string s = "matrix " + std::to_string(m.dim()) + " " + std::to_string(m.conductor()) + "\n";
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) s += (j ? " | " : "") + m(i, j).str();
        s += "\n";
    }
    return s;
}

inline Mat parse_matrix_dump(const std::string& text) {
    std::istringstream is(text);
    std::string tag;
    int n = 0, cond = 0;
    if (!(is >> tag >> n >> cond) || tag != "matrix" || n <= 0) throw ParseError("bad matrix header");
    std::string line;
    std::getline(is, line);
    Mat m(n, cond);
    for (int i = 0; i < n; ++i) {
        if (!std::getline(is, line)) throw ParseError("matrix dump has too few rows");
        std::size_t pos = 0;
        for (int j = 0; j < n; ++j) {
            const std::size_t bar = line.find(" | ", pos);
            if ((bar == std::string::npos) != (j == n - 1)) throw ParseError("row " + std::to_string(i) + " has the wrong length");
            m(i, j) = CycloNum::parse(line.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos));
            pos = bar + 3;
        }
    }
    return m;
}

// matrices computed from forms rather than read from the catalogue
inline const std::vector<std::string>& derived_matrix_names() {
    static const std::vector<std::string> t = {"S_tilde.derived", "T_tilde.derived", "S_hat.derived", "T_hat.derived"};
    return t;
}

inline bool is_matrix_name(const std::string& name) {
    for (const auto& n : catalogue_names())
        if (n == name) return true;
    for (const auto& n : derived_matrix_names())
        if (n == name) return true;
    return false;
}

inline Mat dump_lookup_matrix(const std::string& name) {
    if (name == "S_tilde.derived") return derived_S_tilde();
    if (name == "T_tilde.derived") return derived_T_tilde();
    if (name == "S_hat.derived") return derived_S_hat();
    if (name == "T_hat.derived") return derived_T_hat();
    return build(name);
}

inline std::vector<std::string> dump_names() {
    std::vector<std::string> r = catalogue_names();
    for (const auto& n : derived_matrix_names()) r.push_back(n);
    for (const auto& n : form_names()) r.push_back(n);
    for (const auto& n : constant_names()) r.push_back(n);
    return r;
}

// matrices first, then forms, then constants; unknown names throw
inline std::string dump_object(const std::string& name) {
    if (is_matrix_name(name)) return dump_matrix(dump_lookup_matrix(name));
    for (const auto& n : form_names())
        if (n == name) return build_form(name).dump();
    for (const auto& n : constant_names())
        if (n == name) return cval(name).str() + "\n";
    throw DomainError("unknown object '" + name + "'");
}

}  // namespace hurwitz
