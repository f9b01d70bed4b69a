#pragma once
// The senary forms: quadrics A, B, C; cubics D; sextics G; the quartic L and the
// degree-12 form M; phi, psi, chi and delta families.

#include "constants.hpp"
#include "matrep.hpp"
#include "poly.hpp"

#include <array>
#include <string>
#include <vector>

namespace hurwitz {

namespace detail {

inline const std::vector<MultiPoly>& zvars() {
    static const std::vector<MultiPoly> z = variables(6, 13);
    return z;
}

// z_a z_b with one-based indices
inline MultiPoly zz(int a, int b) { return zvars()[a - 1] * zvars()[b - 1]; }
inline MultiPoly zzz(int a, int b, int c) { return zz(a, b) * zvars()[c - 1]; }

// quadric family sharing the shape (x0, s1 u1^2 - 2 ..., ...); rows give (sign, square, pair)
struct QuadricRow {
    int sign;
    int sq;
    int a, b;
};

inline MultiPoly quadric(const QuadricRow& r) { return r.sign * zz(r.sq, r.sq) - 2 * zz(r.a, r.b); }

}  // namespace detail

// A_0 .. A_6
inline const std::vector<MultiPoly>& A_forms() {
    using detail::zz;
    static const std::vector<MultiPoly> a = [] {
        std::vector<MultiPoly> v;
        v.push_back(zz(1, 4) + zz(2, 5) + zz(3, 6));
        for (const auto& r : std::vector<detail::QuadricRow>{
                 {1, 1, 3, 4}, {-1, 5, 2, 4}, {1, 2, 1, 5}, {1, 3, 2, 6}, {-1, 4, 1, 6}, {-1, 6, 3, 5}})
            v.push_back(detail::quadric(r));
        return v;
    }();
    return a;
}

inline const std::vector<MultiPoly>& B_forms() {
    using detail::zz;
    static const std::vector<MultiPoly> b = [] {
        std::vector<MultiPoly> v;
        v.push_back(zz(1, 6) + zz(2, 4) + zz(3, 5));
        for (const auto& r : std::vector<detail::QuadricRow>{
                 {1, 3, 2, 5}, {-1, 6, 1, 5}, {1, 1, 3, 6}, {1, 2, 1, 4}, {-1, 5, 3, 4}, {-1, 4, 2, 6}})
            v.push_back(detail::quadric(r));
        return v;
    }();
    return b;
}

inline const std::vector<MultiPoly>& C_forms() {
    using detail::zz;
    static const std::vector<MultiPoly> c = [] {
        std::vector<MultiPoly> v;
        v.push_back(zz(1, 5) + zz(2, 6) + zz(3, 4));
        for (const auto& r : std::vector<detail::QuadricRow>{
                 {1, 2, 1, 6}, {-1, 4, 3, 6}, {1, 3, 2, 4}, {1, 1, 3, 5}, {-1, 6, 2, 5}, {-1, 5, 1, 4}})
            v.push_back(detail::quadric(r));
        return v;
    }();
    return c;
}

// D_0 .. D_12, D_inf at index 13
inline const std::vector<MultiPoly>& D_forms() {
    using detail::zzz;
    static const std::vector<MultiPoly> d = [] {
        std::vector<MultiPoly> v(14, MultiPoly(6, 13));
        v[0] = zzz(1, 2, 3);
        v[1] = 2 * zzz(2, 3, 3) + zzz(2, 2, 6) - zzz(4, 4, 5) + zzz(1, 5, 6);
        v[2] = -zzz(6, 6, 6) + zzz(2, 2, 4) - 2 * zzz(2, 5, 5) + zzz(1, 4, 5) + 3 * zzz(3, 5, 6);
        v[3] = 2 * zzz(1, 2, 2) + zzz(1, 1, 5) - zzz(4, 6, 6) + zzz(3, 4, 5);
        v[4] = -zzz(2, 2, 3) + zzz(1, 6, 6) - 2 * zzz(4, 4, 6) - zzz(1, 3, 5);
        v[5] = -zzz(4, 4, 4) + zzz(3, 3, 5) - 2 * zzz(3, 6, 6) + zzz(2, 5, 6) + 3 * zzz(1, 4, 6);
        v[6] = -zzz(5, 5, 5) + zzz(1, 1, 6) - 2 * zzz(1, 4, 4) + zzz(3, 4, 6) + 3 * zzz(2, 4, 5);
        v[7] = -zzz(2, 2, 2) + zzz(3, 4, 4) - zzz(1, 3, 6) - 3 * zzz(1, 2, 5) + 2 * zzz(1, 1, 4);
        v[8] = -zzz(1, 1, 1) + zzz(2, 6, 6) - zzz(2, 3, 5) - 3 * zzz(1, 3, 4) + 2 * zzz(3, 3, 6);
        v[9] = 2 * zzz(1, 1, 3) + zzz(3, 3, 4) - zzz(5, 5, 6) + zzz(2, 4, 6);
        v[10] = -zzz(1, 3, 3) + zzz(2, 4, 4) - 2 * zzz(4, 5, 5) - zzz(1, 2, 6);
        v[11] = -zzz(3, 3, 3) + zzz(1, 5, 5) - zzz(1, 2, 4) - 3 * zzz(2, 3, 6) + 2 * zzz(2, 2, 5);
        v[12] = -zzz(1, 1, 2) + zzz(3, 5, 5) - 2 * zzz(5, 6, 6) - zzz(2, 3, 4);
        v[13] = zzz(4, 5, 6);
        return v;
    }();
    return d;
}

inline constexpr int D_inf = 13;

// G_k as quadratic expressions in a D-vector (index 13 is D_inf); applying the same
// expression to act(g, D_i) gives act(g, G_k) because substitution is a ring map.
struct QuadTerm {
    long c;
    int i, j;
};

inline const std::array<std::vector<QuadTerm>, 13>& G_table() {
    constexpr int I = D_inf;
    static const std::array<std::vector<QuadTerm>, 13> t = {{
        {{1, 0, 0}, {1, I, I}},
        {{-1, 7, 7}, {2, 0, 1}, {10, I, 1}, {2, 2, 12}, {-2, 3, 11}, {-4, 4, 10}, {-2, 9, 5}},
        {{-2, 1, 1}, {-4, 0, 2}, {6, I, 2}, {-2, 4, 11}, {2, 5, 10}, {-2, 6, 9}, {-2, 7, 8}},
        {{-1, 8, 8}, {2, 0, 3}, {10, I, 3}, {2, 6, 10}, {-2, 9, 7}, {-4, 12, 4}, {-2, 1, 2}},
        {{-1, 2, 2}, {10, 0, 4}, {-2, I, 4}, {2, 5, 12}, {-2, 9, 8}, {-4, 1, 3}, {-2, 10, 7}},
        {{-2, 9, 9}, {-4, 0, 5}, {6, I, 5}, {-2, 10, 8}, {2, 6, 12}, {-2, 2, 3}, {-2, 11, 7}},
        {{-2, 3, 3}, {-4, 0, 6}, {6, I, 6}, {-2, 12, 7}, {2, 2, 4}, {-2, 5, 1}, {-2, 8, 11}},
        {{-2, 10, 10}, {6, 0, 7}, {4, I, 7}, {-2, 1, 6}, {-2, 2, 5}, {-2, 8, 12}, {-2, 9, 11}},
        {{-2, 4, 4}, {6, 0, 8}, {4, I, 8}, {-2, 3, 5}, {-2, 6, 2}, {-2, 11, 10}, {-2, 1, 7}},
        {{-1, 11, 11}, {2, 0, 9}, {10, I, 9}, {2, 5, 4}, {-2, 1, 8}, {-4, 10, 12}, {-2, 3, 6}},
        {{-1, 5, 5}, {10, 0, 10}, {-2, I, 10}, {2, 6, 4}, {-2, 3, 7}, {-4, 9, 1}, {-2, 12, 11}},
        {{-2, 12, 12}, {6, 0, 11}, {4, I, 11}, {-2, 9, 2}, {-2, 5, 6}, {-2, 7, 4}, {-2, 3, 8}},
        {{-1, 6, 6}, {10, 0, 12}, {-2, I, 12}, {2, 2, 10}, {-2, 1, 11}, {-4, 3, 9}, {-2, 4, 8}},
    }};
    return t;
}

inline std::vector<MultiPoly> G_from_D(const std::vector<MultiPoly>& d) {
    if (d.size() != 14) throw DomainError("G forms need the 14 D forms");
    std::vector<MultiPoly> g;
    for (const auto& row : G_table()) {
        MultiPoly s(6, 13);
        for (const auto& t : row) s += t.c * (d[t.i] * d[t.j]);
        g.push_back(std::move(s));
    }
    return g;
}

inline const std::vector<MultiPoly>& G_forms() {
    static const std::vector<MultiPoly> g = G_from_D(D_forms());
    return g;
}

// 7 * 13^2 G0^2 + G1 G12 + G2 G11 + ... + G6 G7
inline MultiPoly M_from_G(const std::vector<MultiPoly>& g) {
    MultiPoly m = (7 * 169) * (g[0] * g[0]);
    for (int k = 1; k <= 6; ++k) m += g[k] * g[13 - k];
    return m;
}

// A0^2 + A1 A5 + A2 A3 + A4 A6 in any 7-vector of forms
inline MultiPoly L_from_A(const std::vector<MultiPoly>& a) {
    return a[0] * a[0] + a[1] * a[5] + a[2] * a[3] + a[4] * a[6];
}

inline const MultiPoly& L_form() {
    static const MultiPoly l = L_from_A(A_forms());
    return l;
}

// the printed quartic expansion of L
inline MultiPoly L_expanded() {
    using detail::zvars;
    const auto& z = zvars();
    auto q = [&](int a, int b, int c, int d) { return z[a - 1] * z[b - 1] * z[c - 1] * z[d - 1]; };
    MultiPoly s = (q(3, 4, 4, 4) + q(1, 5, 5, 5) + q(2, 6, 6, 6)) - (q(6, 1, 1, 1) + q(4, 2, 2, 2) + q(5, 3, 3, 3)) +
                  3 * (q(1, 2, 4, 5) + q(2, 3, 5, 6) + q(3, 1, 6, 4));
    return 2 * s;
}

// phi_inf = sqrt13 A0, psi_inf = sqrt13 B0, chi_inf = sqrt13 C0
inline MultiPoly phi_inf() { return sqrt13() * A_forms()[0]; }
inline MultiPoly psi_inf() { return sqrt13() * B_forms()[0]; }
inline MultiPoly chi_inf() { return sqrt13() * C_forms()[0]; }

// exponent of zeta attached to the k-th quadric in the nu-expansion: k^2 mod 13
inline long square_exponent(int k) { return static_cast<long>(k) * k % 13; }

// F_0 + zeta^nu F_1 + zeta^(4 nu) F_2 + ... for a 7-vector of quadrics
inline MultiPoly theta_combination(const std::vector<MultiPoly>& f, long nu) {
    MultiPoly s = f[0];
    for (int k = 1; k <= 6; ++k) s += CycloNum::zeta(13, square_exponent(k) * nu) * f[k];
    return s;
}

// delta_inf = 13^2 (z1^2 z2^2 z3^2 + z4^2 z5^2 z6^2) = 13^2 G0
inline MultiPoly delta_inf() {
    const auto& d = D_forms();
    return 169 * (d[0] * d[0] + d[D_inf] * d[D_inf]);
}

// names accepted by build_form / dump
inline std::vector<std::string> form_names() {
    std::vector<std::string> n;
    for (const char* fam : {"A", "B", "C"})
        for (int k = 0; k <= 6; ++k) n.push_back(fam + std::to_string(k));
    for (int k = 0; k <= 12; ++k) n.push_back("D" + std::to_string(k));
    n.push_back("Dinf");
    for (int k = 0; k <= 12; ++k) n.push_back("G" + std::to_string(k));
    for (const char* s : {"L", "L_expanded", "M", "phi_inf", "psi_inf", "chi_inf", "delta_inf"}) n.push_back(s);
    for (int k = 0; k <= 12; ++k) n.push_back("phi" + std::to_string(k));
    for (int k = 0; k <= 12; ++k) n.push_back("delta" + std::to_string(k));
    return n;
}

inline MultiPoly build_form(const std::string& name) {
    auto index = [&](std::size_t skip, int hi) {
        const std::string rest = name.substr(skip);
        if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
            throw DomainError("unknown form '" + name + "'");
        const int k = std::stoi(rest);
        if (k > hi) throw DomainError("form index out of range in '" + name + "'");
        return k;
    };
    if (name == "Dinf") return D_forms()[D_inf];
    if (name == "L") return L_form();
    if (name == "L_expanded") return L_expanded();
    if (name == "M") return M_from_G(G_forms());
    if (name == "phi_inf") return phi_inf();
    if (name == "psi_inf") return psi_inf();
    if (name == "chi_inf") return chi_inf();
    if (name == "delta_inf") return delta_inf();
    if (name.rfind("phi", 0) == 0) return act(build("S") * build("T").pow(index(3, 12)), phi_inf());
    if (name.rfind("delta", 0) == 0) return act(build("S") * build("T").pow(index(5, 12)), delta_inf());
    if (name.empty()) throw DomainError("empty form name");
    switch (name[0]) {
        case 'A': return A_forms()[index(1, 6)];
        case 'B': return B_forms()[index(1, 6)];
        case 'C': return C_forms()[index(1, 6)];
        case 'D': return D_forms()[index(1, 12)];
        case 'G': return G_forms()[index(1, 12)];
    }
    throw DomainError("unknown form '" + name + "'");
}

}  // namespace hurwitz
