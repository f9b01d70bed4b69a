#pragma once
// Named scalars. Every radical lives in Q(zeta_13) (or Q(zeta_7), Q(zeta_52)) as an
// explicit cyclotomic combination; each value is checked against its identity when
// the catalogue is first built.

#include "cyclo.hpp"
#include "error.hpp"

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hurwitz {

struct NamedConstant {
    std::string name;
    CycloNum value;
    std::string identity;
};

namespace detail {

inline CycloNum z13(std::string_view s) { return parse_zeta_expr(13, s); }

// zeta^a - zeta^-a
inline CycloNum odd13(long a) { return CycloNum::zeta(13, a) - CycloNum::zeta(13, -a); }

inline CycloNum sqrt13_value() { return z13("z+z^12+z^3+z^10+z^9+z^4-z^5-z^8-z^2-z^11-z^6-z^7"); }

inline CycloNum theta_value(int i) {
    static const char* defs[4] = {"z+z^3+z^9", "z^2+z^6+z^5", "z^4+z^12+z^10", "z^8+z^11+z^7"};
    return z13(defs[i - 1]);
}

// coefficients of (zeta-zeta^12), (zeta^5-zeta^8), (zeta^3-zeta^10), (zeta^2-zeta^11),
// (zeta^9-zeta^4), (zeta^6-zeta^7) for q_1..q_12
inline const int q_table[12][6] = {
    {-2, -2, 6, -1, 4, 2},  {-4, 3, 3, -1, -2, 0}, {6, -1, 4, 2, -2, -2},  {-2, 4, 2, -2, 1, 6},
    {-2, 0, -4, 3, 3, -1},  {3, -1, -2, 0, -4, 3}, {1, 3, 0, -2, -3, -4},  {0, -2, -3, -4, 1, 3},
    {4, 2, -2, -2, 6, -1},  {1, 6, -2, 4, 2, -2}, {-3, -4, 1, 3, 0, -2},  {2, -2, 1, 6, -2, 4},
};

inline CycloNum q_value(int k) {
    static const long base[6] = {1, 5, 3, 2, 9, 6};
    CycloNum r(13);
    for (int t = 0; t < 6; ++t) r += odd13(base[t]) * static_cast<long>(q_table[k - 1][t]);
    return r;
}

inline bool has_positive_imag(const CycloNum& x) { return x.embed().im > 0; }

struct ConstantEntry {
    NamedConstant c;
    std::function<bool(const CycloNum&)> check;
};

inline std::vector<ConstantEntry> build_constants() {
    const CycloNum one(13, 1);
    const CycloNum s13 = sqrt13_value();
    const CycloNum th1 = theta_value(1), th2 = theta_value(2), th3 = theta_value(3), th4 = theta_value(4);
    const CycloNum r2 = th1 - th3, r4 = th2 - th4;
    std::vector<ConstantEntry> out;
    auto add = [&](std::string name, CycloNum v, std::string ident, std::function<bool(const CycloNum&)> chk) {
        out.push_back({{std::move(name), std::move(v), std::move(ident)}, std::move(chk)});
    };

    add("zeta", CycloNum::zeta(13), "zeta^13 = 1, zeta != 1", [](const CycloNum& z) {
        CycloNum p(13, 1);
        for (int i = 0; i < 13; ++i) p *= z;
        return p.is_one() && !z.is_one();
    });
    add("sqrt13", s13, "sqrt13^2 = 13, quadratic Gauss sum", [](const CycloNum& x) {
        return x * x == CycloNum(13, 13) && x.embed().re > 0;
    });
    for (int i = 1; i <= 4; ++i) {
        add("theta" + std::to_string(i), theta_value(i), "z^4+z^3+2z^2-4z+3 = 0", [](const CycloNum& t) {
            CycloNum t2 = t * t;
            return (t2 * t2 + t2 * t + t2 * 2 - t * 4 + CycloNum(13, 3)).is_zero();
        });
    }
    auto sum_is_sqrt13 = [s13](const CycloNum&) {
        return z13("z+z^12-z^5-z^8") + z13("z^3+z^10-z^2-z^11") + z13("z^9+z^4-z^6-z^7") == s13;
    };
    add("alpha", z13("z+z^12-z^5-z^8"), "alpha+beta+gamma = sqrt13", sum_is_sqrt13);
    add("beta", z13("z^3+z^10-z^2-z^11"), "alpha+beta+gamma = sqrt13", sum_is_sqrt13);
    add("gamma", z13("z^9+z^4-z^6-z^7"), "alpha+beta+gamma = sqrt13", sum_is_sqrt13);

    // p_k = sqrt13 (zeta^a + zeta^-a), checked against the longer expansion
    static const int p_exp[6] = {2, 9, 6, 5, 3, 1};
    static const char* p_long[6] = {
        "z^2+z^11-2+2z+2z^12-2z^9-2z^4", "2-z^9-z^4+2z^5+2z^8-2z^2-2z^11", "z^6+z^7-2+2z^3+2z^10-2z-2z^12",
        "z^5+z^8-2+2z^9+2z^4-2z^3-2z^10", "2-z^3-z^10+2z^6+2z^7-2z^5-2z^8", "2-z-z^12+2z^2+2z^11-2z^6-2z^7",
    };
    for (int k = 0; k < 6; ++k) {
        CycloNum v = s13 * (CycloNum::zeta(13, p_exp[k]) + CycloNum::zeta(13, -p_exp[k]));
        std::string lg = p_long[k];
        add("p" + std::to_string(k + 1), v, "sqrt13 (zeta^a + zeta^-a) = " + lg,
            [lg](const CycloNum& x) { return x == z13(lg); });
    }

    const CycloNum rad_a = (CycloNum(13, -13) - s13 * 2);                 // -13 - 2 sqrt13
    const CycloNum rad_b = (CycloNum(13, -13) + s13 * 3) * mpq_class(1, 2);  // (-13 + 3 sqrt13)/2
    const CycloNum rad_c = (CycloNum(13, -13) + s13 * 2);                 // -13 + 2 sqrt13
    const CycloNum rad_d = (CycloNum(13, -13) - s13 * 3) * mpq_class(1, 2);  // (-13 - 3 sqrt13)/2
    auto sq_branch = [](CycloNum rad) {
        return [rad](const CycloNum& x) { return x * x == rad && has_positive_imag(x); };
    };
    add("r1", r2 + r4, "r1 = theta1-theta3+theta2-theta4, r1^2 = -13-2sqrt13, Im r1 > 0", sq_branch(rad_a));
    add("r2", r2, "r2 = theta1-theta3, r2^2 = (-13+3sqrt13)/2, Im r2 > 0", sq_branch(rad_b));
    add("r3", r4 - r2, "r3 = -(theta1-theta3-theta2+theta4), r3^2 = -13+2sqrt13, Im r3 > 0", sq_branch(rad_c));
    add("r4", r4, "r4 = theta2-theta4, r4^2 = (-13-3sqrt13)/2, Im r4 > 0", sq_branch(rad_d));
    auto r0_rinf = [r2, r4](const CycloNum&) {
        CycloNum a = r2 * 2 - r4 * 3, b = r4 * -2 - r2 * 3;
        return a * a + b * b == CycloNum(13, -169);
    };
    add("r0", r2 * 2 - r4 * 3, "r0 = 2(theta1-theta3)-3(theta2-theta4); r0^2 + rinf^2 = -169", r0_rinf);
    add("rinf", r4 * -2 - r2 * 3, "rinf = 2(theta4-theta2)-3(theta1-theta3); r0^2 + rinf^2 = -169", r0_rinf);

    for (int k = 1; k <= 12; ++k) {
        add("q" + std::to_string(k), q_value(k), "odd combination of zeta^a - zeta^-a; conj(q) = -q",
            [](const CycloNum& x) { return x.conj() == -x && !x.is_zero(); });
    }

    const CycloNum eta = CycloNum::zeta(7) + CycloNum::zeta(7, -1);
    add("eta", eta, "eta^3+eta^2-2eta-1 = 0 in Q(zeta_7)", [](const CycloNum& e) {
        return (e * e * e + e * e - e * 2 - CycloNum(7, 1)).is_zero() && e.conj() == e;
    });
    add("tau7", CycloNum(7, 1) + eta + eta * eta, "tau = 1+eta+eta^2, real", [](const CycloNum& t) {
        return t.conj() == t;
    });

    // sin(k pi/13) = (w^2k - w^-2k)/(2i), w = zeta_52, i = w^13
    auto sine = [](long k) {
        return (CycloNum::zeta(52, 2 * k) - CycloNum::zeta(52, -2 * k)) / (CycloNum::zeta(52, 13) * 2);
    };
    CycloNum ratio = sine(2) * sine(5) * sine(6) / (sine(1) * sine(3) * sine(4));
    const CycloNum unit = (CycloNum(13, 3) + s13) * mpq_class(1, 2);
    add("sine_ratio", ratio, "sin(2pi/13)sin(5pi/13)sin(6pi/13) / sin(pi/13)sin(3pi/13)sin(4pi/13) = (3+sqrt13)/2 = r4/r2",
        [unit, r2, r4](const CycloNum& x) { return x == unit.lift(52) && r4 / r2 == unit; });
    return out;
}

inline const std::map<std::string, ConstantEntry, std::less<>>& constant_table() {
    static const auto table = [] {
        std::map<std::string, ConstantEntry, std::less<>> m;
        for (auto& e : build_constants()) {
            if (!e.check(e.c.value)) throw Error("constant " + e.c.name + " fails its identity: " + e.c.identity);
            std::string key = e.c.name;
            m.emplace(std::move(key), std::move(e));
        }
        return m;
    }();
    return table;
}

}  // namespace detail

inline const NamedConstant& constant(std::string_view name) {
    const auto& t = detail::constant_table();
    auto it = t.find(name);
    if (it == t.end()) throw DomainError("unknown constant '" + std::string(name) + "'");
    return it->second.c;
}

inline const CycloNum& cval(std::string_view name) { return constant(name).value; }

inline std::vector<std::string> constant_names() {
    std::vector<std::string> r;
    for (const auto& [k, v] : detail::constant_table()) r.push_back(k);
    return r;
}

// re-runs the defining check of a constant
inline bool verify_constant(std::string_view name) {
    const auto& t = detail::constant_table();
    auto it = t.find(name);
    if (it == t.end()) throw DomainError("unknown constant '" + std::string(name) + "'");
    return it->second.check(it->second.c.value);
}

inline const CycloNum& sqrt13() { return cval("sqrt13"); }
inline CycloNum inv_sqrt13() { return sqrt13() * mpq_class(1, 13); }

}  // namespace hurwitz
