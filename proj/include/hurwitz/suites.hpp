#pragma once
// The verification suites and the runner that assembles their reports.

#include "constants.hpp"
#include "invariants.hpp"
#include "matrep.hpp"
#include "perm.hpp"
#include "quaternion.hpp"
#include "report.hpp"
#include "sinkov.hpp"
#include "weil.hpp"

#include <functional>
#include <future>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace hurwitz {

struct RunConfig {
    std::vector<std::string> suites{"all"};
    std::uint64_t seed = default_seed;
    unsigned precision = default_digits;
    bool skip_heavy = false;
};

namespace detail {

inline std::string scalar_text(const Mat& m) {
    CycloNum l;
    if (!m.is_scalar(&l)) return "not scalar";
    return "(" + l.str() + ") I";
}

// derived value of a printed 6 x 6 table, from S, T and the lift P^k = S T^-k S,
// or with P = S T^-1 S and its literal powers
inline Mat derived_word(const std::string& name, bool literal_P = false) {
    const Mat& S = build("S");
    const Mat& T = build("T");
    const Mat Q = S * T.pow(3);
    auto P = [literal_P](long k) { return literal_P ? build("P").pow(k) : paper_P(k); };
    const Mat y2 = Q.pow(5) * P(2) * P(2) * Q.pow(6) * P(8) * Q.pow(5) * P(2);
    if (name == "ST") return S * T;
    if (name == "ST_inv") return T.inverse() * S;
    if (name == "Q" || name == "Q.alt") return Q;
    if (name.size() == 2 && name[0] == 'Q') return Q.pow(name[1] - '0');
    if (name == "P4") return P(4);
    if (name == "P2") return P(2);
    if (name == "Q3P4") return Q.pow(3) * P(4);
    if (name == "Q3P4_sq") return (Q.pow(3) * P(4)).pow(2);
    if (name == "QP2" || name == "x3") return Q * P(2);
    if (name == "QP2_sq") return (Q * P(2)).pow(2);
    if (name == "Q5P2" || name == "y3") return Q.pow(5) * P(2);
    if (name == "PQ2P10" || name == "y1") return P(1) * Q.pow(2) * P(10);
    if (name == "Q6PQ2P10" || name == "x1") return Q.pow(6) * P(1) * Q.pow(2) * P(10);
    if (name == "P2Q6P8") return P(2) * Q.pow(6) * P(8);
    if (name == "y2" || name == "y2.alt") return y2;
    if (name == "x2" || name == "x2.alt") return Q.pow(5) * y2;
    if (name == "H") return y2 * S;
    if (name == "H2") return (y2 * S).pow(2);
    if (name == "H3") return (y2 * S).pow(3);
    if (name == "PQP2") return P(1) * Q * P(2);
    if (name.rfind("y3Q", 0) == 0) {
        const long k = name.size() == 3 ? 1 : name[3] - '0';
        return Q.pow(5) * P(2) * Q.pow(k);
    }
    throw DomainError("no derivation for table '" + name + "'");
}

inline const std::vector<std::string>& derived_table_names() {
    static const std::vector<std::string> t = {
        "Q",      "Q.alt", "x1",     "y1",     "x2",       "y2",     "x3",    "y3",   "ST",     "ST_inv", "Q2",
        "Q3",     "Q4",    "Q5",     "Q6",     "P4",       "Q3P4",   "Q3P4_sq", "P2", "QP2",    "QP2_sq", "Q5P2",
        "PQ2P10", "Q6PQ2P10", "P2Q6P8", "y2.alt", "x2.alt", "H",     "H2",    "H3",   "y3Q",    "y3Q2",   "y3Q3",
        "y3Q4",   "y3Q5",  "y3Q6",   "PQP2",
    };
    return t;
}

inline std::string id_part(std::string s) {
    for (auto& c : s)
        if (c == '.') c = '_';
    return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// cyclo

inline void cyclo_suite(Report& r) {
    const CycloNum one(13, 1);
    r.run("cyclo.canon.full_power_sum", "1 + zeta + ... + zeta^12 = 0", [&](std::string& w) {
        std::vector<mpq_class> raw(13, 1);
        const CycloNum x = CycloNum::canon(13, raw);
        w = x.str();
        return x.is_zero();
    });
    r.run("cyclo.canon.zeta13", "zeta^13 = 1", [&](std::string& w) {
        const CycloNum x = CycloNum::zeta(13, 13);
        w = x.str();
        return x.is_one();
    });
    r.run("cyclo.sqrt13.gauss_sum_square", "the quadratic Gauss sum squares to 13", [&](std::string& w) {
        const CycloNum g = parse_zeta_expr(13, "z+z^12+z^3+z^10+z^9+z^4-z^5-z^8-z^2-z^11-z^6-z^7");
        w = (g * g).str();
        return g * g == CycloNum(13, 13) && g == sqrt13();
    });
    r.run("cyclo.theta.sum", "theta1 + theta2 + theta3 + theta4 = -1", [&](std::string& w) {
        const CycloNum s = cval("theta1") + cval("theta2") + cval("theta3") + cval("theta4");
        w = s.str();
        return s == CycloNum(13, -1);
    });
    r.run("cyclo.theta.symmetric", "theta_i are the roots of z^4 + z^3 + 2z^2 - 4z + 3", [&](std::string& w) {
        std::vector<CycloNum> t;
        for (int i = 1; i <= 4; ++i) t.push_back(cval("theta" + std::to_string(i)));
        CycloNum e1(13), e2(13), e3(13), e4 = t[0] * t[1] * t[2] * t[3];
        for (int i = 0; i < 4; ++i) {
            e1 += t[i];
            for (int j = i + 1; j < 4; ++j) {
                e2 += t[i] * t[j];
                for (int k = j + 1; k < 4; ++k) e3 += t[i] * t[j] * t[k];
            }
        }
        w = "e1 = " + e1.str() + ", e2 = " + e2.str() + ", e3 = " + e3.str() + ", e4 = " + e4.str();
        return e1 == CycloNum(13, -1) && e2 == CycloNum(13, 2) && e3 == CycloNum(13, 4) && e4 == CycloNum(13, 3);
    });
    r.run("cyclo.arith.sub_self", "x - x = 0", [&](std::string&) { return (cval("p3") - cval("p3")).is_zero(); });
    r.run("cyclo.galois.identity", "sigma_1(zeta) = zeta",
          [&](std::string&) { return CycloNum::zeta(13).galois(1) == CycloNum::zeta(13); });
    r.run("cyclo.galois.sqrt13_nonresidue", "sigma_2(sqrt13) = -sqrt13", [&](std::string&) { return sqrt13().galois(2) == -sqrt13(); });
    r.run("cyclo.galois.theta1_fixed", "sigma_3(theta1) = theta1", [&](std::string&) { return cval("theta1").galois(3) == cval("theta1"); });
    r.run("cyclo.embed.sqrt13", "sqrt13 embeds as 3.6055512754...", [&](std::string& w) {
        const Complex z = sqrt13().embed();
        w = z.str(15);
        return approx_equal(z, Complex(boost::multiprecision::sqrt(Real(13))), Real(numeric_tolerance));
    });
    r.run("cyclo.embed.theta1_quadrant", "Re theta1 > 0 and Im theta1 > 0", [&](std::string& w) {
        const Complex z = cval("theta1").embed();
        w = z.str(15);
        return z.re > 0 && z.im > 0;
    });
    r.run("cyclo.embed.zero", "embed(0) = 0", [&](std::string&) {
        const Complex z = CycloNum(13).embed();
        return z.re == 0 && z.im == 0;
    });
    r.run("cyclo.p1.value", "p1 = sqrt13 (zeta^2 + zeta^11)", [&](std::string&) {
        return cval("p1") == sqrt13() * (CycloNum::zeta(13, 2) + CycloNum::zeta(13, 11));
    });
    r.run("cyclo.p1.long_form", "p1 = zeta^2 + zeta^11 - 2 + 2(zeta + zeta^12 - zeta^9 - zeta^4)",
          [&](std::string&) { return cval("p1") == parse_zeta_expr(13, "z^2+z^11-2+2z+2z^12-2z^9-2z^4"); });
    r.run("cyclo.eta.minimal_polynomial", "eta^3 + eta^2 - 2 eta - 1 = 0 in Q(zeta_7)", [&](std::string&) {
        const CycloNum& e = cval("eta");
        return (e * e * e + e * e - e * 2 - CycloNum(7, 1)).is_zero();
    });
    r.run("cyclo.r.squares", "r1^2 = -13-2sqrt13, r2^2 = (-13+3sqrt13)/2, r3^2 = -13+2sqrt13, r4^2 = (-13-3sqrt13)/2",
          [&](std::string& w) {
              const CycloNum m13(13, -13), s = sqrt13();
              const CycloNum want[4] = {m13 - s * 2, (m13 + s * 3) * mpq_class(1, 2), m13 + s * 2, (m13 - s * 3) * mpq_class(1, 2)};
              for (int i = 0; i < 4; ++i) {
                  const CycloNum& x = cval("r" + std::to_string(i + 1));
                  if (x * x != want[i]) {
                      w = "r" + std::to_string(i + 1);
                      return false;
                  }
              }
              return true;
          });
    r.run("cyclo.r.r0_rinf", "r0^2 + rinf^2 = -169", [&](std::string&) {
        return cval("r0") * cval("r0") + cval("rinf") * cval("rinf") == CycloNum(13, -169);
    });
    r.run("cyclo.sine_ratio", "sin(2pi/13) sin(5pi/13) sin(6pi/13) / (sin(pi/13) sin(3pi/13) sin(4pi/13)) = (3+sqrt13)/2",
          [&](std::string& w) {
              const CycloNum want = ((one * 3) + sqrt13()) * mpq_class(1, 2);
              w = cval("sine_ratio").embed().str(15);
              return cval("sine_ratio") == want.lift(52);
          });
    r.run("cyclo.constants.all_identities", "every named constant satisfies its defining identity", [&](std::string& w) {
        std::vector<std::string> bad;
        for (const auto& n : constant_names())
            if (!verify_constant(n)) bad.push_back(n);
        w = std::to_string(constant_names().size()) + " constants";
        for (const auto& b : bad) w += ", fails: " + b;
        return bad.empty();
    });
    r.run("cyclo.serialization.round_trip", "parse(str(x)) = x for every named constant", [&](std::string& w) {
        for (const auto& n : constant_names()) {
            const CycloNum& x = cval(n);
            if (CycloNum::parse(x.str()) != x) {
                w = n;
                return false;
            }
        }
        return true;
    });
}

// ---------------------------------------------------------------------------
// group

inline void group_suite(Report& r, const CheckOptions& opt) {
    const Mat& S = build("S");
    const Mat& T = build("T");
    const Mat& Q = build("Q");
    const Mat& H = build("H");
    const Mat I = Mat::identity(6);
    auto P = [](long k) { return paper_P(k); };
    const Mat x3 = Q * P(2), y3 = Q.pow(5) * P(2);

    r.run("group.build.T_diagonal", "T = diag(zeta^7, zeta^11, zeta^8, zeta^6, zeta^2, zeta^5)",
          [&](std::string&) { return T == diag13({7, 11, 8, 6, 2, 5}); });
    r.run("group.build.S_entry_11", "S_11 = -(zeta^12 - zeta)/sqrt13", [&](std::string& w) {
        w = S(0, 0).str();
        return S(0, 0) == -(CycloNum::zeta(13, 12) - CycloNum::zeta(13)) * inv_sqrt13();
    });
    r.run("group.build.S_blocks", "S = -(1/sqrt13)(-M N; N M) with MN = NM = -sqrt13 I, M^2 + N^2 = -13 I", [&](std::string& w) {
        const Mat& M = build("M3");
        const Mat& N = build("N3");
        const Mat I3 = Mat::identity(3);
        Mat blk(6);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                blk(i, j) = -M(i, j);
                blk(i, j + 3) = N(i, j);
                blk(i + 3, j) = N(i, j);
                blk(i + 3, j + 3) = M(i, j);
            }
        const bool mn = M * N == -sqrt13() * I3 && N * M == -sqrt13() * I3;
        const bool sq = M * M + N * N == CycloNum(13, -13) * I3;
        const bool s = -inv_sqrt13() * blk == S;
        w = std::string("MN: ") + (mn ? "ok" : "no") + ", M^2+N^2: " + (sq ? "ok" : "no") + ", blocks: " + (s ? "ok" : "no");
        return mn && sq && s;
    });
    r.run("group.identity.build", "build(identity) is the 6 x 6 identity", [&](std::string&) { return build("identity") == I; });
    r.run("group.identity.inverse", "inv(identity) = identity", [&](std::string&) { return I.inverse() == I; });

    // relations; projective ones report the scalar
    r.run("group.rel.S_squared", "S^2 = 1 in PSL(2,13); as a matrix S^2 = -I", [&](std::string& w) {
        w = "S^2 = " + detail::scalar_text(S * S);
        return (S * S).is_scalar();
    });
    r.run("group.rel.T_13", "T^13 = I", [&](std::string&) { return T.pow(13) == I; });
    r.run("group.rel.ST_cubed", "(ST)^3 = 1 in PSL(2,13)", [&](std::string& w) {
        w = "(ST)^3 = " + detail::scalar_text((S * T).pow(3));
        return (S * T).pow(3).is_scalar();
    });
    r.run("group.rel.Q_7", "Q^7 = 1 in PSL(2,13)", [&](std::string& w) {
        w = "Q^7 = " + detail::scalar_text(Q.pow(7));
        return Q.pow(7).is_scalar();
    });
    r.run("group.rel.Q3P4_cubed", "(Q^3 P^4)^3 = -I strictly, P^k = S T^-k S", [&](std::string& w) {
        w = "(Q^3 P^4)^3 = " + detail::scalar_text((Q.pow(3) * P(4)).pow(3));
        return (Q.pow(3) * P(4)).pow(3) == -I;
    });
    r.run("group.rel.QP2_cubed", "(Q P^2)^3 = I strictly", [&](std::string& w) {
        w = "(Q P^2)^3 = " + detail::scalar_text((Q * P(2)).pow(3));
        return (Q * P(2)).pow(3) == I;
    });
    r.run("group.rel.Q5P2_squared", "(Q^5 P^2)^2 = -I strictly", [&](std::string& w) {
        w = "(Q^5 P^2)^2 = " + detail::scalar_text((Q.pow(5) * P(2)).pow(2));
        return (Q.pow(5) * P(2)).pow(2) == -I;
    });
    r.run("group.rel.literal_P_powers", "(S T^-1 S)^k = (-1)^(k-1) S T^-k S, so printed P^k are the lift S T^-k S", [&](std::string& w) {
        const Mat lit = S * T.inverse() * S;
        for (long k = 1; k <= 12; ++k) {
            const Mat want = k % 2 ? P(k) : -P(k);
            if (lit.pow(k) != want) {
                w = "k = " + std::to_string(k);
                return false;
            }
        }
        return true;
    });
    r.run("group.rel.ST_inverse", "(ST)^-1 = T^-1 S^-1 = -T^-1 S strictly, since S^-1 = -S", [&](std::string&) {
        return (S * T).inverse() == -(T.inverse() * S);
    });
    r.run("group.rel.x3y3", "x3 y3 = Q P^2 Q^5 P^2 = Q^3 strictly", [&](std::string& w) {
        w = "x3 y3 Q^-3 = " + detail::scalar_text(x3 * y3 * Q.pow(-3));
        return x3 * y3 == Q.pow(3);
    });
    r.run("group.rel.H_6", "H^6 = -I strictly", [&](std::string& w) {
        w = "H^6 = " + detail::scalar_text(H.pow(6));
        return H.pow(6) == -I;
    });
    r.run("group.rel.H_conjugates_T", "H^-1 T H = -T^4 with H^-1 read as H^5 (H^6 = 1 in the group)", [&](std::string& w) {
        const bool lifted = H.pow(5) * T * H == -T.pow(4);
        const bool plus = H.inverse() * T * H == T.pow(4);
        w = std::string("H^5 T H = -T^4: ") + (lifted ? "yes" : "no") + "; matrix inverse gives H^-1 T H = " +
            (plus ? "+T^4" : H.inverse() * T * H == -T.pow(4) ? "-T^4" : "neither");
        return lifted;
    });

    // orders
    struct Ord {
        const char* name;
        int want;
    };
    for (const Ord& o : {Ord{"T", 13}, Ord{"Q", 7}, Ord{"identity", 1}, Ord{"S", 2}, Ord{"H", 6}, Ord{"x1", 3}, Ord{"y1", 2},
                         Ord{"x2", 3}, Ord{"y2", 2}, Ord{"x3", 3}, Ord{"y3", 2}, Ord{"PQP2", 2}}) {
        r.run(std::string("group.order.") + o.name, std::string("projective order of ") + o.name + " is " + std::to_string(o.want),
              [&](std::string& w) {
                  const int got = proj_order_checked(build(o.name), o.name);
                  w = std::to_string(got);
                  return got == o.want;
              });
    }

    // printed tables against their defining words
    for (const auto& name : detail::derived_table_names()) {
        r.compare_printed("group.printed." + detail::id_part(name), "printed " + printed_table(name).ref + " equals its defining word",
                          [&, name](std::string& w) {
                              const Mat d = detail::derived_word(name);
                              const Mat& p = build(name);
                              if (p == d) return true;
                              CycloNum l;
                              w = (p * d.inverse()).is_scalar(&l) ? "printed = (" + l.str() + ") x derived" : Mat::diff(p, d, 4);
                              if (p == detail::derived_word(name, true)) w += "; matches the word with P = S T^-1 S and literal powers";
                              return false;
                          });
    }

    // traces
    r.run("group.trace.S", "Tr S = 0", [&](std::string& w) {
        w = trace("S").str();
        return trace("S").is_zero();
    });
    r.run("group.trace.T", "Tr T = (-1 - sqrt13)/2", [&](std::string& w) {
        w = trace("T").str();
        return trace("T") == (CycloNum(13, -1) - sqrt13()) * mpq_class(1, 2);
    });
    r.run("group.trace.ST", "Tr ST = 0", [&](std::string& w) {
        w = (S * T).trace().str();
        return (S * T).trace().is_zero();
    });
    r.run("group.trace.identity", "Tr I = 6", [&](std::string&) { return trace("identity") == CycloNum(13, 6); });

    // presentations
    struct Pres {
        const char* id;
        Mat u, v;
        int n, p;
        const char* ref;
    };
    const Pres pres[] = {
        {"group.presentation.x1_y1", build("x1"), build("y1"), 7, 7, "<x1, y1> satisfies (2,3,7;7)"},
        {"group.presentation.x2_y2", build("x2"), build("y2"), 7, 6, "<x2, y2> satisfies (2,3,7;6)"},
        {"group.presentation.x3_y3", x3, y3, 7, 13, "<x3, y3> satisfies (2,3,7;13)"},
        {"group.presentation.ST_S", S * T, S, 13, 7, "(u, v) = (ST, S) satisfies (2,3,13;7)"},
    };
    for (const auto& pr : pres) {
        r.run(pr.id, pr.ref, [&](std::string& w) {
            const auto res = check_presentation(pr.u, pr.v, pr.n, pr.p);
            w = res.detail;
            return res.holds && !res.degenerate && res.order_uv == pr.n && res.order_comm == pr.p;
        });
    }
    r.run("group.presentation.ST_S_Q3P4", "with (u, v) = (ST, S) the relation (Q^3 P^4)^3 = 1 holds", [&](std::string& w) {
        w = "(Q^3 P^4)^3 = " + detail::scalar_text((Q.pow(3) * P(4)).pow(3));
        return (Q.pow(3) * P(4)).pow(3).is_scalar();
    });
    r.run("group.presentation.degenerate", "identity pair satisfies the relations vacuously and is flagged", [&](std::string& w) {
        const auto res = check_presentation(I, I, 7, 7);
        w = res.detail;
        return res.holds && res.degenerate;
    });

    // triality conjugations
    const Mat& R = build("R");
    const Mat Ri = R.inverse();
    r.run("group.triality.R_cubed", "R^3 = I", [&](std::string&) { return R.pow(3) == I; });
    struct Conj {
        const char* id;
        Mat lhs;
        const char* rhs;
    };
    const Conj conj[] = {
        {"group.triality.T1", Ri * build("T") * R, "T1"},
        {"group.triality.S1", Ri * build("S") * R, "S1"},
        {"group.triality.T2", R * build("T") * Ri, "T2"},
        {"group.triality.S2", R * build("S") * Ri, "S2"},
    };
    for (const auto& c : conj) {
        r.run(c.id, std::string(c.rhs) + " is the conjugate of the generator by the triality permutation R", [&](std::string& w) {
            if (c.lhs == build(c.rhs)) return true;
            w = Mat::diff(c.lhs, build(c.rhs), 3);
            return false;
        });
    }

    // subgroup facts that need no full enumeration
    r.run("group.closure.T", "closure({T}) has 13 elements", [&](std::string& w) {
        const auto G = closure({T}, 100, {"T"});
        w = std::to_string(G.size());
        return G.size() == 13;
    });
    r.run("group.closure.H_T", "<H, T> is the maximal subgroup of order 78", [&](std::string& w) {
        const auto G = closure({H, T}, 2000, {"H", "T"});
        w = std::to_string(G.size());
        return G.size() == 78;
    });
    r.run("group.dihedral.PQP2_Q", "<PQP^2, Q> is dihedral of order 14", [&](std::string& w) {
        const Mat d = P(1) * Q * P(2);
        const auto G = closure({d, Q}, 2000, {"PQP2", "Q"});
        const bool inv = proj_eq(d * Q * d, Q.inverse());
        w = std::to_string(G.size()) + " elements, PQP^2 Q PQP^2 ~ Q^-1: " + (inv ? "yes" : "no");
        return G.size() == 14 && inv;
    });

    // the Weil representation
    struct Weil {
        const char* id;
        long a, b, c, d;
        Mat m;
        const char* ref;
    };
    const Weil weil[] = {
        {"group.weil.H", 7, 0, 0, 2, H, "rho((7,0;0,2)) ~ H"},
        {"group.weil.y1", -5, -3, 0, 5, build("y1"), "rho((-5,-3;0,5)) ~ y1"},
        {"group.weil.Q6", -3, -1, 1, 0, Q.pow(6), "rho((-3,-1;1,0)) ~ Q^6"},
        {"group.weil.PQP2", -2, -1, 5, 2, build("PQP2"), "rho((-2,-1;5,2)) ~ PQP^2"},
        {"group.weil.y2", 0, -7, 2, 0, build("y2"), "rho((0,-7;2,0)) ~ y2"},
        {"group.weil.Q5", 5, 10, 3, 1, Q.pow(5), "rho((5,10;3,1)) ~ Q^5"},
        {"group.weil.y3", -1, 10, 5, 1, y3, "rho((-1,10;5,1)) ~ y3"},
        {"group.weil.Q3", -3, 5, 8, 8, Q.pow(3), "rho((-3,5;8,8)) ~ Q^3"},
        {"group.weil.identity", 1, 0, 0, 1, I, "rho(identity) ~ identity"},
    };
    for (const auto& c : weil) {
        r.run(c.id, c.ref, [&](std::string& w) {
            const auto word = sl2_word(c.a, c.b, c.c, c.d);
            w = "word " + (word.letters.empty() ? std::string("1") : word.letters);
            return proj_eq(word.image(), c.m);
        });
    }
    r.run("group.weil.homomorphism", "s -> S, t -> T extends to a homomorphism PSL(2,13) -> PGL(6)",
          [&](std::string& w) { return rho_is_homomorphism(w); });

    // the full group
    const char* ref_1092 = "closure({S, T}) has 1092 elements";
    if (opt.skip_heavy) {
        for (const char* id : {"group.closure.S_T", "group.closure.involutions", "group.closure.order_profile", "group.closure.pairs_equal",
                               "group.conj_class.z1", "group.conj_class.z2", "group.conj_class.z3", "group.conj_class.identity",
                               "group.character.chi11"})
            r.skip(id, ref_1092, "skip_heavy");
        return;
    }
    const auto G = closure({S, T}, 5000, {"S", "T"});
    r.run("group.closure.S_T", ref_1092, [&](std::string& w) {
        w = std::to_string(G.size()) + (G.bound_exceeded ? " (bound exceeded)" : "");
        return G.size() == 1092 && !G.bound_exceeded;
    });
    const auto prof = G.order_profile();
    r.run("group.closure.involutions", "the 91 elements of order two", [&](std::string& w) {
        const int n = prof.count(2) ? prof.at(2) : 0;
        w = std::to_string(n);
        return n == 91;
    });
    r.run("group.closure.order_profile", "element orders of PSL(2,13): 1:1 2:91 3:182 6:182 7:468 13:168", [&](std::string& w) {
        for (const auto& [o, c] : prof) w += (w.empty() ? "" : " ") + std::to_string(o) + ":" + std::to_string(c);
        const std::map<int, int> want = {{1, 1}, {2, 91}, {3, 182}, {6, 182}, {7, 468}, {13, 168}};
        return prof == want;
    });
    r.run("group.closure.pairs_equal", "closures of (x1,y1), (x2,y2), (x3,y3) and (ST,S) equal closure({S,T}) as sets", [&](std::string& w) {
        const std::vector<std::pair<Mat, Mat>> pairs = {{build("x1"), build("y1")}, {build("x2"), build("y2")}, {x3, y3}, {S * T, S}};
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const auto Gi = closure({pairs[i].first, pairs[i].second}, 5000);
            if (!Gi.same_set(G)) {
                w = "pair " + std::to_string(i + 1) + " gives " + std::to_string(Gi.size()) + " elements";
                return false;
            }
        }
        w = "4 pairs";
        return true;
    });
    const Mat z1 = build("x1").inverse() * build("y1").inverse();
    const Mat z2 = build("x2").inverse() * build("y2").inverse();
    const Mat z3 = x3.inverse() * y3.inverse();
    struct Cls {
        const char* id;
        Mat m;
        const char* want;
    };
    for (const Cls& c : {Cls{"group.conj_class.z1", z1, "7A"}, Cls{"group.conj_class.z2", z2, "7B"}, Cls{"group.conj_class.z3", z3, "7C"},
                         Cls{"group.conj_class.identity", I, "1A"}}) {
        r.run(c.id, std::string("class of ") + c.id + " is " + c.want, [&](std::string& w) {
            w = conj_class(c.m, G);
            return w == c.want;
        });
    }
    r.run("group.character.chi11", "traces on S, ST, T match the 6-dim character chi11 on 2A, 3A, 13A", [&](std::string& w) {
        const std::string cs = conj_class(S, G), cst = conj_class(S * T, G), ct = conj_class(T, G);
        w = "S in " + cs + ", ST in " + cst + ", T in " + ct;
        return cs == "2A" && cst == "3A" && ct == "13A" && trace("S").is_zero() && (S * T).trace().is_zero() &&
               trace("T") == (CycloNum(13, -1) - sqrt13()) * mpq_class(1, 2);
    });
}

// ---------------------------------------------------------------------------
// permutations

inline void perm_suite(Report& r) {
    using namespace sinkov;
    const Perm& s0 = s();
    r.run("perm.s.order", "s is an involution", [&](std::string& w) {
        w = std::to_string(s0.order());
        return s0.order() == 2;
    });
    r.run("perm.inverse", "a a^-1 = 1", [&](std::string&) { return (p(9) * p(9).inverse()).is_identity(); });
    for (const auto& e : entries()) {
        r.run("perm.sinkov.ord_p" + detail::two(e.index) + "s", "ord(p" + std::to_string(e.index) + " s) = " + std::to_string(e.ord_ps),
              [&](std::string& w) {
                  const Perm x = p(e.index);
                  const int o = (x * s0).order();
                  w = "ord(p) = " + std::to_string(x.order()) + ", ord(ps) = " + std::to_string(o);
                  return x.order() == 3 && o == e.ord_ps;
              });
    }
    for (const auto& pr : products()) {
        r.compare_printed("perm.sinkov.p" + detail::two(pr.index) + "s_cycles", "printed cycles of p" + std::to_string(pr.index) + " s",
                          [&](std::string& w) {
                              const Perm got = p(pr.index) * s0;
                              w = got.str();
                              return got == Perm::parse(pr.ps);
                          });
        r.compare_printed("perm.sinkov.p" + detail::two(pr.index) + "_commutator", "printed [p" + std::to_string(pr.index) + ", s]",
                          [&](std::string& w) {
                              const Perm got = commutator(p(pr.index), s0);
                              w = got.str() + ", order " + std::to_string(got.order());
                              return got == Perm::parse(pr.commutator) && got.order() == pr.comm_order;
                          });
    }
    r.run("perm.sinkov.conjugate_9_15", "p9 -> p15 by a substitution commuting with s", [&](std::string&) {
        const Perm g = conj_9_15();
        return g.inverse() * p(9) * g == p(15) && g * s0 == s0 * g;
    });
    r.run("perm.sinkov.conjugate_10_16", "p10 -> p16 by a substitution commuting with s", [&](std::string&) {
        const Perm g = conj_10_16();
        return g.inverse() * p(10) * g == p(16) && g * s0 == s0 * g;
    });
    for (const auto& pp : printed()) {
        r.compare_printed("perm.printed." + pp.name, "printed permutation " + pp.name + " from Q = (p9 s)^5, P = ((p9 s)^-5 p9)^7",
                          [&](std::string& w) {
                              const Perm d = derived(pp.name);
                              w = d.str();
                              return d == Perm::parse(pp.text);
                          });
    }
    r.run("perm.words.x1y1", "x1 y1 = Q^6", [&](std::string&) { return derived("x1") * derived("y1") == Q().pow(6); });
    r.run("perm.words.x2y2", "x2 y2 = Q^5", [&](std::string&) { return derived("x2") * derived("y2") == Q().pow(5); });
    r.run("perm.words.comm_x2y2_order", "[x2, y2] has order 6", [&](std::string& w) {
        const int o = commutator(derived("x2"), derived("y2")).order();
        w = std::to_string(o);
        return o == 6;
    });

    r.run("perm.group.order", "<s, p9> has order 1092", [&](std::string& w) {
        w = group_order({s0, p(9)}).get_str();
        return group_order({s0, p(9)}) == 1092;
    });
    r.run("perm.group.enumerated", "enumerating <s, p9> gives 1092 permutations", [&](std::string& w) {
        w = std::to_string(enumerate_group({s0, p(9)}).size());
        return enumerate_group({s0, p(9)}).size() == 1092;
    });
    r.run("perm.group.transitive", "<s, p9> is transitive on 14 points", [&](std::string&) { return is_transitive({s0, p(9)}); });
    r.run("perm.group.same_as_x_y", "<x1, y1> and <x2, y2> are the same group of order 1092", [&](std::string& w) {
        const auto a = enumerate_group({derived("x1"), derived("y1")});
        const auto b = enumerate_group({derived("x2"), derived("y2")});
        const auto c = enumerate_group({s0, p(9)});
        w = std::to_string(a.size()) + ", " + std::to_string(b.size());
        std::set<std::string> sa, sb, sc;
        for (const auto& x : a) sa.insert(x.str());
        for (const auto& x : b) sb.insert(x.str());
        for (const auto& x : c) sc.insert(x.str());
        return sa == sc && sb == sc;
    });
    r.run("perm.primitivity.sinkov", "<s, p9> is primitive of degree 14", [&](std::string& w) { return primitivity({s0, p(9)}, &w); });
    r.run("perm.primitivity.cycle", "the cyclic group of a 14-cycle is imprimitive", [&](std::string& w) {
        const Perm c = Perm::parse("(1,2,3,4,5,6,7,8,9,10,11,12,13,14)");
        const bool prim = primitivity({c}, &w);
        const auto blk = minimal_block({c}, 0, 7);
        w += ", block of {1,8}: " + std::to_string(blk.size()) + " points";
        return !prim && blk.size() == 2;
    });
    r.run("perm.primitivity.symmetric", "S14 is primitive", [&](std::string& w) {
        return primitivity({Perm::parse("(1,2)"), Perm::parse("(1,2,3,4,5,6,7,8,9,10,11,12,13,14)")}, &w);
    });

    struct Asd {
        int index;
        std::vector<int> widths;
        long level;
        const char* ref;
    };
    for (const Asd& a : {Asd{10, {13, 1}, 13, "case (2,3,13;7): widths {13,1}, level 13, genus 0"},
                         Asd{11, {7, 7}, 7, "case (2,3,7;6): widths {7,7}, level 7, genus 0"},
                         Asd{13, {7, 7}, 7, "case (2,3,7;7): widths {7,7}, level 7, genus 0"},
                         Asd{9, {7, 7}, 7, "case (2,3,7;13): widths {7,7}, level 7, genus 0"}}) {
        r.run("perm.asd.p" + detail::two(a.index), a.ref, [&](std::string& w) {
            const auto st = asd_stats(s0, p(a.index));
            w = "widths " + detail::list_ints(st.cusp_widths) + ", e2 " + std::to_string(st.e2) + ", e3 " + std::to_string(st.e3) +
                ", level " + std::to_string(st.level) + ", genus " + st.genus_q.get_str();
            int sum = 0;
            for (int x : st.cusp_widths) sum += x;
            return st.cusp_widths == a.widths && st.e2 == 2 && st.e3 == 2 && st.level == a.level && st.genus == 0 && sum == st.mu;
        });
    }
    r.run("perm.genus_formula", "g = 1 + mu/12 - h/2 - e2/4 - e3/3 with mu=14, h=2, e2=e3=2 gives 0", [&](std::string& w) {
        w = genus_formula(14, 2, 2, 2).get_str();
        return genus_formula(14, 2, 2, 2) == 0;
    });
    r.run("perm.rh_genus.237", "Riemann-Hurwitz for (2,3,7) and order 1092 gives genus 14", [&](std::string& w) {
        w = std::to_string(rh_genus(1092, 2, 3, 7));
        return rh_genus(1092, 2, 3, 7) == 14;
    });
    r.run("perm.rh_genus.2313", "Riemann-Hurwitz for (2,3,13) gives genus 50, the genus of X(13)", [&](std::string& w) {
        w = std::to_string(rh_genus(1092, 2, 3, 13));
        return rh_genus(1092, 2, 3, 13) == 50;
    });
    r.run("perm.wohlfahrt", "m = 1092, h = 156, e2 = e3 = 0 gives chi = 26 and g = 14", [&](std::string& w) {
        const auto res = wohlfahrt(1092, 156, 0, 0);
        w = "chi " + std::to_string(res.chi) + ", g " + std::to_string(res.genus);
        return res.chi == 26 && res.genus == 14;
    });
    r.run("perm.congruence.level7", "level 7, index 1092: 1092 does not divide 168, so noncongruence", [&](std::string& w) {
        w = "|PSL(2,Z) : Gamma(7)| = " + principal_index(7).get_str();
        return !congruence_test(7, 1092);
    });
    r.run("perm.congruence.level13", "level 13, index 1092: no obstruction", [&](std::string& w) {
        w = "|PSL(2,Z) : Gamma(13)| = " + principal_index(13).get_str();
        return congruence_test(13, 1092);
    });
    r.run("perm.congruence.level1", "level 1 is always congruence", [&](std::string&) { return congruence_test(1, 7); });
}

// ---------------------------------------------------------------------------
// quaternions

inline void quaternion_suite(Report& r, const CheckOptions& opt) {
    const Quat i = Quat::i(), j = Quat::j();
    r.run("quat.anticommute", "ji = -ij", [&](std::string&) { return j * i == -(i * j); });
    r.run("quat.i_squared", "i^2 = eta", [&](std::string&) { return i * i == Quat::scalar(eta()); });
    r.run("quat.j_squared", "j^2 = eta", [&](std::string&) { return j * j == Quat::scalar(eta()); });
    r.run("quat.norm_one", "N(1) = 1", [&](std::string&) { return Quat::one().norm().is_one(); });
    const auto rep = check_elkies();
    r.run("quat.elkies.g2_squared", "g2^2 = -1", [&](std::string&) { return rep.g2_sq; });
    r.run("quat.elkies.g3_cubed", "g3^3 = -1", [&](std::string&) { return rep.g3_cube; });
    r.run("quat.elkies.g7_seventh", "g7^7 = -1", [&](std::string&) { return rep.g7_seventh; });
    r.run("quat.elkies.g2_eq_g7g3", "g2 = g7 g3", [&](std::string&) { return rep.g2_eq_g7g3; });
    r.run("quat.elkies.unit_norms", "g2, g3, g7 have reduced norm 1", [&](std::string& w) {
        w = "orders " + std::to_string(rep.order_g2) + ", " + std::to_string(rep.order_g3) + ", " + std::to_string(rep.order_g7);
        return rep.unit_norms && rep.order_g2 == 4 && rep.order_g3 == 6 && rep.order_g7 == 14;
    });
    const auto split = verify_prime_split();
    r.run("quat.split.product", "13 = eta (eta+2) (2eta-1) (3-2eta) (eta+3)", [&](std::string&) { return split.product_is_13; });
    r.run("quat.split.unit", "eta (eta+2) is a unit", [&](std::string& w) {
        w = "N = " + normK(split.factors[0] * split.factors[1]).get_str();
        return split.unit_part;
    });
    r.run("quat.split.primes", "2eta-1, 3-2eta, eta+3 have norm +-13", [&](std::string& w) {
        for (std::size_t k = 0; k < split.norms.size(); ++k) w += (k ? ", " : "") + split.norms[k].get_str();
        return split.three_primes;
    });
    r.run("quat.norm.eta", "N(eta) = 1, also from the minimal polynomial", [&](std::string& w) {
        w = normK(eta()).get_str();
        return normK(eta()) == 1 && norm_linear_via_minpoly(1, 0) == 1;
    });
    r.run("quat.norm.2eta_minus_1", "N(2 eta - 1) = +-13, product of conjugates against the minimal polynomial", [&](std::string& w) {
        const mpq_class a = normK(eta() * 2 - K(1)), b = norm_linear_via_minpoly(2, -1);
        w = a.get_str() + " and " + b.get_str();
        return a == b && abs(a) == 13;
    });
    r.run("quat.norm.g3", "N(g3) = 1 by direct expansion", [&](std::string&) { return elkies_generators().g3.norm().is_one(); });
    r.run("quat.norm.multiplicative", "N(xy) = N(x)N(y) on seeded random elements of Z[eta][i,j]", [&](std::string& w) {
        auto rng = detail::stream(opt, 0x71);
        const CycloNum e = eta();
        auto coef = [&] {
            auto c = [&] { return static_cast<long>(rng() % 7) - 3; };
            return K(c()) + e * c() + e * e * c();
        };
        for (int t = 0; t < 8; ++t) {
            const Quat x(coef(), coef(), coef(), coef()), y(coef(), coef(), coef(), coef());
            if ((x * y).norm() != x.norm() * y.norm()) {
                w = "trial " + std::to_string(t);
                return false;
            }
        }
        w = "8 trials";
        return true;
    });
    r.run("quat.places", "eta is negative at exactly the real places where the algebra ramifies", [&](std::string& w) {
        int ram = 0;
        for (const auto& pl : real_places()) {
            w += (w.empty() ? "" : "; ") + std::string("k=") + std::to_string(pl.k) + (pl.ramified ? " ramified" : " split");
            ram += pl.ramified;
        }
        return ram == 2;
    });
    r.run("quat.order.maximal", "Z[eta][i, j, j'] is an order of discriminant +-7^8 containing g2, g3, g7", [&](std::string& w) {
        const auto o = order_report();
        w = o.detail;
        return o.rank == 12 && o.maximal && o.contains_g2 && o.contains_g3 && o.contains_g7;
    });
}

// ---------------------------------------------------------------------------
// registry and runner

using SuiteFn = std::function<void(Report&, const CheckOptions&)>;

inline const std::vector<std::pair<std::string, SuiteFn>>& suite_registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> t = {
        {"cyclo", [](Report& r, const CheckOptions&) { cyclo_suite(r); }},
        {"group", [](Report& r, const CheckOptions& o) { group_suite(r, o); }},
        {"perm", [](Report& r, const CheckOptions&) { perm_suite(r); }},
        {"quaternion", [](Report& r, const CheckOptions& o) { quaternion_suite(r, o); }},
        {"forms",
         [](Report& r, const CheckOptions& o) {
             verify_A_structure(r);
             jacobian_coefficients(r, o);
             verify_induced7(r, o);
             verify_triality(r);
         }},
        {"duality", [](Report& r, const CheckOptions&) { verify_duality(r); }},
        {"rep14", [](Report& r, const CheckOptions&) { verify_rep14(r); }},
        {"modular-eq",
         [](Report& r, const CheckOptions& o) {
             exotic_equation(r, o);
             klein_factorizations(r);
         }},
        {"haagerup", [](Report& r, const CheckOptions&) { haagerup_check(r); }},
        {"macwilliams", [](Report& r, const CheckOptions&) { verify_macwilliams(r); }},
    };
    return t;
}

inline std::vector<std::string> suite_names() {
    std::vector<std::string> r;
    for (const auto& [n, f] : suite_registry()) r.push_back(n);
    return r;
}

// expands "all", rejects unknown names, keeps registry order
inline std::vector<std::string> resolve_suites(const std::vector<std::string>& requested) {
    std::set<std::string> want;
    for (const auto& s : requested) {
        if (s == "all") {
            for (const auto& n : suite_names()) want.insert(n);
            continue;
        }
        bool known = false;
        for (const auto& n : suite_names()) known = known || n == s;
        if (!known) throw ConfigError("unknown suite '" + s + "'");
        want.insert(s);
    }
    if (want.empty()) throw ConfigError("no suites selected");
    std::vector<std::string> out;
    for (const auto& n : suite_names())
        if (want.count(n)) out.push_back(n);
    return out;
}

// Suites run concurrently; each writes only its own report. The mpfr default
// precision is process wide, so it is set before any thread starts.
inline RunResult run(const RunConfig& cfg) {
    const auto names = resolve_suites(cfg.suites);
    if (cfg.precision < 20 || cfg.precision > 2000) throw ConfigError("precision must be between 20 and 2000 digits");
    set_working_precision(cfg.precision);
    CheckOptions opt;
    opt.seed = cfg.seed;
    opt.skip_heavy = cfg.skip_heavy;

    std::map<std::string, SuiteFn> fns(suite_registry().begin(), suite_registry().end());
    std::vector<std::future<Report>> jobs;
    for (const auto& n : names) {
        jobs.push_back(std::async(std::launch::async, [n, opt, fn = fns.at(n)] {
            Report r(n);
            fn(r, opt);
            r.sort_by_id();
            return r;
        }));
    }
    RunResult rr;
    for (auto& j : jobs) rr.suites.push_back(j.get());

    std::string list;
    for (const auto& n : names) list += (list.empty() ? "" : ",") + n;
    rr.config = {{"precision", std::to_string(cfg.precision)},
                 {"seed", std::to_string(cfg.seed)},
                 {"skip_heavy", cfg.skip_heavy ? "true" : "false"},
                 {"suites", list}};
    return rr;
}

}  // namespace hurwitz
