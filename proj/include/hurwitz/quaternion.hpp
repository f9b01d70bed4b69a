#pragma once
// The quaternion algebra K(i, j), i^2 = j^2 = eta, ji = -ij, over K = Q(eta),
// eta = zeta_7 + zeta_7^-1; K sits inside Q(zeta_7) as the conjugation-fixed part.

#include "constants.hpp"
#include "error.hpp"

#include <array>
#include <string>
#include <vector>

namespace hurwitz {

inline CycloNum K(long v) { return CycloNum(7, v); }
inline const CycloNum& eta() { return cval("eta"); }

inline bool in_K(const CycloNum& x) { return x.conductor() == 7 && x.conj() == x; }

// N_{K/Q}: product over the three real embeddings zeta_7 -> zeta_7^k, k = 1, 2, 3
inline mpq_class normK(const CycloNum& x) {
    if (!in_K(x)) throw DomainError("element is not in the real subfield of Q(zeta_7)");
    return (x * x.galois(2) * x.galois(3)).rational_value();
}
inline mpq_class traceK(const CycloNum& x) { return x.trace() / 2; }

// x = c0 + c1 eta + c2 eta^2 with rational c
inline std::array<mpq_class, 3> k_coords(const CycloNum& x) {
    if (!in_K(x)) throw DomainError("element is not in K");
    // eta^k in the zeta_7 power basis, solve the 6x3 system by elimination on columns 0..2
    const CycloNum e = eta();
    std::vector<std::vector<mpq_class>> cols = {K(1).coeffs(), e.coeffs(), (e * e).coeffs()};
    std::vector<mpq_class> rhs = x.coeffs();
    const int rows = static_cast<int>(rhs.size());
    std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(4));
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < 3; ++c) a[r][c] = cols[c][r];
        a[r][3] = rhs[r];
    }
    int row = 0;
    std::array<int, 3> pivrow{-1, -1, -1};
    for (int c = 0; c < 3 && row < rows; ++c) {
        int p = row;
        while (p < rows && sgn(a[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[row]);
        for (int r = 0; r < rows; ++r) {
            if (r == row || sgn(a[r][c]) == 0) continue;
            mpq_class f = a[r][c] / a[row][c];
            for (int k = c; k < 4; ++k) a[r][k] -= f * a[row][k];
        }
        pivrow[c] = row++;
    }
    for (int r = row; r < rows; ++r)
        if (sgn(a[r][3]) != 0) throw DomainError("inconsistent K coordinates");
    std::array<mpq_class, 3> out;
    for (int c = 0; c < 3; ++c) out[c] = pivrow[c] < 0 ? mpq_class(0) : mpq_class(a[pivrow[c]][3] / a[pivrow[c]][c]);
    return out;
}

// a + b i + c j + d ij
struct Quat {
    CycloNum a = K(0), b = K(0), c = K(0), d = K(0);

    Quat() = default;
    Quat(CycloNum a_, CycloNum b_, CycloNum c_, CycloNum d_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        for (const auto* x : {&a, &b, &c, &d})
            if (!in_K(*x)) throw DomainError("quaternion coordinate outside K");
    }
    static Quat scalar(const CycloNum& x) { return Quat(x, K(0), K(0), K(0)); }
    static Quat one() { return scalar(K(1)); }
    static Quat i() { return Quat(K(0), K(1), K(0), K(0)); }
    static Quat j() { return Quat(K(0), K(0), K(1), K(0)); }
    static Quat ij() { return Quat(K(0), K(0), K(0), K(1)); }

    friend Quat operator+(const Quat& x, const Quat& y) { return Quat(x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d); }
    friend Quat operator-(const Quat& x, const Quat& y) { return Quat(x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d); }
    Quat operator-() const { return Quat(-a, -b, -c, -d); }
    friend Quat operator*(const CycloNum& s, const Quat& x) { return Quat(s * x.a, s * x.b, s * x.c, s * x.d); }

    // i^2 = alpha, j^2 = beta with alpha = beta = eta
    friend Quat operator*(const Quat& x, const Quat& y) {
        const CycloNum& al = eta();
        const CycloNum& be = eta();
        return Quat(x.a * y.a + al * x.b * y.b + be * x.c * y.c - al * be * x.d * y.d,
                    x.a * y.b + x.b * y.a - be * x.c * y.d + be * x.d * y.c,
                    x.a * y.c + x.c * y.a + al * x.b * y.d - al * x.d * y.b,
                    x.a * y.d + x.d * y.a + x.b * y.c - x.c * y.b);
    }
    friend bool operator==(const Quat& x, const Quat& y) { return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d; }

    Quat conj() const { return Quat(a, -b, -c, -d); }
    // a^2 - eta b^2 - eta c^2 + eta^2 d^2
    CycloNum norm() const {
        const CycloNum& e = eta();
        return a * a - e * b * b - e * c * c + e * e * d * d;
    }
    CycloNum reduced_trace() const { return a * 2; }

    Quat pow(int k) const {
        Quat r = one();
        for (int t = 0; t < k; ++t) r = r * *this;
        return r;
    }

    // 12 rational coordinates over 1, eta, eta^2 for each of a, b, c, d
    std::vector<mpq_class> rational_coords() const {
        std::vector<mpq_class> v;
        for (const auto* x : {&a, &b, &c, &d})
            for (const auto& q : k_coords(*x)) v.push_back(q);
        return v;
    }

    std::string str() const {
        return "[" + a.str() + " | " + b.str() + " | " + c.str() + " | " + d.str() + "]";
    }
};

inline Quat quat_mul(const Quat& x, const Quat& y) { return x * y; }
inline CycloNum quat_norm(const Quat& x) { return x.norm(); }
inline Quat quat_conj(const Quat& x) { return x.conj(); }

inline CycloNum tau7() { return cval("tau7"); }

struct Elkies {
    Quat g2, g3, g7;
};

inline Elkies elkies_generators() {
    const CycloNum e = eta(), e2 = e * e, t = tau7();
    const CycloNum half = K(1) * mpq_class(1, 2);
    Elkies g;
    g.g2 = e.inverse() * Quat::ij();
    g.g3 = half * Quat(K(1), K(0), e2 - K(2), K(3) - e2);
    g.g7 = half * Quat(t - K(2), K(2) - e2, K(0), t - K(3));
    return g;
}

// j' = (1 + eta i + tau j) / 2
inline Quat j_prime() {
    const CycloNum half = K(1) * mpq_class(1, 2);
    return half * Quat(K(1), eta(), tau7(), K(0));
}

// ---------------------------------------------------------------------------
// Z-lattices of rank <= 12 inside D, via Hermite normal form

struct Lattice {
    std::vector<std::vector<mpq_class>> basis;  // rows

    // row-style HNF of the Z-span of the given rational vectors
    static Lattice span(const std::vector<std::vector<mpq_class>>& gens) {
        if (gens.empty()) return {};
        const std::size_t n = gens[0].size();
        mpz_class den = 1;
        for (const auto& g : gens)
            for (const auto& q : g) den = lcm(den, mpz_class(q.get_den()));
        std::vector<std::vector<mpz_class>> m;
        for (const auto& g : gens) {
            std::vector<mpz_class> r(n);
            bool nz = false;
            for (std::size_t k = 0; k < n; ++k) {
                r[k] = g[k].get_num() * (den / g[k].get_den());
                nz = nz || sgn(r[k]) != 0;
            }
            if (nz) m.push_back(std::move(r));
        }
        std::size_t row = 0;
        for (std::size_t col = 0; col < n && row < m.size(); ++col) {
            // gcd-reduce column col among rows >= row
            while (true) {
                std::size_t piv = m.size();
                for (std::size_t r = row; r < m.size(); ++r)
                    if (sgn(m[r][col]) != 0 && (piv == m.size() || abs(m[r][col]) < abs(m[piv][col]))) piv = r;
                if (piv == m.size()) break;
                std::swap(m[piv], m[row]);
                bool done = true;
                for (std::size_t r = row + 1; r < m.size(); ++r) {
                    if (sgn(m[r][col]) == 0) continue;
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), m[r][col].get_mpz_t(), m[row][col].get_mpz_t());
                    for (std::size_t k = col; k < n; ++k) m[r][k] -= q * m[row][k];
                    if (sgn(m[r][col]) != 0) done = false;
                }
                if (done) break;
            }
            if (row < m.size() && sgn(m[row][col]) != 0) {
                if (sgn(m[row][col]) < 0)
                    for (auto& v : m[row]) v = -v;
                for (std::size_t r = 0; r < row; ++r) {
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), m[r][col].get_mpz_t(), m[row][col].get_mpz_t());
                    if (sgn(q) != 0)
                        for (std::size_t k = col; k < n; ++k) m[r][k] -= q * m[row][k];
                }
                ++row;
            }
        }
        Lattice L;
        for (std::size_t r = 0; r < row; ++r) {
            std::vector<mpq_class> v(n);
            for (std::size_t k = 0; k < n; ++k) {
                v[k] = mpq_class(m[r][k], den);
                v[k].canonicalize();
            }
            L.basis.push_back(std::move(v));
        }
        return L;
    }

    std::size_t rank() const { return basis.size(); }
    bool operator==(const Lattice& o) const { return basis == o.basis; }

    // integer coordinates of v in the basis, if v lies in the lattice
    bool contains(const std::vector<mpq_class>& v) const {
        std::vector<std::vector<mpq_class>> gens = basis;
        gens.push_back(v);
        return span(gens) == *this;
    }
};

inline Quat quat_from_coords(const std::vector<mpq_class>& v) {
    const CycloNum e = eta(), e2 = e * e;
    auto comp = [&](int k) { return K(1) * v[3 * k] + e * v[3 * k + 1] + e2 * v[3 * k + 2]; };
    return Quat(comp(0), comp(1), comp(2), comp(3));
}

inline std::vector<std::vector<mpq_class>> coords_of(const std::vector<Quat>& xs) {
    std::vector<std::vector<mpq_class>> r;
    for (const auto& x : xs) r.push_back(x.rational_coords());
    return r;
}

inline bool in_lattice(const Lattice& L, const Quat& x) { return L.contains(x.rational_coords()); }

// Z-span of Z[eta] times the generators, closed under products until stable.
// With generators {1, i, j, j'} this is the ring Z[eta][i, j, j'].
inline Lattice order_closure(const std::vector<Quat>& gens, int* rounds = nullptr) {
    const CycloNum e = eta();
    std::vector<Quat> seed;
    for (const auto& g : gens)
        for (const CycloNum& s : {K(1), e, e * e}) seed.push_back(s * g);
    seed.push_back(Quat::one());
    Lattice L = Lattice::span(coords_of(seed));
    for (int r = 1;; ++r) {
        std::vector<Quat> b;
        for (const auto& v : L.basis) b.push_back(quat_from_coords(v));
        std::vector<std::vector<mpq_class>> rows = L.basis;
        for (const auto& x : b)
            for (const auto& y : b) rows.push_back((x * y).rational_coords());
        Lattice next = Lattice::span(rows);
        if (next == L) {
            if (rounds) *rounds = r;
            return L;
        }
        L = std::move(next);
    }
}

inline const Lattice& hurwitz_order() {
    static const Lattice L = order_closure({Quat::i(), Quat::j(), j_prime()});
    return L;
}

inline mpq_class det_q(std::vector<std::vector<mpq_class>> a) {
    const std::size_t n = a.size();
    mpq_class d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a[p][c]) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (sgn(a[r][c]) == 0) continue;
            mpq_class f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return d;
}

// det of Tr_{D/Q}(e_k e_l) over a Z-basis. Every order has |disc| >= d_K^4 = 7^8,
// with equality exactly when the reduced discriminant is trivial, i.e. the order is maximal.
inline mpq_class lattice_discriminant(const Lattice& L) {
    std::vector<Quat> b;
    for (const auto& v : L.basis) b.push_back(quat_from_coords(v));
    const std::size_t n = b.size();
    std::vector<std::vector<mpq_class>> g(n, std::vector<mpq_class>(n));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) g[k][l] = traceK((b[k] * b[l]).reduced_trace());
    return det_q(g);
}

struct OrderReport {
    std::size_t rank = 0;
    mpq_class discriminant;
    bool maximal = false;  // |disc| == 7^8
    bool contains_g2 = false, contains_g3 = false, contains_g7 = false;
    bool in_span_basis = false;  // is {1, i, j', ij'} a Z[eta]-basis of the order
    std::string detail;
};

inline OrderReport order_report() {
    OrderReport r;
    const Lattice& L = hurwitz_order();
    r.rank = L.rank();
    r.discriminant = lattice_discriminant(L);
    r.maximal = abs(r.discriminant) == mpq_class(5764801);
    const Elkies g = elkies_generators();
    r.contains_g2 = in_lattice(L, g.g2);
    r.contains_g3 = in_lattice(L, g.g3);
    r.contains_g7 = in_lattice(L, g.g7);
    const Quat jp = j_prime();
    const CycloNum e = eta();
    std::vector<Quat> small;
    for (const Quat& q : {Quat::one(), Quat::i(), jp, Quat::i() * jp})
        for (const CycloNum& s : {K(1), e, e * e}) small.push_back(s * q);
    r.in_span_basis = Lattice::span(coords_of(small)) == L;
    r.detail = "Z-rank " + std::to_string(r.rank) + ", disc " + r.discriminant.get_str() + (r.maximal ? " = +-7^8 (maximal)" : " (not maximal)") +
               ", g2/g3/g7 " + (r.contains_g2 ? "in" : "out") + "/" + (r.contains_g3 ? "in" : "out") + "/" + (r.contains_g7 ? "in" : "out") +
               ", {1,i,j',ij'} " + (r.in_span_basis ? "is" : "is not") + " a Z[eta]-basis";
    return r;
}

// ---------------------------------------------------------------------------
// generator relations and the splitting of 13

struct ElkiesReport {
    bool g2_sq = false, g3_cube = false, g7_seventh = false, g2_eq_g7g3 = false, unit_norms = false;
    int order_g2 = 0, order_g3 = 0, order_g7 = 0;  // multiplicative orders (4, 6, 14 expected)
    bool ok() const { return g2_sq && g3_cube && g7_seventh && g2_eq_g7g3 && unit_norms; }
};

inline int quat_order(const Quat& x, int bound = 64) {
    Quat p = x;
    for (int k = 1; k <= bound; ++k) {
        if (p == Quat::one()) return k;
        p = p * x;
    }
    return -1;
}

inline ElkiesReport check_elkies() {
    const Elkies g = elkies_generators();
    const Quat m1 = -Quat::one();
    ElkiesReport r;
    r.g2_sq = g.g2.pow(2) == m1;
    r.g3_cube = g.g3.pow(3) == m1;
    r.g7_seventh = g.g7.pow(7) == m1;
    r.g2_eq_g7g3 = g.g2 == g.g7 * g.g3;
    r.unit_norms = g.g2.norm().is_one() && g.g3.norm().is_one() && g.g7.norm().is_one();
    r.order_g2 = quat_order(g.g2);
    r.order_g3 = quat_order(g.g3);
    r.order_g7 = quat_order(g.g7);
    return r;
}

struct PrimeSplit {
    std::vector<CycloNum> factors;  // eta, eta+2, 2eta-1, 3-2eta, eta+3
    std::vector<mpq_class> norms;
    bool product_is_13 = false;
    bool unit_part = false;  // N(eta (eta+2)) = +-1
    bool three_primes = false;  // remaining factors have norm +-13
    bool ok() const { return product_is_13 && unit_part && three_primes; }
};

inline PrimeSplit verify_prime_split() {
    const CycloNum e = eta();
    PrimeSplit p;
    p.factors = {e, e + K(2), e * 2 - K(1), K(3) - e * 2, e + K(3)};
    CycloNum prod = K(1);
    for (const auto& f : p.factors) {
        prod = prod * f;
        p.norms.push_back(normK(f));
    }
    p.product_is_13 = prod == K(13);
    p.unit_part = abs(normK(p.factors[0] * p.factors[1])) == 1;
    p.three_primes = true;
    for (int k = 2; k < 5; ++k) p.three_primes = p.three_primes && abs(p.norms[k]) == 13;
    return p;
}

// N(c eta + d) from the minimal polynomial f(x) = x^3 + x^2 - 2x - 1: -c^3 f(-d/c)
inline mpq_class norm_linear_via_minpoly(const mpq_class& c, const mpq_class& d) {
    if (sgn(c) == 0) return d * d * d;
    const mpq_class x = -d / c;
    return -c * c * c * (x * x * x + x * x - 2 * x - 1);
}

// ---------------------------------------------------------------------------
// real places

struct Place {
    int k;         // eta -> 2 cos(2 pi k / 7)
    Real eta_value;
    bool ramified;  // (eta, eta)_R is the Hamilton quaternions iff eta < 0
};

inline std::vector<Place> real_places() {
    std::vector<Place> out;
    for (int k = 1; k <= 3; ++k) {
        Real v = eta().galois(k).embed().re;
        out.push_back({k, v, v < 0});
    }
    return out;
}

}  // namespace hurwitz
