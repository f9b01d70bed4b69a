#pragma once
// Linear codes over F_13 and their Lee weight enumerators.

#include "error.hpp"
#include "matrix.hpp"
#include "poly.hpp"

#include <string>
#include <vector>

namespace hurwitz {

inline constexpr int lee_p = 13;
inline constexpr int lee_classes = 7;  // X_0 .. X_6, X_i counts entries equal to +-i

inline int mod13(long a) { return static_cast<int>(((a % lee_p) + lee_p) % lee_p); }

inline int inv13(int a) {
    a = mod13(a);
    if (a == 0) throw DivisionByZero();
    for (int b = 1; b < lee_p; ++b)
        if (a * b % lee_p == 1) return b;
    throw DivisionByZero();
}

inline int lee_class(int a) {
    a = mod13(a);
    return a <= 6 ? a : lee_p - a;
}

class Code13 {
public:
    Code13(int n, std::vector<std::vector<int>> gens) : n_(n) {
        if (n <= 0) throw DomainError("code length must be positive");
        for (auto& g : gens) {
            if (static_cast<int>(g.size()) != n) throw DomainError("generator has the wrong length");
            for (auto& x : g) x = mod13(x);
        }
        rows_ = echelon(std::move(gens));
    }

    static Code13 zero(int n) { return Code13(n, {}); }

    int length() const { return n_; }
    int dimension() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<int>>& basis() const { return rows_; }

    static int dot(const std::vector<int>& a, const std::vector<int>& b) {
        long s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
        return mod13(s);
    }

    bool self_orthogonal() const {
        for (const auto& a : rows_)
            for (const auto& b : rows_)
                if (dot(a, b)) return false;
        return true;
    }

    // nullspace of the generator matrix under the standard dot product
    Code13 dual() const {
        const int k = dimension();
        std::vector<int> pivcol;
        for (const auto& r : rows_) {
            int c = 0;
            while (r[c] == 0) ++c;
            pivcol.push_back(c);
        }
        std::vector<char> is_piv(n_, 0);
        for (int c : pivcol) is_piv[c] = 1;
        std::vector<std::vector<int>> gens;
        for (int f = 0; f < n_; ++f) {
            if (is_piv[f]) continue;
            std::vector<int> v(n_, 0);
            v[f] = 1;
            for (int i = 0; i < k; ++i) v[pivcol[i]] = mod13(-rows_[i][f]);
            gens.push_back(v);
        }
        return Code13(n_, gens);
    }

    // all 13^k codewords in a fixed order
    std::vector<std::vector<int>> codewords() const {
        const int k = dimension();
        long total = 1;
        for (int i = 0; i < k; ++i) total *= lee_p;
        std::vector<std::vector<int>> out;
        out.reserve(static_cast<std::size_t>(total));
        std::vector<int> coef(k, 0);
        for (long t = 0; t < total; ++t) {
            long u = t;
            for (int i = 0; i < k; ++i) {
                coef[i] = static_cast<int>(u % lee_p);
                u /= lee_p;
            }
            std::vector<int> w(n_, 0);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < n_; ++j) w[j] = mod13(w[j] + coef[i] * rows_[i][j]);
            out.push_back(std::move(w));
        }
        return out;
    }

    bool operator==(const Code13& o) const { return n_ == o.n_ && rows_ == o.rows_; }

    std::string str() const {
        std::string s = "[" + std::to_string(n_) + "," + std::to_string(dimension()) + "]{";
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i) s += ";";
            for (int j = 0; j < n_; ++j) s += (j ? " " : "") + std::to_string(rows_[i][j]);
        }
        return s + "}";
    }

private:
    int n_;
    std::vector<std::vector<int>> rows_;

    // reduced row echelon form, zero rows dropped
    std::vector<std::vector<int>> echelon(std::vector<std::vector<int>> a) const {
        int row = 0;
        const int m = static_cast<int>(a.size());
        for (int col = 0; col < n_ && row < m; ++col) {
            int piv = -1;
            for (int i = row; i < m; ++i)
                if (a[i][col]) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            std::swap(a[piv], a[row]);
            const int inv = inv13(a[row][col]);
            for (auto& x : a[row]) x = mod13(static_cast<long>(x) * inv);
            for (int i = 0; i < m; ++i) {
                if (i == row || !a[i][col]) continue;
                const int f = a[i][col];
                for (int j = 0; j < n_; ++j) a[i][j] = mod13(a[i][j] - static_cast<long>(f) * a[row][j]);
            }
            ++row;
        }
        a.resize(row);
        return a;
    }
};

// sum over codewords of prod_i X_i^{l_i}, l_i = number of entries equal to +-i
inline MultiPoly lee_enumerator(const Code13& c) {
    MultiPoly w(lee_classes, lee_p);
    for (const auto& word : c.codewords()) {
        std::vector<int> e(lee_classes, 0);
        for (int x : word) ++e[lee_class(x)];
        w.add_term(mono::make(e), CycloNum(lee_p, 1));
    }
    return w;
}

// W(X M): variable X_j goes to sum_i X_i M_ij, i.e. act by the transpose
inline MultiPoly substitute_row_vector(const MultiPoly& w, const Mat& m) { return act(m.transpose(), w); }

struct MacWilliamsResult {
    MultiPoly w;           // W_C
    MultiPoly w_dual;      // W_{C-perp}
    MultiPoly transformed; // W_C(X S~)
    CycloNum constant;     // W_{C-perp} = constant * transformed
    CycloNum predicted;    // 13^(n/2 - k)
    bool identity = false;
    bool constant_matches = false;
    bool ones_check = false;   // W_{C-perp}(1..1) = constant * transformed(1..1)
    bool double_transform = false;
    std::string detail;
};

// 13^(n/2 - k) as an element of Q(zeta_13), using sqrt13 for odd n
inline CycloNum macwilliams_prediction(int n, int k, const CycloNum& sqrt13) {
    CycloNum r(lee_p, 1);
    const int twice = n - 2 * k;  // exponent of sqrt13
    const CycloNum base = twice >= 0 ? sqrt13 : sqrt13.inverse();
    for (int i = 0; i < (twice >= 0 ? twice : -twice); ++i) r *= base;
    return r;
}

// The identity W_{C-perp}(X) = const W_C(X S~) for a self-orthogonal code.
inline MacWilliamsResult macwilliams_check(const Code13& c, const Mat& s_tilde, const CycloNum& sqrt13) {
    if (!c.self_orthogonal()) throw DomainError("code " + c.str() + " is not self-orthogonal");
    MacWilliamsResult r;
    const Code13 d = c.dual();
    r.w = lee_enumerator(c);
    r.w_dual = lee_enumerator(d);
    r.transformed = substitute_row_vector(r.w, s_tilde);
    r.predicted = macwilliams_prediction(c.length(), c.dimension(), sqrt13);

    const auto& [lead, lc] = *r.w_dual.terms().begin();
    const CycloNum t = r.transformed.coeff(lead);
    if (t.is_zero()) {
        r.constant = CycloNum(lee_p);
        r.detail = "transformed enumerator misses the leading monomial of the dual enumerator";
        return r;
    }
    r.constant = lc / t;
    r.identity = r.w_dual == r.constant * r.transformed;
    r.constant_matches = r.constant == r.predicted;

    const std::vector<CycloNum> ones(lee_classes, CycloNum(lee_p, 1));
    r.ones_check = r.w_dual.evaluate(ones) == r.constant * r.transformed.evaluate(ones);

    // transform the dual enumerator back: W_C = const' W_{C-perp}(X S~)
    const MultiPoly back = substitute_row_vector(r.w_dual, s_tilde);
    const CycloNum pred_back = macwilliams_prediction(d.length(), d.dimension(), sqrt13);
    r.double_transform = r.w == pred_back * back && (r.predicted * pred_back).is_one();
    r.detail = "C = " + c.str() + ", dual = " + d.str() + ", constant = " + r.constant.str() +
               ", predicted 13^(n/2-k) = " + r.predicted.str();
    return r;
}

}  // namespace hurwitz
