#pragma once
// Sparse multivariate polynomials (up to 7 variables) over Q(zeta_n).
//
// A monomial is packed into 64 bits: total degree in the top byte, then one byte per
// exponent with x1 most significant. Numeric order on the packed key is graded lex
// order, and the key of a product is the sum of the keys.

#include "cyclo.hpp"
#include "error.hpp"
#include "matrix.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

namespace hurwitz {

using Mono = std::uint64_t;

namespace mono {

inline constexpr int max_vars = 7;

inline int degree(Mono m) { return static_cast<int>(m >> 56); }
inline int exponent(Mono m, int i) { return static_cast<int>((m >> (8 * (6 - i))) & 0xff); }

inline Mono make(const std::vector<int>& e) {
    if (e.size() > static_cast<std::size_t>(max_vars)) throw DomainError("too many variables in monomial");
    Mono m = 0;
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0) throw DomainError("negative exponent");
        d += e[i];
        if (d > 255) throw DomainError("monomial degree exceeds 255");
        m |= static_cast<Mono>(e[i]) << (8 * (6 - i));
    }
    return m | static_cast<Mono>(d) << 56;
}

inline Mono var(int i, int k = 1) {
    std::vector<int> e(static_cast<std::size_t>(i) + 1, 0);
    e[i] = k;
    return make(e);
}

inline std::vector<int> exponents(Mono m, int nvars) {
    std::vector<int> e(nvars);
    for (int i = 0; i < nvars; ++i) e[i] = exponent(m, i);
    return e;
}

}  // namespace mono

class MultiPoly {
public:
    using Terms = std::map<Mono, CycloNum, std::greater<Mono>>;  // leading term first

    explicit MultiPoly(int nvars = 6, int conductor = 13) : nv_(nvars), n_(conductor) {
        if (nvars < 1 || nvars > mono::max_vars) throw DomainError("unsupported variable count");
    }

    static MultiPoly constant(const CycloNum& c, int nvars = 6) {
        MultiPoly p(nvars, c.conductor());
        p.add_term(0, c);
        return p;
    }
    // z_{i+1}, zero-based index
    static MultiPoly variable(int i, int nvars = 6, int conductor = 13) {
        if (i < 0 || i >= nvars) throw DomainError("variable index out of range");
        MultiPoly p(nvars, conductor);
        p.add_term(mono::var(i), CycloNum(conductor, 1));
        return p;
    }
    static MultiPoly monomial(const std::vector<int>& e, const CycloNum& c) {
        MultiPoly p(static_cast<int>(e.size()), c.conductor());
        p.add_term(mono::make(e), c);
        return p;
    }

    int nvars() const { return nv_; }
    int conductor() const { return n_; }
    const Terms& terms() const { return t_; }
    std::size_t size() const { return t_.size(); }
    bool is_zero() const { return t_.empty(); }

    int degree() const { return t_.empty() ? -1 : mono::degree(t_.begin()->first); }
    bool is_homogeneous() const {
        if (t_.empty()) return true;
        const int d = degree();
        for (const auto& [m, c] : t_)
            if (mono::degree(m) != d) return false;
        return true;
    }

    CycloNum coeff(Mono m) const {
        auto it = t_.find(m);
        return it == t_.end() ? CycloNum(n_) : it->second;
    }
    CycloNum coeff(const std::vector<int>& e) const { return coeff(mono::make(e)); }

    // adds c * monomial, dropping the term if it cancels
    void add_term(Mono m, const CycloNum& c) {
        if (c.is_zero()) return;
        for (int i = nv_; i < mono::max_vars; ++i)
            if (mono::exponent(m, i) != 0) throw DomainError("monomial uses a variable beyond nvars");
        auto [it, fresh] = t_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_compatible(o);
        for (const auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check_compatible(o);
        for (const auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }
    friend MultiPoly operator*(const CycloNum& s, const MultiPoly& p) {
        MultiPoly r(p.nv_, p.n_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : p.t_) r.t_.emplace_hint(r.t_.end(), m, s * c);
        return r;
    }
    friend MultiPoly operator*(long s, const MultiPoly& p) { return CycloNum(p.n_, s) * p; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_compatible(b);
        MultiPoly r(a.nv_, a.n_);
        if (a.is_zero() || b.is_zero()) return r;
        if (a.degree() + b.degree() > 255) throw DomainError("product degree exceeds 255");
        const auto& f = detail::cyclo_field(a.n_);
        const int phi = f.phi, w = 2 * phi - 1;
        const Integral ia(a), ib(b);
        std::unordered_map<Mono, std::size_t> slot;
        slot.reserve(a.size() * b.size() < 8192 ? a.size() * b.size() : 8192);
        std::vector<mpz_class> acc;
        for (std::size_t i = 0; i < ia.keys.size(); ++i) {
            for (std::size_t j = 0; j < ib.keys.size(); ++j) {
                const Mono k = ia.keys[i] + ib.keys[j];
                auto [it, fresh] = slot.try_emplace(k, acc.size());
                if (fresh) acc.resize(acc.size() + w);
                mpz_class* dst = &acc[it->second];
                for (std::size_t p = ia.start[i]; p < ia.start[i + 1]; ++p)
                    for (std::size_t q = ib.start[j]; q < ib.start[j + 1]; ++q)
                        mpz_addmul(dst[ia.pos[p] + ib.pos[q]].get_mpz_t(), ia.val[p].get_mpz_t(), ib.val[q].get_mpz_t());
            }
        }
        const mpz_class den = ia.den * ib.den;
        for (const auto& [k, s] : slot) {
            mpz_class* src = &acc[s];
            detail::reduce_acc(src, f);
            bool nz = false;
            for (int t = 0; t < phi && !nz; ++t) nz = sgn(src[t]) != 0;
            if (!nz) continue;
            r.t_.emplace(k, CycloNum::from_numerators(a.n_, std::vector<mpz_class>(src, src + phi), den));
        }
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly pow(int k) const {
        if (k < 0) throw DomainError("negative polynomial power");
        MultiPoly r = constant(CycloNum(n_, 1), nv_);
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.nv_ == b.nv_ && a.t_ == b.t_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    // f(g z): z_i -> sum_j g_ij z_j
    MultiPoly act(const Mat& g) const {
        if (g.dim() != nv_) throw DomainError("matrix size does not match variable count");
        if (g.conductor() != n_) throw DomainError("matrix and polynomial fields differ");
        if (t_.empty()) return *this;
        std::vector<int> target(nv_, -1);
        bool monomial = true;
        for (int i = 0; i < nv_ && monomial; ++i)
            for (int j = 0; j < nv_; ++j) {
                if (g(i, j).is_zero()) continue;
                if (target[i] >= 0) {
                    monomial = false;
                    break;
                }
                target[i] = j;
            }
        for (int i = 0; i < nv_ && monomial; ++i)
            if (target[i] < 0) throw DomainError("singular substitution");
        return monomial ? act_monomial(g, target) : act_general(g);
    }

    // evaluation at an embedded point
    Complex evaluate(const std::vector<Complex>& z) const {
        if (static_cast<int>(z.size()) != nv_) throw DomainError("point has wrong dimension");
        const int d = std::max(degree(), 0);
        std::vector<std::vector<Complex>> pw(nv_, std::vector<Complex>(d + 1));
        for (int i = 0; i < nv_; ++i) {
            pw[i][0] = Complex(Real(1));
            for (int k = 1; k <= d; ++k) pw[i][k] = pw[i][k - 1] * z[i];
        }
        Complex s;
        for (const auto& [m, c] : t_) {
            Complex v = c.embed();
            for (int i = 0; i < nv_; ++i) {
                const int e = mono::exponent(m, i);
                if (e) v = v * pw[i][e];
            }
            s += v;
        }
        return s;
    }

    // exact value at a point of Q(zeta_n)^nvars
    CycloNum evaluate(const std::vector<CycloNum>& z) const {
        if (static_cast<int>(z.size()) != nv_) throw DomainError("point has wrong dimension");
        CycloNum s(n_);
        for (const auto& [m, c] : t_) {
            CycloNum v = c;
            for (int i = 0; i < nv_; ++i)
                for (int k = mono::exponent(m, i); k > 0; --k) v = v * z[i];
            s += v;
        }
        return s;
    }

    MultiPoly galois(long k) const {
        MultiPoly r(nv_, n_);
        for (const auto& [m, c] : t_) r.t_.emplace_hint(r.t_.end(), m, c.galois(k));
        return r;
    }

    // one term per line, "e1 ... en : coeff", leading term first
    std::string dump() const {
        std::ostringstream os;
        for (const auto& [m, c] : t_) {
            for (int i = 0; i < nv_; ++i) os << (i ? " " : "") << mono::exponent(m, i);
            os << " : " << c.str() << "\n";
        }
        return os.str();
    }

    static MultiPoly parse_dump(const std::string& text, int nvars = 6) {
        std::istringstream is(text);
        std::string line;
        std::optional<MultiPoly> p;
        while (std::getline(is, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            auto colon = line.find(':');
            if (colon == std::string::npos) throw ParseError("missing ':' in polynomial term");
            std::istringstream es(line.substr(0, colon));
            std::vector<int> e;
            int x;
            while (es >> x) e.push_back(x);
            if (static_cast<int>(e.size()) != nvars) throw ParseError("wrong exponent count in polynomial term");
            CycloNum c = CycloNum::parse(line.substr(colon + 1));
            if (!p) p.emplace(nvars, c.conductor());
            p->add_term(mono::make(e), c);
        }
        return p ? *p : MultiPoly(nvars);
    }

    // readable form, for witnesses: "+(c) z1^2 z4"
    std::string pretty(std::size_t limit = 6) const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        std::size_t k = 0;
        for (const auto& [m, c] : t_) {
            if (k++ == limit) {
                os << " + ... (" << t_.size() << " terms)";
                break;
            }
            os << (k > 1 ? " + " : "") << "(" << c.str() << ")";
            for (int i = 0; i < nv_; ++i) {
                const int e = mono::exponent(m, i);
                if (e == 1) os << " z" << i + 1;
                if (e > 1) os << " z" << i + 1 << "^" << e;
            }
        }
        return os.str();
    }

private:
    int nv_;
    int n_;
    Terms t_;

    void check_compatible(const MultiPoly& o) const {
        if (nv_ != o.nv_) throw DomainError("variable count mismatch");
        if (n_ != o.n_) throw DomainError("coefficient field mismatch");
    }

    // all coefficients over one denominator, nonzero power-basis entries only
    struct Integral {
        mpz_class den = 1;
        std::vector<Mono> keys;
        std::vector<std::size_t> start;
        std::vector<int> pos;
        std::vector<mpz_class> val;

        explicit Integral(const MultiPoly& p) {
            for (const auto& [m, c] : p.t_) den = lcm(den, c.denominator());
            start.push_back(0);
            for (const auto& [m, c] : p.t_) {
                keys.push_back(m);
                const mpz_class s = den / c.denominator();
                const auto& num = c.numerators();
                for (std::size_t t = 0; t < num.size(); ++t) {
                    if (sgn(num[t]) == 0) continue;
                    pos.push_back(static_cast<int>(t));
                    val.push_back(num[t] * s);
                }
                start.push_back(val.size());
            }
        }
    };

    MultiPoly act_monomial(const Mat& g, const std::vector<int>& target) const {
        MultiPoly r(nv_, n_);
        std::vector<std::vector<CycloNum>> pw(nv_);
        for (const auto& [m, c] : t_) {
            CycloNum v = c;
            std::vector<int> e(nv_, 0);
            for (int i = 0; i < nv_; ++i) {
                const int k = mono::exponent(m, i);
                if (!k) continue;
                auto& cache = pw[i];
                if (cache.empty()) cache.push_back(CycloNum(n_, 1));
                while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * g(i, target[i]));
                v = v * cache[k];
                e[target[i]] += k;
            }
            r.add_term(mono::make(e), v);
        }
        return r;
    }

    MultiPoly act_general(const Mat& g) const {
        std::vector<MultiPoly> lin;
        for (int i = 0; i < nv_; ++i) {
            MultiPoly l(nv_, n_);
            for (int j = 0; j < nv_; ++j) l.add_term(mono::var(j), g(i, j));
            lin.push_back(std::move(l));
        }
        std::vector<std::vector<MultiPoly>> pw(nv_);
        auto power = [&](int i, int k) -> const MultiPoly& {
            auto& cache = pw[i];
            if (cache.empty()) cache.push_back(constant(CycloNum(n_, 1), nv_));
            while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * lin[i]);
            return cache[k];
        };
        MultiPoly r(nv_, n_);
        for (const auto& [m, c] : t_) {
            MultiPoly v = constant(c, nv_);
            for (int i = 0; i < nv_; ++i) {
                const int k = mono::exponent(m, i);
                if (k) v = v * power(i, k);
            }
            r += v;
        }
        return r;
    }
};

inline MultiPoly act(const Mat& g, const MultiPoly& f) { return f.act(g); }

// z_1 .. z_n as polynomials
inline std::vector<MultiPoly> variables(int nvars = 6, int conductor = 13) {
    std::vector<MultiPoly> z;
    for (int i = 0; i < nvars; ++i) z.push_back(MultiPoly::variable(i, nvars, conductor));
    return z;
}

}  // namespace hurwitz
