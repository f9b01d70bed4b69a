#pragma once
// Exact elements of Q(zeta_n), stored in the power basis modulo Phi_n.

#include "hurwitz/error.hpp"
#include "hurwitz/numeric.hpp"

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hurwitz {

namespace detail {

struct CycloField {
    int n = 0;
    int phi = 0;
    std::vector<long> poly;               // Phi_n, constant term first, monic
    std::vector<std::vector<long>> xpow;  // x^k mod Phi_n, k < max(n, 2 phi - 1)
    std::vector<int> units;               // 1 <= k < n with gcd(k, n) = 1
};

// exact quotient a / b for integer polynomials, b monic
inline std::vector<long> poly_divexact(std::vector<long> a, const std::vector<long>& b) {
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {0};
    std::vector<long> q(a.size() - db, 0);
    for (std::size_t k = a.size(); k-- > db;) {
        long c = a[k];
        q[k - db] = c;
        if (c != 0)
            for (std::size_t t = 0; t <= db; ++t) a[k - db + t] -= c * b[t];
    }
    return q;
}

inline std::vector<long> cyclotomic_poly(int n) {
    std::vector<long> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = poly_divexact(p, cyclotomic_poly(d));
    return p;
}

inline std::unique_ptr<CycloField> make_field(int n) {
    auto f = std::make_unique<CycloField>();
    f->n = n;
    f->poly = cyclotomic_poly(n);
    f->phi = static_cast<int>(f->poly.size()) - 1;
    const int top = std::max(n, 2 * f->phi - 1);
    std::vector<long> cur(f->phi, 0);
    cur[0] = 1;
    for (int k = 0; k < top; ++k) {
        f->xpow.push_back(cur);
        // multiply by x and reduce
        long carry = cur[f->phi - 1];
        for (int t = f->phi - 1; t > 0; --t) cur[t] = cur[t - 1];
        cur[0] = 0;
        for (int t = 0; t < f->phi; ++t) cur[t] -= carry * f->poly[t];
    }
    for (int k = 1; k <= std::max(1, n - 1); ++k)
        if (std::gcd(k, n) == 1) f->units.push_back(k);
    return f;
}

inline const CycloField& cyclo_field(int n) {
    if (n < 1) throw DomainError("conductor must be positive, got " + std::to_string(n));
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycloField>> fields;
    std::lock_guard lock(mu);
    auto& slot = fields[n];
    if (!slot) slot = make_field(n);
    return *slot;
}

inline long mod(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

// acc[0 .. 2 phi - 2] += a * b
inline void conv_acc(mpz_class* acc, const mpz_class* a, const mpz_class* b, int phi) {
    for (int i = 0; i < phi; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (int j = 0; j < phi; ++j) {
            if (sgn(b[j]) == 0) continue;
            mpz_addmul(acc[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
}

// reduce acc[0 .. 2 phi - 2] modulo Phi_n in place
inline void reduce_acc(mpz_class* acc, const CycloField& f) {
    const int phi = f.phi;
    for (int k = 2 * phi - 2; k >= phi; --k) {
        mpz_class& c = acc[k];
        if (sgn(c) == 0) continue;
        for (int t = 0; t < phi; ++t) {
            long p = f.poly[t];
            if (p == 0) continue;
            mpz_class& dst = acc[k - phi + t];
            if (p == 1)
                dst -= c;
            else if (p == -1)
                dst += c;
            else
                dst -= c * p;
        }
        c = 0;
    }
}

}  // namespace detail

class CycloNum {
public:
    CycloNum() : CycloNum(1) {}
    explicit CycloNum(int n) : f_(&detail::cyclo_field(n)), c_(f_->phi), d_(1) {}
    CycloNum(int n, long v) : CycloNum(n) { c_[0] = v; }
    CycloNum(int n, const mpq_class& v) : CycloNum(n) {
        if (sgn(v.get_den()) == 0) throw DivisionByZero();
        c_[0] = v.get_num();
        d_ = v.get_den();
        normalize();
    }

    // zeta_n^k, k any integer
    static CycloNum zeta(int n, long k = 1) {
        CycloNum r(n);
        const auto& x = r.f_->xpow[detail::mod(k, n)];
        for (int t = 0; t < r.f_->phi; ++t) r.c_[t] = x[t];
        return r;
    }

    // sum of coef * zeta^exp; exponents reduced mod n
    static CycloNum from_terms(int n, const std::vector<std::pair<long, long>>& terms) {
        CycloNum r(n);
        for (auto [coef, e] : terms) {
            const auto& x = r.f_->xpow[detail::mod(e, n)];
            for (int t = 0; t < r.f_->phi; ++t)
                if (x[t]) r.c_[t] += coef * x[t];
        }
        return r;
    }

    // raw[k] is the coefficient of zeta^k; raw may use all n powers
    static CycloNum canon(int n, const std::vector<mpq_class>& raw) {
        if (n == 0) throw DomainError("conductor 0");
        if (n < 0) throw DomainError("negative conductor");
        if (static_cast<int>(raw.size()) > n)
            throw DomainError("raw coefficient vector longer than the conductor");
        CycloNum r(n);
        mpz_class L = 1;
        for (const auto& q : raw) L = lcm(L, mpz_class(q.get_den()));
        for (std::size_t k = 0; k < raw.size(); ++k) {
            if (sgn(raw[k]) == 0) continue;
            mpz_class v = raw[k].get_num() * (L / raw[k].get_den());
            const auto& x = r.f_->xpow[k];
            for (int t = 0; t < r.f_->phi; ++t)
                if (x[t]) r.c_[t] += v * x[t];
        }
        r.d_ = L;
        r.normalize();
        return r;
    }

    // power basis numerators over a common denominator
    static CycloNum from_numerators(int n, std::vector<mpz_class> num, mpz_class den) {
        CycloNum r(n);
        if (static_cast<int>(num.size()) != r.f_->phi) throw DomainError("wrong coefficient count");
        if (sgn(den) == 0) throw DivisionByZero();
        r.c_ = std::move(num);
        r.d_ = std::move(den);
        r.normalize();
        return r;
    }

    int conductor() const { return f_->n; }
    int degree() const { return f_->phi; }
    const std::vector<mpz_class>& numerators() const { return c_; }
    const mpz_class& denominator() const { return d_; }

    std::vector<mpq_class> coeffs() const {
        std::vector<mpq_class> out(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            out[i] = mpq_class(c_[i], d_);
            out[i].canonicalize();
        }
        return out;
    }

    bool is_zero() const {
        for (const auto& c : c_)
            if (sgn(c) != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (sgn(c_[i]) != 0) return false;
        return true;
    }
    bool is_integral() const { return d_ == 1; }
    mpq_class rational_value() const {
        if (!is_rational()) throw DomainError("element is not rational");
        mpq_class q(c_[0], d_);
        q.canonicalize();
        return q;
    }
    bool is_one() const { return is_rational() && c_[0] == d_; }

    CycloNum lift(int m) const {
        if (m % f_->n != 0)
            throw DomainError("cannot lift conductor " + std::to_string(f_->n) + " to " + std::to_string(m));
        if (m == f_->n) return *this;
        CycloNum r(m);
        const long step = m / f_->n;
        for (int i = 0; i < f_->phi; ++i) {
            if (sgn(c_[i]) == 0) continue;
            const auto& x = r.f_->xpow[detail::mod(i * step, m)];
            for (int t = 0; t < r.f_->phi; ++t)
                if (x[t]) r.c_[t] += c_[i] * x[t];
        }
        r.d_ = d_;
        r.normalize();
        return r;
    }

    // zeta -> zeta^k
    CycloNum galois(long k) const {
        const long n = f_->n;
        if (std::gcd(detail::mod(k, n), n) != 1 && n > 1)
            throw DomainError("Galois index " + std::to_string(k) + " is not a unit mod " + std::to_string(n));
        CycloNum r(f_->n);
        for (int i = 0; i < f_->phi; ++i) {
            if (sgn(c_[i]) == 0) continue;
            const auto& x = f_->xpow[detail::mod(i * k, n)];
            for (int t = 0; t < f_->phi; ++t)
                if (x[t]) r.c_[t] += c_[i] * x[t];
        }
        r.d_ = d_;
        return r;
    }
    CycloNum conj() const { return galois(-1); }

    mpq_class norm() const {
        CycloNum p = *this;
        for (int k : f_->units)
            if (k != 1) p *= galois(k);
        return p.rational_value();
    }
    mpq_class trace() const {
        CycloNum s(f_->n);
        for (int k : f_->units) s += galois(k);
        return s.rational_value();
    }

    CycloNum inverse() const {
        if (is_zero()) throw DivisionByZero();
        if (is_rational()) return CycloNum(f_->n, mpq_class(d_, c_[0]));
        CycloNum p(f_->n, 1);
        for (int k : f_->units)
            if (k != 1) p *= galois(k);
        mpq_class nrm = (*this * p).rational_value();
        return p * CycloNum(f_->n, mpq_class(1) / nrm);
    }

    CycloNum operator-() const {
        CycloNum r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    CycloNum& operator+=(const CycloNum& o) { return add(o, 1); }
    CycloNum& operator-=(const CycloNum& o) { return add(o, -1); }
    CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }
    CycloNum& operator/=(const CycloNum& o) { return *this = *this / o; }

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inverse(); }

    friend CycloNum operator*(const CycloNum& a, const CycloNum& b) {
        if (a.f_ != b.f_) {
            auto [x, y] = unify(a, b);
            return x * y;
        }
        if (a.is_rational()) return b.scaled(a.c_[0], a.d_);
        if (b.is_rational()) return a.scaled(b.c_[0], b.d_);
        const int phi = a.f_->phi;
        thread_local std::vector<mpz_class> acc;
        acc.resize(2 * phi - 1);
        for (auto& v : acc) v = 0;
        detail::conv_acc(acc.data(), a.c_.data(), b.c_.data(), phi);
        detail::reduce_acc(acc.data(), *a.f_);
        CycloNum r(a.f_->n);
        for (int t = 0; t < phi; ++t) r.c_[t] = acc[t];
        r.d_ = a.d_ * b.d_;
        r.normalize();
        return r;
    }

    friend CycloNum operator*(const CycloNum& a, long v) { return a.scaled(mpz_class(v), mpz_class(1)); }
    friend CycloNum operator*(long v, const CycloNum& a) { return a * v; }
    friend CycloNum operator*(const CycloNum& a, const mpq_class& v) { return a.scaled(v.get_num(), v.get_den()); }
    friend CycloNum operator*(const mpq_class& v, const CycloNum& a) { return a * v; }

    friend bool operator==(const CycloNum& a, const CycloNum& b) {
        if (a.f_ != b.f_) {
            if (a.is_rational() && b.is_rational()) return a.rational_value() == b.rational_value();
            if (a.is_rational() != b.is_rational()) return false;
            auto [x, y] = unify(a, b);
            return x == y;
        }
        return a.d_ == b.d_ && a.c_ == b.c_;
    }
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

    Complex embed() const {
        const auto& roots = roots_of_unity(f_->n);
        Complex s;
        for (int i = 0; i < f_->phi; ++i) {
            if (sgn(c_[i]) == 0) continue;
            Real c(c_[i].get_str());
            s.re += c * roots[i].re;
            s.im += c * roots[i].im;
        }
        Real den(d_.get_str());
        s.re /= den;
        s.im /= den;
        return s;
    }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(f_->n) * 0x9e3779b97f4a7c15ULL;
        auto mix = [&h](const mpz_class& z) {
            std::size_t v = mpz_size(z.get_mpz_t()) ? mpz_getlimbn(z.get_mpz_t(), 0) : 0;
            if (sgn(z) < 0) v = ~v;
            h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        };
        for (const auto& c : c_) mix(c);
        mix(d_);
        return h;
    }

    // "n; c0, c1, ..." with rationals written p/q
    std::string str() const {
        std::string s = std::to_string(f_->n) + ";";
        auto cs = coeffs();
        for (std::size_t i = 0; i < cs.size(); ++i) {
            s += i ? ", " : " ";
            s += cs[i].get_str();
        }
        return s;
    }

    static CycloNum parse(std::string_view text) {
        auto semi = text.find(';');
        if (semi == std::string_view::npos) throw ParseError("missing ';' in cyclotomic literal");
        int n = 0;
        try {
            n = std::stoi(std::string(text.substr(0, semi)));
        } catch (const std::exception&) {
            throw ParseError("bad conductor in cyclotomic literal");
        }
        std::vector<mpq_class> raw;
        std::string_view rest = text.substr(semi + 1);
        while (!rest.empty()) {
            auto comma = rest.find(',');
            std::string tok(rest.substr(0, comma));
            tok.erase(0, tok.find_first_not_of(" \t"));
            tok.erase(tok.find_last_not_of(" \t") + 1);
            if (!tok.empty()) {
                mpq_class q;
                if (q.set_str(tok, 10) != 0 || sgn(q.get_den()) == 0)
                    throw ParseError("bad rational '" + tok + "'");
                q.canonicalize();
                raw.push_back(q);
            }
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        return canon(n, raw);
    }

private:
    const detail::CycloField* f_;
    std::vector<mpz_class> c_;
    mpz_class d_;

    void normalize() {
        if (sgn(d_) < 0) {
            d_ = -d_;
            for (auto& c : c_) c = -c;
        }
        if (d_ == 1) return;
        mpz_class g = d_;
        bool any = false;
        for (const auto& c : c_) {
            if (sgn(c) == 0) continue;
            any = true;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g == 1) return;
        }
        if (!any) {
            d_ = 1;
            return;
        }
        for (auto& c : c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(d_.get_mpz_t(), d_.get_mpz_t(), g.get_mpz_t());
    }

    CycloNum scaled(const mpz_class& p, const mpz_class& q) const {
        CycloNum r(f_->n);
        if (sgn(p) == 0) return r;
        for (int t = 0; t < f_->phi; ++t) r.c_[t] = c_[t] * p;
        r.d_ = d_ * q;
        r.normalize();
        return r;
    }

    static std::pair<CycloNum, CycloNum> unify(const CycloNum& a, const CycloNum& b) {
        const int n = a.f_->n, m = b.f_->n;
        if (a.is_rational()) return {CycloNum(m, a.rational_value()), b};
        if (b.is_rational()) return {a, CycloNum(n, b.rational_value())};
        if (m % n == 0) return {a.lift(m), b};
        if (n % m == 0) return {a, b.lift(n)};
        const int l = std::lcm(n, m);
        return {a.lift(l), b.lift(l)};
    }

    CycloNum& add(const CycloNum& o, int sign) {
        if (f_ != o.f_) {
            auto [x, y] = unify(*this, o);
            *this = x;
            return add(y, sign);
        }
        if (d_ == o.d_) {
            for (int t = 0; t < f_->phi; ++t) {
                if (sign > 0)
                    c_[t] += o.c_[t];
                else
                    c_[t] -= o.c_[t];
            }
        } else {
            for (int t = 0; t < f_->phi; ++t) {
                c_[t] *= o.d_;
                if (sign > 0)
                    mpz_addmul(c_[t].get_mpz_t(), o.c_[t].get_mpz_t(), d_.get_mpz_t());
                else
                    mpz_submul(c_[t].get_mpz_t(), o.c_[t].get_mpz_t(), d_.get_mpz_t());
            }
            d_ *= o.d_;
        }
        normalize();
        return *this;
    }
};

struct CycloHash {
    std::size_t operator()(const CycloNum& a) const { return a.hash(); }
};

// Parses sums like "z^12-z", "1-z^3", "-2z^5+3", "2" into Q(zeta_n).
inline CycloNum parse_zeta_expr(int n, std::string_view s) {
    std::vector<std::pair<long, long>> terms;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto read_int = [&](long& out) {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) return false;
        out = std::stol(std::string(s.substr(start, i - start)));
        return true;
    };
    skip();
    if (i == s.size()) return CycloNum(n);
    while (true) {
        skip();
        long sign = 1;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -1;
            ++i;
            skip();
        }
        long coef = 1;
        bool have_coef = read_int(coef);
        skip();
        long e = 0;
        if (i < s.size() && s[i] == '*') ++i, skip();
        if (i < s.size() && s[i] == 'z') {
            ++i;
            e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                bool neg = false;
                if (i < s.size() && s[i] == '-') neg = true, ++i;
                if (!read_int(e)) throw ParseError("bad exponent in '" + std::string(s) + "'");
                if (neg) e = -e;
            }
        } else if (!have_coef) {
            throw ParseError("bad term in '" + std::string(s) + "'");
        }
        terms.emplace_back(sign * coef, e);
        skip();
        if (i == s.size()) break;
        if (s[i] != '+' && s[i] != '-') throw ParseError("unexpected character in '" + std::string(s) + "'");
    }
    return CycloNum::from_terms(n, terms);
}

inline CycloNum operator""_z13(const char* s, std::size_t len) { return parse_zeta_expr(13, std::string_view(s, len)); }

}  // namespace hurwitz

template <>
struct std::hash<hurwitz::CycloNum> {
    std::size_t operator()(const hurwitz::CycloNum& a) const { return a.hash(); }
};
