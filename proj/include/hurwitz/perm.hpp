#pragma once
// Degree-14 permutations, Sinkov's model of PSL(2,13), and subgroup statistics
// for pairs (s, p) with s^2 = p^3 = 1.
//
// Composition is left to right: (a * b)(x) = b(a(x)).

#include "error.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace hurwitz {

class Perm {
public:
    static constexpr int N = 14;

    Perm() { std::iota(img_.begin(), img_.end(), 0); }

    // images given 1-based
    static Perm from_images(const std::vector<int>& images) {
        if (static_cast<int>(images.size()) != N) throw ParseError("need 14 images");
        Perm p;
        std::array<bool, N> seen{};
        for (int i = 0; i < N; ++i) {
            int v = images[i] - 1;
            if (v < 0 || v >= N || seen[v]) throw ParseError("images do not form a bijection of 1..14");
            seen[v] = true;
            p.img_[i] = v;
        }
        return p;
    }

    // "(1, 12)(2, 11)" style; an empty string or "()" is the identity
    static Perm parse(const std::string& text) {
        Perm p;
        std::array<bool, N> used{};
        std::size_t i = 0;
        auto skip = [&] {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        };
        skip();
        while (i < text.size()) {
            if (text[i] != '(') throw ParseError("expected '(' in cycle text '" + text + "'");
            ++i;
            std::vector<int> cyc;
            while (true) {
                skip();
                if (i < text.size() && text[i] == ')') {
                    ++i;
                    break;
                }
                std::size_t start = i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                if (start == i) throw ParseError("expected a point in '" + text + "'");
                int v = std::stoi(text.substr(start, i - start));
                if (v < 1 || v > N) throw ParseError("point " + std::to_string(v) + " out of range 1..14");
                if (used[v - 1]) throw ParseError("point " + std::to_string(v) + " repeated");
                used[v - 1] = true;
                cyc.push_back(v - 1);
                skip();
                if (i < text.size() && text[i] == ',') ++i;
            }
            for (std::size_t k = 0; k < cyc.size(); ++k) p.img_[cyc[k]] = cyc[(k + 1) % cyc.size()];
            skip();
        }
        return p;
    }

    // 0-based
    int operator()(int x) const { return img_[x]; }
    int image1(int x) const { return img_[x - 1] + 1; }

    friend Perm operator*(const Perm& a, const Perm& b) {
        Perm r;
        for (int x = 0; x < N; ++x) r.img_[x] = b.img_[a.img_[x]];
        return r;
    }
    Perm inverse() const {
        Perm r;
        for (int x = 0; x < N; ++x) r.img_[img_[x]] = x;
        return r;
    }
    Perm pow(long k) const {
        if (k < 0) return inverse().pow(-k);
        Perm r, b = *this;
        while (k) {
            if (k & 1) r = r * b;
            b = b * b;
            k >>= 1;
        }
        return r;
    }
    bool is_identity() const { return *this == Perm(); }

    std::vector<std::vector<int>> cycles(bool with_fixed = false) const {
        std::vector<std::vector<int>> out;
        std::array<bool, N> seen{};
        for (int x = 0; x < N; ++x) {
            if (seen[x]) continue;
            std::vector<int> c;
            for (int y = x; !seen[y]; y = img_[y]) {
                seen[y] = true;
                c.push_back(y + 1);
            }
            if (c.size() > 1 || with_fixed) out.push_back(std::move(c));
        }
        return out;
    }

    // cycle lengths including fixed points, sorted descending
    std::vector<int> cycle_type() const {
        std::vector<int> t;
        for (const auto& c : cycles(true)) t.push_back(static_cast<int>(c.size()));
        std::sort(t.rbegin(), t.rend());
        return t;
    }

    int order() const {
        int o = 1;
        for (const auto& c : cycles()) o = std::lcm(o, static_cast<int>(c.size()));
        return o;
    }

    int fixed_points() const {
        int f = 0;
        for (int x = 0; x < N; ++x) f += img_[x] == x;
        return f;
    }

    std::string str() const {
        auto cs = cycles();
        if (cs.empty()) return "()";
        std::string s;
        for (const auto& c : cs) {
            s += "(";
            for (std::size_t k = 0; k < c.size(); ++k) s += (k ? ", " : "") + std::to_string(c[k]);
            s += ")";
        }
        return s;
    }

    // same permutation as text, insensitive to the starting point of each cycle
    bool matches(const std::string& text) const { return *this == parse(text); }

    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm&, const Perm&) = default;

private:
    std::array<int, N> img_;
};

// [a, b] = a^-1 b^-1 a b
inline Perm commutator(const Perm& a, const Perm& b) { return a.inverse() * b.inverse() * a * b; }

// ---------------------------------------------------------------------------
// group order

inline bool is_transitive(const std::vector<Perm>& gens) {
    std::vector<bool> seen(Perm::N, false);
    std::vector<int> st{0};
    seen[0] = true;
    int count = 1;
    while (!st.empty()) {
        int x = st.back();
        st.pop_back();
        for (const auto& g : gens) {
            int y = g(x);
            if (!seen[y]) {
                seen[y] = true;
                ++count;
                st.push_back(y);
            }
        }
    }
    return count == Perm::N;
}

// all elements by breadth-first search; the bound guards runaway input
inline std::vector<Perm> enumerate_group(const std::vector<Perm>& gens, std::size_t bound = 2000000) {
    std::set<Perm> seen{Perm()};
    std::vector<Perm> all{Perm()};
    for (std::size_t h = 0; h < all.size(); ++h)
        for (const auto& g : gens) {
            Perm y = all[h] * g;
            if (seen.insert(y).second) {
                all.push_back(y);
                if (all.size() > bound) throw DomainError("group enumeration bound exceeded");
            }
        }
    return all;
}

// Schreier-Sims. Level i uses the strong generators fixing base[0..i-1]; a level is
// complete when all its Schreier generators sift to the identity through the levels below.
class StabChain {
public:
    explicit StabChain(const std::vector<Perm>& gens) {
        for (const auto& g : gens)
            if (!g.is_identity()) strong_.push_back(g);
        if (strong_.empty()) return;
        extend_base(strong_[0]);
        for (const auto& g : strong_) {
            bool fixes_all = true;
            for (int b : base_) fixes_all = fixes_all && g(b) == b;
            if (fixes_all) extend_base(g);
        }
        int i = static_cast<int>(base_.size()) - 1;
        while (i >= 0) {
            rebuild(i);
            auto [res, stop] = find_bad_schreier(i);
            if (res.is_identity()) {
                --i;
                continue;
            }
            strong_.push_back(res);
            if (stop == base_.size()) extend_base(res);
            for (std::size_t j = i + 1; j <= stop && j < base_.size(); ++j) rebuild(j);
            i = static_cast<int>(std::min(stop, base_.size() - 1));
        }
    }

    mpz_class order() const {
        mpz_class o = 1;
        for (const auto& t : trans_) o *= static_cast<unsigned long>(t.size());
        return o;
    }

    bool contains(const Perm& g) const { return sift(g, 0).first.is_identity(); }

private:
    std::vector<Perm> strong_;
    std::vector<int> base_;
    std::vector<std::map<int, Perm>> trans_;  // trans_[i][b]: base_[i] -> b

    void extend_base(const Perm& g) {
        int b = 0;
        while (g(b) == b) ++b;
        base_.push_back(b);
        trans_.emplace_back();
        rebuild(base_.size() - 1);
    }

    std::vector<Perm> level_gens(std::size_t i) const {
        std::vector<Perm> r;
        for (const auto& g : strong_) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) ok = g(base_[j]) == base_[j];
            if (ok) r.push_back(g);
        }
        return r;
    }

    void rebuild(std::size_t i) {
        auto gens = level_gens(i);
        auto& t = trans_[i];
        t.clear();
        t.emplace(base_[i], Perm());
        std::vector<int> orbit{base_[i]};
        for (std::size_t h = 0; h < orbit.size(); ++h)
            for (const auto& g : gens) {
                int y = g(orbit[h]);
                if (!t.count(y)) {
                    t.emplace(y, t.at(orbit[h]) * g);
                    orbit.push_back(y);
                }
            }
    }

    std::pair<Perm, std::size_t> sift(Perm h, std::size_t k) const {
        for (std::size_t i = k; i < base_.size(); ++i) {
            auto it = trans_[i].find(h(base_[i]));
            if (it == trans_[i].end()) return {h, i};
            h = h * it->second.inverse();
        }
        return {h, base_.size()};
    }

    std::pair<Perm, std::size_t> find_bad_schreier(std::size_t i) const {
        for (const auto& [x, ux] : trans_[i])
            for (const auto& g : level_gens(i)) {
                Perm sg = ux * g * trans_[i].at(g(x)).inverse();
                auto [res, stop] = sift(sg, i + 1);
                if (!res.is_identity()) return {res, stop};
            }
        return {Perm(), 0};
    }
};

inline mpz_class group_order(const std::vector<Perm>& gens) { return StabChain(gens).order(); }

// ---------------------------------------------------------------------------
// primitivity

// Minimal block containing points a and b (0-based), by union-find closure.
inline std::vector<int> minimal_block(const std::vector<Perm>& gens, int a, int b) {
    std::vector<int> parent(Perm::N);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    std::vector<std::pair<int, int>> work{{a, b}};
    while (!work.empty()) {
        auto [x, y] = work.back();
        work.pop_back();
        int rx = find(x), ry = find(y);
        if (rx == ry) continue;
        parent[ry] = rx;
        for (const auto& g : gens) work.emplace_back(g(x), g(y));
    }
    std::vector<int> blk;
    for (int x = 0; x < Perm::N; ++x)
        if (find(x) == find(a)) blk.push_back(x + 1);
    return blk;
}

inline bool primitivity(const std::vector<Perm>& gens, std::string* witness = nullptr) {
    if (!is_transitive(gens)) throw DomainError("primitivity needs a transitive group");
    for (int k = 1; k < Perm::N; ++k) {
        auto blk = minimal_block(gens, 0, k);
        if (static_cast<int>(blk.size()) < Perm::N) {
            if (witness) {
                *witness = "block {";
                for (std::size_t i = 0; i < blk.size(); ++i) *witness += (i ? "," : "") + std::to_string(blk[i]);
                *witness += "}";
            }
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// subgroup statistics

struct SubgroupStats {
    int mu = 0;
    int e2 = 0;
    int e3 = 0;
    std::vector<int> cusp_widths;  // descending
    int h = 0;
    long level = 1;
    mpq_class genus_q;  // 1 + mu/12 - h/2 - e2/4 - e3/3
    long genus = 0;
};

inline mpq_class genus_formula(int mu, int h, int e2, int e3) {
    mpq_class g = mpq_class(1) + mpq_class(mu, 12) - mpq_class(h, 2) - mpq_class(e2, 4) - mpq_class(e3, 3);
    g.canonicalize();
    return g;
}

inline SubgroupStats asd_stats(const Perm& s, const Perm& p) {
    if (!(s * s).is_identity()) throw DomainError("s is not an involution");
    if (!p.pow(3).is_identity()) throw DomainError("p does not have order dividing 3");
    if (!is_transitive({s, p})) throw DomainError("<s, p> is not transitive");
    SubgroupStats st;
    st.mu = Perm::N;
    st.e2 = s.fixed_points();
    st.e3 = p.fixed_points();
    const Perm t = s * p;
    st.cusp_widths = t.cycle_type();
    st.h = static_cast<int>(st.cusp_widths.size());
    for (int w : st.cusp_widths) st.level = std::lcm(st.level, static_cast<long>(w));
    st.genus_q = genus_formula(st.mu, st.h, st.e2, st.e3);
    if (st.genus_q.get_den() != 1 || st.genus_q < 0) throw DomainError("genus formula gives " + st.genus_q.get_str());
    st.genus = st.genus_q.get_num().get_si();
    return st;
}

// 2g - 2 = N (1 - 1/a - 1/b - 1/c)
inline long rh_genus(long group_order, int a, int b, int c) {
    mpq_class chi = mpq_class(group_order) * (mpq_class(1) - mpq_class(1, a) - mpq_class(1, b) - mpq_class(1, c));
    mpq_class g = (chi + 2) / 2;
    g.canonicalize();
    if (g.get_den() != 1) throw DomainError("Riemann-Hurwitz gives non-integral genus " + g.get_str());
    return g.get_num().get_si();
}

struct WohlfahrtResult {
    long chi;
    long genus;
};

// 6 chi = m - 6h - 3 e2 - 4 e3, chi = 2g - 2
inline WohlfahrtResult wohlfahrt(long m, long h, long e2, long e3) {
    long six_chi = m - 6 * h - 3 * e2 - 4 * e3;
    if (six_chi % 6 != 0) throw DomainError("Wohlfahrt characteristic is not integral");
    long chi = six_chi / 6;
    if (chi % 2 != 0) throw DomainError("odd characteristic");
    return {chi, chi / 2 + 1};
}

// index of Gamma(l) in PSL(2,Z)
inline mpz_class principal_index(long l) {
    if (l <= 0) throw DomainError("level must be positive");
    if (l == 1) return 1;
    mpz_class n = mpz_class(l) * l * l;
    long m = l;
    for (long p = 2; p * p <= m || m > 1; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        n = n / (p * p) * (p * p - 1);
    }
    return l == 2 ? n : n / 2;
}

// false certifies non-congruence: a congruence subgroup of level l contains Gamma(l),
// so its index must divide |PSL(2,Z) : Gamma(l)|
inline bool congruence_test(long level, const mpz_class& index) {
    if (level == 1) return true;
    return principal_index(level) % index == 0;
}

}  // namespace hurwitz
