#pragma once
// Words for SL(2,13) in s = (0 -1; 1 0), t = (1 1; 0 1) and their images under
// rho(s) = S, rho(t) = T.

#include "matrep.hpp"

#include <array>
#include <map>
#include <string>

namespace hurwitz {

struct SL2 {
    std::array<int, 4> m{1, 0, 0, 1};  // a b c d, entries in 0..12

    static SL2 make(long a, long b, long c, long d) {
        SL2 r{{int(detail::mod(a, 13)), int(detail::mod(b, 13)), int(detail::mod(c, 13)), int(detail::mod(d, 13))}};
        if (r.det() != 1) throw DomainError("matrix is not unimodular mod 13");
        return r;
    }
    int det() const { return static_cast<int>(detail::mod(long(m[0]) * m[3] - long(m[1]) * m[2], 13)); }
    friend SL2 operator*(const SL2& x, const SL2& y) {
        auto f = [](long v) { return static_cast<int>(detail::mod(v, 13)); };
        return SL2{{f(long(x.m[0]) * y.m[0] + long(x.m[1]) * y.m[2]), f(long(x.m[0]) * y.m[1] + long(x.m[1]) * y.m[3]),
                    f(long(x.m[2]) * y.m[0] + long(x.m[3]) * y.m[2]), f(long(x.m[2]) * y.m[1] + long(x.m[3]) * y.m[3])}};
    }
    SL2 neg() const { return SL2{{(13 - m[0]) % 13, (13 - m[1]) % 13, (13 - m[2]) % 13, (13 - m[3]) % 13}}; }
    // +-m identified
    std::array<int, 4> proj_key() const { return std::min(m, neg().m); }
    bool operator==(const SL2&) const = default;
};

// letters: 's', 't', 'T' (t^-1)
struct SL2Word {
    std::string letters;

    SL2 evaluate() const {
        SL2 r;
        for (char c : letters) r = r * letter(c);
        return r;
    }
    Mat image() const {
        Mat r = Mat::identity(6);
        for (char c : letters) r = r * rho(c);
        return r;
    }
    static SL2 letter(char c) {
        switch (c) {
            case 's': return SL2::make(0, -1, 1, 0);
            case 't': return SL2::make(1, 1, 0, 1);
            case 'T': return SL2::make(1, -1, 0, 1);
        }
        throw DomainError(std::string("bad letter ") + c);
    }
    static const Mat& rho(char c) {
        static const Mat t_inv = build("T").inverse();
        switch (c) {
            case 's': return build("S");
            case 't': return build("T");
            case 'T': return t_inv;
        }
        throw DomainError(std::string("bad letter ") + c);
    }
};

// Breadth-first search over PSL(2,13) gives a shortest word for every class +-m.
struct SL2Words {
    std::map<std::array<int, 4>, std::string> word;
    std::vector<SL2> order;  // BFS order; order[0] is the identity

    static const SL2Words& instance() {
        static const SL2Words w = [] {
            SL2Words w;
            auto& queue = w.order;
            queue.push_back(SL2{});
            w.word[SL2{}.proj_key()] = "";
            for (std::size_t h = 0; h < queue.size(); ++h) {
                for (char c : {'s', 't', 'T'}) {
                    SL2 y = queue[h] * SL2Word::letter(c);
                    auto key = y.proj_key();
                    if (w.word.count(key)) continue;
                    w.word[key] = w.word[queue[h].proj_key()] + c;
                    queue.push_back(y);
                }
            }
            return w;
        }();
        return w;
    }
};

inline SL2Word sl2_word(long a, long b, long c, long d) {
    SL2 m = SL2::make(a, b, c, d);
    const auto& w = SL2Words::instance().word;
    return SL2Word{w.at(m.proj_key())};
}

inline Mat rho(long a, long b, long c, long d) { return sl2_word(a, b, c, d).image(); }

// rho extends to a homomorphism PSL(2,13) -> PGL(6) iff word images respect every
// Cayley edge: image(word(x)) * rho(g) ~ image(word(x g)).
inline bool rho_is_homomorphism(std::string& witness) {
    const auto& W = SL2Words::instance();
    const auto& w = W.word;
    std::map<std::array<int, 4>, Mat> img;
    // images along the search tree: each word extends its parent's by one letter
    for (const auto& x : W.order) {
        const std::string& letters = w.at(x.proj_key());
        if (letters.empty()) {
            img.emplace(x.proj_key(), Mat::identity(6));
            continue;
        }
        SL2Word parent{letters.substr(0, letters.size() - 1)};
        img.emplace(x.proj_key(), img.at(parent.evaluate().proj_key()) * SL2Word::rho(letters.back()));
    }
    for (const auto& [k, letters] : w) {
        SL2 x{k};
        for (char c : {'s', 't'}) {
            SL2 y = x * SL2Word::letter(c);
            if (!proj_eq(img.at(k) * SL2Word::rho(c), img.at(y.proj_key()))) {
                witness = "edge " + (letters.empty() ? std::string("1") : letters) + " * " + c + " breaks";
                return false;
            }
        }
    }
    witness = std::to_string(w.size()) + " classes, all Cayley edges consistent";
    return true;
}

}  // namespace hurwitz
