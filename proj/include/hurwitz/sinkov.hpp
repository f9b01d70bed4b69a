#pragma once
// Sinkov's degree-14 data for PSL(2,13): the involution s, one element of order
// three from each class under the centralizer of s, and the printed products.

#include "perm.hpp"

#include <string>
#include <vector>

namespace hurwitz::sinkov {

inline const Perm& s() {
    static const Perm p = Perm::parse("(1, 12)(2, 11)(3, 10)(4, 9)(5, 8)(6, 7)");
    return p;
}

struct Entry {
    int index;         // p_index
    std::string text;  // cycles, or "p_k^2"
    int ord_ps;        // printed ord(p s)
};

inline const std::vector<Entry>& entries() {
    static const std::vector<Entry> t = {
        {1, "(1, 13, 10)(2, 3, 6)(4, 9, 11)(5, 12, 7)", 6},
        {2, "p1^2", 6},
        {3, "(2, 10, 4)(11, 13, 5)(3, 6, 7)(8, 12, 9)", 6},
        {4, "p3^2", 6},
        {5, "(3, 10, 12)(4, 6, 13)(5, 11, 8)(14, 9, 7)", 3},
        {6, "p5^2", 3},
        {7, "(2, 11, 14)(3, 4, 8)(5, 9, 10)(6, 13, 7)", 2},
        {8, "(1, 13, 12)(9, 4, 14)(3, 8, 6)(5, 10, 7)", 2},
        {9, "(2, 8, 9)(4, 14, 13)(5, 10, 6)(7, 12, 11)", 7},
        {10, "(2, 7, 8)(3, 10, 11)(5, 13, 9)(6, 12, 14)", 13},
        {11, "(2, 3, 4)(6, 9, 11)(7, 12, 14)(8, 10, 13)", 7},
        {12, "p11^2", 7},
        {13, "(2, 14, 5)(3, 9, 13)(4, 7, 11)(8, 10, 12)", 7},
        {14, "p13^2", 7},
        {15, "(1, 10, 6)(3, 8, 9)(4, 11, 12)(7, 13, 14)", 7},
        {16, "(1, 10, 4)(3, 6, 14)(5, 12, 8)(9, 13, 11)", 13},
    };
    return t;
}

inline Perm p(int k) {
    for (const auto& e : entries()) {
        if (e.index != k) continue;
        if (e.text.rfind("p", 0) == 0) return p(std::stoi(e.text.substr(1, e.text.find('^') - 1))).pow(2);
        return Perm::parse(e.text);
    }
    throw DomainError("no Sinkov element p" + std::to_string(k));
}

// printed p s and [p, s] for the four generating cases, with the presentation each gives
struct Product {
    int index;
    std::string ps;
    std::string commutator;
    int comm_order;
};

inline const std::vector<Product>& products() {
    static const std::vector<Product> t = {
        {11, "(1, 12, 14, 6, 4, 11, 7)(2, 10, 13, 5, 8, 3, 9)", "(1, 14, 12, 4, 13, 9)(3, 7, 6, 10, 8, 5)", 6},
        {13, "(1, 12, 5, 11, 9, 13, 10)(2, 14, 8, 3, 4, 6, 7)", "(1, 5, 8, 12, 4, 14, 9)(2, 3, 10, 11, 7, 13, 6)", 7},
        {9, "(1, 12, 2, 5, 3, 10, 7)(4, 14, 13, 9, 11, 6, 8)", "(1, 2, 14, 11, 12, 8, 6, 10, 4, 9, 3, 7, 5)", 13},
        {10, "(1, 12, 14, 7, 5, 13, 4, 9, 8, 11, 10, 2, 6)", "(1, 14, 12, 5, 9, 4, 8)(2, 13, 11, 3, 6, 7, 10)", 7},
    };
    return t;
}

// conjugators commuting with s: p9 -> p15 and p10 -> p16
inline Perm conj_9_15() { return Perm::parse("(1, 2)(3, 5)(4, 7)(6, 9)(8, 10)(11, 12)(13, 14)"); }
inline Perm conj_10_16() { return Perm::parse("(1, 7, 10, 5, 9, 11, 12, 6, 3, 8, 4, 2)"); }

// the identification p9 = Q P^2, s = Q^5 P^2 and the printed consequences
inline Perm Q() { return (p(9) * s()).pow(5); }
inline Perm P() { return ((p(9) * s()).pow(-5) * p(9)).pow(7); }

struct PrintedPerm {
    std::string name;
    std::string text;
};

inline const std::vector<PrintedPerm>& printed() {
    static const std::vector<PrintedPerm> t = {
        {"Q", "(1, 10, 5, 12, 7, 3, 2)(4, 6, 9, 14, 8, 11, 13)"},
        {"P", "(1, 6, 8, 14, 13, 2, 7, 3, 11, 12, 9, 10, 5)"},
        {"y1", "(2, 8)(3, 4)(5, 12)(7, 9)(10, 14)(11, 13)"},
        {"x1", "(1, 8, 10)(2, 4, 11)(3, 9, 6)(5, 14, 7)"},
        {"comm_x1_y1", "(1, 9, 13, 8, 2, 11, 7)(3, 4, 14, 5, 6, 12, 10)"},
        {"P2Q6P8", "(1, 10)(2, 6)(4, 5)(7, 9)(8, 14)(11, 12)"},
        {"y2", "(1, 2)(3, 12)(4, 6)(5, 14)(7, 11)(8, 9)"},
        {"x2", "(1, 12, 10)(2, 11, 5)(4, 7, 14)(6, 13, 9)"},
        {"comm_x2_y2", "(1, 2, 6, 9, 8, 4)(3, 10, 12, 7, 13, 11)"},
    };
    return t;
}

// the same elements derived from Q and P by the defining words
inline Perm derived(const std::string& name) {
    const Perm q = Q(), pp = P();
    const Perm y1 = pp * q.pow(2) * pp.pow(10);
    const Perm x1 = q.pow(6) * y1;
    const Perm m = pp.pow(2) * q.pow(6) * pp.pow(8);
    const Perm y2 = q.pow(5) * pp.pow(2) * m * q.pow(5) * pp.pow(2);
    const Perm x2 = q.pow(5) * y2;
    if (name == "Q") return q;
    if (name == "P") return pp;
    if (name == "y1") return y1;
    if (name == "x1") return x1;
    if (name == "comm_x1_y1") return commutator(x1, y1);
    if (name == "P2Q6P8") return m;
    if (name == "y2") return y2;
    if (name == "x2") return x2;
    if (name == "comm_x2_y2") return commutator(x2, y2);
    throw DomainError("no derived permutation named '" + name + "'");
}

}  // namespace hurwitz::sinkov
