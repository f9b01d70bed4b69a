#pragma once
// Seeded generators shared by the property tests.

#include "hurwitz/cyclo.hpp"
#include "hurwitz/matrep.hpp"
#include "hurwitz/poly.hpp"

#include <random>
#include <vector>

namespace testing_support {

// unit tests compare embeddings at the library default precision
inline const bool precision_ready = (hurwitz::set_working_precision(hurwitz::default_digits), true);

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20261016);
    return g;
}

inline long small(long lo, long hi) { return lo + static_cast<long>(rng()() % static_cast<unsigned long>(hi - lo + 1)); }

// sum of a few c zeta^e with c in [-5, 5], divided by 1..4
inline hurwitz::CycloNum random_cyclo(int n, int terms = 5) {
    std::vector<std::pair<long, long>> t;
    for (int i = 0; i < terms; ++i) t.emplace_back(small(-5, 5), small(0, n - 1));
    return hurwitz::CycloNum::from_terms(n, t) * mpq_class(1, small(1, 4));
}

inline hurwitz::CycloNum random_nonzero(int n) {
    for (;;) {
        auto x = random_cyclo(n);
        if (!x.is_zero()) return x;
    }
}

// a word of length len in S and T
inline hurwitz::Mat random_word(int len) {
    hurwitz::Mat m = hurwitz::Mat::identity(6);
    for (int i = 0; i < len; ++i) m = m * (rng()() % 2 ? hurwitz::build("S") : hurwitz::build("T"));
    return m;
}

// a form of the given degree in 6 variables with a handful of terms
inline hurwitz::MultiPoly random_form(int degree, int terms = 4) {
    hurwitz::MultiPoly p(6, 13);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(6, 0);
        for (int d = 0; d < degree; ++d) ++e[small(0, 5)];
        p += hurwitz::MultiPoly::monomial(e, random_nonzero(13));
    }
    return p;
}

}  // namespace testing_support
