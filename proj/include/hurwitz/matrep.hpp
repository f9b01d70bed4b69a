#pragma once
// Projective matrix groups over Q(zeta_13): the printed generators, relation and
// presentation checks, closure enumeration and conjugacy labels.

#include "constants.hpp"
#include "matrix.hpp"
#include "tables.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace hurwitz {

// ---------------------------------------------------------------------------
// printed tables

using SymbolResolver = std::function<CycloNum(const std::string&)>;

inline CycloNum resolve_constant_symbol(const std::string& sym) { return cval(sym); }

// Entry text: a zeta expression, or "[coef ]symbol" with an optional sign.
inline CycloNum parse_entry(const std::string& text, const SymbolResolver& sym) {
    const auto letter = std::find_if(text.begin(), text.end(), [](char c) { return c == 'r' || c == 'q' || c == 'c'; });
    if (letter == text.end()) return parse_zeta_expr(13, text);
    std::string head(text.begin(), letter), name(letter, text.end());
    head.erase(std::remove(head.begin(), head.end(), ' '), head.end());
    long coef = 1;
    if (head == "-")
        coef = -1;
    else if (!head.empty() && head != "+")
        coef = std::stol(head);
    return sym(name) * coef;
}

inline CycloNum scale_value(tables::Scale s) {
    switch (s) {
        case tables::Scale::one: return CycloNum(13, 1);
        case tables::Scale::minus_inv_sqrt13: return -inv_sqrt13();
        case tables::Scale::inv_sqrt13: return inv_sqrt13();
        case tables::Scale::minus_inv_13sqrt13: return inv_sqrt13() * mpq_class(-1, 13);
    }
    return CycloNum(13, 1);
}

inline const tables::PrintedMatrix& printed_table(const std::string& name) {
    for (const auto& m : tables::printed_matrices())
        if (m.name == name) return m;
    throw DomainError("no printed table named '" + name + "'");
}

inline bool has_printed_table(const std::string& name) {
    for (const auto& m : tables::printed_matrices())
        if (m.name == name) return true;
    return false;
}

// the printed matrix with its scalar prefactor applied
inline Mat printed_matrix(const std::string& name, const SymbolResolver& sym = resolve_constant_symbol) {
    const auto& t = printed_table(name);
    const int n = static_cast<int>(t.rows.size());
    Mat m(n);
    const CycloNum sc = scale_value(t.scale);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = sc * parse_entry(t.rows[i][j], sym);
    return m;
}

// ---------------------------------------------------------------------------
// projective matrices

// Scale so the first nonzero entry (row-major) is 1.
inline Mat proj_normalize(const Mat& a) {
    for (const auto& v : a.entries()) {
        if (v.is_zero()) continue;
        if (v.is_one()) return a;
        return v.inverse() * a;
    }
    throw DomainError("zero matrix has no projective class");
}

struct ProjMatrix {
    Mat lift;   // as built; traces use this
    Mat canon;  // normalized representative

    ProjMatrix() = default;
    explicit ProjMatrix(Mat m) : lift(std::move(m)), canon(proj_normalize(lift)) {}
    int dim() const { return lift.dim(); }
    friend ProjMatrix operator*(const ProjMatrix& a, const ProjMatrix& b) { return ProjMatrix(a.lift * b.lift); }
    ProjMatrix inverse() const { return ProjMatrix(lift.inverse()); }
};

inline bool proj_eq(const Mat& a, const Mat& b) {
    if (a.dim() != b.dim()) return false;
    return proj_normalize(a) == proj_normalize(b);
}
inline bool proj_eq(const ProjMatrix& a, const ProjMatrix& b) { return a.canon == b.canon; }

inline bool proj_identity(const Mat& a) { return a.is_scalar(); }

// least k <= bound with a^k scalar; nullopt past the bound
inline std::optional<int> proj_order(const Mat& a, int bound = 26) {
    Mat p = a;
    for (int k = 1; k <= bound; ++k) {
        if (p.is_scalar()) return k;
        p = p * a;
    }
    return std::nullopt;
}

// throws with a diagnostic naming the element when the bound is exceeded
inline int proj_order_checked(const Mat& a, const std::string& what, int bound = 26) {
    auto o = proj_order(a, bound);
    if (!o) throw DomainError(what + ": projective order exceeds " + std::to_string(bound) + ", not in the expected group");
    return *o;
}

// ---------------------------------------------------------------------------
// catalogue

inline Mat diag13(std::initializer_list<long> exps) {
    std::vector<CycloNum> d;
    for (long e : exps) d.push_back(CycloNum::zeta(13, e));
    return Mat::diag(d);
}

struct Catalogue {
    std::map<std::string, Mat> m;

    const Mat& operator[](const std::string& k) const {
        auto it = m.find(k);
        if (it == m.end()) throw DomainError("unknown matrix '" + k + "'");
        return it->second;
    }
};

// Generators as printed, plus the derived words used throughout.
inline const Catalogue& catalogue() {
    static const Catalogue c = [] {
        Catalogue c;
        auto& m = c.m;
        for (const auto& t : tables::printed_matrices())
            if (t.name.rfind("Shat_B", 0) != 0 && t.name != "S_hat_c") m[t.name] = printed_matrix(t.name);
        m["identity"] = Mat::identity(6);
        m["T1"] = diag13({11, 8, 7, 5, 6, 2});
        m["T2"] = diag13({8, 7, 11, 2, 5, 6});
        const Mat& S = m["S"];
        const Mat& T = m["T"];
        m["P"] = S * T.inverse() * S;
        m["Q.derived"] = S * T.pow(3);
        return c;
    }();
    return c;
}

inline const Mat& build(const std::string& name) { return catalogue()[name]; }

// Powers of P as the printed tables lift them: P^k := S T^-k S. Because S^2 = -I,
// the literal power (S T^-1 S)^k is (-1)^(k-1) times this.
inline Mat paper_P(long k) {
    const Mat& S = build("S");
    return S * build("T").pow(-k) * S;
}

inline std::vector<std::string> catalogue_names() {
    std::vector<std::string> r;
    for (const auto& [k, v] : catalogue().m) r.push_back(k);
    return r;
}

inline CycloNum trace(const std::string& name) { return build(name).trace(); }

// ---------------------------------------------------------------------------
// presentations

struct PresentationResult {
    bool holds = false;
    bool degenerate = false;  // u or v has order other than 3 / 2
    int order_u = 0, order_v = 0, order_uv = 0, order_comm = 0;
    std::string detail;
};

// (2,3,n;p): u^3 = v^2 = (uv)^n = (u^-1 v^-1 u v)^p = 1 projectively
inline PresentationResult check_presentation(const Mat& u, const Mat& v, int n, int p) {
    PresentationResult r;
    const Mat ui = u.inverse(), vi = v.inverse();
    const Mat uv = u * v, comm = ui * vi * u * v;
    r.order_u = proj_order(u).value_or(-1);
    r.order_v = proj_order(v).value_or(-1);
    r.order_uv = proj_order(uv).value_or(-1);
    r.order_comm = proj_order(comm).value_or(-1);
    r.holds = u.pow(3).is_scalar() && v.pow(2).is_scalar() && uv.pow(n).is_scalar() && comm.pow(p).is_scalar();
    r.degenerate = r.order_u != 3 || r.order_v != 2;
    r.detail = "ord(u)=" + std::to_string(r.order_u) + " ord(v)=" + std::to_string(r.order_v) +
               " ord(uv)=" + std::to_string(r.order_uv) + " ord([u,v])=" + std::to_string(r.order_comm);
    if (r.degenerate) r.detail += " (degenerate: orders are not 3 and 2)";
    return r;
}

// ---------------------------------------------------------------------------
// closure

struct GroupClosure {
    std::vector<std::string> gen_names;
    std::vector<Mat> elements;                      // canonical representatives, BFS order
    std::unordered_map<Mat, int, MatHash> index;
    std::vector<std::vector<int>> words;            // generator indices, shortest in BFS order
    std::vector<std::vector<int>> right;            // right[i][g] = index of elements[i] * gen g
    bool bound_exceeded = false;

    std::size_t size() const { return elements.size(); }
    bool contains(const Mat& m) const { return index.count(proj_normalize(m)) > 0; }
    int find(const Mat& m) const {
        auto it = index.find(proj_normalize(m));
        return it == index.end() ? -1 : it->second;
    }

    std::string word_string(int i) const {
        if (words[i].empty()) return "1";
        std::string s;
        for (int g : words[i]) {
            if (!s.empty()) s += "*";
            s += gen_names[g];
        }
        return s;
    }

    // projective order via the right-multiplication tables
    int order_of(int i) const {
        int cur = 0, k = 0;
        do {
            for (int g : words[i]) cur = right[cur][g];
            ++k;
        } while (cur != 0 && k <= 2 * static_cast<int>(elements.size()));
        return k;
    }

    std::map<int, int> order_profile() const {
        std::map<int, int> prof;
        for (std::size_t i = 0; i < elements.size(); ++i) ++prof[order_of(static_cast<int>(i))];
        return prof;
    }

    bool same_set(const GroupClosure& o) const {
        if (o.size() != size()) return false;
        for (const auto& e : elements)
            if (!o.index.count(e)) return false;
        return true;
    }
};

inline GroupClosure closure(const std::vector<Mat>& gens, std::size_t bound, std::vector<std::string> names = {}) {
    if (gens.empty()) throw DomainError("closure needs at least one generator");
    GroupClosure G;
    for (std::size_t g = 0; g < gens.size(); ++g)
        G.gen_names.push_back(g < names.size() ? names[g] : "g" + std::to_string(g + 1));
    std::vector<Mat> cg;
    for (const auto& g : gens) cg.push_back(proj_normalize(g));
    const Mat id = Mat::identity(gens[0].dim(), gens[0].conductor());
    G.elements.push_back(id);
    G.index.emplace(id, 0);
    G.words.emplace_back();
    for (std::size_t head = 0; head < G.elements.size(); ++head) {
        G.right.emplace_back(cg.size(), -1);
        for (std::size_t g = 0; g < cg.size(); ++g) {
            Mat y = proj_normalize(G.elements[head] * cg[g]);
            auto it = G.index.find(y);
            if (it != G.index.end()) {
                G.right[head][g] = it->second;
                continue;
            }
            if (G.elements.size() >= bound) {
                G.bound_exceeded = true;
                return G;
            }
            const int id_new = static_cast<int>(G.elements.size());
            G.right[head][g] = id_new;
            G.index.emplace(y, id_new);
            auto w = G.words[head];
            w.push_back(static_cast<int>(g));
            G.words.push_back(std::move(w));
            G.elements.push_back(std::move(y));
        }
    }
    return G;
}

// ---------------------------------------------------------------------------
// conjugacy classes of PSL(2,13)

inline bool proj_conjugate(const Mat& a, const Mat& b, const GroupClosure& G) {
    const Mat na = proj_normalize(a), nb = proj_normalize(b);
    for (const auto& g : G.elements)
        if (proj_eq(g * na, nb * g)) return true;
    return false;
}

// label in {1A,2A,3A,6A,7A,7B,7C,13A,13B}; representatives Q, Q^2, Q^4 and T, T^2
inline std::string conj_class(const Mat& a, const GroupClosure& G) {
    if (!G.contains(a)) throw DomainError("element is not in the group");
    const int o = proj_order_checked(a, "conj_class");
    switch (o) {
        case 1: return "1A";
        case 2: return "2A";
        case 3: return "3A";
        case 6: return "6A";
        default: break;
    }
    const Mat& Q = build("Q");
    const Mat& T = build("T");
    if (o == 7) {
        if (proj_conjugate(a, Q, G)) return "7A";
        if (proj_conjugate(a, Q.pow(2), G)) return "7B";
        if (proj_conjugate(a, Q.pow(4), G)) return "7C";
    }
    if (o == 13) {
        if (proj_conjugate(a, T, G)) return "13A";
        if (proj_conjugate(a, T.pow(2), G)) return "13B";
    }
    throw DomainError("element of order " + std::to_string(o) + " matches no class representative");
}

}  // namespace hurwitz
