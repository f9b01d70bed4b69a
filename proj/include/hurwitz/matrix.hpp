#pragma once
// Dense square matrices over a cyclotomic field.

#include "cyclo.hpp"
#include "error.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace hurwitz {

class Mat {
public:
    Mat() = default;
    Mat(int dim, int conductor = 13) : n_(dim), m_(conductor), e_(static_cast<std::size_t>(dim) * dim, CycloNum(conductor)) {}

    static Mat identity(int dim, int conductor = 13) {
        Mat r(dim, conductor);
        for (int i = 0; i < dim; ++i) r(i, i) = CycloNum(conductor, 1);
        return r;
    }
    static Mat diag(const std::vector<CycloNum>& d) {
        Mat r(static_cast<int>(d.size()), d.empty() ? 13 : d[0].conductor());
        for (int i = 0; i < r.n_; ++i) r(i, i) = d[i];
        return r;
    }
    static Mat from_rows(const std::vector<std::vector<CycloNum>>& rows) {
        const int n = static_cast<int>(rows.size());
        Mat r(n, n ? rows[0][0].conductor() : 13);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(rows[i].size()) != n) throw DomainError("ragged matrix rows");
            for (int j = 0; j < n; ++j) r(i, j) = rows[i][j];
        }
        return r;
    }

    int dim() const { return n_; }
    int conductor() const { return m_; }
    CycloNum& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const CycloNum& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::vector<CycloNum>& entries() const { return e_; }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.n_ != b.n_) throw DomainError("dimension mismatch in matrix product");
        if (a.m_ != b.m_) throw DomainError("conductor mismatch in matrix product");
        const int n = a.n_;
        const auto& f = detail::cyclo_field(a.m_);
        const int phi = f.phi;
        // integralize both operands over a common denominator, convolve, reduce once per entry
        auto integral = [phi](const Mat& x, mpz_class& den, std::vector<mpz_class>& num, std::vector<char>& nz) {
            den = 1;
            for (const auto& v : x.e_) den = lcm(den, v.denominator());
            num.assign(x.e_.size() * phi, 0);
            nz.assign(x.e_.size(), 0);
            for (std::size_t k = 0; k < x.e_.size(); ++k) {
                if (x.e_[k].is_zero()) continue;
                nz[k] = 1;
                mpz_class s = den / x.e_[k].denominator();
                const auto& c = x.e_[k].numerators();
                for (int t = 0; t < phi; ++t) num[k * phi + t] = c[t] * s;
            }
        };
        mpz_class da, db;
        std::vector<mpz_class> na, nb;
        std::vector<char> za, zb;
        integral(a, da, na, za);
        integral(b, db, nb, zb);
        Mat r(n, a.m_);
        std::vector<mpz_class> acc(2 * phi - 1);
        const mpz_class den = da * db;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                bool any = false;
                for (auto& v : acc) v = 0;
                for (int k = 0; k < n; ++k) {
                    const std::size_t ik = static_cast<std::size_t>(i) * n + k, kj = static_cast<std::size_t>(k) * n + j;
                    if (!za[ik] || !zb[kj]) continue;
                    any = true;
                    detail::conv_acc(acc.data(), &na[ik * phi], &nb[kj * phi], phi);
                }
                if (!any) continue;
                detail::reduce_acc(acc.data(), f);
                r(i, j) = CycloNum::from_numerators(a.m_, std::vector<mpz_class>(acc.begin(), acc.begin() + phi), den);
            }
        }
        return r;
    }

    friend Mat operator+(Mat a, const Mat& b) {
        if (a.n_ != b.n_) throw DomainError("dimension mismatch");
        for (std::size_t k = 0; k < a.e_.size(); ++k) a.e_[k] += b.e_[k];
        return a;
    }
    friend Mat operator-(Mat a, const Mat& b) {
        if (a.n_ != b.n_) throw DomainError("dimension mismatch");
        for (std::size_t k = 0; k < a.e_.size(); ++k) a.e_[k] -= b.e_[k];
        return a;
    }
    friend Mat operator*(const CycloNum& s, Mat a) {
        for (auto& v : a.e_) v = s * v;
        return a;
    }
    friend Mat operator*(Mat a, const mpq_class& s) {
        for (auto& v : a.e_) v = v * s;
        return a;
    }
    Mat operator-() const {
        Mat r = *this;
        for (auto& v : r.e_) v = -v;
        return r;
    }

    friend bool operator==(const Mat& a, const Mat& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    Mat transpose() const {
        Mat r(n_, m_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    // entrywise Galois image
    Mat galois(long k) const {
        Mat r = *this;
        for (auto& v : r.e_) v = v.galois(k);
        return r;
    }

    CycloNum trace() const {
        CycloNum s(m_);
        for (int i = 0; i < n_; ++i) s += (*this)(i, i);
        return s;
    }

    bool is_identity() const { return *this == identity(n_, m_); }

    // true iff the matrix is lambda * I; lambda is returned through the pointer
    bool is_scalar(CycloNum* lambda = nullptr) const {
        const CycloNum& d = (*this)(0, 0);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                const CycloNum& v = (*this)(i, j);
                if (i == j ? v != d : !v.is_zero()) return false;
            }
        if (lambda) *lambda = d;
        return !d.is_zero();
    }

    Mat pow(long k) const {
        if (k < 0) return inverse().pow(-k);
        Mat r = identity(n_, m_), b = *this;
        while (k) {
            if (k & 1) r = r * b;
            k >>= 1;
            if (k) b = b * b;
        }
        return r;
    }

    // Gauss-Jordan; throws on a singular matrix
    Mat inverse() const {
        const int n = n_;
        Mat a = *this, r = identity(n, m_);
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int i = col; i < n; ++i)
                if (!a(i, col).is_zero()) {
                    piv = i;
                    break;
                }
            if (piv < 0) throw DomainError("singular matrix");
            if (piv != col)
                for (int j = 0; j < n; ++j) {
                    std::swap(a(piv, j), a(col, j));
                    std::swap(r(piv, j), r(col, j));
                }
            CycloNum inv = a(col, col).inverse();
            for (int j = 0; j < n; ++j) {
                a(col, j) = a(col, j) * inv;
                r(col, j) = r(col, j) * inv;
            }
            for (int i = 0; i < n; ++i) {
                if (i == col || a(i, col).is_zero()) continue;
                CycloNum f = a(i, col);
                for (int j = 0; j < n; ++j) {
                    if (!a(col, j).is_zero()) a(i, j) -= f * a(col, j);
                    if (!r(col, j).is_zero()) r(i, j) -= f * r(col, j);
                }
            }
        }
        return r;
    }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(n_);
        for (const auto& v : e_) h ^= v.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

    // "dim n" then one entry per line, row-major
    std::string str() const {
        std::ostringstream os;
        os << "dim " << n_ << "\n";
        for (const auto& v : e_) os << v.str() << "\n";
        return os.str();
    }

    // positions where two matrices differ, "(i,j): a vs b" per line (1-based)
    static std::string diff(const Mat& a, const Mat& b, int limit = 8) {
        std::ostringstream os;
        int shown = 0, total = 0;
        for (int i = 0; i < a.n_; ++i)
            for (int j = 0; j < a.n_; ++j)
                if (a(i, j) != b(i, j)) {
                    ++total;
                    if (shown < limit) {
                        os << "(" << i + 1 << "," << j + 1 << "): " << a(i, j).str() << " vs " << b(i, j).str() << "\n";
                        ++shown;
                    }
                }
        if (total > shown) os << "... " << total - shown << " more\n";
        return os.str();
    }

private:
    int n_ = 0;
    int m_ = 13;
    std::vector<CycloNum> e_;
};

struct MatHash {
    std::size_t operator()(const Mat& m) const { return m.hash(); }
};

}  // namespace hurwitz
