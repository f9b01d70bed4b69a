#pragma once
// Coordinates of forms in a finite basis of forms, and the matrices a linear
// substitution induces on such a basis.

#include "matrix.hpp"
#include "poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace hurwitz {

// A linearly independent list of forms with a fixed set of pivot monomials. The
// coefficients at the pivots determine coordinates; every solve is checked by
// rebuilding the polynomial, so a form outside the span is rejected rather than
// projected.
class FormBasis {
public:
    FormBasis() = default;

    explicit FormBasis(std::vector<MultiPoly> forms, std::string name = "basis")
        : forms_(std::move(forms)), name_(std::move(name)) {
        const int m = static_cast<int>(forms_.size());
        if (m == 0) throw DomainError("empty form basis");
        const int cond = forms_[0].conductor();

        std::vector<Mono> monos;
        {
            std::map<Mono, int, std::greater<Mono>> seen;
            for (const auto& f : forms_)
                for (const auto& [mo, c] : f.terms()) seen.emplace(mo, 0);
            for (const auto& [mo, unused] : seen) monos.push_back(mo);
        }
        const int n = static_cast<int>(monos.size());

        // row echelon on the m x n coefficient table to choose pivot columns
        std::vector<std::vector<CycloNum>> a(m, std::vector<CycloNum>(n, CycloNum(cond)));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) a[i][j] = forms_[i].coeff(monos[j]);
        int row = 0;
        for (int col = 0; col < n && row < m; ++col) {
            int piv = -1;
            for (int i = row; i < m; ++i)
                if (!a[i][col].is_zero()) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            std::swap(a[piv], a[row]);
            const CycloNum inv = a[row][col].inverse();
            for (int i = row + 1; i < m; ++i) {
                if (a[i][col].is_zero()) continue;
                const CycloNum f = a[i][col] * inv;
                for (int j = col; j < n; ++j)
                    if (!a[row][j].is_zero()) a[i][j] -= f * a[row][j];
            }
            pivots_.push_back(monos[col]);
            ++row;
        }
        if (row < m) throw DomainError(name_ + ": forms are linearly dependent");

        Mat b(m, cond);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) b(i, j) = forms_[i].coeff(pivots_[j]);
        binv_ = b.inverse();
    }

    int size() const { return static_cast<int>(forms_.size()); }
    const std::vector<MultiPoly>& forms() const { return forms_; }
    const MultiPoly& operator[](int i) const { return forms_[i]; }
    const std::string& name() const { return name_; }

    // c with sum_i c_i forms_i = h; throws if h is not in the span
    std::vector<CycloNum> coords(const MultiPoly& h) const {
        const int m = size();
        std::vector<CycloNum> c(m, CycloNum(forms_[0].conductor()));
        for (int j = 0; j < m; ++j) {
            const CycloNum hj = h.coeff(pivots_[j]);
            if (hj.is_zero()) continue;
            for (int i = 0; i < m; ++i)
                if (!binv_(j, i).is_zero()) c[i] += hj * binv_(j, i);
        }
        MultiPoly back(h.nvars(), h.conductor());
        for (int i = 0; i < m; ++i)
            if (!c[i].is_zero()) back += c[i] * forms_[i];
        if (back != h) throw DomainError("form is not in the span of " + name_);
        return c;
    }

    bool contains(const MultiPoly& h) const {
        try {
            coords(h);
            return true;
        } catch (const DomainError&) {
            return false;
        }
    }

private:
    std::vector<MultiPoly> forms_;
    std::string name_;
    std::vector<Mono> pivots_;
    Mat binv_{1};
};

// Row i holds the coordinates of act(g, basis_i), so induced(gh) = induced(g) induced(h).
inline Mat induced_matrix(const Mat& g, const FormBasis& basis) {
    const int m = basis.size();
    Mat r(m, basis[0].conductor());
    for (int i = 0; i < m; ++i) {
        const auto c = basis.coords(act(g, basis[i]));
        for (int j = 0; j < m; ++j) r(i, j) = c[j];
    }
    return r;
}

// same, from precomputed images act(g, basis_i)
inline Mat induced_from_images(const std::vector<MultiPoly>& images, const FormBasis& basis) {
    const int m = basis.size();
    if (static_cast<int>(images.size()) != m) throw DomainError("image count does not match basis size");
    Mat r(m, basis[0].conductor());
    for (int i = 0; i < m; ++i) {
        const auto c = basis.coords(images[i]);
        for (int j = 0; j < m; ++j) r(i, j) = c[j];
    }
    return r;
}

}  // namespace hurwitz
