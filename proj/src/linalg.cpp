#include "wreathmac/linalg.hpp"

#include <algorithm>

namespace wreathmac {

namespace {

// Rough size measure used by the pivot heuristic.
size_t poly_weight(const LaurentPoly2& p) {
    return p.num_terms();
}

}  // namespace

std::vector<RatFn2> kernel_vector_pinned(const PolyMatrix& m, size_t pin) {
    if (m.empty()) throw SolverDegenerateError("kernel_vector_pinned: empty system");
    const size_t ncols = m[0].size();
    if (pin >= ncols) throw std::out_of_range("kernel_vector_pinned: pin column");
    VarTag tag = VarTag::qt;
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.is_zero()) tag = e.tag();

    // Unknown columns are all columns except the pinned one; the pinned
    // column, negated, becomes the right-hand side.
    std::vector<size_t> cols;
    cols.reserve(ncols - 1);
    for (size_t j = 0; j < ncols; ++j)
        if (j != pin) cols.push_back(j);
    const size_t n = cols.size();

    // Augmented matrix [A | b], dropping all-zero rows.
    PolyMatrix a;
    for (const auto& row : m) {
        if (row.size() != ncols) throw SizeMismatchError("kernel_vector_pinned: ragged matrix");
        bool nonzero = false;
        for (const auto& e : row)
            if (!e.is_zero()) {
                nonzero = true;
                break;
            }
        if (!nonzero) continue;
        std::vector<LaurentPoly2> arow;
        arow.reserve(n + 1);
        for (size_t j : cols) arow.push_back(row[j]);
        arow.push_back(-row[pin]);
        a.push_back(std::move(arow));
    }
    if (a.size() < n) throw SolverDegenerateError("kernel_vector_pinned: nullspace is not one-dimensional");

    const size_t rows = a.size();
    std::vector<size_t> colperm(n);
    for (size_t j = 0; j < n; ++j) colperm[j] = j;

    LaurentPoly2 prev(Rat(1), tag);
    size_t rank = 0;
    for (size_t k = 0; k < n; ++k) {
        // Pick the smallest nonzero pivot among remaining rows/columns.
        size_t bi = rows, bj = n;
        size_t best = SIZE_MAX;
        for (size_t i = k; i < rows; ++i)
            for (size_t j = k; j < n; ++j) {
                if (a[i][j].is_zero()) continue;
                size_t w = poly_weight(a[i][j]);
                if (w < best) {
                    best = w;
                    bi = i;
                    bj = j;
                    if (best == 1) goto found;
                }
            }
    found:
        if (bi == rows) break;  // no pivot: rank deficient
        std::swap(a[k], a[bi]);
        if (bj != k) {
            for (size_t i = 0; i < rows; ++i) std::swap(a[i][k], a[i][bj]);
            std::swap(colperm[k], colperm[bj]);
        }
        const LaurentPoly2 piv = a[k][k];
        for (size_t i = k + 1; i < rows; ++i) {
            const bool zlead = a[i][k].is_zero();
            for (size_t j = k + 1; j <= n; ++j) {
                if (zlead && a[i][j].is_zero()) continue;
                LaurentPoly2 v = zlead ? a[i][j] * piv : a[i][j] * piv - a[i][k] * a[k][j];
                if (!prev.is_one()) {
                    auto q = v.divided_by(prev);
                    if (!q) throw std::logic_error("Bareiss: inexact division");
                    v = *q;
                }
                a[i][j] = std::move(v);
            }
            a[i][k] = LaurentPoly2(tag);
        }
        prev = piv;
        ++rank;
    }

    if (rank < n) throw SolverDegenerateError("kernel_vector_pinned: nullspace is not one-dimensional");
    for (size_t i = rank; i < rows; ++i)
        if (!a[i][n].is_zero())
            throw SolverDegenerateError("kernel_vector_pinned: inconsistent system (pinned coefficient must vanish)");

    // Back substitution over the fraction field.
    std::vector<RatFn2> xperm(n, RatFn2(tag));
    for (size_t k = n; k-- > 0;) {
        RatFn2 acc(a[k][n]);
        for (size_t j = k + 1; j < n; ++j) acc -= RatFn2(a[k][j]) * xperm[j];
        xperm[k] = acc / RatFn2(a[k][k]);
    }

    std::vector<RatFn2> x(ncols, RatFn2(tag));
    x[pin] = RatFn2(1, tag);
    for (size_t j = 0; j < n; ++j) x[cols[colperm[j]]] = xperm[j];
    return x;
}

std::vector<RatFn2> solve_dense(std::vector<std::vector<RatFn2>> a, std::vector<RatFn2> b) {
    const size_t n = a.size();
    if (b.size() != n) throw SizeMismatchError("solve_dense: dimension mismatch");
    for (size_t k = 0; k < n; ++k) {
        size_t piv = n;
        size_t best = SIZE_MAX;
        for (size_t i = k; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            size_t w = a[i][k].num().num_terms() + a[i][k].den().num_terms();
            if (w < best) {
                best = w;
                piv = i;
            }
        }
        if (piv == n) throw SingularMatrixError("solve_dense: singular matrix");
        std::swap(a[piv], a[k]);
        std::swap(b[piv], b[k]);
        RatFn2 inv = a[k][k].inverse();
        for (size_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            RatFn2 f = a[i][k] * inv;
            for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    std::vector<RatFn2> x(n, b.empty() ? RatFn2() : RatFn2(b[0].tag()));
    for (size_t k = n; k-- > 0;) {
        RatFn2 acc = b[k];
        for (size_t j = k + 1; j < n; ++j) acc -= a[k][j] * x[j];
        x[k] = acc / a[k][k];
    }
    return x;
}

}  // namespace wreathmac
