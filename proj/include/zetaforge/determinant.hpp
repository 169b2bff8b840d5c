#ifndef ZETAFORGE_DETERMINANT_HPP
#define ZETAFORGE_DETERMINANT_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

namespace zetaforge {

using PolyMatrix = Matrix<PolyZ>;

/// Exact determinant of a square matrix over Z[z].
///
/// Fraction-free (Bareiss) elimination. Every division is exact in Z[z]; a
/// remainder would mean a bug and surfaces as divisibility_error.
///
/// Rows whose entry in the pivot column is zero are not rescaled at that
/// step. Each row remembers the elimination level its stored entries belong
/// to; because the skipped updates telescope to a factor p_{b-1}/p_{a-1} of
/// consecutive pivots, a row is brought up to date only when a later step
/// actually needs it. On sparse matrices (graph adjacency) this removes most
/// of the cost without changing any intermediate value.
inline PolyZ det_poly(PolyMatrix m)
{
    if (!m.is_square()) throw precondition_error("det_poly: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return PolyZ{1};

    std::vector<std::size_t> level(n, 0);
    std::vector<PolyZ> pivot(n);  // pivot[k] is the pivot used at step k
    const PolyZ one{1};
    auto prev_pivot = [&](std::size_t lvl) -> const PolyZ& { return lvl == 0 ? one : pivot[lvl - 1]; };

    auto bring_to = [&](std::size_t i, std::size_t k) {
        if (level[i] == k) return;
        const PolyZ& num = prev_pivot(k);
        const PolyZ& den = prev_pivot(level[i]);
        for (std::size_t j = k; j < n; ++j) {
            PolyZ& e = m(i, j);
            if (e.is_zero()) continue;
            e = exact_div(e * num, den);
        }
        level[i] = k;
    };

    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m(r, k).is_zero()) ++r;
            if (r == n) return {};
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
            std::swap(level[k], level[r]);
            negate = !negate;
        }
        bring_to(k, k);
        pivot[k] = m(k, k);
        const PolyZ& pk = pivot[k];
        const PolyZ& pprev = prev_pivot(k);

        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k).is_zero()) continue;
            bring_to(i, k);
            const PolyZ factor = m(i, k);
            for (std::size_t j = k + 1; j < n; ++j) {
                const bool row_zero = m(i, j).is_zero();
                const bool piv_zero = m(k, j).is_zero();
                if (row_zero && piv_zero) continue;
                PolyZ v;
                if (!row_zero) v = pk * m(i, j);
                if (!piv_zero) v -= factor * m(k, j);
                m(i, j) = exact_div(v, pprev);
            }
            m(i, k) = PolyZ{};
            level[i] = k + 1;
        }
    }
    bring_to(n - 1, n - 1);
    PolyZ det = m(n - 1, n - 1);
    return negate ? -det : det;
}

/// Exact characteristic polynomial det(lambda I - M).
inline PolyZ char_poly(const IntMatrix& mat)
{
    if (!mat.is_square()) throw precondition_error("char_poly: matrix is not square");
    const std::size_t n = mat.rows();
    PolyMatrix pm(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            BigInt c = -BigInt(mat(i, j));
            pm(i, j) = i == j ? PolyZ(std::vector<BigInt>{c, BigInt(1)}) : PolyZ::constant(c);
        }
    }
    return det_poly(std::move(pm));
}

} // namespace zetaforge

#endif // ZETAFORGE_DETERMINANT_HPP
