#ifndef ZETAFORGE_SERIES_HPP
#define ZETAFORGE_SERIES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace zetaforge {

/// Closed backtrackless tailless path counts. counts[m-1] is N_m, the number
/// of such paths of length m with a distinguished starting dart.
struct GeodesicSeries {
    std::vector<BigInt> counts;

    std::size_t horizon() const { return counts.size(); }
    const BigInt& at(std::size_t m) const { return counts.at(m - 1); }

    friend bool operator==(const GeodesicSeries&, const GeodesicSeries&) = default;
};

/// Coefficients 1..L of z d/dz log zeta, where zeta = 1 / zeta_inverse.
///
/// With f = zeta_inverse and h = f'/f as a power series, z d/dz log zeta
/// = -z h, so N_m = -h_{m-1}. f(0) = 1 keeps the series division inside Z.
inline GeodesicSeries log_derivative_series(const PolyZ& zeta_inverse, std::size_t horizon)
{
    if (zeta_inverse.coeff(0) != 1) throw precondition_error("log_derivative_series: constant term must be 1");
    const PolyZ df = zeta_inverse.derivative();
    std::vector<BigInt> h(horizon);
    for (std::size_t k = 0; k < horizon; ++k) {
        BigInt v = df.coeff(k);
        for (std::size_t j = 1; j <= k; ++j) {
            const BigInt fj = zeta_inverse.coeff(j);
            if (fj != 0) v -= fj * h[k - j];
        }
        h[k] = v;
    }
    GeodesicSeries out;
    out.counts.reserve(horizon);
    for (std::size_t m = 1; m <= horizon; ++m) out.counts.push_back(-h[m - 1]);
    return out;
}

inline int mobius(std::size_t n)
{
    int sign = 1;
    for (std::size_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

/// Prime class counts pi(1..L) from N via N_m = sum_{d|m} d pi(d).
inline std::vector<BigInt> mobius_invert(const GeodesicSeries& series)
{
    const std::size_t horizon = series.horizon();
    std::vector<BigInt> pi(horizon);
    for (std::size_t m = 1; m <= horizon; ++m) {
        BigInt acc = 0;
        for (std::size_t d = 1; d <= m; ++d) {
            if (m % d != 0) continue;
            const int mu = mobius(m / d);
            if (mu != 0) acc += mu * series.at(d);
        }
        BigInt q, r;
        boost::multiprecision::divide_qr(acc, BigInt(m), q, r);
        if (r != 0) throw inconsistency_error("mobius_invert: pi(" + std::to_string(m) + ") is not an integer");
        if (q < 0) throw inconsistency_error("mobius_invert: pi(" + std::to_string(m) + ") is negative");
        pi[m - 1] = q;
    }
    return pi;
}

} // namespace zetaforge

#endif // ZETAFORGE_SERIES_HPP
