#ifndef ZETAFORGE_ROOTS_HPP
#define ZETAFORGE_ROOTS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace zetaforge {

struct Root {
    std::complex<double> value;
    int multiplicity = 1;
};

struct ComplexRootSet {
    std::vector<Root> roots;
    double residual_bound = 0.0;  // max |p(root)| over the returned roots

    int total_multiplicity() const
    {
        int s = 0;
        for (const auto& r : roots) s += r.multiplicity;
        return s;
    }
};

struct RootOptions {
    double tolerance = 1e-12;    // Aberth stopping criterion, relative to max(1, |z|)
    double merge = 1e-8;         // roots closer than this are reported once
    int max_iterations = 2000;
};

namespace detail {

using cld = std::complex<long double>;

inline std::vector<long double> to_long_double(const PolyZ& p)
{
    std::vector<long double> c;
    c.reserve(p.coefficients().size());
    for (const auto& v : p.coefficients()) c.push_back(static_cast<long double>(v));
    return c;
}

inline void horner(const std::vector<long double>& c, cld z, cld& f, cld& df)
{
    f = 0;
    df = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        df = df * z + f;
        f = f * z + *it;
    }
}

inline long double abs_horner(const std::vector<long double>& c, long double r)
{
    long double acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + std::fabs(*it);
    return acc;
}

/// Simple roots of a square-free polynomial with nonzero constant term.
inline std::vector<cld> aberth(const PolyZ& f, const RootOptions& opt)
{
    const auto c = to_long_double(f);
    const int d = f.degree();
    if (d == 1) return {cld(-c[0] / c[1], 0)};

    // Deterministic start: a circle whose radius is the geometric mean of the
    // root moduli, rotated off the real axis.
    const long double radius = std::pow(std::fabs(c[0] / c[d]), 1.0L / d);
    const long double two_pi = 2.0L * std::acos(-1.0L);
    std::vector<cld> z(d);
    for (int k = 0; k < d; ++k) z[k] = std::polar(radius, two_pi * k / d + 0.4L);

    const long double tol = opt.tolerance;
    bool converged = false;
    for (int it = 0; it < opt.max_iterations && !converged; ++it) {
        converged = true;
        for (int k = 0; k < d; ++k) {
            cld fz, dfz;
            horner(c, z[k], fz, dfz);
            if (fz == cld(0)) continue;
            const cld ratio = fz / dfz;
            cld repulsion = 0;
            for (int j = 0; j < d; ++j)
                if (j != k) repulsion += 1.0L / (z[k] - z[j]);
            const cld step = ratio / (1.0L - ratio * repulsion);
            z[k] -= step;
            if (std::abs(step) > tol * std::max(1.0L, std::abs(z[k]))) converged = false;
        }
    }
    if (!converged) {
        throw numerical_error("roots: Aberth iteration did not converge within " +
                              std::to_string(opt.max_iterations) + " iterations (degree " +
                              std::to_string(d) + ")");
    }

    for (auto& zk : z) {
        for (int it = 0; it < 3; ++it) {
            cld fz, dfz;
            horner(c, zk, fz, dfz);
            if (dfz == cld(0)) break;
            zk -= fz / dfz;
        }
        cld fz, dfz;
        horner(c, zk, fz, dfz);
        const long double scale = abs_horner(c, std::abs(zk));
        if (scale > 0 && std::abs(fz) / scale > 1e-10L) {
            throw numerical_error("roots: residual check failed at root (" + std::to_string(double(zk.real())) +
                                  ", " + std::to_string(double(zk.imag())) + ")");
        }
    }
    return z;
}

} // namespace detail

/// All complex roots of p with multiplicities.
///
/// p is split into square-free factors first, so each Aberth run only sees
/// simple roots; the multiplicity comes from the factor exponent.
inline ComplexRootSet roots(const PolyZ& p, const RootOptions& opt = {})
{
    if (p.is_zero()) throw precondition_error("roots: zero polynomial");
    ComplexRootSet out;
    if (p.degree() == 0) return out;

    std::vector<Root> raw;
    std::size_t zero_mult = 0;
    while (p.coeff(zero_mult) == 0) ++zero_mult;
    PolyZ rest = p;
    if (zero_mult > 0) {
        rest = PolyZ(std::vector<BigInt>(p.coefficients().begin() + static_cast<long>(zero_mult),
                                         p.coefficients().end()));
        raw.push_back({{0.0, 0.0}, static_cast<int>(zero_mult)});
    }

    for (const auto& [factor, mult] : squarefree_decomposition(rest)) {
        for (const auto& z : detail::aberth(factor, opt)) {
            raw.push_back({{static_cast<double>(z.real()), static_cast<double>(z.imag())}, mult});
        }
    }

    std::sort(raw.begin(), raw.end(), [](const Root& a, const Root& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    for (const auto& r : raw) {
        auto hit = std::find_if(out.roots.begin(), out.roots.end(),
                                [&](const Root& o) { return std::abs(o.value - r.value) <= opt.merge; });
        if (hit != out.roots.end()) {
            hit->multiplicity += r.multiplicity;
        } else {
            out.roots.push_back(r);
        }
    }

    const auto c = detail::to_long_double(p);
    for (auto& r : out.roots) {
        if (std::abs(r.value.imag()) <= 1e-15 * std::max(1.0, std::abs(r.value))) r.value.imag(0.0);
        detail::cld f, df;
        detail::horner(c, detail::cld(r.value.real(), r.value.imag()), f, df);
        out.residual_bound = std::max(out.residual_bound, static_cast<double>(std::abs(f)));
    }
    return out;
}

} // namespace zetaforge

#endif // ZETAFORGE_ROOTS_HPP
