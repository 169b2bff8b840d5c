#ifndef ZETAFORGE_POLYNOMIAL_HPP
#define ZETAFORGE_POLYNOMIAL_HPP

#include <algorithm>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace zetaforge {

using BigInt = boost::multiprecision::cpp_int;

/// Dense univariate polynomial over the integers, constant term first.
/// The coefficient vector never carries trailing zeros; the zero polynomial
/// is the empty vector and has degree -1.
class PolyZ {
public:
    PolyZ() = default;
    PolyZ(std::initializer_list<long long> coeffs)
    {
        c_.reserve(coeffs.size());
        for (long long v : coeffs) c_.emplace_back(v);
        trim();
    }
    explicit PolyZ(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    static PolyZ constant(const BigInt& v) { return PolyZ(std::vector<BigInt>{v}); }

    static PolyZ monomial(const BigInt& v, std::size_t power)
    {
        std::vector<BigInt> c(power + 1);
        c[power] = v;
        return PolyZ(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    /// Coefficient of z^k; zero beyond the degree.
    BigInt coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }
    const BigInt& leading() const { return c_.back(); }
    const std::vector<BigInt>& coefficients() const { return c_; }

    PolyZ& operator+=(const PolyZ& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    PolyZ& operator-=(const PolyZ& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    PolyZ& operator*=(const BigInt& s)
    {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& v : c_) v *= s;
        return *this;
    }

    friend PolyZ operator+(PolyZ a, const PolyZ& b) { return a += b; }
    friend PolyZ operator-(PolyZ a, const PolyZ& b) { return a -= b; }
    friend PolyZ operator-(PolyZ a)
    {
        for (auto& v : a.c_) v = -v;
        return a;
    }
    friend PolyZ operator*(PolyZ a, const BigInt& s) { return a *= s; }

    friend PolyZ operator*(const PolyZ& a, const PolyZ& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j] != 0) r[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return PolyZ(std::move(r));
    }
    PolyZ& operator*=(const PolyZ& o) { return *this = *this * o; }

    friend bool operator==(const PolyZ& a, const PolyZ& b) { return a.c_ == b.c_; }

    PolyZ pow(unsigned e) const
    {
        PolyZ result{1};
        PolyZ base = *this;
        while (e > 0) {
            if (e & 1u) result *= base;
            e >>= 1;
            if (e > 0) base *= base;
        }
        return result;
    }

    PolyZ derivative() const
    {
        if (c_.size() <= 1) return {};
        std::vector<BigInt> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * k;
        return PolyZ(std::move(d));
    }

    /// gcd of the coefficients, sign taken from the leading coefficient.
    BigInt content() const
    {
        BigInt g = 0;
        for (const auto& v : c_) g = boost::multiprecision::gcd(g, v);
        if (!c_.empty() && c_.back() < 0) g = -g;
        return g;
    }

    /// Divides out the content so the result has coprime coefficients and a
    /// positive leading coefficient.
    PolyZ primitive_part() const
    {
        if (is_zero()) return {};
        BigInt g = content();
        std::vector<BigInt> r = c_;
        for (auto& v : r) v /= g;
        return PolyZ(std::move(r));
    }

    template <class T>
    std::complex<T> eval(std::complex<T> z) const
    {
        std::complex<T> acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + static_cast<T>(*it);
        return acc;
    }

    /// Coefficients as "c0, c1, ..., cd" (the zero polynomial prints "0").
    std::string to_coefficient_string() const
    {
        if (c_.empty()) return "0";
        std::string s;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (k) s += ", ";
            s += c_[k].str();
        }
        return s;
    }

    /// Human-readable form such as "1 - 2*z^3 + z^6".
    std::string to_string(char var = 'z') const
    {
        if (c_.empty()) return "0";
        std::string s;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            const BigInt& v = c_[k];
            if (v == 0) continue;
            BigInt mag = v < 0 ? BigInt(-v) : v;
            if (s.empty()) {
                if (v < 0) s += "-";
            } else {
                s += v < 0 ? " - " : " + ";
            }
            if (k == 0 || mag != 1) s += mag.str();
            if (k > 0) {
                if (mag != 1) s += "*";
                s += var;
                if (k > 1) s += "^" + std::to_string(k);
            }
        }
        return s;
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

/// Exact quotient a / b over Z[z]. Throws divisibility_error when b does not
/// divide a.
inline PolyZ exact_div(const PolyZ& a, const PolyZ& b)
{
    if (b.is_zero()) throw divisibility_error("exact_div: division by the zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw divisibility_error("exact_div: divisor degree exceeds dividend degree");

    std::vector<BigInt> rem = a.coefficients();
    const auto& bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    const BigInt& lb = bc.back();
    std::vector<BigInt> q(rem.size() - db);

    for (std::size_t k = q.size(); k-- > 0;) {
        const BigInt& top = rem[k + db];
        if (top == 0) continue;
        BigInt quot, r;
        boost::multiprecision::divide_qr(top, lb, quot, r);
        if (r != 0) throw divisibility_error("exact_div: leading coefficient not divisible");
        q[k] = quot;
        for (std::size_t j = 0; j <= db; ++j) {
            if (bc[j] != 0) rem[k + j] -= quot * bc[j];
        }
    }
    for (std::size_t k = 0; k < db; ++k) {
        if (rem[k] != 0) throw divisibility_error("exact_div: nonzero remainder");
    }
    return PolyZ(std::move(q));
}

/// Pseudo-remainder of a by b, scaled so that all arithmetic stays in Z.
inline PolyZ pseudo_remainder(PolyZ a, const PolyZ& b)
{
    const int db = b.degree();
    const BigInt& lb = b.leading();
    while (!a.is_zero() && a.degree() >= db) {
        const BigInt la = a.leading();
        a = a * lb - b * PolyZ::monomial(la, static_cast<std::size_t>(a.degree() - db));
    }
    return a;
}

/// Primitive gcd over Z[z] with positive leading coefficient (primitive PRS).
inline PolyZ gcd(const PolyZ& a, const PolyZ& b)
{
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    PolyZ u = a.primitive_part();
    PolyZ v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        PolyZ r = pseudo_remainder(u, v);
        u = std::move(v);
        v = r.primitive_part();
    }
    return u.primitive_part();
}

/// Square-free decomposition p = c * prod f_i^i (Yun). Returns the
/// non-constant primitive factors f_i paired with their multiplicity i.
inline std::vector<std::pair<PolyZ, int>> squarefree_decomposition(const PolyZ& p)
{
    std::vector<std::pair<PolyZ, int>> out;
    if (p.degree() <= 0) return out;
    const PolyZ f = p.primitive_part();
    const PolyZ df = f.derivative();
    const PolyZ a0 = gcd(f, df);
    PolyZ b = exact_div(f, a0);
    PolyZ c = exact_div(df, a0);
    PolyZ d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        PolyZ a = gcd(b, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        b = exact_div(b, a);
        c = exact_div(d, a);
        d = c - b.derivative();
    }
    return out;
}

/// (1 - z^2)^k, used for the Ihara numerator exponent.
inline PolyZ one_minus_z2_pow(unsigned k) { return PolyZ{1, 0, -1}.pow(k); }

} // namespace zetaforge

#endif // ZETAFORGE_POLYNOMIAL_HPP
