#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "oracles.hpp"

using namespace zetaforge;

namespace {

PolyZ random_poly(std::mt19937& rng, int max_degree, int bound)
{
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> val(-bound, bound);
    std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : c) v = val(rng);
    return PolyZ(std::move(c));
}

} // namespace

TEST(PolyZ, TrimsAndReportsDegree)
{
    EXPECT_EQ(PolyZ({1, 2, 0, 0}).degree(), 1);
    EXPECT_EQ(PolyZ{}.degree(), -1);
    EXPECT_TRUE(PolyZ({0, 0}).is_zero());
    EXPECT_TRUE(PolyZ({7}).is_constant());
    EXPECT_EQ(PolyZ({1, 0, -2}).coeff(5), 0);
}

TEST(PolyZ, ArithmeticAgreesWithPointEvaluation)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_poly(rng, 6, 20);
        const auto b = random_poly(rng, 6, 20);
        for (long long t : {-3LL, -1LL, 0LL, 2LL, 5LL}) {
            const BigInt x = t;
            EXPECT_EQ(oracle::eval(a + b, x), oracle::eval(a, x) + oracle::eval(b, x));
            EXPECT_EQ(oracle::eval(a - b, x), oracle::eval(a, x) - oracle::eval(b, x));
            EXPECT_EQ(oracle::eval(a * b, x), oracle::eval(a, x) * oracle::eval(b, x));
        }
    }
}

TEST(PolyZ, PowAndDerivative)
{
    EXPECT_EQ(PolyZ({1, 1}).pow(3), PolyZ({1, 3, 3, 1}));
    EXPECT_EQ(PolyZ({5}).pow(0), PolyZ({1}));
    EXPECT_EQ(PolyZ({1, -2, 0, 4}).derivative(), PolyZ({-2, 0, 12}));
    EXPECT_EQ(one_minus_z2_pow(2), PolyZ({1, 0, -2, 0, 1}));
}

TEST(PolyZ, Printing)
{
    EXPECT_EQ(PolyZ({1, 0, 0, -2, 0, 0, 1}).to_coefficient_string(), "1, 0, 0, -2, 0, 0, 1");
    EXPECT_EQ(PolyZ({1, 0, 0, -2, 0, 0, 1}).to_string(), "1 - 2*z^3 + z^6");
    EXPECT_EQ(PolyZ({-1, 1}).to_string(), "-1 + z");
    EXPECT_EQ(PolyZ{}.to_coefficient_string(), "0");
}

TEST(PolyZ, BigCoefficientsSurvive)
{
    // (1 + 10^12 z)^3 needs more than 64 bits in the top coefficient
    const PolyZ p = PolyZ(std::vector<BigInt>{1, BigInt("1000000000000")}).pow(3);
    EXPECT_EQ(p.coeff(3).str(), "1000000000000000000000000000000000000");
}

TEST(ExactDiv, RecoversFactor)
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_poly(rng, 5, 9);
        auto b = random_poly(rng, 4, 9);
        if (b.is_zero()) continue;
        EXPECT_EQ(exact_div(a * b, b), a);
    }
}

TEST(ExactDiv, SpecExamples)
{
    EXPECT_EQ(exact_div(PolyZ({1, 0, -1}).pow(3), one_minus_z2_pow(1)), PolyZ({1, 0, -1}).pow(2));
    EXPECT_THROW(exact_div(PolyZ({1, 1}), PolyZ({1, 0, -1})), divisibility_error);
    EXPECT_THROW(exact_div(PolyZ({1, 0, 1}), PolyZ({1, 0, -1})), divisibility_error);
    EXPECT_THROW(exact_div(PolyZ({1}), PolyZ{}), divisibility_error);
}

TEST(Gcd, CommonFactor)
{
    const PolyZ f{1, -1};   // 1 - z
    const PolyZ g{1, 0, 1}; // 1 + z^2
    const PolyZ h{2, 3};
    auto r = gcd(f * g * PolyZ({3}), f * h);
    EXPECT_EQ(r, PolyZ({-1, 1}));
    EXPECT_EQ(gcd(g, h), PolyZ({1}));
}

TEST(SquareFree, ReassemblesWithMultiplicities)
{
    const PolyZ a{1, -1};
    const PolyZ b{1, 0, 1};
    const PolyZ c{1, -5};
    const PolyZ p = a.pow(5) * b.pow(2) * c;
    PolyZ back{1};
    int total = 0;
    for (const auto& [f, k] : squarefree_decomposition(p)) {
        back = back * f.pow(static_cast<unsigned>(k));
        total += f.degree() * k;
    }
    EXPECT_EQ(total, p.degree());
    EXPECT_TRUE(back == p || back == -p);
}

TEST(DetPoly, MatchesCofactorExpansion)
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 6;
        PolyMatrix m(n, n);
        std::vector<std::vector<PolyZ>> rows(n, std::vector<PolyZ>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                // sparse enough to force pivot swaps now and then
                rows[i][j] = (rng() % 3 == 0) ? PolyZ{} : random_poly(rng, 3, 4);
                m(i, j) = rows[i][j];
            }
        EXPECT_EQ(det_poly(m), oracle::cofactor_det(rows)) << "trial " << trial;
    }
}

TEST(DetPoly, SpecExamples)
{
    // worked two-node graph: det(I - Az + Qz^2 + Pz^3) with e = 0
    PolyMatrix m{{PolyZ{1}, PolyZ{0, -1}}, {PolyZ{0, -2, 0, 1}, PolyZ{1, -2, 2}}};
    EXPECT_EQ(det_poly(m), PolyZ({1, -2, 0, 0, 1}));
    PolyMatrix singular{{PolyZ{1, 1}, PolyZ{1, 1}}, {PolyZ{2, 2}, PolyZ{2, 2}}};
    EXPECT_TRUE(det_poly(singular).is_zero());
    PolyMatrix swap{{PolyZ{}, PolyZ{1}}, {PolyZ{1}, PolyZ{}}};
    EXPECT_EQ(det_poly(swap), PolyZ({-1}));
}

TEST(CharPoly, MatchesCofactorExpansion)
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> val(-3, 4);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial % 6;
        IntMatrix a(n, n);
        std::vector<std::vector<PolyZ>> rows(n, std::vector<PolyZ>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) = val(rng);
                rows[i][j] = PolyZ{-a(i, j), i == j ? 1 : 0};
            }
        EXPECT_EQ(char_poly(a), oracle::cofactor_det(rows));
    }
}

TEST(CharPoly, SpecExamples)
{
    EXPECT_EQ(char_poly(IntMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}), PolyZ({-2, -3, 0, 1}));
    EXPECT_EQ(char_poly(IntMatrix{{0, 4}, {4, 0}}), PolyZ({-16, 0, 1}));
    EXPECT_EQ(char_poly(IntMatrix(3, 3)), PolyZ({0, 0, 0, 1}));
}

TEST(Roots, VietaAndResidual)
{
    std::mt19937 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        PolyZ p = random_poly(rng, 9, 12);
        if (p.degree() < 1) continue;
        const auto rs = roots(p);
        EXPECT_EQ(rs.total_multiplicity(), p.degree());
        // sum of roots = -a_{d-1}/a_d
        std::complex<double> sum = 0;
        for (const auto& r : rs.roots) sum += r.value * static_cast<double>(r.multiplicity);
        const double expect = -static_cast<double>(p.coeff(static_cast<std::size_t>(p.degree() - 1))) /
                              static_cast<double>(p.leading());
        EXPECT_NEAR(sum.real(), expect, 1e-6 * std::max(1.0, std::abs(expect)));
        EXPECT_NEAR(sum.imag(), 0.0, 1e-6);
    }
}

TEST(Roots, MultiplicitiesFromRepeatedFactors)
{
    // (z - 1)^18 (z + 1)^17 (5z - 1)
    const PolyZ p = PolyZ({-1, 1}).pow(18) * PolyZ({1, 1}).pow(17) * PolyZ({-1, 5});
    const auto rs = roots(p);
    ASSERT_EQ(rs.roots.size(), 3u);
    EXPECT_NEAR(rs.roots[0].value.real(), -1.0, 1e-12);
    EXPECT_EQ(rs.roots[0].multiplicity, 17);
    EXPECT_NEAR(rs.roots[1].value.real(), 0.2, 1e-12);
    EXPECT_EQ(rs.roots[1].multiplicity, 1);
    EXPECT_NEAR(rs.roots[2].value.real(), 1.0, 1e-12);
    EXPECT_EQ(rs.roots[2].multiplicity, 18);
}

TEST(Roots, SpecExamples)
{
    const auto dp0 = roots(PolyZ({1, 0, 0, -27}));
    ASSERT_EQ(dp0.roots.size(), 3u);
    for (const auto& r : dp0.roots) EXPECT_NEAR(std::abs(r.value), 1.0 / 3.0, 1e-12);
    const auto zero = roots(PolyZ({0, 0, 1}));
    ASSERT_EQ(zero.roots.size(), 1u);
    EXPECT_EQ(zero.roots[0].multiplicity, 2);
    EXPECT_THROW(roots(PolyZ{}), precondition_error);
    EXPECT_TRUE(roots(PolyZ({4})).roots.empty());
}

TEST(Roots, DeterministicAcrossCalls)
{
    const PolyZ p{1, -6, 3, 12, -9, -6, 5};
    const auto a = roots(p);
    const auto b = roots(p);
    ASSERT_EQ(a.roots.size(), b.roots.size());
    for (std::size_t i = 0; i < a.roots.size(); ++i) EXPECT_EQ(a.roots[i].value, b.roots[i].value);
}

TEST(Series, LogDerivativeSpecExamples)
{
    const auto s = log_derivative_series(PolyZ({1, -2, 0, 0, 1}), 4);
    EXPECT_EQ(s.counts, (std::vector<BigInt>{2, 4, 8, 12}));
    const auto a2 = log_derivative_series(PolyZ({1, 0, 0, -2, 0, 0, 1}), 6);
    EXPECT_EQ(a2.counts, (std::vector<BigInt>{0, 0, 6, 0, 0, 6}));
    EXPECT_EQ(log_derivative_series(PolyZ({1}), 3).counts, (std::vector<BigInt>{0, 0, 0}));
    EXPECT_THROW(log_derivative_series(PolyZ({2, 1}), 3), precondition_error);
}

TEST(Series, MobiusInversion)
{
    EXPECT_EQ(mobius(1), 1);
    EXPECT_EQ(mobius(6), 1);
    EXPECT_EQ(mobius(12), 0);
    EXPECT_EQ(mobius(30), -1);
    GeodesicSeries a2{{0, 0, 6, 0, 0, 6}};
    EXPECT_EQ(mobius_invert(a2), (std::vector<BigInt>{0, 0, 2, 0, 0, 0}));
    GeodesicSeries bad{{1, 0}};
    EXPECT_THROW(mobius_invert(bad), inconsistency_error);
    GeodesicSeries negative{{2, 0}};
    EXPECT_THROW(mobius_invert(negative), inconsistency_error);
}
