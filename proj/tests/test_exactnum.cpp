#include <gtest/gtest.h>

#include "hwzeta/exactnum/matrix.hpp"
#include "hwzeta/exactnum/polynomial.hpp"
#include "hwzeta/exactnum/rational.hpp"
#include "oracles.hpp"

using namespace hwzeta;

namespace {

Rational R(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

const ValuationContext F5(5, 1);

}  // namespace

TEST(Rational, LowestTermsAndSign) {
    EXPECT_EQ(R(6, -4).to_string(), "-3/2");
    EXPECT_EQ(R(10, 5).to_string(), "2");
    EXPECT_EQ(R(0, 7).to_string(), "0");
    EXPECT_TRUE(R(4, 2).is_integer());
    EXPECT_EQ(R(-7, 2).floor(), -4);
    EXPECT_EQ(R(7, 2).floor(), 3);
    EXPECT_EQ(R(-6, 2).floor(), -3);
    EXPECT_LT(R(1, 3), R(1, 2));
}

TEST(Rational, ParseRoundTrip) {
    EXPECT_EQ(Rational::parse("-12/8"), R(-3, 2));
    EXPECT_EQ(Rational::parse("+5"), R(5));
    EXPECT_EQ(Rational::parse("123456789012345678901234567890").to_string(), "123456789012345678901234567890");
    for (const char* bad : {"", "1/", "/2", "1/0", "1/-2", "x", "1.5", "--1"})
        EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
}

TEST(Rational, DivisionByZeroThrows) {
    EXPECT_THROW(R(1) / R(0), DivisionByZero);
    EXPECT_THROW(Rational(Integer(1), Integer(0)), DivisionByZero);
    EXPECT_THROW(pow(R(0), -1), DivisionByZero);
}

TEST(Rational, NegativePowers) {
    EXPECT_EQ(pow(R(5), -3), R(1, 125));
    EXPECT_EQ(pow(R(2, 3), -2), R(9, 4));
    EXPECT_EQ(pow(R(-2), 3), R(-8));
    EXPECT_EQ(pow(R(7), 0), R(1));
}

TEST(Valuation, OrdP) {
    EXPECT_EQ(ord_p(R(5, 4), 5), 1);
    EXPECT_EQ(ord_p(R(0), 5), std::nullopt);
    EXPECT_EQ(ord_p(R(9, 4), 5), 0);
    EXPECT_EQ(ord_p(R(-3, 250), 5), -3);
    EXPECT_EQ(ord_p(R(1, 3), 3), -1);
}

TEST(Valuation, OrdQAndContext) {
    const ValuationContext f9(3, 2);
    EXPECT_EQ(f9.q(), 9);
    EXPECT_EQ(f9.ord_q(R(27)), R(3, 2));
    EXPECT_EQ(f9.ord_q(R(0)), std::nullopt);
    EXPECT_EQ(f9.q_pow(-2), R(1, 81));
    EXPECT_THROW(ValuationContext(4, 1), std::invalid_argument);
    EXPECT_THROW(ValuationContext(1, 1), std::invalid_argument);
    EXPECT_THROW(ValuationContext(5, 0), std::invalid_argument);
}

TEST(Valuation, IsPrime) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t n = 0; n < 30; ++n)
        if (is_prime(n)) primes.push_back(n);
    EXPECT_EQ(primes, (std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
}

TEST(Polynomial, TrimAndDegree) {
    EXPECT_EQ(Polynomial({1, 2, 0, 0}).degree(), 1);
    EXPECT_EQ(Polynomial().degree(), -1);
    EXPECT_TRUE(Polynomial({1}).is_one());
    EXPECT_FALSE(Polynomial({2, 1}).is_normalized());
    EXPECT_EQ(Polynomial({1, 3, 5}).to_string(), "1 + 3t + 5t^2");
    EXPECT_EQ(Polynomial({1, R(-1, 5)}).to_string(), "1 - 1/5t");
    EXPECT_EQ(Polynomial({1, 0, -1}).to_string(), "1 - t^2");
}

TEST(Newton, SpecExamples) {
    EXPECT_EQ(newton_slopes(Polynomial({1, 3, 5}), F5), (std::vector<Rational>{0, 1}));
    EXPECT_EQ(newton_slopes(Polynomial({1, 0, 5}), F5), (std::vector<Rational>{R(1, 2), R(1, 2)}));
    EXPECT_EQ(newton_slopes(Polynomial({1, -1}), F5), (std::vector<Rational>{0}));
    EXPECT_EQ(newton_slopes(Polynomial({1, -1}), ValuationContext(3, 2)), (std::vector<Rational>{0}));
}

TEST(Newton, DividesByA) {
    // over F_9, 1 + 9t^2 has inverse roots of ord_3 = 1, so ord_q = 1/2
    EXPECT_EQ(newton_slopes(Polynomial({1, 0, 9}), ValuationContext(3, 2)), (std::vector<Rational>{R(1, 2), R(1, 2)}));
    // 1 - 5t^3 over F_5: one segment of slope 1/3
    EXPECT_EQ(newton_slopes(Polynomial({1, 0, 0, -5}), F5), (std::vector<Rational>(3, R(1, 3))));
}

TEST(Newton, ZeroConstantThrows) { EXPECT_THROW(newton_slopes(Polynomial({0, 1}), F5), ZeroRoot); }

TEST(InverseRoots, Multiplicity) {
    EXPECT_EQ(inverse_root_multiplicity(Polynomial({1, -5}), 5), 1);
    EXPECT_EQ(inverse_root_multiplicity(Polynomial({1, -1}) * Polynomial({1, -1}), 1), 2);
    EXPECT_EQ(inverse_root_multiplicity(Polynomial({1, 3, 5}), 1), 0);
    EXPECT_THROW(inverse_root_multiplicity(Polynomial({1, -1}), 0), std::invalid_argument);
}

TEST(InverseRoots, Deflate) {
    const Polynomial p = Polynomial({1, -1}) * Polynomial({1, -5});
    EXPECT_EQ(deflate(p, 5, 1), Polynomial({1, -1}));
    EXPECT_EQ(deflate(p, 5, 0), p);
    EXPECT_EQ(deflate(ipow(Polynomial({1, -1}), 2), 1, 2), Polynomial::one());
    EXPECT_THROW(deflate(p, 5, 2), NotDivisible);
    EXPECT_THROW(deflate(Polynomial({1, 3, 5}), 1, 1), NotDivisible);
}

TEST(Evaluation, Horner) {
    EXPECT_EQ(eval_at(Polynomial({1, 3, 5}), 1), R(9));
    EXPECT_EQ(eval_at(Polynomial({1, -5}), R(1, 5)), R(0));
    EXPECT_EQ(eval_at(Polynomial({1, 3, 5}), 0), R(1));
    EXPECT_EQ(eval_at(Polynomial({1, 3, 5}), R(1, 5)), R(1) + R(3, 5) + R(1, 5));
}

TEST(PowerSums, SpecExamples) {
    EXPECT_EQ(power_sums(Polynomial({1, 3, 5}), 2), (std::vector<Rational>{-3, -1}));
    EXPECT_EQ(power_sums(Polynomial({1, -7}), 3), (std::vector<Rational>{7, 49, 343}));
    EXPECT_EQ(power_sums(Polynomial::one(), 2), (std::vector<Rational>{0, 0}));
    EXPECT_TRUE(power_sums(Polynomial({1, 3, 5}), 0).empty());
    EXPECT_THROW(power_sums(Polynomial({2, 1}), 2), NotNormalized);
}

TEST(PowerSums, MatchCompanionTraces) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Polynomial p = oracle::random_poly(rng, 6, -9, 9);
        EXPECT_EQ(power_sums(p, 7), oracle::trace_powers(p, 7)) << p.to_string();
    }
}

TEST(Tensor, SpecExamples) {
    EXPECT_EQ(tensor_poly(Polynomial({1, -2}), Polynomial({1, -3})), Polynomial({1, -6}));
    const Polynomial q{1, 3, 5};
    EXPECT_EQ(tensor_poly(Polynomial({1, -1}), q), q);
    EXPECT_EQ(tensor_poly(Polynomial({1, -1}) * Polynomial({1, -5}), Polynomial({1, -5})),
              Polynomial({1, -5}) * Polynomial({1, -25}));
    EXPECT_EQ(tensor_poly(Polynomial::one(), q), Polynomial::one());
    EXPECT_THROW(tensor_poly(Polynomial({2, 1}), q), NotNormalized);
}

TEST(Tensor, MatchesInterpolatedDeterminant) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const Polynomial p = oracle::random_poly(rng, 3, -5, 5), q = oracle::random_poly(rng, 3, -5, 5);
        const Polynomial t = tensor_poly(p, q);
        EXPECT_EQ(t, oracle::tensor_by_interpolation(p, q)) << p.to_string() << " (x) " << q.to_string();
        if (p.degree() > 0 && q.degree() > 0) {
            EXPECT_EQ(t.degree(), p.degree() * q.degree());
        }
    }
}

TEST(Tensor, PowerSumsMultiply) {
    // s_n(P (x) Q) = s_n(P) s_n(Q)
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const Polynomial p = oracle::random_poly(rng, 4, -5, 5), q = oracle::random_poly(rng, 4, -5, 5);
        const auto sp = power_sums(p, 5), sq = power_sums(q, 5), st = power_sums(tensor_poly(p, q), 5);
        for (std::size_t n = 0; n < 5; ++n) EXPECT_EQ(st[n], sp[n] * sq[n]);
    }
}

TEST(ScaleRoots, SpecExamples) {
    EXPECT_EQ(scale_roots(Polynomial({1, -1}), 5), Polynomial({1, -5}));
    EXPECT_EQ(scale_roots(Polynomial({1, 3, 5}), 1), Polynomial({1, 3, 5}));
    EXPECT_EQ(scale_roots(Polynomial({1, 3, 5}), R(1, 5)), Polynomial({1, R(3, 5), R(1, 5)}));
}

TEST(ReciprocalTwist, SpecExamples) {
    EXPECT_EQ(reciprocal_twist(Polynomial({1, 3, 5}), 5), Polynomial({1, 3, 5}));
    EXPECT_EQ(reciprocal_twist(Polynomial({1, -1}), 5), Polynomial({1, -5}));
    EXPECT_EQ(reciprocal_twist(Polynomial({1, -5}), 5), Polynomial({1, -1}));
    EXPECT_EQ(reciprocal_twist(Polynomial::one(), 5), Polynomial::one());
    EXPECT_THROW(reciprocal_twist(Polynomial({0, 1}), 5), ZeroRoot);
    EXPECT_THROW(reciprocal_twist(Polynomial({2, 1}), 5), NotNormalized);
}

TEST(ReciprocalTwist, RootsMapToCOverA) {
    // (1-2t)(1-3t) with c=6 -> roots 3, 2: same polynomial; with c=12 -> roots 6, 4
    const Polynomial p = Polynomial({1, -2}) * Polynomial({1, -3});
    EXPECT_EQ(reciprocal_twist(p, 6), p);
    EXPECT_EQ(reciprocal_twist(p, 12), Polynomial({1, -6}) * Polynomial({1, -4}));
}

TEST(Matrix, FaddeevLeVerrier) {
    Matrix a(2);
    a(0, 0) = 2;
    a(0, 1) = 1;
    a(1, 0) = 1;
    a(1, 1) = 3;
    // det(1 - tA) = 1 - 5t + 5t^2
    EXPECT_EQ(reversed_charpoly(a), (std::vector<Rational>{1, -5, 5}));
    EXPECT_EQ(reversed_charpoly(Matrix::identity(3)), (std::vector<Rational>{1, -3, 3, -1}));
    EXPECT_EQ(kronecker(Matrix::identity(2), Matrix::identity(3)), Matrix::identity(6));
}
