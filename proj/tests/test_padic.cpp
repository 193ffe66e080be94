#include "doctest.h"

#include "lpadic/padic.hpp"

#include <random>

using namespace lpadic;

namespace {

BigRational Q(long n, long d = 1) { return {BigInt(n), BigInt(d)}; }

PadicApprox P(const BigRational& q, unsigned long p, long N) { return PadicApprox::from_rational(q, p, N); }

}  // namespace

TEST_CASE("from_rational") {
    const auto half = P(Q(1, 2), 3, 4);
    CHECK(half.valuation() == 0);
    CHECK(half.unit() == 41);
    CHECK(P(Q(0), 3, 4).is_zero());
    CHECK(P(Q(0), 3, 4).valuation() == 4);
    const auto x = P(Q(4, 3), 3, 5);
    CHECK(x.valuation() == -1);
    CHECK(x.unit() == 4);
    CHECK(P(Q(81 * 5), 3, 4).is_zero());
    CHECK(P(Q(-1), 5, 3).render() == "4 + 4*5 + 4*5^2 + O(5^3)");
    CHECK(P(Q(0), 2, 64).render() == "0 + O(2^64)");
    CHECK_THROWS(P(Q(1, 27), 3, 3));
    CHECK_THROWS(PadicApprox::zero(6, 10));
}

TEST_CASE("arithmetic") {
    const unsigned long p = 7;
    const long N = 30;
    const BigRational a = Q(22, 49), b = Q(-3, 5);
    CHECK(P(a, p, N) + P(b, p, N) == P(a + b, p, N));
    CHECK(P(a, p, N) * P(b, p, N) == P(a * b, p, N).reduced((P(a, p, N) * P(b, p, N)).precision()));
    CHECK(P(b, p, N) / P(b, p, N) == P(Q(1), p, N));
    CHECK(P(b, p, N).pow(-3) == P(pow(b, -3), p, N));
    CHECK_THROWS(P(b, p, N) + P(b, 5, N));
    CHECK_THROWS(P(b, p, N) / P(Q(0), p, N));
}

TEST_CASE("teichmuller and angle") {
    CHECK(teichmuller(3, 2, 40) == P(Q(-1), 2, 40));
    CHECK(teichmuller(5, 2, 40) == P(Q(1), 2, 40));
    const auto w = teichmuller(7, 5, 6);
    CHECK(w.pow(4) == P(Q(1), 5, 6));
    CHECK(w.reduced(1) == P(Q(2), 5, 1));
    CHECK(teichmuller(6, 3, 10).is_zero());
    CHECK(angle(2, 5, 4).reduced(1) == P(Q(1), 5, 1));
    CHECK(angle(3, 2, 50) == P(Q(-3), 2, 50));
    CHECK(angle(2, 3, 50) == P(Q(-2), 3, 50));
    CHECK_THROWS(angle(6, 3, 10));
}

TEST_CASE("sum_series") {
    for (unsigned long p : {2UL, 3UL, 5UL}) {
        auto term = [p](std::size_t n) { return BigRational(pow(BigInt(static_cast<long>(p)), n)); };
        auto bound = [](std::size_t n) { return static_cast<long>(n); };
        CHECK(sum_series(term, bound, p, 10) == P(Q(1) / (Q(1) - Q(static_cast<long>(p))), p, 10));
    }
    auto zero = [](std::size_t) { return BigRational(); };
    auto linear = [](std::size_t n) { return static_cast<long>(n); };
    CHECK(sum_series(zero, linear, 3, 20).is_zero());
    auto stuck = [](std::size_t) { return 0L; };
    CHECK_THROWS_AS(sum_series(zero, stuck, 3, 5, {100}), PrecisionError);
    auto lying = [](std::size_t) { return BigRational(1); };
    CHECK_THROWS_AS(sum_series(lying, linear, 3, 5), std::logic_error);
    auto decreasing = [](std::size_t n) { return n == 2 ? 0L : static_cast<long>(n); };
    CHECK_THROWS_AS(sum_series(zero, decreasing, 3, 5), std::logic_error);
}

TEST_CASE("property: precision is never overstated") {
    std::mt19937 rng(19);
    std::uniform_int_distribution<long> num(-100000, 100000), den(1, 100000);
    for (unsigned long p : {2UL, 3UL, 5UL, 13UL}) {
        for (int trial = 0; trial < 40; ++trial) {
            const BigRational a = Q(num(rng), den(rng)), b = Q(num(rng) | 1, den(rng));
            const long N = 24;
            if (valuation(a.is_zero() ? Q(1) : a, p) <= -N || valuation(b, p) <= -N) continue;
            const auto A = P(a, p, N), B = P(b, p, N);
            const auto A2 = P(a, p, 2 * N), B2 = P(b, p, 2 * N);
            for (const auto& [lo, hi] : {std::pair{A * B, A2 * B2}, {A + B, A2 + B2}, {A - B, A2 - B2}, {A / B, A2 / B2}}) {
                CHECK(hi.precision() >= lo.precision());
                CHECK(hi.reduced(lo.precision()) == lo);
            }
            CHECK((A * B).reduced((A * B).precision()) == P(a * b, p, 2 * N).reduced((A * B).precision()));
            CHECK((A / B) == P(a / b, p, 2 * N).reduced((A / B).precision()));
        }
    }
}

TEST_CASE("property: teichmuller is a root of unity") {
    for (unsigned long p : {3UL, 5UL, 7UL, 11UL}) {
        for (long m = 1; m < 40; ++m) {
            if (m % static_cast<long>(p) == 0) continue;
            for (long N : {8L, 64L, 512L}) {
                const auto w = teichmuller(m, p, N);
                CHECK(w.pow(static_cast<long>(p - 1)) == P(Q(1), p, N));
                CHECK(w.reduced(1) == P(Q(m), p, 1));
            }
        }
    }
}

TEST_CASE("property: angle is a one-unit") {
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL}) {
        const long modulus_digits = p == 2 ? 2 : 1;
        for (long x = -30; x <= 30; ++x) {
            if (x % static_cast<long>(p) == 0) continue;
            CHECK(angle(x, p, 40).reduced(modulus_digits) == P(Q(1), p, modulus_digits));
        }
    }
}

TEST_CASE("property: summation is independent of grouping") {
    const unsigned long p = 3;
    const long N = 40;
    auto term = [](std::size_t n) { return BigRational(pow(BigInt(3), n)) * Q(static_cast<long>(n * n) + 1, 2 * static_cast<long>(n) + 5); };
    auto bound = [](std::size_t n) { return static_cast<long>(n) - 4; };
    const auto forward = sum_series(term, bound, p, N);
    std::size_t count = 0;
    while (bound(count) < N) ++count;
    const std::size_t chunk = 7;
    auto total = PadicApprox::zero(p, N);
    for (std::size_t end = count; end > 0;) {
        const std::size_t begin = end >= chunk ? end - chunk : 0;
        auto part = PadicApprox::zero(p, N);
        for (std::size_t n = end; n-- > begin;) part = part + P(term(n), p, N);
        total = total + part;
        end = begin;
    }
    CHECK(total == forward);
}
