#include "doctest.h"

#include "lpadic/lvalues.hpp"

#include <cstdio>
#include <fstream>
#include <numeric>

using namespace lpadic;

namespace {

BigRational Q(long n, long d = 1) { return {BigInt(n), BigInt(d)}; }

PadicApprox P(const BigRational& q, unsigned long p, long N) { return PadicApprox::from_rational(q, p, N); }

long v_diff(const PadicApprox& a, const PadicApprox& b) { return (a - b).valuation(); }

// -omega(a)^-n B_n(a,F) / n, the value H_p(1-n, a, F) should interpolate.
PadicApprox interpolated(long n, long a, long F, unsigned long p, long N) {
    const auto w = teichmuller(a, p, N + 20);
    const auto rhs = P(bernoulli_aF(static_cast<unsigned>(n), a, F) / BigRational(n), p, N + 20) / w.pow(n);
    return (-rhs).reduced(N);
}

const std::vector<EvalPoint>& dual_points() {
    static const std::vector<EvalPoint> pts = {
        EvalPoint::make(1, 2, 2), EvalPoint::make(1, 4, 2), EvalPoint::make(3, 4, 2), EvalPoint::make(1, 8, 2),
        EvalPoint::make(1, 3, 3), EvalPoint::make(2, 3, 3), EvalPoint::make(1, 6, 3), EvalPoint::make(1, 5, 5),
    };
    return pts;
}

}  // namespace

TEST_CASE("evaluation points") {
    CHECK(EvalPoint::make(1, 4, 2).r() == 2);
    CHECK(EvalPoint::make(3, 8, 2).x() == Q(3, 8));
    CHECK_THROWS_AS(EvalPoint::make(2, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(EvalPoint::make(1, 5, 2), std::invalid_argument);
    CHECK_THROWS_AS(EvalPoint::make(5, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(EvalPoint::make(1, 4, 4), std::invalid_argument);
    CHECK_NOTHROW(EvalPoint::make(2, 6, 3));
}

TEST_CASE("characters") {
    for (const auto& name : CharacterSpec::builtin_names()) {
        const auto chi = CharacterSpec::builtin(name);
        const long f = chi.modulus();
        CAPTURE(name);
        for (long m = 0; m < 3 * f; ++m) {
            for (long n = 0; n < 3 * f; ++n) CHECK(chi(m * n) == chi(m) * chi(n));
            if (std::gcd(m, f) != 1) CHECK(chi(m) == 0);
        }
        CHECK(chi.is_even() == (chi(f - 1) == 1));
    }
    CHECK_FALSE(CharacterSpec::builtin("chi4").is_even());
    CHECK(CharacterSpec::builtin("chi8")(3) == -1);
    CHECK(CharacterSpec::builtin("chi12")(5) == -1);
    CHECK(CharacterSpec::builtin("chi5")(4) == 1);
    CHECK_THROWS_AS(CharacterSpec("bad", 4, {0, 1, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(CharacterSpec::builtin("chi7"), std::invalid_argument);
}

TEST_CASE("characters from INI") {
    const std::string path = "lvalues_chars.ini";
    {
        std::ofstream out(path);
        out << "[defaults]\nN = 64\n[chi3]\n1 = 1\n2 = -1\n[odd]\nmodulus = 4\n1 = 1\n3 = -1\n";
    }
    const auto chars = load_characters(path);
    REQUIRE(chars.count("chi3") == 1);
    CHECK(chars.at("chi3")(5) == -1);
    CHECK(chars.at("odd").modulus() == 4);
    CHECK_FALSE(chars.at("odd").is_even());
    {
        std::ofstream out(path);
        out << "[chi3]\n1 = 1\n2 = 7\n";
    }
    CHECK_THROWS_AS(load_characters(path), std::invalid_argument);
    std::remove(path.c_str());
}

TEST_CASE("vanishing values") {
    CHECK(eval_series(SeriesKind::R, EvalPoint::make(1, 2, 2), 64).is_zero());
    CHECK(eval_series_fc(SeriesKind::R, EvalPoint::make(1, 2, 2), 32).is_zero());
    CHECK(hurwitz_p(2, 1, 2, 2, 64).is_zero());
    CHECK(lp(2, CharacterSpec::builtin("chi4"), 2, 64).is_zero());
}

TEST_CASE("reflection and sums") {
    CHECK(eval_series(SeriesKind::T, EvalPoint::make(1, 4, 2), 60) == eval_series(SeriesKind::T, EvalPoint::make(3, 4, 2), 60));
    CHECK(zeta_p(2, 2, 60) == hurwitz_p(2, 1, 4, 2, 60) + hurwitz_p(2, 3, 4, 2, 60));
    CHECK(zeta_p(2, 3, 60) == hurwitz_p(2, 1, 3, 3, 60) + hurwitz_p(2, 2, 3, 3, 60));
    CHECK_THROWS_AS(hurwitz_p(1, 1, 3, 3, 20), std::invalid_argument);
    CHECK_THROWS_AS(hurwitz_p(2, 3, 3, 3, 20), std::invalid_argument);
    CHECK_THROWS_AS(eval_series_fc(SeriesKind::ThetaSmall, EvalPoint::make(1, 2, 2), 20), std::invalid_argument);
}

TEST_CASE("quoted identities") {
    for (const std::string id : {"cohen3", "cohen4", "valuesat3_1", "valuesat3_2"}) {
        const auto r = verify_identity(id, 128);
        CAPTURE(id);
        CHECK(r.passed);
        CHECK(r.valuation_difference >= 120);
        CHECK(r.matched_sign == "stated");
    }
    // printed with zeta - L; holds with zeta + L
    const auto r5 = verify_identity("valuesat3_5", 128);
    CHECK_FALSE(r5.passed);
    CHECK(r5.matched_form == "flipped-character");
    CHECK(r5.valuation_difference_flipped >= 120);
    const auto r1 = verify_identity("cohen1", 128);
    CHECK(r1.passed);
    CHECK(r1.matched_sign != "none");
    CHECK(identity_ids().size() == 11);
    CHECK_THROWS_AS(verify_identity("cohen9", 64), std::invalid_argument);
    CHECK_THROWS_AS(verify_identity("cohen3", 8), std::invalid_argument);
}

TEST_CASE("zeta values agree with a limit of interpolated negative-integer values") {
    // s' = 1 - n with n = 1 - s + (p-1) p^k is p-adically close to s, so H_p(s') ~ H_p(s).
    struct Case { unsigned long p; long a, F, s, k; };
    for (const auto& c : {Case{3, 1, 3, 2, 4}, Case{3, 2, 3, 3, 4}, Case{5, 2, 5, 2, 3}, Case{2, 1, 4, 2, 7},
                          Case{2, 3, 4, 3, 7}, Case{3, 1, 6, 2, 4}}) {
        const long period = c.p == 2 ? (1L << c.k) : static_cast<long>(c.p - 1) * pow(BigInt(static_cast<long>(c.p)), static_cast<unsigned long>(c.k)).get_si();
        const long n = 1 - c.s + period;
        const long r = valuation(BigInt(c.F), c.p);
        const long digits = c.k - 1 - r - valuation(BigInt(c.s - 1), c.p);
        CAPTURE(c.p);
        CAPTURE(c.a);
        CAPTURE(c.F);
        CAPTURE(c.s);
        CHECK(v_diff(hurwitz_p(c.s, c.a, c.F, c.p, 30), interpolated(n, c.a, c.F, c.p, 30)) >= digits);
    }
}

TEST_CASE("property: interpolation of Bernoulli values") {
    struct Pt { unsigned long p; long a, F; };
    const long N = 60;
    for (const auto& pt : {Pt{2, 1, 4}, Pt{2, 3, 4}, Pt{3, 1, 3}, Pt{3, 2, 3}, Pt{5, 2, 5}, Pt{3, 1, 6}, Pt{2, 1, 8}}) {
        for (long n = 1; n <= 20; ++n) {
            const long loss = valuation(BigInt(n), pt.p) + 1;
            CAPTURE(pt.p);
            CAPTURE(pt.a);
            CAPTURE(pt.F);
            CAPTURE(n);
            CHECK(v_diff(hurwitz_p(1 - n, pt.a, pt.F, pt.p, N), interpolated(n, pt.a, pt.F, pt.p, N)) >= N - loss);
        }
    }
}

TEST_CASE("property: dual-path agreement") {
    const long N = 48;
    for (const auto& pt : dual_points()) {
        for (auto kind : {SeriesKind::Theta, SeriesKind::R, SeriesKind::T, SeriesKind::ThetaSmall}) {
            if (kind == SeriesKind::ThetaSmall && pt.p == 2) continue;
            CAPTURE(pt.to_string());
            const std::string kind_name = to_string(kind);
            CAPTURE(kind_name);
            CHECK(eval_series(kind, pt, N) == eval_series_fc(kind, pt, N));
        }
    }
}

TEST_CASE("property: Hurwitz consistency") {
    const long N = 64;
    for (const auto& pt : dual_points()) {
        const auto w = teichmuller(pt.a, pt.p, N + 20);
        const BigRational F(pt.F);
        const auto R = (hurwitz_p(2, pt.a, pt.F, pt.p, N + 20) / w).scaled(-F * F).reduced(N);
        const auto T = (hurwitz_p(3, pt.a, pt.F, pt.p, N + 20) / w.pow(2)).scaled(Q(2) * F * F * F).reduced(N);
        CAPTURE(pt.to_string());
        CHECK(eval_series(SeriesKind::R, pt, N) == R);
        CHECK(eval_series(SeriesKind::T, pt, N) == T);
    }
}

TEST_CASE("property: period stability") {
    const long N = 48;
    for (const char* name : {"chi8", "chi12", "chi5", "chi4", "trivial"}) {
        const auto chi = CharacterSpec::builtin(name);
        for (unsigned long p : {2UL, 3UL, 5UL}) {
            for (long s : {2L, 3L, -3L}) {
                const auto base = lp(s, chi, p, N);
                CAPTURE(name);
                CAPTURE(p);
                CAPTURE(s);
                CHECK(lp(s, chi, p, N, 2) == base);
                CHECK(lp(s, chi, p, N, 3) == base);
            }
        }
    }
}

TEST_CASE("property: precision doubling") {
    const long N = 40;
    for (const auto& pt : dual_points()) {
        for (auto kind : {SeriesKind::Theta, SeriesKind::R, SeriesKind::T}) {
            CHECK(eval_series(kind, pt, 2 * N).reduced(N) == eval_series(kind, pt, N));
        }
        CHECK(hurwitz_p(3, pt.a, pt.F, pt.p, 2 * N).reduced(N) == hurwitz_p(3, pt.a, pt.F, pt.p, N));
    }
    CHECK(lp(2, CharacterSpec::builtin("chi8"), 2, 2 * N).reduced(N) == lp(2, CharacterSpec::builtin("chi8"), 2, N));
}
