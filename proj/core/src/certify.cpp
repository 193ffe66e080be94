#include "lpadic/certify.hpp"

#include "lpadic/bernoulli.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace lpadic {

namespace {

const BigRational kHalf{BigInt(1), BigInt(2)};

PolyQ poly(std::initializer_list<long> low_to_high) {
    std::vector<BigRational> c;
    for (long v : low_to_high) c.emplace_back(v);
    return PolyQ(std::move(c));
}

// A(1 - x)
LaurentTrunc reflect(const LaurentTrunc& a) { return laurent_shift(laurent_scale(a, BigRational(-1L)), BigRational(-1L)); }

// fc(k, x) fc(k, 1 - x) through order M; zero when 2k + 2 > M.
LaurentTrunc fc_product(unsigned k, int M) {
    const int order = 2 * static_cast<int>(k) + 2;
    if (order > M) return LaurentTrunc::zero(1, M);
    return (fc_laurent(k, FcVariant::X, M) * fc_laurent(k, FcVariant::OneMinusX, M)).truncated(M);
}

LaurentTrunc fc_single(unsigned k, int M) {
    if (static_cast<int>(k) + 1 > M) return LaurentTrunc::zero(1, M);
    return fc_laurent(k, FcVariant::X, M);
}

BigRational choose(long k, long n) {
    if (n < 0 || k < n) return BigRational{};
    BigRational r(1L);
    for (long i = 0; i < n; ++i) r = r * BigRational(k - i) / BigRational(i + 1);
    return r;
}

// k(k-1)...(k-n+1) / ((k+1)(k+2)...(k+n+1))
BigRational falling_over_rising(long k, long n) {
    BigRational r(1L);
    for (long i = 0; i < n; ++i) r *= BigRational(k - i);
    for (long i = 1; i <= n + 1; ++i) r /= BigRational(k + i);
    return r;
}

PolyQ pade_poly_p(Family f, int n) {
    const auto rows = convergent_seq(f, PolyQ::variable(), n);
    return rows.back().p;
}

PolyQ pade_poly_q(Family f, int n) {
    const auto rows = convergent_seq(f, PolyQ::variable(), n);
    return rows.back().q;
}

}  // namespace

CheckResult compare_series(std::string id, std::string statement, const LaurentTrunc& lhs, const LaurentTrunc& rhs,
                           bool quoted) {
    CheckResult r;
    r.id = std::move(id);
    r.statement = std::move(statement);
    r.quoted = quoted;
    const LaurentTrunc d = lhs - rhs;
    r.verified_order = d.trunc_order();
    const int lead = d.leading_order();
    r.passed = lead > d.trunc_order();
    if (!r.passed) {
        r.first_failing_order = lead;
        r.first_failing_coefficient = d.coeff(lead).to_string();
    }
    return r;
}

std::vector<CheckResult> check_functional_equations(int M) {
    if (M < 8) throw std::invalid_argument("check_functional_equations: M must be at least 8");
    const LaurentTrunc R = series_laurent(SeriesKind::R, M);
    const LaurentTrunc T = series_laurent(SeriesKind::T, M);
    const LaurentTrunc Th = series_laurent(SeriesKind::Theta, M);
    const BigRational one(1L);

    const LaurentTrunc R_half = laurent_scale(R, kHalf);
    const LaurentTrunc R_half_shift = laurent_shift(R_half, one);  // R((x+1)/2)

    std::vector<CheckResult> out;
    out.push_back(compare_series("R_shift", "R(x+1) - R(x) = 1/x^2", laurent_shift(R, one) - R,
                                 LaurentTrunc::monomial(one, 2, M)));
    out.push_back(compare_series("R_reflect", "R(x) + R(1-x) = 0", R + reflect(R), LaurentTrunc::zero(1, M)));
    out.push_back(compare_series("R_duplication", "R(x) + R(x+1/2) = 4R(2x)", R + laurent_shift(R, kHalf),
                                 laurent_scale(R, BigRational(2L)).scaled(BigRational(4L))));
    out.push_back(compare_series("T_shift", "T(x+1) - T(x) = -2/x^3", laurent_shift(T, one) - T,
                                 LaurentTrunc::monomial(BigRational(-2L), 3, M)));
    out.push_back(compare_series("T_reflect", "T(x) = T(1-x)", T, reflect(T)));
    out.push_back(compare_series("Theta_shift", "Theta(x+1) + Theta(x) = -2/x^2", laurent_shift(Th, one) + Th,
                                 LaurentTrunc::monomial(BigRational(-2L), 2, M)));
    out.push_back(compare_series("Theta_halves", "Theta(x) = R(x/2) - R(x/2+1/2)", Th, R_half - R_half_shift));

    out.push_back(compare_series("Theta_definition", "Theta(x) = R(x/2) - 2R(x)", Th,
                                 R_half - R.scaled(BigRational(2L)), false));
    out.push_back(compare_series("T_derivative", "T(x) = R'(x)", T, R.derivative().truncated(M), false));
    out.push_back(compare_series("Theta_halves_halved", "Theta(x) = (R(x/2) - R(x/2+1/2))/2", Th,
                                 (R_half - R_half_shift).scaled(kHalf), false));
    return out;
}

std::vector<CheckResult> check_fc_identities(int M, int K) {
    if (M < 2) throw std::invalid_argument("check_fc_identities: M must be at least 2");
    if (K < M) throw std::invalid_argument("check_fc_identities: K must be at least M");
    LaurentTrunc prod = LaurentTrunc::zero(1, M);
    LaurentTrunc r_sum = LaurentTrunc::zero(1, M);
    LaurentTrunc t_sum = LaurentTrunc::zero(1, M);
    LaurentTrunc th_sum = LaurentTrunc::zero(1, M);
    BigRational two_pow(1L);
    for (int k = 0; k <= K; ++k) {
        const auto uk = static_cast<unsigned>(k);
        const BigRational w = BigRational(1L) / BigRational(k + 1);
        const LaurentTrunc pk = fc_product(uk, M);
        const LaurentTrunc fk = fc_single(uk, M);
        prod = prod + pk;
        t_sum = t_sum + pk.scaled(w);
        r_sum = r_sum + fk.scaled(w);
        th_sum = th_sum + fk.scaled(BigRational(1L) / two_pow);
        two_pow *= BigRational(2L);
    }
    std::vector<CheckResult> out;
    out.push_back(compare_series("Theta_fc", "Theta(x) = -sum fc(n,x) fc(n,1-x)",
                                 series_laurent(SeriesKind::Theta, M), -prod));
    out.push_back(compare_series("R_fc", "R(x) = -sum 1/(k+1) fc(k,x)", series_laurent(SeriesKind::R, M), -r_sum));
    out.push_back(compare_series("T_fc", "T(x) = -sum 1/(k+1) fc(k,x) fc(k,1-x)", series_laurent(SeriesKind::T, M),
                                 -t_sum));
    out.push_back(compare_series("theta_fc", "theta(x) = sum 2^-k fc(k,x)", series_laurent(SeriesKind::ThetaSmall, M),
                                 th_sum));
    out.push_back(compare_series("Theta_fc_positive", "Theta(x) = +sum fc(n,x) fc(n,1-x)",
                                 series_laurent(SeriesKind::Theta, M), prod, false));
    return out;
}

PadeOrderResult check_pade_order(Family f, int n, int M, int target_sign) {
    if (n < 0) throw std::invalid_argument("check_pade_order: n must be nonnegative");
    if (target_sign != 1 && target_sign != -1) throw std::invalid_argument("check_pade_order: sign must be +1 or -1");
    PadeOrderResult res;
    res.family = f;
    res.n = n;
    res.order = pade_order(f, n);
    res.target_sign = target_sign;
    if (M < res.order + 4) throw std::invalid_argument("check_pade_order: M must be at least order + 4");

    const PolyQ p = pade_poly_p(f, n);
    const PolyQ q = pade_poly_q(f, n);
    const int loss = std::max(q.degree(), 0);
    const LaurentTrunc s = series_laurent(family_series(f), M + loss).scaled(BigRational(target_sign));
    const LaurentTrunc rem = LaurentTrunc::from_poly(p, M) - s.times(q).truncated(M);

    res.verified_through = rem.trunc_order();
    const int lead = rem.leading_order();
    if (lead <= rem.trunc_order()) {
        res.leading_order = lead;
        res.leading_coefficient = rem.coeff(lead);
    }
    res.passed = lead >= res.order;
    return res;
}

LaurentTrunc remainder_sum(Family f, int n, int M, int K) {
    if (n < 0 || K < n) throw std::invalid_argument("remainder_sum: need 0 <= n <= K");
    LaurentTrunc acc = LaurentTrunc::zero(1, M);
    BigRational two_pow = pow(BigRational(2L), n);
    for (int k = n; k <= K; ++k) {
        const auto uk = static_cast<unsigned>(k);
        switch (f) {
            case Family::I: acc = acc + fc_product(uk, M).scaled(choose(k, n)); break;
            case Family::II: acc = acc + fc_single(uk, M).scaled(falling_over_rising(k, n)); break;
            case Family::III: acc = acc + fc_product(uk, M).scaled(falling_over_rising(k, n)); break;
            case Family::IV: acc = acc + fc_single(uk, M).scaled(choose(k, n) / two_pow); break;
        }
        two_pow *= BigRational(2L);
    }
    return n % 2 == 0 ? acc : -acc;
}

std::vector<CheckResult> check_base_cases(int K, int M) {
    if (M < 4 || K < M + 2) throw std::invalid_argument("check_base_cases: need M >= 4 and K >= M + 2");
    std::vector<CheckResult> out;
    struct Case {
        Family f;
        const char* id;
        const char* statement;
        PolyQ b;
        long rhs;
    };
    const Case cases[] = {
        {Family::I, "base_I", "-(x^2-x+1) Theta(0,x) + Theta(1,x) = 1", poly({1, -1, 1}), 1},
        {Family::II, "base_II", "-(2x-1) R(0,x) + R(1,x) = 2", poly({-1, 2}), 2},
        {Family::III, "base_III", "-(2x^2-2x+1) T(0,x) + T(1,x) = 2", poly({1, -2, 2}), 2},
    };
    for (const auto& c : cases) {
        const int Mw = M + c.b.degree();
        const LaurentTrunc r0 = remainder_sum(c.f, 0, Mw, K);
        const LaurentTrunc r1 = remainder_sum(c.f, 1, M, K);
        const LaurentTrunc lhs = -r0.times(c.b).truncated(M) + r1;
        out.push_back(compare_series(c.id, c.statement, lhs, LaurentTrunc::from_poly(PolyQ(BigRational(c.rhs)), M)));
        if (!out.back().passed) {
            std::string negated = c.statement;
            negated.replace(negated.rfind('=') + 2, std::string::npos, std::to_string(-c.rhs));
            out.push_back(compare_series(std::string(c.id) + "_negated_rhs", negated, lhs,
                                         LaurentTrunc::from_poly(PolyQ(BigRational(-c.rhs)), M), false));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------------------------

namespace sym {
Poly3 k() { return Poly3::variable(); }
Poly3 n() { return Poly3(Polynomial<PolyQ>::variable()); }
Poly3 x() { return Poly3(Polynomial<PolyQ>(PolyQ::variable())); }
Poly3 c(long v) { return Poly3(Polynomial<PolyQ>(PolyQ(BigRational(v)))); }
Poly3 c(const BigRational& v) { return Poly3(Polynomial<PolyQ>(PolyQ(v))); }
}  // namespace sym

RatFunc3::RatFunc3(Poly3 num, Poly3 den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("RatFunc3: zero denominator");
}

RatFunc3 operator+(const RatFunc3& a, const RatFunc3& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RatFunc3 operator-(const RatFunc3& a, const RatFunc3& b) { return a + RatFunc3(-b.num_, b.den_); }

RatFunc3 operator*(const RatFunc3& a, const RatFunc3& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }

RatFunc3 operator/(const RatFunc3& a, const RatFunc3& b) {
    if (b.num_.is_zero()) throw std::invalid_argument("RatFunc3: division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

bool operator==(const RatFunc3& a, const RatFunc3& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

RatFunc3 RatFunc3::k_shifted() const {
    const Polynomial<PolyQ> one(1L);
    return {num_.shifted(one), den_.shifted(one)};
}

namespace {

using namespace sym;

RatFunc3 factor_ratio_k(TermFactor t) {
    switch (t) {
        case TermFactor::SignN: return c(1);
        case TermFactor::BinomialKN: return {k() + c(1), k() + c(1) - n()};
        case TermFactor::FcX: return {k() + c(1), x() + k() + c(1)};
        case TermFactor::FcOneMinusX: return {k() + c(1), k() + c(2) - x()};
        case TermFactor::FcXPlusOne: return {k() + c(1), x() + k() + c(2)};
        case TermFactor::NFactorialRising: return {k() + c(1), k() + n() + c(2)};
    }
    throw std::logic_error("factor_ratio_k: unreachable");
}

RatFunc3 factor_ratio_n_plus(TermFactor t) {
    switch (t) {
        case TermFactor::SignN: return c(-1);
        case TermFactor::BinomialKN: return {k() - n(), n() + c(1)};
        case TermFactor::NFactorialRising: return {n() + c(1), k() + n() + c(2)};
        default: return c(1);
    }
}

RatFunc3 factor_ratio_n_minus(TermFactor t) {
    switch (t) {
        case TermFactor::SignN: return c(-1);
        case TermFactor::BinomialKN: return {n(), k() - n() + c(1)};
        case TermFactor::NFactorialRising: return {k() + n() + c(1), n()};
        default: return c(1);
    }
}

template <class Fn>
RatFunc3 product_of(const std::vector<TermFactor>& term, Fn fn) {
    RatFunc3 r = c(1);
    for (auto t : term) r = r * fn(t);
    return r;
}

Poly3 sq(const Poly3& p) { return p * p; }

struct CatalogParts {
    CertificateCase zeil_I, zeil_II, zeil_III, gosper_shift, gosper_product, gosper_product_n;
};

CatalogParts catalog_parts() {
    CatalogParts cp;
    const Poly3 two_n_plus_1 = c(2) * n() + c(1);

    cp.zeil_I.id = "zeilberger_I";
    cp.zeil_I.statement =
        "n^2 F(k,n-1) - (x^2-x+2n^2+2n+1) F(k,n) + (n+1)^2 F(k,n+1) = Delta_k(F(k,n)(x+k)(k+1-x)), "
        "F = (-1)^n C(k,n) fc(k,x) fc(k,1-x)";
    cp.zeil_I.term = {TermFactor::SignN, TermFactor::BinomialKN, TermFactor::FcX, TermFactor::FcOneMinusX};
    cp.zeil_I.coeff_minus = sq(n());
    cp.zeil_I.coeff_zero = -(sq(x()) - x() + c(2) * sq(n()) + c(2) * n() + c(1));
    cp.zeil_I.coeff_plus = sq(n() + c(1));
    cp.zeil_I.multiplier = (x() + k()) * (k() + c(1) - x());

    cp.zeil_II.id = "zeilberger_II";
    cp.zeil_II.statement =
        "-n^2 F(k,n-1) - (2n+1)(2x-1) F(k,n) + (n+1)^2 F(k,n+1) = Delta_k(2F(k,n)(x+k)(2n+1)), "
        "F = (-1)^n n!/((k+1)...(k+n+1)) C(k,n) fc(k,x)";
    cp.zeil_II.term = {TermFactor::SignN, TermFactor::NFactorialRising, TermFactor::BinomialKN, TermFactor::FcX};
    cp.zeil_II.coeff_minus = -sq(n());
    cp.zeil_II.coeff_zero = -(two_n_plus_1 * (c(2) * x() - c(1)));
    cp.zeil_II.coeff_plus = sq(n() + c(1));
    cp.zeil_II.multiplier = c(2) * (x() + k()) * two_n_plus_1;

    cp.zeil_III.id = "zeilberger_III";
    cp.zeil_III.statement =
        "n^3 F(k,n-1) - (2n+1)(2x^2-2x+n^2+n+1) F(k,n) + (n+1)^3 F(k,n+1) = "
        "Delta_k(2F(k,n)(x+k)(1-x+k)(2n+1)), F = (-1)^n n!/((k+1)...(k+n+1)) C(k,n) fc(k,x) fc(k,1-x)";
    cp.zeil_III.term = {TermFactor::SignN, TermFactor::NFactorialRising, TermFactor::BinomialKN, TermFactor::FcX,
                        TermFactor::FcOneMinusX};
    cp.zeil_III.coeff_minus = sq(n()) * n();
    cp.zeil_III.coeff_zero = -(two_n_plus_1 * (c(2) * sq(x()) - c(2) * x() + sq(n()) + n() + c(1)));
    cp.zeil_III.coeff_plus = sq(n() + c(1)) * (n() + c(1));
    cp.zeil_III.multiplier = c(2) * (x() + k()) * (c(1) - x() + k()) * two_n_plus_1;

    cp.gosper_shift.id = "gosper_fc_shift";
    cp.gosper_shift.statement = "fc(k,x+1) = -(1/x) Delta_k((1+k+x) fc(k,x+1))";
    cp.gosper_shift.term = {TermFactor::FcXPlusOne};
    cp.gosper_shift.coeff_zero = c(1);
    cp.gosper_shift.multiplier = RatFunc3(-(c(1) + k() + x()), x());

    cp.gosper_product.id = "gosper_fc_product";
    cp.gosper_product.statement = "fc(k,1+x) fc(k,1-x) = (-1/x^2) Delta_k((x^2-(k+1)^2) fc(k,x+1) fc(k,1-x))";
    cp.gosper_product.term = {TermFactor::FcXPlusOne, TermFactor::FcOneMinusX};
    cp.gosper_product.coeff_zero = c(1);
    cp.gosper_product.multiplier = RatFunc3(-(sq(x()) - sq(k() + c(1))), sq(x()));

    // Summation variable n, written here as k.
    cp.gosper_product_n.id = "gosper_fc_product_n";
    cp.gosper_product_n.statement =
        "fc(n,x+1) fc(n,1-x) = Delta_n((n+1-x)(n+1+x)/x^2 fc(n,1-x) fc(n,1+x))";
    cp.gosper_product_n.term = {TermFactor::FcXPlusOne, TermFactor::FcOneMinusX};
    cp.gosper_product_n.coeff_zero = c(1);
    cp.gosper_product_n.multiplier = RatFunc3((k() + c(1) - x()) * (k() + c(1) + x()), sq(x()));
    return cp;
}

CertificateCase mutate(const CertificateCase& base, std::string suffix, RatFunc3 multiplier) {
    CertificateCase m = base;
    m.id = base.id + "_mutant_" + std::move(suffix);
    m.multiplier = std::move(multiplier);
    return m;
}

}  // namespace

RatFunc3 ratio_k(const std::vector<TermFactor>& term) { return product_of(term, factor_ratio_k); }
RatFunc3 ratio_n_plus(const std::vector<TermFactor>& term) { return product_of(term, factor_ratio_n_plus); }
RatFunc3 ratio_n_minus(const std::vector<TermFactor>& term) { return product_of(term, factor_ratio_n_minus); }

bool verify_certificate(const CertificateCase& cc) {
    if (cc.multiplier.den().is_zero()) throw std::invalid_argument("verify_certificate: zero denominator");
    RatFunc3 lhs = cc.coeff_zero;
    if (!cc.coeff_minus.is_zero()) lhs = lhs + RatFunc3(cc.coeff_minus) * ratio_n_minus(cc.term);
    if (!cc.coeff_plus.is_zero()) lhs = lhs + RatFunc3(cc.coeff_plus) * ratio_n_plus(cc.term);
    const RatFunc3 rhs = cc.multiplier.k_shifted() * ratio_k(cc.term) - cc.multiplier;
    return lhs == rhs;
}

CertificateOutcome check_certificate(const CertificateCase& c) {
    CertificateOutcome o{c.id, c.statement, verify_certificate(c), false};
    CertificateCase neg = c;
    neg.multiplier = RatFunc3(-c.multiplier.num(), c.multiplier.den());
    o.negated_multiplier_verifies = verify_certificate(neg);
    return o;
}

std::vector<CertificateCase> certificate_catalog() {
    auto cp = catalog_parts();
    return {cp.zeil_I, cp.zeil_II, cp.zeil_III, cp.gosper_shift, cp.gosper_product, cp.gosper_product_n};
}

std::vector<CertificateCase> mutated_certificates() {
    const auto cp = catalog_parts();
    const Poly3 two_n_plus_1 = c(2) * n() + c(1);
    return {
        mutate(cp.zeil_I, "k_minus_x", (x() + k()) * (k() - x())),
        mutate(cp.zeil_I, "x_plus_k_plus_1", (x() + k() + c(1)) * (k() + c(1) - x())),
        mutate(cp.zeil_II, "2n_plus_3", c(2) * (x() + k()) * (c(2) * n() + c(3))),
        mutate(cp.zeil_II, "no_factor_2", (x() + k()) * two_n_plus_1),
        mutate(cp.zeil_III, "x_plus_k_squared", c(2) * (x() + k()) * (x() + k()) * two_n_plus_1),
        mutate(cp.zeil_III, "no_factor_2", (x() + k()) * (c(1) - x() + k()) * two_n_plus_1),
        mutate(cp.gosper_shift, "2_plus_k_plus_x", RatFunc3(-(c(2) + k() + x()), x())),
        mutate(cp.gosper_product, "x2_minus_k2", RatFunc3(-(sq(x()) - sq(k())), sq(x()))),
        mutate(cp.gosper_product_n, "plus_x2", RatFunc3(sq(k() + c(1)) + sq(x()), sq(x()))),
    };
}

}  // namespace lpadic
