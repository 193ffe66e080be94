#include "lpadic/irrat.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lpadic {

BigInt mu_F(long n, long F) {
    if (F < 2) throw std::invalid_argument("mu_F: F must be at least 2");
    if (n < 0) throw std::invalid_argument("mu_F: n must be nonnegative");
    BigInt m = pow(BigInt(F), static_cast<unsigned long>(n));
    for (unsigned long q : prime_divisors(static_cast<unsigned long>(F)))
        m *= pow(BigInt(q), static_cast<unsigned long>(n) / (q - 1));
    return m;
}

std::vector<PochhammerRow> pochhammer_denominator_check(long a, long F, long nMax) {
    if (F < 2) throw std::invalid_argument("pochhammer_denominator_check: F must be at least 2");
    if (std::gcd(a, F) != 1) throw std::invalid_argument("pochhammer_denominator_check: a/F must be in lowest terms");
    const BigRational beta{BigInt(a), BigInt(F)};
    const auto primes = prime_divisors(static_cast<unsigned long>(F));
    std::vector<PochhammerRow> rows;
    BigRational term(1L);
    for (long n = 0; n <= nMax; ++n) {
        if (n > 0) term = term * (beta + BigRational(n - 1)) / BigRational(n);
        PochhammerRow row;
        row.n = n;
        row.denominator = term.den();
        row.mu = mu_F(n, F);
        row.divides = row.mu % row.denominator == 0;
        row.valuation_bound_met = true;
        if (n > 0) {
            for (unsigned long q : primes) {
                // v >= n r + n/(q-1) - log_q n - 1  <=>  q^E n^(q-1) >= 1 with E = (v + 1 - n r)(q-1) - n
                const long v = valuation(row.denominator, q);
                const long r = valuation(BigInt(F), q);
                const long E = (v + 1 - n * r) * static_cast<long>(q - 1) - n;
                if (E < 0 && pow(BigInt(n), q - 1) < prime_power(q, -E)) row.valuation_bound_met = false;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

const char* to_string(Condition c) {
    switch (c) {
        case Condition::A: return "A";
        case Condition::B: return "B";
        case Condition::C: return "C";
    }
    return "?";
}

Condition parse_condition(const std::string& s) {
    if (s == "A" || s == "a") return Condition::A;
    if (s == "B" || s == "b") return Condition::B;
    if (s == "C" || s == "c") return Condition::C;
    throw std::invalid_argument("unknown condition '" + s + "' (expected A, B or C)");
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        case Verdict::TooClose: return "too-close";
    }
    return "?";
}

namespace {

class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    ~Mpfr() { mpfr_clear(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

// Enclosure [lo, hi] of a sum of terms c * log(q) / d.
struct Interval {
    Mpfr lo, hi;
    explicit Interval(mpfr_prec_t prec) : lo(prec), hi(prec) {}

    void add_log_ratio(unsigned long q, long num, long den, mpfr_prec_t prec) {
        Mpfr t(prec);
        mpfr_log_ui(t.get(), q, MPFR_RNDD);
        mpfr_mul_si(t.get(), t.get(), num, MPFR_RNDD);
        mpfr_div_si(t.get(), t.get(), den, MPFR_RNDD);
        mpfr_add(lo.get(), lo.get(), t.get(), MPFR_RNDD);
        mpfr_log_ui(t.get(), q, MPFR_RNDU);
        mpfr_mul_si(t.get(), t.get(), num, MPFR_RNDU);
        mpfr_div_si(t.get(), t.get(), den, MPFR_RNDU);
        mpfr_add(hi.get(), hi.get(), t.get(), MPFR_RNDU);
    }
    void add_rational(long num, long den) {
        Mpfr t(mpfr_get_prec(lo.get()));
        mpfr_set_si(t.get(), num, MPFR_RNDD);
        mpfr_div_si(t.get(), t.get(), den, MPFR_RNDD);
        mpfr_add(lo.get(), lo.get(), t.get(), MPFR_RNDD);
        mpfr_set_si(t.get(), num, MPFR_RNDU);
        mpfr_div_si(t.get(), t.get(), den, MPFR_RNDU);
        mpfr_add(hi.get(), hi.get(), t.get(), MPFR_RNDU);
    }
};

std::string decimal(mpfr_srcptr v, long digits) {
    mpfr_exp_t exp = 0;
    char* s = mpfr_get_str(nullptr, &exp, 10, static_cast<std::size_t>(digits), v, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    std::string sign;
    if (!mant.empty() && mant[0] == '-') {
        sign = "-";
        mant.erase(0, 1);
    }
    if (mpfr_zero_p(v)) return "0";
    std::string out;
    if (exp <= 0) {
        out = "0." + std::string(static_cast<std::size_t>(-exp), '0') + mant;
    } else if (static_cast<std::size_t>(exp) >= mant.size()) {
        out = mant + std::string(static_cast<std::size_t>(exp) - mant.size(), '0');
    } else {
        out = mant.substr(0, static_cast<std::size_t>(exp)) + "." + mant.substr(static_cast<std::size_t>(exp));
    }
    return sign + out;
}

std::string scientific(mpfr_srcptr v) {
    char buf[64];
    mpfr_snprintf(buf, sizeof buf, "%.3Re", v);
    return buf;
}

void midpoint_and_radius(const Interval& iv, Mpfr& mid, Mpfr& rad) {
    mpfr_add(mid.get(), iv.lo.get(), iv.hi.get(), MPFR_RNDN);
    mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
    mpfr_sub(rad.get(), iv.hi.get(), iv.lo.get(), MPFR_RNDU);
    mpfr_div_2ui(rad.get(), rad.get(), 1, MPFR_RNDU);
}

}  // namespace

ConditionReport condition(Condition which, unsigned long p, long F, long digits) {
    if (!is_prime(p)) throw std::invalid_argument("condition: p must be prime");
    if (F < 2 || F % static_cast<long>(p) != 0) throw std::invalid_argument("condition: p must divide F");
    if (digits < 50) throw std::invalid_argument("condition: at least 50 digits required");
    const auto prec = static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits) * 3.3219280948873623) + 32);

    ConditionReport rep;
    rep.which = which;
    rep.p = p;
    rep.F = F;
    rep.r = valuation(BigInt(F), p);
    rep.digits = digits;

    Interval lhs(prec), rhs(prec);
    for (unsigned long q : prime_divisors(static_cast<unsigned long>(F))) {
        const long e = valuation(BigInt(F), q);
        lhs.add_log_ratio(q, e, 1, prec);
        lhs.add_log_ratio(q, 1, static_cast<long>(q - 1), prec);
    }
    switch (which) {
        case Condition::A: lhs.add_rational(1, 1); break;
        case Condition::B: lhs.add_rational(2, 1); break;
        case Condition::C: lhs.add_rational(3, 2); break;
    }
    rhs.add_log_ratio(p, 2 * rep.r, 1, prec);
    rhs.add_log_ratio(p, 2, static_cast<long>(p - 1), prec);

    if (mpfr_less_p(lhs.hi.get(), rhs.lo.get())) rep.verdict = Verdict::Holds;
    else if (mpfr_greaterequal_p(lhs.lo.get(), rhs.hi.get())) rep.verdict = Verdict::Fails;
    else rep.verdict = Verdict::TooClose;

    Mpfr lm(prec), lr(prec), rm(prec), rr(prec), margin(prec);
    midpoint_and_radius(lhs, lm, lr);
    midpoint_and_radius(rhs, rm, rr);
    mpfr_sub(margin.get(), rm.get(), lm.get(), MPFR_RNDN);
    rep.lhs = decimal(lm.get(), digits);
    rep.rhs = decimal(rm.get(), digits);
    rep.lhs_error = scientific(lr.get());
    rep.rhs_error = scientific(rr.get());
    rep.margin = decimal(margin.get(), digits);
    return rep;
}

bool condition_stable(Condition which, unsigned long p, long F, long digits) {
    return condition(which, p, F, digits).verdict == condition(which, p, F, 2 * digits).verdict;
}

std::vector<CorollaryEntry> corollary_table() {
    std::vector<CorollaryEntry> out;
    auto add = [&](std::string number, Condition which, unsigned long p, long F, std::string via, std::string note = {}) {
        CorollaryEntry e;
        e.number = std::move(number);
        e.which = which;
        e.p = p;
        e.F = F;
        e.verdict = condition(which, p, F).verdict;
        e.certified = e.verdict == Verdict::Holds;
        e.via = std::move(via);
        e.note = std::move(note);
        out.push_back(std::move(e));
    };

    add("zeta_2(2)", Condition::A, 2, 2, "cohen1: Theta_2(1/2) = -8 zeta_2(2)");
    add("L_2(2,chi8)", Condition::A, 2, 4, "cohen3: Theta_2(1/4) = -16 L_2(2,chi8)");
    add("zeta_3(2)", Condition::A, 3, 3, "cohen4: Theta_3(1/3) = -27 zeta_3(2)/2");
    add("zeta_2(2)", Condition::A, 2, 6, "cohen2: Theta_2(1/6) = -40 zeta_2(2)", "not needed; zeta_2(2) is covered at F = 2");
    add("L_3(2,chi12)", Condition::A, 3, 6, "cohen5: Theta_3(1/6) = -36 L_3(2,chi12)",
        "condition too weak; irrationality not certified");

    const unsigned long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61};
    for (unsigned long p : primes) {
        for (long F = static_cast<long>(p); F <= 64; F *= static_cast<long>(p)) {
            const std::string h = "omega(a)^-1 H_" + std::to_string(p) + "(2,a," + std::to_string(F) + ")";
            if (F == 2) {
                CorollaryEntry e;
                e.number = "H_2(2,1,2)";
                e.which = Condition::B;
                e.p = 2;
                e.F = 2;
                e.verdict = condition(Condition::B, 2, 2).verdict;
                e.certified = false;
                e.via = "R(x) + R(1-x) = 0 gives 2 R_2(1/2) = 0";
                e.note = "vanishes";
                out.push_back(std::move(e));
            } else if (F == 3) {
                CorollaryEntry e;
                e.number = "H_3(2,1,3) = H_3(2,2,3)";
                e.which = Condition::B;
                e.p = 3;
                e.F = 3;
                e.verdict = condition(Condition::B, 3, 3).verdict;
                e.certified = condition(Condition::A, 3, 3).verdict == Verdict::Holds;
                e.via = "route through zeta_3(2), condition A at (3,3)";
                e.note = "statement covers every prime power F != 2; condition B itself only holds for F > 3";
                out.push_back(std::move(e));
            } else {
                add(h, Condition::B, p, F, "condition B");
            }
        }
    }
    for (unsigned long p : primes) {
        for (long F = static_cast<long>(p); F <= 64; F *= static_cast<long>(p)) {
            if (F == 2) continue;
            add("omega(a)^-2 H_" + std::to_string(p) + "(3,a," + std::to_string(F) + ")", Condition::C, p, F,
                "condition C");
        }
    }
    add("zeta_2(3)", Condition::C, 2, 4, "valuesat3_1: T_2(1/4) = 4^3 zeta_2(3)");
    add("zeta_3(3)", Condition::C, 3, 3, "valuesat3_2: T_3(1/3) = 3^3 zeta_3(3)");
    add("zeta_5(3) - L_5(3,chi5)", Condition::C, 5, 5, "valuesat3_3/4 at a = 1, 2",
        "as computed, T_5(2/5) is a multiple of zeta_5(3) - L_5(3,chi5)");
    add("zeta_5(3) + L_5(3,chi5)", Condition::C, 5, 5, "valuesat3_3/4 at a = 1, 2",
        "as computed, T_5(1/5) is a multiple of zeta_5(3) + L_5(3,chi5)");
    add("zeta_2(3) - L_2(3,chi8)", Condition::C, 2, 8, "valuesat3_5/6 at a = 1, 3",
        "as computed, T_2(3/8) is a multiple of zeta_2(3) - L_2(3,chi8)");
    add("zeta_2(3) + L_2(3,chi8)", Condition::C, 2, 8, "valuesat3_5/6 at a = 1, 3",
        "as computed, T_2(1/8) is a multiple of zeta_2(3) + L_2(3,chi8)");
    return out;
}

bool DenominatorAudit::all_integral() const {
    return std::all_of(rows.begin(), rows.end(),
                       [](const AuditRow& r) { return r.q_integral && r.p_integral && r.q_times_Q_integral; });
}

BigInt claimed_q_denominator(Family f, long n, long F) {
    const BigInt mu = mu_F(n, F);
    switch (f) {
        case Family::I:
        case Family::III: return mu * mu;
        case Family::II: return mu;
        case Family::IV: break;
    }
    throw std::invalid_argument("claimed_q_denominator: families I-III only");
}

BigInt claimed_p_denominator(Family f, long n, long F) {
    const BigInt l = lcm_upto(static_cast<unsigned long>(n));
    const BigInt mu = mu_F(n, F);
    switch (f) {
        case Family::I: return l * l * mu * mu;
        case Family::II: return l * l * mu;
        case Family::III: return l * l * l * mu * mu;
        case Family::IV: break;
    }
    throw std::invalid_argument("claimed_p_denominator: families I-III only");
}

DenominatorAudit denominator_audit(Family f, long a, long F, long nMax) {
    if (f == Family::IV) throw std::invalid_argument("denominator_audit: families I-III only");
    if (F < 2 || a < 1 || a >= F) throw std::invalid_argument("denominator_audit: need 1 <= a < F");
    DenominatorAudit audit;
    audit.family = f;
    audit.a = a;
    audit.F = F;
    const BigRational x{BigInt(a), BigInt(F)};
    for (const auto& row : convergent_seq(f, x, nMax)) {
        const BigInt dq = claimed_q_denominator(f, row.n, F);
        const BigInt dp = claimed_p_denominator(f, row.n, F);
        AuditRow ar;
        ar.n = row.n;
        ar.q_integral = (row.q * BigRational(dq)).is_integer();
        ar.p_integral = (row.p * BigRational(dp)).is_integer();
        ar.q_times_Q_integral = (row.q * BigRational(dp)).is_integer();
        audit.rows.push_back(ar);
    }
    return audit;
}

namespace {

double log_abs(const BigInt& v) {
    if (v == 0) return -INFINITY;
    long exp = 0;
    const double m = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log(std::fabs(m)) + static_cast<double>(exp) * std::log(2.0);
}

double log_abs(const BigRational& v) { return log_abs(v.num()) - log_abs(v.den()); }

}  // namespace

bool GapDiagnostic::tail_decreasing(std::size_t window) const {
    if (rows.size() < window || window < 2) return false;
    for (std::size_t i = rows.size() - window + 1; i < rows.size(); ++i)
        if (!(rows[i].value < rows[i - 1].value)) return false;
    return true;
}

double GapDiagnostic::tail_slope(std::size_t window) const {
    if (rows.size() < window || window < 2) throw std::invalid_argument("tail_slope: not enough rows");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = rows.size() - window; i < rows.size(); ++i) {
        const auto xv = static_cast<double>(rows[i].n);
        sx += xv;
        sy += rows[i].value;
        sxx += xv * xv;
        sxy += xv * rows[i].value;
    }
    const auto w = static_cast<double>(window);
    return (w * sxy - sx * sy) / (w * sxx - sx * sx);
}

GapDiagnostic gap_diagnostic(Family f, const EvalPoint& pt, long N, long nMax, int target_sign) {
    if (f == Family::IV) throw std::invalid_argument("gap_diagnostic: families I-III only");
    GapDiagnostic g;
    g.family = f;
    g.point = pt;
    g.N = N;
    g.target_sign = target_sign;
    const auto rows = convergent_seq(f, pt.x(), nMax);
    const auto rem = remainder_valuation(f, pt, N, nMax, {target_sign});
    const double logp = std::log(static_cast<double>(pt.p));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const long n = rows[i].n;
        if (rem[i].capped && n > 0)
            throw PrecisionError("gap_diagnostic: remainder at n = " + std::to_string(n) + " vanishes to the working precision " +
                                 std::to_string(rem[i].known_to) + "; increase N");
        const BigInt Q = claimed_p_denominator(f, n, pt.F);
        const BigRational Qr(Q);
        const double size = std::max(log_abs(rows[i].p * Qr), log_abs(rows[i].q * Qr));
        GapRow gr;
        gr.n = n;
        gr.capped = rem[i].capped;
        gr.value = size - static_cast<double>(valuation(Q, pt.p) + rem[i].valuation) * logp;
        g.rows.push_back(gr);
    }
    return g;
}

}  // namespace lpadic
