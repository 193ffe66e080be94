#pragma once

// Irrationality bookkeeping: the denominator bound mu_F(n), conditions (A)/(B)/(C) in interval
// arithmetic, denominator audits of the convergents and the p-adic gap diagnostic.

#include "lpadic/lvalues.hpp"
#include "lpadic/pade.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lpadic {

/// F^n prod_{q | F} q^[n/(q-1)] over the distinct primes q dividing F. Requires F >= 2.
BigInt mu_F(long n, long F);

struct PochhammerRow {
    long n = 0;
    BigInt denominator;  ///< of (a/F)_n / n!
    BigInt mu;
    bool divides = false;
    /// v_q(denominator) >= n(v_q(F) + 1/(q-1)) - log_q n - 1 for every prime q | F (n >= 1).
    bool valuation_bound_met = false;
};

/// Rows n = 0..nMax for beta = a/F in lowest terms.
std::vector<PochhammerRow> pochhammer_denominator_check(long a, long F, long nMax);

enum class Condition { A, B, C };
const char* to_string(Condition c);
Condition parse_condition(const std::string& s);

enum class Verdict { Holds, Fails, TooClose };
const char* to_string(Verdict v);

struct ConditionReport {
    Condition which = Condition::A;
    unsigned long p = 2;
    long F = 2;
    long r = 1;
    long digits = 0;
    /// Midpoints to `digits` significant digits and the half-widths of the enclosing intervals.
    std::string lhs;
    std::string rhs;
    std::string lhs_error;
    std::string rhs_error;
    /// rhs - lhs at the midpoints.
    std::string margin;
    Verdict verdict = Verdict::TooClose;
};

/// log F + sum_{q|F} log q/(q-1) + c < 2r log p + 2 log p/(p-1) with c = 1, 2, 3/2 for A, B, C,
/// both sides enclosed by outward-rounded MPFR intervals. digits >= 50.
ConditionReport condition(Condition which, unsigned long p, long F, long digits = 60);

/// Verdict at `digits` and at twice that; true iff identical.
bool condition_stable(Condition which, unsigned long p, long F, long digits = 60);

struct CorollaryEntry {
    std::string number;     ///< the L-value claimed irrational
    Condition which = Condition::A;
    unsigned long p = 2;
    long F = 2;
    Verdict verdict = Verdict::TooClose;
    bool certified = false;
    std::string via;        ///< identity or route used
    std::string note;
};

std::vector<CorollaryEntry> corollary_table();

struct AuditRow {
    long n = 0;
    bool q_integral = false;  ///< q_n * (claimed q denominator)
    bool p_integral = false;  ///< p_n * (claimed p denominator)
    bool q_times_Q_integral = false;
};

struct DenominatorAudit {
    Family family = Family::I;
    long a = 1;
    long F = 2;
    std::vector<AuditRow> rows;
    bool all_integral() const;
};

/// Claimed denominators of q_n(a/F) and p_n(a/F) for families I-III.
BigInt claimed_q_denominator(Family f, long n, long F);
/// Also the Q_n clearing both convergents in the irrationality argument.
BigInt claimed_p_denominator(Family f, long n, long F);

DenominatorAudit denominator_audit(Family f, long a, long F, long nMax);

struct GapRow {
    long n = 0;
    double value = 0;     ///< log max(|Q_n p_n|, |Q_n q_n|) + log |Q_n (p_n - alpha q_n)|_p
    bool capped = false;  ///< remainder valuation only known as a lower bound (value is an upper bound)
};

struct GapDiagnostic {
    Family family = Family::I;
    EvalPoint point;
    long N = 0;
    int target_sign = 1;
    std::vector<GapRow> rows;
    /// Strict decrease across the last `window` rows.
    bool tail_decreasing(std::size_t window = 25) const;
    /// Least-squares slope of value against n over the last `window` rows.
    double tail_slope(std::size_t window = 25) const;
};

/// alpha is the family's series value at the point, times target_sign. Throws PrecisionError if
/// N cannot resolve the remainders.
GapDiagnostic gap_diagnostic(Family f, const EvalPoint& pt, long N, long nMax, int target_sign = 1);

}  // namespace lpadic
