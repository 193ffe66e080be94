#pragma once

// The four convergent families
//   I   (Theta):  (n+1)^2 u_{n+1} = (2n(n+1) + 1 - x + x^2) u_n - n^2 u_{n-1}
//   II  (R):      (n+1)^2 u_{n+1} = (2n+1)(2x-1) u_n + n^2 u_{n-1}
//   III (T):      (n+1)^3 u_{n+1} = (2n+1)(2x^2 - 2x + n^2 + n + 1) u_n - n^3 u_{n-1}
//   IV  (theta):  (n+1) u_{n+1} = (2x-1) u_n + n u_{n-1}
// with q_0 = 1, p_0 = 0 and the family-specific q_1, p_1. Every routine is written once over a
// scalar type S, instantiated with BigRational (numeric, at a fixed x) and PolyQ (symbolic in x).

#include "lpadic/bernoulli.hpp"
#include "lpadic/lvalues.hpp"
#include "lpadic/polynomial.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lpadic {

enum class Family { I, II, III, IV };

const char* to_string(Family f);
/// Accepts "I".."IV" and "1".."4".
Family parse_family(const std::string& name);
/// The series whose convergents the family produces.
SeriesKind family_series(Family f);
/// Order of p_n - q_n * series as a Laurent series: 2n+2, n+1, 2n+2, n.
int pade_order(Family f, int n);

template <class S>
struct ConvergentRow {
    long n = 0;
    S p;
    S q;
};

namespace detail {

inline BigRational scale_by(const BigRational& v, const BigRational& c) { return v * c; }
inline PolyQ scale_by(const PolyQ& v, const BigRational& c) { return v.scaled(c); }

/// Generalized binomial C(y, m) = y (y-1) ... (y-m+1) / m!.
template <class S>
S gbinom(const S& y, long m) {
    S acc(1L);
    for (long i = 0; i < m; ++i) acc = acc * (y - S(i));
    return scale_by(acc, BigRational(BigInt(1), factorial(static_cast<unsigned long>(m))));
}

/// Pochhammer (y)_m = y (y+1) ... (y+m-1).
template <class S>
S pochhammer(const S& y, long m) {
    S acc(1L);
    for (long i = 0; i < m; ++i) acc = acc * (y + S(i));
    return acc;
}

inline BigRational q(long v) { return BigRational(v); }
inline BigRational q(const BigInt& v) { return BigRational(v); }

}  // namespace detail

/// Recurrence coefficients c(n) u_{n+1} = b(n, x) u_n + a(n) u_{n-1}.
template <class S>
S recurrence_b(Family f, long n, const S& x) {
    const S one(1L);
    switch (f) {
        case Family::I: return S(2 * n * (n + 1) + 1) - x + x * x;
        case Family::II: return S(2 * n + 1) * (S(2L) * x - one);
        case Family::III: return S(2 * n + 1) * (S(2L) * x * x - S(2L) * x + S(n * n + n + 1));
        case Family::IV: return S(2L) * x - one;
    }
    throw std::logic_error("recurrence_b: unreachable");
}
BigRational recurrence_a(Family f, long n);
BigRational recurrence_c(Family f, long n);

/// Seeds q_1 and p_1.
template <class S>
std::pair<S, S> seeds(Family f, const S& x) {
    const S one(1L);
    switch (f) {
        case Family::I: return {x * x - x + one, S(1L)};
        case Family::II: return {S(2L) * x - one, S(-2L)};
        case Family::III: return {S(2L) * x * x - S(2L) * x + one, S(2L)};
        case Family::IV: return {S(2L) * x - one, S(2L)};
    }
    throw std::logic_error("seeds: unreachable");
}

/// Rows 0..nMax by the forward recurrence.
template <class S>
std::vector<ConvergentRow<S>> convergent_seq(Family f, const S& x, long nMax) {
    if (nMax < 0) throw std::invalid_argument("convergent_seq: nMax must be nonnegative");
    std::vector<ConvergentRow<S>> rows;
    rows.reserve(static_cast<std::size_t>(nMax + 1));
    rows.push_back({0, S(0L), S(1L)});
    if (nMax == 0) return rows;
    auto [q1, p1] = seeds(f, x);
    rows.push_back({1, p1, q1});
    for (long n = 1; n < nMax; ++n) {
        const S b = recurrence_b(f, n, x);
        const BigRational a = recurrence_a(f, n);
        const BigRational cinv = recurrence_c(f, n).inverse();
        const auto& cur = rows[static_cast<std::size_t>(n)];
        const auto& prev = rows[static_cast<std::size_t>(n - 1)];
        S pn = detail::scale_by(b * cur.p + detail::scale_by(prev.p, a), cinv);
        S qn = detail::scale_by(b * cur.q + detail::scale_by(prev.q, a), cinv);
        rows.push_back({n + 1, std::move(pn), std::move(qn)});
    }
    return rows;
}

/// Number of binomial-sum expressions available for q_n: two for I and II, one otherwise.
int closed_form_q_routes(Family f);

/// q_n from a binomial sum. Routes:
///   I:   0: sum (1-x)_{n-k} (x)_k^2 / ((n-k)! k!^2),   1: sum C(n,k) C(-x,k) C(k-x,k)
///   II:  0: sum_{k<=n/2} C(2x-1, n-2k) C(-x,k)^2,      1: (-1)^n sum C(n,k) C(n+k,k) C(-x,k)
///   III: sum C(n,k) C(n+k,k) C(-x,k) C(-x+k,k)
///   IV:  (-1)^n sum C(n,k) C(-x,k) 2^k
template <class S>
S closed_form_q(Family f, long n, const S& x, int route = 0) {
    using detail::gbinom;
    if (n < 0) throw std::invalid_argument("closed_form_q: n must be nonnegative");
    if (route < 0 || route >= closed_form_q_routes(f)) throw std::invalid_argument("closed_form_q: no such route");
    const S one(1L);
    S acc(0L);
    switch (f) {
        case Family::I:
            for (long k = 0; k <= n; ++k) {
                if (route == 0) {
                    const S term = detail::pochhammer(one - x, n - k) * detail::pochhammer(x, k) * detail::pochhammer(x, k);
                    const BigInt den = factorial(static_cast<unsigned long>(n - k)) * factorial(static_cast<unsigned long>(k)) *
                                       factorial(static_cast<unsigned long>(k));
                    acc = acc + detail::scale_by(term, BigRational(BigInt(1), den));
                } else {
                    acc = acc + S(detail::q(binomial(n, k))) * gbinom(-x, k) * gbinom(S(k) - x, k);
                }
            }
            return acc;
        case Family::II:
            if (route == 0) {
                for (long k = 0; 2 * k <= n; ++k) {
                    const S c = gbinom(-x, k);
                    acc = acc + gbinom(S(2L) * x - one, n - 2 * k) * c * c;
                }
                return acc;
            }
            for (long k = 0; k <= n; ++k)
                acc = acc + S(detail::q(binomial(n, k) * binomial(n + k, k))) * gbinom(-x, k);
            return n % 2 == 0 ? acc : -acc;
        case Family::III:
            for (long k = 0; k <= n; ++k)
                acc = acc + S(detail::q(binomial(n, k) * binomial(n + k, k))) * gbinom(-x, k) * gbinom(S(k) - x, k);
            return acc;
        case Family::IV:
            for (long k = 0; k <= n; ++k)
                acc = acc + S(detail::q(binomial(n, k) * pow(BigInt(2), static_cast<unsigned long>(k)))) * gbinom(-x, k);
            return n % 2 == 0 ? acc : -acc;
    }
    throw std::logic_error("closed_form_q: unreachable");
}

/// Rejects x in {1, ..., n} for family II, where C(-x, j) vanishes.
void check_closed_form_p_domain(Family f, long n, const BigRational& x);
inline void check_closed_form_p_domain(Family, long, const PolyQ&) {}

/// p_n from the double binomial sums
///   I:   sum_k C(n,k) sum_{j<=k} C(k-x,k-j) C(-x-j,k-j) (-1)^(j-1) / (j^2 C(k,j)^2)
///   II:  (-1)^n sum_k C(n,k) C(n+k,k) C(-x,k) sum_{j<=k} (-1)^j / (j^2 C(-x,j))
///   III: sum_k C(n,k) C(n+k,k) sum_{j<=k} (-1)^(j-1)/j^3 C(k-x,k-j) C(-x-j,k-j) / C(k,j)^2
/// evaluated exactly as written. The family II sum evaluates to -p_n, not p_n.
/// Family IV has no such expression and is rejected.
template <class S>
S closed_form_p(Family f, long n, const S& x) {
    using detail::gbinom;
    if (n < 0) throw std::invalid_argument("closed_form_p: n must be nonnegative");
    if (f == Family::IV) throw std::invalid_argument("closed_form_p: family IV has no binomial-sum expression");
    check_closed_form_p_domain(f, n, x);
    S acc(0L);
    for (long k = 1; k <= n; ++k) {
        S inner(0L);
        for (long j = 1; j <= k; ++j) {
            switch (f) {
                case Family::I:
                case Family::III: {
                    const BigInt ckj = binomial(k, j);
                    const BigInt jpow = f == Family::I ? BigInt(j * j) : BigInt(j * j * j);
                    BigRational w(BigInt(1), jpow * ckj * ckj);
                    if (j % 2 == 0) w = -w;
                    inner = inner + detail::scale_by(gbinom(S(k) - x, k - j) * gbinom(-x - S(j), k - j), w);
                    break;
                }
                case Family::II: {
                    // C(-x,k) / C(-x,j) = (-x-j)(-x-j-1)...(-x-k+1) * j! / k!
                    S ratio(1L);
                    for (long i = j; i < k; ++i) ratio = ratio * (-x - S(i));
                    BigRational w(factorial(static_cast<unsigned long>(j)),
                                  factorial(static_cast<unsigned long>(k)) * BigInt(j * j));
                    if (j % 2 == 1) w = -w;
                    inner = inner + detail::scale_by(ratio, w);
                    break;
                }
                case Family::IV: break;
            }
        }
        const BigInt outer = f == Family::I ? binomial(n, k) : BigInt(binomial(n, k) * binomial(n + k, k));
        acc = acc + S(detail::q(outer)) * inner;
    }
    if (f == Family::II && n % 2 == 1) acc = -acc;
    return acc;
}

/// p_{n+1} q_n - p_n q_{n+1}.
template <class S>
S det_identity(Family f, long n, const S& x) {
    const auto rows = convergent_seq(f, x, n + 1);
    const auto& a = rows[static_cast<std::size_t>(n)];
    const auto& b = rows[static_cast<std::size_t>(n + 1)];
    return b.p * a.q - a.p * b.q;
}

/// Right sides as quoted: 1/(n+1)^2, (-1)^(n-1) 2/(n+1)^2, 1/(n+1)^3, and for IV the value
/// D_n = -(a(n)/c(n)) D_{n-1}, D_0 = p_1, which is (-1)^n 2/(n+1).
BigRational det_expected(Family f, long n);
/// What the recurrence actually forces: same as det_expected except 2/(n+1)^3 for III.
BigRational det_from_recurrence(Family f, long n);

/// Quoted p-adic remainder estimates |p_n - q_n alpha|_p <= C(n) p^(A - B n (r + 1/(p-1))):
///   I: C = n^2, A = 2, B = 2;  II: C = 2n+1, A = 1, B = 1;  III: C = (2n+1) n^2, A = 2, B = 2.
struct RemainderBound {
    BigInt C;
    long A;
    long B;
};
RemainderBound remainder_bound(Family f, long n);
/// Exact test of p^-v <= C p^(A - B n (r + 1/(p-1))), done in integers after raising to p-1.
bool remainder_bound_holds(Family f, long n, long v, unsigned long p, long r);
/// The bound as a real valuation threshold, for display.
double remainder_bound_valuation(Family f, long n, unsigned long p, long r);

struct RemainderRow {
    long n = 0;
    /// v_p(p_n - q_n * sign * value), capped at known_to when the remainder vanishes to that precision.
    long valuation = 0;
    long known_to = 0;
    bool capped = false;
    /// Whether the quoted estimate holds (always true at n = 0, where it does not apply).
    bool meets_bound = true;
};

struct RemainderOptions {
    /// Multiplier applied to the series value before forming p_n - q_n * value.
    int target_sign = 1;
};

/// Per-n p-adic remainders p_n(a/F) - q_n(a/F) * value for the family's own series value at pt,
/// every row known to at least p^N. Families I-III only.
std::vector<RemainderRow> remainder_valuation(Family f, const EvalPoint& pt, long N, long nMax,
                                              RemainderOptions options = {});

struct CsvOptions {
    /// When set, adds the remainder valuation column at this point.
    std::optional<EvalPoint> point;
    long N = 128;
    int target_sign = 1;
};

/// CSV with header n,p_n,q_n,remainder_valuation (empty cells without a point); family III adds
/// calegari = -(p_n - p_{n-1}) / (64 (q_n - q_{n-1})).
void write_convergents_csv(std::ostream& os, Family f, const BigRational& x, long nMax, const CsvOptions& options = {});

}  // namespace lpadic
