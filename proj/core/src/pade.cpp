#include "lpadic/pade.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace lpadic {

const char* to_string(Family f) {
    switch (f) {
        case Family::I: return "I";
        case Family::II: return "II";
        case Family::III: return "III";
        case Family::IV: return "IV";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    if (name == "I" || name == "1") return Family::I;
    if (name == "II" || name == "2") return Family::II;
    if (name == "III" || name == "3") return Family::III;
    if (name == "IV" || name == "4") return Family::IV;
    throw std::invalid_argument("unknown family '" + name + "' (expected I, II, III or IV)");
}

SeriesKind family_series(Family f) {
    switch (f) {
        case Family::I: return SeriesKind::Theta;
        case Family::II: return SeriesKind::R;
        case Family::III: return SeriesKind::T;
        case Family::IV: return SeriesKind::ThetaSmall;
    }
    throw std::logic_error("family_series: unreachable");
}

int pade_order(Family f, int n) {
    switch (f) {
        case Family::I:
        case Family::III: return 2 * n + 2;
        case Family::II: return n + 1;
        case Family::IV: return n;
    }
    throw std::logic_error("pade_order: unreachable");
}

BigRational recurrence_a(Family f, long n) {
    switch (f) {
        case Family::I: return BigRational(-n * n);
        case Family::II: return BigRational(n * n);
        case Family::III: return BigRational(-n * n * n);
        case Family::IV: return BigRational(n);
    }
    throw std::logic_error("recurrence_a: unreachable");
}

BigRational recurrence_c(Family f, long n) {
    const long m = n + 1;
    switch (f) {
        case Family::I:
        case Family::II: return BigRational(m * m);
        case Family::III: return BigRational(m * m * m);
        case Family::IV: return BigRational(m);
    }
    throw std::logic_error("recurrence_c: unreachable");
}

int closed_form_q_routes(Family f) { return f == Family::I || f == Family::II ? 2 : 1; }

void check_closed_form_p_domain(Family f, long n, const BigRational& x) {
    if (f != Family::II || !x.is_integer()) return;
    if (x >= BigRational(1L) && x <= BigRational(n))
        throw std::invalid_argument("closed_form_p: C(-x, j) vanishes for x = " + x.to_string() + " <= n");
}

BigRational det_expected(Family f, long n) {
    const BigRational m(n + 1);
    switch (f) {
        case Family::I: return pow(m, -2);
        case Family::II: return BigRational(n % 2 == 1 ? 2L : -2L) * pow(m, -2);
        case Family::III: return pow(m, -3);
        case Family::IV: return det_from_recurrence(f, n);
    }
    throw std::logic_error("det_expected: unreachable");
}

BigRational det_from_recurrence(Family f, long n) {
    BigRational d = seeds<BigRational>(f, BigRational{}).second;
    for (long k = 1; k <= n; ++k) d = -(recurrence_a(f, k) / recurrence_c(f, k)) * d;
    return d;
}

RemainderBound remainder_bound(Family f, long n) {
    switch (f) {
        case Family::I: return {BigInt(n) * n, 2, 2};
        case Family::II: return {BigInt(2 * n + 1), 1, 1};
        case Family::III: return {BigInt(2 * n + 1) * n * n, 2, 2};
        case Family::IV: break;
    }
    throw std::invalid_argument("remainder_bound: no estimate for family IV");
}

bool remainder_bound_holds(Family f, long n, long v, unsigned long p, long r) {
    const RemainderBound b = remainder_bound(f, n);
    if (b.C == 0) return false;
    const long pm1 = static_cast<long>(p) - 1;
    const long E = b.A * pm1 - b.B * n * (r * pm1 + 1) + v * pm1;
    if (E >= 0) return true;
    return pow(b.C, static_cast<unsigned long>(pm1)) >= prime_power(p, -E);
}

double remainder_bound_valuation(Family f, long n, unsigned long p, long r) {
    const RemainderBound b = remainder_bound(f, n);
    const double pd = static_cast<double>(p);
    const double logC = b.C == 0 ? -INFINITY : std::log(b.C.get_d()) / std::log(pd);
    return static_cast<double>(b.B * n) * (static_cast<double>(r) + 1.0 / (pd - 1.0)) - static_cast<double>(b.A) - logC;
}

std::vector<RemainderRow> remainder_valuation(Family f, const EvalPoint& pt, long N, long nMax, RemainderOptions options) {
    if (f == Family::IV) throw std::invalid_argument("remainder_valuation: families I-III only");
    if (N < 1) throw std::invalid_argument("remainder_valuation: N must be at least 1");
    if (options.target_sign != 1 && options.target_sign != -1)
        throw std::invalid_argument("remainder_valuation: target sign must be +1 or -1");
    const unsigned long p = pt.p;
    const long r = pt.r();
    const auto rows = convergent_seq(f, pt.x(), nMax);
    long headroom = 0;
    for (const auto& row : rows)
        if (!row.q.is_zero()) headroom = std::max(headroom, -valuation(row.q, p));
    const long Nw = N + headroom;
    const BigRational value = eval_series(family_series(f), pt, Nw).representative() * BigRational(options.target_sign);

    std::vector<RemainderRow> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        RemainderRow rr;
        rr.n = row.n;
        rr.known_to = row.q.is_zero() ? Nw : Nw + valuation(row.q, p);
        const BigRational rem = row.p - row.q * value;
        if (rem.is_zero() || valuation(rem, p) >= rr.known_to) {
            rr.valuation = rr.known_to;
            rr.capped = true;
        } else {
            rr.valuation = valuation(rem, p);
        }
        rr.meets_bound = row.n == 0 || remainder_bound_holds(f, row.n, rr.valuation, p, r);
        out.push_back(rr);
    }
    return out;
}

void write_convergents_csv(std::ostream& os, Family f, const BigRational& x, long nMax, const CsvOptions& options) {
    const auto rows = convergent_seq(f, x, nMax);
    std::vector<RemainderRow> rem;
    if (options.point) {
        if (!(options.point->x() == x))
            throw std::invalid_argument("write_convergents_csv: point does not match x");
        if (f == Family::IV) throw std::invalid_argument("write_convergents_csv: no remainder column for family IV");
        rem = remainder_valuation(f, *options.point, options.N, nMax, {options.target_sign});
    }
    const bool calegari = f == Family::III;
    os << "n,p_n,q_n,remainder_valuation";
    if (calegari) os << ",calegari";
    os << "\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        os << row.n << "," << row.p << "," << row.q << ",";
        if (!rem.empty()) os << (rem[i].capped ? ">=" : "") << rem[i].valuation;
        if (calegari) {
            os << ",";
            if (i > 0) {
                const BigRational dq = row.q - rows[i - 1].q;
                if (!dq.is_zero()) os << -(row.p - rows[i - 1].p) / (BigRational(64L) * dq);
            }
        }
        os << "\n";
    }
}

}  // namespace lpadic
