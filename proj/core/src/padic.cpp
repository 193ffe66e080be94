#include "lpadic/padic.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace lpadic {

namespace {

/// Strips the p-part of a nonzero integer in place and returns its exponent.
long strip(BigInt& x, unsigned long p) {
    if (p == 2) {
        const auto s = static_cast<long>(mpz_scan1(x.get_mpz_t(), 0));
        mpz_tdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
        return s;
    }
    BigInt pp(p);
    return static_cast<long>(mpz_remove(x.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t()));
}

BigInt mod_pow(const BigInt& x, long e, const BigInt& modulus) {
    BigInt r;
    BigInt ee(e);
    // Negative exponents invert; callers only pass units.
    mpz_powm(r.get_mpz_t(), x.get_mpz_t(), ee.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

}  // namespace

BigInt prime_power(unsigned long p, long e) {
    if (e < 0) throw std::invalid_argument("prime_power: negative exponent");
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(e));
    return r;
}

PadicApprox PadicApprox::zero(unsigned long p, long N) {
    if (!is_prime(p)) throw std::invalid_argument("p-adic prime must be prime, got " + std::to_string(p));
    return PadicApprox(p, N);
}

PadicApprox PadicApprox::make(unsigned long p, long N, long v, BigInt x) {
    // x is an integer standing for p^v * x; normalize it into valuation + unit.
    if (v >= N) return PadicApprox(p, N);
    BigInt mod = prime_power(p, N - v);
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
    if (x == 0) return PadicApprox(p, N);
    v += strip(x, p);
    if (v >= N) return PadicApprox(p, N);
    PadicApprox r(p, N);
    r.zero_ = false;
    r.v_ = v;
    r.u_ = std::move(x);
    return r;
}

PadicApprox PadicApprox::from_rational(const BigRational& q, unsigned long p, long N) {
    PadicApprox z = zero(p, N);
    if (q.is_zero()) return z;
    BigInt num = q.num();
    BigInt den = q.den();
    const long v = strip(num, p) - strip(den, p);
    if (v <= -N)
        throw PrecisionError("from_rational: valuation " + std::to_string(v) +
                             " leaves no representable digits at precision " + std::to_string(N));
    if (v >= N) return z;
    const BigInt mod = prime_power(p, N - v);
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
    return make(p, N, v, num * inv);
}

void PadicApprox::require_same_prime(const PadicApprox& o) const {
    if (p_ != o.p_) throw std::invalid_argument("p-adic operands over different primes");
}

PadicApprox PadicApprox::reduced(long N) const {
    if (N > N_) throw std::invalid_argument("PadicApprox::reduced cannot raise precision");
    if (zero_) return PadicApprox(p_, N);
    return make(p_, N, v_, u_);
}

BigRational PadicApprox::representative() const {
    if (zero_) return {};
    if (v_ >= 0) return BigRational(BigInt(u_ * prime_power(p_, v_)));
    return BigRational(u_, prime_power(p_, -v_));
}

PadicApprox PadicApprox::operator-() const {
    if (zero_) return *this;
    return make(p_, N_, v_, -u_);
}

PadicApprox operator+(const PadicApprox& a, const PadicApprox& b) {
    a.require_same_prime(b);
    const long N = std::min(a.N_, b.N_);
    if (a.zero_ && b.zero_) return PadicApprox(a.p_, N);
    if (a.zero_) return b.reduced(N);
    if (b.zero_) return a.reduced(N);
    const long m = std::min(a.v_, b.v_);
    if (m >= N) return PadicApprox(a.p_, N);
    BigInt x = a.u_;
    if (a.v_ > m) x *= prime_power(a.p_, a.v_ - m);
    if (b.v_ > m) x += b.u_ * prime_power(a.p_, b.v_ - m);
    else x += b.u_;
    return PadicApprox::make(a.p_, N, m, std::move(x));
}

PadicApprox operator*(const PadicApprox& a, const PadicApprox& b) {
    a.require_same_prime(b);
    const long N = std::min(a.N_ + b.valuation(), b.N_ + a.valuation());
    if (a.zero_ || b.zero_) return PadicApprox(a.p_, N);
    return PadicApprox::make(a.p_, N, a.v_ + b.v_, a.u_ * b.u_);
}

PadicApprox operator/(const PadicApprox& a, const PadicApprox& b) {
    a.require_same_prime(b);
    if (b.zero_) throw PrecisionError("p-adic division by a value that is zero to precision");
    const long N = std::min(a.N_ - b.v_, b.N_ + a.valuation() - 2 * b.v_);
    if (a.zero_) return PadicApprox(a.p_, N);
    const long v = a.v_ - b.v_;
    if (v >= N) throw PrecisionError("p-adic division left no digits");
    const BigInt mod = prime_power(a.p_, N - v);
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), b.u_.get_mpz_t(), mod.get_mpz_t());
    return PadicApprox::make(a.p_, N, v, a.u_ * inv);
}

PadicApprox PadicApprox::pow(long e) const {
    if (e == 0) return from_rational(BigRational(1L), p_, N_ > 0 ? N_ : 1);
    if (zero_) {
        if (e < 0) throw PrecisionError("negative power of a value that is zero to precision");
        return PadicApprox(p_, N_ * e);
    }
    if (v_ == 0) {
        // Powers of a unit keep the absolute precision.
        const BigInt mod = prime_power(p_, N_);
        return make(p_, N_, 0, mod_pow(u_, e, mod));
    }
    if (e < 0) {
        const PadicApprox d = pow(-e);
        const long exact = d.precision() + 2 * std::abs(d.valuation()) + 1;
        return from_rational(BigRational(1L), p_, exact) / d;
    }
    PadicApprox result = *this;
    PadicApprox base = *this;
    long k = e - 1;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

PadicApprox PadicApprox::scaled(const BigRational& c) const {
    if (c.is_zero()) throw std::invalid_argument("PadicApprox::scaled: zero factor");
    const long N = N_ + lpadic::valuation(c, p_);
    if (zero_) return PadicApprox(p_, N);
    return from_rational(representative() * c, p_, N);
}

bool operator==(const PadicApprox& a, const PadicApprox& b) {
    if (a.p_ != b.p_ || a.N_ != b.N_ || a.zero_ != b.zero_) return false;
    if (a.zero_) return true;
    return a.v_ == b.v_ && a.u_ == b.u_;
}

std::string PadicApprox::render() const {
    std::ostringstream os;
    const std::string ps = std::to_string(p_);
    bool first = true;
    if (!zero_) {
        BigInt rest = u_;
        BigInt digit;
        for (long k = v_; k < N_ && rest != 0; ++k) {
            mpz_fdiv_qr_ui(rest.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(), p_);
            if (digit == 0) continue;
            if (!first) os << " + ";
            first = false;
            os << digit.get_str();
            if (k == 1) os << "*" << ps;
            else if (k != 0) os << "*" << ps << "^" << k;
        }
    }
    if (first) os << "0";
    os << " + O(" << ps << "^" << N_ << ")";
    return os.str();
}

PadicApprox teichmuller(long m, unsigned long p, long N) {
    if (N < 1) throw std::invalid_argument("teichmuller: precision must be at least 1");
    PadicApprox z = PadicApprox::zero(p, N);
    if (m % static_cast<long>(p) == 0) return z;
    if (p == 2) {
        const long mod4 = ((m % 4) + 4) % 4;
        return PadicApprox::from_rational(BigRational(mod4 == 1 ? 1L : -1L), 2, N);
    }
    // x <- x^p fixes the residue mod p and converges to the root of unity: one digit per step.
    const BigInt mod = prime_power(p, N);
    BigInt x(m);
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
    BigInt pe(p);
    for (long i = 0; i < N; ++i) {
        BigInt next;
        mpz_powm(next.get_mpz_t(), x.get_mpz_t(), pe.get_mpz_t(), mod.get_mpz_t());
        if (next == x) break;
        x = std::move(next);
    }
    return PadicApprox::from_rational(BigRational(x), p, N);
}

PadicApprox angle(long x, unsigned long p, long N) {
    if (x % static_cast<long>(p) == 0)
        throw std::invalid_argument("angle: argument divisible by p");
    return PadicApprox::from_rational(BigRational(x), p, N) / teichmuller(x, p, N);
}

PadicApprox sum_series(const TermFn& term, const ValuationBound& bound, unsigned long p, long N,
                       SeriesSumOptions options) {
    PadicApprox acc = PadicApprox::zero(p, N);
    long previous = std::numeric_limits<long>::min();
    for (std::size_t n = 0; n < options.max_terms; ++n) {
        const long b = bound(n);
        if (b < previous) throw std::logic_error("sum_series: valuation bound is not monotone");
        previous = b;
        if (b >= N) return acc;
        const BigRational t = term(n);
        if (t.is_zero()) continue;
        if (valuation(t, p) < b)
            throw std::logic_error("sum_series: term " + std::to_string(n) + " violates its valuation bound");
        acc = acc + PadicApprox::from_rational(t, p, N);
    }
    throw PrecisionError("sum_series: valuation bound did not reach " + std::to_string(N) + " within " +
                         std::to_string(options.max_terms) + " terms");
}

}  // namespace lpadic
