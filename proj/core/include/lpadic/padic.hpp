#pragma once

// p-adic numbers known to an absolute precision p^N.
//
// A value is stored as p^v * u with u a unit known modulo p^(N-v). The valuation may be
// negative. A value congruent to 0 modulo p^N carries only its precision. Every arithmetic
// operation derives the result precision from the operand precisions and valuations, so
// nothing ever claims more digits than the inputs justify.

#include "lpadic/rational.hpp"

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace lpadic {

/// Raised when a computation runs out of p-adic precision or a tail bound never closes.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PadicApprox {
public:
    /// 0 modulo p^N.
    static PadicApprox zero(unsigned long p, long N);
    /// Image of q modulo p^N; rejects v_p(q) <= -N.
    static PadicApprox from_rational(const BigRational& q, unsigned long p, long N);

    unsigned long prime() const { return p_; }
    long precision() const { return N_; }
    bool is_zero() const { return zero_; }
    /// v_p of the value; equals precision() for a value that is zero to precision.
    long valuation() const { return zero_ ? N_ : v_; }
    /// Unit part, in [0, p^(N-v)); 0 for a zero value.
    const BigInt& unit() const { return u_; }

    /// The same value known to a lower precision.
    PadicApprox reduced(long N) const;
    /// The rational p^v * u, the canonical representative of the residue class.
    BigRational representative() const;

    PadicApprox operator-() const;
    friend PadicApprox operator+(const PadicApprox& a, const PadicApprox& b);
    friend PadicApprox operator-(const PadicApprox& a, const PadicApprox& b) { return a + (-b); }
    friend PadicApprox operator*(const PadicApprox& a, const PadicApprox& b);
    friend PadicApprox operator/(const PadicApprox& a, const PadicApprox& b);
    PadicApprox pow(long exponent) const;
    /// Multiplication by an exact rational: the result is known to precision N + v_p(c).
    PadicApprox scaled(const BigRational& c) const;

    /// Same prime, same precision and same residue.
    friend bool operator==(const PadicApprox& a, const PadicApprox& b);

    /// Digit rendering "c0 + c1*p + c2*p^2 + ... + O(p^N)"; zero digits are omitted.
    std::string render() const;

private:
    PadicApprox(unsigned long p, long N) : p_(p), N_(N), v_(N), zero_(true) {}
    static PadicApprox make(unsigned long p, long N, long v, BigInt unit_times_power);
    void require_same_prime(const PadicApprox& o) const;

    unsigned long p_ = 2;
    long N_ = 0;
    long v_ = 0;
    bool zero_ = true;
    BigInt u_;
};

BigInt prime_power(unsigned long p, long e);

/// Teichmueller representative omega(m) modulo p^N: the (p-1)-st root of unity congruent
/// to m mod p for odd p, (-1)^((m-1)/2) for p = 2, and 0 when p | m.
PadicApprox teichmuller(long m, unsigned long p, long N);

/// <x> = x / omega(x); rejects p | x.
PadicApprox angle(long x, unsigned long p, long N);

/// Lower bound on the valuation of the n-th series term. Must be nondecreasing and unbounded.
using ValuationBound = std::function<long(std::size_t)>;
using TermFn = std::function<BigRational(std::size_t)>;

struct SeriesSumOptions {
    std::size_t max_terms = 1'000'000;
};

/// Sums term(0) + term(1) + ... modulo p^N, stopping at the first n with bound(n) >= N.
/// Throws PrecisionError if the bound does not reach N within max_terms, and
/// std::logic_error if the bound decreases or a term violates it.
PadicApprox sum_series(const TermFn& term, const ValuationBound& bound, unsigned long p, long N,
                       SeriesSumOptions options = {});

}  // namespace lpadic
