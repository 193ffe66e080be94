#pragma once

// Exact integers and rationals. Both are thin value types over GMP.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace lpadic {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
class BigRational {
public:
    BigRational() = default;
    BigRational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    BigRational(int v) : q_(static_cast<long>(v)) {}  // NOLINT
    BigRational(const BigInt& v) : q_(v) {}  // NOLINT
    BigRational(const BigInt& num, const BigInt& den);
    explicit BigRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "n", "-n" or "n/d".
    static BigRational parse(std::string_view text);

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    BigRational operator-() const { return BigRational(mpq_class(-q_)); }
    BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
    BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
    BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    BigRational inverse() const;
    BigRational abs() const { return BigRational(mpq_class(::abs(q_))); }

    std::string to_string() const { return q_.get_str(); }
    double to_double() const { return q_.get_d(); }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

/// q^e for integer e (negative e inverts; 0^negative throws).
BigRational pow(const BigRational& base, long exponent);
BigInt pow(const BigInt& base, unsigned long exponent);

/// Binomial coefficient C(top, k) for integer top (possibly negative) and k >= 0.
BigInt binomial(long top, long k);

BigInt factorial(unsigned long n);

/// lcm(1, 2, ..., n); lcm of the empty range is 1.
BigInt lcm_upto(unsigned long n);

/// Exponent of the prime p in the nonzero integer n.
long valuation(const BigInt& n, unsigned long p);
/// Exponent of the prime p in the nonzero rational q (may be negative).
long valuation(const BigRational& q, unsigned long p);

bool is_prime(unsigned long n);

/// Distinct prime divisors of n >= 1, ascending.
std::vector<unsigned long> prime_divisors(unsigned long n);

}  // namespace lpadic
