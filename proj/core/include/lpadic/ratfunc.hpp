#pragma once

#include "lpadic/polynomial.hpp"

#include <string>

namespace lpadic {

/// Rational function num/den over Q, kept reduced with a monic denominator.
class RatFunc {
public:
    RatFunc() : den_(1L) {}
    RatFunc(const PolyQ& p) : num_(p), den_(1L) {}  // NOLINT(google-explicit-constructor)
    RatFunc(const BigRational& c) : num_(c), den_(1L) {}  // NOLINT
    RatFunc(PolyQ num, PolyQ den);

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const { return RatFunc(-num_, den_); }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    BigRational evaluate(const BigRational& at) const;
    /// R(x + shift).
    RatFunc shifted(const BigRational& shift) const;

    std::string to_string(const std::string& var = "x") const;

private:
    PolyQ num_;
    PolyQ den_;
};

/// n! / (x (x+1) ... (x+n)).
RatFunc falling_fraction(unsigned n);
/// The same fraction with x replaced by 1 - x.
RatFunc falling_fraction_reflected(unsigned n);

}  // namespace lpadic
