#pragma once

// Truncated formal Laurent series in 1/x.
//
// A LaurentTrunc stores the coefficients of x^-k for start_order() <= k <= trunc_order();
// everything beyond trunc_order() is unknown (the series is known modulo O(1/x^(M+1))).
// Orders may be negative, i.e. positive powers of x are allowed.

#include "lpadic/ratfunc.hpp"

#include <string>
#include <vector>

namespace lpadic {

class LaurentTrunc {
public:
    LaurentTrunc() = default;
    /// coeffs[j] is the coefficient of x^-(start + j); trunc = start + coeffs.size() - 1.
    LaurentTrunc(int start, std::vector<BigRational> coeffs);
    /// The zero series known through order trunc.
    static LaurentTrunc zero(int start, int trunc);
    /// c * x^-order, known through trunc.
    static LaurentTrunc monomial(const BigRational& c, int order, int trunc);
    /// An exact polynomial in x, known through trunc.
    static LaurentTrunc from_poly(const PolyQ& p, int trunc);

    int start_order() const { return start_; }
    int trunc_order() const { return start_ + static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of x^-order; zero below start_order(), throws beyond trunc_order().
    BigRational coeff(int order) const;
    const std::vector<BigRational>& coefficients() const { return coeffs_; }

    /// Order of the first nonzero coefficient, or trunc_order()+1 if all known ones vanish.
    int leading_order() const;
    bool is_zero_to_precision() const { return leading_order() > trunc_order(); }

    /// Same series re-known through a smaller truncation order.
    LaurentTrunc truncated(int trunc) const;
    /// Same series with its storage starting at a lower order (zero padded).
    LaurentTrunc with_start(int start) const;

    LaurentTrunc operator-() const;
    friend LaurentTrunc operator+(const LaurentTrunc& a, const LaurentTrunc& b);
    friend LaurentTrunc operator-(const LaurentTrunc& a, const LaurentTrunc& b) { return a + (-b); }
    friend LaurentTrunc operator*(const LaurentTrunc& a, const LaurentTrunc& b);
    LaurentTrunc scaled(const BigRational& c) const;
    /// Multiplication by an exact polynomial in x; loses deg(p) orders of precision.
    LaurentTrunc times(const PolyQ& p) const;
    LaurentTrunc operator+(const PolyQ& p) const { return *this + from_poly(p, trunc_order()); }

    /// d/dx; known through trunc_order() + 1.
    LaurentTrunc derivative() const;

    /// Equality of all coefficients through the smaller of the two truncation orders.
    bool agrees_with(const LaurentTrunc& o) const;

    std::string to_string() const;

private:
    int start_ = 1;
    std::vector<BigRational> coeffs_;
};

/// 1/x-expansion of a proper rational function through order M.
LaurentTrunc ratfunc_to_laurent(const RatFunc& r, int M);

/// A(x + shift) re-expanded in 1/x, same truncation order.
LaurentTrunc laurent_shift(const LaurentTrunc& a, const BigRational& shift);

/// A(c x); rejects c = 0.
LaurentTrunc laurent_scale(const LaurentTrunc& a, const BigRational& c);

enum class FcVariant { X, OneMinusX };

/// Expansion of n!/(x(x+1)...(x+n)) (or the same at 1-x) through order M >= n+1.
LaurentTrunc fc_laurent(unsigned n, FcVariant variant, int M);

}  // namespace lpadic
