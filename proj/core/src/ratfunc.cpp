#include "lpadic/ratfunc.hpp"

namespace lpadic {

RatFunc::RatFunc(PolyQ num, PolyQ den) {
    if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num.is_zero()) {
        den_ = PolyQ(1L);
        return;
    }
    PolyQ g = gcd(num, den);
    num = exact_div(num, g);
    den = exact_div(den, g);
    BigRational lead_inv = den.leading().inverse();
    num_ = num.scaled(lead_inv);
    den_ = den.scaled(lead_inv);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

BigRational RatFunc::evaluate(const BigRational& at) const {
    BigRational d = den_.evaluate(at);
    if (d.is_zero()) throw std::domain_error("RatFunc: evaluation at a pole");
    return num_.evaluate(at) / d;
}

RatFunc RatFunc::shifted(const BigRational& shift) const {
    return RatFunc(num_.shifted(shift), den_.shifted(shift));
}

std::string RatFunc::to_string(const std::string& var) const {
    if (den_ == PolyQ(1L)) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

RatFunc falling_fraction(unsigned n) {
    PolyQ den(1L);
    for (unsigned i = 0; i <= n; ++i) den *= PolyQ{BigRational(static_cast<long>(i)), BigRational(1L)};
    return RatFunc(PolyQ(BigRational(factorial(n))), den);
}

RatFunc falling_fraction_reflected(unsigned n) {
    PolyQ den(1L);
    for (unsigned i = 0; i <= n; ++i) den *= PolyQ{BigRational(static_cast<long>(i) + 1), BigRational(-1L)};
    return RatFunc(PolyQ(BigRational(factorial(n))), den);
}

}  // namespace lpadic
