#include "lpadic/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace lpadic {

BigRational::BigRational(const BigInt& num, const BigInt& den) : q_(num, den) {
    if (den == 0) throw std::domain_error("BigRational: zero denominator");
    q_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return BigRational(BigInt(s));
        return BigRational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational number: '" + s + "'");
    } catch (const std::domain_error&) {
        throw std::invalid_argument("zero denominator in '" + s + "'");
    }
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
    q_ /= o.q_;
    return *this;
}

BigRational BigRational::inverse() const {
    if (is_zero()) throw std::domain_error("BigRational: inverse of zero");
    return BigRational(mpq_class(1) / q_);
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }

BigInt pow(const BigInt& base, unsigned long exponent) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

BigRational pow(const BigRational& base, long exponent) {
    if (exponent < 0) return pow(base.inverse(), -exponent);
    auto e = static_cast<unsigned long>(exponent);
    return BigRational(pow(base.num(), e), pow(base.den(), e));
}

BigInt binomial(long top, long k) {
    if (k < 0) return 0;
    BigInt r;
    if (top >= 0) {
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(k));
    } else {
        BigInt t(top);
        mpz_bin_ui(r.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k));
    }
    return r;
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt lcm_upto(unsigned long n) {
    BigInt r = 1;
    for (unsigned long k = 2; k <= n; ++k) mpz_lcm_ui(r.get_mpz_t(), r.get_mpz_t(), k);
    return r;
}

long valuation(const BigInt& n, unsigned long p) {
    if (n == 0) throw std::domain_error("valuation of zero");
    BigInt pp(p);
    BigInt rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t()));
}

long valuation(const BigRational& q, unsigned long p) {
    return valuation(q.num(), p) - valuation(q.den(), p);
}

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<unsigned long> prime_divisors(unsigned long n) {
    std::vector<unsigned long> out;
    for (unsigned long d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace lpadic
