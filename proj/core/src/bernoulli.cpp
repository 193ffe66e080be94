#include "lpadic/bernoulli.hpp"

#include <mutex>
#include <stdexcept>

namespace lpadic {

namespace {

BigInt primorial_upto(unsigned long n) {
    BigInt r;
    mpz_primorial_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace

std::size_t BernoulliCache::size() const {
    std::shared_lock lock(mutex_);
    return values_.size();
}

BigRational BernoulliCache::get(unsigned n) {
    {
        std::shared_lock lock(mutex_);
        if (n < values_.size()) return values_[n];
    }
    fill(n);
    std::shared_lock lock(mutex_);
    return values_[n];
}

std::vector<BigRational> BernoulliCache::upto(unsigned n) {
    get(n);
    std::shared_lock lock(mutex_);
    return {values_.begin(), values_.begin() + n + 1};
}

void BernoulliCache::fill(unsigned n) {
    std::unique_lock lock(mutex_);
    if (n < values_.size()) return;
    const unsigned have = static_cast<unsigned>(values_.size());
    const unsigned target = std::max(n, 2 * have);
    const BigInt L = primorial_upto(target + 1UL);

    std::vector<BigInt> scaled(target + 1);
    for (unsigned k = 0; k < have; ++k) {
        BigRational s = values_[k] * BigRational(L);
        if (!s.is_integer()) throw std::logic_error("BernoulliCache: denominator outside primorial");
        scaled[k] = s.num();
    }
    if (have == 0) scaled[0] = L;

    values_.reserve(target + 1);
    if (have == 0) values_.push_back(BigRational(1L));
    BigInt binom, sum, quotient;
    for (unsigned m = std::max(have, 1U); m <= target; ++m) {
        // sum_{k<m} C(m+1, k) * (L B_k), binomials built along the row
        sum = 0;
        binom = 1;
        for (unsigned k = 0; k < m; ++k) {
            if (scaled[k] != 0) sum += binom * scaled[k];
            binom *= (m + 1 - k);
            mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), k + 1);
        }
        if (!mpz_divisible_ui_p(sum.get_mpz_t(), m + 1))
            throw std::logic_error("BernoulliCache: inexact division in shift recurrence");
        mpz_divexact_ui(quotient.get_mpz_t(), sum.get_mpz_t(), m + 1);
        scaled[m] = -quotient;
        values_.push_back(BigRational(scaled[m], L));
    }
}

BernoulliCache& bernoulli_cache() {
    static BernoulliCache cache;
    return cache;
}

BigRational bernoulli(unsigned n) { return bernoulli_cache().get(n); }

BigRational t_number(unsigned n) {
    BigInt w = pow(BigInt(2), n + 1UL) - 2;
    return BigRational(w) * bernoulli(n);
}

std::vector<BigRational> tangent_numbers(unsigned maxN) {
    // (e^t - 1) / (e^t + 1): numerator a_n = 1/n! (n >= 1), denominator b_0 = 2, b_n = 1/n!.
    std::vector<BigRational> inv_fact(maxN + 1);
    for (unsigned i = 0; i <= maxN; ++i) inv_fact[i] = BigRational(BigInt(1), factorial(i));
    std::vector<BigRational> c(maxN + 1);
    const BigRational half(BigInt(1), BigInt(2));
    for (unsigned n = 0; n <= maxN; ++n) {
        BigRational acc = n == 0 ? BigRational{} : inv_fact[n];
        for (unsigned k = 0; k < n; ++k) acc -= c[k] * inv_fact[n - k];
        c[n] = acc * half;
    }
    std::vector<BigRational> out(maxN + 1);
    for (unsigned n = 0; n <= maxN; ++n) out[n] = c[n] * BigRational(factorial(n));
    return out;
}

BigRational bernoulli_aF(unsigned n, long a, long F) {
    if (a == 0) throw std::invalid_argument("bernoulli_aF: a must be nonzero");
    if (F < 1) throw std::invalid_argument("bernoulli_aF: F must be positive");
    const BigRational ratio{BigInt(F), BigInt(a)};
    BigRational acc;
    BigRational rpow(1L);
    for (unsigned j = 0; j <= n; ++j) {
        acc += BigRational(binomial(n, j)) * bernoulli(j) * rpow;
        rpow *= ratio;
    }
    return acc * pow(BigRational(a), static_cast<long>(n)) / BigRational(F);
}

const char* to_string(SeriesKind kind) {
    switch (kind) {
        case SeriesKind::Theta: return "THETA";
        case SeriesKind::R: return "R";
        case SeriesKind::T: return "T";
        case SeriesKind::ThetaSmall: return "THETA_SMALL";
    }
    return "?";
}

SeriesKind parse_series_kind(const std::string& name) {
    if (name == "THETA" || name == "Theta") return SeriesKind::Theta;
    if (name == "R") return SeriesKind::R;
    if (name == "T") return SeriesKind::T;
    if (name == "THETA_SMALL" || name == "theta") return SeriesKind::ThetaSmall;
    throw std::invalid_argument("unknown series kind '" + name + "'");
}

LaurentTrunc series_laurent(SeriesKind kind, int M) {
    if (M < 1) throw std::invalid_argument("series_laurent: M must be at least 1");
    auto sign = [](int e) { return BigRational(e % 2 == 0 ? 1L : -1L); };
    std::vector<BigRational> c;
    switch (kind) {
        case SeriesKind::R:
            for (int n = 0; n + 1 <= M; ++n) c.push_back(bernoulli(n) * sign(n + 1));
            return LaurentTrunc(1, std::move(c));
        case SeriesKind::Theta:
            for (int n = 0; n + 1 <= M; ++n) c.push_back(t_number(n) * sign(n + 1));
            return LaurentTrunc(1, std::move(c));
        case SeriesKind::T:
            if (M < 2) return LaurentTrunc::zero(1, M);
            for (int n = 0; n + 2 <= M; ++n)
                c.push_back(BigRational(static_cast<long>(n + 1)) * bernoulli(n) * sign(n));
            return LaurentTrunc(2, std::move(c));
        case SeriesKind::ThetaSmall:
            for (int n = 1; n <= M; ++n)
                c.push_back(t_number(n) / BigRational(static_cast<long>(n)) * sign(n));
            return LaurentTrunc(1, std::move(c));
    }
    throw std::logic_error("series_laurent: unreachable");
}

}  // namespace lpadic
