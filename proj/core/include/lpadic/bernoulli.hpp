#pragma once

#include "lpadic/laurent.hpp"

#include <shared_mutex>
#include <vector>

namespace lpadic {

/// Append-only table of Bernoulli numbers (t/(e^t - 1) convention, B_1 = -1/2).
///
/// Values come from the shift recurrence sum_{k<m} C(m+1,k) B_k = 0. The recurrence runs on
/// the integers L*B_k where L is the product of all primes <= the fill bound; every
/// division by m+1 is checked to be exact. Safe for concurrent readers; concurrent fills of
/// the same range write identical values.
class BernoulliCache {
public:
    BigRational get(unsigned n);
    /// B_0, ..., B_n.
    std::vector<BigRational> upto(unsigned n);
    std::size_t size() const;

private:
    void fill(unsigned n);

    mutable std::shared_mutex mutex_;
    std::vector<BigRational> values_;
};

/// Process-wide cache used by the free functions below.
BernoulliCache& bernoulli_cache();

BigRational bernoulli(unsigned n);

/// (2^(n+1) - 2) B_n.
BigRational t_number(unsigned n);

/// T_0..T_maxN with tanh(t/2) = sum T_n t^n / n!, by power-series division.
std::vector<BigRational> tangent_numbers(unsigned maxN);

/// B_n(a,F) with t e^(at) / (e^(Ft) - 1) = sum B_n(a,F) t^n / n!; rejects a = 0, F < 1.
BigRational bernoulli_aF(unsigned n, long a, long F);

enum class SeriesKind { Theta, R, T, ThetaSmall };

const char* to_string(SeriesKind kind);
SeriesKind parse_series_kind(const std::string& name);

/// Exact truncated Laurent expansion of one of the four Bernoulli series through order M >= 1:
///   Theta(x) = sum t_n (-1/x)^(n+1),  R(x) = sum B_n (-1/x)^(n+1),
///   T(x) = sum (n+1) B_n (-1/x)^(n+2),  theta(x) = sum_{n>=1} t_n / n (-1/x)^n.
LaurentTrunc series_laurent(SeriesKind kind, int M);

}  // namespace lpadic
