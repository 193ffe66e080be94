#include "lpadic/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lpadic {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

}  // namespace

LaurentTrunc::LaurentTrunc(int start, std::vector<BigRational> coeffs)
    : start_(start), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("LaurentTrunc: no known coefficients");
}

LaurentTrunc LaurentTrunc::zero(int start, int trunc) {
    if (trunc < start) throw std::invalid_argument("LaurentTrunc: trunc below start");
    return LaurentTrunc(start, std::vector<BigRational>(idx(trunc - start + 1)));
}

LaurentTrunc LaurentTrunc::monomial(const BigRational& c, int order, int trunc) {
    LaurentTrunc r = zero(std::min(order, trunc), trunc);
    if (order <= trunc) r.coeffs_[idx(order - r.start_)] = c;
    return r;
}

LaurentTrunc LaurentTrunc::from_poly(const PolyQ& p, int trunc) {
    const int start = std::min(-std::max(p.degree(), 0), trunc);
    LaurentTrunc r = zero(start, trunc);
    for (int d = 0; d <= p.degree(); ++d) {
        if (-d > trunc) continue;
        r.coeffs_[idx(-d - start)] = p.coeff(idx(d));
    }
    return r;
}

BigRational LaurentTrunc::coeff(int order) const {
    if (order > trunc_order()) throw std::out_of_range("LaurentTrunc: coefficient beyond truncation order");
    if (order < start_) return {};
    return coeffs_[idx(order - start_)];
}

int LaurentTrunc::leading_order() const {
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        if (!coeffs_[j].is_zero()) return start_ + static_cast<int>(j);
    return trunc_order() + 1;
}

LaurentTrunc LaurentTrunc::truncated(int trunc) const {
    if (trunc > trunc_order()) throw std::invalid_argument("LaurentTrunc: cannot raise truncation order");
    if (trunc < start_) return zero(trunc, trunc);
    return LaurentTrunc(start_, std::vector<BigRational>(coeffs_.begin(), coeffs_.begin() + (trunc - start_ + 1)));
}

LaurentTrunc LaurentTrunc::with_start(int start) const {
    if (start >= start_) return *this;
    std::vector<BigRational> v(idx(start_ - start));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return LaurentTrunc(start, std::move(v));
}

LaurentTrunc LaurentTrunc::operator-() const {
    LaurentTrunc r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

LaurentTrunc operator+(const LaurentTrunc& a, const LaurentTrunc& b) {
    const int trunc = std::min(a.trunc_order(), b.trunc_order());
    const int start = std::min(std::min(a.start_, b.start_), trunc);
    LaurentTrunc r = LaurentTrunc::zero(start, trunc);
    for (int k = start; k <= trunc; ++k) {
        if (k >= a.start_) r.coeffs_[idx(k - start)] += a.coeffs_[idx(k - a.start_)];
        if (k >= b.start_) r.coeffs_[idx(k - start)] += b.coeffs_[idx(k - b.start_)];
    }
    return r;
}

LaurentTrunc operator*(const LaurentTrunc& a, const LaurentTrunc& b) {
    // Unknown tails: a's error O(x^-(Ma+1)) times b's lowest order start_b, and vice versa.
    const int trunc = std::min(a.trunc_order() + b.start_, b.trunc_order() + a.start_);
    const int start = std::min(a.start_ + b.start_, trunc);
    LaurentTrunc r = LaurentTrunc::zero(start, trunc);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        const int oi = a.start_ + static_cast<int>(i);
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            const int o = oi + b.start_ + static_cast<int>(j);
            if (o > trunc) break;
            r.coeffs_[idx(o - start)] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return r;
}

LaurentTrunc LaurentTrunc::scaled(const BigRational& c) const {
    LaurentTrunc r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

LaurentTrunc LaurentTrunc::times(const PolyQ& p) const {
    if (p.is_zero()) return zero(trunc_order(), trunc_order());
    const int d = p.degree();
    const int trunc = trunc_order() - d;
    const int start = std::min(start_ - d, trunc);
    LaurentTrunc r = zero(start, trunc);
    for (int e = 0; e <= d; ++e) {
        const BigRational& pc = p.coefficients()[idx(e)];
        if (pc.is_zero()) continue;
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
            const int o = start_ + static_cast<int>(j) - e;
            if (o > trunc) break;
            r.coeffs_[idx(o - start)] += pc * coeffs_[j];
        }
    }
    return r;
}

LaurentTrunc LaurentTrunc::derivative() const {
    // d/dx x^-k = -k x^-(k+1)
    const int trunc = trunc_order() + 1;
    const int start = start_ + 1;
    LaurentTrunc r = zero(start, trunc);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        const int k = start_ + static_cast<int>(j);
        r.coeffs_[j] = coeffs_[j] * BigRational(static_cast<long>(-k));
    }
    return r;
}

bool LaurentTrunc::agrees_with(const LaurentTrunc& o) const {
    return (*this - o).is_zero_to_precision();
}

std::string LaurentTrunc::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const int k = start_ + static_cast<int>(j);
        os << coeffs_[j];
        if (k != 0) os << "*x^" << -k;
    }
    if (first) os << "0";
    os << " + O(x^" << -(trunc_order() + 1) << ")";
    return os.str();
}

LaurentTrunc ratfunc_to_laurent(const RatFunc& r, int M) {
    const PolyQ& num = r.num();
    const PolyQ& den = r.den();
    const int D = den.degree();
    if (num.degree() >= D)
        throw std::invalid_argument("ratfunc_to_laurent: numerator degree must be below denominator degree");
    if (M < 1) return LaurentTrunc::zero(M, M);
    // den(x) * sum_{j>=1} c_j x^-j = num(x); match the coefficient of x^(D-j).
    std::vector<BigRational> c(idx(M + 1));
    const BigRational lead_inv = den.leading().inverse();
    for (int j = 1; j <= M; ++j) {
        BigRational acc = (D - j >= 0) ? num.coeff(idx(D - j)) : BigRational{};
        for (int i = 0; i < D; ++i) {
            const int m = i + j - D;
            if (m >= 1) acc -= den.coeff(idx(i)) * c[idx(m)];
        }
        c[idx(j)] = acc * lead_inv;
    }
    return LaurentTrunc(1, std::vector<BigRational>(c.begin() + 1, c.end()));
}

LaurentTrunc laurent_shift(const LaurentTrunc& a, const BigRational& shift) {
    if (shift.is_zero()) return a;
    // (x + s)^-k = sum_j C(-k, j) s^j x^-(k+j)
    const int trunc = a.trunc_order();
    const int start = a.start_order();
    std::vector<BigRational> out(idx(trunc - start + 1));
    std::vector<BigRational> spow{BigRational(1L)};
    for (int j = 1; j <= trunc - start; ++j) spow.push_back(spow.back() * shift);
    for (int k = start; k <= trunc; ++k) {
        const BigRational ak = a.coeff(k);
        if (ak.is_zero()) continue;
        for (int j = 0; k + j <= trunc; ++j) {
            const BigInt b = binomial(-k, j);
            if (b == 0) break;  // only for k <= 0: the expansion terminates
            out[idx(k + j - start)] += ak * BigRational(b) * spow[idx(j)];
        }
    }
    return LaurentTrunc(start, std::move(out));
}

LaurentTrunc laurent_scale(const LaurentTrunc& a, const BigRational& c) {
    if (c.is_zero()) throw std::invalid_argument("laurent_scale: zero scale factor");
    std::vector<BigRational> out = a.coefficients();
    for (std::size_t j = 0; j < out.size(); ++j) {
        const int k = a.start_order() + static_cast<int>(j);
        if (!out[j].is_zero()) out[j] *= pow(c, -k);
    }
    return LaurentTrunc(a.start_order(), std::move(out));
}

LaurentTrunc fc_laurent(unsigned n, FcVariant variant, int M) {
    if (M < static_cast<int>(n) + 1)
        throw std::invalid_argument("fc_laurent: truncation order below the leading term");
    const RatFunc f = variant == FcVariant::X ? falling_fraction(n) : falling_fraction_reflected(n);
    return ratfunc_to_laurent(f, M);
}

}  // namespace lpadic
