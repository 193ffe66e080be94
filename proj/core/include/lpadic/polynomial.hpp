#pragma once

// Dense univariate polynomials over an exact ring. Nesting Polynomial<Polynomial<...>>
// gives multivariate polynomials with a fixed variable order.

#include "lpadic/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace lpadic {

template <class R>
class Polynomial {
public:
    using coefficient_type = R;

    Polynomial() = default;
    Polynomial(const R& c) { if (!(c == R{})) coeffs_.push_back(c); }  // NOLINT
    Polynomial(long c) : Polynomial(R(c)) {}  // NOLINT
    Polynomial(int c) : Polynomial(R(static_cast<long>(c))) {}  // NOLINT
    Polynomial(std::initializer_list<R> low_to_high) : coeffs_(low_to_high) { trim(); }
    explicit Polynomial(std::vector<R> low_to_high) : coeffs_(std::move(low_to_high)) { trim(); }

    /// The polynomial variable itself.
    static Polynomial variable() { return Polynomial(std::vector<R>{R{}, R(1L)}); }
    static Polynomial monomial(const R& c, std::size_t degree) {
        std::vector<R> v(degree + 1);
        v[degree] = c;
        return Polynomial(std::move(v));
    }

    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<R>& coefficients() const { return coeffs_; }
    R coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : R{}; }
    R leading() const { return coeffs_.empty() ? R{} : coeffs_.back(); }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == R{}) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Multiplies every innermost rational coefficient by c.
    Polynomial scaled(const BigRational& c) const {
        Polynomial r = *this;
        for (auto& x : r.coeffs_) {
            if constexpr (std::is_same_v<R, BigRational>) x *= c;
            else x = x.scaled(c);
        }
        r.trim();
        return r;
    }

    /// Horner evaluation at a point of any ring S that R embeds into.
    template <class S>
    S evaluate(const S& at) const {
        S acc{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + S(*it);
        return acc;
    }

    /// p(q(x)).
    Polynomial compose(const Polynomial& inner) const { return evaluate<Polynomial>(inner); }

    /// p(x + shift).
    Polynomial shifted(const R& shift) const { return compose(variable() + Polynomial(shift)); }

    Polynomial derivative() const {
        if (coeffs_.size() < 2) return {};
        std::vector<R> out(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * R(static_cast<long>(i));
        return Polynomial(std::move(out));
    }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const R& c = coeffs_[static_cast<std::size_t>(i)];
            if (c == R{}) continue;
            if (!first) os << " + ";
            first = false;
            std::string cs;
            if constexpr (std::is_same_v<R, BigRational>) cs = c.to_string();
            else cs = "(" + c.to_string() + ")";
            if (i == 0) { os << cs; continue; }
            if (!(c == R(1L))) os << cs << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        return os.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == R{}) coeffs_.pop_back();
    }

    std::vector<R> coeffs_;
};

using PolyQ = Polynomial<BigRational>;

/// Euclidean division over Q: a = q*b + r with deg r < deg b.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);

/// Monic gcd (zero if both inputs are zero).
PolyQ gcd(PolyQ a, PolyQ b);

/// a / b, throwing if b does not divide a.
PolyQ exact_div(const PolyQ& a, const PolyQ& b);

}  // namespace lpadic
