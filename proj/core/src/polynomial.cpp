#include "lpadic/polynomial.hpp"

namespace lpadic {

std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<BigRational> rem = a.coefficients();
    const int db = b.degree();
    const BigRational lead_inv = b.leading().inverse();
    if (a.degree() < db) return {PolyQ{}, a};
    std::vector<BigRational> quo(static_cast<std::size_t>(a.degree() - db + 1));
    for (int i = a.degree(); i >= db; --i) {
        const BigRational c = rem[static_cast<std::size_t>(i)] * lead_inv;
        if (c.is_zero()) continue;
        quo[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeff(static_cast<std::size_t>(j));
    }
    return {PolyQ(std::move(quo)), PolyQ(std::move(rem))};
}

PolyQ gcd(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
        PolyQ r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(a.leading().inverse());
}

PolyQ exact_div(const PolyQ& a, const PolyQ& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("exact_div: divisor does not divide dividend");
    return q;
}

}  // namespace lpadic
