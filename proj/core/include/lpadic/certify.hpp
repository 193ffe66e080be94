#pragma once

// Exact symbolic checks: functional equations of Theta, R, T as truncated Laurent series,
// factorial-coefficient sum representations, Pade orders of the convergent families and the
// telescoping (Zeilberger/Gosper) certificates behind them.

#include "lpadic/laurent.hpp"
#include "lpadic/pade.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lpadic {

struct CheckResult {
    std::string id;
    std::string statement;
    bool passed = false;
    /// Highest order 1/x^k through which the difference was examined.
    int verified_order = 0;
    std::optional<int> first_failing_order;
    std::string first_failing_coefficient;
    /// False for supplementary checks that are not themselves quoted identities.
    bool quoted = true;
};

/// Examines lhs - rhs through its truncation order.
CheckResult compare_series(std::string id, std::string statement, const LaurentTrunc& lhs, const LaurentTrunc& rhs,
                           bool quoted = true);

/// The seven quoted functional equations at truncation order M >= 8, followed by supplementary
/// checks (quoted = false): Theta = R(x/2) - 2R(x), T = R', and Theta = (R(x/2) - R(x/2+1/2))/2.
std::vector<CheckResult> check_functional_equations(int M);

/// Partial sums of the four factorial-coefficient representations over k <= K against the
/// Bernoulli series through order M (K >= M), followed by the supplementary check
/// Theta = +sum fc(n,x) fc(n,1-x).
std::vector<CheckResult> check_fc_identities(int M, int K);

struct PadeOrderResult {
    Family family = Family::I;
    int n = 0;
    int order = 0;
    int target_sign = 1;
    bool passed = false;
    /// The remainder p_n - q_n * (sign * series) is known through this order.
    int verified_through = 0;
    /// Order and value of the first nonzero coefficient, if any within verified_through.
    std::optional<int> leading_order;
    BigRational leading_coefficient;
};

/// Forms p_n - q_n * (sign * series) with the remainder known through order M >= order + 4 and
/// checks that every coefficient below the family's quoted order vanishes.
PadeOrderResult check_pade_order(Family f, int n, int M, int target_sign = 1);

/// The remainder series Theta(n,x), R(n,x), T(n,x) or theta(n,x) from its defining sum over
/// n <= k <= K, through order M.
LaurentTrunc remainder_sum(Family f, int n, int M, int K);

/// The n = 0 inhomogeneous relations of families I-III with the remainders summed to K terms,
/// compared through order M. A failing relation is followed by a supplementary check of the
/// same relation with the right side negated.
std::vector<CheckResult> check_base_cases(int K = 30, int M = 20);

// ---------------------------------------------------------------------------------------------
// Certificates

/// Polynomials in k (outer), n, x (inner).
using Poly3 = Polynomial<Polynomial<PolyQ>>;

namespace sym {
Poly3 k();
Poly3 n();
Poly3 x();
Poly3 c(long v);
Poly3 c(const BigRational& v);
}  // namespace sym

/// A quotient of trivariate polynomials. Not reduced; equality is by cross-multiplication.
class RatFunc3 {
public:
    RatFunc3() : num_(), den_(1L) {}
    RatFunc3(const Poly3& p) : num_(p), den_(1L) {}  // NOLINT(google-explicit-constructor)
    RatFunc3(Poly3 num, Poly3 den);

    const Poly3& num() const { return num_; }
    const Poly3& den() const { return den_; }

    friend RatFunc3 operator+(const RatFunc3& a, const RatFunc3& b);
    friend RatFunc3 operator-(const RatFunc3& a, const RatFunc3& b);
    friend RatFunc3 operator*(const RatFunc3& a, const RatFunc3& b);
    friend RatFunc3 operator/(const RatFunc3& a, const RatFunc3& b);
    friend bool operator==(const RatFunc3& a, const RatFunc3& b);

    /// Substitutes k -> k + 1.
    RatFunc3 k_shifted() const;

private:
    Poly3 num_;
    Poly3 den_;
};

/// Hypergeometric factors in (k, n) whose shift quotients are rational in (k, n, x).
enum class TermFactor {
    SignN,            ///< (-1)^n
    BinomialKN,       ///< C(k, n)
    FcX,              ///< fc(k, x)
    FcOneMinusX,      ///< fc(k, 1 - x)
    FcXPlusOne,       ///< fc(k, x + 1)
    NFactorialRising, ///< n! / ((k+1)(k+2)...(k+n+1))
};

/// Sum_i coeff_i(n,x) F(k, n+i) = G(k+1, n) - G(k, n) with G = multiplier * F, where the sum runs
/// over the shifts i = -1, 0, 1 present. A Gosper certificate uses only i = 0.
struct CertificateCase {
    std::string id;
    std::string statement;
    std::vector<TermFactor> term;
    Poly3 coeff_minus;  ///< coefficient of F(k, n-1)
    Poly3 coeff_zero;   ///< coefficient of F(k, n)
    Poly3 coeff_plus;   ///< coefficient of F(k, n+1)
    RatFunc3 multiplier;
};

/// F(k+1,n)/F(k,n), F(k,n+1)/F(k,n), F(k,n-1)/F(k,n) for a product of factors.
RatFunc3 ratio_k(const std::vector<TermFactor>& term);
RatFunc3 ratio_n_plus(const std::vector<TermFactor>& term);
RatFunc3 ratio_n_minus(const std::vector<TermFactor>& term);

/// Divides the claimed identity by F(k,n) and compares the rational functions exactly.
/// Throws std::invalid_argument on a zero denominator.
bool verify_certificate(const CertificateCase& c);

struct CertificateOutcome {
    std::string id;
    std::string statement;
    bool verified = false;
    /// Whether the identity holds with the multiplier negated (informational).
    bool negated_multiplier_verifies = false;
};

CertificateOutcome check_certificate(const CertificateCase& c);

/// Three Zeilberger certificates (families I-III) and three Gosper certificates.
std::vector<CertificateCase> certificate_catalog();
/// Nine single-factor corruptions of catalog multipliers; none should verify.
std::vector<CertificateCase> mutated_certificates();

}  // namespace lpadic
