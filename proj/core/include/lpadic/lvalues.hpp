#pragma once

// p-adic values of the Bernoulli series at a/F, the p-adic Hurwitz zeta function,
// Kubota-Leopoldt L-series and the identity suite relating them.

#include "lpadic/bernoulli.hpp"
#include "lpadic/padic.hpp"

#include <map>
#include <string>
#include <vector>

namespace lpadic {

/// A rational point a/F with p | F and p not dividing a.
struct EvalPoint {
    long a = 1;
    long F = 2;
    unsigned long p = 2;

    /// Validates and returns the point; 1 <= a < F is required, gcd(a, F) > 1 is allowed.
    static EvalPoint make(long a, long F, unsigned long p);
    /// v_p(F).
    long r() const;
    BigRational x() const { return {BigInt(a), BigInt(F)}; }
    std::string to_string() const;
};

/// A periodic function with values in {-1, 0, 1}: a quadratic (or trivial) Dirichlet character.
class CharacterSpec {
public:
    /// values[i] is the value at residue i mod modulus; validated on construction.
    CharacterSpec(std::string name, long modulus, std::vector<int> values);

    const std::string& name() const { return name_; }
    long modulus() const { return f_; }
    int operator()(long n) const;
    bool is_even() const { return (*this)(f_ - 1) == 1; }

    static CharacterSpec trivial();
    /// chi8, chi12, chi5 (even primitive quadratic), chi4 (odd), trivial.
    static CharacterSpec builtin(const std::string& name);
    static std::vector<std::string> builtin_names();

private:
    std::string name_;
    long f_;
    std::vector<int> values_;
};

/// Loads characters from an INI file with keys `name.residue = value` (optionally
/// `name.modulus = f`; otherwise the modulus is the trailing number in the name).
/// Other keys are ignored. Throws std::invalid_argument on malformed content.
std::map<std::string, CharacterSpec> load_characters(const std::string& path);
std::map<std::string, CharacterSpec> parse_characters(const std::map<std::string, std::string>& entries);

/// Bernoulli-series value at a/F mod p^N. THETA_SMALL is accepted at every prime: its term
/// valuations are at least nr - 1 - v_p(n), which diverges for r >= 1.
PadicApprox eval_series(SeriesKind kind, const EvalPoint& pt, long N);

/// The same value from the factorial-coefficient sums; rejects THETA_SMALL at p = 2.
PadicApprox eval_series_fc(SeriesKind kind, const EvalPoint& pt, long N);

/// H_p(s, a, F) mod p^N for integer s != 1; requires p | F and p not dividing a.
PadicApprox hurwitz_p(long s, long a, long F, unsigned long p, long N);

/// L_p(s, chi) over the period lcm(f, p) (lcm(f, 4) at p = 2) times `period_multiple`.
PadicApprox lp(long s, const CharacterSpec& chi, unsigned long p, long N, long period_multiple = 1);

/// zeta_p(s).
PadicApprox zeta_p(long s, unsigned long p, long N);

struct IdentityReport {
    std::string id;
    std::string statement;
    long precision = 0;
    /// v_p(lhs - rhs) and v_p(lhs + rhs) with rhs as stated; capped at the precision.
    long valuation_difference = 0;
    long valuation_sum = 0;
    /// "stated", "negated" or "none".
    std::string matched_sign;
    /// For right sides zeta +- L: v_p(lhs -+ rhs') where rhs' flips the sign of the L term.
    /// Both equal -1 when the identity has no such term.
    long valuation_difference_flipped = -1;
    long valuation_sum_flipped = -1;
    /// Which right side agrees to N - 8 digits: "stated", "negated", "flipped-character",
    /// "negated-flipped-character" or "none".
    std::string matched_form;
    bool passed = false;
    std::string lhs;
    std::string rhs;
};

/// Identifiers "cohen1".."cohen5" and "valuesat3_1".."valuesat3_6".
std::vector<std::string> identity_ids();

/// Evaluates both sides independently (Bernoulli series against Hurwitz sums) and passes when
/// the stated difference vanishes to N - 8 digits. For cohen1 either sign is accepted.
IdentityReport verify_identity(const std::string& id, long N);

}  // namespace lpadic
