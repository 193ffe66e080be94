#include "lpadic/lvalues.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace lpadic {

namespace {

long legendre_factorial_valuation(unsigned long k, unsigned long p) {
    long v = 0;
    for (unsigned long q = k / p; q > 0; q /= p) v += static_cast<long>(q);
    return v;
}

long floor_log(unsigned long m, unsigned long p) {
    long e = 0;
    for (unsigned long q = p; q <= m; q *= p) {
        ++e;
        if (q > m / p) break;
    }
    return e;
}

void require_prime(unsigned long p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
}

void require_precision(long N) {
    if (N < 1) throw std::invalid_argument("precision N must be at least 1");
}

/// Prefix products prod_{i<=k} (a + iF), extended on demand.
class RisingProducts {
public:
    RisingProducts(long a, long F) : a_(a), F_(F) {}
    const BigInt& at(std::size_t k) {
        while (prods_.size() <= k) {
            const BigInt factor = BigInt(a_) + BigInt(F_) * static_cast<unsigned long>(prods_.size());
            prods_.push_back(prods_.empty() ? factor : BigInt(prods_.back() * factor));
        }
        return prods_[k];
    }

private:
    long a_;
    long F_;
    std::vector<BigInt> prods_;
};

}  // namespace

EvalPoint EvalPoint::make(long a, long F, unsigned long p) {
    require_prime(p);
    if (F < 2) throw std::invalid_argument("EvalPoint: F must be at least 2");
    if (a < 1 || a >= F) throw std::invalid_argument("EvalPoint: need 1 <= a < F");
    if (F % static_cast<long>(p) != 0)
        throw std::invalid_argument("EvalPoint: p = " + std::to_string(p) + " does not divide F = " + std::to_string(F));
    if (a % static_cast<long>(p) == 0)
        throw std::invalid_argument("EvalPoint: p = " + std::to_string(p) + " divides a = " + std::to_string(a));
    return EvalPoint{a, F, p};
}

long EvalPoint::r() const { return valuation(BigInt(F), p); }

std::string EvalPoint::to_string() const {
    return std::to_string(a) + "/" + std::to_string(F) + " (p=" + std::to_string(p) + ")";
}

CharacterSpec::CharacterSpec(std::string name, long modulus, std::vector<int> values)
    : name_(std::move(name)), f_(modulus), values_(std::move(values)) {
    if (f_ < 1) throw std::invalid_argument("character " + name_ + ": modulus must be positive");
    if (static_cast<long>(values_.size()) != f_)
        throw std::invalid_argument("character " + name_ + ": expected one value per residue");
    for (long i = 0; i < f_; ++i) {
        const int v = values_[static_cast<std::size_t>(i)];
        const bool unit = std::gcd(i, f_) == 1;
        if (v < -1 || v > 1) throw std::invalid_argument("character " + name_ + ": values must be -1, 0 or 1");
        if (unit && v == 0)
            throw std::invalid_argument("character " + name_ + ": missing value at residue " + std::to_string(i));
        if (!unit && v != 0)
            throw std::invalid_argument("character " + name_ + ": nonzero value at non-unit residue " + std::to_string(i));
    }
    for (long i = 0; i < f_; ++i)
        for (long j = 0; j < f_; ++j)
            if (std::gcd(i, f_) == 1 && std::gcd(j, f_) == 1 &&
                (*this)(i * j) != (*this)(i) * (*this)(j))
                throw std::invalid_argument("character " + name_ + " is not multiplicative");
}

int CharacterSpec::operator()(long n) const {
    long r = n % f_;
    if (r < 0) r += f_;
    return values_[static_cast<std::size_t>(r)];
}

CharacterSpec CharacterSpec::trivial() { return CharacterSpec("trivial", 1, {1}); }

CharacterSpec CharacterSpec::builtin(const std::string& name) {
    if (name == "trivial") return trivial();
    if (name == "chi8") return CharacterSpec(name, 8, {0, 1, 0, -1, 0, -1, 0, 1});
    if (name == "chi12") return CharacterSpec(name, 12, {0, 1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1});
    if (name == "chi5") return CharacterSpec(name, 5, {0, 1, -1, -1, 1});
    if (name == "chi4") return CharacterSpec(name, 4, {0, 1, 0, -1});
    throw std::invalid_argument("unknown character '" + name + "'");
}

std::vector<std::string> CharacterSpec::builtin_names() { return {"chi4", "chi5", "chi8", "chi12", "trivial"}; }

std::map<std::string, CharacterSpec> parse_characters(const std::map<std::string, std::string>& entries) {
    struct Pending {
        long modulus = 0;
        std::map<long, int> values;
    };
    std::map<std::string, Pending> pending;
    for (const auto& [key, value] : entries) {
        const auto dot = key.rfind('.');
        if (dot == std::string::npos || dot == 0) continue;
        const std::string name = key.substr(0, dot);
        const std::string field = key.substr(dot + 1);
        if (name == "defaults") continue;
        long number = 0;
        try {
            std::size_t used = 0;
            number = std::stol(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
        } catch (const std::exception&) {
            throw std::invalid_argument("character file: value of " + key + " is not an integer: '" + value + "'");
        }
        if (field == "modulus") {
            pending[name].modulus = number;
            continue;
        }
        if (field.empty() || !std::all_of(field.begin(), field.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw std::invalid_argument("character file: bad residue in key '" + key + "'");
        pending[name].values[std::stol(field)] = static_cast<int>(number);
    }
    std::map<std::string, CharacterSpec> out;
    for (auto& [name, pc] : pending) {
        long f = pc.modulus;
        if (f == 0) {
            std::size_t i = name.size();
            while (i > 0 && std::isdigit(static_cast<unsigned char>(name[i - 1]))) --i;
            if (i == name.size())
                throw std::invalid_argument("character " + name + ": no modulus given and none in the name");
            f = std::stol(name.substr(i));
        }
        if (f < 1) throw std::invalid_argument("character " + name + ": modulus must be positive");
        std::vector<int> values(static_cast<std::size_t>(f), 0);
        for (const auto& [residue, v] : pc.values) {
            if (residue >= f) throw std::invalid_argument("character " + name + ": residue out of range");
            values[static_cast<std::size_t>(residue)] = v;
        }
        out.emplace(name, CharacterSpec(name, f, std::move(values)));
    }
    return out;
}

std::map<std::string, CharacterSpec> load_characters(const std::string& path) {
    boost::property_tree::ptree tree;
    try {
        boost::property_tree::read_ini(path, tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw std::invalid_argument(std::string("cannot read character file: ") + e.what());
    }
    std::map<std::string, std::string> entries;
    for (const auto& [key, node] : tree) {
        if (node.empty()) {
            entries[key] = node.data();
            continue;
        }
        for (const auto& [sub, leaf] : node) entries[key + "." + sub] = leaf.data();
    }
    return parse_characters(entries);
}

PadicApprox eval_series(SeriesKind kind, const EvalPoint& pt, long N) {
    require_precision(N);
    const unsigned long p = pt.p;
    const long r = pt.r();
    const BigRational y(BigInt(-pt.F), BigInt(pt.a));  // -1/x
    switch (kind) {
        case SeriesKind::R:
            return sum_series([&](std::size_t n) { return bernoulli(static_cast<unsigned>(n)) * pow(y, static_cast<long>(n + 1)); },
                              [&](std::size_t n) { return static_cast<long>(n + 1) * r - 1; }, p, N);
        case SeriesKind::Theta:
            return sum_series([&](std::size_t n) { return t_number(static_cast<unsigned>(n)) * pow(y, static_cast<long>(n + 1)); },
                              [&](std::size_t n) { return static_cast<long>(n + 1) * r - 1; }, p, N);
        case SeriesKind::T:
            return sum_series(
                [&](std::size_t n) {
                    return BigRational(static_cast<long>(n + 1)) * bernoulli(static_cast<unsigned>(n)) * pow(y, static_cast<long>(n + 2));
                },
                [&](std::size_t n) { return static_cast<long>(n + 2) * r - 1; }, p, N);
        case SeriesKind::ThetaSmall:
            return sum_series(
                [&](std::size_t i) {
                    const long n = static_cast<long>(i) + 1;
                    return t_number(static_cast<unsigned>(n)) / BigRational(n) * pow(y, n);
                },
                [&](std::size_t i) {
                    const long n = static_cast<long>(i) + 1;
                    return n * r - 1 - floor_log(static_cast<unsigned long>(n), p);
                },
                p, N);
    }
    throw std::logic_error("eval_series: unreachable");
}

PadicApprox eval_series_fc(SeriesKind kind, const EvalPoint& pt, long N) {
    require_precision(N);
    const unsigned long p = pt.p;
    if (kind == SeriesKind::ThetaSmall && p == 2)
        throw std::invalid_argument("eval_series_fc: the 2^-k weights of theta do not converge 2-adically");
    const long r = pt.r();
    RisingProducts at_x(pt.a, pt.F);
    RisingProducts at_reflected(pt.F - pt.a, pt.F);
    // fc(k, a/F) = k! F^(k+1) / prod_{i<=k} (a + iF), with valuation v_p(k!) + (k+1) r.
    auto fc = [&](RisingProducts& prods, std::size_t k) {
        const BigInt num = factorial(k) * pow(BigInt(pt.F), static_cast<unsigned long>(k + 1));
        return BigRational(num, prods.at(k));
    };
    auto vfact = [&](std::size_t k) { return legendre_factorial_valuation(k, p); };
    auto logk1 = [&](std::size_t k) { return floor_log(static_cast<unsigned long>(k + 1), p); };
    auto kk = [](std::size_t k) { return static_cast<long>(k); };
    switch (kind) {
        case SeriesKind::R:
            return sum_series([&](std::size_t k) { return -fc(at_x, k) / BigRational(kk(k) + 1); },
                              [&](std::size_t k) { return vfact(k) + (kk(k) + 1) * r - logk1(k); }, p, N);
        case SeriesKind::Theta:
            // +sum fc fc: the minus-signed sum equals -Theta
            return sum_series([&](std::size_t k) { return fc(at_x, k) * fc(at_reflected, k); },
                              [&](std::size_t k) { return 2 * vfact(k) + 2 * (kk(k) + 1) * r; }, p, N);
        case SeriesKind::T:
            return sum_series([&](std::size_t k) { return -(fc(at_x, k) * fc(at_reflected, k)) / BigRational(kk(k) + 1); },
                              [&](std::size_t k) { return 2 * vfact(k) + 2 * (kk(k) + 1) * r - logk1(k); }, p, N);
        case SeriesKind::ThetaSmall:
            return sum_series([&](std::size_t k) { return fc(at_x, k) / BigRational(pow(BigInt(2), static_cast<unsigned long>(k))); },
                              [&](std::size_t k) { return vfact(k) + (kk(k) + 1) * r; }, p, N);
    }
    throw std::logic_error("eval_series_fc: unreachable");
}

PadicApprox hurwitz_p(long s, long a, long F, unsigned long p, long N) {
    require_prime(p);
    require_precision(N);
    if (s == 1) throw std::invalid_argument("hurwitz_p: pole at s = 1");
    if (F < 1) throw std::invalid_argument("hurwitz_p: F must be positive");
    if (F % static_cast<long>(p) != 0) throw std::invalid_argument("hurwitz_p: p must divide F");
    if (a % static_cast<long>(p) == 0) throw std::invalid_argument("hurwitz_p: p divides a");
    const long r = valuation(BigInt(F), p);
    const long extra = r + valuation(BigInt(s - 1), p);
    const long Nw = N + extra;
    const BigRational ratio{BigInt(F), BigInt(a)};
    const PadicApprox sum = sum_series(
        [&](std::size_t j) {
            const auto jj = static_cast<long>(j);
            return BigRational(binomial(1 - s, jj)) * bernoulli(static_cast<unsigned>(j)) * pow(ratio, jj);
        },
        [&](std::size_t j) { return static_cast<long>(j) * r - 1; }, p, Nw);
    const PadicApprox head = sum.scaled(BigRational(BigInt(1), BigInt(F) * (s - 1)));
    const PadicApprox unit_power = angle(a, p, Nw).pow(1 - s);
    return (unit_power * head).reduced(N);
}

namespace {

long l_period(long f, unsigned long p) {
    return std::lcm(f, p == 2 ? 4L : static_cast<long>(p));
}

}  // namespace

PadicApprox lp(long s, const CharacterSpec& chi, unsigned long p, long N, long period_multiple) {
    require_prime(p);
    if (period_multiple < 1) throw std::invalid_argument("lp: period multiple must be positive");
    const long F = l_period(chi.modulus(), p) * period_multiple;
    PadicApprox acc = PadicApprox::zero(p, N);
    for (long a = 1; a <= F; ++a) {
        if (a % static_cast<long>(p) == 0) continue;
        const int c = chi(a);
        if (c == 0) continue;
        const PadicApprox h = hurwitz_p(s, a, F, p, N);
        acc = c > 0 ? acc + h : acc - h;
    }
    return acc;
}

PadicApprox zeta_p(long s, unsigned long p, long N) {
    require_prime(p);
    if (p == 2) return hurwitz_p(s, 1, 4, 2, N) + hurwitz_p(s, 3, 4, 2, N);
    PadicApprox acc = PadicApprox::zero(p, N);
    for (long a = 1; a < static_cast<long>(p); ++a) acc = acc + hurwitz_p(s, a, static_cast<long>(p), p, N);
    return acc;
}

namespace {

struct IdentitySpec {
    const char* id;
    const char* statement;
    SeriesKind kind;
    long a, F;
    unsigned long p;
    long s;
    BigRational c;
    int zeta_coeff;
    int l_coeff;
    const char* character;
    bool either_sign;
};

const std::vector<IdentitySpec>& identity_table() {
    static const std::vector<IdentitySpec> table = {
        {"cohen1", "Theta_2(1/2) = -8 zeta_2(2)", SeriesKind::Theta, 1, 2, 2, 2, BigRational(-8L), 1, 0, "", true},
        {"cohen2", "Theta_2(1/6) = -40 zeta_2(2)", SeriesKind::Theta, 1, 6, 2, 2, BigRational(-40L), 1, 0, "", false},
        {"cohen3", "Theta_2(1/4) = -16 L_2(2, chi8)", SeriesKind::Theta, 1, 4, 2, 2, BigRational(-16L), 0, 1, "chi8", false},
        {"cohen4", "Theta_3(1/3) = -27 zeta_3(2) / 2", SeriesKind::Theta, 1, 3, 3, 2, BigRational(BigInt(-27), BigInt(2)), 1, 0, "", false},
        {"cohen5", "Theta_3(1/6) = -36 L_3(2, chi12)", SeriesKind::Theta, 1, 6, 3, 2, BigRational(-36L), 0, 1, "chi12", false},
        {"valuesat3_1", "T_2(1/4) = 4^3 zeta_2(3)", SeriesKind::T, 1, 4, 2, 3, BigRational(64L), 1, 0, "", false},
        {"valuesat3_2", "T_3(1/3) = 3^3 zeta_3(3)", SeriesKind::T, 1, 3, 3, 3, BigRational(27L), 1, 0, "", false},
        {"valuesat3_3", "T_5(1/5) = (5^3/2) (zeta_5(3) - L_5(3, chi5))", SeriesKind::T, 1, 5, 5, 3, BigRational(BigInt(125), BigInt(2)), 1, -1, "chi5", false},
        {"valuesat3_4", "T_5(2/5) = (5^3/2) (zeta_5(3) + L_5(3, chi5))", SeriesKind::T, 2, 5, 5, 3, BigRational(BigInt(125), BigInt(2)), 1, 1, "chi5", false},
        {"valuesat3_5", "T_2(1/8) = 2^8 (zeta_2(3) - L_2(3, chi8))", SeriesKind::T, 1, 8, 2, 3, BigRational(256L), 1, -1, "chi8", false},
        {"valuesat3_6", "T_2(3/8) = 2^8 (zeta_2(3) + L_2(3, chi8))", SeriesKind::T, 3, 8, 2, 3, BigRational(256L), 1, 1, "chi8", false},
    };
    return table;
}

}  // namespace

std::vector<std::string> identity_ids() {
    std::vector<std::string> ids;
    for (const auto& spec : identity_table()) ids.emplace_back(spec.id);
    return ids;
}

IdentityReport verify_identity(const std::string& id, long N) {
    if (N < 16) throw std::invalid_argument("verify_identity: N must be at least 16");
    const auto& table = identity_table();
    const auto it = std::find_if(table.begin(), table.end(), [&](const IdentitySpec& s) { return id == s.id; });
    if (it == table.end()) throw std::invalid_argument("unknown identity '" + id + "'");
    const IdentitySpec& spec = *it;
    const unsigned long p = spec.p;

    const PadicApprox lhs = eval_series(spec.kind, EvalPoint::make(spec.a, spec.F, p), N);
    // The constant may carry negative valuation; evaluate the L-values with enough headroom.
    const long Nr = N + std::max(0L, -valuation(spec.c, p));
    auto combine = [&](int l_sign) {
        PadicApprox combo = PadicApprox::zero(p, Nr);
        if (spec.zeta_coeff != 0) combo = combo + zeta_p(spec.s, p, Nr);
        if (spec.l_coeff != 0) {
            const PadicApprox l = lp(spec.s, CharacterSpec::builtin(spec.character), p, Nr);
            combo = l_sign > 0 ? combo + l : combo - l;
        }
        return combo.scaled(spec.c).reduced(N);
    };
    const PadicApprox rhs = combine(spec.l_coeff);

    IdentityReport rep;
    rep.id = spec.id;
    rep.statement = spec.statement;
    rep.precision = N;
    rep.valuation_difference = (lhs - rhs).valuation();
    rep.valuation_sum = (lhs + rhs).valuation();
    const long need = N - 8;
    if (rep.valuation_difference >= need) rep.matched_sign = "stated";
    else if (rep.valuation_sum >= need) rep.matched_sign = "negated";
    else rep.matched_sign = "none";
    rep.matched_form = rep.matched_sign;
    if (spec.zeta_coeff != 0 && spec.l_coeff != 0) {
        const PadicApprox flipped = combine(-spec.l_coeff);
        rep.valuation_difference_flipped = (lhs - flipped).valuation();
        rep.valuation_sum_flipped = (lhs + flipped).valuation();
        if (rep.matched_form == "none") {
            if (rep.valuation_difference_flipped >= need) rep.matched_form = "flipped-character";
            else if (rep.valuation_sum_flipped >= need) rep.matched_form = "negated-flipped-character";
        }
    }
    rep.passed = rep.valuation_difference >= need || (spec.either_sign && rep.valuation_sum >= need);
    rep.lhs = lhs.render();
    rep.rhs = rhs.render();
    return rep;
}

}  // namespace lpadic
