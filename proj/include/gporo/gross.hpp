#pragma once

/**
 * @file gross.hpp
 * @brief Exact arithmetic on gross-numbers.
 *
 * A gross-number here is a finite sum of two kinds of monomials in the
 * infinite unit g:
 *
 *   polynomial   coeff * g^power            (rational coeff != 0, rational power)
 *   exponential  coeff * prod p_i^(a_i*g + b_i)
 *                (distinct prime bases p_i, rational a_i != 0, integer b_i)
 *
 * Canonical form makes equality syntactic:
 *   - rational bases are rewritten over their prime factorizations, so
 *     (20/27)^(g-1) is stored as 2^(2g-2) * 5^(g-1) * 3^(-3g+3);
 *   - exponential terms sharing the same growth part {p_i -> a_i} are merged
 *     by folding each term's finite size coeff * prod p_i^(b_i) into a single
 *     rational, which is then re-split so that b_i is exactly the p_i-adic
 *     valuation of that rational and coeff is coprime to every base. This is
 *     what lets 2^(g+1) + 2^(g+2) - 6*2^g cancel to zero exactly.
 *
 * Ordering convention: values are compared by their dominant term, with
 * exponentially-growing terms above every power of g, and every power of g
 * above exponentially-vanishing terms (standard asymptotic dominance,
 * instantiated at the fixed infinite integer g). Two exponential terms are
 * ordered by exact comparison of their growth keys prod p_i^(a_i), cleared of
 * denominators. Under this order "the part is less than the whole":
 * g > g-1 > g-2 > ... > every finite integer.
 *
 * The fragment is closed under +, -, * and under the power and reciprocal
 * operations used by the expression language; anything that would leave it
 * (surds such as 2^(1/2), mixed monomials g^p * r^g, gross exponents on gross
 * bases) raises unsupported_error instead of being approximated.
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gporo/errors.hpp>
#include <gporo/primes.hpp>
#include <gporo/rational.hpp>

namespace gporo {

/// Linear form a*g + b over the rationals.
struct GrossLinear {
    BigRational a;  // coefficient of g
    BigRational b;  // finite offset

    GrossLinear() = default;
    GrossLinear(BigRational a_, BigRational b_) : a(std::move(a_)), b(std::move(b_)) {}

    static GrossLinear finite(BigRational v) { return {BigRational(0), std::move(v)}; }
    static GrossLinear gross() { return {BigRational(1), BigRational(0)}; }

    bool is_finite() const { return a.is_zero(); }
    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    GrossLinear scaled(const BigRational& r) const { return {a * r, b * r}; }
    GrossLinear operator+(const GrossLinear& o) const { return {a + o.a, b + o.b}; }
    GrossLinear operator-() const { return {-a, -b}; }
    GrossLinear operator-(const GrossLinear& o) const { return {a - o.a, b - o.b}; }

    friend bool operator==(const GrossLinear&, const GrossLinear&) = default;

    std::string str() const;
};

/// coeff * g^power
struct PolyTerm {
    BigRational coeff;
    BigRational power;
    friend bool operator==(const PolyTerm&, const PolyTerm&) = default;
};

/// prime^(a*g + b); a != 0 and b an integer in canonical form
struct ExpFactor {
    BigInt prime;
    GrossLinear exponent;
    friend bool operator==(const ExpFactor&, const ExpFactor&) = default;
};

/// coeff * prod factors; bases are distinct primes in ascending order and
/// coeff is coprime to every base
struct ExpTerm {
    BigRational coeff;
    std::vector<ExpFactor> factors;
    friend bool operator==(const ExpTerm&, const ExpTerm&) = default;
};

enum class NumClass {
    ExponentiallyInfinite,
    PolynomiallyInfinite,
    Finite,
    PolynomiallyInfinitesimal,
    ExponentiallyInfinitesimal,
    Zero,
};

inline const char* to_string(NumClass c) {
    switch (c) {
        case NumClass::ExponentiallyInfinite: return "ExponentiallyInfinite";
        case NumClass::PolynomiallyInfinite: return "PolynomiallyInfinite";
        case NumClass::Finite: return "Finite";
        case NumClass::PolynomiallyInfinitesimal: return "PolynomiallyInfinitesimal";
        case NumClass::ExponentiallyInfinitesimal: return "ExponentiallyInfinitesimal";
        case NumClass::Zero: return "Zero";
    }
    return "?";
}

/// Multiplicative factor base^exponent prior to normalization; any positive
/// rational base is accepted (negative or zero bases only with plain integer
/// exponents).
struct RawFactor {
    BigRational base;
    GrossLinear exponent;
};

/// Additive term coeff * g^power * prod(factors) prior to normalization.
/// power must be zero when factors are present.
struct RawTerm {
    BigRational coeff{1};
    BigRational power{0};
    std::vector<RawFactor> factors;
};

namespace detail {

/// prime -> coefficient of g in the factor exponent (nonzero entries only)
using GrowthMap = std::map<BigInt, BigRational>;

/// Exact order of prod p^x_p versus prod p^y_p as real numbers: clear the
/// rational exponents by their common denominator and compare the resulting
/// integer-exponent products.
inline std::strong_ordering growth_order(const GrowthMap& x, const GrowthMap& y) {
    std::map<BigInt, BigRational> diff;
    for (const auto& [p, a] : x) diff[p] += a;
    for (const auto& [p, a] : y) diff[p] -= a;
    BigInt den_lcm = 1;
    for (auto it = diff.begin(); it != diff.end();) {
        if (it->second.is_zero()) {
            it = diff.erase(it);
        } else {
            den_lcm = boost::multiprecision::lcm(den_lcm, it->second.denominator());
            ++it;
        }
    }
    if (diff.empty()) return std::strong_ordering::equal;
    BigInt num = 1, den = 1;
    for (const auto& [p, d] : diff) {
        BigInt e = d.numerator() * (den_lcm / d.denominator());
        BigInt mag = e < 0 ? BigInt(-e) : e;
        if (mag > 10'000'000) throw unsupported_error("growth exponent too large: " + e.str());
        if (e > 0)
            num *= boost::multiprecision::pow(p, mag.convert_to<unsigned>());
        else
            den *= boost::multiprecision::pow(p, mag.convert_to<unsigned>());
    }
    if (num < den) return std::strong_ordering::less;
    if (num > den) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

inline GrowthMap growth_of(const ExpTerm& t) {
    GrowthMap g;
    for (const auto& f : t.factors) g.emplace(f.prime, f.exponent.a);
    return g;
}

/// coeff * prod p^b, the exact rational "finite size" of the term.
inline BigRational scalar_of(const ExpTerm& t) {
    BigRational c = t.coeff;
    for (const auto& f : t.factors)
        c *= BigRational::pow(BigRational(f.prime), f.exponent.b.as_integer());
    return c;
}

inline bool growth_above_one(const ExpTerm& t) {
    return growth_order(growth_of(t), GrowthMap{}) == std::strong_ordering::greater;
}

/// Valuation of a nonzero rational at prime p (negative when p divides the
/// denominator).
inline long long rational_valuation(const BigRational& q, const BigInt& p) {
    if (q.numerator() % p == 0) return integer_valuation(q.numerator(), p);
    return -integer_valuation(q.denominator(), p);
}

}  // namespace detail

class GrossValue {
public:
    GrossValue() = default;  // zero
    GrossValue(BigRational r) {
        if (!r.is_zero()) poly_.push_back({std::move(r), BigRational(0)});
    }
    GrossValue(long long n) : GrossValue(BigRational(n)) {}
    GrossValue(int n) : GrossValue(BigRational(n)) {}

    static GrossValue grossone() { return poly(BigRational(1), BigRational(1)); }

    static GrossValue poly(BigRational coeff, BigRational power) {
        GrossValue v;
        if (!coeff.is_zero()) v.poly_.push_back({std::move(coeff), std::move(power)});
        std::sort(v.poly_.begin(), v.poly_.end(),
                  [](const PolyTerm& a, const PolyTerm& b) { return a.power > b.power; });
        return v;
    }

    /// base^(a*g + b) for a rational base, normalized. Rejects what cannot be
    /// represented exactly: nonpositive bases under gross or fractional
    /// exponents, and surviving non-integer exponents on prime bases.
    static GrossValue power_of(const BigRational& base, const GrossLinear& e);

    /// Normalization entry point for raw term lists.
    static GrossValue from_terms(const std::vector<RawTerm>& terms);

    bool is_zero() const { return poly_.empty() && exp_.empty(); }

    /// True for plain finite rationals (including zero).
    bool is_rational() const {
        return is_zero() || (exp_.empty() && poly_.size() == 1 && poly_[0].power.is_zero());
    }

    BigRational as_rational() const {
        if (is_zero()) return BigRational(0);
        if (!is_rational()) throw domain_error("gross value " + str() + " is not a plain rational");
        return poly_[0].coeff;
    }

    /// Coefficient at g^0 (the rational part of a Finite-class value).
    BigRational finite_part() const {
        for (const auto& t : poly_)
            if (t.power.is_zero()) return t.coeff;
        return BigRational(0);
    }

    bool has_infinite_terms() const {
        if (!exp_.empty() && detail::growth_above_one(exp_.front())) return true;
        return !poly_.empty() && poly_.front().power.sign() > 0;
    }

    bool has_infinitesimal_terms() const {
        if (!exp_.empty() && !detail::growth_above_one(exp_.back())) return true;
        return !poly_.empty() && poly_.back().power.sign() < 0;
    }

    const std::vector<PolyTerm>& poly_terms() const { return poly_; }
    const std::vector<ExpTerm>& exp_terms() const { return exp_; }

    /// Sign of the value under the dominance order: the sign of the
    /// coefficient of the asymptotically largest term.
    int sign() const {
        if (!exp_.empty() && detail::growth_above_one(exp_.front())) return exp_.front().coeff.sign();
        if (!poly_.empty()) return poly_.front().coeff.sign();
        if (!exp_.empty()) return exp_.front().coeff.sign();
        return 0;
    }

    NumClass classify() const {
        if (!exp_.empty() && detail::growth_above_one(exp_.front()))
            return NumClass::ExponentiallyInfinite;
        if (!poly_.empty()) {
            int s = poly_.front().power.sign();
            if (s > 0) return NumClass::PolynomiallyInfinite;
            if (s == 0) return NumClass::Finite;
            return NumClass::PolynomiallyInfinitesimal;
        }
        if (!exp_.empty()) return NumClass::ExponentiallyInfinitesimal;
        return NumClass::Zero;
    }

    GrossValue operator-() const {
        GrossValue v = *this;
        for (auto& t : v.poly_) t.coeff = -t.coeff;
        for (auto& t : v.exp_) t.coeff = -t.coeff;
        return v;
    }

    friend GrossValue operator+(const GrossValue& x, const GrossValue& y);
    friend GrossValue operator-(const GrossValue& x, const GrossValue& y) { return x + (-y); }
    friend GrossValue operator*(const GrossValue& x, const GrossValue& y);
    friend GrossValue operator/(const GrossValue& x, const GrossValue& y) {
        return x * y.reciprocal();
    }

    /// this^(a*g + b) within the supported fragment.
    GrossValue pow(const GrossLinear& e) const;

    /// 1/this; defined for nonzero single-monomial values.
    GrossValue reciprocal() const;

    /// Exact rational value with g replaced by the positive integer n.
    BigRational substitute(long long n) const;

    friend std::strong_ordering compare(const GrossValue& x, const GrossValue& y) {
        GrossValue d = x - y;
        int s = d.sign();
        if (s > 0) return std::strong_ordering::greater;
        if (s < 0) return std::strong_ordering::less;
        return std::strong_ordering::equal;
    }

    /// Structural equality; on canonical forms this coincides with value
    /// equality (and with compare(x, y) == equal).
    friend bool operator==(const GrossValue&, const GrossValue&) = default;
    friend std::strong_ordering operator<=>(const GrossValue& x, const GrossValue& y) {
        return compare(x, y);
    }

    /// Canonical rendering; parsing it back yields an equal value.
    std::string str() const;

    class Builder;

private:
    std::vector<PolyTerm> poly_;  // descending power
    std::vector<ExpTerm> exp_;    // descending growth key
};

/// Accumulates terms and emits a canonical GrossValue. Exponential terms are
/// keyed by their growth part; each key's total rational multiplier is summed
/// exactly and re-split on emission.
class GrossValue::Builder {
public:
    void add_poly(const BigRational& coeff, const BigRational& power) {
        if (coeff.is_zero()) return;
        auto [it, fresh] = poly_.try_emplace(power, coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second.is_zero()) poly_.erase(it);
        }
    }

    /// scalar = coeff * prod p^b for the factor multiset described by growth.
    void add_exp(const BigRational& scalar, detail::GrowthMap growth) {
        if (scalar.is_zero()) return;
        for (auto it = growth.begin(); it != growth.end();)
            it = it->second.is_zero() ? growth.erase(it) : std::next(it);
        if (growth.empty()) {
            add_poly(scalar, BigRational(0));
            return;
        }
        auto [it, fresh] = exp_.try_emplace(std::move(growth), scalar);
        if (!fresh) {
            it->second += scalar;
            if (it->second.is_zero()) exp_.erase(it);
        }
    }

    void add_value(const GrossValue& v, int sign = 1) {
        for (const auto& t : v.poly_) add_poly(sign < 0 ? -t.coeff : t.coeff, t.power);
        for (const auto& t : v.exp_) {
            BigRational s = detail::scalar_of(t);
            add_exp(sign < 0 ? -s : s, detail::growth_of(t));
        }
    }

    GrossValue build() const {
        GrossValue v;
        v.poly_.reserve(poly_.size());
        for (auto it = poly_.rbegin(); it != poly_.rend(); ++it)
            v.poly_.push_back({it->second, it->first});
        v.exp_.reserve(exp_.size());
        for (const auto& [growth, scalar] : exp_) {
            ExpTerm t;
            BigRational c = scalar;
            for (const auto& [p, a] : growth) {
                long long b = detail::rational_valuation(scalar, p);
                t.factors.push_back({p, GrossLinear{a, BigRational(b)}});
                if (b != 0) c /= BigRational::pow(BigRational(p), BigInt(b));
            }
            t.coeff = c;
            v.exp_.push_back(std::move(t));
        }
        std::sort(v.exp_.begin(), v.exp_.end(), [](const ExpTerm& a, const ExpTerm& b) {
            return detail::growth_order(detail::growth_of(a), detail::growth_of(b)) ==
                   std::strong_ordering::greater;
        });
        return v;
    }

private:
    std::map<BigRational, BigRational> poly_;          // power -> coeff
    std::map<detail::GrowthMap, BigRational> exp_;     // growth -> total scalar
};

inline GrossValue operator+(const GrossValue& x, const GrossValue& y) {
    GrossValue::Builder b;
    b.add_value(x);
    b.add_value(y);
    return b.build();
}

inline GrossValue operator*(const GrossValue& x, const GrossValue& y) {
    GrossValue::Builder b;
    for (const auto& xt : x.poly_)
        for (const auto& yt : y.poly_) b.add_poly(xt.coeff * yt.coeff, xt.power + yt.power);
    auto poly_times_exp = [&b](const PolyTerm& pt, const ExpTerm& et) {
        if (!pt.power.is_zero())
            throw unsupported_error("mixed monomial g^" + pt.power.str() +
                                    " times an exponential term is not representable");
        b.add_exp(pt.coeff * detail::scalar_of(et), detail::growth_of(et));
    };
    for (const auto& xt : x.poly_)
        for (const auto& yt : y.exp_) poly_times_exp(xt, yt);
    for (const auto& yt : y.poly_)
        for (const auto& xt : x.exp_) poly_times_exp(yt, xt);
    for (const auto& xt : x.exp_)
        for (const auto& yt : y.exp_) {
            detail::GrowthMap g = detail::growth_of(xt);
            for (const auto& [p, a] : detail::growth_of(yt)) g[p] += a;
            b.add_exp(detail::scalar_of(xt) * detail::scalar_of(yt), std::move(g));
        }
    return b.build();
}

inline GrossValue GrossValue::power_of(const BigRational& base, const GrossLinear& e) {
    if (base.is_zero()) {
        if (!e.is_finite()) throw unsupported_error("zero base raised to a gross exponent");
        int s = e.b.sign();
        if (s > 0) return GrossValue{};
        if (s == 0) return GrossValue{BigRational(1)};
        throw domain_error("zero base raised to a negative exponent");
    }
    if (e.is_zero() || base.is_one()) return GrossValue{BigRational(1)};
    if (e.is_finite() && e.b.is_integer())
        return GrossValue{BigRational::pow(base, e.b.as_integer())};
    if (base.sign() < 0)
        throw unsupported_error(e.is_finite()
                                    ? "negative base with a fractional exponent"
                                    : "negative base raised to a gross exponent");

    // positive base, exponent gross or a non-integer rational: rewrite over
    // the prime factorization and check what survives
    Builder b;
    detail::GrowthMap growth;
    BigRational folded(1);
    auto absorb = [&](const BigInt& p, long long mult) {
        GrossLinear fe = e.scaled(BigRational(mult));
        if (!fe.b.is_integer())
            throw unsupported_error(fe.a.is_zero()
                                        ? "irrational surd: " + p.str() + "^" + fe.b.str()
                                        : "non-integer finite exponent part on base " + p.str());
        if (!fe.a.is_zero()) growth[p] += fe.a;
        folded *= BigRational::pow(BigRational(p), fe.b.as_integer());
    };
    for (const auto& [p, m] : factorize(base.numerator())) absorb(p, m);
    for (const auto& [p, m] : factorize(base.denominator())) absorb(p, -m);
    b.add_exp(folded, std::move(growth));
    return b.build();
}

inline GrossValue GrossValue::from_terms(const std::vector<RawTerm>& terms) {
    Builder b;
    for (const auto& t : terms) {
        if (t.factors.empty()) {
            b.add_poly(t.coeff, t.power);
            continue;
        }
        if (!t.power.is_zero())
            throw unsupported_error("term mixes a g power with exponential factors");
        GrossValue prod{t.coeff};
        for (const auto& f : t.factors) prod = prod * power_of(f.base, f.exponent);
        b.add_value(prod);
    }
    return b.build();
}

inline GrossValue GrossValue::pow(const GrossLinear& e) const {
    if (is_rational()) return power_of(as_rational(), e);
    if (e.is_zero()) return GrossValue{BigRational(1)};

    if (exp_.empty() && poly_.size() == 1) {
        if (!e.is_finite())
            throw unsupported_error("gross base raised to a gross exponent");
        const PolyTerm& t = poly_.front();
        BigRational scale = power_of(t.coeff, e).as_rational();
        return poly(scale, t.power * e.b);
    }
    if (poly_.empty() && exp_.size() == 1) {
        if (!e.is_finite())
            throw unsupported_error("exponential base raised to a gross exponent");
        const ExpTerm& t = exp_.front();
        BigRational scale = power_of(detail::scalar_of(t), e).as_rational();
        detail::GrowthMap g;
        for (const auto& f : t.factors) g.emplace(f.prime, f.exponent.a * e.b);
        Builder b;
        b.add_exp(scale, std::move(g));
        return b.build();
    }

    if (!e.is_finite() || !e.b.is_integer())
        throw unsupported_error("sum raised to a non-integer or gross exponent");
    BigInt k = e.b.as_integer();
    if (k < 0) throw unsupported_error("sum raised to a negative exponent");
    if (k > 10000) throw unsupported_error("expansion exponent too large: " + k.str());
    GrossValue acc{BigRational(1)};
    GrossValue sq = *this;
    auto kk = k.convert_to<unsigned long long>();
    while (kk > 0) {
        if (kk & 1) acc = acc * sq;
        kk >>= 1;
        if (kk) sq = sq * sq;
    }
    return acc;
}

inline GrossValue GrossValue::reciprocal() const {
    if (is_zero()) throw domain_error("division by zero");
    if (is_rational()) return GrossValue{as_rational().reciprocal()};
    if (exp_.empty() && poly_.size() == 1)
        return poly(poly_.front().coeff.reciprocal(), -poly_.front().power);
    if (poly_.empty() && exp_.size() == 1) {
        const ExpTerm& t = exp_.front();
        detail::GrowthMap g;
        for (const auto& f : t.factors) g.emplace(f.prime, -f.exponent.a);
        Builder b;
        b.add_exp(detail::scalar_of(t).reciprocal(), std::move(g));
        return b.build();
    }
    throw unsupported_error("division by a multi-term gross value");
}

inline BigRational GrossValue::substitute(long long n) const {
    if (n < 1) throw domain_error("substitution requires a positive integer for g");
    BigRational total(0);
    for (const auto& t : poly_) {
        if (!t.power.is_integer())
            throw noninteger_exponent_error("power " + t.power.str() + " of g is not an integer");
        total += t.coeff * BigRational::pow(BigRational(n), t.power.as_integer());
    }
    for (const auto& t : exp_) {
        BigRational v = t.coeff;
        for (const auto& f : t.factors) {
            BigRational ex = f.exponent.a * BigRational(n) + f.exponent.b;
            if (!ex.is_integer())
                throw noninteger_exponent_error("exponent " + f.exponent.str() + " at g = " +
                                                std::to_string(n) + " is not an integer");
            v *= BigRational::pow(BigRational(f.prime), ex.as_integer());
        }
        total += v;
    }
    return total;
}

// ---- rendering ----

namespace detail {

inline std::string coeff_factor_str(const BigRational& c) {
    return c.is_integer() ? c.str() : "(" + c.str() + ")";
}

/// a*g + b with a != 0, rendered so the expression parser reads it back.
inline std::string linear_str(const BigRational& a, const BigRational& b) {
    std::string s;
    if (a.is_one())
        s = "g";
    else if (a == BigRational(-1))
        s = "-g";
    else if (a.is_integer())
        s = a.str() + "*g";
    else if (a.numerator() == 1)
        s = "g/" + a.denominator().str();
    else if (a.numerator() == -1)
        s = "-g/" + a.denominator().str();
    else
        s = "(" + a.str() + ")*g";
    if (b.sign() > 0)
        s += "+" + b.str();
    else if (b.sign() < 0)
        s += "-" + (-b).str();
    return s;
}

struct GroupedBase {
    BigRational base;
    BigRational a0;
    BigRational b0;
};

/// Try to present prod p^(a_p*g + b_p) as base^(a0*g + b0) with a0 > 0:
/// possible exactly when the exponent vectors are integer multiples of one
/// primitive direction. (20/27)^(g-1) round-trips through this.
inline std::optional<GroupedBase> group_factors(const std::vector<ExpFactor>& fs) {
    BigInt num_gcd = 0, den_lcm = 1;
    for (const auto& f : fs) {
        num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::abs(f.exponent.a.numerator()));
        den_lcm = boost::multiprecision::lcm(den_lcm, f.exponent.a.denominator());
    }
    BigRational content(num_gcd, den_lcm);
    std::vector<BigInt> mult;
    mult.reserve(fs.size());
    for (const auto& f : fs) {
        BigRational m = f.exponent.a / content;
        if (!m.is_integer()) return std::nullopt;
        mult.push_back(m.as_integer());
    }
    BigRational b0 = fs[0].exponent.b / BigRational(mult[0]);
    for (std::size_t i = 0; i < fs.size(); ++i)
        if (fs[i].exponent.b != b0 * BigRational(mult[i])) return std::nullopt;
    if (!b0.is_integer()) return std::nullopt;
    BigRational base(1);
    for (std::size_t i = 0; i < fs.size(); ++i)
        base *= BigRational::pow(BigRational(fs[i].prime), mult[i]);
    return GroupedBase{base, content, b0};
}

inline std::string exp_term_str(const ExpTerm& t) {
    const BigRational c = abs(t.coeff);
    std::string body;
    if (auto grp = group_factors(t.factors)) {
        std::string base = grp->base.is_integer() ? grp->base.str() : "(" + grp->base.str() + ")";
        std::string ex = (grp->a0.is_one() && grp->b0.is_zero())
                             ? "g"
                             : "(" + linear_str(grp->a0, grp->b0) + ")";
        body = base + "^" + ex;
    } else {
        for (std::size_t i = 0; i < t.factors.size(); ++i) {
            if (i) body += "*";
            const auto& f = t.factors[i];
            body += f.prime.str() + "^(" + linear_str(f.exponent.a, f.exponent.b) + ")";
        }
    }
    return c.is_one() ? body : coeff_factor_str(c) + "*" + body;
}

inline std::string poly_term_str(const PolyTerm& t) {
    const BigRational c = abs(t.coeff);
    if (t.power.is_zero()) return c.str();
    std::string gpart;
    if (t.power.is_one())
        gpart = "g";
    else if (t.power.is_integer())
        gpart = "g^" + t.power.str();
    else
        gpart = "g^(" + t.power.str() + ")";
    if (c.is_one()) return gpart;
    return coeff_factor_str(c) + "*" + gpart;
}

}  // namespace detail

inline std::string GrossLinear::str() const {
    if (is_finite()) return b.str();
    return detail::linear_str(a, b);
}

inline std::string GrossValue::str() const {
    if (is_zero()) return "0";
    // dominance order: exponentially infinite, powers of g, exponentially
    // infinitesimal; exp_ is sorted by descending growth, so it splits at
    // the first sub-unit growth key
    std::size_t split = 0;
    while (split < exp_.size() && detail::growth_above_one(exp_[split])) ++split;

    std::string out;
    auto append = [&out](int sign, const std::string& mag) {
        if (out.empty())
            out = (sign < 0 ? "-" : "") + mag;
        else
            out += (sign < 0 ? " - " : " + ") + mag;
    };
    for (std::size_t i = 0; i < split; ++i)
        append(exp_[i].coeff.sign(), detail::exp_term_str(exp_[i]));
    for (const auto& t : poly_) append(t.coeff.sign(), detail::poly_term_str(t));
    for (std::size_t i = split; i < exp_.size(); ++i)
        append(exp_[i].coeff.sign(), detail::exp_term_str(exp_[i]));
    return out;
}

}  // namespace gporo
