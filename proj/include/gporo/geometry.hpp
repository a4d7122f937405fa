#pragma once

/**
 * @file geometry.hpp
 * @brief Menger sponge and Sierpinski carpet geometry for finite and gross
 *        iteration indices.
 *
 * Indexing: iteration n = 1 is the unpartitioned cube (count 1, side 1,
 * volume 1); starting level k shifts the window, giving the exponent
 * n + k - 2. A gross index g-m stands for the infinite iteration g shifted
 * by a finite offset m. The carpet uses its own sequences (count 8^e,
 * side 3^-e), which make area = side^2 * count exact.
 */

#include <limits>
#include <string>
#include <string_view>

#include <gporo/gross.hpp>
#include <gporo/highprec.hpp>

namespace gporo {

enum class FractalObject { Sponge, Carpet };

/// Iteration number: a finite positive integer, or g - m for a finite
/// nonnegative offset m.
class IterationIndex {
public:
    static IterationIndex finite(long long n) {
        if (n < 1) throw domain_error("iteration number must be >= 1");
        return IterationIndex(true, n);
    }
    static IterationIndex gross_offset(long long m) {
        if (m < 0) throw domain_error("gross offset must be >= 0");
        return IterationIndex(false, m);
    }

    /// "12", "g", "g-3" (circled-one alias accepted)
    static IterationIndex parse(std::string_view text);

    bool is_finite() const { return finite_; }
    long long finite_n() const { return value_; }
    long long offset() const { return value_; }

    GrossLinear as_linear() const {
        if (finite_) return GrossLinear::finite(BigRational(value_));
        return {BigRational(1), BigRational(-value_)};
    }

    std::string str() const {
        if (finite_) return std::to_string(value_);
        if (value_ == 0) return "g";
        return "g-" + std::to_string(value_);
    }

private:
    IterationIndex(bool finite, long long value) : finite_(finite), value_(value) {}
    bool finite_;
    long long value_;
};

inline IterationIndex IterationIndex::parse(std::string_view text) {
    std::string_view rest;
    if (!text.empty() && text[0] == 'g')
        rest = text.substr(1);
    else if (text.substr(0, 3) == "\xe2\x91\xa0")
        rest = text.substr(3);
    else {
        BigInt v;
        try {
            v = BigRational::parse(text).as_integer();
        } catch (const std::exception&) {
            throw domain_error("iteration index must be an integer, 'g', or 'g-M': '" +
                               std::string(text) + "'");
        }
        if (v < 1 || v > std::numeric_limits<long long>::max())
            throw domain_error("iteration number out of range: '" + std::string(text) + "'");
        return finite(v.convert_to<long long>());
    }
    if (rest.empty()) return gross_offset(0);
    if (rest[0] != '-')
        throw domain_error("gross iteration index must be 'g' or 'g-M': '" + std::string(text) + "'");
    rest.remove_prefix(1);
    if (rest.empty()) throw domain_error("missing offset after 'g-'");
    for (char c : rest)
        if (c < '0' || c > '9')
            throw domain_error("gross iteration offset must be a nonnegative integer: '" +
                               std::string(text) + "'");
    try {
        return gross_offset(std::stoll(std::string(rest)));
    } catch (const std::exception&) {
        throw domain_error("gross iteration offset out of range: '" + std::string(text) + "'");
    }
}

/// Starting level k and iteration number n with 1 <= k <= n.
struct SpongeQuery {
    long long k = 1;
    IterationIndex n = IterationIndex::finite(1);

    void validate() const {
        if (k < 1) throw domain_error("starting level k must be >= 1");
        if (n.is_finite() && n.finite_n() < k)
            throw domain_error("iteration number n = " + std::to_string(n.finite_n()) +
                               " must be >= starting level k = " + std::to_string(k));
    }

    /// n + k - 2
    GrossLinear level_exponent() const {
        return n.as_linear() + GrossLinear::finite(BigRational(k - 2));
    }
};

struct SpongeGeometry {
    GrossValue count;   // 20^(n+k-2)
    GrossValue side;    // 3^-(n+k-2)
    GrossValue volume;  // (20/27)^(n+k-2) = side^3 * count
};

inline SpongeGeometry menger_geometry(const SpongeQuery& q) {
    q.validate();
    GrossLinear e = q.level_exponent();
    return {GrossValue::power_of(BigRational(20), e), GrossValue::power_of(BigRational(3), -e),
            GrossValue::power_of(BigRational(20, 27), e)};
}

struct CarpetGeometry {
    GrossValue count;  // 8^(n+k-2)
    GrossValue side;   // 3^-(n+k-2)
    GrossValue area;   // (8/9)^(n+k-2) = side^2 * count
};

inline CarpetGeometry carpet_geometry(const SpongeQuery& q) {
    q.validate();
    GrossLinear e = q.level_exponent();
    return {GrossValue::power_of(BigRational(8), e), GrossValue::power_of(BigRational(3), -e),
            GrossValue::power_of(BigRational(8, 9), e)};
}

inline GrossValue carpet_area(const SpongeQuery& q) { return carpet_geometry(q).area; }

/// ln20/ln3 (sponge) or ln8/ln3 (carpet) at the given working precision.
inline hp::Real dimension_value(FractalObject o, unsigned digits10) {
    hp::PrecisionGuard guard(digits10);
    hp::Real count(o == FractalObject::Sponge ? 20 : 8);
    return log(count) / log(hp::Real(3));
}

/// The fractal dimension as a decimal string, correctly rounded to `places`
/// digits after the point. Rounding stability is confirmed by recomputing at
/// a higher guard precision.
inline std::string fractal_dimension(FractalObject o, unsigned places) {
    if (places < 1) throw domain_error("precision must be >= 1 digit");
    if (places > 100000) throw domain_error("precision too large");
    std::string prev;
    for (unsigned guard = 30; guard <= 480; guard *= 2) {
        std::string cur = hp::fixed(dimension_value(o, places + guard), places);
        if (!prev.empty() && cur == prev) return cur;
        prev = std::move(cur);
    }
    return prev;
}

/// The finite-n estimate -ln(count)/ln(side) with the classical sequences
/// count = 20^n, side = 3^-n. The ratio is independent of n for this
/// deterministic fractal, so the estimate equals ln20/ln3 at every n.
struct DimensionEstimate {
    BigRational count;  // argument of the numerator log
    BigRational side;   // argument of the denominator log
    double value;
};

inline DimensionEstimate dimension_estimate_at(long long n) {
    if (n < 1) throw domain_error("iteration number must be >= 1");
    BigRational count = BigRational::pow(BigRational(20), BigInt(n));
    BigRational side = BigRational::pow(BigRational(3), BigInt(-n));
    hp::PrecisionGuard guard(40);
    hp::Real value = -log(hp::to_real(count)) / log(hp::to_real(side));
    return {count, side, value.convert_to<double>()};
}

}  // namespace gporo
