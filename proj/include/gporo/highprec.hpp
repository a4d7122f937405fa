#pragma once

/**
 * @file highprec.hpp
 * @brief Arbitrary-precision decimal evaluation (MPFR-backed).
 *
 * Only the approximate paths use this: fractal dimensions and Turcotte
 * scaling, where the exponent 3 - ln20/ln3 is irrational. The exact rational
 * and gross-number paths never touch it.
 */

#include <boost/multiprecision/mpfr.hpp>
#include <mpfr.h>

#include <string>

#include <gporo/rational.hpp>

namespace gporo::hp {

using Real = boost::multiprecision::mpfr_float;

/// Scoped working precision in decimal digits for newly created Reals.
/// The underlying default is a process-wide atomic, so callers mixing
/// different precisions across threads must serialize; the exact-arithmetic
/// modules never touch it.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits10) : saved_(Real::default_precision()) {
        Real::default_precision(digits10);
    }
    ~PrecisionGuard() { Real::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

inline Real to_real(const BigRational& q) { return Real(q.numerator().str()) / Real(q.denominator().str()); }

/// Fixed-point decimal string with `places` digits after the point,
/// rounded to nearest by MPFR.
inline std::string fixed(const Real& x, unsigned places) {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rf", static_cast<int>(places), x.backend().data());
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

/// Decimal string with `digits` significant digits.
inline std::string significant(const Real& x, unsigned digits) {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", static_cast<int>(digits), x.backend().data());
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

}  // namespace gporo::hp
