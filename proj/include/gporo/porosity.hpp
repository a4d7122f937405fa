#pragma once

/**
 * @file porosity.hpp
 * @brief Porosity and density of the Menger sponge: the classical scheme,
 *        Turcotte's fractal construction, and the gross-number formulation.
 *
 * Classical indexing starts from the full cube at n = 0, so
 * phi(n) = 1 - (20/27)^n. The gross-number path reuses the sponge query
 * (k, n) with exponent n + k - 2 and yields, at infinite n, a porosity that
 * falls short of 1 by an explicit exponentially small deficit.
 */

#include <gporo/geometry.hpp>
#include <gporo/gross.hpp>
#include <gporo/highprec.hpp>

namespace gporo {

struct PorosityResult {
    GrossValue solid_volume;
    GrossValue void_volume;
    GrossValue phi;  // void / (void + solid) = void, since totals are 1
};

inline PorosityResult porosity_classical(long long n) {
    if (n < 0) throw domain_error("iteration count must be >= 0");
    BigRational solid = BigRational::pow(BigRational(20, 27), BigInt(n));
    BigRational voids = BigRational(1) - solid;
    return {GrossValue{solid}, GrossValue{voids}, GrossValue{voids}};
}

inline PorosityResult porosity_grossone(const SpongeQuery& q) {
    q.validate();
    GrossValue solid = GrossValue::power_of(BigRational(20, 27), q.level_exponent());
    GrossValue voids = GrossValue(1) - solid;
    return {solid, voids, voids};
}

/// Turcotte's construction assembles sponges from solid cubes of size r0 and
/// density rho0; the n-th order sponge has size 3^n * r0.
struct TurcotteSponge {
    BigRational r0{1};
    BigRational rho0{1};
};

struct TurcotteOrderResult {
    BigRational phi;            // 1 - (20/27)^n
    BigRational density_ratio;  // rho_n / rho0 = (20/27)^n
    BigRational size;           // r_n = 3^n * r0
    BigRational density;        // rho_n
};

inline TurcotteOrderResult turcotte_order(long long n, const TurcotteSponge& base = {}) {
    if (n < 0) throw domain_error("sponge order must be >= 0");
    if (base.r0.sign() <= 0 || base.rho0.sign() <= 0)
        throw domain_error("zero-order size and density must be positive");
    BigRational ratio = BigRational::pow(BigRational(20, 27), BigInt(n));
    return {BigRational(1) - ratio, ratio, BigRational::pow(BigRational(3), BigInt(n)) * base.r0,
            ratio * base.rho0};
}

struct TurcotteScalingResult {
    hp::Real phi;            // 1 - (r0/r)^(3 - d_f)
    hp::Real density_ratio;  // (r0/r)^(3 - d_f)
};

/// Approximate power-law porosity at working precision `digits10` (the
/// exponent 3 - d_f is irrational for the sponge dimension, so this path is
/// decimal by nature and never mixes with the exact ones).
inline TurcotteScalingResult turcotte_scaling(const hp::Real& r0, const hp::Real& r,
                                              const hp::Real& d_f, unsigned digits10 = 34) {
    hp::PrecisionGuard guard(digits10);
    if (!(r0 > 0)) throw domain_error("r0 must be positive");
    if (r < r0) throw domain_error("r must be >= r0");
    if (!(d_f > 0) || !(d_f < 3)) throw domain_error("fractal dimension must lie in (0, 3)");
    hp::Real ratio = pow(hp::Real(r0) / hp::Real(r), hp::Real(3) - hp::Real(d_f));
    return {hp::Real(1) - ratio, ratio};
}

inline TurcotteScalingResult turcotte_scaling(double r0, double r, double d_f,
                                              unsigned digits10 = 34) {
    hp::PrecisionGuard guard(digits10);
    return turcotte_scaling(hp::Real(r0), hp::Real(r), hp::Real(d_f), digits10);
}

}  // namespace gporo
