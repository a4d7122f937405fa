#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include <gporo/geometry.hpp>
#include <gporo/parser.hpp>

using namespace gporo;

namespace {

SpongeQuery q(long long k, IterationIndex n) { return {k, n}; }

GrossValue cube(const GrossValue& v) { return v * v * v; }
GrossValue square(const GrossValue& v) { return v * v; }

}  // namespace

TEST_CASE("iteration index parsing", "[geometry]") {
    CHECK(IterationIndex::parse("7").is_finite());
    CHECK(IterationIndex::parse("7").finite_n() == 7);
    CHECK_FALSE(IterationIndex::parse("g").is_finite());
    CHECK(IterationIndex::parse("g").offset() == 0);
    CHECK(IterationIndex::parse("g-3").offset() == 3);
    CHECK(IterationIndex::parse("\xe2\x91\xa0-2").offset() == 2);
    CHECK(IterationIndex::parse("g-3").str() == "g-3");
    CHECK_THROWS_AS(IterationIndex::parse("banana"), domain_error);
    CHECK_THROWS_AS(IterationIndex::parse("g+1"), domain_error);
    CHECK_THROWS_AS(IterationIndex::parse("0"), domain_error);
    CHECK_THROWS_AS(IterationIndex::parse("g-"), domain_error);
}

TEST_CASE("first iteration is the unpartitioned cube", "[geometry]") {
    auto geo = menger_geometry(q(1, IterationIndex::finite(1)));
    CHECK(geo.count == GrossValue(1));
    CHECK(geo.side == GrossValue(1));
    CHECK(geo.volume == GrossValue(1));
}

TEST_CASE("finite volumes match direct rational powers", "[geometry]") {
    auto geo = menger_geometry(q(1, IterationIndex::finite(4)));
    CHECK(geo.volume == GrossValue(BigRational(8000, 19683)));
    CHECK(geo.count == GrossValue(8000));
    CHECK(geo.side == GrossValue(BigRational(1, 27)));
}

TEST_CASE("gross volumes in canonical form", "[geometry]") {
    auto geo = menger_geometry(q(1, IterationIndex::gross_offset(0)));
    CHECK(geo.volume == parse("(20/27)^(g-1)"));
    CHECK(geo.volume.classify() == NumClass::ExponentiallyInfinitesimal);
    CHECK(geo.count == parse("20^(g-1)"));
    CHECK(geo.count.classify() == NumClass::ExponentiallyInfinite);

    // shifting the window: k=3 with n = g-1 exposes exponent g
    auto shifted = menger_geometry(q(3, IterationIndex::gross_offset(1)));
    CHECK(shifted.volume == parse("(20/27)^g"));
}

TEST_CASE("invalid queries are rejected", "[geometry]") {
    CHECK_THROWS_AS(menger_geometry(q(3, IterationIndex::finite(2))), domain_error);
    CHECK_THROWS_AS(menger_geometry(q(0, IterationIndex::finite(2))), domain_error);
    CHECK_THROWS_AS(carpet_geometry(q(5, IterationIndex::finite(1))), domain_error);
    // gross n always dominates any finite k
    CHECK_NOTHROW(menger_geometry(q(1000, IterationIndex::gross_offset(5))));
}

TEST_CASE("volume identity V = L^3 N and area identity A = L^2 N", "[geometry]") {
    for (long long k = 1; k <= 6; ++k) {
        for (long long n = k; n <= 12; ++n) {
            auto geo = menger_geometry(q(k, IterationIndex::finite(n)));
            CHECK(geo.volume == cube(geo.side) * geo.count);
            auto car = carpet_geometry(q(k, IterationIndex::finite(n)));
            CHECK(car.area == square(car.side) * car.count);
        }
        for (long long m = 0; m <= 5; ++m) {
            auto geo = menger_geometry(q(k, IterationIndex::gross_offset(m)));
            CHECK(geo.volume == cube(geo.side) * geo.count);
            auto car = carpet_geometry(q(k, IterationIndex::gross_offset(m)));
            CHECK(car.area == square(car.side) * car.count);
        }
    }
}

TEST_CASE("property: symbolic results instantiate to the direct finite computation",
          "[geometry][property]") {
    std::mt19937 rng(606);
    std::uniform_int_distribution<long long> kd(1, 5), md(0, 5), td(1, 30);
    for (int i = 0; i < 200; ++i) {
        long long k = kd(rng), m = md(rng), t = td(rng);
        auto geo = menger_geometry(q(k, IterationIndex::gross_offset(m)));
        // direct oracle at iteration t - m, starting level k: exponent t-m+k-2
        BigInt e = t - m + k - 2;
        CHECK(geo.volume.substitute(t) == BigRational::pow(BigRational(20, 27), e));
        CHECK(geo.count.substitute(t) == BigRational::pow(BigRational(20), e));
        CHECK(geo.side.substitute(t) == BigRational::pow(BigRational(3), -e));
        auto car = carpet_geometry(q(k, IterationIndex::gross_offset(m)));
        CHECK(car.area.substitute(t) == BigRational::pow(BigRational(8, 9), e));
    }
}

TEST_CASE("one iteration step scales volume by 20/27 and area by 8/9", "[geometry]") {
    auto ratio = [](const GrossValue& a, const GrossValue& b) { return a * b.reciprocal(); };
    for (long long n = 1; n <= 8; ++n) {
        auto lo = menger_geometry(q(1, IterationIndex::finite(n)));
        auto hi = menger_geometry(q(1, IterationIndex::finite(n + 1)));
        CHECK(ratio(hi.volume, lo.volume) == GrossValue(BigRational(20, 27)));
        auto clo = carpet_geometry(q(1, IterationIndex::finite(n)));
        auto chi = carpet_geometry(q(1, IterationIndex::finite(n + 1)));
        CHECK(ratio(chi.area, clo.area) == GrossValue(BigRational(8, 9)));
    }
    for (long long m = 0; m <= 4; ++m) {
        auto hi = menger_geometry(q(1, IterationIndex::gross_offset(m)));
        auto lo = menger_geometry(q(1, IterationIndex::gross_offset(m + 1)));
        CHECK(ratio(hi.volume, lo.volume) == GrossValue(BigRational(20, 27)));
    }
}

TEST_CASE("volume decreases with n but stays positive, even at g", "[geometry]") {
    GrossValue prev = menger_geometry(q(1, IterationIndex::finite(1))).volume;
    for (long long n = 2; n <= 10; ++n) {
        GrossValue cur = menger_geometry(q(1, IterationIndex::finite(n))).volume;
        CHECK(compare(cur, prev) == std::strong_ordering::less);
        prev = cur;
    }
    GrossValue at_g = menger_geometry(q(1, IterationIndex::gross_offset(0))).volume;
    CHECK(compare(at_g, prev) == std::strong_ordering::less);
    CHECK(compare(at_g, GrossValue()) == std::strong_ordering::greater);
    CHECK_FALSE(at_g.is_zero());
}

TEST_CASE("carpet areas", "[geometry]") {
    CHECK(carpet_area(q(1, IterationIndex::finite(1))) == GrossValue(1));
    CHECK(carpet_area(q(1, IterationIndex::finite(3))) == GrossValue(BigRational(64, 81)));
    CHECK(carpet_area(q(1, IterationIndex::gross_offset(0))) == parse("(8/9)^(g-1)"));
}

TEST_CASE("fractal dimensions print the correctly rounded digits", "[geometry]") {
    CHECK(fractal_dimension(FractalObject::Sponge, 9) == "2.726833028");
    // oracle: ln8/ln3 = 1.8927892607... rounds up at the ninth place
    CHECK(fractal_dimension(FractalObject::Carpet, 9) == "1.892789261");
    CHECK(fractal_dimension(FractalObject::Sponge, 1) == "2.7");
    CHECK(fractal_dimension(FractalObject::Sponge, 3) == "2.727");
    CHECK(fractal_dimension(FractalObject::Carpet, 40) == "1.8927892607143723112985813430282825628988");
    CHECK_THROWS_AS(fractal_dimension(FractalObject::Sponge, 0), domain_error);

    // cross-check against long double evaluation to its trustworthy digits
    double sponge = std::stod(fractal_dimension(FractalObject::Sponge, 15));
    CHECK(std::abs(sponge - std::log(20.0) / std::log(3.0)) < 1e-14);
}

TEST_CASE("finite-n dimension estimates are n-independent", "[geometry]") {
    auto e1 = dimension_estimate_at(1);
    CHECK(e1.count == BigRational(20));
    CHECK(e1.side == BigRational(1, 3));
    CHECK(e1.value == Catch::Approx(2.726833028).epsilon(1e-9));

    for (long long n : {7LL, 100LL}) {
        auto e = dimension_estimate_at(n);
        CHECK(e.count == BigRational::pow(BigRational(20), BigInt(n)));
        CHECK(e.value == Catch::Approx(e1.value).epsilon(1e-12));
    }
    CHECK_THROWS_AS(dimension_estimate_at(0), domain_error);
}
