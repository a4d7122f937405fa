#include <catch2/catch_amalgamated.hpp>

#include <gporo/parser.hpp>
#include <gporo/porosity.hpp>

using namespace gporo;

namespace {
SpongeQuery q(long long k, IterationIndex n) { return {k, n}; }
}

TEST_CASE("classical porosity gives the published fractions", "[porosity]") {
    CHECK(porosity_classical(0).phi == GrossValue(0));
    CHECK(porosity_classical(1).phi == GrossValue(BigRational(7, 27)));
    CHECK(porosity_classical(2).phi == GrossValue(BigRational(329, 729)));
    CHECK(porosity_classical(2).solid_volume == GrossValue(BigRational(400, 729)));
    CHECK_THROWS_AS(porosity_classical(-1), domain_error);
}

TEST_CASE("gross porosity on the window (k, n)", "[porosity]") {
    CHECK(porosity_grossone(q(1, IterationIndex::finite(1))).phi == GrossValue(0));
    CHECK(porosity_grossone(q(2, IterationIndex::finite(2))).phi ==
          GrossValue(BigRational(329, 729)));
    auto at_g = porosity_grossone(q(1, IterationIndex::gross_offset(0)));
    CHECK(at_g.phi == parse("1 - (20/27)^(g-1)"));
    CHECK(at_g.phi.classify() == NumClass::Finite);
    CHECK(at_g.phi.finite_part() == BigRational(1));
    CHECK(at_g.phi.has_infinitesimal_terms());
}

TEST_CASE("porosity plus solid volume is exactly one in every model", "[porosity]") {
    for (long long n = 0; n <= 12; ++n) {
        auto c = porosity_classical(n);
        CHECK(c.phi + c.solid_volume == GrossValue(1));
        CHECK(c.phi == c.void_volume);
    }
    for (long long m = 0; m <= 5; ++m) {
        auto g = porosity_grossone(q(2, IterationIndex::gross_offset(m)));
        CHECK(g.phi + g.solid_volume == GrossValue(1));
    }
    for (long long n = 0; n <= 12; ++n) {
        auto t = turcotte_order(n);
        CHECK(t.phi + t.density_ratio == BigRational(1));
    }
}

TEST_CASE("indexing bridge between the gross and classical conventions", "[porosity]") {
    for (long long t = 0; t <= 50; ++t)
        CHECK(porosity_grossone(q(1, IterationIndex::finite(t + 1))).phi ==
              porosity_classical(t).phi);
}

TEST_CASE("porosity at infinity falls short of one by a positive infinitesimal", "[porosity]") {
    auto at_g = porosity_grossone(q(1, IterationIndex::gross_offset(0))).phi;
    auto at_g1 = porosity_grossone(q(1, IterationIndex::gross_offset(1))).phi;
    CHECK(compare(at_g, GrossValue(1)) == std::strong_ordering::less);
    CHECK(compare(at_g, at_g1) == std::strong_ordering::greater);
    CHECK(compare(at_g1, GrossValue(1)) == std::strong_ordering::less);
    // and it dominates every finite-n porosity
    CHECK(compare(at_g1, porosity_classical(1000).phi) == std::strong_ordering::greater);
}

TEST_CASE("porosity depends on the window only through n + k - 2", "[porosity]") {
    CHECK(porosity_grossone(q(1, IterationIndex::finite(5))).phi ==
          porosity_grossone(q(3, IterationIndex::finite(3))).phi);
    CHECK(porosity_grossone(q(1, IterationIndex::gross_offset(2))).phi ==
          porosity_grossone(q(3, IterationIndex::gross_offset(4))).phi);
}

TEST_CASE("Turcotte order table", "[porosity]") {
    auto t0 = turcotte_order(0);
    CHECK(t0.phi == BigRational(0));
    CHECK(t0.density_ratio == BigRational(1));

    auto t1 = turcotte_order(1);
    CHECK(t1.phi == BigRational(7, 27));
    CHECK(t1.density_ratio == BigRational(20, 27));

    auto t2 = turcotte_order(2);
    CHECK(t2.phi == BigRational(329, 729));
    CHECK(t2.density_ratio == BigRational(400, 729));
    CHECK(t2.size == BigRational(9));

    TurcotteSponge base{BigRational(1, 2), BigRational(3)};
    auto scaled = turcotte_order(2, base);
    CHECK(scaled.size == BigRational(9, 2));
    CHECK(scaled.density == BigRational(400, 243));
    CHECK_THROWS_AS(turcotte_order(-1), domain_error);
    CHECK_THROWS_AS(turcotte_order(1, TurcotteSponge{BigRational(0), BigRational(1)}), domain_error);
}

TEST_CASE("Turcotte scaling agrees with the exact orders", "[porosity]") {
    hp::PrecisionGuard guard(40);
    hp::Real df = dimension_value(FractalObject::Sponge, 40);

    auto at9 = turcotte_scaling(hp::Real(1), hp::Real(9), df, 34);
    CHECK(std::abs(at9.phi.convert_to<double>() - BigRational(329, 729).to_double()) < 1e-15);
    CHECK(hp::fixed(at9.phi, 9) == "0.451303155");

    auto at3 = turcotte_scaling(hp::Real(1), hp::Real(3), df, 34);
    CHECK(hp::fixed(at3.phi, 9) == "0.259259259");

    auto at1 = turcotte_scaling(1.0, 1.0, 2.5, 34);
    CHECK(at1.phi == 0);

    // agreement within 1e-12 up to order 20 at 34-digit working precision
    for (long long n = 0; n <= 20; ++n) {
        hp::Real r = pow(hp::Real(3), static_cast<int>(n));
        auto scaled = turcotte_scaling(hp::Real(1), r, df, 34);
        double exact = turcotte_order(n).phi.to_double();
        CHECK(std::abs(scaled.phi.convert_to<double>() - exact) < 1e-12);
    }
}

TEST_CASE("Turcotte scaling domain", "[porosity]") {
    CHECK_THROWS_AS(turcotte_scaling(2.0, 1.0, 2.5), domain_error);
    CHECK_THROWS_AS(turcotte_scaling(1.0, 9.0, 3.0), domain_error);
    CHECK_THROWS_AS(turcotte_scaling(1.0, 9.0, 0.0), domain_error);
    CHECK_THROWS_AS(turcotte_scaling(0.0, 9.0, 2.5), domain_error);
}
