#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <gporo/primes.hpp>
#include <gporo/rational.hpp>

using namespace gporo;

TEST_CASE("construction keeps fractions reduced with positive denominator", "[rational]") {
    BigRational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);

    CHECK(BigRational(0, 7) == BigRational(0));
    CHECK(BigRational(0, 7).denominator() == 1);
    CHECK(BigRational(21, 7) == BigRational(3));
    CHECK_THROWS_AS(BigRational(1, 0), domain_error);
}

TEST_CASE("arithmetic is exact", "[rational]") {
    BigRational a(1, 3), b(1, 6);
    CHECK(a + b == BigRational(1, 2));
    CHECK(a - b == BigRational(1, 6));
    CHECK(a * b == BigRational(1, 18));
    CHECK(a / b == BigRational(2));
    CHECK(-a == BigRational(-1, 3));
    CHECK_THROWS_AS(a / BigRational(0), domain_error);

    // no drift: summing 1/3 three times gives exactly 1
    BigRational s(0);
    for (int i = 0; i < 3; ++i) s += a;
    CHECK(s.is_one());
}

TEST_CASE("powers handle negative exponents and guard the degenerate cases", "[rational]") {
    CHECK(BigRational::pow(BigRational(20, 27), 3) == BigRational(8000, 19683));
    CHECK(BigRational::pow(BigRational(2), -3) == BigRational(1, 8));
    CHECK(BigRational::pow(BigRational(-2), 3) == BigRational(-8));
    CHECK(BigRational::pow(BigRational(7), 0) == BigRational(1));
    CHECK(BigRational::pow(BigRational(0), 5) == BigRational(0));
    CHECK(BigRational::pow(BigRational(-1), BigInt("123456789123456789")) == BigRational(-1));
    CHECK_THROWS_AS(BigRational::pow(BigRational(0), -1), domain_error);
    CHECK_THROWS_AS(BigRational::pow(BigRational(2), BigInt("100000000000")), unsupported_error);
}

TEST_CASE("parse and print round trip", "[rational]") {
    CHECK(BigRational::parse("20/27").str() == "20/27");
    CHECK(BigRational::parse("-6/4").str() == "-3/2");
    CHECK(BigRational::parse("42").str() == "42");
    CHECK(BigRational::parse("+7") == BigRational(7));
    CHECK_THROWS_AS(BigRational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(BigRational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(BigRational::parse("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(BigRational::parse(""), std::invalid_argument);

    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> dist(-1000000, 1000000);
    for (int i = 0; i < 200; ++i) {
        long long d = dist(rng);
        if (d == 0) d = 1;
        BigRational r(dist(rng), d);
        CHECK(BigRational::parse(r.str()) == r);
    }
}

TEST_CASE("ordering is the rational order", "[rational]") {
    CHECK(BigRational(1, 3) < BigRational(1, 2));
    CHECK(BigRational(-1, 2) < BigRational(-1, 3));
    CHECK(BigRational(7, 27) < BigRational(329, 729));
    CHECK(abs(BigRational(-5, 4)) == BigRational(5, 4));
}

TEST_CASE("factorization recovers prime multiplicities", "[primes]") {
    auto f20 = factorize(20);
    REQUIRE(f20.size() == 2);
    CHECK(f20[0] == std::pair<BigInt, long long>{2, 2});
    CHECK(f20[1] == std::pair<BigInt, long long>{5, 1});

    CHECK(factorize(1).empty());
    auto f27 = factorize(27);
    REQUIRE(f27.size() == 1);
    CHECK(f27[0] == std::pair<BigInt, long long>{3, 3});

    // large semiprime forces the rho path
    BigInt p("1000000007"), q("998244353");
    auto big = factorize(p * q);
    REQUIRE(big.size() == 2);
    CHECK(big[0].first == q);
    CHECK(big[1].first == p);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        BigInt n = 1 + BigInt(rng() % 1000000);
        BigInt back = 1;
        for (const auto& [prime, mult] : factorize(n)) {
            CHECK(is_probable_prime(prime));
            back *= boost::multiprecision::pow(prime, static_cast<unsigned>(mult));
        }
        CHECK(back == n);
    }
}

TEST_CASE("primality test agrees with trial division on small numbers", "[primes]") {
    auto slow_prime = [](long long n) {
        if (n < 2) return false;
        for (long long d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    };
    for (long long n = 0; n < 2000; ++n) CHECK(is_probable_prime(BigInt(n)) == slow_prime(n));
}
