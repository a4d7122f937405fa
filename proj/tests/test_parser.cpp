#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include <gporo/parser.hpp>

#include "generators.hpp"

using namespace gporo;
using testgen::rand_any;

TEST_CASE("tokenizer produces positioned tokens", "[parser]") {
    auto toks = tokenize("(20/27)^(g-1)");
    std::vector<TokenKind> kinds;
    for (const auto& t : toks) kinds.push_back(t.kind);
    CHECK(kinds == std::vector<TokenKind>{TokenKind::LParen, TokenKind::Integer, TokenKind::Slash,
                                          TokenKind::Integer, TokenKind::RParen, TokenKind::Caret,
                                          TokenKind::LParen, TokenKind::GrossSymbol,
                                          TokenKind::Minus, TokenKind::Integer, TokenKind::RParen});
    CHECK(toks[1].lexeme == "20");
    CHECK(toks[3].lexeme == "27");
    for (std::size_t i = 1; i < toks.size(); ++i) CHECK(toks[i - 1].position < toks[i].position);

    auto nine = tokenize("2*g^2 - g + 3");
    REQUIRE(nine.size() == 9);
    CHECK(nine.back().kind == TokenKind::Integer);
    CHECK(nine.back().lexeme == "3");

    CHECK_THROWS_MATCHES(tokenize("2$3"), parse_error,
                         Catch::Matchers::Predicate<parse_error>(
                             [](const parse_error& e) { return e.position() == 1; }));
}

TEST_CASE("parsing the target expressions", "[parser]") {
    CHECK(parse("g") == GrossValue::grossone());
    CHECK(parse("(20/27)^(g-1)") ==
          GrossValue::power_of(BigRational(20, 27), GrossLinear{BigRational(1), BigRational(-1)}));
    CHECK_THROWS_AS(parse("g^g"), unsupported_error);
}

TEST_CASE("precedence and unary minus", "[parser]") {
    CHECK(parse("2*g^2") == parse("2*(g^2)"));
    CHECK(parse("-g+1") == parse("1-g"));
    CHECK(parse("-2^2") == GrossValue(-4));
    CHECK(parse("2^-2") == GrossValue(BigRational(1, 4)));
    CHECK(parse("1/2/3") == GrossValue(BigRational(1, 6)));
    CHECK(parse("2^3") == GrossValue(8));
    CHECK(parse("6/2*g") == GrossValue::poly(3, 1));
    // exponents eat p/q greedily, per the rational-literal rule
    CHECK_THROWS_AS(parse("2^1/2"), unsupported_error);
    CHECK(parse("(2^1)/2") == GrossValue(1));
}

TEST_CASE("the circled-one glyph is an alias for g", "[parser]") {
    CHECK(parse("\xe2\x91\xa0") == GrossValue::grossone());
    CHECK(parse("(20/27)^(\xe2\x91\xa0-1)") == parse("(20/27)^(g-1)"));
}

TEST_CASE("representation independence", "[parser]") {
    CHECK(compare(parse("4^(g/2)"), parse("2^g")) == std::strong_ordering::equal);
    CHECK(compare(parse("(1/2)^g"), parse("2^-g")) == std::strong_ordering::equal);
    CHECK(compare(parse("9^(g/2+1/2)"), parse("3^(g+1)")) == std::strong_ordering::equal);
}

TEST_CASE("expressions outside the fragment are rejected, not misparsed", "[parser]") {
    CHECK_THROWS_AS(parse("2^(1/2)"), unsupported_error);
    CHECK_THROWS_AS(parse("2^(g^2)"), unsupported_error);
    CHECK_THROWS_AS(parse("(2^g)^g"), unsupported_error);
    CHECK_THROWS_AS(parse("1/(g+1)"), unsupported_error);
    CHECK_THROWS_AS(parse("g*2^g"), unsupported_error);
    CHECK_THROWS_AS(parse("(0-2)^g"), unsupported_error);
    CHECK_THROWS_AS(parse("1/0"), parse_error);   // malformed literal
    CHECK_THROWS_AS(parse("1/(0)"), domain_error);  // division by a zero value
    CHECK_THROWS_AS(parse("0^-1"), domain_error);
}

TEST_CASE("error positions land at or before the mutation site", "[parser]") {
    struct Case {
        const char* input;
        std::size_t site;  // where the valid string was damaged
    };
    // each input is a valid expression with garbage introduced at `site`
    const Case cases[] = {
        {"g )+ 1", 2},     // stray ')'
        {"(g+1))^2", 5},   // doubled ')'
        {"2*)g", 2},       // ')' between operator and operand
        {"2**g", 2},       // doubled operator
        {"2^^2", 2},
        {"1 + + 2", 4},
        {"g + ()", 5},
        {"2$3", 1},
        {"g^", 2},         // trailing operator: reported at end of input
    };
    for (const auto& c : cases) {
        try {
            parse(c.input);
            FAIL("expected a parse error for: " << c.input);
        } catch (const parse_error& e) {
            INFO(c.input);
            CHECK(e.position() <= c.site);
        }
    }
}

TEST_CASE("property: render then parse is the identity", "[parser][property]") {
    std::mt19937 rng(505);
    for (int i = 0; i < 400; ++i) {
        GrossValue v = rand_any(rng);
        GrossValue back = parse(v.str());
        CHECK(back == v);
        CHECK(compare(back, v) == std::strong_ordering::equal);
    }
}

TEST_CASE("renderings of mixed values parse back", "[parser]") {
    // infinite, finite, and infinitesimal terms in one value
    GrossValue v = GrossValue::power_of(BigRational(2), GrossLinear::gross()) +
                   GrossValue::poly(3, 2) + GrossValue(BigRational(-7, 3)) +
                   GrossValue::power_of(BigRational(20, 27), GrossLinear::gross());
    CHECK(parse(v.str()) == v);
    // ungroupable factor products render factor by factor
    GrossValue w = GrossValue::power_of(BigRational(2), GrossLinear{BigRational(1), BigRational(1)}) *
                   GrossValue::power_of(BigRational(3), GrossLinear{BigRational(2), BigRational(1)});
    CHECK(parse(w.str()) == w);
}
