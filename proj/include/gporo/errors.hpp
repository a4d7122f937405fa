#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gporo {

/// An expression left the exactly-representable fragment: surds, mixed
/// polynomial-exponential monomials, gross-valued exponents on gross bases,
/// division by a non-monomial, and the like.
class unsupported_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Substituting a finite integer for g produced a non-integer exponent,
/// so the result is not an exact rational.
class noninteger_exponent_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside an operation's domain.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Lexical or grammatical error with a character position.
class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t position, std::string expected, std::string found)
        : std::runtime_error("parse error at position " + std::to_string(position) +
                             ": expected " + expected + ", found " + found),
          position_(position),
          expected_(std::move(expected)),
          found_(std::move(found)) {}

    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }
    const std::string& found() const { return found_; }

private:
    std::size_t position_;
    std::string expected_;
    std::string found_;
};

/// A log-log transform was undefined for some points (log argument <= 0).
/// Carries the zero-based indices of the offending points.
class transform_error : public std::runtime_error {
public:
    transform_error(std::string what, std::vector<std::size_t> points)
        : std::runtime_error(std::move(what)), points_(std::move(points)) {}

    const std::vector<std::size_t>& points() const { return points_; }

private:
    std::vector<std::size_t> points_;
};

/// A regression could not run: too few usable points or no spread in x.
class fit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input data. Carries one-based row numbers of the bad rows.
class data_error : public std::runtime_error {
public:
    explicit data_error(std::string what, std::vector<std::size_t> rows = {})
        : std::runtime_error(std::move(what)), rows_(std::move(rows)) {}

    const std::vector<std::size_t>& rows() const { return rows_; }

private:
    std::vector<std::size_t> rows_;
};

}  // namespace gporo
