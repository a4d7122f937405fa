#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rational numbers.
 *
 * BigRational is a thin value wrapper over boost::multiprecision's exact
 * rational type. Invariants maintained by the backend on every operation:
 * gcd(|numerator|, denominator) = 1, denominator >= 1, zero is 0/1.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gporo/errors.hpp>

namespace gporo {

using BigInt = boost::multiprecision::cpp_int;

class BigRational {
    using backend = boost::multiprecision::cpp_rational;

public:
    BigRational() = default;
    BigRational(int n) : v_(n) {}
    BigRational(long long n) : v_(n) {}
    BigRational(BigInt n) : v_(std::move(n)) {}

    BigRational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw domain_error("rational with zero denominator");
        // division reduces and moves the sign to the numerator
        v_ = backend(num);
        v_ /= backend(den);
    }
    BigRational(long long num, long long den) : BigRational(BigInt(num), BigInt(den)) {}

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    /// The value as an integer; throws domain_error if it is not one.
    BigInt as_integer() const {
        if (!is_integer()) throw domain_error("rational " + str() + " is not an integer");
        return numerator();
    }

    BigRational reciprocal() const {
        if (is_zero()) throw domain_error("reciprocal of zero");
        return BigRational(denominator(), numerator());
    }

    friend BigRational operator-(const BigRational& a) { return BigRational(backend(-a.v_)); }
    friend BigRational operator+(const BigRational& a, const BigRational& b) {
        return BigRational(backend(a.v_ + b.v_));
    }
    friend BigRational operator-(const BigRational& a, const BigRational& b) {
        return BigRational(backend(a.v_ - b.v_));
    }
    friend BigRational operator*(const BigRational& a, const BigRational& b) {
        return BigRational(backend(a.v_ * b.v_));
    }
    friend BigRational operator/(const BigRational& a, const BigRational& b) {
        if (b.is_zero()) throw domain_error("division by zero");
        return BigRational(backend(a.v_ / b.v_));
    }

    BigRational& operator+=(const BigRational& b) { return *this = *this + b; }
    BigRational& operator-=(const BigRational& b) { return *this = *this - b; }
    BigRational& operator*=(const BigRational& b) { return *this = *this * b; }
    BigRational& operator/=(const BigRational& b) { return *this = *this / b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const BigRational& a, const BigRational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return a.v_ >= b.v_; }

    /// base^e with an exact result. Negative exponents invert; zero base with
    /// a negative exponent is a domain error. Exponents beyond a practical
    /// magnitude bound are rejected rather than allowed to exhaust memory.
    static BigRational pow(const BigRational& base, const BigInt& e) {
        if (e == 0) return BigRational(1);
        if (base.is_zero()) {
            if (e < 0) throw domain_error("zero raised to a negative power");
            return BigRational(0);
        }
        if (base.is_one()) return BigRational(1);
        if (base == BigRational(-1)) return (e % 2 == 0) ? BigRational(1) : BigRational(-1);

        BigInt m = e < 0 ? BigInt(-e) : e;
        if (m > 10'000'000) throw unsupported_error("exponent magnitude too large: " + m.str());
        auto u = m.convert_to<unsigned long long>();
        BigInt num = boost::multiprecision::pow(base.numerator(), static_cast<unsigned>(u));
        BigInt den = boost::multiprecision::pow(base.denominator(), static_cast<unsigned>(u));
        return e < 0 ? BigRational(den, num) : BigRational(num, den);
    }

    double to_double() const { return v_.convert_to<double>(); }

    /// "p" for integers, "p/q" otherwise.
    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

    /// Parses "p" or "p/q" with optional leading sign on p.
    static BigRational parse(std::string_view text) {
        auto bad = [&] { return std::invalid_argument("not a rational: '" + std::string(text) + "'"); };
        if (text.empty()) throw bad();
        auto slash = text.find('/');
        auto is_int = [](std::string_view s, bool allow_sign) {
            if (s.empty()) return false;
            std::size_t i = 0;
            if (allow_sign && (s[0] == '+' || s[0] == '-')) i = 1;
            if (i == s.size()) return false;
            for (; i < s.size(); ++i)
                if (s[i] < '0' || s[i] > '9') return false;
            return true;
        };
        auto to_int = [](std::string_view s) {
            if (s[0] == '+') s.remove_prefix(1);  // the backend rejects a '+' prefix
            return BigInt(std::string(s));
        };
        if (slash == std::string_view::npos) {
            if (!is_int(text, true)) throw bad();
            return BigRational(to_int(text));
        }
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!is_int(num, true) || !is_int(den, false)) throw bad();
        BigInt d = to_int(den);
        if (d == 0) throw bad();
        return BigRational(to_int(num), d);
    }

private:
    explicit BigRational(backend v) : v_(std::move(v)) {}
    backend v_;
};

inline BigRational abs(const BigRational& r) { return r.sign() < 0 ? -r : r; }

inline std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

}  // namespace gporo
