#pragma once

// Exact integer, rational and Laurent-polynomial arithmetic. Nothing in the
// core uses floating point.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace knot {

using Integer = mpz_class;

std::string to_string(Integer const& z);
Integer parse_integer(std::string_view text);
// Throws std::overflow_error when z does not fit.
std::int64_t to_int64(Integer const& z);

/// Reduced rational number num/den with den > 0.
class Fraction {
public:
    Fraction() : num_(0), den_(1) {}
    Fraction(Integer num) : num_(std::move(num)), den_(1) {} // NOLINT(implicit)
    Fraction(long num) : num_(num), den_(1) {}               // NOLINT(implicit)
    /// Throws std::domain_error on a zero denominator.
    Fraction(Integer num, Integer den);

    Integer const& num() const { return num_; }
    Integer const& den() const { return den_; }
    int sign() const { return sgn(num_); }
    bool is_integer() const { return den_ == 1; }

    Fraction operator-() const;
    Fraction& operator+=(Fraction const& o);
    Fraction& operator-=(Fraction const& o);
    Fraction& operator*=(Fraction const& o);
    Fraction& operator/=(Fraction const& o);

    friend Fraction operator+(Fraction a, Fraction const& b) { return a += b; }
    friend Fraction operator-(Fraction a, Fraction const& b) { return a -= b; }
    friend Fraction operator*(Fraction a, Fraction const& b) { return a *= b; }
    friend Fraction operator/(Fraction a, Fraction const& b) { return a /= b; }

    friend bool operator==(Fraction const& a, Fraction const& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend std::strong_ordering operator<=>(Fraction const& a, Fraction const& b);

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const;

private:
    void reduce();

    Integer num_;
    Integer den_;
};

/// Integer-coefficient polynomial in t and 1/t. Zero coefficients are never
/// stored, so the zero polynomial is the empty map.
class LaurentPolynomial {
public:
    using Terms = std::map<long, Integer>;

    LaurentPolynomial() = default;
    explicit LaurentPolynomial(Terms terms);
    LaurentPolynomial(Integer c, long exponent = 0); // NOLINT(implicit)

    /// The single-term polynomial t.
    static LaurentPolynomial t() { return {Integer(1), 1}; }

    Terms const& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Integer coeff(long exponent) const;
    long min_exponent() const; // zero polynomial: throws
    long max_exponent() const;

    LaurentPolynomial operator-() const;
    LaurentPolynomial& operator+=(LaurentPolynomial const& o);
    LaurentPolynomial& operator-=(LaurentPolynomial const& o);
    friend LaurentPolynomial operator+(LaurentPolynomial a, LaurentPolynomial const& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, LaurentPolynomial const& b) { return a -= b; }
    friend LaurentPolynomial operator*(LaurentPolynomial const& a, LaurentPolynomial const& b);

    /// Multiplies by t^k.
    LaurentPolynomial shifted(long k) const;
    Fraction evaluate(Fraction const& t) const;
    /// Image under t -> 1/t.
    LaurentPolynomial inverted() const;

    friend bool operator==(LaurentPolynomial const&, LaurentPolynomial const&) = default;

    /// Sorted "exponent:coefficient" pairs, e.g. "-1:1 0:-1 1:1". Empty for zero.
    std::string str() const;
    /// Human form such as "t - 1 + t^-1".
    std::string pretty() const;
    static LaurentPolynomial parse(std::string_view text);

private:
    Terms terms_;
};

LaurentPolynomial laurent_mul(LaurentPolynomial const& p, LaurentPolynomial const& q);

/// Canonical representative of p modulo the units ±t^k: symmetric under
/// t -> 1/t with a positive top coefficient when such a multiple exists,
/// otherwise shifted to minimal exponent 0 with a positive constant term.
/// Throws std::domain_error("cannot normalize zero").
LaurentPolynomial laurent_normalize(LaurentPolynomial const& p);

/// True iff p = ±t^k q for some integer k.
bool equal_up_to_units(LaurentPolynomial const& p, LaurentPolynomial const& q);

} // namespace knot
