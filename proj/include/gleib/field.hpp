#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "gleib/error.hpp"

namespace gleib {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Deterministic primality test valid for the whole int64 range.
bool is_prime(std::int64_t n);

/// The field an algebra lives over: the rationals or a prime field F_p.
class FieldSpec {
public:
    enum class Kind { Rationals, Prime };

    static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }
    /// Throws InvalidField unless p is prime.
    static FieldSpec prime(std::int64_t p);

    /// Accepts "Q", "F5", "Fp:5" (case-insensitive prefix).
    static FieldSpec parse(std::string_view text);

    Kind kind() const { return kind_; }
    bool is_prime_field() const { return kind_ == Kind::Prime; }
    /// 0 for the rationals.
    std::int64_t characteristic() const { return p_; }
    std::string name() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    FieldSpec(Kind kind, std::int64_t p) : kind_{kind}, p_{p} {}

    Kind kind_ = Kind::Rationals;
    std::int64_t p_ = 0;
};

/// Exact field element. Rationals are kept in lowest terms with a positive
/// denominator (cpp_rational normalizes); residues are kept in [0, p).
/// Mixing scalars of different fields throws FieldMismatch.
class Scalar {
public:
    explicit Scalar(FieldSpec field);

    static Scalar zero(FieldSpec field) { return Scalar{field}; }
    static Scalar one(FieldSpec field) { return from_int(field, 1); }
    static Scalar from_int(FieldSpec field, std::int64_t value);
    /// Over F_p the rational is mapped through num * den^{-1}; throws
    /// DivisionByZero when p divides the denominator.
    static Scalar from_rational(FieldSpec field, const Rational& value);
    /// Parses "num/den", "num" (both fields) for the given field.
    static Scalar parse(FieldSpec field, std::string_view text);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Only valid over Q.
    const Rational& rational() const;
    /// Only valid over F_p.
    std::int64_t residue() const;

    Scalar inv() const;
    Scalar pow(std::int64_t exponent) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);
    Scalar& operator/=(const Scalar& other);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

    /// "num/den" over Q (always with the slash), decimal residue over F_p.
    std::string to_string() const;

private:
    void require_same_field(const Scalar& other) const;

    FieldSpec field_;
    Rational q_;
    std::int64_t r_ = 0;
};

/// Residue arithmetic helpers shared by the prime-field kernels.
std::int64_t mod_reduce(std::int64_t value, std::int64_t p);
std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p);
std::int64_t mod_pow(std::int64_t base, std::int64_t exponent, std::int64_t p);
std::int64_t mod_inv(std::int64_t a, std::int64_t p);

}  // namespace gleib
