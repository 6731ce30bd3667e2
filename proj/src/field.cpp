#include "gleib/field.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>

namespace gleib {

std::int64_t mod_reduce(std::int64_t value, std::int64_t p) {
    std::int64_t r = value % p;
    return r < 0 ? r + p : r;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exponent, std::int64_t p) {
    std::int64_t result = 1 % p;
    base = mod_reduce(base, p);
    while (exponent > 0) {
        if (exponent & 1) result = mod_mul(result, base, p);
        base = mod_mul(base, base, p);
        exponent >>= 1;
    }
    return result;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
    // extended Euclid; p prime so gcd is 1 whenever a != 0
    std::int64_t old_r = mod_reduce(a, p), r = p;
    std::int64_t old_s = 1, s = 0;
    if (old_r == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(p));
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    return mod_reduce(old_s, p);
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % small == 0) return n == small;
    }
    // Miller-Rabin with these bases is exact below 3.3e24.
    std::int64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::int64_t x = mod_pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mod_mul(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::int64_t p) {
    if (!is_prime(p)) throw InvalidField("field order " + std::to_string(p) + " is not prime");
    return FieldSpec{Kind::Prime, p};
}

FieldSpec FieldSpec::parse(std::string_view text) {
    std::string t;
    for (char c : text) t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (t == "Q") return rationals();
    std::string_view digits;
    if (t.rfind("FP:", 0) == 0) {
        digits = std::string_view{t}.substr(3);
    } else if (t.rfind('F', 0) == 0) {
        digits = std::string_view{t}.substr(1);
    } else {
        throw InvalidField("unknown field '" + std::string{text} + "'");
    }
    std::int64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
        throw InvalidField("unknown field '" + std::string{text} + "'");
    }
    return prime(p);
}

std::string FieldSpec::name() const {
    return kind_ == Kind::Rationals ? std::string{"Q"} : "F" + std::to_string(p_);
}

Scalar::Scalar(FieldSpec field) : field_{field} {}

Scalar Scalar::from_int(FieldSpec field, std::int64_t value) {
    Scalar s{field};
    if (field.is_prime_field()) {
        s.r_ = mod_reduce(value, field.characteristic());
    } else {
        s.q_ = value;
    }
    return s;
}

Scalar Scalar::from_rational(FieldSpec field, const Rational& value) {
    Scalar s{field};
    if (!field.is_prime_field()) {
        s.q_ = value;
        return s;
    }
    const std::int64_t p = field.characteristic();
    auto reduce = [p](const BigInt& v) {
        BigInt r = v % p;
        if (r < 0) r += p;
        return static_cast<std::int64_t>(r);
    };
    std::int64_t num = reduce(boost::multiprecision::numerator(value));
    std::int64_t den = reduce(boost::multiprecision::denominator(value));
    if (den == 0) throw DivisionByZero("denominator vanishes in " + field.name());
    s.r_ = mod_mul(num, mod_inv(den, p), p);
    return s;
}

Scalar Scalar::parse(FieldSpec field, std::string_view text) {
    auto parse_int = [&](std::string_view part) {
        if (part.empty()) throw ParseError("empty scalar '" + std::string{text} + "'");
        for (std::size_t i = 0; i < part.size(); ++i) {
            const char c = part[i];
            if (!(std::isdigit(static_cast<unsigned char>(c)) || (i == 0 && (c == '-' || c == '+')))) {
                throw ParseError("malformed scalar '" + std::string{text} + "'");
            }
        }
        return BigInt{std::string{part}};
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return from_rational(field, Rational{parse_int(text)});
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw DivisionByZero("zero denominator in '" + std::string{text} + "'");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return from_rational(field, Rational{num, den});
}

bool Scalar::is_zero() const { return field_.is_prime_field() ? r_ == 0 : q_ == 0; }

bool Scalar::is_one() const { return field_.is_prime_field() ? r_ == 1 : q_ == 1; }

const Rational& Scalar::rational() const {
    if (field_.is_prime_field()) throw FieldMismatch("rational() on an element of " + field_.name());
    return q_;
}

std::int64_t Scalar::residue() const {
    if (!field_.is_prime_field()) throw FieldMismatch("residue() on a rational scalar");
    return r_;
}

void Scalar::require_same_field(const Scalar& other) const {
    if (!(field_ == other.field_)) {
        throw FieldMismatch("cannot combine " + field_.name() + " and " + other.field_.name());
    }
}

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    Scalar s{field_};
    if (field_.is_prime_field()) {
        s.r_ = mod_inv(r_, field_.characteristic());
    } else {
        s.q_ = 1 / q_;
    }
    return s;
}

Scalar Scalar::pow(std::int64_t exponent) const {
    Scalar base = exponent < 0 ? inv() : *this;
    std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-(exponent + 1)) + 1
                                   : static_cast<std::uint64_t>(exponent);
    Scalar result = one(field_);
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

Scalar Scalar::operator-() const {
    Scalar s{field_};
    if (field_.is_prime_field()) {
        s.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
    } else {
        s.q_ = -q_;
    }
    return s;
}

Scalar& Scalar::operator+=(const Scalar& other) {
    require_same_field(other);
    if (field_.is_prime_field()) {
        r_ += other.r_;
        if (r_ >= field_.characteristic()) r_ -= field_.characteristic();
    } else {
        q_ += other.q_;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
    require_same_field(other);
    if (field_.is_prime_field()) {
        r_ -= other.r_;
        if (r_ < 0) r_ += field_.characteristic();
    } else {
        q_ -= other.q_;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
    require_same_field(other);
    if (field_.is_prime_field()) {
        r_ = mod_mul(r_, other.r_, field_.characteristic());
    } else {
        q_ *= other.q_;
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
    require_same_field(other);
    return *this *= other.inv();
}

bool operator==(const Scalar& a, const Scalar& b) {
    a.require_same_field(b);
    return a.field_.is_prime_field() ? a.r_ == b.r_ : a.q_ == b.q_;
}

std::string Scalar::to_string() const {
    if (field_.is_prime_field()) return std::to_string(r_);
    return boost::multiprecision::numerator(q_).str() + "/" + boost::multiprecision::denominator(q_).str();
}

}  // namespace gleib
