#ifndef QALG_FIELD_HPP
#define QALG_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "qalg/errors.hpp"

namespace qalg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Rational from an integer pair; canonical (lowest terms, positive denominator).
Rational make_rational(const BigInt& num, const BigInt& den);

/// Coefficient field descriptor: the rationals (p == 0) or the prime field F_p.
struct Field {
    std::uint64_t p = 0;

    bool is_rational() const { return p == 0; }
    bool operator==(const Field& other) const = default;

    static Field rationals() { return Field{0}; }
    static Field prime(std::uint64_t p);
};

/// An exact scalar: a canonical rational or a residue in [0, p).
///
/// All arithmetic requires both operands to carry the same field and is exact;
/// mixing fields raises DimensionMismatch.
class FieldElement {
public:
    FieldElement() : field_{0} {}  // rational zero

    static FieldElement zero(Field f) { return from_integer(0, f); }
    static FieldElement one(Field f) { return from_integer(1, f); }
    static FieldElement from_integer(const BigInt& n, Field f);
    /// In F_p interprets a/b as a * b^{-1}; throws InvalidDivisor if p | b.
    static FieldElement from_rational(const Rational& q, Field f);

    Field field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// Rational value; only valid over the rationals.
    const Rational& rational_value() const;
    /// Residue in [0, p); only valid over a prime field.
    std::uint64_t residue() const;

    std::string to_string() const;

private:
    Field field_;
    Rational q_;            // used when field_.p == 0
    std::uint64_t r_ = 0;   // used when field_.p != 0

    void check_same(const FieldElement& o) const;
};

/// Modular inverse of a mod p for prime p; throws InvalidDivisor on a == 0.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);

}  // namespace qalg

#endif
