#include "qalg/field.hpp"

#include <sstream>

namespace qalg {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InvalidDivisor("rational with zero denominator");
    // Division of cpp_rational values canonicalizes the result.
    return Rational(num) / Rational(den);
}

Field Field::prime(std::uint64_t p) {
    if (p < 2) throw InvalidConfig("field characteristic must be a prime >= 2");
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw InvalidConfig("field characteristic must be prime");
    return Field{p};
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw InvalidDivisor("inverse of zero residue");
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::uint64_t r = p, new_r = a % p;
    while (new_r != 0) {
        std::uint64_t q = r / new_r;
        std::int64_t tmp_t = t - static_cast<std::int64_t>(q) * new_t;
        t = new_t;
        new_t = tmp_t;
        std::uint64_t tmp_r = r - q * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    if (r != 1) throw InvalidDivisor("residue not invertible");
    return t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(p))
                 : static_cast<std::uint64_t>(t);
}

FieldElement FieldElement::from_integer(const BigInt& n, Field f) {
    FieldElement e;
    e.field_ = f;
    if (f.is_rational()) {
        e.q_ = Rational(n);
    } else {
        BigInt m = n % BigInt(f.p);
        if (m < 0) m += f.p;
        e.r_ = static_cast<std::uint64_t>(m);
    }
    return e;
}

FieldElement FieldElement::from_rational(const Rational& q, Field f) {
    FieldElement e;
    e.field_ = f;
    if (f.is_rational()) {
        e.q_ = q;
    } else {
        BigInt num = numerator(q) % BigInt(f.p);
        if (num < 0) num += f.p;
        BigInt den = denominator(q) % BigInt(f.p);
        if (den == 0) throw InvalidDivisor("denominator vanishes modulo p");
        e.r_ = mod_mul(static_cast<std::uint64_t>(num),
                       mod_inverse(static_cast<std::uint64_t>(den), f.p), f.p);
    }
    return e;
}

bool FieldElement::is_zero() const {
    return field_.is_rational() ? q_ == 0 : r_ == 0;
}

bool FieldElement::is_one() const {
    return field_.is_rational() ? q_ == 1 : r_ == 1;
}

void FieldElement::check_same(const FieldElement& o) const {
    if (!(field_ == o.field_))
        throw DimensionMismatch("field elements from different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    FieldElement e;
    e.field_ = field_;
    if (field_.is_rational()) {
        e.q_ = q_ + o.q_;
    } else {
        std::uint64_t s = r_ + o.r_;
        if (s >= field_.p) s -= field_.p;
        e.r_ = s;
    }
    return e;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    return *this + (-o);
}

FieldElement FieldElement::operator-() const {
    FieldElement e;
    e.field_ = field_;
    if (field_.is_rational())
        e.q_ = -q_;
    else
        e.r_ = r_ == 0 ? 0 : field_.p - r_;
    return e;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    FieldElement e;
    e.field_ = field_;
    if (field_.is_rational())
        e.q_ = q_ * o.q_;
    else
        e.r_ = mod_mul(r_, o.r_, field_.p);
    return e;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw InvalidDivisor("inverse of zero");
    FieldElement e;
    e.field_ = field_;
    if (field_.is_rational())
        e.q_ = 1 / q_;
    else
        e.r_ = mod_inverse(r_, field_.p);
    return e;
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same(o);
    return *this * o.inverse();
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (!(field_ == o.field_)) return false;
    return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

const Rational& FieldElement::rational_value() const {
    if (!field_.is_rational()) throw DimensionMismatch("not a rational element");
    return q_;
}

std::uint64_t FieldElement::residue() const {
    if (field_.is_rational()) throw DimensionMismatch("not a prime-field element");
    return r_;
}

std::string FieldElement::to_string() const {
    if (field_.is_rational()) {
        std::ostringstream os;
        os << q_;
        return os.str();
    }
    return std::to_string(r_);
}

}  // namespace qalg
