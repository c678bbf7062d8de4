#ifndef QALG_PHASE_HPP
#define QALG_PHASE_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qalg/field.hpp"

namespace qalg {

/// A root of unity exp(2*pi*i * k/m), stored as the angle k/m with
/// 0 <= k < m and gcd(k, m) = 1 (the identity is 0/1).
class Phase {
public:
    Phase() = default;  // the identity phase
    static Phase of(std::int64_t k, std::int64_t m);
    static Phase one() { return Phase(); }
    static Phase minus_one() { return of(1, 2); }

    std::int64_t k() const { return k_; }
    std::int64_t m() const { return m_; }
    bool is_one() const { return k_ == 0; }

    Phase operator*(const Phase& o) const;  // angle addition mod 1
    Phase inverse() const { return of(-k_, m_); }
    Phase pow(std::int64_t e) const;

    bool operator==(const Phase& o) const = default;
    /// Order by angle; used as a container key, not an algebraic order.
    bool operator<(const Phase& o) const;

    std::complex<double> to_complex() const;
    std::string to_string() const;  // "k/m"

private:
    std::int64_t k_ = 0;
    std::int64_t m_ = 1;
};

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
/// Cached; exact integer arithmetic throughout.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n);

/// An exact finite sum  sum_j c_j * zeta_j  of rational multiples of roots of
/// unity, kept in canonical form: with N the lcm of the phase denominators,
/// the sum is reduced modulo the N-th cyclotomic polynomial, so equality of
/// stored forms is equality of complex values.  Closed under ring operations,
/// which single (Phase, coefficient) pairs are not.
class PhaseSum {
public:
    PhaseSum() = default;  // zero
    PhaseSum(const Phase& p, const Rational& c);
    explicit PhaseSum(const Rational& c) : PhaseSum(Phase::one(), c) {}
    static PhaseSum one() { return PhaseSum(Rational(1)); }

    bool is_zero() const { return parts_.empty(); }
    /// The (phase, coefficient) pair if the sum has exactly one part.
    std::optional<std::pair<Phase, Rational>> single() const;

    PhaseSum operator+(const PhaseSum& o) const;
    PhaseSum operator-(const PhaseSum& o) const;
    PhaseSum operator*(const PhaseSum& o) const;
    PhaseSum operator-() const;
    PhaseSum scaled(const Phase& p) const { return *this * PhaseSum(p, 1); }
    PhaseSum scaled(const Rational& c) const;

    bool operator==(const PhaseSum& o) const { return (*this - o).is_zero(); }
    bool operator!=(const PhaseSum& o) const { return !(*this == o); }

    const std::map<Phase, Rational>& parts() const { return parts_; }
    std::complex<double> to_complex() const;
    std::string to_string() const;

private:
    std::map<Phase, Rational> parts_;
    void canonicalize();
};

}  // namespace qalg

#endif
