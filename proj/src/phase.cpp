#include "qalg/phase.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "qalg/errors.hpp"

namespace qalg {

Phase Phase::of(std::int64_t k, std::int64_t m) {
    if (m == 0) throw InvalidConfig("phase with zero modulus");
    if (m < 0) {
        m = -m;
        k = -k;
    }
    k %= m;
    if (k < 0) k += m;
    std::int64_t g = std::gcd(k, m);
    if (k == 0) return Phase();
    Phase p;
    p.k_ = k / g;
    p.m_ = m / g;
    return p;
}

Phase Phase::operator*(const Phase& o) const {
    // angle addition k/m + k'/m' over the common denominator
    std::int64_t g = std::gcd(m_, o.m_);
    std::int64_t m = m_ / g * o.m_;
    return of(k_ * (o.m_ / g) + o.k_ * (m_ / g), m);
}

Phase Phase::pow(std::int64_t e) const {
    // multiply the angle; of() renormalizes mod 1
    if (e == 0) return Phase();
    // avoid k_*e overflow by reducing e mod m_ first
    std::int64_t er = e % m_;
    if (er < 0) er += m_;
    return of(k_ * er, m_);
}

bool Phase::operator<(const Phase& o) const {
    return k_ * o.m_ < o.k_ * m_;
}

std::complex<double> Phase::to_complex() const {
    double a = 2.0 * std::numbers::pi * static_cast<double>(k_) / static_cast<double>(m_);
    return {std::cos(a), std::sin(a)};
}

std::string Phase::to_string() const {
    return std::to_string(k_) + "/" + std::to_string(m_);
}

namespace {

// integer polynomial exact division, quotient only; divisor monic
std::vector<std::int64_t> divide_monic(std::vector<std::int64_t> num,
                                       const std::vector<std::int64_t>& den) {
    std::vector<std::int64_t> quot(num.size() - den.size() + 1, 0);
    for (std::size_t i = num.size(); i-- >= den.size();) {
        std::int64_t c = num[i];
        if (c == 0) {
            if (i == 0) break;
            continue;
        }
        std::size_t shift = i - (den.size() - 1);
        quot[shift] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
        if (i == 0) break;
    }
    return quot;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n) {
    static std::map<std::int64_t, std::vector<std::int64_t>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<std::int64_t> poly(static_cast<std::size_t>(n) + 1, 0);
    poly[0] = -1;
    poly[static_cast<std::size_t>(n)] = 1;
    for (std::int64_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        poly = divide_monic(std::move(poly), cyclotomic_polynomial(d));
    }
    return cache.emplace(n, std::move(poly)).first->second;
}

PhaseSum::PhaseSum(const Phase& p, const Rational& c) {
    if (c != 0) parts_[p] = c;
    canonicalize();
}

void PhaseSum::canonicalize() {
    for (auto it = parts_.begin(); it != parts_.end();)
        it = it->second == 0 ? parts_.erase(it) : std::next(it);
    if (parts_.empty()) return;
    std::int64_t n = 1;
    for (const auto& [p, c] : parts_) n = std::lcm(n, p.m());
    if (n == 1) return;
    std::vector<Rational> coeff(static_cast<std::size_t>(n));
    for (const auto& [p, c] : parts_)
        coeff[static_cast<std::size_t>(p.k() * (n / p.m()))] += c;
    const auto& phi = cyclotomic_polynomial(n);
    std::size_t deg = phi.size() - 1;  // = euler phi(n)
    for (std::size_t i = coeff.size(); i-- > deg;) {
        if (coeff[i] == 0) continue;
        Rational c = coeff[i];
        for (std::size_t j = 0; j < deg; ++j) coeff[i - deg + j] -= c * phi[j];
        coeff[i] = 0;
    }
    parts_.clear();
    for (std::size_t j = 0; j < deg; ++j)
        if (coeff[j] != 0)
            parts_[Phase::of(static_cast<std::int64_t>(j), n)] = coeff[j];
}

std::optional<std::pair<Phase, Rational>> PhaseSum::single() const {
    if (parts_.size() != 1) return std::nullopt;
    return *parts_.begin();
}

PhaseSum PhaseSum::operator+(const PhaseSum& o) const {
    PhaseSum r = *this;
    for (const auto& [p, c] : o.parts_) r.parts_[p] += c;
    r.canonicalize();
    return r;
}

PhaseSum PhaseSum::operator-() const {
    PhaseSum r = *this;
    for (auto& [p, c] : r.parts_) c = -c;
    return r;
}

PhaseSum PhaseSum::operator-(const PhaseSum& o) const { return *this + (-o); }

PhaseSum PhaseSum::operator*(const PhaseSum& o) const {
    PhaseSum r;
    for (const auto& [p1, c1] : parts_)
        for (const auto& [p2, c2] : o.parts_) r.parts_[p1 * p2] += c1 * c2;
    r.canonicalize();
    return r;
}

PhaseSum PhaseSum::scaled(const Rational& c) const {
    if (c == 0) return PhaseSum();
    PhaseSum r = *this;
    for (auto& [p, v] : r.parts_) v *= c;
    return r;
}

std::complex<double> PhaseSum::to_complex() const {
    std::complex<double> z;
    for (const auto& [p, c] : parts_)
        z += p.to_complex() * static_cast<double>(c);
    return z;
}

std::string PhaseSum::to_string() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : parts_) {
        Rational a = c;
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (p.is_one()) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "w(" << p.to_string() << ")";
        }
    }
    return os.str();
}

}  // namespace qalg
