#include "springer/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "springer/errors.hpp"

namespace springer {

unsigned euler_phi(unsigned l) {
    if (l == 0) throw invalid_input("euler_phi: order must be >= 1");
    unsigned result = l, n = l;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Dense polynomial helpers over Q, constant term first.
using Dense = std::vector<Rational>;

void trim(Dense& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Exact division; requires the remainder to vanish.
Dense div_exact(Dense num, const Dense& den) {
    Dense q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0);
    for (int i = static_cast<int>(num.size()) - static_cast<int>(den.size());
         i >= 0; --i) {
        Rational c = num[i + den.size() - 1] / den.back();
        q[i] = c;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    trim(num);
    check_internal(num.empty(), "cyclotomic polynomial division left a remainder");
    return q;
}

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(unsigned l) {
    static std::map<unsigned, Dense> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(l);
    if (it != cache.end()) return it->second;
    if (l == 0) throw invalid_input("cyclotomic_polynomial: order must be >= 1");

    // x^l - 1 divided by Phi_d for all proper divisors d of l.
    std::function<const Dense&(unsigned)> phi_of = [&](unsigned n) -> const Dense& {
        auto found = cache.find(n);
        if (found != cache.end()) return found->second;
        Dense num(n + 1);
        num[0] = -1;
        num[n] = 1;
        for (unsigned d = 1; d < n; ++d)
            if (n % d == 0) num = div_exact(std::move(num), phi_of(d));
        return cache.emplace(n, std::move(num)).first->second;
    };
    return phi_of(l);
}

Cyclotomic Cyclotomic::zero(unsigned order) {
    return from_rational(order, Rational(0));
}

Cyclotomic Cyclotomic::one(unsigned order) {
    return from_rational(order, Rational(1));
}

Cyclotomic Cyclotomic::from_rational(unsigned order, const Rational& r) {
    if (order == 0) throw invalid_input("Cyclotomic: order must be >= 1");
    std::vector<Rational> c(euler_phi(order));
    c[0] = r;
    return Cyclotomic(order, std::move(c));
}

Cyclotomic Cyclotomic::from_dense(unsigned order, std::vector<Rational> dense) {
    if (order == 0) throw invalid_input("Cyclotomic: order must be >= 1");
    const auto& phi = cyclotomic_polynomial(order);
    const std::size_t deg = phi.size() - 1;  // = euler_phi(order)
    // Reduce modulo Phi_l (monic), top down.
    for (std::size_t i = dense.size(); i-- > deg;) {
        Rational c = dense[i];
        if (c.is_zero()) continue;
        dense[i] = 0;
        for (std::size_t j = 0; j < deg; ++j) dense[i - deg + j] -= c * phi[j];
    }
    dense.resize(deg);
    return Cyclotomic(order, std::move(dense));
}

Cyclotomic Cyclotomic::zeta_power(unsigned order, long e) {
    if (order == 0) throw invalid_input("Cyclotomic: order must be >= 1");
    long r = e % static_cast<long>(order);
    if (r < 0) r += order;
    std::vector<Rational> dense(static_cast<std::size_t>(r) + 1);
    dense.back() = 1;
    return from_dense(order, std::move(dense));
}

Cyclotomic Cyclotomic::from_terms(unsigned order,
                                  const std::vector<std::pair<long, Rational>>& terms) {
    if (order == 0) throw invalid_input("Cyclotomic: order must be >= 1");
    std::vector<Rational> dense(order);
    for (const auto& [e, coeff] : terms) {
        long r = e % static_cast<long>(order);
        if (r < 0) r += order;
        dense[static_cast<std::size_t>(r)] += coeff;
    }
    return from_dense(order, std::move(dense));
}

bool Cyclotomic::is_zero() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const Rational& r) { return r.is_zero(); });
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    check_internal(is_rational(), "rational_value on a non-rational cyclotomic");
    return c_[0];
}

Cyclotomic Cyclotomic::promoted(unsigned order) const {
    if (order == order_) return *this;
    if (order_ == 1) return from_rational(order, c_[0]);
    if (is_rational()) return from_rational(order, c_[0]);
    throw invalid_input("cyclotomic order mismatch: " + std::to_string(order_) +
                        " vs " + std::to_string(order));
}

void Cyclotomic::match_orders(Cyclotomic& a, Cyclotomic& b) {
    if (a.order_ == b.order_) return;
    if (a.order_ == 1)
        a = a.promoted(b.order_);
    else if (b.order_ == 1)
        b = b.promoted(a.order_);
    else
        throw invalid_input("cyclotomic order mismatch: " + std::to_string(a.order_) +
                            " vs " + std::to_string(b.order_));
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    Cyclotomic a = *this, b = o;
    match_orders(a, b);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    Cyclotomic a = *this, b = o;
    match_orders(a, b);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
    return a;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    *this = *this + o;
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    *this = *this - o;
    return *this;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    Cyclotomic a = *this, b = o;
    match_orders(a, b);
    if (a.c_.size() == 1) return Cyclotomic(a.order_, {a.c_[0] * b.c_[0]});
    std::vector<Rational> conv(2 * a.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            conv[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return from_dense(a.order_, std::move(conv));
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    *this = *this * o;
    return *this;
}

Cyclotomic Cyclotomic::operator*(const Rational& r) const {
    Cyclotomic a = *this;
    for (auto& x : a.c_) x *= r;
    return a;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
    for (auto& x : c_) x *= r;
    return *this;
}

void Cyclotomic::add_scaled(const Rational& r, const Cyclotomic& o) {
    if (r.is_zero() || o.is_zero()) return;
    if (order_ != o.order_) {
        *this = *this + o * r;
        return;
    }
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += r * o.c_[i];
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw invalid_input("division by zero in Q(zeta)");
    if (c_.size() == 1) return Cyclotomic(order_, {1 / c_[0]});
    // Extended Euclid in Q[x] for gcd(this, Phi_l) = 1; Phi_l is irreducible
    // over Q so every nonzero residue is invertible.
    Dense r0 = cyclotomic_polynomial(order_);
    Dense r1(c_.begin(), c_.end());
    trim(r1);
    Dense s0{}, s1{Rational(1)};  // coefficients of *this in the Bezout identity
    auto sub_scaled_shift = [](Dense& a, const Rational& c, const Dense& b,
                               std::size_t shift) {
        if (a.size() < b.size() + shift) a.resize(b.size() + shift);
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        trim(a);
    };
    while (true) {
        check_internal(!r1.empty(), "cyclotomic inverse: unexpected zero remainder");
        if (r1.size() == 1) break;  // nonzero constant: gcd reached
        // r0 = q*r1 + r; do one full division step.
        while (r0.size() >= r1.size()) {
            std::size_t shift = r0.size() - r1.size();
            Rational c = r0.back() / r1.back();
            sub_scaled_shift(r0, c, r1, shift);
            sub_scaled_shift(s0, c, s1, shift);
            if (r0.empty()) break;
        }
        std::swap(r0, r1);
        std::swap(s0, s1);
    }
    // r1 = s1 * this (mod Phi), r1 constant and nonzero.
    Rational inv_c = 1 / r1[0];
    for (auto& x : s1) x *= inv_c;
    return from_dense(order_, std::move(s1));
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const {
    Cyclotomic a = *this, b = o;
    match_orders(a, b);
    return a * b.inverse();
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (order_ == o.order_) return c_ == o.c_;
    if (is_rational() && o.is_rational()) return c_[0] == o.c_[0];
    return false;
}

std::string Cyclotomic::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        Rational a = c_[i];
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
            first = false;
        } else if (a < 0) {
            out << " - ";
            a = -a;
        } else {
            out << " + ";
        }
        if (i == 0) {
            out << a.str();
        } else {
            if (a != 1) out << a.str() << "*";
            out << "z";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> zeta =
        std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(order_));
    std::complex<double> acc{0.0, 0.0};
    std::complex<double> p{1.0, 0.0};
    for (const auto& coeff : c_) {
        acc += p * coeff.convert_to<double>();
        p *= zeta;
    }
    return acc;
}

}  // namespace springer
