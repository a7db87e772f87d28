#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "springer/rational.hpp"

namespace springer {

/// Euler totient of l (l >= 1).
unsigned euler_phi(unsigned l);

/// Coefficients of the l-th cyclotomic polynomial, constant term first,
/// length phi(l)+1, monic. Computed by exact division of x^l - 1 by the
/// cyclotomic polynomials of the proper divisors of l. Cached.
const std::vector<Rational>& cyclotomic_polynomial(unsigned l);

/// An element of Q(zeta_l), stored as the unique representative of degree
/// < phi(l) modulo the l-th cyclotomic polynomial. Order 1 is Q itself and
/// embeds into any other order, so rational constants mix freely; two
/// genuinely different orders do not.
class Cyclotomic {
  public:
    Cyclotomic() : order_(1), c_(1) {}
    explicit Cyclotomic(const Rational& r) : order_(1), c_{r} {}
    explicit Cyclotomic(long n) : order_(1), c_{Rational(n)} {}

    static Cyclotomic zero(unsigned order);
    static Cyclotomic one(unsigned order);
    static Cyclotomic from_rational(unsigned order, const Rational& r);
    /// zeta_l^e, e arbitrary (reduced mod l).
    static Cyclotomic zeta_power(unsigned order, long e);
    /// Canonical form of sum coeff * zeta_l^exponent over the given terms.
    static Cyclotomic from_terms(unsigned order,
                                 const std::vector<std::pair<long, Rational>>& terms);
    /// From dense coefficients in powers 0..deg of zeta_l (any length).
    static Cyclotomic from_dense(unsigned order, std::vector<Rational> dense);

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /// The value as a Rational; requires is_rational().
    Rational rational_value() const;

    Cyclotomic operator-() const;
    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator/(const Cyclotomic& o) const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);

    Cyclotomic operator*(const Rational& r) const;
    Cyclotomic& operator*=(const Rational& r);
    /// this += r * o, with o promoted as needed.
    void add_scaled(const Rational& r, const Cyclotomic& o);

    Cyclotomic inverse() const;
    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    /// Representative of the same value in Q(zeta_order); only for
    /// rational values or order == this->order.
    Cyclotomic promoted(unsigned order) const;

    /// Text form: polynomial in z with rational coefficients, "1/3 + 2/3*z".
    std::string str() const;

    /// Numeric embedding zeta_l -> exp(2*pi*i/l). Testing aid.
    std::complex<double> to_complex() const;

  private:
    Cyclotomic(unsigned order, std::vector<Rational> reduced)
        : order_(order), c_(std::move(reduced)) {}
    static void match_orders(Cyclotomic& a, Cyclotomic& b);

    unsigned order_;
    std::vector<Rational> c_;  // length phi(order_)
};

inline bool is_zero(const Cyclotomic& c) { return c.is_zero(); }
inline Cyclotomic operator*(const Rational& r, const Cyclotomic& c) { return c * r; }
inline std::string to_string(const Cyclotomic& c) { return c.str(); }

}  // namespace springer
