#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).  Values are stored in the
// power basis {1, zeta, ..., zeta^(phi(N)-1)} with rational coefficients,
// always reduced modulo the N-th cyclotomic polynomial, so equality of
// reduced coefficient vectors is equality of field elements.

#include "sl3cat/rational.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace sl3cat {

long euler_phi(long n);

class Cyclo {
  public:
    Cyclo() : conductor_(1), coeffs_(1, Rational(0)) {}
    explicit Cyclo(const Rational& r) : conductor_(1), coeffs_(1, r) {}
    explicit Cyclo(long n) : conductor_(1), coeffs_(1, Rational(n)) {}

    // zeta_N^j, reduced canonically.  j may be any integer (taken mod N).
    static Cyclo root_of_unity(long n, long j);
    static Cyclo zero(long conductor);
    static Cyclo from_coeffs(long conductor, std::vector<Rational> coeffs);

    long conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    // Requires is_rational().
    Rational rational_value() const;

    // Image under Q(zeta_N) -> Q(zeta_M), zeta_N |-> zeta_M^(M/N).
    // Throws std::invalid_argument("incompatible conductor") unless N | M.
    Cyclo embedded(long m) const;

    // Complex conjugation, the automorphism zeta_N |-> zeta_N^(N-1).
    Cyclo conjugate() const;

    // Multiplicative inverse via the extended Euclidean algorithm on
    // polynomials modulo Phi_N.  Throws std::domain_error("division by zero")
    // on zero input.
    Cyclo inverse() const;

    Cyclo pow(long e) const;

    // Numerical embedding zeta_N |-> exp(2*pi*i/N).  The result is accurate
    // to at least `digits` decimal digits; digits in [1, 15] are supported.
    std::complex<double> to_complex(int digits = 12) const;

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Rational& a, const Cyclo& b);
    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    Cyclo& operator+=(const Cyclo& b);
    Cyclo& operator*=(const Cyclo& b);

  private:
    long conductor_;
    std::vector<Rational> coeffs_; // length phi(conductor_)

    friend struct CycloOps;
};

} // namespace sl3cat
