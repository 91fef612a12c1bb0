#pragma once

#include "axial/linalg.hpp"
#include "axial/rational.hpp"

#include <string>
#include <vector>

namespace axial {

/// Univariate polynomial over the rationals, coefficients lowest degree
/// first. The zero polynomial has an empty coefficient list; nonzero
/// polynomials keep a nonzero leading coefficient.
class Polynomial {
public:
    Polynomial() = default; // zero
    explicit Polynomial(RatVec coeffs);
    static Polynomial constant(const Rational& c);
    static Polynomial monomial_t();                 // t
    static Polynomial linear_root(const Rational& r); // t - r

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const;
    const RatVec& coeffs() const { return coeffs_; }
    const Rational& leading() const { return coeffs_.back(); }

    Polynomial monic() const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    bool operator==(const Polynomial& rhs) const = default;

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
    bool divides(const Polynomial& divisor) const; // divisor | *this

    Rational eval(const Rational& x) const;
    Matrix eval(const Matrix& m) const; // Horner with matrices

    std::string str(const std::string& var = "t") const;

private:
    RatVec coeffs_;
    void trim();
};

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b); // monic
Polynomial poly_lcm(const Polynomial& a, const Polynomial& b); // monic

/// Exact minimal polynomial: lcm over basis vectors of the Krylov-local
/// minimal polynomial (least k with M^k v dependent on earlier powers).
Polynomial minimal_polynomial(const Matrix& m);

} // namespace axial
