#ifndef KSTAB_POLYNOMIAL_HPP
#define KSTAB_POLYNOMIAL_HPP

#include "kstab/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace kstab {

/// Dense univariate polynomial over Rational, coefficients stored in
/// ascending degree with no trailing zeros. The zero polynomial has an
/// empty coefficient list and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> ascending_coefficients);

    static Polynomial constant(const Rational& c);
    /// c0 + c1*x.
    static Polynomial affine(const Rational& c0, const Rational& c1);
    static Polynomial monomial(const Rational& c, int degree);

    bool is_zero() const { return coeff_.empty(); }
    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeff_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeff_; }
    Rational coefficient(int k) const;
    const Rational& leading() const;

    /// Exact evaluation by Horner's rule.
    Rational operator()(const Rational& x) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    Polynomial derivative() const;
    /// Antiderivative with zero constant term.
    Polynomial antiderivative() const;
    /// x * p.
    Polynomial times_x() const;

    /// Euclidean division: returns (quotient, remainder) with
    /// deg r < deg divisor. Divisor must be nonzero.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

    /// Monic-normalized gcd with positive leading coefficient (gcd(0,0) = 0).
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);

    /// p / gcd(p, p'): same distinct roots, all simple.
    Polynomial square_free_part() const;

    /// Gcd of the coefficients as a non-negative rational
    /// (gcd of numerators over lcm of denominators).
    Rational content() const;

    std::string str(char var = 't') const;

private:
    void trim();
    std::vector<Rational> coeff_;
};

/// Exact integral of p over [a, b]. Throws std::invalid_argument if a > b.
Rational definite_integral(const Polynomial& p, const Rational& a, const Rational& b);

} // namespace kstab

#endif
