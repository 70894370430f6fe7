#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <string>
#include <vector>

#include "corona/errors.hpp"

namespace corona {

/// Exact arbitrary-precision integer scalar used throughout the exact paths.
using Int = boost::multiprecision::cpp_int;

/**
 * Univariate polynomial with exact integer coefficients, stored low to high.
 *
 * Invariant: the coefficient vector is empty (the zero polynomial) or its
 * last entry is nonzero. degree() of the zero polynomial is -1.
 */
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(Int constant);
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<Int> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly(Int(1)); }
    /// x^power with the given coefficient.
    static IntPoly monomial(Int coefficient, int power);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    /// Coefficient of x^k; zero beyond the stored degree.
    const Int& coeff(int k) const;
    const Int& leading() const;

    Int eval(const Int& x) const;
    /// den^degree * p(num/den), an exact integer for integer num, den.
    Int eval_homogeneous(const Int& num, const Int& den) const;
    double eval_double(double x) const;

    /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    Int content() const;
    IntPoly primitive_part() const;
    IntPoly derivative() const;
    std::vector<double> to_doubles() const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
    friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
    friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
    friend IntPoly operator*(const IntPoly& lhs, const Int& scalar);
    friend bool operator==(const IntPoly& lhs, const IntPoly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }
    friend bool operator!=(const IntPoly& lhs, const IntPoly& rhs) { return !(lhs == rhs); }

    /// Human-readable form, e.g. "x^3 - 2*x".
    std::string to_string() const;

private:
    void normalize();
    std::vector<Int> coeffs_;
};

/// Exact quotient; throws std::logic_error if the division is not exact.
IntPoly divide_exact(const IntPoly& numerator, const IntPoly& divisor);

/// gcd over Z[x] (content times primitive gcd), leading coefficient positive.
IntPoly poly_gcd(IntPoly a, IntPoly b);

/// p(x + shift), computed exactly.
IntPoly taylor_shift(const IntPoly& p, const Int& shift);

/// Quotient of p by (x - root); requires p(root) == 0.
IntPoly deflate_root(const IntPoly& p, const Int& root);

/// Square-free decomposition (Yun): returns pairs (factor, multiplicity)
/// with multiplicities ascending; the product of factor^multiplicity equals
/// the primitive part of p up to sign.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

/**
 * Reduced ratio of integer polynomials.
 *
 * Invariants after reduce_rational_fn: denominator nonzero with positive
 * leading coefficient, gcd(num, den) constant, and the pair is jointly
 * primitive (no common integer content). Denominators descending from
 * characteristic polynomials are monic, hence primitive.
 */
struct RationalFn {
    IntPoly num;
    IntPoly den;

    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }
    std::string to_string() const;
};

RationalFn reduce_rational_fn(IntPoly num, IntPoly den);

}  // namespace corona
