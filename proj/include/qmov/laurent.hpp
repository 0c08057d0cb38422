#ifndef QMOV_LAURENT_HPP
#define QMOV_LAURENT_HPP

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>

namespace qmov {

// Laurent polynomial in the single variable q, with arbitrary-precision
// integer coefficients.  Terms are kept in a sorted exponent -> coefficient
// map; a zero coefficient is never stored, so the zero polynomial is the
// empty map and operator== is plain structural equality.
class LaurentPoly {
public:
    using Coeff = mpz_class;
    using Terms = std::map<long, Coeff>;

    LaurentPoly() = default;
    LaurentPoly(long c) { if (c != 0) terms_[0] = c; }
    LaurentPoly(const Coeff& c) { if (c != 0) terms_[0] = c; }

    static LaurentPoly monomial(Coeff c, long exp);
    // q(3) is q^3, q(-1) is q^-1.
    static LaurentPoly q(long exp = 1) { return monomial(1, exp); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }

    // Lowest and highest exponents; both require a nonzero polynomial.
    long min_exp() const { return terms_.begin()->first; }
    long max_exp() const { return terms_.rbegin()->first; }

    Coeff coeff(long exp) const;

    const Terms& terms() const { return terms_; }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { a -= b; return a; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    // Total order compatible with equality, used to keep polynomials in
    // ordered containers.  Compares term lists lexicographically.
    std::strong_ordering operator<=>(const LaurentPoly& o) const;

    // Multiply by c*q^exp in place.
    LaurentPoly& shift(long exp);
    LaurentPoly& scale(const Coeff& c);

    // gcd of all coefficients, as a nonnegative integer (0 for the zero
    // polynomial).
    Coeff content() const;

    // this / (content * q^min_exp): an ordinary polynomial with coprime
    // coefficients, nonzero constant term and positive leading coefficient.
    LaurentPoly primitive() const;

    // Substitution q -> q^-1.
    LaurentPoly bar() const;

    // Exact division: returns false if o does not divide this in Z[q,q^-1].
    // On success *quot holds the quotient.
    bool divide_exact(const LaurentPoly& o, LaurentPoly* quot) const;

    // Terms in ascending exponent order, e.g. "q^-4 + 2 + q^4", "-q + 3q^2",
    // "0".
    std::string str() const;

private:
    Terms terms_;
};

// gcd in Z[q,q^-1] up to units: the result is primitive in the sense above
// (ordinary, coprime coefficients, positive leading coefficient), and is the
// zero polynomial only if both arguments are zero.  Contents of the inputs
// are ignored; this is the polynomial-part gcd used to reduce fractions
// whose integer parts are handled separately.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace qmov

#endif
