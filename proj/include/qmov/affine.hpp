#ifndef QMOV_AFFINE_HPP
#define QMOV_AFFINE_HPP

#include <compare>
#include <map>
#include <string>

#include "qmov/ratfunc.hpp"

namespace qmov {

// Degree-one expression c0 + sum coeff[i] * x_i in unknowns indexed by
// small integers, with coefficients in the rational functions of q.  Zero
// coefficients are never stored.
class AffineExpr {
public:
    AffineExpr() = default;
    AffineExpr(RatFunc c) : c0_(std::move(c)) {}
    AffineExpr(long c) : c0_(c) {}

    static AffineExpr var(int id, RatFunc coeff = RatFunc(1));

    const RatFunc& constant() const { return c0_; }
    const std::map<int, RatFunc>& coeffs() const { return coeffs_; }

    bool is_constant() const { return coeffs_.empty(); }
    bool is_zero() const { return coeffs_.empty() && c0_.is_zero(); }

    RatFunc coeff(int id) const;

    // Value with every unknown substituted; ids absent from vals read as 0.
    RatFunc eval(const std::map<int, RatFunc>& vals) const;

    AffineExpr operator-() const;
    AffineExpr& operator+=(const AffineExpr& o);
    AffineExpr& operator-=(const AffineExpr& o);
    AffineExpr& operator*=(const RatFunc& s);

    friend AffineExpr operator+(AffineExpr a, const AffineExpr& b) { a += b; return a; }
    friend AffineExpr operator-(AffineExpr a, const AffineExpr& b) { a -= b; return a; }
    friend AffineExpr operator*(const RatFunc& s, AffineExpr a) { a *= s; return a; }

    bool operator==(const AffineExpr& o) const = default;
    std::strong_ordering operator<=>(const AffineExpr& o) const = default;

    std::string str() const;

private:
    RatFunc c0_;
    std::map<int, RatFunc> coeffs_;
};

}  // namespace qmov

#endif
