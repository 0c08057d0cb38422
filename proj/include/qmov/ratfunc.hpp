#ifndef QMOV_RATFUNC_HPP
#define QMOV_RATFUNC_HPP

#include <compare>
#include <string>

#include "qmov/laurent.hpp"

namespace qmov {

// Rational function num/den over the Laurent polynomials in q, kept in a
// canonical reduced form so that operator== decides equality in the function
// field:
//   - den is an ordinary polynomial (lowest exponent 0) with positive
//     leading coefficient,
//   - the polynomial parts of num and den are coprime, as are their integer
//     contents.
// All q powers, signs and leftover integer factors live in num.
class RatFunc {
public:
    RatFunc() : num_(0), den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(LaurentPoly p) : num_(std::move(p)), den_(1) {}
    RatFunc(LaurentPoly num, LaurentPoly den);

    static RatFunc q(long exp = 1) { return RatFunc(LaurentPoly::q(exp)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_poly() const { return den_.is_one(); }

    RatFunc operator-() const;
    RatFunc inverse() const;

    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + -b; }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const RatFunc& o) const;

    // "q^-2 + q^2", or "(q^2 + 1)/(q^4 + q^2 + 1)" when the denominator is
    // not 1.
    std::string str() const;

private:
    void reduce();

    LaurentPoly num_, den_;
};

}  // namespace qmov

#endif
