#include "qmov/ratfunc.hpp"

#include <stdexcept>

namespace qmov {

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    if (!den_.is_one()) {
        LaurentPoly g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            LaurentPoly qn, qd;
            num_.divide_exact(g, &qn);
            den_.divide_exact(g, &qd);
            num_ = std::move(qn);
            den_ = std::move(qd);
        }
        num_.shift(-den_.min_exp());
        den_.shift(-den_.min_exp());
        LaurentPoly::Coeff cn = num_.content();
        LaurentPoly::Coeff cd = den_.content();
        LaurentPoly::Coeff g2;
        mpz_gcd(g2.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
        if (g2 > 1) {
            LaurentPoly dn, dd;
            num_.divide_exact(LaurentPoly(g2), &dn);
            den_.divide_exact(LaurentPoly(g2), &dd);
            num_ = std::move(dn);
            den_ = std::move(dd);
        }
        if (den_.terms().rbegin()->second < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    RatFunc r;
    r.num_ = den_;
    r.den_ = num_;
    long e = r.den_.min_exp();
    r.num_.shift(-e);
    r.den_.shift(-e);
    if (r.den_.terms().rbegin()->second < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (a.den_.is_one() && b.den_.is_one()) {
        RatFunc r;
        r.num_ = a.num_ * b.num_;
        return r;
    }
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

std::strong_ordering RatFunc::operator<=>(const RatFunc& o) const {
    if (auto c = num_ <=> o.num_; c != 0) return c;
    return den_ <=> o.den_;
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace qmov
