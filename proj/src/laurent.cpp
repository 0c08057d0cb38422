#include "qmov/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qmov {

LaurentPoly LaurentPoly::monomial(Coeff c, long exp) {
    LaurentPoly p;
    if (c != 0) p.terms_[exp] = std::move(c);
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

LaurentPoly::Coeff LaurentPoly::coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Coeff(0) : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = -c;
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            auto& c = r.terms_[ea + eb];
            c += ca * cb;
        }
    std::erase_if(r.terms_, [](const auto& t) { return t.second == 0; });
    return r;
}

std::strong_ordering LaurentPoly::operator<=>(const LaurentPoly& o) const {
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    for (; i != terms_.end() && j != o.terms_.end(); ++i, ++j) {
        if (i->first != j->first) return i->first <=> j->first;
        int c = cmp(i->second, j->second);
        if (c != 0) return c <=> 0;
    }
    if (i != terms_.end()) return std::strong_ordering::greater;
    if (j != o.terms_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

LaurentPoly& LaurentPoly::shift(long exp) {
    if (exp == 0 || terms_.empty()) return *this;
    Terms moved;
    for (auto& [e, c] : terms_) moved.emplace(e + exp, std::move(c));
    terms_ = std::move(moved);
    return *this;
}

LaurentPoly& LaurentPoly::scale(const Coeff& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& [e, v] : terms_) v *= c;
    }
    return *this;
}

LaurentPoly::Coeff LaurentPoly::content() const {
    Coeff g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

LaurentPoly LaurentPoly::primitive() const {
    if (is_zero()) return *this;
    Coeff g = content();
    if (terms_.rbegin()->second < 0) g = -g;
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e - min_exp()] = c / g;
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

bool LaurentPoly::divide_exact(const LaurentPoly& o, LaurentPoly* quot) const {
    if (o.is_zero()) return false;
    if (is_zero()) {
        *quot = LaurentPoly();
        return true;
    }
    // q powers are units; divide the ordinary polynomial parts and put the
    // exponent offset back at the end.
    long offset = min_exp() - o.min_exp();
    LaurentPoly rem = *this;
    rem.shift(-min_exp());
    LaurentPoly div = o;
    div.shift(-o.min_exp());
    const long eo = div.max_exp();
    const Coeff co = div.terms_.rbegin()->second;
    LaurentPoly q;
    while (!rem.is_zero() && rem.max_exp() >= eo) {
        const auto& [er, cr] = *rem.terms_.rbegin();
        if (!mpz_divisible_p(cr.get_mpz_t(), co.get_mpz_t())) return false;
        LaurentPoly t = monomial(cr / co, er - eo);
        q += t;
        rem -= t * div;
    }
    if (!rem.is_zero()) return false;
    q.shift(offset);
    *quot = std::move(q);
    return true;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Coeff a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || e == 0) out << a.get_str();
        if (e == 1) out << "q";
        else if (e != 0) out << "q^" << e;
    }
    return out.str();
}

namespace {

// lead(b)^(deg a - deg b + 1) * a = k*b + r with deg r < deg b; returns r.
// Both arguments must be ordinary polynomials (min_exp 0) with a nonzero b.
LaurentPoly pseudo_rem(LaurentPoly a, const LaurentPoly& b) {
    long db = b.max_exp();
    const LaurentPoly::Coeff lb = b.terms().rbegin()->second;
    while (!a.is_zero() && a.max_exp() >= db) {
        long da = a.max_exp();
        LaurentPoly::Coeff la = a.terms().rbegin()->second;
        a.scale(lb);
        a -= LaurentPoly::monomial(la, da - db) * b;
    }
    return a;
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly x = a.primitive();
    LaurentPoly y = b.primitive();
    if (x.is_zero()) return y;
    while (!y.is_zero()) {
        if (x.max_exp() < y.max_exp()) std::swap(x, y);
        if (y.max_exp() == 0) return LaurentPoly(1);
        LaurentPoly r = pseudo_rem(x, y).primitive();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

}  // namespace qmov
