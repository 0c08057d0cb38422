#include "qmov/solve.hpp"

#include <algorithm>
#include <sstream>

namespace qmov {

AffineExpr AffineExpr::var(int id, RatFunc coeff) {
    AffineExpr e;
    if (!coeff.is_zero()) e.coeffs_[id] = std::move(coeff);
    return e;
}

RatFunc AffineExpr::coeff(int id) const {
    auto it = coeffs_.find(id);
    return it == coeffs_.end() ? RatFunc() : it->second;
}

RatFunc AffineExpr::eval(const std::map<int, RatFunc>& vals) const {
    RatFunc r = c0_;
    for (const auto& [id, c] : coeffs_) {
        auto it = vals.find(id);
        if (it != vals.end()) r += c * it->second;
    }
    return r;
}

AffineExpr AffineExpr::operator-() const {
    AffineExpr r;
    r.c0_ = -c0_;
    for (const auto& [id, c] : coeffs_) r.coeffs_[id] = -c;
    return r;
}

AffineExpr& AffineExpr::operator+=(const AffineExpr& o) {
    c0_ += o.c0_;
    for (const auto& [id, c] : o.coeffs_) {
        auto it = coeffs_.find(id);
        if (it == coeffs_.end()) {
            coeffs_[id] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    return *this;
}

AffineExpr& AffineExpr::operator-=(const AffineExpr& o) {
    *this += -o;
    return *this;
}

AffineExpr& AffineExpr::operator*=(const RatFunc& s) {
    if (s.is_zero()) {
        *this = AffineExpr();
        return *this;
    }
    c0_ *= s;
    for (auto& [id, c] : coeffs_) c *= s;
    return *this;
}

std::string AffineExpr::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [id, c] : coeffs_) {
        if (!first) out << " + ";
        out << "(" << c.str() << ")*x" << id;
        first = false;
    }
    if (!c0_.is_zero() || first) {
        if (!first) out << " + ";
        out << c0_.str();
    }
    return out.str();
}

namespace {

// One equation as integer Laurent data: coeff[i]*x_i + c0 = 0, scaled so
// the entries have no common Laurent factor.
struct IntRow {
    std::vector<LaurentPoly> coeff;
    LaurentPoly c0;
    int lead = -1;  // lowest unknown with nonzero coefficient, -1 if none

    void relead(int nvars) {
        lead = -1;
        for (int i = 0; i < nvars; ++i)
            if (!coeff[i].is_zero()) { lead = i; break; }
    }

    void make_primitive(int nvars) {
        LaurentPoly g;
        bool any = false;
        auto fold = [&](const LaurentPoly& p) {
            if (p.is_zero()) return;
            g = any ? poly_gcd(g, p) : p.primitive();
            any = true;
        };
        for (const auto& p : coeff) fold(p);
        fold(c0);
        if (!any) return;
        long e = coeff[lead >= 0 ? lead : 0].is_zero() ? c0.min_exp() : coeff[lead].min_exp();
        LaurentPoly::Coeff content = 0;
        auto fold2 = [&](const LaurentPoly& p) {
            if (p.is_zero()) return;
            e = std::min(e, p.min_exp());
            LaurentPoly::Coeff c = p.content();
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
        };
        for (const auto& p : coeff) fold2(p);
        fold2(c0);
        g.scale(content);
        g.shift(e);
        // Normalize the sign so the leading entry has positive leading
        // coefficient.
        const LaurentPoly& ref = lead >= 0 ? coeff[lead] : c0;
        if (ref.terms().rbegin()->second < 0) g.scale(-1);
        if (g.is_one()) return;
        for (auto& p : coeff) {
            if (p.is_zero()) continue;
            LaurentPoly t;
            p.divide_exact(g, &t);
            p = std::move(t);
        }
        if (!c0.is_zero()) {
            LaurentPoly t;
            c0.divide_exact(g, &t);
            c0 = std::move(t);
        }
    }
};

IntRow to_int_row(const AffineExpr& e, int nvars) {
    IntRow r;
    r.coeff.assign(nvars, LaurentPoly());
    LaurentPoly d(1);
    for (const auto& [id, c] : e.coeffs()) d = d * c.den();
    d = d * e.constant().den();
    for (const auto& [id, c] : e.coeffs()) {
        LaurentPoly t;
        d.divide_exact(c.den(), &t);
        r.coeff.at(id) = c.num() * t;
    }
    {
        LaurentPoly t;
        d.divide_exact(e.constant().den(), &t);
        r.c0 = e.constant().num() * t;
    }
    r.relead(nvars);
    r.make_primitive(nvars);
    return r;
}

}  // namespace

bool SolutionSpace::contains(const std::vector<RatFunc>& vals) const {
    if (!consistent()) return false;
    for (const auto& row : rows_) {
        RatFunc acc(row.c0);
        for (size_t i = 0; i < row.coeff.size(); ++i)
            if (!row.coeff[i].is_zero()) acc += RatFunc(row.coeff[i]) * vals.at(i);
        if (!acc.is_zero()) return false;
    }
    return true;
}

SolutionSpace solve_affine(const std::vector<AffineExpr>& equations, int nvars) {
    // Forward elimination into one pivot row per leading unknown.
    std::vector<IntRow> pivot(nvars);
    std::vector<bool> have(nvars, false);
    bool inconsistent = false;
    for (const AffineExpr& e : equations) {
        IntRow row = to_int_row(e, nvars);
        while (row.lead >= 0 && have[row.lead]) {
            const IntRow& p = pivot[row.lead];
            const LaurentPoly a = p.coeff[row.lead];
            const LaurentPoly b = row.coeff[row.lead];
            for (int i = row.lead; i < nvars; ++i)
                row.coeff[i] = row.coeff[i] * a - p.coeff[i] * b;
            row.c0 = row.c0 * a - p.c0 * b;
            row.relead(nvars);
            row.make_primitive(nvars);
        }
        if (row.lead >= 0) {
            pivot[row.lead] = std::move(row);
            have[row.lead] = true;
        } else if (!row.c0.is_zero()) {
            inconsistent = true;
            break;
        }
    }

    SolutionSpace s;
    if (inconsistent) {
        s.rank = 0;
        for (bool h : have) s.rank += h;
        s.affine_rank = -1;
        return s;
    }

    for (int i = 0; i < nvars; ++i) {
        if (have[i]) ++s.rank;
        else s.free_params.push_back(i);
    }
    s.affine_rank = nvars - s.rank;

    // Back substitution; free unknowns parametrize the solution set.
    auto back_solve = [&](const std::vector<RatFunc>& free_vals, bool with_c0) {
        std::vector<RatFunc> x(nvars);
        for (size_t k = 0; k < s.free_params.size(); ++k) x[s.free_params[k]] = free_vals[k];
        for (int i = nvars - 1; i >= 0; --i) {
            if (!have[i]) continue;
            const IntRow& p = pivot[i];
            RatFunc acc = with_c0 ? RatFunc(p.c0) : RatFunc();
            for (int j = i + 1; j < nvars; ++j)
                if (!p.coeff[j].is_zero()) acc += RatFunc(p.coeff[j]) * x[j];
            x[i] = -acc / RatFunc(p.coeff[i]);
        }
        return x;
    };

    std::vector<RatFunc> zeros(s.free_params.size());
    s.particular = back_solve(zeros, true);
    for (size_t k = 0; k < s.free_params.size(); ++k) {
        std::vector<RatFunc> e(s.free_params.size());
        e[k] = RatFunc(1);
        s.homogeneous_basis.push_back(back_solve(e, false));
    }

    for (int i = 0; i < nvars; ++i)
        if (have[i]) {
            SolutionSpace::Row r;
            r.pivot = i;
            r.coeff = pivot[i].coeff;
            r.c0 = pivot[i].c0;
            s.rows_.push_back(std::move(r));
        }
    return s;
}

}  // namespace qmov
