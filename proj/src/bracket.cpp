#include "qmov/bracket.hpp"

#include <stdexcept>

namespace qmov {

namespace {

RatFunc rq(long e) { return RatFunc::q(e); }

Matrix<RatFunc> make_gen(EventKind e) {
    switch (e) {
        case EventKind::Cup: {
            Matrix<RatFunc> m(4, 1);
            m.at(1, 0) = -rq(1);
            m.at(2, 0) = rq(-1);
            return m;
        }
        case EventKind::Cap: {
            Matrix<RatFunc> m(1, 4);
            m.at(0, 1) = rq(1);
            m.at(0, 2) = -rq(-1);
            return m;
        }
        case EventKind::NE: {
            Matrix<RatFunc> m(4, 4);
            m.at(0, 0) = rq(1);
            m.at(3, 3) = rq(1);
            m.at(2, 1) = rq(-1);
            m.at(1, 2) = rq(-1);
            m.at(2, 2) = rq(1) - rq(-3);
            return m;
        }
        case EventKind::NW: {
            Matrix<RatFunc> m(4, 4);
            m.at(0, 0) = rq(-1);
            m.at(3, 3) = rq(-1);
            m.at(1, 2) = rq(1);
            m.at(2, 1) = rq(1);
            m.at(1, 1) = rq(-1) - rq(3);
            return m;
        }
    }
    throw std::logic_error("bracket_gen: bad event");
}

}  // namespace

const Matrix<RatFunc>& bracket_gen(EventKind e) {
    static const Matrix<RatFunc> cup = make_gen(EventKind::Cup);
    static const Matrix<RatFunc> cap = make_gen(EventKind::Cap);
    static const Matrix<RatFunc> ne = make_gen(EventKind::NE);
    static const Matrix<RatFunc> nw = make_gen(EventKind::NW);
    switch (e) {
        case EventKind::Cup: return cup;
        case EventKind::Cap: return cap;
        case EventKind::NE: return ne;
        case EventKind::NW: return nw;
    }
    throw std::logic_error("bracket_gen: bad event");
}

RatFunc loop_value() { return -RatFunc::q(2) - RatFunc::q(-2); }

Matrix<RatFunc> bracket(const FramedEvent& e) {
    if (e.identity) return Matrix<RatFunc>::identity(size_t(1) << e.k);
    return tensor(tensor(Matrix<RatFunc>::identity(size_t(1) << e.m), bracket_gen(e.kind)),
                  Matrix<RatFunc>::identity(size_t(1) << e.n));
}

Matrix<RatFunc> bracket(const Still& s) {
    Matrix<RatFunc> m = Matrix<RatFunc>::identity(size_t(1) << s.source());
    for (const auto& e : s.events()) m = bracket(e) * m;
    return m;
}

std::vector<RatFunc> apply_event(const FramedEvent& e, const std::vector<RatFunc>& v) {
    if (v.size() != size_t(1) << e.in()) throw std::invalid_argument("apply_event: size mismatch");
    if (e.identity) return v;
    const Matrix<RatFunc>& g = bracket_gen(e.kind);
    const size_t right = size_t(1) << e.n;
    const size_t left = size_t(1) << e.m;
    std::vector<RatFunc> w(size_t(1) << e.out());
    for (size_t gr = 0; gr < g.rows(); ++gr)
        for (size_t gc = 0; gc < g.cols(); ++gc) {
            const RatFunc& x = g.at(gr, gc);
            if (x.is_zero()) continue;
            for (size_t l = 0; l < left; ++l)
                for (size_t r = 0; r < right; ++r) {
                    const RatFunc& in = v[(l * g.cols() + gc) * right + r];
                    if (in.is_zero()) continue;
                    w[(l * g.rows() + gr) * right + r] += x * in;
                }
        }
    return w;
}

std::vector<RatFunc> apply_still(const Still& s, std::vector<RatFunc> v) {
    for (const auto& e : s.events()) v = apply_event(e, v);
    return v;
}

}  // namespace qmov
