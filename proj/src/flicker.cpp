#include "qmov/flicker.hpp"

#include <stdexcept>

namespace qmov {

namespace {

Still realized(const Still& side, int m, int n, Realize r) {
    if (side.is_empty_word() && r == Realize::Event)
        return Still::single(FramedEvent::ident(m + side.source() + n));
    return frame(m, side, n);
}

}  // namespace

Flicker::Flicker(Transition et_, int m_, int n_, Still below_, Still above_,
                 Realize rsrc_, Realize rtgt_)
    : et(std::move(et_)),
      m(m_),
      n(n_),
      below(std::move(below_)),
      above(std::move(above_)),
      rsrc(rsrc_),
      rtgt(rtgt_) {
    if (m < 0 || n < 0) throw std::invalid_argument("Flicker: negative framing");
    if (below.target() != m + et.in() + n)
        throw std::invalid_argument("Flicker: context below does not meet " +
                                    et.name);
    if (above.source() != m + et.out() + n)
        throw std::invalid_argument("Flicker: context above does not meet " +
                                    et.name);
    if (rsrc == Realize::Event && !et.src.is_empty_word())
        throw std::invalid_argument("Flicker: source side is not an identity");
    if (rtgt == Realize::Event && !et.tgt.is_empty_word())
        throw std::invalid_argument("Flicker: target side is not an identity");
}

Still Flicker::middle_src() const { return realized(et.src, m, n, rsrc); }
Still Flicker::middle_tgt() const { return realized(et.tgt, m, n, rtgt); }

Still Flicker::source() const {
    return compose(compose(below, middle_src()), above);
}
Still Flicker::target() const {
    return compose(compose(below, middle_tgt()), above);
}

bool Flicker::operator==(const Flicker& o) const {
    return et == o.et && m == o.m && n == o.n && below == o.below &&
           above == o.above && rsrc == o.rsrc && rtgt == o.rtgt;
}

Flicker reverse(const Flicker& f) {
    return Flicker(sym_apply(Sym{true, false, false}, f.et), f.m, f.n, f.below,
                   f.above, f.rtgt, f.rsrc);
}

Flicker flip(const Flicker& f) {
    return Flicker(sym_apply(Sym{false, true, false}, f.et), f.m, f.n,
                   flip(f.above), flip(f.below), f.rsrc, f.rtgt);
}

Flicker mirror(const Flicker& f) {
    return Flicker(sym_apply(Sym{false, false, true}, f.et), f.m, f.n,
                   mirror(f.below), mirror(f.above), f.rsrc, f.rtgt);
}

Flicker frame(int m, const Flicker& f, int n) {
    return Flicker(f.et, m + f.m, f.n + n, frame(m, f.below, n),
                   frame(m, f.above, n), f.rsrc, f.rtgt);
}

Flicker sandwich(const Still& v, const Flicker& f, const Still& w) {
    return Flicker(f.et, f.m, f.n, compose(v, f.below), compose(f.above, w),
                   f.rsrc, f.rtgt);
}

Movie& Movie::append(Flicker f) {
    if (!(f.source() == final_still()))
        throw std::invalid_argument(
            "Movie: flicker does not start at the current still (" +
            f.source().str() + " vs " + final_still().str() + ")");
    flickers_.push_back(std::move(f));
    return *this;
}

Still Movie::final_still() const {
    return flickers_.empty() ? initial_ : flickers_.back().target();
}

std::vector<Still> Movie::stills() const {
    std::vector<Still> out;
    out.reserve(flickers_.size() + 1);
    out.push_back(initial_);
    for (const Flicker& f : flickers_) out.push_back(f.target());
    return out;
}

bool Movie::compact() const {
    Still last = final_still();
    return initial_.is_empty_word() && initial_.source() == 0 &&
           last.is_empty_word() && last.source() == 0;
}

bool Movie::operator==(const Movie& o) const {
    return initial_ == o.initial_ && flickers_ == o.flickers_;
}

Movie reverse(const Movie& m) {
    Movie r(m.final_still());
    for (auto it = m.flickers().rbegin(); it != m.flickers().rend(); ++it)
        r.append(reverse(*it));
    return r;
}

Movie flip(const Movie& m) {
    Movie r(flip(m.initial()));
    for (const Flicker& f : m.flickers()) r.append(flip(f));
    return r;
}

Movie mirror(const Movie& m) {
    Movie r(mirror(m.initial()));
    for (const Flicker& f : m.flickers()) r.append(mirror(f));
    return r;
}

Movie frame(int mm, const Movie& m, int nn) {
    Movie r(frame(mm, m.initial(), nn));
    for (const Flicker& f : m.flickers()) r.append(frame(mm, f, nn));
    return r;
}

Movie sandwich(const Still& v, const Movie& m, const Still& w) {
    Movie r(compose(compose(v, m.initial()), w));
    for (const Flicker& f : m.flickers()) r.append(sandwich(v, f, w));
    return r;
}

Movie concat(const Movie& m, const Movie& n) {
    if (!(m.final_still() == n.initial()))
        throw std::invalid_argument("concat: movies do not meet");
    Movie r = m;
    for (const Flicker& f : n.flickers()) r.append(f);
    return r;
}

}  // namespace qmov
