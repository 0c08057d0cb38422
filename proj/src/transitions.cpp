#include "qmov/transitions.hpp"

#include <stdexcept>

namespace qmov {

namespace {

using EK = EventKind;

FramedEvent fe(int m, EK k, int n) { return FramedEvent::framed(m, k, n); }

Still w(std::vector<FramedEvent> evs) { return Still(std::move(evs)); }

Transition make(std::string name, int ttype, Still src, Still tgt) {
    return Transition{std::move(name), ttype, std::move(src), std::move(tgt)};
}

// Appends E and its reverse (stills swapped).  The reverse of a plain
// flavor I is named R, otherwise R is appended: ET1I/ET1R, ET1t/ET1tR.
void with_reverse(std::vector<Transition>& out, const std::string& name,
                  int ttype, const Still& src, const Still& tgt) {
    out.push_back(make(name, ttype, src, tgt));
    std::string rname = name;
    if (rname.back() == 'I')
        rname.back() = 'R';
    else
        rname += 'R';
    out.push_back(make(rname, ttype, tgt, src));
}

std::vector<Transition> build_catalog() {
    std::vector<Transition> c;

    // Type 1: a kink next to a cup or cap disappears (R adds it back).
    // The four unreversed flavors are the orbit of ET1I under t and f.
    with_reverse(c, "ET1I", 1, w({fe(0, EK::Cup, 0), fe(0, EK::NE, 0)}),
                 Still::single(fe(0, EK::Cup, 0)));
    with_reverse(c, "ET1t", 1, w({fe(0, EK::NW, 0), fe(0, EK::Cap, 0)}),
                 Still::single(fe(0, EK::Cap, 0)));
    with_reverse(c, "ET1f", 1, w({fe(0, EK::Cup, 0), fe(0, EK::NW, 0)}),
                 Still::single(fe(0, EK::Cup, 0)));
    with_reverse(c, "ET1ft", 1, w({fe(0, EK::NE, 0), fe(0, EK::Cap, 0)}),
                 Still::single(fe(0, EK::Cap, 0)));

    // Type 2: two opposite crossings on the same pair cancel.
    with_reverse(c, "ET2I", 2, w({fe(0, EK::NE, 0), fe(0, EK::NW, 0)}),
                 Still::empty(2));
    with_reverse(c, "ET2f", 2, w({fe(0, EK::NW, 0), fe(0, EK::NE, 0)}),
                 Still::empty(2));

    // Type 3: the middle of three strands slides across the crossing of the
    // outer two.  Stems name the top-to-bottom sheet order.
    with_reverse(c, "ET3bmt", 3,
                 w({fe(0, EK::NE, 1), fe(1, EK::NE, 0), fe(0, EK::NE, 1)}),
                 w({fe(1, EK::NE, 0), fe(0, EK::NE, 1), fe(1, EK::NE, 0)}));
    with_reverse(c, "ET3btm", 3,
                 w({fe(0, EK::NW, 1), fe(1, EK::NE, 0), fe(0, EK::NE, 1)}),
                 w({fe(1, EK::NE, 0), fe(0, EK::NE, 1), fe(1, EK::NW, 0)}));
    with_reverse(c, "ET3mbt", 3,
                 w({fe(0, EK::NE, 1), fe(1, EK::NE, 0), fe(0, EK::NW, 1)}),
                 w({fe(1, EK::NW, 0), fe(0, EK::NE, 1), fe(1, EK::NE, 0)}));
    with_reverse(c, "ET3mtb", 3,
                 w({fe(0, EK::NW, 1), fe(1, EK::NW, 0), fe(0, EK::NE, 1)}),
                 w({fe(1, EK::NE, 0), fe(0, EK::NW, 1), fe(1, EK::NW, 0)}));
    with_reverse(c, "ET3tbm", 3,
                 w({fe(0, EK::NE, 1), fe(1, EK::NW, 0), fe(0, EK::NW, 1)}),
                 w({fe(1, EK::NW, 0), fe(0, EK::NW, 1), fe(1, EK::NE, 0)}));
    with_reverse(c, "ET3tmb", 3,
                 w({fe(0, EK::NW, 1), fe(1, EK::NW, 0), fe(0, EK::NW, 1)}),
                 w({fe(1, EK::NW, 0), fe(0, EK::NW, 1), fe(1, EK::NW, 0)}));

    // Type 4: a crossing passes a turnback; the turnback switches sides.
    with_reverse(c, "ET4I", 4, w({fe(1, EK::Cup, 0), fe(0, EK::NE, 1)}),
                 w({fe(0, EK::Cup, 1), fe(1, EK::NW, 0)}));
    with_reverse(c, "ET4t", 4, w({fe(0, EK::NW, 1), fe(1, EK::Cap, 0)}),
                 w({fe(1, EK::NE, 0), fe(0, EK::Cap, 1)}));
    with_reverse(c, "ET4f", 4, w({fe(1, EK::Cup, 0), fe(0, EK::NW, 1)}),
                 w({fe(0, EK::Cup, 1), fe(1, EK::NE, 0)}));
    with_reverse(c, "ET4ft", 4, w({fe(0, EK::NE, 1), fe(1, EK::Cap, 0)}),
                 w({fe(1, EK::NW, 0), fe(0, EK::Cap, 1)}));

    // Type 5: a zigzag straightens into a single strand.
    with_reverse(c, "ET5I", 5, w({fe(1, EK::Cup, 0), fe(0, EK::Cap, 1)}),
                 Still::empty(1));
    with_reverse(c, "ET5t", 5, w({fe(0, EK::Cup, 1), fe(1, EK::Cap, 0)}),
                 Still::empty(1));

    // Type 6: a standalone circle dies (R: is born).
    with_reverse(c, "ET6I", 6, w({fe(0, EK::Cup, 0), fe(0, EK::Cap, 0)}),
                 Still::empty(0));

    // Type 7: a saddle.  The cap-then-cup pinch smooths to parallel strands.
    with_reverse(c, "ET7I", 7, w({fe(0, EK::Cap, 0), fe(0, EK::Cup, 0)}),
                 Still::empty(2));

    // Type 0: an identity letter appears next to an event, below (l) or
    // above (r).  Pure notation: the underlying surface is unchanged.
    for (EK k : {EK::Cup, EK::Cap, EK::NE, EK::NW}) {
        const Still base = Still::single(fe(0, k, 0));
        const std::string kn = event_name(k);
        with_reverse(c, "ET0" + kn + "l", 0, base,
                     w({FramedEvent::ident(event_in(k)), fe(0, k, 0)}));
        with_reverse(c, "ET0" + kn + "r", 0, base,
                     w({fe(0, k, 0), FramedEvent::ident(event_out(k))}));
    }

    return c;
}

// The two height orders of events a (left) and b (right) with n strands
// between them; a first in the L form, b first in the U form.
Still et8_lword(EK a, EK b, int n) {
    return w({fe(0, a, n + event_in(b)), fe(n + event_out(a), b, 0)});
}
Still et8_uword(EK a, EK b, int n) {
    return w({fe(n + event_in(a), b, 0), fe(0, a, n + event_out(b))});
}

std::string et8_name(EK a, EK b, int n, bool lower) {
    return std::string("ET8") + (lower ? "L" : "U") + std::to_string(n) + "(" +
           event_name(a) + "," + event_name(b) + ")";
}

}  // namespace

const std::vector<Transition>& catalog() {
    static const std::vector<Transition> c = build_catalog();
    return c;
}

const Transition* catalog_find(const std::string& name) {
    for (const Transition& e : catalog())
        if (e.name == name) return &e;
    return nullptr;
}

const Transition* catalog_find(const Still& src, const Still& tgt) {
    for (const Transition& e : catalog())
        if (e.src == src && e.tgt == tgt) return &e;
    return nullptr;
}

Transition et8(EventKind a, EventKind b, int n, bool lower) {
    if (n < 0) throw std::invalid_argument("et8: negative gap");
    Still lw = et8_lword(a, b, n), uw = et8_uword(a, b, n);
    if (lower) return make(et8_name(a, b, n, true), 8, lw, uw);
    return make(et8_name(a, b, n, false), 8, uw, lw);
}

const std::vector<Sym>& Sym::all() {
    static const std::vector<Sym> g = {
        {false, false, false}, {true, false, false},
        {false, true, false},  {true, true, false},
        {false, false, true},  {true, false, true},
        {false, true, true},   {true, true, true},
    };
    return g;
}

std::string Sym::str() const {
    std::string s;
    if (f) s += 'f';
    if (t) s += 't';
    if (R) s += 'R';
    return s.empty() ? "I" : s;
}

Transition sym_apply(const Sym& g, const Transition& e) {
    Still a = e.src, b = e.tgt;
    if (g.t) {
        a = flip(a);
        b = flip(b);
    }
    if (g.f) {
        a = mirror(a);
        b = mirror(b);
    }
    if (g.R) std::swap(a, b);
    if (const Transition* p = catalog_find(a, b)) return *p;
    if (e.ttype == 8) {
        for (const FramedTransition& ft : identify(a, b))
            if (ft.et.ttype == 8 && ft.m == 0 && ft.n == 0) return ft.et;
    }
    return make(g.str() + "." + e.name, e.ttype, a, b);
}

std::vector<FramedTransition> identify(const Still& u, const Still& v) {
    std::vector<FramedTransition> hits;
    for (const Transition& e : catalog()) {
        for (int m = 0; m + e.in() <= u.source(); ++m) {
            int n = u.source() - e.in() - m;
            if (frame(m, e.src, n) == u && frame(m, e.tgt, n) == v)
                hits.push_back({e, m, n});
        }
    }

    // Type 8: two framed events whose strand regions do not overlap.
    if (u.size() == 2 && v.size() == 2 && !u[0].identity && !u[1].identity &&
        !v[0].identity && !v[1].identity) {
        const FramedEvent &e1 = u[0], &e2 = u[1];
        // a left and first: e1 = [M, a, n+in(b)+K], e2 = [M+n+out(a), b, K].
        {
            EK a = e1.kind, b = e2.kind;
            int M = e1.m, K = e2.n;
            int n = e1.n - event_in(b) - K;
            if (n >= 0 && e2.m == M + n + event_out(a) &&
                frame(M, et8_uword(a, b, n), K) == v)
                hits.push_back({et8(a, b, n, true), M, K});
        }
        // b right and first: e1 = [M+n+in(a), b, K], e2 = [M, a, n+out(b)+K].
        {
            EK a = e2.kind, b = e1.kind;
            int M = e2.m, K = e1.n;
            int n = e2.n - event_out(b) - K;
            if (n >= 0 && e1.m == M + n + event_in(a) &&
                frame(M, et8_lword(a, b, n), K) == v)
                hits.push_back({et8(a, b, n, false), M, K});
        }
    }
    return hits;
}

}  // namespace qmov
