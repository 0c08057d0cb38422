#ifndef QMOV_TRANSITIONS_HPP
#define QMOV_TRANSITIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "qmov/events.hpp"

namespace qmov {

// An elementary transition rewrites one still into another.  The numeric
// type groups transitions by what happens geometrically:
//   1 kink appears or disappears          2 two opposite crossings cancel
//   3 a strand slides across a crossing   4 a crossing passes a turnback
//   5 a zigzag straightens                6 a circle is born or dies
//   7 a saddle joins or splits strands    0 an identity letter is inserted
//   8 two far-apart events trade heights
// Types 0..7 form a finite catalog; type 8 is an infinite family built by
// et8.
struct Transition {
    std::string name;
    int ttype = 0;
    Still src, tgt;

    int in() const { return src.source(); }
    int out() const { return src.target(); }

    bool operator==(const Transition& o) const {
        return ttype == o.ttype && src == o.src && tgt == o.tgt;
    }
};

// The 56 named transitions of types 0..7, in catalog order: types 1..7
// first, identity insertions last.
const std::vector<Transition>& catalog();

// Lookup by name ("ET3bmtR") or by the exact still pair; null if absent.
const Transition* catalog_find(const std::string& name);
const Transition* catalog_find(const Still& src, const Still& tgt);

// Type 8 transitions.  Both orders of two events a and b with n strands
// between them: in the L form a happens first, in the U form b does.
// lower=true builds [L => U], lower=false builds [U => L].
Transition et8(EventKind a, EventKind b, int n, bool lower);

// The symmetry group acting on transitions: R swaps source and target, t
// turns both stills upside down, f switches every crossing.  The three
// commute and square to the identity.
struct Sym {
    bool R = false, t = false, f = false;

    static const std::vector<Sym>& all();  // the 8 elements, I first

    std::string str() const;  // "I", "R", "t", "tR", "f", "fR", "ft", "ftR"
};

// Applies a symmetry; the result of acting on a catalog member is again a
// catalog member (with its proper name), and type 8 stays type 8.
Transition sym_apply(const Sym& g, const Transition& e);

// Every way to read the still pair (u, v) as a framed transition
// m*E*n: matches the finite catalog and the type 8 patterns.  Identity
// letters are matched literally.
struct FramedTransition {
    Transition et;
    int m = 0, n = 0;
};
std::vector<FramedTransition> identify(const Still& u, const Still& v);

}  // namespace qmov

#endif
