#ifndef QMOV_FLICKER_HPP
#define QMOV_FLICKER_HPP

#include <vector>

#include "qmov/transitions.hpp"

namespace qmov {

// How a side of a transition whose still is an empty word shows up in the
// surrounding still: as nothing at all, or as an explicit identity letter.
enum class Realize { Empty, Event };

// One frame-to-frame change of a movie: an elementary transition with m
// and n idle strands beside it, a context still below and one above.  The
// stills before and after the change share both context parts.
struct Flicker {
    Transition et;
    int m = 0, n = 0;
    Still below, above;
    Realize rsrc = Realize::Empty, rtgt = Realize::Empty;

    Flicker() = default;
    Flicker(Transition et, int m, int n, Still below, Still above,
            Realize rsrc = Realize::Empty, Realize rtgt = Realize::Empty);

    // The changed span, with idle strands and any realization letter.
    Still middle_src() const;
    Still middle_tgt() const;

    Still source() const;  // below, then middle_src, then above
    Still target() const;

    bool operator==(const Flicker& o) const;
};

Flicker reverse(const Flicker& f);  // target and source change places
Flicker flip(const Flicker& f);    // everything upside down
Flicker mirror(const Flicker& f);  // every crossing switched
Flicker frame(int m, const Flicker& f, int n);
// v below and w above every still of the flicker.
Flicker sandwich(const Still& v, const Flicker& f, const Still& w);

// A movie: a start still and a run of flickers, each starting exactly at
// the still the previous one produced.
class Movie {
public:
    Movie() : initial_(Still::empty(0)) {}
    explicit Movie(Still initial) : initial_(std::move(initial)) {}

    Movie& append(Flicker f);  // f.source() must equal final_still()

    const Still& initial() const { return initial_; }
    Still final_still() const;
    size_t size() const { return flickers_.size(); }
    const std::vector<Flicker>& flickers() const { return flickers_; }
    const Flicker& operator[](size_t i) const { return flickers_[i]; }

    // All stills, initial first: size() + 1 of them.
    std::vector<Still> stills() const;

    int source() const { return initial_.source(); }  // strand counts shared
    int target() const { return initial_.target(); }  // by every still

    // Starts and ends with a featureless empty frame.
    bool compact() const;

    bool operator==(const Movie& o) const;

private:
    Still initial_;
    std::vector<Flicker> flickers_;
};

Movie reverse(const Movie& m);  // time runs backward
Movie flip(const Movie& m);
Movie mirror(const Movie& m);
Movie frame(int mm, const Movie& m, int nn);
Movie sandwich(const Still& v, const Movie& m, const Still& w);
// N after M; M must end where N starts.
Movie concat(const Movie& m, const Movie& n);

}  // namespace qmov

#endif
