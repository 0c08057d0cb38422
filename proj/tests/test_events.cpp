#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qmov/events.hpp"

using namespace qmov;

namespace {

// A random event that can sit on top of a width w still; keeps widths in
// a workable range.
FramedEvent random_event(std::mt19937_64& rng, int w) {
    std::vector<FramedEvent> options;
    if (w <= 4)
        for (int m = 0; m <= w; ++m) options.push_back(FramedEvent::framed(m, EventKind::Cup, w - m));
    for (int m = 0; m + 2 <= w; ++m) {
        options.push_back(FramedEvent::framed(m, EventKind::Cap, w - m - 2));
        options.push_back(FramedEvent::framed(m, EventKind::NE, w - m - 2));
        options.push_back(FramedEvent::framed(m, EventKind::NW, w - m - 2));
    }
    options.push_back(FramedEvent::ident(w));
    std::uniform_int_distribution<size_t> pick(0, options.size() - 1);
    return options[pick(rng)];
}

Still random_still(std::mt19937_64& rng, int source, int max_len = 6) {
    std::uniform_int_distribution<int> len(0, max_len);
    Still s = Still::empty(source);
    int n = len(rng);
    for (int i = 0; i < n; ++i) s.append(random_event(rng, s.target()));
    return s;
}

}  // namespace

TEST_CASE("event arities") {
    CHECK(event_in(EventKind::Cup) == 0);
    CHECK(event_out(EventKind::Cup) == 2);
    CHECK(event_in(EventKind::Cap) == 2);
    CHECK(event_out(EventKind::Cap) == 0);
    CHECK(event_in(EventKind::NE) == 2);
    CHECK(event_out(EventKind::NW) == 2);
    FramedEvent e = FramedEvent::framed(1, EventKind::Cap, 3);
    CHECK(e.in() == 6);
    CHECK(e.out() == 4);
    CHECK(FramedEvent::ident(5).in() == 5);
    CHECK(FramedEvent::ident(0).out() == 0);
}

TEST_CASE("word construction checks continuity") {
    Still s;
    s.append(FramedEvent::framed(0, EventKind::Cup, 0));
    s.append(FramedEvent::framed(0, EventKind::NE, 0));
    s.append(FramedEvent::framed(0, EventKind::Cap, 0));
    CHECK(s.source() == 0);
    CHECK(s.target() == 0);
    CHECK(s.size() == 3);
    CHECK_THROWS(Still({FramedEvent::framed(0, EventKind::Cup, 0), FramedEvent::framed(1, EventKind::Cap, 1)}));
}

TEST_CASE("empty stills carry their arity") {
    Still a = Still::empty(2);
    Still b = Still::empty(3);
    CHECK(a.source() == 2);
    CHECK(a.target() == 2);
    CHECK(a != b);
    CHECK(a == Still::empty(2));
    // An identity letter is a word of length one, not the empty word.
    Still c = Still::single(FramedEvent::ident(2));
    CHECK(c.source() == 2);
    CHECK(!(a == c));
    CHECK(a.str() == "1_2");
    CHECK(c.str() == "1_2");
}

TEST_CASE("slice keeps arities at the cut height") {
    Still s({FramedEvent::framed(0, EventKind::Cup, 0), FramedEvent::framed(0, EventKind::Cup, 2)});
    CHECK(s.slice(0, 1) == Still::single(FramedEvent::framed(0, EventKind::Cup, 0)));
    CHECK(s.slice(1, 1) == Still::empty(2));
    CHECK(s.slice(2, 2) == Still::empty(4));
    CHECK(s.slice(0, 2) == s);
}

TEST_CASE("composition and framing") {
    std::mt19937_64 rng(20240821);
    for (int i = 0; i < 400; ++i) {
        std::uniform_int_distribution<int> src(0, 4);
        Still s = random_still(rng, src(rng));
        Still t = random_still(rng, s.target());
        Still u = random_still(rng, t.target());
        CHECK(compose(compose(s, t), u) == compose(s, compose(t, u)));
        CHECK(compose(Still::empty(s.source()), s) == s);
        CHECK(compose(s, Still::empty(s.target())) == s);
        std::uniform_int_distribution<int> f(0, 2);
        int m = f(rng), n = f(rng);
        CHECK(frame(m, compose(s, t), n) == compose(frame(m, s, n), frame(m, t, n)));
        CHECK(frame(0, s, 0) == s);
        int m2 = f(rng), n2 = f(rng);
        CHECK(frame(m2, frame(m, s, n), n2) == frame(m2 + m, s, n + n2));
    }
    CHECK_THROWS(compose(Still::empty(1), Still::empty(2)));
}

TEST_CASE("mirror and flip are commuting involutions") {
    std::mt19937_64 rng(20240822);
    for (int i = 0; i < 400; ++i) {
        std::uniform_int_distribution<int> src(0, 4);
        Still s = random_still(rng, src(rng));
        CHECK(mirror(mirror(s)) == s);
        CHECK(flip(flip(s)) == s);
        CHECK(mirror(flip(s)) == flip(mirror(s)));
        CHECK(mirror(s).source() == s.source());
        CHECK(flip(s).source() == s.target());
        CHECK(flip(s).target() == s.source());
        Still t = random_still(rng, s.target());
        CHECK(mirror(compose(s, t)) == compose(mirror(s), mirror(t)));
        // Flip reverses the stacking order.
        CHECK(flip(compose(s, t)) == compose(flip(t), flip(s)));
    }
}

TEST_CASE("printing") {
    Still s({FramedEvent::framed(1, EventKind::NE, 0), FramedEvent::ident(3),
             FramedEvent::framed(0, EventKind::Cap, 1)});
    CHECK(s.str() == "[1,NE,0]1_3[0,Cap,1]");
    CHECK(Still::empty(0).str() == "1_0");
}
