#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <set>
#include <string>

#include "doctest.h"
#include "qmov/bracket.hpp"
#include "qmov/transitions.hpp"

using namespace qmov;
using EK = EventKind;

namespace {

RatFunc q(long e) { return RatFunc(LaurentPoly::q(e)); }

const Transition& by_name(const std::string& n) {
    const Transition* p = catalog_find(n);
    REQUIRE(p != nullptr);
    return *p;
}

Sym sym(bool R, bool t, bool f) { return Sym{R, t, f}; }

}  // namespace

TEST_CASE("catalog size and per-type counts") {
    const auto& c = catalog();
    CHECK(c.size() == 56);

    std::map<int, int> per_type;
    for (const auto& e : c) per_type[e.ttype]++;
    const std::map<int, int> expect = {{0, 16}, {1, 8}, {2, 4}, {3, 12},
                                       {4, 8},  {5, 4}, {6, 2}, {7, 2}};
    CHECK(per_type == expect);

    std::set<std::string> names;
    for (const auto& e : c) names.insert(e.name);
    CHECK(names.size() == 56);

    // Types 1..7 come before the identity insertions, in ascending type.
    int last_nonzero = -1;
    size_t i = 0;
    for (; i < c.size() && c[i].ttype != 0; ++i) {
        CHECK(c[i].ttype >= last_nonzero);
        last_nonzero = c[i].ttype;
    }
    for (; i < c.size(); ++i) CHECK(c[i].ttype == 0);
}

TEST_CASE("lookup by name and by still pair") {
    for (const auto& e : catalog()) {
        const Transition* p = catalog_find(e.name);
        REQUIRE(p != nullptr);
        CHECK(*p == e);
        const Transition* s = catalog_find(e.src, e.tgt);
        REQUIRE(s != nullptr);
        CHECK(s->name == e.name);
    }
    CHECK(catalog_find("ET9xyz") == nullptr);
}

TEST_CASE("arities by type and flavor") {
    auto io = [](const std::string& n) {
        const Transition& e = by_name(n);
        return std::pair{e.in(), e.out()};
    };
    for (const char* n : {"ET1I", "ET1R", "ET1f", "ET1fR"})
        CHECK(io(n) == std::pair{0, 2});
    for (const char* n : {"ET1t", "ET1tR", "ET1ft", "ET1ftR"})
        CHECK(io(n) == std::pair{2, 0});
    for (const auto& e : catalog()) {
        if (e.ttype == 2 || e.ttype == 7) {
            CHECK(e.in() == 2);
            CHECK(e.out() == 2);
        }
        if (e.ttype == 3) {
            CHECK(e.in() == 3);
            CHECK(e.out() == 3);
        }
        if (e.ttype == 5) {
            CHECK(e.in() == 1);
            CHECK(e.out() == 1);
        }
        if (e.ttype == 6) {
            CHECK(e.in() == 0);
            CHECK(e.out() == 0);
        }
    }
    for (const char* n : {"ET4I", "ET4R", "ET4f", "ET4fR"})
        CHECK(io(n) == std::pair{1, 3});
    for (const char* n : {"ET4t", "ET4tR", "ET4ft", "ET4ftR"})
        CHECK(io(n) == std::pair{3, 1});
    CHECK(io("ET0Cupl") == std::pair{0, 2});
    CHECK(io("ET0Capr") == std::pair{2, 0});
    CHECK(io("ET0NEl") == std::pair{2, 2});
}

TEST_CASE("identity insertions place the letter on the named side") {
    const Transition& e = by_name("ET0Cupl");
    REQUIRE(e.tgt.size() == 2);
    CHECK(e.tgt[0] == FramedEvent::ident(0));
    CHECK(e.tgt[1] == FramedEvent::framed(0, EK::Cup, 0));

    const Transition& r = by_name("ET0NWr");
    REQUIRE(r.tgt.size() == 2);
    CHECK(r.tgt[0] == FramedEvent::framed(0, EK::NW, 0));
    CHECK(r.tgt[1] == FramedEvent::ident(2));
    CHECK(r.src == Still::single(FramedEvent::framed(0, EK::NW, 0)));
}

TEST_CASE("symmetry group: involutions, commutation, closure") {
    CHECK(Sym::all().size() == 8);
    for (const auto& e : catalog()) {
        for (const Sym& g : Sym::all()) {
            Transition img = sym_apply(g, e);
            // Closure: the image carries a proper catalog name.
            CHECK(catalog_find(img.name) != nullptr);
            CHECK(img.ttype == e.ttype);
            // Each generator squares to the identity.
            Transition back = sym_apply(g, img);
            Sym sq{};  // g twice = I because components are involutions
            CHECK(back == sym_apply(sq, e));
        }
        // t and f commute, and both commute with R.
        Transition tf = sym_apply(sym(false, false, true),
                                  sym_apply(sym(false, true, false), e));
        Transition ft = sym_apply(sym(false, true, false),
                                  sym_apply(sym(false, false, true), e));
        CHECK(tf == ft);
        CHECK(tf == sym_apply(sym(false, true, true), e));
        Transition rt = sym_apply(sym(true, false, false),
                                  sym_apply(sym(false, true, false), e));
        CHECK(rt == sym_apply(sym(true, true, false), e));
    }
}

TEST_CASE("symmetry acts simply transitively on the kink moves") {
    const Transition& base = by_name("ET1I");
    std::set<std::string> images;
    for (const Sym& g : Sym::all()) images.insert(sym_apply(g, base).name);
    CHECK(images == std::set<std::string>{"ET1I", "ET1R", "ET1t", "ET1tR",
                                          "ET1f", "ET1fR", "ET1ft", "ET1ftR"});
}

TEST_CASE("symmetry orbit spot checks") {
    auto img = [](Sym g, const char* n) { return sym_apply(g, by_name(n)).name; };
    Sym T = sym(false, true, false), F = sym(false, false, true);

    CHECK(img(T, "ET2I") == "ET2I");
    CHECK(img(F, "ET2I") == "ET2f");

    CHECK(img(F, "ET3bmt") == "ET3tmb");
    CHECK(img(F, "ET3btm") == "ET3tbm");
    CHECK(img(F, "ET3mbt") == "ET3mtb");
    CHECK(img(T, "ET3tmb") == "ET3bmt");
    CHECK(img(T, "ET3btm") == "ET3mtb");
    CHECK(img(T, "ET3mbt") == "ET3tbm");

    CHECK(img(T, "ET4I") == "ET4t");
    CHECK(img(F, "ET4I") == "ET4f");

    CHECK(img(F, "ET5I") == "ET5I");
    CHECK(img(T, "ET5I") == "ET5t");

    CHECK(img(T, "ET6I") == "ET6I");
    CHECK(img(F, "ET6I") == "ET6I");
    CHECK(img(T, "ET7I") == "ET7I");
    CHECK(img(F, "ET7I") == "ET7I");
}

TEST_CASE("brackets are preserved by types 0, 2, 3, 4, 5") {
    for (const auto& e : catalog()) {
        if (e.ttype == 0 || e.ttype == 2 || e.ttype == 3 || e.ttype == 4 ||
            e.ttype == 5)
            CHECK(bracket(e.src) == bracket(e.tgt));
    }
}

TEST_CASE("kink moves scale the bracket by a cube of -q") {
    auto scales = [](const char* n, const RatFunc& s) {
        const Transition& e = by_name(n);
        return bracket(e.src) == s * bracket(e.tgt);
    };
    RatFunc mq3 = RatFunc(LaurentPoly(-1)) * q(3);
    RatFunc mqm3 = RatFunc(LaurentPoly(-1)) * q(-3);
    CHECK(scales("ET1I", mqm3));
    CHECK(scales("ET1t", mq3));
    CHECK(scales("ET1f", mq3));
    CHECK(scales("ET1ft", mqm3));
    // Reverses scale by the inverse factor.
    CHECK(scales("ET1R", mqm3.inverse()));
    CHECK(scales("ET1tR", mq3.inverse()));
    CHECK(scales("ET1fR", mq3.inverse()));
    CHECK(scales("ET1ftR", mqm3.inverse()));
}

TEST_CASE("type 6 and 7 change the bracket as expected") {
    const Transition& six = by_name("ET6I");
    Matrix<RatFunc> circle = bracket(six.src);
    REQUIRE(circle.rows() == 1);
    REQUIRE(circle.cols() == 1);
    CHECK(circle.at(0, 0) == loop_value());
    CHECK(bracket(six.tgt) == Matrix<RatFunc>::identity(1));
    CHECK_FALSE(bracket(six.src) == bracket(six.tgt));

    const Transition& seven = by_name("ET7I");
    CHECK_FALSE(bracket(seven.src) == bracket(seven.tgt));
}

TEST_CASE("far-apart events commute: type 8 preserves brackets") {
    for (EK a : {EK::Cup, EK::Cap, EK::NE, EK::NW}) {
        for (EK b : {EK::Cup, EK::Cap, EK::NE, EK::NW}) {
            for (int n = 0; n <= 3; ++n) {
                for (bool lower : {false, true}) {
                    Transition e = et8(a, b, n, lower);
                    CHECK(e.ttype == 8);
                    CHECK(e.in() == e.src.source());
                    CHECK(bracket(e.src) == bracket(e.tgt));
                }
            }
        }
    }
}

TEST_CASE("type 8 naming and symmetry images") {
    Transition e = et8(EK::NE, EK::Cap, 2, true);
    CHECK(e.name == "ET8L2(NE,Cap)");
    CHECK(e.src.source() == 2 + 2 + 2);

    Transition r = sym_apply(sym(true, false, false), e);
    CHECK(r.ttype == 8);
    CHECK(r.name == "ET8U2(NE,Cap)");
    CHECK(r.src == e.tgt);

    // Flipping turns the L order into the U order of the flipped events.
    Transition t = sym_apply(sym(false, true, false), e);
    CHECK(t.ttype == 8);
    CHECK(t.name == "ET8U2(NW,Cup)");
}

TEST_CASE("identify finds framed catalog occurrences") {
    for (const auto& e : catalog()) {
        for (int m : {0, 2}) {
            for (int n : {0, 1}) {
                Still u = frame(m, e.src, n), v = frame(m, e.tgt, n);
                auto hits = identify(u, v);
                bool found = false;
                for (const auto& h : hits)
                    if (h.et == e && h.m == m && h.n == n) found = true;
                CHECK(found);
            }
        }
    }
}

TEST_CASE("identify finds framed type 8 occurrences uniquely") {
    Transition e = et8(EK::Cup, EK::NW, 1, true);
    Still u = frame(1, e.src, 2), v = frame(1, e.tgt, 2);
    auto hits = identify(u, v);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].et == e);
    CHECK(hits[0].m == 1);
    CHECK(hits[0].n == 2);
}

TEST_CASE("identify is exact about the target still") {
    const Transition& e = by_name("ET2I");
    // Right stills, wrong pairing: the crossings cancel to nothing, not to
    // a pair of opposite crossings in the other order.
    CHECK(identify(e.src, by_name("ET2f").src).empty());
    // A birth on a 2-strand background is found with split framing.
    Still empty2 = Still::empty(2);
    Still born = frame(2, by_name("ET6R").tgt, 0);
    auto hits = identify(empty2, born);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].et.name == "ET6R");
    CHECK(hits[0].m == 2);
    CHECK(hits[0].n == 0);
}
