#include "qmov/sf.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace qmov::sf {

namespace {

const char* err_name(ErrKind k) {
    switch (k) {
        case ErrKind::Syntax: return "syntax error";
        case ErrKind::Arity: return "arity error";
        case ErrKind::UnknownTransition: return "unknown transition";
        case ErrKind::TypeDigitMismatch: return "type digit mismatch";
        case ErrKind::FrameMismatch: return "frame mismatch";
        case ErrKind::Ambiguous: return "ambiguous transition";
    }
    return "error";
}

// ---------------------------------------------------------------- lexing

struct Tok {
    enum Kind { Letter, Mark, Arrow, Nat, Term };
    Kind kind;
    FramedEvent ev;  // Letter
    char mark = 0;   // Mark: 's' or 'f'
    long nat = 0;    // Nat
    int line = 1, col = 1;
};

bool comment_line(const std::string& s, char marker) {
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == marker;
    }
    return false;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    lines.push_back(cur);
    return lines;
}

Dialect detect_dialect(const std::vector<std::string>& lines) {
    for (const auto& l : lines) {
        if (comment_line(l, '%')) continue;
        if (l.find('.') != std::string::npos) return Dialect::Java;
    }
    return Dialect::Cpp;
}

struct Lexer {
    Dialect dialect;
    std::vector<Tok> toks;

    void line(const std::string& s, int ln) {
        size_t i = 0;
        auto fail = [&](const std::string& msg) -> void {
            throw ParseError(ErrKind::Syntax, ln, static_cast<int>(i) + 1, msg);
        };
        auto skip_pad = [&] {
            while (i < s.size() &&
                   (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ';'))
                ++i;
        };
        auto read_nat = [&]() -> long {
            skip_pad();
            if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                fail("number expected");
            long v = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                v = v * 10 + (s[i] - '0');
                if (v > 1000000) fail("number out of range");
                ++i;
            }
            return v;
        };
        auto expect = [&](char c) {
            skip_pad();
            if (i >= s.size() || s[i] != c) fail(std::string("'") + c + "' expected");
            ++i;
        };
        while (true) {
            skip_pad();
            if (i >= s.size()) break;
            char c = s[i];
            int col = static_cast<int>(i) + 1;
            if (c == 's' || c == 'f') {
                toks.push_back({Tok::Mark, {}, c, 0, ln, col});
                ++i;
            } else if (c == '=') {
                if (i + 1 >= s.size() || s[i + 1] != '>') fail("'=' not followed by '>'");
                toks.push_back({Tok::Arrow, {}, 0, 0, ln, col});
                i += 2;
            } else if (c == '#') {
                if (dialect == Dialect::Java) fail("'#' inside movie text");
                toks.push_back({Tok::Term, {}, 0, 0, ln, col});
                ++i;
            } else if (c == '.') {
                if (dialect != Dialect::Java) fail("'.' inside movie text");
                toks.push_back({Tok::Term, {}, 0, 0, ln, col});
                ++i;
            } else if (c == ']') {
                ++i;  // closing a flicker group; grouping carries no content
            } else if (c == '[') {
                size_t j = i + 1;
                while (j < s.size() &&
                       (std::isspace(static_cast<unsigned char>(s[j])) || s[j] == ';'))
                    ++j;
                if (j >= s.size() || !std::isdigit(static_cast<unsigned char>(s[j]))) {
                    ++i;  // opening a flicker group
                    continue;
                }
                ++i;
                long m = read_nat();
                expect(',');
                skip_pad();
                std::string name;
                while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i])))
                    name += s[i++];
                if (name.empty()) fail("event name expected");
                expect(',');
                long n = read_nat();
                expect(']');
                FramedEvent ev;
                if (name == "Cup") {
                    ev = FramedEvent::framed(static_cast<int>(m), EventKind::Cup,
                                             static_cast<int>(n));
                } else if (name == "Cap") {
                    ev = FramedEvent::framed(static_cast<int>(m), EventKind::Cap,
                                             static_cast<int>(n));
                } else if (name == "NE") {
                    ev = FramedEvent::framed(static_cast<int>(m), EventKind::NE,
                                             static_cast<int>(n));
                } else if (name == "NW") {
                    ev = FramedEvent::framed(static_cast<int>(m), EventKind::NW,
                                             static_cast<int>(n));
                } else {
                    std::string low;
                    for (char ch : name)
                        low += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
                    if (low == "null") {
                        ev = FramedEvent::ident(static_cast<int>(m + n));
                    } else {
                        throw ParseError(ErrKind::Syntax, ln, col,
                                         "unknown event '" + name + "'");
                    }
                }
                toks.push_back({Tok::Letter, ev, 0, 0, ln, col});
            } else if (c == '1' && i + 1 < s.size() && s[i + 1] == '_') {
                i += 2;
                long k = read_nat();
                toks.push_back(
                    {Tok::Letter, FramedEvent::ident(static_cast<int>(k)), 0, 0, ln, col});
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                long v = read_nat();
                toks.push_back({Tok::Nat, {}, 0, v, ln, col});
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
        }
    }
};

struct LexOut {
    Dialect dialect;
    std::vector<Tok> toks;
};

LexOut lex_text(const std::string& text, Dialect want) {
    auto lines = split_lines(text);
    Dialect d = (want == Dialect::Auto) ? detect_dialect(lines) : want;
    Lexer lx{d, {}};
    for (size_t idx = 0; idx < lines.size(); ++idx) {
        const std::string& l = lines[idx];
        if (comment_line(l, '%')) continue;
        if (d == Dialect::Java && comment_line(l, '#')) continue;
        lx.line(l, static_cast<int>(idx) + 1);
    }
    return {d, std::move(lx.toks)};
}

// ------------------------------------------------------------- segments

struct Seg {
    std::vector<FramedEvent> letters;
    std::vector<size_t> smarks, fmarks;  // mark positions as letter gaps
    int line = 1, col = 1;               // where the segment starts
    bool pos_set = false;
    std::optional<int> digit;  // type digit of the arrow after this segment
    int aline = 1, acol = 1;   // that arrow's position
};

std::vector<Seg> segment(const std::vector<Tok>& toks, int mline, int mcol) {
    std::vector<Seg> segs(1);
    segs[0].line = mline;
    segs[0].col = mcol;
    bool digit_slot = false;  // a number right here is the arrow's type digit
    for (const Tok& t : toks) {
        Seg& cur = segs.back();
        if (!cur.pos_set && t.kind != Tok::Arrow && t.kind != Tok::Nat) {
            cur.pos_set = true;
            cur.line = t.line;
            cur.col = t.col;
        }
        switch (t.kind) {
            case Tok::Letter:
                cur.letters.push_back(t.ev);
                digit_slot = false;
                break;
            case Tok::Mark:
                (t.mark == 's' ? cur.smarks : cur.fmarks).push_back(cur.letters.size());
                digit_slot = false;
                break;
            case Tok::Arrow:
                cur.aline = t.line;
                cur.acol = t.col;
                segs.emplace_back();
                segs.back().line = t.line;
                segs.back().col = t.col;
                digit_slot = true;
                break;
            case Tok::Nat:
                if (!digit_slot)
                    throw ParseError(ErrKind::Syntax, t.line, t.col, "stray number");
                if (t.nat > 8)
                    throw ParseError(ErrKind::Syntax, t.line, t.col,
                                     "transition type digit must be 0..8");
                segs[segs.size() - 2].digit = static_cast<int>(t.nat);
                digit_slot = false;
                break;
            case Tok::Term:
                throw ParseError(ErrKind::Syntax, t.line, t.col, "terminator inside movie");
        }
    }
    return segs;
}

void validate_marks(const std::vector<Seg>& segs) {
    auto expect_counts = [](const Seg& sg, size_t sn, size_t fn) {
        if (sg.smarks.size() != sn || sg.fmarks.size() != fn)
            throw ParseError(ErrKind::Syntax, sg.line, sg.col,
                             "still needs " + std::to_string(sn) + " 's' and " +
                                 std::to_string(fn) + " 'f' marks, found " +
                                 std::to_string(sg.smarks.size()) + " and " +
                                 std::to_string(sg.fmarks.size()));
    };
    if (segs.size() == 1) {
        expect_counts(segs[0], 0, 0);
        return;
    }
    expect_counts(segs.front(), 2, 0);
    expect_counts(segs.back(), 0, 2);
    for (size_t i = 1; i + 1 < segs.size(); ++i) expect_counts(segs[i], 2, 2);
}

// A span holding the single letter 1_0 stands for an empty span: the letter
// is notation only and is removed, pulling the marks together.
void drop_span_placeholders(Seg& sg) {
    auto sole = [&](const std::vector<size_t>& mk) -> std::optional<size_t> {
        if (mk.size() != 2 || mk[1] != mk[0] + 1) return std::nullopt;
        const FramedEvent& e = sg.letters[mk[0]];
        if (e.identity && e.k == 0) return mk[0];
        return std::nullopt;
    };
    std::vector<size_t> gone;
    if (auto g = sole(sg.smarks)) gone.push_back(*g);
    if (auto g = sole(sg.fmarks))
        if (gone.empty() || gone[0] != *g) gone.push_back(*g);
    if (gone.empty()) return;
    std::sort(gone.begin(), gone.end());
    auto shift = [&](size_t pos) {
        size_t d = 0;
        for (size_t g : gone)
            if (g < pos) ++d;
        return pos - d;
    };
    for (auto* v : {&sg.smarks, &sg.fmarks})
        for (auto& p : *v) p = shift(p);
    std::vector<FramedEvent> kept;
    for (size_t i = 0; i < sg.letters.size(); ++i)
        if (std::find(gone.begin(), gone.end(), i) == gone.end())
            kept.push_back(sg.letters[i]);
    sg.letters = std::move(kept);
}

// ------------------------------------------------------- identification

// The readings of a span: an empty word shows as nothing, a sole identity
// letter may be either an explicit realization of an empty side or an
// honest letter, anything else is taken literally.
struct Interp {
    Still still;
    Realize r;
};

std::vector<Interp> span_interps(const std::vector<FramedEvent>& w, int arity_if_empty) {
    std::vector<Interp> out;
    if (w.empty()) {
        out.push_back({Still::empty(arity_if_empty), Realize::Empty});
    } else if (w.size() == 1 && w[0].identity) {
        out.push_back({Still::empty(w[0].k), Realize::Event});
        out.push_back({Still(w), Realize::Empty});
    } else {
        out.push_back({Still(w), Realize::Empty});
    }
    return out;
}

void push_unique(std::vector<Flicker>& v, const Flicker& f) {
    for (const auto& g : v)
        if (g == f) return;
    v.push_back(f);
}

// All flickers splitting source letters SL and target letters TL as
// (p shared letters below) (changed span) (q shared letters above).
void collect(const std::vector<FramedEvent>& SL, const std::vector<FramedEvent>& TL,
             size_t p, size_t q, const Still& prev, const Still& next,
             std::vector<Flicker>& out) {
    if (p + q > SL.size() || p + q > TL.size()) return;
    if (!std::equal(SL.begin(), SL.begin() + p, TL.begin())) return;
    if (!std::equal(SL.begin() + (SL.size() - q), SL.end(),
                    TL.begin() + (TL.size() - q)))
        return;
    std::vector<FramedEvent> U(SL.begin() + p, SL.begin() + (SL.size() - q));
    std::vector<FramedEvent> V(TL.begin() + p, TL.begin() + (TL.size() - q));
    int aru = prev.slice(0, p).target();
    int arv = next.slice(0, p).target();
    for (const Interp& iu : span_interps(U, aru)) {
        for (const Interp& iv : span_interps(V, arv)) {
            for (const FramedTransition& ft : identify(iu.still, iv.still)) {
                try {
                    Still B = p ? prev.slice(0, p)
                                : Still::empty(ft.m + ft.et.in() + ft.n);
                    Still T = q ? prev.slice(SL.size() - q, SL.size())
                                : Still::empty(ft.m + ft.et.out() + ft.n);
                    Flicker f(ft.et, ft.m, ft.n, B, T, iu.r, iv.r);
                    if (f.source() == prev && f.target() == next) push_unique(out, f);
                } catch (const std::exception&) {
                    // this reading does not fit the surrounding letters
                }
            }
        }
    }
}

long catalog_index(const Transition& et) {
    const auto& cc = catalog();
    for (size_t i = 0; i < cc.size(); ++i)
        if (cc[i].name == et.name && cc[i] == et) return static_cast<long>(i);
    return 1000;  // type 8: after every catalog member
}

bool tie_less(const Flicker& x, const Flicker& y) {
    auto key = [](const Flicker& f) {
        return std::tuple(f.below.size(), catalog_index(f.et), f.m, f.n,
                          static_cast<int>(f.rsrc), static_cast<int>(f.rtgt),
                          f.below.str(), f.above.str(), f.et.name);
    };
    return key(x) < key(y);
}

Flicker resolve_arrow(const Seg& a, const Seg& b, const Still& prev, const Still& next) {
    const auto& SL = a.letters;
    const auto& TL = b.letters;
    size_t ps = a.smarks[0], qs = SL.size() - a.smarks[1];
    size_t pf = b.fmarks[0], qf = TL.size() - b.fmarks[1];

    // First reading: the spans exactly as marked.
    std::vector<Flicker> cands;
    if (ps == pf && qs == qf) collect(SL, TL, ps, qs, prev, next, cands);
    // Relaxed reading, used only when the marks as written identify
    // nothing: any split whose span contains both marked spans.
    if (cands.empty()) {
        for (size_t p = 0; p <= std::min(ps, pf); ++p)
            for (size_t q = 0; q <= std::min(qs, qf); ++q)
                collect(SL, TL, p, q, prev, next, cands);
    }

    if (cands.empty()) {
        std::vector<FramedEvent> U(SL.begin() + ps, SL.begin() + (SL.size() - qs));
        std::vector<FramedEvent> V(TL.begin() + pf, TL.begin() + (TL.size() - qf));
        bool spans_identify = false;
        for (const Interp& iu : span_interps(U, prev.slice(0, ps).target()))
            for (const Interp& iv : span_interps(V, next.slice(0, pf).target()))
                if (!identify(iu.still, iv.still).empty()) spans_identify = true;
        if (spans_identify)
            throw ParseError(ErrKind::FrameMismatch, a.aline, a.acol,
                             "marked spans name a transition, but it does not fit "
                             "between the surrounding letters");
        throw ParseError(ErrKind::UnknownTransition, a.aline, a.acol,
                         "no elementary transition matches the marked spans");
    }

    if (a.digit) {
        std::vector<Flicker> kept;
        for (const auto& f : cands)
            if (f.et.ttype == *a.digit) kept.push_back(f);
        if (kept.empty())
            throw ParseError(ErrKind::TypeDigitMismatch, a.aline, a.acol,
                             "type digit " + std::to_string(*a.digit) +
                                 " matches none of the identified transitions");
        cands = std::move(kept);
    }

    if (cands.size() == 1) return cands[0];
    bool all08 = std::all_of(cands.begin(), cands.end(), [](const Flicker& f) {
        return f.et.ttype == 0 || f.et.ttype == 8;
    });
    if (all08) return *std::min_element(cands.begin(), cands.end(), tie_less);
    std::string names;
    for (const auto& f : cands) {
        if (!names.empty()) names += ", ";
        names += f.et.name;
    }
    throw ParseError(ErrKind::Ambiguous, a.aline, a.acol,
                     "several transitions fit: " + names);
}

// ---------------------------------------------------------------- movies

Still literal_still(const Seg& sg, int arity_if_empty) {
    if (sg.letters.empty()) return Still::empty(arity_if_empty);
    try {
        return Still(sg.letters);
    } catch (const std::invalid_argument& e) {
        throw ParseError(ErrKind::Arity, sg.line, sg.col, e.what());
    }
}

Movie movie_from_tokens(const std::vector<Tok>& toks, int mline, int mcol) {
    auto segs = segment(toks, mline, mcol);
    validate_marks(segs);
    for (auto& sg : segs) drop_span_placeholders(sg);

    if (segs.size() == 1) {
        const auto& L = segs[0].letters;
        // A sole identity letter names the featureless still of that width.
        if (L.size() == 1 && L[0].identity) return Movie(Still::empty(L[0].k));
        return Movie(literal_still(segs[0], 0));
    }

    // Letterless stills are featureless bands; their width is the strand
    // count every still of the movie shares at the bottom.
    int base_arity = 0;
    for (const auto& sg : segs)
        if (!sg.letters.empty()) {
            base_arity = literal_still(sg, 0).source();
            break;
        }

    std::vector<Still> lits;
    lits.reserve(segs.size());
    for (const auto& sg : segs) lits.push_back(literal_still(sg, base_arity));

    Movie mov(lits[0]);
    for (size_t i = 0; i + 1 < segs.size(); ++i)
        mov.append(resolve_arrow(segs[i], segs[i + 1], lits[i], lits[i + 1]));
    return mov;
}

struct Group {
    std::vector<Tok> toks;
    int line = 1, col = 1;
    bool terminated = false;
};

std::vector<Group> group_movies(const std::vector<Tok>& toks) {
    std::vector<Group> out;
    Group cur;
    bool have = false;
    for (const Tok& t : toks) {
        if (t.kind == Tok::Term) {
            if (!have)
                throw ParseError(ErrKind::Syntax, t.line, t.col,
                                 "terminator with no movie before it");
            cur.terminated = true;
            out.push_back(std::move(cur));
            cur = Group{};
            have = false;
        } else {
            if (!have) {
                cur.line = t.line;
                cur.col = t.col;
                have = true;
            }
            cur.toks.push_back(t);
        }
    }
    if (have) out.push_back(std::move(cur));
    return out;
}

}  // namespace

// ----------------------------------------------------------- public face

ParseError::ParseError(ErrKind kind, int line, int col, const std::string& what)
    : std::runtime_error(std::string(err_name(kind)) + " at " + std::to_string(line) +
                         ":" + std::to_string(col) + ": " + what),
      kind_(kind),
      line_(line),
      col_(col) {}

Still parse_still(const std::string& text) {
    auto lx = lex_text(text, Dialect::Cpp);
    std::vector<FramedEvent> letters;
    for (const Tok& t : lx.toks) {
        if (t.kind != Tok::Letter)
            throw ParseError(ErrKind::Syntax, t.line, t.col,
                             "only letters may appear in a still");
        letters.push_back(t.ev);
    }
    if (letters.size() == 1 && letters[0].identity) return Still::empty(letters[0].k);
    try {
        return Still(std::move(letters));
    } catch (const std::invalid_argument& e) {
        throw ParseError(ErrKind::Arity, 1, 1, e.what());
    }
}

Movie parse_movie(const std::string& text, Dialect dialect) {
    auto lx = lex_text(text, dialect);
    auto groups = group_movies(lx.toks);
    if (groups.empty()) throw ParseError(ErrKind::Syntax, 1, 1, "no movie in input");
    if (groups.size() > 1)
        throw ParseError(ErrKind::Syntax, groups[1].line, groups[1].col,
                         "more than one movie in input");
    return movie_from_tokens(groups[0].toks, groups[0].line, groups[0].col);
}

Document parse_document(const std::string& text, Dialect dialect) {
    auto lx = lex_text(text, dialect);
    Document doc;
    if (dialect == Dialect::Auto && lx.dialect == Dialect::Java)
        doc.diagnostics.push_back("dialect auto-detected: '.' terminators");
    for (auto& g : group_movies(lx.toks)) {
        doc.movies.push_back(movie_from_tokens(g.toks, g.line, g.col));
        if (!g.terminated)
            doc.diagnostics.push_back("final movie lacks a terminator");
    }
    return doc;
}

Document load_file(const std::string& path, Dialect dialect) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str(), dialect);
}

// -------------------------------------------------------------- printing

std::string render_still(const Still& s) {
    if (s.is_empty_word()) return "1_" + std::to_string(s.source());
    std::string out;
    for (const auto& e : s.events()) out += e.str();
    return out;
}

namespace {

// One still with its marks: 's' around the span the next flicker rewrites,
// 'f' around the span the previous one produced; at a shared gap every 's'
// comes before every 'f'.
std::string render_frame_line(const Still& st, const Flicker* opening,
                              const Flicker* closing) {
    std::optional<std::pair<size_t, size_t>> sr, fr;
    if (opening) {
        size_t b = opening->below.size();
        sr = {{b, b + opening->middle_src().size()}};
    }
    if (closing) {
        size_t b = closing->below.size();
        fr = {{b, b + closing->middle_tgt().size()}};
    }
    std::string out;
    for (size_t g = 0; g <= st.size(); ++g) {
        if (sr && sr->first == g) out += 's';
        if (sr && sr->second == g) out += 's';
        if (fr && fr->first == g) out += 'f';
        if (fr && fr->second == g) out += 'f';
        if (g < st.size()) out += st.events()[g].str();
    }
    return out;
}

}  // namespace

std::string render_movie(const Movie& m, const RenderOptions& opts) {
    std::string term = (opts.dialect == Dialect::Java) ? " ." : " #";
    if (m.size() == 0) return render_still(m.initial()) + term;
    auto sts = m.stills();
    std::string out;
    for (size_t i = 0; i < sts.size(); ++i) {
        if (i) {
            out += " =>";
            if (opts.type_digits) out += std::to_string(m[i - 1].et.ttype);
            out += " ";
        }
        const Flicker* op = (i < m.size()) ? &m[i] : nullptr;
        const Flicker* cl = (i > 0) ? &m[i - 1] : nullptr;
        out += render_frame_line(sts[i], op, cl);
    }
    return out + term;
}

std::string render_document(const std::vector<Movie>& movies, const RenderOptions& opts) {
    std::string out;
    for (const auto& mv : movies) {
        out += render_movie(mv, opts);
        out += '\n';
    }
    return out;
}

}  // namespace qmov::sf
