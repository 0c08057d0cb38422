#ifndef QMOV_SF_HPP
#define QMOV_SF_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "qmov/flicker.hpp"

namespace qmov::sf {

// Two textual dialects exist in the wild: the one using '%' comment lines
// with '#' movie terminators, and the one using '#' comment lines with '.'
// terminators.  Auto picks by looking for a '.' outside comments.
enum class Dialect { Auto, Cpp, Java };

enum class ErrKind {
    Syntax,             // malformed token or structure
    Arity,              // letters of a still fail to stack
    UnknownTransition,  // marked spans match nothing in the catalog
    TypeDigitMismatch,  // the digit after => contradicts the identification
    FrameMismatch,      // spans identify, but the surrounding frames differ
    Ambiguous,          // several materially different flickers fit
};

class ParseError : public std::runtime_error {
public:
    ParseError(ErrKind kind, int line, int col, const std::string& what);

    ErrKind kind() const { return kind_; }
    int line() const { return line_; }  // 1-based
    int col() const { return col_; }    // 1-based

private:
    ErrKind kind_;
    int line_, col_;
};

struct Document {
    std::vector<Movie> movies;
    std::vector<std::string> diagnostics;
};

// A still on its own: a plain sequence of letters, no marks.  A sole "1_k"
// denotes the featureless band of k strands (the empty word).
Still parse_still(const std::string& text);

// One movie; a trailing terminator is optional here.
Movie parse_movie(const std::string& text, Dialect dialect = Dialect::Auto);

// A stream of terminator-separated movies.
Document parse_document(const std::string& text, Dialect dialect = Dialect::Auto);
Document load_file(const std::string& path, Dialect dialect = Dialect::Auto);

struct RenderOptions {
    bool type_digits = true;     // "=>7" instead of the bare arrow
    Dialect dialect = Dialect::Cpp;  // picks the terminator; Auto acts as Cpp
};

std::string render_still(const Still& s);
std::string render_movie(const Movie& m, const RenderOptions& opts = {});
std::string render_document(const std::vector<Movie>& movies,
                            const RenderOptions& opts = {});

}  // namespace qmov::sf

#endif
