#ifndef QMOV_BRACKET_HPP
#define QMOV_BRACKET_HPP

#include <vector>

#include "qmov/events.hpp"
#include "qmov/matrix.hpp"
#include "qmov/ratfunc.hpp"

namespace qmov {

// State-sum matrices for stills.  A still on w strands acts on a 2^w
// dimensional space with basis vectors indexed by bit strings; the leftmost
// strand is the most significant bit.  A word acts bottom event first, so
// the matrix of a word is the product of its event matrices in reverse
// word order.

// The matrix of a basic event: 4x1 for Cup, 1x4 for Cap, 4x4 for the
// crossings.
const Matrix<RatFunc>& bracket_gen(EventKind e);

// The scalar of one closed loop.
RatFunc loop_value();

Matrix<RatFunc> bracket(const FramedEvent& e);
Matrix<RatFunc> bracket(const Still& s);

// bracket(e) * v without building the matrix.
std::vector<RatFunc> apply_event(const FramedEvent& e, const std::vector<RatFunc>& v);

// The whole word applied to a vector over the source strands.
std::vector<RatFunc> apply_still(const Still& s, std::vector<RatFunc> v);

}  // namespace qmov

#endif
