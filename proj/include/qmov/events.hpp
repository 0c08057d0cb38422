#ifndef QMOV_EVENTS_HPP
#define QMOV_EVENTS_HPP

#include <compare>
#include <string>
#include <vector>

namespace qmov {

// The four basic events on a pair of strands.  Cup creates the pair, Cap
// closes it, NE and NW are the two crossings (named by the strand on top
// when read upward).
enum class EventKind { Cup, Cap, NE, NW };

int event_in(EventKind e);   // strands entering from below
int event_out(EventKind e);  // strands leaving above

// Swap NE and NW, fix Cup and Cap.
EventKind event_mirror(EventKind e);
// Swap Cup and Cap, and NE and NW.
EventKind event_flip(EventKind e);

const char* event_name(EventKind e);

// One horizontal slice of a still: a basic event with m idle strands on the
// left and n on the right, or an identity slice on k strands.  Identity
// slices are ordinary word letters here; where a still stands for "nothing
// happens" without such a letter, that is recorded by the Still itself.
struct FramedEvent {
    bool identity = false;
    int m = 0, n = 0;   // framing of a basic event
    EventKind kind = EventKind::Cup;
    int k = 0;          // strand count of an identity slice

    static FramedEvent framed(int m, EventKind kind, int n);
    static FramedEvent ident(int k);

    int in() const { return identity ? k : m + event_in(kind) + n; }
    int out() const { return identity ? k : m + event_out(kind) + n; }

    FramedEvent frame(int dm, int dn) const;
    FramedEvent mirror() const;  // NE <-> NW
    FramedEvent flip() const;    // Cup <-> Cap, NE <-> NW

    bool operator==(const FramedEvent& o) const;
    std::strong_ordering operator<=>(const FramedEvent& o) const;

    // "[1,NE,0]" or "1_2".
    std::string str() const;
};

// A vertical word of events read bottom to top.  The word may be empty, in
// which case the still is a featureless band of `arity` parallel strands;
// a nonempty word determines its own arities and the stored arity field is
// kept in sync with the first event.
class Still {
public:
    Still() = default;
    explicit Still(std::vector<FramedEvent> events);

    static Still empty(int arity);
    static Still single(const FramedEvent& e) { return Still({e}); }

    // Appends on top; the event must continue where the word left off.
    Still& append(const FramedEvent& e);

    int source() const;  // strands at the bottom
    int target() const;  // strands at the top

    bool is_empty_word() const { return events_.empty(); }
    size_t size() const { return events_.size(); }
    const std::vector<FramedEvent>& events() const { return events_; }
    const FramedEvent& operator[](size_t i) const { return events_[i]; }

    // Subword [from, to) as a still; an empty range keeps the arity found
    // at that height.
    Still slice(size_t from, size_t to) const;

    bool operator==(const Still& o) const;
    std::strong_ordering operator<=>(const Still& o) const;

    std::string str() const;

private:
    std::vector<FramedEvent> events_;
    int arity_ = 0;  // source arity; authoritative only for the empty word
};

// t on top of s (s happens first).  Arities must agree.
Still compose(const Still& s, const Still& t);

// m idle strands added on the left, n on the right, of every slice.
Still frame(int m, const Still& s, int n);

// Switches every crossing (NE <-> NW); framings and order are unchanged.
Still mirror(const Still& s);

// Turns the still upside down: the word is reversed and every event
// exchanged with its vertical opposite (Cup <-> Cap, NE <-> NW).
Still flip(const Still& s);

}  // namespace qmov

#endif
