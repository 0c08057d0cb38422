#include "qmov/events.hpp"

#include <sstream>
#include <stdexcept>

namespace qmov {

int event_in(EventKind e) {
    switch (e) {
        case EventKind::Cup: return 0;
        case EventKind::Cap: return 2;
        case EventKind::NE:
        case EventKind::NW: return 2;
    }
    return 0;
}

int event_out(EventKind e) {
    switch (e) {
        case EventKind::Cup: return 2;
        case EventKind::Cap: return 0;
        case EventKind::NE:
        case EventKind::NW: return 2;
    }
    return 0;
}

EventKind event_mirror(EventKind e) {
    switch (e) {
        case EventKind::NE: return EventKind::NW;
        case EventKind::NW: return EventKind::NE;
        default: return e;
    }
}

EventKind event_flip(EventKind e) {
    switch (e) {
        case EventKind::Cup: return EventKind::Cap;
        case EventKind::Cap: return EventKind::Cup;
        case EventKind::NE: return EventKind::NW;
        case EventKind::NW: return EventKind::NE;
    }
    return e;
}

const char* event_name(EventKind e) {
    switch (e) {
        case EventKind::Cup: return "Cup";
        case EventKind::Cap: return "Cap";
        case EventKind::NE: return "NE";
        case EventKind::NW: return "NW";
    }
    return "?";
}

FramedEvent FramedEvent::framed(int m, EventKind kind, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("FramedEvent: negative framing");
    FramedEvent e;
    e.m = m;
    e.n = n;
    e.kind = kind;
    return e;
}

FramedEvent FramedEvent::ident(int k) {
    if (k < 0) throw std::invalid_argument("FramedEvent: negative strand count");
    FramedEvent e;
    e.identity = true;
    e.k = k;
    return e;
}

FramedEvent FramedEvent::frame(int dm, int dn) const {
    if (identity) return ident(dm + k + dn);
    return framed(dm + m, kind, n + dn);
}

FramedEvent FramedEvent::mirror() const {
    if (identity) return *this;
    return framed(m, event_mirror(kind), n);
}

FramedEvent FramedEvent::flip() const {
    if (identity) return *this;
    return framed(m, event_flip(kind), n);
}

bool FramedEvent::operator==(const FramedEvent& o) const {
    if (identity != o.identity) return false;
    if (identity) return k == o.k;
    return m == o.m && n == o.n && kind == o.kind;
}

std::strong_ordering FramedEvent::operator<=>(const FramedEvent& o) const {
    if (identity != o.identity) return identity <=> o.identity;
    if (identity) return k <=> o.k;
    if (auto c = m <=> o.m; c != 0) return c;
    if (auto c = static_cast<int>(kind) <=> static_cast<int>(o.kind); c != 0) return c;
    return n <=> o.n;
}

std::string FramedEvent::str() const {
    if (identity) return "1_" + std::to_string(k);
    std::ostringstream out;
    out << "[" << m << "," << event_name(kind) << "," << n << "]";
    return out.str();
}

Still::Still(std::vector<FramedEvent> events) {
    for (const auto& e : events) append(e);
}

Still Still::empty(int arity) {
    if (arity < 0) throw std::invalid_argument("Still: negative arity");
    Still s;
    s.arity_ = arity;
    return s;
}

Still& Still::append(const FramedEvent& e) {
    if (events_.empty()) {
        arity_ = e.in();
    } else if (events_.back().out() != e.in()) {
        throw std::invalid_argument("Still: event does not continue the word (" +
                                    events_.back().str() + " then " + e.str() + ")");
    }
    events_.push_back(e);
    return *this;
}

int Still::source() const { return events_.empty() ? arity_ : events_.front().in(); }

int Still::target() const { return events_.empty() ? arity_ : events_.back().out(); }

Still Still::slice(size_t from, size_t to) const {
    if (from > to || to > events_.size()) throw std::out_of_range("Still: bad slice");
    if (from == to) {
        int arity = from == events_.size() ? target() : events_[from].in();
        return empty(arity);
    }
    Still s;
    for (size_t i = from; i < to; ++i) s.append(events_[i]);
    return s;
}

bool Still::operator==(const Still& o) const {
    if (events_.empty() != o.events_.empty()) return false;
    if (events_.empty()) return arity_ == o.arity_;
    return events_ == o.events_;
}

std::strong_ordering Still::operator<=>(const Still& o) const {
    if (events_.empty() && o.events_.empty()) return arity_ <=> o.arity_;
    if (auto c = events_.size() <=> o.events_.size(); c != 0) return c;
    for (size_t i = 0; i < events_.size(); ++i)
        if (auto c = events_[i] <=> o.events_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::string Still::str() const {
    if (events_.empty()) return "1_" + std::to_string(arity_);
    std::string out;
    for (const auto& e : events_) out += e.str();
    return out;
}

Still compose(const Still& s, const Still& t) {
    if (s.target() != t.source())
        throw std::invalid_argument("compose: stills do not stack (" + s.str() + " under " + t.str() + ")");
    if (s.is_empty_word() && t.is_empty_word()) return Still::empty(s.source());
    Still r = s;
    for (const auto& e : t.events()) r.append(e);
    return r;
}

Still frame(int m, const Still& s, int n) {
    if (s.is_empty_word()) return Still::empty(m + s.source() + n);
    Still r;
    for (const auto& e : s.events()) r.append(e.frame(m, n));
    return r;
}

Still mirror(const Still& s) {
    if (s.is_empty_word()) return s;
    Still r;
    for (const auto& e : s.events()) r.append(e.mirror());
    return r;
}

Still flip(const Still& s) {
    if (s.is_empty_word()) return s;
    Still r;
    for (auto it = s.events().rbegin(); it != s.events().rend(); ++it) r.append(it->flip());
    return r;
}

}  // namespace qmov
