#pragma once

// Independent brute-force oracle for the 2D table: decides, straight from
// the three maze invariants expressed on the five-cell window, which outputs
// are forbidden for each context. Deliberately written against the window
// geometry only — it never looks at the rule patterns the compiler uses, so
// agreement between the two is meaningful.
//
// Window around the cell x being placed at (i,j):
//
//        c d e        c=(i-1,j-1) d=(i-1,j) e=(i-1,j+1)
//      a b x          a=(i,j-2)   b=(i,j-1)
//
// Invariant 1: no 2x2 square of equal cells. The only full 2x2 window
// containing x is {c,d,b,x}.
//
// Invariant 2: no wall or path starts or ends (top-down) with horizontal
// thickness one. Placing x decides whether b starts thin (a and c opposite
// to b) and whether d ends thin (c and e opposite to d).
//
// Invariant 3: every path run in a row must connect to the row below.
// Rows build left to right, so when x is placed, the run containing the
// path at d is decided: if e walls it off on the right, the run can no
// longer connect except through x — unless the visible part of the run
// already connects below (c path with b path below it). Anything further
// left is invisible to a five-cell window and is the prevention rule's job.

#include <array>
#include <cstdint>

#include "entombed/grid.hpp"

namespace oracle {

struct Window {
    entombed::Cell a, b, c, d, e;
};

inline Window window_of(std::uint16_t code) {
    return Window{
        static_cast<entombed::Cell>((code >> 4) & 1),
        static_cast<entombed::Cell>((code >> 3) & 1),
        static_cast<entombed::Cell>((code >> 2) & 1),
        static_cast<entombed::Cell>((code >> 1) & 1),
        static_cast<entombed::Cell>(code & 1),
    };
}

inline bool violates_invariant1(const Window& w, entombed::Cell x) {
    return w.b == w.c && w.c == w.d && w.d == x;
}

inline bool violates_invariant2(const Window& w, entombed::Cell x) {
    const bool b_starts_thin = w.a != w.b && w.c != w.b && x != w.b;
    const bool d_ends_thin = w.c != w.d && w.e != w.d && x != w.d;
    return b_starts_thin || d_ends_thin;
}

inline bool violates_invariant3(const Window& w, entombed::Cell x) {
    if (w.d != 0 || x != 1 || w.e != 1) return false;
    // run {c,d} already connects below through b
    if (w.c == 0 && w.b == 0) return false;
    return true;
}

inline bool forbidden(const Window& w, entombed::Cell x) {
    return violates_invariant1(w, x) || violates_invariant2(w, x) ||
           violates_invariant3(w, x);
}

// The two extra-invariant facts, encoded separately from the invariants:
// contexts matching *0100 additionally exclude a wall (the rule added so
// the single contradictory context stays harmless), and the contradictory
// context 01001 itself resolves to 1.
inline bool excluded_by_added_rule(const Window& w, entombed::Cell x) {
    return x == 1 && w.b == 0 && w.c == 1 && w.d == 0 && w.e == 0;
}

inline constexpr std::uint16_t kContradictoryContext = 0b01001;

/// Expected table cell for a context: '0', '1' or 'R'.
inline char expected_entry(std::uint16_t code) {
    if (code == kContradictoryContext) return '1';
    const Window w = window_of(code);
    const bool no0 = forbidden(w, 0);
    const bool no1 = forbidden(w, 1) || excluded_by_added_rule(w, 1);
    if (no0 && no1) return '!'; // contradiction: must not happen elsewhere
    if (no0) return '1';
    if (no1) return '0';
    return 'R';
}

} // namespace oracle
