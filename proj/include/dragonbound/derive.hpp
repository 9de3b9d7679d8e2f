#pragma once

#include <utility>

#include "dragonbound/words.hpp"

namespace dragonbound {

/// Left boundary word with backtracking: A,B -> R, + -> s, - -> v.
DirWord create_left(const FoldWord& sigma_a);

/// Right boundary word with backtracking: A,B -> L, + -> v, - -> s.
DirWord create_right(const FoldWord& sigma_a);

/// The nine-entry reduction map (X, Reverse, Z) -> W for X,Z in {L,R,s}.
Dir reduce_rule(Dir x, Dir z);

/// Repeatedly replace the leftmost (X, Reverse, Z) window until no Reverse
/// remains. Throws curve_error when a Reverse reaches the first or last
/// position or two Reverse letters become adjacent (self-crossing input).
DirWord reduce_word(const DirWord& w);

/// Keep the letters at odd 1-based positions. Every discarded position must
/// hold a Straight placeholder; anything else is an internal pipeline fault.
DirWord thin(const DirWord& w);

/// Reverse the word and swap TurnLeft <-> TurnRight (Straight is fixed).
DirWord invert(const DirWord& w);

/// Straight-segment words from the reduced, unthinned left/right words:
/// rawS = reduce(left ++ v ++ invert(right)),
/// raws = reduce(invert(right) ++ v ++ left).
std::pair<DirWord, DirWord> make_straight_words(const DirWord& left_word,
                                                const DirWord& right_word);

/// Initial parity of the upper-case productions: Even iff sigma(A) starts with A.
Parity case_for_upper(const FoldWord& sigma_a);
/// Initial parity of the lower-case productions: Odd iff sigma(A) ends with A.
Parity case_for_lower(const FoldWord& sigma_a);

/// Assign parities: the first letter gets `initial`; a turn flips the parity
/// of the next letter, a straight keeps it.
DirWord alternate_cases(const DirWord& w, Parity initial);

/// The full derivation: from sigma(A) to the six boundary productions.
/// Requires the rendered sigma(A) path to be self-avoiding.
BoundarySystem derive_boundary_system(const FoldingSystem& sys);

}  // namespace dragonbound
