#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dragonbound {

/// Thrown on malformed word text or structural validation failure.
/// position is 1-based; 0 means the word as a whole.
struct word_error : std::runtime_error {
    std::size_t position;
    word_error(const std::string& msg, std::size_t pos = 0)
        : std::runtime_error(msg), position(pos) {}
};

/// Thrown when an expansion would exceed the configured letter cap.
struct cap_error : std::runtime_error {
    std::uint64_t needed;
    explicit cap_error(std::uint64_t n)
        : std::runtime_error("length cap exceeded (need " + std::to_string(n) + " letters)"),
          needed(n) {}
};

/// Thrown when the input system turns out not to describe a valid
/// (non self-crossing) folding curve.
struct curve_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultCap = 1'000'000;

// ---------------------------------------------------------------------------
// Folding alphabet: A, B (unit moves), + (right turn), - (left turn).

enum class FoldLetter : std::uint8_t { MoveA, MoveB, TurnPlus, TurnMinus };

constexpr bool is_move(FoldLetter l) {
    return l == FoldLetter::MoveA || l == FoldLetter::MoveB;
}

constexpr FoldLetter complement(FoldLetter l) {
    switch (l) {
        case FoldLetter::MoveA: return FoldLetter::MoveB;
        case FoldLetter::MoveB: return FoldLetter::MoveA;
        case FoldLetter::TurnPlus: return FoldLetter::TurnMinus;
        default: return FoldLetter::TurnPlus;
    }
}

constexpr char to_char(FoldLetter l) {
    switch (l) {
        case FoldLetter::MoveA: return 'A';
        case FoldLetter::MoveB: return 'B';
        case FoldLetter::TurnPlus: return '+';
        default: return '-';
    }
}

/// A word over {A,B,+,-}: odd length, moves at odd 1-based positions,
/// turns at even positions, consecutive moves alternate between A and B.
class FoldWord {
public:
    FoldWord() = default;
    explicit FoldWord(std::vector<FoldLetter> letters);

    static FoldWord parse(std::string_view text);

    const std::vector<FoldLetter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    std::size_t move_count() const { return (letters_.size() + 1) / 2; }
    FoldLetter first() const { return letters_.front(); }
    FoldLetter last() const { return letters_.back(); }

    std::string str() const;

    friend bool operator==(const FoldWord&, const FoldWord&) = default;

private:
    std::vector<FoldLetter> letters_;
};

/// Reverse the word and swap A<->B, +<->-.
FoldWord complement_reverse(const FoldWord& w);

/// An L-system of the folding-curve form: sigma(B) is derived from sigma(A).
class FoldingSystem {
public:
    explicit FoldingSystem(FoldWord sigma_a)
        : prod_a_(std::move(sigma_a)), prod_b_(complement_reverse(prod_a_)) {}

    static FoldingSystem parse(std::string_view sigma_a) {
        return FoldingSystem(FoldWord::parse(sigma_a));
    }

    const FoldWord& production_a() const { return prod_a_; }
    const FoldWord& production_b() const { return prod_b_; }
    std::size_t arity() const { return prod_a_.move_count(); }

    friend bool operator==(const FoldingSystem&, const FoldingSystem&) = default;

private:
    FoldWord prod_a_;
    FoldWord prod_b_;
};

/// Length of the level-n expansion (2*m^n - 1), saturating at uint64 max.
std::uint64_t fold_length_at(const FoldingSystem& sys, unsigned level);

/// n-fold substitution applied to a single move letter.
FoldWord expand_fold(const FoldingSystem& sys, FoldLetter start, unsigned level,
                     std::uint64_t cap = kDefaultCap);

// ---------------------------------------------------------------------------
// Boundary alphabet: directions with an optional per-letter square parity.

enum class Dir : std::uint8_t { TurnLeft, TurnRight, Straight, Reverse };
enum class Parity : std::uint8_t { Even, Odd };

constexpr Parity opposite(Parity p) {
    return p == Parity::Even ? Parity::Odd : Parity::Even;
}

constexpr Dir mirror(Dir d) {
    if (d == Dir::TurnLeft) return Dir::TurnRight;
    if (d == Dir::TurnRight) return Dir::TurnLeft;
    return d;
}

/// A direction word. Raw words carry no parities (intermediate pipeline
/// values, may contain Reverse); finished words carry one parity per letter.
class DirWord {
public:
    DirWord() = default;

    static DirWord raw(std::vector<Dir> dirs);
    static DirWord finished(std::vector<Dir> dirs, std::vector<Parity> parities);

    /// Raw text: direction by letter, case insensitive ('v' = Reverse).
    static DirWord parse_raw(std::string_view text);
    /// Finished text: upper case = Even, lower = Odd; 'v'/'V' rejected.
    static DirWord parse_finished(std::string_view text);

    bool is_finished() const { return !parities_.empty(); }
    std::size_t size() const { return dirs_.size(); }
    bool empty() const { return dirs_.empty(); }
    const std::vector<Dir>& dirs() const { return dirs_; }
    const std::vector<Parity>& parities() const { return parities_; }
    bool contains_reverse() const;

    /// Drop parities, keeping directions only.
    DirWord stripped() const { return DirWord(dirs_, {}); }

    std::string str() const;

    friend bool operator==(const DirWord&, const DirWord&) = default;

private:
    DirWord(std::vector<Dir> d, std::vector<Parity> p)
        : dirs_(std::move(d)), parities_(std::move(p)) {}

    std::vector<Dir> dirs_;
    std::vector<Parity> parities_;  // empty for raw words
};

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

/// Parity alternation law for finished words: a turn flips the parity of the
/// following letter, a straight keeps it. Returns the 0-based index of the
/// first letter whose parity breaks the law, or npos if the word obeys it.
std::size_t alternation_violation(const DirWord& word);

/// The six productions of a boundary L-system, keyed by direction and parity.
/// Table order: L, R, l, r, S, s.
class BoundarySystem {
public:
    static constexpr std::size_t kProductions = 6;

    /// Validating constructor: every production finished, non-empty,
    /// Reverse-free and obeying the parity alternation law.
    static BoundarySystem checked(std::array<DirWord, kProductions> prods);
    /// Test hook: accepts arbitrary finished words (used to model corruption).
    static BoundarySystem unchecked(std::array<DirWord, kProductions> prods);

    static std::size_t index_of(Dir d, Parity p);
    static char key_char(std::size_t index);

    const DirWord& production(Dir d, Parity p) const { return prods_[index_of(d, p)]; }
    const DirWord& production(std::size_t index) const { return prods_.at(index); }

    BoundarySystem with_production(Dir d, Parity p, DirWord w) const;

    /// "L=..,R=..,l=..,r=..,S=..,s=.." (catalog text form).
    std::string str() const;
    static BoundarySystem parse(std::string_view text);

    friend bool operator==(const BoundarySystem&, const BoundarySystem&) = default;

private:
    explicit BoundarySystem(std::array<DirWord, kProductions> prods)
        : prods_(std::move(prods)) {}

    std::array<DirWord, kProductions> prods_;
};

/// n-fold substitution of a finished word, letter by letter. The word's
/// parities select productions; no law check is performed here.
DirWord expand_boundary(const BoundarySystem& sys, const DirWord& word, unsigned level,
                        std::uint64_t cap = kDefaultCap);

}  // namespace dragonbound
