#pragma once

// Test-only oracles, kept independent of the library's implementation paths.

#include <optional>
#include <random>
#include <vector>

#include "dragonbound/derive.hpp"
#include "dragonbound/geometry.hpp"
#include "dragonbound/words.hpp"

namespace testsupport {

using namespace dragonbound;

// A folding-curve candidate must span one edge image under the sqrt(m)
// similarity: end-to-end squared distance equals the move count (times 4 in
// doubled coordinates). Closed or oddly spanning words cannot tile and their
// boundary words may legitimately annihilate.
inline bool spans_one_edge(const FoldWord& w) {
    const LatticePath p = render_fold(w);
    const GridPoint d = p.end() - p.vertices.front();
    return d.x * d.x + d.y * d.y == static_cast<std::int64_t>(4 * w.move_count());
}

// Literal window-replacement reduction: find the leftmost Reverse, replace
// the surrounding three-letter window, repeat. Returns every intermediate
// word (the input first, the reduced word last), or nullopt when a Reverse
// hits the word ends or another Reverse.
inline std::optional<std::vector<DirWord>> reduce_trace_literal(const DirWord& w) {
    std::vector<DirWord> trace{w};
    std::vector<Dir> cur = w.dirs();
    for (;;) {
        std::size_t j = cur.size();
        for (std::size_t i = 0; i < cur.size(); ++i) {
            if (cur[i] == Dir::Reverse) {
                j = i;
                break;
            }
        }
        if (j == cur.size()) return trace;
        if (j == 0 || j + 1 == cur.size()) return std::nullopt;
        if (cur[j - 1] == Dir::Reverse || cur[j + 1] == Dir::Reverse) return std::nullopt;
        const Dir w3 = reduce_rule(cur[j - 1], cur[j + 1]);
        cur[j - 1] = w3;
        cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(j),
                  cur.begin() + static_cast<std::ptrdiff_t>(j) + 2);
        trace.push_back(DirWord::raw(cur));
    }
}

// Same loop but always taking the rightmost Reverse.
inline std::optional<DirWord> reduce_rightmost(const DirWord& w) {
    std::vector<Dir> cur = w.dirs();
    for (;;) {
        std::size_t j = cur.size();
        for (std::size_t i = cur.size(); i-- > 0;) {
            if (cur[i] == Dir::Reverse) {
                j = i;
                break;
            }
        }
        if (j == cur.size()) return DirWord::raw(cur);
        if (j == 0 || j + 1 == cur.size()) return std::nullopt;
        if (cur[j - 1] == Dir::Reverse || cur[j + 1] == Dir::Reverse) return std::nullopt;
        cur[j - 1] = reduce_rule(cur[j - 1], cur[j + 1]);
        cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(j),
                  cur.begin() + static_cast<std::ptrdiff_t>(j) + 2);
    }
}

// All valid folding words with at most max_len letters (max_len odd).
inline std::vector<FoldWord> all_fold_words(std::size_t max_len) {
    std::vector<FoldWord> out;
    for (std::size_t len = 1; len <= max_len; len += 2) {
        const std::size_t turns = len / 2;
        for (int first = 0; first < 2; ++first) {
            for (std::uint64_t bits = 0; bits < (1ULL << turns); ++bits) {
                std::vector<FoldLetter> letters;
                letters.reserve(len);
                FoldLetter move = first ? FoldLetter::MoveB : FoldLetter::MoveA;
                for (std::size_t t = 0; t <= turns; ++t) {
                    letters.push_back(move);
                    move = complement(move);
                    if (t < turns)
                        letters.push_back((bits >> t) & 1 ? FoldLetter::TurnPlus
                                                          : FoldLetter::TurnMinus);
                }
                out.push_back(FoldWord(std::move(letters)));
            }
        }
    }
    return out;
}

// Uniform random valid folding word with the given move count.
inline FoldWord random_fold_word(std::mt19937& rng, std::size_t moves) {
    std::vector<FoldLetter> letters;
    letters.reserve(2 * moves - 1);
    FoldLetter move = rng() % 2 ? FoldLetter::MoveA : FoldLetter::MoveB;
    for (std::size_t i = 0; i < moves; ++i) {
        letters.push_back(move);
        move = complement(move);
        if (i + 1 < moves)
            letters.push_back(rng() % 2 ? FoldLetter::TurnPlus : FoldLetter::TurnMinus);
    }
    return FoldWord(std::move(letters));
}

// Random raw direction word (may be arbitrarily invalid for reduction).
inline DirWord random_raw_word(std::mt19937& rng, std::size_t len) {
    static constexpr Dir kDirs[4] = {Dir::TurnLeft, Dir::TurnRight, Dir::Straight,
                                     Dir::Reverse};
    std::vector<Dir> dirs(len);
    for (auto& d : dirs) d = kDirs[rng() % 4];
    return DirWord::raw(std::move(dirs));
}

// The raw words produced along the derivation of one system, before thinning.
inline std::vector<DirWord> pipeline_raw_words(const FoldingSystem& sys) {
    const FoldWord& a = sys.production_a();
    const DirWord left = create_left(a);
    const DirWord right = create_right(a);
    const DirWord left_red = reduce_word(left);
    const DirWord right_red = reduce_word(right);
    const DirWord inv_right = invert(right_red);
    auto concat = [](const DirWord& x, const DirWord& y) {
        std::vector<Dir> d = x.dirs();
        d.push_back(Dir::Reverse);
        d.insert(d.end(), y.dirs().begin(), y.dirs().end());
        return DirWord::raw(std::move(d));
    };
    return {left, right, concat(left_red, inv_right), concat(inv_right, left_red)};
}

inline std::vector<std::string> paper_sigmas() {
    return {"A-B",
            "A-B+A-B+A+B-A+B+A",
            "B+A-B-A+B+A+B-A+B+A-B-A-B+A-B+A+B",
            "B+A+B-A-B-A+B+A+B-A",
            "A+B-A-B+A+B+A-B",
            "A+B+A-B-A"};
}

}  // namespace testsupport
