#include "dragonbound/derive.hpp"

#include <stdexcept>
#include <tuple>

#include "dragonbound/geometry.hpp"

namespace dragonbound {

DirWord create_left(const FoldWord& sigma_a) {
    std::vector<Dir> out;
    out.reserve(sigma_a.size());
    for (FoldLetter l : sigma_a.letters()) {
        switch (l) {
            case FoldLetter::MoveA:
            case FoldLetter::MoveB: out.push_back(Dir::TurnRight); break;
            case FoldLetter::TurnPlus: out.push_back(Dir::Straight); break;
            case FoldLetter::TurnMinus: out.push_back(Dir::Reverse); break;
        }
    }
    return DirWord::raw(std::move(out));
}

DirWord create_right(const FoldWord& sigma_a) {
    std::vector<Dir> out;
    out.reserve(sigma_a.size());
    for (FoldLetter l : sigma_a.letters()) {
        switch (l) {
            case FoldLetter::MoveA:
            case FoldLetter::MoveB: out.push_back(Dir::TurnLeft); break;
            case FoldLetter::TurnPlus: out.push_back(Dir::Reverse); break;
            case FoldLetter::TurnMinus: out.push_back(Dir::Straight); break;
        }
    }
    return DirWord::raw(std::move(out));
}

Dir reduce_rule(Dir x, Dir z) {
    if (x == Dir::Reverse || z == Dir::Reverse)
        throw std::logic_error("reduce_rule neighbours must not be Reverse");
    const bool xs = x == Dir::Straight;
    const bool zs = z == Dir::Straight;
    if (xs && zs) return Dir::Reverse;                       // svs -> v
    if (xs) return mirror(z);                                // svR -> L, svL -> R
    if (zs) return mirror(x);                                // Rvs -> L, Lvs -> R
    if (x == z) return Dir::Straight;                        // RvR, LvL -> s
    return Dir::Reverse;                                     // RvL, LvR -> v
}

DirWord reduce_word(const DirWord& w) {
    if (w.empty()) throw word_error("empty word");
    const auto& in = w.dirs();
    std::vector<Dir> out;
    out.reserve(in.size());
    std::size_t i = 0;
    while (i < in.size()) {
        Dir c = in[i++];
        if (c != Dir::Reverse) {
            out.push_back(c);
            continue;
        }
        // Resolve the pending Reverse against its current neighbours. A
        // produced Reverse sits immediately left of the unread input, so the
        // leftmost-window order of the original loop is preserved.
        for (;;) {
            if (out.empty())
                throw curve_error("reduction reached a leading Reverse (self-crossing system)");
            if (i >= in.size())
                throw curve_error("reduction reached a trailing Reverse (self-crossing system)");
            const Dir z = in[i];
            if (z == Dir::Reverse)
                throw curve_error("reduction produced adjacent Reverse letters "
                                  "(self-crossing system)");
            const Dir x = out.back();
            out.pop_back();
            ++i;
            const Dir r = reduce_rule(x, z);
            if (r != Dir::Reverse) {
                out.push_back(r);
                break;
            }
        }
    }
    return DirWord::raw(std::move(out));
}

DirWord thin(const DirWord& w) {
    const auto& in = w.dirs();
    std::vector<Dir> out;
    out.reserve((in.size() + 1) / 2);
    for (std::size_t i = 0; i < in.size(); ++i) {
        if (i % 2 == 0) {
            out.push_back(in[i]);
        } else if (in[i] != Dir::Straight) {
            throw std::logic_error("thin: non-Straight letter at even position " +
                                   std::to_string(i + 1));
        }
    }
    return DirWord::raw(std::move(out));
}

DirWord invert(const DirWord& w) {
    if (w.contains_reverse())
        throw std::logic_error("invert expects a Reverse-free word");
    const auto& in = w.dirs();
    std::vector<Dir> out(in.size());
    for (std::size_t i = 0; i < in.size(); ++i)
        out[in.size() - 1 - i] = mirror(in[i]);
    return DirWord::raw(std::move(out));
}

std::pair<DirWord, DirWord> make_straight_words(const DirWord& left_word,
                                                const DirWord& right_word) {
    const DirWord inv_right = invert(right_word);
    auto concat = [](const DirWord& a, const DirWord& b) {
        std::vector<Dir> d = a.dirs();
        d.push_back(Dir::Reverse);
        d.insert(d.end(), b.dirs().begin(), b.dirs().end());
        return DirWord::raw(std::move(d));
    };
    DirWord raw_upper = reduce_word(concat(left_word, inv_right));
    DirWord raw_lower = reduce_word(concat(inv_right, left_word));
    return {std::move(raw_upper), std::move(raw_lower)};
}

Parity case_for_upper(const FoldWord& sigma_a) {
    return sigma_a.first() == FoldLetter::MoveA ? Parity::Even : Parity::Odd;
}

Parity case_for_lower(const FoldWord& sigma_a) {
    return sigma_a.last() == FoldLetter::MoveA ? Parity::Odd : Parity::Even;
}

DirWord alternate_cases(const DirWord& w, Parity initial) {
    if (w.contains_reverse())
        throw std::logic_error("alternate_cases expects a Reverse-free word");
    const auto& d = w.dirs();
    std::vector<Parity> p(d.size());
    Parity current = initial;
    for (std::size_t i = 0; i < d.size(); ++i) {
        p[i] = current;
        if (d[i] != Dir::Straight) current = opposite(current);
    }
    return DirWord::finished(d, std::move(p));
}

BoundarySystem derive_boundary_system(const FoldingSystem& sys) {
    const FoldWord& sigma_a = sys.production_a();

    const LatticePath path = render_fold(sigma_a);
    if (AvoidanceReport rep = check_self_avoiding(path); !rep.ok)
        throw curve_error("input not a valid folding curve: " + rep.reason);

    DirWord left_word, right_word, raw_upper_s, raw_lower_s;
    try {
        left_word = reduce_word(create_left(sigma_a));
        right_word = reduce_word(create_right(sigma_a));
        std::tie(raw_upper_s, raw_lower_s) = make_straight_words(left_word, right_word);
    } catch (const curve_error&) {
        throw curve_error("input not a valid folding curve: reduction failed");
    }

    const Parity upper = case_for_upper(sigma_a);
    const Parity lower = case_for_lower(sigma_a);

    // The left word describes the left side of sigma(A), which is the image
    // of a single right turn, so it becomes the R production (and mirrored,
    // the l production); symmetrically for the right word.
    DirWord tau_r_upper = alternate_cases(thin(left_word), upper);
    DirWord tau_l_upper = alternate_cases(thin(right_word), upper);
    DirWord tau_r_lower = alternate_cases(thin(invert(right_word)), lower);
    DirWord tau_l_lower = alternate_cases(thin(invert(left_word)), lower);

    DirWord tau_s_upper = alternate_cases(thin(raw_upper_s), upper);
    DirWord tau_s_lower = alternate_cases(thin(raw_lower_s), lower);

    std::array<DirWord, BoundarySystem::kProductions> prods;
    prods[BoundarySystem::index_of(Dir::TurnLeft, Parity::Even)] = std::move(tau_l_upper);
    prods[BoundarySystem::index_of(Dir::TurnRight, Parity::Even)] = std::move(tau_r_upper);
    prods[BoundarySystem::index_of(Dir::TurnLeft, Parity::Odd)] = std::move(tau_l_lower);
    prods[BoundarySystem::index_of(Dir::TurnRight, Parity::Odd)] = std::move(tau_r_lower);
    prods[BoundarySystem::index_of(Dir::Straight, Parity::Even)] = std::move(tau_s_upper);
    prods[BoundarySystem::index_of(Dir::Straight, Parity::Odd)] = std::move(tau_s_lower);
    return BoundarySystem::checked(std::move(prods));
}

}  // namespace dragonbound
