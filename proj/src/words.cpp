#include "dragonbound/words.hpp"

#include <algorithm>

#include "dragonbound/kernels.hpp"

namespace dragonbound {

namespace {

void validate_fold_letters(const std::vector<FoldLetter>& letters) {
    if (letters.empty()) throw word_error("empty word");
    for (std::size_t i = 0; i < letters.size(); ++i) {
        const std::size_t pos = i + 1;
        if (pos % 2 == 1) {
            if (!is_move(letters[i]))
                throw word_error("move letter expected at position " + std::to_string(pos), pos);
            if (i >= 2 && letters[i] == letters[i - 2])
                throw word_error("adjacent move letters equal at position " + std::to_string(pos),
                                 pos);
        } else if (is_move(letters[i])) {
            throw word_error("turn letter expected at position " + std::to_string(pos), pos);
        }
    }
    if (letters.size() % 2 == 0)
        throw word_error("word ends with a turn letter at position " +
                             std::to_string(letters.size()),
                         letters.size());
}

}  // namespace

FoldWord::FoldWord(std::vector<FoldLetter> letters) : letters_(std::move(letters)) {
    validate_fold_letters(letters_);
}

FoldWord FoldWord::parse(std::string_view text) {
    std::vector<FoldLetter> letters;
    letters.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case 'A': letters.push_back(FoldLetter::MoveA); break;
            case 'B': letters.push_back(FoldLetter::MoveB); break;
            case '+': letters.push_back(FoldLetter::TurnPlus); break;
            case '-': letters.push_back(FoldLetter::TurnMinus); break;
            default:
                throw word_error(std::string("unknown character '") + text[i] +
                                     "' at position " + std::to_string(i + 1),
                                 i + 1);
        }
    }
    return FoldWord(std::move(letters));
}

std::string FoldWord::str() const {
    std::string s;
    s.reserve(letters_.size());
    for (FoldLetter l : letters_) s.push_back(to_char(l));
    return s;
}

FoldWord complement_reverse(const FoldWord& w) {
    std::vector<FoldLetter> out(w.size());
    const auto& in = w.letters();
    for (std::size_t i = 0; i < in.size(); ++i)
        out[in.size() - 1 - i] = complement(in[i]);
    return FoldWord(std::move(out));
}

std::uint64_t fold_length_at(const FoldingSystem& sys, unsigned level) {
    const std::uint64_t m = sys.arity();
    std::uint64_t moves = 1;
    for (unsigned i = 0; i < level; ++i) {
        if (moves > (UINT64_MAX - 1) / 2 / m) return UINT64_MAX;
        moves *= m;
    }
    return 2 * moves - 1;
}

FoldWord expand_fold(const FoldingSystem& sys, FoldLetter start, unsigned level,
                     std::uint64_t cap) {
    if (!is_move(start)) throw word_error("expansion must start from a move letter");
    const std::uint64_t len = fold_length_at(sys, level);
    if (len > cap) throw cap_error(len);
    std::vector<FoldLetter> letters =
        (len >= kernels::kParallelThreshold && kernels::openmp_enabled())
            ? kernels::expand_fold_omp(sys, start, level, cap)
            : kernels::expand_fold_serial(sys, start, level, cap);
    return FoldWord(std::move(letters));
}

// ---------------------------------------------------------------------------

DirWord DirWord::raw(std::vector<Dir> dirs) { return DirWord(std::move(dirs), {}); }

DirWord DirWord::finished(std::vector<Dir> dirs, std::vector<Parity> parities) {
    if (dirs.size() != parities.size())
        throw word_error("finished word needs one parity per letter");
    return DirWord(std::move(dirs), std::move(parities));
}

DirWord DirWord::parse_raw(std::string_view text) {
    if (text.empty()) throw word_error("empty word");
    std::vector<Dir> dirs;
    dirs.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case 'L': case 'l': dirs.push_back(Dir::TurnLeft); break;
            case 'R': case 'r': dirs.push_back(Dir::TurnRight); break;
            case 'S': case 's': dirs.push_back(Dir::Straight); break;
            case 'v': case 'V': dirs.push_back(Dir::Reverse); break;
            default:
                throw word_error(std::string("unknown character '") + text[i] +
                                     "' at position " + std::to_string(i + 1),
                                 i + 1);
        }
    }
    return DirWord(std::move(dirs), {});
}

DirWord DirWord::parse_finished(std::string_view text) {
    if (text.empty()) throw word_error("empty word");
    std::vector<Dir> dirs;
    std::vector<Parity> pars;
    dirs.reserve(text.size());
    pars.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        switch (c) {
            case 'L': case 'l': dirs.push_back(Dir::TurnLeft); break;
            case 'R': case 'r': dirs.push_back(Dir::TurnRight); break;
            case 'S': case 's': dirs.push_back(Dir::Straight); break;
            default:
                throw word_error(std::string("unknown character '") + c + "' at position " +
                                     std::to_string(i + 1),
                                 i + 1);
        }
        pars.push_back(c >= 'a' ? Parity::Odd : Parity::Even);
    }
    return DirWord(std::move(dirs), std::move(pars));
}

bool DirWord::contains_reverse() const {
    return std::find(dirs_.begin(), dirs_.end(), Dir::Reverse) != dirs_.end();
}

std::string DirWord::str() const {
    std::string s;
    s.reserve(dirs_.size());
    for (std::size_t i = 0; i < dirs_.size(); ++i) {
        char c = 0;
        switch (dirs_[i]) {
            case Dir::TurnLeft: c = 'L'; break;
            case Dir::TurnRight: c = 'R'; break;
            case Dir::Straight: c = 's'; break;
            case Dir::Reverse: c = 'v'; break;
        }
        if (is_finished()) {
            if (dirs_[i] == Dir::Reverse) {
                c = 'v';  // never legal in finished words; keep it visible
            } else {
                const bool odd = parities_[i] == Parity::Odd;
                if (dirs_[i] == Dir::Straight)
                    c = odd ? 's' : 'S';
                else
                    c = odd ? static_cast<char>(c + ('a' - 'A')) : c;
            }
        }
        s.push_back(c);
    }
    return s;
}

std::size_t alternation_violation(const DirWord& word) {
    if (!word.is_finished())
        throw word_error("alternation law applies to finished words only");
    const auto& d = word.dirs();
    const auto& p = word.parities();
    for (std::size_t i = 1; i < d.size(); ++i) {
        const Parity expected =
            (d[i - 1] == Dir::Straight) ? p[i - 1] : opposite(p[i - 1]);
        if (p[i] != expected) return i;
    }
    return npos;
}

// ---------------------------------------------------------------------------

std::size_t BoundarySystem::index_of(Dir d, Parity p) {
    // Table order L, R, l, r, S, s.
    switch (d) {
        case Dir::TurnLeft: return p == Parity::Even ? 0 : 2;
        case Dir::TurnRight: return p == Parity::Even ? 1 : 3;
        case Dir::Straight: return p == Parity::Even ? 4 : 5;
        default: throw word_error("Reverse has no production");
    }
}

char BoundarySystem::key_char(std::size_t index) {
    static constexpr char keys[kProductions] = {'L', 'R', 'l', 'r', 'S', 's'};
    return keys[index];
}

BoundarySystem BoundarySystem::checked(std::array<DirWord, kProductions> prods) {
    for (std::size_t i = 0; i < kProductions; ++i) {
        const DirWord& w = prods[i];
        const std::string key(1, key_char(i));
        if (w.empty()) throw word_error("production " + key + " is empty");
        if (!w.is_finished()) throw word_error("production " + key + " lacks parities");
        if (w.contains_reverse())
            throw word_error("production " + key + " contains Reverse");
        if (std::size_t at = alternation_violation(w); at != npos)
            throw word_error("production " + key +
                                 " breaks the parity alternation law at position " +
                                 std::to_string(at + 1),
                             at + 1);
    }
    return BoundarySystem(std::move(prods));
}

BoundarySystem BoundarySystem::unchecked(std::array<DirWord, kProductions> prods) {
    return BoundarySystem(std::move(prods));
}

BoundarySystem BoundarySystem::with_production(Dir d, Parity p, DirWord w) const {
    auto prods = prods_;
    prods[index_of(d, p)] = std::move(w);
    return BoundarySystem(std::move(prods));
}

std::string BoundarySystem::str() const {
    std::string s;
    for (std::size_t i = 0; i < kProductions; ++i) {
        if (i) s.push_back(',');
        s.push_back(key_char(i));
        s.push_back('=');
        s += prods_[i].str();
    }
    return s;
}

BoundarySystem BoundarySystem::parse(std::string_view text) {
    std::array<DirWord, kProductions> prods;
    std::array<bool, kProductions> seen{};
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view item = text.substr(pos, comma - pos);
        const std::size_t eq = item.find('=');
        if (eq != 1 || item.empty())
            throw word_error("expected K=word entries separated by commas");
        std::size_t idx = kProductions;
        for (std::size_t i = 0; i < kProductions; ++i)
            if (item[0] == key_char(i)) idx = i;
        if (idx == kProductions)
            throw word_error(std::string("unknown production key '") + item[0] + "'");
        if (seen[idx])
            throw word_error(std::string("duplicate production key '") + item[0] + "'");
        prods[idx] = DirWord::parse_finished(item.substr(2));
        seen[idx] = true;
        pos = comma + 1;
    }
    for (std::size_t i = 0; i < kProductions; ++i)
        if (!seen[i])
            throw word_error(std::string("missing production '") + key_char(i) + "'");
    return checked(std::move(prods));
}

DirWord expand_boundary(const BoundarySystem& sys, const DirWord& word, unsigned level,
                        std::uint64_t cap) {
    if (!word.is_finished()) throw word_error("expansion needs a finished word");
    if (word.size() > cap) throw cap_error(word.size());
    DirWord current = word;
    for (unsigned step = 0; step < level; ++step) {
        std::uint64_t next_len = 0;
        const auto& d = current.dirs();
        const auto& p = current.parities();
        for (std::size_t i = 0; i < d.size(); ++i) {
            next_len += sys.production(d[i], p[i]).size();
            if (next_len > cap) throw cap_error(next_len);
        }
        std::vector<Dir> nd;
        std::vector<Parity> np;
        nd.reserve(next_len);
        np.reserve(next_len);
        for (std::size_t i = 0; i < d.size(); ++i) {
            const DirWord& prod = sys.production(d[i], p[i]);
            nd.insert(nd.end(), prod.dirs().begin(), prod.dirs().end());
            np.insert(np.end(), prod.parities().begin(), prod.parities().end());
        }
        current = DirWord::finished(std::move(nd), std::move(np));
    }
    return current;
}

}  // namespace dragonbound
