#pragma once

#include "plbraid/braid.hpp"
#include "plbraid/closure.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

namespace plb {

// Braid with a pointwise-fixed subbraid. fixed_strands are top positions
// (1-based); the permutation must map that set to itself, and each surgery
// component consists of whole cycles of the fixed part's permutation.
struct MixedBraid {
    BraidWord word;
    std::set<int> fixed_strands;
    std::vector<std::vector<int>> surgery_components; // partition of fixed_strands
    std::vector<long long> framings;                  // one per component

    int moving_count() const { return word.n - static_cast<int>(fixed_strands.size()); }
};

// Letters of the fixed subbraid, read off by tracking strand positions;
// letters touching any moving strand are skipped.
inline BraidWord extract_fixed(const BraidWord& w, const std::set<int>& fixed) {
    std::vector<char> is_fixed(w.n + 1, 0); // by strand id = starting position
    for (int p : fixed) {
        if (p < 1 || p > w.n) throw IndexOutOfRange("fixed strand out of range");
        is_fixed[p] = 1;
    }
    std::vector<int> strand_at(w.n + 1);
    for (int p = 1; p <= w.n; ++p) strand_at[p] = p;
    BraidWord out;
    out.n = static_cast<int>(fixed.size());
    for (int k : w.letters) {
        int i = std::abs(k);
        int sa = strand_at[i], sb = strand_at[i + 1];
        if (is_fixed[sa] && is_fixed[sb]) {
            int rank = 0;
            for (int p = 1; p <= i; ++p)
                if (is_fixed[strand_at[p]]) ++rank;
            out.letters.push_back(k > 0 ? rank : -rank);
        }
        std::swap(strand_at[i], strand_at[i + 1]);
    }
    return out;
}

namespace detail {

inline void check_mixed_invariants(const MixedBraid& mb) {
    Permutation perm = permutation(mb.word);
    for (int p : mb.fixed_strands) {
        if (p < 1 || p > mb.word.n) throw FixedPartCorrupted("fixed strand out of range");
        if (!mb.fixed_strands.count(perm.images[p - 1]))
            throw FixedPartCorrupted("permutation moves a fixed strand out of the fixed set");
    }
    std::set<int> seen;
    for (const auto& comp : mb.surgery_components)
        for (int p : comp) {
            if (!mb.fixed_strands.count(p))
                throw FixedPartCorrupted("surgery component names a moving strand");
            if (!seen.insert(p).second)
                throw FixedPartCorrupted("surgery components overlap");
        }
    if (seen.size() != mb.fixed_strands.size())
        throw FixedPartCorrupted("surgery components do not cover the fixed strands");
    if (mb.framings.size() != mb.surgery_components.size())
        throw FixedPartCorrupted("framing count mismatch");
    // whole cycles: the permutation restricted to fixed strands must keep
    // each component setwise
    for (const auto& comp : mb.surgery_components) {
        std::set<int> cs(comp.begin(), comp.end());
        for (int p : comp)
            if (!cs.count(perm.images[p - 1]))
                throw FixedPartCorrupted("surgery component is not a union of cycles");
    }
}

} // namespace detail

// Builds a mixed braid from the surgery braid B, the framings, and the full
// word with its fixed-position set; verifies that the fixed extraction
// reproduces B verbatim.
inline MixedBraid make_mixed(const BraidWord& B, const std::vector<long long>& framings,
                             const BraidWord& full, const std::set<int>& fixed,
                             const std::vector<std::vector<int>>& components) {
    if (static_cast<int>(fixed.size()) != B.n)
        throw FixedPartCorrupted("fixed set size differs from the surgery braid");
    MixedBraid mb{full, fixed, components, framings};
    detail::check_mixed_invariants(mb);
    BraidWord got = extract_fixed(full, fixed);
    if (got.letters != B.letters || got.n != B.n)
        throw FixedPartCorrupted("fixed extraction does not reproduce the surgery braid");
    return mb;
}

// L-move restricted to the moving part: the fixed extraction must survive
// bit-exact, otherwise the parameters touched the subbraid.
inline MixedBraid l_move_moving(const MixedBraid& mb, size_t split, int i, LKind kind,
                                int sign) {
    BraidWord before = extract_fixed(mb.word, mb.fixed_strands);
    BraidWord moved = l_move(mb.word, split, i, kind, sign);
    // the new strand's endpoints sit at position n+1; existing top positions
    // are untouched, so the fixed set carries over as is
    MixedBraid out;
    out.word = moved;
    out.fixed_strands = mb.fixed_strands;
    out.surgery_components = mb.surgery_components;
    out.framings = mb.framings;
    try {
        detail::check_mixed_invariants(out);
    } catch (const FixedPartCorrupted& e) {
        throw TouchesFixedSubbraid(e.what());
    }
    BraidWord after = extract_fixed(out.word, out.fixed_strands);
    if (after.letters != before.letters || after.n != before.n)
        throw TouchesFixedSubbraid("l_move altered the fixed extraction");
    return out;
}

// One positive or negative braid band move on the given surgery component.
struct BandMoveResult {
    MixedBraid braid;
    int parallel_strands = 0;   // strands added (the component's string count)
    int approach_crossings = 0; // crossings spent bringing the strand adjacent
};

// The moving strand designated for the move is the one with the largest top
// position. The component is doubled (a parallel copy right of each string),
// the framing is realized as 2p half-twists between the designated string
// and its copy, and the moving strand is spliced onto the parallel track by
// a single crossing of the requested sign next to the copy's lower end,
// approaching in front of any intervening strands.
inline BandMoveResult braid_band_move(const MixedBraid& mb, int component, int sign) {
    if (component < 0 || component >= static_cast<int>(mb.surgery_components.size()))
        throw UnknownComponent("no such surgery component");
    if (sign == 0) throw IndexOutOfRange("band move sign");
    if (mb.moving_count() < 1) throw NoAdjacentString("no moving strand to slide");
    const auto& comp = mb.surgery_components[component];
    long long framing = mb.framings[component];
    const int n = mb.word.n;

    std::set<int> comp_set(comp.begin(), comp.end());
    int designated_string = *std::max_element(comp.begin(), comp.end());
    int designated_moving = 0;
    for (int p = n; p >= 1; --p) {
        if (!mb.fixed_strands.count(p)) {
            designated_moving = p;
            break;
        }
    }

    // doubled top positions: strings of the component get width 2
    auto width = [&](int strand) { return comp_set.count(strand) ? 2 : 1; };
    std::vector<int> top2(n + 2, 0); // original top position -> doubled top position
    {
        int acc = 1;
        for (int p = 1; p <= n; ++p) {
            top2[p] = acc;
            acc += width(p);
        }
        top2[n + 1] = acc;
    }
    const int n2 = n + static_cast<int>(comp.size());

    // cable the word: strands carry their width through the braid
    BraidWord cabled;
    cabled.n = n2;
    {
        std::vector<int> strand_at(n + 1);
        for (int p = 1; p <= n; ++p) strand_at[p] = p;
        for (int k : mb.word.letters) {
            int i = std::abs(k);
            int e = k > 0 ? 1 : -1;
            int wa = width(strand_at[i]), wb = width(strand_at[i + 1]);
            int a = 1;
            for (int p = 1; p < i; ++p) a += width(strand_at[p]);
            // move bundle B leftward across bundle A strand by strand
            for (int s = 0; s < wb; ++s)
                for (int r = 0; r < wa; ++r)
                    cabled.letters.push_back(e * (a + wa - 1 + s - r));
            std::swap(strand_at[i], strand_at[i + 1]);
        }
    }

    // framing twists at the top, between the designated string and its copy
    BraidWord word2;
    word2.n = n2;
    {
        int q = top2[designated_string];
        for (long long t = 0; t < 2 * std::llabs(framing); ++t)
            word2.letters.push_back(framing > 0 ? q : -q);
        word2.letters.insert(word2.letters.end(), cabled.letters.begin(), cabled.letters.end());
    }

    // bottom positions in the doubled braid
    Permutation p2 = permutation(word2);
    int copy_top = top2[designated_string] + 1;
    int copy_bottom = p2.images[copy_top - 1];
    int moving_top = top2[designated_moving];
    int moving_bottom = p2.images[moving_top - 1];

    // splice: sweep the moving strand in front of everything until adjacent
    // to the copy, cross with the requested sign, sweep back
    BandMoveResult res;
    {
        std::vector<int>& ls = word2.letters;
        int mpos = moving_bottom;
        std::vector<int> sweep;
        if (mpos > copy_bottom + 1) {
            for (int p = mpos; p > copy_bottom + 1; --p) sweep.push_back(p - 1);
            mpos = copy_bottom + 1;
        } else if (mpos < copy_bottom - 1) {
            for (int p = mpos; p < copy_bottom - 1; ++p) sweep.push_back(-p);
            mpos = copy_bottom - 1;
        }
        for (int s : sweep) ls.push_back(s);
        int tw = std::min(mpos, copy_bottom);
        ls.push_back(sign > 0 ? tw : -tw);
        for (auto it = sweep.rbegin(); it != sweep.rend(); ++it) ls.push_back(-*it);
        res.approach_crossings = static_cast<int>(sweep.size()) * 2;
    }

    MixedBraid out;
    out.word = word2;
    for (int p : mb.fixed_strands) out.fixed_strands.insert(top2[p]);
    for (const auto& cmp : mb.surgery_components) {
        std::vector<int> c2;
        for (int p : cmp) c2.push_back(top2[p]);
        out.surgery_components.push_back(c2);
    }
    out.framings = mb.framings;
    detail::check_mixed_invariants(out);
    BraidWord before = extract_fixed(mb.word, mb.fixed_strands);
    BraidWord after = extract_fixed(out.word, out.fixed_strands);
    if (before.letters != after.letters)
        throw InvariantViolation("band move altered the fixed extraction");
    res.braid = out;
    res.parallel_strands = static_cast<int>(comp.size());
    return res;
}

// Closure of the full word; the bool per diagram component marks the surgery
// (fixed) components.
inline std::pair<LinkDiagram, std::vector<bool>> mixed_closure(const MixedBraid& mb) {
    LinkDiagram d = closure(mb.word);
    Permutation perm = permutation(mb.word);
    // components are assembled from the smallest unused top position upward,
    // matching the closure construction
    std::vector<bool> tags;
    std::vector<char> used(mb.word.n + 1, 0);
    for (int start = 1; start <= mb.word.n; ++start) {
        if (used[start]) continue;
        int s = start;
        do {
            used[s] = 1;
            s = perm.images[s - 1];
        } while (s != start);
        tags.push_back(mb.fixed_strands.count(start) > 0);
    }
    if (static_cast<int>(tags.size()) != d.component_count())
        throw InvariantViolation("component tagging mismatch");
    return {d, tags};
}

// --- serialization: braid file plus fixed=, components=, framings= lines ---

inline void write_mixed(std::ostream& os, const MixedBraid& mb) {
    write_braid(os, mb.word, false);
    os << "fixed=";
    bool first = true;
    for (int p : mb.fixed_strands) {
        if (!first) os << ",";
        os << p;
        first = false;
    }
    os << "\ncomponents=";
    for (size_t i = 0; i < mb.surgery_components.size(); ++i) {
        if (i) os << ";";
        for (size_t j = 0; j < mb.surgery_components[i].size(); ++j) {
            if (j) os << ",";
            os << mb.surgery_components[i][j];
        }
    }
    os << "\nframings=";
    for (size_t i = 0; i < mb.framings.size(); ++i) {
        if (i) os << ",";
        os << mb.framings[i];
    }
    os << "\n";
}

inline MixedBraid read_mixed(std::istream& is) {
    MixedBraid mb;
    mb.word = read_braid(is);
    std::string line;
    auto split_ints = [](const std::string& s, char sep) {
        std::vector<long long> out;
        std::string cur;
        std::istringstream ss(s);
        while (std::getline(ss, cur, sep))
            if (!cur.empty()) out.push_back(std::stoll(cur));
        return out;
    };
    while (std::getline(is, line)) {
        if (line.rfind("fixed=", 0) == 0) {
            for (long long v : split_ints(line.substr(6), ','))
                mb.fixed_strands.insert(static_cast<int>(v));
        } else if (line.rfind("components=", 0) == 0) {
            std::istringstream ss(line.substr(11));
            std::string grp;
            while (std::getline(ss, grp, ';')) {
                if (grp.empty()) continue;
                std::vector<int> comp;
                for (long long v : split_ints(grp, ',')) comp.push_back(static_cast<int>(v));
                mb.surgery_components.push_back(comp);
            }
        } else if (line.rfind("framings=", 0) == 0) {
            mb.framings = split_ints(line.substr(9), ',');
        }
    }
    detail::check_mixed_invariants(mb);
    return mb;
}

} // namespace plb
