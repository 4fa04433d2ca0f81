#pragma once

#include "plbraid/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace plb {

// Word in the Artin generators: letter k encodes sigma_{|k|}^{sign k}.
// Words read top to bottom; letter k acts at strand positions (|k|, |k|+1),
// numbered left to right.
struct BraidWord {
    int n = 1;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int strands, std::vector<int> ls) : n(strands), letters(std::move(ls)) {
        validate();
    }

    void validate() const {
        if (n < 1) throw IndexOutOfRange("strand count must be positive");
        for (int k : letters) {
            if (k == 0 || std::abs(k) > n - 1)
                throw IndexOutOfRange("letter " + std::to_string(k) + " invalid on " +
                                      std::to_string(n) + " strands");
        }
    }

    bool operator==(const BraidWord& o) const { return n == o.n && letters == o.letters; }
    bool operator!=(const BraidWord& o) const { return !(*this == o); }

    int exponent_sum() const {
        int s = 0;
        for (int k : letters) s += k > 0 ? 1 : -1;
        return s;
    }

    std::string str() const {
        std::ostringstream os;
        os << "n=" << n << ";";
        for (size_t i = 0; i < letters.size(); ++i) os << (i ? " " : " ") << letters[i];
        return os.str();
    }
};

inline BraidWord compose(const BraidWord& a, const BraidWord& b) {
    if (a.n != b.n) throw StrandMismatch("compose: " + std::to_string(a.n) + " vs " + std::to_string(b.n));
    BraidWord r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

inline BraidWord inverse(const BraidWord& w) {
    BraidWord r;
    r.n = w.n;
    r.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(-*it);
    return r;
}

// Cancels adjacent sigma_i sigma_i^{-1} pairs until none remain.
inline BraidWord free_reduce(const BraidWord& w) {
    BraidWord r;
    r.n = w.n;
    for (int k : w.letters) {
        if (!r.letters.empty() && r.letters.back() == -k)
            r.letters.pop_back();
        else
            r.letters.push_back(k);
    }
    return r;
}

// images[i] = final position (1-based) of the strand entering at top position i+1.
struct Permutation {
    std::vector<int> images;

    int degree() const { return static_cast<int>(images.size()); }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (images[i] != i + 1) return false;
        return true;
    }

    int cycle_count() const {
        int n = degree(), cycles = 0;
        std::vector<char> seen(n, 0);
        for (int i = 0; i < n; ++i) {
            if (seen[i]) continue;
            ++cycles;
            for (int j = i; !seen[j]; j = images[j] - 1) seen[j] = 1;
        }
        return cycles;
    }

    // cycles as sorted lists of 1-based strand indices
    std::vector<std::vector<int>> cycles() const {
        int n = degree();
        std::vector<char> seen(n, 0);
        std::vector<std::vector<int>> out;
        for (int i = 0; i < n; ++i) {
            if (seen[i]) continue;
            std::vector<int> cyc;
            for (int j = i; !seen[j]; j = images[j] - 1) {
                seen[j] = 1;
                cyc.push_back(j + 1);
            }
            std::sort(cyc.begin(), cyc.end());
            out.push_back(std::move(cyc));
        }
        return out;
    }

    bool operator==(const Permutation& o) const { return images == o.images; }
};

inline Permutation permutation(const BraidWord& w) {
    // pos[s] = current position of strand s (0-based internally)
    std::vector<int> strand_at(w.n);
    std::iota(strand_at.begin(), strand_at.end(), 0);
    for (int k : w.letters) {
        int i = std::abs(k) - 1;
        std::swap(strand_at[i], strand_at[i + 1]);
    }
    Permutation p;
    p.images.resize(w.n);
    for (int pos = 0; pos < w.n; ++pos) p.images[strand_at[pos]] = pos + 1;
    return p;
}

inline Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation r;
    r.images.resize(a.degree());
    for (int i = 0; i < a.degree(); ++i) r.images[i] = b.images[a.images[i] - 1];
    return r;
}

// Word on n+1 strands with letters of absolute value >= i incremented.
inline BraidWord shift_up(const BraidWord& w, int i) {
    if (i < 1 || i > w.n) throw IndexOutOfRange("shift_up position " + std::to_string(i));
    BraidWord r;
    r.n = w.n + 1;
    r.letters.reserve(w.letters.size());
    for (int k : w.letters) {
        int a = std::abs(k);
        r.letters.push_back(a >= i ? (k > 0 ? k + 1 : k - 1) : k);
    }
    return r;
}

// Appends sigma_n^{sign} on n+1 strands.
inline BraidWord markov_stabilize(const BraidWord& w, int sign) {
    BraidWord r;
    r.n = w.n + 1;
    r.letters = w.letters;
    r.letters.push_back(sign >= 0 ? w.n : -w.n);
    return r;
}

inline BraidWord conjugate(const BraidWord& w, const BraidWord& g) {
    if (w.n != g.n) throw StrandMismatch("conjugate");
    return compose(compose(inverse(g), w), g);
}

enum class LKind { over, under };

// Cuts the word between prefix (first `split` letters) and suffix, splicing a
// new strand at position i. The new vertical arcs pass over (LKind::over) or
// under (LKind::under) every other strand; `sign` picks the crossing formed
// between the two new arcs. Result lives on n+1 strands and has an isotopic
// closure.
inline BraidWord l_move(const BraidWord& w, size_t split, int i, LKind kind, int sign) {
    if (split > w.letters.size()) throw IndexOutOfRange("l_move split");
    if (i < 1 || i > w.n + 1) throw IndexOutOfRange("l_move position");
    if (sign == 0) throw IndexOutOfRange("l_move sign");
    BraidWord a1, a2;
    a1.n = a2.n = w.n;
    a1.letters.assign(w.letters.begin(), w.letters.begin() + static_cast<long>(split));
    a2.letters.assign(w.letters.begin() + static_cast<long>(split), w.letters.end());

    int n = w.n;
    int eps = kind == LKind::over ? 1 : -1;
    auto shifted = [i](int k) {
        int a = std::abs(k);
        return a >= i ? (k > 0 ? k + 1 : k - 1) : k;
    };
    BraidWord r;
    r.n = n + 1;
    // feed sweep: new top strand travels from position n+1 to position i
    for (int j = n; j >= i; --j) r.letters.push_back(eps * j);
    for (int k : a1.letters) r.letters.push_back(shifted(k));
    // the crossing between the two new arcs
    r.letters.push_back(sign > 0 ? std::min(i, n) : -std::min(i, n));
    for (int k : a2.letters) r.letters.push_back(shifted(k));
    // cut strand sweeps back out to position n+1
    for (int j = i; j <= n; ++j) r.letters.push_back(-eps * j);
    return r;
}

// --- serialization: line 1 "n=<int>", line 2 the letters (may be empty) ---

inline void write_braid(std::ostream& os, const BraidWord& w, bool canonical = true) {
    const BraidWord out = canonical ? free_reduce(w) : w;
    os << "n=" << out.n << "\n";
    for (size_t i = 0; i < out.letters.size(); ++i) {
        if (i) os << ' ';
        os << out.letters[i];
    }
    os << "\n";
}

inline BraidWord read_braid(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw ParseError("empty braid file");
    if (line.rfind("n=", 0) != 0) throw ParseError("expected n=<int>");
    BraidWord w;
    try {
        w.n = std::stoi(line.substr(2));
    } catch (const std::exception&) {
        throw ParseError("bad strand count: " + line);
    }
    if (std::getline(is, line)) {
        std::istringstream ls(line);
        int k;
        while (ls >> k) w.letters.push_back(k);
    }
    w.validate();
    return w;
}

} // namespace plb
