#pragma once

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace scurve {

// A letter l means sigma_{|l|}^{sign(l)}; positive letters are right-handed crossings.
struct braid_word {
    int strands = 1;
    std::vector<int> letters;

    braid_word() = default;
    braid_word(int s, std::vector<int> l) : strands(s), letters(std::move(l)) { validate(); }

    void validate() const {
        if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
        for (int l : letters)
            if (l == 0 || std::abs(l) >= strands)
                throw std::invalid_argument("braid letter " + std::to_string(l) + " out of range for " +
                                            std::to_string(strands) + " strands");
    }

    std::size_t length() const { return letters.size(); }

    braid_word& append(const std::vector<int>& more) {
        letters.insert(letters.end(), more.begin(), more.end());
        return *this;
    }

    friend bool operator==(const braid_word& a, const braid_word& b) {
        return a.strands == b.strands && a.letters == b.letters;
    }
};

struct crossing_counts_t {
    long long k_plus = 0;
    long long k_minus = 0;
    long long total() const { return k_plus + k_minus; }
    friend bool operator==(const crossing_counts_t&, const crossing_counts_t&) = default;
};

enum class sign_class { positive, negative, mixed, empty };

inline const char* to_string(sign_class s) {
    switch (s) {
    case sign_class::positive: return "positive";
    case sign_class::negative: return "negative";
    case sign_class::mixed: return "mixed";
    case sign_class::empty: return "empty";
    }
    return "?";
}

// ((sigma_lo ... sigma_{lo+k-2})^k)^q with every letter carrying `sign`.
inline std::vector<int> full_twist_block(int lo, int k, int sign, int q) {
    if (k < 1 || q < 0) throw std::invalid_argument("full_twist_block: need k >= 1 and q >= 0");
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(q) * k * (k - 1));
    for (int r = 0; r < q * k; ++r)
        for (int i = lo; i < lo + k - 1; ++i) w.push_back(sign * i);
    return w;
}

// Signed power of the full twist: Delta^(2e) on strands lo..lo+k-1.
inline std::vector<int> twist_power(int lo, int k, int e) {
    return full_twist_block(lo, k, e >= 0 ? 1 : -1, std::abs(e));
}

// (sigma_lo ... sigma_{lo+k-2})^e, the 1/k-th root of a full twist.
inline std::vector<int> delta_power(int lo, int k, int e) {
    std::vector<int> w;
    const int sign = e >= 0 ? 1 : -1;
    for (int r = 0; r < std::abs(e); ++r)
        for (int i = lo; i < lo + k - 1; ++i) w.push_back(sign * i);
    return w;
}

// The block of `a` strands starting at position lo moves right across the
// `b` strands next to it. With sign +1 the moving block passes over.
inline std::vector<int> pass_block(int lo, int a, int b, int sign) {
    if (a < 0 || b < 0) throw std::invalid_argument("pass_block: negative width");
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(a) * b);
    for (int r = a - 1; r >= 0; --r)
        for (int j = 0; j < b; ++j) w.push_back(sign * (lo + r + j));
    return w;
}

inline std::vector<int> inverse_letters(const std::vector<int>& w) {
    std::vector<int> r(w.rbegin(), w.rend());
    for (int& l : r) l = -l;
    return r;
}

inline braid_word inverse(const braid_word& w) { return {w.strands, inverse_letters(w.letters)}; }

inline braid_word mirror(const braid_word& w) {
    braid_word r = w;
    for (int& l : r.letters) l = -l;
    return r;
}

// Replace every strand of `pattern` by a parallel cable. widths[i] is the width of the
// cable sitting at position i at the top of the pattern; the result starts at position lo.
inline std::vector<int> cabled(const std::vector<int>& pattern, std::vector<int> widths, int lo) {
    std::vector<int> out;
    for (int l : pattern) {
        const std::size_t i = static_cast<std::size_t>(std::abs(l) - 1);
        const int start = lo + std::accumulate(widths.begin(), widths.begin() + i, 0);
        auto block = pass_block(start, widths[i], widths[i + 1], l > 0 ? 1 : -1);
        out.insert(out.end(), block.begin(), block.end());
        std::swap(widths[i], widths[i + 1]);
    }
    return out;
}

inline crossing_counts_t crossing_counts(const braid_word& w) {
    crossing_counts_t c;
    for (int l : w.letters) (l > 0 ? c.k_plus : c.k_minus)++;
    return c;
}

inline sign_class sign_definiteness(const braid_word& w) {
    auto c = crossing_counts(w);
    if (c.total() == 0) return sign_class::empty;
    if (c.k_minus == 0) return sign_class::positive;
    if (c.k_plus == 0) return sign_class::negative;
    return sign_class::mixed;
}

// perm[i] = position at the bottom reached by the strand that starts at position i.
inline std::vector<int> braid_permutation(const braid_word& w) {
    std::vector<int> at(w.strands);  // at[p] = start index of the strand now at p
    std::iota(at.begin(), at.end(), 0);
    for (int l : w.letters) {
        int i = std::abs(l) - 1;
        std::swap(at[i], at[i + 1]);
    }
    std::vector<int> perm(w.strands);
    for (int p = 0; p < w.strands; ++p) perm[at[p]] = p;
    return perm;
}

inline int closure_components(const braid_word& w) {
    auto perm = braid_permutation(w);
    std::vector<char> seen(perm.size(), 0);
    int cycles = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = 1;
    }
    return cycles;
}

// Markov moves, used by property tests and by callers that want a different representative.
inline braid_word conjugate(const braid_word& w, int g) {
    braid_word r{w.strands, {g}};
    r.append(w.letters);
    r.letters.push_back(-g);
    r.validate();
    return r;
}

inline braid_word stabilize(const braid_word& w, int sign) {
    braid_word r{w.strands + 1, w.letters};
    r.letters.push_back(sign * w.strands);
    return r;
}

// Remove adjacent l, -l pairs.
inline braid_word free_reduce(const braid_word& w) {
    std::vector<int> out;
    for (int l : w.letters) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return {w.strands, out};
}

struct parse_error : std::runtime_error {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// Braid text format: "B<s>:<l1> <l2> ...", e.g. "B3:1 -2 -2".
inline std::string to_text(const braid_word& w) {
    std::ostringstream out;
    out << "B" << w.strands << ":";
    for (std::size_t i = 0; i < w.letters.size(); ++i) out << (i ? " " : "") << w.letters[i];
    return out.str();
}

inline braid_word parse_braid(const std::string& text) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& msg) { throw parse_error(msg, pos); };
    auto read_int = [&](bool allow_sign) {
        std::size_t start = pos;
        bool neg = false;
        if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        std::size_t digits = pos;
        long long v = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            v = v * 10 + (text[pos] - '0');
            if (v > 1000000000LL) {
                pos = start;
                fail("integer too large");
            }
            ++pos;
        }
        if (pos == digits) {
            pos = start;
            fail("expected integer");
        }
        return static_cast<int>(neg ? -v : v);
    };
    if (text.empty() || text[0] != 'B') fail("expected 'B'");
    ++pos;
    int s = read_int(false);
    if (s < 1) {
        pos = 1;
        fail("strand count must be positive");
    }
    if (pos >= text.size() || text[pos] != ':') fail("expected ':'");
    ++pos;
    std::vector<int> letters;
    while (true) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
        if (pos >= text.size() || text[pos] == '\n' || text[pos] == '\r') break;
        std::size_t at = pos;
        int l = read_int(true);
        if (l == 0 || std::abs(l) >= s) {
            pos = at;
            fail("generator index out of range");
        }
        letters.push_back(l);
        if (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' && text[pos] != '\n' && text[pos] != '\r')
            fail("unexpected character");
    }
    while (pos < text.size() && (text[pos] == '\n' || text[pos] == '\r')) ++pos;
    if (pos != text.size()) fail("trailing characters");
    return {s, letters};
}

}  // namespace scurve
