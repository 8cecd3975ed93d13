#pragma once

#include "braid.hpp"
#include "curves.hpp"

#include <cassert>
#include <utility>
#include <vector>

namespace scurve {

struct synthesis_result {
    braid_word word;
    case_label label = case_label::trivial;
    sign_class sign = sign_class::empty;
    // For the figure-eight recursions: every (m,n) visited, starting with the input curve.
    std::vector<std::pair<int, int>> trace;
};

namespace words {

// Loop curve read straight off the surface on m+n strands: the left band carries a
// negative full twist, the right band t full twists, and the left strands pass under
// the right ones.
inline braid_word loop_surface(int m, int n, int t) {
    braid_word w{m + n, {}};
    w.append(twist_power(1, m, -1)).append(twist_power(m + 1, n, t)).append(pass_block(1, m, n, -1));
    return w;
}

// Loop curve with m > n after the n right-band strands are merged into the left band.
inline braid_word loop_merged(int m, int n, int t) {
    braid_word w{m, {}};
    w.append(twist_power(1, m, -1)).append(twist_power(1, n, t - 1)).append(pass_block(1, n, m - n, -1));
    return w;
}

// Infinity curve with n > m on n strands.
inline braid_word inf_merged(int m, int n, int t) {
    braid_word w{n, {}};
    w.append(twist_power(1, n, t)).append(pass_block(1, m, n - m, 1));
    return w;
}

// inf_merged rewritten for t <= -1 so that every letter is negative: one full twist of
// the n strands is split into the twists of its two sub-blocks and the cable passes.
inline braid_word inf_negative(int m, int n, int t) {
    braid_word w{n, {}};
    w.append(twist_power(1, n, t + 1))
        .append(twist_power(1, m, -1))
        .append(twist_power(m + 1, n - m, -1))
        .append(pass_block(1, m, n - m, -1));
    return w;
}

// Loop curve with n > m and t >= 2 as a positive braid on n strands. The surface word
// is conjugate to delta^(tn-m) * Delta^-2 on the first m strands, and one full twist
// inside delta^(tn-m) absorbs that negative twist.
inline braid_word loop_positive(int m, int n, int t) {
    braid_word w{n, {}};
    w.append(delta_power(1, n, (t - 1) * n - m))
        .append(twist_power(m + 1, n - m, 1))
        .append(pass_block(1, m, n - m, 1))
        .append(pass_block(1, n - m, m, 1));
    return w;
}

// Loop curve with m > n: (t-2) positive twists on the first n strands, everything else
// negative. Mixed for t >= 3.
inline braid_word loop_split(int m, int n, int t) {
    braid_word w{m, {}};
    w.append(twist_power(1, n, t - 2))
        .append(twist_power(n + 1, m - n, -1))
        .append(inverse_letters(pass_block(1, m - n, n, 1)))
        .append(inverse_letters(pass_block(1, n, m - n, 1)))
        .append(pass_block(1, n, m - n, -1));
    return w;
}

// loop_split with m >= (t-1)n as a negative braid. Each positive twist on the first n
// strands is carried once more around the closure than the previous one, so they land
// on disjoint n-strand cables of the remaining block, where they cancel against the
// negative full twist of that block. What is left of that twist is the cabled negative
// full twist between the sub-cables.
inline braid_word loop_negative(int m, int n, int t) {
    const int k = t - 2;
    const int rest = m - (t - 1) * n;
    assert(k >= 0 && rest >= 0 && m > n);
    std::vector<int> widths(static_cast<std::size_t>(k), n);
    if (rest > 0) widths.push_back(rest);
    braid_word w{m, {}};
    const int cables = static_cast<int>(widths.size());
    if (cables > 1) w.append(inverse_letters(cabled(delta_power(1, cables, cables), widths, n + 1)));
    if (rest > 1) w.append(twist_power(n + 1 + k * n, rest, -1));
    w.append(inverse_letters(pass_block(1, m - n, n, 1)))
        .append(inverse_letters(pass_block(1, n, m - n, 1)))
        .append(pass_block(1, n, m - n, -1));
    return w;
}

}  // namespace words

// Word read directly off the surface, before any simplification. An infinity curve
// (m,n) with m > n is isotopic on the surface to the loop curve (m-n, n).
inline braid_word surface_word(const twist_knot& k, const essential_curve& c) {
    const int t = k.t, m = c.m, n = c.n;
    if (c.is_trivial()) return {1, {}};
    if (c.pat == pattern::loop) return words::loop_surface(m, n, t);
    if (m > n) return words::loop_surface(m - n, n, t);
    return words::inf_merged(m, n, t);
}

inline synthesis_result synthesize(const twist_knot& k, const essential_curve& c);

namespace detail {

inline synthesis_result finish(braid_word w, case_label label) {
    synthesis_result r;
    r.word = std::move(w);
    r.label = label;
    r.sign = sign_definiteness(r.word);
    return r;
}

}  // namespace detail

inline synthesis_result synthesize(const twist_knot& k, const essential_curve& c) {
    using namespace words;
    const int t = k.t, m = c.m, n = c.n;
    const case_label label = case_of(k, c);
    switch (label) {
    case case_label::trivial:
        if (c.pat == pattern::loop && m == 1 && n == 1) return detail::finish({2, {-1}}, label);
        if (c.pat == pattern::infinity && m == 2 && n == 1) return detail::finish({2, {-1}}, label);
        return detail::finish({1, {}}, label);
    case case_label::neg_a: return detail::finish(loop_surface(m - n, n, t), label);
    case case_label::neg_b:
    case case_label::neg_d: return detail::finish(loop_surface(m, n, t), label);
    case case_label::neg_c: return detail::finish(inf_negative(m, n, t), label);

    case case_label::f8_case1: return detail::finish(loop_merged(m, n, 1), label);
    case case_label::f8_case2a: return detail::finish({2, {-1}}, label);
    case case_label::f8_case2b: return detail::finish(loop_merged(m - n, n, 1), label);
    case case_label::f8_case3: return detail::finish(inf_merged(m, n, 1), label);
    case case_label::f8_case4a: return detail::finish({2, {1}}, label);
    // the figure eight is amphichiral: the loop curve (m,n) is the mirror of the infinity curve (n,m)
    case case_label::f8_case4b: return detail::finish(mirror(loop_merged(n - m, m, 1)), label);
    case case_label::f8_case2c:
    case case_label::f8_case4c: {
        essential_curve next = label == case_label::f8_case2c
                                   ? curve_new(m - n, 2 * n - m, pattern::infinity)
                                   : curve_new(2 * m - n, n - m, pattern::loop);
        assert(next.m + next.n < m + n);
        synthesis_result r = synthesize(k, next);
        if (r.trace.empty()) r.trace.emplace_back(next.m, next.n);
        r.trace.insert(r.trace.begin(), {m, n});
        r.label = label;
        return r;
    }

    case case_label::pos_case1: return detail::finish(inf_merged(m, n, t), label);
    case case_label::pos_case2: return detail::finish(loop_positive(m, n, t), label);
    case case_label::pos_case3a: return detail::finish(loop_negative(m - n, n, t), label);
    case case_label::pos_case3b: return detail::finish(loop_positive(m - n, n, t), label);
    case case_label::pos_case4a: return detail::finish(loop_negative(m, n, t), label);
    case case_label::pos_case4b: return detail::finish(loop_split(m, n, 2), label);
    case case_label::leftover_loop: return detail::finish(loop_split(m, n, t), label);
    case case_label::leftover_infinity: return detail::finish(loop_split(m - n, n, t), label);
    }
    throw std::logic_error("synthesize: unhandled case");
}

// The mixed word the figure-eight recursion starts from, kept for oracle cross-checks.
inline braid_word unreduced_word(const twist_knot& k, const essential_curve& c) { return surface_word(k, c); }

}  // namespace scurve
