#pragma once

#include "braid.hpp"
#include "curves.hpp"
#include "invariants.hpp"
#include "synthesis.hpp"

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace scurve {

enum class tri { yes, no, undetermined };

inline const char* to_string(tri v) {
    switch (v) {
    case tri::yes: return "yes";
    case tri::no: return "no";
    case tri::undetermined: return "undetermined";
    }
    return "?";
}

enum class certificate_kind {
    none,
    trivial_table,
    cromwell_genus,
    fibonacci_trace,
    pretzel_family,
    rudolph_bound,
    oracle_refutation
};

inline const char* to_string(certificate_kind c) {
    switch (c) {
    case certificate_kind::none: return "None";
    case certificate_kind::trivial_table: return "TrivialTable";
    case certificate_kind::cromwell_genus: return "CromwellGenus";
    case certificate_kind::fibonacci_trace: return "FibonacciTrace";
    case certificate_kind::pretzel_family: return "PretzelFamily";
    case certificate_kind::rudolph_bound: return "RudolphBound";
    case certificate_kind::oracle_refutation: return "OracleRefutation";
    }
    return "?";
}

struct verdict {
    tri unknotted = tri::undetermined;
    std::optional<long long> genus;
    tri slice = tri::undetermined;
    certificate_kind certificate = certificate_kind::none;
    std::vector<std::pair<int, int>> trace;  // FibonacciTrace only
    std::optional<long long> bound;          // RudolphBound only
};

struct no_closed_form : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct not_reducible : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct inapplicable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Seifert's algorithm on the closure of a positive or negative braid gives a minimal
// genus surface, so g = (1 + crossings - strands) / 2.
inline long long genus_from_braid(const braid_word& w) {
    if (sign_definiteness(w) == sign_class::mixed)
        throw std::invalid_argument("genus_from_braid: mixed braid, Seifert genus not determined by the diagram");
    if (closure_components(w) != 1) throw std::invalid_argument("genus_from_braid: closure is not a knot");
    const long long v = 1 + static_cast<long long>(w.letters.size()) - w.strands;
    if (v < 0 || v % 2 != 0) throw std::logic_error("genus_from_braid: non-integral genus");
    return v / 2;
}

inline long long genus_closed_form(const twist_knot& k, const essential_curve& c) {
    const long long m = c.m, n = c.n, a = std::llabs(k.t);
    long long twice;
    switch (case_of(k, c)) {
    case case_label::neg_a: twice = m * (m - n - 2) + n * (a * (n - 1) + 1) + 1; break;
    case case_label::neg_b: twice = m * (m + n - 2) + n * (a * (n - 1) - 1) + 1; break;
    case case_label::neg_c: twice = n * (a * (n - 1) - m - 1) + m * m + 1; break;
    case case_label::neg_d: twice = a * n * (n - 1) + m * (m - 2) + n * (m - 1) + 1; break;
    case case_label::f8_case1: twice = n * (m - n) + (m - 1) * (m - 1); break;
    case case_label::f8_case2b: twice = (m - 2 * n) * n + (m - n) * (m - n - 2) + 1; break;
    // mirror images of the two previous cases with m and n exchanged
    case case_label::f8_case3: twice = m * (n - m) + (n - 1) * (n - 1); break;
    case case_label::f8_case4b: twice = (n - 2 * m) * m + (n - m) * (n - m - 2) + 1; break;
    default:
        throw no_closed_form(std::string("no closed genus formula for case ") + to_string(case_of(k, c)));
    }
    if (twice % 2 != 0) throw std::logic_error("genus_closed_form: odd numerator");
    return twice / 2;
}

inline bool fibonacci_guard(const essential_curve& c) {
    if (c.pat == pattern::infinity) return c.n < c.m && c.m < 2 * c.n;
    return c.m < c.n && c.n < 2 * c.m;
}

// Figure-eight isotopies (m,n) -> (m-n, 2n-m) for infinity curves and
// (m,n) -> (2m-n, n-m) for loop curves, applied while the guard holds.
inline std::vector<std::pair<int, int>> fibonacci_reduce(const essential_curve& c) {
    if (!fibonacci_guard(c)) throw not_reducible("fibonacci_reduce: (" + std::to_string(c.m) + "," + std::to_string(c.n) + ") is not reducible");
    std::vector<std::pair<int, int>> trace{{c.m, c.n}};
    essential_curve cur = c;
    while (fibonacci_guard(cur)) {
        const int before = cur.m + cur.n;
        if (cur.pat == pattern::infinity)
            cur = essential_curve{cur.m - cur.n, 2 * cur.n - cur.m, cur.pat};
        else
            cur = essential_curve{2 * cur.m - cur.n, cur.n - cur.m, cur.pat};
        if (cur.m + cur.n >= before) throw std::logic_error("fibonacci_reduce: no progress");
        trace.emplace_back(cur.m, cur.n);
    }
    return trace;
}

// True iff (m, n) = (F_{i+1}, F_i) for some i >= 1 (F_1 = F_2 = 1).
inline bool is_fibonacci_pair(long long m, long long n) {
    long long a = 1, b = 1;  // (F_{i+1}, F_i) starting at i = 1
    while (a <= m) {
        if (a == m && b == n) return true;
        const long long next = a + b;
        b = a;
        a = next;
    }
    return false;
}

// Pattern-aware form: infinity curves are (F_{i+1}, F_i), loop curves (F_i, F_{i+1}).
inline bool is_fibonacci_pair(const essential_curve& c) {
    return c.pat == pattern::infinity ? is_fibonacci_pair(c.m, c.n) : is_fibonacci_pair(c.n, c.m);
}

// Slice-Bennequin bound g4 >= (|k+ - k-| - strands + 1) / 2, floored and clamped at 0.
inline long long rudolph_lower_bound(const braid_word& w) {
    const auto c = crossing_counts(w);
    if (c.k_plus == c.k_minus) throw inapplicable("rudolph_lower_bound: k+ = k-");
    const long long v = std::llabs(c.k_plus - c.k_minus) - w.strands + 1;
    if (v <= 0) return 0;
    return v / 2;
}

struct pretzel_descriptor {
    int p, q, r;
    int genus;
    bool slice;
};

// The loop curve (3,2) on K_t, t >= 3, is the pretzel knot P(2t-5, -3, 2).
inline pretzel_descriptor pretzel_family(int t) {
    if (t < 3) throw std::invalid_argument("pretzel_family: needs t >= 3");
    return {2 * t - 5, -3, 2, t - 1, t == 4};
}

inline bool in_trivial_table(const twist_knot& k, const essential_curve& c) {
    if (c.is_trivial() || (c.m == 1 && c.n == 1)) return true;
    const bool inf = c.pat == pattern::infinity;
    if (k.t == -1 && inf && ((c.m == 1 && c.n == 2) || (c.m == 2 && c.n == 1))) return true;
    if (k.t != 1 && k.t != -1 && inf && c.m == 2 && c.n == 1) return true;
    return false;
}

// Words longer than this are only tested with the cheap refutation, never expanded.
constexpr std::size_t full_alexander_letter_limit = 400;

inline verdict classify(const twist_knot& k, const essential_curve& c) {
    verdict v;
    if (k.t == 0) throw std::invalid_argument("classify: t = 0 has no case analysis");
    if (in_trivial_table(k, c)) {
        v.unknotted = tri::yes;
        v.genus = 0;
        v.slice = tri::yes;
        v.certificate = certificate_kind::trivial_table;
        return v;
    }
    const synthesis_result syn = synthesize(k, c);

    if (syn.label == case_label::f8_case2c || syn.label == case_label::f8_case4c) {
        const auto [tm, tn] = syn.trace.back();
        verdict terminal = classify(k, essential_curve{tm, tn, c.pat});
        terminal.certificate = certificate_kind::fibonacci_trace;
        terminal.trace = syn.trace;
        terminal.bound.reset();
        return terminal;
    }

    if (syn.sign != sign_class::mixed) {
        const long long g = genus_from_braid(syn.word);
        v.genus = g;
        v.unknotted = g == 0 ? tri::yes : tri::no;
        v.slice = g == 0 ? tri::yes : tri::no;  // slice genus equals Seifert genus for these
        v.certificate = certificate_kind::cromwell_genus;
        return v;
    }

    if (syn.label == case_label::leftover_loop && c.m == 3 && c.n == 2) {
        const auto pz = pretzel_family(k.t);
        v.unknotted = tri::no;
        v.genus = pz.genus;
        v.slice = pz.slice ? tri::yes : tri::no;
        v.certificate = certificate_kind::pretzel_family;
        return v;
    }

    if (syn.label == case_label::leftover_loop) {
        const auto counts = crossing_counts(syn.word);
        if (counts.k_plus != counts.k_minus) {
            const long long b = rudolph_lower_bound(syn.word);
            if (b > 0) {
                v.unknotted = tri::no;
                v.slice = tri::no;
                v.certificate = certificate_kind::rudolph_bound;
                v.bound = b;
                return v;
            }
        }
        if (k.t == 3 && c.m == 4 && c.n == 3) {
            // known not slice; only accepted once the oracle sees a knotted closure
            if (alexander(syn.word) != laurent_poly(1)) {
                v.unknotted = tri::no;
                v.slice = tri::no;
                v.certificate = certificate_kind::oracle_refutation;
            }
            return v;
        }
    }

    // remaining leftovers: the oracle can only refute unknottedness
    bool knotted = alexander_refutes_unknot(syn.word);
    if (!knotted && syn.word.letters.size() <= full_alexander_letter_limit)
        knotted = alexander(syn.word) != laurent_poly(1);
    if (knotted) {
        v.unknotted = tri::no;
        v.certificate = certificate_kind::oracle_refutation;
    }
    return v;
}

}  // namespace scurve
