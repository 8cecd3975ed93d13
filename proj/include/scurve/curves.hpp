#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

namespace scurve {

// Twist knot K_t: t full right-handed twists for t > 0, |t| left-handed for t < 0.
// K_{-1} is the right-handed trefoil and K_1 the figure eight.
struct twist_knot {
    int t = 0;
};

enum class pattern { loop, infinity };

inline const char* to_string(pattern p) { return p == pattern::loop ? "loop" : "inf"; }

struct curve_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// (m, n) counts strands over the left and right band; the pattern records whether the
// orientation agrees on both bands (loop) or switches (infinity).
struct essential_curve {
    int m = 0;
    int n = 0;
    pattern pat = pattern::loop;

    bool is_trivial() const { return (m == 1 && n == 0) || (m == 0 && n == 1); }
    friend bool operator==(const essential_curve&, const essential_curve&) = default;
};

inline essential_curve curve_new(int m, int n, pattern p) {
    if (m < 0 || n < 0) throw curve_error("curve counts must be non-negative");
    if (m == 0 && n == 0) throw curve_error("(0,0) is not a curve");
    if (std::gcd(m, n) != 1)
        throw curve_error("NotCoprime: gcd(" + std::to_string(m) + "," + std::to_string(n) + ") != 1");
    essential_curve c{m, n, p};
    if (c.is_trivial()) c.pat = pattern::loop;
    return c;
}

inline std::string to_text(const essential_curve& c) {
    return std::to_string(c.m) + "," + std::to_string(c.n) + "," + to_string(c.pat);
}

// Curve text form "m,n,loop" or "m,n,inf".
inline essential_curve parse_curve(const std::string& text) {
    auto c1 = text.find(',');
    auto c2 = c1 == std::string::npos ? c1 : text.find(',', c1 + 1);
    if (c2 == std::string::npos) throw curve_error("curve must look like m,n,loop or m,n,inf: '" + text + "'");
    auto num = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9)
            throw curve_error("bad curve count '" + s + "'");
        return std::stoi(s);
    };
    int m = num(text.substr(0, c1));
    int n = num(text.substr(c1 + 1, c2 - c1 - 1));
    std::string p = text.substr(c2 + 1);
    pattern pat;
    if (p == "loop")
        pat = pattern::loop;
    else if (p == "inf")
        pat = pattern::infinity;
    else
        throw curve_error("unknown pattern '" + p + "'");
    return curve_new(m, n, pat);
}

enum class case_label {
    neg_a, neg_b, neg_c, neg_d,
    f8_case1, f8_case2a, f8_case2b, f8_case2c, f8_case3, f8_case4a, f8_case4b, f8_case4c,
    pos_case1, pos_case2, pos_case3a, pos_case3b, pos_case4a, pos_case4b,
    leftover_infinity, leftover_loop,
    trivial
};

inline const char* to_string(case_label c) {
    switch (c) {
    case case_label::neg_a: return "NegA";
    case case_label::neg_b: return "NegB";
    case case_label::neg_c: return "NegC";
    case case_label::neg_d: return "NegD";
    case case_label::f8_case1: return "F8Case1";
    case case_label::f8_case2a: return "F8Case2a";
    case case_label::f8_case2b: return "F8Case2b";
    case case_label::f8_case2c: return "F8Case2c";
    case case_label::f8_case3: return "F8Case3";
    case case_label::f8_case4a: return "F8Case4a";
    case case_label::f8_case4b: return "F8Case4b";
    case case_label::f8_case4c: return "F8Case4c";
    case case_label::pos_case1: return "PosCase1";
    case case_label::pos_case2: return "PosCase2";
    case case_label::pos_case3a: return "PosCase3a";
    case case_label::pos_case3b: return "PosCase3b";
    case case_label::pos_case4a: return "PosCase4a";
    case case_label::pos_case4b: return "PosCase4b";
    case case_label::leftover_infinity: return "LeftoverInfinity";
    case case_label::leftover_loop: return "LeftoverLoop";
    case case_label::trivial: return "Trivial";
    }
    return "?";
}

// (1,0), (0,1) and both (1,1) curves are unknots for every t. (2,1) inf is too, and for
// t >= 2 none of the regions below contains it, so it is labelled trivial there.
inline bool in_trivial_region(int t, const essential_curve& c) {
    if (c.is_trivial() || (c.m == 1 && c.n == 1)) return true;
    return t >= 2 && c.pat == pattern::infinity && c.m == 2 && c.n == 1;
}

inline case_label case_of(const twist_knot& k, const essential_curve& c) {
    const int t = k.t, m = c.m, n = c.n;
    if (t == 0) throw std::invalid_argument("case_of: t = 0 has no case analysis");
    if (in_trivial_region(t, c)) return case_label::trivial;
    const bool inf = c.pat == pattern::infinity;

    if (t <= -1) {
        if (m > n) return inf ? case_label::neg_a : case_label::neg_b;
        return inf ? case_label::neg_c : case_label::neg_d;
    }
    if (t == 1) {
        if (m > n) {
            if (!inf) return case_label::f8_case1;
            if (m - n == n) return case_label::f8_case2a;
            return m - n > n ? case_label::f8_case2b : case_label::f8_case2c;
        }
        if (inf) return case_label::f8_case3;
        if (n - m == m) return case_label::f8_case4a;
        return n - m > m ? case_label::f8_case4b : case_label::f8_case4c;
    }
    // t >= 2
    if (n > m) return inf ? case_label::pos_case1 : case_label::pos_case2;
    // m > n from here on. The boundary m = tn (only possible for n = 1) is put with the
    // negative cases: the cabling construction in synthesis needs only m >= tn.
    if (m - t * n >= 0) return inf ? case_label::pos_case3a : case_label::pos_case4a;
    if (inf) {
        if (m - n < n) return case_label::pos_case3b;
        if (t == 2) throw std::logic_error("case_of: t = 2 regions do not partition");
        return case_label::leftover_infinity;
    }
    if (t == 2) {
        if (m - n < n) return case_label::pos_case4b;
        throw std::logic_error("case_of: t = 2 regions do not partition");
    }
    return case_label::leftover_loop;
}

}  // namespace scurve
