#pragma once

#include "classify.hpp"
#include "curves.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace scurve {

using seifert_form = std::array<std::array<long long, 2>, 2>;

// Seifert matrix of K_t on the basis of the two band cores (left band first).
inline seifert_form seifert_matrix(const twist_knot& k) { return {{{-1, -1}, {0, k.t}}}; }

inline long long quadratic_form(const seifert_form& s, long long x, long long y) {
    return x * (s[0][0] * x + s[0][1] * y) + y * (s[1][0] * x + s[1][1] * y);
}

// Surface framing of the curve. A loop curve runs along both cores with the same
// orientation; an infinity curve reverses the right band.
inline long long self_linking(const twist_knot& k, const essential_curve& c) {
    const long long y = c.pat == pattern::loop ? c.n : -static_cast<long long>(c.n);
    return quadratic_form(seifert_matrix(k), c.m, y);
}

struct rational {
    long long num = 0;
    long long den = 1;

    static rational make(long long p, long long q) {
        if (q == 0) throw std::domain_error("zero denominator");
        if (q < 0) {
            p = -p;
            q = -q;
        }
        const long long g = std::gcd(p, q);
        if (g > 1) {
            p /= g;
            q /= g;
        }
        return {p, q};
    }

    friend bool operator==(const rational&, const rational&) = default;
};

inline std::string to_string(const rational& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

struct not_certified : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 1/(s+1) and 1/(s-1) in that order; a zero denominator is dropped.
inline std::vector<rational> fickle_surgeries(long long s) {
    std::vector<rational> out;
    for (long long d : {s + 1, s - 1}) {
        if (d == 0) continue;
        rational r = rational::make(1, d);
        if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
    return out;
}

inline std::vector<rational> fickle_surgeries(const twist_knot& k, const essential_curve& c) {
    const verdict v = classify(k, c);
    if (v.unknotted != tri::yes && v.slice != tri::yes)
        throw not_certified("curve " + to_text(c) + " on K_" + std::to_string(k.t) + " is neither a certified unknot nor certified slice");
    return fickle_surgeries(self_linking(k, c));
}

// Self-linking a*t + b as a function of an unspecified twist count.
struct affine_in_t {
    long long a = 0;
    long long b = 0;
    friend bool operator==(const affine_in_t&, const affine_in_t&) = default;
};

inline affine_in_t symbolic_self_linking(const essential_curve& c) {
    const long long m = c.m, n = c.n;
    const long long cross = c.pat == pattern::loop ? -m * n : m * n;
    return {n * n, -m * m + cross};
}

inline std::string to_string(const affine_in_t& v) {
    if (v.a == 0) return std::to_string(v.b);
    std::string s = v.a == 1 ? "t" : (v.a == -1 ? "-t" : std::to_string(v.a) + "t");
    if (v.b > 0) s += "+" + std::to_string(v.b);
    if (v.b < 0) s += std::to_string(v.b);
    return s;
}

struct corollary_row {
    std::string knot;
    std::string curves;
    std::string patterns;
    std::string self_linking;
    std::string coefficients;
};

namespace detail {

template <class T, class F>
std::string join(const std::vector<T>& items, F&& fmt) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ";";
        out += fmt(items[i]);
    }
    return out;
}

// Self-linking values sorted by t-coefficient, then constant descending.
inline void sort_affine(std::vector<affine_in_t>& v) {
    std::sort(v.begin(), v.end(), [](const affine_in_t& x, const affine_in_t& y) {
        return x.a != y.a ? x.a < y.a : x.b > y.b;
    });
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

inline std::string coefficient_list(const std::vector<affine_in_t>& values) {
    std::vector<std::string> out;
    for (const auto& s : values) {
        for (long long shift : {1LL, -1LL}) {
            std::string c;
            if (s.a == 0) {
                if (s.b + shift == 0) continue;
                c = to_string(rational::make(1, s.b + shift));
            } else {
                c = "1/(" + to_string(affine_in_t{s.a, s.b + shift}) + ")";
            }
            if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
        }
    }
    return join(out, [](const std::string& x) { return x; });
}

inline std::vector<essential_curve> unknotted_curves(int t, int max_sum) {
    std::vector<essential_curve> out;
    for (int m = 0; m <= max_sum; ++m)
        for (int n = 0; m + n <= max_sum; ++n) {
            if ((m == 0 && n == 0) || std::gcd(m, n) != 1) continue;
            for (pattern p : {pattern::infinity, pattern::loop}) {
                const essential_curve c = curve_new(m, n, p);
                if (c.is_trivial() && p == pattern::infinity) continue;
                if (classify({t}, c).unknotted == tri::yes) out.push_back(c);
            }
        }
    return out;
}

inline corollary_row inventory_row(const std::string& knot, int t, const std::vector<essential_curve>& curves,
                                   bool symbolic) {
    std::vector<affine_in_t> s;
    for (const auto& c : curves) s.push_back(symbolic ? symbolic_self_linking(c) : affine_in_t{0, self_linking({t}, c)});
    sort_affine(s);
    corollary_row row;
    row.knot = knot;
    row.curves = join(curves, [](const essential_curve& c) { return std::to_string(c.m) + "," + std::to_string(c.n); });
    row.patterns = join(curves, [](const essential_curve& c) { return std::string(to_string(c.pat)); });
    row.self_linking = join(s, [](const affine_in_t& v) { return to_string(v); });
    row.coefficients = coefficient_list(s);
    return row;
}

}  // namespace detail

// Census size used to collect the unknotted curves of K_{-1} and of the generic K_t.
constexpr int corollary_census_sum = 13;

// Cosmetic surgery coefficients found from the unknotted (or slice) curves on the
// genus one Seifert surfaces of the twist knots and of their Whitehead doubles.
inline std::vector<corollary_row> corollary_report() {
    std::vector<corollary_row> rows;

    // Whitehead double: the curve running once over the untwisted band is an unknot
    // with surface framing -1.
    rows.push_back({"D+(K,t)", "1,0", "loop", "-1", detail::coefficient_list({affine_in_t{0, -1}})});

    // Figure eight: the trivial curves plus the Fibonacci families.
    {
        std::vector<essential_curve> curves;
        for (const auto& c : detail::unknotted_curves(1, corollary_census_sum)) curves.push_back(c);
        std::vector<affine_in_t> s;
        for (const auto& c : curves) s.push_back({0, self_linking({1}, c)});
        detail::sort_affine(s);
        corollary_row row;
        row.knot = "K_1";
        row.curves = "1,0;0,1;F(i+1),F(i);F(i),F(i+1)";
        row.patterns = "loop;loop;inf;loop";
        row.self_linking = detail::join(s, [](const affine_in_t& v) { return to_string(v); });
        row.coefficients = detail::coefficient_list(s);
        rows.push_back(row);
    }

    rows.push_back(detail::inventory_row("K_-1", -1, detail::unknotted_curves(-1, corollary_census_sum), false));

    {
        // the unknotted curves are the same for every t other than 0 and +-1; check a spread
        const auto generic = detail::unknotted_curves(2, corollary_census_sum);
        for (int t : {-5, -3, -2, 3, 4, 6})
            if (detail::unknotted_curves(t, corollary_census_sum) != generic)
                throw std::logic_error("corollary_report: unknotted curves differ at t = " + std::to_string(t));
        rows.push_back(detail::inventory_row("K_t", 0, generic, true));
    }

    {
        // slice but knotted curves on K_4
        std::vector<essential_curve> slice;
        for (int m = 1; m <= corollary_census_sum; ++m)
            for (int n = 1; m + n <= corollary_census_sum; ++n) {
                if (std::gcd(m, n) != 1) continue;
                for (pattern p : {pattern::infinity, pattern::loop}) {
                    const essential_curve c{m, n, p};
                    const verdict v = classify({4}, c);
                    if (v.slice == tri::yes && v.unknotted == tri::no) slice.push_back(c);
                }
            }
        rows.push_back(detail::inventory_row("K_4", 4, slice, false));
    }
    return rows;
}

inline std::string corollary_tsv(const std::vector<corollary_row>& rows) {
    std::string out = "knot\tcurve\tpattern\tself_linking\tcoefficients\n";
    for (const auto& r : rows)
        out += r.knot + "\t" + r.curves + "\t" + r.patterns + "\t" + r.self_linking + "\t" + r.coefficients + "\n";
    return out;
}

}  // namespace scurve
