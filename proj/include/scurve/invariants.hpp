#pragma once

#include "braid.hpp"
#include "laurent.hpp"
#include "modular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

namespace scurve {

struct too_large : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require_knot(const braid_word& w, const char* who) {
    w.validate();
    if (closure_components(w) != 1)
        throw std::invalid_argument(std::string(who) + ": closure has " + std::to_string(closure_components(w)) +
                                    " components, expected a knot");
}

inline laurent_poly geometric_sum(int s) {
    laurent_poly g;
    for (int e = 0; e < s; ++e) g.add_term(e, 1);
    return g;
}

// Reduced Burau image of the word, evaluated mod p at x. Row-major (s-1)x(s-1).
// Letters are applied as left multiplications from the last one backwards, which gives
// rho(l1) rho(l2) ... rho(lk). Each generator matrix differs from the identity in one row.
inline std::vector<modular::u64> burau_mod(const braid_word& w, modular::u64 x, modular::u64 p) {
    using namespace modular;
    const int d = w.strands - 1;
    std::vector<u64> b(static_cast<std::size_t>(d) * d, 0);
    for (int i = 0; i < d; ++i) b[static_cast<std::size_t>(i) * d + i] = 1;
    const u64 xi = inv(x, p);
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        const int r = std::abs(*it) - 1;
        // row r <- a * row(r-1) + c * row r + e * row(r+1)
        const u64 a = *it > 0 ? x : 1;
        const u64 c = *it > 0 ? p - x % p : p - xi;
        const u64 e = *it > 0 ? 1 : xi;
        u64* row = &b[static_cast<std::size_t>(r) * d];
        const u64* up = r > 0 ? &b[static_cast<std::size_t>(r - 1) * d] : nullptr;
        const u64* down = r + 1 < d ? &b[static_cast<std::size_t>(r + 1) * d] : nullptr;
        for (int col = 0; col < d; ++col) {
            u64 v = mul(row[col], c, p);
            if (up) v = add(v, mul(up[col], a, p), p);
            if (down) v = add(v, mul(down[col], e, p), p);
            row[col] = v;
        }
    }
    return b;
}

inline modular::u64 det_mod(std::vector<modular::u64> m, int n, modular::u64 p) {
    using namespace modular;
    u64 det = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (m[static_cast<std::size_t>(r) * n + c]) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int k = 0; k < n; ++k)
                std::swap(m[static_cast<std::size_t>(piv) * n + k], m[static_cast<std::size_t>(c) * n + k]);
            det = p - det;
        }
        const u64 pv = m[static_cast<std::size_t>(c) * n + c];
        det = mul(det, pv, p);
        const u64 pinv = inv(pv, p);
        for (int r = c + 1; r < n; ++r) {
            u64* row = &m[static_cast<std::size_t>(r) * n];
            const u64 f = mul(row[c], pinv, p);
            if (!f) continue;
            const u64* prow = &m[static_cast<std::size_t>(c) * n];
            for (int k = c; k < n; ++k) row[k] = sub(row[k], mul(f, prow[k], p), p);
        }
    }
    return det % p;
}

// det(I - rho(w)) evaluated at x mod p.
inline modular::u64 burau_char_value(const braid_word& w, modular::u64 x, modular::u64 p) {
    const int d = w.strands - 1;
    auto b = burau_mod(w, x, p);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            auto& v = b[static_cast<std::size_t>(i) * d + j];
            v = modular::sub(i == j ? 1 : 0, v, p);
        }
    return det_mod(std::move(b), d, p);
}

// Upper bound (log2) for every coefficient of det(I - rho(w)): track the l1 norm of each
// entry of rho(w), then apply Hadamard's inequality on the unit circle.
inline long double burau_coefficient_bound_log2(const braid_word& w) {
    const int d = w.strands - 1;
    const long double neg_inf = -std::numeric_limits<long double>::infinity();
    std::vector<long double> b(static_cast<std::size_t>(d) * d, neg_inf);
    for (int i = 0; i < d; ++i) b[static_cast<std::size_t>(i) * d + i] = 0;
    auto log_add = [&](long double x, long double y) {
        if (x == neg_inf) return y;
        if (y == neg_inf) return x;
        if (x < y) std::swap(x, y);
        return x + std::log2(1 + std::exp2(y - x));
    };
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        const int r = std::abs(*it) - 1;
        for (int col = 0; col < d; ++col) {
            long double v = b[static_cast<std::size_t>(r) * d + col];
            if (r > 0) v = log_add(v, b[static_cast<std::size_t>(r - 1) * d + col]);
            if (r + 1 < d) v = log_add(v, b[static_cast<std::size_t>(r + 1) * d + col]);
            b[static_cast<std::size_t>(r) * d + col] = v;
        }
    }
    long double total = 0;
    for (int i = 0; i < d; ++i) {
        long double row = neg_inf;
        for (int j = 0; j < d; ++j) {
            long double e = b[static_cast<std::size_t>(i) * d + j];
            if (i == j) e = log_add(e, 0);
            if (e != neg_inf) row = log_add(row, 2 * e);
        }
        if (row != neg_inf) total += row / 2;
    }
    return total * (1 + 1e-9L) + 1e-6L;
}

}  // namespace detail

// Alexander polynomial of the closure, det(I - rho(w)) / (1 + x + ... + x^(s-1)) with the
// reduced Burau representation rho, unit-normalised. det(I - rho(w)) is recovered exactly
// from its values at N-th roots of unity modulo enough primes to exceed a proven bound on
// its coefficients.
inline laurent_poly alexander(const braid_word& w) {
    detail::require_knot(w, "alexander");
    const int s = w.strands;
    if (s == 1) return laurent_poly(1);
    const std::size_t L = w.letters.size();
    // The Seifert surface of the closure bounds span(Delta) by L - s + 1, so the
    // characteristic polynomial spans at most L exponents; N > 2L + 2 leaves a zero gap
    // longer than any gap inside the support.
    std::size_t N = 4;
    while (N < 2 * (L + 2)) N <<= 1;
    const long double need_bits = detail::burau_coefficient_bound_log2(w) + 2;

    modular::crt_accumulator acc(N);
    for (std::size_t k = 0; k == 0 || std::log2(static_cast<long double>(acc.modulus())) < need_bits; ++k) {
        const auto P = modular::prime_at(k);
        const modular::u64 omega = modular::pow(P.generator, (P.p - 1) / N, P.p);
        std::vector<modular::u64> vals(N);
        modular::u64 x = 1;
        for (std::size_t j = 0; j < N; ++j) {
            vals[j] = detail::burau_char_value(w, x, P.p);
            x = modular::mul(x, omega, P.p);
        }
        modular::inverse_ntt(vals, P);
        acc.add_residues(vals, P.p);
    }
    auto coeffs = acc.symmetric();

    // unfold the cyclic coefficient sequence after its longest run of zeros
    std::size_t best_len = 0, best_end = 0, run = 0;
    for (std::size_t i = 0; i < 2 * N; ++i) {
        if (coeffs[i % N] == 0) {
            if (++run > best_len && run <= N) {
                best_len = run;
                best_end = i % N;
            }
        } else {
            run = 0;
        }
    }
    if (best_len == N) throw std::logic_error("alexander: characteristic polynomial vanished");
    laurent_poly f;
    for (std::size_t i = 1; i <= N; ++i) {
        const std::size_t idx = (best_end + i) % N;
        if (coeffs[idx] != 0) f.add_term(static_cast<int>(i), coeffs[idx]);
    }
    return f.divided_exactly_by(detail::geometric_sum(s)).unit_normalized();
}

// Same quantity computed with Laurent-polynomial matrices and fraction-free elimination.
// Slow; used to cross-check the modular route.
inline laurent_poly alexander_exact(const braid_word& w) {
    detail::require_knot(w, "alexander_exact");
    const int s = w.strands;
    if (s == 1) return laurent_poly(1);
    const int d = s - 1;
    const laurent_poly x = laurent_poly::monomial(1, 1), xi = laurent_poly::monomial(1, -1);
    std::vector<std::vector<laurent_poly>> b(d, std::vector<laurent_poly>(d));
    for (int i = 0; i < d; ++i) b[i][i] = laurent_poly(1);
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        const int r = std::abs(*it) - 1;
        const laurent_poly a = *it > 0 ? x : laurent_poly(1);
        const laurent_poly c = *it > 0 ? -x : -xi;
        const laurent_poly e = *it > 0 ? laurent_poly(1) : xi;
        for (int col = 0; col < d; ++col) {
            laurent_poly v = c * b[r][col];
            if (r > 0) v += a * b[r - 1][col];
            if (r + 1 < d) v += e * b[r + 1][col];
            b[r][col] = v;
        }
    }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) b[i][j] = (i == j ? laurent_poly(1) : laurent_poly()) - b[i][j];

    // Bareiss elimination
    int sign = 1;
    laurent_poly prev(1);
    for (int k = 0; k + 1 < d; ++k) {
        if (b[k][k].is_zero()) {
            int piv = k + 1;
            while (piv < d && b[piv][k].is_zero()) ++piv;
            if (piv == d) return laurent_poly();
            std::swap(b[k], b[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < d; ++i) {
            for (int j = k + 1; j < d; ++j)
                b[i][j] = (b[i][j] * b[k][k] - b[i][k] * b[k][j]).divided_exactly_by(prev);
            b[i][k] = laurent_poly();
        }
        prev = b[k][k];
    }
    laurent_poly det = b[d - 1][d - 1];
    if (sign < 0) det = -det;
    return det.divided_exactly_by(detail::geometric_sum(s)).unit_normalized();
}

// Cheap one-sided test: true means the Alexander polynomial is certainly not a unit,
// so the closure is knotted. A false answer proves nothing.
inline bool alexander_refutes_unknot(const braid_word& w) {
    detail::require_knot(w, "alexander_refutes_unknot");
    const int s = w.strands;
    if (s == 1) return false;
    // exponents of det(I - rho(w)) lie in [-K, K]
    const long long K = static_cast<long long>(s) * (static_cast<long long>(w.letters.size()) + 1);
    for (std::size_t k = 0; k < 2; ++k) {
        const auto P = modular::prime_at(k);
        const modular::u64 p = P.p;
        for (modular::u64 x0 : {modular::u64{3} + k, modular::u64{1000003} + 7 * k}) {
            modular::u64 g = 0, xp = 1;
            for (int e = 0; e < s; ++e) {
                g = modular::add(g, xp, p);
                xp = modular::mul(xp, x0, p);
            }
            if (g == 0) continue;
            const modular::u64 v = modular::mul(detail::burau_char_value(w, x0, p), modular::inv(g, p), p);
            if (v == 0) return true;
            // is v = +-x0^e for some |e| <= K ?
            bool unit = false;
            modular::u64 up = 1, down = 1;
            const modular::u64 x0i = modular::inv(x0, p);
            for (long long e = 0; e <= K && !unit; ++e) {
                if (v == up || v == p - up || v == down || v == p - down) unit = true;
                up = modular::mul(up, x0, p);
                down = modular::mul(down, x0i, p);
            }
            if (!unit) return true;
        }
    }
    return false;
}

// Jones polynomial of the closure in the variable t, from the Kauffman bracket evaluated
// by a Temperley-Lieb transfer over the braid: each crossing is A * id + A^-1 * e_i
// (or with A and A^-1 exchanged for negative letters), then V = (-A^3)^-writhe <K>
// with A = t^(-1/4).
inline laurent_poly jones_kauffman(const braid_word& w, int max_crossings = 24) {
    w.validate();
    if (static_cast<int>(w.letters.size()) > max_crossings)
        throw too_large("jones_kauffman: " + std::to_string(w.letters.size()) + " crossings exceed budget " +
                        std::to_string(max_crossings));
    if (closure_components(w) != 1) throw std::invalid_argument("jones_kauffman: closure is not a knot");
    const int s = w.strands;
    const laurent_poly delta = laurent_poly::monomial(-1, 2) + laurent_poly::monomial(-1, -2);

    // matching of 2s boundary points: 0..s-1 on top, s..2s-1 at the bottom
    using matching = std::vector<int>;
    std::map<matching, laurent_poly> state;
    {
        matching id(2 * s);
        for (int j = 0; j < s; ++j) {
            id[j] = s + j;
            id[s + j] = j;
        }
        state[id] = laurent_poly(1);
    }
    for (int l : w.letters) {
        const int i = std::abs(l) - 1;
        const int a = s + i, b = s + i + 1;
        const laurent_poly c_id = laurent_poly::monomial(1, l > 0 ? 1 : -1);
        const laurent_poly c_e = laurent_poly::monomial(1, l > 0 ? -1 : 1);
        std::map<matching, laurent_poly> next;
        for (const auto& [mt, poly] : state) {
            next[mt] += c_id * poly;
            matching e = mt;
            laurent_poly coeff = c_e * poly;
            if (e[a] == b) {
                coeff *= delta;
            } else {
                const int pa = e[a], pb = e[b];
                e[pa] = pb;
                e[pb] = pa;
                e[a] = b;
                e[b] = a;
            }
            next[e] += coeff;
        }
        state.clear();
        for (auto& [mt, poly] : next)
            if (!poly.is_zero()) state.emplace(mt, std::move(poly));
    }

    laurent_poly bracket;
    for (const auto& [mt, poly] : state) {
        // close: top j is joined to bottom j outside the braid
        std::vector<char> seen(2 * s, 0);
        int loops = 0;
        for (int start = 0; start < s; ++start) {
            if (seen[start]) continue;
            ++loops;
            int p = start;
            while (!seen[p]) {
                seen[p] = 1;
                const int q = mt[p];
                seen[q] = 1;
                p = q < s ? q + s : q - s;
            }
        }
        laurent_poly term = poly;
        for (int k = 1; k < loops; ++k) term *= delta;
        bracket += term;
    }

    const auto counts = crossing_counts(w);
    const long long writhe = counts.k_plus - counts.k_minus;
    laurent_poly f = bracket.shifted(static_cast<int>(-3 * writhe));
    if (writhe % 2 != 0) f = -f;
    laurent_poly v;
    for (const auto& [e, c] : f.terms()) {
        if (e % 4 != 0) throw std::logic_error("jones_kauffman: exponent not divisible by 4");
        v.add_term(-e / 4, c);
    }
    return v;
}

}  // namespace scurve
