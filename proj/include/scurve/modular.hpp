#pragma once

// Word-size modular arithmetic for the Alexander oracle: 62-bit primes p = c*2^32 + 1,
// a radix-2 number theoretic transform, and Chinese remaindering into big integers.

#include "laurent.hpp"

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace scurve::modular {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
inline u64 add(u64 a, u64 b, u64 p) { a += b; return a >= p ? a - p : a; }
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

inline u64 pow(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

inline u64 inv(u64 a, u64 p) {
    if (a % p == 0) throw std::domain_error("inverse of zero");
    return pow(a, p - 2, p);
}

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
        if (n % q == 0) return n == q;
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r && composite; ++i) {
            x = mul(x, x, n);
            if (x == n - 1) composite = false;
        }
        if (composite) return false;
    }
    return true;
}

struct ntt_prime {
    u64 p;
    u64 generator;  // primitive root mod p
};

constexpr int max_log_size = 32;

namespace detail {

inline ntt_prime make_prime(u64 c) {
    const u64 p = (c << max_log_size) + 1;
    std::vector<u64> factors{2};
    u64 rest = c;
    for (u64 q = 2; q * q <= rest; ++q) {
        if (rest % q) continue;
        if (q != 2) factors.push_back(q);
        while (rest % q == 0) rest /= q;
    }
    if (rest > 1 && rest != 2) factors.push_back(rest);
    for (u64 g = 2;; ++g) {
        bool ok = true;
        for (u64 q : factors)
            if (pow(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return {p, g};
    }
}

}  // namespace detail

// The k-th prime of the family (largest first); grows on demand.
inline ntt_prime prime_at(std::size_t k) {
    static std::mutex mu;
    static std::vector<ntt_prime> primes;
    static u64 next_c = (1ULL << 30) - 1;
    std::lock_guard<std::mutex> lock(mu);
    while (primes.size() <= k) {
        if (next_c == 0) throw std::runtime_error("ran out of NTT primes");
        const u64 c = next_c--;
        if (is_prime((c << max_log_size) + 1)) primes.push_back(detail::make_prime(c));
    }
    return primes[k];
}

// In-place inverse transform: a[k] <- (1/N) sum_j a[j] w^(-jk), w of order N = a.size().
inline void inverse_ntt(std::vector<u64>& a, const ntt_prime& P) {
    const u64 p = P.p;
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const u64 w_len = inv(pow(P.generator, (p - 1) / len, p), p);
        for (std::size_t i = 0; i < n; i += len) {
            u64 w = 1;
            for (std::size_t j = 0; j < len / 2; ++j) {
                const u64 u = a[i + j], v = mul(a[i + j + len / 2], w, p);
                a[i + j] = add(u, v, p);
                a[i + j + len / 2] = sub(u, v, p);
                w = mul(w, w_len, p);
            }
        }
    }
    const u64 n_inv = inv(n % p, p);
    for (auto& x : a) x = mul(x, n_inv, p);
}

// Incremental Chinese remaindering with symmetric representatives.
class crt_accumulator {
public:
    explicit crt_accumulator(std::size_t size) : value_(size, 0) {}

    void add_residues(const std::vector<u64>& r, u64 p) {
        if (modulus_ == 0) {
            for (std::size_t i = 0; i < r.size(); ++i) value_[i] = bigint(r[i]);
            modulus_ = p;
            return;
        }
        const u64 m_mod_p = static_cast<u64>(modulus_ % p);
        const u64 m_inv = inv(m_mod_p, p);
        for (std::size_t i = 0; i < r.size(); ++i) {
            bigint v = value_[i] % p;
            if (v < 0) v += p;
            const u64 cur = static_cast<u64>(v);
            const u64 t = mul(sub(r[i], cur, p), m_inv, p);
            if (t) value_[i] += modulus_ * t;
        }
        modulus_ *= p;
    }

    // Values in (-M/2, M/2].
    std::vector<bigint> symmetric() const {
        std::vector<bigint> out(value_);
        const bigint half = modulus_ / 2;
        for (auto& v : out)
            if (v > half) v -= modulus_;
        return out;
    }

    const bigint& modulus() const { return modulus_; }

private:
    std::vector<bigint> value_;
    bigint modulus_ = 0;
};

}  // namespace scurve::modular
