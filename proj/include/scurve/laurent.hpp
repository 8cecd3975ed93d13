#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <sstream>
#include <string>
#include <utility>

namespace scurve {

using bigint = boost::multiprecision::cpp_int;

// Laurent polynomial in one variable with exact integer coefficients.
// Zero coefficients are never stored, so the empty map is the zero polynomial.
class laurent_poly {
public:
    laurent_poly() = default;
    laurent_poly(long long c) { if (c != 0) terms_[0] = c; }

    static laurent_poly monomial(bigint c, int e) {
        laurent_poly p;
        if (c != 0) p.terms_[e] = std::move(c);
        return p;
    }

    const std::map<int, bigint>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
    int span() const { return max_degree() - min_degree(); }

    bigint coeff(int e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? bigint(0) : it->second;
    }

    void add_term(int e, const bigint& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    laurent_poly& operator+=(const laurent_poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    laurent_poly& operator-=(const laurent_poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    laurent_poly operator-() const {
        laurent_poly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    friend laurent_poly operator+(laurent_poly a, const laurent_poly& b) { return a += b; }
    friend laurent_poly operator-(laurent_poly a, const laurent_poly& b) { return a -= b; }
    friend laurent_poly operator*(const laurent_poly& a, const laurent_poly& b) {
        laurent_poly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    laurent_poly& operator*=(const laurent_poly& o) { return *this = *this * o; }
    friend bool operator==(const laurent_poly& a, const laurent_poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const laurent_poly& a, const laurent_poly& b) { return !(a == b); }

    // multiply by x^k
    laurent_poly shifted(int k) const {
        laurent_poly r;
        for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
        return r;
    }

    // x -> x^-1
    laurent_poly reflected() const {
        laurent_poly r;
        for (const auto& [e, c] : terms_) r.terms_[-e] = c;
        return r;
    }

    bigint eval_at_one() const {
        bigint s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    bool is_palindromic() const { return *this == reflected(); }

    // Multiply by the unit +-x^k that centres the exponents around zero
    // (lowest exponent = -floor(span/2)) and makes the lowest coefficient positive.
    laurent_poly unit_normalized() const {
        if (is_zero()) return *this;
        laurent_poly r = shifted(-min_degree() - span() / 2);
        if (r.terms_.begin()->second < 0) r = -r;
        return r;
    }

    // Exact division by a divisor whose leading coefficient is +-1.
    // Throws if the remainder is nonzero.
    laurent_poly divided_exactly_by(const laurent_poly& d) const;

    // Text form: ascending exponents, e.g. "t^-1 - 1 + t", "2*t^-1 - 3 + 2*t".
    std::string to_string(const std::string& var = "t") const;

private:
    std::map<int, bigint> terms_;
};

inline laurent_poly laurent_poly::divided_exactly_by(const laurent_poly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    const int dtop = d.max_degree();
    const bigint lead = d.terms_.rbegin()->second;
    laurent_poly rem = *this, q;
    while (!rem.is_zero() && rem.span() >= d.span()) {
        const auto& [e, c] = *rem.terms_.rbegin();
        if (c % lead != 0) break;
        laurent_poly step = monomial(c / lead, e - dtop);
        rem -= step * d;
        q += step;
    }
    if (!rem.is_zero()) throw std::domain_error("polynomial division is not exact");
    return q;
}

inline std::string laurent_poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bigint a = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            out << a;
            continue;
        }
        if (a != 1) out << a << "*";
        out << var;
        if (e != 1) out << "^" << e;
    }
    return out.str();
}

}  // namespace scurve
