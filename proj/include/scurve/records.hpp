#pragma once

// Flat per-curve records shared by the command line tool and its tests.

#include "classify.hpp"
#include "surgery.hpp"
#include "synthesis.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace scurve {

struct output_record {
    int m = 0;
    int n = 0;
    pattern pat = pattern::loop;
    int t = 0;
    case_label label = case_label::trivial;
    sign_class sign = sign_class::empty;
    int strands = 1;
    long long k_plus = 0;
    long long k_minus = 0;
    std::optional<long long> genus;
    tri unknotted = tri::undetermined;
    tri slice = tri::undetermined;
    long long self_linking = 0;
    certificate_kind certificate = certificate_kind::none;
    std::vector<std::pair<int, int>> trace;
    std::optional<long long> bound;
};

inline output_record make_record(const twist_knot& k, const essential_curve& c) {
    const synthesis_result syn = synthesize(k, c);
    const verdict v = classify(k, c);
    const auto counts = crossing_counts(syn.word);
    output_record r;
    r.m = c.m;
    r.n = c.n;
    r.pat = c.pat;
    r.t = k.t;
    r.label = syn.label;
    r.sign = syn.sign;
    r.strands = syn.word.strands;
    r.k_plus = counts.k_plus;
    r.k_minus = counts.k_minus;
    r.genus = v.genus;
    r.unknotted = v.unknotted;
    r.slice = v.slice;
    r.self_linking = self_linking(k, c);
    r.certificate = v.certificate;
    r.trace = v.trace;
    r.bound = v.bound;
    return r;
}

inline const std::vector<std::string>& record_fields() {
    static const std::vector<std::string> f{"m",       "n",       "pattern", "t",         "case",  "sign",         "strands",
                                            "k_plus",  "k_minus", "genus",   "unknotted", "slice", "self_linking", "certificate"};
    return f;
}

inline std::string tsv_header() {
    std::string out;
    for (const auto& f : record_fields()) out += (out.empty() ? "" : "\t") + f;
    return out;
}

inline std::string to_tsv(const output_record& r) {
    auto opt = [](const std::optional<long long>& v) { return v ? std::to_string(*v) : std::string("-"); };
    std::string out = std::to_string(r.m) + "\t" + std::to_string(r.n) + "\t" + to_string(r.pat) + "\t" + std::to_string(r.t) +
                      "\t" + to_string(r.label) + "\t" + to_string(r.sign) + "\t" + std::to_string(r.strands) + "\t" +
                      std::to_string(r.k_plus) + "\t" + std::to_string(r.k_minus) + "\t" + opt(r.genus) + "\t" +
                      to_string(r.unknotted) + "\t" + to_string(r.slice) + "\t" + std::to_string(r.self_linking) + "\t" +
                      to_string(r.certificate);
    return out;
}

// with_details adds the certificate payload (trace, bound) after the shared fields.
inline nlohmann::ordered_json to_json(const output_record& r, bool with_details = false) {
    nlohmann::ordered_json j;
    j["m"] = r.m;
    j["n"] = r.n;
    j["pattern"] = to_string(r.pat);
    j["t"] = r.t;
    j["case"] = to_string(r.label);
    j["sign"] = to_string(r.sign);
    j["strands"] = r.strands;
    j["k_plus"] = r.k_plus;
    j["k_minus"] = r.k_minus;
    j["genus"] = r.genus ? nlohmann::ordered_json(*r.genus) : nlohmann::ordered_json(nullptr);
    j["unknotted"] = to_string(r.unknotted);
    j["slice"] = to_string(r.slice);
    j["self_linking"] = r.self_linking;
    j["certificate"] = to_string(r.certificate);
    if (with_details) {
        auto tr = nlohmann::ordered_json::array();
        for (auto [a, b] : r.trace) tr.push_back({a, b});
        j["trace"] = tr;
        j["bound"] = r.bound ? nlohmann::ordered_json(*r.bound) : nlohmann::ordered_json(nullptr);
    }
    return j;
}

enum class pattern_filter { loop, infinity, both };

// Coprime (m,n) with m+n <= max_sum in lexicographic order, infinity before loop. The
// trivial curves (1,0) and (0,1) appear once, as loop curves, under every filter.
inline std::vector<essential_curve> enumerate_curves(int max_sum, pattern_filter filter) {
    std::vector<essential_curve> out;
    for (int m = 0; m <= max_sum; ++m)
        for (int n = 0; m + n <= max_sum; ++n) {
            if ((m == 0 && n == 0) || std::gcd(m, n) != 1) continue;
            essential_curve probe{m, n, pattern::loop};
            if (probe.is_trivial()) {
                out.push_back(probe);
                continue;
            }
            if (filter != pattern_filter::loop) out.push_back({m, n, pattern::infinity});
            if (filter != pattern_filter::infinity) out.push_back({m, n, pattern::loop});
        }
    return out;
}

// Records in input order; the work is spread over threads.
inline std::vector<output_record> enumerate_records(const twist_knot& k, const std::vector<essential_curve>& curves,
                                                    unsigned workers = 0) {
    std::vector<output_record> out(curves.size());
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, curves.size())));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto run = [&] {
        for (std::size_t i = next++; i < curves.size() && !failed; i = next++) {
            try {
                out[i] = make_record(k, curves[i]);
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace scurve
