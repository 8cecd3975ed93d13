#include <scurve/records.hpp>
#include <scurve/scurve.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

using namespace scurve;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int exit_usage = 2;
constexpr int exit_parse = 3;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check_t(int t) {
    if (t == 0) throw usage_error("--t 0 has no case analysis");
}

essential_curve curve_arg(const std::string& text) {
    try {
        return parse_curve(text);
    } catch (const curve_error& e) {
        throw usage_error(e.what());
    }
}

pattern_filter filter_arg(const std::string& s) {
    if (s == "loop") return pattern_filter::loop;
    if (s == "inf") return pattern_filter::infinity;
    return pattern_filter::both;
}

void print_rows(const std::vector<output_record>& rows, const std::string& format, bool details) {
    if (format == "json") {
        ojson arr = ojson::array();
        for (const auto& r : rows) arr.push_back(to_json(r, details));
        std::cout << arr.dump(2) << "\n";
        return;
    }
    std::cout << tsv_header() << "\n";
    for (const auto& r : rows) std::cout << to_tsv(r) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Essential curves on genus one Seifert surfaces of twist knots"};
    app.require_subcommand(1);
    std::string format = "tsv";
    int t = 0;
    std::string curve_text;

    auto* en = app.add_subcommand("enumerate", "classify every coprime (m,n) with m+n <= max-sum");
    int max_sum = 10;
    std::string pat = "both";
    unsigned workers = 0;
    en->add_option("--t", t, "twist parameter")->required();
    en->add_option("--max-sum", max_sum, "largest m+n")->check(CLI::Range(2, 100000));
    en->add_option("--pattern", pat)->check(CLI::IsMember({"loop", "inf", "both"}));
    en->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));
    en->add_option("--workers", workers, "threads (0 = all cores)");

    auto* br = app.add_subcommand("braid", "print the braid word of a curve");
    bool unreduced = false;
    br->add_option("--t", t)->required();
    br->add_option("--curve", curve_text, "m,n,loop or m,n,inf")->required();
    br->add_flag("--unreduced", unreduced, "word read straight off the surface");

    auto* inv = app.add_subcommand("invariants", "polynomials of braid closures read from stdin, one word per line");
    bool want_alex = false, want_jones = false;
    int max_kauffman = 24;
    inv->add_flag("--alexander", want_alex);
    inv->add_flag("--jones", want_jones);
    inv->add_option("--max-kauffman", max_kauffman, "crossing budget for the Jones state sum")->check(CLI::PositiveNumber);
    inv->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));

    auto* cl = app.add_subcommand("classify", "verdict for one curve");
    cl->add_option("--t", t)->required();
    cl->add_option("--curve", curve_text)->required();
    cl->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));

    auto* su = app.add_subcommand("surgeries", "1/(s+1) and 1/(s-1) for a certified curve");
    su->add_option("--t", t)->required();
    su->add_option("--curve", curve_text)->required();

    auto* co = app.add_subcommand("corollary", "surgery coefficients bounding contractible manifolds");
    co->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*en) {
            check_t(t);
            const auto rows = enumerate_records({t}, enumerate_curves(max_sum, filter_arg(pat)), workers);
            print_rows(rows, format, false);
        } else if (*br) {
            check_t(t);
            const twist_knot k{t};
            const essential_curve c = curve_arg(curve_text);
            std::cout << to_text(unreduced ? unreduced_word(k, c) : synthesize(k, c).word) << "\n";
        } else if (*inv) {
            if (!want_alex && !want_jones) want_alex = true;
            std::string line;
            ojson arr = ojson::array();
            int line_no = 0;
            while (std::getline(std::cin, line)) {
                ++line_no;
                if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
                if (!line.empty() && line.back() == '\r') line.pop_back();
                braid_word w;
                try {
                    w = parse_braid(line);
                } catch (const parse_error& e) {
                    std::cerr << "line " << line_no << ": " << e.what() << "\n";
                    return exit_parse;
                }
                std::string alex, jones;
                if (want_alex) alex = alexander(w).to_string("t");
                if (want_jones) jones = jones_kauffman(w, max_kauffman).to_string("t");
                if (format == "json") {
                    ojson j;
                    j["braid"] = to_text(w);
                    if (want_alex) j["alexander"] = alex;
                    if (want_jones) j["jones"] = jones;
                    arr.push_back(j);
                } else if (want_alex && want_jones) {
                    std::cout << alex << "\t" << jones << "\n";
                } else {
                    std::cout << (want_alex ? alex : jones) << "\n";
                }
            }
            if (format == "json") std::cout << arr.dump(2) << "\n";
        } else if (*cl) {
            check_t(t);
            print_rows({make_record({t}, curve_arg(curve_text))}, format, true);
        } else if (*su) {
            check_t(t);
            for (const auto& r : fickle_surgeries({t}, curve_arg(curve_text))) std::cout << to_string(r) << "\n";
        } else if (*co) {
            const auto rows = corollary_report();
            if (format == "json") {
                ojson arr = ojson::array();
                for (const auto& r : rows)
                    arr.push_back({{"knot", r.knot},
                                   {"curve", r.curves},
                                   {"pattern", r.patterns},
                                   {"self_linking", r.self_linking},
                                   {"coefficients", r.coefficients}});
                std::cout << arr.dump(2) << "\n";
            } else {
                std::cout << corollary_tsv(rows);
            }
        }
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const too_large& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
