// Lists the unknotted essential curves for a few twist knots.
#include <scurve/records.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace scurve;
    const int max_sum = argc > 1 ? std::stoi(argv[1]) : 20;
    for (int t : {-3, -2, -1, 1, 2, 3, 4}) {
        std::cout << "K_" << t << ":";
        for (const auto& c : enumerate_curves(max_sum, pattern_filter::both)) {
            const verdict v = classify({t}, c);
            if (v.unknotted == tri::yes) std::cout << " (" << c.m << "," << c.n << ")" << to_string(c.pat);
        }
        std::cout << "\n";
    }
}
