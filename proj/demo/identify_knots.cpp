// Braid words and polynomials for a handful of curves whose knot types are known.
#include <scurve/scurve.hpp>

#include <iostream>

int main() {
    using namespace scurve;
    struct item {
        int t;
        essential_curve c;
        const char* name;
    };
    const item items[] = {
        {-1, {1, 2, pattern::loop}, "left-handed trefoil"},
        {3, {5, 2, pattern::infinity}, "5_2"},
        {3, {7, 3, pattern::infinity}, "10_132"},
        {4, {3, 2, pattern::loop}, "8_20"},
        {5, {3, 2, pattern::loop}, "P(5,-3,2)"},
    };
    for (const auto& it : items) {
        const auto syn = synthesize({it.t}, it.c);
        std::cout << "K_" << it.t << " " << to_text(it.c) << "  [" << it.name << "]\n";
        std::cout << "  case      " << to_string(syn.label) << ", " << to_string(syn.sign) << "\n";
        std::cout << "  braid     " << to_text(syn.word) << "\n";
        std::cout << "  alexander " << alexander(syn.word).to_string("t") << "\n";
        try {
            std::cout << "  jones     " << jones_kauffman(syn.word).to_string("t") << "\n";
        } catch (const too_large&) {
            std::cout << "  jones     (too many crossings)\n";
        }
    }
}
