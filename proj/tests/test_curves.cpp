#include <scurve/curves.hpp>

#include <gtest/gtest.h>

#include <numeric>

using namespace scurve;

TEST(CurveNew, AcceptsCoprimePairs) {
    auto c = curve_new(2, 1, pattern::infinity);
    EXPECT_EQ(c.m, 2);
    EXPECT_EQ(c.n, 1);
    EXPECT_EQ(c.pat, pattern::infinity);
}

TEST(CurveNew, RejectsBadPairs) {
    EXPECT_THROW(curve_new(4, 2, pattern::loop), curve_error);
    EXPECT_THROW(curve_new(0, 0, pattern::loop), curve_error);
    EXPECT_THROW(curve_new(-1, 2, pattern::loop), curve_error);
    EXPECT_THROW(curve_new(0, 2, pattern::loop), curve_error);
}

TEST(CurveNew, TrivialCurvesCanonicalizeToLoop) {
    EXPECT_EQ(curve_new(1, 0, pattern::infinity).pat, pattern::loop);
    EXPECT_EQ(curve_new(0, 1, pattern::infinity).pat, pattern::loop);
    // (1,1) keeps both patterns
    EXPECT_EQ(curve_new(1, 1, pattern::infinity).pat, pattern::infinity);
}

TEST(CurveText, RoundTrip) {
    for (const char* s : {"2,1,inf", "3,2,loop", "1,0,loop", "34,21,inf"}) EXPECT_EQ(to_text(parse_curve(s)), s);
    EXPECT_EQ(to_text(parse_curve("0,1,inf")), "0,1,loop");
    for (const char* s : {"", "2,1", "2,1,lop", "a,1,inf", "2, 1,inf", "-2,1,inf", "2,4,loop"})
        EXPECT_THROW(parse_curve(s), curve_error) << s;
}

TEST(CaseOf, PaperExamples) {
    EXPECT_EQ(case_of({-1}, curve_new(2, 1, pattern::infinity)), case_label::neg_a);
    EXPECT_EQ(case_of({3}, curve_new(5, 2, pattern::infinity)), case_label::leftover_infinity);
    EXPECT_EQ(case_of({1}, curve_new(8, 5, pattern::infinity)), case_label::f8_case2c);
}

TEST(CaseOf, SubcaseBoundaries) {
    EXPECT_EQ(case_of({1}, curve_new(2, 1, pattern::infinity)), case_label::f8_case2a);
    EXPECT_EQ(case_of({1}, curve_new(5, 2, pattern::infinity)), case_label::f8_case2b);
    EXPECT_EQ(case_of({1}, curve_new(1, 2, pattern::loop)), case_label::f8_case4a);
    EXPECT_EQ(case_of({1}, curve_new(2, 5, pattern::loop)), case_label::f8_case4b);
    EXPECT_EQ(case_of({1}, curve_new(3, 5, pattern::loop)), case_label::f8_case4c);
    EXPECT_EQ(case_of({1}, curve_new(3, 2, pattern::loop)), case_label::f8_case1);
    EXPECT_EQ(case_of({1}, curve_new(2, 3, pattern::infinity)), case_label::f8_case3);
    EXPECT_EQ(case_of({2}, curve_new(1, 2, pattern::infinity)), case_label::pos_case1);
    EXPECT_EQ(case_of({2}, curve_new(1, 2, pattern::loop)), case_label::pos_case2);
    EXPECT_EQ(case_of({2}, curve_new(5, 2, pattern::infinity)), case_label::pos_case3a);
    EXPECT_EQ(case_of({2}, curve_new(3, 2, pattern::infinity)), case_label::pos_case3b);
    EXPECT_EQ(case_of({2}, curve_new(5, 2, pattern::loop)), case_label::pos_case4a);
    EXPECT_EQ(case_of({2}, curve_new(3, 2, pattern::loop)), case_label::pos_case4b);
    EXPECT_EQ(case_of({4}, curve_new(3, 2, pattern::loop)), case_label::leftover_loop);
    // boundary m = tn
    EXPECT_EQ(case_of({2}, curve_new(2, 1, pattern::loop)), case_label::pos_case4a);
    EXPECT_EQ(case_of({3}, curve_new(3, 1, pattern::infinity)), case_label::pos_case3a);
}

TEST(CaseOf, RejectsZeroTwist) { EXPECT_THROW(case_of({0}, curve_new(2, 1, pattern::loop)), std::invalid_argument); }

TEST(CaseOf, TotalOnGrid) {
    for (int t = -5; t <= 5; ++t) {
        if (t == 0) continue;
        for (int m = 0; m <= 50; ++m)
            for (int n = 0; m + n <= 50; ++n) {
                if ((m == 0 && n == 0) || std::gcd(m, n) != 1) continue;
                for (pattern p : {pattern::loop, pattern::infinity}) {
                    const auto c = curve_new(m, n, p);
                    case_label lab{};
                    ASSERT_NO_THROW(lab = case_of({t}, c)) << t << " " << to_text(c);
                    // label ranges
                    if (t <= -1) { EXPECT_TRUE(lab == case_label::trivial || lab <= case_label::neg_d); }
                    if (lab == case_label::leftover_loop || lab == case_label::leftover_infinity) {
                        EXPECT_GE(t, 3);
                        EXPECT_GT(m, n);
                        EXPECT_LT(m - t * n, 0);
                    }
                    if (lab == case_label::leftover_infinity) { EXPECT_GT(m - n, n); }
                    if (lab == case_label::pos_case3a || lab == case_label::pos_case4a) { EXPECT_GE(m - t * n, 0); }
                    if (lab == case_label::pos_case3b || lab == case_label::pos_case4b) { EXPECT_LT(m - n, n); }
                }
            }
    }
}

TEST(CaseOf, StableUnderCanonicalization) {
    for (int t : {-3, -1, 1, 2, 5}) {
        EXPECT_EQ(case_of({t}, essential_curve{1, 0, pattern::infinity}), case_of({t}, curve_new(1, 0, pattern::loop)));
        EXPECT_EQ(case_of({t}, essential_curve{0, 1, pattern::infinity}), case_of({t}, curve_new(0, 1, pattern::loop)));
    }
}
