#include <scurve/records.hpp>

#include <gtest/gtest.h>

using namespace scurve;

TEST(Enumerate, OrderAndFilters) {
    const auto all = enumerate_curves(3, pattern_filter::both);
    std::vector<std::string> text;
    for (const auto& c : all) text.push_back(to_text(c));
    EXPECT_EQ(text, (std::vector<std::string>{"0,1,loop", "1,0,loop", "1,1,inf", "1,1,loop", "1,2,inf", "1,2,loop", "2,1,inf",
                                              "2,1,loop"}));
    const auto loops = enumerate_curves(3, pattern_filter::loop);
    EXPECT_EQ(loops.size(), 5u);
    const auto infs = enumerate_curves(3, pattern_filter::infinity);
    EXPECT_EQ(infs.size(), 5u);
    EXPECT_EQ(infs.front(), curve_new(0, 1, pattern::loop));
}

TEST(Enumerate, DeterministicAcrossWorkerCounts) {
    const auto curves = enumerate_curves(18, pattern_filter::both);
    const auto a = enumerate_records({3}, curves, 1);
    const auto b = enumerate_records({3}, curves, 7);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(to_tsv(a[i]), to_tsv(b[i]));
}

TEST(Enumerate, UnknotCounts) {
    auto count = [](int t, int max_sum) {
        int k = 0;
        for (const auto& r : enumerate_records({t}, enumerate_curves(max_sum, pattern_filter::both)))
            k += r.unknotted == tri::yes;
        return k;
    };
    EXPECT_EQ(count(-1, 10), 6);
    EXPECT_EQ(count(2, 10), 5);
    std::vector<std::string> f8;
    for (const auto& r : enumerate_records({1}, enumerate_curves(3, pattern_filter::both)))
        if (r.unknotted == tri::yes) f8.push_back(std::to_string(r.m) + "," + std::to_string(r.n) + "," + to_string(r.pat));
    EXPECT_EQ(f8, (std::vector<std::string>{"0,1,loop", "1,0,loop", "1,1,inf", "1,1,loop", "1,2,loop", "2,1,inf"}));
}

TEST(Records, TsvAndJsonShareFieldOrder) {
    const auto r = make_record({4}, curve_new(3, 2, pattern::loop));
    const auto j = to_json(r);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys, record_fields());
    EXPECT_EQ(tsv_header(), "m\tn\tpattern\tt\tcase\tsign\tstrands\tk_plus\tk_minus\tgenus\tunknotted\tslice\tself_linking\tcertificate");
    EXPECT_EQ(to_tsv(r), "3\t2\tloop\t4\tLeftoverLoop\tmixed\t3\t4\t6\t3\tno\tyes\t1\tPretzelFamily");
    const auto d = to_json(make_record({1}, curve_new(8, 5, pattern::infinity)), true);
    EXPECT_EQ(d["trace"].dump(), "[[8,5],[3,2],[1,1]]");
    EXPECT_TRUE(d["bound"].is_null());
}
