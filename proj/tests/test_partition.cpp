#include "doctest.h"

#include <set>

#include "dpgens/partition.hpp"
#include "dpgens/report.hpp"

using namespace dpgens;

namespace {

using Cells = std::vector<std::pair<int, int>>;

Filling from_columns(std::vector<int> shape, std::vector<std::vector<int>> top_down) {
    std::vector<std::vector<int>> cols;
    for (auto& c : top_down) cols.emplace_back(c.rbegin(), c.rend());
    return Filling(Partition(std::move(shape)), std::move(cols));
}

}  // namespace

TEST_CASE("parse and print") {
    CHECK(Partition::parse("4,4,2,1").parts() == std::vector<int>{4, 4, 2, 1});
    CHECK(Partition::parse("5,4^2,3").parts() == std::vector<int>{5, 4, 4, 3});
    CHECK(Partition::parse(" ( 3, 2 ) ").parts() == std::vector<int>{3, 2});
    CHECK(Partition::parse("1^4").str() == "1,1,1,1");
    CHECK(Partition::parse("5,4,4,3").compact_str() == "5,4^2,3");
    CHECK(Partition::parse("").empty());
    CHECK_THROWS_AS(Partition::parse("2,3"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("4,,1"), ParseError);
    try {
        Partition::parse("4,x");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
    for (int n = 0; n <= 10; ++n)
        for (const auto& p : partitions_of(n, n)) {
            CHECK(Partition::parse(p.str()) == p);
            CHECK(Partition::parse(p.compact_str()) == p);
        }
}

TEST_CASE("partition counts and conjugation") {
    const std::vector<std::size_t> counts = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int n = 0; n <= 12; ++n) {
        auto ps = partitions_of(n, n);
        CHECK(ps.size() == counts[n]);
        for (const auto& p : ps) {
            CHECK(p.size() == n);
            CHECK(conjugate(conjugate(p)) == p);
        }
    }
    CHECK(conjugate(Partition({4, 4, 2, 1})).parts() == std::vector<int>{4, 3, 2, 2});
    CHECK(partitions_of(5, 2).size() == 3);
}

TEST_CASE("delta") {
    CHECK(delta(Partition({4, 4, 2, 1})) == std::vector<int>{0, 0, 0, 0, 0, 0, 0, 2, 4, 7, 11});
    CHECK(delta(Partition({3})) == std::vector<int>{1, 2, 3});
    CHECK(delta(Partition({1, 1, 1})) == std::vector<int>{0, 0, 3});
    for (int n = 1; n <= 12; ++n)
        for (const auto& p : partitions_of(n, n)) {
            auto d = delta(p);
            REQUIRE(d.size() == static_cast<std::size_t>(n));
            CHECK(d.back() == n);
            for (int k = 1; k < n; ++k) CHECK(d[k - 1] <= d[k]);
        }
}

TEST_CASE("regular filling fixtures") {
    CHECK(regular_filling(Partition({4, 4, 2, 1})) ==
          from_columns({4, 4, 2, 1}, {{1, 2, 3, 11}, {4, 5, 10}, {6, 9}, {7, 8}}));
    CHECK(regular_filling(Partition({5, 4, 1})) ==
          from_columns({5, 4, 1}, {{1, 2, 10}, {3, 9}, {4, 8}, {5, 7}, {6}}));
    CHECK(regular_filling(Partition({5, 5, 1, 1})) ==
          from_columns({5, 5, 1, 1}, {{1, 2, 3, 12}, {4, 11}, {5, 10}, {6, 9}, {7, 8}}));
    CHECK(render_ascii(regular_filling(Partition({4, 4, 2, 1}))) == " 1\n 2  4\n 3  5  6  7\n11 10  9  8\n");
    CHECK(render_ascii(regular_filling(Partition({1}))) == "1\n");
}

TEST_CASE("antidiagonal filling fixture") {
    Filling af = antidiagonal_filling(Partition({4, 4, 2, 1}));
    CHECK(af == from_columns({4, 4, 3, 3, 2, 2, 2, 1, 1, 1, 1},
                             {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}, {4, 5, 6, 7, 8, 9, 10}, {6, 7, 8, 9}, {7, 8}}));
    for (int c = 0; c < af.columns(); ++c) CHECK(af.bottom(c) == 11 - c);
}

TEST_CASE("deleting repeats from the antidiagonal filling gives the regular filling") {
    for (int n = 1; n <= 10; ++n)
        for (const auto& p : partitions_of(n, n))
            CHECK_MESSAGE(rightmost_deletion(antidiagonal_filling(p)) == regular_filling(p), p.str());
}

TEST_CASE("top cells") {
    auto td = top_cells(Partition({4, 4, 2, 1}));
    CHECK(td.t == 3);
    CHECK(td.s == 3);
    CHECK_FALSE(td.b_s.has_value());
    CHECK(td.b == std::vector<int>{4, 6, 7});
    auto td2 = top_cells(Partition({5, 4, 1}));
    CHECK(td2.b == std::vector<int>{3, 4, 5});
    CHECK(td2.b_s == 6);
    CHECK(td2.labeled() == Cells{{1, 3}, {2, 4}, {3, 5}, {4, 6}});
}

TEST_CASE("Weyman diagram fixtures") {
    auto w = weyman_diagram(Partition({4, 4, 2, 1}));
    REQUIRE(w.columns() == 4);
    Cells ranges;
    for (int i = 0; i < w.columns(); ++i) ranges.push_back({w.top(i), w.bottom(i)});
    CHECK(ranges == Cells{{1, 11}, {4, 10}, {6, 9}, {7, 8}});

    auto w2 = weyman_diagram(Partition({5, 4, 1}));
    ranges.clear();
    for (int i = 0; i < w2.columns(); ++i) ranges.push_back({w2.top(i), w2.bottom(i)});
    CHECK(ranges == Cells{{1, 10}, {3, 9}, {4, 8}, {5, 7}, {6, 6}});

    std::string art = render_ascii(w, conjectured_cells(Partition({4, 4, 2, 1})));
    CHECK(art.find(" 4 | X [X] .  .") != std::string::npos);
    CHECK(art.find(" 7 | X  X  X [X]") != std::string::npos);
}

TEST_CASE("conjectured cells match the published diagrams") {
    CHECK(conjectured_cells(Partition({4, 4, 2, 1})) == Cells{{1, 4}, {2, 6}, {3, 7}});
    CHECK(conjectured_cells(Partition({5, 4, 1})) == Cells{{1, 3}, {2, 4}, {3, 5}, {4, 6}});
    CHECK(conjectured_cells(Partition({5, 4, 4, 3})) == Cells{{1, 4}, {4, 12}});
    CHECK(conjectured_cells(Partition({5, 5, 1, 1})) == Cells{{1, 4}, {2, 5}, {3, 6}, {4, 7}});
    CHECK(conjectured_cells(Partition({6, 5, 1, 1, 1})) == Cells{{1, 5}, {2, 6}, {3, 7}, {4, 8}, {5, 9}});
}

TEST_CASE("Weyman tops agree with regular filling tops on labeled columns") {
    for (int n = 1; n <= 12; ++n)
        for (const auto& p : partitions_of(n, n)) {
            auto w = weyman_diagram(p);
            auto rf = regular_filling(p);
            CHECK(w.columns() == p[1]);
            for (auto [i, b] : top_cells(p).labeled()) {
                CHECK_MESSAGE(w.top(i) == rf.top(i), p.str());
                CHECK(w.top(i) == b);
            }
            for (auto [i, q] : conjectured_cells(p)) CHECK(passes_segment_test(w, i, q));
        }
}

TEST_CASE("filling serialization round trips") {
    for (int n = 1; n <= 9; ++n)
        for (const auto& p : partitions_of(n, n)) {
            for (const Filling& f : {regular_filling(p), antidiagonal_filling(p)}) {
                CHECK(filling_from_json(to_json(f)) == f);
                CHECK(parse_filling_ascii(render_ascii(f)) == f);
            }
        }
    auto j = to_json(regular_filling(Partition({2, 1})));
    CHECK(j["entries"]["1,0"] == 1);
    CHECK(j["entries"]["0,0"] == 3);
    CHECK(j["entries"]["0,1"] == 2);
}
