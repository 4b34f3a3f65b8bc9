#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wv/rootspace.hpp"

using namespace wv;

namespace {
Weight ew(std::initializer_list<int> v) {
    Weight w;
    for (int x : v) w.push_back(Rat(x));
    return w;
}
} // namespace

TEST_CASE("algebra descriptor parsing") {
    CHECK(parse_algebra_id("B2").series == Series::B);
    CHECK(parse_algebra_id("B2").rank == 2);
    CHECK(parse_algebra_id("A1").rank == 1);
    CHECK_THROWS_AS(parse_algebra_id("A0"), Error);
    CHECK_THROWS_AS(parse_algebra_id("B1"), Error);
    CHECK_THROWS_AS(parse_algebra_id("D2"), Error);
    CHECK_THROWS_AS(parse_algebra_id("E5"), Error);
    CHECK_THROWS_AS(parse_algebra_id("G3"), Error);
    CHECK_THROWS_AS(parse_algebra_id("H4"), Error);
    CHECK_THROWS_AS(parse_algebra_id("B9"), Error);
    CHECK_THROWS_AS(parse_algebra_id("B"), Error);
    CHECK_THROWS_AS(parse_algebra_id("2B"), Error);
}

TEST_CASE("A1 root datum") {
    RootDatum d = build_root_datum("A1");
    REQUIRE(d.positive_roots.size() == 1);
    CHECK(d.rho == wscale(Rat(1, 2), d.simple_roots[0]));
}

TEST_CASE("B2 positive roots match the figure") {
    RootDatum d = build_root_datum("B2");
    REQUIRE(d.positive_roots.size() == 4);
    Weight a1 = ew({1, -1});
    Weight a2 = ew({0, 1});
    CHECK(d.simple_roots[0] == a1);
    CHECK(d.simple_roots[1] == a2);
    CHECK(d.is_positive_root(a1));
    CHECK(d.is_positive_root(a2));
    CHECK(d.is_positive_root(wadd(a1, a2)));
    CHECK(d.is_positive_root(wadd(a1, wscale(Rat(2), a2))));
    CHECK(d.highest_root == ew({1, 1}));
}

TEST_CASE("positive root counts across the table") {
    CHECK(build_root_datum("A3").positive_roots.size() == 6);
    CHECK(build_root_datum("G2").positive_roots.size() == 6);
    CHECK(build_root_datum("B3").positive_roots.size() == 9);
    CHECK(build_root_datum("C3").positive_roots.size() == 9);
    CHECK(build_root_datum("D4").positive_roots.size() == 12);
    CHECK(build_root_datum("F4").positive_roots.size() == 24);
    CHECK(build_root_datum("E6").positive_roots.size() == 36);
    CHECK(build_root_datum("E7").positive_roots.size() == 63);
    CHECK(build_root_datum("E8").positive_roots.size() == 120);
}

TEST_CASE("every supported datum satisfies the basic invariants") {
    std::vector<std::string> ids;
    for (int r = 1; r <= 8; ++r) ids.push_back("A" + std::to_string(r));
    for (int r = 2; r <= 8; ++r) ids.push_back("B" + std::to_string(r));
    for (int r = 2; r <= 8; ++r) ids.push_back("C" + std::to_string(r));
    for (int r = 3; r <= 8; ++r) ids.push_back("D" + std::to_string(r));
    ids.insert(ids.end(), {"E6", "E7", "E8", "F4", "G2"});
    for (const std::string& s : ids) {
        CAPTURE(s);
        RootDatum d = build_root_datum(s);
        CHECK(d.is_dominant(d.highest_root));
        for (const Rat& l : d.dynkin_labels(d.rho)) CHECK(l == Rat(1));
        for (const auto& [root, mult] : d.positive_roots) CHECK(mult == 1);
        // fundamental weight duality
        for (int i = 0; i < d.rank(); ++i) {
            auto labels = d.dynkin_labels(d.fundamental_weights[static_cast<std::size_t>(i)]);
            for (int j = 0; j < d.rank(); ++j)
                CHECK(labels[static_cast<std::size_t>(j)] == (i == j ? Rat(1) : Rat(0)));
        }
    }
}

TEST_CASE("B2 inner products") {
    RootDatum d = build_root_datum("B2");
    const Weight& a1 = d.simple_roots[0];
    const Weight& a2 = d.simple_roots[1];
    CHECK(d.inner_product(a1, a1) == Rat(2));
    CHECK(d.inner_product(a2, a2) == Rat(1));
    CHECK(d.inner_product(a1, a2) == Rat(-1));
    CHECK(d.inner_product(a1, wadd(a1, wscale(Rat(2), a2))) == Rat(0));
    // symmetry on a small grid
    std::vector<Weight> grid{a1, a2, d.rho, d.fundamental_weights[0], d.fundamental_weights[1]};
    for (const Weight& x : grid)
        for (const Weight& y : grid) CHECK(d.inner_product(x, y) == d.inner_product(y, x));
    CHECK_THROWS_AS(d.inner_product(ew({1, 0, 0}), a1), Error);
}

TEST_CASE("Cartan matrices are reproduced") {
    RootDatum b2 = build_root_datum("B2");
    CHECK(b2.cartan == std::vector<std::vector<long long>>{{2, -1}, {-2, 2}});
    RootDatum g2 = build_root_datum("G2");
    CHECK(g2.cartan == std::vector<std::vector<long long>>{{2, -1}, {-3, 2}});
    RootDatum a3 = build_root_datum("A3");
    CHECK(a3.cartan == std::vector<std::vector<long long>>{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
}

TEST_CASE("Dynkin labels") {
    RootDatum d = build_root_datum("B2");
    CHECK(d.dynkin_labels(d.rho) == std::vector<Rat>{Rat(1), Rat(1)});
    CHECK(d.fundamental_weights[0] == ew({1, 0}));
    CHECK(d.dynkin_labels(ew({1, 0})) == std::vector<Rat>{Rat(1), Rat(0)});
    CHECK(d.dynkin_labels(d.simple_roots[0]) == std::vector<Rat>{Rat(2), Rat(-2)});
}

TEST_CASE("dominance") {
    RootDatum d = build_root_datum("B2");
    CHECK(d.is_dominant(d.rho));
    CHECK_FALSE(d.is_dominant(wneg(d.rho)));
    CHECK_FALSE(d.is_dominant(ew({1, -1})));
    CHECK(d.is_dominant(wzero(2)));
}

TEST_CASE("weight from labels round trip") {
    for (const std::string& s : {"B2", "A3", "G2", "C3"}) {
        RootDatum d = build_root_datum(s);
        std::vector<Rat> labels;
        for (int i = 0; i < d.rank(); ++i) labels.push_back(Rat(i + 1, 1));
        Weight w = d.weight_from_labels(labels);
        CHECK(d.dynkin_labels(w) == labels);
        CHECK(d.is_integral(w));
    }
}

TEST_CASE("simple root coordinates and height") {
    RootDatum d = build_root_datum("B2");
    CHECK(d.height(d.highest_root) == Rat(3)); // theta = alpha1 + 2 alpha2
    CHECK(d.simple_root_coords(d.highest_root) == std::vector<Rat>{Rat(1), Rat(2)});
    RootDatum a2 = build_root_datum("A2");
    CHECK_THROWS_AS(a2.height(ew({1, 0, 0})), Error); // not zero-sum
}
