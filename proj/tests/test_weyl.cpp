#include "doctest.h"

#include "wv/weyl.hpp"

using namespace wv;

namespace {
Weight ew(std::initializer_list<int> v) {
    Weight w;
    for (int x : v) w.push_back(Rat(x));
    return w;
}
} // namespace

TEST_CASE("simple reflections act as expected") {
    RootDatum a1 = build_root_datum("A1");
    CHECK(reflect_simple(a1, 0, a1.rho) == wneg(a1.rho));
    RootDatum b2 = build_root_datum("B2");
    CHECK(reflect_simple(b2, 0, ew({1, 0})) == ew({0, 1})); // s1 swaps coordinates
    WeylElement e = identity_element(b2);
    CHECK(act(b2, e, b2.rho) == b2.rho);
    CHECK_THROWS_AS(reflect_simple(b2, 5, b2.rho), Error);
}

TEST_CASE("group sizes") {
    CHECK(enumerate_group(build_root_datum("A1")).size() == 2);
    CHECK(enumerate_group(build_root_datum("A2")).size() == 6);
    CHECK(enumerate_group(build_root_datum("B2")).size() == 8);
    CHECK(enumerate_group(build_root_datum("G2")).size() == 12);
    CHECK(enumerate_group(build_root_datum("A3")).size() == 24);
    CHECK(enumerate_group(build_root_datum("B3")).size() == 48);
}

TEST_CASE("signs sum to zero and words are reduced") {
    for (const std::string& s : {"A1", "A2", "B2", "G2", "A3"}) {
        CAPTURE(s);
        RootDatum d = build_root_datum(s);
        long long sum = 0;
        for (const WeylElement& w : enumerate_group(d)) {
            sum += w.sign();
            CHECK(length_by_inversions(d, w) == w.length());
        }
        CHECK(sum == 0);
    }
}

TEST_CASE("longest element of B2 has length four") {
    RootDatum d = build_root_datum("B2");
    int longest = 0;
    for (const WeylElement& w : enumerate_group(d)) longest = std::max(longest, w.length());
    CHECK(longest == 4);
}

TEST_CASE("sign is multiplicative under composition") {
    for (const std::string& s : {"A2", "B2", "G2", "A3"}) {
        CAPTURE(s);
        RootDatum d = build_root_datum(s);
        auto group = enumerate_group(d);
        for (const WeylElement& w1 : group)
            for (const WeylElement& w2 : group)
                CHECK(compose(d, w1, w2).sign() == w1.sign() * w2.sign());
    }
}

TEST_CASE("the action preserves the inner product") {
    for (const std::string& s : {"B2", "G2"}) {
        RootDatum d = build_root_datum(s);
        std::vector<Weight> grid{d.rho, d.fundamental_weights[0], d.fundamental_weights[1],
                                 d.simple_roots[0]};
        for (const WeylElement& w : enumerate_group(d))
            for (const Weight& x : grid)
                for (const Weight& y : grid)
                    CHECK(d.inner_product(act(d, w, x), act(d, w, y)) == d.inner_product(x, y));
    }
}

TEST_CASE("to_dominant") {
    RootDatum a1 = build_root_datum("A1");
    DominantResult r = to_dominant(a1, wneg(a1.rho));
    CHECK(r.dominant == a1.rho);
    CHECK(r.w.length() == 1);
    CHECK(r.sign == -1);

    RootDatum b2 = build_root_datum("B2");
    DominantResult already = to_dominant(b2, b2.rho);
    CHECK(already.w.length() == 0);
    CHECK(already.sign == 1);
    CHECK(already.dominant == b2.rho);

    // minimal length for -e1, checked against exhaustive search
    Weight x = ew({-1, 0});
    DominantResult m = to_dominant(b2, x);
    CHECK(m.dominant == ew({1, 0}));
    CHECK(act(b2, m.w, x) == m.dominant);
    int best = 100;
    for (const WeylElement& w : enumerate_group(b2))
        if (act(b2, w, x) == ew({1, 0})) best = std::min(best, w.length());
    CHECK(m.w.length() == best);
    CHECK(best == 3);
    CHECK(m.sign == -1);
}

TEST_CASE("orbits") {
    RootDatum d = build_root_datum("B2");
    CHECK(orbit(d, wzero(2)) == std::vector<Weight>{wzero(2)});
    auto o = orbit(d, ew({1, 0}));
    CHECK(o.size() == 4);
    CHECK(std::find(o.begin(), o.end(), ew({0, -1})) != o.end());
    CHECK(orbit(d, d.rho).size() == 8);
    // orbit sizes divide |W|
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) {
            Weight w = d.weight_from_labels({Rat(a), Rat(b)});
            CHECK(8 % orbit(d, w).size() == 0);
        }
}

TEST_CASE("element reconstruction from the rho image") {
    RootDatum d = build_root_datum("B3");
    for (const WeylElement& w : enumerate_group(d)) {
        WeylElement back = element_from_rho_image(d, w.rho_image);
        CHECK(back == w);
        CHECK(back.length() == w.length());
        CHECK(act(d, back, d.rho) == w.rho_image);
    }
    CHECK_THROWS_AS(element_from_rho_image(d, wzero(3)), Error);
}

TEST_CASE("composition and inversion") {
    RootDatum d = build_root_datum("G2");
    auto group = enumerate_group(d);
    WeylElement e = identity_element(d);
    for (const WeylElement& w : group) {
        CHECK(compose(d, w, inverse(d, w)) == e);
        CHECK(compose(d, inverse(d, w), w) == e);
        CHECK(inverse(d, w).length() == w.length());
    }
}

TEST_CASE("reflection elements") {
    RootDatum d = build_root_datum("B2");
    Weight theta = d.highest_root;
    WeylElement r = reflection_element(d, theta);
    CHECK(act(d, r, theta) == wneg(theta));
    CHECK(compose(d, r, r) == identity_element(d));
    CHECK(r.sign() == -1);
}
