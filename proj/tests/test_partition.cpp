#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <symchar/partition.hpp>
#include <symchar/permutation.hpp>

#include <algorithm>
#include <numeric>

using namespace symchar;

TEST_CASE("partition construction and validation") {
    CHECK(Partition{}.size() == 0);
    CHECK(Partition({3, 1}).size() == 4);
    CHECK(Partition({3, 1}).length() == 2);
    CHECK_THROWS_AS(Partition({1, 3}), domain_error);
    CHECK_THROWS_AS(Partition({3, 0}), domain_error);
    CHECK_THROWS_AS(Partition({-1}), domain_error);
}

TEST_CASE("partition text round trip") {
    CHECK(Partition::parse("3,1") == Partition({3, 1}));
    CHECK(Partition::parse(" 10,10,2 ") == Partition({10, 10, 2}));
    CHECK(Partition::parse("") == Partition{});
    CHECK(Partition({3, 1}).to_string() == "3,1");
    CHECK(Partition{}.to_string() == "");
    CHECK_THROWS_AS(Partition::parse("3,x"), parse_error);
    CHECK_THROWS_AS(Partition::parse("3,"), parse_error);
    CHECK_THROWS_AS(Partition::parse("1,3"), parse_error);
    for (const Partition& p : partitions_up_to(9))
        CHECK(Partition::parse(p.to_string()) == p);
}

TEST_CASE("dilation") {
    CHECK(dilate(Partition({3, 1}), 1) == Partition({3, 1}));
    CHECK(dilate(Partition({3, 1}), 2) == Partition({6, 6, 2, 2}));
    CHECK(dilate(Partition({2}), 3) == Partition({6, 6, 6}));
    CHECK_THROWS_AS(dilate(Partition({2}), 0), domain_error);
    CHECK_THROWS_AS(dilate(Partition({2}), -2), domain_error);

    for (const Partition& p : partitions_up_to(8))
        for (int s = 1; s <= 5; ++s)
            CHECK(dilate(p, s).size() == static_cast<long>(s) * s * p.size());
}

TEST_CASE("conjugation") {
    CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(Partition({2, 2})) == Partition({2, 2}));
    for (const Partition& p : partitions_up_to(10))
        CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("contents") {
    auto sorted = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(sorted(contents(Partition({3, 1}))) == std::vector<int>{-1, 0, 1, 2});
    CHECK(contents(Partition({1})) == std::vector<int>{0});
    CHECK(sorted(contents(Partition({2, 2}))) == std::vector<int>{-1, 0, 0, 1});

    for (const Partition& p : partitions_up_to(10)) {
        auto negated = contents(p);
        for (int& c : negated) c = -c;
        CHECK(sorted(contents(conjugate(p))) == sorted(negated));
    }
}

TEST_CASE("corner coordinates") {
    const auto cc31 = corner_coordinates(Partition({3, 1}));
    CHECK(cc31.minima == std::vector<int>{-2, 0, 3});
    CHECK(cc31.maxima == std::vector<int>{-1, 2});

    const auto cc_empty = corner_coordinates(Partition{});
    CHECK(cc_empty.minima == std::vector<int>{0});
    CHECK(cc_empty.maxima.empty());

    const auto cc2 = corner_coordinates(Partition({2}));
    CHECK(cc2.minima == std::vector<int>{-1, 2});
    CHECK(cc2.maxima == std::vector<int>{1});
}

TEST_CASE("corner interlacing and zero sum") {
    for (const Partition& p : partitions_up_to(10)) {
        const auto cc = corner_coordinates(p);
        REQUIRE(cc.minima.size() == cc.maxima.size() + 1);
        for (std::size_t i = 0; i < cc.maxima.size(); ++i) {
            CHECK(cc.minima[i] < cc.maxima[i]);
            CHECK(cc.maxima[i] < cc.minima[i + 1]);
        }
        const long sum_min = std::accumulate(cc.minima.begin(), cc.minima.end(), 0L);
        const long sum_max = std::accumulate(cc.maxima.begin(), cc.maxima.end(), 0L);
        CHECK(sum_min - sum_max == 0);

        // Conjugation reflects the corner data about zero.
        auto cc_conj = corner_coordinates(conjugate(p));
        std::vector<int> refl_min(cc.minima.rbegin(), cc.minima.rend());
        std::vector<int> refl_max(cc.maxima.rbegin(), cc.maxima.rend());
        for (int& x : refl_min) x = -x;
        for (int& x : refl_max) x = -x;
        CHECK(cc_conj.minima == refl_min);
        CHECK(cc_conj.maxima == refl_max);
    }
}

TEST_CASE("removable corners and hooks") {
    const auto corners = removable_corners(Partition({3, 1}));
    REQUIRE(corners.size() == 2);
    CHECK(corners[0] == Box{1, 3});
    CHECK(corners[1] == Box{2, 1});
    CHECK(hook_length(Partition({3, 1}), 1, 1) == 4);
    CHECK(hook_length(Partition({3, 1}), 1, 2) == 2);
    CHECK(hook_length(Partition({3, 1}), 1, 3) == 1);
    CHECK(hook_length(Partition({3, 1}), 2, 1) == 1);
}

TEST_CASE("partition generation") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(10).size() == 42);
    CHECK(partitions_up_to(6).size() == 1 + 1 + 2 + 3 + 5 + 7 + 11);
}

TEST_CASE("permutation basics") {
    const auto id4 = Permutation::identity(4);
    CHECK(id4.cycle_count() == 4);
    CHECK(id4.cycle_string() == "()");
    CHECK(Permutation::full_cycle(4).cycle_string() == "(1,2,3,4)");
    CHECK_THROWS_AS(Permutation({1, 1, 2}), domain_error);
    CHECK_THROWS_AS(Permutation({2, 3}), domain_error);
}

TEST_CASE("composition pins the worked 7-edge factorization") {
    const auto sigma1 = Permutation::parse_cycles("(1,6)(2)(3)(4,7,5)", 7);
    const auto sigma2 = Permutation::parse_cycles("(1,2,3,5)(4,7,6)", 7);
    CHECK(compose(sigma1, sigma2) == Permutation::full_cycle(7));
}

TEST_CASE("composition conventions") {
    const auto sigma = Permutation::parse_cycles("(1,2,3)", 3);
    CHECK(compose(Permutation::identity(3), sigma) == sigma);
    CHECK(compose(sigma, Permutation::identity(3)) == sigma);
    const auto swap12 = Permutation::parse_cycles("(1,2)", 2);
    CHECK(compose(swap12, swap12) == Permutation::identity(2));
    CHECK_THROWS_AS(compose(swap12, sigma), domain_error);

    // tau applied first
    const auto tau = Permutation::parse_cycles("(1,2)", 3);
    CHECK(compose(sigma, tau).apply(1) == 3);  // 1 -> 2 -> 3

    // associativity and inverses over a few random-ish triples
    const auto a = Permutation::parse_cycles("(1,4)(2,5,3)", 5);
    const auto b = Permutation::parse_cycles("(1,2,3,4,5)", 5);
    const auto c = Permutation::parse_cycles("(2,4)", 5);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, a.inverse()) == Permutation::identity(5));
    CHECK(compose(a.inverse(), a) == Permutation::identity(5));
}

TEST_CASE("cycle notation parsing") {
    CHECK(Permutation::parse_cycles("(1,6)(4,7,5)").degree() == 7);
    CHECK(Permutation::parse_cycles("e", 3) == Permutation::identity(3));
    CHECK(Permutation::parse_cycles("", 3) == Permutation::identity(3));
    CHECK(Permutation::parse_cycles("()", 5) == Permutation::identity(5));
    CHECK(Permutation::parse_cycles("(1,3,2)").cycle_string() == "(1,3,2)");
    CHECK_THROWS_AS(Permutation::parse_cycles("(1,2"), parse_error);
    CHECK_THROWS_AS(Permutation::parse_cycles("(1,2)(2,3)"), parse_error);
    CHECK_THROWS_AS(Permutation::parse_cycles("(0,1)"), parse_error);
    CHECK_THROWS_AS(Permutation::parse_cycles("(1,5)", 3), parse_error);
}
