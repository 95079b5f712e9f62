#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <symchar/characters.hpp>
#include <symchar/cumulants.hpp>

#include "oracles.hpp"

using namespace symchar;

namespace {

MomentSequence ms(std::vector<long> values) {
    MomentSequence m;
    for (long v : values) m.values.emplace_back(v);
    return m;
}

}  // namespace

TEST_CASE("transition measure atoms and weights") {
    const auto tm31 = transition_measure(Partition({3, 1}));
    CHECK(tm31.locations == std::vector<int>{-2, 0, 3});
    CHECK(tm31.weights == std::vector<Rational>{make_rational(2L, 5L), make_rational(1L, 3L),
                                                make_rational(4L, 15L)});

    const auto tm_empty = transition_measure(Partition{});
    CHECK(tm_empty.locations == std::vector<int>{0});
    CHECK(tm_empty.weights == std::vector<Rational>{Rational(1)});

    const auto tm1 = transition_measure(Partition({1}));
    CHECK(tm1.locations == std::vector<int>{-1, 1});
    CHECK(tm1.weights == std::vector<Rational>{make_rational(1L, 2L), make_rational(1L, 2L)});

    for (const Partition& p : partitions_up_to(9)) {
        const auto tm = transition_measure(p);
        Rational sum = 0;
        for (const auto& w : tm.weights) {
            CHECK(w > 0);
            sum += w;
        }
        CHECK(sum == 1);
        // even moments of a real measure never go negative
        const auto m = moments(tm, 6);
        for (int k = 2; k <= 6; k += 2) CHECK(m.at(k) >= 0);
    }
}

TEST_CASE("moments of transition measures") {
    const auto m31 = moments(transition_measure(Partition({3, 1})), 4);
    CHECK(m31.values == std::vector<Rational>{Rational(0), Rational(4), Rational(4), Rational(28)});
    CHECK(m31.at(0) == 1);
    CHECK(m31.at(4) == 28);

    const auto m_empty = moments(transition_measure(Partition{}), 6);
    for (int k = 1; k <= 6; ++k) CHECK(m_empty.at(k) == 0);

    const auto m1 = moments(transition_measure(Partition({1})), 4);
    CHECK(m1.values == std::vector<Rational>{Rational(0), Rational(1), Rational(0), Rational(1)});

    CHECK_THROWS_AS(moments(transition_measure(Partition({1})), 0), domain_error);
}

TEST_CASE("moment to free cumulant conversion against frozen values") {
    const auto r = moments_to_free_cumulants(ms({0, 4, 4, 28, 52, 220}));
    CHECK(r.values == std::vector<Rational>{Rational(0), Rational(4), Rational(4), Rational(-4),
                                            Rational(-28), Rational(-52)});

    const auto zeros = moments_to_free_cumulants(ms({0, 0, 0, 0}));
    for (int k = 1; k <= 4; ++k) CHECK(zeros.at(k) == 0);

    const auto single = moments_to_free_cumulants(ms({0, 1, 0, 1}));
    CHECK(single.values ==
          std::vector<Rational>{Rational(0), Rational(1), Rational(0), Rational(-1)});
}

TEST_CASE("conversion agrees with the non-crossing partition sum") {
    // pseudo-random exact rationals; the oracle enumerates set partitions.
    std::vector<Rational> cumulants;
    long state = 7;
    for (int i = 0; i < 8; ++i) {
        state = (state * 48271) % 2147483647;
        cumulants.push_back(make_rational(state % 19 - 9, 1 + state % 7));
    }
    FreeCumulantSequence r{cumulants};
    const MomentSequence m = free_cumulants_to_moments(r);
    for (int k = 1; k <= 8; ++k) CHECK(m.at(k) == oracle::nc_moment(cumulants, k));

    // and for an actual diagram
    const Partition lambda({3, 2, 1});
    const MomentSequence md = moments(transition_measure(lambda), 8);
    const FreeCumulantSequence rd = free_cumulants(lambda, 8);
    for (int k = 1; k <= 8; ++k) CHECK(md.at(k) == oracle::nc_moment(rd.values, k));
}

TEST_CASE("conversion round trips on random sequences") {
    long state = 12345;
    for (int len = 1; len <= 10; ++len) {
        std::vector<Rational> values;
        for (int i = 0; i < len; ++i) {
            state = (state * 16807) % 2147483647;
            values.push_back(make_rational(state % 23 - 11, 1 + state % 9));
        }
        MomentSequence m{values};
        CHECK(free_cumulants_to_moments(moments_to_free_cumulants(m)).values == m.values);
        FreeCumulantSequence r{values};
        CHECK(moments_to_free_cumulants(free_cumulants_to_moments(r)).values == r.values);
    }
}

TEST_CASE("free cumulants of diagrams") {
    const auto r31 = free_cumulants(Partition({3, 1}), 6);
    CHECK(r31.values == std::vector<Rational>{Rational(0), Rational(4), Rational(4), Rational(-4),
                                              Rational(-28), Rational(-52)});
    const auto r_empty = free_cumulants(Partition{}, 5);
    for (int k = 1; k <= 5; ++k) CHECK(r_empty.at(k) == 0);

    const auto r2 = free_cumulants(Partition({2}), 4);
    CHECK(r2.values ==
          std::vector<Rational>{Rational(0), Rational(2), Rational(2), Rational(-2)});

    for (const Partition& p : partitions_up_to(10)) {
        const auto r = free_cumulants(p, 2);
        CHECK(r.at(1) == 0);
        CHECK(r.at(2) == p.size());
    }
}

TEST_CASE("homogeneity under dilation") {
    for (const Partition& p : partitions_up_to(5)) {
        const auto base = free_cumulants(p, 6);
        for (int s = 1; s <= 3; ++s) {
            const auto scaled = free_cumulants(dilate(p, s), 6);
            for (int k = 1; k <= 6; ++k)
                CHECK(scaled.at(k) == pow_rational(Rational(s), k) * base.at(k));
        }
    }
}

TEST_CASE("reflection: conjugation flips odd cumulants") {
    for (const Partition& p : partitions_up_to(8)) {
        const auto r = free_cumulants(p, 6);
        const auto rc = free_cumulants(conjugate(p), 6);
        for (int k = 1; k <= 6; ++k)
            CHECK(rc.at(k) == (k % 2 ? Rational(-r.at(k)) : r.at(k)));
    }
}

TEST_CASE("kerov consistency with normalized characters") {
    for (const Partition& p : partitions_up_to(10)) {
        const auto r = free_cumulants(p, 4);
        CHECK(r.at(3) == normalized_character(p, CycleArgument({2})));
        CHECK(r.at(4) + r.at(2) == normalized_character(p, CycleArgument({3})));
    }
}

TEST_CASE("geometric R3 and R4") {
    CHECK(geometric_r3(Partition({3, 1})) == 4);
    CHECK(geometric_r3(Partition({1})) == 0);
    CHECK(geometric_r3(Partition({2})) == 2);

    CHECK(geometric_r4(Partition({1})) == -1);
    CHECK(geometric_r4(Partition({3, 1})) == -4);
    CHECK(geometric_r4(Partition({2, 1})) == -6);

    for (const Partition& p : partitions_up_to(10)) {
        const auto r = free_cumulants(p, 4);
        CHECK(geometric_r3(p) == r.at(3));
        CHECK(geometric_r4(p) == r.at(4));
        // the linear subtraction only works on n <= 1
        if (p.size() >= 2)
            CHECK(geometric_r4(p, R4Subtraction::linear) != r.at(4));
        else
            CHECK(geometric_r4(p, R4Subtraction::linear) == r.at(4));
    }
}
