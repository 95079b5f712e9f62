#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <symchar/cumulants.hpp>
#include <symchar/kerov.hpp>
#include <symchar/linalg.hpp>

#include <algorithm>

using namespace symchar;

namespace {

RPolynomial poly_from(std::vector<std::pair<Monomial, long>> terms) {
    RPolynomial p;
    for (auto& [mono, coeff] : terms) p.add_term(mono, Rational(coeff));
    return p;
}

}  // namespace

TEST_CASE("monomial order and rendering") {
    CHECK(monomial_weight({2, 4}) == 6);
    CHECK(monomial_weight({}) == 0);

    RPolynomial p = poly_from({{{6}, 1}, {{4}, 15}, {{2, 2}, 5}, {{2}, 8}});
    CHECK(p.to_text() == "R6 + 15*R4 + 5*R2^2 + 8*R2");

    RPolynomial q = poly_from({{{3, 4}, 1}, {{2, 3}, -5}, {{5}, -6}, {{3}, -18}});
    CHECK(q.to_text() == "R3*R4 - 6*R5 - 5*R2*R3 - 18*R3");

    CHECK(RPolynomial{}.to_text() == "0");
    CHECK(RPolynomial::constant(make_rational(-3L, 2L)).to_text() == "-3/2");
    CHECK(poly_from({{{2}, 1}}).to_text() == "R2");
}

TEST_CASE("polynomial arithmetic") {
    const RPolynomial a = poly_from({{{4}, 1}, {{2}, 1}});  // R4 + R2
    const RPolynomial b = poly_from({{{3}, 1}});            // R3
    CHECK((a * b).to_text() == "R3*R4 + R2*R3");
    CHECK((a - a).is_zero());
    CHECK((a + (-a)).is_zero());
    CHECK(a.graded_degree() == 4);
    CHECK(RPolynomial{}.graded_degree() == 0);
    CHECK((Rational(2) * b).coefficient({3}) == 2);
    CHECK(a.coefficient({7}) == 0);
}

TEST_CASE("candidate monomial basis") {
    const auto even6 = candidate_monomials(6, 0);
    // {}, R2, R4, R2^2, R6, R2 R4, R3^2, R2^3
    CHECK(even6.size() == 8);
    CHECK(std::is_sorted(even6.begin(), even6.end(), MonomialOrder{}));
    const auto odd7 = candidate_monomials(7, 1);
    // R3, R5, R2 R3, R7, R2 R5, R3 R4, R2^2 R3
    CHECK(odd7.size() == 7);
}

TEST_CASE("exact linear solve") {
    using Matrix = std::vector<std::vector<Rational>>;
    Matrix a{{Rational(1), Rational(2)}, {Rational(3), Rational(4)}, {Rational(4), Rational(6)}};
    std::vector<Rational> b{Rational(5), Rational(11), Rational(16)};
    auto result = solve_exact(a, b);
    REQUIRE(std::holds_alternative<std::vector<Rational>>(result));
    CHECK(std::get<std::vector<Rational>>(result) ==
          std::vector<Rational>{Rational(1), Rational(2)});

    Matrix deficient{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    auto r2 = solve_exact(deficient, {Rational(3), Rational(6)});
    REQUIRE(std::holds_alternative<SolveFailure>(r2));
    CHECK(std::get<SolveFailure>(r2) == SolveFailure::rank_deficient);

    auto r3 = solve_exact(a, {Rational(5), Rational(11), Rational(17)});
    REQUIRE(std::holds_alternative<SolveFailure>(r3));
    CHECK(std::get<SolveFailure>(r3) == SolveFailure::inconsistent);
}

TEST_CASE("kerov polynomials up to five match the published list") {
    CHECK(kerov_polynomial(1) == poly_from({{{2}, 1}}));
    CHECK(kerov_polynomial(2) == poly_from({{{3}, 1}}));
    CHECK(kerov_polynomial(3) == poly_from({{{4}, 1}, {{2}, 1}}));
    CHECK(kerov_polynomial(4) == poly_from({{{5}, 1}, {{3}, 5}}));
    CHECK(kerov_polynomial(5) == poly_from({{{6}, 1}, {{4}, 15}, {{2, 2}, 5}, {{2}, 8}}));
    CHECK(kerov_polynomial(5).to_text() == "R6 + 15*R4 + 5*R2^2 + 8*R2");
    CHECK_THROWS_AS(kerov_polynomial(0), domain_error);
}

TEST_CASE("evaluation") {
    CHECK(poly_from({{{3}, 1}}).evaluate(Partition({3, 1})) == 4);
    CHECK(RPolynomial{}.evaluate(Partition({3, 1})) == 0);
    CHECK(kerov_polynomial(5).evaluate(Partition({3, 1})) == 0);  // n = 4 < 5
}

TEST_CASE("round trip against normalized characters") {
    for (int k = 1; k <= 6; ++k) {
        const RPolynomial p = kerov_polynomial(k);
        for (const Partition& lambda : partitions_up_to(9))
            CHECK(p.evaluate(lambda) == normalized_character(lambda, CycleArgument({k})));
    }
}

TEST_CASE("structure of single-cycle kerov polynomials") {
    for (int k = 1; k <= 7; ++k) {
        const RPolynomial p = kerov_polynomial(k);
        CHECK(p.coefficient({k + 1}) == 1);
        CHECK(p.graded_degree() == k + 1);
        CHECK(positivity_report(p).all_nonnegative_integers);
        // parity gradation: every weight is k+1 mod 2, so no weight-k term
        for (const auto& [mono, coeff] : p.terms())
            CHECK(monomial_weight(mono) % 2 == (k + 1) % 2);
    }
}

TEST_CASE("solved coefficients do not depend on evaluation order") {
    // Re-derive Ch_4 by hand from a reversed evaluation set and compare.
    const int k = 4;
    const auto basis = candidate_monomials(k + 1, (k + 1) % 2);
    std::vector<Partition> eval;
    for (int n = k + 4; n >= k + 1; --n)
        for (const Partition& p : partitions_of(n)) eval.push_back(p);
    std::reverse(eval.begin(), eval.end());

    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (const Partition& lambda : eval) {
        const FreeCumulantSequence r = free_cumulants(lambda, k + 1);
        std::vector<Rational> row;
        for (const Monomial& mono : basis) {
            Rational value = 1;
            for (int idx : mono) value *= r.at(idx);
            row.push_back(value);
        }
        a.push_back(std::move(row));
        b.push_back(normalized_character(lambda, CycleArgument({k})));
    }
    auto result = solve_exact(std::move(a), std::move(b));
    REQUIRE(std::holds_alternative<std::vector<Rational>>(result));
    const auto& x = std::get<std::vector<Rational>>(result);
    RPolynomial rebuilt;
    for (std::size_t i = 0; i < basis.size(); ++i) rebuilt.add_term(basis[i], x[i]);
    CHECK(rebuilt == kerov_polynomial(k));
}

TEST_CASE("two-cycle polynomial matches the published covariance data") {
    const RPolynomial expected =
        poly_from({{{3, 4}, 1}, {{2, 3}, -5}, {{5}, -6}, {{3}, -18}});
    CHECK(multi_kerov_polynomial(CycleArgument({3, 2})) == expected);
    CHECK(multi_kerov_polynomial(CycleArgument({2})) == kerov_polynomial(2));

    const RPolynomial cov = cumulant_polynomial({3, 2});
    const RPolynomial expected_cov =
        poly_from({{{2, 3}, -6}, {{5}, -6}, {{3}, -18}});
    CHECK(cov == expected_cov);
    CHECK_FALSE(positivity_report(multi_kerov_polynomial(CycleArgument({3, 2})))
                    .all_nonnegative_integers);
    CHECK(positivity_report(-cov).all_nonnegative_integers);
}

TEST_CASE("multi-cycle polynomial evaluates to the multi-cycle character") {
    const RPolynomial p22 = multi_kerov_polynomial(CycleArgument({2, 2}));
    for (const Partition& lambda : partitions_up_to(8))
        CHECK(p22.evaluate(lambda) ==
              normalized_character(lambda, CycleArgument({2, 2})));
}

TEST_CASE("cumulant polynomials and the degree drop") {
    CHECK(cumulant_polynomial({4}) == kerov_polynomial(4));
    CHECK(cumulant_polynomial({3, 2}).graded_degree() == 5);
    CHECK(cumulant_polynomial({2, 2}).graded_degree() <= 4);
    for (auto [k, l] : {std::pair{2, 2}, {3, 2}, {3, 3}, {4, 2}}) {
        CHECK(cumulant_polynomial({k, l}).graded_degree() < k + l + 2);
        CHECK(multi_kerov_polynomial(CycleArgument({k, l})).graded_degree() == k + l + 2);
    }
}

TEST_CASE("kerov positivity holds while pair covariances flip sign") {
    CHECK(positivity_report(kerov_polynomial(5)).all_nonnegative_integers);
    const auto report = positivity_report(multi_kerov_polynomial(CycleArgument({3, 2})));
    CHECK_FALSE(report.all_nonnegative_integers);
    CHECK(!report.offending.empty());
}
