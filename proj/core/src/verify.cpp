#include <symchar/verify.hpp>

#include <symchar/characters.hpp>
#include <symchar/cumulants.hpp>
#include <symchar/kerov.hpp>
#include <symchar/maps.hpp>
#include <symchar/transport.hpp>

namespace symchar {

namespace {

CheckResult triple_oracle(int max_n, int max_k, int threads) {
    CheckResult res{"triple-oracle (MN / map sum / Kerov evaluation)", true, ""};
    std::vector<RPolynomial> polys;
    for (int k = 1; k <= max_k; ++k) polys.push_back(kerov_polynomial(k));
    long checked = 0;
    for (const Partition& lambda : partitions_up_to(max_n)) {
        for (int k = 1; k <= max_k; ++k) {
            const Rational mn = normalized_character(lambda, CycleArgument({k}));
            const Rational maps = stanley_character(lambda, k, threads);
            const Rational poly = polys[k - 1].evaluate(lambda);
            ++checked;
            if (mn != maps || mn != poly) {
                res.pass = false;
                res.detail = "mismatch at lambda=(" + lambda.to_string() + "), k=" +
                             std::to_string(k) + ": " + to_string(mn) + " / " +
                             to_string(maps) + " / " + to_string(poly);
                return res;
            }
        }
    }
    res.detail = std::to_string(checked) + " triples agree (n <= " + std::to_string(max_n) +
                 ", k <= " + std::to_string(max_k) + ")";
    return res;
}

CheckResult cumulant_consistency(int max_n) {
    CheckResult res{"cumulant consistency (R3 = Ch2, R4 + R2 = Ch3)", true, ""};
    long checked = 0;
    for (const Partition& lambda : partitions_up_to(max_n)) {
        const FreeCumulantSequence r = free_cumulants(lambda, 4);
        if (r.at(3) != normalized_character(lambda, CycleArgument({2})) ||
            r.at(4) + r.at(2) != normalized_character(lambda, CycleArgument({3}))) {
            res.pass = false;
            res.detail = "mismatch at lambda=(" + lambda.to_string() + ")";
            return res;
        }
        ++checked;
    }
    res.detail = std::to_string(checked) + " diagrams consistent (n <= " +
                 std::to_string(max_n) + ")";
    return res;
}

CheckResult homogeneity(int max_n, int max_s, int max_k) {
    CheckResult res{"free-cumulant homogeneity R_k(s lambda) = s^k R_k(lambda)", true, ""};
    long checked = 0;
    for (const Partition& lambda : partitions_up_to(max_n)) {
        const FreeCumulantSequence base = free_cumulants(lambda, max_k);
        for (int s = 1; s <= max_s; ++s) {
            const FreeCumulantSequence scaled = free_cumulants(dilate(lambda, s), max_k);
            for (int k = 1; k <= max_k; ++k) {
                if (scaled.at(k) != pow_rational(Rational(s), static_cast<unsigned>(k)) * base.at(k)) {
                    res.pass = false;
                    res.detail = "fails at lambda=(" + lambda.to_string() + "), s=" +
                                 std::to_string(s) + ", k=" + std::to_string(k);
                    return res;
                }
                ++checked;
            }
        }
    }
    res.detail = std::to_string(checked) + " identities hold (n <= " + std::to_string(max_n) +
                 ", s <= " + std::to_string(max_s) + ", k <= " + std::to_string(max_k) + ")";
    return res;
}

CheckResult transport_coefficients(int max_k, int threads) {
    CheckResult res{"transport counts reproduce Kerov coefficients", true, ""};
    long checked = 0;
    for (int k = 2; k <= max_k; ++k) {
        const RPolynomial poly = kerov_polynomial(k);
        for (const Monomial& mono : candidate_monomials(k + 1, (k + 1) % 2)) {
            if (mono.empty()) continue;
            const BigInt counted = count_decorated_maps(k, mono, threads);
            if (Rational(counted) != poly.coefficient(mono)) {
                res.pass = false;
                res.detail = "coefficient mismatch at k=" + std::to_string(k);
                return res;
            }
            ++checked;
        }
    }
    res.detail = std::to_string(checked) + " coefficients match (k <= " +
                 std::to_string(max_k) + ")";
    return res;
}

CheckResult positivity_sweep(int max_k) {
    CheckResult res{"Kerov positivity (nonnegative integer coefficients)", true, ""};
    for (int k = 1; k <= max_k; ++k) {
        if (!positivity_report(kerov_polynomial(k)).all_nonnegative_integers) {
            res.pass = false;
            res.detail = "negative or fractional coefficient at k=" + std::to_string(k);
            return res;
        }
    }
    res.detail = "k <= " + std::to_string(max_k);
    return res;
}

CheckResult covariance_identities() {
    CheckResult res{"covariance identities for (3,2)", true, ""};
    RPolynomial expected_multi;
    expected_multi.add_term(Monomial{3, 4}, Rational(1));
    expected_multi.add_term(Monomial{2, 3}, Rational(-5));
    expected_multi.add_term(Monomial{5}, Rational(-6));
    expected_multi.add_term(Monomial{3}, Rational(-18));
    RPolynomial expected_cov;
    expected_cov.add_term(Monomial{2, 3}, Rational(-6));
    expected_cov.add_term(Monomial{5}, Rational(-6));
    expected_cov.add_term(Monomial{3}, Rational(-18));
    if (multi_kerov_polynomial(CycleArgument({3, 2})) != expected_multi ||
        cumulant_polynomial({3, 2}) != expected_cov ||
        !positivity_report(-cumulant_polynomial({3, 2})).all_nonnegative_integers) {
        res.pass = false;
        res.detail = "pair-cycle polynomials disagree with the reference values";
    }
    return res;
}

CheckResult geometric_audit(int max_n) {
    CheckResult res{"geometric R3/R4 audit (quadratic subtraction)", true, ""};
    long checked = 0;
    for (const Partition& lambda : partitions_up_to(max_n)) {
        const FreeCumulantSequence r = free_cumulants(lambda, 4);
        const bool quadratic_ok = geometric_r3(lambda) == r.at(3) &&
                                  geometric_r4(lambda) == r.at(4);
        const bool linear_fails =
            lambda.size() < 2 || geometric_r4(lambda, R4Subtraction::linear) != r.at(4);
        if (!quadratic_ok || !linear_fails) {
            res.pass = false;
            res.detail = "audit fails at lambda=(" + lambda.to_string() + ")";
            return res;
        }
        ++checked;
    }
    res.detail = std::to_string(checked) +
                 " diagrams: quadratic matches, linear variant fails for n >= 2";
    return res;
}

}  // namespace

std::vector<CheckResult> run_verification(VerifyLevel level, int threads) {
    const bool full = level == VerifyLevel::full;
    std::vector<CheckResult> results;
    results.push_back(triple_oracle(full ? 8 : 6, full ? 5 : 4, threads));
    results.push_back(cumulant_consistency(full ? 10 : 8));
    results.push_back(homogeneity(full ? 6 : 4, full ? 4 : 3, 6));
    results.push_back(transport_coefficients(full ? 5 : 4, threads));
    results.push_back(positivity_sweep(full ? 7 : 6));
    results.push_back(covariance_identities());
    results.push_back(geometric_audit(full ? 10 : 8));
    return results;
}

}  // namespace symchar
