#include <symchar/kerov.hpp>

#include <symchar/cumulants.hpp>
#include <symchar/linalg.hpp>

#include <algorithm>
#include <map>

namespace symchar {

namespace {

Rational monomial_value(const Monomial& mono, const FreeCumulantSequence& r) {
    Rational value = 1;
    for (int idx : mono) value *= r.at(idx);
    return value;
}

RPolynomial solve_character_polynomial(const CycleArgument& arg) {
    const int weight_cap = static_cast<int>(arg.total()) + arg.count();
    const std::vector<Monomial> basis = candidate_monomials(weight_cap, weight_cap % 2);

    // Evaluation diagrams: all partitions of sizes K+1 .. K+4, extended one
    // size at a time if the monomials happen to be dependent on that set.
    const int base_size = static_cast<int>(arg.total()) + 1;
    int top_size = base_size + 3;
    std::vector<Partition> eval;
    for (int n = base_size; n <= top_size; ++n)
        for (auto& p : partitions_of(n)) eval.push_back(std::move(p));

    std::vector<Rational> solution;
    for (;;) {
        std::vector<std::vector<Rational>> a;
        std::vector<Rational> b;
        a.reserve(eval.size());
        b.reserve(eval.size());
        for (const Partition& lambda : eval) {
            const FreeCumulantSequence r = free_cumulants(lambda, weight_cap);
            std::vector<Rational> row;
            row.reserve(basis.size());
            for (const Monomial& mono : basis) row.push_back(monomial_value(mono, r));
            a.push_back(std::move(row));
            b.push_back(normalized_character(lambda, arg));
        }
        auto result = solve_exact(std::move(a), std::move(b));
        if (auto* x = std::get_if<std::vector<Rational>>(&result)) {
            solution = std::move(*x);
            break;
        }
        if (std::get<SolveFailure>(result) == SolveFailure::inconsistent)
            throw internal_error("character evaluations are not a polynomial in the candidate basis");
        ++top_size;
        if (top_size > base_size + 8)
            throw internal_error("candidate monomials stayed rank deficient");
        for (auto& p : partitions_of(top_size)) eval.push_back(std::move(p));
    }

    RPolynomial poly;
    for (std::size_t i = 0; i < basis.size(); ++i) poly.add_term(basis[i], solution[i]);

    // Held-out audit: diagrams strictly smaller than the vanishing cutoff
    // plus one size past the evaluation window.
    std::vector<Partition> held_out = partitions_up_to(static_cast<int>(arg.total()));
    for (auto& p : partitions_of(top_size + 1)) held_out.push_back(std::move(p));
    for (const Partition& lambda : held_out) {
        if (poly.evaluate(lambda) != normalized_character(lambda, arg))
            throw internal_error("solved polynomial fails on held-out diagram " +
                                 lambda.to_string());
    }
    return poly;
}

std::map<std::vector<int>, RPolynomial>& poly_cache() {
    thread_local std::map<std::vector<int>, RPolynomial> cache;
    return cache;
}

RPolynomial cached_multi(const CycleArgument& arg) {
    auto& cache = poly_cache();
    if (auto it = cache.find(arg.cycles()); it != cache.end()) return it->second;
    RPolynomial poly = solve_character_polynomial(arg);
    cache.emplace(arg.cycles(), poly);
    return poly;
}

// All set partitions of {0,...,r-1} as block lists.
void enumerate_set_partitions(int r, std::vector<std::vector<int>>& blocks,
                              const std::function<void(const std::vector<std::vector<int>>&)>& emit,
                              int next) {
    if (next == r) {
        emit(blocks);
        return;
    }
    const std::size_t count = blocks.size();  // recursion grows the vector
    for (std::size_t i = 0; i < count; ++i) {
        blocks[i].push_back(next);
        enumerate_set_partitions(r, blocks, emit, next + 1);
        blocks[i].pop_back();
    }
    blocks.push_back({next});
    enumerate_set_partitions(r, blocks, emit, next + 1);
    blocks.pop_back();
}

}  // namespace

RPolynomial kerov_polynomial(int k) {
    if (k < 1) throw domain_error("kerov_polynomial: k must be >= 1");
    RPolynomial poly = cached_multi(CycleArgument({k}));
    for (const auto& [mono, coeff] : poly.terms())
        if (!is_integer(coeff))
            throw internal_error("single-cycle Kerov coefficients must be integers");
    return poly;
}

RPolynomial multi_kerov_polynomial(const CycleArgument& arg) {
    if (arg.count() == 0) throw domain_error("multi_kerov_polynomial: empty argument");
    return cached_multi(arg);
}

RPolynomial cumulant_polynomial(const std::vector<int>& cycle_lengths) {
    const int r = static_cast<int>(cycle_lengths.size());
    if (r == 0) throw domain_error("cumulant_polynomial: empty argument");

    RPolynomial total;
    std::vector<std::vector<int>> blocks;
    enumerate_set_partitions(
        r, blocks,
        [&](const std::vector<std::vector<int>>& partition) {
            const int parts = static_cast<int>(partition.size());
            RPolynomial product = RPolynomial::constant(Rational(1));
            for (const auto& block : partition) {
                std::vector<int> cycles;
                for (int i : block) cycles.push_back(cycle_lengths[i]);
                product = product * multi_kerov_polynomial(CycleArgument(std::move(cycles)));
            }
            // Moebius weight (-1)^(parts-1) (parts-1)!.
            BigInt weight = factorial(static_cast<unsigned>(parts - 1));
            if ((parts - 1) % 2) weight = -weight;
            total += Rational(weight) * product;
        },
        0);
    return total;
}

}  // namespace symchar
