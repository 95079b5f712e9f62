#include <symchar/cumulants.hpp>

namespace symchar {

Rational MomentSequence::at(int k) const {
    if (k == 0) return Rational(1);
    if (k < 1 || k > max_order()) throw domain_error("moment order out of range");
    return values[static_cast<std::size_t>(k) - 1];
}

Rational FreeCumulantSequence::at(int k) const {
    if (k < 1 || k > max_order()) throw domain_error("cumulant order out of range");
    return values[static_cast<std::size_t>(k) - 1];
}

TransitionMeasure transition_measure(const Partition& lambda) {
    const CornerCoordinates cc = corner_coordinates(lambda);
    TransitionMeasure m;
    m.locations = cc.minima;
    m.weights.reserve(cc.minima.size());
    Rational sum = 0;
    for (std::size_t i = 0; i < cc.minima.size(); ++i) {
        BigInt num = 1, den = 1;
        for (int y : cc.maxima) num *= cc.minima[i] - y;
        for (std::size_t j = 0; j < cc.minima.size(); ++j)
            if (j != i) den *= cc.minima[i] - cc.minima[j];
        Rational w = make_rational(num, den);
        if (w <= 0) throw internal_error("transition measure weight not positive");
        sum += w;
        m.weights.push_back(std::move(w));
    }
    if (sum != 1) throw internal_error("transition measure weights do not sum to 1");
    return m;
}

MomentSequence moments(const TransitionMeasure& m, int k_max) {
    if (k_max < 1) throw domain_error("k_max must be >= 1");
    MomentSequence out;
    out.values.assign(static_cast<std::size_t>(k_max), Rational(0));
    // powers[i] tracks location_i^k across k = 1..k_max
    std::vector<Rational> powers(m.locations.size(), Rational(1));
    for (int k = 1; k <= k_max; ++k) {
        Rational mk = 0;
        for (std::size_t i = 0; i < m.locations.size(); ++i) {
            powers[i] *= m.locations[i];
            mk += m.weights[i] * powers[i];
        }
        out.values[static_cast<std::size_t>(k) - 1] = std::move(mk);
    }
    return out;
}

namespace {

// compositions[s][t] = sum over (i_1,...,i_s >= 0, sum = t) of M_{i_1}...M_{i_s}
std::vector<std::vector<Rational>> composition_sums(const MomentSequence& m, int s_max,
                                                    int t_max) {
    std::vector<std::vector<Rational>> c(
        static_cast<std::size_t>(s_max) + 1,
        std::vector<Rational>(static_cast<std::size_t>(t_max) + 1, Rational(0)));
    c[0][0] = 1;
    for (int s = 1; s <= s_max; ++s)
        for (int t = 0; t <= t_max; ++t) {
            Rational acc = 0;
            for (int j = 0; j <= t; ++j)
                acc += m.at(j) * c[static_cast<std::size_t>(s) - 1][static_cast<std::size_t>(t - j)];
            c[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = std::move(acc);
        }
    return c;
}

}  // namespace

FreeCumulantSequence moments_to_free_cumulants(const MomentSequence& m) {
    const int k_max = m.max_order();
    const auto c = composition_sums(m, k_max, k_max);
    FreeCumulantSequence r;
    r.values.assign(static_cast<std::size_t>(k_max), Rational(0));
    for (int k = 1; k <= k_max; ++k) {
        Rational acc = m.at(k);
        for (int s = 1; s < k; ++s)
            acc -= r.values[static_cast<std::size_t>(s) - 1] *
                   c[static_cast<std::size_t>(s)][static_cast<std::size_t>(k - s)];
        r.values[static_cast<std::size_t>(k) - 1] = std::move(acc);
    }
    return r;
}

MomentSequence free_cumulants_to_moments(const FreeCumulantSequence& r) {
    const int k_max = r.max_order();
    MomentSequence m;
    m.values.assign(static_cast<std::size_t>(k_max), Rational(0));
    for (int k = 1; k <= k_max; ++k) {
        // Recompute composition sums over the moments known so far; only
        // totals up to k - 1 are consulted for M_k.
        MomentSequence known{std::vector<Rational>(m.values.begin(),
                                                   m.values.begin() + (k - 1))};
        const auto c = composition_sums(known, k, k - 1);
        Rational acc = 0;
        for (int s = 1; s <= k; ++s)
            acc += r.at(s) * c[static_cast<std::size_t>(s)][static_cast<std::size_t>(k - s)];
        m.values[static_cast<std::size_t>(k) - 1] = std::move(acc);
    }
    return m;
}

FreeCumulantSequence free_cumulants(const Partition& lambda, int k_max) {
    if (k_max < 1) throw domain_error("k_max must be >= 1");
    FreeCumulantSequence r = moments_to_free_cumulants(moments(transition_measure(lambda), k_max));
    if (r.at(1) != 0) throw internal_error("R_1 of a Young diagram must vanish");
    if (k_max >= 2 && r.at(2) != lambda.size())
        throw internal_error("R_2 of a Young diagram must equal its box count");
    return r;
}

Rational geometric_r3(const Partition& lambda) {
    long sum = 0;
    for (int t : contents(lambda)) sum += t;
    return Rational(2 * sum);
}

Rational geometric_r4(const Partition& lambda, R4Subtraction subtraction) {
    // A unit box centered on content t contributes t^2 + 1/6 to the integral.
    long sum_sq = 0;
    for (int t : contents(lambda)) sum_sq += static_cast<long>(t) * t;
    const long n = lambda.size();
    Rational integral3 = Rational(3 * sum_sq) + make_rational(n, 2L);
    if (subtraction == R4Subtraction::quadratic)
        return integral3 - make_rational(3 * n * n, 2L);
    return integral3 - make_rational(3 * n, 2L);
}

}  // namespace symchar
