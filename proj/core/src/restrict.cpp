#include <symchar/restrict.hpp>

#include <symchar/characters.hpp>
#include <symchar/cumulants.hpp>

#include <algorithm>
#include <cmath>
#include <thread>

namespace symchar {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

SplitMix64 SplitMix64::for_trial(std::uint64_t seed, std::uint64_t trial) {
    // Decorrelate the per-trial streams by running the trial index through
    // one scramble round keyed on the seed.
    SplitMix64 mixer(seed ^ (trial * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
    return SplitMix64(mixer.next());
}

BigInt uniform_below(const BigInt& bound, SplitMix64& rng) {
    if (bound <= 0) throw domain_error("uniform_below: bound must be positive");
    const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    const unsigned top_bits = static_cast<unsigned>(bits - (words - 1) * 64);
    const std::uint64_t top_mask =
        top_bits >= 64 ? ~0ULL : ((std::uint64_t{1} << top_bits) - 1);

    std::vector<std::uint64_t> buf(words);
    for (;;) {
        for (std::size_t i = 0; i < words; ++i) buf[i] = rng.next();
        buf[words - 1] &= top_mask;
        BigInt value;
        mpz_import(value.get_mpz_t(), words, -1 /*LSW first*/, sizeof(std::uint64_t),
                   0 /*native endian*/, 0, buf.data());
        if (value < bound) return value;
    }
}

namespace {

// Integer corner weights proportional to dimension(lambda minus corner):
// removing the corner in row r, column q only shortens the hooks in row r
// and column q, so dim(lambda-c)/dim(lambda) = (1/n) prod h/(h-1) over
// those boxes. Weights are put over the common denominator n * prod(B_c).
struct CornerWeights {
    std::vector<Box> corners;
    std::vector<BigInt> weights;
    BigInt total;  // n * prod of per-corner denominators
};

CornerWeights corner_weights(const Partition& lambda) {
    CornerWeights cw;
    cw.corners = removable_corners(lambda);
    const std::size_t count = cw.corners.size();
    const Partition conj = conjugate(lambda);

    std::vector<BigInt> ratio_num(count), ratio_den(count);
    for (std::size_t i = 0; i < count; ++i) {
        const int r = cw.corners[i].row;
        const int q = cw.corners[i].column;
        BigInt num = 1, den = 1;
        for (int j = 1; j < q; ++j) {
            const int h = lambda.row(r) - j + conj.row(j) - r + 1;
            num *= h;
            den *= h - 1;
        }
        for (int i2 = 1; i2 < r; ++i2) {
            const int h = lambda.row(i2) - q + conj.row(q) - i2 + 1;
            num *= h;
            den *= h - 1;
        }
        ratio_num[i] = std::move(num);
        ratio_den[i] = std::move(den);
    }

    // prefix[i] * suffix[i] = product of all denominators except i.
    std::vector<BigInt> prefix(count + 1), suffix(count + 1);
    prefix[0] = 1;
    for (std::size_t i = 0; i < count; ++i) prefix[i + 1] = prefix[i] * ratio_den[i];
    suffix[count] = 1;
    for (std::size_t i = count; i > 0; --i) suffix[i - 1] = suffix[i] * ratio_den[i - 1];

    cw.weights.resize(count);
    BigInt sum = 0;
    for (std::size_t i = 0; i < count; ++i) {
        cw.weights[i] = ratio_num[i] * prefix[i] * suffix[i + 1];
        sum += cw.weights[i];
    }
    cw.total = BigInt(lambda.size()) * prefix[count];
    if (sum != cw.total)
        throw internal_error("corner dimensions do not sum to the parent dimension");
    return cw;
}

Partition remove_corner(const Partition& lambda, const Box& corner) {
    std::vector<int> rows = lambda.rows();
    if (--rows[corner.row - 1] == 0) rows.erase(rows.begin() + (corner.row - 1));
    return Partition(std::move(rows));
}

}  // namespace

Partition restriction_step(const Partition& lambda, SplitMix64& rng) {
    if (lambda.empty()) throw domain_error("cannot restrict the empty diagram");
    const auto corners = removable_corners(lambda);
    if (corners.size() == 1) return remove_corner(lambda, corners[0]);

    const CornerWeights cw = corner_weights(lambda);
    BigInt draw = uniform_below(cw.total, rng);
    for (std::size_t i = 0; i < cw.weights.size(); ++i) {
        if (draw < cw.weights[i]) return remove_corner(lambda, cw.corners[i]);
        draw -= cw.weights[i];
    }
    throw internal_error("corner sampling fell off the cumulative weights");
}

std::vector<Partition> restriction_chain(const Partition& lambda, long m, SplitMix64& rng) {
    if (m < 0 || m > lambda.size()) throw domain_error("target size out of range");
    std::vector<Partition> chain{lambda};
    while (chain.back().size() > m) chain.push_back(restriction_step(chain.back(), rng));
    return chain;
}

Partition restrict_to(const Partition& lambda, long m, SplitMix64& rng) {
    if (m < 0 || m > lambda.size()) throw domain_error("target size out of range");
    Partition current = lambda;
    while (current.size() > m) current = restriction_step(current, rng);
    return current;
}

ScalingReport scaling_experiment(const Partition& lambda, long m, int k, long trials,
                                 std::uint64_t seed, int threads) {
    const long n = lambda.size();
    if (m < 1 || m > n) throw domain_error("m must satisfy 1 <= m <= n");
    if (k < 1) throw domain_error("k must be >= 1");
    if (trials < 1) throw domain_error("trials must be >= 1");

    ScalingReport report;
    report.lambda = lambda;
    report.n = n;
    report.m = m;
    report.k = k;
    report.trials = trials;
    report.seed = seed;
    report.predicted =
        pow_rational(make_rational(m, n), static_cast<unsigned>(k)) *
        free_cumulants(lambda, k + 1).at(k + 1);

    threads = std::max(1, threads);
    if (threads > trials) threads = static_cast<int>(trials);
    std::vector<Rational> sum(threads, Rational(0));
    std::vector<Rational> sum_sq(threads, Rational(0));
    auto run_range = [&](int slot, long begin, long end) {
        Rational local_sum = 0, local_sq = 0;
        for (long t = begin; t < end; ++t) {
            SplitMix64 rng = SplitMix64::for_trial(seed, static_cast<std::uint64_t>(t));
            const Partition mu = restrict_to(lambda, m, rng);
            const Rational x = free_cumulants(mu, k + 1).at(k + 1);
            local_sum += x;
            local_sq += x * x;
        }
        sum[slot] = std::move(local_sum);
        sum_sq[slot] = std::move(local_sq);
    };

    if (threads == 1) {
        run_range(0, 0, trials);
    } else {
        std::vector<std::thread> pool;
        const long chunk = (trials + threads - 1) / threads;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(run_range, t, std::min<long>(t * chunk, trials),
                              std::min<long>((t + 1) * chunk, trials));
        for (auto& th : pool) th.join();
    }
    Rational total = 0, total_sq = 0;
    for (int t = 0; t < threads; ++t) {
        total += sum[t];
        total_sq += sum_sq[t];
    }

    report.mean = total / trials;
    report.estimate = report.mean.get_d();
    if (trials > 1) {
        const Rational variance = (total_sq - Rational(trials) * report.mean * report.mean) /
                                  Rational(trials - 1);
        report.std_error = std::sqrt(std::max(0.0, variance.get_d()) / static_cast<double>(trials));
    }
    return report;
}

}  // namespace symchar
