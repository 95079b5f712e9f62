#pragma once

#include <symchar/arith.hpp>
#include <symchar/partition.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace symchar {

// Deterministic 64-bit generator; trial streams are derived from
// (seed, trial index) so results do not depend on how trials are split
// across workers.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static SplitMix64 for_trial(std::uint64_t seed, std::uint64_t trial);

    std::uint64_t next();

  private:
    std::uint64_t state_;
};

inline constexpr const char* kRngName = "splitmix64";

// Uniform big integer in [0, bound), bound > 0, by rejection on the top
// chunk of random bits.
BigInt uniform_below(const BigInt& bound, SplitMix64& rng);

// Removes one removable corner, chosen with probability
// dimension(lambda minus corner) / dimension(lambda). The corner weights
// are exact integers derived from hook length ratios; their sum is checked
// against the total, so the branching probabilities sum to exactly 1.
Partition restriction_step(const Partition& lambda, SplitMix64& rng);

// The whole trajectory lambda = mu_n, mu_{n-1}, ..., mu_m; consecutive
// shapes differ by one removable corner.
std::vector<Partition> restriction_chain(const Partition& lambda, long m, SplitMix64& rng);

// Final shape only; distributed as the shape of the first m entries of a
// uniform standard Young tableau of lambda.
Partition restrict_to(const Partition& lambda, long m, SplitMix64& rng);

struct ScalingReport {
    Partition lambda;
    long n = 0;
    long m = 0;
    int k = 0;
    long trials = 0;
    std::uint64_t seed = 0;
    Rational predicted;    // (m/n)^k R_{k+1}(lambda)
    Rational mean;         // exact sample mean of R_{k+1}(mu)
    double estimate = 0;   // mean as a double
    double std_error = 0;  // sample standard error
    std::string rng_name = kRngName;
};

// Monte Carlo check of the restriction scaling law. Deterministic given the
// seed, for any thread count.
ScalingReport scaling_experiment(const Partition& lambda, long m, int k, long trials,
                                 std::uint64_t seed, int threads = 1);

}  // namespace symchar
