#pragma once

#include <symchar/arith.hpp>
#include <symchar/partition.hpp>

#include <vector>

namespace symchar {

// Atomic probability measure with integer atom locations. For a Young
// diagram the atoms sit at the concave-corner contents and the weights are
// the residues of prod(z - y_j) / prod(z - x_i); they are positive and sum
// to exactly 1.
struct TransitionMeasure {
    std::vector<int> locations;      // strictly increasing
    std::vector<Rational> weights;   // positive, sum to 1
};

// Moments M_1, M_2, ...; M_0 = 1 implicit.
struct MomentSequence {
    std::vector<Rational> values;

    int max_order() const { return static_cast<int>(values.size()); }
    Rational at(int k) const;  // M_k, with at(0) = 1
};

// Free cumulants R_1, R_2, ...
struct FreeCumulantSequence {
    std::vector<Rational> values;

    int max_order() const { return static_cast<int>(values.size()); }
    Rational at(int k) const;  // R_k
};

TransitionMeasure transition_measure(const Partition& lambda);

MomentSequence moments(const TransitionMeasure& m, int k_max);

// Inverts the free moment-cumulant relation
//   M_k = sum_{s=1..k} R_s sum_{i_1+...+i_s = k-s} M_{i_1} ... M_{i_s},
// i.e. the sum over non-crossing partitions of products of R_{|block|}.
FreeCumulantSequence moments_to_free_cumulants(const MomentSequence& m);

// The forward map; exact inverse of moments_to_free_cumulants.
MomentSequence free_cumulants_to_moments(const FreeCumulantSequence& r);

// R_1..R_{k_max} of a Young diagram via its transition measure.
// R_1 = 0 and R_2 = n always; both are checked.
FreeCumulantSequence free_cumulants(const Partition& lambda, int k_max);

// 2 * integral of (x - y) over the diagram; equals R_3(lambda).
Rational geometric_r3(const Partition& lambda);

// Which term is subtracted from 3 * integral of (x-y)^2 in the geometric
// R_4 expression. The quadratic form (3/2) n^2 matches the transition
// measure value; the linear form (3/2) n is kept for comparison only and
// disagrees for every diagram with n >= 2.
enum class R4Subtraction { quadratic, linear };

Rational geometric_r4(const Partition& lambda,
                      R4Subtraction subtraction = R4Subtraction::quadratic);

}  // namespace symchar
