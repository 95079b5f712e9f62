#pragma once

#include <symchar/characters.hpp>
#include <symchar/rpoly.hpp>

#include <vector>

namespace symchar {

// The unique polynomial P in R_2, R_3, ... with Ch_k(lambda) = P(R(lambda))
// for every Young diagram. Solved exactly from character evaluations on
// small diagrams; full column rank and a zero residual on held-out diagrams
// are verified, and the coefficients are checked to be integers.
RPolynomial kerov_polynomial(int k);

// Same scheme for the normalized character on several disjoint cycles.
// Candidate monomials have weight <= sum(cycles) + #cycles with matching
// parity. Coefficients may be non-integral in general and are not checked.
RPolynomial multi_kerov_polynomial(const CycleArgument& arg);

// Set-partition cumulant of Ch_{c_1}, ..., Ch_{c_r}: the Moebius-inverted
// combination of multi-cycle polynomials. For two arguments this is the
// covariance Ch_{k,l} - Ch_k Ch_l.
RPolynomial cumulant_polynomial(const std::vector<int>& cycle_lengths);

}  // namespace symchar
