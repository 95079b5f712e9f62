#pragma once

#include <symchar/arith.hpp>

#include <variant>
#include <vector>

namespace symchar {

enum class SolveFailure { rank_deficient, inconsistent };

// Solves the (typically overdetermined) system A x = b by exact fraction-free
// style Gaussian elimination over the rationals. Succeeds only when A has
// full column rank and the system is consistent, so the solution is unique.
std::variant<std::vector<Rational>, SolveFailure> solve_exact(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace symchar
