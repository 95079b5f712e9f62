#include <symchar/linalg.hpp>

namespace symchar {

std::variant<std::vector<Rational>, SolveFailure> solve_exact(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t rows = a.size();
    if (b.size() != rows) throw domain_error("solve_exact: shape mismatch");
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    for (const auto& row : a)
        if (row.size() != cols) throw domain_error("solve_exact: ragged matrix");

    std::vector<std::size_t> pivot_row(cols);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;  // rank deficiency detected after the loop
        std::swap(a[pivot], a[rank]);
        std::swap(b[pivot], b[rank]);
        const Rational inv = Rational(1) / a[rank][col];
        for (std::size_t j = col; j < cols; ++j) a[rank][j] *= inv;
        b[rank] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            const Rational factor = a[i][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= factor * a[rank][j];
            b[i] -= factor * b[rank];
        }
        pivot_row[col] = rank;
        ++rank;
    }
    if (rank < cols) return SolveFailure::rank_deficient;
    for (std::size_t i = rank; i < rows; ++i)
        if (b[i] != 0) return SolveFailure::inconsistent;

    std::vector<Rational> x(cols);
    for (std::size_t col = 0; col < cols; ++col) x[col] = b[pivot_row[col]];
    return x;
}

}  // namespace symchar
