#pragma once

// Brute-force oracles used only by the test suites; deliberately independent
// of the library's computation paths (no hook formula, no moment recursion).

#include <symchar/arith.hpp>
#include <symchar/partition.hpp>

#include <functional>
#include <map>
#include <vector>

namespace oracle {

using symchar::BigInt;
using symchar::Partition;
using symchar::Rational;

// Standard Young tableaux counted by explicit corner-removal recursion.
inline BigInt syt_count(const Partition& lambda) {
    static std::map<std::vector<int>, BigInt> memo;
    if (lambda.empty()) return 1;
    if (auto it = memo.find(lambda.rows()); it != memo.end()) return it->second;
    BigInt total = 0;
    for (const auto& corner : removable_corners(lambda)) {
        std::vector<int> rows = lambda.rows();
        if (--rows[corner.row - 1] == 0) rows.erase(rows.begin() + (corner.row - 1));
        total += syt_count(Partition(rows));
    }
    memo.emplace(lambda.rows(), total);
    return total;
}

// For each shape mu of size m, the number of removal paths lambda -> mu -> empty;
// dividing by syt_count(lambda) gives the exact law of the m-box prefix shape
// of a uniform standard Young tableau.
inline std::map<std::vector<int>, BigInt> prefix_shape_counts(const Partition& lambda,
                                                              long m) {
    std::map<std::vector<int>, BigInt> tally;
    std::function<void(const Partition&)> walk = [&](const Partition& shape) {
        if (shape.size() == m) {
            tally[shape.rows()] += syt_count(shape);
            return;
        }
        for (const auto& corner : removable_corners(shape)) {
            std::vector<int> rows = shape.rows();
            if (--rows[corner.row - 1] == 0) rows.erase(rows.begin() + (corner.row - 1));
            walk(Partition(rows));
        }
    };
    walk(lambda);
    return tally;
}

// All set partitions of {0,...,k-1}.
inline void for_each_set_partition(
    int k, const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
    std::vector<std::vector<int>> blocks;
    std::function<void(int)> place = [&](int next) {
        if (next == k) {
            emit(blocks);
            return;
        }
        const std::size_t count = blocks.size();  // recursion grows the vector
        for (std::size_t i = 0; i < count; ++i) {
            blocks[i].push_back(next);
            place(next + 1);
            blocks[i].pop_back();
        }
        blocks.push_back({next});
        place(next + 1);
        blocks.pop_back();
    };
    place(0);
}

inline bool is_crossing(const std::vector<std::vector<int>>& blocks) {
    const int k = [&] {
        int max_el = 0;
        for (const auto& b : blocks)
            for (int x : b) max_el = std::max(max_el, x);
        return max_el + 1;
    }();
    std::vector<int> block_of(k, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int x : blocks[b]) block_of[x] = static_cast<int>(b);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            for (int c = b + 1; c < k; ++c)
                for (int d = c + 1; d < k; ++d)
                    if (block_of[a] == block_of[c] && block_of[b] == block_of[d] &&
                        block_of[a] != block_of[b])
                        return true;
    return false;
}

// M_k as the sum over non-crossing partitions of products of R_{|block|};
// cumulants[i] holds R_{i+1}.
inline Rational nc_moment(const std::vector<Rational>& cumulants, int k) {
    Rational total = 0;
    for_each_set_partition(k, [&](const std::vector<std::vector<int>>& blocks) {
        if (is_crossing(blocks)) return;
        Rational product = 1;
        for (const auto& block : blocks)
            product *= cumulants.at(block.size() - 1);
        total += product;
    });
    return total;
}

// Exact Lagrange interpolation through (xs[i], ys[i]), evaluated at x.
inline Rational lagrange_at(const std::vector<long>& xs, const std::vector<Rational>& ys,
                            long x) {
    Rational total = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Rational term = ys[i];
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            term *= symchar::make_rational(x - xs[j], xs[i] - xs[j]);
        }
        total += term;
    }
    return total;
}

}  // namespace oracle
