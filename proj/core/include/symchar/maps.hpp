#pragma once

#include <symchar/arith.hpp>
#include <symchar/partition.hpp>
#include <symchar/permutation.hpp>

#include <functional>
#include <vector>

namespace symchar {

// A unicellular bipartite labeled map with k edges, encoded by the pair
// sigma_white * sigma_black = full cycle (1,2,...,k). White vertices are the
// cycles of sigma_white, black vertices the cycles of sigma_black, both
// listed by smallest edge label. Edge e joins the white and black vertices
// whose cycles contain e.
struct BipartiteMap {
    int k = 0;
    Permutation sigma_white;
    Permutation sigma_black;
    std::vector<std::vector<int>> white_vertices;
    std::vector<std::vector<int>> black_vertices;
    std::vector<int> white_of;  // 0-based white vertex per edge 1..k
    std::vector<int> black_of;  // 0-based black vertex per edge 1..k
    int genus = 0;

    int white_count() const { return static_cast<int>(white_vertices.size()); }
    int black_count() const { return static_cast<int>(black_vertices.size()); }

    // sigma_black is forced: sigma_white^{-1} . full_cycle.
    static BipartiteMap from_sigma_white(const Permutation& sigma_white);
    // Validates sigma_white * sigma_black = [k].
    static BipartiteMap from_pair(const Permutation& sigma_white,
                                  const Permutation& sigma_black);
};

// Euler characteristic with exactly one cell: (k + 1 - #vertices) / 2.
// Throws internal_error if the value is negative or half-integral.
int map_genus(int k, int vertex_count);

// Visits all k! maps (one per sigma_white) in lexicographic order of
// sigma_white's one-line form.
void for_each_map(int k, const std::function<void(const BipartiteMap&)>& visit);

// The slice of the stream with sigma_white(1) = first_image; the k slices
// partition the stream, so workers can split on it.
void for_each_map_with_first(int k, int first_image,
                             const std::function<void(const BipartiteMap&)>& visit);

// Number of incidence-preserving embeddings: white vertices to columns,
// black vertices to rows, every edge landing on a box of lambda.
BigInt embedding_count(const BipartiteMap& m, const Partition& lambda);

// Sum over all k-edge maps of (-1)^(k - #whites) embedding_count; equals
// the normalized character on a k-cycle.
Rational stanley_character(const Partition& lambda, int k, int threads = 1);

}  // namespace symchar
