#pragma once

#include <symchar/maps.hpp>
#include <symchar/rpoly.hpp>

#include <optional>
#include <vector>

namespace symchar {

// A map with each black vertex decorated by an index i >= 2 (the label
// R_i). decorations[v] belongs to black vertex v in the map's canonical
// black order (cycles by smallest edge label).
struct DecoratedMap {
    BipartiteMap map;
    std::vector<int> decorations;

    DecoratedMap(BipartiteMap m, std::vector<int> decor);
};

// Whether the transportation problem has a solution in which every edge
// carries a strictly positive amount: white vertices supply one unit each,
// the black vertex decorated R_i demands i - 1 units, edges transport from
// white to black only. Decided exactly: a nonnegative feasible flow must
// exist and every edge must individually support positive flow in some
// feasible flow; averaging those witnesses yields a simultaneous strictly
// positive flow.
bool strictly_positive_feasible(const DecoratedMap& d);

// The averaged witness itself: one exact positive rational per edge
// (1-indexed order), satisfying every supply and demand; nullopt when the
// strictly positive problem is infeasible.
std::optional<std::vector<Rational>> strictly_positive_witness(const DecoratedMap& d);

// True iff the underlying multigraph has a bridge that is not the pendant
// edge of a degree-1 white vertex. Maps contributing to Kerov coefficients
// never have one.
bool has_disallowed_disconnecting_edge(const BipartiteMap& m);

// Over all k-edge maps whose black count matches the multiset size, the
// number of (map, decoration assignment) pairs passing the strict
// positivity test; assignments to distinguishable black vertices, each
// distinct arrangement of the multiset counted once. Equals the coefficient
// of the corresponding monomial in kerov_polynomial(k).
BigInt count_decorated_maps(int k, const std::vector<int>& decoration_multiset,
                            int threads = 1);

// kerov_polynomial(k) assembled purely from decorated-map counts over the
// full candidate monomial set.
RPolynomial kerov_polynomial_via_maps(int k, int threads = 1);

}  // namespace symchar
