#include <symchar/transport.hpp>

#include <algorithm>
#include <deque>
#include <functional>
#include <thread>

namespace symchar {

DecoratedMap::DecoratedMap(BipartiteMap m, std::vector<int> decor)
    : map(std::move(m)), decorations(std::move(decor)) {
    if (static_cast<int>(decorations.size()) != map.black_count())
        throw domain_error("one decoration per black vertex required");
    for (int d : decorations)
        if (d < 2) throw domain_error("decorations must be >= 2");
}

namespace {

// Integer flow on the worker network. Edge e (0-based) carries flow[e]
// from its white to its black vertex; capacities are unbounded, so the
// residual graph has every forward arc plus backward arcs where flow > 0.
struct FlowState {
    const BipartiteMap* m;
    std::vector<long> flow;

    explicit FlowState(const BipartiteMap& map) : m(&map), flow(map.k, 0) {}
};

// One BFS augmentation from any white with spare supply to any black with
// unmet demand. Returns the amount moved (0 when no augmenting path).
long augment_once(FlowState& st, std::vector<long>& supply_left,
                  std::vector<long>& demand_left) {
    const BipartiteMap& m = *st.m;
    const int whites = m.white_count();
    const int nodes = whites + m.black_count();
    std::vector<int> parent_edge(nodes, -2);  // -2 unvisited, -1 root
    std::deque<int> queue;
    for (int w = 0; w < whites; ++w)
        if (supply_left[w] > 0) {
            parent_edge[w] = -1;
            queue.push_back(w);
        }
    int reached = -1;
    while (!queue.empty() && reached < 0) {
        const int node = queue.front();
        queue.pop_front();
        if (node < whites) {
            for (int e = 0; e < m.k; ++e) {
                if (m.white_of[e] != node) continue;
                const int b = whites + m.black_of[e];
                if (parent_edge[b] != -2) continue;
                parent_edge[b] = e;
                if (demand_left[m.black_of[e]] > 0) {
                    reached = m.black_of[e];
                    break;
                }
                queue.push_back(b);
            }
        } else {
            const int b = node - whites;
            for (int e = 0; e < m.k; ++e) {
                if (m.black_of[e] != b || st.flow[e] <= 0) continue;
                const int w = m.white_of[e];
                if (parent_edge[w] != -2) continue;
                parent_edge[w] = e;
                queue.push_back(w);
            }
        }
    }
    if (reached < 0) return 0;

    long delta = demand_left[reached];
    int root = whites + reached;
    while (parent_edge[root] != -1) {
        const int e = parent_edge[root];
        if (root >= whites) {
            root = m.white_of[e];  // arrived forward, no capacity bound
        } else {
            delta = std::min(delta, st.flow[e]);  // arrived backward
            root = whites + m.black_of[e];
        }
    }
    delta = std::min(delta, supply_left[root]);

    for (int node = whites + reached; parent_edge[node] != -1;) {
        const int e = parent_edge[node];
        if (node >= whites) {
            st.flow[e] += delta;
            node = m.white_of[e];
        } else {
            st.flow[e] -= delta;
            node = whites + m.black_of[e];
        }
    }
    supply_left[root] -= delta;
    demand_left[reached] -= delta;
    return delta;
}

// Any nonnegative flow meeting supplies and demands exactly, or nullopt.
std::optional<FlowState> feasible_flow(const DecoratedMap& d) {
    const BipartiteMap& m = d.map;
    long demand = 0;
    for (int dec : d.decorations) demand += dec - 1;
    if (m.white_count() != demand) return std::nullopt;

    FlowState st(m);
    std::vector<long> supply_left(m.white_count(), 1);
    std::vector<long> demand_left(m.black_count());
    for (int b = 0; b < m.black_count(); ++b) demand_left[b] = d.decorations[b] - 1;
    long remaining = demand;
    while (remaining > 0) {
        const long moved = augment_once(st, supply_left, demand_left);
        if (moved == 0) return std::nullopt;
        remaining -= moved;
    }
    return st;
}

// A residual path black(e) ~> white(e) as (edge, +1 increase / -1 decrease)
// steps; shifting the flow along it lets edge e carry positive value.
using ResidualPath = std::vector<std::pair<int, int>>;

bool residual_path_for_edge(const FlowState& st, int e, ResidualPath* path) {
    const BipartiteMap& m = *st.m;
    const int whites = m.white_count();
    const int start = whites + m.black_of[e];
    const int target = m.white_of[e];

    std::vector<int> parent_edge(whites + m.black_count(), -2);
    parent_edge[start] = -1;
    std::deque<int> queue{start};
    bool found = false;
    while (!queue.empty() && !found) {
        const int node = queue.front();
        queue.pop_front();
        if (node >= whites) {
            const int b = node - whites;
            for (int f = 0; f < m.k; ++f) {
                if (m.black_of[f] != b || st.flow[f] <= 0) continue;
                const int w = m.white_of[f];
                if (parent_edge[w] != -2) continue;
                parent_edge[w] = f;
                if (w == target) {
                    found = true;
                    break;
                }
                queue.push_back(w);
            }
        } else {
            for (int f = 0; f < m.k; ++f) {
                if (m.white_of[f] != node) continue;
                const int b = whites + m.black_of[f];
                if (parent_edge[b] != -2) continue;
                parent_edge[b] = f;
                queue.push_back(b);
            }
        }
    }
    if (!found) return false;
    if (path) {
        // Walk back from the white target to the starting black vertex.
        for (int node = target; parent_edge[node] != -1;) {
            const int f = parent_edge[node];
            if (node < whites) {
                path->emplace_back(f, -1);  // backward arc black -> white
                node = whites + m.black_of[f];
            } else {
                path->emplace_back(f, +1);  // forward arc white -> black
                node = m.white_of[f];
            }
        }
    }
    return true;
}

}  // namespace

bool strictly_positive_feasible(const DecoratedMap& d) {
    auto base = feasible_flow(d);
    if (!base) return false;
    for (int e = 0; e < d.map.k; ++e)
        if (base->flow[e] == 0 && !residual_path_for_edge(*base, e, nullptr)) return false;
    return true;
}

std::optional<std::vector<Rational>> strictly_positive_witness(const DecoratedMap& d) {
    auto base = feasible_flow(d);
    if (!base) return std::nullopt;
    const int k = d.map.k;

    // One feasible witness per edge, each positive on its own edge; the
    // average is feasible and strictly positive on every edge at once.
    std::vector<Rational> average(k, Rational(0));
    for (int e = 0; e < k; ++e) {
        std::vector<Rational> w(k);
        for (int f = 0; f < k; ++f) w[f] = Rational(base->flow[f]);
        if (base->flow[e] == 0) {
            ResidualPath path;
            if (!residual_path_for_edge(*base, e, &path)) return std::nullopt;
            long bottleneck = 0;
            for (auto [f, dir] : path)
                if (dir < 0 && (bottleneck == 0 || base->flow[f] < bottleneck))
                    bottleneck = base->flow[f];
            // Half the bottleneck keeps every decreased arc nonnegative.
            const Rational delta = make_rational(bottleneck, 2L);
            w[e] += delta;
            for (auto [f, dir] : path) w[f] += dir < 0 ? -delta : delta;
        }
        for (int f = 0; f < k; ++f) average[f] += w[f];
    }
    const Rational scale = make_rational(1L, static_cast<long>(k));
    for (int f = 0; f < k; ++f) {
        average[f] *= scale;
        if (average[f] <= 0) throw internal_error("averaged witness not strictly positive");
    }
    return average;
}

bool has_disallowed_disconnecting_edge(const BipartiteMap& m) {
    const int whites = m.white_count();
    const int nodes = whites + m.black_count();

    std::vector<std::vector<std::pair<int, int>>> adj(nodes);  // (neighbor, edge id)
    std::vector<int> degree(nodes, 0);
    for (int e = 0; e < m.k; ++e) {
        const int w = m.white_of[e];
        const int b = whites + m.black_of[e];
        adj[w].emplace_back(b, e);
        adj[b].emplace_back(w, e);
        ++degree[w];
        ++degree[b];
    }

    // Standard bridge DFS; a parallel edge is never a bridge because only
    // the traversed edge id is skipped, not the whole neighbor.
    std::vector<int> disc(nodes, -1), low(nodes, 0);
    std::vector<bool> bridge(m.k, false);
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int v, int via_edge) {
        disc[v] = low[v] = timer++;
        for (auto [to, e] : adj[v]) {
            if (e == via_edge) continue;
            if (disc[to] < 0) {
                dfs(to, e);
                low[v] = std::min(low[v], low[to]);
                if (low[to] > disc[v]) bridge[e] = true;
            } else {
                low[v] = std::min(low[v], disc[to]);
            }
        }
    };
    dfs(0, -1);  // unicellular maps are connected

    for (int e = 0; e < m.k; ++e)
        if (bridge[e] && degree[m.white_of[e]] != 1) return true;
    return false;
}

namespace {

BigInt count_for_map(const BipartiteMap& m, const std::vector<int>& sorted_multiset,
                     long needed_whites) {
    if (m.black_count() != static_cast<int>(sorted_multiset.size())) return 0;
    if (m.white_count() != needed_whites) return 0;  // balance screen
    BigInt count = 0;
    std::vector<int> arrangement = sorted_multiset;
    do {
        if (strictly_positive_feasible(DecoratedMap(m, arrangement))) ++count;
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    return count;
}

}  // namespace

BigInt count_decorated_maps(int k, const std::vector<int>& decoration_multiset,
                            int threads) {
    if (k < 1) throw domain_error("count_decorated_maps: k must be >= 1");
    for (int d : decoration_multiset)
        if (d < 2) throw domain_error("decorations must be >= 2");
    std::vector<int> sorted_multiset = decoration_multiset;
    std::sort(sorted_multiset.begin(), sorted_multiset.end());
    long needed_whites = 0;
    for (int d : sorted_multiset) needed_whites += d - 1;

    threads = std::max(1, std::min(threads, k));
    std::vector<BigInt> partial(k, BigInt(0));
    auto run_first = [&](int first_image) {
        BigInt acc = 0;
        for_each_map_with_first(k, first_image, [&](const BipartiteMap& m) {
            acc += count_for_map(m, sorted_multiset, needed_whites);
        });
        partial[first_image - 1] = std::move(acc);
    };
    if (threads == 1) {
        for (int first = 1; first <= k; ++first) run_first(first);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (int first = t + 1; first <= k; first += threads) run_first(first);
            });
        for (auto& th : pool) th.join();
    }
    BigInt total = 0;
    for (const BigInt& p : partial) total += p;
    return total;
}

RPolynomial kerov_polynomial_via_maps(int k, int threads) {
    if (k < 1) throw domain_error("kerov_polynomial_via_maps: k must be >= 1");
    RPolynomial poly;
    for (const Monomial& mono : candidate_monomials(k + 1, (k + 1) % 2)) {
        if (mono.empty()) continue;  // no decorated map realizes the constant term
        const BigInt coeff = count_decorated_maps(k, mono, threads);
        if (coeff != 0) poly.add_term(mono, Rational(coeff));
    }
    return poly;
}

}  // namespace symchar
