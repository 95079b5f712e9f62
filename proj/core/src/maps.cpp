#include <symchar/maps.hpp>

#include <algorithm>
#include <cmath>
#include <thread>

namespace symchar {

namespace {

void fill_vertices(BipartiteMap& m) {
    m.white_vertices = m.sigma_white.cycles();
    m.black_vertices = m.sigma_black.cycles();
    m.white_of.assign(m.k, -1);
    m.black_of.assign(m.k, -1);
    for (int v = 0; v < m.white_count(); ++v)
        for (int e : m.white_vertices[v]) m.white_of[e - 1] = v;
    for (int v = 0; v < m.black_count(); ++v)
        for (int e : m.black_vertices[v]) m.black_of[e - 1] = v;
    m.genus = map_genus(m.k, m.white_count() + m.black_count());
}

}  // namespace

int map_genus(int k, int vertex_count) {
    const int twice = k + 1 - vertex_count;
    if (twice < 0 || twice % 2 != 0)
        throw internal_error("malformed map: Euler characteristic does not fit one cell");
    return twice / 2;
}

BipartiteMap BipartiteMap::from_sigma_white(const Permutation& sigma_white) {
    const int k = sigma_white.degree();
    if (k < 1) throw domain_error("maps need at least one edge");
    BipartiteMap m;
    m.k = k;
    m.sigma_white = sigma_white;
    m.sigma_black = compose(sigma_white.inverse(), Permutation::full_cycle(k));
    fill_vertices(m);
    return m;
}

BipartiteMap BipartiteMap::from_pair(const Permutation& sigma_white,
                                     const Permutation& sigma_black) {
    const int k = sigma_white.degree();
    if (k < 1) throw domain_error("maps need at least one edge");
    if (compose(sigma_white, sigma_black) != Permutation::full_cycle(k))
        throw domain_error("sigma_white * sigma_black is not the full cycle");
    BipartiteMap m;
    m.k = k;
    m.sigma_white = sigma_white;
    m.sigma_black = sigma_black;
    fill_vertices(m);
    return m;
}

void for_each_map(int k, const std::function<void(const BipartiteMap&)>& visit) {
    if (k < 1) throw domain_error("maps need at least one edge");
    std::vector<int> images(k);
    for (int i = 0; i < k; ++i) images[i] = i + 1;
    do {
        visit(BipartiteMap::from_sigma_white(Permutation(images)));
    } while (std::next_permutation(images.begin(), images.end()));
}

BigInt embedding_count(const BipartiteMap& m, const Partition& lambda) {
    if (lambda.empty()) return 0;

    // Group equal row lengths: an assignment of black vertices to rows only
    // depends on the length class, weighted by the class multiplicities.
    std::vector<long> value;  // distinct row lengths, longest first
    std::vector<long> mult;
    for (int r = 1; r <= lambda.length(); ++r) {
        if (!value.empty() && value.back() == lambda.row(r)) {
            ++mult.back();
        } else {
            value.push_back(lambda.row(r));
            mult.push_back(1);
        }
    }
    const int classes = static_cast<int>(value.size());
    const int blacks = m.black_count();
    const int whites = m.white_count();

    // Incident black vertices per white vertex, deduplicated.
    std::vector<std::vector<int>> incident(whites);
    for (int e = 1; e <= m.k; ++e) {
        auto& list = incident[m.white_of[e - 1]];
        const int b = m.black_of[e - 1];
        if (std::find(list.begin(), list.end(), b) == list.end()) list.push_back(b);
    }

    const double log2_bound =
        blacks * std::log2(static_cast<double>(lambda.length() + 1)) +
        whites * std::log2(static_cast<double>(value[0] + 1));
    const bool fits_u64 = log2_bound < 62.0;

    BigInt total = 0;
    std::vector<int> assign(blacks, 0);
    for (;;) {
        if (fits_u64) {
            unsigned long product = 1;
            for (int b = 0; b < blacks; ++b) product *= mult[assign[b]];
            for (int w = 0; w < whites; ++w) {
                long best = value[assign[incident[w][0]]];
                for (std::size_t t = 1; t < incident[w].size(); ++t)
                    best = std::min(best, value[assign[incident[w][t]]]);
                product *= static_cast<unsigned long>(best);
            }
            total += product;
        } else {
            BigInt product = 1;
            for (int b = 0; b < blacks; ++b) product *= mult[assign[b]];
            for (int w = 0; w < whites; ++w) {
                long best = value[assign[incident[w][0]]];
                for (std::size_t t = 1; t < incident[w].size(); ++t)
                    best = std::min(best, value[assign[incident[w][t]]]);
                product *= best;
            }
            total += product;
        }
        int pos = blacks - 1;
        while (pos >= 0 && assign[pos] == classes - 1) assign[pos--] = 0;
        if (pos < 0) break;
        ++assign[pos];
    }
    return total;
}

void for_each_map_with_first(int k, int first_image,
                             const std::function<void(const BipartiteMap&)>& visit) {
    if (k < 1) throw domain_error("maps need at least one edge");
    if (first_image < 1 || first_image > k) throw domain_error("first image out of range");
    std::vector<int> rest;
    for (int v = 1; v <= k; ++v)
        if (v != first_image) rest.push_back(v);
    std::vector<int> images(k);
    images[0] = first_image;
    do {
        std::copy(rest.begin(), rest.end(), images.begin() + 1);
        visit(BipartiteMap::from_sigma_white(Permutation(images)));
    } while (std::next_permutation(rest.begin(), rest.end()));
}

Rational stanley_character(const Partition& lambda, int k, int threads) {
    if (k < 1) throw domain_error("stanley_character: k must be >= 1");
    threads = std::max(1, std::min(threads, k));

    std::vector<BigInt> partial(k, BigInt(0));
    auto run_first = [&](int first_image) {
        BigInt acc = 0;
        for_each_map_with_first(k, first_image, [&](const BipartiteMap& m) {
            const BigInt count = embedding_count(m, lambda);
            if ((k - m.white_count()) % 2)
                acc -= count;
            else
                acc += count;
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
    for (const BigInt& p : partial) total += p;  // fixed order, thread-count independent
    return Rational(total);
}

}  // namespace symchar
