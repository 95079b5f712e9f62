#include <symchar/characters.hpp>

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace symchar {

CycleArgument::CycleArgument(std::vector<int> cycles) : cycles_(std::move(cycles)) {
    for (int c : cycles_)
        if (c < 1) throw domain_error("cycle lengths must be >= 1");
    std::sort(cycles_.begin(), cycles_.end(), std::greater<int>());
    total_ = 0;
    for (int c : cycles_) total_ += c;
}

CycleArgument CycleArgument::parse(const std::string& text) {
    std::vector<int> cycles;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            cycles.push_back(v);
        } catch (const std::exception&) {
            throw parse_error("bad cycle length '" + item + "' in '" + text + "'");
        }
    }
    if (cycles.empty()) throw parse_error("empty cycle list");
    try {
        return CycleArgument(std::move(cycles));
    } catch (const domain_error& e) {
        throw parse_error(e.what());
    }
}

BigInt dimension(const Partition& lambda) {
    if (lambda.empty()) return 1;
    const Partition conj = conjugate(lambda);
    BigInt hooks = 1;
    for (int r = 1; r <= lambda.length(); ++r)
        for (int c = 1; c <= lambda.row(r); ++c)
            hooks *= lambda.row(r) - c + conj.row(c) - r + 1;
    BigInt dim;
    mpz_divexact(dim.get_mpz_t(), factorial(static_cast<unsigned>(lambda.size())).get_mpz_t(),
                 hooks.get_mpz_t());
    return dim;
}

namespace {

// Beta-set of a partition: strictly decreasing first-column hook lengths.
// Removing a border strip of size t means lowering one beta value by t
// without colliding; the strip height parity is the number of beta values
// jumped over.
std::vector<int> beta_set(const std::vector<int>& rows) {
    const int len = static_cast<int>(rows.size());
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = rows[i] + (len - 1 - i);
    return beta;
}

std::vector<int> partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    const int len = static_cast<int>(beta.size());
    std::vector<int> rows;
    for (int i = 0; i < len; ++i) {
        int r = beta[i] - (len - 1 - i);
        if (r > 0) rows.push_back(r);
    }
    return rows;
}

struct VecIntHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ULL;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL;
            h *= 1099511628211ULL;
        }
        return h;
    }
};

using MnMemo = std::unordered_map<std::vector<int>, BigInt, VecIntHash>;

// parts is sorted descending; idx is the next part to strip.
BigInt mn_recurse(const std::vector<int>& rows, const std::vector<int>& parts,
                  std::size_t idx, MnMemo& memo) {
    if (idx == parts.size()) return rows.empty() ? 1 : 0;

    std::vector<int> key = rows;
    key.push_back(-1);
    key.insert(key.end(), parts.begin() + static_cast<long>(idx), parts.end());
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int t = parts[idx];
    const std::vector<int> beta = beta_set(rows);
    BigInt total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - t;
        if (target < 0) continue;
        bool collision = false;
        int height = 0;
        for (std::size_t j = 0; j < beta.size(); ++j) {
            if (j == i) continue;
            if (beta[j] == target) {
                collision = true;
                break;
            }
            if (beta[j] > target && beta[j] < beta[i]) ++height;
        }
        if (collision) continue;
        std::vector<int> next_beta = beta;
        next_beta[i] = target;
        BigInt sub = mn_recurse(partition_from_beta(std::move(next_beta)), parts, idx + 1, memo);
        if (height % 2)
            total -= sub;
        else
            total += sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

MnMemo& mn_memo() {
    thread_local MnMemo memo;
    return memo;
}

}  // namespace

BigInt mn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw domain_error("mn_character: |lambda| != |mu|");
    if (lambda.empty()) return 1;
    return mn_recurse(lambda.rows(), mu.rows(), 0, mn_memo());
}

Rational normalized_character(const Partition& lambda, const CycleArgument& arg) {
    const long n = lambda.size();
    const long K = arg.total();
    if (n < K) return Rational(0);

    std::vector<int> parts = arg.cycles();
    parts.insert(parts.end(), static_cast<std::size_t>(n - K), 1);
    const BigInt chi = mn_character(lambda, Partition(std::move(parts)));
    const Rational value =
        make_rational(falling_factorial(n, static_cast<unsigned>(K)) * chi, dimension(lambda));
    if (!is_integer(value))
        throw internal_error("normalized character came out non-integral for lambda=" +
                             lambda.to_string());
    return value;
}

}  // namespace symchar
