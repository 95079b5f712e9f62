#include <symchar/permutation.hpp>

#include <algorithm>

namespace symchar {

Permutation::Permutation(std::vector<int> images_one_based)
    : images_(std::move(images_one_based)) {
    const int k = degree();
    std::vector<bool> seen(k, false);
    for (int v : images_) {
        if (v < 1 || v > k || seen[v - 1])
            throw domain_error("images do not form a bijection of {1..k}");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int k) {
    if (k < 0) throw domain_error("negative degree");
    std::vector<int> img(k);
    for (int i = 0; i < k; ++i) img[i] = i + 1;
    return Permutation(std::move(img));
}

Permutation Permutation::full_cycle(int k) {
    if (k < 1) throw domain_error("full cycle needs degree >= 1");
    std::vector<int> img(k);
    for (int i = 0; i < k; ++i) img[i] = (i + 1) % k + 1;
    return Permutation(std::move(img));
}

Permutation Permutation::parse_cycles(const std::string& text, int degree) {
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    int max_point = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        skip_ws();
        if (i != text.size()) throw parse_error("trailing input after 'e'");
    }
    while (i < text.size()) {
        if (text[i] != '(') throw parse_error("expected '(' in cycle notation: '" + text + "'");
        ++i;
        std::vector<int> cycle;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw parse_error("expected point in cycle notation: '" + text + "'");
            int p = std::stoi(text.substr(start, i - start));
            if (p < 1) throw parse_error("points must be >= 1");
            cycle.push_back(p);
            max_point = std::max(max_point, p);
            skip_ws();
            if (i < text.size() && (text[i] == ',' || text[i] == ' ')) {
                ++i;
                skip_ws();
            }
        }
        if (i == text.size()) throw parse_error("unclosed cycle: '" + text + "'");
        ++i;  // ')'
        if (!cycle.empty()) cycles.push_back(std::move(cycle));
        skip_ws();
    }
    int k = degree > 0 ? degree : max_point;
    if (max_point > k) throw parse_error("cycle mentions point beyond the degree");
    std::vector<int> img(k);
    for (int x = 0; x < k; ++x) img[x] = x + 1;
    std::vector<bool> used(k, false);
    for (const auto& cycle : cycles) {
        for (std::size_t j = 0; j < cycle.size(); ++j) {
            int from = cycle[j];
            int to = cycle[(j + 1) % cycle.size()];
            if (used[from - 1]) throw parse_error("point repeated across cycles");
            used[from - 1] = true;
            img[from - 1] = to;
        }
    }
    return Permutation(std::move(img));
}

int Permutation::apply(int x) const {
    if (x < 1 || x > degree()) throw domain_error("point out of range");
    return images_[x - 1];
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int x = 1; x <= degree(); ++x) inv[images_[x - 1] - 1] = x;
    return Permutation(std::move(inv));
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int start = 1; start <= degree(); ++start) {
        if (seen[start - 1]) continue;
        std::vector<int> cycle;
        int x = start;
        do {
            cycle.push_back(x);
            seen[x - 1] = true;
            x = images_[x - 1];
        } while (x != start);
        out.push_back(std::move(cycle));
    }
    return out;
}

int Permutation::cycle_count() const {
    int count = 0;
    std::vector<bool> seen(images_.size(), false);
    for (int start = 1; start <= degree(); ++start) {
        if (seen[start - 1]) continue;
        ++count;
        for (int x = start; !seen[x - 1]; x = images_[x - 1]) seen[x - 1] = true;
    }
    return count;
}

std::string Permutation::cycle_string() const {
    std::string out;
    for (const auto& cycle : cycles()) {
        if (cycle.size() == 1) continue;
        out += '(';
        for (std::size_t j = 0; j < cycle.size(); ++j) {
            if (j) out += ',';
            out += std::to_string(cycle[j]);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
    if (sigma.degree() != tau.degree())
        throw domain_error("compose: degree mismatch");
    std::vector<int> img(sigma.degree());
    for (int x = 1; x <= sigma.degree(); ++x) img[x - 1] = sigma.apply(tau.apply(x));
    return Permutation(std::move(img));
}

}  // namespace symchar
