#include <symchar/partition.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace symchar {

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] < 1)
            throw domain_error("partition rows must be positive");
        if (i > 0 && rows_[i] > rows_[i - 1])
            throw domain_error("partition rows must be weakly decreasing");
    }
    n_ = std::accumulate(rows_.begin(), rows_.end(), 0L);
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> rows;
    std::size_t pos = 0;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t end = text.size();
    while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    if (pos == end) return Partition{};
    std::string body = text.substr(pos, end - pos);
    std::istringstream in(body);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
            if (used != item.size()) throw std::invalid_argument(item);
            rows.push_back(v);
        } catch (const std::exception&) {
            throw parse_error("bad partition entry '" + item + "' in '" + text + "'");
        }
    }
    if (body.back() == ',')
        throw parse_error("trailing comma in partition '" + text + "'");
    try {
        return Partition(std::move(rows));
    } catch (const domain_error& e) {
        throw parse_error(std::string(e.what()) + ": '" + text + "'");
    }
}

Partition Partition::staircase(int k) {
    std::vector<int> rows;
    for (int r = k; r >= 1; --r) rows.push_back(r);
    return Partition(std::move(rows));
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(rows_[i]);
    }
    return out;
}

Partition dilate(const Partition& lambda, int s) {
    if (s < 1) throw domain_error("dilation factor must be >= 1");
    std::vector<int> rows;
    rows.reserve(static_cast<std::size_t>(lambda.length()) * s);
    for (int r : lambda.rows())
        for (int j = 0; j < s; ++j) rows.push_back(r * s);
    return Partition(std::move(rows));
}

Partition conjugate(const Partition& lambda) {
    if (lambda.empty()) return Partition{};
    std::vector<int> cols(lambda.rows()[0]);
    for (int c = 1; c <= lambda.rows()[0]; ++c) {
        int height = 0;
        while (height < lambda.length() && lambda.rows()[height] >= c) ++height;
        cols[c - 1] = height;
    }
    return Partition(std::move(cols));
}

std::vector<int> contents(const Partition& lambda) {
    std::vector<int> out;
    out.reserve(lambda.size());
    for (int r = 1; r <= lambda.length(); ++r)
        for (int c = 1; c <= lambda.row(r); ++c) out.push_back(c - r);
    return out;
}

CornerCoordinates corner_coordinates(const Partition& lambda) {
    CornerCoordinates cc;
    const int len = lambda.length();
    // Walk rows bottom-up so contents come out increasing.
    // Addable: row len+1 always; row i where a box fits (lambda_i < lambda_{i-1}).
    // Removable: row i where lambda_i > lambda_{i+1}.
    cc.minima.push_back(-len);
    for (int i = len; i >= 1; --i) {
        if (lambda.row(i) > lambda.row(i + 1))
            cc.maxima.push_back(lambda.row(i) - i);
        if (i == 1 || lambda.row(i) < lambda.row(i - 1))
            cc.minima.push_back(lambda.row(i) + 1 - i);
    }
    return cc;
}

std::vector<Box> removable_corners(const Partition& lambda) {
    std::vector<Box> out;
    for (int i = 1; i <= lambda.length(); ++i)
        if (lambda.row(i) > lambda.row(i + 1)) out.push_back(Box{i, lambda.row(i)});
    return out;
}

int hook_length(const Partition& lambda, int row, int column) {
    int arm = lambda.row(row) - column;
    int leg = 0;
    for (int i = row + 1; i <= lambda.length() && lambda.row(i) >= column; ++i) ++leg;
    return arm + leg + 1;
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& acc,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        acc.push_back(part);
        emit_partitions(remaining - part, part, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw domain_error("partitions_of: negative size");
    std::vector<Partition> out;
    std::vector<int> acc;
    emit_partitions(n, n == 0 ? 1 : n, acc, out);
    return out;
}

std::vector<Partition> partitions_up_to(int max_size) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_size; ++n) {
        auto pn = partitions_of(n);
        out.insert(out.end(), pn.begin(), pn.end());
    }
    return out;
}

}  // namespace symchar
