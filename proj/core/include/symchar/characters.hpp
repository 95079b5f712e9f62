#pragma once

#include <symchar/arith.hpp>
#include <symchar/partition.hpp>

#include <vector>

namespace symchar {

// Cycle lengths on which a normalized character is evaluated. Stored in
// weakly decreasing canonical order (disjoint cycles commute). Lengths of 1
// are allowed; missing points are implicit fixed points.
class CycleArgument {
  public:
    CycleArgument() = default;
    explicit CycleArgument(std::vector<int> cycles);
    CycleArgument(std::initializer_list<int> cycles)
        : CycleArgument(std::vector<int>(cycles)) {}

    static CycleArgument parse(const std::string& text);  // "3,2"

    const std::vector<int>& cycles() const { return cycles_; }
    long total() const { return total_; }
    int count() const { return static_cast<int>(cycles_.size()); }

    friend bool operator==(const CycleArgument&, const CycleArgument&) = default;
    friend auto operator<=>(const CycleArgument&, const CycleArgument&) = default;

  private:
    std::vector<int> cycles_;
    long total_ = 0;
};

// Number of standard Young tableaux of shape lambda (hook length formula);
// dimension of the irreducible representation. dimension(()) = 1.
BigInt dimension(const Partition& lambda);

// Irreducible character chi^lambda evaluated on the conjugacy class mu,
// by the signed border-strip recursion. Requires |lambda| = |mu|.
BigInt mn_character(const Partition& lambda, const Partition& mu);

// Normalized character: n(n-1)...(n-K+1) chi^lambda(arg + fixed points)/dim,
// where K is the total length of arg. Exactly zero when |lambda| < K.
// The result is always an integer; integrality is checked, not assumed.
Rational normalized_character(const Partition& lambda, const CycleArgument& arg);

}  // namespace symchar
