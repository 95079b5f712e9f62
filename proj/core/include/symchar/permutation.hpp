#pragma once

#include <symchar/arith.hpp>

#include <string>
#include <vector>

namespace symchar {

// A permutation of {1,...,k} in one-line image form. Immutable.
// cycles() lists each cycle starting from its smallest element, cycles
// ordered by smallest element; fixed points appear as 1-cycles.
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images_one_based);

    static Permutation identity(int k);
    static Permutation full_cycle(int k);  // (1,2,...,k)
    // Cycle notation with omitted fixed points, e.g. "(1,6)(4,7,5)".
    // degree = 0 infers the degree as the largest point mentioned.
    static Permutation parse_cycles(const std::string& text, int degree = 0);

    int degree() const { return static_cast<int>(images_.size()); }
    int apply(int x) const;  // image of x, 1-indexed
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    std::vector<std::vector<int>> cycles() const;
    int cycle_count() const;
    std::string cycle_string() const;  // "(1,6)(4,7,5)"; "()" for identity

    friend bool operator==(const Permutation&, const Permutation&) = default;

  private:
    std::vector<int> images_;  // images_[i] = image of i+1, values 1..k
};

// Function composition: (sigma . tau)(x) = sigma(tau(x)), tau applied first.
// The product sigma1 sigma2 of two map permutations is compose(sigma1, sigma2).
Permutation compose(const Permutation& sigma, const Permutation& tau);

}  // namespace symchar
