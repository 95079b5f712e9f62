#pragma once

#include <symchar/arith.hpp>
#include <symchar/partition.hpp>

#include <map>
#include <string>
#include <vector>

namespace symchar {

// A monomial in the free-cumulant variables: ascending multiset of indices,
// each >= 2. The empty monomial is the constant 1. Graded weight = sum of
// indices.
using Monomial = std::vector<int>;

int monomial_weight(const Monomial& m);

// Canonical display/storage order: heavier monomials first; within a weight,
// the one with the larger leading indices first (R6, R2*R4, R3^2, R2^3).
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// A polynomial in R_2, R_3, ... with exact rational coefficients. Zero
// coefficients are never stored; terms iterate in canonical order.
class RPolynomial {
  public:
    RPolynomial() = default;

    static RPolynomial variable(int index);        // R_index, index >= 2
    static RPolynomial constant(const Rational& c);

    void add_term(Monomial m, const Rational& coefficient);
    const std::map<Monomial, Rational, MonomialOrder>& terms() const { return terms_; }
    Rational coefficient(const Monomial& m) const;  // 0 if absent

    bool is_zero() const { return terms_.empty(); }
    int graded_degree() const;  // max weight; 0 for the zero polynomial
    int max_index() const;      // largest variable index appearing; 1 if none

    RPolynomial& operator+=(const RPolynomial& other);
    RPolynomial& operator-=(const RPolynomial& other);
    RPolynomial operator-() const;
    friend RPolynomial operator+(RPolynomial a, const RPolynomial& b) { return a += b; }
    friend RPolynomial operator-(RPolynomial a, const RPolynomial& b) { return a -= b; }
    friend RPolynomial operator*(const RPolynomial& a, const RPolynomial& b);
    friend RPolynomial operator*(const Rational& c, const RPolynomial& p);
    friend bool operator==(const RPolynomial&, const RPolynomial&) = default;

    // cumulant_value(i) must return R_i for 2 <= i <= max_index().
    template <typename F>
    Rational evaluate_with(F&& cumulant_value) const {
        Rational total = 0;
        for (const auto& [mono, coeff] : terms_) {
            Rational term = coeff;
            for (int idx : mono) term *= cumulant_value(idx);
            total += term;
        }
        return total;
    }

    // Substitutes the free cumulants of lambda.
    Rational evaluate(const Partition& lambda) const;

    // "R6 + 15*R4 + 5*R2^2 + 8*R2"; "0" for the zero polynomial.
    std::string to_text() const;

  private:
    std::map<Monomial, Rational, MonomialOrder> terms_;
};

struct PositivityReport {
    bool all_nonnegative_integers = true;
    std::vector<std::pair<Monomial, Rational>> offending;
};

PositivityReport positivity_report(const RPolynomial& p);

// All monomials with parts >= 2, weight <= max_weight and weight congruent
// to parity mod 2 (the empty monomial included when parity is even).
std::vector<Monomial> candidate_monomials(int max_weight, int parity);

}  // namespace symchar
