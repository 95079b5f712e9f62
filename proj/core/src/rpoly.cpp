#include <symchar/rpoly.hpp>

#include <symchar/cumulants.hpp>

#include <algorithm>

namespace symchar {

int monomial_weight(const Monomial& m) {
    int w = 0;
    for (int idx : m) w += idx;
    return w;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    const int wa = monomial_weight(a), wb = monomial_weight(b);
    if (wa != wb) return wa > wb;
    // Compare as descending index sequences, lexicographically, larger first.
    auto ia = a.rbegin(), ib = b.rbegin();
    for (; ia != a.rend() && ib != b.rend(); ++ia, ++ib) {
        if (*ia != *ib) return *ia > *ib;
    }
    return a.size() < b.size();
}

RPolynomial RPolynomial::variable(int index) {
    if (index < 2) throw domain_error("free-cumulant variables start at R_2");
    RPolynomial p;
    p.add_term(Monomial{index}, Rational(1));
    return p;
}

RPolynomial RPolynomial::constant(const Rational& c) {
    RPolynomial p;
    p.add_term(Monomial{}, c);
    return p;
}

void RPolynomial::add_term(Monomial m, const Rational& coefficient) {
    if (coefficient == 0) return;
    if (!std::is_sorted(m.begin(), m.end())) std::sort(m.begin(), m.end());
    for (int idx : m)
        if (idx < 2) throw domain_error("monomial indices must be >= 2");
    auto [it, inserted] = terms_.emplace(std::move(m), coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational RPolynomial::coefficient(const Monomial& m) const {
    Monomial key = m;
    std::sort(key.begin(), key.end());
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

int RPolynomial::graded_degree() const {
    int deg = 0;
    for (const auto& [mono, coeff] : terms_) deg = std::max(deg, monomial_weight(mono));
    return deg;
}

int RPolynomial::max_index() const {
    int idx = 1;
    for (const auto& [mono, coeff] : terms_)
        if (!mono.empty()) idx = std::max(idx, mono.back());
    return idx;
}

RPolynomial& RPolynomial::operator+=(const RPolynomial& other) {
    for (const auto& [mono, coeff] : other.terms_) add_term(mono, coeff);
    return *this;
}

RPolynomial& RPolynomial::operator-=(const RPolynomial& other) {
    for (const auto& [mono, coeff] : other.terms_) add_term(mono, -coeff);
    return *this;
}

RPolynomial RPolynomial::operator-() const {
    RPolynomial out;
    for (const auto& [mono, coeff] : terms_) out.add_term(mono, -coeff);
    return out;
}

RPolynomial operator*(const RPolynomial& a, const RPolynomial& b) {
    RPolynomial out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            out.add_term(std::move(m), ca * cb);
        }
    return out;
}

RPolynomial operator*(const Rational& c, const RPolynomial& p) {
    RPolynomial out;
    for (const auto& [mono, coeff] : p.terms_) out.add_term(mono, c * coeff);
    return out;
}

Rational RPolynomial::evaluate(const Partition& lambda) const {
    if (is_zero()) return Rational(0);
    const FreeCumulantSequence r = free_cumulants(lambda, std::max(2, max_index()));
    return evaluate_with([&](int idx) { return r.at(idx); });
}

namespace {

std::string monomial_text(const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size();) {
        std::size_t j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        if (!out.empty()) out += '*';
        out += 'R' + std::to_string(m[i]);
        if (j - i > 1) out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

}  // namespace

std::string RPolynomial::to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, coeff] : terms_) {
        const bool negative = coeff < 0;
        Rational mag = negative ? Rational(-coeff) : coeff;
        if (first) {
            if (negative) out += '-';
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        const std::string mtext = monomial_text(mono);
        if (mtext.empty()) {
            out += to_string(mag);
        } else {
            if (mag != 1) out += to_string(mag) + "*";
            out += mtext;
        }
    }
    return out;
}

PositivityReport positivity_report(const RPolynomial& p) {
    PositivityReport report;
    for (const auto& [mono, coeff] : p.terms()) {
        if (coeff < 0 || !is_integer(coeff)) {
            report.all_nonnegative_integers = false;
            report.offending.emplace_back(mono, coeff);
        }
    }
    return report;
}

namespace {

void emit_monomials(int remaining, int min_part, Monomial& acc, int parity,
                    std::vector<Monomial>& out) {
    if (monomial_weight(acc) % 2 == parity % 2) out.push_back(acc);
    for (int part = min_part; part <= remaining; ++part) {
        acc.push_back(part);
        emit_monomials(remaining - part, part, acc, parity, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Monomial> candidate_monomials(int max_weight, int parity) {
    std::vector<Monomial> out;
    Monomial acc;
    emit_monomials(max_weight, 2, acc, parity, out);
    std::sort(out.begin(), out.end(), MonomialOrder{});
    return out;
}

}  // namespace symchar
