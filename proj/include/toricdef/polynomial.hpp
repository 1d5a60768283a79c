#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toricdef/rational.hpp"

namespace toricdef {

// Exponent vector; length equals the ring's variable count.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    std::size_t nvars() const { return e.size(); }
    int total_degree() const;
    Int weighted_degree(const std::vector<Int>& weights) const;
    bool is_one() const { return total_degree() == 0; }

    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    // Requires other.divides(*this).
    Monomial operator/(const Monomial& other) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& other) const;

    bool operator==(const Monomial& other) const { return e == other.e; }
    bool operator<(const Monomial& other) const { return e < other.e; }  // container order only
};

enum class OrderKind { DegRevLex, Lex, WeightedDegRevLex };

// Total multiplicative well-order on monomials.
struct MonomialOrder {
    OrderKind kind = OrderKind::DegRevLex;
    std::vector<Int> weights;  // WeightedDegRevLex only

    static MonomialOrder degrevlex() { return {OrderKind::DegRevLex, {}}; }
    static MonomialOrder lex() { return {OrderKind::Lex, {}}; }
    static MonomialOrder weighted(std::vector<Int> w) {
        return {OrderKind::WeightedDegRevLex, std::move(w)};
    }

    // <0, 0, >0 as a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

// Immutable ring context shared by all polynomials in play.
class Ring {
public:
    Ring() = default;
    Ring(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::degrevlex());

    std::size_t nvars() const { return data_->vars.size(); }
    const std::vector<std::string>& vars() const { return data_->vars; }
    const MonomialOrder& order() const { return data_->order; }
    int var_index(const std::string& name) const;  // -1 if absent

    bool compatible(const Ring& other) const { return nvars() == other.nvars(); }
    bool operator==(const Ring& other) const { return data_ == other.data_; }

private:
    struct Data {
        std::vector<std::string> vars;
        MonomialOrder order;
    };
    std::shared_ptr<const Data> data_ = std::make_shared<Data>();
};

// Sparse multivariate polynomial over Rat; terms kept sorted descending
// under the ring's order with no zero coefficients stored.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

    static Polynomial zero(const Ring& ring) { return Polynomial(ring); }
    static Polynomial constant(const Ring& ring, const Rat& c);
    static Polynomial variable(const Ring& ring, std::size_t index);
    static Polynomial term(const Ring& ring, const Monomial& m, const Rat& c);

    const Ring& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<std::pair<Monomial, Rat>>& terms() const { return terms_; }

    const Monomial& leading_monomial() const;
    const Rat& leading_coefficient() const;
    int total_degree() const;  // -1 for zero

    // Degree when homogeneous under the given positive weights, nullopt otherwise.
    std::optional<Int> homogeneous_degree(const std::vector<Int>& weights) const;

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(const Rat& c) const;
    bool operator==(const Polynomial& rhs) const;

    Polynomial multiplied_by(const Monomial& m, const Rat& c) const;
    Polynomial monic() const;
    Polynomial derivative(std::size_t var) const;

    std::string to_string() const;
    // Canonical text form: `coef*x^a*y^b + ...`.
    static Polynomial parse(const Ring& ring, const std::string& text);

private:
    Ring ring_;
    std::vector<std::pair<Monomial, Rat>> terms_;

    void add_term(const Monomial& m, const Rat& c);  // merge preserving invariants
    friend Polynomial merge_sorted(const Ring&, std::vector<std::pair<Monomial, Rat>>);
};

std::string monomial_to_string(const Ring& ring, const Monomial& m);

}  // namespace toricdef
