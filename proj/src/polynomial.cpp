#include "toricdef/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace toricdef {

int Monomial::total_degree() const {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

Int Monomial::weighted_degree(const std::vector<Int>& weights) const {
    if (weights.size() != e.size())
        throw std::invalid_argument("weighted_degree: weight count mismatch");
    Int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += weights[i] * e[i];
    return d;
}

bool Monomial::divides(const Monomial& other) const {
    if (e.size() != other.e.size()) throw std::invalid_argument("divides: arity mismatch");
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > other.e[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += other.e[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) {
        r.e[i] -= other.e[i];
        if (r.e[i] < 0) throw std::invalid_argument("monomial division not exact");
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

bool Monomial::coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0 && other.e[i] > 0) return false;
    return true;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.e.size() != b.e.size()) throw std::invalid_argument("order: arity mismatch");
    switch (kind) {
        case OrderKind::Lex: {
            for (std::size_t i = 0; i < a.e.size(); ++i) {
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
            }
            return 0;
        }
        case OrderKind::DegRevLex: {
            int da = a.total_degree(), db = b.total_degree();
            if (da != db) return da < db ? -1 : 1;
            for (std::size_t i = a.e.size(); i-- > 0;) {
                if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
            }
            return 0;
        }
        case OrderKind::WeightedDegRevLex: {
            Int da = a.weighted_degree(weights), db = b.weighted_degree(weights);
            if (da != db) return da < db ? -1 : 1;
            for (std::size_t i = a.e.size(); i-- > 0;) {
                if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
            }
            return 0;
        }
    }
    return 0;
}

Ring::Ring(std::vector<std::string> vars, MonomialOrder order) {
    auto d = std::make_shared<Data>();
    d->vars = std::move(vars);
    d->order = std::move(order);
    data_ = std::move(d);
}

int Ring::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < data_->vars.size(); ++i)
        if (data_->vars[i] == name) return static_cast<int>(i);
    return -1;
}

Polynomial Polynomial::constant(const Ring& ring, const Rat& c) {
    Polynomial p(ring);
    if (c != 0) p.terms_.emplace_back(Monomial(ring.nvars()), c);
    return p;
}

Polynomial Polynomial::variable(const Ring& ring, std::size_t index) {
    if (index >= ring.nvars()) throw std::invalid_argument("variable index out of range");
    Monomial m(ring.nvars());
    m.e[index] = 1;
    return term(ring, m, Rat(1));
}

Polynomial Polynomial::term(const Ring& ring, const Monomial& m, const Rat& c) {
    if (m.nvars() != ring.nvars()) throw std::invalid_argument("term: arity mismatch");
    Polynomial p(ring);
    if (c != 0) p.terms_.emplace_back(m, c);
    return p;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading_monomial of zero polynomial");
    return terms_.front().first;
}

const Rat& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("leading_coefficient of zero polynomial");
    return terms_.front().second;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

std::optional<Int> Polynomial::homogeneous_degree(const std::vector<Int>& weights) const {
    if (terms_.empty()) return Int(0);
    Int d = terms_.front().first.weighted_degree(weights);
    for (const auto& [m, c] : terms_)
        if (m.weighted_degree(weights) != d) return std::nullopt;
    return d;
}

Polynomial merge_sorted(const Ring& ring, std::vector<std::pair<Monomial, Rat>> terms) {
    const MonomialOrder& ord = ring.order();
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        return ord.compare(a.first, b.first) > 0;
    });
    Polynomial p(ring);
    for (auto& [m, c] : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == m)
            p.terms_.back().second += c;
        else
            p.terms_.emplace_back(std::move(m), std::move(c));
        if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
    }
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    if (!ring_.compatible(rhs.ring_)) throw std::invalid_argument("ring mismatch");
    const MonomialOrder& ord = ring_.order();
    Polynomial out(ring_);
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < rhs.terms_.size()) {
        int cmp;
        if (i == terms_.size()) cmp = -1;
        else if (j == rhs.terms_.size()) cmp = 1;
        else cmp = ord.compare(terms_[i].first, rhs.terms_[j].first);
        if (cmp > 0) {
            out.terms_.push_back(terms_[i++]);
        } else if (cmp < 0) {
            out.terms_.push_back(rhs.terms_[j++]);
        } else {
            Rat c = terms_[i].second + rhs.terms_[j].second;
            if (c != 0) out.terms_.emplace_back(terms_[i].first, std::move(c));
            ++i; ++j;
        }
    }
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(*this);
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (!ring_.compatible(rhs.ring_)) throw std::invalid_argument("ring mismatch");
    std::vector<std::pair<Monomial, Rat>> acc;
    acc.reserve(terms_.size() * rhs.terms_.size());
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : rhs.terms_) acc.emplace_back(ma * mb, ca * cb);
    return merge_sorted(ring_, std::move(acc));
}

Polynomial Polynomial::operator*(const Rat& c) const {
    Polynomial out(ring_);
    if (c == 0) return out;
    out.terms_ = terms_;
    for (auto& [m, k] : out.terms_) k *= c;
    return out;
}

bool Polynomial::operator==(const Polynomial& rhs) const { return terms_ == rhs.terms_; }

Polynomial Polynomial::multiplied_by(const Monomial& m, const Rat& c) const {
    Polynomial out(ring_);
    if (c == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& [mm, cc] : terms_) out.terms_.emplace_back(mm * m, cc * c);
    return out;  // multiplying by a fixed monomial preserves the sort
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    return *this * (Rat(1) / leading_coefficient());
}

Polynomial Polynomial::derivative(std::size_t var) const {
    if (var >= ring_.nvars()) throw std::invalid_argument("derivative: bad variable");
    std::vector<std::pair<Monomial, Rat>> acc;
    for (const auto& [m, c] : terms_) {
        if (m.e[var] == 0) continue;
        Monomial d = m;
        d.e[var] -= 1;
        acc.emplace_back(std::move(d), c * m.e[var]);
    }
    return merge_sorted(ring_, std::move(acc));
}

std::string monomial_to_string(const Ring& ring, const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m.e[i] == 0) continue;
        if (!first) os << "*";
        os << ring.vars()[i];
        if (m.e[i] > 1) os << "^" << m.e[i];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (m.is_one()) {
            os << rat_to_string(a);
        } else {
            if (a != 1) os << rat_to_string(a) << "*";
            os << monomial_to_string(ring_, m);
        }
        first = false;
    }
    return os.str();
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return s[pos];
    }
    char take() {
        skip_ws();
        return s[pos++];
    }
    std::string take_number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return s.substr(start, pos - start);
    }
    std::string take_name() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
};

}  // namespace

Polynomial Polynomial::parse(const Ring& ring, const std::string& text) {
    Lexer lx{text};
    std::vector<std::pair<Monomial, Rat>> acc;

    bool expect_term = true;
    int sign = 1;
    while (!lx.eof()) {
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.take();
            if (expect_term) {
                if (c == '-') sign = -sign;
            } else {
                sign = (c == '-') ? -1 : 1;
                expect_term = true;
            }
            continue;
        }
        if (!expect_term) throw std::invalid_argument("polynomial parse: missing operator");

        // One term: optional coefficient, then *-separated powers.
        Rat coef(1);
        Monomial mono(ring.nvars());
        bool saw_factor = false;
        for (;;) {
            if (lx.eof()) break;
            char p = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(p))) {
                std::string numtxt = lx.take_number();
                Rat val{Int(numtxt)};
                if (!lx.eof() && lx.peek() == '/') {
                    lx.take();
                    std::string dentxt = lx.take_number();
                    if (dentxt.empty()) throw std::invalid_argument("polynomial parse: bad fraction");
                    val /= Rat(Int(dentxt));
                }
                coef *= val;
                saw_factor = true;
            } else if (std::isalpha(static_cast<unsigned char>(p)) || p == '_') {
                std::string name = lx.take_name();
                int idx = ring.var_index(name);
                if (idx < 0)
                    throw std::invalid_argument("polynomial parse: unknown variable '" + name + "'");
                int exp = 1;
                if (!lx.eof() && lx.peek() == '^') {
                    lx.take();
                    std::string etxt = lx.take_number();
                    if (etxt.empty()) throw std::invalid_argument("polynomial parse: bad exponent");
                    exp = std::stoi(etxt);
                }
                mono.e[static_cast<std::size_t>(idx)] += exp;
                saw_factor = true;
            } else {
                throw std::invalid_argument("polynomial parse: unexpected character");
            }
            if (!lx.eof() && lx.peek() == '*') {
                lx.take();
                continue;
            }
            break;
        }
        if (!saw_factor) throw std::invalid_argument("polynomial parse: empty term");
        acc.emplace_back(std::move(mono), coef * sign);
        sign = 1;
        expect_term = false;
    }
    if (expect_term && !acc.empty())
        throw std::invalid_argument("polynomial parse: dangling operator");
    return merge_sorted(ring, std::move(acc));
}

}  // namespace toricdef
