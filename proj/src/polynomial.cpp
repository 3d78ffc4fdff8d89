#include "ginlex/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ginlex {

namespace {
std::vector<Term> normalize(std::vector<Term> in) {
    std::map<Monomial, Rat, CanonGreater> acc;
    for (auto& t : in) {
        if (t.coeff == 0) continue;
        acc[t.mono] += t.coeff;
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) out.push_back({c, m});
    return out;
}
}  // namespace

Polynomial::Polynomial(std::vector<Term> terms) : terms_(normalize(std::move(terms))) {}

Polynomial Polynomial::from_monomial(const Monomial& m, Rat c) {
    return Polynomial(std::vector<Term>{{std::move(c), m}});
}

std::optional<int> Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = terms_.front().mono.degree();
    for (auto& t : terms_)
        if (t.mono.degree() != d) return std::nullopt;
    return d;
}

const Term& Polynomial::leading_term(const TermOrder& order) const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    const Term* best = &terms_.front();
    for (auto& t : terms_)
        if (order.greater(t.mono, best->mono)) best = &t;
    return *best;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Term> all(terms_);
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return Polynomial(std::move(all));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<Term> all(terms_);
    for (auto& t : o.terms_) all.push_back({-t.coeff, t.mono});
    return Polynomial(std::move(all));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    std::vector<Term> all;
    all.reserve(terms_.size() * o.terms_.size());
    for (auto& a : terms_)
        for (auto& b : o.terms_) all.push_back({a.coeff * b.coeff, a.mono * b.mono});
    return Polynomial(std::move(all));
}

Polynomial Polynomial::scaled(const Rat& c) const {
    std::vector<Term> all;
    all.reserve(terms_.size());
    for (auto& t : terms_) all.push_back({t.coeff * c, t.mono});
    return Polynomial(std::move(all));
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rat& c) const {
    std::vector<Term> all;
    all.reserve(terms_.size());
    for (auto& t : terms_) all.push_back({t.coeff * c, t.mono * m});
    return Polynomial(std::move(all));
}

Polynomial Polynomial::monic(const TermOrder& order) const {
    if (is_zero()) return *this;
    return scaled(Rat(1) / leading_term(order).coeff);
}

bool Polynomial::equal(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mono != o.terms_[i].mono)
            return false;
    return true;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms_) {
        Rat c = t.coeff;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        Rat ac = c < 0 ? -c : c;
        bool unit_mono = t.mono.degree() == 0;
        if (ac != 1 || unit_mono) {
            os << ac;
            if (!unit_mono) os << "*";
        }
        if (!unit_mono) os << t.mono.str();
    }
    return os.str();
}

}  // namespace ginlex
