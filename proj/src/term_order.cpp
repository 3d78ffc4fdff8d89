#include "ginlex/term_order.hpp"

#include <sstream>
#include <stdexcept>

namespace ginlex {

TermOrder TermOrder::lex() { return TermOrder(Kind::lex, {}, Kind::lex); }
TermOrder TermOrder::revlex() { return TermOrder(Kind::revlex, {}, Kind::revlex); }

TermOrder TermOrder::weight(std::vector<Rat> w, Kind tiebreak) {
    if (w.empty()) throw std::invalid_argument("empty weight vector");
    if (tiebreak == Kind::weight) throw std::invalid_argument("tiebreak must be lex or revlex");
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] <= 0) throw std::invalid_argument("weights must be positive");
        if (i + 1 < w.size() && !(w[i] > w[i + 1]))
            throw std::invalid_argument("weights must be strictly decreasing");
    }
    return TermOrder(Kind::weight, std::move(w), tiebreak);
}

namespace {

Cmp lex_within_degree(const Monomial& a, const Monomial& b) {
    for (int i = 1; i <= a.nvars(); ++i)
        if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? Cmp::greater : Cmp::less;
    return Cmp::equal;
}

// a > b iff the last nonzero entry of a - b is negative
Cmp revlex_within_degree(const Monomial& a, const Monomial& b) {
    for (int i = a.nvars(); i >= 1; --i)
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? Cmp::greater : Cmp::less;
    return Cmp::equal;
}

}  // namespace

Cmp TermOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("variable count mismatch");
    if (kind_ == Kind::weight && static_cast<int>(weights_.size()) != a.nvars())
        throw std::invalid_argument("weight vector dimension mismatch");
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? Cmp::greater : Cmp::less;
    switch (kind_) {
        case Kind::lex:
            return lex_within_degree(a, b);
        case Kind::revlex:
            return revlex_within_degree(a, b);
        case Kind::weight: {
            Rat wa = 0, wb = 0;
            for (int i = 1; i <= a.nvars(); ++i) {
                wa += weights_[static_cast<size_t>(i - 1)] * a.exp(i);
                wb += weights_[static_cast<size_t>(i - 1)] * b.exp(i);
            }
            if (wa != wb) return wa > wb ? Cmp::greater : Cmp::less;
            return tiebreak_ == Kind::lex ? lex_within_degree(a, b) : revlex_within_degree(a, b);
        }
    }
    return Cmp::equal;
}

std::string TermOrder::str() const {
    switch (kind_) {
        case Kind::lex:
            return "lex";
        case Kind::revlex:
            return "revlex";
        case Kind::weight: {
            std::ostringstream os;
            os << "weight:";
            for (size_t i = 0; i < weights_.size(); ++i) {
                if (i) os << ",";
                os << weights_[i];
            }
            return os.str();
        }
    }
    return "?";
}

}  // namespace ginlex
