#include "ginlex/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace ginlex {

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> generators) : n_(n) {
    for (auto& g : generators)
        if (g.nvars() != n) throw std::invalid_argument("generator variable count mismatch");
    std::sort(generators.begin(), generators.end(), CanonGreater{});
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (size_t i = 0; i < generators.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < generators.size() && !redundant; ++j)
            if (i != j && generators[j].divides(generators[i]) &&
                !(generators[i] == generators[j]))
                redundant = true;
        if (!redundant) gens_.push_back(generators[i]);
    }
}

int MonomialIdeal::max_gen_degree() const {
    int d = 0;
    for (auto& g : gens_) d = std::max(d, g.degree());
    return d;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (auto& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

std::vector<Monomial> MonomialIdeal::degree_slice(int d) const {
    std::vector<Monomial> out;
    for (auto& m : monomials_of_degree(n_, d))
        if (contains(m)) out.push_back(m);
    return out;
}

long long MonomialIdeal::dim_at(int d) const {
    long long c = 0;
    for (auto& m : monomials_of_degree(n_, d))
        if (contains(m)) ++c;
    return c;
}

bool MonomialIdeal::operator<(const MonomialIdeal& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    size_t k = std::min(gens_.size(), o.gens_.size());
    for (size_t i = 0; i < k; ++i) {
        Cmp c = canonical_compare(gens_[i], o.gens_[i]);
        if (c != Cmp::equal) return c == Cmp::less;
    }
    return gens_.size() < o.gens_.size();
}

bool is_strongly_stable(const MonomialIdeal& I) {
    for (auto& u : I.min_generators()) {
        for (int i = 2; i <= I.nvars(); ++i) {
            if (u.exp(i) == 0) continue;
            Monomial base = u.divide(Monomial::variable(I.nvars(), i));
            for (int j = 1; j < i; ++j)
                if (!I.contains(base * Monomial::variable(I.nvars(), j))) return false;
        }
    }
    return true;
}

bool is_strongly_stable_bruteforce(const MonomialIdeal& I, int bound) {
    for (int d = 1; d <= bound; ++d) {
        for (auto& u : I.degree_slice(d)) {
            for (int i = 2; i <= I.nvars(); ++i) {
                if (u.exp(i) == 0) continue;
                Monomial base = u.divide(Monomial::variable(I.nvars(), i));
                for (int j = 1; j < i; ++j)
                    if (!I.contains(base * Monomial::variable(I.nvars(), j))) return false;
            }
        }
    }
    return true;
}

}  // namespace ginlex
