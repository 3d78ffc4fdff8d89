#include "ginlex/stable.hpp"

#include <algorithm>

#include "ginlex/linalg.hpp"

namespace ginlex {

long long MStatistics::mi(int i) const {
    auto it = m_i.find(i);
    return it == m_i.end() ? 0 : it->second;
}
long long MStatistics::mij(int i, int j) const {
    auto it = m_ij.find({i, j});
    return it == m_ij.end() ? 0 : it->second;
}
long long MStatistics::mleq_slice(int i, int j) const {
    auto it = m_leq.find({i, j});
    return it == m_leq.end() ? 0 : it->second;
}

long long BettiTable::get(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
}
void BettiTable::set(int i, int j, long long v) {
    if (v == 0)
        entries.erase({i, j});
    else
        entries[{i, j}] = v;
}
bool BettiTable::leq(const BettiTable& o) const {
    for (auto& [k, v] : entries)
        if (v > o.get(k.first, k.second)) return false;
    return true;
}
bool BettiTable::operator==(const BettiTable& o) const {
    return leq(o) && o.leq(*this);
}
long long BettiTable::total(int i) const {
    long long s = 0;
    for (auto& [k, v] : entries)
        if (k.first == i) s += v;
    return s;
}

long long KoszulBettiTensor::get(int i, int j, int p) const {
    auto it = entries.find({i, j, p});
    return it == entries.end() ? 0 : it->second;
}
void KoszulBettiTensor::set(int i, int j, int p, long long v) {
    if (v == 0)
        entries.erase({i, j, p});
    else
        entries[{i, j, p}] = v;
}
bool KoszulBettiTensor::leq(const KoszulBettiTensor& o) const {
    for (auto& [k, v] : entries)
        if (v > o.get(std::get<0>(k), std::get<1>(k), std::get<2>(k))) return false;
    return true;
}
bool KoszulBettiTensor::operator==(const KoszulBettiTensor& o) const {
    return leq(o) && o.leq(*this);
}

namespace {

std::vector<Monomial> closure_impl(const std::vector<Monomial>& S, bool strict) {
    if (S.empty()) return {};
    int n = S.front().nvars();
    int d = S.front().degree();
    for (auto& m : S)
        if (m.degree() != d) throw std::invalid_argument("borel_closure: mixed degrees");
    std::vector<Monomial> out;
    for (auto& cand : monomials_of_degree(n, d)) {
        for (auto& m : S) {
            BorelCmp c = borel_compare(cand, m);
            if (c == BorelCmp::greater || (!strict && c == BorelCmp::equal)) {
                out.push_back(cand);
                break;
            }
        }
    }
    return out;
}

}  // namespace

std::vector<Monomial> borel_closure(const std::vector<Monomial>& S) {
    return closure_impl(S, false);
}
std::vector<Monomial> borel_closure_strict(const std::vector<Monomial>& S) {
    return closure_impl(S, true);
}

HilbertFunction hilbert_function(const MonomialIdeal& I, int bound) {
    if (bound < I.max_gen_degree())
        throw std::invalid_argument("hilbert_function bound below generator degree");
    HilbertFunction h{I.nvars(), bound, {}};
    for (int d = 0; d <= bound; ++d) h.dims.push_back(I.dim_at(d));
    return h;
}

namespace {

// rows spanning I_d over the monomial basis of M_d; degree_cap limits which
// generators participate (by degree <= cap) and min_mult_degree excludes
// multiplication by the unit monomial when set to 1
RatMatrix degree_span(const std::vector<Polynomial>& gens, int n, int d, int degree_cap,
                      int min_mult_degree) {
    auto basis = monomials_of_degree(n, d);
    std::map<Monomial, int, CanonLess> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
    RatMatrix rows;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        auto hd = g.homogeneous_degree();
        if (!hd) throw std::invalid_argument("inhomogeneous generator");
        int gd = *hd;
        if (gd > d || gd > degree_cap) continue;
        if (d - gd < min_mult_degree) continue;
        for (auto& m : monomials_of_degree(n, d - gd)) {
            std::vector<Rat> row(basis.size(), 0);
            for (auto& t : g.terms()) row[static_cast<size_t>(index.at(t.mono * m))] = t.coeff;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace

long long ideal_dim_at(const std::vector<Polynomial>& gens, int n, int d) {
    return rank(degree_span(gens, n, d, d, 0));
}

HilbertFunction hilbert_function(const std::vector<Polynomial>& gens, int n, int bound) {
    HilbertFunction h{n, bound, {}};
    for (int d = 0; d <= bound; ++d) h.dims.push_back(ideal_dim_at(gens, n, d));
    return h;
}

std::vector<Monomial> lex_segment_space(long long dim, int d, int n) {
    auto all = monomials_of_degree(n, d);
    if (dim < 0 || dim > static_cast<long long>(all.size()))
        throw std::invalid_argument("lex segment dimension out of range");
    all.resize(static_cast<size_t>(dim));
    return all;
}

MonomialIdeal lex_ideal(const HilbertFunction& h) {
    int n = h.n, bound = h.bound;
    std::vector<std::vector<Monomial>> slices;
    for (int d = 0; d <= bound; ++d)
        slices.push_back(lex_segment_space(h.dims[static_cast<size_t>(d)], d, n));
    // Macaulay consistency: R1 * L_d must land inside L_{d+1}
    for (int d = 0; d + 1 <= bound; ++d) {
        std::map<Monomial, bool, CanonLess> next;
        for (auto& m : slices[static_cast<size_t>(d + 1)]) next[m] = true;
        for (auto& m : slices[static_cast<size_t>(d)])
            for (int k = 1; k <= n; ++k)
                if (!next.count(m * Monomial::variable(n, k)))
                    throw std::logic_error("lex segments do not close under multiplication");
    }
    std::vector<Monomial> gens;
    int top_gen_degree = -1;
    for (int d = 0; d <= bound; ++d) {
        for (auto& m : slices[static_cast<size_t>(d)]) {
            bool covered = false;
            for (auto& g : gens)
                if (g.degree() < d && g.divides(m)) {
                    covered = true;
                    break;
                }
            if (!covered) {
                gens.push_back(m);
                top_gen_degree = d;
            }
        }
    }
    if (top_gen_degree == bound && !gens.empty()) throw InsufficientBoundError(bound);
    return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal lex_ideal(const MonomialIdeal& I, int bound) {
    if (bound < I.max_gen_degree() + 1)
        throw std::invalid_argument("lex_ideal bound must exceed generator degrees");
    return lex_ideal(hilbert_function(I, bound));
}

MonomialIdeal lex_ideal(const std::vector<Polynomial>& gens, int n, int bound) {
    return lex_ideal(hilbert_function(gens, n, bound));
}

MStatistics m_statistics(const MonomialIdeal& I, int bound) {
    if (bound < I.max_gen_degree())
        throw std::invalid_argument("m_statistics bound below generator degree");
    MStatistics s;
    s.n = I.nvars();
    s.bound = bound;
    for (auto& u : I.min_generators()) {
        s.m_i[u.max_var()]++;
        s.m_ij[{u.max_var(), u.degree()}]++;
    }
    for (int j = 0; j <= bound; ++j) {
        std::vector<long long> by_max(static_cast<size_t>(I.nvars()) + 1, 0);
        for (auto& u : I.degree_slice(j)) by_max[static_cast<size_t>(u.max_var())]++;
        long long acc = 0;
        for (int i = 0; i <= I.nvars(); ++i) {
            acc += by_max[static_cast<size_t>(i)];
            s.m_leq[{i, j}] = acc;
        }
    }
    return s;
}

BettiTable ek_betti(const MonomialIdeal& I) {
    if (!is_strongly_stable(I)) throw NotStronglyStableError();
    int n = I.nvars();
    int maxdeg = I.max_gen_degree();
    std::map<std::pair<int, int>, long long> mij;
    for (auto& u : I.min_generators()) mij[{u.max_var(), u.degree()}]++;
    BettiTable b;
    b.set(0, 0, 1);
    for (int i = 1; i <= n; ++i) {
        for (int deg = 1; deg <= maxdeg; ++deg) {
            int j = deg + i - 1;
            Int v = 0;
            for (int sidx = i; sidx <= n; ++sidx) {
                auto it = mij.find({sidx, deg});
                if (it != mij.end()) v += it->second * binomial(sidx - 1, i - 1);
            }
            if (v != 0) b.set(i, j, v.convert_to<long long>());
        }
    }
    return b;
}

std::map<std::pair<int, int>, long long> ah_koszul_betti(const MonomialIdeal& I, int p,
                                                         int j_bound) {
    if (!is_strongly_stable(I)) throw NotStronglyStableError();
    int n = I.nvars();
    if (p < 0 || p > n) throw std::invalid_argument("p out of range");
    int maxdeg = I.max_gen_degree();
    int jb = std::max(j_bound, maxdeg + n);
    MStatistics stats = m_statistics(I, jb);
    std::map<std::pair<int, int>, long long> out;
    for (int j = 0; j <= jb; ++j) {
        long long free_part = monomial_count(n - p, j);
        long long v = free_part - stats.mleq_slice(n - p, j);
        if (v != 0) out[{0, j}] = v;
    }
    for (int i = 1; i <= p; ++i) {
        for (int deg = 1; deg <= maxdeg; ++deg) {
            int j = deg + i - 1;
            Int v = 0;
            for (int sidx = i + n - p; sidx <= n; ++sidx)
                v += stats.mij(sidx, deg) * binomial(sidx + p - n - 1, i - 1);
            if (v != 0) out[{i, j}] = v.convert_to<long long>();
        }
    }
    return out;
}

KoszulBettiTensor ah_koszul_tensor(const MonomialIdeal& I, int p_max, int j_bound) {
    KoszulBettiTensor t;
    t.n = I.nvars();
    t.p_max = p_max;
    t.j_bound = j_bound;
    // p = 0 row: Hilbert function of R/I
    for (int j = 0; j <= j_bound; ++j) {
        long long v = monomial_count(I.nvars(), j) - I.dim_at(j);
        t.set(0, j, 0, v);
    }
    for (int p = 1; p <= p_max; ++p)
        for (auto& [k, v] : ah_koszul_betti(I, p, j_bound))
            if (k.second <= j_bound) t.set(k.first, k.second, p, v);
    return t;
}

std::map<int, long long> minimal_generator_counts(const std::vector<Polynomial>& gens, int n,
                                                  int bound) {
    std::map<int, long long> out;
    for (int d = 0; d <= bound; ++d) {
        long long full = rank(degree_span(gens, n, d, d, 0));
        long long grown = rank(degree_span(gens, n, d, d - 1, 1));
        if (full != grown) out[d] = full - grown;
    }
    return out;
}

bool is_componentwise_linear(const std::vector<Polynomial>& gens, int n,
                             const GinOptions& opts) {
    MonomialIdeal G = gin(gens, TermOrder::revlex(), opts);
    int maxdeg = 0;
    for (auto& g : gens)
        if (!g.is_zero()) maxdeg = std::max(maxdeg, *g.homogeneous_degree());
    int bound = std::max(maxdeg, G.max_gen_degree());
    std::map<int, long long> mine = minimal_generator_counts(gens, n, bound);
    std::map<int, long long> ginc;
    for (auto& m : G.min_generators()) ginc[m.degree()]++;
    return mine == ginc;
}

bool is_gotzmann(const std::vector<Polynomial>& gens, int n, const GinOptions&) {
    // Minimal-growth at every degree is equivalent to the ideal having the
    // same number of minimal generators in each degree as its degreewise
    // lex-segment ideal, which bounds generator counts from above.
    int maxdeg = 0;
    for (auto& g : gens)
        if (!g.is_zero()) maxdeg = std::max(maxdeg, *g.homogeneous_degree());
    int bound = maxdeg + 2;
    for (;;) {
        try {
            MonomialIdeal L = lex_ideal(gens, n, bound);
            std::map<int, long long> mine =
                minimal_generator_counts(gens, n, std::max(maxdeg, L.max_gen_degree()));
            std::map<int, long long> lexc;
            for (auto& m : L.min_generators()) lexc[m.degree()]++;
            return mine == lexc;
        } catch (const InsufficientBoundError&) {
            bound += 2;
            if (bound > maxdeg + 40) throw;
        }
    }
}

}  // namespace ginlex
