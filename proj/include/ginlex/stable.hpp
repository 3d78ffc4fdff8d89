#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "ginlex/groebner.hpp"
#include "ginlex/monomial_ideal.hpp"
#include "ginlex/numbers.hpp"

namespace ginlex {

struct HilbertFunction {
    int n = 0;
    int bound = 0;
    std::vector<long long> dims;  // dims[d] = dim_K I_d for d = 0..bound
};

// Counts of monomials by largest occurring variable, over minimal generators
// (m_i, m_ij) and over full degree slices (m_leq).
struct MStatistics {
    int n = 0;
    int bound = 0;
    std::map<int, long long> m_i;                       // i -> m_i(I)
    std::map<std::pair<int, int>, long long> m_ij;      // (i,j) -> m_ij(I)
    std::map<std::pair<int, int>, long long> m_leq;     // (i,j) -> m_<=i(I_j)

    long long mi(int i) const;
    long long mij(int i, int j) const;
    long long mleq_slice(int i, int j) const;
};

// Graded Betti numbers of R/I; beta(0,0) = 1 by convention.
struct BettiTable {
    std::map<std::pair<int, int>, long long> entries;

    long long get(int i, int j) const;
    void set(int i, int j, long long v);
    bool leq(const BettiTable& o) const;  // entrywise
    bool operator==(const BettiTable& o) const;
    long long total(int i) const;  // sum over j
};

// beta_{ijp} tensor with the H_0(0, R/I) row at p = 0.
struct KoszulBettiTensor {
    int n = 0;
    int p_max = 0;
    int j_bound = 0;
    std::map<std::tuple<int, int, int>, long long> entries;  // (i,j,p)

    long long get(int i, int j, int p) const;
    void set(int i, int j, int p, long long v);
    bool leq(const KoszulBettiTensor& o) const;
    bool operator==(const KoszulBettiTensor& o) const;
};

struct NotStronglyStableError : std::invalid_argument {
    NotStronglyStableError() : std::invalid_argument("ideal is not strongly stable") {}
};
struct InsufficientBoundError : std::runtime_error {
    explicit InsufficientBoundError(int at)
        : std::runtime_error("degree bound too small: new generators at degree " +
                             std::to_string(at)),
          degree(at) {}
    int degree;
};

// Smallest Borel-fixed degree-d monomial set containing S (upward closure),
// and the strict variant {m : m > some element of S}.
std::vector<Monomial> borel_closure(const std::vector<Monomial>& S);
std::vector<Monomial> borel_closure_strict(const std::vector<Monomial>& S);

HilbertFunction hilbert_function(const MonomialIdeal& I, int bound);
// dim_K I_d for a polynomial ideal, by exact rank of the degree-d span.
long long ideal_dim_at(const std::vector<Polynomial>& gens, int n, int d);
HilbertFunction hilbert_function(const std::vector<Polynomial>& gens, int n, int bound);

// Top `dim` monomials of degree d under lex.
std::vector<Monomial> lex_segment_space(long long dim, int d, int n);

// Degreewise lex-segment ideal of a Hilbert function, with Macaulay-closure
// verification; throws InsufficientBoundError if generators appear at `bound`.
MonomialIdeal lex_ideal(const HilbertFunction& h);
MonomialIdeal lex_ideal(const MonomialIdeal& I, int bound);
MonomialIdeal lex_ideal(const std::vector<Polynomial>& gens, int n, int bound);

MStatistics m_statistics(const MonomialIdeal& I, int bound);

// Eliahou-Kervaire graded Betti table of R/I; requires strong stability.
BettiTable ek_betti(const MonomialIdeal& I);

// Aramova-Herzog Koszul-Betti numbers of R/I at a fixed p; requires strong
// stability; i = 0 row counted directly from the last n-p variables, reported
// for j up to j_bound (default: max generator degree + n).
std::map<std::pair<int, int>, long long> ah_koszul_betti(const MonomialIdeal& I, int p,
                                                         int j_bound = -1);
KoszulBettiTensor ah_koszul_tensor(const MonomialIdeal& I, int p_max, int j_bound);

// Number of minimal generators of the ideal in each degree (the beta_1 row),
// by exact linear algebra on degree slices.
std::map<int, long long> minimal_generator_counts(const std::vector<Polynomial>& gens, int n,
                                                  int bound);

bool is_componentwise_linear(const std::vector<Polynomial>& gens, int n,
                             const GinOptions& opts = {});
bool is_gotzmann(const std::vector<Polynomial>& gens, int n, const GinOptions& opts = {});

}  // namespace ginlex
