#pragma once

#include <optional>
#include <vector>

#include "ginlex/fourier_motzkin.hpp"
#include "ginlex/monomial_ideal.hpp"
#include "ginlex/polynomial.hpp"
#include "ginlex/stable.hpp"

namespace ginlex {

// One graded piece of an almost Borel-fixed ideal: the slice is the span of a
// Borel-fixed monomial set together with polynomials supported on its lower
// neighbors.
struct AbfDegree {
    int d = 0;
    std::vector<Monomial> borel_part;     // A_d, a Borel-fixed set of degree d
    std::vector<Polynomial> lower_polys;  // V_d, supported in Ln(A_d)
};

struct AlmostBorelFixedIdeal {
    int n = 0;
    std::vector<AbfDegree> degrees;       // ascending in d; absent degrees are empty
    std::vector<Polynomial> ideal_gens;   // generators of the ideal itself

    int top_degree() const { return degrees.empty() ? 0 : degrees.back().d; }
};

struct NotAlmostBorelFixedError : std::runtime_error {
    int degree;
    Monomial witness;
    NotAlmostBorelFixedError(int d, Monomial w)
        : std::runtime_error("slice at degree " + std::to_string(d) +
                             " is not almost Borel-fixed; offending monomial " + w.str()),
          degree(d),
          witness(std::move(w)) {}
};

// Monomials outside a Borel-fixed degree-d set whose strict Borel-majorants
// all lie inside; throws if the set is not Borel-fixed.
std::vector<Monomial> lower_neighbors(const std::vector<Monomial>& A, int n);

// Per-degree decomposition of a homogeneous ideal for d <= bound; throws
// NotAlmostBorelFixedError when a slice admits no valid split.
AlmostBorelFixedIdeal recognize_abf(const std::vector<Polynomial>& gens, int n, int bound);

// Degree-(d+1) completion policy for the two-degree construction below.
struct TopPolicy {
    enum class Kind { closure_of_products, full, explicit_set } kind = Kind::closure_of_products;
    std::vector<Monomial> monomials;  // for explicit_set

    static TopPolicy closure_of_products() { return {}; }
    static TopPolicy full() { return {Kind::full, {}}; }
    static TopPolicy explicit_set(std::vector<Monomial> ms) {
        return {Kind::explicit_set, std::move(ms)};
    }
};

// Single-degree almost Borel-fixed space A + V, validated: A Borel-fixed,
// every polynomial supported on lower neighbors of A.
AlmostBorelFixedIdeal abf_space(int n, std::vector<Monomial> A, std::vector<Polynomial> polys);

// From pairwise Borel-incomparable monomials T of one degree, grouped into
// blocks with pairwise disjoint supports: A = strict Borel closure of T,
// f_i = sum of block i, and the next degree filled to a Borel-fixed set
// containing every variable multiple of the Borel closure of T.
AlmostBorelFixedIdeal construct_abf(int n, const std::vector<std::vector<Monomial>>& blocks,
                                    const TopPolicy& top = {});

struct GinMember {
    MonomialIdeal ideal;
    std::vector<Monomial> selection;  // chosen initial support monomial per polynomial
    std::vector<Rat> witness;         // weight vector realizing the selection
    BettiTable betti;                 // graded Betti numbers of R/ideal
    bool is_revlex = false;
    bool is_lex = false;
};

struct ForbiddenSelection {
    std::vector<Monomial> selection;
    std::vector<Rat> certificate;  // FM multipliers deriving 0 > 0
};

struct GinFamily {
    int n = 0;
    std::vector<GinMember> members;
    std::vector<ForbiddenSelection> infeasible;
};

// All gins of an almost Borel-fixed ideal: every tuple of initial-support
// choices whose pooled weight cone (w_1 > ... > w_n > 0 plus selection
// constraints across every degree) is feasible, each realized as the Borel
// part plus the initial span of the lower polynomials.
GinFamily enumerate_gins(const AlmostBorelFixedIdeal& abf);

struct BettiPosetReport {
    std::optional<int> minimum;  // member index below every other member
    std::optional<int> maximum;
    std::vector<int> maximal;
    // pairs (a, b), a != b, with betti(a) <= betti(b) entrywise
    std::vector<std::pair<int, int>> comparabilities;
};

BettiPosetReport betti_poset(const GinFamily& family);

// Per-member, per-degree dimensions of the intersection with a lex-segment
// ideal; when a lex-gin member is flagged it must dominate degreewise.
std::vector<std::vector<long long>> lex_proximity(const GinFamily& family,
                                                  const MonomialIdeal& L, int bound);

}  // namespace ginlex
