#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "ginlex/groebner.hpp"
#include "ginlex/linalg.hpp"
#include "ginlex/stable.hpp"

namespace ginlex {

// Sequence of linearly independent linear forms.
struct LinearFormSequence {
    std::vector<Polynomial> forms;

    int size() const { return static_cast<int>(forms.size()); }
    static LinearFormSequence last_variables(int n, int p);
    static LinearFormSequence all_variables(int n);
    static LinearFormSequence generic(int n, int p, std::uint64_t seed, int bound = 1000);
    static LinearFormSequence explicit_forms(std::vector<Polynomial> forms);
};

// Monomial bases of R/I per degree (monomials outside the revlex initial
// ideal) with cached variable-multiplication maps; coordinatizes all strands.
class QuotientRing {
  public:
    QuotientRing(const std::vector<Polynomial>& gens, int n, int degree_bound);

    int nvars() const { return n_; }
    int bound() const { return bound_; }
    const std::vector<Monomial>& basis(int d) const;
    long long quotient_dim(int d) const;

    // coordinates of (linear form * basis element of degree d) in basis(d+1)
    std::vector<Rat> form_action(const Polynomial& form, int d, int basis_index) const;

  private:
    int n_;
    int bound_;
    GroebnerBasis gb_;
    std::vector<std::vector<Monomial>> bases_;
    std::vector<std::map<Monomial, int, CanonLess>> index_;
    // var_maps_[d][k-1][b] = coords of x_k * basis(d)[b] in basis(d+1)
    mutable std::vector<std::vector<std::vector<std::vector<std::pair<int, Rat>>>>> var_maps_;
    mutable std::vector<bool> var_maps_ready_;
    void ensure_var_maps(int d) const;
    static const std::vector<Monomial> empty_;
};

// Koszul strand computer for a fixed ideal and form sequence; caches ranks.
class KoszulComplex {
  public:
    KoszulComplex(std::shared_ptr<QuotientRing> qr, LinearFormSequence forms);

    int p() const { return static_cast<int>(forms_.forms.size()); }
    // dim of the degree-j strand of H_i
    long long homology_dim(int i, int j) const;
    long long strand_dim(int i, int j) const;
    // matrix of the differential K_{i,j} -> K_{i-1,j}
    RatMatrix differential(int i, int j) const;
    const QuotientRing& quotient() const { return *qr_; }

  private:
    std::shared_ptr<QuotientRing> qr_;
    LinearFormSequence forms_;
    std::vector<std::vector<int>> wedges_;  // index subsets per size
    mutable std::map<std::pair<int, int>, int> rank_cache_;
    int diff_rank(int i, int j) const;
    friend bool is_proper_sequence(const LinearFormSequence&, const std::vector<Polynomial>&, int,
                                   int);
};

long long koszul_betti(const std::vector<Polynomial>& gens, int n,
                       const LinearFormSequence& forms, int i, int j);

// Full tensor with generic forms; certified by agreement of two seeds.
KoszulBettiTensor koszul_betti_tensor(const std::vector<Polynomial>& gens, int n, int p_max,
                                      std::uint64_t seed, int j_bound);

// Ordinary graded Betti table via the variable Koszul complex (p = n).
BettiTable graded_betti(const std::vector<Polynomial>& gens, int n);

// Condition: each form annihilates all positive Koszul homology of the
// preceding subsequence.
bool is_proper_sequence(const LinearFormSequence& forms, const std::vector<Polynomial>& gens,
                        int n, int j_bound);

// Audits the splitting recursions relating p to p-1 on the whole support.
bool recursion_check(const KoszulBettiTensor& t);

}  // namespace ginlex
