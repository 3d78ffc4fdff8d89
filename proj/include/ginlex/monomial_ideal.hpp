#pragma once

#include <vector>

#include "ginlex/monomial.hpp"

namespace ginlex {

// Monomial ideal held by its minimal generators (a divisibility antichain).
class MonomialIdeal {
  public:
    MonomialIdeal() = default;
    MonomialIdeal(int n, std::vector<Monomial> generators);  // minimalizes
    static MonomialIdeal zero(int n) { return MonomialIdeal(n, {}); }

    int nvars() const { return n_; }
    const std::vector<Monomial>& min_generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    int max_gen_degree() const;

    bool contains(const Monomial& m) const;  // divisibility by some generator
    std::vector<Monomial> degree_slice(int d) const;
    long long dim_at(int d) const;  // dim_K I_d

    bool operator==(const MonomialIdeal& o) const { return n_ == o.n_ && gens_ == o.gens_; }
    bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }
    bool operator<(const MonomialIdeal& o) const;  // canonical, for dedup keys

  private:
    int n_ = 0;
    std::vector<Monomial> gens_;  // sorted canonically descending
};

// Exchange condition x_i | u  =>  x_j * u / x_i in I for all j < i, checked on
// minimal generators (which suffices for monomial ideals).
bool is_strongly_stable(const MonomialIdeal& I);

// Exhaustive per-degree check of the same condition, used as a test oracle.
bool is_strongly_stable_bruteforce(const MonomialIdeal& I, int bound);

}  // namespace ginlex
