#include "ginlex/corpus.hpp"

#include <random>

#include "ginlex/stable.hpp"

namespace ginlex {

namespace {

Monomial random_monomial(int n, int d, std::mt19937_64& rng) {
    std::vector<int> e(static_cast<size_t>(n), 0);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int k = 0; k < d; ++k) e[static_cast<size_t>(pick(rng))]++;
    return Monomial(std::move(e));
}

}  // namespace

std::vector<MonomialIdeal> random_strongly_stable_ideals(int count, int n, int maxdeg,
                                                         std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> ngens(1, 3);
    std::uniform_int_distribution<int> deg(1, maxdeg);
    std::vector<MonomialIdeal> out;
    while (static_cast<int>(out.size()) < count) {
        std::vector<Monomial> gens;
        int k = ngens(rng);
        for (int g = 0; g < k; ++g)
            for (auto& m : borel_closure({random_monomial(n, deg(rng), rng)})) gens.push_back(m);
        MonomialIdeal I(n, std::move(gens));
        if (I.is_zero()) continue;
        out.push_back(std::move(I));
    }
    return out;
}

std::vector<std::vector<Polynomial>> random_homogeneous_ideals(int count, int n, int maxdeg,
                                                               std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> ngens(2, 3);
    std::uniform_int_distribution<int> deg(1, maxdeg);
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::vector<std::vector<Polynomial>> out;
    while (static_cast<int>(out.size()) < count) {
        std::vector<Polynomial> gens;
        int k = ngens(rng);
        for (int g = 0; g < k; ++g) {
            int d = deg(rng);
            std::vector<Term> ts;
            int t = nterms(rng);
            for (int a = 0; a < t; ++a) {
                int c = coeff(rng);
                if (c == 0) c = 1;
                ts.push_back({Rat(c), random_monomial(n, d, rng)});
            }
            Polynomial p(std::move(ts));
            if (!p.is_zero()) gens.push_back(std::move(p));
        }
        if (gens.empty()) continue;
        out.push_back(std::move(gens));
    }
    return out;
}

std::vector<AlmostBorelFixedIdeal> random_abf_ideals(int count, int n, int degree,
                                                     std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> block_size(2, 2);
    std::uniform_int_distribution<int> nblocks(1, 2);
    std::vector<AlmostBorelFixedIdeal> out;
    while (static_cast<int>(out.size()) < count) {
        std::vector<std::vector<Monomial>> blocks;
        std::vector<Monomial> used;
        int want = nblocks(rng);
        bool ok = true;
        for (int b = 0; b < want && ok; ++b) {
            std::vector<Monomial> blk;
            for (int attempt = 0; attempt < 60 &&
                                  static_cast<int>(blk.size()) < block_size(rng);
                 ++attempt) {
                Monomial m = random_monomial(n, degree, rng);
                bool fits = true;
                for (auto& u : used)
                    if (borel_compare(m, u) != BorelCmp::incomparable) fits = false;
                if (!fits) continue;
                blk.push_back(m);
                used.push_back(m);
            }
            if (blk.empty()) ok = false;
            else blocks.push_back(std::move(blk));
        }
        if (!ok) continue;
        try {
            out.push_back(construct_abf(n, blocks));
        } catch (const std::invalid_argument&) {
            continue;
        }
    }
    return out;
}

}  // namespace ginlex
