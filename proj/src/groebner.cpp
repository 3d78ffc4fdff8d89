#include "ginlex/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ginlex/coordinates.hpp"

namespace ginlex {

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const TermOrder& order) {
    std::vector<Monomial> lts;
    lts.reserve(G.size());
    for (auto& g : G) {
        if (g.is_zero()) throw std::invalid_argument("zero polynomial in divisor list");
        lts.push_back(g.leading_term(order).mono);
    }
    Polynomial work = f;
    while (!work.is_zero()) {
        // largest reducible term of work
        const Term* target = nullptr;
        size_t divisor = G.size();
        for (auto& t : work.terms()) {
            size_t d = G.size();
            for (size_t k = 0; k < G.size(); ++k)
                if (lts[k].divides(t.mono)) {
                    d = k;
                    break;
                }
            if (d == G.size()) continue;
            if (!target || order.greater(t.mono, target->mono)) {
                target = &t;
                divisor = d;
            }
        }
        if (!target) break;
        const Polynomial& g = G[divisor];
        const Term& lt = g.leading_term(order);
        Rat c = target->coeff / lt.coeff;
        Monomial q = target->mono.divide(lt.mono);
        work = work - g.times_monomial(q, c);
    }
    return work;
}

namespace {

struct Pair {
    int i, j;
    Monomial lcm;
};

std::vector<Polynomial> interreduce(std::vector<Polynomial> basis, const TermOrder& order) {
    // drop generators whose leading term is divisible by another's
    std::vector<Polynomial> kept;
    for (size_t i = 0; i < basis.size(); ++i) {
        Monomial lt = basis[i].leading_term(order).mono;
        bool drop = false;
        for (size_t j = 0; j < basis.size() && !drop; ++j) {
            if (i == j) continue;
            Monomial ltj = basis[j].leading_term(order).mono;
            if (ltj.divides(lt) && (ltj != lt || j < i)) drop = true;
        }
        if (!drop) kept.push_back(basis[i]);
    }
    // tail-reduce each against the others
    std::vector<Polynomial> out(kept.size());
    for (size_t i = 0; i < kept.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        Polynomial r = others.empty() ? kept[i] : normal_form(kept[i], others, order);
        out[i] = r.monic(order);
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(a.leading_term(order).mono, b.leading_term(order).mono);
    });
    return out;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const TermOrder& order) {
    std::vector<Polynomial> basis;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.homogeneous_degree())
            throw std::invalid_argument("buchberger expects homogeneous generators");
        basis.push_back(g.monic(order));
    }
    if (basis.empty()) return {basis, order, true};

    auto lt = [&](size_t k) { return basis[k].leading_term(order).mono; };

    std::vector<Pair> pending;
    auto add_pairs = [&](size_t t) {
        for (size_t i = 0; i < t; ++i)
            pending.push_back({static_cast<int>(i), static_cast<int>(t), lt(i).lcm(lt(t))});
    };
    for (size_t t = 1; t < basis.size(); ++t) add_pairs(t);

    auto is_pending = [&](int a, int b) {
        for (auto& p : pending)
            if ((p.i == a && p.j == b) || (p.i == b && p.j == a)) return true;
        return false;
    };

    while (!pending.empty()) {
        // normal selection: smallest lcm degree, ties by index for determinism
        size_t best = 0;
        for (size_t k = 1; k < pending.size(); ++k) {
            auto& p = pending[k];
            auto& q = pending[best];
            if (p.lcm.degree() < q.lcm.degree() ||
                (p.lcm.degree() == q.lcm.degree() && (p.j < q.j || (p.j == q.j && p.i < q.i))))
                best = k;
        }
        Pair p = pending[best];
        pending.erase(pending.begin() + static_cast<long>(best));

        Monomial li = lt(static_cast<size_t>(p.i)), lj = lt(static_cast<size_t>(p.j));
        if (li.coprime(lj)) continue;  // product criterion
        // chain criterion: some k with lt(k) | lcm and both pairs already handled
        bool skip = false;
        for (size_t k = 0; k < basis.size() && !skip; ++k) {
            if (static_cast<int>(k) == p.i || static_cast<int>(k) == p.j) continue;
            if (lt(k).divides(p.lcm) && !is_pending(p.i, static_cast<int>(k)) &&
                !is_pending(p.j, static_cast<int>(k)))
                skip = true;
        }
        if (skip) continue;

        const Polynomial& fi = basis[static_cast<size_t>(p.i)];
        const Polynomial& fj = basis[static_cast<size_t>(p.j)];
        Polynomial s = fi.times_monomial(p.lcm.divide(li)) - fj.times_monomial(p.lcm.divide(lj));
        Polynomial r = normal_form(s, basis, order);
        if (!r.is_zero()) {
            basis.push_back(r.monic(order));
            add_pairs(basis.size() - 1);
        }
    }
    return {interreduce(std::move(basis), order), order, true};
}

MonomialIdeal initial_ideal(const GroebnerBasis& gb) {
    if (gb.generators.empty()) return MonomialIdeal::zero(0);
    int n = gb.generators.front().nvars();
    std::vector<Monomial> lts;
    for (auto& g : gb.generators) lts.push_back(g.leading_term(gb.order).mono);
    return MonomialIdeal(n, std::move(lts));
}

MonomialIdeal initial_ideal(const std::vector<Polynomial>& gens, const TermOrder& order) {
    return initial_ideal(buchberger(gens, order));
}

MonomialIdeal gin(const std::vector<Polynomial>& gens, const TermOrder& order,
                  const GinOptions& opts) {
    if (opts.trials < 2) throw std::invalid_argument("gin needs at least 2 trials");
    int n = 0;
    for (auto& g : gens)
        if (!g.is_zero()) n = g.nvars();
    if (n == 0) throw std::invalid_argument("gin of the zero ideal");
    auto shape = opts.upper_triangular ? ChangeOfCoordinates::Shape::upper_triangular
                                       : ChangeOfCoordinates::Shape::general;
    std::vector<MonomialIdeal> results;
    for (int t = 0; t < opts.trials; ++t) {
        std::uint64_t s = opts.seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(t + 1);
        ChangeOfCoordinates g = random_coordinates(n, s, opts.bound, shape);
        results.push_back(initial_ideal(apply_coordinates(g, gens), order));
    }
    for (size_t t = 1; t < results.size(); ++t)
        if (results[t] != results[0]) throw GenericityError(std::move(results));
    if (!is_strongly_stable(results[0]))
        throw GenericityError(std::move(results));
    return results[0];
}

std::vector<Polynomial> to_polynomials(const MonomialIdeal& I) {
    std::vector<Polynomial> out;
    for (auto& m : I.min_generators()) out.push_back(Polynomial::from_monomial(m));
    return out;
}

}  // namespace ginlex
