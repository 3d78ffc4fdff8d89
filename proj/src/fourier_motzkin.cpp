#include "ginlex/fourier_motzkin.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace ginlex {

namespace {

struct Tracked {
    std::vector<Rat> coeffs;
    std::vector<Rat> mult;  // nonnegative multipliers over the original rows
};

int top_var(const std::vector<Rat>& c) {
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
        if (c[static_cast<size_t>(k)] != 0) return k + 1;
    return 0;
}

// scale so the first nonzero coefficient has absolute value 1 (direction key)
std::vector<Rat> direction_key(const std::vector<Rat>& c) {
    for (auto& x : c) {
        if (x == 0) continue;
        Rat s = x > 0 ? x : Rat(-x);
        std::vector<Rat> out;
        out.reserve(c.size());
        for (auto& y : c) out.push_back(y / s);
        return out;
    }
    return c;
}

}  // namespace

std::vector<StrictInequality> decreasing_positive_constraints(int n) {
    std::vector<StrictInequality> cons;
    for (int k = 1; k < n; ++k) {
        std::vector<Rat> c(static_cast<size_t>(n), 0);
        c[static_cast<size_t>(k - 1)] = 1;
        c[static_cast<size_t>(k)] = -1;
        cons.push_back({std::move(c)});
    }
    std::vector<Rat> last(static_cast<size_t>(n), 0);
    last[static_cast<size_t>(n - 1)] = 1;
    cons.push_back({std::move(last)});
    return cons;
}

ConeResult strict_cone_feasible(const std::vector<StrictInequality>& constraints, int n) {
    size_t ncons = constraints.size();
    // levels[k-1]: constraints whose highest nonzero coordinate is w_k
    std::vector<std::vector<Tracked>> levels(static_cast<size_t>(n));
    std::set<std::vector<Rat>> seen;

    // returns the certificate multipliers when the constraint reads 0 > 0
    auto add = [&](Tracked t) -> std::optional<std::vector<Rat>> {
        int tv = top_var(t.coeffs);
        if (tv == 0) return std::move(t.mult);
        if (seen.insert(direction_key(t.coeffs)).second)
            levels[static_cast<size_t>(tv - 1)].push_back(std::move(t));
        return std::nullopt;
    };

    for (size_t i = 0; i < ncons; ++i) {
        if (static_cast<int>(constraints[i].coeffs.size()) != n)
            throw std::invalid_argument("constraint length mismatch");
        Tracked t{constraints[i].coeffs, std::vector<Rat>(ncons, 0)};
        t.mult[i] = 1;
        if (auto contra = add(std::move(t))) {
            ConeResult r;
            r.certificate = std::move(*contra);
            return r;
        }
    }

    auto combine = [&](const Tracked& pos, const Tracked& neg, int k) {
        const Rat& a = pos.coeffs[static_cast<size_t>(k - 1)];
        Rat b = -neg.coeffs[static_cast<size_t>(k - 1)];
        Tracked t;
        t.coeffs.resize(static_cast<size_t>(n));
        t.mult.resize(ncons);
        for (int j = 0; j < n; ++j)
            t.coeffs[static_cast<size_t>(j)] = b * pos.coeffs[static_cast<size_t>(j)] +
                                               a * neg.coeffs[static_cast<size_t>(j)];
        for (size_t j = 0; j < ncons; ++j) t.mult[j] = b * pos.mult[j] + a * neg.mult[j];
        return t;
    };

    for (int k = n; k >= 2; --k) {
        auto& lvl = levels[static_cast<size_t>(k - 1)];
        std::vector<const Tracked*> pos, neg;
        for (auto& t : lvl)
            (t.coeffs[static_cast<size_t>(k - 1)] > 0 ? pos : neg).push_back(&t);
        for (auto* p : pos)
            for (auto* q : neg)
                if (auto contra = add(combine(*p, *q, k))) {
                    ConeResult r;
                    r.certificate = std::move(*contra);
                    return r;
                }
    }

    // level 1: a * w_1 > 0; mixed signs are contradictory
    const Tracked* first_pos = nullptr;
    const Tracked* first_neg = nullptr;
    for (auto& t : levels[0])
        (t.coeffs[0] > 0 ? first_pos : first_neg) = &t;
    if (first_pos && first_neg) {
        Tracked contra = combine(*first_pos, *first_neg, 1);
        ConeResult r;
        r.certificate = std::move(contra.mult);
        return r;
    }

    ConeResult r;
    r.feasible = true;
    r.witness.assign(static_cast<size_t>(n), 0);
    r.witness[0] = first_neg ? -1 : 1;
    for (int k = 2; k <= n; ++k) {
        bool has_lower = false, has_upper = false;
        Rat lower = 0, upper = 0;
        for (auto& t : levels[static_cast<size_t>(k - 1)]) {
            Rat partial = 0;
            for (int j = 1; j < k; ++j)
                partial += t.coeffs[static_cast<size_t>(j - 1)] * r.witness[static_cast<size_t>(j - 1)];
            const Rat& ck = t.coeffs[static_cast<size_t>(k - 1)];
            Rat bound = -partial / ck;
            if (ck > 0) {
                if (!has_lower || bound > lower) lower = bound;
                has_lower = true;
            } else {
                if (!has_upper || bound < upper) upper = bound;
                has_upper = true;
            }
        }
        Rat v = 0;
        if (has_lower && has_upper) {
            if (!(lower < upper))
                throw std::logic_error("elimination promised a gap that is empty");
            v = (lower + upper) / 2;
        } else if (has_lower) {
            v = lower + 1;
        } else if (has_upper) {
            v = upper - 1;
        }
        r.witness[static_cast<size_t>(k - 1)] = v;
    }
    for (auto& c : constraints) {
        Rat dot = 0;
        for (int j = 0; j < n; ++j)
            dot += c.coeffs[static_cast<size_t>(j)] * r.witness[static_cast<size_t>(j)];
        if (!(dot > 0)) throw std::logic_error("witness fails a constraint");
    }
    return r;
}

}  // namespace ginlex
