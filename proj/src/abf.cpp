#include "ginlex/abf.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "ginlex/linalg.hpp"
#include "ginlex/term_order.hpp"

namespace ginlex {

namespace {

using MonoSet = std::set<Monomial, CanonLess>;

// A set of equal-degree monomials is Borel-fixed iff it is closed under the
// exchange moves x_j -> x_i (i < j). Returns a missing exchange result if not.
std::optional<Monomial> borel_fixed_defect(const MonoSet& S) {
    for (auto& m : S) {
        for (int j = 2; j <= m.nvars(); ++j) {
            if (m.exp(j) == 0) continue;
            for (int i = 1; i < j; ++i) {
                Monomial moved = m.divide(Monomial::variable(m.nvars(), j)) *
                                 Monomial::variable(m.nvars(), i);
                if (!S.count(moved)) return moved;
            }
        }
    }
    return std::nullopt;
}

std::vector<Rat> coeff_row(const Polynomial& p,
                           const std::map<Monomial, int, CanonLess>& col_of) {
    std::vector<Rat> row(col_of.size(), 0);
    for (auto& t : p.terms()) row[static_cast<size_t>(col_of.at(t.mono))] = t.coeff;
    return row;
}

// Initial monomials of the span of `polys` (one degree) under `ord`: pivot
// columns of the row echelon form with columns sorted descending under ord.
std::vector<Monomial> initial_span(const std::vector<Polynomial>& polys, int n, int d,
                                   const TermOrder& ord) {
    std::vector<Monomial> cols = monomials_of_degree(n, d);
    std::sort(cols.begin(), cols.end(),
              [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
    std::map<Monomial, int, CanonLess> col_of;
    for (size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = static_cast<int>(i);
    RatMatrix m;
    for (auto& p : polys) m.push_back(coeff_row(p, col_of));
    std::vector<Monomial> out;
    for (int pc : rref(m)) out.push_back(cols[static_cast<size_t>(pc)]);
    return out;
}

MonomialIdeal gin_for_order(const AlmostBorelFixedIdeal& abf, const TermOrder& ord) {
    std::vector<Monomial> gens;
    for (auto& deg : abf.degrees) {
        gens.insert(gens.end(), deg.borel_part.begin(), deg.borel_part.end());
        if (!deg.lower_polys.empty())
            for (auto& m : initial_span(deg.lower_polys, abf.n, deg.d, ord))
                gens.push_back(m);
    }
    return MonomialIdeal(abf.n, std::move(gens));
}

}  // namespace

std::vector<Monomial> lower_neighbors(const std::vector<Monomial>& A, int n) {
    MonoSet S(A.begin(), A.end());
    if (auto defect = borel_fixed_defect(S))
        throw std::invalid_argument("set is not Borel-fixed: missing " + defect->str());
    if (A.empty()) return {};
    int d = A.front().degree();
    std::vector<Monomial> all = monomials_of_degree(n, d);
    std::vector<Monomial> out;
    for (auto& m : all) {
        if (S.count(m)) continue;
        bool ok = true;
        for (auto& a : all)
            if (borel_compare(a, m) == BorelCmp::greater && !S.count(a)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(m);
    }
    return out;
}

AlmostBorelFixedIdeal recognize_abf(const std::vector<Polynomial>& gens, int n, int bound) {
    for (auto& g : gens)
        if (!g.is_zero() && !g.homogeneous_degree())
            throw std::invalid_argument("generators must be homogeneous");
    AlmostBorelFixedIdeal out;
    out.n = n;
    out.ideal_gens = gens;
    for (int d = 0; d <= bound; ++d) {
        std::vector<Monomial> cols = monomials_of_degree(n, d);
        std::map<Monomial, int, CanonLess> col_of;
        for (size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = static_cast<int>(i);
        RatMatrix m;
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            int dg = *g.homogeneous_degree();
            if (dg > d) continue;
            for (auto& mult : monomials_of_degree(n, d - dg))
                m.push_back(coeff_row(g.times_monomial(mult), col_of));
        }
        std::vector<int> pivots = rref(m);
        if (m.empty()) continue;

        AbfDegree deg;
        deg.d = d;
        MonoSet aset;
        for (size_t r = 0; r < m.size(); ++r) {
            int nz = 0;
            for (auto& x : m[r])
                if (x != 0) ++nz;
            if (nz == 1) {
                deg.borel_part.push_back(cols[static_cast<size_t>(pivots[r])]);
                aset.insert(deg.borel_part.back());
            }
        }
        if (auto defect = borel_fixed_defect(aset)) throw NotAlmostBorelFixedError(d, *defect);
        std::vector<bool> is_ln(cols.size(), false);
        if (deg.borel_part.empty()) {
            // only the pure power of x1 has no strict majorants
            is_ln[0] = true;
        } else {
            for (auto& u : lower_neighbors(deg.borel_part, n))
                is_ln[static_cast<size_t>(col_of.at(u))] = true;
        }
        for (size_t r = 0; r < m.size(); ++r) {
            int nz = 0;
            for (auto& x : m[r])
                if (x != 0) ++nz;
            if (nz <= 1) continue;
            std::vector<Term> ts;
            for (size_t c = 0; c < m[r].size(); ++c) {
                if (m[r][c] == 0) continue;
                if (!is_ln[c]) throw NotAlmostBorelFixedError(d, cols[c]);
                ts.push_back({m[r][c], cols[c]});
            }
            deg.lower_polys.push_back(Polynomial(std::move(ts)));
        }
        out.degrees.push_back(std::move(deg));
    }
    return out;
}

AlmostBorelFixedIdeal abf_space(int n, std::vector<Monomial> A, std::vector<Polynomial> polys) {
    if (A.empty() && polys.empty()) throw std::invalid_argument("empty space");
    int d = A.empty() ? *polys.front().homogeneous_degree() : A.front().degree();
    MonoSet ln;
    for (auto& u : lower_neighbors(A, n)) ln.insert(u);
    bool empty_a = A.empty();
    for (auto& p : polys) {
        if (p.homogeneous_degree() != d)
            throw std::invalid_argument("polynomials must share the degree of the monomial part");
        for (auto& t : p.terms())
            if (!empty_a && !ln.count(t.mono)) throw NotAlmostBorelFixedError(d, t.mono);
    }
    AlmostBorelFixedIdeal out;
    out.n = n;
    AbfDegree deg;
    deg.d = d;
    deg.borel_part = std::move(A);
    deg.lower_polys = polys;
    out.degrees.push_back(std::move(deg));
    for (auto& m : out.degrees.front().borel_part)
        out.ideal_gens.push_back(Polynomial::from_monomial(m));
    for (auto& p : polys) out.ideal_gens.push_back(p);
    return out;
}

AlmostBorelFixedIdeal construct_abf(int n, const std::vector<std::vector<Monomial>>& blocks,
                                    const TopPolicy& top) {
    std::vector<Monomial> T;
    MonoSet taken;
    for (auto& blk : blocks) {
        if (blk.empty()) throw std::invalid_argument("empty block");
        for (auto& m : blk) {
            if (!taken.insert(m).second)
                throw std::invalid_argument("blocks must have disjoint supports: " + m.str() +
                                            " repeats");
            T.push_back(m);
        }
    }
    if (T.empty()) throw std::invalid_argument("no monomials given");
    int d = T.front().degree();
    for (size_t a = 0; a < T.size(); ++a)
        for (size_t b = a + 1; b < T.size(); ++b)
            if (borel_compare(T[a], T[b]) != BorelCmp::incomparable)
                throw std::invalid_argument("monomials must be pairwise Borel-incomparable: " +
                                            T[a].str() + ", " + T[b].str());

    std::vector<Monomial> A = borel_closure_strict(T);
    std::vector<Monomial> X = borel_closure(T);
    MonoSet products;
    for (auto& m : X)
        for (int k = 1; k <= n; ++k) products.insert(m * Monomial::variable(n, k));
    for (auto& m : A)
        for (int k = 1; k <= n; ++k) products.insert(m * Monomial::variable(n, k));

    MonoSet B;
    switch (top.kind) {
        case TopPolicy::Kind::closure_of_products:
            B = products;
            break;
        case TopPolicy::Kind::full:
            for (auto& m : monomials_of_degree(n, d + 1)) B.insert(m);
            break;
        case TopPolicy::Kind::explicit_set:
            B = MonoSet(top.monomials.begin(), top.monomials.end());
            for (auto& m : products)
                if (!B.count(m))
                    throw std::invalid_argument("top set must contain " + m.str());
            break;
    }
    if (auto defect = borel_fixed_defect(B))
        throw std::invalid_argument("top set is not Borel-fixed: missing " + defect->str());

    AlmostBorelFixedIdeal out;
    out.n = n;
    AbfDegree low;
    low.d = d;
    low.borel_part = A;
    for (auto& blk : blocks) {
        std::vector<Term> ts;
        for (auto& m : blk) ts.push_back({1, m});
        low.lower_polys.push_back(Polynomial(std::move(ts)));
    }
    AbfDegree high;
    high.d = d + 1;
    high.borel_part.assign(B.begin(), B.end());
    out.degrees.push_back(std::move(low));
    out.degrees.push_back(high);

    for (auto& m : A) out.ideal_gens.push_back(Polynomial::from_monomial(m));
    for (auto& f : out.degrees.front().lower_polys) out.ideal_gens.push_back(f);
    for (auto& m : high.borel_part) out.ideal_gens.push_back(Polynomial::from_monomial(m));
    return out;
}

GinFamily enumerate_gins(const AlmostBorelFixedIdeal& abf) {
    int n = abf.n;
    GinFamily fam;
    fam.n = n;

    std::vector<const Polynomial*> polys;
    for (auto& deg : abf.degrees)
        for (auto& f : deg.lower_polys) polys.push_back(&f);
    std::vector<std::vector<Monomial>> supports;
    for (auto* f : polys) {
        std::vector<Monomial> s;
        for (auto& t : f->terms()) s.push_back(t.mono);
        supports.push_back(std::move(s));
    }

    std::map<MonomialIdeal, size_t> index_of;
    auto admit = [&](const std::vector<Monomial>& selection, std::vector<Rat> witness) {
        MonomialIdeal G = gin_for_order(abf, TermOrder::weight(witness));
        if (index_of.count(G)) return;
        index_of[G] = fam.members.size();
        GinMember mem;
        mem.betti = ek_betti(G);
        mem.ideal = std::move(G);
        mem.selection = selection;
        mem.witness = std::move(witness);
        fam.members.push_back(std::move(mem));
    };

    if (polys.empty()) {
        std::vector<Rat> w;
        for (int k = n; k >= 1; --k) w.push_back(k);
        admit({}, std::move(w));
        fam.members[0].is_revlex = fam.members[0].is_lex = true;
        return fam;
    }

    std::vector<size_t> pick(polys.size(), 0);
    for (;;) {
        std::vector<Monomial> selection;
        std::vector<StrictInequality> cons = decreasing_positive_constraints(n);
        for (size_t i = 0; i < polys.size(); ++i) {
            const Monomial& sel = supports[i][pick[i]];
            selection.push_back(sel);
            for (auto& other : supports[i]) {
                if (other == sel) continue;
                std::vector<Rat> c(static_cast<size_t>(n));
                for (int j = 1; j <= n; ++j)
                    c[static_cast<size_t>(j - 1)] = sel.exp(j) - other.exp(j);
                cons.push_back({std::move(c)});
            }
        }
        ConeResult res = strict_cone_feasible(cons, n);
        if (res.feasible)
            admit(selection, std::move(res.witness));
        else
            fam.infeasible.push_back({std::move(selection), std::move(res.certificate)});

        size_t i = 0;
        while (i < pick.size() && ++pick[i] == supports[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }

    MonomialIdeal grev = gin_for_order(abf, TermOrder::revlex());
    MonomialIdeal glex = gin_for_order(abf, TermOrder::lex());
    for (auto& mem : fam.members) {
        if (mem.ideal == grev) mem.is_revlex = true;
        if (mem.ideal == glex) mem.is_lex = true;
    }
    return fam;
}

BettiPosetReport betti_poset(const GinFamily& family) {
    size_t k = family.members.size();
    if (k == 0) throw std::invalid_argument("empty family");
    std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
    for (size_t a = 0; a < k; ++a)
        for (size_t b = 0; b < k; ++b)
            leq[a][b] = family.members[a].betti.leq(family.members[b].betti);

    BettiPosetReport rep;
    for (size_t a = 0; a < k; ++a)
        for (size_t b = 0; b < k; ++b)
            if (a != b && leq[a][b]) rep.comparabilities.push_back({static_cast<int>(a),
                                                                   static_cast<int>(b)});
    for (size_t a = 0; a < k; ++a) {
        bool min_all = true, max_all = true, maximal = true;
        for (size_t b = 0; b < k; ++b) {
            if (!leq[a][b]) min_all = false;
            if (!leq[b][a]) max_all = false;
            if (b != a && leq[a][b] && !leq[b][a]) maximal = false;
        }
        if (min_all && !rep.minimum) rep.minimum = static_cast<int>(a);
        if (max_all && !rep.maximum) rep.maximum = static_cast<int>(a);
        if (maximal) rep.maximal.push_back(static_cast<int>(a));
    }
    return rep;
}

std::vector<std::vector<long long>> lex_proximity(const GinFamily& family,
                                                  const MonomialIdeal& L, int bound) {
    std::vector<std::vector<long long>> table;
    for (auto& mem : family.members) {
        std::vector<long long> row(static_cast<size_t>(bound) + 1, 0);
        for (int j = 0; j <= bound; ++j)
            for (auto& m : monomials_of_degree(family.n, j))
                if (L.contains(m) && mem.ideal.contains(m)) ++row[static_cast<size_t>(j)];
        table.push_back(std::move(row));
    }
    for (size_t a = 0; a < family.members.size(); ++a) {
        if (!family.members[a].is_lex) continue;
        for (size_t b = 0; b < family.members.size(); ++b)
            for (int j = 0; j <= bound; ++j)
                if (table[a][static_cast<size_t>(j)] < table[b][static_cast<size_t>(j)])
                    throw std::logic_error("lex gin fails to dominate the intersection table");
    }
    return table;
}

}  // namespace ginlex
