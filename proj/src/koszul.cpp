#include "ginlex/koszul.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ginlex {

const std::vector<Monomial> QuotientRing::empty_{};

LinearFormSequence LinearFormSequence::last_variables(int n, int p) {
    std::vector<Polynomial> fs;
    for (int i = n - p + 1; i <= n; ++i)
        fs.push_back(Polynomial::from_monomial(Monomial::variable(n, i)));
    return {std::move(fs)};
}

LinearFormSequence LinearFormSequence::all_variables(int n) { return last_variables(n, n); }

LinearFormSequence LinearFormSequence::generic(int n, int p, std::uint64_t seed, int bound) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-bound, bound);
    for (int attempt = 0; attempt < 100; ++attempt) {
        RatMatrix coeffs(static_cast<size_t>(p), std::vector<Rat>(static_cast<size_t>(n)));
        for (auto& row : coeffs)
            for (auto& x : row) x = dist(rng);
        if (rank(coeffs) != p) continue;
        std::vector<Polynomial> fs;
        for (int i = 0; i < p; ++i) {
            std::vector<Term> ts;
            for (int k = 1; k <= n; ++k) {
                const Rat& c = coeffs[static_cast<size_t>(i)][static_cast<size_t>(k - 1)];
                if (c != 0) ts.push_back({c, Monomial::variable(n, k)});
            }
            fs.push_back(Polynomial(std::move(ts)));
        }
        return {std::move(fs)};
    }
    throw std::runtime_error("generic forms: no independent draw within cap");
}

LinearFormSequence LinearFormSequence::explicit_forms(std::vector<Polynomial> forms) {
    if (forms.empty()) return {{}};
    int n = forms.front().nvars();
    RatMatrix coeffs;
    for (auto& f : forms) {
        if (f.homogeneous_degree() != 1) throw std::invalid_argument("forms must be linear");
        std::vector<Rat> row(static_cast<size_t>(n), 0);
        for (auto& t : f.terms()) row[static_cast<size_t>(t.mono.max_var() - 1)] = t.coeff;
        coeffs.push_back(std::move(row));
    }
    if (rank(coeffs) != static_cast<int>(forms.size()))
        throw std::invalid_argument("forms are linearly dependent");
    return {std::move(forms)};
}

QuotientRing::QuotientRing(const std::vector<Polynomial>& gens, int n, int degree_bound)
    : n_(n), bound_(degree_bound), gb_{{}, TermOrder::revlex(), true} {
    std::vector<Polynomial> nonzero;
    for (auto& g : gens)
        if (!g.is_zero()) nonzero.push_back(g);
    if (!nonzero.empty()) gb_ = buchberger(nonzero, TermOrder::revlex());
    MonomialIdeal lead = gb_.generators.empty() ? MonomialIdeal::zero(n)
                                                : initial_ideal(gb_);
    for (int d = 0; d <= bound_; ++d) {
        std::vector<Monomial> b;
        for (auto& m : monomials_of_degree(n, d))
            if (!lead.contains(m)) b.push_back(m);
        index_.emplace_back();
        for (size_t i = 0; i < b.size(); ++i) index_.back()[b[i]] = static_cast<int>(i);
        bases_.push_back(std::move(b));
    }
    var_maps_.resize(static_cast<size_t>(bound_));
    var_maps_ready_.assign(static_cast<size_t>(bound_), false);
}

const std::vector<Monomial>& QuotientRing::basis(int d) const {
    if (d < 0 || d > bound_) return empty_;
    return bases_[static_cast<size_t>(d)];
}

long long QuotientRing::quotient_dim(int d) const {
    if (d < 0) return 0;
    if (d > bound_) throw std::logic_error("quotient degree beyond prepared bound");
    return static_cast<long long>(bases_[static_cast<size_t>(d)].size());
}

void QuotientRing::ensure_var_maps(int d) const {
    if (d < 0 || d >= bound_ || var_maps_ready_[static_cast<size_t>(d)]) return;
    auto& slot = var_maps_[static_cast<size_t>(d)];
    slot.assign(static_cast<size_t>(n_), {});
    const auto& from = bases_[static_cast<size_t>(d)];
    const auto& to_index = index_[static_cast<size_t>(d + 1)];
    for (int k = 1; k <= n_; ++k) {
        auto& per_var = slot[static_cast<size_t>(k - 1)];
        per_var.resize(from.size());
        for (size_t b = 0; b < from.size(); ++b) {
            Monomial prod = from[b] * Monomial::variable(n_, k);
            auto hit = to_index.find(prod);
            if (hit != to_index.end()) {
                per_var[b].push_back({hit->second, 1});
                continue;
            }
            if (gb_.generators.empty()) throw std::logic_error("missing quotient monomial");
            Polynomial nf = normal_form(Polynomial::from_monomial(prod), gb_.generators,
                                        gb_.order);
            for (auto& t : nf.terms()) per_var[b].push_back({to_index.at(t.mono), t.coeff});
        }
    }
    var_maps_ready_[static_cast<size_t>(d)] = true;
}

std::vector<Rat> QuotientRing::form_action(const Polynomial& form, int d, int basis_index) const {
    ensure_var_maps(d);
    std::vector<Rat> out(static_cast<size_t>(quotient_dim(d + 1)), 0);
    for (auto& t : form.terms()) {
        int k = t.mono.max_var();
        for (auto& [idx, c] :
             var_maps_[static_cast<size_t>(d)][static_cast<size_t>(k - 1)]
                      [static_cast<size_t>(basis_index)])
            out[static_cast<size_t>(idx)] += t.coeff * c;
    }
    return out;
}

KoszulComplex::KoszulComplex(std::shared_ptr<QuotientRing> qr, LinearFormSequence forms)
    : qr_(std::move(qr)), forms_(std::move(forms)) {
    int pp = p();
    wedges_.resize(static_cast<size_t>(pp) + 1);
    for (int mask = 0; mask < (1 << pp); ++mask)
        wedges_[static_cast<size_t>(__builtin_popcount(static_cast<unsigned>(mask)))].push_back(
            mask);
    for (auto& w : wedges_) std::sort(w.begin(), w.end());
}

long long KoszulComplex::strand_dim(int i, int j) const {
    if (i < 0 || i > p() || j - i < 0) return 0;
    return static_cast<long long>(wedges_[static_cast<size_t>(i)].size()) *
           qr_->quotient_dim(j - i);
}

RatMatrix KoszulComplex::differential(int i, int j) const {
    long long rows = strand_dim(i - 1, j);
    long long cols = strand_dim(i, j);
    RatMatrix m(static_cast<size_t>(rows), std::vector<Rat>(static_cast<size_t>(cols), 0));
    if (rows == 0 || cols == 0) return m;
    const auto& wi = wedges_[static_cast<size_t>(i)];
    const auto& wprev = wedges_[static_cast<size_t>(i - 1)];
    std::map<int, int> wprev_index;
    for (size_t t = 0; t < wprev.size(); ++t) wprev_index[wprev[t]] = static_cast<int>(t);
    long long src_block = qr_->quotient_dim(j - i);
    long long dst_block = qr_->quotient_dim(j - i + 1);
    for (size_t s = 0; s < wi.size(); ++s) {
        int mask = wi[s];
        int pos = 0;
        for (int bit = 0; bit < p(); ++bit) {
            if (!(mask & (1 << bit))) continue;
            ++pos;  // 1-based position of this factor within the subset
            int sub = mask & ~(1 << bit);
            int sign = (pos % 2 == 1) ? 1 : -1;
            long long dst_off = static_cast<long long>(wprev_index.at(sub)) * dst_block;
            for (long long b = 0; b < src_block; ++b) {
                std::vector<Rat> act =
                    qr_->form_action(forms_.forms[static_cast<size_t>(bit)], j - i,
                                     static_cast<int>(b));
                long long col = static_cast<long long>(s) * src_block + b;
                for (long long r = 0; r < dst_block; ++r) {
                    const Rat& c = act[static_cast<size_t>(r)];
                    if (c != 0)
                        m[static_cast<size_t>(dst_off + r)][static_cast<size_t>(col)] +=
                            sign > 0 ? c : -c;
                }
            }
        }
    }
    return m;
}

int KoszulComplex::diff_rank(int i, int j) const {
    auto key = std::make_pair(i, j);
    auto it = rank_cache_.find(key);
    if (it != rank_cache_.end()) return it->second;
    int r = 0;
    if (strand_dim(i, j) > 0 && strand_dim(i - 1, j) > 0) r = rank(differential(i, j));
    rank_cache_[key] = r;
    return r;
}

long long KoszulComplex::homology_dim(int i, int j) const {
    if (i < 0 || i > p()) return 0;
    long long dim = strand_dim(i, j);
    if (dim == 0) return 0;
    long long nullity = dim - diff_rank(i, j);
    return nullity - diff_rank(i + 1, j);
}

long long koszul_betti(const std::vector<Polynomial>& gens, int n,
                       const LinearFormSequence& forms, int i, int j) {
    int p = forms.size();
    if (i < 0 || i > p || j < 0 || j - i < 0) return 0;
    auto qr = std::make_shared<QuotientRing>(gens, n, j - i + 1);
    KoszulComplex kc(qr, forms);
    return kc.homology_dim(i, j);
}

KoszulBettiTensor koszul_betti_tensor(const std::vector<Polynomial>& gens, int n, int p_max,
                                      std::uint64_t seed, int j_bound) {
    if (p_max > n) throw std::invalid_argument("p_max exceeds variable count");
    auto build = [&](std::uint64_t s) {
        KoszulBettiTensor t;
        t.n = n;
        t.p_max = p_max;
        t.j_bound = j_bound;
        auto qr = std::make_shared<QuotientRing>(gens, n, j_bound + 1);
        for (int j = 0; j <= j_bound; ++j)
            t.set(0, j, 0, qr->quotient_dim(j));
        LinearFormSequence all = LinearFormSequence::generic(n, p_max, s);
        for (int p = 1; p <= p_max; ++p) {
            LinearFormSequence prefix{{all.forms.begin(), all.forms.begin() + p}};
            KoszulComplex kc(qr, prefix);
            for (int i = 0; i <= p; ++i)
                for (int j = 0; j <= j_bound; ++j) {
                    long long v = kc.homology_dim(i, j);
                    if (i > 0 && v != 0 && j == j_bound)
                        throw std::runtime_error(
                            "nonzero homology at the degree bound; raise j_bound");
                    t.set(i, j, p, v);
                }
        }
        return t;
    };
    KoszulBettiTensor a = build(seed);
    KoszulBettiTensor b = build(seed + 0x51ed2701ULL);
    if (!(a == b))
        throw GenericityFailure("genericity not reached: koszul tensors disagree across seeds");
    return a;
}

BettiTable graded_betti(const std::vector<Polynomial>& gens, int n) {
    int maxdeg = 0;
    for (auto& g : gens)
        if (!g.is_zero()) maxdeg = std::max(maxdeg, *g.homogeneous_degree());
    int j_bound = maxdeg + n + 1;
    for (;;) {
        auto qr = std::make_shared<QuotientRing>(gens, n, j_bound + 1);
        KoszulComplex kc(qr, LinearFormSequence::all_variables(n));
        BettiTable bt;
        bool boundary_hit = false;
        for (int i = 0; i <= n && !boundary_hit; ++i) {
            for (int j = 0; j <= j_bound; ++j) {
                long long v = kc.homology_dim(i, j);
                if (v == 0) continue;
                if (i >= 1 && j == j_bound) {
                    boundary_hit = true;
                    break;
                }
                if (i >= 1 || j == 0) bt.set(i, j, v);
            }
        }
        if (!boundary_hit) {
            bt.set(0, 0, 1);
            return bt;
        }
        j_bound += n;
        if (j_bound > maxdeg + 6 * n)
            throw std::runtime_error("graded_betti: support did not close");
    }
}

bool is_proper_sequence(const LinearFormSequence& forms, const std::vector<Polynomial>& gens,
                        int n, int j_bound) {
    int p = forms.size();
    auto qr = std::make_shared<QuotientRing>(gens, n, j_bound + 2);
    for (int j = 1; j <= p - 1; ++j) {
        LinearFormSequence prefix{{forms.forms.begin(), forms.forms.begin() + j}};
        KoszulComplex kc(qr, prefix);
        const Polynomial& next = forms.forms[static_cast<size_t>(j)];
        for (int i = 1; i <= j; ++i) {
            for (int jj = 0; jj <= j_bound; ++jj) {
                if (kc.homology_dim(i, jj) == 0) continue;
                RatMatrix d_i = kc.differential(i, jj);
                RatMatrix cycles = kernel_basis(d_i, static_cast<int>(kc.strand_dim(i, jj)));
                RatMatrix boundaries = kc.differential(i + 1, jj + 1);
                // rows of the membership system: columns of the boundary map
                RatMatrix span;
                long long rows = kc.strand_dim(i, jj + 1);
                for (size_t c = 0; boundaries.size() && c < boundaries[0].size(); ++c) {
                    std::vector<Rat> col(static_cast<size_t>(rows));
                    for (size_t r = 0; r < boundaries.size(); ++r) col[r] = boundaries[r][c];
                    span.push_back(std::move(col));
                }
                long long src_block = qr->quotient_dim(jj - i);
                long long dst_block = qr->quotient_dim(jj - i + 1);
                long long nwedge = kc.strand_dim(i, jj) / std::max(src_block, 1LL);
                for (auto& v : cycles) {
                    std::vector<Rat> w(static_cast<size_t>(rows), 0);
                    for (long long s = 0; s < nwedge; ++s) {
                        for (long long b = 0; b < src_block; ++b) {
                            const Rat& c = v[static_cast<size_t>(s * src_block + b)];
                            if (c == 0) continue;
                            auto act = qr->form_action(next, jj - i, static_cast<int>(b));
                            for (long long r = 0; r < dst_block; ++r)
                                w[static_cast<size_t>(s * dst_block + r)] +=
                                    c * act[static_cast<size_t>(r)];
                        }
                    }
                    if (!in_row_span(span, w)) return false;
                }
            }
        }
    }
    return true;
}

bool recursion_check(const KoszulBettiTensor& t) {
    for (int p = 1; p <= t.p_max; ++p) {
        for (int j = 0; j < t.j_bound; ++j) {
            long long lhs1 = t.get(1, j, p);
            long long rhs1 = t.get(1, j, p - 1) + t.get(0, j - 1, p - 1) - t.get(0, j, p - 1) +
                             t.get(0, j, p);
            if (lhs1 != rhs1) return false;
            for (int i = 2; i <= p; ++i) {
                if (t.get(i, j, p) != t.get(i, j, p - 1) + t.get(i - 1, j - 1, p - 1))
                    return false;
            }
        }
    }
    return true;
}

}  // namespace ginlex
