#include "ginlex/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace ginlex {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    for (int e : exps_) {
        if (e < 0) throw std::invalid_argument("negative exponent");
        degree_ += e;
    }
}

Monomial Monomial::one(int n) { return Monomial(std::vector<int>(static_cast<size_t>(n), 0)); }

Monomial Monomial::variable(int n, int idx) {
    std::vector<int> e(static_cast<size_t>(n), 0);
    e[static_cast<size_t>(idx - 1)] = 1;
    return Monomial(std::move(e));
}

int Monomial::max_var() const {
    for (int i = nvars(); i >= 1; --i)
        if (exp(i) > 0) return i;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (nvars() != o.nvars()) throw std::invalid_argument("variable count mismatch");
    std::vector<int> e(exps_);
    for (size_t i = 0; i < e.size(); ++i) e[i] += o.exps_[i];
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& o) const {
    if (nvars() != o.nvars()) throw std::invalid_argument("variable count mismatch");
    for (size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > o.exps_[i]) return false;
    return true;
}

Monomial Monomial::divide(const Monomial& o) const {
    if (!o.divides(*this)) throw std::invalid_argument("non-exact monomial division");
    std::vector<int> e(exps_);
    for (size_t i = 0; i < e.size(); ++i) e[i] -= o.exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& o) const {
    if (nvars() != o.nvars()) throw std::invalid_argument("variable count mismatch");
    std::vector<int> e(exps_);
    for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], o.exps_[i]);
    return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& o) const {
    for (size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0 && o.exps_[i] > 0) return false;
    return true;
}

std::vector<long long> Monomial::delta() const {
    std::vector<long long> d(exps_.size());
    long long s = 0;
    for (size_t i = 0; i < exps_.size(); ++i) {
        s += exps_[i];
        d[i] = s;
    }
    return d;
}

std::string Monomial::str() const {
    std::string s;
    for (int i = 1; i <= nvars(); ++i) {
        if (exp(i) == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i);
        if (exp(i) > 1) s += "^" + std::to_string(exp(i));
    }
    return s.empty() ? "1" : s;
}

Cmp canonical_compare(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("variable count mismatch");
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? Cmp::less : Cmp::greater;
    for (int i = 1; i <= a.nvars(); ++i) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? Cmp::less : Cmp::greater;
    }
    return Cmp::equal;
}

BorelCmp borel_compare(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("variable count mismatch");
    if (a.degree() != b.degree()) throw std::invalid_argument("borel_compare needs equal degrees");
    auto da = a.delta(), db = b.delta();
    bool ge = true, le = true;
    for (size_t i = 0; i < da.size(); ++i) {
        if (da[i] < db[i]) ge = false;
        if (da[i] > db[i]) le = false;
    }
    if (ge && le) return BorelCmp::equal;
    if (ge) return BorelCmp::greater;
    if (le) return BorelCmp::less;
    return BorelCmp::incomparable;
}

namespace {
void enumerate(int n, int pos, int rem, std::vector<int>& cur, std::vector<Monomial>& out) {
    if (pos == n) {
        if (rem == 0) out.emplace_back(cur);
        return;
    }
    if (pos == n - 1) {
        cur[static_cast<size_t>(pos)] = rem;
        out.emplace_back(cur);
        cur[static_cast<size_t>(pos)] = 0;
        return;
    }
    for (int e = rem; e >= 0; --e) {
        cur[static_cast<size_t>(pos)] = e;
        enumerate(n, pos + 1, rem - e, cur, out);
    }
    cur[static_cast<size_t>(pos)] = 0;
}
}  // namespace

std::vector<Monomial> monomials_of_degree(int n, int d) {
    std::vector<Monomial> out;
    if (n <= 0 || d < 0) return out;
    std::vector<int> cur(static_cast<size_t>(n), 0);
    enumerate(n, 0, d, cur, out);
    return out;
}

}  // namespace ginlex
