#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ginlex {

enum class Cmp { less, equal, greater };
enum class BorelCmp { less, equal, greater, incomparable };

// Monomial in a fixed number of variables, dense exponent vector, cached degree.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);
    static Monomial one(int n);
    static Monomial variable(int n, int idx);  // idx is 1-based: x_idx

    int nvars() const { return static_cast<int>(exps_.size()); }
    int degree() const { return degree_; }
    int exp(int i) const { return exps_[static_cast<size_t>(i - 1)]; }  // 1-based
    const std::vector<int>& exponents() const { return exps_; }

    // largest i with a positive exponent; 0 for the unit monomial
    int max_var() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial divide(const Monomial& o) const;  // *this / o, requires o | *this
    Monomial lcm(const Monomial& o) const;
    bool coprime(const Monomial& o) const;

    // partial sums (a1, a1+a2, ..., a1+...+an)
    std::vector<long long> delta() const;

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

    std::string str() const;  // e.g. "x1^2*x3"

  private:
    std::vector<int> exps_;
    int degree_ = 0;
};

// Canonical comparison used for normalized storage: degree first, then lex.
// Independent of any user-selected term order.
Cmp canonical_compare(const Monomial& a, const Monomial& b);

struct CanonLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return canonical_compare(a, b) == Cmp::less;
    }
};
struct CanonGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return canonical_compare(a, b) == Cmp::greater;
    }
};

// Borel partial order on equal-degree monomials via componentwise comparison
// of the partial-sum vectors. Throws on a degree mismatch.
BorelCmp borel_compare(const Monomial& a, const Monomial& b);

// All monomials of degree d in n variables, in descending lex order.
std::vector<Monomial> monomials_of_degree(int n, int d);

}  // namespace ginlex
