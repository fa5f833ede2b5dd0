#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "pbv/rat.hpp"
#include "pbv/varref.hpp"

namespace pbv {

// Exponent vector, finitely supported: sorted (VarRef, exponent>0) pairs.
struct Monomial {
    std::vector<std::pair<VarRef, uint32_t>> factors;

    uint64_t degree() const {
        uint64_t d = 0;
        for (auto& [v, e] : factors) d += e;
        return d;
    }
    bool is_one() const { return factors.empty(); }
    uint32_t exponent_of(const VarRef& v) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lexicographic: total degree first, then lexicographic in the
// variable order of varref.hpp (higher exponent on the earlier variable wins).
int mono_cmp(const Monomial& a, const Monomial& b);

Monomial mono_mul(const Monomial& a, const Monomial& b);
// Componentwise min / exact quotient (b must divide a for mono_div).
Monomial mono_gcd(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& den, const Monomial& num);
Monomial mono_div(const Monomial& a, const Monomial& b);

// Sparse multivariate polynomial over Rat. Terms sorted descending in the
// monomial order, no zero coefficients.
class Poly {
  public:
    struct Term {
        Monomial mono;
        Rat coeff;
    };

    Poly() = default;
    explicit Poly(const Rat& c);
    static Poly variable(const VarRef& v);
    static Poly constant(long c) { return Poly(Rat(c)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    // Constant term value (0 for the zero polynomial); only meaningful with is_constant().
    Rat constant_value() const;
    size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const { return terms_.front(); }
    uint64_t total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& b) { *this = *this + b; return *this; }
    Poly& operator-=(const Poly& b) { *this = *this - b; return *this; }
    Poly& operator*=(const Poly& b) { *this = *this * b; return *this; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    Poly scaled(const Rat& c) const;

    Poly pow(uint32_t e) const;
    Poly derivative(const VarRef& x) const;

    // gcd of |coefficients| (positive, 0 for the zero polynomial).
    Rat content() const;
    // componentwise min of all monomials (the monomial dividing every term).
    Monomial monomial_content() const;
    Poly divided_by_monomial(const Monomial& m) const;

    // Exact polynomial division: returns false unless den divides *this with
    // zero remainder.
    bool try_divide(const Poly& den, Poly& quotient) const;

    std::vector<VarRef> variables() const;
    Poly map_variables(const std::function<VarRef(const VarRef&)>& f) const;

    template <class T>
    T eval(const std::map<VarRef, T>& assign) const;

    // Construction from raw term list (sorts, merges, drops zeros).
    static Poly from_terms(std::vector<Term> terms);

  private:
    std::vector<Term> terms_;
};

template <class T>
T Poly::eval(const std::map<VarRef, T>& assign) const {
    T total = T(0);
    for (const auto& t : terms_) {
        T prod = T(to_double(t.coeff));
        if constexpr (std::is_same_v<T, Rat>) prod = t.coeff;
        for (auto& [v, e] : t.mono.factors) {
            auto it = assign.find(v);
            if (it == assign.end()) throw Error("unassigned variable " + to_string(v));
            T base = it->second;
            for (uint32_t q = 0; q < e; ++q) prod = prod * base;
        }
        total = total + prod;
    }
    return total;
}

}  // namespace pbv
