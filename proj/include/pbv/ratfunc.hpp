#pragma once

#include <map>

#include "pbv/poly.hpp"

namespace pbv {

// Exact multivariate rational function, the universal value type of the
// symbolic layer. Canonical form: zero is 0/1; the denominator is a primitive
// integer polynomial with positive leading coefficient; common monomial
// factors and exact polynomial quotients are cancelled. Full multivariate gcd
// is deliberately not required: equality goes through cross-multiplication.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(Rat(1)) {}
    RationalFunction(const Rat& c) : num_(c), den_(Rat(1)) {}  // NOLINT (implicit by design)
    RationalFunction(long c) : num_(Rat(c)), den_(Rat(1)) {}   // NOLINT
    RationalFunction(Poly num, Poly den);

    static RationalFunction variable(const VarRef& v) { return {Poly::variable(v), Poly(Rat(1))}; }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat constant_value() const { return num_.constant_value() / den_.constant_value(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
    RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
    RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
    RationalFunction& operator/=(const RationalFunction& b) { return *this = *this / b; }

    RationalFunction pow(int e) const;
    RationalFunction partial(const VarRef& x) const;
    RationalFunction map_variables(const std::function<VarRef(const VarRef&)>& f) const;

    std::vector<VarRef> variables() const;

    // Mathematical equality (cross-multiplication of canonical forms).
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return (a.num_ * b.den_) == (b.num_ * a.den_);
    }

    template <class T>
    T eval(const std::map<VarRef, T>& assign) const {
        T d = den_.eval<T>(assign);
        if (d == T(0)) throw PoleError();
        return num_.eval<T>(assign) / d;
    }

  private:
    void normalize();
    Poly num_, den_;
};

inline RationalFunction rf_var(const std::string& fam, int32_t i) {
    return RationalFunction::variable(var_abs(fam, i));
}

// finite central difference oracle lives in the tests; here only the exact ops

}  // namespace pbv
