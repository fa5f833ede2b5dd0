#include "pbv/ratfunc.hpp"

namespace pbv {

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(Rat(1));
        return;
    }
    // cancel the common monomial factor
    Monomial g = mono_gcd(num_.monomial_content(), den_.monomial_content());
    if (!g.is_one()) {
        num_ = num_.divided_by_monomial(g);
        den_ = den_.divided_by_monomial(g);
    }
    // exact quotient cancellation, both orientations
    if (!den_.is_constant()) {
        Poly q;
        if (num_.try_divide(den_, q)) {
            num_ = std::move(q);
            den_ = Poly(Rat(1));
        } else if (!num_.is_constant() && den_.try_divide(num_, q)) {
            den_ = std::move(q);
            num_ = Poly(Rat(1));
        }
    }
    // denominator becomes primitive with positive leading coefficient;
    // all rational content moves to the numerator
    Rat c = den_.content();
    if (sign(den_.leading().coeff) < 0) c = -c;
    if (c != 1) {
        den_ = den_.scaled(Rat(1) / c);
        num_ = num_.scaled(Rat(1) / c);
    }
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a) {
    RationalFunction out = a;
    out.num_ = -out.num_;
    return out;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DivisionByZero();
    return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalFunction RationalFunction::pow(int e) const {
    if (e == 0) return RationalFunction(Rat(1));
    if (e < 0) {
        if (is_zero()) throw DivisionByZero("negative power of zero");
        return {den_.pow(static_cast<uint32_t>(-e)), num_.pow(static_cast<uint32_t>(-e))};
    }
    return {num_.pow(static_cast<uint32_t>(e)), den_.pow(static_cast<uint32_t>(e))};
}

RationalFunction RationalFunction::partial(const VarRef& x) const {
    // quotient rule; the monomial cancellation in normalize() keeps den^2 small
    return {num_.derivative(x) * den_ - num_ * den_.derivative(x), den_ * den_};
}

RationalFunction RationalFunction::map_variables(const std::function<VarRef(const VarRef&)>& f) const {
    return {num_.map_variables(f), den_.map_variables(f)};
}

std::vector<VarRef> RationalFunction::variables() const {
    auto v = num_.variables();
    auto w = den_.variables();
    v.insert(v.end(), w.begin(), w.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace pbv
