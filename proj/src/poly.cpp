#include "pbv/poly.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace pbv {

// ---------------------------------------------------------------------------
// family registry

namespace families {
namespace {
struct Registry {
    std::vector<std::string> names;
    std::vector<bool> scalar;
    std::unordered_map<std::string, uint32_t> ids;
    std::shared_mutex mtx;
};
Registry& reg() {
    static Registry r;
    return r;
}
}  // namespace

uint32_t intern(const std::string& name, bool is_scalar) {
    auto& r = reg();
    {
        std::shared_lock lk(r.mtx);
        auto it = r.ids.find(name);
        if (it != r.ids.end()) return it->second;
    }
    std::unique_lock lk(r.mtx);
    auto it = r.ids.find(name);
    if (it != r.ids.end()) return it->second;
    uint32_t id = static_cast<uint32_t>(r.names.size());
    r.names.push_back(name);
    r.scalar.push_back(is_scalar);
    r.ids.emplace(name, id);
    return id;
}

const std::string& name(uint32_t id) {
    auto& r = reg();
    std::shared_lock lk(r.mtx);
    return r.names.at(id);
}

bool is_scalar(uint32_t id) {
    auto& r = reg();
    std::shared_lock lk(r.mtx);
    return r.scalar.at(id);
}
}  // namespace families

std::string to_string(const VarRef& v) {
    const std::string& fam = families::name(v.family);
    if (families::is_scalar(v.family) && !v.relative && v.i == 0 && v.j == kNoIndex) return fam;
    std::string s = fam + "[";
    if (v.relative) {
        s += "k";
        if (v.i > 0) s += "+" + std::to_string(v.i);
        if (v.i < 0) s += std::to_string(v.i);
    } else {
        s += std::to_string(v.i);
    }
    if (v.j != kNoIndex) s += "," + std::to_string(v.j);
    return s + "]";
}

// ---------------------------------------------------------------------------
// monomials

uint32_t Monomial::exponent_of(const VarRef& v) const {
    for (auto& [var, e] : factors)
        if (var == v) return e;
    return 0;
}

int mono_cmp(const Monomial& a, const Monomial& b) {
    uint64_t da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    // lexicographic sweep over the union of variables in variable order
    size_t ia = 0, ib = 0;
    while (ia < a.factors.size() && ib < b.factors.size()) {
        const auto& [va, ea] = a.factors[ia];
        const auto& [vb, eb] = b.factors[ib];
        if (va == vb) {
            if (ea != eb) return ea > eb ? 1 : -1;  // larger power of earlier var is larger
            ++ia, ++ib;
        } else if (va < vb) {
            return 1;  // a has a positive power on an earlier variable
        } else {
            return -1;
        }
    }
    if (ia < a.factors.size()) return 1;
    if (ib < b.factors.size()) return -1;
    return 0;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors.reserve(a.factors.size() + b.factors.size());
    size_t ia = 0, ib = 0;
    while (ia < a.factors.size() || ib < b.factors.size()) {
        if (ib == b.factors.size() || (ia < a.factors.size() && a.factors[ia].first < b.factors[ib].first)) {
            out.factors.push_back(a.factors[ia++]);
        } else if (ia == a.factors.size() || b.factors[ib].first < a.factors[ia].first) {
            out.factors.push_back(b.factors[ib++]);
        } else {
            out.factors.emplace_back(a.factors[ia].first, a.factors[ia].second + b.factors[ib].second);
            ++ia, ++ib;
        }
    }
    return out;
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
    Monomial out;
    size_t ia = 0, ib = 0;
    while (ia < a.factors.size() && ib < b.factors.size()) {
        if (a.factors[ia].first < b.factors[ib].first) {
            ++ia;
        } else if (b.factors[ib].first < a.factors[ia].first) {
            ++ib;
        } else {
            out.factors.emplace_back(a.factors[ia].first, std::min(a.factors[ia].second, b.factors[ib].second));
            ++ia, ++ib;
        }
    }
    return out;
}

bool mono_divides(const Monomial& den, const Monomial& num) {
    size_t in = 0;
    for (auto& [v, e] : den.factors) {
        while (in < num.factors.size() && num.factors[in].first < v) ++in;
        if (in == num.factors.size() || !(num.factors[in].first == v) || num.factors[in].second < e) return false;
    }
    return true;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial out;
    size_t ib = 0;
    for (auto& [v, e] : a.factors) {
        uint32_t sub = 0;
        while (ib < b.factors.size() && b.factors[ib].first < v) ++ib;
        if (ib < b.factors.size() && b.factors[ib].first == v) sub = b.factors[ib].second;
        if (e > sub) out.factors.emplace_back(v, e - sub);
    }
    return out;
}

// ---------------------------------------------------------------------------
// polynomials

Poly::Poly(const Rat& c) {
    if (c != 0) terms_.push_back({Monomial{}, c});
}

Poly Poly::variable(const VarRef& v) {
    Poly p;
    p.terms_.push_back({Monomial{{{v, 1}}}, Rat(1)});
    return p;
}

Rat Poly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    return terms_.back().mono.is_one() ? terms_.back().coeff : Rat(0);
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return mono_cmp(a.mono, b.mono) > 0; });
    Poly out;
    for (auto& t : terms) {
        if (t.coeff == 0) continue;
        if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
            out.terms_.back().coeff += t.coeff;
            if (out.terms_.back().coeff == 0) out.terms_.pop_back();
        } else {
            out.terms_.push_back(std::move(t));
        }
    }
    return out;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t ia = 0, ib = 0;
    while (ia < a.terms_.size() || ib < b.terms_.size()) {
        int c;
        if (ia == a.terms_.size()) c = -1;
        else if (ib == b.terms_.size()) c = 1;
        else c = mono_cmp(a.terms_[ia].mono, b.terms_[ib].mono);
        if (c > 0) {
            out.terms_.push_back(a.terms_[ia++]);
        } else if (c < 0) {
            out.terms_.push_back(b.terms_[ib++]);
        } else {
            Rat s = a.terms_[ia].coeff + b.terms_[ib].coeff;
            if (s != 0) out.terms_.push_back({a.terms_[ia].mono, s});
            ++ia, ++ib;
        }
    }
    return out;
}

Poly operator-(const Poly& a) {
    Poly out = a;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Poly::Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_)
            prod.push_back({mono_mul(ta.mono, tb.mono), ta.coeff * tb.coeff});
    return Poly::from_terms(std::move(prod));
}

Poly Poly::scaled(const Rat& c) const {
    if (c == 0) return Poly();
    Poly out = *this;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
}

Poly Poly::pow(uint32_t e) const {
    Poly result(Rat(1));
    Poly base = *this;
    while (e) {
        if (e & 1) result *= base;
        base = (e >>= 1) ? base * base : base;
    }
    return result;
}

Poly Poly::derivative(const VarRef& x) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        uint32_t e = t.mono.exponent_of(x);
        if (e == 0) continue;
        Monomial m;
        for (auto& [v, q] : t.mono.factors) {
            if (v == x) {
                if (q > 1) m.factors.emplace_back(v, q - 1);
            } else {
                m.factors.emplace_back(v, q);
            }
        }
        out.push_back({std::move(m), t.coeff * e});
    }
    return from_terms(std::move(out));
}

Rat Poly::content() const {
    Rat g(0);
    for (const auto& t : terms_) g = rat_gcd(g, t.coeff);
    return g;
}

Monomial Poly::monomial_content() const {
    if (terms_.empty()) return Monomial{};
    Monomial g = terms_[0].mono;
    for (size_t i = 1; i < terms_.size() && !g.is_one(); ++i) g = mono_gcd(g, terms_[i].mono);
    return g;
}

Poly Poly::divided_by_monomial(const Monomial& m) const {
    if (m.is_one()) return *this;
    Poly out = *this;
    for (auto& t : out.terms_) t.mono = mono_div(t.mono, m);
    // dividing every term by a common monomial preserves the term order
    return out;
}

bool Poly::try_divide(const Poly& den, Poly& quotient) const {
    if (den.is_zero()) return false;
    if (den.is_constant()) {
        quotient = scaled(Rat(1) / den.constant_value());
        return true;
    }
    Poly rem = *this;
    std::vector<Term> q;
    const Term& lead = den.terms_.front();
    while (!rem.is_zero()) {
        const Term& rl = rem.terms_.front();
        if (!mono_divides(lead.mono, rl.mono)) return false;
        Term t{mono_div(rl.mono, lead.mono), rl.coeff / lead.coeff};
        Poly tp;
        tp.terms_.push_back(t);
        rem = rem - tp * den;
        q.push_back(std::move(t));
    }
    quotient = from_terms(std::move(q));
    return true;
}

std::vector<VarRef> Poly::variables() const {
    std::vector<VarRef> out;
    for (const auto& t : terms_)
        for (auto& [v, e] : t.mono.factors) out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Poly Poly::map_variables(const std::function<VarRef(const VarRef&)>& f) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<std::pair<VarRef, uint32_t>> fac;
        fac.reserve(t.mono.factors.size());
        for (auto& [v, e] : t.mono.factors) fac.emplace_back(f(v), e);
        std::sort(fac.begin(), fac.end(), [](auto& a, auto& b) { return a.first < b.first; });
        // merge exponents in case the map identifies variables
        Monomial m;
        for (auto& fe : fac) {
            if (!m.factors.empty() && m.factors.back().first == fe.first)
                m.factors.back().second += fe.second;
            else
                m.factors.push_back(fe);
        }
        out.push_back({std::move(m), t.coeff});
    }
    return from_terms(std::move(out));
}

}  // namespace pbv
