#include "pbv/swapping.hpp"

#include <algorithm>
#include <map>

namespace pbv {

LabelSet::LabelSet(std::vector<int> labels) : labels_(std::move(labels)) {
    auto sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error("label set must consist of distinct labels");
}

LabelSet LabelSet::window(int lo, int hi) {
    std::vector<int> l;
    for (int i = lo; i <= hi; ++i) l.push_back(i);
    return LabelSet(std::move(l));
}

bool LabelSet::contains(int label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

size_t LabelSet::rank(int label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw Error("label " + std::to_string(label) + " not in label set");
    return static_cast<size_t>(it - labels_.begin());
}

namespace {
inline int sigma(long a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }
}  // namespace

Rat linking_number_at_cut(int r, int x, int s, int y, const LabelSet& order, size_t cut) {
    const size_t L = order.size();
    auto lp = [&](int label) -> long {
        return static_cast<long>((order.rank(label) + L - cut % L) % L);
    };
    long pr = lp(r), px = lp(x), ps = lp(s), py = lp(y);
    int first = sigma(pr - px) * sigma(pr - py) * sigma(py - px);
    int second = sigma(pr - px) * sigma(pr - ps) * sigma(ps - px);
    Rat j(first - second, 2);
    j.canonicalize();
    return j;
}

Rat linking_number(int r, int x, int s, int y, const LabelSet& order) {
    return linking_number_at_cut(r, x, s, y, order, 0);
}

SwapElement swap_gen(int a, int b) {
    if (a == b) return {RationalFunction(Rat(0)), false};
    return {RationalFunction::variable(var_pair(a, b)), false};
}

SwapElement swap_const(const Rat& c) { return {RationalFunction(c), false}; }

SwapElement cross_fraction(int x, int y, int z, int t) {
    if (x == t || y == z) throw InvalidCrossFraction();
    SwapElement num = swap_gen(x, z) * swap_gen(y, t);
    SwapElement den = swap_gen(x, t) * swap_gen(y, z);
    SwapElement out = num / den;
    out.multifraction = true;
    return out;
}

SwapElement operator+(const SwapElement& a, const SwapElement& b) {
    return {a.value + b.value, a.multifraction && b.multifraction};
}
SwapElement operator-(const SwapElement& a, const SwapElement& b) {
    return {a.value - b.value, a.multifraction && b.multifraction};
}
SwapElement operator*(const SwapElement& a, const SwapElement& b) {
    return {a.value * b.value, a.multifraction && b.multifraction};
}
SwapElement operator/(const SwapElement& a, const SwapElement& b) {
    return {a.value / b.value, a.multifraction && b.multifraction};
}

SwapElement swap_bracket(const SwapElement& f, const SwapElement& g, const LabelSet& order,
                         const SwapOptions& opt) {
    RationalFunction total;
    auto fvars = f.value.variables();
    auto gvars = g.value.variables();
    // ∂f/∂u computed once per occurring generator
    std::map<VarRef, RationalFunction> df;
    for (const auto& u : fvars) df.emplace(u, f.value.partial(u));
    for (const auto& v : gvars) {
        RationalFunction dg = g.value.partial(v);
        if (dg.is_zero()) continue;
        int s = v.i, y = v.j;
        for (const auto& u : fvars) {
            const RationalFunction& dfu = df.at(u);
            if (dfu.is_zero()) continue;
            int r = u.i, x = u.j;
            Rat j = linking_number(r, x, s, y, order);
            if (opt.flip_linking_sign) j = -j;
            if (j == 0) continue;
            SwapElement prod = swap_gen(r, y) * swap_gen(s, x);
            if (prod.is_zero()) continue;
            total += RationalFunction(j) * prod.value * dfu * dg;
        }
    }
    return {total, false};
}

SwapElement log_bracket(const SwapElement& f, const SwapElement& g, const LabelSet& order,
                        const SwapOptions& opt) {
    if (f.is_zero() || g.is_zero()) throw DivisionByZero("log bracket of zero element");
    return {swap_bracket(f, g, order, opt).value / (f.value * g.value), false};
}

SwapElement swap_jacobiator(const SwapElement& f, const SwapElement& g, const SwapElement& h,
                            const LabelSet& order, const SwapOptions& opt) {
    SwapElement t1 = swap_bracket(swap_bracket(f, g, order, opt), h, order, opt);
    SwapElement t2 = swap_bracket(swap_bracket(g, h, order, opt), f, order, opt);
    SwapElement t3 = swap_bracket(swap_bracket(h, f, order, opt), g, order, opt);
    return t1 + t2 + t3;
}

}  // namespace pbv
