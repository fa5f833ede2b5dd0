#pragma once

#include <vector>

#include "pbv/ratfunc.hpp"

namespace pbv {

// Finite set of points on a circle, listed in cyclic order. Labels are
// integers; a window of consecutive integers on the circle models a stretch
// of a twisted polygon's vertex sequence.
class LabelSet {
  public:
    explicit LabelSet(std::vector<int> labels_in_cyclic_order);
    static LabelSet window(int lo, int hi);  // labels lo..hi inclusive

    size_t size() const { return labels_.size(); }
    const std::vector<int>& labels() const { return labels_; }
    bool contains(int label) const;
    size_t rank(int label) const;

  private:
    std::vector<int> labels_;
};

// Linking number of the chords rx and sy, in {0, ±1/2, ±1}. The cut point is
// the arc just before the circle's first listed label; independence from that
// choice is a tested invariant.
Rat linking_number(int r, int x, int s, int y, const LabelSet& order);
// Same, with an explicit cut: the linear order starts at position `cut`.
Rat linking_number_at_cut(int r, int x, int s, int y, const LabelSet& order, size_t cut);

// Element of the swapping fraction algebra Q(P): a rational function in the
// ordered-pair generators over a label set. `multifraction` marks members of
// the subring B(P) generated by cross fractions.
struct SwapElement {
    RationalFunction value;
    bool multifraction = false;

    bool is_zero() const { return value.is_zero(); }
};

SwapElement swap_gen(int a, int b);  // the ordered pair generator ab (0 when a == b)
SwapElement swap_const(const Rat& c);

// [x,y,z,t] = (xz/xt)*(yt/yz); requires x != t and y != z.
SwapElement cross_fraction(int x, int y, int z, int t);

SwapElement operator+(const SwapElement& a, const SwapElement& b);
SwapElement operator-(const SwapElement& a, const SwapElement& b);
SwapElement operator*(const SwapElement& a, const SwapElement& b);
SwapElement operator/(const SwapElement& a, const SwapElement& b);

struct SwapOptions {
    bool flip_linking_sign = false;  // negative-control mutation
};

// {f,g} extended from {rx,sy} = J(rx,sy)·ry·sx by the Leibniz and quotient
// rules: sum of J(u,v)·(swap product)·∂f/∂u·∂g/∂v over variable pairs.
SwapElement swap_bracket(const SwapElement& f, const SwapElement& g, const LabelSet& order,
                         const SwapOptions& opt = {});

// [f,g] = {f,g}/(fg)
SwapElement log_bracket(const SwapElement& f, const SwapElement& g, const LabelSet& order,
                        const SwapOptions& opt = {});

// {{f,g},h} + {{g,h},f} + {{h,f},g}; identically zero by the Jacobi identity.
SwapElement swap_jacobiator(const SwapElement& f, const SwapElement& g, const SwapElement& h,
                            const LabelSet& order, const SwapOptions& opt = {});

}  // namespace pbv
