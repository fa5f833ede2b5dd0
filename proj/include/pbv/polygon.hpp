#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <vector>

#include "pbv/rat.hpp"
#include "pbv/swapping.hpp"

namespace pbv {

// Small dense vectors/matrices for n = 2, 3; scalar T is Rat or double.
template <class T>
using Vec = std::array<T, 3>;
template <class T>
using Mat = std::array<std::array<T, 3>, 3>;

template <class T>
T det2(const Vec<T>& a, const Vec<T>& b) {
    return a[0] * b[1] - a[1] * b[0];
}

template <class T>
T det3(const Vec<T>& a, const Vec<T>& b, const Vec<T>& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

template <class T>
Mat<T> mat_identity(int n) {
    Mat<T> m{};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = T(i == j ? 1 : 0);
    return m;
}

template <class T>
Vec<T> mat_apply(const Mat<T>& m, const Vec<T>& v, int n) {
    Vec<T> out{};
    for (int i = 0; i < n; ++i) {
        T s = T(0);
        for (int j = 0; j < n; ++j) s = s + m[i][j] * v[j];
        out[i] = s;
    }
    return out;
}

template <class T>
Mat<T> mat_mul(const Mat<T>& a, const Mat<T>& b, int n) {
    Mat<T> out{};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            T s = T(0);
            for (int k = 0; k < n; ++k) s = s + a[i][k] * b[k][j];
            out[i][j] = s;
        }
    return out;
}

template <class T>
T mat_det(const Mat<T>& m, int n) {
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Vec<T> a{m[0][0], m[1][0], m[2][0]}, b{m[0][1], m[1][1], m[2][1]}, c{m[0][2], m[1][2], m[2][2]};
    return det3(a, b, c);
}

template <class T>
Mat<T> mat_inverse(const Mat<T>& m, int n) {
    T d = mat_det(m, n);
    if (d == T(0)) throw DegeneratePolygon("singular monodromy");
    Mat<T> out{};
    if (n == 2) {
        out[0][0] = m[1][1] / d;
        out[0][1] = -m[0][1] / d;
        out[1][0] = -m[1][0] / d;
        out[1][1] = m[0][0] / d;
        return out;
    }
    // adjugate, n = 3
    auto cof = [&](int i, int j) {
        int i0 = (i + 1) % 3, i1 = (i + 2) % 3, j0 = (j + 1) % 3, j1 = (j + 2) % 3;
        return m[i0][j0] * m[i1][j1] - m[i0][j1] * m[i1][j0];
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[j][i] = cof(i, j) / d;
    return out;
}

// Projective cross ratio on homogeneous 2-vectors,
// [a,b,c,d] = det(a,c)·det(b,d) / (det(a,d)·det(b,c)).
// Agrees with (a-c)/(a-d) · (b-d)/(b-c) on affine lifts (x, 1).
template <class T>
T cross_ratio_proj(const Vec<T>& a, const Vec<T>& b, const Vec<T>& c, const Vec<T>& d) {
    T dad = det2(a, d), dbc = det2(b, c);
    if (dad == T(0) || dbc == T(0)) throw DegenerateCrossRatio();
    return det2(a, c) * det2(b, d) / (dad * dbc);
}

// N-twisted polygon in RP^{n-1}: lifts at k = 1..N plus a unit-determinant
// monodromy extending them to all of Z by f(k+N) = M·f(k).
template <class T>
struct TwistedPolygon {
    int n = 2;
    int N = 0;
    std::vector<Vec<T>> base;  // lifts at k = 1..N
    Mat<T> monodromy{};
    Mat<T> monodromy_inv{};

    Vec<T> lift(long k) const {
        long shift = 0;
        long idx = k;
        while (idx > N) {
            idx -= N;
            ++shift;
        }
        while (idx < 1) {
            idx += N;
            --shift;
        }
        Vec<T> v = base[static_cast<size_t>(idx - 1)];
        for (; shift > 0; --shift) v = mat_apply(monodromy, v, n);
        for (; shift < 0; ++shift) v = mat_apply(monodromy_inv, v, n);
        return v;
    }
};

template <class T>
TwistedPolygon<T> make_polygon(int n, int N, std::vector<Vec<T>> base, Mat<T> monodromy) {
    TwistedPolygon<T> p;
    p.n = n;
    p.N = N;
    p.base = std::move(base);
    p.monodromy = monodromy;
    p.monodromy_inv = mat_inverse(monodromy, n);
    return p;
}

// Pair determinant backing θ: ab ↦ Ω(f̃(a) ∧ f̃_{n-1}(b)), i.e. det(f(a), f(b))
// for n=2 and det(f(a), f(b), f(b+1)) for n=3.
template <class T>
T theta_pair(const TwistedPolygon<T>& P, long a, long b) {
    if (P.n == 2) return det2(P.lift(a), P.lift(b));
    return det3(P.lift(a), P.lift(b), P.lift(b + 1));
}

// Evaluate a swapping-algebra element on a polygon. The window maps labels to
// polygon indices; by default a label is its own index. Raises PoleError when
// the evaluated denominator vanishes.
template <class T>
T theta_eval(const SwapElement& g, const TwistedPolygon<T>& P,
             const std::map<int, long>* window = nullptr) {
    std::map<VarRef, T> assign;
    for (const auto& v : g.value.variables()) {
        long a = v.i, b = v.j;
        if (window) {
            a = window->at(v.i);
            b = window->at(v.j);
        }
        assign[v] = theta_pair(P, a, b);
    }
    return g.value.template eval<T>(assign);
}

}  // namespace pbv
