#pragma once

#include "pbv/polygon.hpp"

namespace pbv {

// Discrete Hill operator: periodic H_1..H_N driving the recursion
// C_{k+1} = b_k·C_k − C_{k−1} with b_k = H_k/N² + 2.
template <class T>
struct HillOperator {
    int N = 0;
    std::vector<T> H;  // H_1..H_N

    T Hk(long k) const { return H[static_cast<size_t>(wrap_index(k, N) - 1)]; }
    T b(long k) const { return Hk(k) / T(static_cast<long>(N) * N) + T(2); }
};

// Unique solution with values C0 at lo-adjacent seed... two-sided: the window
// [lo, hi] includes indices 0 and 1 whose values are the given seeds.
template <class T>
std::vector<T> hill_solve(const HillOperator<T>& op, const T& C0, const T& C1, long lo, long hi) {
    if (lo > 0 || hi < 1) throw Error("hill_solve window must contain indices 0 and 1");
    std::vector<T> c(static_cast<size_t>(hi - lo + 1));
    auto at = [&](long k) -> T& { return c[static_cast<size_t>(k - lo)]; };
    at(0) = C0;
    at(1) = C1;
    for (long k = 2; k <= hi; ++k) at(k) = op.b(k - 1) * at(k - 1) - at(k - 2);
    for (long k = -1; k >= lo; --k) at(k) = op.b(k + 1) * at(k + 1) - at(k + 2);
    return c;
}

// The n=2 polygon carried by a Hill operator: lifts f̃(k) = (X_k, Y_k) from
// the solutions with (X_0, X_1) = (1, 0) and (Y_0, Y_1) = (0, 1); the
// monodromy is read off the shift-by-N action on the solution pair.
template <class T>
TwistedPolygon<T> polygon_from_hill(const HillOperator<T>& op) {
    const int N = op.N;
    if (N <= 2) throw PeriodTooSmall("polygon_from_hill needs N > 2");
    std::vector<T> X = hill_solve(op, T(1), T(0), 0, N + 1);
    std::vector<T> Y = hill_solve(op, T(0), T(1), 0, N + 1);
    std::vector<Vec<T>> base(static_cast<size_t>(N));
    for (int k = 1; k <= N; ++k) base[k - 1] = Vec<T>{X[k], Y[k], T(0)};
    Mat<T> M{};
    M[0][0] = X[N];
    M[0][1] = X[N + 1];
    M[1][0] = Y[N];
    M[1][1] = Y[N + 1];
    auto P = make_polygon(2, N, std::move(base), M);
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j)
            if (det2(P.base[i - 1], P.base[j - 1]) == T(0))
                throw DegeneratePolygon("coincident projective points f_" + std::to_string(i) + ", f_" +
                                        std::to_string(j));
    return P;
}

// B_k = [f_{k-1}, f_{k+2}, f_{k+1}, f_k] on lifted pairs; lift-scaling and
// projective changes drop out of the determinant ratios.
template <class T>
std::vector<T> B_from_polygon(const TwistedPolygon<T>& P) {
    if (P.n != 2) throw Error("B coordinates are defined for n = 2");
    std::vector<T> B(static_cast<size_t>(P.N));
    for (int k = 1; k <= P.N; ++k)
        B[k - 1] = cross_ratio_proj(P.lift(k - 1), P.lift(k + 2), P.lift(k + 1), P.lift(k));
    return B;
}

// Invert B_k = b_k·b_{k+1} around the cycle. Odd N only: the alternating
// product pins b_1² = Π_{odd} B / Π_{even} B, and the branch picks the sign.
template <class T>
HillOperator<T> hill_from_B(const std::vector<T>& B, int branch = +1) {
    const int N = static_cast<int>(B.size());
    if (N % 2 == 0) throw NonUniqueHill();
    T alt = T(1);
    for (int k = 1; k <= N; ++k) {
        if (k % 2 == 1)
            alt = alt * B[k - 1];
        else
            alt = alt / B[k - 1];
    }
    T b1;
    if constexpr (std::is_same_v<T, Rat>) {
        if (sign(alt) <= 0) throw NoRealBranch();
        auto s = rat_sqrt_exact(alt);
        if (!s) throw Error("alternating product is not a perfect rational square; use floating point");
        b1 = branch >= 0 ? *s : -*s;
    } else {
        if (!(alt > T(0))) throw NoRealBranch();
        b1 = branch >= 0 ? std::sqrt(alt) : -std::sqrt(alt);
    }
    HillOperator<T> op;
    op.N = N;
    op.H.resize(static_cast<size_t>(N));
    T bk = b1;
    for (int k = 1; k <= N; ++k) {
        op.H[k - 1] = (bk - T(2)) * T(static_cast<long>(N) * N);
        bk = B[k - 1] / bk;  // b_{k+1} = B_k / b_k
    }
    return op;
}

// Corner invariant coordinates of an n=3 polygon (X_k, Y_k): cross ratios of
// four collinear points, computed in a 2-point basis of the carrying line.
template <class T>
struct CornerCoords {
    std::vector<T> X, Y;  // index k-1 holds X_k, Y_k
};

namespace detail {

template <class T>
Vec<T> cross3(const Vec<T>& u, const Vec<T>& v) {
    return Vec<T>{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

// coordinates of P in the basis (e1, e2) of its carrying line
template <class T>
Vec<T> line_coords(const Vec<T>& P, const Vec<T>& e1, const Vec<T>& e2) {
    int best = -1;
    T bestval = T(0);
    for (int drop = 0; drop < 3; ++drop) {
        int r0 = (drop + 1) % 3, r1 = (drop + 2) % 3;
        T d = e1[r0] * e2[r1] - e1[r1] * e2[r0];
        if constexpr (std::is_same_v<T, Rat>) {
            if (d != T(0)) {
                best = drop;
                bestval = d;
                break;
            }
        } else {
            if (std::abs(d) > std::abs(bestval) || best < 0) {
                best = drop;
                bestval = d;
            }
        }
    }
    if (best < 0 || bestval == T(0)) throw DegeneratePolygon("line basis degenerate");
    int r0 = (best + 1) % 3, r1 = (best + 2) % 3;
    T alpha = (P[r0] * e2[r1] - P[r1] * e2[r0]) / bestval;
    T beta = (e1[r0] * P[r1] - e1[r1] * P[r0]) / bestval;
    return Vec<T>{alpha, beta, T(0)};
}

}  // namespace detail

template <class T>
CornerCoords<T> XY_from_polygon(const TwistedPolygon<T>& P) {
    if (P.n != 3) throw Error("corner coordinates are defined for n = 3");
    using detail::cross3;
    using detail::line_coords;
    CornerCoords<T> out;
    out.X.resize(static_cast<size_t>(P.N));
    out.Y.resize(static_cast<size_t>(P.N));
    for (int k = 1; k <= P.N; ++k) {
        Vec<T> a = P.lift(k - 2), b = P.lift(k - 1), c = P.lift(k), d = P.lift(k + 1), e = P.lift(k + 2);
        Vec<T> lab = cross3(a, b), lcd = cross3(c, d), lde = cross3(d, e);
        // X_k on the line ab: [a, ab∧de-line intersection, b, ab∧cd intersection]
        Vec<T> Bpt = cross3(lde, lab);
        Vec<T> Dpt = cross3(lcd, lab);
        bool zeroB = (Bpt[0] == T(0) && Bpt[1] == T(0) && Bpt[2] == T(0));
        bool zeroD = (Dpt[0] == T(0) && Dpt[1] == T(0) && Dpt[2] == T(0));
        if (zeroB || zeroD) throw DegeneratePolygon("coincident lines in corner-invariant window");
        out.X[k - 1] = cross_ratio_proj(line_coords(a, a, b), line_coords(Bpt, a, b), line_coords(b, a, b),
                                        line_coords(Dpt, a, b));
        // Y_k on the line de: [de∧ab, e, de∧bc, d]
        Vec<T> lbc = cross3(b, c);
        Vec<T> Apt = cross3(lab, lde);
        Vec<T> Cpt = cross3(lbc, lde);
        bool zeroA = (Apt[0] == T(0) && Apt[1] == T(0) && Apt[2] == T(0));
        bool zeroC = (Cpt[0] == T(0) && Cpt[1] == T(0) && Cpt[2] == T(0));
        if (zeroA || zeroC) throw DegeneratePolygon("coincident lines in corner-invariant window");
        out.Y[k - 1] = cross_ratio_proj(line_coords(Apt, d, e), line_coords(e, d, e), line_coords(Cpt, d, e),
                                        line_coords(d, d, e));
    }
    return out;
}

// θ-side corner invariants through the determinant identities
// θ(E^X_k) = 1/(1-X_k), θ(E^Y_k) = 1/(1-Y_k); an independent code path used
// as the dual oracle and by the bracket checks.
SwapElement corner_element_X(int k);  // cross fraction on labels {k-2..k+1}
SwapElement corner_element_Y(int k);  // cross fraction on labels {k-2..k+2}
SwapElement window_element_B(int k);  // n=2 window, θ ↦ B_k

template <class T>
T corner_theta_X(const TwistedPolygon<T>& P, int k) {
    T u = theta_eval(corner_element_X(k), P);
    if (u == T(0)) throw PoleError();
    return T(1) - T(1) / u;
}

template <class T>
T corner_theta_Y(const TwistedPolygon<T>& P, int k) {
    T u = theta_eval(corner_element_Y(k), P);
    if (u == T(0)) throw PoleError();
    return T(1) - T(1) / u;
}

}  // namespace pbv
