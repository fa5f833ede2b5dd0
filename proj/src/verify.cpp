#include "pbv/verify.hpp"

#include <algorithm>

#include "pbv/parse.hpp"
#include "pbv/sweep.hpp"

namespace pbv::verify {

// ---------------------------------------------------------------------------
// swapping suites

namespace {

SwapElement random_cross_fraction(Rng& rng, int labels) {
    while (true) {
        int x = static_cast<int>(rng.uniform(0, labels - 1));
        int y = static_cast<int>(rng.uniform(0, labels - 1));
        int z = static_cast<int>(rng.uniform(0, labels - 1));
        int t = static_cast<int>(rng.uniform(0, labels - 1));
        if (x == t || y == z) continue;
        if (x == z || y == t) continue;  // keep the numerator nonzero as well
        return cross_fraction(x, y, z, t);
    }
}

SwapElement random_generator(Rng& rng, int labels) {
    while (true) {
        int a = static_cast<int>(rng.uniform(0, labels - 1));
        int b = static_cast<int>(rng.uniform(0, labels - 1));
        if (a != b) return swap_gen(a, b);
    }
}

}  // namespace

SuiteResult swapping_jacobi_suite(uint64_t seed, int count, int max_labels, bool flip_j, bool parallel) {
    SuiteResult res;
    res.name = "swapping-jacobi";
    SwapOptions opt{flip_j};

    struct Case {
        int labels;
        SwapElement f, g, h;
        std::string desc;
    };
    std::vector<Case> cases;
    Rng rng(seed);
    for (int i = 0; i < count; ++i) {
        int L = static_cast<int>(rng.uniform(4, max_labels));
        cases.push_back({L, random_generator(rng, L), random_generator(rng, L), random_generator(rng, L),
                         "generators on " + std::to_string(L) + " labels"});
    }
    for (int i = 0; i < count; ++i) {
        int L = static_cast<int>(rng.uniform(5, max_labels));
        cases.push_back({L, random_cross_fraction(rng, L), random_cross_fraction(rng, L),
                         random_cross_fraction(rng, L),
                         "cross fractions on " + std::to_string(L) + " labels"});
    }
    auto outcomes = sweep::map_indexed<std::string>(
        cases.size(),
        [&](size_t i) -> std::string {
            const auto& c = cases[i];
            LabelSet ls = LabelSet::window(0, c.labels - 1);
            SwapElement J = swap_jacobiator(c.f, c.g, c.h, ls, opt);
            return J.is_zero() ? std::string() : ("jacobiator != 0 for " + c.desc);
        },
        parallel);
    for (const auto& o : outcomes) res.record(o.empty(), o);
    return res;
}

SuiteResult linking_number_suite(uint64_t seed, int count) {
    SuiteResult res;
    res.name = "linking-number";
    Rng rng(seed);
    // the spec'd fixed configurations
    LabelSet four = LabelSet::window(0, 3);
    res.record(linking_number(0, 2, 1, 3, four) == 1, "interleaved quadruple should give 1");
    res.record(linking_number(0, 1, 1, 2, LabelSet::window(0, 2)) == make_rat(1, 2),
               "shared endpoint s = x should give 1/2");
    res.record(linking_number(0, 1, 2, 3, four) == 0, "disjoint chords should give 0");
    for (int i = 0; i < count; ++i) {
        int L = static_cast<int>(rng.uniform(4, 8));
        LabelSet ls = LabelSet::window(0, L - 1);
        int r = static_cast<int>(rng.uniform(0, L - 1)), x = static_cast<int>(rng.uniform(0, L - 1));
        int s = static_cast<int>(rng.uniform(0, L - 1)), y = static_cast<int>(rng.uniform(0, L - 1));
        Rat j = linking_number(r, x, s, y, ls);
        bool cut_free = true;
        for (size_t cut = 0; cut < ls.size(); ++cut)
            if (linking_number_at_cut(r, x, s, y, ls, cut) != j) cut_free = false;
        res.record(cut_free, "cut dependence detected");
        res.record(linking_number(s, y, r, x, ls) == -j, "J(sy,rx) != -J(rx,sy)");
        res.record(linking_number(x, r, s, y, ls) == -j, "J(xr,sy) != -J(rx,sy)");
        Rat a = abs(j);
        res.record(a == 0 || a == 1 || a == make_rat(1, 2), "J outside {0, ±1/2, ±1}");
    }
    return res;
}

SuiteResult swap_bracket_property_suite(uint64_t seed, int count) {
    SuiteResult res;
    res.name = "swap-bracket-properties";
    Rng rng(seed);
    for (int i = 0; i < count; ++i) {
        int L = static_cast<int>(rng.uniform(5, 8));
        LabelSet ls = LabelSet::window(0, L - 1);
        SwapElement f = random_cross_fraction(rng, L);
        SwapElement g = random_generator(rng, L);
        SwapElement h = random_cross_fraction(rng, L);
        SwapElement c = swap_const(rng.rat(-3, 3));

        res.record(swap_bracket(f, f, ls).is_zero(), "{f,f} != 0");
        SwapElement ab = swap_bracket(f, g, ls) + swap_bracket(g, f, ls);
        res.record(ab.is_zero(), "antisymmetry failed");
        // bilinearity in the first slot
        SwapElement lin =
            swap_bracket(f * c + h, g, ls) - (swap_bracket(f, g, ls) * c + swap_bracket(h, g, ls));
        res.record(lin.is_zero(), "bilinearity failed");
        // Leibniz {fh, g} = f{h,g} + {f,g}h
        SwapElement lei = swap_bracket(f * h, g, ls) - (f * swap_bracket(h, g, ls) + swap_bracket(f, g, ls) * h);
        res.record(lei.is_zero(), "Leibniz failed");
        // cross fractions multiply in the middle slots: [x,y,z,t] = [x,y,z,w][x,y,w,t]
        int x = 0, y = 1, z = 2, w = 3, t = 4;
        SwapElement mid = cross_fraction(x, y, z, t) - cross_fraction(x, y, z, w) * cross_fraction(x, y, w, t);
        res.record(mid.is_zero(), "middle-slot multiplicativity failed");
    }
    return res;
}

// ---------------------------------------------------------------------------
// n=2 derivation

DerivationResult derive_c2n_from_swapping(int N, bool flip_j) {
    DerivationResult out;
    SwapOptions opt{flip_j};
    const int k = 1;
    auto W = [&](int j) { return window_element_B(j); };

    {
        LabelSet ls = LabelSet::window(k - 1, k + 3);
        SwapElement lhs = log_bracket(W(k), W(k + 1), ls, opt);
        SwapElement F1 = cross_fraction(k - 1, k, k + 2, k + 1);
        SwapElement F2 = cross_fraction(k + 2, k + 3, k + 1, k);
        SwapElement rhs = swap_const(Rat(-1)) + F1 + F2;
        out.eq12 = (lhs - rhs).is_zero();
    }
    {
        LabelSet ls = LabelSet::window(k - 1, k + 4);
        SwapElement lhs = log_bracket(W(k), W(k + 2), ls, opt);
        SwapElement G = cross_fraction(k + 2, k + 1, k + 3, k);
        out.eq13 = (lhs + G).is_zero();
    }
    {
        LabelSet ls = LabelSet::window(k - 1, k + 5);
        out.dist3_vanishes = swap_bracket(W(k), W(k + 3), ls, opt).is_zero();
    }
    {
        LabelSet ls = LabelSet::window(k - 1, k + 6);
        out.dist4_vanishes = swap_bracket(W(k), W(k + 4), ls, opt).is_zero();
    }

    // Push the closed forms through the θ-images of the window fractions:
    // θ(F1) = 1 - 1/B_k, θ(F2) = 1 - 1/B_{k+1}, θ(G) = 1/B_{k+1}; then
    // {B_k,B_j} = B_k·B_j·θ([W_k,W_j]) must equal the builtin table entries.
    RationalFunction Bk = RationalFunction::variable(var_rel("B", 0));
    RationalFunction Bk1 = RationalFunction::variable(var_rel("B", 1));
    RationalFunction Bk2 = RationalFunction::variable(var_rel("B", 2));
    RationalFunction one(1);
    RationalFunction d1 = Bk * Bk1 * (-one + (one - one / Bk) + (one - one / Bk1));
    RationalFunction d2 = Bk * Bk2 * (-(one / Bk1));

    PoissonStructure C2N = builtin_structure(BuiltinTag::C2N, N);
    bool match = true;
    for (const auto& e : C2N.offset_entries()) {
        if (e.offset == 1) match = match && (e.expr == d1);
        if (e.offset == 2) match = match && (e.expr == d2);
    }
    // antisymmetric completion: π(B_2,B_1) = -π(B_1,B_2), π(B_3,B_1) = -π(B_1,B_3)
    match = match && (C2N.pi(var_abs("B", 2), var_abs("B", 1)) == -instantiate_at(d1, 1, N));
    match = match && (C2N.pi(var_abs("B", 3), var_abs("B", 1)) == -instantiate_at(d2, 1, N));
    // distances >= 3 are absent from the table
    if (N >= 7) match = match && C2N.pi(var_abs("B", 1), var_abs("B", 4)).is_zero();
    out.entries_match_builtin = match;
    return out;
}

// ---------------------------------------------------------------------------
// random polygons

namespace {

Mat<Rat> random_unimodular(int n, Rng& rng) {
    Mat<Rat> M = mat_identity<Rat>(n);
    for (int step = 0; step < 6; ++step) {
        int i = static_cast<int>(rng.uniform(0, n - 1));
        int j = static_cast<int>(rng.uniform(0, n - 1));
        if (i == j) continue;
        Mat<Rat> S = mat_identity<Rat>(n);
        S[i][j] = Rat(rng.uniform(-3, 3));
        M = mat_mul(M, S, n);
    }
    return M;
}

bool window_in_general_position(const TwistedPolygon<Rat>& P, int lo, int hi) {
    if (P.n == 2) {
        for (int a = lo; a <= hi; ++a)
            for (int b = a + 1; b <= hi; ++b)
                if (det2(P.lift(a), P.lift(b)) == Rat(0)) return false;
        return true;
    }
    for (int a = lo; a <= hi; ++a)
        for (int b = lo; b <= hi; ++b) {
            if (a == b || b + 1 > hi) continue;
            if (std::abs(a - b) > 5) continue;  // only nearby determinants enter the checks
            if (a == b + 1) continue;           // structurally zero
            if (theta_pair(P, a, b) == Rat(0)) return false;
        }
    return true;
}

}  // namespace

TwistedPolygon<Rat> random_polygon(int n, int N, Rng& rng, int max_tries) {
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        std::vector<Vec<Rat>> base(static_cast<size_t>(N));
        for (int k = 0; k < N; ++k) {
            for (int c = 0; c < n; ++c) base[k][c] = Rat(rng.uniform(-9, 9));
            if (n == 2) base[k][2] = Rat(0);
        }
        Mat<Rat> M = random_unimodular(n, rng);
        TwistedPolygon<Rat> P;
        try {
            P = make_polygon(n, N, std::move(base), M);
        } catch (const DegeneratePolygon&) {
            continue;
        }
        if (window_in_general_position(P, -2 * n, N + 2 * n)) return P;
    }
    throw DegeneratePolygon("could not sample a polygon in general position");
}

TwistedPolygon<double> polygon_to_double(const TwistedPolygon<Rat>& P) {
    TwistedPolygon<double> Q;
    Q.n = P.n;
    Q.N = P.N;
    Q.base.resize(P.base.size());
    for (size_t i = 0; i < P.base.size(); ++i)
        for (int c = 0; c < 3; ++c) Q.base[i][c] = to_double(P.base[i][c]);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Q.monodromy[i][j] = to_double(P.monodromy[i][j]);
            Q.monodromy_inv[i][j] = to_double(P.monodromy_inv[i][j]);
        }
    return Q;
}

// ---------------------------------------------------------------------------
// numeric bracket checks

namespace {

// window element whose θ-image generates the coordinate, and the chain-rule
// derivative dcoord/dθ evaluated at the polygon
struct CoordWindow {
    SwapElement element;
    bool is_B;  // B: coord = θ(E); X/Y: coord = 1 - 1/θ(E)
};

CoordWindow coord_window(const VarRef& g, int base_label) {
    const std::string& fam = families::name(g.family);
    if (fam == "B") return {window_element_B(base_label), true};
    if (fam == "X") return {corner_element_X(base_label), false};
    if (fam == "Y") return {corner_element_Y(base_label), false};
    throw Error("no window element for family " + fam);
}

}  // namespace

Rat numeric_bracket_residual(const TwistedPolygon<Rat>& P, const PoissonStructure& S, const VarRef& gi,
                             const VarRef& gj) {
    const int N = P.N;
    // signed offset representative of the pair, realized on the integer line
    int d = static_cast<int>(((gj.i - gi.i) % N + N) % N);
    if (d > N / 2) d -= N;
    int a = gi.i, b = gi.i + d;

    CoordWindow wa = coord_window(gi, 0);
    CoordWindow wb = coord_window(gj, d);
    int span = std::max(std::abs(d) + 3, 3);
    LabelSet ls = LabelSet::window(-3, span);
    SwapElement bracket = swap_bracket(wa.element, wb.element, ls);

    std::map<int, long> window;
    for (int l = -3; l <= span; ++l) window[l] = a + l;

    Rat lhs;
    Rat theta_b = theta_eval(bracket, P, &window);
    if (wa.is_B) {
        lhs = theta_b;  // B = θ(W), so {B_i,B_j} = θ({W_i,W_j})
    } else {
        Rat u = theta_eval(wa.element, P, &window);
        Rat v = theta_eval(wb.element, P, &window);
        if (u == 0 || v == 0) throw PoleError();
        lhs = theta_b / (u * u * v * v);  // coord = 1 - 1/θ: chain rule factor θ^{-2} per slot
    }

    // closed-form side at the polygon's coordinates
    std::map<VarRef, Rat> assign;
    if (P.n == 2) {
        auto B = B_from_polygon(P);
        for (int k = 1; k <= N; ++k) assign[var_abs("B", k)] = B[k - 1];
    } else {
        auto XY = XY_from_polygon(P);
        for (int k = 1; k <= N; ++k) {
            assign[var_abs("X", k)] = XY.X[k - 1];
            assign[var_abs("Y", k)] = XY.Y[k - 1];
        }
    }
    // evaluate at the wrapped generator pair; lhs was computed at the line
    // representative (a, b), equal by periodicity of θ under the monodromy
    VarRef u = gi, v = gj;
    (void)b;
    RationalFunction entry = S.pi(u, v);
    Rat rhs = entry.is_zero() ? Rat(0) : entry.eval<Rat>(assign);
    return lhs - rhs;
}

SuiteResult polygon_table_check(const TwistedPolygon<Rat>& P, bool mutate_c3n_sign, bool parallel) {
    SuiteResult res;
    res.name = P.n == 2 ? "c2n-numeric" : "c3n-numeric";
    PoissonStructure S = P.n == 2 ? builtin_structure(BuiltinTag::C2N, P.N)
                                  : builtin_structure(BuiltinTag::C3N, P.N, mutate_c3n_sign);
    const auto& gens = S.generators();
    std::vector<std::pair<VarRef, VarRef>> pairs;
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j) pairs.emplace_back(gens[i], gens[j]);
    auto outcomes = sweep::map_indexed<std::string>(
        pairs.size(),
        [&](size_t i) -> std::string {
            Rat r = numeric_bracket_residual(P, S, pairs[i].first, pairs[i].second);
            if (r == 0) return {};
            return "residual != 0 for {" + to_string(pairs[i].first) + ", " + to_string(pairs[i].second) +
                   "}";
        },
        parallel);
    for (const auto& o : outcomes) res.record(o.empty(), o);
    return res;
}

SuiteResult bridging_identity_suite(uint64_t seed, int polygons) {
    SuiteResult res;
    res.name = "theta-bridging-identities";
    Rng rng(seed);
    for (int t = 0; t < polygons; ++t) {
        // n = 2
        TwistedPolygon<Rat> P2 = random_polygon(2, 7, rng);
        auto B = B_from_polygon(P2);
        for (int k = 1; k <= P2.N; ++k) {
            Rat Bk = B[k - 1];
            std::map<int, long> w;
            for (int l = -1; l <= 4; ++l) w[l] = k + l;

            std::map<int, long> identity;
            for (int l = k - 2; l <= k + 4; ++l) identity[l] = l;
            res.record(theta_eval(window_element_B(k), P2, &identity) == Bk, "theta(W_k) != B_k");

            SwapElement F1 = cross_fraction(k - 1, k, k + 2, k + 1);
            res.record(theta_eval(F1, P2, &identity) == Rat(1) - Rat(1) / Bk, "theta(F1) != 1 - 1/B_k");
            Rat Bk1 = B[wrap_index(k + 1, P2.N) - 1];
            SwapElement F2 = cross_fraction(k + 2, k + 3, k + 1, k);
            res.record(theta_eval(F2, P2, &identity) == Rat(1) - Rat(1) / Bk1, "theta(F2) != 1 - 1/B_{k+1}");
            SwapElement G = cross_fraction(k + 2, k + 1, k + 3, k);
            res.record(theta_eval(G, P2, &identity) == Rat(1) / Bk1, "theta(G) != 1/B_{k+1}");
        }
        // n = 3: geometric corner invariants against the θ path
        TwistedPolygon<Rat> P3 = random_polygon(3, 7, rng);
        auto XY = XY_from_polygon(P3);
        for (int k = 1; k <= P3.N; ++k) {
            res.record(corner_theta_X(P3, k) == XY.X[k - 1], "theta path X_k mismatch");
            res.record(corner_theta_Y(P3, k) == XY.Y[k - 1], "theta path Y_k mismatch");
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// hill correspondence

HillOperator<Rat> random_hill(int N, Rng& rng) {
    HillOperator<Rat> op;
    op.N = N;
    op.H.resize(static_cast<size_t>(N));
    Rat n2(static_cast<long>(N) * N);
    for (int k = 0; k < N; ++k) {
        Rat b = rng.rat(1, 3, 2);  // positive b keeps the reconstruction on the + branch
        if (b == 0) b = Rat(1);
        op.H[static_cast<size_t>(k)] = (b - Rat(2)) * n2;
    }
    return op;
}

SuiteResult hill_suite(uint64_t seed, int count, const std::vector<int>& Ns, bool parallel) {
    SuiteResult res;
    res.name = "hill-correspondence";
    struct Case {
        HillOperator<Rat> op;
    };
    std::vector<Case> cases;
    Rng rng(seed);
    for (int c = 0; c < count; ++c)
        for (int N : Ns) cases.push_back({random_hill(N, rng)});

    auto outcomes = sweep::map_indexed<std::string>(
        cases.size(),
        [&](size_t i) -> std::string {
            const auto& op = cases[i].op;
            TwistedPolygon<Rat> P;
            try {
                P = polygon_from_hill(op);
            } catch (const DegeneratePolygon&) {
                return {};  // sample discarded; coincident points are legitimate inputs to skip
            }
            // Wronskian constancy across a window
            auto X = hill_solve(op, Rat(1), Rat(0), -3, op.N + 3);
            auto Y = hill_solve(op, Rat(0), Rat(1), -3, op.N + 3);
            for (size_t k = 0; k + 1 < X.size(); ++k)
                if (X[k + 1] * Y[k] - X[k] * Y[k + 1] != Rat(-1)) return "Wronskian drifted";
            if (mat_det(P.monodromy, 2) != Rat(1)) return "monodromy determinant != 1";
            auto B = B_from_polygon(P);
            for (int k = 1; k <= op.N; ++k)
                if (B[k - 1] != op.b(k) * op.b(k + 1)) return "B_k != b_k*b_{k+1}";
            if (op.N % 2 == 1) {
                HillOperator<Rat> back = hill_from_B(B, +1);
                for (int k = 0; k < op.N; ++k)
                    if (back.H[static_cast<size_t>(k)] != op.H[static_cast<size_t>(k)])
                        return "round trip failed";
            }
            return {};
        },
        parallel);
    for (const auto& o : outcomes) res.record(o.empty(), o);
    return res;
}

}  // namespace pbv::verify
