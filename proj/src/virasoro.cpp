#include "pbv/virasoro.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "pbv/sweep.hpp"

namespace pbv {

namespace {
constexpr double kPi = std::numbers::pi;
}

// ---------------------------------------------------------------------------
// profiles

double TrigPoly::eval(double x) const {
    double v = a0;
    for (size_t m = 0; m < cos_coeffs.size(); ++m) v += cos_coeffs[m] * std::cos((m + 1) * x);
    for (size_t m = 0; m < sin_coeffs.size(); ++m) v += sin_coeffs[m] * std::sin((m + 1) * x);
    return v;
}

std::string TrigPoly::str() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](double c, const std::string& f) {
        if (c == 0.0) return;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        double a = std::abs(c);
        if (f.empty()) os << a;
        else if (a == 1.0) os << f;
        else os << a << "*" << f;
        first = false;
    };
    emit(a0, "");
    for (size_t m = 0; m < cos_coeffs.size(); ++m)
        emit(cos_coeffs[m], m == 0 ? "cos" : "cos" + std::to_string(m + 1));
    for (size_t m = 0; m < sin_coeffs.size(); ++m)
        emit(sin_coeffs[m], m == 0 ? "sin" : "sin" + std::to_string(m + 1));
    if (first) os << "0";
    return os.str();
}

TrigPoly TrigPoly::parse(const std::string& text) {
    TrigPoly out;
    size_t pos = 0;
    auto skip = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    bool first = true;
    while (true) {
        skip();
        if (pos >= text.size()) break;
        int sgn = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sgn = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw SyntaxError("expected + or - between profile terms", pos);
        }
        skip();
        double coeff = 1.0;
        bool have_coeff = false;
        size_t c0 = pos;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.')) ++pos;
        if (pos > c0) {
            coeff = std::stod(text.substr(c0, pos - c0));
            have_coeff = true;
        }
        skip();
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            skip();
        }
        if (pos + 3 <= text.size() && (text.compare(pos, 3, "cos") == 0 || text.compare(pos, 3, "sin") == 0)) {
            bool is_cos = text[pos] == 'c';
            pos += 3;
            size_t h0 = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            size_t m = h0 == pos ? 1 : std::stoul(text.substr(h0, pos - h0));
            if (m == 0) throw SyntaxError("harmonic index must be positive", h0);
            auto& vec = is_cos ? out.cos_coeffs : out.sin_coeffs;
            if (vec.size() < m) vec.resize(m, 0.0);
            vec[m - 1] += sgn * coeff;
        } else if (have_coeff) {
            out.a0 += sgn * coeff;
        } else {
            throw SyntaxError("expected profile term (number, cos<m> or sin<m>)", pos);
        }
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// modes and targets

int wrap_mode(int m, int N) {
    int r = ((m % N) + N) % N;
    if (r > N / 2) r -= N;
    return r;
}

Complex dft_mode(const std::vector<double>& B, int p) {
    const int N = static_cast<int>(B.size());
    Complex s = 0.0;
    for (int k = 1; k <= N; ++k) s += B[k - 1] * std::polar(1.0, -2.0 * kPi * p * k / N);
    return s;
}

Complex virasoro_target(int p, int q, const std::function<Complex(int)>& I, const VirasoroParams& params) {
    if (p != -q) return static_cast<double>(p - q) * I(wrap_mode(p + q, params.N));
    double pd = p;
    return 2.0 * pd * I(0) + Complex(params.t1 * pd * pd * pd + params.t2 * pd);
}

std::string to_string(ModeTag tag) { return tag == ModeTag::C2N ? "C2N" : "S2"; }

LatticeData build_lattice(const TrigPoly& h, int N) {
    LatticeData d;
    d.N = N;
    d.B.resize(static_cast<size_t>(N));
    d.Bd.resize(static_cast<size_t>(N));
    std::vector<Rat> b(static_cast<size_t>(N));
    Rat n2(static_cast<long>(N) * N);
    for (int k = 1; k <= N; ++k) {
        Rat H(h.eval(2.0 * kPi * k / N));  // the double is taken exactly
        b[k - 1] = H / n2 + Rat(2);
    }
    for (int k = 1; k <= N; ++k) {
        d.B[k - 1] = b[k - 1] * b[k % N];
        d.Bd[k - 1] = to_double(d.B[k - 1]);
    }
    return d;
}

Complex mode_scale(ModeTag tag, int N) {
    double denom = tag == ModeTag::C2N ? 8.0 : 16.0;
    return Complex(N) / (denom * kPi * Complex(0.0, 1.0));
}

namespace {

// roots[j] = e^{-2πij/N}
std::vector<Complex> root_table(int N) {
    std::vector<Complex> r(static_cast<size_t>(N));
    for (int j = 0; j < N; ++j) r[j] = std::polar(1.0, -2.0 * kPi * j / N);
    return r;
}

inline int modN(long long v, int N) {
    long long r = v % N;
    if (r < 0) r += N;
    return static_cast<int>(r);
}

}  // namespace

Complex mode_bracket_raw(ModeTag tag, const std::vector<Rat>& B, int p, int q) {
    const int N = static_cast<int>(B.size());
    auto roots = root_table(N);
    auto at = [&](long k) -> const Rat& { return B[static_cast<size_t>(modN(k - 1, N))]; };
    // e^{-2πiq/N} - e^{-2πip/N} and the distance-2 analogue
    Complex diff1 = roots[static_cast<size_t>(modN(q, N))] - roots[static_cast<size_t>(modN(p, N))];
    Complex diff2 = roots[static_cast<size_t>(modN(2LL * q, N))] - roots[static_cast<size_t>(modN(2LL * p, N))];
    double geo = modN(p + q, N) == 0 ? static_cast<double>(N) : 0.0;

    Complex s1 = 0.0, s2 = 0.0;
    if (tag == ModeTag::C2N) {
        for (long k = 1; k <= N; ++k) {
            Complex ph = roots[static_cast<size_t>(modN(static_cast<long long>(p + q) * k, N))];
            Rat d1 = at(k) * at(k + 1) - at(k) - at(k + 1) - Rat(8);
            Rat d2 = at(k) * at(k + 2) / at(k + 1) - Rat(4);
            s1 += ph * to_double(d1);
            s2 += ph * to_double(d2);
        }
        return diff1 * (8.0 * geo + s1) - diff2 * (4.0 * geo + s2);
    }
    for (long k = 1; k <= N; ++k) {
        Complex ph = roots[static_cast<size_t>(modN(static_cast<long long>(p + q) * k, N))];
        Rat d1 = at(k) * at(k + 1) - Rat(16);
        s1 += ph * to_double(d1);
    }
    return diff1 * (16.0 * geo + s1);
}

Complex mode_bracket_raw_direct(ModeTag tag, const std::vector<double>& B, int p, int q) {
    const int N = static_cast<int>(B.size());
    auto at = [&](long k) { return B[static_cast<size_t>(modN(k - 1, N))]; };
    auto e = [&](int m, long k) { return std::polar(1.0, -2.0 * kPi * m * k / N); };
    Complex total = 0.0;
    for (long k = 1; k <= N; ++k) {
        Complex ph1 = e(p, k) * e(q, k + 1) - e(p, k + 1) * e(q, k);
        if (tag == ModeTag::C2N) {
            Complex ph2 = e(p, k) * e(q, k + 2) - e(p, k + 2) * e(q, k);
            total += ph1 * (at(k) * at(k + 1) - at(k) - at(k + 1)) - ph2 * (at(k) * at(k + 2) / at(k + 1));
        } else {
            total += ph1 * (at(k) * at(k + 1));
        }
    }
    return total;
}

Complex mode_bracket(ModeTag tag, const std::vector<Rat>& B, int p, int q, Complex scale) {
    for (const Rat& b : B)
        if (b == 0) throw PoleError("vanishing B value in mode bracket");
    return scale * scale * mode_bracket_raw(tag, B, p, q);
}

double fit_loglog_slope(const std::vector<int>& N, const std::vector<double>& resid) {
    std::vector<double> xs, ys;
    for (size_t i = 0; i < N.size(); ++i) {
        if (resid[i] > kResidualFloor) {
            xs.push_back(std::log(static_cast<double>(N[i])));
            ys.push_back(std::log(resid[i]));
        }
    }
    if (xs.size() < 2) return std::numeric_limits<double>::quiet_NaN();  // converged everywhere
    double mx = 0, my = 0;
    for (size_t i = 0; i < xs.size(); ++i) mx += xs[i], my += ys[i];
    mx /= xs.size(), my /= ys.size();
    double sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    return sxy / sxx;
}

// ---------------------------------------------------------------------------
// grid report

double ModeReport::t1_stated_at(int N) const {
    return tag == ModeTag::C2N ? 8.0 * kPi * kPi / N : 8.0 * kPi * kPi / (3.0 * N);
}
double ModeReport::t2_stated_at(int N) const {
    return tag == ModeTag::C2N ? 8.0 * N : 4.0 - 8.0 * N;
}
double ModeReport::t1_corrected_at(int N) const {
    return tag == ModeTag::C2N ? 8.0 * kPi * kPi / N : -8.0 * kPi * kPi / (3.0 * N);
}
double ModeReport::t2_corrected_at(int N) const {
    return tag == ModeTag::C2N ? -8.0 * N : -4.0 * N;
}

ModeReport asymptotic_report(ModeTag tag, const TrigPoly& h, const std::vector<std::pair<int, int>>& modes,
                             const std::vector<int>& grid, double t2_perturbation, bool parallel) {
    ModeReport rep;
    rep.tag = tag;
    rep.profile = h.str();
    rep.grid = grid;

    struct PerN {
        std::vector<double> resid_stated, resid_corrected;
        CentralFit fit;
    };
    auto results = sweep::map_indexed<PerN>(
        grid.size(),
        [&](size_t gi) {
            const int N = grid[gi];
            LatticeData lat = build_lattice(h, N);
            Complex s = mode_scale(tag, N);

            // centered DFT modes: F_p = 4N·[p ≡ 0] + Σ (B_k - 4) e^{-2πipk/N}
            auto roots = root_table(N);
            auto F = [&](int m) {
                Complex acc = modN(m, N) == 0 ? Complex(4.0 * N) : Complex(0.0);
                for (int k = 1; k <= N; ++k)
                    acc += roots[static_cast<size_t>(modN(static_cast<long long>(m) * k, N))] *
                           to_double(lat.B[k - 1] - Rat(4));
                return acc;
            };

            ModeReport dummy;
            dummy.tag = tag;
            VirasoroParams stated{dummy.t1_stated_at(N), dummy.t2_stated_at(N) + t2_perturbation, N};
            VirasoroParams corrected{dummy.t1_corrected_at(N), dummy.t2_corrected_at(N) + t2_perturbation, N};

            PerN out;
            for (auto [p, q] : modes) {
                Complex raw = mode_bracket_raw(tag, lat.B, p, q);
                Complex lhs_stated = s * s * raw;
                Complex tgt_stated = virasoro_target(p, q, [&](int m) { return s * F(m); }, stated);
                out.resid_stated.push_back(std::abs(lhs_stated - tgt_stated));
                Complex lhs_corr = s * raw;
                Complex tgt_corr = virasoro_target(p, q, F, corrected);
                out.resid_corrected.push_back(std::abs(lhs_corr - tgt_corr));
            }
            // central-term fit from the p = -q samples: lhs - 2p·F_0 = c3·p³ + c1·p
            std::vector<std::pair<double, Complex>> samples;
            for (auto [p, q] : modes) {
                if (p != -q) continue;
                Complex r = s * mode_bracket_raw(tag, lat.B, p, q) - 2.0 * static_cast<double>(p) * F(0);
                samples.emplace_back(static_cast<double>(p), r);
            }
            out.fit.N = N;
            if (samples.size() >= 2) {
                double p1 = samples[0].first, p2 = samples[1].first;
                Complex r1 = samples[0].second, r2 = samples[1].second;
                // solve c3·p³ + c1·p = r at p1, p2
                double det = p1 * p1 * p1 * p2 - p2 * p2 * p2 * p1;
                out.fit.c3 = (r1 * p2 - r2 * p1) / det;
                out.fit.c1 = (r2 * p1 * p1 * p1 - r1 * p2 * p2 * p2) / det;
            }
            return out;
        },
        parallel);

    for (size_t mi = 0; mi < modes.size(); ++mi) {
        ModePairReport pr;
        pr.p = modes[mi].first;
        pr.q = modes[mi].second;
        std::vector<double> rs, rc;
        for (size_t gi = 0; gi < grid.size(); ++gi) {
            pr.points.push_back({grid[gi], results[gi].resid_stated[mi], results[gi].resid_corrected[mi]});
            rs.push_back(results[gi].resid_stated[mi]);
            rc.push_back(results[gi].resid_corrected[mi]);
        }
        auto ratios_ok = [](const std::vector<double>& r) {
            for (size_t i = 0; i + 1 < r.size(); ++i)
                if (r[i + 1] > 0.3 * r[i] && r[i + 1] > kResidualFloor) return false;
            return true;
        };
        auto slope_ok = [](double sl) { return std::isnan(sl) || sl <= -2.0; };
        pr.slope_stated = fit_loglog_slope(rep.grid, rs);
        pr.slope_corrected = fit_loglog_slope(rep.grid, rc);
        pr.ratios_ok_stated = ratios_ok(rs);
        pr.ratios_ok_corrected = ratios_ok(rc);
        pr.slope_ok_stated = slope_ok(pr.slope_stated);
        pr.slope_ok_corrected = slope_ok(pr.slope_corrected);
        rep.pairs.push_back(std::move(pr));
    }
    for (const auto& r : results) rep.central_fits.push_back(r.fit);
    return rep;
}

}  // namespace pbv
