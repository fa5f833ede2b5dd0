#include "pbv/poisson.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "pbv/sweep.hpp"

namespace pbv {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// structure construction

PoissonStructure PoissonStructure::make(std::string name, int N, std::vector<std::string> families,
                                        std::vector<OffsetEntry> entries) {
    if (N < 1) throw PeriodTooSmall("period must be positive");
    PoissonStructure s;
    s.name_ = std::move(name);
    s.N_ = N;
    s.families_ = std::move(families);
    s.entries_ = std::move(entries);

    std::set<std::string> famset(s.families_.begin(), s.families_.end());
    for (const auto& f : s.families_) families::intern(f);
    for (const auto& f : s.families_)
        for (int i = 1; i <= N; ++i) s.gens_.push_back(var_abs(f, i));

    for (const auto& e : s.entries_) {
        if (!famset.count(e.fam_i) || !famset.count(e.fam_j))
            throw UnknownFamily(famset.count(e.fam_i) ? e.fam_j : e.fam_i);
        if ((e.offset % N + N) % N == 0 && e.fam_i == e.fam_j)
            throw InconsistentTable("self-bracket entry (offset 0 mod N) in " + s.name_);
        for (const auto& v : e.expr.variables()) {
            if (!v.relative) throw InconsistentTable("entry expressions must use k-relative variables");
            if (!famset.count(families::name(v.family)))
                throw UnknownFamily(families::name(v.family));
        }
        for (int k = 1; k <= N; ++k) {
            VarRef u = var_abs(e.fam_i, k);
            VarRef v = var_abs(e.fam_j, wrap_index(static_cast<int64_t>(k) + e.offset, N));
            if (u == v) throw InconsistentTable("entry instantiates to a self-bracket in " + s.name_);
            RationalFunction val = instantiate_at(e.expr, k, N);
            bool flip = v < u;
            if (flip) std::swap(u, v);
            RationalFunction stored = flip ? -val : val;
            auto [it, inserted] = s.table_.emplace(std::make_pair(u, v), stored);
            if (!inserted && !(it->second == stored))
                throw InconsistentTable("conflicting values for {" + to_string(u) + ", " + to_string(v) +
                                        "} in " + s.name_);
        }
    }
    return s;
}

RationalFunction PoissonStructure::pi(const VarRef& u, const VarRef& v) const {
    if (u == v) return RationalFunction(Rat(0));
    bool flip = v < u;
    const VarRef& a = flip ? v : u;
    const VarRef& b = flip ? u : v;
    auto it = table_.find(std::make_pair(a, b));
    if (it == table_.end()) return RationalFunction(Rat(0));
    return flip ? -it->second : it->second;
}

VarRef PoissonStructure::shifted(const VarRef& v, int s) const {
    return VarRef{v.family, wrap_index(static_cast<int64_t>(v.i) + s, N_), v.j, v.relative};
}

VarRef PoissonStructure::reversed(const VarRef& v) const {
    return VarRef{v.family, wrap_index(static_cast<int64_t>(N_) + 1 - v.i, N_), v.j, v.relative};
}

bool PoissonStructure::reversal_antiequivariant() const {
    auto rev = [this](const VarRef& v) { return reversed(v); };
    for (const auto& [key, val] : table_) {
        RationalFunction lhs = pi(rev(key.first), rev(key.second));
        RationalFunction rhs = -val.map_variables(rev);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// builtins

std::optional<BuiltinTag> builtin_tag_from_string(const std::string& s) {
    std::string t;
    for (char c : s) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (t == "c2n") return BuiltinTag::C2N;
    if (t == "s2") return BuiltinTag::S2;
    if (t == "v2") return BuiltinTag::V2;
    if (t == "c3n") return BuiltinTag::C3N;
    return std::nullopt;
}

std::string to_string(BuiltinTag tag) {
    switch (tag) {
        case BuiltinTag::C2N: return "C2N";
        case BuiltinTag::S2: return "S2";
        case BuiltinTag::V2: return "V2";
        case BuiltinTag::C3N: return "C3N";
    }
    return "?";
}

PoissonStructure builtin_structure(BuiltinTag tag, int N, bool mutate_entry_sign) {
    using E = PoissonStructure::OffsetEntry;
    auto P = [](const std::string& s) { return parse_expr(s); };
    switch (tag) {
        case BuiltinTag::C2N: {
            if (N < 5) throw PeriodTooSmall("C2N needs N >= 5 (distinct offsets 1, 2, N-1, N-2)");
            return PoissonStructure::make(
                "C2N", N, {"B"},
                {E{"B", "B", 1, P("B[k]*B[k+1] - B[k] - B[k+1]")},
                 E{"B", "B", 2, P("-B[k]*B[k+2]/B[k+1]")}});
        }
        case BuiltinTag::S2: {
            if (N < 5) throw PeriodTooSmall("S2 needs N >= 5");
            return PoissonStructure::make("S2", N, {"B"}, {E{"B", "B", 1, P("B[k]*B[k+1]")}});
        }
        case BuiltinTag::V2: {
            if (N < 3) throw PeriodTooSmall("V2 needs N >= 3");
            return PoissonStructure::make("V2", N, {"v"}, {E{"v", "v", 1, P("v[k]*v[k+1]")}});
        }
        case BuiltinTag::C3N: {
            if (N < 6) throw PeriodTooSmall("C3N needs N >= 6 (offsets -3..2 must stay distinct mod N)");
            std::string xy0 = "-X[k]*Y[k]*(1 - X[k])*(1 - Y[k])";
            if (mutate_entry_sign) xy0 = "X[k]*Y[k]*(1 - X[k])*(1 - Y[k])";
            return PoissonStructure::make(
                "C3N", N, {"X", "Y"},
                {E{"X", "X", 1, P("X[k]*X[k+1]*(1 - Y[k])*(1 - X[k] - X[k+1])")},
                 E{"X", "X", 2, P("X[k]*X[k+1]*X[k+2]*(Y[k] + Y[k+1] - 1)")},
                 E{"X", "Y", -3, P("X[k-1]*X[k]*Y[k-3]*Y[k-2]")},
                 E{"X", "Y", -2,
                   P("X[k]*Y[k-2]*(-X[k-1] - Y[k-1] + X[k]*Y[k-1] + X[k-1]*Y[k-1] + X[k-1]*Y[k-2])")},
                 E{"X", "Y", -1, P("X[k]*Y[k-1]*(1 - X[k])*(1 - Y[k-1])")},
                 E{"X", "Y", 0, P(xy0)},
                 E{"X", "Y", 1,
                   P("X[k]*Y[k+1]*(Y[k] + X[k+1] - X[k]*Y[k] - X[k+1]*Y[k] - X[k+1]*Y[k+1])")},
                 E{"X", "Y", 2, P("-X[k]*X[k+1]*Y[k+1]*Y[k+2]")},
                 E{"Y", "Y", 1, P("Y[k]*Y[k+1]*(1 - X[k+1])*(1 - Y[k] - Y[k+1])")},
                 E{"Y", "Y", 2, P("Y[k]*Y[k+1]*Y[k+2]*(X[k+1] + X[k+2] - 1)")}});
        }
    }
    throw Error("unknown builtin tag");
}

// ---------------------------------------------------------------------------
// JSON files

PoissonStructure load_structure(const std::string& path, std::optional<int> N_arg) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open structure file " + path);
    json j = json::parse(in);

    std::string name = j.value("name", path);
    int N;
    if (j.contains("N") && j["N"].is_number_integer()) {
        N = j["N"].get<int>();
        if (N_arg && *N_arg != N)
            throw Error("structure file " + path + " declares N=" + std::to_string(N) +
                        ", conflicting with requested N=" + std::to_string(*N_arg));
    } else {
        if (!N_arg) throw Error("structure file " + path + " has symbolic N; pass --n");
        N = *N_arg;
    }

    std::vector<std::string> fams;
    for (const auto& f : j.at("families")) {
        if (f.is_string())
            fams.push_back(f.get<std::string>());
        else
            fams.push_back(f.at("symbol").get<std::string>());
    }
    std::set<std::string> famset(fams.begin(), fams.end());

    std::vector<PoissonStructure::OffsetEntry> entries;
    for (const auto& e : j.at("entries")) {
        PoissonStructure::OffsetEntry oe;
        oe.fam_i = e.value("fi", fams.front());
        oe.fam_j = e.value("fj", fams.front());
        oe.offset = e.at("offset").get<int>();
        oe.expr = parse_expr(e.at("expr").get<std::string>(), std::nullopt, &famset);
        entries.push_back(std::move(oe));
    }
    return PoissonStructure::make(std::move(name), N, std::move(fams), std::move(entries));
}

std::string structure_to_json(const PoissonStructure& s) {
    json j;
    j["name"] = s.name();
    j["N"] = s.N();
    j["families"] = json::array();
    for (const auto& f : s.families()) j["families"].push_back(json{{"symbol", f}, {"count_per_k", 1}});
    j["entries"] = json::array();
    for (const auto& e : s.offset_entries())
        j["entries"].push_back(json{{"fi", e.fam_i},
                                    {"fj", e.fam_j},
                                    {"offset", e.offset},
                                    {"expr", print_expr(e.expr)}});
    return j.dump(2);
}

// ---------------------------------------------------------------------------
// brackets

RationalFunction pbracket(const PoissonStructure& S, const RationalFunction& f,
                          const RationalFunction& g) {
    std::vector<VarRef> fv, gv;
    std::set<VarRef> gens(S.generators().begin(), S.generators().end());
    for (const auto& v : f.variables())
        if (gens.count(v)) fv.push_back(v);
    for (const auto& v : g.variables())
        if (gens.count(v)) gv.push_back(v);

    std::map<VarRef, RationalFunction> df;
    for (const auto& u : fv) df.emplace(u, f.partial(u));

    RationalFunction total;
    for (const auto& v : gv) {
        RationalFunction dg = g.partial(v);
        if (dg.is_zero()) continue;
        for (const auto& u : fv) {
            if (u == v) continue;
            RationalFunction piuv = S.pi(u, v);
            if (piuv.is_zero()) continue;
            const RationalFunction& dfu = df.at(u);
            if (dfu.is_zero()) continue;
            total += piuv * dfu * dg;
        }
    }
    return total;
}

RationalFunction jacobiator(const PoissonStructure& S, const RationalFunction& f,
                            const RationalFunction& g, const RationalFunction& h) {
    return pbracket(S, pbracket(S, f, g), h) + pbracket(S, pbracket(S, g, h), f) +
           pbracket(S, pbracket(S, h, f), g);
}

// ---------------------------------------------------------------------------
// generator triples, with cyclic-shift (and optional reversal) reduction

namespace {

struct TripleSet {
    std::vector<std::array<size_t, 3>> triples;  // ordinals into generators()
};

size_t ordinal_count(const PoissonStructure& S) { return S.families().size() * S.N(); }

std::array<size_t, 3> shift_triple(const PoissonStructure& S, std::array<size_t, 3> t, int s) {
    const size_t N = static_cast<size_t>(S.N());
    for (auto& o : t) {
        size_t fam = o / N, i = o % N;
        o = fam * N + (i + static_cast<size_t>(s)) % N;
    }
    std::sort(t.begin(), t.end());
    return t;
}

std::array<size_t, 3> reverse_triple(const PoissonStructure& S, std::array<size_t, 3> t) {
    const size_t N = static_cast<size_t>(S.N());
    for (auto& o : t) {
        size_t fam = o / N, i = o % N;  // i is 0-based; reversal maps 1-based l -> N+1-l
        o = fam * N + (N - 1 - i);
    }
    std::sort(t.begin(), t.end());
    return t;
}

std::array<size_t, 3> shift_canonical(const PoissonStructure& S, const std::array<size_t, 3>& t) {
    std::array<size_t, 3> best = shift_triple(S, t, 0);
    for (int s = 1; s < S.N(); ++s) best = std::min(best, shift_triple(S, t, s));
    return best;
}

TripleSet enumerate_triples(const PoissonStructure& S, bool paranoid, bool use_reversal) {
    const size_t m = ordinal_count(S);
    TripleSet out;
    if (paranoid) {
        for (size_t a = 0; a < m; ++a)
            for (size_t b = a + 1; b < m; ++b)
                for (size_t c = b + 1; c < m; ++c) out.triples.push_back({a, b, c});
        return out;
    }
    std::set<std::array<size_t, 3>> reps;
    for (size_t a = 0; a < m; ++a)
        for (size_t b = a + 1; b < m; ++b)
            for (size_t c = b + 1; c < m; ++c) {
                auto canon = shift_canonical(S, {a, b, c});
                if (use_reversal) canon = std::min(canon, shift_canonical(S, reverse_triple(S, canon)));
                reps.insert(canon);
            }
    out.triples.assign(reps.begin(), reps.end());
    return out;
}

}  // namespace

PoissonVerdict is_poisson(const PoissonStructure& S, bool paranoid, bool parallel) {
    TripleSet ts = enumerate_triples(S, paranoid, /*use_reversal=*/false);
    const auto& gens = S.generators();
    auto results = sweep::map_indexed<std::string>(
        ts.triples.size(),
        [&](size_t idx) -> std::string {
            auto [a, b, c] = ts.triples[idx];
            RationalFunction J =
                jacobiator(S, RationalFunction::variable(gens[a]), RationalFunction::variable(gens[b]),
                           RationalFunction::variable(gens[c]));
            return J.is_zero() ? std::string() : print_expr(J);
        },
        parallel);
    PoissonVerdict v;
    v.triples_checked = ts.triples.size();
    for (size_t i = 0; i < results.size(); ++i) {
        if (!results[i].empty()) {
            v.poisson = false;
            auto [a, b, c] = ts.triples[i];
            v.witness = TripleRef{gens[a], gens[b], gens[c]};
            v.witness_value = results[i];
            break;
        }
    }
    return v;
}

RationalFunction mixed_jacobiator(const PoissonStructure& Sa, const PoissonStructure& Sb,
                                  const VarRef& u, const VarRef& v, const VarRef& w) {
    if (!Sa.same_space(Sb))
        throw StructureMismatch("mixed Jacobiator requires identical variables and period");
    auto U = RationalFunction::variable(u);
    auto V = RationalFunction::variable(v);
    auto W = RationalFunction::variable(w);
    auto half = [&](const PoissonStructure& A, const PoissonStructure& B) {
        return pbracket(B, pbracket(A, U, V), W) + pbracket(B, pbracket(A, V, W), U) +
               pbracket(B, pbracket(A, W, U), V);
    };
    return half(Sa, Sb) + half(Sb, Sa);
}

CompatibilityReport compatibility_check(const PoissonStructure& Sa, const PoissonStructure& Sb,
                                        bool paranoid, bool parallel) {
    if (!Sa.same_space(Sb))
        throw StructureMismatch("compatibility check requires identical variables and period");
    CompatibilityReport rep;
    rep.name_a = Sa.name();
    rep.name_b = Sb.name();
    rep.paranoid = paranoid;
    bool use_rev = !paranoid && Sa.reversal_antiequivariant() && Sb.reversal_antiequivariant();
    rep.used_reversal_reduction = use_rev;

    TripleSet ts = enumerate_triples(Sa, paranoid, use_rev);
    const auto& gens = Sa.generators();
    auto results = sweep::map_indexed<std::string>(
        ts.triples.size(),
        [&](size_t idx) -> std::string {
            auto [a, b, c] = ts.triples[idx];
            RationalFunction K = mixed_jacobiator(Sa, Sb, gens[a], gens[b], gens[c]);
            return K.is_zero() ? std::string() : print_expr(K);
        },
        parallel);
    rep.triples_checked = ts.triples.size();
    rep.verdict = "compatible";
    for (size_t i = 0; i < results.size(); ++i) {
        if (!results[i].empty()) {
            rep.verdict = "incompatible";
            auto [a, b, c] = ts.triples[i];
            rep.witness = TripleRef{gens[a], gens[b], gens[c]};
            rep.witness_value = results[i];
            break;
        }
    }
    return rep;
}

PoissonStructure pencil(const PoissonStructure& Sa, const PoissonStructure& Sb) {
    if (!Sa.same_space(Sb)) throw StructureMismatch("pencil requires identical variables and period");
    RationalFunction lam = RationalFunction::variable(var_scalar("lam"));
    std::map<std::tuple<std::string, std::string, int>, std::pair<RationalFunction, RationalFunction>> merged;
    for (const auto& e : Sa.offset_entries()) merged[{e.fam_i, e.fam_j, e.offset}].first += e.expr;
    for (const auto& e : Sb.offset_entries()) merged[{e.fam_i, e.fam_j, e.offset}].second += e.expr;
    std::vector<PoissonStructure::OffsetEntry> entries;
    for (const auto& [key, ab] : merged) {
        auto [fi, fj, off] = key;
        entries.push_back({fi, fj, off, ab.first + lam * ab.second});
    }
    return PoissonStructure::make(Sa.name() + "+lam*" + Sb.name(), Sa.N(), Sa.families(),
                                  std::move(entries));
}

// ---------------------------------------------------------------------------
// Miura

RationalFunction miura_image(int k, int N) {
    RationalFunction vk = rf_var("v", wrap_index(k, N));
    RationalFunction vk1 = rf_var("v", wrap_index(k + 1, N));
    return (RationalFunction(1) + vk) * (RationalFunction(1) + vk1.pow(-1));
}

MiuraReport miura_check(int N) {
    if (N < 3) throw PeriodTooSmall("miura_check needs N >= 3");
    PoissonStructure V2 = builtin_structure(BuiltinTag::V2, N);
    MiuraReport rep;
    rep.N = N;
    rep.stated_identity_holds = true;
    rep.ftv_identity_holds = N >= 5;

    std::vector<RationalFunction> mu(static_cast<size_t>(N) + 1);
    for (int k = 1; k <= N; ++k) mu[k] = miura_image(k, N);

    // cyclic shift reduces pairs (i, j) to i = 1
    for (int j = 1; j <= N; ++j) {
        RationalFunction lhs = pbracket(V2, mu[1], mu[static_cast<size_t>(j)]);
        int d = static_cast<int>((j - 1) % N);
        // stated target: the S2 table written through mu
        RationalFunction s2t;
        if (d == 1) s2t = mu[1] * mu[static_cast<size_t>(j)];
        if (d == N - 1) s2t = -(mu[1] * mu[static_cast<size_t>(j)]);
        MiuraPairResult pr;
        pr.i = 1;
        pr.j = j;
        pr.matches_s2_table = (lhs == s2t);
        if (N >= 5) {
            // FTV target: the C2N entry with every B_l replaced by mu_l
            RationalFunction ftv;
            auto muat = [&](int l) { return mu[static_cast<size_t>(wrap_index(l, N))]; };
            if (d == 1) ftv = mu[1] * muat(j) - mu[1] - muat(j);
            if (d == N - 1) ftv = -(muat(j) * mu[1] - muat(j) - mu[1]);
            if (d == 2) ftv = -(mu[1] * muat(j)) / muat(2);
            if (d == N - 2) ftv = (mu[1] * muat(j)) / muat(0);
            pr.matches_ftv_table = (lhs == ftv);
        }
        if (!pr.matches_s2_table) rep.stated_identity_holds = false;
        if (N >= 5 && !pr.matches_ftv_table) rep.ftv_identity_holds = false;
        rep.pairs.push_back(pr);
    }
    return rep;
}

}  // namespace pbv
