#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pbv/parse.hpp"
#include "pbv/ratfunc.hpp"

namespace pbv {

// Cyclic bivector table: entries give π_{(fi,k),(fj,k+d)} as an expression in
// k-relative variables, instantiated for k = 1..N with index wrap-around.
// The instantiated table is antisymmetric by completion; inconsistent double
// definitions are rejected.
class PoissonStructure {
  public:
    struct OffsetEntry {
        std::string fam_i, fam_j;
        int offset;
        RationalFunction expr;  // in k-relative variables
    };

    static PoissonStructure make(std::string name, int N, std::vector<std::string> families,
                                 std::vector<OffsetEntry> entries);

    const std::string& name() const { return name_; }
    int N() const { return N_; }
    const std::vector<std::string>& families() const { return families_; }
    const std::vector<OffsetEntry>& offset_entries() const { return entries_; }
    const std::vector<VarRef>& generators() const { return gens_; }

    // π(u, v); zero when no table entry exists.
    RationalFunction pi(const VarRef& u, const VarRef& v) const;

    bool same_space(const PoissonStructure& other) const {
        return N_ == other.N_ && families_ == other.families_;
    }

    // cyclic shift s on generator indices
    VarRef shifted(const VarRef& v, int s) const;
    // reversal l -> N+1-l
    VarRef reversed(const VarRef& v) const;

    // {νf, νg} = -ν{f, g} for all instantiated entries?
    bool reversal_antiequivariant() const;

  private:
    std::string name_;
    int N_ = 0;
    std::vector<std::string> families_;
    std::vector<OffsetEntry> entries_;
    std::vector<VarRef> gens_;
    // upper-triangular storage keyed by generator order
    std::map<std::pair<VarRef, VarRef>, RationalFunction> table_;
};

enum class BuiltinTag { C2N, S2, V2, C3N };

std::optional<BuiltinTag> builtin_tag_from_string(const std::string& s);
std::string to_string(BuiltinTag tag);

// Structure tables from the lattice propositions:
//   C2N: π_{k,k+1} = B_k·B_{k+1} − B_k − B_{k+1},  π_{k,k+2} = −B_k·B_{k+2}/B_{k+1}
//   S2:  π_{k,k+1} = B_k·B_{k+1}
//   V2:  π_{k,k+1} = v_k·v_{k+1}
//   C3N: the ten corner-invariant entry families on X, Y
// `mutate_entry_sign` flips the sign of one C3N entry (negative control).
PoissonStructure builtin_structure(BuiltinTag tag, int N, bool mutate_entry_sign = false);

// JSON structure files; see README for the schema.
PoissonStructure load_structure(const std::string& path, std::optional<int> N = std::nullopt);
std::string structure_to_json(const PoissonStructure& s);

// Σ_{u≠v} π_{uv}·∂f/∂u·∂g/∂v over generator pairs; exact.
RationalFunction pbracket(const PoissonStructure& S, const RationalFunction& f, const RationalFunction& g);

RationalFunction jacobiator(const PoissonStructure& S, const RationalFunction& f,
                            const RationalFunction& g, const RationalFunction& h);

struct TripleRef {
    VarRef a, b, c;
};

struct PoissonVerdict {
    bool poisson = true;
    std::optional<TripleRef> witness;  // first failing generator triple
    std::optional<std::string> witness_value;
    size_t triples_checked = 0;
};

// Jacobi on generator triples (sufficient: the bracket is a biderivation).
// Reduced mode quotients by the cyclic shift; paranoid checks every triple.
PoissonVerdict is_poisson(const PoissonStructure& S, bool paranoid = false, bool parallel = true);

// Six-term mixed Jacobiator K on a generator triple.
RationalFunction mixed_jacobiator(const PoissonStructure& Sa, const PoissonStructure& Sb,
                                  const VarRef& u, const VarRef& v, const VarRef& w);

struct CompatibilityReport {
    std::string name_a, name_b;
    std::string verdict;  // compatible | incompatible | undetermined
    std::optional<TripleRef> witness;
    std::optional<std::string> witness_value;
    size_t triples_checked = 0;
    bool used_reversal_reduction = false;
    bool paranoid = false;
};

CompatibilityReport compatibility_check(const PoissonStructure& Sa, const PoissonStructure& Sb,
                                        bool paranoid = false, bool parallel = true);

// Formal pencil Sa + lam·Sb over the extra scalar variable lam.
PoissonStructure pencil(const PoissonStructure& Sa, const PoissonStructure& Sb);

// Miura data: the stated identity pushes {v_i, v_j}_{V2} through
// μ(v_k) = (1+v_k)(1+1/v_{k+1}) against the S2 table; the pushforward is also
// compared against the FTV (C2N) table, which is what it actually matches.
struct MiuraPairResult {
    int i, j;
    bool matches_s2_table = false;
    bool matches_ftv_table = false;
};

struct MiuraReport {
    int N;
    bool stated_identity_holds;  // pushforward == S2 table for every pair
    bool ftv_identity_holds;     // pushforward == C2N table for every pair
    std::vector<MiuraPairResult> pairs;
};

MiuraReport miura_check(int N);

// μ(v_k) as a rational function of the v variables.
RationalFunction miura_image(int k, int N);

}  // namespace pbv
