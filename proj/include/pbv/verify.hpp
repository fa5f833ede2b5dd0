#pragma once

#include <cstdint>
#include <random>

#include "pbv/hill.hpp"
#include "pbv/poisson.hpp"
#include "pbv/swapping.hpp"

namespace pbv::verify {

// Deterministic randomness for the property suites; avoids std distributions
// so that a seed pins byte-identical reports across platforms.
class Rng {
  public:
    explicit Rng(uint64_t seed) : gen_(seed) {}
    uint64_t raw() { return gen_(); }
    long uniform(long lo, long hi) {  // inclusive range
        return lo + static_cast<long>(gen_() % static_cast<uint64_t>(hi - lo + 1));
    }
    Rat rat(long lo, long hi, long max_den = 4) {
        long den = uniform(1, max_den);
        return make_rat(uniform(lo * den, hi * den), den);
    }

  private:
    std::mt19937_64 gen_;
};

struct CheckFailure {
    std::string what;
};

struct SuiteResult {
    std::string name;
    bool pass = true;
    size_t checks = 0;
    std::vector<std::string> failures;

    void record(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            pass = false;
            if (failures.size() < 16) failures.push_back(what);
        }
    }
    void merge(const SuiteResult& other) {
        checks += other.checks;
        if (!other.pass) pass = false;
        for (const auto& f : other.failures)
            if (failures.size() < 16) failures.push_back(f);
    }
};

// --- swapping layer -------------------------------------------------------

// Randomized Jacobi sweep: `count` triples of monomial generators and `count`
// triples of cross fractions on label sets of size up to `max_labels`.
SuiteResult swapping_jacobi_suite(uint64_t seed, int count, int max_labels, bool flip_j, bool parallel);

// Linking-number properties: cut independence, sign behavior, value set.
SuiteResult linking_number_suite(uint64_t seed, int count);

// Leibniz/antisymmetry/bilinearity on randomized elements.
SuiteResult swap_bracket_property_suite(uint64_t seed, int count);

// --- the n=2 derivation (window identities) -------------------------------

struct DerivationResult {
    bool eq12 = false, eq13 = false;
    bool dist3_vanishes = false, dist4_vanishes = false;
    bool entries_match_builtin = false;  // all four bracket families, entry for entry
    bool pass() const { return eq12 && eq13 && dist3_vanishes && dist4_vanishes && entries_match_builtin; }
};

DerivationResult derive_c2n_from_swapping(int N, bool flip_j = false);

// --- random exact polygons --------------------------------------------------

TwistedPolygon<Rat> random_polygon(int n, int N, Rng& rng, int max_tries = 200);
TwistedPolygon<double> polygon_to_double(const TwistedPolygon<Rat>& P);

// --- numeric bracket checks -------------------------------------------------

// Exact residual of one generator pair: θ of the symbolic swapping bracket of
// the window elements minus the closed-form table entry at the coordinates.
Rat numeric_bracket_residual(const TwistedPolygon<Rat>& P, const PoissonStructure& S, const VarRef& gi,
                             const VarRef& gj);

// All generator pairs of one polygon against the builtin table (n=2: C2N over
// B; n=3: C3N over X,Y). mutate flips one C3N entry sign (negative control).
SuiteResult polygon_table_check(const TwistedPolygon<Rat>& P, bool mutate_c3n_sign = false,
                                bool parallel = true);

// θ-images behind the derivation: θ(W_k)=B_k, θ(F1)=1-1/B_k, θ(F2)=1-1/B_{k+1},
// θ(G)=1/B_{k+1}; and for n=3 θ(E^X)=1/(1-X), θ(E^Y)=1/(1-Y).
SuiteResult bridging_identity_suite(uint64_t seed, int polygons);

// --- hill correspondence ----------------------------------------------------

HillOperator<Rat> random_hill(int N, Rng& rng);

// B_k = b_k b_{k+1} and the exact round trip hill -> polygon -> B -> hill.
SuiteResult hill_suite(uint64_t seed, int count, const std::vector<int>& Ns, bool parallel = true);

}  // namespace pbv::verify
