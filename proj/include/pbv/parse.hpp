#pragma once

#include <optional>
#include <set>
#include <string>

#include "pbv/ratfunc.hpp"

namespace pbv {

// Expression grammar (UTF-8 text):
//   integers, variables Fam[i] / Fam[k+c] / pair[i,j], bare scalar names,
//   operators + - * / ^, parentheses. `k` is the free cyclic index symbol.
// With a declared period, absolute indices are normalized into [1, N].
// An optional family whitelist turns unknown identifiers into errors.
RationalFunction parse_expr(const std::string& text, std::optional<int> period = std::nullopt,
                            const std::set<std::string>* allowed_families = nullptr);

// Canonical printer; parse_expr(print_expr(f)) == f.
std::string print_expr(const RationalFunction& f);
std::string print_poly(const Poly& p);

// Resolve relative (k-indexed) variables at a concrete k with period N.
RationalFunction instantiate_at(const RationalFunction& f, int k, int N);

}  // namespace pbv
