#pragma once

// Brute-force reference implementations.
//
// Everything here uses ring arithmetic and exhaustive scans only: no Howell
// forms, no solvers, no character bookkeeping. Tests compare the main
// modules against these. Scans over R^n respect the element budget and
// pairwise scans over a code respect |C|^2 <= budget.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "ringpcs/pcs.hpp"
#include "ringpcs/ring.hpp"

namespace ringpcs {

struct ExplicitCode {
    RingSpec spec;
    std::size_t n = 0;
    std::set<RingVec> words;

    std::size_t size() const { return words.size(); }
    bool contains(const RingVec &x) const { return words.count(x) != 0; }
};

// { x in R^n : H x^T is a column of S }. Works on unvalidated matrices.
ExplicitCode oracle_code_from_pcs(const RingSpec &spec, const RingMatrix &h, const RingMatrix &s,
                                  std::uint64_t budget = kDefaultBudget);
ExplicitCode oracle_code_from_pcs(const ParityCheckSystem &pcs, std::uint64_t budget = kDefaultBudget);

// All R-linear combinations of the generators (the zero vector when empty).
std::set<RingVec> oracle_span(const RingSpec &spec, std::size_t n, const std::vector<RingVec> &generators,
                              std::uint64_t budget = kDefaultBudget);

// union_j (d_j + <generators>).
ExplicitCode oracle_code_from_presentation(const RingSpec &spec, std::size_t n,
                                           const std::vector<RingVec> &kernel_generators,
                                           const std::vector<RingVec> &representatives,
                                           std::uint64_t budget = kDefaultBudget);

// Minimum over distinct pairs. Throws DegenerateCode for a one-word code.
std::size_t oracle_min_distance(const ExplicitCode &code, std::uint64_t budget = kDefaultBudget);

// { x : r x + C = C for all r in R }.
std::set<RingVec> oracle_kernel(const ExplicitCode &code, std::uint64_t budget = kDefaultBudget);

// { y in R^n : x . y = 0 for all x in d }.
std::set<RingVec> oracle_annihilator(const RingSpec &spec, std::size_t n, const std::set<RingVec> &d,
                                     std::uint64_t budget = kDefaultBudget);

// sum_{c in C} exp(-2 pi i sum_f (x . c)_f / t_f).
std::complex<double> oracle_fourier(const ExplicitCode &code, const RingVec &x);

// D_i = #{ (c, c') in C^2 : d(c, c') = i }, i = 0..n.
std::vector<std::int64_t> oracle_distance_distribution(const ExplicitCode &code,
                                                       std::uint64_t budget = kDefaultBudget);

// A_i = #{ c in C : wt(c) = i }.
std::vector<std::int64_t> oracle_weight_distribution(const ExplicitCode &code);

// Closed under addition and under multiplication by every scalar.
bool oracle_is_linear(const ExplicitCode &code);

// { r in R^m : sum r_i rows_i = 0 }.
std::set<RingVec> oracle_syzygies(const RingSpec &spec, const std::vector<RingVec> &rows, std::size_t n,
                                  std::uint64_t budget = kDefaultBudget);

// Some x with H x^T = b (the first in scan order), or nullopt.
std::optional<RingVec> oracle_solve_right(const RingSpec &spec, const RingMatrix &h, const RingVec &b,
                                          std::uint64_t budget = kDefaultBudget);

struct NearestCodewords {
    std::size_t distance = 0;
    std::vector<RingVec> codewords; // sorted
};

NearestCodewords oracle_nearest(const ExplicitCode &code, const RingVec &y);

// First defining condition (1, 2 or 3) that (H|S) violates, checked in that
// order by exhaustive scans; nullopt when all hold.
std::optional<int> oracle_pcs_violation(const RingSpec &spec, const RingMatrix &h, const RingMatrix &s,
                                        std::uint64_t budget = kDefaultBudget);

} // namespace ringpcs
