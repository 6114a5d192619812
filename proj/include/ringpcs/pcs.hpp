#pragma once

// Parity check systems (H|S) and coset presentations of codes over R.
//
// A code C = union_j (d_j + D_C) and a parity check system describe the same
// object: D_C is the annihilator of the row module <rows(H)>, and column j of
// S is the common syndrome H d^T of every word d in the j-th coset.
//
// Indices in this API are zero-based (row i, column j, coset j).

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ringpcs/errors.hpp"
#include "ringpcs/ring.hpp"
#include "ringpcs/submodule.hpp"

namespace ringpcs {

class PcsViolation : public Error {
public:
    using Error::Error;
};

// s_{row,column} is not in the ideal { h_row . x : x in R^n }.
class ConditionIViolation : public PcsViolation {
public:
    ConditionIViolation(std::size_t row, std::size_t column);
    std::size_t row() const { return row_; }
    std::size_t column() const { return column_; }

private:
    std::size_t row_, column_;
};

// Columns `first` and `second` of S coincide.
class ConditionIIViolation : public PcsViolation {
public:
    ConditionIIViolation(std::size_t first, std::size_t second);
    std::size_t first() const { return first_; }
    std::size_t second() const { return second_; }

private:
    std::size_t first_, second_;
};

// `relation` is a syzygy of the rows of H (sum r_i h_i = 0) whose image
// sum r_i S_row(i) is nonzero.
class ConditionIIIViolation : public PcsViolation {
public:
    ConditionIIIViolation(RingVec relation, std::string description);
    const RingVec &relation() const { return relation_; }

private:
    RingVec relation_;
};

// Coset representatives that share a coset, or malformed input.
class InvalidPresentation : public Error {
public:
    using Error::Error;
};

// C = union_j (d_j + D_C) with pairwise disjoint cosets.
class CodePresentation {
public:
    // Throws InvalidPresentation when d_i - d_j lies in D for some i != j.
    CodePresentation(Submodule partial_kernel, std::vector<RingVec> representatives);

    const RingSpec &spec() const { return kernel_.spec(); }
    std::size_t length() const { return kernel_.ambient_length(); }
    const Submodule &partial_kernel() const { return kernel_; }
    const std::vector<RingVec> &representatives() const { return reps_; }
    std::size_t coset_count() const { return reps_.size(); }
    std::uint64_t code_size() const { return kernel_.cardinality() * reps_.size(); }

    // Index of the coset containing x.
    std::optional<std::size_t> coset_of(const RingVec &x) const;

    // -C = union_j (-d_j + D_C).
    CodePresentation negated() const;

private:
    Submodule kernel_;
    std::vector<RingVec> reps_;
};

class ParityCheckSystem {
public:
    // Checks shapes and the three defining conditions; throws the matching
    // PcsViolation on the first failure, RingMismatch on shape errors.
    static ParityCheckSystem validate(const RingSpec &spec, RingMatrix h, RingMatrix s);

    const RingSpec &spec() const { return spec_; }
    const RingMatrix &h() const { return h_; }
    const RingMatrix &s() const { return s_; }
    std::size_t rows() const { return h_.rows(); }
    std::size_t length() const { return h_.cols(); }
    std::size_t coset_count() const { return s_.cols(); }

    const std::vector<RingVec> &syndrome_columns() const { return columns_; }
    const RingVec &syndrome_column(std::size_t j) const { return columns_[j]; }
    std::optional<std::size_t> column_index(const RingVec &syndrome) const;

    // <rows(H)> and its annihilator D_C.
    const Submodule &row_module() const { return row_module_; }
    const Submodule &partial_kernel() const { return partial_kernel_; }
    std::uint64_t code_size() const { return partial_kernel_.cardinality() * coset_count(); }

    // H x^T.
    RingVec syndrome(const RingVec &x) const { return h_.apply(spec_, x); }

    // Some x with H x^T = b, or nullopt when b is not a syndrome.
    std::optional<RingVec> preimage(const RingVec &b) const { return column_solver_.solve(b); }
    // Coefficients r with sum r_i h_i = x, or nullopt when x is not in <rows(H)>.
    std::optional<RingVec> row_coefficients(const RingVec &x) const { return row_solver_.solve(x); }

private:
    ParityCheckSystem(RingSpec spec, RingMatrix h, RingMatrix s);

    RingSpec spec_;
    RingMatrix h_;
    RingMatrix s_;
    std::vector<RingVec> columns_;
    std::unordered_map<RingVec, std::size_t, RingVecHash> column_lookup_;
    Submodule row_module_;
    Submodule partial_kernel_;
    LeftSolver column_solver_;
    LeftSolver row_solver_;
};

// Builds (H|S) with H rows generating D_C^perp and s_ij = h_i . d_j. Without
// explicit dual generators the canonical generators of D_C^perp are used (a
// single zero row when D_C = R^n). Throws InvalidPresentation if the given
// generators do not span D_C^perp.
ParityCheckSystem code_to_pcs(const CodePresentation &presentation,
                              const std::optional<std::vector<RingVec>> &dual_generators = std::nullopt);

// D_C = <rows(H)>^perp and d_j = one preimage of column j.
CodePresentation pcs_to_code(const ParityCheckSystem &pcs);

// Coset index j with H x^T = S_col(j), or nullopt when x is not a codeword.
std::optional<std::size_t> member(const ParityCheckSystem &pcs, const RingVec &x);

// ker(col(S)): the syndromes sigma with r sigma + col(S) = col(S) for all r.
std::vector<RingVec> kernel_syndromes(const ParityCheckSystem &pcs);

// ker(C) = { x : H x^T in ker(col(S)) }.
Submodule kernel(const ParityCheckSystem &pcs);

bool is_linear(const ParityCheckSystem &pcs);

} // namespace ringpcs
