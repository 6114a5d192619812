#pragma once

// Exact arithmetic in R = Z_t1 x ... x Z_tk and in the free module R^n.
//
// Elements carry one residue per ring factor. Product rings are handled
// componentwise everywhere (no CRT collapse), so Z2xZ2 and Z4 stay distinct.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ringpcs/errors.hpp"

namespace ringpcs {

// Element budget for exhaustive scans (|R|^n, |D|, ...).
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// Largest admissible modulus; keeps residue products inside int64.
inline constexpr std::int64_t kMaxModulus = (std::int64_t{1} << 31) - 1;

struct RingElem {
    std::vector<std::int64_t> residues;

    friend auto operator<=>(const RingElem &, const RingElem &) = default;
};

// A vector in R^n stored coordinate-major: residue(i, f) is factor f of x_i.
class RingVec {
public:
    RingVec() = default;
    RingVec(std::size_t length, std::size_t arity);

    std::size_t size() const { return length_; }
    std::size_t arity() const { return arity_; }

    std::int64_t residue(std::size_t i, std::size_t f) const { return residues_[i * arity_ + f]; }
    std::int64_t &residue(std::size_t i, std::size_t f) { return residues_[i * arity_ + f]; }

    RingElem at(std::size_t i) const;
    void set(std::size_t i, const RingElem &a);
    bool is_zero_at(std::size_t i) const;
    bool is_zero() const;

    std::span<const std::int64_t> raw() const { return residues_; }

    friend auto operator<=>(const RingVec &, const RingVec &) = default;

private:
    std::size_t length_ = 0;
    std::size_t arity_ = 1;
    std::vector<std::int64_t> residues_;
};

struct RingVecHash {
    std::size_t operator()(const RingVec &x) const noexcept;
};

// Hamming distance and weight; independent of the ring.
std::size_t hamming(const RingVec &x, const RingVec &y);
std::size_t weight(const RingVec &x);

class RingSpec {
public:
    explicit RingSpec(std::vector<std::int64_t> moduli);

    // Parses `Z6`, `Z2xZ3`, `z4xZ4`.
    static RingSpec parse(std::string_view literal);

    const std::vector<std::int64_t> &moduli() const { return moduli_; }
    std::size_t arity() const { return moduli_.size(); }
    std::int64_t modulus(std::size_t f) const { return moduli_[f]; }
    std::uint64_t cardinality() const { return cardinality_; }
    // lcm of the moduli: the order of the roots of unity the characters take.
    std::int64_t character_order() const { return character_order_; }
    std::string literal() const;

    RingElem zero() const;
    RingElem one() const;
    // Reduces arbitrary integers into an element.
    RingElem element(std::span<const std::int64_t> residues) const;
    RingElem element(std::int64_t value) const;
    // Mixed-radix index in [0, |R|), last factor fastest.
    RingElem element_at(std::uint64_t index) const;
    bool is_zero(const RingElem &a) const;

    RingElem add(const RingElem &a, const RingElem &b) const;
    RingElem sub(const RingElem &a, const RingElem &b) const;
    RingElem neg(const RingElem &a) const;
    RingElem mul(const RingElem &a, const RingElem &b) const;

    RingVec zero_vector(std::size_t n) const;
    RingVec vector(const std::vector<RingElem> &coords) const;
    // Convenience for single-factor rings: one integer per coordinate.
    RingVec vector(std::initializer_list<std::int64_t> values) const;

    RingVec add(const RingVec &x, const RingVec &y) const;
    RingVec sub(const RingVec &x, const RingVec &y) const;
    RingVec neg(const RingVec &x) const;
    RingVec scale(const RingElem &r, const RingVec &x) const;
    RingElem dot(const RingVec &x, const RingVec &y) const;

    // Throws RingMismatch unless a is a reduced element of this ring.
    void check(const RingElem &a) const;
    void check(const RingVec &x) const;
    void check(const RingVec &x, std::size_t n) const;

    // Textual forms: bare integer for one factor, `(a,b,...)` otherwise.
    std::string format(const RingElem &a) const;
    std::string format(const RingVec &x) const;

    friend bool operator==(const RingSpec &a, const RingSpec &b) { return a.moduli_ == b.moduli_; }

private:
    std::vector<std::int64_t> moduli_;
    std::uint64_t cardinality_ = 1;
    std::int64_t character_order_ = 1;
};

// Dense m x n matrix over R, stored as rows.
class RingMatrix {
public:
    RingMatrix() = default;
    RingMatrix(std::vector<RingVec> rows, std::size_t cols);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const RingVec &row(std::size_t i) const { return rows_[i]; }
    const std::vector<RingVec> &row_vectors() const { return rows_; }
    RingVec column(std::size_t j) const;
    std::vector<RingVec> columns() const;

    // H x^T as a vector of length rows().
    RingVec apply(const RingSpec &spec, const RingVec &x) const;

    friend bool operator==(const RingMatrix &, const RingMatrix &) = default;

private:
    std::vector<RingVec> rows_;
    std::size_t cols_ = 0;
};

// |R|^n, or BudgetExceeded if it exceeds `budget`.
std::uint64_t checked_power(std::uint64_t base, std::size_t exponent, std::uint64_t budget);

// Visits every vector of R^n once, odometer order with the last coordinate
// fastest (and within a coordinate the last factor fastest). The visitor
// returns false to stop early.
void for_each_vector(const RingSpec &spec, std::size_t n,
                     const std::function<bool(const RingVec &)> &visit,
                     std::uint64_t budget = kDefaultBudget);

std::vector<RingVec> enumerate_vectors(const RingSpec &spec, std::size_t n,
                                       std::uint64_t budget = kDefaultBudget);

} // namespace ringpcs
