#pragma once

// Dense matrices over Z_t and the Howell normal form.
//
// The Howell form of A is the unique row-echelon matrix H with span(H) =
// span(A) such that
//   * every pivot divides t and entries above a pivot p lie in [0, p),
//   * for every k, the rows of span(A) that vanish on the first k columns
//     are spanned by the rows of H that vanish there.
// The second property makes membership a single reduction pass and lets
// kernels be read off an augmented matrix.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ringpcs {

class ZtMatrix {
public:
    ZtMatrix(std::int64_t modulus, std::size_t rows, std::size_t cols);

    std::int64_t modulus() const { return modulus_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::int64_t &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    std::span<const std::int64_t> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }
    void append_row(std::span<const std::int64_t> values);
    void swap_rows(std::size_t a, std::size_t b);
    bool row_is_zero(std::size_t i) const;

    ZtMatrix transposed() const;

    friend bool operator==(const ZtMatrix &, const ZtMatrix &) = default;

private:
    std::int64_t modulus_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::int64_t> data_;
};

// Returns g = gcd(a, b) >= 0 together with s, u such that s*a + u*b = g.
struct ExtendedGcd {
    std::int64_t g, s, u;
};
ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b);

// A unit c of Z_t with c*a = gcd(a, t) (mod t). For a = 0 returns 1.
std::int64_t unit_normalizer(std::int64_t a, std::int64_t t);

// Canonical Howell form with zero rows removed. Pivot ties are resolved by
// taking the leftmost column and the gcd-normalised pivot value.
ZtMatrix howell_form(const ZtMatrix &a);

// Column index of the first nonzero entry of each row of a Howell form.
std::vector<std::size_t> pivot_columns(const ZtMatrix &howell);

// |span| for a matrix in Howell form: product over rows of t / pivot.
std::uint64_t howell_span_size(const ZtMatrix &howell);

// Reduces x against a Howell form; returns the remainder, which is zero
// exactly when x lies in the row span.
std::vector<std::int64_t> howell_reduce(const ZtMatrix &howell, std::span<const std::int64_t> x);

// Howell form of {y in Z_t^cols : A y^T = 0}.
ZtMatrix right_kernel(const ZtMatrix &a);

// Solves r * A = x for the row coefficient vector r, or nullopt when x is
// not in the row span. Built once per matrix and reused for many targets.
class RowSolver {
public:
    explicit RowSolver(const ZtMatrix &a);

    std::optional<std::vector<std::int64_t>> solve(std::span<const std::int64_t> x) const;

private:
    std::size_t width_;  // columns of A
    std::size_t height_; // rows of A
    ZtMatrix augmented_; // Howell form of [A | I]
};

} // namespace ringpcs
