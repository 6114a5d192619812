#pragma once

// Characters of R^n and Fourier coefficients of code indicators.
//
// The generating character is fixed to the product of the canonical
// characters of the factors, eps(y) = prod_f exp(2 pi i y_f / t_f), which in
// terms of a primitive L-th root z (L = lcm t_f) reads z^(sum_f y_f L/t_f).
// Character values are therefore carried as exponents mod L, and sums of
// them as ExponentSum: integer multiplicities per power of z.

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ringpcs/pcs.hpp"
#include "ringpcs/ring.hpp"

namespace ringpcs {

// sum_k counts[k] z^k with z = exp(2 pi i / order).
class ExponentSum {
public:
    explicit ExponentSum(std::int64_t order);
    static ExponentSum term(std::int64_t order, std::int64_t exponent, std::int64_t count = 1);

    std::int64_t order() const { return static_cast<std::int64_t>(counts_.size()); }
    const std::vector<std::int64_t> &counts() const { return counts_; }
    std::int64_t count(std::int64_t exponent) const;
    void add_term(std::int64_t exponent, std::int64_t count = 1);
    bool empty() const; // all counts zero

    ExponentSum &operator+=(const ExponentSum &other);
    ExponentSum &operator-=(const ExponentSum &other);
    ExponentSum operator-() const;
    // Cyclic convolution of the counts.
    ExponentSum operator*(const ExponentSum &other) const;
    ExponentSum scaled(std::int64_t factor) const;
    // Complex conjugate: exponents negate mod order.
    ExponentSum conj() const;

    std::complex<long double> evaluate() const;
    bool is_numerically_zero(long double tolerance = 1e-9) const;

    // e.g. "72*z^0 + 72*z^1 + 72*z^5"
    std::string to_string() const;

    friend ExponentSum operator+(ExponentSum a, const ExponentSum &b) { return a += b; }
    friend ExponentSum operator-(ExponentSum a, const ExponentSum &b) { return a -= b; }
    friend bool operator==(const ExponentSum &, const ExponentSum &) = default;

private:
    std::vector<std::int64_t> counts_;
};

class GeneratingCharacter {
public:
    explicit GeneratingCharacter(const RingSpec &spec);

    std::int64_t order() const { return order_; }
    // Exponent k with eps(a) = z^k.
    std::int64_t exponent(const RingElem &a) const;

private:
    RingSpec spec_;
    std::int64_t order_;
    std::vector<std::int64_t> weights_; // L / t_f
};

GeneratingCharacter generating_character(const RingSpec &spec);

// chi_x(y) = eps(x . y) as an exponent mod L.
std::int64_t character_value(const RingSpec &spec, const RingVec &x, const RingVec &y);

// delta_C^(x) from a coset decomposition:
// |D_C| sum_j eps(-x . d_j) when x in D_C^perp, the empty sum otherwise.
ExponentSum fourier_coeff_coset(const CodePresentation &presentation, const RingVec &x);

struct RowCombination {
    RingVec coefficients; // r with x = sum r_i H_row(i)
    RingVec s_image;      // S_x = sum r_i S_row(i), length s
};

std::optional<RowCombination> row_combination(const ParityCheckSystem &pcs, const RingVec &x);

// delta_C^(x) from (H|S):
// |R|^n / |<rows(H)>| sum_j eps(-S_x(j)) when x in <rows(H)>, empty otherwise.
ExponentSum fourier_coeff_pcs(const ParityCheckSystem &pcs, const RingVec &x);

using RingFunction = std::function<std::complex<double>(const RingVec &)>;

// f^(x) = sum_{y in R^n} f(y) chi_x(-y), by direct summation.
std::complex<double> naive_transform(const RingSpec &spec, std::size_t n, const RingFunction &f, const RingVec &x,
                                     std::uint64_t budget = kDefaultBudget);

// Right-hand side of the Poisson summation formula for codes:
// |R|^-n sum_{x in D_C^perp} f^(x) delta_{-C}^(x). Without `f_hat` the
// transform is computed naively (one pass over R^n per dual element).
std::complex<double> poisson_sum(const CodePresentation &presentation, const RingFunction &f,
                                 const std::optional<RingFunction> &f_hat = std::nullopt,
                                 std::uint64_t budget = kDefaultBudget);

} // namespace ringpcs
