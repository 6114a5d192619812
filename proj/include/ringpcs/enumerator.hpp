#pragma once

// Distance and weight enumerators.
//
// Polynomials are homogeneous of degree n in (x, y); coefficient i belongs to
// the monomial x^(n-i) y^i. The distance distribution of a code follows from
// its parity check system by
//
//   D(C; x, y) = |R|^-n N((H|S); x + (|R|-1) y, x - y),
//   N((H|S); x, y) = sum_{h in <rows(H)>} |delta_C^(h)|^2 x^(n-wt h) y^(wt h).

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ringpcs/errors.hpp"
#include "ringpcs/fourier.hpp"
#include "ringpcs/pcs.hpp"

namespace ringpcs {

class NonIntegerCoefficient : public Error {
public:
    using Error::Error;
};

class NotLinear : public Error {
public:
    using Error::Error;
};

struct EnumeratorPoly {
    std::vector<std::int64_t> coefficients; // size n + 1

    std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
    std::int64_t total() const;
    std::complex<double> evaluate(std::complex<double> x, std::complex<double> y) const;
    // e.g. "216x^4 + 6480x^2y^2 + 17280xy^3 + 22680y^4"
    std::string to_string() const;

    friend bool operator==(const EnumeratorPoly &, const EnumeratorPoly &) = default;
};

// N((H|S); x, y) with each weight bin kept exactly. bins[w] is
// sum_{h : wt h = w} |sum_j eps(S_h(j))|^2, and the real coefficient of bin w
// is scale^2 * bins[w] with scale = |D_C| = |R|^n / |<rows(H)>|.
struct PcsEnumerator {
    std::size_t length = 0;
    std::int64_t scale = 1;
    std::vector<ExponentSum> bins;
    std::vector<std::size_t> bin_sizes; // number of h per weight

    long double coefficient(std::size_t w) const;
};

PcsEnumerator pcs_enumerator_poly(const ParityCheckSystem &pcs, std::uint64_t budget = kDefaultBudget);

// sum_w a_w (x + (q-1) y)^(n-w) (x - y)^w, divided exactly by `divisor`.
// Throws NonIntegerCoefficient when a coefficient is not divisible.
EnumeratorPoly macwilliams_transform(const std::vector<std::int64_t> &coefficients, std::uint64_t q,
                                     std::int64_t divisor);

// D_i(C) = number of ordered codeword pairs at distance i.
EnumeratorPoly distance_distribution(const ParityCheckSystem &pcs, std::uint64_t budget = kDefaultBudget);

// Weight enumerator of { x in <rows(H)> : S_x = 0 }, i.e. of the x with
// x . c = 0 for every codeword. For a linear code this is C^perp.
EnumeratorPoly dual_weight_enumerator(const ParityCheckSystem &pcs, std::uint64_t budget = kDefaultBudget);

// W(C) for a linear code, computed as D(C)/|C| and cross-checked against
// the MacWilliams transform of W(C^perp). Throws NotLinear otherwise.
EnumeratorPoly weight_enumerator_linear(const ParityCheckSystem &pcs, std::uint64_t budget = kDefaultBudget);

} // namespace ringpcs
