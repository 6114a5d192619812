#pragma once

// Submodules of R^n in canonical form.
//
// Since R = Z_t1 x ... x Z_tk has the idempotents e_f, every submodule D
// splits as the direct sum of its factor projections D_f <= Z_tf^n. Each D_f
// is kept as a Howell form, which makes equality a comparison of canonical
// matrices and gives |D| = prod_f prod_rows t_f / pivot.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ringpcs/ring.hpp"
#include "ringpcs/zt_matrix.hpp"

namespace ringpcs {

class Submodule {
public:
    static Submodule from_generators(const RingSpec &spec, std::size_t n, std::vector<RingVec> generators);
    static Submodule trivial(const RingSpec &spec, std::size_t n);
    static Submodule full(const RingSpec &spec, std::size_t n);

    const RingSpec &spec() const { return spec_; }
    std::size_t ambient_length() const { return n_; }
    // The generators as supplied (canonical generators for derived modules).
    const std::vector<RingVec> &generators() const { return generators_; }
    // One Howell form per ring factor.
    const std::vector<ZtMatrix> &canonical() const { return canonical_; }
    // Howell rows of every factor lifted into R^n (zero on the other factors).
    std::vector<RingVec> canonical_generators() const;
    std::uint64_t cardinality() const { return cardinality_; }

    bool contains(const RingVec &x) const;
    bool contains(const Submodule &other) const;

    // D^perp = { y : x . y = 0 for all x in D }.
    Submodule annihilator() const;

    // Every element exactly once. Order: odometer over the Howell
    // coefficients, factors in order, last row fastest.
    void for_each(const std::function<void(const RingVec &)> &visit, std::uint64_t budget = kDefaultBudget) const;
    std::vector<RingVec> elements(std::uint64_t budget = kDefaultBudget) const;

    friend bool operator==(const Submodule &a, const Submodule &b) {
        return a.spec_ == b.spec_ && a.n_ == b.n_ && a.canonical_ == b.canonical_;
    }

private:
    Submodule(RingSpec spec, std::size_t n, std::vector<RingVec> generators, std::vector<ZtMatrix> canonical);
    static Submodule from_canonical(const RingSpec &spec, std::size_t n, std::vector<ZtMatrix> canonical);

    RingSpec spec_;
    std::size_t n_;
    std::vector<RingVec> generators_;
    std::vector<ZtMatrix> canonical_;
    std::uint64_t cardinality_;
};

// Factor-f residues of the given rows as a matrix over Z_tf.
ZtMatrix factor_matrix(const RingSpec &spec, const std::vector<RingVec> &rows, std::size_t width, std::size_t f);

// { r in R^m : sum_i r_i rows_i = 0 }, with m = rows.size().
Submodule syzygies(const RingSpec &spec, const std::vector<RingVec> &rows, std::size_t n);

// Solves sum_i r_i rows_i = x for r in R^m. Precomputes one Howell form per
// factor, so reuse it when solving against the same rows repeatedly.
class LeftSolver {
public:
    LeftSolver(const RingSpec &spec, std::vector<RingVec> rows, std::size_t n);

    std::optional<RingVec> solve(const RingVec &x) const;
    std::size_t rows() const { return m_; }
    std::size_t width() const { return n_; }

private:
    RingSpec spec_;
    std::size_t m_;
    std::size_t n_;
    std::vector<RowSolver> factors_;
};

std::optional<RingVec> solve_left(const RingSpec &spec, const std::vector<RingVec> &rows, std::size_t n,
                                  const RingVec &x);

// One x with H x^T = b, or nullopt. Solves against the columns of H.
std::optional<RingVec> solve_right(const RingSpec &spec, const RingMatrix &h, const RingVec &b);

} // namespace ringpcs
