#include "ringpcs/submodule.hpp"

#include <string>

namespace ringpcs {

namespace {

RingVec lift(const RingSpec &spec, std::span<const std::int64_t> residues, std::size_t f) {
    RingVec x = spec.zero_vector(residues.size());
    for (std::size_t i = 0; i < residues.size(); ++i) x.residue(i, f) = residues[i];
    return x;
}

std::vector<std::int64_t> project(const RingVec &x, std::size_t f) {
    std::vector<std::int64_t> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x.residue(i, f);
    return out;
}

} // namespace

ZtMatrix factor_matrix(const RingSpec &spec, const std::vector<RingVec> &rows, std::size_t width, std::size_t f) {
    ZtMatrix a(spec.modulus(f), rows.size(), width);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        spec.check(rows[i], width);
        for (std::size_t j = 0; j < width; ++j) a(i, j) = rows[i].residue(j, f);
    }
    return a;
}

Submodule::Submodule(RingSpec spec, std::size_t n, std::vector<RingVec> generators, std::vector<ZtMatrix> canonical)
    : spec_(std::move(spec)), n_(n), generators_(std::move(generators)), canonical_(std::move(canonical)),
      cardinality_(1) {
    for (const auto &h : canonical_) {
        const std::uint64_t part = howell_span_size(h);
        if (cardinality_ > UINT64_MAX / part) throw std::overflow_error("submodule cardinality overflows 64 bits");
        cardinality_ *= part;
    }
}

Submodule Submodule::from_generators(const RingSpec &spec, std::size_t n, std::vector<RingVec> generators) {
    std::vector<ZtMatrix> canonical;
    canonical.reserve(spec.arity());
    for (std::size_t f = 0; f < spec.arity(); ++f)
        canonical.push_back(howell_form(factor_matrix(spec, generators, n, f)));
    return Submodule(spec, n, std::move(generators), std::move(canonical));
}

Submodule Submodule::from_canonical(const RingSpec &spec, std::size_t n, std::vector<ZtMatrix> canonical) {
    Submodule d(spec, n, {}, std::move(canonical));
    d.generators_ = d.canonical_generators();
    return d;
}

Submodule Submodule::trivial(const RingSpec &spec, std::size_t n) { return from_generators(spec, n, {}); }

Submodule Submodule::full(const RingSpec &spec, std::size_t n) {
    std::vector<RingVec> units;
    for (std::size_t i = 0; i < n; ++i) {
        RingVec e = spec.zero_vector(n);
        e.set(i, spec.one());
        units.push_back(std::move(e));
    }
    return from_generators(spec, n, std::move(units));
}

std::vector<RingVec> Submodule::canonical_generators() const {
    std::vector<RingVec> out;
    for (std::size_t f = 0; f < canonical_.size(); ++f)
        for (std::size_t i = 0; i < canonical_[f].rows(); ++i) out.push_back(lift(spec_, canonical_[f].row(i), f));
    return out;
}

bool Submodule::contains(const RingVec &x) const {
    spec_.check(x, n_);
    for (std::size_t f = 0; f < canonical_.size(); ++f) {
        for (auto v : howell_reduce(canonical_[f], project(x, f)))
            if (v != 0) return false;
    }
    return true;
}

bool Submodule::contains(const Submodule &other) const {
    if (!(other.spec_ == spec_) || other.n_ != n_) throw RingMismatch("submodules live in different ambient modules");
    for (const auto &g : other.canonical_generators())
        if (!contains(g)) return false;
    return true;
}

Submodule Submodule::annihilator() const {
    std::vector<ZtMatrix> dual;
    dual.reserve(canonical_.size());
    for (const auto &h : canonical_) dual.push_back(right_kernel(h));
    return from_canonical(spec_, n_, std::move(dual));
}

void Submodule::for_each(const std::function<void(const RingVec &)> &visit, std::uint64_t budget) const {
    if (cardinality_ > budget)
        throw BudgetExceeded("submodule of size " + std::to_string(cardinality_) + " exceeds budget " +
                             std::to_string(budget));
    struct Basis {
        std::size_t factor;
        std::vector<std::int64_t> row;
        std::int64_t order;
    };
    std::vector<Basis> basis;
    for (std::size_t f = 0; f < canonical_.size(); ++f) {
        const auto pivots = pivot_columns(canonical_[f]);
        for (std::size_t i = 0; i < canonical_[f].rows(); ++i) {
            const auto r = canonical_[f].row(i);
            basis.push_back({f, {r.begin(), r.end()}, spec_.modulus(f) / r[pivots[i]]});
        }
    }
    std::vector<std::int64_t> coeff(basis.size(), 0);
    while (true) {
        RingVec x = spec_.zero_vector(n_);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (coeff[b] == 0) continue;
            const std::size_t f = basis[b].factor;
            const std::int64_t t = spec_.modulus(f);
            for (std::size_t i = 0; i < n_; ++i)
                x.residue(i, f) = (x.residue(i, f) + coeff[b] * basis[b].row[i]) % t;
        }
        visit(x);
        std::size_t b = basis.size();
        while (b > 0) {
            --b;
            if (++coeff[b] < basis[b].order) break;
            coeff[b] = 0;
            if (b == 0) return;
        }
        if (basis.empty()) return;
    }
}

std::vector<RingVec> Submodule::elements(std::uint64_t budget) const {
    std::vector<RingVec> out;
    for_each([&](const RingVec &x) { out.push_back(x); }, budget);
    return out;
}

Submodule syzygies(const RingSpec &spec, const std::vector<RingVec> &rows, std::size_t n) {
    const std::size_t m = rows.size();
    std::vector<RingVec> gens;
    for (std::size_t f = 0; f < spec.arity(); ++f) {
        // r G = 0  <=>  G^T r^T = 0
        const ZtMatrix k = right_kernel(factor_matrix(spec, rows, n, f).transposed());
        for (std::size_t i = 0; i < k.rows(); ++i) gens.push_back(lift(spec, k.row(i), f));
    }
    return Submodule::from_generators(spec, m, std::move(gens));
}

LeftSolver::LeftSolver(const RingSpec &spec, std::vector<RingVec> rows, std::size_t n)
    : spec_(spec), m_(rows.size()), n_(n) {
    factors_.reserve(spec.arity());
    for (std::size_t f = 0; f < spec.arity(); ++f) factors_.emplace_back(factor_matrix(spec, rows, n, f));
}

std::optional<RingVec> LeftSolver::solve(const RingVec &x) const {
    spec_.check(x, n_);
    RingVec r = spec_.zero_vector(m_);
    for (std::size_t f = 0; f < factors_.size(); ++f) {
        auto part = factors_[f].solve(project(x, f));
        if (!part) return std::nullopt;
        for (std::size_t i = 0; i < m_; ++i) r.residue(i, f) = (*part)[i];
    }
    return r;
}

std::optional<RingVec> solve_left(const RingSpec &spec, const std::vector<RingVec> &rows, std::size_t n,
                                  const RingVec &x) {
    return LeftSolver(spec, rows, n).solve(x);
}

std::optional<RingVec> solve_right(const RingSpec &spec, const RingMatrix &h, const RingVec &b) {
    spec.check(b, h.rows());
    return LeftSolver(spec, h.columns(), h.rows()).solve(b);
}

} // namespace ringpcs
