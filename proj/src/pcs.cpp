#include "ringpcs/pcs.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ringpcs {

ConditionIViolation::ConditionIViolation(std::size_t row, std::size_t column)
    : PcsViolation("condition (i) violated: S entry (" + std::to_string(row) + "," + std::to_string(column) +
                   ") is not in the ideal generated by row " + std::to_string(row) + " of H"),
      row_(row), column_(column) {}

ConditionIIViolation::ConditionIIViolation(std::size_t first, std::size_t second)
    : PcsViolation("condition (ii) violated: columns " + std::to_string(first) + " and " + std::to_string(second) +
                   " of S are equal"),
      first_(first), second_(second) {}

ConditionIIIViolation::ConditionIIIViolation(RingVec relation, std::string description)
    : PcsViolation(std::move(description)), relation_(std::move(relation)) {}

CodePresentation::CodePresentation(Submodule partial_kernel, std::vector<RingVec> representatives)
    : kernel_(std::move(partial_kernel)), reps_(std::move(representatives)) {
    if (reps_.empty()) throw InvalidPresentation("a code needs at least one coset representative");
    const auto &spec = kernel_.spec();
    for (const auto &d : reps_) {
        try {
            spec.check(d, length());
        } catch (const RingMismatch &e) {
            throw InvalidPresentation(std::string("bad coset representative: ") + e.what());
        }
    }
    for (std::size_t i = 0; i < reps_.size(); ++i)
        for (std::size_t j = i + 1; j < reps_.size(); ++j)
            if (kernel_.contains(spec.sub(reps_[i], reps_[j])))
                throw InvalidPresentation("representatives " + std::to_string(i) + " and " + std::to_string(j) +
                                          " lie in the same coset");
}

std::optional<std::size_t> CodePresentation::coset_of(const RingVec &x) const {
    for (std::size_t j = 0; j < reps_.size(); ++j)
        if (kernel_.contains(spec().sub(x, reps_[j]))) return j;
    return std::nullopt;
}

CodePresentation CodePresentation::negated() const {
    std::vector<RingVec> reps;
    reps.reserve(reps_.size());
    for (const auto &d : reps_) reps.push_back(spec().neg(d));
    return CodePresentation(kernel_, std::move(reps));
}

ParityCheckSystem::ParityCheckSystem(RingSpec spec, RingMatrix h, RingMatrix s)
    : spec_(std::move(spec)), h_(std::move(h)), s_(std::move(s)), columns_(s_.columns()),
      row_module_(Submodule::from_generators(spec_, h_.cols(), h_.row_vectors())),
      partial_kernel_(row_module_.annihilator()), column_solver_(spec_, h_.columns(), h_.rows()),
      row_solver_(spec_, h_.row_vectors(), h_.cols()) {
    for (std::size_t j = 0; j < columns_.size(); ++j) column_lookup_.emplace(columns_[j], j);
}

std::optional<std::size_t> ParityCheckSystem::column_index(const RingVec &syndrome) const {
    auto it = column_lookup_.find(syndrome);
    if (it == column_lookup_.end()) return std::nullopt;
    return it->second;
}

ParityCheckSystem ParityCheckSystem::validate(const RingSpec &spec, RingMatrix h, RingMatrix s) {
    if (h.rows() == 0) throw RingMismatch("H needs at least one row");
    if (h.cols() == 0) throw RingMismatch("H needs at least one column");
    if (s.rows() != h.rows())
        throw RingMismatch("H has " + std::to_string(h.rows()) + " rows but S has " + std::to_string(s.rows()));
    if (s.cols() == 0) throw RingMismatch("S needs at least one column");
    for (std::size_t i = 0; i < h.rows(); ++i) {
        spec.check(h.row(i), h.cols());
        spec.check(s.row(i), s.cols());
    }

    // (i): per factor the ideal generated by row i is (gcd(row entries, t)).
    for (std::size_t i = 0; i < h.rows(); ++i) {
        for (std::size_t f = 0; f < spec.arity(); ++f) {
            const std::int64_t t = spec.modulus(f);
            std::int64_t g = t;
            for (std::size_t k = 0; k < h.cols(); ++k) g = std::gcd(g, h.row(i).residue(k, f));
            for (std::size_t j = 0; j < s.cols(); ++j)
                if (s.row(i).residue(j, f) % g != 0) throw ConditionIViolation(i, j);
        }
    }

    // (ii)
    const auto columns = s.columns();
    std::unordered_map<RingVec, std::size_t, RingVecHash> seen;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        auto [it, inserted] = seen.emplace(columns[j], j);
        if (!inserted) throw ConditionIIViolation(it->second, j);
    }

    // (iii): both sides are linear in r, so syzygy generators suffice.
    const Submodule relations = syzygies(spec, h.row_vectors(), h.cols());
    for (const auto &r : relations.generators()) {
        RingVec image = spec.zero_vector(s.cols());
        for (std::size_t i = 0; i < s.rows(); ++i) image = spec.add(image, spec.scale(r.at(i), s.row(i)));
        if (!image.is_zero())
            throw ConditionIIIViolation(r, "condition (iii) violated: relation " + spec.format(r) +
                                               " among the rows of H maps the rows of S to " + spec.format(image));
    }

    return ParityCheckSystem(spec, std::move(h), std::move(s));
}

ParityCheckSystem code_to_pcs(const CodePresentation &presentation,
                              const std::optional<std::vector<RingVec>> &dual_generators) {
    const auto &spec = presentation.spec();
    const std::size_t n = presentation.length();
    const Submodule dual = presentation.partial_kernel().annihilator();

    std::vector<RingVec> rows;
    if (dual_generators) {
        if (Submodule::from_generators(spec, n, *dual_generators) != dual)
            throw InvalidPresentation("the given rows do not generate the annihilator of the partial kernel");
        rows = *dual_generators;
    } else {
        rows = dual.canonical_generators();
    }
    if (rows.empty()) rows.push_back(spec.zero_vector(n));

    std::vector<RingVec> s_rows;
    s_rows.reserve(rows.size());
    for (const auto &h : rows) {
        RingVec srow = spec.zero_vector(presentation.coset_count());
        for (std::size_t j = 0; j < presentation.coset_count(); ++j)
            srow.set(j, spec.dot(h, presentation.representatives()[j]));
        s_rows.push_back(std::move(srow));
    }
    const std::size_t s = presentation.coset_count();
    try {
        return ParityCheckSystem::validate(spec, RingMatrix(std::move(rows), n), RingMatrix(std::move(s_rows), s));
    } catch (const PcsViolation &e) {
        throw InternalInconsistency(std::string("code_to_pcs produced an invalid system: ") + e.what());
    }
}

CodePresentation pcs_to_code(const ParityCheckSystem &pcs) {
    std::vector<RingVec> reps;
    reps.reserve(pcs.coset_count());
    for (std::size_t j = 0; j < pcs.coset_count(); ++j) {
        auto d = pcs.preimage(pcs.syndrome_column(j));
        if (!d) throw InternalInconsistency("column " + std::to_string(j) + " of S has no preimage under H");
        reps.push_back(std::move(*d));
    }
    return CodePresentation(pcs.partial_kernel(), std::move(reps));
}

std::optional<std::size_t> member(const ParityCheckSystem &pcs, const RingVec &x) {
    return pcs.column_index(pcs.syndrome(x));
}

std::vector<RingVec> kernel_syndromes(const ParityCheckSystem &pcs) {
    // r = 1 forces sigma + col(S) = col(S), so sigma = S_j - S_0 for some j.
    // The translations fixing col(S) form a group, and the additive group
    // of R is generated by the idempotents e_f, so testing e_f sigma for
    // every factor f covers all r.
    const auto &spec = pcs.spec();
    const auto &cols = pcs.syndrome_columns();
    auto translation_fixes = [&](const RingVec &shift) {
        for (const auto &c : cols)
            if (!pcs.column_index(spec.add(c, shift))) return false;
        return true;
    };
    std::vector<RingVec> out;
    for (const auto &c : cols) {
        const RingVec sigma = spec.sub(c, cols.front());
        bool fixes = true;
        for (std::size_t f = 0; f < spec.arity() && fixes; ++f) {
            RingVec part = spec.zero_vector(sigma.size());
            for (std::size_t i = 0; i < sigma.size(); ++i) part.residue(i, f) = sigma.residue(i, f);
            fixes = translation_fixes(part);
        }
        if (fixes) out.push_back(sigma);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Submodule kernel(const ParityCheckSystem &pcs) {
    std::vector<RingVec> gens = pcs.partial_kernel().canonical_generators();
    for (const auto &sigma : kernel_syndromes(pcs)) {
        auto x = pcs.preimage(sigma);
        if (!x) throw InternalInconsistency("kernel syndrome without preimage");
        gens.push_back(std::move(*x));
    }
    return Submodule::from_generators(pcs.spec(), pcs.length(), std::move(gens));
}

bool is_linear(const ParityCheckSystem &pcs) {
    if (!pcs.column_index(pcs.spec().zero_vector(pcs.rows()))) return false;
    return kernel_syndromes(pcs).size() == pcs.coset_count();
}

} // namespace ringpcs
