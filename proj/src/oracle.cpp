#include "ringpcs/oracle.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ringpcs/distance.hpp"

namespace ringpcs {

namespace {

std::vector<RingElem> all_elements(const RingSpec &spec) {
    std::vector<RingElem> out;
    for (std::uint64_t i = 0; i < spec.cardinality(); ++i) out.push_back(spec.element_at(i));
    return out;
}

void check_pair_budget(const ExplicitCode &code, std::uint64_t budget) {
    const std::uint64_t size = code.size();
    if (size != 0 && size > budget / size)
        throw BudgetExceeded("pairwise scan over " + std::to_string(size) + " words exceeds budget " +
                             std::to_string(budget));
}

} // namespace

ExplicitCode oracle_code_from_pcs(const RingSpec &spec, const RingMatrix &h, const RingMatrix &s,
                                  std::uint64_t budget) {
    const auto columns = s.columns();
    const std::set<RingVec> targets(columns.begin(), columns.end());
    ExplicitCode code{spec, h.cols(), {}};
    for_each_vector(
        spec, h.cols(),
        [&](const RingVec &x) {
            if (targets.count(h.apply(spec, x))) code.words.insert(x);
            return true;
        },
        budget);
    return code;
}

ExplicitCode oracle_code_from_pcs(const ParityCheckSystem &pcs, std::uint64_t budget) {
    return oracle_code_from_pcs(pcs.spec(), pcs.h(), pcs.s(), budget);
}

std::set<RingVec> oracle_span(const RingSpec &spec, std::size_t n, const std::vector<RingVec> &generators,
                              std::uint64_t budget) {
    const auto scalars = all_elements(spec);
    std::set<RingVec> span{spec.zero_vector(n)};
    for (const auto &g : generators) {
        std::set<RingVec> multiples;
        for (const auto &r : scalars) multiples.insert(spec.scale(r, g));
        std::set<RingVec> next;
        for (const auto &v : span)
            for (const auto &m : multiples) {
                next.insert(spec.add(v, m));
                if (next.size() > budget) throw BudgetExceeded("span exceeds budget " + std::to_string(budget));
            }
        span = std::move(next);
    }
    return span;
}

ExplicitCode oracle_code_from_presentation(const RingSpec &spec, std::size_t n,
                                           const std::vector<RingVec> &kernel_generators,
                                           const std::vector<RingVec> &representatives, std::uint64_t budget) {
    const auto d = oracle_span(spec, n, kernel_generators, budget);
    ExplicitCode code{spec, n, {}};
    for (const auto &rep : representatives)
        for (const auto &v : d) code.words.insert(spec.add(rep, v));
    return code;
}

std::size_t oracle_min_distance(const ExplicitCode &code, std::uint64_t budget) {
    if (code.size() < 2) throw DegenerateCode("minimum distance is undefined for a one-word code");
    check_pair_budget(code, budget);
    std::size_t best = code.n;
    for (auto a = code.words.begin(); a != code.words.end(); ++a)
        for (auto b = std::next(a); b != code.words.end(); ++b) best = std::min(best, hamming(*a, *b));
    return best;
}

std::set<RingVec> oracle_kernel(const ExplicitCode &code, std::uint64_t budget) {
    check_pair_budget(code, budget);
    const auto &spec = code.spec;
    const auto scalars = all_elements(spec);
    const RingVec &c0 = *code.words.begin();
    std::set<RingVec> out;
    // r = 1 forces x + c0 in C, so every kernel element is some c - c0.
    for (const auto &c : code.words) {
        const RingVec x = spec.sub(c, c0);
        bool ok = true;
        for (const auto &r : scalars) {
            const RingVec rx = spec.scale(r, x);
            for (const auto &w : code.words)
                if (!code.contains(spec.add(rx, w))) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        if (ok) out.insert(x);
    }
    return out;
}

std::set<RingVec> oracle_annihilator(const RingSpec &spec, std::size_t n, const std::set<RingVec> &d,
                                     std::uint64_t budget) {
    std::set<RingVec> out;
    for_each_vector(
        spec, n,
        [&](const RingVec &y) {
            for (const auto &x : d)
                if (!spec.is_zero(spec.dot(x, y))) return true;
            out.insert(y);
            return true;
        },
        budget);
    return out;
}

std::complex<double> oracle_fourier(const ExplicitCode &code, const RingVec &x) {
    const auto &spec = code.spec;
    std::complex<long double> acc = 0;
    for (const auto &c : code.words) {
        const RingElem p = spec.dot(x, c);
        long double turns = 0;
        for (std::size_t f = 0; f < spec.arity(); ++f)
            turns += static_cast<long double>(p.residues[f]) / static_cast<long double>(spec.modulus(f));
        const long double angle = -2.0L * std::numbers::pi_v<long double> * turns;
        acc += std::complex<long double>(std::cos(angle), std::sin(angle));
    }
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

std::vector<std::int64_t> oracle_distance_distribution(const ExplicitCode &code, std::uint64_t budget) {
    check_pair_budget(code, budget);
    std::vector<std::int64_t> out(code.n + 1, 0);
    for (const auto &a : code.words)
        for (const auto &b : code.words) ++out[hamming(a, b)];
    return out;
}

std::vector<std::int64_t> oracle_weight_distribution(const ExplicitCode &code) {
    std::vector<std::int64_t> out(code.n + 1, 0);
    for (const auto &c : code.words) ++out[weight(c)];
    return out;
}

bool oracle_is_linear(const ExplicitCode &code) {
    const auto &spec = code.spec;
    const auto scalars = all_elements(spec);
    for (const auto &a : code.words) {
        for (const auto &r : scalars)
            if (!code.contains(spec.scale(r, a))) return false;
        for (const auto &b : code.words)
            if (!code.contains(spec.add(a, b))) return false;
    }
    return true;
}

std::set<RingVec> oracle_syzygies(const RingSpec &spec, const std::vector<RingVec> &rows, std::size_t n,
                                  std::uint64_t budget) {
    std::set<RingVec> out;
    for_each_vector(
        spec, rows.size(),
        [&](const RingVec &r) {
            RingVec acc = spec.zero_vector(n);
            for (std::size_t i = 0; i < rows.size(); ++i) acc = spec.add(acc, spec.scale(r.at(i), rows[i]));
            if (acc.is_zero()) out.insert(r);
            return true;
        },
        budget);
    return out;
}

std::optional<RingVec> oracle_solve_right(const RingSpec &spec, const RingMatrix &h, const RingVec &b,
                                          std::uint64_t budget) {
    std::optional<RingVec> out;
    for_each_vector(
        spec, h.cols(),
        [&](const RingVec &x) {
            if (h.apply(spec, x) == b) {
                out = x;
                return false;
            }
            return true;
        },
        budget);
    return out;
}

NearestCodewords oracle_nearest(const ExplicitCode &code, const RingVec &y) {
    NearestCodewords out;
    out.distance = code.n + 1;
    for (const auto &c : code.words) {
        const std::size_t d = hamming(c, y);
        if (d < out.distance) {
            out.distance = d;
            out.codewords.clear();
        }
        if (d == out.distance) out.codewords.push_back(c);
    }
    return out;
}

std::optional<int> oracle_pcs_violation(const RingSpec &spec, const RingMatrix &h, const RingMatrix &s,
                                        std::uint64_t budget) {
    // (i) every s_ij is a value of x -> h_i . x
    for (std::size_t i = 0; i < h.rows(); ++i) {
        std::set<RingElem> image;
        for_each_vector(
            spec, h.cols(),
            [&](const RingVec &x) {
                image.insert(spec.dot(h.row(i), x));
                return true;
            },
            budget);
        for (std::size_t j = 0; j < s.cols(); ++j)
            if (!image.count(s.row(i).at(j))) return 1;
    }
    // (ii) distinct columns
    const auto columns = s.columns();
    if (std::set<RingVec>(columns.begin(), columns.end()).size() != columns.size()) return 2;
    // (iii) every relation among the rows of H annihilates the rows of S
    for (const auto &r : oracle_syzygies(spec, h.row_vectors(), h.cols(), budget)) {
        RingVec acc = spec.zero_vector(s.cols());
        for (std::size_t i = 0; i < s.rows(); ++i) acc = spec.add(acc, spec.scale(r.at(i), s.row(i)));
        if (!acc.is_zero()) return 3;
    }
    return std::nullopt;
}

} // namespace ringpcs
