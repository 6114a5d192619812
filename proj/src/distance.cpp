#include "ringpcs/distance.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace ringpcs {

namespace {

// Odometer step over [0, radix)^k, last digit fastest; false on wrap-around.
bool advance(std::vector<std::size_t> &digits, std::size_t radix) {
    for (std::size_t p = digits.size(); p-- > 0;) {
        if (++digits[p] < radix) return true;
        digits[p] = 0;
    }
    return false;
}

} // namespace

SyndromeSet::SyndromeSet(const std::vector<RingVec> &elements) : set_(elements.begin(), elements.end()) {}

std::vector<RingVec> SyndromeSet::elements() const {
    std::vector<RingVec> out(set_.begin(), set_.end());
    std::sort(out.begin(), out.end());
    return out;
}

SyndromeSet sdiff(const ParityCheckSystem &pcs) {
    const auto &spec = pcs.spec();
    const auto &cols = pcs.syndrome_columns();
    std::vector<RingVec> diffs{spec.zero_vector(pcs.rows())};
    for (std::size_t l = 0; l < cols.size(); ++l)
        for (std::size_t k = 0; k < l; ++k) diffs.push_back(spec.sub(cols[l], cols[k]));
    return SyndromeSet(diffs);
}

bool for_each_weight_shell(const RingSpec &spec, std::size_t n, std::size_t w,
                           const std::function<bool(const RingVec &)> &visit) {
    if (w > n) return true;
    if (w == 0) return visit(spec.zero_vector(n));
    checked_power(spec.cardinality(), w, kDefaultBudget);
    std::vector<RingElem> nonzero;
    for (std::uint64_t idx = 1; idx < spec.cardinality(); ++idx) nonzero.push_back(spec.element_at(idx));

    std::vector<std::size_t> support(w);
    for (std::size_t i = 0; i < w; ++i) support[i] = i;
    while (true) {
        std::vector<std::size_t> value(w, 0);
        do {
            RingVec x = spec.zero_vector(n);
            for (std::size_t i = 0; i < w; ++i) x.set(support[i], nonzero[value[i]]);
            if (!visit(x)) return false;
        } while (advance(value, nonzero.size()));
        // next w-subset of [0, n) in lexicographic order
        std::size_t i = w;
        while (i > 0 && support[i - 1] == n - w + i - 1) --i;
        if (i == 0) return true;
        ++support[i - 1];
        for (std::size_t k = i; k < w; ++k) support[k] = support[k - 1] + 1;
    }
}

MinDistance min_distance(const ParityCheckSystem &pcs) {
    if (pcs.code_size() < 2) throw DegenerateCode("minimum distance is undefined for a one-word code");
    const SyndromeSet targets = sdiff(pcs);
    for (std::size_t w = 1; w <= pcs.length(); ++w) {
        std::map<RingVec, RingVec> first_by_syndrome;
        std::optional<MinDistanceWitness> first;
        for_each_weight_shell(pcs.spec(), pcs.length(), w, [&](const RingVec &x) {
            RingVec sigma = pcs.syndrome(x);
            if (!targets.contains(sigma)) return true;
            if (!first) first = MinDistanceWitness{x, sigma};
            first_by_syndrome.emplace(std::move(sigma), x);
            return true;
        });
        if (first) {
            MinDistance out;
            out.distance = w;
            out.witness = *first;
            for (auto &[sigma, x] : first_by_syndrome) out.witnesses.push_back({x, sigma});
            return out;
        }
    }
    throw InternalInconsistency("no codeword pair found although |C| >= 2");
}

DecodeResult decode(const ParityCheckSystem &pcs, const RingVec &received, std::optional<std::size_t> distance) {
    const auto &spec = pcs.spec();
    spec.check(received, pcs.length());
    std::size_t radius = pcs.length();
    if (pcs.code_size() >= 2) {
        const std::size_t d = distance ? *distance : min_distance(pcs).distance;
        radius = d == 0 ? 0 : (d - 1) / 2;
    }
    const RingVec sigma = pcs.syndrome(received);
    std::optional<DecodeResult> result;
    for (std::size_t w = 0; w <= radius && !result; ++w) {
        for_each_weight_shell(spec, pcs.length(), w, [&](const RingVec &y) {
            auto l = pcs.column_index(spec.sub(sigma, pcs.syndrome(y)));
            if (!l) return true;
            result = DecodeResult{spec.sub(received, y), *l, y, w};
            return false;
        });
    }
    if (!result)
        throw BeyondRadius("no codeword within distance " + std::to_string(radius) + " of " + spec.format(received));
    return *result;
}

} // namespace ringpcs
