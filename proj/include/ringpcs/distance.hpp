#pragma once

// Minimum distance and nearest-neighbour decoding from a parity check system.
//
// d(C) is the least weight of a nonzero x whose syndrome lies in
// S^diff = { S_col(l) - S_col(k) : k < l } u { 0 }. Both searches walk weight
// shells in increasing order: supports in lexicographic order of index sets,
// nonzero values in odometer order (last coordinate fastest).

#include <cstddef>
#include <optional>
#include <unordered_set>
#include <vector>

#include "ringpcs/errors.hpp"
#include "ringpcs/pcs.hpp"
#include "ringpcs/ring.hpp"

namespace ringpcs {

class DegenerateCode : public Error {
public:
    using Error::Error;
};

// No codeword within floor((d-1)/2) of the received word.
class BeyondRadius : public Error {
public:
    using Error::Error;
};

class SyndromeSet {
public:
    SyndromeSet() = default;
    explicit SyndromeSet(const std::vector<RingVec> &elements);

    bool contains(const RingVec &sigma) const { return set_.count(sigma) != 0; }
    std::size_t size() const { return set_.size(); }
    // Sorted copy of the elements.
    std::vector<RingVec> elements() const;

private:
    std::unordered_set<RingVec, RingVecHash> set_;
};

SyndromeSet sdiff(const ParityCheckSystem &pcs);

struct MinDistanceWitness {
    RingVec word;     // nonzero, weight == distance
    RingVec syndrome; // H word^T, a nonzero element of S^diff
};

struct MinDistance {
    std::size_t distance = 0;
    // First hit in shell order.
    MinDistanceWitness witness;
    // First hit per distinct syndrome at the minimal weight, sorted by syndrome.
    std::vector<MinDistanceWitness> witnesses;
};

// Throws DegenerateCode when |C| = 1.
MinDistance min_distance(const ParityCheckSystem &pcs);

struct DecodeResult {
    RingVec codeword;
    std::size_t coset_index = 0;
    RingVec error_vector; // received - codeword
    std::size_t error_weight = 0;
};

// Unique nearest codeword within floor((d-1)/2), where d is `distance` if
// given and otherwise recomputed. A one-word code decodes every input.
DecodeResult decode(const ParityCheckSystem &pcs, const RingVec &received,
                    std::optional<std::size_t> distance = std::nullopt);

// Visits every vector of weight w in shell order; the visitor returns false
// to stop. Returns false iff the visitor stopped the walk.
bool for_each_weight_shell(const RingSpec &spec, std::size_t n, std::size_t w,
                           const std::function<bool(const RingVec &)> &visit);

} // namespace ringpcs
