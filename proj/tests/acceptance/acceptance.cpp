// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "ringpcs/distance.hpp"
#include "ringpcs/enumerator.hpp"
#include "ringpcs/fourier.hpp"
#include "ringpcs/oracle.hpp"
#include "ringpcs/pcs.hpp"
#include "random_instances.hpp"

using namespace ringpcs;
using ringpcs::testing::Random;

namespace {

struct Failure {
    std::string why;
};

void require(bool ok, const std::string &why) {
    if (!ok) throw Failure{why};
}

const RingSpec Z6 = RingSpec::parse("Z6");

RingMatrix mat(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    std::vector<RingVec> v;
    std::size_t cols = 0;
    for (auto r : rows) {
        v.push_back(Z6.vector(r));
        cols = r.size();
    }
    return RingMatrix(std::move(v), cols);
}

ParityCheckSystem golden_pcs() {
    return ParityCheckSystem::validate(Z6, mat({{1, 1, 3, 5}, {0, 4, 2, 2}}), mat({{0, 1, 5}, {0, 2, 4}}));
}

std::string show(const RingSpec &spec, const RingVec &x) { return spec.format(x); }

void criterion1() {
    golden_pcs();
    bool condition_i = false;
    try {
        ParityCheckSystem::validate(Z6, mat({{1, 1, 3, 5}, {0, 4, 2, 2}}), mat({{0, 1, 5, 1}, {0, 2, 4, 1}}));
    } catch (const ConditionIViolation &e) {
        condition_i = e.row() == 1 && e.column() == 3;
    }
    require(condition_i, "appending column (1,1) did not raise ConditionIViolation at row 2, column 4");
}

void criterion2() {
    const auto d = Submodule::from_generators(Z6, 4, {Z6.vector({2, 1, 1, 0}), Z6.vector({0, 1, 0, 1}),
                                                      Z6.vector({3, 0, 3, 0})});
    const auto dual = d.annihilator();
    const auto expected = Submodule::from_generators(Z6, 4, {Z6.vector({1, 1, 3, 5}), Z6.vector({0, 4, 2, 2})});
    require(dual == expected, "annihilator differs from <(1,1,3,5),(0,4,2,2)>");
    require(d.cardinality() == 72, "|D| = " + std::to_string(d.cardinality()));
    require(dual.cardinality() == 18, "|D^perp| = " + std::to_string(dual.cardinality()));
    require(d.cardinality() * dual.cardinality() == 1296, "|D||D^perp| != 6^4");
    // and against the brute-force annihilator of the enumerated D
    const auto elems = d.elements();
    const auto brute = oracle_annihilator(Z6, 4, std::set<RingVec>(elems.begin(), elems.end()));
    const auto got = dual.elements();
    require(brute == std::set<RingVec>(got.begin(), got.end()), "annihilator differs from brute force");
}

void criterion3() {
    const auto pcs = golden_pcs();
    const auto pres = pcs_to_code(pcs);
    const auto oracle = oracle_code_from_pcs(pcs);
    require(oracle.size() == 216, "oracle code has " + std::to_string(oracle.size()) + " words");
    const std::vector<RingVec> witnesses{Z6.vector({0, 0, 0, 0}), Z6.vector({5, 2, 0, 0}), Z6.vector({4, 1, 0, 0})};
    std::set<RingVec> all;
    std::size_t total = 0;
    const auto d = pres.partial_kernel().elements();
    for (std::size_t j = 0; j < pres.coset_count(); ++j) {
        std::set<RingVec> coset;
        for (const auto &v : d) coset.insert(Z6.add(pres.representatives()[j], v));
        require(coset.count(witnesses[j]) == 1, "coset " + std::to_string(j + 1) + " misses " + show(Z6, witnesses[j]));
        total += coset.size();
        all.insert(coset.begin(), coset.end());
    }
    require(pres.coset_count() == 3, "expected three cosets");
    require(total == all.size(), "cosets overlap");
    require(all == oracle.words, "union of cosets differs from the oracle code");
}

void criterion4() {
    const auto pcs = golden_pcs();
    const auto diffs = sdiff(pcs).elements();
    const std::vector<RingVec> expected{Z6.vector({0, 0}), Z6.vector({1, 2}), Z6.vector({4, 2}), Z6.vector({5, 4})};
    require(diffs == expected, "S^diff mismatch");
    const auto md = min_distance(pcs);
    require(md.distance == 2, "d = " + std::to_string(md.distance));
    bool found = false;
    for (const auto &w : md.witnesses)
        if (w.syndrome == Z6.vector({4, 2})) {
            require(weight(w.word) == 2 && pcs.syndrome(w.word) == w.syndrome, "bad (4,2) witness");
            found = true;
        }
    require(found, "no weight-2 witness with syndrome (4,2)");
    require(pcs.syndrome(Z6.vector({5, 0, 0, 1})) == Z6.vector({4, 2}), "H (5,0,0,1)^T != (4,2)");
}

void criterion5() {
    const auto pcs = golden_pcs();
    const auto pres = pcs_to_code(pcs);
    const auto oracle = oracle_code_from_pcs(pcs);
    const std::vector<std::pair<std::vector<std::int64_t>, double>> table{
        {{0, 0, 0, 0}, 216}, {{4, 2, 2, 4}, 216}, {{2, 4, 4, 2}, 216}, {{1, 1, 3, 5}, 144}, {{5, 5, 3, 1}, 144},
        {{3, 1, 5, 5}, 144}, {{5, 3, 5, 3}, 144}, {{1, 3, 1, 3}, 144}, {{3, 5, 1, 1}, 144}, {{3, 3, 3, 3}, -72},
        {{1, 5, 5, 1}, -72}, {{5, 1, 1, 5}, -72}, {{2, 2, 0, 4}, 0},   {{4, 4, 0, 2}, 0},   {{0, 4, 2, 2}, 0},
        {{2, 0, 2, 0}, 0},   {{0, 2, 4, 4}, 0},   {{4, 0, 4, 0}, 0}};
    for (const auto &[coords, value] : table) {
        RingVec x = Z6.zero_vector(4);
        for (std::size_t i = 0; i < 4; ++i) x.set(i, Z6.element(coords[i]));
        const auto a = fourier_coeff_pcs(pcs, x).evaluate();
        const auto b = fourier_coeff_coset(pres, x).evaluate();
        const auto o = oracle_fourier(oracle, x);
        const std::complex<long double> want(value, 0);
        const std::complex<long double> ol(o.real(), o.imag());
        require(std::abs(a - want) < 1e-9, "pcs form at " + show(Z6, x));
        require(std::abs(b - want) < 1e-9, "coset form at " + show(Z6, x));
        require(std::abs(a - ol) < 1e-9 && std::abs(b - ol) < 1e-9, "oracle disagrees at " + show(Z6, x));
    }
}

void criterion6() {
    const auto pcs = golden_pcs();
    const auto d = distance_distribution(pcs);
    const std::vector<std::int64_t> expected{216, 0, 6480, 17280, 22680};
    require(d.coefficients == expected, "D(C) = " + d.to_string());
    require(oracle_distance_distribution(oracle_code_from_pcs(pcs)) == expected, "oracle histogram differs");
}

std::string criterion7() {
    Random rng(0x5eed0007);
    std::size_t instances = 0, decode_checked = 0, largest = 0, multi_coset = 0;
    for (std::size_t round = 0; instances < 210; ++round) {
        require(round < 5000, "could not draw enough instances");
        const auto &name = ringpcs::testing::property_rings()[round % 7];
        const auto spec = RingSpec::parse(name);
        const std::size_t n = 1 + rng.below(4);
        auto inst = ringpcs::testing::random_presentation(rng, spec, n, 4, 3000);
        if (!inst) continue;
        ++instances;
        const std::string tag = name + " instance " + std::to_string(instances);
        const auto pres = inst->presentation();
        const auto pcs = code_to_pcs(pres);
        const auto ambient = checked_power(spec.cardinality(), n, kDefaultBudget);
        largest = std::max<std::size_t>(largest, inst->code.size());
        if (pres.coset_count() > 1) ++multi_coset;

        // duality
        const auto &d = pres.partial_kernel();
        const auto dual = d.annihilator();
        require(d.cardinality() * dual.cardinality() == ambient, tag + ": |D||D^perp| != |R|^n");
        require(dual.annihilator() == d, tag + ": D^perp^perp != D");

        // round trips
        const auto code = oracle_code_from_pcs(pcs);
        require(code.words == inst->code.words, tag + ": code of (H|S) differs from presentation");
        const auto back = pcs_to_code(pcs);
        const auto back_words = oracle_code_from_presentation(spec, n, back.partial_kernel().canonical_generators(),
                                                              back.representatives());
        require(back_words.words == code.words, tag + ": pcs_to_code changes the code");
        require(oracle_code_from_pcs(code_to_pcs(back)).words == code.words, tag + ": second round trip");

        // membership with coset index
        const auto dset = oracle_span(spec, n, inst->kernel_generators);
        for_each_vector(spec, n, [&](const RingVec &x) {
            std::optional<std::size_t> want;
            for (std::size_t j = 0; j < inst->representatives.size(); ++j)
                if (dset.count(spec.sub(x, inst->representatives[j]))) want = j;
            require(member(pcs, x) == want, tag + ": member wrong at " + show(spec, x));
            return true;
        });

        // distances
        const auto dist = distance_distribution(pcs);
        require(dist.coefficients == oracle_distance_distribution(code), tag + ": distance distribution");
        if (code.size() < 2) continue;
        const auto md = min_distance(pcs);
        require(md.distance == oracle_min_distance(code), tag + ": min distance");
        std::size_t first_positive = 0;
        for (std::size_t i = 1; i < dist.coefficients.size(); ++i)
            if (dist.coefficients[i] > 0) {
                first_positive = i;
                break;
            }
        require(first_positive == md.distance, tag + ": first positive D_i != d");

        // decoding every correctable perturbation of every codeword
        if (code.size() > 500) continue;
        const std::size_t radius = (md.distance - 1) / 2;
        for (const auto &c : code.words)
            for (std::size_t w = 0; w <= radius; ++w)
                for_each_weight_shell(spec, n, w, [&](const RingVec &e) {
                    const RingVec y = spec.add(c, e);
                    const auto near = oracle_nearest(code, y);
                    require(near.codewords.size() == 1 && near.codewords[0] == c, tag + ": oracle not unique");
                    const auto r = decode(pcs, y, md.distance);
                    require(r.codeword == c, tag + ": decode(" + show(spec, y) + ") wrong");
                    ++decode_checked;
                    return true;
                });
    }
    require(decode_checked > 0, "no decoding cases exercised");
    return std::to_string(instances) + " instances, " + std::to_string(multi_coset) + " with s > 1, largest |C| " +
           std::to_string(largest) + ", " + std::to_string(decode_checked) + " decodings";
}

std::size_t criterion8() {
    Random rng(0x5eed0008);
    std::size_t codes = 0;
    for (std::size_t round = 0; codes < 60; ++round) {
        require(round < 5000, "could not draw enough linear codes");
        const auto &name = ringpcs::testing::property_rings()[round % 7];
        const auto spec = RingSpec::parse(name);
        const std::size_t n = 1 + rng.below(4);
        auto inst = ringpcs::testing::random_linear_presentation(rng, spec, n, 8, 3000);
        if (!inst) continue;
        ++codes;
        const std::string tag = name + " code " + std::to_string(codes);
        const auto pcs = code_to_pcs(inst->presentation());
        require(is_linear(pcs), tag + ": not recognised as linear");
        const auto w = weight_enumerator_linear(pcs);
        const auto c_words = inst->code.words;
        const auto dual = oracle_annihilator(spec, n, c_words);
        ExplicitCode dual_code{spec, n, dual};
        const auto mac = macwilliams_transform(oracle_weight_distribution(dual_code), spec.cardinality(),
                                               static_cast<std::int64_t>(dual.size()));
        require(w == mac, tag + ": D(C)/|C| != MacWilliams(W(C^perp))");
        require(w.coefficients == oracle_weight_distribution(inst->code), tag + ": W(C) differs from the oracle");
    }
    return codes;
}

std::size_t criterion9() {
    Random rng(0x5eed0009);
    std::size_t presentations = 0;
    for (std::size_t round = 0; presentations < 24; ++round) {
        require(round < 5000, "could not draw enough presentations");
        const auto &name = ringpcs::testing::property_rings()[round % 7];
        const auto spec = RingSpec::parse(name);
        const std::size_t n = 1 + rng.below(3);
        auto inst = ringpcs::testing::random_presentation(rng, spec, n, 4, 500);
        if (!inst) continue;
        ++presentations;
        const auto pres = inst->presentation();
        for (int k = 0; k < 5; ++k) {
            const std::complex<double> x0(rng.uniform(-2, 2), rng.uniform(-2, 2));
            const std::complex<double> y0(rng.uniform(-2, 2), rng.uniform(-2, 2));
            const RingFunction f = [&](const RingVec &y) {
                const auto w = static_cast<int>(weight(y));
                return std::pow(x0, static_cast<int>(n) - w) * std::pow(y0, w);
            };
            std::complex<double> direct = 0;
            for (const auto &c : inst->code.words) direct += f(c);
            const auto rhs = poisson_sum(pres, f);
            require(std::abs(rhs - direct) <= 1e-9 * std::max(1.0, std::abs(direct)),
                    name + ": Poisson sum differs from the direct sum");
        }
    }
    return presentations;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        std::string title;
        std::function<std::string()> run;
    };
    auto plain = [](void (*fn)()) {
        return [fn] {
            fn();
            return std::string();
        };
    };
    auto counted = [](std::size_t (*fn)(), const char *unit) {
        return [fn, unit] { return std::to_string(fn()) + " " + unit; };
    };
    const std::vector<Criterion> criteria{
        {1, "Z6 golden validation and condition (i) failure", plain(criterion1)},
        {2, "dual of D_C: <(1,1,3,5),(0,4,2,2)>, 72 * 18 = 6^4", plain(criterion2)},
        {3, "PCS to code: three cosets partition the 216-word code", plain(criterion3)},
        {4, "minimum distance 2 with a (4,2) weight-2 witness", plain(criterion4)},
        {5, "Fourier table via both forms and the oracle", plain(criterion5)},
        {6, "distance distribution (216, 0, 6480, 17280, 22680)", plain(criterion6)},
        {7, "randomized property suite", criterion7},
        {8, "linear codes: D(C)/|C| equals MacWilliams of W(C^perp)", counted(criterion8, "codes")},
        {9, "Poisson summation for weight monomials", counted(criterion9, "presentations")},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string status = "PASS", detail;
        try {
            detail = c.run();
        } catch (const Failure &f) {
            status = "FAIL";
            detail = f.why;
        } catch (const std::exception &e) {
            status = "FAIL";
            detail = std::string("exception: ") + e.what();
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        if (status == "FAIL") ++failures;
        std::cout << "criterion " << c.id << ": " << status << "  " << c.title;
        if (!detail.empty()) std::cout << " [" << detail << "]";
        std::cout << " (" << ms << " ms)\n";
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
