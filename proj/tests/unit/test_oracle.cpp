#include "doctest.h"

#include "ringpcs/distance.hpp"
#include "ringpcs/oracle.hpp"

using namespace ringpcs;

// Sanity checks for the reference implementations themselves, on cases small
// enough to reason about by hand.

TEST_CASE("code from a parity check system") {
    const auto r = RingSpec::parse("Z6");
    const RingMatrix h({r.vector({1, 1, 3, 5}), r.vector({0, 4, 2, 2})}, 4);
    const RingMatrix s({r.vector({0, 1, 5}), r.vector({0, 2, 4})}, 3);
    const auto code = oracle_code_from_pcs(r, h, s);
    CHECK(code.size() == 216);
    CHECK(code.contains(r.vector({5, 2, 0, 0})));
    CHECK(code.contains(r.vector({4, 1, 0, 0})));
    // zero H with a zero syndrome column accepts everything
    const auto all = oracle_code_from_pcs(r, RingMatrix({r.vector({0, 0})}, 2), RingMatrix({r.vector({0})}, 1));
    CHECK(all.size() == 36);
}

TEST_CASE("span, annihilator and syzygies over Z4") {
    const auto r = RingSpec::parse("Z4");
    const auto span = oracle_span(r, 2, {r.vector({2, 0}), r.vector({0, 2})});
    CHECK(span.size() == 4);
    CHECK(oracle_annihilator(r, 2, span).size() == 4);
    CHECK(oracle_span(r, 3, {}).size() == 1);
    const auto syz = oracle_syzygies(r, {r.vector({2, 0}), r.vector({2, 0})}, 2);
    // r1*2 + r2*2 = 0 mod 4  <=>  r1 + r2 even
    CHECK(syz.size() == 8);
}

TEST_CASE("pairwise statistics on a tiny binary code") {
    const auto r = RingSpec::parse("Z2");
    ExplicitCode code{r, 3, {r.vector({0, 0, 0}), r.vector({1, 1, 0}), r.vector({1, 1, 1})}};
    CHECK(oracle_min_distance(code) == 1);
    CHECK(oracle_distance_distribution(code) == std::vector<std::int64_t>{3, 2, 2, 2});
    CHECK(oracle_weight_distribution(code) == std::vector<std::int64_t>{1, 0, 1, 1});
    CHECK_FALSE(oracle_is_linear(code));
    CHECK(oracle_kernel(code) == std::set<RingVec>{r.vector({0, 0, 0})});
    const auto near = oracle_nearest(code, r.vector({1, 0, 0}));
    CHECK(near.distance == 1);
    CHECK(near.codewords == std::vector<RingVec>{r.vector({0, 0, 0}), r.vector({1, 1, 0})});
    CHECK(std::abs(oracle_fourier(code, r.vector({0, 0, 1})) - std::complex<double>(1)) < 1e-12);

    ExplicitCode single{r, 2, {r.vector({1, 0})}};
    CHECK_THROWS_AS(oracle_min_distance(single), DegenerateCode);
}

TEST_CASE("kernel of a union of cosets") {
    const auto r = RingSpec::parse("Z4");
    // <(2,2)> + {(0,0), (1,0)}: translations by (2,2) preserve it, by (1,0) do not
    const auto code = oracle_code_from_presentation(r, 2, {r.vector({2, 2})}, {r.vector({0, 0}), r.vector({1, 0})});
    CHECK(code.size() == 4);
    CHECK(oracle_kernel(code) == std::set<RingVec>{r.vector({0, 0}), r.vector({2, 2})});
}

TEST_CASE("condition checker") {
    const auto r = RingSpec::parse("Z6");
    const RingMatrix h({r.vector({1, 1, 3, 5}), r.vector({0, 4, 2, 2})}, 4);
    CHECK_FALSE(oracle_pcs_violation(r, h, RingMatrix({r.vector({0, 1, 5}), r.vector({0, 2, 4})}, 3)));
    CHECK(oracle_pcs_violation(r, h, RingMatrix({r.vector({0, 1, 5, 1}), r.vector({0, 2, 4, 1})}, 4)) == 1);
    CHECK(oracle_pcs_violation(r, h, RingMatrix({r.vector({0, 1, 1}), r.vector({0, 2, 2})}, 3)) == 2);
    const RingMatrix twice({r.vector({1, 1, 3, 5}), r.vector({1, 1, 3, 5})}, 4);
    CHECK(oracle_pcs_violation(r, twice, RingMatrix({r.vector({0, 1}), r.vector({0, 2})}, 2)) == 3);
}

TEST_CASE("budgets") {
    const auto r = RingSpec::parse("Z8");
    CHECK_THROWS_AS(oracle_code_from_pcs(r, RingMatrix({r.zero_vector(9)}, 9), RingMatrix({r.vector({0})}, 1)),
                    BudgetExceeded);
    ExplicitCode big{r, 1, {}};
    for (std::int64_t i = 0; i < 8; ++i) big.words.insert(r.vector({i}));
    CHECK_THROWS_AS(oracle_distance_distribution(big, 10), BudgetExceeded);
}
