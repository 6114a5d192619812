#include "doctest.h"

#include "ringpcs/ring.hpp"

using namespace ringpcs;

TEST_CASE("ring literals") {
    CHECK(RingSpec::parse("Z6").moduli() == std::vector<std::int64_t>{6});
    CHECK(RingSpec::parse("z2xZ3").moduli() == std::vector<std::int64_t>{2, 3});
    CHECK(RingSpec::parse("Z2xZ3").literal() == "Z2xZ3");
    CHECK(RingSpec::parse("Z4xZ4").cardinality() == 16);
    CHECK(RingSpec::parse("Z4xZ6").character_order() == 12);
    CHECK_THROWS_AS(RingSpec::parse("Z1"), RingMismatch);
    CHECK_THROWS_AS(RingSpec::parse("Q6"), RingMismatch);
    CHECK_THROWS_AS(RingSpec::parse(""), RingMismatch);
}

TEST_CASE("Z2xZ3 arithmetic stays componentwise") {
    const auto r = RingSpec::parse("Z2xZ3");
    const std::int64_t a[] = {1, 2}, b[] = {1, 2};
    const auto x = r.element(a), y = r.element(b);
    CHECK(r.add(x, y).residues == std::vector<std::int64_t>{0, 1});
    CHECK(r.mul(x, y).residues == std::vector<std::int64_t>{1, 1});
    CHECK(r.neg(x).residues == std::vector<std::int64_t>{1, 1});
    CHECK(r.format(x) == "(1,2)");
    CHECK(r.is_zero(r.sub(x, y)));
}

TEST_CASE("dot products and distances over Z6") {
    const auto r = RingSpec::parse("Z6");
    const auto h = r.vector({1, 1, 3, 5});
    CHECK(r.dot(h, r.vector({5, 2, 0, 0})).residues[0] == 1);
    CHECK(r.dot(h, r.vector({4, 1, 0, 0})).residues[0] == 5);
    CHECK(hamming(r.vector({5, 2, 0, 0}), r.vector({4, 1, 0, 0})) == 2);
    CHECK(weight(r.vector({0, 3, 0, 1})) == 2);
    CHECK(r.format(h) == "(1,1,3,5)");
    CHECK(r.scale(r.element(2), h) == r.vector({2, 2, 0, 4}));
}

TEST_CASE("ring axioms hold on every triple") {
    for (const char *lit : {"Z4", "Z6", "Z2xZ2", "Z2xZ3"}) {
        const auto r = RingSpec::parse(lit);
        for (std::uint64_t i = 0; i < r.cardinality(); ++i)
            for (std::uint64_t j = 0; j < r.cardinality(); ++j)
                for (std::uint64_t k = 0; k < r.cardinality(); ++k) {
                    const auto a = r.element_at(i), b = r.element_at(j), c = r.element_at(k);
                    CHECK(r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)));
                    CHECK(r.mul(a, r.mul(b, c)) == r.mul(r.mul(a, b), c));
                    CHECK(r.mul(a, b) == r.mul(b, a));
                }
    }
}

TEST_CASE("vector enumeration order and budget") {
    const auto r = RingSpec::parse("Z2xZ2");
    const auto all = enumerate_vectors(r, 2);
    CHECK(all.size() == 16);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(all.front().is_zero());
    CHECK_THROWS_AS(enumerate_vectors(RingSpec::parse("Z8"), 9), BudgetExceeded);
    CHECK_THROWS_AS(checked_power(10, 8, 1'000'000), BudgetExceeded);
    CHECK(checked_power(6, 4, 10'000) == 1296);
}

TEST_CASE("shape and residue checks") {
    const auto r = RingSpec::parse("Z6");
    RingVec bad(2, 1);
    bad.residue(0, 0) = 7;
    CHECK_THROWS_AS(r.check(bad), RingMismatch);
    CHECK_THROWS_AS(r.check(r.vector({1, 2}), 3), RingMismatch);
    CHECK_THROWS_AS(r.check(RingSpec::parse("Z2xZ3").zero_vector(2)), RingMismatch);
    const RingMatrix h({r.vector({1, 1, 3, 5}), r.vector({0, 4, 2, 2})}, 4);
    CHECK(h.apply(r, r.vector({5, 0, 0, 1})) == r.vector({4, 2}));
    CHECK(h.column(2) == r.vector({3, 2}));
}

TEST_CASE("small worked values") {
    const auto z6 = RingSpec::parse("Z6");
    CHECK(z6.add(z6.element(5), z6.element(2)) == z6.element(1));
    CHECK(z6.neg(z6.zero()) == z6.zero());
    CHECK(z6.dot(z6.vector({1, 3, 1, 3}), z6.vector({1, 4, 0, 0})) == z6.element(1));
    CHECK(z6.dot(z6.vector({1, 3, 1, 3}), z6.vector({2, 5, 0, 0})) == z6.element(5));
    CHECK(z6.dot(z6.vector({1, 3, 1, 3}), z6.zero_vector(4)) == z6.zero());
    CHECK(weight(z6.vector({5, 0, 0, 1})) == 2);
    CHECK(weight(z6.zero_vector(4)) == 0);
    CHECK(enumerate_vectors(z6, 4).size() == 1296);
    CHECK(enumerate_vectors(RingSpec::parse("Z2xZ3"), 1).size() == 6);
    const auto z2 = RingSpec::parse("Z2");
    CHECK(enumerate_vectors(z2, 2) ==
          std::vector<RingVec>{z2.vector({0, 0}), z2.vector({0, 1}), z2.vector({1, 0}), z2.vector({1, 1})});
}

TEST_CASE("dot is symmetric and bilinear, hamming is a metric") {
    for (const char *lit : {"Z6", "Z2xZ2", "Z8"}) {
        const auto r = RingSpec::parse(lit);
        const auto all = enumerate_vectors(r, 2);
        for (std::size_t i = 0; i < all.size(); i += 3)
            for (std::size_t j = 0; j < all.size(); j += 5)
                for (std::size_t k = 0; k < all.size(); k += 7) {
                    const auto &x = all[i], &y = all[j], &z = all[k];
                    CHECK(r.dot(x, y) == r.dot(y, x));
                    CHECK(r.dot(r.add(x, z), y) == r.add(r.dot(x, y), r.dot(z, y)));
                    CHECK(hamming(x, z) <= hamming(x, y) + hamming(y, z));
                    CHECK(hamming(x, y) == hamming(y, x));
                    CHECK((hamming(x, y) == 0) == (x == y));
                    CHECK(hamming(x, y) == weight(r.sub(x, y)));
                }
    }
}
