#include "doctest.h"

#include <random>
#include <set>

#include "ringpcs/zt_matrix.hpp"

using namespace ringpcs;

namespace {

using Row = std::vector<std::int64_t>;

ZtMatrix random_matrix(std::mt19937_64 &gen, std::int64_t t, std::size_t rows, std::size_t cols) {
    ZtMatrix a(t, rows, cols);
    std::uniform_int_distribution<std::int64_t> d(0, t - 1);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a(i, j) = d(gen);
    return a;
}

// Row span by closure: repeatedly add multiples of every row.
std::set<Row> brute_span(const ZtMatrix &a) {
    const auto t = a.modulus();
    std::set<Row> span{Row(a.cols(), 0)};
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::set<Row> next;
        for (const auto &v : span)
            for (std::int64_t c = 0; c < t; ++c) {
                Row w = v;
                for (std::size_t j = 0; j < a.cols(); ++j) w[j] = (w[j] + c * a(i, j)) % t;
                next.insert(w);
            }
        span = std::move(next);
    }
    return span;
}

std::vector<Row> all_rows(std::int64_t t, std::size_t n) {
    std::vector<Row> out{Row()};
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Row> next;
        for (const auto &r : out)
            for (std::int64_t c = 0; c < t; ++c) {
                Row w = r;
                w.push_back(c);
                next.push_back(w);
            }
        out = std::move(next);
    }
    return out;
}

} // namespace

TEST_CASE("extended gcd and unit normaliser") {
    for (std::int64_t a = -12; a <= 12; ++a)
        for (std::int64_t b = -12; b <= 12; ++b) {
            const auto e = extended_gcd(a, b);
            CHECK(e.g >= 0);
            CHECK(e.s * a + e.u * b == e.g);
            if (e.g != 0) CHECK((a % e.g == 0 && b % e.g == 0));
        }
    for (std::int64_t t : {2, 4, 6, 8, 12, 30})
        for (std::int64_t a = 0; a < t; ++a) {
            const auto c = unit_normalizer(a, t);
            CHECK(std::gcd(c, t) == 1);
            CHECK((c * a) % t == std::gcd(a, t) % t);
        }
}

TEST_CASE("Howell form agrees with brute-force spans") {
    std::mt19937_64 gen(11);
    for (std::int64_t t : {2, 3, 4, 6, 8, 9, 12}) {
        for (int trial = 0; trial < 25; ++trial) {
            const std::size_t rows = 1 + gen() % 4, cols = 1 + gen() % 3;
            const auto a = random_matrix(gen, t, rows, cols);
            const auto h = howell_form(a);
            const auto span = brute_span(a);
            CHECK(howell_span_size(h) == span.size());
            CHECK(brute_span(h) == span);
            for (const auto &x : all_rows(t, cols)) {
                const auto rem = howell_reduce(h, x);
                const bool zero = std::all_of(rem.begin(), rem.end(), [](auto v) { return v == 0; });
                CHECK(zero == (span.count(x) == 1));
            }
        }
    }
}

TEST_CASE("Howell form is canonical") {
    std::mt19937_64 gen(12);
    for (std::int64_t t : {4, 6, 8, 12}) {
        for (int trial = 0; trial < 30; ++trial) {
            const auto a = random_matrix(gen, t, 3, 3);
            // same span: append a combination of the rows and scale one row by a unit
            ZtMatrix b = a;
            Row combo(3);
            for (std::size_t j = 0; j < 3; ++j) combo[j] = (2 * a(0, j) + 3 * a(2, j)) % t;
            b.append_row(combo);
            b.swap_rows(0, 3);
            std::int64_t unit = t - 1;
            for (std::size_t j = 0; j < 3; ++j) b(1, j) = (b(1, j) * unit) % t;
            CHECK(howell_form(a) == howell_form(b));
            CHECK(howell_form(howell_form(a)) == howell_form(a));
        }
    }
}

TEST_CASE("right kernel and row solver") {
    std::mt19937_64 gen(13);
    for (std::int64_t t : {2, 4, 6, 8, 9}) {
        for (int trial = 0; trial < 25; ++trial) {
            const std::size_t rows = 1 + gen() % 3, cols = 1 + gen() % 3;
            const auto a = random_matrix(gen, t, rows, cols);
            std::set<Row> kernel;
            for (const auto &y : all_rows(t, cols)) {
                bool zero = true;
                for (std::size_t i = 0; i < rows; ++i) {
                    std::int64_t s = 0;
                    for (std::size_t j = 0; j < cols; ++j) s += a(i, j) * y[j];
                    zero = zero && s % t == 0;
                }
                if (zero) kernel.insert(y);
            }
            CHECK(brute_span(right_kernel(a)) == kernel);

            const RowSolver solver(a);
            const auto span = brute_span(a);
            for (const auto &x : all_rows(t, cols)) {
                const auto r = solver.solve(x);
                CHECK(r.has_value() == (span.count(x) == 1));
                if (!r) continue;
                for (std::size_t j = 0; j < cols; ++j) {
                    std::int64_t s = 0;
                    for (std::size_t i = 0; i < rows; ++i) s += (*r)[i] * a(i, j);
                    CHECK(((s % t) + t) % t == x[j]);
                }
            }
        }
    }
}

TEST_CASE("Z6 rows (1,1,3,5), (0,4,2,2) span 18 vectors") {
    ZtMatrix a(6, 2, 4);
    const std::int64_t v[2][4] = {{1, 1, 3, 5}, {0, 4, 2, 2}};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 4; ++j) a(i, j) = v[i][j];
    CHECK(howell_span_size(howell_form(a)) == 18);
    CHECK(howell_span_size(right_kernel(a)) == 72);
}
