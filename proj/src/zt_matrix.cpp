#include "ringpcs/zt_matrix.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace ringpcs {

namespace {

std::int64_t mod(std::int64_t v, std::int64_t t) {
    v %= t;
    return v < 0 ? v + t : v;
}

using Rows = std::vector<std::vector<std::int64_t>>;

bool is_zero(const std::vector<std::int64_t> &row) {
    for (auto v : row)
        if (v != 0) return false;
    return true;
}

// row_a <- s*row_a + u*row_b, row_b <- v*row_a + w*row_b (all mod t)
void combine(std::vector<std::int64_t> &ra, std::vector<std::int64_t> &rb, std::int64_t s, std::int64_t u,
             std::int64_t v, std::int64_t w, std::int64_t t) {
    s = mod(s, t);
    u = mod(u, t);
    v = mod(v, t);
    w = mod(w, t);
    for (std::size_t k = 0; k < ra.size(); ++k) {
        const std::int64_t a = ra[k];
        const std::int64_t b = rb[k];
        ra[k] = (s * a % t + u * b % t) % t;
        rb[k] = (v * a % t + w * b % t) % t;
    }
}

} // namespace

ZtMatrix::ZtMatrix(std::int64_t modulus, std::size_t rows, std::size_t cols)
    : modulus_(modulus), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (modulus < 2) throw std::invalid_argument("ZtMatrix modulus must be at least 2");
}

void ZtMatrix::append_row(std::span<const std::int64_t> values) {
    if (values.size() != cols_) throw std::invalid_argument("ZtMatrix::append_row: wrong width");
    for (auto v : values) data_.push_back(mod(v, modulus_));
    ++rows_;
}

void ZtMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(data_[a * cols_ + k], data_[b * cols_ + k]);
}

bool ZtMatrix::row_is_zero(std::size_t i) const {
    for (std::size_t k = 0; k < cols_; ++k)
        if (data_[i * cols_ + k] != 0) return false;
    return true;
}

ZtMatrix ZtMatrix::transposed() const {
    ZtMatrix out(modulus_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b) {
    std::int64_t old_r = a, r = b;
    std::int64_t old_s = 1, s = 0;
    std::int64_t old_u = 0, u = 1;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
        old_u = std::exchange(u, old_u - q * u);
    }
    if (old_r < 0) return {-old_r, -old_s, -old_u};
    return {old_r, old_s, old_u};
}

std::int64_t unit_normalizer(std::int64_t a, std::int64_t t) {
    a = mod(a, t);
    if (a == 0) return 1;
    const std::int64_t g = std::gcd(a, t);
    const std::int64_t reduced_t = t / g;
    // inverse of a/g modulo t/g, lifted to a unit modulo t
    auto [one, inv, unused] = extended_gcd(mod(a / g, reduced_t), reduced_t);
    (void)one;
    (void)unused;
    std::int64_t c = mod(inv, reduced_t);
    while (std::gcd(c, t) != 1) c += reduced_t;
    return c;
}

ZtMatrix howell_form(const ZtMatrix &a) {
    const std::int64_t t = a.modulus();
    const std::size_t cols = a.cols();
    Rows rows;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::vector<std::int64_t> r(a.row(i).begin(), a.row(i).end());
        if (!is_zero(r)) rows.push_back(std::move(r));
    }

    std::size_t r = 0;
    for (std::size_t j = 0; j < cols && r < rows.size(); ++j) {
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][j] == 0) continue;
            if (rows[r][j] == 0) {
                std::swap(rows[r], rows[i]);
                continue;
            }
            const std::int64_t x = rows[r][j];
            const std::int64_t y = rows[i][j];
            auto [g, s, u] = extended_gcd(x, y);
            combine(rows[r], rows[i], s, u, -(y / g), x / g, t);
        }
        if (rows[r][j] == 0) continue;

        const std::int64_t unit = unit_normalizer(rows[r][j], t);
        for (auto &v : rows[r]) v = v * unit % t;
        const std::int64_t pivot = rows[r][j];

        for (std::size_t i = 0; i < r; ++i) {
            const std::int64_t q = rows[i][j] / pivot;
            if (q == 0) continue;
            for (std::size_t k = 0; k < cols; ++k) rows[i][k] = mod(rows[i][k] - q * rows[r][k], t);
        }

        // t/pivot * row vanishes on column j; it must stay in the span of
        // the rows below, so it joins them for the remaining columns.
        std::vector<std::int64_t> annihilated(cols);
        const std::int64_t factor = t / pivot;
        for (std::size_t k = 0; k < cols; ++k) annihilated[k] = factor * rows[r][k] % t;
        if (!is_zero(annihilated)) rows.push_back(std::move(annihilated));
        ++r;
    }

    ZtMatrix out(t, 0, cols);
    for (std::size_t i = 0; i < r; ++i) out.append_row(rows[i]);
    return out;
}

std::vector<std::size_t> pivot_columns(const ZtMatrix &howell) {
    std::vector<std::size_t> pivots;
    pivots.reserve(howell.rows());
    for (std::size_t i = 0; i < howell.rows(); ++i) {
        std::size_t j = 0;
        while (j < howell.cols() && howell(i, j) == 0) ++j;
        pivots.push_back(j);
    }
    return pivots;
}

std::uint64_t howell_span_size(const ZtMatrix &howell) {
    std::uint64_t size = 1;
    const auto pivots = pivot_columns(howell);
    for (std::size_t i = 0; i < howell.rows(); ++i) {
        const auto order = static_cast<std::uint64_t>(howell.modulus() / howell(i, pivots[i]));
        if (size > UINT64_MAX / order) throw std::overflow_error("submodule cardinality overflows 64 bits");
        size *= order;
    }
    return size;
}

std::vector<std::int64_t> howell_reduce(const ZtMatrix &howell, std::span<const std::int64_t> x) {
    const std::int64_t t = howell.modulus();
    std::vector<std::int64_t> cur(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) cur[k] = mod(x[k], t);
    const auto pivots = pivot_columns(howell);
    for (std::size_t i = 0; i < howell.rows(); ++i) {
        const std::size_t j = pivots[i];
        const std::int64_t p = howell(i, j);
        if (cur[j] % p != 0) continue;
        const std::int64_t q = cur[j] / p;
        if (q == 0) continue;
        for (std::size_t k = 0; k < cur.size(); ++k) cur[k] = mod(cur[k] - q * howell(i, k), t);
    }
    return cur;
}

ZtMatrix right_kernel(const ZtMatrix &a) {
    const std::int64_t t = a.modulus();
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    // rows of [A^T | I_n] are (A y_e, e); the Howell rows vanishing on the
    // first m columns span {(0, y) : A y = 0}.
    ZtMatrix augmented(t, n, m + n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) augmented(j, i) = a(i, j);
        augmented(j, m + j) = 1;
    }
    const ZtMatrix h = howell_form(augmented);
    ZtMatrix kernel(t, 0, n);
    for (std::size_t i = 0; i < h.rows(); ++i) {
        bool leading_zero = true;
        for (std::size_t k = 0; k < m && leading_zero; ++k) leading_zero = h(i, k) == 0;
        if (leading_zero) kernel.append_row(h.row(i).subspan(m));
    }
    return howell_form(kernel);
}

RowSolver::RowSolver(const ZtMatrix &a) : width_(a.cols()), height_(a.rows()), augmented_(a.modulus(), 0, 0) {
    const std::int64_t t = a.modulus();
    ZtMatrix aug(t, height_, width_ + height_);
    for (std::size_t i = 0; i < height_; ++i) {
        for (std::size_t j = 0; j < width_; ++j) aug(i, j) = a(i, j);
        aug(i, width_ + i) = 1;
    }
    augmented_ = howell_form(aug);
}

std::optional<std::vector<std::int64_t>> RowSolver::solve(std::span<const std::int64_t> x) const {
    if (x.size() != width_) throw std::invalid_argument("RowSolver::solve: wrong target length");
    const std::int64_t t = augmented_.modulus();
    std::vector<std::int64_t> cur(width_ + height_, 0);
    for (std::size_t k = 0; k < width_; ++k) cur[k] = mod(x[k], t);
    const auto pivots = pivot_columns(augmented_);
    for (std::size_t i = 0; i < augmented_.rows(); ++i) {
        const std::size_t j = pivots[i];
        if (j >= width_) break;
        const std::int64_t p = augmented_(i, j);
        if (cur[j] % p != 0) return std::nullopt;
        const std::int64_t q = cur[j] / p;
        if (q == 0) continue;
        for (std::size_t k = 0; k < cur.size(); ++k) cur[k] = mod(cur[k] - q * augmented_(i, k), t);
    }
    for (std::size_t k = 0; k < width_; ++k)
        if (cur[k] != 0) return std::nullopt;
    // (x, 0) - sum q_i (v_i, c_i) = (0, -r)
    std::vector<std::int64_t> coeffs(height_);
    for (std::size_t i = 0; i < height_; ++i) coeffs[i] = mod(-cur[width_ + i], t);
    return coeffs;
}

} // namespace ringpcs
