#include "ringpcs/enumerator.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace ringpcs {

namespace {

using Wide = __int128;

constexpr long double kIntegerTolerance = 1e-6L;

bool near_integer(long double v) {
    return std::fabs(v - std::round(v)) <= kIntegerTolerance * std::max(1.0L, std::fabs(v));
}

std::vector<std::vector<Wide>> binomials(std::size_t n) {
    std::vector<std::vector<Wide>> c(n + 1, std::vector<Wide>(n + 1, 0));
    for (std::size_t i = 0; i <= n; ++i) {
        c[i][0] = 1;
        for (std::size_t j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
    }
    return c;
}

// Coefficient of x^(n-i) y^i in (x + (q-1) y)^(n-w) (x - y)^w.
template <typename T>
std::vector<std::vector<T>> substitution_table(std::size_t n, std::uint64_t q) {
    const auto c = binomials(n);
    std::vector<std::vector<T>> k(n + 1, std::vector<T>(n + 1, 0));
    for (std::size_t w = 0; w <= n; ++w) {
        for (std::size_t i = 0; i <= n; ++i) {
            T acc = 0;
            for (std::size_t j = 0; j <= std::min(i, w); ++j) {
                if (i - j > n - w) continue;
                T term = static_cast<T>(c[n - w][i - j]) * static_cast<T>(c[w][j]);
                for (std::size_t p = 0; p < i - j; ++p) term *= static_cast<T>(q - 1);
                acc += (j % 2 == 0) ? term : -term;
            }
            k[w][i] = acc;
        }
    }
    return k;
}

EnumeratorPoly transform_exact(const std::vector<Wide> &a, std::uint64_t q, Wide divisor) {
    const std::size_t n = a.size() - 1;
    const auto k = substitution_table<Wide>(n, q);
    EnumeratorPoly out;
    out.coefficients.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        Wide acc = 0;
        for (std::size_t w = 0; w <= n; ++w) acc += a[w] * k[w][i];
        if (acc % divisor != 0)
            throw NonIntegerCoefficient("coefficient " + std::to_string(i) + " is not divisible by the normaliser");
        const Wide v = acc / divisor;
        if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
            throw NonIntegerCoefficient("coefficient " + std::to_string(i) + " overflows 64 bits");
        out.coefficients[i] = static_cast<std::int64_t>(v);
    }
    return out;
}

} // namespace

std::int64_t EnumeratorPoly::total() const {
    std::int64_t s = 0;
    for (auto c : coefficients) s += c;
    return s;
}

std::complex<double> EnumeratorPoly::evaluate(std::complex<double> x, std::complex<double> y) const {
    const std::size_t n = degree();
    std::complex<double> acc = 0;
    for (std::size_t i = 0; i <= n && i < coefficients.size(); ++i)
        acc += static_cast<double>(coefficients[i]) * std::pow(x, static_cast<int>(n - i)) *
               std::pow(y, static_cast<int>(i));
    return acc;
}

std::string EnumeratorPoly::to_string() const {
    const std::size_t n = degree();
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        const std::int64_t c = coefficients[i];
        if (c == 0) continue;
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << "-";
        first = false;
        const std::int64_t mag = c < 0 ? -c : c;
        const std::size_t px = n - i;
        if (mag != 1 || (px == 0 && i == 0)) out << mag;
        if (px > 0) out << 'x' << (px > 1 ? "^" + std::to_string(px) : "");
        if (i > 0) out << 'y' << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return first ? "0" : out.str();
}

long double PcsEnumerator::coefficient(std::size_t w) const {
    const long double s = static_cast<long double>(scale);
    return s * s * bins[w].evaluate().real();
}

PcsEnumerator pcs_enumerator_poly(const ParityCheckSystem &pcs, std::uint64_t budget) {
    const auto &spec = pcs.spec();
    const GeneratingCharacter eps(spec);
    PcsEnumerator out;
    out.length = pcs.length();
    out.scale = static_cast<std::int64_t>(pcs.partial_kernel().cardinality());
    out.bins.assign(out.length + 1, ExponentSum(eps.order()));
    out.bin_sizes.assign(out.length + 1, 0);
    pcs.row_module().for_each(
        [&](const RingVec &h) {
            auto combo = row_combination(pcs, h);
            if (!combo) throw InternalInconsistency("row module element without coefficients");
            ExponentSum sum(eps.order());
            for (std::size_t j = 0; j < pcs.coset_count(); ++j) sum.add_term(eps.exponent(combo->s_image.at(j)));
            const std::size_t w = weight(h);
            out.bins[w] += sum * sum.conj();
            ++out.bin_sizes[w];
        },
        budget);
    return out;
}

EnumeratorPoly macwilliams_transform(const std::vector<std::int64_t> &coefficients, std::uint64_t q,
                                     std::int64_t divisor) {
    if (coefficients.empty()) throw std::invalid_argument("empty enumerator");
    if (divisor == 0) throw std::invalid_argument("zero divisor");
    std::vector<Wide> a(coefficients.begin(), coefficients.end());
    return transform_exact(a, q, divisor);
}

EnumeratorPoly distance_distribution(const ParityCheckSystem &pcs, std::uint64_t budget) {
    const PcsEnumerator n_poly = pcs_enumerator_poly(pcs, budget);
    const std::size_t n = pcs.length();
    const std::uint64_t q = pcs.spec().cardinality();
    const Wide ambient = static_cast<Wide>(checked_power(q, n, UINT64_MAX));

    std::vector<long double> bin_values(n + 1);
    bool exact = true;
    for (std::size_t w = 0; w <= n; ++w) {
        bin_values[w] = n_poly.bins[w].evaluate().real();
        exact = exact && near_integer(bin_values[w]);
    }
    if (exact) {
        std::vector<Wide> a(n + 1);
        const Wide s = n_poly.scale;
        for (std::size_t w = 0; w <= n; ++w) a[w] = s * s * static_cast<Wide>(std::llround(bin_values[w]));
        return transform_exact(a, q, ambient);
    }

    // Irrational bins cannot come from a valid system; finish in floating
    // point and let the integrality gate decide.
    const auto k = substitution_table<long double>(n, q);
    EnumeratorPoly out;
    out.coefficients.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        long double acc = 0;
        for (std::size_t w = 0; w <= n; ++w) acc += n_poly.coefficient(w) * k[w][i];
        acc /= static_cast<long double>(ambient);
        if (!near_integer(acc))
            throw NonIntegerCoefficient("distance coefficient " + std::to_string(i) + " evaluates to " +
                                        std::to_string(static_cast<double>(acc)));
        out.coefficients[i] = std::llround(acc);
    }
    return out;
}

EnumeratorPoly dual_weight_enumerator(const ParityCheckSystem &pcs, std::uint64_t budget) {
    EnumeratorPoly out;
    out.coefficients.assign(pcs.length() + 1, 0);
    pcs.row_module().for_each(
        [&](const RingVec &h) {
            auto combo = row_combination(pcs, h);
            if (!combo) throw InternalInconsistency("row module element without coefficients");
            if (combo->s_image.is_zero()) ++out.coefficients[weight(h)];
        },
        budget);
    return out;
}

EnumeratorPoly weight_enumerator_linear(const ParityCheckSystem &pcs, std::uint64_t budget) {
    if (!is_linear(pcs)) throw NotLinear("the code of this parity check system is not linear");
    const EnumeratorPoly d = distance_distribution(pcs, budget);
    const auto size = static_cast<std::int64_t>(pcs.code_size());
    EnumeratorPoly via_distance;
    for (auto c : d.coefficients) {
        if (c % size != 0) throw NonIntegerCoefficient("D(C) is not divisible by |C|");
        via_distance.coefficients.push_back(c / size);
    }
    const EnumeratorPoly dual = dual_weight_enumerator(pcs, budget);
    const EnumeratorPoly via_dual =
        macwilliams_transform(dual.coefficients, pcs.spec().cardinality(), dual.total());
    if (!(via_distance == via_dual))
        throw InternalInconsistency("W(C) from D(C)/|C| disagrees with the MacWilliams transform of W(C^perp)");
    return via_distance;
}

} // namespace ringpcs
