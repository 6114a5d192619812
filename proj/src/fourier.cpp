#include "ringpcs/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ringpcs {

namespace {

std::int64_t mod(std::int64_t v, std::int64_t t) {
    v %= t;
    return v < 0 ? v + t : v;
}

std::vector<std::complex<long double>> roots_of_unity(std::int64_t order) {
    std::vector<std::complex<long double>> roots(static_cast<std::size_t>(order));
    for (std::int64_t k = 0; k < order; ++k) {
        const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) /
                                  static_cast<long double>(order);
        roots[static_cast<std::size_t>(k)] = {std::cos(angle), std::sin(angle)};
    }
    return roots;
}

} // namespace

ExponentSum::ExponentSum(std::int64_t order) {
    if (order < 1) throw std::invalid_argument("ExponentSum order must be positive");
    counts_.assign(static_cast<std::size_t>(order), 0);
}

ExponentSum ExponentSum::term(std::int64_t order, std::int64_t exponent, std::int64_t count) {
    ExponentSum s(order);
    s.add_term(exponent, count);
    return s;
}

std::int64_t ExponentSum::count(std::int64_t exponent) const {
    return counts_[static_cast<std::size_t>(mod(exponent, order()))];
}

void ExponentSum::add_term(std::int64_t exponent, std::int64_t count) {
    counts_[static_cast<std::size_t>(mod(exponent, order()))] += count;
}

bool ExponentSum::empty() const {
    for (auto c : counts_)
        if (c != 0) return false;
    return true;
}

ExponentSum &ExponentSum::operator+=(const ExponentSum &other) {
    if (other.order() != order()) throw std::invalid_argument("ExponentSum orders differ");
    for (std::size_t k = 0; k < counts_.size(); ++k) counts_[k] += other.counts_[k];
    return *this;
}

ExponentSum &ExponentSum::operator-=(const ExponentSum &other) {
    if (other.order() != order()) throw std::invalid_argument("ExponentSum orders differ");
    for (std::size_t k = 0; k < counts_.size(); ++k) counts_[k] -= other.counts_[k];
    return *this;
}

ExponentSum ExponentSum::operator-() const {
    ExponentSum out(order());
    for (std::size_t k = 0; k < counts_.size(); ++k) out.counts_[k] = -counts_[k];
    return out;
}

ExponentSum ExponentSum::operator*(const ExponentSum &other) const {
    if (other.order() != order()) throw std::invalid_argument("ExponentSum orders differ");
    ExponentSum out(order());
    const std::size_t l = counts_.size();
    for (std::size_t a = 0; a < l; ++a) {
        if (counts_[a] == 0) continue;
        for (std::size_t b = 0; b < l; ++b) {
            if (other.counts_[b] == 0) continue;
            out.counts_[(a + b) % l] += counts_[a] * other.counts_[b];
        }
    }
    return out;
}

ExponentSum ExponentSum::scaled(std::int64_t factor) const {
    ExponentSum out = *this;
    for (auto &c : out.counts_) c *= factor;
    return out;
}

ExponentSum ExponentSum::conj() const {
    ExponentSum out(order());
    const std::int64_t l = order();
    for (std::int64_t k = 0; k < l; ++k) out.counts_[static_cast<std::size_t>(mod(-k, l))] = counts_[static_cast<std::size_t>(k)];
    return out;
}

std::complex<long double> ExponentSum::evaluate() const {
    const auto roots = roots_of_unity(order());
    std::complex<long double> acc = 0;
    for (std::size_t k = 0; k < counts_.size(); ++k)
        if (counts_[k] != 0) acc += static_cast<long double>(counts_[k]) * roots[k];
    return acc;
}

bool ExponentSum::is_numerically_zero(long double tolerance) const { return std::abs(evaluate()) <= tolerance; }

std::string ExponentSum::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < counts_.size(); ++k) {
        if (counts_[k] == 0) continue;
        if (!out.empty()) out += counts_[k] < 0 ? " - " : " + ";
        else if (counts_[k] < 0) out += "-";
        out += std::to_string(std::llabs(counts_[k])) + "*z^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

GeneratingCharacter::GeneratingCharacter(const RingSpec &spec) : spec_(spec), order_(spec.character_order()) {
    for (auto t : spec.moduli()) weights_.push_back(order_ / t);
}

std::int64_t GeneratingCharacter::exponent(const RingElem &a) const {
    spec_.check(a);
    std::int64_t e = 0;
    for (std::size_t f = 0; f < weights_.size(); ++f) e = (e + a.residues[f] * weights_[f]) % order_;
    return e;
}

GeneratingCharacter generating_character(const RingSpec &spec) { return GeneratingCharacter(spec); }

std::int64_t character_value(const RingSpec &spec, const RingVec &x, const RingVec &y) {
    return GeneratingCharacter(spec).exponent(spec.dot(x, y));
}

ExponentSum fourier_coeff_coset(const CodePresentation &presentation, const RingVec &x) {
    const auto &spec = presentation.spec();
    spec.check(x, presentation.length());
    const GeneratingCharacter eps(spec);
    ExponentSum out(eps.order());
    // x in D_C^perp  <=>  x . g = 0 for every generator g of D_C
    for (const auto &g : presentation.partial_kernel().canonical_generators())
        if (!spec.is_zero(spec.dot(x, g))) return out;
    const auto size = static_cast<std::int64_t>(presentation.partial_kernel().cardinality());
    for (const auto &d : presentation.representatives()) out.add_term(-eps.exponent(spec.dot(x, d)), size);
    return out;
}

std::optional<RowCombination> row_combination(const ParityCheckSystem &pcs, const RingVec &x) {
    auto r = pcs.row_coefficients(x);
    if (!r) return std::nullopt;
    const auto &spec = pcs.spec();
    RingVec image = spec.zero_vector(pcs.coset_count());
    for (std::size_t i = 0; i < pcs.rows(); ++i) image = spec.add(image, spec.scale(r->at(i), pcs.s().row(i)));
    return RowCombination{std::move(*r), std::move(image)};
}

ExponentSum fourier_coeff_pcs(const ParityCheckSystem &pcs, const RingVec &x) {
    const GeneratingCharacter eps(pcs.spec());
    ExponentSum out(eps.order());
    auto combo = row_combination(pcs, x);
    if (!combo) return out;
    // |R|^n / |<rows(H)>| = |D_C|
    const auto scale = static_cast<std::int64_t>(pcs.partial_kernel().cardinality());
    for (std::size_t j = 0; j < pcs.coset_count(); ++j) out.add_term(-eps.exponent(combo->s_image.at(j)), scale);
    return out;
}

std::complex<double> naive_transform(const RingSpec &spec, std::size_t n, const RingFunction &f, const RingVec &x,
                                     std::uint64_t budget) {
    const GeneratingCharacter eps(spec);
    const auto roots = roots_of_unity(eps.order());
    std::complex<long double> acc = 0;
    for_each_vector(
        spec, n,
        [&](const RingVec &y) {
            const auto k = mod(-eps.exponent(spec.dot(x, y)), eps.order());
            acc += std::complex<long double>(f(y)) * roots[static_cast<std::size_t>(k)];
            return true;
        },
        budget);
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

std::complex<double> poisson_sum(const CodePresentation &presentation, const RingFunction &f,
                                 const std::optional<RingFunction> &f_hat, std::uint64_t budget) {
    const auto &spec = presentation.spec();
    const std::size_t n = presentation.length();
    const std::uint64_t ambient = checked_power(spec.cardinality(), n, UINT64_MAX);
    const CodePresentation negated = presentation.negated();
    const Submodule dual = presentation.partial_kernel().annihilator();

    const GeneratingCharacter eps(spec);
    const auto roots = roots_of_unity(eps.order());

    // Tabulate f once so the naive transform is a pure character sum.
    std::vector<RingVec> points;
    std::vector<std::complex<long double>> values;
    if (!f_hat) {
        if (ambient > budget || dual.cardinality() > budget / ambient)
            throw BudgetExceeded("naive transform over R^n x D_C^perp exceeds budget " + std::to_string(budget));
        points = enumerate_vectors(spec, n, budget);
        values.reserve(points.size());
        for (const auto &y : points) values.emplace_back(f(y));
    }

    std::complex<long double> acc = 0;
    dual.for_each(
        [&](const RingVec &x) {
            std::complex<long double> transformed;
            if (f_hat) {
                transformed = std::complex<long double>((*f_hat)(x));
            } else {
                for (std::size_t i = 0; i < points.size(); ++i) {
                    const auto k = mod(-eps.exponent(spec.dot(x, points[i])), eps.order());
                    transformed += values[i] * roots[static_cast<std::size_t>(k)];
                }
            }
            acc += transformed * fourier_coeff_coset(negated, x).evaluate();
        },
        budget);
    acc /= static_cast<long double>(ambient);
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

} // namespace ringpcs
