#include "ringpcs/ring.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

namespace ringpcs {

namespace {

std::int64_t reduce(std::int64_t v, std::int64_t t) {
    v %= t;
    return v < 0 ? v + t : v;
}

} // namespace

RingVec::RingVec(std::size_t length, std::size_t arity)
    : length_(length), arity_(arity), residues_(length * arity, 0) {}

RingElem RingVec::at(std::size_t i) const {
    RingElem a;
    a.residues.assign(residues_.begin() + static_cast<std::ptrdiff_t>(i * arity_),
                      residues_.begin() + static_cast<std::ptrdiff_t>((i + 1) * arity_));
    return a;
}

void RingVec::set(std::size_t i, const RingElem &a) {
    if (a.residues.size() != arity_) throw RingMismatch("element arity does not match vector arity");
    for (std::size_t f = 0; f < arity_; ++f) residues_[i * arity_ + f] = a.residues[f];
}

bool RingVec::is_zero_at(std::size_t i) const {
    for (std::size_t f = 0; f < arity_; ++f)
        if (residues_[i * arity_ + f] != 0) return false;
    return true;
}

bool RingVec::is_zero() const {
    for (auto v : residues_)
        if (v != 0) return false;
    return true;
}

std::size_t RingVecHash::operator()(const RingVec &x) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL ^ x.size();
    for (auto v : x.raw()) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::size_t hamming(const RingVec &x, const RingVec &y) {
    if (x.size() != y.size() || x.arity() != y.arity())
        throw RingMismatch("hamming: vectors of different shape");
    std::size_t d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t f = 0; f < x.arity(); ++f) {
            if (x.residue(i, f) != y.residue(i, f)) {
                ++d;
                break;
            }
        }
    }
    return d;
}

std::size_t weight(const RingVec &x) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x.is_zero_at(i)) ++w;
    return w;
}

RingSpec::RingSpec(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
    if (moduli_.empty()) throw RingMismatch("ring needs at least one factor");
    for (auto t : moduli_) {
        if (t < 2 || t > kMaxModulus) throw RingMismatch("ring modulus out of range: " + std::to_string(t));
        if (cardinality_ > UINT64_MAX / static_cast<std::uint64_t>(t))
            throw RingMismatch("ring cardinality overflows 64 bits");
        cardinality_ *= static_cast<std::uint64_t>(t);
        character_order_ = std::lcm(character_order_, t);
        if (character_order_ > kMaxModulus) throw RingMismatch("character order exceeds 2^31");
    }
}

RingSpec RingSpec::parse(std::string_view literal) {
    std::vector<std::int64_t> moduli;
    std::size_t pos = 0;
    auto fail = [&]() -> RingSpec {
        throw RingMismatch("bad ring literal '" + std::string(literal) + "'");
    };
    while (pos < literal.size()) {
        if (std::tolower(static_cast<unsigned char>(literal[pos])) != 'z') return fail();
        ++pos;
        std::int64_t t = 0;
        auto [end, ec] = std::from_chars(literal.data() + pos, literal.data() + literal.size(), t);
        if (ec != std::errc() || end == literal.data() + pos) return fail();
        pos = static_cast<std::size_t>(end - literal.data());
        moduli.push_back(t);
        if (pos == literal.size()) break;
        if (std::tolower(static_cast<unsigned char>(literal[pos])) != 'x') return fail();
        ++pos;
        if (pos == literal.size()) return fail();
    }
    if (moduli.empty()) return fail();
    return RingSpec(std::move(moduli));
}

std::string RingSpec::literal() const {
    std::string out;
    for (std::size_t f = 0; f < moduli_.size(); ++f) {
        if (f) out += 'x';
        out += 'Z' + std::to_string(moduli_[f]);
    }
    return out;
}

RingElem RingSpec::zero() const { return RingElem{std::vector<std::int64_t>(arity(), 0)}; }

RingElem RingSpec::one() const { return RingElem{std::vector<std::int64_t>(arity(), 1)}; }

RingElem RingSpec::element(std::span<const std::int64_t> residues) const {
    if (residues.size() != arity()) throw RingMismatch("element has wrong number of residues");
    RingElem a;
    a.residues.resize(arity());
    for (std::size_t f = 0; f < arity(); ++f) a.residues[f] = reduce(residues[f], moduli_[f]);
    return a;
}

RingElem RingSpec::element(std::int64_t value) const {
    RingElem a;
    a.residues.resize(arity());
    for (std::size_t f = 0; f < arity(); ++f) a.residues[f] = reduce(value, moduli_[f]);
    return a;
}

RingElem RingSpec::element_at(std::uint64_t index) const {
    RingElem a;
    a.residues.resize(arity());
    for (std::size_t f = arity(); f-- > 0;) {
        auto t = static_cast<std::uint64_t>(moduli_[f]);
        a.residues[f] = static_cast<std::int64_t>(index % t);
        index /= t;
    }
    return a;
}

bool RingSpec::is_zero(const RingElem &a) const {
    for (auto v : a.residues)
        if (v != 0) return false;
    return true;
}

void RingSpec::check(const RingElem &a) const {
    if (a.residues.size() != arity()) throw RingMismatch("element does not belong to " + literal());
    for (std::size_t f = 0; f < arity(); ++f)
        if (a.residues[f] < 0 || a.residues[f] >= moduli_[f])
            throw RingMismatch("unreduced residue for " + literal());
}

void RingSpec::check(const RingVec &x) const {
    if (x.arity() != arity()) throw RingMismatch("vector does not belong to " + literal());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t f = 0; f < arity(); ++f)
            if (x.residue(i, f) < 0 || x.residue(i, f) >= moduli_[f])
                throw RingMismatch("unreduced residue for " + literal());
}

void RingSpec::check(const RingVec &x, std::size_t n) const {
    if (x.size() != n)
        throw RingMismatch("expected a vector of length " + std::to_string(n) + ", got " +
                           std::to_string(x.size()));
    check(x);
}

RingElem RingSpec::add(const RingElem &a, const RingElem &b) const {
    check(a);
    check(b);
    RingElem c = a;
    for (std::size_t f = 0; f < arity(); ++f) c.residues[f] = (a.residues[f] + b.residues[f]) % moduli_[f];
    return c;
}

RingElem RingSpec::sub(const RingElem &a, const RingElem &b) const {
    check(a);
    check(b);
    RingElem c = a;
    for (std::size_t f = 0; f < arity(); ++f)
        c.residues[f] = reduce(a.residues[f] - b.residues[f], moduli_[f]);
    return c;
}

RingElem RingSpec::neg(const RingElem &a) const {
    check(a);
    RingElem c = a;
    for (std::size_t f = 0; f < arity(); ++f) c.residues[f] = reduce(-a.residues[f], moduli_[f]);
    return c;
}

RingElem RingSpec::mul(const RingElem &a, const RingElem &b) const {
    check(a);
    check(b);
    RingElem c = a;
    for (std::size_t f = 0; f < arity(); ++f) c.residues[f] = (a.residues[f] * b.residues[f]) % moduli_[f];
    return c;
}

RingVec RingSpec::zero_vector(std::size_t n) const { return RingVec(n, arity()); }

RingVec RingSpec::vector(const std::vector<RingElem> &coords) const {
    RingVec x(coords.size(), arity());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        check(coords[i]);
        x.set(i, coords[i]);
    }
    return x;
}

RingVec RingSpec::vector(std::initializer_list<std::int64_t> values) const {
    RingVec x(values.size(), arity());
    std::size_t i = 0;
    for (auto v : values) x.set(i++, element(v));
    return x;
}

RingVec RingSpec::add(const RingVec &x, const RingVec &y) const {
    check(x);
    check(y, x.size());
    RingVec z = x;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t f = 0; f < arity(); ++f)
            z.residue(i, f) = (x.residue(i, f) + y.residue(i, f)) % moduli_[f];
    return z;
}

RingVec RingSpec::sub(const RingVec &x, const RingVec &y) const {
    check(x);
    check(y, x.size());
    RingVec z = x;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t f = 0; f < arity(); ++f)
            z.residue(i, f) = reduce(x.residue(i, f) - y.residue(i, f), moduli_[f]);
    return z;
}

RingVec RingSpec::neg(const RingVec &x) const {
    check(x);
    RingVec z = x;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t f = 0; f < arity(); ++f) z.residue(i, f) = reduce(-x.residue(i, f), moduli_[f]);
    return z;
}

RingVec RingSpec::scale(const RingElem &r, const RingVec &x) const {
    check(r);
    check(x);
    RingVec z = x;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t f = 0; f < arity(); ++f)
            z.residue(i, f) = (r.residues[f] * x.residue(i, f)) % moduli_[f];
    return z;
}

RingElem RingSpec::dot(const RingVec &x, const RingVec &y) const {
    check(x);
    check(y, x.size());
    RingElem c = zero();
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t f = 0; f < arity(); ++f)
            c.residues[f] = (c.residues[f] + x.residue(i, f) * y.residue(i, f)) % moduli_[f];
    return c;
}

std::string RingSpec::format(const RingElem &a) const {
    if (a.residues.size() == 1) return std::to_string(a.residues[0]);
    std::string out = "(";
    for (std::size_t f = 0; f < a.residues.size(); ++f) {
        if (f) out += ',';
        out += std::to_string(a.residues[f]);
    }
    return out + ")";
}

std::string RingSpec::format(const RingVec &x) const {
    std::string out = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) out += ',';
        out += format(x.at(i));
    }
    return out + ")";
}

RingMatrix::RingMatrix(std::vector<RingVec> rows, std::size_t cols) : rows_(std::move(rows)), cols_(cols) {
    for (const auto &r : rows_)
        if (r.size() != cols_) throw RingMismatch("matrix rows must all have length " + std::to_string(cols_));
}

RingVec RingMatrix::column(std::size_t j) const {
    std::size_t arity = rows_.empty() ? 1 : rows_.front().arity();
    RingVec c(rows_.size(), arity);
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t f = 0; f < arity; ++f) c.residue(i, f) = rows_[i].residue(j, f);
    return c;
}

std::vector<RingVec> RingMatrix::columns() const {
    std::vector<RingVec> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
}

RingVec RingMatrix::apply(const RingSpec &spec, const RingVec &x) const {
    spec.check(x, cols_);
    RingVec out(rows_.size(), spec.arity());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (std::size_t f = 0; f < spec.arity(); ++f) {
            const std::int64_t t = spec.modulus(f);
            std::int64_t acc = 0;
            for (std::size_t j = 0; j < cols_; ++j) acc = (acc + rows_[i].residue(j, f) * x.residue(j, f)) % t;
            out.residue(i, f) = acc;
        }
    }
    return out;
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exponent, std::uint64_t budget) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (base != 0 && v > budget / base)
            throw BudgetExceeded(std::to_string(base) + "^" + std::to_string(exponent) + " exceeds budget " +
                                 std::to_string(budget));
        v *= base;
    }
    if (v > budget) throw BudgetExceeded("scan size exceeds budget " + std::to_string(budget));
    return v;
}

void for_each_vector(const RingSpec &spec, std::size_t n, const std::function<bool(const RingVec &)> &visit,
                     std::uint64_t budget) {
    checked_power(spec.cardinality(), n, budget);
    const std::size_t k = spec.arity();
    RingVec x = spec.zero_vector(n);
    while (true) {
        if (!visit(x)) return;
        // odometer over the flat residue array, last residue fastest
        std::size_t pos = n * k;
        while (pos > 0) {
            --pos;
            const std::size_t i = pos / k;
            const std::size_t f = pos % k;
            if (++x.residue(i, f) < spec.modulus(f)) break;
            x.residue(i, f) = 0;
            if (pos == 0) return;
        }
        if (n == 0) return;
    }
}

std::vector<RingVec> enumerate_vectors(const RingSpec &spec, std::size_t n, std::uint64_t budget) {
    std::vector<RingVec> out;
    out.reserve(checked_power(spec.cardinality(), n, budget));
    for_each_vector(
        spec, n,
        [&](const RingVec &x) {
            out.push_back(x);
            return true;
        },
        budget);
    return out;
}

} // namespace ringpcs
