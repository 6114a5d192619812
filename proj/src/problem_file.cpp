#include "ringpcs/problem_file.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace ringpcs {

namespace {

struct Line {
    std::size_t number; // 1-based
    std::string text;   // comment stripped
};

bool blank(std::string_view s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

// Reads the elements of one line segment. `offset` is the 0-based column of
// text[0] within its line; `bare_parens` treats parentheses as separators
// (single-factor vectors written as tuples).
class ElementReader {
public:
    ElementReader(const RingSpec &spec, std::string_view text, std::size_t line, std::size_t offset)
        : spec_(spec), text_(text), line_(line), offset_(offset) {}

    std::vector<RingElem> read_all() {
        std::vector<RingElem> out;
        const bool bare_parens = spec_.arity() == 1;
        while (true) {
            while (pos_ < text_.size() &&
                   (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ',' ||
                    (bare_parens && (text_[pos_] == '(' || text_[pos_] == ')'))))
                ++pos_;
            if (pos_ >= text_.size()) return out;
            out.push_back(read_element());
        }
    }

private:
    [[noreturn]] void fail(const std::string &what) const { throw ParseError(what, line_, offset_ + pos_ + 1); }

    std::int64_t read_integer() {
        const char *begin = text_.data() + pos_;
        const char *end = text_.data() + text_.size();
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(begin, end, v);
        if (ec != std::errc() || ptr == begin) fail("expected an integer");
        pos_ += static_cast<std::size_t>(ptr - begin);
        return v;
    }

    void skip_spaces() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    RingElem read_element() {
        const std::size_t start = pos_;
        std::vector<std::int64_t> residues;
        if (text_[pos_] == '(') {
            ++pos_;
            while (true) {
                skip_spaces();
                residues.push_back(read_integer());
                skip_spaces();
                if (pos_ < text_.size() && text_[pos_] == ',') {
                    ++pos_;
                    continue;
                }
                if (pos_ < text_.size() && text_[pos_] == ')') {
                    ++pos_;
                    break;
                }
                fail("expected ',' or ')' in tuple");
            }
        } else {
            residues.push_back(read_integer());
        }
        if (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != ',' &&
            text_[pos_] != ')' && text_[pos_] != '(')
            fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        const std::size_t here = pos_;
        pos_ = start;
        if (residues.size() != spec_.arity())
            fail("element needs " + std::to_string(spec_.arity()) + " residue(s) for " + spec_.literal());
        for (std::size_t f = 0; f < residues.size(); ++f)
            if (residues[f] < 0 || residues[f] >= spec_.modulus(f))
                fail("residue " + std::to_string(residues[f]) + " out of range for Z" +
                     std::to_string(spec_.modulus(f)));
        pos_ = here;
        return RingElem{std::move(residues)};
    }

    const RingSpec &spec_;
    std::string_view text_;
    std::size_t line_;
    std::size_t offset_;
    std::size_t pos_ = 0;
};

RingVec read_row(const RingSpec &spec, const Line &line, std::size_t begin, std::size_t end,
                 std::optional<std::size_t> &width, const char *what) {
    ElementReader reader(spec, std::string_view(line.text).substr(begin, end - begin), line.number, begin);
    auto elems = reader.read_all();
    if (elems.empty()) throw ParseError(std::string("empty ") + what + " row", line.number, begin + 1);
    if (width && elems.size() != *width)
        throw ParseError(std::string(what) + " row has " + std::to_string(elems.size()) + " entries, expected " +
                             std::to_string(*width),
                         line.number, begin + 1);
    width = elems.size();
    return spec.vector(elems);
}

PcsBody parse_pcs(const RingSpec &spec, const std::vector<Line> &body) {
    std::vector<RingVec> h_rows, s_rows;
    std::optional<std::size_t> n, s;
    for (const auto &line : body) {
        if (blank(line.text)) continue;
        const auto bar = line.text.find('|');
        if (bar == std::string::npos) throw ParseError("expected '|' between H and S entries", line.number, 1);
        if (line.text.find('|', bar + 1) != std::string::npos)
            throw ParseError("more than one '|'", line.number, line.text.find('|', bar + 1) + 1);
        h_rows.push_back(read_row(spec, line, 0, bar, n, "H"));
        s_rows.push_back(read_row(spec, line, bar + 1, line.text.size(), s, "S"));
    }
    if (h_rows.empty()) throw ParseError("pcs body has no rows", body.empty() ? 0 : body.back().number, 1);
    return PcsBody{RingMatrix(std::move(h_rows), *n), RingMatrix(std::move(s_rows), *s)};
}

CodeBody parse_code(const RingSpec &spec, const std::vector<Line> &body) {
    std::vector<std::vector<const Line *>> blocks;
    bool in_block = false;
    for (const auto &line : body) {
        if (blank(line.text)) {
            in_block = false;
            continue;
        }
        if (!in_block) blocks.emplace_back();
        in_block = true;
        blocks.back().push_back(&line);
    }
    if (blocks.size() < 2 || blocks.size() > 3) {
        const std::size_t where = body.empty() ? 0 : body.back().number;
        throw ParseError("code body needs 2 or 3 blank-line separated blocks, found " +
                             std::to_string(blocks.size()),
                         where, 1);
    }
    CodeBody out;
    std::optional<std::size_t> n;
    auto read_block = [&](const std::vector<const Line *> &block, const char *what) {
        std::vector<RingVec> rows;
        for (const Line *line : block) rows.push_back(read_row(spec, *line, 0, line->text.size(), n, what));
        return rows;
    };
    out.kernel_generators = read_block(blocks[0], "kernel generator");
    out.representatives = read_block(blocks[1], "representative");
    if (blocks.size() == 3) out.dual_generators = read_block(blocks[2], "dual generator");
    out.length = *n;
    return out;
}

std::string row_text(const RingSpec &spec, const RingVec &x) {
    std::string out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) out += ' ';
        out += spec.format(x.at(i));
    }
    return out;
}

} // namespace

ProblemFile parse_problem(std::string_view text) {
    std::vector<Line> lines;
    std::istringstream in{std::string(text)};
    std::string raw;
    for (std::size_t number = 1; std::getline(in, raw); ++number) {
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const auto hash = raw.find('#');
        const bool comment_only = hash != std::string::npos && blank(std::string_view(raw).substr(0, hash));
        if (comment_only) continue; // comment lines never act as block separators
        if (hash != std::string::npos) raw.erase(hash);
        lines.push_back({number, raw});
    }

    std::size_t k = 0;
    auto next_nonblank = [&]() -> const Line & {
        while (k < lines.size() && blank(lines[k].text)) ++k;
        if (k >= lines.size())
            throw ParseError("unexpected end of file", lines.empty() ? 1 : lines.back().number + 1, 1);
        return lines[k++];
    };

    const Line &ring_line = next_nonblank();
    std::optional<RingSpec> spec;
    try {
        spec = RingSpec::parse(trim(ring_line.text));
    } catch (const RingMismatch &e) {
        throw ParseError(e.what(), ring_line.number, 1);
    }
    const Line &mode_line = next_nonblank();
    const std::string mode = trim(mode_line.text);
    while (k < lines.size() && blank(lines[k].text)) ++k;
    const std::vector<Line> body(lines.begin() + static_cast<std::ptrdiff_t>(k), lines.end());
    if (mode == "pcs") return ProblemFile{*spec, parse_pcs(*spec, body)};
    if (mode == "code") return ProblemFile{*spec, parse_code(*spec, body)};
    throw ParseError("mode must be 'pcs' or 'code', got '" + mode + "'", mode_line.number, 1);
}

ProblemFile read_problem_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path, 0, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str());
}

RingVec parse_vector(const RingSpec &spec, std::string_view text) {
    auto elems = ElementReader(spec, text, 1, 0).read_all();
    if (elems.empty()) throw ParseError("empty vector", 1, 1);
    return spec.vector(elems);
}

ParityCheckSystem to_pcs(const ProblemFile &problem) {
    if (const auto *p = std::get_if<PcsBody>(&problem.body))
        return ParityCheckSystem::validate(problem.spec, p->h, p->s);
    const auto &c = std::get<CodeBody>(problem.body);
    return code_to_pcs(to_presentation(problem), c.dual_generators);
}

CodePresentation to_presentation(const ProblemFile &problem) {
    if (const auto *c = std::get_if<CodeBody>(&problem.body))
        return CodePresentation(Submodule::from_generators(problem.spec, c->length, c->kernel_generators),
                                c->representatives);
    return pcs_to_code(to_pcs(problem));
}

std::string write_pcs(const ParityCheckSystem &pcs) {
    const auto &spec = pcs.spec();
    std::string out = spec.literal() + "\npcs\n";
    for (std::size_t i = 0; i < pcs.rows(); ++i)
        out += row_text(spec, pcs.h().row(i)) + " | " + row_text(spec, pcs.s().row(i)) + "\n";
    return out;
}

std::string write_code(const CodePresentation &presentation, const std::optional<std::vector<RingVec>> &dual) {
    const auto &spec = presentation.spec();
    std::string out = spec.literal() + "\ncode\n";
    auto gens = presentation.partial_kernel().canonical_generators();
    if (gens.empty()) gens.push_back(spec.zero_vector(presentation.length()));
    for (const auto &g : gens) out += row_text(spec, g) + "\n";
    out += "\n";
    for (const auto &d : presentation.representatives()) out += row_text(spec, d) + "\n";
    if (dual) {
        out += "\n";
        for (const auto &h : *dual) out += row_text(spec, h) + "\n";
    }
    return out;
}

} // namespace ringpcs
