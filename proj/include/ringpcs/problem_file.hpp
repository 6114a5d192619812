#pragma once

// Plain-text problem files.
//
//   # comment lines and trailing comments start with '#'
//   Z6                      ring literal (first non-comment line)
//   pcs                     mode: pcs or code
//   1 1 3 5 | 0 1 5         pcs: one line per row, H entries | S entries
//   0 4 2 2 | 0 2 4
//
// In code mode the body is a block of generators of D, a blank line, a block
// of coset representatives and, optionally, a blank line and a block of
// generators of D^perp to use as H rows. A single zero row denotes D = 0.
// Elements of product rings are written as tuples, e.g. (1,2).

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ringpcs/pcs.hpp"
#include "ringpcs/ring.hpp"

namespace ringpcs {

struct PcsBody {
    RingMatrix h;
    RingMatrix s;
};

struct CodeBody {
    std::size_t length = 0;
    std::vector<RingVec> kernel_generators;
    std::vector<RingVec> representatives;
    std::optional<std::vector<RingVec>> dual_generators;
};

struct ProblemFile {
    RingSpec spec;
    std::variant<PcsBody, CodeBody> body;

    bool is_pcs() const { return std::holds_alternative<PcsBody>(body); }
};

// Throws ParseError with 1-based line and column.
ProblemFile parse_problem(std::string_view text);
ProblemFile read_problem_file(const std::string &path);

// Parses one vector, e.g. "5 2 0 0" or "(1,0) (0,2)", with surrounding
// parentheses and commas between coordinates accepted.
RingVec parse_vector(const RingSpec &spec, std::string_view text);

// Validates a pcs body or converts a code body; the latter honours the
// optional dual generators.
ParityCheckSystem to_pcs(const ProblemFile &problem);
CodePresentation to_presentation(const ProblemFile &problem);

std::string write_pcs(const ParityCheckSystem &pcs);
std::string write_code(const CodePresentation &presentation,
                       const std::optional<std::vector<RingVec>> &dual_generators = std::nullopt);

} // namespace ringpcs
