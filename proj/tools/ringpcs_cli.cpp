// ringpcs: command-line front end for parity check systems over Z_t1 x ... x Z_tk.
//
// Exit codes: 0 ok, 1 other error, 2 validation failure, 3 parse failure,
// 4 budget exceeded. Coset indices are printed 1-based.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ringpcs/distance.hpp"
#include "ringpcs/enumerator.hpp"
#include "ringpcs/fourier.hpp"
#include "ringpcs/oracle.hpp"
#include "ringpcs/problem_file.hpp"

using namespace ringpcs;
using Json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string file;
    bool json = false;
    bool oracle = false;
    std::uint64_t budget = kDefaultBudget;
};

Json elem_json(const RingSpec &spec, const RingElem &a) {
    if (spec.arity() == 1) return a.residues[0];
    return Json(a.residues);
}

Json vec_json(const RingSpec &spec, const RingVec &x) {
    Json out = Json::array();
    for (std::size_t i = 0; i < x.size(); ++i) out.push_back(elem_json(spec, x.at(i)));
    return out;
}

template <typename Range>
Json vecs_json(const RingSpec &spec, const Range &xs) {
    Json out = Json::array();
    for (const auto &x : xs) out.push_back(vec_json(spec, x));
    return out;
}

// 12 significant digits, no negative zero.
std::string real_text(double v) {
    if (std::fabs(v) < 1e-9) v = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

double snapped(double v) { return std::fabs(v) < 1e-9 ? 0.0 : std::stod(real_text(v)); }

void emit(const Options &opt, const Json &j, const std::string &text) {
    if (opt.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_validate(const Options &opt) {
    const auto problem = read_problem_file(opt.file);
    if (opt.oracle) {
        PcsBody body = problem.is_pcs() ? std::get<PcsBody>(problem.body) : [&] {
            const auto pcs = to_pcs(problem);
            return PcsBody{pcs.h(), pcs.s()};
        }();
        const auto bad = oracle_pcs_violation(problem.spec, body.h, body.s, opt.budget);
        const char *names[] = {"", "i", "ii", "iii"};
        Json j{{"command", "validate"}, {"valid", !bad}};
        if (bad) j["condition"] = names[*bad];
        emit(opt, j, bad ? std::string("FAIL condition (") + names[*bad] + ")\n" : "PASS\n");
        return bad ? 2 : 0;
    }
    try {
        const auto pcs = to_pcs(problem);
        Json j{{"command", "validate"},
               {"valid", true},
               {"rows", pcs.rows()},
               {"length", pcs.length()},
               {"cosets", pcs.coset_count()},
               {"code_size", pcs.code_size()}};
        emit(opt, j, "PASS\n");
        return 0;
    } catch (const ConditionIViolation &e) {
        Json j{{"command", "validate"},
               {"valid", false},
               {"condition", "i"},
               {"row", e.row() + 1},
               {"column", e.column() + 1}};
        emit(opt, j,
             "FAIL condition (i): S entry at row " + std::to_string(e.row() + 1) + ", column " +
                 std::to_string(e.column() + 1) + " is outside the ideal of its H row\n");
        return 2;
    } catch (const ConditionIIViolation &e) {
        Json j{{"command", "validate"},
               {"valid", false},
               {"condition", "ii"},
               {"first", e.first() + 1},
               {"second", e.second() + 1}};
        emit(opt, j,
             "FAIL condition (ii): S columns " + std::to_string(e.first() + 1) + " and " +
                 std::to_string(e.second() + 1) + " coincide\n");
        return 2;
    } catch (const ConditionIIIViolation &e) {
        Json j{{"command", "validate"},
               {"valid", false},
               {"condition", "iii"},
               {"relation", vec_json(problem.spec, e.relation())}};
        emit(opt, j,
             "FAIL condition (iii): relation " + problem.spec.format(e.relation()) +
                 " among the rows of H does not annihilate S\n");
        return 2;
    }
}

int print_oracle_code(const Options &opt, const ProblemFile &problem) {
    const auto code = oracle_code_from_pcs(to_pcs(problem), opt.budget);
    Json j{{"command", "code-set"}, {"size", code.size()}, {"words", vecs_json(problem.spec, code.words)}};
    std::string text;
    for (const auto &w : code.words) text += problem.spec.format(w) + "\n";
    emit(opt, j, text);
    return 0;
}

int cmd_to_code(const Options &opt) {
    const auto problem = read_problem_file(opt.file);
    if (opt.oracle) return print_oracle_code(opt, problem);
    const auto pcs = to_pcs(problem);
    const auto pres = pcs_to_code(pcs);
    // Carrying the H rows along lets to-pcs reproduce this exact S.
    const auto &dual = pcs.h().row_vectors();
    auto gens = pres.partial_kernel().canonical_generators();
    if (gens.empty()) gens.push_back(pcs.spec().zero_vector(pcs.length()));
    Json j{{"command", "to-code"},
           {"ring", pcs.spec().literal()},
           {"length", pcs.length()},
           {"kernel_generators", vecs_json(pcs.spec(), gens)},
           {"representatives", vecs_json(pcs.spec(), pres.representatives())},
           {"dual_generators", vecs_json(pcs.spec(), dual)}};
    emit(opt, j, write_code(pres, dual));
    return 0;
}

int cmd_to_pcs(const Options &opt) {
    const auto problem = read_problem_file(opt.file);
    if (opt.oracle) return print_oracle_code(opt, problem);
    const auto pcs = to_pcs(problem);
    Json j{{"command", "to-pcs"},
           {"ring", pcs.spec().literal()},
           {"h", vecs_json(pcs.spec(), pcs.h().row_vectors())},
           {"s", vecs_json(pcs.spec(), pcs.s().row_vectors())}};
    emit(opt, j, write_pcs(pcs));
    return 0;
}

int cmd_mindist(const Options &opt) {
    const auto problem = read_problem_file(opt.file);
    const auto pcs = to_pcs(problem);
    const auto &spec = pcs.spec();
    if (opt.oracle) {
        const auto d = oracle_min_distance(oracle_code_from_pcs(pcs, opt.budget), opt.budget);
        emit(opt, Json{{"command", "mindist"}, {"distance", d}}, "d = " + std::to_string(d) + "\n");
        return 0;
    }
    const auto md = min_distance(pcs);
    const auto diffs = sdiff(pcs).elements();
    Json witnesses = Json::array();
    std::string text = "d = " + std::to_string(md.distance) + "\nS^diff =";
    for (const auto &sigma : diffs) text += " " + spec.format(sigma);
    text += "\nwitnesses:\n";
    for (const auto &w : md.witnesses) {
        witnesses.push_back({{"word", vec_json(spec, w.word)}, {"syndrome", vec_json(spec, w.syndrome)}});
        text += "  " + spec.format(w.word) + " -> " + spec.format(w.syndrome) + "\n";
    }
    Json j{{"command", "mindist"},
           {"distance", md.distance},
           {"sdiff", vecs_json(spec, diffs)},
           {"witness", {{"word", vec_json(spec, md.witness.word)}, {"syndrome", vec_json(spec, md.witness.syndrome)}}},
           {"witnesses", witnesses}};
    emit(opt, j, text);
    return 0;
}

int cmd_decode(const Options &opt, const std::string &word) {
    const auto problem = read_problem_file(opt.file);
    const auto pcs = to_pcs(problem);
    const auto &spec = pcs.spec();
    RingVec y;
    try {
        y = parse_vector(spec, word);
    } catch (const ParseError &e) {
        throw ParseError(std::string("received word: ") + e.what(), 0, e.column());
    }
    spec.check(y, pcs.length());
    if (opt.oracle) {
        const auto near = oracle_nearest(oracle_code_from_pcs(pcs, opt.budget), y);
        Json j{{"command", "decode"}, {"distance", near.distance}, {"nearest", vecs_json(spec, near.codewords)}};
        std::string text = "distance " + std::to_string(near.distance) + "\n";
        for (const auto &c : near.codewords) text += spec.format(c) + "\n";
        emit(opt, j, text);
        return 0;
    }
    const auto r = decode(pcs, y);
    Json j{{"command", "decode"},
           {"codeword", vec_json(spec, r.codeword)},
           {"coset", r.coset_index + 1},
           {"error", vec_json(spec, r.error_vector)},
           {"error_weight", r.error_weight}};
    emit(opt, j,
         spec.format(r.codeword) + " (coset " + std::to_string(r.coset_index + 1) + ", error " +
             spec.format(r.error_vector) + ", weight " + std::to_string(r.error_weight) + ")\n");
    return 0;
}

int cmd_kernel(const Options &opt) {
    const auto problem = read_problem_file(opt.file);
    const auto pcs = to_pcs(problem);
    const auto &spec = pcs.spec();
    if (opt.oracle) {
        const auto k = oracle_kernel(oracle_code_from_pcs(pcs, opt.budget), opt.budget);
        emit(opt, Json{{"command", "kernel"}, {"size", k.size()}}, "|ker C| = " + std::to_string(k.size()) + "\n");
        return 0;
    }
    const auto k = kernel(pcs);
    const auto sigmas = kernel_syndromes(pcs);
    const auto gens = k.canonical_generators();
    Json j{{"command", "kernel"},
           {"size", k.cardinality()},
           {"generators", vecs_json(spec, gens)},
           {"syndromes", vecs_json(spec, sigmas)}};
    std::string text = "|ker C| = " + std::to_string(k.cardinality()) + "\ngenerators:\n";
    for (const auto &g : gens) text += "  " + spec.format(g) + "\n";
    text += "syndromes:";
    for (const auto &s : sigmas) text += " " + spec.format(s);
    emit(opt, j, text + "\n");
    return 0;
}

int cmd_islinear(const Options &opt) {
    const auto problem = read_problem_file(opt.file);
    const auto pcs = to_pcs(problem);
    const bool linear = opt.oracle ? oracle_is_linear(oracle_code_from_pcs(pcs, opt.budget)) : is_linear(pcs);
    emit(opt, Json{{"command", "islinear"}, {"linear", linear}}, linear ? "linear\n" : "nonlinear\n");
    return 0;
}

int cmd_fourier(const Options &opt, const std::string &vector, bool all) {
    const auto problem = read_problem_file(opt.file);
    const auto pcs = to_pcs(problem);
    const auto &spec = pcs.spec();
    std::vector<RingVec> points;
    if (all) {
        points = pcs.row_module().elements(opt.budget);
        std::sort(points.begin(), points.end());
    } else {
        if (vector.empty()) throw std::invalid_argument("fourier needs a vector or --all");
        points.push_back(parse_vector(spec, vector));
        spec.check(points.back(), pcs.length());
    }
    std::optional<ExplicitCode> code;
    if (opt.oracle) code = oracle_code_from_pcs(pcs, opt.budget);

    Json values = Json::array();
    std::string text;
    for (const auto &x : points) {
        Json entry{{"x", vec_json(spec, x)}};
        std::complex<double> v;
        if (code) {
            v = oracle_fourier(*code, x);
            text += spec.format(x) + "  ";
        } else {
            const auto combo = row_combination(pcs, x);
            const auto sum = fourier_coeff_pcs(pcs, x);
            const auto ev = sum.evaluate();
            v = {static_cast<double>(ev.real()), static_cast<double>(ev.imag())};
            Json exps = Json::array();
            for (std::int64_t k = 0; k < sum.order(); ++k)
                if (sum.count(k) != 0) exps.push_back({k, sum.count(k)});
            entry["order"] = sum.order();
            entry["exponents"] = exps;
            if (combo) entry["s_image"] = vec_json(spec, combo->s_image);
            text += spec.format(x) + "  " + (combo ? "S_x=" + spec.format(combo->s_image) + "  " : "") +
                    sum.to_string() + "  ";
        }
        entry["re"] = snapped(v.real());
        entry["im"] = snapped(v.imag());
        text += "= " + real_text(v.real()) + (std::fabs(v.imag()) >= 1e-9 ? " + " + real_text(v.imag()) + "i" : "") +
                "\n";
        values.push_back(entry);
    }
    emit(opt, Json{{"command", "fourier"}, {"values", values}}, text);
    return 0;
}

int cmd_enumerator(const Options &opt) {
    const auto problem = read_problem_file(opt.file);
    const auto pcs = to_pcs(problem);
    if (opt.oracle) {
        const auto d = oracle_distance_distribution(oracle_code_from_pcs(pcs, opt.budget), opt.budget);
        Json j{{"command", "enumerator"}, {"distance_distribution", d}};
        emit(opt, j, "D(C) = " + EnumeratorPoly{d}.to_string() + "\n");
        return 0;
    }
    const auto d = distance_distribution(pcs, opt.budget);
    Json j{{"command", "enumerator"}, {"distance_distribution", d.coefficients}, {"polynomial", d.to_string()}};
    std::string text = "D(C) = " + d.to_string() + "\n";
    if (is_linear(pcs)) {
        const auto w = weight_enumerator_linear(pcs, opt.budget);
        j["weight_enumerator"] = w.coefficients;
        text += "W(C) = " + w.to_string() + "\n";
    }
    emit(opt, j, text);
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Parity check systems for codes over finite commutative rings"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "machine-readable output");
    app.add_flag("--oracle", opt.oracle, "use brute-force reference computations");
    app.add_option("--budget", opt.budget, "element budget for exhaustive scans")->capture_default_str();

    auto with_file = [&](const std::string &name, const std::string &help) {
        auto *sub = app.add_subcommand(name, help);
        sub->add_option("file", opt.file, "problem file")->required();
        return sub;
    };
    auto *validate = with_file("validate", "check the defining conditions of (H|S)");
    auto *to_code = with_file("to-code", "convert to a coset presentation");
    auto *to_pcs_cmd = with_file("to-pcs", "convert to a parity check system");
    auto *mindist = with_file("mindist", "minimum distance");
    auto *decode_cmd = with_file("decode", "nearest-neighbour decoding");
    std::string word;
    decode_cmd->add_option("word", word, "received word, e.g. \"5 2 0 1\"")->required();
    auto *kernel_cmd = with_file("kernel", "kernel of the code");
    auto *islinear = with_file("islinear", "linearity test");
    auto *fourier = with_file("fourier", "Fourier coefficients of the code indicator");
    std::string vector;
    bool all = false;
    fourier->add_option("vector", vector, "point x, e.g. \"1 3 1 3\"");
    fourier->add_flag("--all", all, "every x in <rows(H)>");
    auto *enumerator = with_file("enumerator", "distance distribution");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    }

    try {
        if (*validate) return cmd_validate(opt);
        if (*to_code) return cmd_to_code(opt);
        if (*to_pcs_cmd) return cmd_to_pcs(opt);
        if (*mindist) return cmd_mindist(opt);
        if (*decode_cmd) return cmd_decode(opt, word);
        if (*kernel_cmd) return cmd_kernel(opt);
        if (*islinear) return cmd_islinear(opt);
        if (*fourier) return cmd_fourier(opt, vector, all);
        if (*enumerator) return cmd_enumerator(opt);
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const PcsViolation &e) {
        std::cerr << "invalid parity check system: " << e.what() << "\n";
        return 2;
    } catch (const InvalidPresentation &e) {
        std::cerr << "invalid presentation: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded &e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 4;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
