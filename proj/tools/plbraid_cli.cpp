// Command-line surface for the braiding pipeline: diagrams in, braids out,
// moves and certificates along the way.

#include "plbraid/braiding.hpp"
#include "plbraid/closure.hpp"
#include "plbraid/corpus.hpp"
#include "plbraid/diagram_io.hpp"
#include "plbraid/mixed.hpp"
#include "plbraid/oracles.hpp"
#include "plbraid/prepare.hpp"
#include "plbraid/word_problem.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace plb;

namespace {

int fail_json(const std::string& kind, const std::string& detail, int code) {
    std::cerr << "{\"error\": \"" << kind << "\", \"detail\": \"" << detail << "\"}\n";
    return code;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    return f;
}

template <typename Fn>
void write_output(const std::string& path, Fn&& fn) {
    if (path.empty() || path == "-") {
        fn(std::cout);
        return;
    }
    std::ofstream f(path);
    if (!f) throw ParseError("cannot open " + path + " for writing");
    fn(f);
}

LinkDiagram load_diagram(const std::string& path) {
    auto f = open_input(path);
    return read_diagram(f);
}

BraidWord load_braid(const std::string& path) {
    auto f = open_input(path);
    return read_braid(f);
}

void report_json(std::ostream& os, const GenericityReport& rep) {
    os << "{\"is_generic\": " << (rep.is_generic ? "true" : "false")
       << ", \"horizontal_arcs\": [";
    for (size_t i = 0; i < rep.horizontal_arcs.size(); ++i) {
        if (i) os << ", ";
        os << "[" << rep.horizontal_arcs[i].comp << ", " << rep.horizontal_arcs[i].seg << "]";
    }
    os << "], \"vertical_alignments\": [";
    for (size_t i = 0; i < rep.vertical_alignments.size(); ++i) {
        if (i) os << ", ";
        const auto& [a, b] = rep.vertical_alignments[i];
        os << "[[\"" << rat_str(a.x) << "\", \"" << rat_str(a.y) << "\"], [\"" << rat_str(b.x)
           << "\", \"" << rat_str(b.y) << "\"]]";
    }
    os << "], \"triangle_violations\": [";
    for (size_t i = 0; i < rep.triangle_violations.size(); ++i) {
        if (i) os << ", ";
        const auto& [a, b] = rep.triangle_violations[i];
        os << "[[" << a.comp << ", " << a.seg << "], [" << b.comp << ", " << b.seg << "]]";
    }
    os << "]}\n";
}

int parse_sign(const std::string& s) {
    if (s == "+" || s == "+1" || s == "1") return 1;
    if (s == "-" || s == "-1") return -1;
    throw ParseError("sign must be + or -");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"piecewise-linear link braiding toolkit"};
    app.require_subcommand(1);

    std::string in_path, out_path, kind_str, sign_str = "+", by_word;
    int max_crossings = 20, max_strands = 10;
    std::size_t split = 0;
    int pos = 1, component = 0;
    long long seed = 1;
    int count = 10;
    std::string corpus_kind = "braids";

    auto* validate_cmd = app.add_subcommand("validate", "genericity report for a diagram");
    validate_cmd->add_option("input", in_path)->required();

    auto* perturb_cmd = app.add_subcommand("perturb", "perturb a diagram to generic position");
    perturb_cmd->add_option("input", in_path)->required();
    perturb_cmd->add_option("-o,--output", out_path);

    auto* braid_cmd = app.add_subcommand("braid", "turn a diagram into a braid word");
    braid_cmd->add_option("input", in_path)->required();
    braid_cmd->add_option("-o,--output", out_path);

    auto* closure_cmd = app.add_subcommand("closure", "closure diagram of a braid word");
    closure_cmd->add_option("input", in_path)->required();
    closure_cmd->add_option("-o,--output", out_path);

    auto* lmove_cmd = app.add_subcommand("lmove", "apply an L-move to a braid word");
    lmove_cmd->add_option("input", in_path)->required();
    lmove_cmd->add_option("--split", split)->required();
    lmove_cmd->add_option("--pos", pos)->required();
    lmove_cmd->add_option("--kind", kind_str)->required()->check(CLI::IsMember({"o", "u"}));
    lmove_cmd->add_option("--sign", sign_str)->required();
    lmove_cmd->add_option("-o,--output", out_path);

    auto* stab_cmd = app.add_subcommand("stabilize", "Markov stabilization");
    stab_cmd->add_option("input", in_path)->required();
    stab_cmd->add_option("--sign", sign_str)->required();
    stab_cmd->add_option("-o,--output", out_path);

    auto* conj_cmd = app.add_subcommand("conjugate", "conjugate a braid word");
    conj_cmd->add_option("input", in_path)->required();
    conj_cmd->add_option("--by", by_word, "space-separated letters")->required();
    conj_cmd->add_option("-o,--output", out_path);

    auto* band_cmd = app.add_subcommand("bandmove", "braid band move on a mixed braid");
    band_cmd->add_option("input", in_path)->required();
    band_cmd->add_option("--component", component)->required();
    band_cmd->add_option("--sign", sign_str)->required();
    band_cmd->add_option("-o,--output", out_path);

    auto* cert_cmd = app.add_subcommand("cert", "invariant certificate");
    cert_cmd->add_option("input", in_path)->required();
    cert_cmd->add_option("--kind", kind_str)
        ->required()
        ->check(CLI::IsMember({"bracket", "normalized", "linking", "components", "writhe"}));
    bool cert_braid = false;
    cert_cmd->add_flag("--braid", cert_braid, "input is a braid file; certify its closure");
    cert_cmd->add_option("--max-crossings", max_crossings);
    cert_cmd->add_option("--max-strands", max_strands);

    auto* round_cmd = app.add_subcommand("roundtrip", "closure -> prepare -> braid -> compare");
    round_cmd->add_option("input", in_path)->required();

    auto* corpus_cmd = app.add_subcommand("corpus", "emit seeded random test objects");
    corpus_cmd->add_option("--seed", seed)->required();
    corpus_cmd->add_option("--count", count)->required();
    corpus_cmd->add_option("--kind", corpus_kind)
        ->check(CLI::IsMember({"braids", "diagrams", "mixed"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate_cmd) {
            LinkDiagram d = load_diagram(in_path);
            auto rep = validate_generic(d);
            report_json(std::cout, rep);
            return rep.is_generic ? 0 : 1;
        }
        if (*perturb_cmd) {
            LinkDiagram d = perturb_to_generic(load_diagram(in_path));
            write_output(out_path, [&](std::ostream& os) { write_diagram(os, d); });
            return 0;
        }
        if (*braid_cmd) {
            BraidWord w = braid_diagram(prepare(load_diagram(in_path)));
            write_output(out_path, [&](std::ostream& os) { write_braid(os, w); });
            return 0;
        }
        if (*closure_cmd) {
            LinkDiagram d = closure(load_braid(in_path));
            write_output(out_path, [&](std::ostream& os) { write_diagram(os, d); });
            return 0;
        }
        if (*lmove_cmd) {
            BraidWord w = load_braid(in_path);
            BraidWord out = l_move(w, split, pos, kind_str == "o" ? LKind::over : LKind::under,
                                   parse_sign(sign_str));
            write_output(out_path, [&](std::ostream& os) { write_braid(os, out, false); });
            return 0;
        }
        if (*stab_cmd) {
            BraidWord out = markov_stabilize(load_braid(in_path), parse_sign(sign_str));
            write_output(out_path, [&](std::ostream& os) { write_braid(os, out, false); });
            return 0;
        }
        if (*conj_cmd) {
            BraidWord w = load_braid(in_path);
            BraidWord g;
            g.n = w.n;
            std::istringstream ss(by_word);
            int k;
            while (ss >> k) g.letters.push_back(k);
            g.validate();
            BraidWord out = conjugate(w, g);
            write_output(out_path, [&](std::ostream& os) { write_braid(os, out, false); });
            return 0;
        }
        if (*band_cmd) {
            auto f = open_input(in_path);
            MixedBraid mb = read_mixed(f);
            auto res = braid_band_move(mb, component, parse_sign(sign_str));
            write_output(out_path, [&](std::ostream& os) { write_mixed(os, res.braid); });
            std::cerr << "{\"parallel_strands\": " << res.parallel_strands
                      << ", \"approach_crossings\": " << res.approach_crossings << "}\n";
            return 0;
        }
        if (*cert_cmd) {
            LinkDiagram d;
            BraidWord w;
            if (cert_braid) {
                w = load_braid(in_path);
                d = closure(w);
            } else {
                d = load_diagram(in_path);
            }
            if (kind_str == "bracket") {
                std::cout << kauffman_bracket(d, max_crossings).str() << "\n";
            } else if (kind_str == "normalized") {
                std::cout << normalized_bracket(d, max_crossings).str() << "\n";
            } else if (kind_str == "linking") {
                auto lk = linking_matrix(d);
                for (const auto& row : lk) {
                    for (size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << row[j];
                    std::cout << "\n";
                }
            } else if (kind_str == "components") {
                std::cout << component_count(d) << "\n";
            } else {
                std::cout << writhe(d) << "\n";
            }
            return 0;
        }
        if (*round_cmd) {
            BraidWord w = load_braid(in_path);
            BraidWord back = braid_diagram(prepare(closure(w)));
            bool ok = free_reduce(back).letters == free_reduce(w).letters && back.n == w.n;
            std::cout << (ok ? "PASS" : "FAIL") << "\n";
            return ok ? 0 : 1;
        }
        if (*corpus_cmd) {
            Corpus corpus(static_cast<uint64_t>(seed));
            for (int i = 0; i < count; ++i) {
                if (corpus_kind == "braids") {
                    write_braid(std::cout, corpus.word(), false);
                } else if (corpus_kind == "diagrams") {
                    write_diagram(std::cout, corpus.diagram(3, 5, corpus.uniform(0, 2)));
                } else {
                    write_mixed(std::cout, corpus.mixed());
                }
            }
            return 0;
        }
    } catch (const ParseError& e) {
        return fail_json(e.kind, e.what(), 2);
    } catch (const Error& e) {
        return fail_json(e.kind, e.what(), 1);
    } catch (const std::exception& e) {
        return fail_json("internal", e.what(), 1);
    }
    return 0;
}
