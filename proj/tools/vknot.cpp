// Command-line surface for the virtual knot toolkit: invariants, alexander
// data, simplification, unknotting indices, family generators and an
// invariance fuzzer.
//
// Exit codes: 0 success, 1 usage or parse error, 2 budget exhausted with a
// bracket verdict, 3 fuzz violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "vknot/alexander.hpp"
#include "vknot/families.hpp"
#include "vknot/random_walk.hpp"
#include "vknot/unknotting.hpp"

using json = nlohmann::ordered_json;
using namespace vknot;

namespace {

struct CommonOpts {
    std::string code;
    std::string file;
    bool json_out = false;
};

GaussDiagram load_diagram(const CommonOpts& opts) {
    std::string text = opts.code;
    if (!opts.file.empty()) {
        std::ifstream in(opts.file);
        if (!in) throw Error(Errc::MalformedToken, "cannot open " + opts.file);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
        while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    }
    return parse_gauss_code(text);
}

void add_input_opts(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("code", opts.code, "extended Gauss code (empty for the trivial diagram)");
    cmd->add_option("--file", opts.file, "read the code from a file instead");
    cmd->add_flag("--json", opts.json_out, "emit JSON instead of text");
}

// text mode mirrors the JSON one field per line
void print_flat(const json& j, const std::string& prefix = "") {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            print_flat(value, prefix.empty() ? key : prefix + "." + key);
    } else if (j.is_array()) {
        if (j.empty()) std::cout << prefix << " = []\n";
        for (size_t i = 0; i < j.size(); i++)
            print_flat(j[i], prefix + "[" + std::to_string(i) + "]");
    } else {
        std::cout << prefix << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(const json& j, bool as_json) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        print_flat(j);
}

json pair_json(const PairBound& p) { return json::array({p.m, p.n}); }

json moves_json(const std::vector<Move>& trace) {
    json arr = json::array();
    for (const Move& m : trace) arr.push_back(to_string(m));
    return arr;
}

json report_json(const std::string& code, const UnknottingReport& rep, bool diagram_only,
                 bool flat_assertion) {
    json j;
    j["code"] = code;
    j["mode"] = diagram_only ? "diagram" : "knot";
    j["status"] = rep.exact ? "exact" : "bracket";
    if (rep.exact) {
        j["pair"] = pair_json(rep.upper);
    } else {
        j["lower"] = pair_json(rep.lower);
        j["upper"] = pair_json(rep.upper);
    }
    json cert;
    cert["base_code"] = rep.base_code;
    cert["equivalence_trace"] = moves_json(rep.equivalence_trace);
    cert["virtualized"] = rep.certificate.virtualized;
    cert["changed"] = rep.certificate.changed;
    cert["trace"] = moves_json(rep.trace);
    j["certificate"] = cert;
    j["lower_bound_provenance"] = rep.provenance;
    json unresolved = json::array();
    for (const PairBound& p : rep.unresolved) unresolved.push_back(pair_json(p));
    j["unresolved"] = unresolved;
    if (diagram_only) {
        json membership = json::object();
        for (const auto& [pb, status] : rep.membership)
            membership[std::to_string(pb.m) + "," + std::to_string(pb.n)] = to_string(status);
        j["membership"] = membership;
    }
    j["assert_flat_nontrivial"] = flat_assertion;
    return j;
}

FamilySpec parse_family(const std::string& spec) {
    auto split = [](const std::string& s, char sep) {
        std::vector<std::string> parts;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, sep)) parts.push_back(item);
        return parts;
    };
    std::vector<std::string> parts = split(spec, ':');
    const std::string& name = parts[0];
    try {
        if (name == "torus2") {
            Torus2Braid t;
            t.p = std::stoi(parts.at(1));
            if (parts.size() > 2)
                for (const std::string& v : split(parts[2], ','))
                    t.virtualized.insert(std::stoi(v));
            return t;
        }
        if (name == "twisted") {
            Twisted t;
            t.l = std::stoi(parts.at(1));
            t.r = std::stoi(parts.at(2));
            if (parts.size() > 3) t.c_sign = (parts[3] == "-") ? -1 : std::stoi(parts[3]);
            if (parts.size() > 4) t.c_up = (parts[4] != "down");
            return t;
        }
        if (name == "trefoil-sum") return ClassicalTrefoilSum{std::stoi(parts.at(1))};
        if (name == "vtrefoil-sum") return VirtualTrefoilSum{std::stoi(parts.at(1))};
        if (name == "kishino") return Kishino{};
        if (name == "kishino-changed") return KishinoChanged{};
    } catch (const std::exception&) {
        throw Error(Errc::InvalidSpec, "bad family parameters in '" + spec + "'");
    }
    throw Error(Errc::InvalidSpec, "unknown family '" + name + "'");
}

// "a#b" builds the connected sum of family pieces, spliced at the default
// end gaps
GaussDiagram build_family(const std::string& spec) {
    GaussDiagram result;
    std::stringstream ss(spec);
    std::string piece;
    bool first = true;
    while (std::getline(ss, piece, '#')) {
        GaussDiagram part = generate(parse_family(piece));
        if (first) {
            result = part;
            first = false;
        } else {
            result = connected_sum(result, static_cast<int>(result.endpoints().size()), part, 0);
        }
    }
    return result;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"virtual knot toolkit: Gauss diagrams, writhe and Alexander "
                 "invariants, unknotting indices"};
    app.require_subcommand(1);

    CommonOpts inv_opts, alex_opts, simp_opts, unk_opts, fuzz_opts;

    CLI::App* inv = app.add_subcommand("invariants", "per-chord indices, writhe data, bounds");
    add_input_opts(inv, inv_opts);

    CLI::App* alex = app.add_subcommand("alexander", "reduced Alexander matrix, minor gcds, e bound");
    add_input_opts(alex, alex_opts);

    CLI::App* simp = app.add_subcommand("simplify", "monotone R1/R2 simplification with a trace");
    add_input_opts(simp, simp_opts);

    CLI::App* unk = app.add_subcommand("unknot-index", "unknotting index of the diagram or knot");
    add_input_opts(unk, unk_opts);
    bool diagram_only = false;
    bool assert_flat = false;
    long max_nodes = 200000;
    int max_depth = 24;
    int chord_cap = -1;
    long explore_nodes = 10000;
    unk->add_flag("--diagram-only", diagram_only, "full pair sweep of this diagram only");
    unk->add_flag("--assert-flat-nontrivial", assert_flat,
                  "assert externally that the flat projection is nontrivial");
    unk->add_option("--max-nodes", max_nodes, "search budget: distinct diagrams per verdict");
    unk->add_option("--max-depth", max_depth, "search budget: move-sequence length");
    unk->add_option("--chord-cap", chord_cap, "search budget: chord cap (default input + 2)");
    unk->add_option("--explore-nodes", explore_nodes,
                    "knot mode: equivalent diagrams explored for smaller upper bounds");

    CLI::App* fam = app.add_subcommand("family", "generate a named family diagram");
    std::string family_spec;
    bool fam_json = false;
    fam->add_option("spec", family_spec,
                    "torus2:p[:v1,v2..] | twisted:l:r[:sign][:up|down] | trefoil-sum:n | "
                    "vtrefoil-sum:n | kishino | kishino-changed, joined with '#'")
        ->required();
    fam->add_flag("--json", fam_json, "emit JSON");

    CLI::App* fuzz = app.add_subcommand("fuzz", "seeded random-move invariance check");
    add_input_opts(fuzz, fuzz_opts);
    long fuzz_moves = 1000;
    std::uint64_t seed = 1;
    bool corrupt = false;
    fuzz->add_option("--moves", fuzz_moves, "walk length")->check(CLI::PositiveNumber);
    fuzz->add_option("--seed", seed, "random seed");
    fuzz->add_flag("--corrupt-move-table", corrupt,
                   "testing aid: sabotage a move so the checker must fail");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*inv) {
            GaussDiagram g = load_diagram(inv_opts);
            json j;
            j["code"] = emit_gauss_code(g);
            json chords = json::array();
            for (int id : g.chord_ids()) {
                json c;
                c["id"] = id;
                c["sign"] = g.sign(id);
                c["index"] = chord_index(g, id);
                chords.push_back(c);
            }
            j["chords"] = chords;
            LaurentPolynomial w = writhe_polynomial(g);
            j["writhe_polynomial"] = w.to_string();
            json jk = json::object();
            for (const auto& [e, coeff] : w.terms())
                jk[std::to_string(e)] = static_cast<long long>(coeff);
            j["kth_writhes"] = jk;
            j["odd_writhe"] = odd_writhe(g);
            j["lower_bound"] = pair_json(writhe_lower_bound(g));
            emit(j, inv_opts.json_out);
        } else if (*alex) {
            GaussDiagram g = load_diagram(alex_opts);
            WirtingerPresentation p = wirtinger_presentation(g);
            PresentationMatrix reduced = reduced_matrix(fox_alexander_matrix(p));
            json j;
            j["code"] = emit_gauss_code(g);
            j["generators"] = p.generators;
            json rows = json::array();
            for (const auto& row : reduced.rows) {
                json r = json::array();
                for (const auto& entry : row) r.push_back(entry.to_string());
                rows.push_back(r);
            }
            j["reduced_matrix"] = rows;
            json gcds = json::array();
            for (int d = 0; d <= reduced.cols; d++) gcds.push_back(alexander_gcd(reduced, d).to_string());
            j["gcds"] = gcds;
            j["e_lower_bound"] = e_lower_bound(g);
            emit(j, alex_opts.json_out);
        } else if (*simp) {
            GaussDiagram g = load_diagram(simp_opts);
            auto [out, trace] = simplify_monotone(g);
            json j;
            j["code"] = emit_gauss_code(g);
            j["simplified"] = emit_gauss_code(out);
            j["trace"] = moves_json(trace);
            emit(j, simp_opts.json_out);
        } else if (*unk) {
            GaussDiagram g = load_diagram(unk_opts);
            SearchBudget budget = default_budget(g.chord_count());
            budget.max_nodes = max_nodes;
            budget.max_depth = max_depth;
            if (chord_cap > 0) budget.max_chords = chord_cap;
            UnknottingReport rep;
            if (diagram_only) {
                auto pairs = enumerate_unknottable_pairs(g, budget);
                rep = detail::report_from_membership(pairs, emit_gauss_code(g));
            } else {
                SearchBudget explore = default_explore_budget(g.chord_count());
                explore.max_nodes = explore_nodes;
                if (chord_cap > 0) explore.max_chords = chord_cap;
                rep = unknotting_index_knot(g, explore, budget, assert_flat);
            }
            emit(report_json(emit_gauss_code(g), rep, diagram_only, assert_flat),
                 unk_opts.json_out);
            return rep.exact ? 0 : 2;
        } else if (*fam) {
            GaussDiagram g = build_family(family_spec);
            json j;
            j["spec"] = family_spec;
            j["code"] = emit_gauss_code(g);
            emit(j, fam_json);
        } else if (*fuzz) {
            GaussDiagram g = load_diagram(fuzz_opts);
            WalkConfig cfg;
            cfg.steps = fuzz_moves;
            cfg.seed = seed;
            cfg.corrupt = corrupt;
            auto violation = invariant_walk(g, cfg);
            json j;
            j["code"] = emit_gauss_code(g);
            j["seed"] = seed;
            j["moves"] = fuzz_moves;
            if (violation) {
                j["status"] = "violation";
                j["step"] = violation->step;
                j["what"] = violation->what;
                emit(j, fuzz_opts.json_out);
                return 3;
            }
            j["status"] = "ok";
            emit(j, fuzz_opts.json_out);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
