#include "qcontext/cli.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "qcontext/builtins.hpp"
#include "qcontext/contextuality.hpp"
#include "qcontext/extension.hpp"
#include "qcontext/graph_io.hpp"
#include "qcontext/jsonio.hpp"
#include "qcontext/orthorep.hpp"
#include "qcontext/pba.hpp"
#include "qcontext/states.hpp"

namespace qcontext {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct GraphInput {
    std::string path;
    std::string builtin;

    Graph load() const {
        if (!builtin.empty()) return builtin_graph(builtin);
        return load_graph_file(path);
    }
};

void add_graph_input(CLI::App* cmd, GraphInput& in) {
    CLI::App* source = cmd->add_option_group("source", "exactly one input graph");
    source->add_option("input", in.path, "graph file, JSON or DIMACS");
    source->add_option("--builtin", in.builtin, "built-in graph")
        ->check(CLI::IsMember({"kcbs", "cabello18", "fig3-bowtie"}));
    source->require_option(1);
}

std::string joined_labels(const Graph& g, const VertexSet& vs) {
    std::string line;
    for (int v : vs) {
        if (!line.empty()) line += " ";
        line += g.label(v);
    }
    return line;
}

void print_state_lines(std::ostream& out, const Graph& g, const StateVector& p, bool as_float) {
    for (int i = 0; i < g.size(); ++i) {
        const Rat& v = p[static_cast<std::size_t>(i)];
        out << g.label(i) << " = " << (as_float ? float17(rat_double(v)) : rat_str(v)) << "\n";
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact toolkit for graph-based quantum contextuality"};
    app.name("qcontext");
    app.require_subcommand(1);
    bool as_json = false;
    bool as_float = false;
    app.add_flag("--json", as_json, "emit JSON reports");
    app.add_flag("--float", as_float, "render rationals as decimals");

    const auto rat_text = [&](const Rat& x) {
        return as_float ? float17(rat_double(x)) : rat_str(x);
    };

    // cliques
    GraphInput cliques_in;
    CLI::App* cliques_cmd = app.add_subcommand("cliques", "maximal cliques, one per line");
    cliques_cmd->fallthrough();
    add_graph_input(cliques_cmd, cliques_in);
    cliques_cmd->callback([&] {
        const Graph g = cliques_in.load();
        const auto cliques = maximal_cliques(g);
        if (as_json) {
            Json j;
            j["graph"] = graph_json(g);
            Json arr = Json::array();
            for (const VertexSet& c : cliques) {
                Json one = Json::array();
                for (int v : c) one.push_back(g.label(v));
                arr.push_back(std::move(one));
            }
            j["cliques"] = std::move(arr);
            j["count"] = cliques.size();
            out << emit(j);
        } else {
            for (const VertexSet& c : cliques) out << joined_labels(g, c) << "\n";
        }
    });

    // alpha
    GraphInput alpha_in;
    std::string weights_choice = "cg";
    CLI::App* alpha_cmd = app.add_subcommand("alpha", "weighted independence number");
    alpha_cmd->fallthrough();
    add_graph_input(alpha_cmd, alpha_in);
    alpha_cmd->add_option("--weights", weights_choice, "cg, ones, or a weights JSON file")
        ->capture_default_str();
    alpha_cmd->callback([&] {
        const Graph g = alpha_in.load();
        WeightVector w;
        if (weights_choice == "cg")
            w = context_counts(g);
        else if (weights_choice == "ones")
            w = ones_weights(g);
        else
            w = weights_from_json_text(read_file(weights_choice), g);
        const IndependenceResult ind = weighted_independence(g, w);
        if (as_json) {
            Json j;
            j["alpha"] = rat_json(ind.weight, as_float);
            j["alpha_float"] = rat_double(ind.weight);
            Json witness = Json::array();
            for (int v : ind.witness) witness.push_back(g.label(v));
            j["witness"] = std::move(witness);
            out << emit(j);
        } else {
            out << "alpha = " << rat_text(ind.weight) << "\n";
            out << "witness = " << joined_labels(g, ind.witness) << "\n";
        }
    });

    // ks-check
    GraphInput ks_in;
    CLI::App* ks_cmd = app.add_subcommand("ks-check", "Kochen-Specker certification report");
    ks_cmd->fallthrough();
    add_graph_input(ks_cmd, ks_in);
    ks_cmd->callback([&] {
        const Graph g = ks_in.load();
        const KsReport report = ks_check(g);
        if (as_json) {
            out << emit(ks_report_json(g, report, as_float));
        } else {
            out << "vertices = " << report.n << "\n";
            out << "edges = " << report.m << "\n";
            out << "c_total = " << report.c_total << "\n";
            out << "alpha_cg = " << rat_text(report.alpha) << "\n";
            out << "witness = " << joined_labels(g, report.alpha_witness) << "\n";
            if (report.zero_one.has_value())
                out << "zero_one = " << joined_labels(g, report.zero_one->support) << "\n";
            else
                out << "zero_one = none\n";
            out << "statements =";
            for (bool s : report.statements) out << " " << (s ? "true" : "false");
            out << "\n";
            out << "verdict = " << ks_verdict(report) << "\n";
        }
    });

    // orthorep
    GraphInput rep_in;
    bool rep_verify = false;
    CLI::App* rep_cmd = app.add_subcommand("orthorep", "faithful orthogonal co-representation");
    rep_cmd->fallthrough();
    add_graph_input(rep_cmd, rep_in);
    rep_cmd->add_flag("--verify", rep_verify, "check faithfulness and linear independence");
    rep_cmd->callback([&] {
        const Graph g = rep_in.load();
        const OrthoRep rep = construct_flior(g);
        if (as_json) {
            Json j = orthorep_json(rep, as_float);
            if (rep_verify) {
                j["faithful"] = verify_faithful(g, rep);
                j["linearly_independent"] = verify_linear_independence(rep);
            }
            out << emit(j);
        } else {
            for (int i = 0; i < g.size(); ++i) {
                out << g.label(i) << " =";
                for (const Rat& x : rep.vectors[static_cast<std::size_t>(i)])
                    out << " " << rat_text(x);
                out << "\n";
            }
            if (rep_verify) {
                out << "faithful = " << (verify_faithful(g, rep) ? "true" : "false") << "\n";
                out << "linearly_independent = "
                    << (verify_linear_independence(rep) ? "true" : "false") << "\n";
            }
        }
    });

    // extend
    GraphInput ext_in;
    bool equal_dim = false;
    CLI::App* ext_cmd = app.add_subcommand("extend", "context extension graph");
    ext_cmd->fallthrough();
    add_graph_input(ext_cmd, ext_in);
    ext_cmd->add_flag("--equal-dim", equal_dim, "skip cliques of maximum size");
    ext_cmd->callback([&] {
        const Graph g = ext_in.load();
        const Graph h = equal_dim ? equal_dim_extension(g) : context_extension(g);
        out << graph_to_json_text(h);
    });

    // realize
    GraphInput realize_in;
    std::size_t realize_cap = 4096;
    CLI::App* realize_cmd =
        app.add_subcommand("realize", "projector realization of the context extension");
    realize_cmd->fallthrough();
    add_graph_input(realize_cmd, realize_in);
    realize_cmd->add_option("--cap", realize_cap, "algebra element cap")->capture_default_str();
    realize_cmd->callback([&] {
        const Graph g = realize_in.load();
        out << emit(extension_json(realize_extension(g, realize_cap), as_float));
    });

    // pba
    CLI::App* pba_cmd = app.add_subcommand("pba", "partial Boolean algebra operations");
    pba_cmd->fallthrough();
    pba_cmd->require_subcommand(1);

    std::string gen_path;
    std::size_t gen_cap = 4096;
    CLI::App* pba_generate = pba_cmd->add_subcommand("generate", "closure of projector generators");
    pba_generate->fallthrough();
    pba_generate->add_option("input", gen_path, "generators JSON file")->required();
    pba_generate->add_option("--cap", gen_cap, "element cap")->capture_default_str();
    pba_generate->callback([&] {
        const Pba b = generate_pba(generators_from_json_text(read_file(gen_path)), gen_cap);
        out << emit(pba_json(b, as_float));
    });

    std::string atoms_path;
    CLI::App* pba_atoms = pba_cmd->add_subcommand("atoms", "atoms of the generated algebra");
    pba_atoms->fallthrough();
    pba_atoms->add_option("input", atoms_path, "generators JSON file")->required();
    pba_atoms->callback([&] {
        const Pba b = generate_pba(generators_from_json_text(read_file(atoms_path)));
        if (as_json) {
            Json j;
            Json names = Json::array();
            for (int a : atoms(b)) names.push_back(b.name(a));
            j["atoms"] = std::move(names);
            out << emit(j);
        } else {
            for (int a : atoms(b)) out << b.name(a) << "\n";
        }
    });

    std::string ag_path;
    CLI::App* pba_ag = pba_cmd->add_subcommand("atom-graph", "atom graph of the generated algebra");
    pba_ag->fallthrough();
    pba_ag->add_option("input", ag_path, "generators JSON file")->required();
    pba_ag->callback([&] {
        const Pba b = generate_pba(generators_from_json_text(read_file(ag_path)));
        out << graph_to_json_text(atom_graph(b));
    });

    GraphInput from_graph_in;
    CLI::App* pba_from = pba_cmd->add_subcommand("from-graph", "symbolic algebra from an atom graph");
    pba_from->fallthrough();
    add_graph_input(pba_from, from_graph_in);
    pba_from->callback([&] {
        const Graph g = from_graph_in.load();
        out << emit(pba_json(symbolic_from_atom_graph(g), as_float));
    });

    // state
    CLI::App* state_cmd = app.add_subcommand("state", "states on graphs");
    state_cmd->fallthrough();
    state_cmd->require_subcommand(1);

    GraphInput find_in;
    CLI::App* state_find = state_cmd->add_subcommand("find", "some exact state, if any");
    state_find->fallthrough();
    add_graph_input(state_find, find_in);
    state_find->callback([&] {
        const Graph g = find_in.load();
        const auto state = find_state(g);
        if (as_json) {
            Json j;
            j["state"] = state.has_value() ? state_json(g, *state, as_float) : Json(nullptr);
            out << emit(j);
        } else if (state.has_value()) {
            print_state_lines(out, g, *state, as_float);
        } else {
            out << "none\n";
        }
    });

    GraphInput zo_in;
    CLI::App* state_zo = state_cmd->add_subcommand("zero-one", "0-1 state search");
    state_zo->fallthrough();
    add_graph_input(state_zo, zo_in);
    state_zo->callback([&] {
        const Graph g = zo_in.load();
        const auto zo = zero_one_state(g);
        if (as_json) {
            Json j;
            if (zo.has_value()) {
                Json z;
                Json support = Json::array();
                for (int v : zo->support) support.push_back(g.label(v));
                z["support"] = std::move(support);
                z["state"] = state_json(g, zo->state, as_float);
                j["zero_one"] = std::move(z);
            } else {
                j["zero_one"] = nullptr;
            }
            out << emit(j);
        } else if (zo.has_value()) {
            out << "support = " << joined_labels(g, zo->support) << "\n";
            print_state_lines(out, g, zo->state, as_float);
        } else {
            out << "none\n";
        }
    });

    GraphInput se_in;
    std::string substate_path;
    CLI::App* state_extend = state_cmd->add_subcommand("extend", "substate to a state on the extension");
    state_extend->fallthrough();
    add_graph_input(state_extend, se_in);
    state_extend->add_option("--substate", substate_path, "substate JSON file")->required();
    state_extend->callback([&] {
        const Graph g = se_in.load();
        const StateVector q = state_from_json_text(read_file(substate_path), g);
        const StateVector p = extend_substate(g, q);
        const Graph h = context_extension(g);
        if (as_json) {
            Json j;
            j["extended"] = graph_json(h);
            j["state"] = state_json(h, p, as_float);
            out << emit(j);
        } else {
            print_state_lines(out, h, p, as_float);
        }
    });

    std::string bundle_path;
    CLI::App* state_eval = state_cmd->add_subcommand("eval-quantum", "Born values of rays");
    state_eval->fallthrough();
    state_eval->add_option("input", bundle_path, "measurement bundle JSON file")->required();
    state_eval->callback([&] {
        const QuantumEvalInput in = quantum_eval_from_json_text(read_file(bundle_path));
        const std::vector<double> values = quantum_state_eval_rays(in.rays, in.rho);
        double sum = 0;
        for (double v : values) sum += v;
        if (as_json) {
            Json j;
            Json vals = Json::object();
            for (std::size_t i = 0; i < values.size(); ++i) vals[in.labels[i]] = values[i];
            j["values"] = std::move(vals);
            j["sum"] = sum;
            out << emit(j);
        } else {
            for (std::size_t i = 0; i < values.size(); ++i)
                out << in.labels[i] << " = " << float17(values[i]) << "\n";
            out << "sum = " << float17(sum) << "\n";
        }
    });

    // builtin
    std::string builtin_name;
    CLI::App* builtin_cmd = app.add_subcommand("builtin", "emit a built-in graph as JSON");
    builtin_cmd->fallthrough();
    builtin_cmd->add_option("name", builtin_name, "kcbs, cabello18, or fig3-bowtie")
        ->required()
        ->check(CLI::IsMember({"kcbs", "cabello18", "fig3-bowtie"}));
    builtin_cmd->callback([&] { out << graph_to_json_text(builtin_graph(builtin_name)); });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("qcontext");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace qcontext
