#include "qcontext/jsonio.hpp"

#include <set>
#include <stdexcept>
#include <utility>

#include "qcontext/graph_io.hpp"

namespace qcontext {

namespace {

Rat rat_from_json(const Json& v) {
    if (v.is_string()) return parse_rat(v.get<std::string>());
    if (v.is_number_integer()) return Rat(v.get<long>());
    throw std::invalid_argument("expected an exact rational (\"p/q\" or integer)");
}

Json labels_json(const Graph& g, const VertexSet& vs) {
    Json arr = Json::array();
    for (int v : vs) arr.push_back(g.label(v));
    return arr;
}

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
}

// Object keyed by vertex label -> per-vertex rationals in vertex order.
RatVec vertex_values_from_json(const Json& j, const Graph& g, bool allow_substate_flag,
                               const char* what) {
    if (!j.is_object()) throw std::invalid_argument(std::string(what) + " must be a JSON object");
    RatVec out;
    out.reserve(static_cast<std::size_t>(g.size()));
    for (int i = 0; i < g.size(); ++i) {
        const auto it = j.find(g.label(i));
        if (it == j.end())
            throw std::invalid_argument(std::string(what) + " is missing vertex \"" + g.label(i) + "\"");
        out.push_back(rat_from_json(*it));
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (allow_substate_flag && it.key() == "substate") {
            if (!it.value().is_boolean()) throw std::invalid_argument("\"substate\" must be boolean");
            continue;
        }
        if (!g.has_label(it.key()))
            throw std::invalid_argument(std::string(what) + " has unknown key \"" + it.key() + "\"");
    }
    return out;
}

}  // namespace

Json rat_json(const Rat& x, bool as_float) {
    if (as_float) return Json(rat_double(x));
    return Json(rat_str(x));
}

Json graph_json(const Graph& g) { return Json::parse(graph_to_json_text(g)); }

Json weights_json(const Graph& g, const WeightVector& w, bool as_float) {
    if (static_cast<int>(w.size()) != g.size())
        throw std::invalid_argument("weights must assign one value per vertex");
    Json j = Json::object();
    for (int i = 0; i < g.size(); ++i) j[g.label(i)] = rat_json(w[static_cast<std::size_t>(i)], as_float);
    return j;
}

WeightVector weights_from_json_text(const std::string& text, const Graph& g) {
    return vertex_values_from_json(parse_text(text), g, false, "weights");
}

Json state_json(const Graph& g, const StateVector& p, bool as_float, bool substate) {
    if (static_cast<int>(p.size()) != g.size())
        throw std::invalid_argument("state must assign one value per vertex");
    Json j = Json::object();
    for (int i = 0; i < g.size(); ++i) j[g.label(i)] = rat_json(p[static_cast<std::size_t>(i)], as_float);
    if (substate) j["substate"] = true;
    return j;
}

StateVector state_from_json_text(const std::string& text, const Graph& g) {
    return vertex_values_from_json(parse_text(text), g, true, "state");
}

Json matrix_json(const Matrix& m, bool as_float) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_json(m.at(i, j), as_float));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json orthorep_json(const OrthoRep& rep, bool as_float) {
    Json j;
    j["dimension"] = rep.vectors.empty() ? 0 : static_cast<int>(rep.vectors.front().size());
    Json vecs = Json::object();
    for (int i = 0; i < rep.graph.size(); ++i) {
        Json entries = Json::array();
        for (const Rat& x : rep.vectors[static_cast<std::size_t>(i)])
            entries.push_back(rat_json(x, as_float));
        vecs[rep.graph.label(i)] = std::move(entries);
    }
    j["vectors"] = std::move(vecs);
    return j;
}

Json pba_json(const Pba& b, bool as_float) {
    Json j;
    switch (b.model()) {
        case Pba::Model::projector: j["model"] = "projector"; break;
        case Pba::Model::symbolic: j["model"] = "symbolic"; break;
        case Pba::Model::table: j["model"] = "table"; break;
    }
    j["size"] = b.size();
    j["zero"] = b.zero();
    j["one"] = b.one();
    Json elems = Json::array();
    for (int x = 0; x < b.size(); ++x) {
        Json e;
        e["name"] = b.name(x);
        if (b.model() == Pba::Model::projector)
            e["projector"] = matrix_json(b.projector_at(x).matrix(), as_float);
        if (b.model() == Pba::Model::symbolic) {
            Json reps = Json::array();
            for (const auto& [k, subset] : b.symbolic_at(x).reps)
                reps.push_back(Json::array({k, subset}));
            e["reps"] = std::move(reps);
        }
        elems.push_back(std::move(e));
    }
    j["elements"] = std::move(elems);
    j["atoms"] = atoms(b);
    Json compat = Json::array();
    for (int x = 0; x < b.size(); ++x)
        for (int y = x + 1; y < b.size(); ++y)
            if (b.compatible(x, y)) compat.push_back(Json::array({x, y}));
    j["compat"] = std::move(compat);
    Json neg = Json::array();
    for (int x = 0; x < b.size(); ++x) neg.push_back(b.neg(x));
    j["neg"] = std::move(neg);
    Json meet = Json::array();
    Json join = Json::array();
    for (int x = 0; x < b.size(); ++x)
        for (int y = x; y < b.size(); ++y) {
            if (!b.compatible(x, y)) continue;
            meet.push_back(Json::array({x, y, b.meet(x, y)}));
            join.push_back(Json::array({x, y, b.join(x, y)}));
        }
    j["meet"] = std::move(meet);
    j["join"] = std::move(join);
    return j;
}

std::vector<Projector> generators_from_json_text(const std::string& text) {
    const Json j = parse_text(text);
    if (!j.is_object() || !j.contains("dimension") || !j.contains("generators"))
        throw std::invalid_argument("expected {\"dimension\": d, \"generators\": [...]}");
    if (!j["dimension"].is_number_integer())
        throw std::invalid_argument("\"dimension\" must be an integer");
    const int d = j["dimension"].get<int>();
    if (d <= 0) throw std::invalid_argument("\"dimension\" must be positive");
    if (!j["generators"].is_array() || j["generators"].empty())
        throw std::invalid_argument("\"generators\" must be a nonempty array");
    std::vector<Projector> out;
    for (const Json& gen : j["generators"]) {
        if (!gen.is_array() || static_cast<int>(gen.size()) != d)
            throw std::invalid_argument("each generator must be a d x d matrix");
        std::vector<RatVec> rows;
        for (const Json& row : gen) {
            if (!row.is_array() || static_cast<int>(row.size()) != d)
                throw std::invalid_argument("each generator must be a d x d matrix");
            RatVec r;
            for (const Json& entry : row) r.push_back(rat_from_json(entry));
            rows.push_back(std::move(r));
        }
        out.push_back(Projector::from_matrix(Matrix::from_rows(rows)));
    }
    return out;
}

Json ks_report_json(const Graph& g, const KsReport& report, bool as_float) {
    Json j;
    j["graph"]["n"] = report.n;
    j["graph"]["m"] = report.m;
    j["c_total"] = report.c_total;
    j["alpha_cg"]["value"] = rat_json(report.alpha, as_float);
    j["alpha_cg"]["value_float"] = rat_double(report.alpha);
    j["alpha_cg"]["witness"] = labels_json(g, report.alpha_witness);
    if (report.zero_one.has_value()) {
        Json z;
        z["support"] = labels_json(g, report.zero_one->support);
        z["state"] = state_json(g, report.zero_one->state, as_float);
        j["zero_one"] = std::move(z);
    } else {
        j["zero_one"] = nullptr;
    }
    j["verdict"] = ks_verdict(report);
    j["statements"] = report.statements;
    j["elapsed_ms"] = report.elapsed_ms;
    j["scope"] = "scenario-graph";
    return j;
}

Json nc_json(const Graph& g, const NcInequality& nc, bool as_float) {
    Json j;
    j["alpha"] = rat_json(nc.alpha, as_float);
    j["alpha_float"] = rat_double(nc.alpha);
    j["bound"] = nc.bound;
    j["gap"] = rat_json(nc.gap, as_float);
    j["gap_float"] = rat_double(nc.gap);
    j["witness"] = labels_json(g, nc.witness);
    return j;
}

Json extension_json(const ExtensionResult& r, bool as_float) {
    Json j;
    j["base"] = graph_json(r.base);
    j["extended"] = graph_json(r.extended);
    Json added = Json::object();
    for (const auto& [k, label] : r.added) added[std::to_string(k)] = label;
    j["added"] = std::move(added);
    j["rep"] = orthorep_json(r.rep, as_float);
    Json projectors = Json::array();
    for (const Projector& p : r.atom_projectors) projectors.push_back(matrix_json(p.matrix(), as_float));
    j["atom_projectors"] = std::move(projectors);
    j["algebra"] = pba_json(r.algebra, as_float);
    Json iso = Json::object();
    const VertexSet atom_ids = atoms(r.algebra);
    for (std::size_t t = 0; t < atom_ids.size(); ++t)
        iso[r.algebra.name(atom_ids[t])] = r.extended.label(r.iso[t]);
    j["iso"] = std::move(iso);
    return j;
}

Json kcbs_json(const KcbsScenario& s) {
    Json j;
    j["pentagon"] = graph_json(s.pentagon);
    j["classical_bound"] = rat_json(s.classical_bound, false);
    j["classical_bound_float"] = rat_double(s.classical_bound);
    Json umbrella;
    Json vecs = Json::array();
    for (const auto& v : s.umbrella.vectors) vecs.push_back(Json::array({v[0], v[1], v[2]}));
    umbrella["vectors"] = std::move(vecs);
    umbrella["axis_state"] =
        Json::array({s.umbrella.axis_state[0], s.umbrella.axis_state[1], s.umbrella.axis_state[2]});
    j["umbrella"] = std::move(umbrella);
    j["vertex_values"] = s.vertex_values;
    j["quantum_value"] = s.quantum_value;
    j["violated"] = s.violated;
    j["extended_atom_graph"] = graph_json(s.extended_atom_graph);
    return j;
}

QuantumEvalInput quantum_eval_from_json_text(const std::string& text) {
    const Json j = parse_text(text);
    if (!j.is_object() || !j.contains("dimension") || !j.contains("vectors"))
        throw std::invalid_argument("expected {\"dimension\": d, \"vectors\": {...}, \"rho\" or \"psi\"}");
    if (!j["dimension"].is_number_integer() || j["dimension"].get<int>() <= 0)
        throw std::invalid_argument("\"dimension\" must be a positive integer");
    QuantumEvalInput in;
    in.dim = j["dimension"].get<int>();
    if (!j["vectors"].is_object() || j["vectors"].empty())
        throw std::invalid_argument("\"vectors\" must be a nonempty object");
    for (auto it = j["vectors"].begin(); it != j["vectors"].end(); ++it) {
        if (!it.value().is_array() || static_cast<int>(it.value().size()) != in.dim)
            throw std::invalid_argument("every vector needs exactly d numeric entries");
        std::vector<double> ray;
        for (const Json& entry : it.value()) {
            if (!entry.is_number()) throw std::invalid_argument("vector entries must be numbers");
            ray.push_back(entry.get<double>());
        }
        in.labels.push_back(it.key());
        in.rays.push_back(std::move(ray));
    }
    const bool has_rho = j.contains("rho");
    const bool has_psi = j.contains("psi");
    if (has_rho == has_psi)
        throw std::invalid_argument("provide exactly one of \"rho\" and \"psi\"");
    if (has_psi) {
        if (!j["psi"].is_array() || static_cast<int>(j["psi"].size()) != in.dim)
            throw std::invalid_argument("\"psi\" needs exactly d numeric entries");
        std::vector<double> psi;
        for (const Json& entry : j["psi"]) {
            if (!entry.is_number()) throw std::invalid_argument("\"psi\" entries must be numbers");
            psi.push_back(entry.get<double>());
        }
        in.rho = DensityMatrix::pure(psi);
    } else {
        if (!j["rho"].is_array() || static_cast<int>(j["rho"].size()) != in.dim)
            throw std::invalid_argument("\"rho\" must be a d x d numeric matrix");
        std::vector<double> data;
        for (const Json& row : j["rho"]) {
            if (!row.is_array() || static_cast<int>(row.size()) != in.dim)
                throw std::invalid_argument("\"rho\" must be a d x d numeric matrix");
            for (const Json& entry : row) {
                if (!entry.is_number()) throw std::invalid_argument("\"rho\" entries must be numbers");
                data.push_back(entry.get<double>());
            }
        }
        in.rho = make_density(in.dim, std::move(data));
    }
    return in;
}

std::string emit(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qcontext
