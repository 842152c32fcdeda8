#include "qcontext/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qcontext {

using ordered_json = nlohmann::ordered_json;

Graph graph_from_json_text(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("graph JSON parse error: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
        throw std::invalid_argument("graph JSON must be an object with \"vertices\" and \"edges\"");
    std::vector<std::string> labels;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_string()) throw std::invalid_argument("vertex labels must be strings");
        labels.push_back(v.get<std::string>());
    }
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!index.emplace(labels[i], static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate vertex label \"" + labels[i] + "\"");
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw std::invalid_argument("each edge must be a pair of vertex labels");
        const auto a = index.find(e[0].get<std::string>());
        const auto b = index.find(e[1].get<std::string>());
        if (a == index.end() || b == index.end())
            throw std::invalid_argument("edge references unknown vertex");
        edges.emplace_back(a->second, b->second);
    }
    return Graph(std::move(labels), edges);
}

std::string graph_to_json_text(const Graph& g) {
    ordered_json doc;
    doc["vertices"] = g.labels();
    ordered_json edges = ordered_json::array();
    for (const auto& [i, j] : g.edge_list())
        edges.push_back(ordered_json::array({g.label(i), g.label(j)}));
    doc["edges"] = edges;
    return doc.dump(2) + "\n";
}

Graph graph_from_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    int m = -1;
    std::set<std::pair<int, int>> edge_set;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;  // blank line
        if (head == "c") continue;
        if (head == "p") {
            if (n >= 0) throw std::invalid_argument("duplicate DIMACS problem line");
            std::string kind;
            if (!(ls >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0)
                throw std::invalid_argument("malformed DIMACS problem line: \"" + line + "\"");
            continue;
        }
        if (head == "e") {
            if (n < 0) throw std::invalid_argument("DIMACS edge before problem line");
            int i = 0;
            int j = 0;
            if (!(ls >> i >> j) || i < 1 || j < 1 || i > n || j > n || i == j)
                throw std::invalid_argument("malformed DIMACS edge line: \"" + line + "\"");
            edge_set.emplace(std::min(i, j) - 1, std::max(i, j) - 1);
            continue;
        }
        throw std::invalid_argument("unrecognized DIMACS line: \"" + line + "\"");
    }
    if (n < 0) throw std::invalid_argument("DIMACS input has no problem line");
    if (static_cast<int>(edge_set.size()) != m)
        throw std::invalid_argument("DIMACS edge count disagrees with header");
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return Graph(std::move(labels), {edge_set.begin(), edge_set.end()});
}

std::string graph_to_dimacs(const Graph& g) {
    std::ostringstream out;
    const auto edges = g.edge_list();
    out << "p edge " << g.size() << ' ' << edges.size() << '\n';
    for (const auto& [i, j] : edges) out << "e " << i + 1 << ' ' << j + 1 << '\n';
    return out.str();
}

Graph parse_graph(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' ? graph_from_json_text(text) : graph_from_dimacs(text);
    }
    throw std::invalid_argument("empty graph input");
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

}  // namespace qcontext
