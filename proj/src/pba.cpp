#include "qcontext/pba.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qcontext {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Pba::Pba(Model model, std::vector<std::string> names, std::vector<std::vector<bool>> compat,
         std::vector<int> neg, std::vector<std::vector<int>> meet,
         std::vector<std::vector<int>> join, int zero, int one,
         std::vector<Projector> projectors, std::vector<SymbolicClass> classes)
    : model_(model),
      names_(std::move(names)),
      compat_(std::move(compat)),
      neg_(std::move(neg)),
      meet_(std::move(meet)),
      join_(std::move(join)),
      zero_(zero),
      one_(one),
      projectors_(std::move(projectors)),
      classes_(std::move(classes)) {
    const int n = size();
    require(n >= 2, "algebra needs at least two elements");
    require(static_cast<int>(compat_.size()) == n && static_cast<int>(neg_.size()) == n &&
                static_cast<int>(meet_.size()) == n && static_cast<int>(join_.size()) == n,
            "table sizes disagree");
    require(zero_ >= 0 && zero_ < n && one_ >= 0 && one_ < n && zero_ != one_,
            "zero and one must be distinct elements");
    {
        const std::set<std::string> unique(names_.begin(), names_.end());
        require(static_cast<int>(unique.size()) == n, "element names must be unique");
    }
    for (int i = 0; i < n; ++i) {
        require(static_cast<int>(compat_[static_cast<std::size_t>(i)].size()) == n &&
                    static_cast<int>(meet_[static_cast<std::size_t>(i)].size()) == n &&
                    static_cast<int>(join_[static_cast<std::size_t>(i)].size()) == n,
                "table row sizes disagree");
        require(compat_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)],
                "compatibility must be reflexive");
        const int ni = neg_[static_cast<std::size_t>(i)];
        require(ni >= 0 && ni < n && neg_[static_cast<std::size_t>(ni)] == i,
                "negation must be an involution");
        for (int j = 0; j < n; ++j) {
            const bool c = compat_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            require(c == static_cast<bool>(
                             compat_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]),
                    "compatibility must be symmetric");
            const int m = meet_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            const int jo = join_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            require((m >= 0) == c && (jo >= 0) == c, "operations defined exactly on compatible pairs");
            require(m < n && jo < n, "table entry out of range");
            require(m == meet_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] &&
                        jo == join_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)],
                    "meet and join must be symmetric");
        }
    }
    if (model_ == Model::projector)
        require(static_cast<int>(projectors_.size()) == n, "projector payload size mismatch");
    else
        require(projectors_.empty(), "unexpected projector payload");
    if (model_ == Model::symbolic)
        require(static_cast<int>(classes_.size()) == n, "symbolic payload size mismatch");
    else
        require(classes_.empty(), "unexpected symbolic payload");
}

bool Pba::compatible(int x, int y) const {
    return compat_.at(static_cast<std::size_t>(x)).at(static_cast<std::size_t>(y));
}

int Pba::neg(int x) const { return neg_.at(static_cast<std::size_t>(x)); }

int Pba::meet(int x, int y) const {
    const int m = meet_.at(static_cast<std::size_t>(x)).at(static_cast<std::size_t>(y));
    if (m < 0) throw std::invalid_argument("incompatible elements");
    return m;
}

int Pba::join(int x, int y) const {
    const int j = join_.at(static_cast<std::size_t>(x)).at(static_cast<std::size_t>(y));
    if (j < 0) throw std::invalid_argument("incompatible elements");
    return j;
}

bool Pba::leq(int x, int y) const {
    return compatible(x, y) && meet_.at(static_cast<std::size_t>(x)).at(static_cast<std::size_t>(y)) == x;
}

const Projector& Pba::projector_at(int x) const {
    if (model_ != Model::projector) throw std::logic_error("not a projector-backed algebra");
    return projectors_.at(static_cast<std::size_t>(x));
}

const SymbolicClass& Pba::symbolic_at(int x) const {
    if (model_ != Model::symbolic) throw std::logic_error("not a symbolic algebra");
    return classes_.at(static_cast<std::size_t>(x));
}

Pba generate_pba(const std::vector<Projector>& generators, std::size_t cap) {
    if (generators.empty()) throw std::invalid_argument("at least one generator required");
    const int d = generators.front().dim();
    if (d <= 0) throw std::invalid_argument("generators must have positive dimension");
    for (const Projector& p : generators)
        if (p.dim() != d) throw std::invalid_argument("generators must share one dimension");

    std::vector<Projector> elems;
    std::map<Projector, int> index;
    const auto add = [&](const Projector& p) {
        if (index.count(p)) return;
        if (elems.size() >= cap) throw std::runtime_error("closure blowup");
        index.emplace(p, static_cast<int>(elems.size()));
        elems.push_back(p);
    };
    add(Projector::zero(d));
    add(Projector::identity(d));
    for (const Projector& p : generators) add(p);

    // Every unordered pair is visited exactly once: element `next` against all
    // elements that entered the list before it.
    for (std::size_t next = 0; next < elems.size(); ++next) {
        const Projector x = elems[next];
        add(complement(x));
        for (std::size_t j = 0; j <= next && j < elems.size(); ++j) {
            const Projector y = elems[j];
            if (commute(x, y)) {
                add(meet(x, y));
                add(join(x, y));
            }
        }
    }

    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<bool>> compat(static_cast<std::size_t>(n),
                                          std::vector<bool>(static_cast<std::size_t>(n), false));
    std::vector<std::vector<int>> meet_t(static_cast<std::size_t>(n),
                                         std::vector<int>(static_cast<std::size_t>(n), -1));
    std::vector<std::vector<int>> join_t = meet_t;
    std::vector<int> neg_t(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        neg_t[static_cast<std::size_t>(i)] = index.at(complement(elems[static_cast<std::size_t>(i)]));
        for (int j = i; j < n; ++j) {
            if (!commute(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)])) continue;
            const int m = index.at(meet(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)]));
            const int jo = index.at(join(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)]));
            compat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
            compat[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = true;
            meet_t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m;
            meet_t[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = m;
            join_t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = jo;
            join_t[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = jo;
        }
    }
    std::vector<std::string> names(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) names[static_cast<std::size_t>(i)] = "e" + std::to_string(i);
    names[0] = "zero";
    names[1] = "one";
    return Pba(Pba::Model::projector, std::move(names), std::move(compat), std::move(neg_t),
               std::move(meet_t), std::move(join_t), 0, 1, std::move(elems));
}

VertexSet atoms(const Pba& b) {
    VertexSet result;
    for (int x = 0; x < b.size(); ++x) {
        if (x == b.zero()) continue;
        bool minimal = true;
        for (int y = 0; y < b.size(); ++y) {
            if (y == b.zero() || y == x) continue;
            if (b.leq(y, x)) {
                minimal = false;
                break;
            }
        }
        if (minimal) result.push_back(x);
    }
    return result;
}

Graph atom_graph(const Pba& b) {
    const VertexSet a = atoms(b);
    std::vector<std::string> labels;
    for (int x : a) labels.push_back(b.name(x));
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (b.compatible(a[i], a[j])) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph(std::move(labels), edges);
}

bool is_exclusive(const Pba& b) {
    const int n = b.size();
    std::vector<std::vector<bool>> le(static_cast<std::size_t>(n),
                                      std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) le[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = b.leq(x, y);
    for (int c = 0; c < n; ++c) {
        const int nc = b.neg(c);
        for (int x = 0; x < n; ++x) {
            if (!le[static_cast<std::size_t>(x)][static_cast<std::size_t>(c)]) continue;
            for (int y = 0; y < n; ++y) {
                if (!le[static_cast<std::size_t>(y)][static_cast<std::size_t>(nc)]) continue;
                if (!b.compatible(x, y)) return false;
            }
        }
    }
    return true;
}

int pba_dimension(const Pba& b) { return graph_dimension(atom_graph(b)); }

std::vector<std::vector<int>> maximal_contexts(const Pba& b) {
    const VertexSet a = atoms(b);
    const Graph ag = atom_graph(b);
    std::vector<std::vector<int>> result;
    for (const VertexSet& clique : maximal_cliques(ag)) {
        if (clique.size() > 20) throw std::runtime_error("context too large to expand");
        std::set<int> ctx;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << clique.size()); ++s) {
            int acc = b.zero();
            for (std::size_t t = 0; t < clique.size(); ++t)
                if ((s >> t) & 1) acc = b.join(acc, a[static_cast<std::size_t>(clique[t])]);
            ctx.insert(acc);
        }
        for (int x : ctx) {
            if (!ctx.count(b.neg(x))) throw std::runtime_error("context not closed under negation");
            for (int y : ctx) {
                if (!b.compatible(x, y)) throw std::runtime_error("context contains incompatible elements");
                if (!ctx.count(b.meet(x, y)) || !ctx.count(b.join(x, y)))
                    throw std::runtime_error("context not closed under meet and join");
            }
        }
        result.emplace_back(ctx.begin(), ctx.end());
    }
    return result;
}

namespace {

bool is_clique_mask(const Graph& g, std::uint64_t m) {
    for (std::uint64_t t = m; t; t &= t - 1) {
        const int v = std::countr_zero(t);
        if ((m & ~(g.neighbor_mask(v) | (std::uint64_t{1} << v))) != 0) return false;
    }
    return true;
}

bool is_maximal_clique_mask(const Graph& g, std::uint64_t m) {
    if (m == 0) return false;
    if (!is_clique_mask(g, m)) return false;
    for (int w = 0; w < g.size(); ++w) {
        if ((m >> w) & 1) continue;
        if ((m & ~g.neighbor_mask(w)) == 0) return false;
    }
    return true;
}

bool same_join_masks(const Graph& g, std::uint64_t c1, std::uint64_t s1, std::uint64_t c2,
                     std::uint64_t s2) {
    return is_maximal_clique_mask(g, (c1 & ~s1) | s2) &&
           is_maximal_clique_mask(g, s1 | (c2 & ~s2));
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

bool is_same_join(const Graph& g, const CliqueSubset& a1, const CliqueSubset& a2) {
    const auto validate = [&](const CliqueSubset& a) {
        for (int v : a.clique)
            if (v < 0 || v >= g.size()) throw std::invalid_argument("clique vertex out of range");
        for (int v : a.subset)
            if (v < 0 || v >= g.size()) throw std::invalid_argument("subset vertex out of range");
        const std::uint64_t c = vertices_to_mask(a.clique);
        const std::uint64_t s = vertices_to_mask(a.subset);
        if (!is_maximal_clique_mask(g, c)) throw std::invalid_argument("not a maximal clique");
        if ((s & ~c) != 0) throw std::invalid_argument("subset reaches outside its clique");
        return std::pair<std::uint64_t, std::uint64_t>{c, s};
    };
    const auto [c1, s1] = validate(a1);
    const auto [c2, s2] = validate(a2);
    return same_join_masks(g, c1, s1, c2, s2);
}

Pba symbolic_from_atom_graph(const Graph& g) {
    if (g.size() == 0) throw std::invalid_argument("the empty graph is not an atom graph");
    const auto cliques = maximal_cliques(g);
    const int nc = static_cast<int>(cliques.size());
    std::vector<std::uint64_t> cmask(static_cast<std::size_t>(nc));
    for (int k = 0; k < nc; ++k) cmask[static_cast<std::size_t>(k)] = vertices_to_mask(cliques[static_cast<std::size_t>(k)]);

    std::size_t total = 0;
    for (const VertexSet& c : cliques) {
        if (c.size() > 16) throw std::runtime_error("atom graph expansion too large");
        total += std::size_t{1} << c.size();
        if (total > 65536) throw std::runtime_error("atom graph expansion too large");
    }

    std::vector<std::pair<int, std::uint64_t>> pairs;
    pairs.reserve(total);
    std::map<std::pair<int, std::uint64_t>, int> pair_id;
    for (int k = 0; k < nc; ++k) {
        const VertexSet& c = cliques[static_cast<std::size_t>(k)];
        for (std::uint64_t j = 0; j < (std::uint64_t{1} << c.size()); ++j) {
            std::uint64_t s = 0;
            for (std::size_t t = 0; t < c.size(); ++t)
                if ((j >> t) & 1) s |= std::uint64_t{1} << c[t];
            pair_id.emplace(std::pair<int, std::uint64_t>{k, s}, static_cast<int>(pairs.size()));
            pairs.emplace_back(k, s);
        }
    }

    UnionFind uf(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            if (pairs[i].first == pairs[j].first) continue;  // same clique never identifies
            if (same_join_masks(g, cmask[static_cast<std::size_t>(pairs[i].first)], pairs[i].second,
                                cmask[static_cast<std::size_t>(pairs[j].first)], pairs[j].second))
                uf.unite(static_cast<int>(i), static_cast<int>(j));
        }

    std::map<int, int> root_class;
    std::vector<std::vector<int>> members;
    std::vector<int> cls(pairs.size(), -1);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const int root = uf.find(static_cast<int>(i));
        auto it = root_class.find(root);
        if (it == root_class.end()) {
            it = root_class.emplace(root, static_cast<int>(members.size())).first;
            members.emplace_back();
        }
        cls[i] = it->second;
        members[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(i));
    }
    const int ne = static_cast<int>(members.size());
    const auto fail = [] { throw std::runtime_error("graph is not an acepBA atom graph"); };

    // The identification must already be transitive: every two members of a
    // class have to pass the exchange test directly.
    for (const std::vector<int>& m : members)
        for (std::size_t a = 0; a < m.size(); ++a)
            for (std::size_t b = a + 1; b < m.size(); ++b) {
                const auto& p = pairs[static_cast<std::size_t>(m[a])];
                const auto& q = pairs[static_cast<std::size_t>(m[b])];
                const bool same =
                    (p.first == q.first)
                        ? p.second == q.second
                        : same_join_masks(g, cmask[static_cast<std::size_t>(p.first)], p.second,
                                          cmask[static_cast<std::size_t>(q.first)], q.second);
                if (!same) fail();
            }

    std::vector<std::map<int, std::uint64_t>> in_clique(static_cast<std::size_t>(ne));
    for (int e = 0; e < ne; ++e)
        for (int pid : members[static_cast<std::size_t>(e)]) {
            const auto& [k, s] = pairs[static_cast<std::size_t>(pid)];
            if (!in_clique[static_cast<std::size_t>(e)].emplace(k, s).second) fail();
        }

    const auto cls_at = [&](int k, std::uint64_t s) {
        return cls[static_cast<std::size_t>(pair_id.at({k, s}))];
    };

    std::vector<int> neg(static_cast<std::size_t>(ne), -1);
    for (int e = 0; e < ne; ++e) {
        for (const auto& [k, s] : in_clique[static_cast<std::size_t>(e)]) {
            const int cand = cls_at(k, cmask[static_cast<std::size_t>(k)] ^ s);
            if (neg[static_cast<std::size_t>(e)] == -1)
                neg[static_cast<std::size_t>(e)] = cand;
            else if (neg[static_cast<std::size_t>(e)] != cand)
                fail();
        }
    }

    std::vector<std::vector<bool>> compat(static_cast<std::size_t>(ne),
                                          std::vector<bool>(static_cast<std::size_t>(ne), false));
    std::vector<std::vector<int>> meet(static_cast<std::size_t>(ne),
                                       std::vector<int>(static_cast<std::size_t>(ne), -1));
    std::vector<std::vector<int>> join = meet;
    for (int x = 0; x < ne; ++x) {
        compat[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)] = true;
        meet[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)] = x;
        join[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)] = x;
        for (int y = x + 1; y < ne; ++y) {
            bool share = false;
            int m = -1;
            int jo = -1;
            for (const auto& [k, sx] : in_clique[static_cast<std::size_t>(x)]) {
                const auto it = in_clique[static_cast<std::size_t>(y)].find(k);
                if (it == in_clique[static_cast<std::size_t>(y)].end()) continue;
                const int mk = cls_at(k, sx & it->second);
                const int jk = cls_at(k, sx | it->second);
                if (!share) {
                    share = true;
                    m = mk;
                    jo = jk;
                } else if (m != mk || jo != jk) {
                    fail();
                }
            }
            if (share) {
                compat[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = true;
                compat[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = true;
                meet[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = m;
                meet[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = m;
                join[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = jo;
                join[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = jo;
            }
        }
    }

    const int zero = cls_at(0, 0);
    const int one = cls_at(0, cmask[0]);
    if (zero == one) fail();

    std::vector<int> vertex_class(static_cast<std::size_t>(g.size()), -1);
    for (int v = 0; v < g.size(); ++v) {
        for (int k = 0; k < nc; ++k) {
            if ((cmask[static_cast<std::size_t>(k)] >> v) & 1) {
                vertex_class[static_cast<std::size_t>(v)] = cls_at(k, std::uint64_t{1} << v);
                break;
            }
        }
    }
    {
        const std::set<int> distinct(vertex_class.begin(), vertex_class.end());
        if (static_cast<int>(distinct.size()) != g.size()) fail();
    }
    for (int i = 0; i < g.size(); ++i)
        for (int j = i + 1; j < g.size(); ++j)
            if (compat[static_cast<std::size_t>(vertex_class[static_cast<std::size_t>(i)])]
                      [static_cast<std::size_t>(vertex_class[static_cast<std::size_t>(j)])] !=
                g.adjacent(i, j))
                fail();

    std::vector<std::string> names(static_cast<std::size_t>(ne));
    for (int e = 0; e < ne; ++e) names[static_cast<std::size_t>(e)] = "e" + std::to_string(e);
    names[static_cast<std::size_t>(zero)] = "zero";
    names[static_cast<std::size_t>(one)] = "one";
    for (int v = 0; v < g.size(); ++v)
        names[static_cast<std::size_t>(vertex_class[static_cast<std::size_t>(v)])] = g.label(v);
    for (int v = 0; v < g.size(); ++v) {
        const int nv = neg[static_cast<std::size_t>(vertex_class[static_cast<std::size_t>(v)])];
        if (names[static_cast<std::size_t>(nv)] == "e" + std::to_string(nv))
            names[static_cast<std::size_t>(nv)] = "~" + g.label(v);
    }
    {
        std::set<std::string> used;
        for (int e = 0; e < ne; ++e)
            while (!used.insert(names[static_cast<std::size_t>(e)]).second)
                names[static_cast<std::size_t>(e)] += "#" + std::to_string(e);
    }

    std::vector<SymbolicClass> classes(static_cast<std::size_t>(ne));
    for (int e = 0; e < ne; ++e)
        for (const auto& [k, s] : in_clique[static_cast<std::size_t>(e)])
            classes[static_cast<std::size_t>(e)].reps.emplace_back(k, mask_to_vertices(s));

    Pba b(Pba::Model::symbolic, std::move(names), std::move(compat), std::move(neg),
          std::move(meet), std::move(join), zero, one, {}, std::move(classes));

    VertexSet expected(vertex_class.begin(), vertex_class.end());
    std::sort(expected.begin(), expected.end());
    if (atoms(b) != expected) fail();
    return b;
}

bool pba_isomorphic(const Pba& b1, const Pba& b2) {
    if (!is_exclusive(b1) || !is_exclusive(b2))
        throw std::invalid_argument("isomorphism by atom graph requires exclusive algebras");
    return graph_isomorphic(atom_graph(b1), atom_graph(b2)).has_value();
}

}  // namespace qcontext
