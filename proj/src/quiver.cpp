#include "flk/quiver.hpp"

#include "flk/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace flk::quiver {

using linalg::SparseVector;
using linalg::Subspace;

// ---------------------------------------------------------------------------
// Quiver

std::size_t Quiver::add_vertex(const std::string& id) {
    if (id.empty()) throw InvalidArgument("vertex id must be nonempty");
    if (vertex_index_.count(id)) throw InvalidArgument("duplicate vertex '" + id + "'");
    vertex_index_.emplace(id, vertices_.size());
    vertices_.push_back(id);
    out_.emplace_back();
    in_.emplace_back();
    return vertices_.size() - 1;
}

std::size_t Quiver::add_arrow(const std::string& id, const std::string& source, const std::string& target) {
    if (id.empty()) throw InvalidArgument("arrow id must be nonempty");
    if (arrow_index_.count(id)) throw InvalidArgument("duplicate arrow '" + id + "'");
    const std::size_t s = vertex_index(source);
    const std::size_t t = vertex_index(target);
    const std::size_t k = arrows_.size();
    arrows_.push_back(Arrow{id, s, t});
    arrow_index_.emplace(id, k);
    out_[s].push_back(k);
    in_[t].push_back(k);
    return k;
}

std::size_t Quiver::vertex_index(const std::string& id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end()) throw InvalidArgument("unknown vertex '" + id + "'");
    return it->second;
}

std::size_t Quiver::arrow_index(const std::string& id) const {
    auto it = arrow_index_.find(id);
    if (it == arrow_index_.end()) throw InvalidArgument("unknown arrow '" + id + "'");
    return it->second;
}

Path make_path(const Quiver& q, const std::vector<std::string>& arrow_ids) {
    if (arrow_ids.empty()) throw InvalidArgument("make_path: use a trivial Path for length 0");
    Path p;
    for (const auto& id : arrow_ids) {
        const std::size_t a = q.arrow_index(id);
        if (p.arrows.empty()) {
            p.base = q.arrows()[a].source;
        } else if (q.arrows()[a].source != p.target(q)) {
            throw InvalidArgument("arrows do not compose at '" + id + "'");
        }
        p.arrows.push_back(a);
    }
    return p;
}

std::string to_string(const Quiver& q, const Path& p) {
    if (p.arrows.empty()) return "e_" + q.vertices()[p.base];
    std::string s;
    for (std::size_t k = p.arrows.size(); k-- > 0;) {
        s += q.arrows()[p.arrows[k]].id;
        if (k) s += '.';
    }
    return s;
}

// ---------------------------------------------------------------------------
// BoundQuiverAlgebra

BoundQuiverAlgebra::BoundQuiverAlgebra(Quiver q, std::vector<Relation> relations, int conductor)
    : quiver_(std::move(q)), relations_(std::move(relations)), conductor_(conductor == 2 ? 1 : conductor) {
    if (conductor < 1) throw InvalidArgument("field conductor must be positive");
    for (auto& rel : relations_) {
        rel.erase(std::remove_if(rel.begin(), rel.end(), [](const Term& t) { return t.coeff.is_zero(); }), rel.end());
        if (rel.empty()) throw InvalidArgument("relation has no nonzero terms");
        const Path& first = rel.front().path;
        for (const auto& t : rel) {
            if (t.path.length() < 2) throw InvalidArgument("relation paths must have length >= 2");
            if (t.path.length() != first.length())
                throw InvalidArgument("relation mixes path lengths; only homogeneous relations are supported");
            if (t.path.source() != first.source() || t.path.target(quiver_) != first.target(quiver_))
                throw InvalidArgument("relation paths are not parallel");
            if (!t.coeff.is_rational() && t.coeff.conductor() != conductor_)
                throw InvalidArgument("relation coefficient outside the coefficient field");
            for (std::size_t i = 1; i < t.path.arrows.size(); ++i) {
                if (quiver_.arrows()[t.path.arrows[i]].source != quiver_.arrows()[t.path.arrows[i - 1]].target)
                    throw InvalidArgument("relation path does not compose");
            }
        }
    }
}

int BoundQuiverAlgebra::default_length_cap() const {
    std::size_t longest = 0;
    for (const auto& rel : relations_)
        if (rel.size() == 1) longest = std::max(longest, rel.front().path.length());
    const std::size_t m = quiver_.arrow_count();
    return static_cast<int>(std::max(m * longest, m + 1));
}

void BoundQuiverAlgebra::compute_basis(std::optional<int> length_cap) {
    if (computed_) return;
    const int cap = length_cap.value_or(default_length_cap());
    if (cap < 1) throw InvalidArgument("length cap must be positive");
    const Scalar one(conductor_, mpq_class(1));

    basis_.clear();
    degree_offset_.clear();
    action_.clear();
    for (std::size_t v = 0; v < quiver_.vertex_count(); ++v) basis_.push_back(Path{v, {}});
    degree_offset_.push_back(0);
    degree_offset_.push_back(basis_.size());

    auto apply_arrow = [&](const SparseVector& vec, std::size_t arrow) {
        // vec holds global coordinates of degree d-1 basis elements with d-1 < computed degrees.
        SparseVector out;
        for (const auto& [g, c] : vec.entries()) {
            const std::size_t d = std::upper_bound(degree_offset_.begin(), degree_offset_.end(), g) -
                                  degree_offset_.begin() - 1;
            const std::size_t local = g - degree_offset_[d];
            if (d >= action_.size()) continue;
            const auto& table = action_[d][local];
            auto it = table.find(arrow);
            if (it != table.end()) out.axpy(c, it->second);
        }
        return out;
    };

    for (int d = 1;; ++d) {
        const std::size_t prev_lo = degree_offset_[d - 1];
        const std::size_t prev_hi = degree_offset_[d];
        const std::size_t prev_count = prev_hi - prev_lo;
        if (prev_count == 0) break;
        if (d > cap) {
            throw NotNilpotentBelowCap("paths of length " + std::to_string(cap) +
                                       " survive; the presentation is infinite-dimensional or the cap is too small");
        }

        // Candidates a * b for b in B_{d-1}.
        std::vector<std::pair<std::size_t, std::size_t>> cand;  // (local k, arrow)
        std::vector<std::unordered_map<std::size_t, std::size_t>> cand_index(prev_count);
        for (std::size_t k = 0; k < prev_count; ++k) {
            const std::size_t t = basis_[prev_lo + k].target(quiver_);
            for (std::size_t a : quiver_.arrows_from(t)) {
                cand_index[k].emplace(a, cand.size());
                cand.emplace_back(k, a);
            }
        }

        // Images of the relations, pi_d(rho * b).
        Subspace rel_space;
        for (const auto& rel : relations_) {
            const std::size_t r = rel.front().path.length();
            if (static_cast<int>(r) > d) continue;
            const std::size_t lo = degree_offset_[d - r];
            const std::size_t hi = degree_offset_[d - r + 1];
            for (std::size_t g = lo; g < hi; ++g) {
                if (basis_[g].target(quiver_) != rel.front().path.source()) continue;
                SparseVector image;
                for (const auto& term : rel) {
                    SparseVector v = SparseVector::unit(g, one);
                    for (std::size_t i = 0; i + 1 < r; ++i) v = apply_arrow(v, term.path.arrows[i]);
                    const std::size_t last = term.path.arrows.back();
                    SparseVector lifted;
                    for (const auto& [gg, c] : v.entries()) {
                        const std::size_t k = gg - prev_lo;
                        auto it = cand_index[k].find(last);
                        if (it != cand_index[k].end()) lifted.axpy(c, SparseVector::unit(it->second, one));
                    }
                    image.axpy(term.coeff, lifted);
                }
                rel_space.insert(image);
            }
        }

        // Non-pivot candidates form B_d.
        std::set<std::size_t> pivots;
        for (auto p : rel_space.pivots()) pivots.insert(p);
        std::vector<std::size_t> to_global(cand.size(), SIZE_MAX);
        for (std::size_t c = 0; c < cand.size(); ++c) {
            if (pivots.count(c)) continue;
            to_global[c] = basis_.size();
            Path p = basis_[prev_lo + cand[c].first];
            p.arrows.push_back(cand[c].second);
            basis_.push_back(std::move(p));
        }
        degree_offset_.push_back(basis_.size());

        std::vector<std::unordered_map<std::size_t, SparseVector>> table(prev_count);
        for (std::size_t c = 0; c < cand.size(); ++c) {
            SparseVector red = rel_space.reduce(SparseVector::unit(c, one));
            SparseVector glob;
            for (const auto& [idx, val] : red.entries()) glob.set(to_global[idx], val);
            table[cand[c].first].emplace(cand[c].second, std::move(glob));
        }
        action_.push_back(std::move(table));
    }
    computed_ = true;
}

void BoundQuiverAlgebra::require_basis() const {
    if (!computed_) throw InvalidArgument("path basis has not been computed");
}

const std::vector<Path>& BoundQuiverAlgebra::basis() const {
    require_basis();
    return basis_;
}

SparseVector BoundQuiverAlgebra::normal_form(const Path& p) const {
    require_basis();
    const Scalar one(conductor_, mpq_class(1));
    SparseVector v = SparseVector::unit(p.base, one);
    for (std::size_t a : p.arrows) {
        SparseVector out;
        for (const auto& [g, c] : v.entries()) {
            const std::size_t d =
                std::upper_bound(degree_offset_.begin(), degree_offset_.end(), g) - degree_offset_.begin() - 1;
            if (d >= action_.size()) continue;
            const auto& tab = action_[d][g - degree_offset_[d]];
            auto it = tab.find(a);
            if (it != tab.end()) out.axpy(c, it->second);
        }
        v = std::move(out);
        if (v.is_zero()) break;
    }
    return v;
}

SparseVector BoundQuiverAlgebra::normal_form(const Relation& r) const {
    SparseVector v;
    for (const auto& t : r) v.axpy(t.coeff, normal_form(t.path));
    return v;
}

bool BoundQuiverAlgebra::proportional_mod_ideal(const Path& p, const Path& q) const {
    SparseVector u = normal_form(p);
    SparseVector w = normal_form(q);
    if (u.is_zero() || w.is_zero() || u.nnz() != w.nnz()) return false;
    Scalar c = u.entries().front().second / w.entries().front().second;
    return u == c * w;
}

PathBasis path_basis(BoundQuiverAlgebra& bqa, std::optional<int> length_cap) {
    bqa.compute_basis(length_cap);
    return PathBasis{bqa.basis(), bqa.dimension()};
}

std::vector<std::size_t> projective_dims(const BoundQuiverAlgebra& bqa) {
    std::vector<std::size_t> dims(bqa.quiver().vertex_count(), 0);
    for (const auto& p : bqa.basis()) ++dims[p.source()];
    return dims;
}

BiserialReport is_special_biserial(const BoundQuiverAlgebra& bqa) {
    const Quiver& q = bqa.quiver();
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        if (q.arrows_from(v).size() > 2)
            return {false, "SB1", "more than two arrows start at " + q.vertices()[v]};
    }
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        if (q.arrows_to(v).size() > 2)
            return {false, "SB1'", "more than two arrows end at " + q.vertices()[v]};
    }
    auto composite = [&](std::size_t first, std::size_t second) { return Path{q.arrows()[first].source, {first, second}}; };
    for (std::size_t g = 0; g < q.arrow_count(); ++g) {
        std::vector<std::string> alive;
        for (std::size_t a : q.arrows_from(q.arrows()[g].target))
            if (!bqa.in_ideal(composite(g, a))) alive.push_back(q.arrows()[a].id);
        if (alive.size() > 1)
            return {false, "SB2", alive[0] + "." + q.arrows()[g].id + " and " + alive[1] + "." + q.arrows()[g].id + " are both nonzero"};
    }
    for (std::size_t g = 0; g < q.arrow_count(); ++g) {
        std::vector<std::string> alive;
        for (std::size_t a : q.arrows_to(q.arrows()[g].source))
            if (!bqa.in_ideal(composite(a, g))) alive.push_back(q.arrows()[a].id);
        if (alive.size() > 1)
            return {false, "SB2'", q.arrows()[g].id + "." + alive[0] + " and " + q.arrows()[g].id + "." + alive[1] + " are both nonzero"};
    }
    return {true, "", ""};
}

// ---------------------------------------------------------------------------
// Graph classification

std::string to_string(GraphKind k) {
    switch (k) {
    case GraphKind::Dynkin: return "Dynkin";
    case GraphKind::Euclidean: return "Euclidean";
    case GraphKind::Neither: return "Neither";
    }
    return "";
}

namespace {

GraphClass classify_component(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    const GraphClass neither{GraphKind::Neither, ""};
    std::vector<std::vector<std::size_t>> adj(n);
    std::map<std::pair<std::size_t, std::size_t>, int> mult;
    std::size_t loops = 0;
    for (auto [u, v] : edges) {
        if (u == v) {
            ++loops;
            continue;
        }
        adj[u].push_back(v);
        adj[v].push_back(u);
        ++mult[{std::min(u, v), std::max(u, v)}];
    }
    const std::size_t m = edges.size();
    if (loops > 0) return (n == 1 && m == 1) ? GraphClass{GraphKind::Euclidean, "~A0"} : neither;
    for (const auto& [e, k] : mult) {
        if (k > 1) return (n == 2 && m == 2) ? GraphClass{GraphKind::Euclidean, "~A1"} : neither;
    }
    if (m == n) {
        for (const auto& a : adj)
            if (a.size() != 2) return neither;
        return {GraphKind::Euclidean, "~A" + std::to_string(n - 1)};
    }
    if (m != n - 1) return neither;

    // Trees.
    std::vector<std::size_t> branch;
    for (std::size_t v = 0; v < n; ++v) {
        if (adj[v].size() > 4) return neither;
        if (adj[v].size() == 4) {
            if (n == 5) return {GraphKind::Euclidean, "~D4"};
            return neither;
        }
        if (adj[v].size() == 3) branch.push_back(v);
    }
    if (branch.empty()) return {GraphKind::Dynkin, "A" + std::to_string(n)};
    auto arm_length = [&](std::size_t from, std::size_t first) {
        std::size_t len = 1, prev = from, cur = first;
        while (adj[cur].size() == 2) {
            std::size_t nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = nxt;
            ++len;
        }
        return adj[cur].size() == 1 ? len : SIZE_MAX;  // SIZE_MAX: runs into another branch point
    };
    if (branch.size() == 1) {
        std::vector<std::size_t> arms;
        for (std::size_t w : adj[branch[0]]) arms.push_back(arm_length(branch[0], w));
        std::sort(arms.begin(), arms.end());
        const auto a = arms[0], b = arms[1], c = arms[2];
        if (a == 1 && b == 1) return {GraphKind::Dynkin, "D" + std::to_string(n)};
        if (a == 1 && b == 2 && c >= 2 && c <= 4) return {GraphKind::Dynkin, "E" + std::to_string(n)};
        if (a == 2 && b == 2 && c == 2) return {GraphKind::Euclidean, "~E6"};
        if (a == 1 && b == 3 && c == 3) return {GraphKind::Euclidean, "~E7"};
        if (a == 1 && b == 2 && c == 5) return {GraphKind::Euclidean, "~E8"};
        return neither;
    }
    if (branch.size() == 2) {
        for (std::size_t v : branch) {
            int leaves = 0;
            for (std::size_t w : adj[v])
                if (adj[w].size() == 1) ++leaves;
            if (leaves < 2) return neither;
        }
        return {GraphKind::Euclidean, "~D" + std::to_string(n - 1)};
    }
    return neither;
}

}  // namespace

GraphClass graph_class(const Quiver& q) {
    const std::size_t n = q.vertex_count();
    if (n == 0) return {GraphKind::Neither, ""};
    std::vector<std::size_t> comp(n, SIZE_MAX);
    std::size_t ncomp = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] != SIZE_MAX) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            auto visit = [&](std::size_t w) {
                if (comp[w] == SIZE_MAX) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
            };
            for (std::size_t a : q.arrows_from(v)) visit(q.arrows()[a].target);
            for (std::size_t a : q.arrows_to(v)) visit(q.arrows()[a].source);
        }
        ++ncomp;
    }
    std::vector<GraphClass> parts;
    for (std::size_t c = 0; c < ncomp; ++c) {
        std::vector<std::size_t> local(n, SIZE_MAX);
        std::size_t k = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (comp[v] == c) local[v] = k++;
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (const auto& a : q.arrows())
            if (comp[a.source] == c) edges.emplace_back(local[a.source], local[a.target]);
        parts.push_back(classify_component(k, edges));
    }
    if (parts.size() == 1) return parts.front();
    std::string label;
    for (const auto& p : parts) {
        if (p.kind != GraphKind::Dynkin) return {GraphKind::Neither, ""};
        label += (label.empty() ? "" : "+") + p.label;
    }
    return {GraphKind::Dynkin, label};
}

// ---------------------------------------------------------------------------
// Configurations

namespace {

struct Square {
    const char* source;
    const char* via_first;
    const char* via_second;
    const char* sink;
};

constexpr const char* kUngerVertices[] = {"R1C1", "R1C2", "R1C3", "R2C2", "R2C3", "R2C4", "R3C3", "R3C4"};
constexpr const char* kUngerArrows[][3] = {
    {"h11", "R1C1", "R1C2"}, {"h12", "R1C2", "R1C3"}, {"u22", "R2C2", "R1C2"},
    {"h22", "R2C2", "R2C3"}, {"u23", "R2C3", "R1C3"}, {"h23", "R2C3", "R2C4"},
    {"u33", "R3C3", "R2C3"}, {"h33", "R3C3", "R3C4"}, {"u34", "R3C4", "R2C4"},
};
constexpr Square kUngerSquares[] = {{"R2C2", "R1C2", "R2C3", "R1C3"}, {"R3C3", "R2C3", "R3C4", "R2C4"}};

}  // namespace

Quiver unger_grid_pattern() {
    Quiver q;
    for (const char* v : kUngerVertices) q.add_vertex(v);
    for (const auto& a : kUngerArrows) q.add_arrow(a[0], a[1], a[2]);
    return q;
}

BoundQuiverAlgebra unger_grid_algebra() {
    Quiver q = unger_grid_pattern();
    const Scalar one = Scalar::rational(1);
    std::vector<Relation> rels;
    rels.push_back({{one, make_path(q, {"u22", "h12"})}, {-one, make_path(q, {"h22", "u23"})}});
    rels.push_back({{one, make_path(q, {"u33", "h23"})}, {-one, make_path(q, {"h33", "u34"})}});
    return BoundQuiverAlgebra(std::move(q), std::move(rels));
}

namespace {

std::vector<Occurrence> find_unger(const BoundQuiverAlgebra& bqa, std::size_t limit) {
    const Quiver& target = bqa.quiver();
    const Quiver pattern = unger_grid_pattern();
    const std::size_t pv = pattern.vertex_count();
    const std::size_t pa = pattern.arrow_count();

    // Arrow order in which each arrow touches an already placed vertex.
    std::vector<std::size_t> order;
    {
        std::vector<bool> placed_v(pv, false), used(pa, false);
        placed_v[0] = true;
        while (order.size() < pa) {
            for (std::size_t a = 0; a < pa; ++a) {
                if (used[a]) continue;
                const auto& ar = pattern.arrows()[a];
                if (placed_v[ar.source] || placed_v[ar.target]) {
                    used[a] = true;
                    placed_v[ar.source] = placed_v[ar.target] = true;
                    order.push_back(a);
                }
            }
        }
    }

    // Composite pairs (first, second) of pattern arrows, tagged by square.
    struct Pair2 {
        std::size_t first, second;
    };
    std::vector<Pair2> free_pairs;
    std::vector<std::pair<Pair2, Pair2>> square_pairs;
    auto arrow_between = [&](const char* s, const char* t) {
        for (std::size_t a = 0; a < pa; ++a) {
            const auto& ar = pattern.arrows()[a];
            if (pattern.vertices()[ar.source] == s && pattern.vertices()[ar.target] == t) return a;
        }
        throw std::logic_error("pattern arrow missing");
    };
    std::set<std::pair<std::size_t, std::size_t>> in_square;
    for (const auto& sq : kUngerSquares) {
        Pair2 p1{arrow_between(sq.source, sq.via_first), arrow_between(sq.via_first, sq.sink)};
        Pair2 p2{arrow_between(sq.source, sq.via_second), arrow_between(sq.via_second, sq.sink)};
        square_pairs.emplace_back(p1, p2);
        in_square.insert({p1.first, p1.second});
        in_square.insert({p2.first, p2.second});
    }
    for (std::size_t a = 0; a < pa; ++a)
        for (std::size_t b : pattern.arrows_from(pattern.arrows()[a].target))
            if (!in_square.count({a, b})) free_pairs.push_back({a, b});

    std::vector<std::size_t> vmap(pv, SIZE_MAX), amap(pa, SIZE_MAX);
    std::vector<bool> vused(target.vertex_count(), false), aused(target.arrow_count(), false);
    std::vector<Occurrence> found;

    auto composite = [&](const Pair2& p) {
        return Path{target.arrows()[amap[p.first]].source, {amap[p.first], amap[p.second]}};
    };
    auto relations_hold = [&]() {
        for (const auto& [p1, p2] : square_pairs)
            if (!bqa.proportional_mod_ideal(composite(p1), composite(p2))) return false;
        for (const auto& p : free_pairs)
            if (bqa.in_ideal(composite(p))) return false;
        return true;
    };

    std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
        if (depth == pa) {
            if (!relations_hold()) return false;
            Occurrence occ;
            for (std::size_t v = 0; v < pv; ++v) occ.vertices[pattern.vertices()[v]] = target.vertices()[vmap[v]];
            for (std::size_t a = 0; a < pa; ++a) occ.arrows[pattern.arrows()[a].id] = target.arrows()[amap[a]].id;
            found.push_back(std::move(occ));
            return limit != 0 && found.size() >= limit;
        }
        const std::size_t a = order[depth];
        const auto& ar = pattern.arrows()[a];
        std::vector<std::size_t> candidates;
        if (vmap[ar.source] != SIZE_MAX) candidates = target.arrows_from(vmap[ar.source]);
        else if (vmap[ar.target] != SIZE_MAX) candidates = target.arrows_to(vmap[ar.target]);
        else
            for (std::size_t k = 0; k < target.arrow_count(); ++k) candidates.push_back(k);
        for (std::size_t c : candidates) {
            if (aused[c]) continue;
            const auto& tc = target.arrows()[c];
            const bool new_s = vmap[ar.source] == SIZE_MAX;
            const bool new_t = vmap[ar.target] == SIZE_MAX;
            if (!new_s && vmap[ar.source] != tc.source) continue;
            if (!new_t && vmap[ar.target] != tc.target) continue;
            if (new_s && vused[tc.source]) continue;
            if (new_t && vused[tc.target]) continue;
            if (new_s && new_t && tc.source == tc.target) continue;
            if (new_s) {
                vmap[ar.source] = tc.source;
                vused[tc.source] = true;
            }
            if (new_t) {
                vmap[ar.target] = tc.target;
                vused[tc.target] = true;
            }
            amap[a] = c;
            aused[c] = true;
            const bool stop = extend(depth + 1);
            aused[c] = false;
            amap[a] = SIZE_MAX;
            if (new_t) {
                vused[tc.target] = false;
                vmap[ar.target] = SIZE_MAX;
            }
            if (new_s) {
                vused[tc.source] = false;
                vmap[ar.source] = SIZE_MAX;
            }
            if (stop) return true;
        }
        return false;
    };
    if (target.vertex_count() >= pv && target.arrow_count() >= pa) extend(0);
    return found;
}

std::vector<Occurrence> find_kronecker_plus_source(const Quiver& q, std::size_t limit) {
    std::vector<Occurrence> found;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        std::map<std::size_t, std::vector<std::size_t>> by_source;
        for (std::size_t a : q.arrows_to(v)) by_source[q.arrows()[a].source].push_back(a);
        for (const auto& [u, pair] : by_source) {
            if (u == v || pair.size() < 2) continue;
            for (const auto& [w, single] : by_source) {
                if (w == u || w == v) continue;
                Occurrence occ;
                occ.vertices = {{"u", q.vertices()[u]}, {"v", q.vertices()[v]}, {"w", q.vertices()[w]}};
                occ.arrows = {{"x1", q.arrows()[pair[0]].id}, {"x2", q.arrows()[pair[1]].id}, {"y", q.arrows()[single[0]].id}};
                found.push_back(std::move(occ));
                if (limit != 0 && found.size() >= limit) return found;
            }
        }
    }
    return found;
}

}  // namespace

std::vector<Occurrence> find_config(const BoundQuiverAlgebra& bqa, Pattern pattern, std::size_t limit) {
    switch (pattern) {
    case Pattern::UngerGrid: return find_unger(bqa, limit);
    case Pattern::KroneckerPlusSource: return find_kronecker_plus_source(bqa.quiver(), limit);
    }
    return {};
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string export_dot(const Quiver& q) {
    std::ostringstream os;
    os << "digraph Q {\n";
    std::vector<std::size_t> vs(q.vertex_count());
    std::iota(vs.begin(), vs.end(), 0);
    std::sort(vs.begin(), vs.end(), [&](auto a, auto b) { return q.vertices()[a] < q.vertices()[b]; });
    for (auto v : vs) os << "  " << quoted(q.vertices()[v]) << ";\n";
    std::vector<std::size_t> es(q.arrow_count());
    std::iota(es.begin(), es.end(), 0);
    std::sort(es.begin(), es.end(), [&](auto a, auto b) {
        const auto& x = q.arrows()[a];
        const auto& y = q.arrows()[b];
        return std::tie(q.vertices()[x.source], q.vertices()[x.target], x.id) <
               std::tie(q.vertices()[y.source], q.vertices()[y.target], y.id);
    });
    for (auto e : es) {
        const auto& a = q.arrows()[e];
        os << "  " << quoted(q.vertices()[a.source]) << " -> " << quoted(q.vertices()[a.target])
           << " [label=" << quoted(a.id) << "];\n";
    }
    os << "}\n";
    return os.str();
}

BoundQuiverAlgebra parse_presentation(const std::string& text) {
    Quiver q;
    int conductor = 1;
    std::vector<std::string> rel_lines;
    std::vector<int> rel_line_no;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    auto fail = [&](const std::string& msg) { throw ParseError("line " + std::to_string(line_no) + ": " + msg); };
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "vertex") {
            std::string id, extra;
            if (!(ls >> id) || (ls >> extra)) fail("expected 'vertex <id>'");
            try {
                q.add_vertex(id);
            } catch (const InvalidArgument& e) {
                fail(e.what());
            }
        } else if (kw == "arrow") {
            std::string id, s, t, extra;
            if (!(ls >> id >> s >> t) || (ls >> extra)) fail("expected 'arrow <id> <src> <dst>'");
            try {
                q.add_arrow(id, s, t);
            } catch (const InvalidArgument& e) {
                fail(e.what());
            }
        } else if (kw == "field") {
            std::string extra;
            if (!(ls >> conductor) || conductor < 1 || (ls >> extra)) fail("expected 'field <positive integer>'");
        } else if (kw == "rel") {
            std::string rest;
            std::getline(ls, rest);
            rel_lines.push_back(rest);
            rel_line_no.push_back(line_no);
        } else {
            fail("unknown keyword '" + kw + "'");
        }
    }

    std::vector<Relation> rels;
    for (std::size_t r = 0; r < rel_lines.size(); ++r) {
        line_no = rel_line_no[r];
        // Split into signed terms.
        std::string s;
        for (char c : rel_lines[r])
            if (!std::isspace(static_cast<unsigned char>(c))) s += c;
        if (s.empty()) fail("empty relation");
        Relation rel;
        std::size_t pos = 0;
        while (pos < s.size()) {
            int sign = 1;
            while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
                if (s[pos] == '-') sign = -sign;
                ++pos;
            }
            std::size_t end = pos;
            while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
            std::string term = s.substr(pos, end - pos);
            pos = end;
            if (term.empty()) fail("dangling sign in relation");
            mpq_class coeff = 1;
            if (auto star = term.find('*'); star != std::string::npos) {
                try {
                    coeff = mpq_class(term.substr(0, star));
                } catch (const std::invalid_argument&) {
                    fail("bad coefficient '" + term.substr(0, star) + "'");
                }
                if (coeff.get_den() == 0) fail("zero denominator");
                coeff.canonicalize();
                term = term.substr(star + 1);
            }
            std::vector<std::string> ids;
            std::size_t a = 0;
            while (true) {
                std::size_t dot = term.find('.', a);
                ids.push_back(term.substr(a, dot == std::string::npos ? std::string::npos : dot - a));
                if (ids.back().empty()) fail("empty arrow name in '" + term + "'");
                if (dot == std::string::npos) break;
                a = dot + 1;
            }
            std::reverse(ids.begin(), ids.end());  // written right to left
            try {
                rel.push_back(Term{Scalar::rational(sign * coeff), make_path(q, ids)});
            } catch (const InvalidArgument& e) {
                fail(e.what());
            }
        }
        rels.push_back(std::move(rel));
    }
    try {
        return BoundQuiverAlgebra(std::move(q), std::move(rels), conductor);
    } catch (const ParseError&) {
        throw;
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
    }
}

nlohmann::json basis_to_json(const BoundQuiverAlgebra& bqa) {
    const Quiver& q = bqa.quiver();
    nlohmann::json paths = nlohmann::json::array();
    for (const auto& p : bqa.basis()) {
        paths.push_back({{"path", to_string(q, p)},
                         {"source", q.vertices()[p.source()]},
                         {"target", q.vertices()[p.target(q)]},
                         {"length", p.length()}});
    }
    nlohmann::json proj = nlohmann::json::object();
    auto dims = projective_dims(bqa);
    for (std::size_t v = 0; v < q.vertex_count(); ++v) proj[q.vertices()[v]] = dims[v];
    return {{"dimension", bqa.dimension()}, {"basis", paths}, {"projective_dims", proj}};
}

}  // namespace flk::quiver
