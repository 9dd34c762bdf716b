#pragma once

// Bound quiver algebras kQ/I: presentations, graded path bases, special
// biserial recognition, underlying-graph classification and matching of two
// fixed wild configurations.
//
// Paths are stored in application order (arrows[0] is applied first) and
// printed right to left, so "b.a" is the path that runs a and then b.

#include "flk/linalg.hpp"
#include "flk/qarith.hpp"

#include "json.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace flk::quiver {

using Scalar = qarith::CyclotomicNumber;

struct Arrow {
    std::string id;
    std::size_t source;
    std::size_t target;
};

class Quiver {
public:
    std::size_t add_vertex(const std::string& id);
    std::size_t add_arrow(const std::string& id, const std::string& source, const std::string& target);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t arrow_count() const { return arrows_.size(); }
    bool has_vertex(const std::string& id) const { return vertex_index_.count(id) != 0; }
    std::size_t vertex_index(const std::string& id) const;
    std::size_t arrow_index(const std::string& id) const;
    const std::vector<std::size_t>& arrows_from(std::size_t v) const { return out_[v]; }
    const std::vector<std::size_t>& arrows_to(std::size_t v) const { return in_[v]; }

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::unordered_map<std::string, std::size_t> vertex_index_;
    std::unordered_map<std::string, std::size_t> arrow_index_;
    std::vector<std::vector<std::size_t>> out_, in_;
};

struct Path {
    std::size_t base = 0;             ///< source vertex; the only data of a trivial path
    std::vector<std::size_t> arrows;  ///< application order

    std::size_t length() const { return arrows.size(); }
    std::size_t source() const { return base; }
    std::size_t target(const Quiver& q) const { return arrows.empty() ? base : q.arrows()[arrows.back()].target; }
    friend bool operator==(const Path&, const Path&) = default;
};

/// Builds a path from arrow ids listed in application order; checks composability.
Path make_path(const Quiver& q, const std::vector<std::string>& arrow_ids);
/// "e_v" for trivial paths, otherwise arrow ids joined by '.', last applied first.
std::string to_string(const Quiver& q, const Path& p);

struct Term {
    Scalar coeff;
    Path path;
};
using Relation = std::vector<Term>;

class BoundQuiverAlgebra {
public:
    /// Relations must be homogeneous combinations of parallel paths of length
    /// at least 2, with coefficients in Q(zeta_conductor).
    BoundQuiverAlgebra(Quiver q, std::vector<Relation> relations, int conductor = 1);

    const Quiver& quiver() const { return quiver_; }
    const std::vector<Relation>& relations() const { return relations_; }
    int conductor() const { return conductor_; }

    /// max(#arrows * longest monomial relation, #arrows + 1).
    int default_length_cap() const;
    /// Computes the basis degree by degree; throws NotNilpotentBelowCap when
    /// paths of length cap survive. Idempotent.
    void compute_basis(std::optional<int> length_cap = std::nullopt);
    bool has_basis() const { return computed_; }
    const std::vector<Path>& basis() const;
    std::size_t dimension() const { return basis().size(); }
    /// Coordinates of the residue class of p in basis() (zero iff p is in I).
    linalg::SparseVector normal_form(const Path& p) const;
    linalg::SparseVector normal_form(const Relation& r) const;
    bool in_ideal(const Path& p) const { return normal_form(p).is_zero(); }
    /// Both nonzero modulo I and equal up to a nonzero scalar.
    bool proportional_mod_ideal(const Path& p, const Path& q) const;

private:
    void require_basis() const;

    Quiver quiver_;
    std::vector<Relation> relations_;
    int conductor_;
    bool computed_ = false;
    std::vector<Path> basis_;
    std::vector<std::size_t> degree_offset_;  // basis indices of degree d start here
    // action_[d][k][a]: normal form of arrow a composed after basis element
    // (degree d, local index k), in global basis coordinates.
    std::vector<std::vector<std::unordered_map<std::size_t, linalg::SparseVector>>> action_;
};

struct PathBasis {
    std::vector<Path> basis;
    std::size_t dimension;
};
PathBasis path_basis(BoundQuiverAlgebra& bqa, std::optional<int> length_cap = std::nullopt);

/// Number of basis paths starting at each vertex, in vertex order.
std::vector<std::size_t> projective_dims(const BoundQuiverAlgebra& bqa);

struct BiserialReport {
    bool special_biserial;
    std::string violated;  ///< "SB1", "SB1'", "SB2", "SB2'" or empty
    std::string detail;
};
BiserialReport is_special_biserial(const BoundQuiverAlgebra& bqa);

enum class GraphKind { Dynkin, Euclidean, Neither };
struct GraphClass {
    GraphKind kind;
    std::string label;  ///< e.g. "A3", "~A1", "D4+A1"; empty for Neither
};
GraphClass graph_class(const Quiver& q);
std::string to_string(GraphKind k);

enum class Pattern { UngerGrid, KroneckerPlusSource };

struct Occurrence {
    std::map<std::string, std::string> vertices;  ///< pattern vertex -> quiver vertex
    std::map<std::string, std::string> arrows;    ///< pattern arrow -> quiver arrow
};

/// The staircase from the wildness proof for the Borel part: vertices R1C1,
/// R1C2, R1C3, R2C2, R2C3, R2C4, R3C3, R3C4, rows joined by rightward arrows,
/// upward arrows between rows, and two dotted commuting squares with sources
/// R2C2 and R3C3.
Quiver unger_grid_pattern();
BoundQuiverAlgebra unger_grid_algebra();

/// UngerGrid needs the basis (square composites must be nonzero and
/// proportional modulo I, every other composite of two pattern arrows nonzero).
/// KroneckerPlusSource matches u => v <- w with u, v, w distinct.
std::vector<Occurrence> find_config(const BoundQuiverAlgebra& bqa, Pattern pattern, std::size_t limit = 0);

/// Deterministic DOT text, vertices sorted by id.
std::string export_dot(const Quiver& q);

/// Text presentation: `vertex <id>`, `arrow <id> <src> <dst>`, `field <n>`,
/// `rel [c*]a_k.....a_1 [+|- ...]` with rational c; '#' starts a comment.
BoundQuiverAlgebra parse_presentation(const std::string& text);

nlohmann::json basis_to_json(const BoundQuiverAlgebra& bqa);

}  // namespace flk::quiver
