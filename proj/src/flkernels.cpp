#include "flk/flkernels.hpp"

#include "flk/errors.hpp"

#include <algorithm>

namespace flk::flkernels {

using rootsys::Family;
using rootsys::RootSystem;

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool l_odd(const KernelParams& k) { return k.l > 1 && k.l % 2 == 1; }
bool g2_not_3(const KernelParams& k) { return k.type.family != Family::G || k.l % 3 != 0; }
bool char_ok(const KernelParams& k) { return k.characteristic == 0 || is_prime(k.characteristic); }
bool r_ok(const KernelParams& k) { return k.r >= 0 && (k.r == 0 || k.characteristic > 0); }
bool char0_good(const KernelParams& k) { return k.characteristic != 0 || rootsys::is_good(k.type, k.l); }
bool char0_bc(const KernelParams& k) {
    const bool bc = k.type.family == Family::B || k.type.family == Family::C;
    return k.characteristic != 0 || !bc || k.l > 3;
}
bool charp_good(const KernelParams& k) { return k.characteristic == 0 || rootsys::is_good(k.type, k.characteristic); }
bool charp_h(const KernelParams& k) { return k.characteristic == 0 || k.l > rootsys::coxeter_number(k.type); }
bool type_a1(const KernelParams& k) { return k.type == CartanType{Family::A, 1}; }
bool r_one(const KernelParams& k) { return k.r == 1; }
bool char_odd(const KernelParams& k) { return k.characteristic >= 3; }

const Hypothesis kLOdd{"l_odd", "ℓ must be odd and ℓ > 1", l_odd};
const Hypothesis kG2{"g2_l_coprime_3", "3 divides ℓ for G₂", g2_not_3};
const Hypothesis kChar{"char_prime", "characteristic must be 0 or a prime", char_ok};
const Hypothesis kR{"r_needs_char_p", "r ≥ 1 requires characteristic p > 0", r_ok};
const Hypothesis kChar0Good{"char0_l_good", "ℓ must be good for Φ when char k = 0", char0_good};
const Hypothesis kChar0BC{"char0_l_gt_3_BC", "ℓ>3 required for B/C", char0_bc};
const Hypothesis kCharpGood{"charp_p_good", "p must be good for Φ when char k = p > 0", charp_good};
const Hypothesis kCharpH{"charp_l_gt_h", "ℓ>h required when char k = p > 0", charp_h};
const Hypothesis kA1{"type_A1", "type must be A₁", type_a1};
const Hypothesis kROne{"r_eq_1", "r = 1 required", r_one};
const Hypothesis kCharOdd{"char_ge_3", "char k ≥ 3 required", char_odd};

}  // namespace

const std::vector<Hypothesis>& hypotheses(Theorem t) {
    // The common conditions on the root of unity come first, then the
    // conditions specific to each result.
    static const std::vector<Hypothesis> quantum{kChar, kLOdd, kG2, kR, kChar0Good, kChar0BC, kCharpGood, kCharpH};
    static const std::vector<Hypothesis> borel{kChar, kLOdd, kG2, kR};
    static const std::vector<Hypothesis> b1{kChar, kLOdd, kR, kA1, kROne, kCharOdd};
    static const std::vector<Hypothesis> ext{kChar, kLOdd, kR, kA1, kCharOdd};
    switch (t) {
    case Theorem::QuantumWild:
    case Theorem::CxH0: return quantum;
    case Theorem::BorelWild: return borel;
    case Theorem::B1Quiver: return b1;
    case Theorem::ExtLemma: return ext;
    }
    throw InvalidArgument("unknown theorem tag");
}

std::string to_string(Theorem t) {
    switch (t) {
    case Theorem::QuantumWild: return "quantumwild";
    case Theorem::BorelWild: return "borelwild";
    case Theorem::CxH0: return "cxh0";
    case Theorem::B1Quiver: return "b1quiver";
    case Theorem::ExtLemma: return "ext_lemma";
    }
    return "";
}

Theorem parse_theorem(const std::string& s) {
    for (Theorem t : {Theorem::QuantumWild, Theorem::BorelWild, Theorem::CxH0, Theorem::B1Quiver, Theorem::ExtLemma})
        if (to_string(t) == s) return t;
    throw ParseError("unknown theorem tag '" + s + "'");
}

Validation validate_params(const KernelParams& params, Theorem t) {
    params.type.validate();
    Validation v;
    for (const auto& h : hypotheses(t)) {
        v.checked.push_back(h.id);
        if (!h.holds(params)) {
            v.ok = false;
            v.violated = h.statement;
            return v;
        }
    }
    return v;
}

std::string to_string(VerdictKind k) {
    switch (k) {
    case VerdictKind::Finite: return "Finite";
    case VerdictKind::Tame: return "Tame";
    case VerdictKind::Wild: return "Wild";
    case VerdictKind::TameCandidate: return "TameCandidate";
    case VerdictKind::OutOfScope: return "OutOfScope";
    }
    return "";
}

nlohmann::json to_json(const Verdict& v) {
    return nlohmann::json{{"verdict", to_string(v.kind)}, {"note", v.note}, {"hypotheses_used", v.hypotheses_used}};
}

namespace {

void require_in_box(const Weight& w, int rank, int n, const char* what) {
    if (static_cast<int>(w.size()) != rank)
        throw InvalidArgument(std::string(what) + " has " + std::to_string(w.size()) + " coordinates, expected " +
                              std::to_string(rank));
    for (int c : w)
        if (c < 0 || c >= n)
            throw InvalidArgument(std::string(what) + " coordinate " + std::to_string(c) + " outside [0, " +
                                  std::to_string(n - 1) + "]");
}

int power(int base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        r *= base;
        if (r > (1LL << 30)) throw InvalidArgument("p^r too large");
    }
    return static_cast<int>(r);
}

// Runs the table for t; on failure the OutOfScope verdict is returned.
std::optional<Verdict> out_of_scope(const KernelParams& params, Theorem t, std::vector<std::string>& used) {
    const Validation v = validate_params(params, t);
    used = v.checked;
    if (v.ok) return std::nullopt;
    return Verdict{VerdictKind::OutOfScope, v.violated, used};
}

void require_valid(const KernelParams& params, Theorem t, const char* op) {
    const Validation v = validate_params(params, t);
    if (!v.ok) throw InvalidArgument(std::string(op) + ": " + v.violated);
}

}  // namespace

Verdict classify_small_quantum_block(const KernelParams& params, const Weight& lambda) {
    if (params.r != 0) throw InvalidArgument("classify_small_quantum_block: r must be 0");
    std::vector<std::string> used;
    if (auto v = out_of_scope(params, Theorem::QuantumWild, used)) return *v;
    const RootSystem rs(params.type);
    require_in_box(lambda, rs.rank(), params.l, "lambda");
    if (lambda == rootsys::steinberg_weight(rs, params.l)) return {VerdictKind::Finite, "simple Steinberg block", used};
    if (type_a1(params))
        return {VerdictKind::Tame, "trivial extension of Kronecker, special biserial, domestic", used};
    return {VerdictKind::Wild, "not the Steinberg block", used};
}

Verdict classify_borel(const KernelParams& params) {
    std::vector<std::string> used;
    if (auto v = out_of_scope(params, Theorem::BorelWild, used)) return *v;
    if (type_a1(params) && params.r == 0)
        return {VerdictKind::Finite,
                "Nakayama, ℓ²=" + std::to_string(params.l * params.l) + " indecomposables", used};
    return {VerdictKind::Wild, "", used};
}

Verdict classify_nilpotent(const KernelParams& params) {
    std::vector<std::string> used;
    if (auto v = out_of_scope(params, Theorem::BorelWild, used)) return *v;
    if (type_a1(params) && params.r == 0)
        return {VerdictKind::Finite, "uniserial, ℓ=" + std::to_string(params.l) + " indecomposables", used};
    return {VerdictKind::Wild, "", used};
}

Verdict classify_Gr_block(const KernelParams& params, const BlockLabel& label) {
    if (params.r == 0) throw InvalidArgument("classify_Gr_block: r = 0, use classify_small_quantum_block");
    std::vector<std::string> used;
    if (auto v = out_of_scope(params, Theorem::BorelWild, used)) return *v;
    const RootSystem rs(params.type);
    require_in_box(label.lambda, rs.rank(), params.l, "lambda");
    if (label.mu) require_in_box(*label.mu, rs.rank(), power(params.characteristic, params.r), "mu");
    if (!type_a1(params)) return {VerdictKind::Wild, "", used};
    if (label.lambda[0] != params.l - 1) return {VerdictKind::Wild, "block not induced from the λ = ℓ−1 part", used};
    return {VerdictKind::TameCandidate, "satisfies the necessary condition for tameness; sufficiency is not established", used};
}

int cx_lower_bound_H0(const KernelParams& params, const Weight& lambda) {
    require_valid(params, Theorem::CxH0, "cx_lower_bound_H0");
    const RootSystem rs(params.type);
    require_in_box(lambda, rs.rank(), params.l, "lambda");
    return static_cast<int>(rs.roots().size() - rootsys::phi_lambda(rs, lambda, params.l).size());
}

int cx_lower_bound_borel_trivial(const KernelParams& params) {
    require_valid(params, Theorem::BorelWild, "cx_lower_bound_borel_trivial");
    const RootSystem rs(params.type);
    const Weight zero(rs.rank(), 0);
    return static_cast<int>(rs.positive_roots().size() - rootsys::phi_lambda_positive(rs, zero, params.l).size());
}

std::vector<std::vector<int>> sl2_linkage_blocks(int l) {
    if (l < 3 || l % 2 == 0) throw InvalidArgument("sl2_linkage_blocks: l must be odd and >= 3");
    std::vector<std::vector<int>> blocks;
    for (int lambda = 0; lambda <= l - 2; ++lambda) {
        const int partner = l - 2 - lambda;
        if (lambda < partner) blocks.push_back({lambda, partner});
    }
    blocks.push_back({l - 1});
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

namespace {

std::vector<BlockLabel> all_labels(const KernelParams& params) {
    require_valid(params, Theorem::BorelWild, "labels");
    const RootSystem rs(params.type);
    const auto lambdas = rootsys::restricted_weights(rs, params.l);
    std::vector<BlockLabel> out;
    if (params.r == 0) {
        for (const auto& lambda : lambdas) out.push_back({lambda, std::nullopt});
        return out;
    }
    for (const auto& mu : rootsys::restricted_weights(rs, power(params.characteristic, params.r)))
        for (const auto& lambda : lambdas) out.push_back({lambda, mu});
    return out;
}

}  // namespace

std::vector<BlockLabel> simple_module_labels(const KernelParams& params) { return all_labels(params); }

std::vector<BlockLabel> projective_labels(const KernelParams& params) { return all_labels(params); }

bool is_special_block_weight(const KernelParams& params, const Weight& full_weight) {
    require_valid(params, Theorem::BorelWild, "is_special_block_weight");
    const RootSystem rs(params.type);
    if (static_cast<int>(full_weight.size()) != rs.rank()) throw InvalidArgument("weight has wrong rank");
    for (int c : full_weight) {
        const int d = c - (params.l - 1);
        if (((d % params.l) + params.l) % params.l != 0) return false;
    }
    return true;
}

namespace {

void require_l_p(int l, int p) {
    if (l < 3 || l % 2 == 0) throw InvalidArgument("l must be odd and >= 3");
    if (p < 3 || !is_prime(p)) throw InvalidArgument("p must be a prime >= 3");
}

std::string grid_id(int i, int j) { return std::to_string(i) + "," + std::to_string(j); }

}  // namespace

quiver::BoundQuiverAlgebra build_b1_quiver_sl2(int l, int p, int xi) {
    require_l_p(l, p);
    xi = ((xi % p) + p) % p;
    auto mi = [l](int i) { return ((i % l) + l) % l; };
    auto mj = [p](int j) { return ((j % p) + p) % p; };
    auto a = [&](int i, int j) { return "a_" + std::to_string(mi(i)) + "_" + std::to_string(mj(j)); };
    auto b = [&](int i, int j) { return "b_" + std::to_string(mi(i)) + "_" + std::to_string(mj(j)); };

    quiver::Quiver q;
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < p; ++j) q.add_vertex(grid_id(i, j));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < p; ++j) q.add_arrow(a(i, j), grid_id(i, j), grid_id(mi(i + 1), mj(j + xi)));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < p; ++j) q.add_arrow(b(i, j), grid_id(i, j), grid_id(i, mj(j + 1)));

    const quiver::Scalar one = quiver::Scalar::rational(1);
    std::vector<quiver::Relation> rels;
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j < p; ++j) {
            // b_{i+1,j+xi} a_ij - a_{i,j+1} b_ij
            rels.push_back({{one, quiver::make_path(q, {a(i, j), b(i + 1, j + xi)})},
                            {-one, quiver::make_path(q, {b(i, j), a(i, j + 1)})}});
        }
    }
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j < p; ++j) {
            std::vector<std::string> ids;
            for (int k = 0; k < l; ++k) ids.push_back(a(i + k, j + k * xi));
            rels.push_back({{one, quiver::make_path(q, ids)}});
        }
    }
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j < p; ++j) {
            std::vector<std::string> ids;
            for (int k = 0; k < p; ++k) ids.push_back(b(i, j + k));
            rels.push_back({{one, quiver::make_path(q, ids)}});
        }
    }
    return quiver::BoundQuiverAlgebra(std::move(q), std::move(rels));
}

std::vector<std::vector<int>> default_dist_adjacency(int p) {
    if (p < 3 || !is_prime(p)) throw InvalidArgument("p must be a prime >= 3");
    std::vector<std::vector<int>> adj(p, std::vector<int>(p, 0));
    for (int mu = 0; mu <= p - 2; ++mu) adj[mu][p - 2 - mu] = 2;
    return adj;
}

quiver::Quiver sl2_ext_quiver_r1(int l, int p, const std::optional<std::vector<std::vector<int>>>& dist_adjacency) {
    require_l_p(l, p);
    const auto adj = dist_adjacency ? *dist_adjacency : default_dist_adjacency(p);
    if (static_cast<int>(adj.size()) != p) throw InvalidArgument("dist_adjacency must be p x p");
    for (const auto& row : adj) {
        if (static_cast<int>(row.size()) != p) throw InvalidArgument("dist_adjacency must be p x p");
        for (int c : row)
            if (c < 0) throw InvalidArgument("dist_adjacency entries must be nonnegative");
    }

    quiver::Quiver q;
    for (int mu = 0; mu < p; ++mu)
        for (int lambda = 0; lambda < l; ++lambda) q.add_vertex(grid_id(mu, lambda));
    for (int mu = 0; mu < p; ++mu) {
        for (int lambda = 0; lambda <= l - 2; ++lambda) {
            const int lambda2 = l - 2 - lambda;
            for (int mu2 : {mu - 1, mu + 1}) {
                if (mu2 < 0 || mu2 >= p - 1) continue;
                q.add_arrow("x_" + std::to_string(mu) + "_" + std::to_string(lambda) + "_" + std::to_string(mu2),
                            grid_id(mu, lambda), grid_id(mu2, lambda2));
            }
        }
    }
    for (int mu = 0; mu < p; ++mu)
        for (int mu2 = 0; mu2 < p; ++mu2)
            for (int lambda = 0; lambda < l; ++lambda)
                for (int k = 0; k < adj[mu][mu2]; ++k)
                    q.add_arrow("s_" + std::to_string(mu) + "_" + std::to_string(lambda) + "_" + std::to_string(mu2) +
                                    "_" + std::to_string(k),
                                grid_id(mu, lambda), grid_id(mu2, lambda));
    return q;
}

bool steinberg_uniqueness_check(const KernelParams& params) {
    require_valid(params, Theorem::QuantumWild, "steinberg_uniqueness_check");
    const RootSystem rs(params.type);
    const std::size_t all = rs.positive_roots().size();
    std::vector<Weight> full;
    for (const auto& lambda : rootsys::restricted_weights(rs, params.l))
        if (rootsys::phi_lambda_positive(rs, lambda, params.l).size() == all) full.push_back(lambda);
    return full.size() == 1 && full.front() == rootsys::steinberg_weight(rs, params.l);
}

}  // namespace flk::flkernels
