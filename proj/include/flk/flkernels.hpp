#pragma once

// Representation type of Frobenius-Lusztig kernels and their Borel and
// nilpotent parts: parameter hypotheses, verdicts, complexity lower bounds,
// sl2 linkage, module labelings and the two explicit quivers.

#include "flk/quiver.hpp"
#include "flk/rootsys.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace flk::flkernels {

using rootsys::CartanType;
using rootsys::Weight;

/// Results whose hypotheses are tabulated.
enum class Theorem { QuantumWild, BorelWild, CxH0, B1Quiver, ExtLemma };
std::string to_string(Theorem t);
Theorem parse_theorem(const std::string& s);

struct KernelParams {
    CartanType type{rootsys::Family::A, 1};
    int characteristic = 0;  ///< 0 or a prime
    int l = 3;
    int r = 0;
};

struct Hypothesis {
    std::string id;
    std::string statement;  ///< reported verbatim when violated
    bool (*holds)(const KernelParams&);
};

/// The hypothesis table of a theorem, in the order it is checked.
const std::vector<Hypothesis>& hypotheses(Theorem t);

struct Validation {
    bool ok = true;
    std::string violated;                 ///< statement of the first failed hypothesis
    std::vector<std::string> checked;     ///< ids of the hypotheses that were evaluated
};
Validation validate_params(const KernelParams& params, Theorem t);

enum class VerdictKind { Finite, Tame, Wild, TameCandidate, OutOfScope };
std::string to_string(VerdictKind k);

struct Verdict {
    VerdictKind kind;
    std::string note;
    std::vector<std::string> hypotheses_used;
};
nlohmann::json to_json(const Verdict& v);

struct BlockLabel {
    Weight lambda;                ///< in X_l
    std::optional<Weight> mu;     ///< in X_{p^r}, present when r >= 1
};

/// r = 0. Finite at (l-1) rho, Tame for the other A1 weights, Wild otherwise.
Verdict classify_small_quantum_block(const KernelParams& params, const Weight& lambda);
/// Finite only for A1 with r = 0 (a Nakayama algebra with l^2 indecomposables).
Verdict classify_borel(const KernelParams& params);
/// Finite only for A1 with r = 0 (k[X]/X^l, l indecomposables).
Verdict classify_nilpotent(const KernelParams& params);
/// r >= 1. Wild except A1 blocks with lambda = l - 1, which only satisfy the
/// necessary condition for tameness and are reported as TameCandidate.
Verdict classify_Gr_block(const KernelParams& params, const BlockLabel& label);

/// |Phi| - |Phi_lambda|.
int cx_lower_bound_H0(const KernelParams& params, const Weight& lambda);
/// |Phi^+| - |Phi_0^+|.
int cx_lower_bound_borel_trivial(const KernelParams& params);

/// Classes {lambda, l-2-lambda} and {l-1} of X_l for sl2, sorted by least element.
std::vector<std::vector<int>> sl2_linkage_blocks(int l);

std::vector<BlockLabel> simple_module_labels(const KernelParams& params);
/// Labels (mu, lambda) of the projective indecomposables Q_mu^{[1]} (x) P_lambda.
std::vector<BlockLabel> projective_labels(const KernelParams& params);

/// full_weight = (l-1) rho modulo l X.
bool is_special_block_weight(const KernelParams& params, const Weight& full_weight);

/// Quiver with relations of U(B_1) for sl2. Vertices "i,j" (i mod l, j mod p),
/// arrows a_i_j : (i,j) -> (i+1,j+xi) and b_i_j : (i,j) -> (i,j+1).
quiver::BoundQuiverAlgebra build_b1_quiver_sl2(int l, int p, int xi);

/// Same-weight Ext adjacency used when none is supplied: two arrows
/// mu -> p-2-mu for every mu <= p-2.
std::vector<std::vector<int>> default_dist_adjacency(int p);

/// Part of the Ext quiver of U(SL(2)_1): vertices "mu,lambda" for mu in X_p,
/// lambda in X_l; arrows (mu,lambda) -> (mu+-1, l-2-lambda) with target
/// mu' != p-1, plus adjacency[mu][mu'] arrows (mu,lambda) -> (mu',lambda).
quiver::Quiver sl2_ext_quiver_r1(int l, int p, const std::optional<std::vector<std::vector<int>>>& dist_adjacency = std::nullopt);

/// {lambda in X_l : Phi_lambda = Phi} == {(l-1) rho}.
bool steinberg_uniqueness_check(const KernelParams& params);

}  // namespace flk::flkernels
