#pragma once

// Root systems of the simple Lie algebras and the weight combinatorics built
// on them. Roots are integer vectors in the simple-root basis, weights are
// integer vectors in the fundamental-weight basis.

#include "json.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace flk::rootsys {

enum class Family { A, B, C, D, E, F, G };

struct CartanType {
    Family family;
    int rank;

    /// Parses "A2", "e8", "G2"; throws ParseError on malformed text and
    /// InvalidArgument on an unsupported rank.
    static CartanType parse(std::string_view text);
    void validate() const;
    std::string to_string() const;
    friend bool operator==(const CartanType&, const CartanType&) = default;
};

using Root = std::vector<int>;
using Weight = std::vector<int>;

class RootSystem {
public:
    explicit RootSystem(CartanType ct);

    const CartanType& cartan_type() const { return type_; }
    int rank() const { return type_.rank; }
    /// (alpha_i, alpha_j), normalized so that short roots have (alpha, alpha) = 2.
    const std::vector<std::vector<int>>& form() const { return form_; }
    /// a_ij = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).
    std::vector<std::vector<int>> cartan_matrix() const;
    std::vector<Root> simple_roots() const;
    /// Positive roots sorted by height, then lexicographically.
    const std::vector<Root>& positive_roots() const { return positive_; }
    /// Positive roots followed by their negatives.
    std::vector<Root> roots() const;
    const Weight& rho() const { return rho_; }
    int coxeter_number() const { return coxeter_; }

    int inner(const Root& a, const Root& b) const;
    bool is_root(const Root& a) const;
    bool is_positive_root(const Root& a) const;
    /// (alpha_long, alpha_long) / (alpha_short, alpha_short).
    int length_ratio() const;

private:
    CartanType type_;
    std::vector<std::vector<int>> form_;
    std::vector<Root> positive_;
    Weight rho_;
    int coxeter_;
};

RootSystem build_root_system(CartanType ct);

/// (lambda, alpha^vee) = 2 (lambda, alpha) / (alpha, alpha); throws
/// InvalidArgument when alpha is not a root.
int pairing(const RootSystem& rs, const Weight& lambda, const Root& alpha);

/// {alpha in Phi : (lambda + rho, alpha^vee) in l Z}, positive roots first.
std::vector<Root> phi_lambda(const RootSystem& rs, const Weight& lambda, int l);
std::vector<Root> phi_lambda_positive(const RootSystem& rs, const Weight& lambda, int l);

/// Every positive root of the form a1 alpha1 + a2 alpha2 with alpha1, alpha2 in
/// Phi_lambda^+ and |a_i| <= 4 lies in Phi_lambda^+. Requires l odd and, for
/// G2, 3 not dividing l.
bool verify_phi_lambda_closed(const RootSystem& rs, const Weight& lambda, int l);

/// X_n in lexicographic order (first coordinate most significant).
std::vector<Weight> restricted_weights(const RootSystem& rs, int n);

/// (l - 1) rho.
Weight steinberg_weight(const RootSystem& rs, int l);

int coxeter_number(const CartanType& ct);
/// Good-integer thresholds: none for A; 3 for B, C, D; 5 for E6, E7, F4, G2;
/// 7 for E8.
bool is_good(const CartanType& ct, int m);

nlohmann::json to_json(const RootSystem& rs);

}  // namespace flk::rootsys
