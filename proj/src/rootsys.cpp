#include "flk/rootsys.hpp"

#include "flk/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace flk::rootsys {

namespace {

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

std::vector<std::vector<int>> symmetric_form(const CartanType& ct) {
    const int n = ct.rank;
    std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
    auto link = [&](int i, int j, int v) { b[i][j] = b[j][i] = v; };
    switch (ct.family) {
    case Family::A:
        for (int i = 0; i < n; ++i) b[i][i] = 2;
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
        break;
    case Family::B:
        for (int i = 0; i < n; ++i) b[i][i] = 4;
        b[n - 1][n - 1] = 2;
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
        break;
    case Family::C:
        for (int i = 0; i < n; ++i) b[i][i] = 2;
        b[n - 1][n - 1] = 4;
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
        link(n - 2, n - 1, -2);
        break;
    case Family::D:
        for (int i = 0; i < n; ++i) b[i][i] = 2;
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
        link(n - 3, n - 1, -1);
        break;
    case Family::E:
        for (int i = 0; i < n; ++i) b[i][i] = 2;
        link(0, 2, -1);
        link(1, 3, -1);
        for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
        break;
    case Family::F:
        b[0][0] = b[1][1] = 4;
        b[2][2] = b[3][3] = 2;
        link(0, 1, -2);
        link(1, 2, -2);
        link(2, 3, -1);
        break;
    case Family::G:
        b[0][0] = 2;
        b[1][1] = 6;
        link(0, 1, -3);
        break;
    }
    return b;
}

int height(const Root& r) {
    int h = 0;
    for (int c : r) h += c;
    return h;
}

}  // namespace

CartanType CartanType::parse(std::string_view text) {
    if (text.size() < 2) throw ParseError("Cartan type must look like A2, got '" + std::string(text) + "'");
    const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    const auto pos = std::string_view("ABCDEFG").find(f);
    if (pos == std::string_view::npos) throw ParseError("unknown Cartan family '" + std::string(1, text[0]) + "'");
    int rank = 0;
    for (char c : text.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("Cartan rank must be a number in '" + std::string(text) + "'");
        rank = rank * 10 + (c - '0');
        if (rank > 1000) throw ParseError("Cartan rank too large");
    }
    CartanType ct{static_cast<Family>(pos), rank};
    ct.validate();
    return ct;
}

void CartanType::validate() const {
    bool ok = false;
    switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 3; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
    }
    if (!ok) throw InvalidArgument("invalid rank " + std::to_string(rank) + " for family " + family_letter(family));
}

std::string CartanType::to_string() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

int coxeter_number(const CartanType& ct) {
    ct.validate();
    const int n = ct.rank;
    switch (ct.family) {
    case Family::A: return n + 1;
    case Family::B:
    case Family::C: return 2 * n;
    case Family::D: return 2 * n - 2;
    case Family::E: return n == 6 ? 12 : n == 7 ? 18 : 30;
    case Family::F: return 12;
    case Family::G: return 6;
    }
    return 0;
}

bool is_good(const CartanType& ct, int m) {
    if (m < 2) throw InvalidArgument("is_good: m must be >= 2");
    ct.validate();
    switch (ct.family) {
    case Family::A: return true;
    case Family::B:
    case Family::C:
    case Family::D: return m >= 3;
    case Family::E: return ct.rank == 8 ? m >= 7 : m >= 5;
    case Family::F:
    case Family::G: return m >= 5;
    }
    return false;
}

// ---------------------------------------------------------------------------

RootSystem::RootSystem(CartanType ct) : type_(ct) {
    type_.validate();
    form_ = symmetric_form(type_);
    const int n = type_.rank;
    coxeter_ = rootsys::coxeter_number(type_);
    rho_.assign(n, 1);

    // Root strings through simple roots: beta + alpha_i in Phi iff q > 0 with
    // p - q = <beta, alpha_i^vee>.
    std::set<Root> known;
    std::vector<Root> layer;
    for (int i = 0; i < n; ++i) {
        Root r(n, 0);
        r[i] = 1;
        layer.push_back(r);
        known.insert(r);
    }
    while (!layer.empty()) {
        std::set<Root> next;
        for (const auto& beta : layer) {
            for (int i = 0; i < n; ++i) {
                Root down = beta;
                int p = 0;
                while (true) {
                    down[i] -= 1;
                    if (!known.count(down)) break;
                    ++p;
                }
                int ip = 0;
                for (int j = 0; j < n; ++j) ip += beta[j] * form_[j][i];
                const int pairing_i = 2 * ip / form_[i][i];
                if (p - pairing_i > 0) {
                    Root up = beta;
                    up[i] += 1;
                    if (!known.count(up)) next.insert(up);
                }
            }
        }
        layer.assign(next.begin(), next.end());
        known.insert(next.begin(), next.end());
    }
    positive_.assign(known.begin(), known.end());
    std::stable_sort(positive_.begin(), positive_.end(),
                     [](const Root& a, const Root& b) { return height(a) < height(b); });

    if (2 * static_cast<int>(positive_.size()) != n * coxeter_)
        throw DomainError("root system " + type_.to_string() + ": |Phi| != rank * h");
}

std::vector<std::vector<int>> RootSystem::cartan_matrix() const {
    const int n = rank();
    std::vector<std::vector<int>> a(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = 2 * form_[i][j] / form_[j][j];
    return a;
}

std::vector<Root> RootSystem::simple_roots() const {
    std::vector<Root> s;
    for (int i = 0; i < rank(); ++i) {
        Root r(rank(), 0);
        r[i] = 1;
        s.push_back(r);
    }
    return s;
}

std::vector<Root> RootSystem::roots() const {
    std::vector<Root> all = positive_;
    for (const auto& r : positive_) {
        Root neg = r;
        for (int& c : neg) c = -c;
        all.push_back(neg);
    }
    return all;
}

int RootSystem::inner(const Root& a, const Root& b) const {
    int s = 0;
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) s += a[i] * form_[i][j] * b[j];
    return s;
}

bool RootSystem::is_positive_root(const Root& a) const {
    if (static_cast<int>(a.size()) != rank()) return false;
    return std::binary_search(positive_.begin(), positive_.end(), a, [](const Root& x, const Root& y) {
        const int hx = height(x), hy = height(y);
        return hx != hy ? hx < hy : x < y;
    });
}

bool RootSystem::is_root(const Root& a) const {
    if (is_positive_root(a)) return true;
    Root neg = a;
    for (int& c : neg) c = -c;
    return is_positive_root(neg);
}

int RootSystem::length_ratio() const {
    int lo = form_[0][0], hi = form_[0][0];
    for (int i = 0; i < rank(); ++i) {
        lo = std::min(lo, form_[i][i]);
        hi = std::max(hi, form_[i][i]);
    }
    return hi / lo;
}

RootSystem build_root_system(CartanType ct) { return RootSystem(ct); }

// ---------------------------------------------------------------------------

int pairing(const RootSystem& rs, const Weight& lambda, const Root& alpha) {
    if (static_cast<int>(lambda.size()) != rs.rank()) throw InvalidArgument("pairing: weight has wrong rank");
    if (!rs.is_root(alpha)) throw InvalidArgument("pairing: argument is not a root");
    const int norm = rs.inner(alpha, alpha);
    int num = 0;
    // (varpi_j, alpha_k) = delta_jk (alpha_k, alpha_k) / 2
    for (int j = 0; j < rs.rank(); ++j) num += alpha[j] * lambda[j] * rs.form()[j][j];
    if (num % norm != 0) throw DomainError("pairing: non-integral value");
    return num / norm;
}

namespace {

Weight shifted(const Weight& lambda, const RootSystem& rs) {
    if (static_cast<int>(lambda.size()) != rs.rank()) throw InvalidArgument("weight has wrong rank");
    Weight w = lambda;
    for (int i = 0; i < rs.rank(); ++i) w[i] += rs.rho()[i];
    return w;
}

void require_modulus(int l) {
    if (l < 2) throw InvalidArgument("l must be >= 2");
}

}  // namespace

std::vector<Root> phi_lambda_positive(const RootSystem& rs, const Weight& lambda, int l) {
    require_modulus(l);
    const Weight w = shifted(lambda, rs);
    std::vector<Root> out;
    for (const auto& a : rs.positive_roots())
        if (pairing(rs, w, a) % l == 0) out.push_back(a);
    return out;
}

std::vector<Root> phi_lambda(const RootSystem& rs, const Weight& lambda, int l) {
    std::vector<Root> pos = phi_lambda_positive(rs, lambda, l);
    std::vector<Root> out = pos;
    for (const auto& r : pos) {
        Root neg = r;
        for (int& c : neg) c = -c;
        out.push_back(neg);
    }
    return out;
}

bool verify_phi_lambda_closed(const RootSystem& rs, const Weight& lambda, int l) {
    if (l % 2 == 0) throw InvalidArgument("verify_phi_lambda_closed: l must be odd");
    if (rs.cartan_type().family == Family::G && l % 3 == 0)
        throw InvalidArgument("verify_phi_lambda_closed: 3 divides l for G2");
    const std::vector<Root> pos = phi_lambda_positive(rs, lambda, l);
    const std::set<Root> member(pos.begin(), pos.end());
    const int n = rs.rank();
    Root beta(n);
    for (const auto& a1 : pos) {
        for (const auto& a2 : pos) {
            for (int c1 = -4; c1 <= 4; ++c1) {
                for (int c2 = -4; c2 <= 4; ++c2) {
                    for (int i = 0; i < n; ++i) beta[i] = c1 * a1[i] + c2 * a2[i];
                    if (rs.is_positive_root(beta) && !member.count(beta)) return false;
                }
            }
        }
    }
    return true;
}

std::vector<Weight> restricted_weights(const RootSystem& rs, int n) {
    if (n < 1) throw InvalidArgument("restricted_weights: n must be >= 1");
    const int r = rs.rank();
    std::vector<Weight> out;
    Weight w(r, 0);
    while (true) {
        out.push_back(w);
        int i = r - 1;
        while (i >= 0 && w[i] == n - 1) w[i--] = 0;
        if (i < 0) break;
        ++w[i];
    }
    return out;
}

Weight steinberg_weight(const RootSystem& rs, int l) {
    require_modulus(l);
    Weight w = rs.rho();
    for (int& c : w) c *= (l - 1);
    return w;
}

nlohmann::json to_json(const RootSystem& rs) {
    return nlohmann::json{{"type", rs.cartan_type().to_string()},
                          {"positive_roots", rs.positive_roots()},
                          {"form", rs.form()},
                          {"rho", rs.rho()},
                          {"h", rs.coxeter_number()}};
}

}  // namespace flk::rootsys
