#include "flk/cli.hpp"

#include "flk/algengine.hpp"
#include "flk/arquiver.hpp"
#include "flk/errors.hpp"
#include "flk/flkernels.hpp"
#include "flk/qarith.hpp"
#include "flk/quiver.hpp"
#include "flk/rootsys.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

namespace flk::cli {

using nlohmann::json;

namespace {

std::vector<int> parse_ints(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stoi(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ParseError(std::string("malformed ") + what + " '" + text + "'");
        }
    }
    if (out.empty()) throw ParseError(std::string("empty ") + what);
    return out;
}

void write_dot(const std::string& path, const quiver::Quiver& q) {
    std::ofstream f(path);
    if (!f) throw InvalidArgument("cannot write '" + path + "'");
    f << quiver::export_dot(q);
}

json report(const std::string& command, json params, json result, json hypotheses = json::array()) {
    return json{{"command", command},
                {"params", std::move(params)},
                {"result", std::move(result)},
                {"hypotheses_used", std::move(hypotheses)},
                {"version", kVersion}};
}

json verdict_json(const flkernels::Verdict& v) {
    json j = flkernels::to_json(v);
    j["kind"] = flkernels::to_string(v.kind);
    return j;
}

json occurrence_json(const quiver::Occurrence& o) { return json{{"vertices", o.vertices}, {"arrows", o.arrows}}; }

json algebra_summary(quiver::BoundQuiverAlgebra& bqa) {
    quiver::path_basis(bqa);
    const auto sb = quiver::is_special_biserial(bqa);
    const auto gc = quiver::graph_class(bqa.quiver());
    const auto unger = quiver::find_config(bqa, quiver::Pattern::UngerGrid, 1);
    const auto kps = quiver::find_config(bqa, quiver::Pattern::KroneckerPlusSource, 1);
    json j = quiver::basis_to_json(bqa);
    j.erase("basis");
    j["vertices"] = bqa.quiver().vertex_count();
    j["arrows"] = bqa.quiver().arrow_count();
    j["relations"] = bqa.relations().size();
    j["special_biserial"] = {{"value", sb.special_biserial}, {"violated", sb.violated}, {"detail", sb.detail}};
    j["graph_class"] = {{"kind", quiver::to_string(gc.kind)}, {"label", gc.label}};
    j["unger_grid"] = unger.empty() ? json() : occurrence_json(unger.front());
    j["kronecker_plus_source"] = kps.empty() ? json() : occurrence_json(kps.front());
    return j;
}

struct Args {
    // classify
    std::string kind, type = "A1", lambda, mu;
    int l = 5, p = 0, r = 0, jobs = 1;
    bool all = false;
    // qbinom
    int m = 0, n = 0;
    std::optional<int> at;
    // quiver
    std::string qkind, file, dot;
    int xi = 1;
    std::optional<int> cap;
    // uq-sl2
    std::string action, check_assoc;
    std::optional<std::size_t> block;
    // ar
    std::optional<int> a, b, height;
    std::string window = "-20:20", seed = "const:1";
    long d = 3;
};

json run_classify(const Args& g, json& hyp) {
    flkernels::KernelParams kp{rootsys::CartanType::parse(g.type), g.p, g.l, g.r};
    using flkernels::Verdict;
    if (g.kind == "borel" || g.kind == "nilpotent") {
        const Verdict v = g.kind == "borel" ? flkernels::classify_borel(kp) : flkernels::classify_nilpotent(kp);
        hyp = v.hypotheses_used;
        return verdict_json(v);
    }
    const rootsys::RootSystem rs(kp.type);
    auto classify = [&](const flkernels::Weight& lambda) {
        if (g.kind == "block") return flkernels::classify_small_quantum_block(kp, lambda);
        flkernels::BlockLabel label{lambda, std::nullopt};
        if (!g.mu.empty()) label.mu = parse_ints(g.mu, "mu");
        return flkernels::classify_Gr_block(kp, label);
    };
    if (!g.all) {
        if (g.lambda.empty()) throw InvalidArgument("--lambda is required (or use --all)");
        const Verdict v = classify(parse_ints(g.lambda, "lambda"));
        hyp = v.hypotheses_used;
        return verdict_json(v);
    }
    const auto weights = rootsys::restricted_weights(rs, g.l);
    std::vector<std::optional<Verdict>> out(weights.size());
    const std::size_t jobs = static_cast<std::size_t>(std::max(1, g.jobs));
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(jobs);
    for (std::size_t t = 0; t < jobs; ++t)
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < weights.size(); i += jobs) out[i] = classify(weights[i]);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    json rows = json::array();
    for (std::size_t i = 0; i < weights.size(); ++i) {
        json row = verdict_json(*out[i]);
        row.erase("hypotheses_used");
        row["lambda"] = weights[i];
        rows.push_back(row);
    }
    if (!out.empty()) hyp = out.front()->hypotheses_used;
    return rows;
}

json run_uq(const Args& g) {
    const auto alg = algengine::build_uq_sl2(g.l);
    json j{{"dimension", alg.dimension()}};
    if (g.check_assoc == "full") j["associative"] = alg.check_associativity(0);
    else if (g.check_assoc == "sample") j["associative"] = alg.check_associativity(200);
    else if (!g.check_assoc.empty()) throw InvalidArgument("--check-assoc must be 'sample' or 'full'");
    if (g.action == "center") {
        j["center_dimension"] = algengine::center(alg).dim();
    } else if (g.action == "symmetric") {
        j["symmetric"] = algengine::is_symmetric_algebra(alg);
    } else {
        const auto idem = algengine::central_primitive_idempotents(alg);
        if (g.action == "blocks") {
            j["idempotent_count"] = idem.size();
            j["block_dimensions"] = algengine::block_dimensions(alg, idem);
            j["linkage_classes"] = flkernels::sl2_linkage_blocks(g.l);
        } else {
            const std::size_t k = g.block.value_or(0);
            if (k >= idem.size())
                throw InvalidArgument("--block must be below " + std::to_string(idem.size()));
            const auto gq = algengine::gabriel_quiver_of_block(alg, idem[k]);
            j["block"] = k;
            j["block_dimension"] = algengine::block_dimensions(alg, {idem[k]}).front();
            j["vertices"] = gq.arrows.size();
            j["multiplicities"] = gq.multiplicities;
            j["arrows"] = gq.arrows;
        }
    }
    return j;
}

json run_ar(const Args& g) {
    const auto colon = g.window.find(':');
    if (colon == std::string::npos) throw ParseError("--window must look like lo:hi");
    const int lo = parse_ints(g.window.substr(0, colon), "window").front();
    const int hi = parse_ints(g.window.substr(colon + 1), "window").front();
    if (hi < lo) throw InvalidArgument("--window must have lo <= hi");
    const int width = hi - lo + 1;
    std::vector<long> seed;
    const auto sc = g.seed.find(':');
    const std::string form = g.seed.substr(0, sc), value = sc == std::string::npos ? "" : g.seed.substr(sc + 1);
    if (form == "const") {
        seed.assign(width, parse_ints(value, "seed").front());
    } else if (form == "random") {
        std::mt19937_64 rng(static_cast<std::uint64_t>(std::stoull(value.empty() ? "0" : value)));
        seed = arquiver::random_seed(rng, width);
    } else if (form == "list") {
        for (int v : parse_ints(value, "seed")) seed.push_back(v);
        if (static_cast<int>(seed.size()) != width) throw InvalidArgument("list seed must match the window width");
    } else {
        throw ParseError("--seed must be const:<v>, random:<rng-seed> or list:<v,...>");
    }
    if (g.a.has_value() != g.b.has_value()) throw InvalidArgument("--a and --b go together");
    std::optional<arquiver::Region> region;
    if (g.a) region = arquiver::Region{*g.a, *g.b};
    auto model = arquiver::mesh_propagate(seed, lo, region, g.height);
    arquiver::propagate_flags(model);
    const auto bounds = arquiver::check_bounds(model);
    const auto theta = arquiver::theta_d(model, g.d);
    json j = arquiver::to_json(model);
    json cells = json::array();
    for (const auto& c : theta.cells) cells.push_back({c.first, c.second});
    j["theta_d"] = cells;
    j["band"] = theta.band ? json(*theta.band) : json();
    j["band_ok"] = theta.band_ok;
    j["violations"] = arquiver::to_json(bounds);
    return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Representation type of Frobenius-Lusztig kernels", "flk"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    Args g;

    auto* classify = app.add_subcommand("classify", "representation type verdicts");
    classify->add_option("kind", g.kind, "block | borel | nilpotent | gr")
        ->required()
        ->check(CLI::IsMember({"block", "borel", "nilpotent", "gr"}));
    classify->add_option("--type", g.type, "Cartan type, e.g. A2")->required();
    classify->add_option("--l", g.l, "order of the root of unity")->required();
    classify->add_option("--p", g.p, "characteristic (0 or a prime)");
    classify->add_option("--r", g.r, "Frobenius-Lusztig kernel index");
    classify->add_option("--lambda", g.lambda, "weight in X_l, e.g. 1,2");
    classify->add_option("--mu", g.mu, "weight in X_{p^r}");
    classify->add_flag("--all", g.all, "classify every lambda in X_l");
    classify->add_option("--jobs", g.jobs, "threads for --all");

    auto* rootsys_cmd = app.add_subcommand("rootsys", "root system data");
    rootsys_cmd->add_option("--type", g.type, "Cartan type")->required();
    rootsys_cmd->add_option("--l", g.at, "also report Phi_lambda for this l");
    rootsys_cmd->add_option("--lambda", g.lambda, "weight for Phi_lambda");

    auto* qbinom = app.add_subcommand("qbinom", "Gaussian binomial [m over n]");
    qbinom->add_option("m", g.m)->required();
    qbinom->add_option("n", g.n)->required();
    // rootsys's --l shares g.at; the two subcommands are exclusive.
    qbinom->add_option("--at", g.at, "specialize at a primitive l-th root of unity");

    auto* quiver_cmd = app.add_subcommand("quiver", "bound quiver algebras");
    quiver_cmd->add_option("kind", g.qkind, "b1 | file")->required()->check(CLI::IsMember({"b1", "file"}));
    quiver_cmd->add_option("path", g.file, "presentation file for 'file'");
    quiver_cmd->add_option("--l", g.l);
    quiver_cmd->add_option("--p", g.p);
    quiver_cmd->add_option("--xi", g.xi);
    quiver_cmd->add_option("--cap", g.cap, "path length cap");
    quiver_cmd->add_option("--dot", g.dot, "write the quiver as DOT");

    auto* ext = app.add_subcommand("extquiver", "Ext quiver of Dist(SL(2)_1) x u(sl2) simples");
    ext->add_option("--l", g.l)->required();
    ext->add_option("--p", g.p)->required();
    ext->add_option("--dot", g.dot, "write the quiver as DOT");

    auto* uq = app.add_subcommand("uq-sl2", "structure-constant model of u_zeta(sl2)");
    uq->add_option("action", g.action, "blocks | center | symmetric | quiver")
        ->required()
        ->check(CLI::IsMember({"blocks", "center", "symmetric", "quiver"}));
    uq->add_option("--l", g.l)->required();
    uq->add_option("--block", g.block, "block index for 'quiver'");
    uq->add_option("--check-assoc", g.check_assoc, "sample | full");

    auto* ar = app.add_subcommand("ar", "Z[A_inf] mesh simulation");
    ar->add_option("action", g.action, "simulate")->required()->check(CLI::IsMember({"simulate"}));
    ar->add_option("--a", g.a);
    ar->add_option("--b", g.b);
    ar->add_option("--window", g.window, "lo:hi");
    ar->add_option("--seed", g.seed, "const:<v> | random:<rng-seed> | list:<v,...>");
    ar->add_option("--d", g.d);
    ar->add_option("--height", g.height);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    json params;
    for (const auto* sub : app.get_subcommands())
        for (const auto* opt : sub->get_options())
            if (opt->count() > 0 && !opt->get_name().empty() && opt->get_name() != "--help")
                params[opt->get_name()] = opt->as<std::string>();

    try {
        json result, hyp = json::array();
        std::string command;
        if (classify->parsed()) {
            command = "classify " + g.kind;
            result = run_classify(g, hyp);
        } else if (rootsys_cmd->parsed()) {
            command = "rootsys";
            const rootsys::RootSystem rs(rootsys::CartanType::parse(g.type));
            result = rootsys::to_json(rs);
            if (g.at) {
                const rootsys::Weight lambda = g.lambda.empty() ? rootsys::Weight(rs.rank(), 0) : parse_ints(g.lambda, "lambda");
                result["phi_lambda"] = rootsys::phi_lambda(rs, lambda, *g.at);
                result["steinberg_weight"] = rootsys::steinberg_weight(rs, *g.at);
            }
        } else if (qbinom->parsed()) {
            command = "qbinom";
            const auto poly = qarith::q_binomial(g.m, g.n);
            result = g.at ? json(qarith::specialize(poly, *g.at).to_string()) : json(poly.to_string());
        } else if (quiver_cmd->parsed()) {
            command = "quiver " + g.qkind;
            if (g.qkind == "b1") {
                auto bqa = flkernels::build_b1_quiver_sl2(g.l, g.p, g.xi);
                if (g.cap) bqa.compute_basis(g.cap);
                result = algebra_summary(bqa);
                if (!g.dot.empty()) write_dot(g.dot, bqa.quiver());
            } else {
                if (g.file.empty()) throw InvalidArgument("quiver file needs a path");
                std::ifstream f(g.file);
                if (!f) throw InvalidArgument("cannot read '" + g.file + "'");
                std::stringstream ss;
                ss << f.rdbuf();
                auto bqa = quiver::parse_presentation(ss.str());
                if (g.cap) bqa.compute_basis(g.cap);
                result = algebra_summary(bqa);
                result["basis"] = quiver::basis_to_json(bqa)["basis"];
                if (!g.dot.empty()) write_dot(g.dot, bqa.quiver());
            }
        } else if (ext->parsed()) {
            command = "extquiver";
            const auto q = flkernels::sl2_ext_quiver_r1(g.l, g.p);
            const quiver::BoundQuiverAlgebra bqa(q, {});
            const auto kps = quiver::find_config(bqa, quiver::Pattern::KroneckerPlusSource, 1);
            result = {{"vertices", q.vertex_count()},
                      {"arrows", q.arrow_count()},
                      {"kronecker_plus_source", kps.empty() ? json() : occurrence_json(kps.front())}};
            if (!g.dot.empty()) write_dot(g.dot, q);
        } else if (uq->parsed()) {
            command = "uq-sl2 " + g.action;
            result = run_uq(g);
        } else {
            command = "ar " + g.action;
            result = run_ar(g);
        }
        out << report(command, params, result, hyp).dump(2) << "\n";
        return 0;
    } catch (const DomainError& e) {
        err << json{{"error", "domain"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    }
}

}  // namespace flk::cli
