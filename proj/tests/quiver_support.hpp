#pragma once

#include "flk/quiver.hpp"
#include "oracles/path_oracle.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace testsupport {

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(std::string(FLK_FIXTURE_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Rational presentations only.
inline oracle::PathCounts oracle_counts(const flk::quiver::BoundQuiverAlgebra& bqa, int max_length) {
    oracle::SimpleQuiver sq;
    sq.vertices = bqa.quiver().vertex_count();
    for (const auto& a : bqa.quiver().arrows()) sq.arrows.emplace_back(a.source, a.target);
    std::vector<oracle::SimpleRelation> rels;
    for (const auto& r : bqa.relations()) {
        oracle::SimpleRelation sr;
        for (const auto& t : r) sr.push_back({t.coeff.rational_value(), t.path.arrows});
        rels.push_back(sr);
    }
    return oracle::brute_force_dimension(sq, rels, max_length);
}

}  // namespace testsupport
