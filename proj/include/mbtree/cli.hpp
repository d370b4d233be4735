#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "mbtree/tree.hpp"

namespace mbt::cli {

// Full invariant suite over one box window; backs the `verify` subcommand.
struct VerifyReport {
    Int p_bound;
    Int q_bound;
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    bool connected = false;
    bool acyclic = false;
    bool odd_parent_unique = false;
    bool p_increasing = false;          // |p| strictly grows along root paths
    bool classification_matches = false;  // thresholds vs nearest anchor
    bool edge_slope_law = false;        // every edge has intersection number 2
    bool descent_matches_bfs = false;   // descent distance == BFS distance

    bool all() const {
        return connected && acyclic && odd_parent_unique && p_increasing &&
               classification_matches && edge_slope_law && descent_matches_bfs;
    }
};

VerifyReport run_verify(const Int& p_bound, const Int& q_bound);

// Dispatches one command line. Exit code 0 on success, 1 on domain or input
// errors, 2 on usage errors. Machine-readable output goes to `out` as a
// single document; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace mbt::cli
