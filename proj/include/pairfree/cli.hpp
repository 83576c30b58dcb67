#ifndef PAIRFREE_CLI_HPP
#define PAIRFREE_CLI_HPP

#include <string>
#include <vector>

#include "pairfree/graph.hpp"

namespace pairfree::cli {

// Graph argument: "@path" reads an edge-list file, anything else is parsed
// as a named-graph expression.
Graph parse_graph_arg(const std::string& text);

struct RunResult {
    int code = 0;      // 0 ok, 2 contract/parse error, 3 unsupported
    std::string out;   // stdout payload
    std::string err;   // diagnostics
};

// Dispatches one subcommand; args exclude the program name.
RunResult run_command(const std::vector<std::string>& args);

} // namespace pairfree::cli

#endif
