#pragma once

#include "descent_forge/solution.hpp"

#include <string>
#include <vector>

namespace descent_forge {

/// A node of the binary solution tree. path spells the successor choices
/// from the root, 'F' for first and 'S' for second; replaying it through
/// the successor maps reproduces the solution.
struct TreeNode {
    PPSolution solution;
    unsigned depth;
    std::string path;
};

/// All pp-solutions with exponent <= max_m, sorted by exponent.
/// The frontier is expanded smallest exponent first, so the output needs
/// no final sort; the root's first successor is the root itself and is
/// not re-enqueued. A repeated exponent would contradict uniqueness and
/// raises an error instead of being deduplicated. max_m must be >= 5.
std::vector<TreeNode> enumerate_tree(unsigned long max_m);

}  // namespace descent_forge
