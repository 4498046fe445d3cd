#include "descent_forge/tree.hpp"

#include "descent_forge/successor.hpp"

#include <map>
#include <utility>

namespace descent_forge {

std::vector<TreeNode> enumerate_tree(unsigned long max_m) {
    if (max_m < 5) {
        throw std::invalid_argument("max_m must be at least 5, the root exponent");
    }
    const PPSolution& root = PPSolution::root();
    internal_check(first_successor(root) == root, "the root is its own first successor");

    // Frontier keyed by exponent; children always carry larger exponents
    // than their parent (the root self-loop aside), so popping the
    // smallest key emits sorted output. Keyed insertion doubles as the
    // duplicate-exponent detector.
    std::map<unsigned long, TreeNode> frontier;
    frontier.emplace(root.m(), TreeNode{root, 0, ""});

    std::vector<TreeNode> out;
    while (!frontier.empty()) {
        auto first_entry = frontier.begin();
        TreeNode node = std::move(first_entry->second);
        frontier.erase(first_entry);

        auto enqueue = [&](PPSolution child, char label) {
            if (child.m() > max_m) {
                return;
            }
            TreeNode child_node{std::move(child), node.depth + 1, node.path + label};
            auto [it, inserted] = frontier.emplace(child_node.solution.m(), std::move(child_node));
            internal_check(inserted, "exponents in the tree are pairwise distinct");
        };
        if (!node.solution.is_root()) {
            enqueue(first_successor(node.solution), 'F');
        }
        enqueue(second_successor(node.solution), 'S');

        internal_check(out.empty() || out.back().solution.m() < node.solution.m(),
                       "exponents in the tree are pairwise distinct");
        out.push_back(std::move(node));
    }
    return out;
}

}  // namespace descent_forge
