#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bfc/errors.hpp"
#include "bfc/poly.hpp"
#include "bfc/truth_table.hpp"

namespace bfc {

// Explicit decision tree: internal nodes query a variable, leaves carry the
// output bit. No variable repeats on a root-to-leaf path.
class DecisionTree {
public:
    struct Node {
        bool leaf = false;
        int var = -1;        // internal nodes
        int child0 = -1;
        int child1 = -1;
        int value = 0;       // leaves
    };

    int add_leaf(int value) {
        nodes_.push_back({.leaf = true, .value = value});
        return static_cast<int>(nodes_.size()) - 1;
    }

    int add_internal(int var, int child0, int child1) {
        nodes_.push_back({.leaf = false, .var = var, .child0 = child0, .child1 = child1});
        return static_cast<int>(nodes_.size()) - 1;
    }

    void set_root(int id) { root_ = id; }
    int root() const { return root_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }

    int evaluate(Point x) const {
        int id = root_;
        while (!nodes_[id].leaf)
            id = (x >> nodes_[id].var) & 1 ? nodes_[id].child1 : nodes_[id].child0;
        return nodes_[id].value;
    }

    int depth() const { return depth_of(root_); }

    // One node per line: "<id> leaf <value>" or "<id> var <i> <child0> <child1>".
    std::string to_text() const {
        std::string out;
        for (std::size_t id = 0; id < nodes_.size(); ++id) {
            const Node& node = nodes_[id];
            out += std::to_string(id);
            if (node.leaf) {
                out += " leaf " + std::to_string(node.value);
            } else {
                out += " var " + std::to_string(node.var) + " " +
                       std::to_string(node.child0) + " " + std::to_string(node.child1);
            }
            out += '\n';
        }
        out += "root " + std::to_string(root_) + '\n';
        return out;
    }

    std::string to_dot() const {
        std::string out = "digraph decision_tree {\n";
        for (std::size_t id = 0; id < nodes_.size(); ++id) {
            const Node& node = nodes_[id];
            if (node.leaf) {
                out += "  n" + std::to_string(id) + " [shape=box,label=\"" +
                       std::to_string(node.value) + "\"];\n";
            } else {
                out += "  n" + std::to_string(id) + " [label=\"x" +
                       std::to_string(node.var) + "\"];\n";
                out += "  n" + std::to_string(id) + " -> n" +
                       std::to_string(node.child0) + " [label=\"0\"];\n";
                out += "  n" + std::to_string(id) + " -> n" +
                       std::to_string(node.child1) + " [label=\"1\"];\n";
            }
        }
        out += "}\n";
        return out;
    }

private:
    int depth_of(int id) const {
        const Node& node = nodes_[id];
        if (node.leaf) return 0;
        return 1 + std::max(depth_of(node.child0), depth_of(node.child1));
    }

    std::vector<Node> nodes_;
    int root_ = -1;
};

namespace detail {

class TreeCompiler {
public:
    TreeCompiler(std::size_t node_budget) : budget_(node_budget) {}

    DecisionTree compile(const MultilinearPoly& p) {
        tree_.set_root(build(p));
        return std::move(tree_);
    }

private:
    // One evaluator round: query the remaining maxonomial variables in
    // ascending order, branching on each answer.
    int build(const MultilinearPoly& p) {
        if (p.is_constant()) {
            const std::int64_t v = p.constant_value();
            if (v != 0 && v != 1)
                throw NonBooleanPolynomial(
                    "compiled branch reached constant " + std::to_string(v), 0);
            return add_checked([&] { return tree_.add_leaf(static_cast<int>(v)); });
        }
        return build_round(p, p.first_maxonomial());
    }

    int build_round(const MultilinearPoly& p, Mask remaining) {
        if (remaining == 0) return build(p);
        const int var = __builtin_ctz(remaining);
        const Mask rest = remaining & (remaining - 1);
        PartialAssignment zero, one;
        zero.bind(var, 0);
        one.bind(var, 1);
        const int c0 = build_round(p.restricted(zero), rest);
        const int c1 = build_round(p.restricted(one), rest);
        return add_checked([&] { return tree_.add_internal(var, c0, c1); });
    }

    template <typename F>
    int add_checked(F&& add) {
        if (tree_.size() >= budget_)
            throw BudgetExceeded("decision tree node budget exhausted at " +
                                 std::to_string(budget_) + " nodes");
        return add();
    }

    DecisionTree tree_;
    std::size_t budget_;
};

}  // namespace detail

// Unrolls the maxonomial evaluator over every possible sequence of oracle
// answers. Tree depth equals the evaluator's worst-case query count, which
// lies between D(f) and deg(f)*bs(f).
inline DecisionTree compile_decision_tree(const MultilinearPoly& p,
                                          std::size_t node_budget = std::size_t{1} << 22) {
    return detail::TreeCompiler(node_budget).compile(p);
}

}  // namespace bfc
