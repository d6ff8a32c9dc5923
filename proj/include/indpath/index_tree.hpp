#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace indpath {

/// Partial binary tree on the indices 1..ell, labeled by the reverse of the
/// left-child-first depth-first order from the root. The root is ell; for any
/// index, every label in its left subtree exceeds every label in its right
/// subtree, and the index itself exceeds everything below it.
///
/// Children are stored explicitly: a node may lack a left child yet have a
/// right child (and vice versa). Index 0 means "no node". ell == 0 is the
/// empty tree.
struct IndexTree {
    static constexpr int none = 0;

    int ell = 0;
    std::vector<int> left;    // size ell+1, left[i] = left child of i or none
    std::vector<int> right;   // size ell+1
    std::vector<int> parent;  // size ell+1, parent[root] = none

    int root() const { return ell; }
    bool empty() const { return ell == 0; }
    bool is_leaf(int i) const { return left[i] == none && right[i] == none; }
    int child_count(int i) const { return (left[i] != none) + (right[i] != none); }
};

namespace detail {

// Abstract unlabeled shape; labels are assigned by one reverse left-first DFS
// pass afterwards, since the labeling rule is global while the shape
// recurrences are local.
struct Shape {
    int left = -1, right = -1;  // indices into a shape pool, -1 = absent
};

inline IndexTree label_shape(const std::vector<Shape>& pool, int root_shape, int m) {
    IndexTree t;
    t.ell = m;
    t.left.assign(m + 1, IndexTree::none);
    t.right.assign(m + 1, IndexTree::none);
    t.parent.assign(m + 1, IndexTree::none);
    int next = m;
    std::function<int(int)> lab = [&](int s) -> int {
        int me = next--;
        int l = pool[s].left >= 0 ? lab(pool[s].left) : IndexTree::none;
        int r = pool[s].right >= 0 ? lab(pool[s].right) : IndexTree::none;
        t.left[me] = l;
        t.right[me] = r;
        if (l != IndexTree::none) t.parent[l] = me;
        if (r != IndexTree::none) t.parent[r] = me;
        return me;
    };
    if (root_shape >= 0) lab(root_shape);
    return t;
}

}  // namespace detail

/// Complete binary index-tree; requires ell = 2^d - 1.
inline IndexTree build_complete(int ell) {
    if (ell < 1 || (ell & (ell + 1)) != 0)
        throw std::invalid_argument("build_complete: ell must be 2^d - 1 for some d >= 1, got " +
                                    std::to_string(ell));
    std::vector<detail::Shape> pool;
    std::function<int(int)> mk = [&](int n) -> int {
        int id = static_cast<int>(pool.size());
        pool.push_back({});
        if (n > 1) {
            int h = (n - 1) / 2;
            int l = mk(h);
            int r = mk(h);
            pool[id].left = l;
            pool[id].right = r;
        }
        return id;
    };
    int root = mk(ell);
    return detail::label_shape(pool, root, ell);
}

/// Heap-shaped partial binary tree on any ell >= 0 (levels filled left to
/// right). Coincides with build_complete when ell = 2^d - 1.
inline IndexTree build_balanced(int ell) {
    if (ell < 0) throw std::invalid_argument("build_balanced: ell must be >= 0");
    std::vector<detail::Shape> pool(ell);
    for (int i = 0; i < ell; ++i) {
        if (2 * i + 1 < ell) pool[i].left = 2 * i + 1;
        if (2 * i + 2 < ell) pool[i].right = 2 * i + 2;
    }
    return detail::label_shape(pool, ell > 0 ? 0 : -1, ell);
}

/// The unbalanced family T_alpha(m): empty for m = 0, otherwise a root whose
/// left subtree is T_{alpha(alpha-1)}(floor(m/alpha)) and whose right subtree
/// holds the remaining m - floor(m/alpha) - 1 indices with parameter alpha.
inline IndexTree build_unbalanced(long long m, double alpha) {
    if (alpha <= 2.0)
        throw std::invalid_argument("build_unbalanced: alpha must be > 2, got " + std::to_string(alpha));
    if (m < 0) throw std::invalid_argument("build_unbalanced: m must be >= 0");
    if (m > (1LL << 40))
        throw std::invalid_argument("build_unbalanced: m above 2^40 precision guard");
    std::vector<detail::Shape> pool;
    std::function<int(long long, double)> mk = [&](long long n, double a) -> int {
        if (n == 0) return -1;
        int id = static_cast<int>(pool.size());
        pool.push_back({});
        long long fl = static_cast<long long>(std::floor(static_cast<double>(n) / a));
        int l = mk(fl, a * (a - 1.0));
        int r = mk(n - fl - 1, a);
        pool[id].left = l;
        pool[id].right = r;
        return id;
    };
    int root = mk(m, alpha);
    return detail::label_shape(pool, root, static_cast<int>(m));
}

/// Indices of the subtree rooted at i, ascending.
inline std::vector<int> subtree_indices(const IndexTree& t, int i) {
    if (i < 1 || i > t.ell) throw std::invalid_argument("subtree_indices: index out of range");
    std::vector<int> out, stack{i};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        out.push_back(x);
        if (t.left[x] != IndexTree::none) stack.push_back(t.left[x]);
        if (t.right[x] != IndexTree::none) stack.push_back(t.right[x]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// i together with its ancestors, bottom-up (ends at the root).
inline std::vector<int> ancestors_or_self(const IndexTree& t, int i) {
    std::vector<int> out;
    for (int x = i; x != IndexTree::none; x = t.parent[x]) out.push_back(x);
    return out;
}

/// j lies in the subtree rooted at i.
inline bool in_subtree(const IndexTree& t, int j, int i) {
    for (int x = j; x != IndexTree::none; x = t.parent[x])
        if (x == i) return true;
    return false;
}

inline int tree_depth(const IndexTree& t) {
    if (t.empty()) return 0;
    std::function<int(int)> d = [&](int i) -> int {
        if (i == IndexTree::none) return 0;
        return 1 + std::max(d(t.left[i]), d(t.right[i]));
    };
    return d(t.root());
}

/// Every violated invariant, each naming a witnessing index. Empty = valid.
inline std::vector<std::string> validation_errors(const IndexTree& t) {
    std::vector<std::string> errs;
    int m = t.ell;
    if (m < 0) return {"ell is negative"};
    if (static_cast<int>(t.left.size()) != m + 1 || static_cast<int>(t.right.size()) != m + 1 ||
        static_cast<int>(t.parent.size()) != m + 1)
        return {"child/parent maps not sized ell+1"};
    if (m == 0) return errs;

    if (t.parent[m] != IndexTree::none) errs.push_back("root " + std::to_string(m) + " has a parent");
    for (int i = 1; i <= m; ++i) {
        for (int c : {t.left[i], t.right[i]}) {
            if (c == IndexTree::none) continue;
            if (c < 1 || c > m)
                errs.push_back("index " + std::to_string(i) + " has out-of-range child " + std::to_string(c));
            else if (t.parent[c] != i)
                errs.push_back("parent/child maps inconsistent at index " + std::to_string(c));
        }
        if (t.left[i] != IndexTree::none && t.left[i] == t.right[i])
            errs.push_back("index " + std::to_string(i) + " repeats a child");
    }
    for (int i = 1; i < m; ++i)
        if (t.parent[i] == IndexTree::none)
            errs.push_back("non-root index " + std::to_string(i) + " has no parent");
    if (!errs.empty()) return errs;

    // Labels must equal the reverse left-child-first DFS from the root.
    int next = m;
    bool order_ok = true;
    std::function<void(int)> visit = [&](int i) {
        if (!order_ok) return;
        if (i != next--) {
            errs.push_back("labeling violates reverse left-first DFS at index " + std::to_string(i) +
                           " (expected " + std::to_string(next + 1) + ")");
            order_ok = false;
            return;
        }
        if (t.left[i] != IndexTree::none) visit(t.left[i]);
        if (t.right[i] != IndexTree::none) visit(t.right[i]);
    };
    visit(m);
    if (order_ok && next != 0) errs.push_back("structure is not a tree on 1..ell (unreached indices)");
    return errs;
}

inline void validate(const IndexTree& t) {
    auto errs = validation_errors(t);
    if (!errs.empty()) {
        std::string msg = "invalid index tree:";
        for (const auto& e : errs) msg += "\n  " + e;
        throw std::invalid_argument(msg);
    }
}

inline nlohmann::ordered_json to_json(const IndexTree& t) {
    nlohmann::ordered_json j;
    j["format_version"] = 1;
    j["ell"] = t.ell;
    auto nodes = nlohmann::ordered_json::array();
    for (int i = 1; i <= t.ell; ++i) {
        nlohmann::ordered_json n;
        n["id"] = i;
        n["left"] = t.left[i] == IndexTree::none ? nlohmann::ordered_json() : nlohmann::ordered_json(t.left[i]);
        n["right"] = t.right[i] == IndexTree::none ? nlohmann::ordered_json() : nlohmann::ordered_json(t.right[i]);
        nodes.push_back(std::move(n));
    }
    j["nodes"] = std::move(nodes);
    return j;
}

inline IndexTree index_tree_from_json(const nlohmann::json& j) {
    IndexTree t;
    t.ell = j.at("ell").get<int>();
    if (t.ell < 0) throw std::invalid_argument("index tree json: negative ell");
    t.left.assign(t.ell + 1, IndexTree::none);
    t.right.assign(t.ell + 1, IndexTree::none);
    t.parent.assign(t.ell + 1, IndexTree::none);
    for (const auto& n : j.at("nodes")) {
        int id = n.at("id").get<int>();
        if (id < 1 || id > t.ell) throw std::invalid_argument("index tree json: node id out of range");
        if (!n.at("left").is_null()) t.left[id] = n.at("left").get<int>();
        if (!n.at("right").is_null()) t.right[id] = n.at("right").get<int>();
    }
    for (int i = 1; i <= t.ell; ++i)
        for (int c : {t.left[i], t.right[i]})
            if (c != IndexTree::none && c >= 1 && c <= t.ell) t.parent[c] = i;
    validate(t);
    return t;
}

}  // namespace indpath
