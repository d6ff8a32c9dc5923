#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace indpath {

/// Raised when a construction would exceed the configured resource guard.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The skeleton-tree st_ell: a complete binary tree on 2^(2^ell - 1) - 1
/// nodes with a rank in 1..ell per node. The zone of a rank-r node is the
/// embedded st_r copy it roots; zones are represented implicitly by each
/// node's chain of zone-ancestors (one per rank above its own), not as sets.
///
/// Node ids are dense breadth-first integers, root = 0.
struct SkeletonTree {
    int ell = 0;
    int64_t n = 0;
    std::vector<int32_t> rank, parent, left, right, depth;
    // zone-ancestor of rank i for node v sits at zanc[zoff[v] + (i - rank[v] - 1)],
    // for rank[v] < i <= ell
    std::vector<int64_t> zoff;
    std::vector<int32_t> zanc;

    static constexpr int32_t none = -1;
    int root() const { return 0; }
    bool is_leaf(int32_t v) const { return left[v] == none; }
};

constexpr int kSkeletonGuardEll = 4;

inline int64_t skeleton_size(int ell) { return (int64_t{1} << ((1LL << ell) - 1)) - 1; }
inline int skeleton_depth(int ell) { return (1 << ell) - 1; }

/// Inductive construction: st_1 is a single rank-1 node; st_ell is a rank-ell
/// root joined to two st_{ell-1} copies, after which every leaf of that tree
/// gains two further st_{ell-1} copies.
inline SkeletonTree build_skeleton(int ell, bool force = false) {
    if (ell < 1) throw std::invalid_argument("build_skeleton: ell must be >= 1");
    if (ell > kSkeletonGuardEll + 1 || (ell > kSkeletonGuardEll && !force))
        throw guard_error("build_skeleton: ell=" + std::to_string(ell) + " exceeds the memory guard (" +
                          std::to_string(skeleton_size(std::min(ell, 6))) +
                          "+ nodes); ell=5 requires an explicit override, larger is unsupported");

    SkeletonTree st;
    st.ell = ell;
    int64_t total = skeleton_size(ell);
    st.rank.reserve(total);
    st.parent.reserve(total);
    st.left.assign(total, SkeletonTree::none);
    st.right.assign(total, SkeletonTree::none);

    std::vector<int32_t> chain;  // enclosing copy roots, outermost first (ranks ell..k+1)
    std::vector<int64_t> zoff;
    std::vector<int32_t> zanc;
    // Creation-order ids first; relabeled breadth-first below.
    std::function<int32_t(int, int32_t, std::vector<int32_t>&)> create =
        [&](int k, int32_t parent, std::vector<int32_t>& leaves_out) -> int32_t {
        int32_t me = static_cast<int32_t>(st.rank.size());
        st.rank.push_back(k);
        st.parent.push_back(parent);
        zoff.push_back(static_cast<int64_t>(zanc.size()));
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) zanc.push_back(*it);
        if (k == 1) {
            leaves_out.push_back(me);
            return me;
        }
        chain.push_back(me);
        std::vector<int32_t> step1_leaves;
        st.left[me] = create(k - 1, me, step1_leaves);
        st.right[me] = create(k - 1, me, step1_leaves);
        for (int32_t t : step1_leaves) {
            st.left[t] = create(k - 1, t, leaves_out);
            st.right[t] = create(k - 1, t, leaves_out);
        }
        chain.pop_back();
        return me;
    };
    std::vector<int32_t> unused;
    create(ell, SkeletonTree::none, unused);
    st.n = static_cast<int64_t>(st.rank.size());

    // zanc entries were pushed innermost-rank-first per node: for node v of
    // rank r they are the enclosing roots of ranks r+1, r+2, ..., ell.
    // Relabel everything breadth-first.
    std::vector<int32_t> order;
    order.reserve(st.n);
    order.push_back(0);
    for (size_t q = 0; q < order.size(); ++q) {
        int32_t v = order[q];
        if (st.left[v] != SkeletonTree::none) order.push_back(st.left[v]);
        if (st.right[v] != SkeletonTree::none) order.push_back(st.right[v]);
    }
    std::vector<int32_t> newid(st.n);
    for (int64_t i = 0; i < st.n; ++i) newid[order[i]] = static_cast<int32_t>(i);
    SkeletonTree out;
    out.ell = ell;
    out.n = st.n;
    out.rank.resize(st.n);
    out.parent.resize(st.n);
    out.left.resize(st.n);
    out.right.resize(st.n);
    out.depth.resize(st.n);
    out.zoff.resize(st.n + 1);
    out.zanc.resize(zanc.size());
    int64_t zpos = 0;
    for (int64_t i = 0; i < st.n; ++i) {
        int32_t old = order[i];
        out.rank[i] = st.rank[old];
        out.parent[i] = st.parent[old] == SkeletonTree::none ? SkeletonTree::none : newid[st.parent[old]];
        out.left[i] = st.left[old] == SkeletonTree::none ? SkeletonTree::none : newid[st.left[old]];
        out.right[i] = st.right[old] == SkeletonTree::none ? SkeletonTree::none : newid[st.right[old]];
        out.depth[i] = out.parent[i] == SkeletonTree::none ? 1 : out.depth[out.parent[i]] + 1;
        out.zoff[i] = zpos;
        int cnt = ell - st.rank[old];
        for (int k = 0; k < cnt; ++k) out.zanc[zpos + k] = newid[zanc[zoff[old] + k]];
        zpos += cnt;
    }
    out.zoff[st.n] = zpos;
    return out;
}

/// The unique node of rank i whose zone contains t; extended so that
/// i = rank(t) returns t itself.
inline int32_t zone_ancestor(const SkeletonTree& st, int32_t t, int i) {
    if (i == st.rank[t]) return t;
    if (i < st.rank[t] || i > st.ell)
        throw std::invalid_argument("zone_ancestor: i=" + std::to_string(i) + " outside rank(t)..ell");
    return st.zanc[st.zoff[t] + (i - st.rank[t] - 1)];
}

/// t lies in the zone of s.
inline bool in_zone(const SkeletonTree& st, int32_t t, int32_t s) {
    if (t == s) return true;
    if (st.rank[s] <= st.rank[t]) return false;
    return zone_ancestor(st, t, st.rank[s]) == s;
}

struct SkeletonReport {
    bool pass = true;
    std::vector<std::string> failures;

    void fail(std::string msg) {
        pass = false;
        if (failures.size() < 32) failures.push_back(std::move(msg));
    }
};

/// Checks node count, depth, the rank-adjacency rule, and zone-ancestor
/// consistency (each chain entry is the nearest ancestor of that rank).
inline SkeletonReport verify_skeleton(const SkeletonTree& st) {
    SkeletonReport rep;
    if (st.n != skeleton_size(st.ell))
        rep.fail("node count " + std::to_string(st.n) + " != " + std::to_string(skeleton_size(st.ell)));
    int32_t maxdepth = 0;
    int64_t rank_ell_count = 0;
    for (int64_t v = 0; v < st.n; ++v) {
        maxdepth = std::max(maxdepth, st.depth[v]);
        if (st.rank[v] == st.ell) ++rank_ell_count;
        int32_t p = st.parent[v];
        if (p != SkeletonTree::none) {
            int i = st.rank[p], j = st.rank[v];
            bool ok = (i >= 2 && j == i - 1) || (i == 1 && j >= 1 && j <= st.ell - 1);
            if (!ok)
                rep.fail("edge (" + std::to_string(p) + "," + std::to_string(v) + ") ranks " +
                         std::to_string(i) + "->" + std::to_string(j) + " violate the adjacency rule");
        }
        // chain entries must be the nearest ancestors of each rank
        int32_t a = st.parent[v];
        int need = st.rank[v] + 1;
        bool chain_bad = false;
        while (a != SkeletonTree::none && need <= st.ell) {
            if (st.rank[a] == need) {
                if (zone_ancestor(st, v, need) != a) {
                    rep.fail("zone-ancestor of node " + std::to_string(v) + " at rank " +
                             std::to_string(need) + " is not the nearest such ancestor");
                    chain_bad = true;
                    break;
                }
                ++need;
            }
            a = st.parent[a];
        }
        if (!chain_bad && need <= st.ell)
            rep.fail("node " + std::to_string(v) + " lacks an ancestor of rank " + std::to_string(need));
    }
    if (maxdepth != skeleton_depth(st.ell))
        rep.fail("depth " + std::to_string(maxdepth) + " != " + std::to_string(skeleton_depth(st.ell)));
    if (rank_ell_count != 1) rep.fail("rank ell node count " + std::to_string(rank_ell_count) + " != 1");
    return rep;
}

inline nlohmann::ordered_json skeleton_to_json(const SkeletonTree& st) {
    nlohmann::ordered_json j;
    j["format_version"] = 1;
    j["ell"] = st.ell;
    auto nodes = nlohmann::ordered_json::array();
    for (int64_t v = 0; v < st.n; ++v) {
        nlohmann::ordered_json nd;
        nd["id"] = v;
        nd["rank"] = st.rank[v];
        nd["depth"] = st.depth[v];
        nd["parent"] =
            st.parent[v] == SkeletonTree::none ? nlohmann::ordered_json() : nlohmann::ordered_json(st.parent[v]);
        nodes.push_back(std::move(nd));
    }
    j["nodes"] = std::move(nodes);
    return j;
}

}  // namespace indpath
