#pragma once

#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "barriers.hpp"
#include "index_tree.hpp"
#include "skeleton.hpp"
#include "words.hpp"

namespace indpath {

/// The ribbed-tree RT(T): the skeleton with every edge subdivided into a
/// barrier-path whose blocking nodes spell the internal letters of the
/// prescribed index-barrier, each carrying a rib up to the matching
/// zone-ancestor of the edge's parent endpoint.
///
/// Tree nodes reuse their skeleton ids 0..n_sk-1; blocking nodes follow.
struct RibbedTree {
    std::shared_ptr<const SkeletonTree> sk;
    std::shared_ptr<const IndexTree> it;

    std::vector<int32_t> brank;    // rank (represented index) per blocking node
    std::vector<int32_t> btop;     // rib top endpoint (skeleton node id)
    std::vector<uint8_t> bhop;     // 1 when the rib is a hopping rib (the z node)
    std::vector<int32_t> bparent;  // the parent endpoint s of the owning edge
    // chain[t] = blocking node ids on the edge (parent(t), t), ordered parent -> t
    std::vector<std::vector<int32_t>> chain;

    int64_t n_tree() const { return sk->n; }
    int64_t n_blocking() const { return static_cast<int64_t>(brank.size()); }
    int64_t n() const { return n_tree() + n_blocking(); }
    bool is_blocking(int64_t v) const { return v >= sk->n; }
    int32_t rank_of(int64_t v) const {
        return is_blocking(v) ? brank[v - sk->n] : sk->rank[v];
    }
};

inline RibbedTree build_ribbed(std::shared_ptr<const SkeletonTree> sk,
                               std::shared_ptr<const IndexTree> it) {
    if (sk->ell != it->ell)
        throw std::invalid_argument("build_ribbed: skeleton and index tree disagree on ell");
    RibbedTree rt;
    rt.sk = sk;
    rt.it = std::move(it);
    rt.chain.resize(sk->n);

    // Per-word caches; edges of equal rank pair share their barrier word.
    std::vector<Word> down_word(sk->ell + 1);  // B(i, i-1) for parent rank i >= 2
    std::vector<Word> up_word(sk->ell + 1);    // B(j, 1) for parent rank 1, child rank j >= 2
    for (int i = 2; i <= sk->ell; ++i) {
        down_word[i] = factor_barrier(*rt.it, i, i - 1);
        up_word[i] = factor_barrier(*rt.it, i, 1);
    }

    auto add_blocking = [&](int32_t rank, int32_t s, bool hop) {
        int32_t id = static_cast<int32_t>(sk->n + rt.brank.size());
        rt.brank.push_back(rank);
        rt.btop.push_back(zone_ancestor(*sk, s, rank));
        rt.bhop.push_back(hop ? 1 : 0);
        rt.bparent.push_back(s);
        return id;
    };

    for (int64_t t = 1; t < sk->n; ++t) {
        int32_t s = sk->parent[t];
        int i = sk->rank[s], j = sk->rank[t];
        auto& ch = rt.chain[t];
        if (i >= 2) {
            const Word& w = down_word[i];  // i c_1 ... c_p j
            for (size_t k = 1; k + 1 < w.size(); ++k) ch.push_back(add_blocking(w[k], s, false));
        } else if (j == 1) {
            ch.push_back(add_blocking(1, s, true));  // lone z; its rib targets s itself
        } else {
            // subdivided once more than B(j,1) prescribes: z sits next to t,
            // y_1..y_p follow toward s
            const Word& w = up_word[j];  // j c_1 ... c_p 1
            for (size_t k = w.size() - 2; k >= 1; --k) ch.push_back(add_blocking(w[k], s, false));
            ch.push_back(add_blocking(j, s, true));
        }
    }
    return rt;
}

enum class RibbedEdgeKind : uint8_t { BarrierPath, Rib, HoppingRib };

inline const char* to_string(RibbedEdgeKind k) {
    switch (k) {
        case RibbedEdgeKind::BarrierPath: return "barrier-path";
        case RibbedEdgeKind::Rib: return "rib";
        default: return "hopping-rib";
    }
}

struct RibbedEdge {
    int64_t u, v;
    RibbedEdgeKind kind;
};

/// Typed edge list in deterministic order: per child node, the barrier-path
/// from the parent down, then the chain's ribs.
inline std::vector<RibbedEdge> ribbed_edges(const RibbedTree& rt) {
    std::vector<RibbedEdge> out;
    for (int64_t t = 1; t < rt.sk->n; ++t) {
        int64_t prev = rt.sk->parent[t];
        for (int32_t b : rt.chain[t]) {
            out.push_back({prev, b, RibbedEdgeKind::BarrierPath});
            prev = b;
        }
        out.push_back({prev, t, RibbedEdgeKind::BarrierPath});
        for (int32_t b : rt.chain[t])
            out.push_back({b, rt.btop[b - rt.sk->n],
                           rt.bhop[b - rt.sk->n] ? RibbedEdgeKind::HoppingRib : RibbedEdgeKind::Rib});
    }
    return out;
}

struct RibbedReport {
    bool pass = true;
    std::vector<std::string> failures;

    void fail(std::string msg) {
        pass = false;
        if (failures.size() < 32) failures.push_back(std::move(msg));
    }
};

/// Re-derives every barrier-path's collapsed rank word and rib targets from
/// the index tree and compares with the stored structure.
inline RibbedReport verify_ribbed(const RibbedTree& rt) {
    RibbedReport rep;
    const SkeletonTree& sk = *rt.sk;
    for (int64_t t = 1; t < sk.n; ++t) {
        int32_t s = sk.parent[t];
        int i = sk.rank[s], j = sk.rank[t];
        Word ranks{i};
        for (int32_t b : rt.chain[t]) ranks.push_back(rt.brank[b - sk.n]);
        ranks.push_back(j);
        Word expect;
        if (i >= 2)
            expect = factor_barrier(*rt.it, i, i - 1);
        else if (j == 1)
            expect = {1};
        else
            expect = reversed(factor_barrier(*rt.it, j, 1));
        if (collapse(ranks) != expect)
            rep.fail("edge to node " + std::to_string(t) + ": barrier rank word " +
                     word_to_line(collapse(ranks)) + " != expected " + word_to_line(expect));
        int hops = 0;
        for (size_t k = 0; k < rt.chain[t].size(); ++k) {
            int64_t bi = rt.chain[t][k] - sk.n;
            if (rt.btop[bi] != zone_ancestor(sk, s, rt.brank[bi]))
                rep.fail("rib of blocking node " + std::to_string(rt.chain[t][k]) +
                         " does not target the zone-ancestor of its rank");
            if (rt.bhop[bi]) {
                ++hops;
                if (i != 1 || k + 1 != rt.chain[t].size())
                    rep.fail("hopping rib off the z position at node " + std::to_string(rt.chain[t][k]));
            }
        }
        if (i == 1 && hops != 1) rep.fail("rank-1 edge to node " + std::to_string(t) + " lacks its hopping rib");
        if (i >= 2 && hops != 0) rep.fail("unexpected hopping rib on edge to node " + std::to_string(t));
    }
    return rep;
}

/// Node table ("id kind rank") and typed edge list ("u v kind") text export.
inline std::string ribbed_nodes_text(const RibbedTree& rt) {
    std::ostringstream os;
    for (int64_t v = 0; v < rt.sk->n; ++v) os << v << " tree-node " << rt.sk->rank[v] << '\n';
    for (int64_t b = 0; b < rt.n_blocking(); ++b)
        os << rt.sk->n + b << " blocking-node " << rt.brank[b] << '\n';
    return os.str();
}

inline std::string ribbed_edges_text(const RibbedTree& rt) {
    std::ostringstream os;
    for (const auto& e : ribbed_edges(rt)) os << e.u << ' ' << e.v << ' ' << to_string(e.kind) << '\n';
    return os.str();
}

}  // namespace indpath
