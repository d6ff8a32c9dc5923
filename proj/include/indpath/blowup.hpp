#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "ribbed.hpp"

namespace indpath {

enum class VertexKind : uint8_t {
    TriangleTopLeft = 0,
    TriangleTopRight,
    TriangleBottom,
    RepX1,
    RepX2,
    RepX3,
};

enum class Side : uint8_t { None = 0, Left, Right };

enum class EdgeKind : uint8_t {
    TriangleTop = 0,
    TriangleOther,
    Barrier,
    RibE1,
    RibE2,
    RibE3,
    HoppingRib,
};

inline const char* to_string(VertexKind k) {
    switch (k) {
        case VertexKind::TriangleTopLeft: return "triangle-top-left";
        case VertexKind::TriangleTopRight: return "triangle-top-right";
        case VertexKind::TriangleBottom: return "triangle-bottom";
        case VertexKind::RepX1: return "representative-x1";
        case VertexKind::RepX2: return "representative-x2";
        default: return "representative-x3";
    }
}

inline const char* to_string(Side s) {
    switch (s) {
        case Side::Left: return "left-barrier";
        case Side::Right: return "right-barrier";
        default: return "none";
    }
}

inline const char* to_string(EdgeKind k) {
    switch (k) {
        case EdgeKind::TriangleTop: return "triangle-top";
        case EdgeKind::TriangleOther: return "triangle-other";
        case EdgeKind::Barrier: return "barrier";
        case EdgeKind::RibE1: return "rib-e1";
        case EdgeKind::RibE2: return "rib-e2";
        case EdgeKind::RibE3: return "rib-e3";
        default: return "hopping-rib";
    }
}

/// The blow-up G(T): one triangle per tree node, and per blocking node two
/// representative triples x1 x2 x3 (the barrier and its duplicate), attached
/// by the left/right identification rules. Vertex ids are stable composites:
/// triangles occupy 3*node + {0,1,2} (top-left, top-right, bottom);
/// representatives follow as 3*n_tree + 6*blocking + 3*side + role.
struct BlowupGraph {
    std::shared_ptr<const RibbedTree> rt;
    bool mirrored = false;

    int64_t n = 0;
    int64_t n_triangle = 0;
    std::vector<uint8_t> kind;    // VertexKind
    std::vector<uint8_t> side;    // Side; None for triangle vertices
    std::vector<int32_t> rank;
    std::vector<int32_t> pi;      // ribbed-tree node (tree node or blocking node)
    std::vector<int32_t> ribtop;  // representatives: skeleton node of the rib top; -1 otherwise

    std::vector<std::array<int32_t, 2>> edges;  // insertion order, u < v
    std::vector<uint8_t> edge_kind;
    std::vector<int64_t> adj_off;  // CSR over sorted neighbors
    std::vector<int32_t> adj;

    int32_t tri(int64_t node, VertexKind role) const {
        return static_cast<int32_t>(3 * node + static_cast<int>(role));
    }
    int32_t rep(int64_t blocking_id, Side s, int role) const {  // role 0..2 for x1..x3
        int64_t b = blocking_id - rt->sk->n;
        return static_cast<int32_t>(n_triangle + 6 * b + 3 * (s == Side::Right) + role);
    }
    bool is_triangle(int64_t v) const { return v < n_triangle; }
    /// blocking node of a representative
    int32_t rep_block(int64_t v) const {
        return static_cast<int32_t>(rt->sk->n + (v - n_triangle) / 6);
    }
    int32_t pi_of(int64_t v) const { return pi[v]; }

    bool has_edge(int32_t u, int32_t v) const {
        auto lo = adj.begin() + adj_off[u], hi = adj.begin() + adj_off[u + 1];
        return std::binary_search(lo, hi, v);
    }
    std::pair<const int32_t*, const int32_t*> neighbors(int32_t v) const {
        return {adj.data() + adj_off[v], adj.data() + adj_off[v + 1]};
    }
    int64_t degree(int32_t v) const { return adj_off[v + 1] - adj_off[v]; }
};

/// `mirror` swaps the left/right child roles at every skeleton node; used by
/// the mirror-isomorphism check.
inline BlowupGraph build_blowup(std::shared_ptr<const RibbedTree> rt, bool mirror = false) {
    BlowupGraph g;
    g.rt = rt;
    g.mirrored = mirror;
    const SkeletonTree& sk = *rt->sk;
    g.n_triangle = 3 * sk.n;
    g.n = g.n_triangle + 6 * rt->n_blocking();
    g.kind.resize(g.n);
    g.side.assign(g.n, static_cast<uint8_t>(Side::None));
    g.rank.resize(g.n);
    g.pi.resize(g.n);
    g.ribtop.assign(g.n, -1);

    for (int64_t s = 0; s < sk.n; ++s) {
        for (int r = 0; r < 3; ++r) {
            int64_t v = 3 * s + r;
            g.kind[v] = static_cast<uint8_t>(static_cast<VertexKind>(r));
            g.rank[v] = sk.rank[s];
            g.pi[v] = static_cast<int32_t>(s);
        }
    }
    for (int64_t b = 0; b < rt->n_blocking(); ++b) {
        for (int sd = 0; sd < 2; ++sd) {
            for (int role = 0; role < 3; ++role) {
                int64_t v = g.n_triangle + 6 * b + 3 * sd + role;
                g.kind[v] = static_cast<uint8_t>(static_cast<VertexKind>(3 + role));
                g.side[v] = static_cast<uint8_t>(sd == 0 ? Side::Left : Side::Right);
                g.rank[v] = rt->brank[b];
                g.pi[v] = static_cast<int32_t>(sk.n + b);
                g.ribtop[v] = rt->btop[b];
            }
        }
    }

    std::unordered_set<int64_t> seen;
    seen.reserve(static_cast<size_t>(g.n) * 3);
    auto add_edge = [&](int32_t u, int32_t v, EdgeKind k) {
        if (u > v) std::swap(u, v);
        int64_t key = static_cast<int64_t>(u) * g.n + v;
        if (!seen.insert(key).second) return;  // i=j=1 hopping e1 duplicates a path edge
        g.edges.push_back({u, v});
        g.edge_kind.push_back(static_cast<uint8_t>(k));
    };

    for (int64_t s = 0; s < sk.n; ++s) {
        add_edge(g.tri(s, VertexKind::TriangleTopLeft), g.tri(s, VertexKind::TriangleTopRight),
                 EdgeKind::TriangleTop);
        add_edge(g.tri(s, VertexKind::TriangleTopLeft), g.tri(s, VertexKind::TriangleBottom),
                 EdgeKind::TriangleOther);
        add_edge(g.tri(s, VertexKind::TriangleTopRight), g.tri(s, VertexKind::TriangleBottom),
                 EdgeKind::TriangleOther);
    }
    for (int64_t t = 1; t < sk.n; ++t) {
        int32_t s = sk.parent[t];
        bool left_child = (sk.left[s] == t) != mirror;
        // child-side attachments are always the two top vertices; at the
        // parent, the child's own side uses the matching top vertex and the
        // other barrier drops to the bottom vertex
        for (Side sd : {Side::Left, Side::Right}) {
            int32_t from, to;
            if (left_child) {
                from = sd == Side::Left ? g.tri(s, VertexKind::TriangleTopLeft)
                                        : g.tri(s, VertexKind::TriangleBottom);
                to = sd == Side::Left ? g.tri(t, VertexKind::TriangleTopLeft)
                                      : g.tri(t, VertexKind::TriangleTopRight);
            } else {
                from = sd == Side::Right ? g.tri(s, VertexKind::TriangleTopRight)
                                         : g.tri(s, VertexKind::TriangleBottom);
                to = sd == Side::Right ? g.tri(t, VertexKind::TriangleTopRight)
                                       : g.tri(t, VertexKind::TriangleTopLeft);
            }
            int32_t prev = from;
            for (int32_t b : rt->chain[t]) {
                add_edge(prev, g.rep(b, sd, 0), EdgeKind::Barrier);
                add_edge(g.rep(b, sd, 0), g.rep(b, sd, 1), EdgeKind::Barrier);
                add_edge(g.rep(b, sd, 1), g.rep(b, sd, 2), EdgeKind::Barrier);
                prev = g.rep(b, sd, 2);
            }
            add_edge(prev, to, EdgeKind::Barrier);
        }
        for (int32_t b : rt->chain[t]) {
            int32_t top = rt->btop[b - sk.n];
            bool hop = rt->bhop[b - sk.n];
            for (Side sd : {Side::Left, Side::Right}) {
                add_edge(g.rep(b, sd, 0), g.tri(top, VertexKind::TriangleBottom),
                         hop ? EdgeKind::HoppingRib : EdgeKind::RibE1);
                add_edge(g.rep(b, sd, 1), g.tri(top, VertexKind::TriangleTopRight),
                         hop ? EdgeKind::HoppingRib : EdgeKind::RibE2);
                add_edge(g.rep(b, sd, 2), g.tri(top, VertexKind::TriangleTopLeft),
                         hop ? EdgeKind::HoppingRib : EdgeKind::RibE3);
            }
        }
    }

    // CSR adjacency, sorted per vertex
    std::vector<int64_t> deg(g.n + 1, 0);
    for (const auto& e : g.edges) {
        ++deg[e[0] + 1];
        ++deg[e[1] + 1];
    }
    g.adj_off.assign(g.n + 1, 0);
    for (int64_t v = 0; v < g.n; ++v) g.adj_off[v + 1] = g.adj_off[v] + deg[v + 1];
    g.adj.resize(g.adj_off[g.n]);
    std::vector<int64_t> fill(g.adj_off.begin(), g.adj_off.end() - 1);
    for (const auto& e : g.edges) {
        g.adj[fill[e[0]]++] = e[1];
        g.adj[fill[e[1]]++] = e[0];
    }
    for (int64_t v = 0; v < g.n; ++v)
        std::sort(g.adj.begin() + g.adj_off[v], g.adj.begin() + g.adj_off[v + 1]);
    return g;
}

// ---- certificates and checks ----

using PathCertificate = std::vector<int32_t>;

struct PathCheckReport {
    bool pass = true;
    std::string violation;  // first violation, empty when pass
};

inline PathCheckReport check_path(const BlowupGraph& g, const PathCertificate& cert,
                                  bool require_hamiltonian = false, bool require_induced = false) {
    PathCheckReport rep;
    auto fail = [&](std::string msg) {
        rep.pass = false;
        rep.violation = std::move(msg);
        return rep;
    };
    std::vector<int64_t> pos(g.n, -1);
    for (size_t i = 0; i < cert.size(); ++i) {
        int32_t v = cert[i];
        if (v < 0 || v >= g.n) return fail("vertex id out of range: " + std::to_string(v));
        if (pos[v] >= 0) return fail("not simple: vertex " + std::to_string(v) + " repeats");
        pos[v] = static_cast<int64_t>(i);
    }
    for (size_t i = 0; i + 1 < cert.size(); ++i)
        if (!g.has_edge(cert[i], cert[i + 1]))
            return fail("non-adjacent consecutive pair (" + std::to_string(cert[i]) + "," +
                        std::to_string(cert[i + 1]) + ")");
    if (require_hamiltonian && static_cast<int64_t>(cert.size()) != g.n)
        return fail("covers " + std::to_string(cert.size()) + " of " + std::to_string(g.n) + " vertices");
    if (require_induced) {
        for (size_t i = 0; i < cert.size(); ++i) {
            auto [lo, hi] = g.neighbors(cert[i]);
            for (auto p = lo; p != hi; ++p) {
                int64_t j = pos[*p];
                if (j >= 0 && std::abs(j - static_cast<int64_t>(i)) > 1)
                    return fail("chord (" + std::to_string(cert[i]) + "," + std::to_string(*p) + ")");
            }
        }
    }
    return rep;
}

/// Constructive Hamiltonian path: every subtree is traversed from the left to
/// the right top vertex of its root triangle, descending to each child along
/// one barrier copy and returning along the duplicate.
inline PathCertificate hamiltonian_path(const BlowupGraph& g) {
    const RibbedTree& rt = *g.rt;
    const SkeletonTree& sk = *rt.sk;
    PathCertificate out;
    out.reserve(g.n);
    auto push_interior = [&](int64_t t, Side sd, bool rev) {
        const auto& ch = rt.chain[t];
        if (!rev) {
            for (int32_t b : ch)
                for (int role = 0; role < 3; ++role) out.push_back(g.rep(b, sd, role));
        } else {
            for (auto it = ch.rbegin(); it != ch.rend(); ++it)
                for (int role = 2; role >= 0; --role) out.push_back(g.rep(*it, sd, role));
        }
    };
    // Sides as attached by build_blowup for child t (respecting mirroring):
    // top-to-top copy = child's own side, bottom-attached copy = the other.
    std::function<void(int64_t)> walk = [&](int64_t s) {
        bool left_first = !g.mirrored;
        int64_t c1 = left_first ? sk.left[s] : sk.right[s];
        int64_t c2 = left_first ? sk.right[s] : sk.left[s];
        out.push_back(g.tri(s, VertexKind::TriangleTopLeft));
        if (c1 == SkeletonTree::none) {
            out.push_back(g.tri(s, VertexKind::TriangleBottom));
            out.push_back(g.tri(s, VertexKind::TriangleTopRight));
            return;
        }
        push_interior(c1, Side::Left, false);   // L_s .. L_c1
        walk(c1);                                // L_c1 .. R_c1
        push_interior(c1, Side::Right, true);    // R_c1 .. B_s
        out.push_back(g.tri(s, VertexKind::TriangleBottom));
        push_interior(c2, Side::Left, false);    // B_s .. L_c2
        walk(c2);
        push_interior(c2, Side::Right, true);    // R_c2 .. R_s
        out.push_back(g.tri(s, VertexKind::TriangleTopRight));
    };
    walk(sk.root());
    auto rep = check_path(g, out, /*require_hamiltonian=*/true);
    if (!rep.pass)
        throw std::runtime_error("hamiltonian_path produced an invalid certificate: " + rep.violation);
    return out;
}

/// Min-degree peeling order with per-step back-degrees.
struct DegeneracyCertificate {
    std::vector<int32_t> order;
    std::vector<int32_t> back_degree;  // degree at removal time
    int degeneracy = 0;
};

inline DegeneracyCertificate degeneracy(const BlowupGraph& g) {
    DegeneracyCertificate cert;
    int64_t n = g.n;
    std::vector<int32_t> deg(n);
    int32_t maxdeg = 0;
    for (int64_t v = 0; v < n; ++v) {
        deg[v] = static_cast<int32_t>(g.degree(static_cast<int32_t>(v)));
        maxdeg = std::max(maxdeg, deg[v]);
    }
    // bucket queue
    std::vector<std::vector<int32_t>> bucket(maxdeg + 1);
    for (int64_t v = 0; v < n; ++v) bucket[deg[v]].push_back(static_cast<int32_t>(v));
    std::vector<uint8_t> removed(n, 0);
    cert.order.reserve(n);
    cert.back_degree.reserve(n);
    int cur = 0;
    for (int64_t step = 0; step < n; ++step) {
        while (cur > 0 && !bucket[cur - 1].empty()) --cur;
        while (cur <= maxdeg && bucket[cur].empty()) ++cur;
        int32_t v = -1;
        for (;;) {
            v = bucket[cur].back();
            bucket[cur].pop_back();
            if (!removed[v] && deg[v] == cur) break;
            while (cur <= maxdeg && bucket[cur].empty()) ++cur;
        }
        removed[v] = 1;
        cert.order.push_back(v);
        cert.back_degree.push_back(cur);
        cert.degeneracy = std::max(cert.degeneracy, cur);
        auto [lo, hi] = g.neighbors(v);
        for (auto p = lo; p != hi; ++p)
            if (!removed[*p]) bucket[--deg[*p]].push_back(*p);
    }
    return cert;
}

}  // namespace indpath
