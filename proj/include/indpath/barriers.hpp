#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "index_tree.hpp"
#include "words.hpp"

namespace indpath {

/// Full index-barrier B(i): the walk-word that explores the subtree of i,
/// visiting the left subtree twice. Leaf: "i"; one child: i B(i-1) i;
/// two children: i B(i-) i B(i+) i B(i-) i.
inline Word full_barrier(const IndexTree& t, int i) {
    if (i < 1 || i > t.ell) throw std::invalid_argument("full_barrier: index out of range");
    Word out;
    std::function<void(int)> rec = [&](int x) {
        int l = t.left[x], r = t.right[x];
        out.push_back(x);
        if (l == IndexTree::none && r == IndexTree::none) return;
        if (l == IndexTree::none || r == IndexTree::none) {
            rec(x - 1);  // the only child of x is labeled x-1
            out.push_back(x);
            return;
        }
        rec(l);
        out.push_back(x);
        rec(r);
        out.push_back(x);
        rec(l);
        out.push_back(x);
    };
    rec(i);
    return out;
}

/// B of the whole tree; the empty tree's barrier is the empty word.
inline Word full_barrier(const IndexTree& t) {
    return t.empty() ? Word{} : full_barrier(t, t.root());
}

/// |B(i)| for every i, without materializing the words.
inline std::vector<long long> barrier_lengths(const IndexTree& t) {
    std::vector<long long> len(t.ell + 1, 0);
    for (int i = 1; i <= t.ell; ++i) {
        int l = t.left[i], r = t.right[i];
        if (l == IndexTree::none && r == IndexTree::none)
            len[i] = 1;
        else if (l == IndexTree::none || r == IndexTree::none)
            len[i] = len[i - 1] + 2;
        else
            len[i] = 2 * len[l] + len[r] + 4;  // children are labeled below i
    }
    return len;
}

/// Index-barrier B(i,j), i > j: the factor of B(ell) from the first
/// occurrence of i to the first occurrence of j, inclusive.
inline Word factor_barrier(const IndexTree& t, int i, int j) {
    if (i <= j) throw std::invalid_argument("factor_barrier: requires i > j");
    if (j < 1 || i > t.ell) throw std::invalid_argument("factor_barrier: index out of range");
    Word B = full_barrier(t);
    auto a = std::find(B.begin(), B.end(), i);
    auto b = std::find(B.begin(), B.end(), j);
    return Word(a, b + 1);  // first occurrences are ordered by obs. on decreasing indices
}

/// Equivalence classes of the reach relation on { i : i < b }: i and j are
/// related when some factor of B(ell) contains both but avoids b.
struct ReachClasses {
    int b = 0;
    std::vector<std::vector<int>> classes;  // each ascending; ordered by minimum
    std::vector<int> class_of;              // size ell+1; -1 outside the ground set

    bool related(int i, int j) const { return class_of[i] >= 0 && class_of[i] == class_of[j]; }
};

inline ReachClasses reach_classes(const IndexTree& t, int b) {
    if (b < 1 || b > t.ell + 1) throw std::invalid_argument("reach_classes: b out of 1..ell+1");
    ReachClasses rc;
    rc.b = b;
    rc.class_of.assign(t.ell + 1, -1);
    // Union the indices of each maximal b-free block of B(ell): any two
    // indices sharing a block are related, and transitivity does the rest.
    std::vector<int> uf(b);
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
    Word B = full_barrier(t);
    B.push_back(b);  // sentinel terminates the last block
    int head = -1;
    for (int ch : B) {
        if (ch == b) {
            head = -1;
        } else if (ch < b) {
            if (head < 0)
                head = ch;
            else
                uf[find(ch)] = find(head);
        }
    }
    int ground = std::min(b - 1, t.ell);
    std::vector<std::vector<int>> by_root(b);
    for (int i = 1; i <= ground; ++i) by_root[find(i)].push_back(i);
    for (int r = 1; r < b; ++r)
        if (!by_root[r].empty()) rc.classes.push_back(std::move(by_root[r]));
    std::sort(rc.classes.begin(), rc.classes.end(),
              [](const auto& a, const auto& c) { return a.front() < c.front(); });
    for (size_t k = 0; k < rc.classes.size(); ++k)
        for (int i : rc.classes[k]) rc.class_of[i] = static_cast<int>(k);
    return rc;
}

inline std::vector<int> reach_above(const IndexTree& t, int b, int i) {
    if (i >= b) throw std::invalid_argument("reach_above: requires i < b");
    auto rc = reach_classes(t, b);
    std::vector<int> out;
    if (rc.class_of[i] < 0) return out;
    for (int j : rc.classes[rc.class_of[i]])
        if (j > i) out.push_back(j);
    return out;
}

inline std::vector<int> reach_below(const IndexTree& t, int b, int i) {
    if (i >= b) throw std::invalid_argument("reach_below: requires i < b");
    auto rc = reach_classes(t, b);
    std::vector<int> out;
    if (rc.class_of[i] < 0) return out;
    for (int j : rc.classes[rc.class_of[i]])
        if (j < i) out.push_back(j);
    return out;
}

// ---- size bounds for the unbalanced family ----

/// Barrier length under the padded one-child convention used by the size
/// lemma: a single child is treated as a right child with an empty left
/// sibling, i.e. B(i) = i i B(i-1) i i. Upper-bounds the actual length.
inline long long convention_barrier_length(long long m, double alpha) {
    if (m < 0) throw std::invalid_argument("convention_barrier_length: m >= 0 required");
    if (alpha <= 2.0) throw std::invalid_argument("convention_barrier_length: alpha > 2 required");
    if (m == 0) return 0;
    if (m == 1) return 1;
    long long fl = static_cast<long long>(std::floor(static_cast<double>(m) / alpha));
    return 2 * convention_barrier_length(fl, alpha * (alpha - 1.0)) +
           convention_barrier_length(m - fl - 1, alpha) + 4;
}

struct BarrierLengthBound {
    long long actual = 0;      // definition-style |B(m)| of T_alpha(m)
    long long convention = 0;  // padded one-child convention
    double bound = 0.0;        // 4 m log2(alpha m) / log2(alpha - 1)
    bool ok = false;           // actual <= convention <= bound (vacuous at m = 0)
};

inline BarrierLengthBound barrier_length_bound(long long m, double alpha) {
    if (alpha <= 2.0) throw std::invalid_argument("barrier_length_bound: alpha > 2 required");
    BarrierLengthBound r;
    if (m == 0) {
        r.ok = true;
        return r;
    }
    IndexTree t = build_unbalanced(m, alpha);
    r.actual = barrier_lengths(t)[t.root()];
    r.convention = convention_barrier_length(m, alpha);
    r.bound = 4.0 * static_cast<double>(m) * std::log2(alpha * static_cast<double>(m)) /
              std::log2(alpha - 1.0);
    r.ok = r.actual <= r.convention && static_cast<double>(r.convention) <= r.bound;
    return r;
}

// ---- nested chains of subtrees ----

struct ChainSumBound {
    long long sum = 0;
    double bound = 0.0;
    bool ok = false;
};

/// Sum of |B(k_i)| over a chain where each subtree is a proper subtree of the
/// previous one, against the bound 4 m log2(alpha m) alpha / log2(alpha - 1).
inline ChainSumBound nested_chain_sum_bound(const IndexTree& t, const std::vector<int>& chain,
                                            double alpha) {
    if (alpha <= 2.0) throw std::invalid_argument("nested_chain_sum_bound: alpha > 2 required");
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        if (chain[i + 1] == chain[i] || !in_subtree(t, chain[i + 1], chain[i]))
            throw std::invalid_argument("nested_chain_sum_bound: T(" + std::to_string(chain[i + 1]) +
                                        ") is not a proper subtree of T(" + std::to_string(chain[i]) + ")");
    }
    ChainSumBound r;
    auto len = barrier_lengths(t);
    for (int k : chain) {
        if (k < 1 || k > t.ell) throw std::invalid_argument("nested_chain_sum_bound: index out of range");
        r.sum += len[k];
    }
    long long m = t.ell;
    r.bound = m == 0 ? 0.0
                     : 4.0 * static_cast<double>(m) * std::log2(alpha * static_cast<double>(m)) *
                           alpha / std::log2(alpha - 1.0);
    r.ok = static_cast<double>(r.sum) <= r.bound || chain.empty();
    return r;
}

struct MaxNestedChain {
    long long sum = 0;        // max sum of |B(k_i)| over properly nested chains
    std::vector<int> chain;   // a witness chain, outermost first
};

/// Tree DP maximizing the barrier-length sum over properly nested chains.
inline MaxNestedChain max_nested_chain(const IndexTree& t) {
    MaxNestedChain best;
    if (t.empty()) return best;
    auto len = barrier_lengths(t);
    // f[i]: best chain starting exactly at i; g[i]: best chain starting in T(i)
    std::vector<long long> f(t.ell + 1, 0), g(t.ell + 1, 0);
    std::vector<int> f_next(t.ell + 1, IndexTree::none), g_start(t.ell + 1, IndexTree::none);
    for (int i = 1; i <= t.ell; ++i) {  // children precede parents by the labeling
        long long cont = 0;
        int via = IndexTree::none;
        for (int c : {t.left[i], t.right[i]})
            if (c != IndexTree::none && g[c] > cont) {
                cont = g[c];
                via = c;
            }
        f[i] = len[i] + cont;
        f_next[i] = via;
        g[i] = f[i];
        g_start[i] = i;
        for (int c : {t.left[i], t.right[i]})
            if (c != IndexTree::none && g[c] > g[i]) {
                g[i] = g[c];
                g_start[i] = g_start[c];
            }
    }
    best.sum = g[t.root()];
    for (int k = g_start[t.root()]; k != IndexTree::none;) {
        best.chain.push_back(k);
        int via = f_next[k];
        k = via == IndexTree::none ? IndexTree::none : g_start[via];
    }
    return best;
}

/// Worst-case sum realizable by the total-length bound: the root's barrier
/// (the first special vertex always has the whole tree as range) plus the
/// best properly nested chain, which may itself start at the root again.
inline long long worst_path_bound_sum(const IndexTree& t) {
    if (t.empty()) return 0;
    return barrier_lengths(t)[t.root()] + max_nested_chain(t).sum;
}

}  // namespace indpath
