#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "barriers.hpp"
#include "index_tree.hpp"
#include "words.hpp"

namespace indpath {

struct StatementResult {
    std::string statement;
    bool pass = true;
    nlohmann::ordered_json counterexample;  // null when pass
};

struct WordPropertyReport {
    int ell = 0;
    std::vector<StatementResult> results;

    bool pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
    nlohmann::ordered_json to_json() const {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : results)
            arr.push_back({{"statement", r.statement},
                           {"pass", r.pass},
                           {"counterexample", r.pass ? nlohmann::ordered_json() : r.counterexample}});
        return arr;
    }
};

constexpr int kWordCheckEllCap = 12;

/// Exhaustively verifies every word-combinatorics statement the construction
/// relies on, over all applicable index/factor tuples of B(ell). Quadratic to
/// exponential in places (factor and chain enumeration), hence the ell cap.
inline WordPropertyReport check_word_properties(const IndexTree& t) {
    if (t.ell > kWordCheckEllCap)
        throw std::invalid_argument("check_word_properties: exhaustive factor enumeration is capped at ell <= " +
                                    std::to_string(kWordCheckEllCap) + "; use a smaller tree");
    validate(t);
    WordPropertyReport rep;
    rep.ell = t.ell;
    const int ell = t.ell;
    const Word B = full_barrier(t);
    const int L = static_cast<int>(B.size());

    auto add = [&](std::string name, bool pass, nlohmann::ordered_json cx) {
        rep.results.push_back({std::move(name), pass, std::move(cx)});
    };

    // tree helpers on <= 12 indices: bitmask subtrees and shortest paths
    std::vector<uint32_t> sub(ell + 1, 0);
    for (int i = 1; i <= ell; ++i)
        for (int x : subtree_indices(t, i)) sub[i] |= 1u << x;
    auto path_mask = [&](int i, int j) {
        uint32_t ai = 0, aj = 0;
        for (int x : ancestors_or_self(t, i)) ai |= 1u << x;
        for (int x : ancestors_or_self(t, j)) aj |= 1u << x;
        int lca = -1;
        for (int x : ancestors_or_self(t, i))
            if (aj & (1u << x)) {
                lca = x;
                break;
            }
        uint32_t m = 0;
        for (int x = i; x != lca; x = t.parent[x]) m |= 1u << x;
        for (int x = j; x != lca; x = t.parent[x]) m |= 1u << x;
        m |= 1u << lca;
        return m;
    };
    std::vector<int> first_occ(ell + 1, -1);
    for (int p = 0; p < L; ++p)
        if (first_occ[B[p]] < 0) first_occ[B[p]] = p;
    // cnt[i][p] = occurrences of i in B[0..p)
    std::vector<std::vector<int>> cnt(ell + 1, std::vector<int>(L + 1, 0));
    for (int i = 1; i <= ell; ++i)
        for (int p = 0; p < L; ++p) cnt[i][p + 1] = cnt[i][p] + (B[p] == i);
    auto occurs_in = [&](int i, int a, int b) {  // in B[a..b] inclusive
        return cnt[i][b + 1] - cnt[i][a] > 0;
    };

    if (ell == 0) return rep;  // all statements vacuous on the empty tree

    {  // indices in B(i+) are smaller than those in B(i-), which are smaller than i
        bool ok = true;
        nlohmann::ordered_json cx;
        for (int i = 1; i <= ell && ok; ++i) {
            if (t.left[i] == IndexTree::none || t.right[i] == IndexTree::none) continue;
            auto ls = subtree_indices(t, t.left[i]);
            auto rs = subtree_indices(t, t.right[i]);
            if (rs.back() >= ls.front() || ls.back() >= i) {
                ok = false;
                cx = {{"i", i}, {"max_right", rs.back()}, {"min_left", ls.front()}};
            }
        }
        add("descendant-smaller", ok, cx);
    }

    {  // every factor containing i and j contains their shortest tree path
        bool ok = true;
        nlohmann::ordered_json cx;
        std::vector<std::vector<uint32_t>> pm(ell + 1, std::vector<uint32_t>(ell + 1, 0));
        for (int i = 1; i <= ell; ++i)
            for (int j = 1; j <= ell; ++j) pm[i][j] = path_mask(i, j);
        for (int a = 0; a < L && ok; ++a) {
            uint32_t present = 0;
            for (int b = a; b < L && ok; ++b) {
                int x = B[b];
                if (present & (1u << x)) continue;
                uint32_t now = present | (1u << x);
                for (int i = 1; i <= ell; ++i) {
                    if (!(present & (1u << i))) continue;
                    if ((pm[i][x] & ~now) != 0) {
                        ok = false;
                        cx = {{"factor_start", a}, {"factor_end", b}, {"i", i}, {"j", x}};
                        break;
                    }
                }
                present = now;
            }
        }
        add("factors-contain-shortest-path", ok, cx);
    }

    {  // in B(k), first occurrences appear in decreasing index order
        bool ok = true;
        nlohmann::ordered_json cx;
        for (int k = 1; k <= ell && ok; ++k) {
            Word Bk = full_barrier(t, k);
            std::vector<int> fo(ell + 1, -1);
            for (int p = 0; p < static_cast<int>(Bk.size()); ++p)
                if (fo[Bk[p]] < 0) fo[Bk[p]] = p;
            for (int i = 1; i <= ell && ok; ++i)
                for (int j = 1; j < i; ++j)
                    if (fo[i] >= 0 && fo[j] >= 0 && fo[i] >= fo[j]) {
                        ok = false;
                        cx = {{"k", k}, {"i", i}, {"j", j}};
                        break;
                    }
        }
        add("decreasing-first-occurrences", ok, cx);
    }

    {  // collapse of chained index-barriers is a factor of B(ell)
        bool ok = true;
        nlohmann::ordered_json cx;
        for (uint32_t s = 0; s < (1u << ell) && ok; ++s) {
            if (__builtin_popcount(s) < 2) continue;
            std::vector<int> chain;
            for (int i = ell; i >= 1; --i)
                if (s & (1u << i)) chain.push_back(i);
            if (chain.size() < 2) continue;
            Word w;
            for (size_t k = 0; k + 1 < chain.size(); ++k) {
                Word f = factor_barrier(t, chain[k], chain[k + 1]);
                w.insert(w.end(), f.begin(), f.end());
            }
            w = collapse(w);
            if (!is_factor(w, B)) {
                ok = false;
                cx = {{"chain", chain}, {"word", w}};
            }
        }
        add("concatenation-of-barriers", ok, cx);
    }

    {  // B(i,j): all of j..i present, one trailing j, nothing below j;
       // and prefixes of B(i,1) cut at first occurrences behave alike
        bool ok = true;
        nlohmann::ordered_json cx;
        auto check_word = [&](const Word& w, int i, int j) -> const char* {
            for (int x = j; x <= i; ++x) {
                bool found = false;
                for (int y : w)
                    if (y == x) {
                        found = true;
                        break;
                    }
                if (!found) return "missing index";
            }
            for (size_t p = 0; p + 1 < w.size(); ++p)
                if (w[p] == j) return "internal occurrence of j";
            for (int y : w)
                if (y < j) return "index below j";
            return nullptr;
        };
        for (int i = 2; i <= ell && ok; ++i)
            for (int j = 1; j < i && ok; ++j) {
                Word w = factor_barrier(t, i, j);
                if (const char* why = check_word(w, i, j)) {
                    ok = false;
                    cx = {{"i", i}, {"j", j}, {"why", why}, {"word", w}};
                    break;
                }
                // the same factor arises as the prefix of B(i,1) ending at
                // the first occurrence of j
                Word w1 = factor_barrier(t, i, 1);
                auto pos = std::find(w1.begin(), w1.end(), j);
                Word pre(w1.begin(), pos + 1);
                if (const char* why = check_word(pre, i, j)) {
                    ok = false;
                    cx = {{"i", i}, {"j", j}, {"why", why}, {"prefix_of_Bi1", pre}};
                }
            }
        add("i-j-intermediate", ok, cx);
    }

    {  // B(i,i-1): letters >= i-1 and no internal i or i-1
        bool ok = true;
        nlohmann::ordered_json cx;
        for (int i = 2; i <= ell && ok; ++i) {
            Word w = factor_barrier(t, i, i - 1);
            for (size_t p = 0; p < w.size(); ++p) {
                bool internal = p > 0 && p + 1 < w.size();
                if (w[p] < i - 1 || (internal && (w[p] == i || w[p] == i - 1))) {
                    ok = false;
                    cx = {{"i", i}, {"word", w}};
                    break;
                }
            }
        }
        add("i-iminusone-intermediate", ok, cx);
    }

    {  // every i < b lies in T(b-) or in T(k+) for an ancestor k of b
        bool ok = true;
        nlohmann::ordered_json cx;
        for (int b = 1; b <= ell && ok; ++b)
            for (int i = 1; i < b; ++i) {
                bool found = t.left[b] != IndexTree::none && (sub[t.left[b]] & (1u << i));
                for (int k : ancestors_or_self(t, b))
                    if (!found && t.right[k] != IndexTree::none && (sub[t.right[k]] & (1u << i)))
                        found = true;
                if (!found) {
                    ok = false;
                    cx = {{"b", b}, {"i", i}};
                    break;
                }
            }
        add("smaller-index-in-left-or-right-of-ancestor", ok, cx);
    }

    {  // factors from the parent of a subtree root down to j cover [j..i]
        bool ok = true;
        nlohmann::ordered_json cx;
        for (int i = 1; i <= ell && ok; ++i) {
            int ip = t.parent[i];
            if (ip == IndexTree::none) continue;
            for (int j : subtree_indices(t, i)) {
                for (int a = 0; a < L && ok; ++a) {
                    if (B[a] != ip) continue;
                    for (int b = a + 1; b < L; ++b) {
                        if (B[b] != j) continue;
                        for (int x = j; x <= i; ++x)
                            if (!occurs_in(x, a, b)) {
                                ok = false;
                                cx = {{"i", i}, {"parent", ip}, {"j", j}, {"factor_start", a},
                                      {"factor_end", b}, {"missing", x}};
                                break;
                            }
                        if (!ok) break;
                    }
                }
                if (!ok) break;
            }
        }
        add("parent-to-descendant-covers-interval", ok, cx);
    }

    {  // all b-delimited factors containing i coincide
        bool ok = true;
        nlohmann::ordered_json cx;
        for (int b = 1; b <= ell && ok; ++b) {
            std::vector<std::pair<int, int>> segs;  // consecutive occurrences of b
            int prev = -1;
            for (int p = 0; p < L; ++p)
                if (B[p] == b) {
                    if (prev >= 0) segs.push_back({prev, p});
                    prev = p;
                }
            for (int i = 1; i < b && ok; ++i) {
                const std::pair<int, int>* ref = nullptr;
                for (const auto& s : segs) {
                    if (!occurs_in(i, s.first, s.second)) continue;
                    if (!ref) {
                        ref = &s;
                        continue;
                    }
                    if (s.second - s.first != ref->second - ref->first ||
                        !std::equal(B.begin() + s.first, B.begin() + s.second + 1, B.begin() + ref->first)) {
                        ok = false;
                        cx = {{"b", b}, {"i", i}, {"factor1_start", ref->first}, {"factor2_start", s.first}};
                        break;
                    }
                }
            }
        }
        add("b-bounded-factors-are-equal", ok, cx);
    }

    {  // each reach class fits inside T(b-) or a single T(k+), k ancestor of b
        bool ok = true;
        nlohmann::ordered_json cx;
        for (int b = 1; b <= ell && ok; ++b) {
            auto rc = reach_classes(t, b);
            for (const auto& cls : rc.classes) {
                uint32_t m = 0;
                for (int i : cls) m |= 1u << i;
                bool fits = t.left[b] != IndexTree::none && (m & ~sub[t.left[b]]) == 0;
                for (int k : ancestors_or_self(t, b))
                    if (!fits && t.right[k] != IndexTree::none && (m & ~sub[t.right[k]]) == 0) fits = true;
                if (!fits) {
                    ok = false;
                    cx = {{"b", b}, {"class", cls}};
                    break;
                }
            }
        }
        add("reach-class-same-subtree", ok, cx);
    }

    return rep;
}

}  // namespace indpath
