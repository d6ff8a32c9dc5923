#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace indpath {

/// A word over the index alphabet 1..ell. The empty word is a valid value.
using Word = std::vector<int>;

/// Contraction of consecutive repeated letters.
inline Word collapse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (int x : w)
        if (out.empty() || out.back() != x) out.push_back(x);
    return out;
}

inline Word reversed(Word w) {
    std::reverse(w.begin(), w.end());
    return w;
}

/// Whether `needle` occurs as a factor (contiguous subsequence) of `hay`.
inline bool is_factor(const Word& needle, const Word& hay) {
    if (needle.empty()) return true;
    return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

/// One word per line, letters whitespace-separated.
inline std::string word_to_line(const Word& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ' ';
        os << w[i];
    }
    return os.str();
}

inline Word word_from_line(const std::string& line) {
    Word w;
    std::istringstream is(line);
    for (int x; is >> x;) w.push_back(x);
    return w;
}

}  // namespace indpath
