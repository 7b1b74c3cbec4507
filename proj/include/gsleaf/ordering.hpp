#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "gsleaf/graph.hpp"

namespace gsleaf {

/// A vertex ordering: a bijection between positions 1..n and vertex ids.
/// Positions are 1-based to match the usual search-ordering conventions;
/// `at(i)` takes 1-based i, `seq()` is the 0-based underlying sequence.
class Ordering {
public:
    Ordering() = default;

    explicit Ordering(std::vector<int> seq) : seq_(std::move(seq)) {
        int n = static_cast<int>(seq_.size());
        inverse_.assign(static_cast<size_t>(n), -1);
        for (int i = 0; i < n; ++i) {
            int v = seq_[static_cast<size_t>(i)];
            if (v < 0 || v >= n || inverse_[static_cast<size_t>(v)] != -1)
                throw Error("ordering is not a permutation of 0..n-1");
            inverse_[static_cast<size_t>(v)] = i;
        }
    }

    int size() const { return static_cast<int>(seq_.size()); }
    const std::vector<int>& seq() const { return seq_; }

    /// Vertex at 1-based position i.
    int at(int i) const { return seq_[static_cast<size_t>(i - 1)]; }

    /// 1-based position of vertex v.
    int position(int v) const { return inverse_[static_cast<size_t>(v)] + 1; }

    int first() const { return seq_.front(); }
    int last() const { return seq_.back(); }

    bool before(int u, int v) const { return position(u) < position(v); }

    bool operator==(const Ordering& o) const { return seq_ == o.seq_; }
    bool operator!=(const Ordering& o) const { return !(*this == o); }

private:
    std::vector<int> seq_;
    std::vector<int> inverse_;
};

/// Comma-separated vertex names.
inline std::string format_ordering(const Graph& g, const Ordering& o) {
    std::ostringstream out;
    for (int i = 0; i < o.size(); ++i) {
        if (i) out << ',';
        out << g.name_of(o.seq()[static_cast<size_t>(i)]);
    }
    return out.str();
}

/// Parse "a,b,c" against g's name table. Must cover all vertices exactly once.
inline Ordering parse_ordering(const Graph& g, const std::string& text) {
    std::vector<int> seq;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        // trim surrounding whitespace
        size_t b = token.find_first_not_of(" \t");
        size_t e = token.find_last_not_of(" \t");
        if (b == std::string::npos) throw Error("empty vertex name in ordering");
        seq.push_back(g.vertex_by_name(token.substr(b, e - b + 1)));
    }
    if (static_cast<int>(seq.size()) != g.vertex_count())
        throw Error("ordering lists " + std::to_string(seq.size()) + " of " +
                    std::to_string(g.vertex_count()) + " vertices");
    return Ordering(std::move(seq));
}

/// Identity ordering 0,1,...,n-1.
inline Ordering identity_ordering(int n) {
    std::vector<int> seq(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) seq[static_cast<size_t>(i)] = i;
    return Ordering(std::move(seq));
}

}  // namespace gsleaf
