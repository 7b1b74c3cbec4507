#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gsleaf/graph.hpp"
#include "gsleaf/metrics.hpp"
#include "gsleaf/ordering.hpp"

namespace gsleaf {

/// Exhaustive helpers (ordering enumeration, brute-force subroutines) refuse
/// graphs larger than this unless the caller raises the cap explicitly.
inline constexpr int kDefaultExhaustiveCap = 10;

enum class SearchKind { GS, BFS, DFS, LBFS, LDFS, MCS, MNS };

inline constexpr SearchKind kAllSearchKinds[] = {
    SearchKind::GS,  SearchKind::BFS,  SearchKind::DFS, SearchKind::LBFS,
    SearchKind::LDFS, SearchKind::MCS, SearchKind::MNS};

inline std::string to_string(SearchKind k) {
    switch (k) {
        case SearchKind::GS: return "gs";
        case SearchKind::BFS: return "bfs";
        case SearchKind::DFS: return "dfs";
        case SearchKind::LBFS: return "lbfs";
        case SearchKind::LDFS: return "ldfs";
        case SearchKind::MCS: return "mcs";
        case SearchKind::MNS: return "mns";
    }
    return "?";
}

inline std::optional<SearchKind> search_kind_from_string(const std::string& s) {
    for (SearchKind k : kAllSearchKinds)
        if (to_string(k) == s) return k;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Label comparators on explicit integer sets (sorted ascending, no repeats).
// These spell out the seven partial orders with merge scans; the enumeration
// engine below uses an equivalent packed-bitset form.
// ---------------------------------------------------------------------------

namespace detail {

inline bool is_strict_subset(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() >= b.size()) return false;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++i;
            ++j;
        } else if (a[i] > b[j]) {
            ++j;
        } else {
            return false;  // a[i] missing from b
        }
    }
    return i == a.size();
}

/// min(a \ b), or nullopt when the difference is empty.
inline std::optional<int> min_of_difference(const std::vector<int>& a,
                                            const std::vector<int>& b) {
    size_t i = 0, j = 0;
    while (i < a.size()) {
        while (j < b.size() && b[j] < a[i]) ++j;
        if (j == b.size() || b[j] != a[i]) return a[i];
        ++i;
    }
    return std::nullopt;
}

/// max(a \ b), or nullopt when the difference is empty.
inline std::optional<int> max_of_difference(const std::vector<int>& a,
                                            const std::vector<int>& b) {
    auto i = static_cast<long>(a.size()) - 1;
    auto j = static_cast<long>(b.size()) - 1;
    while (i >= 0) {
        while (j >= 0 && b[static_cast<size_t>(j)] > a[static_cast<size_t>(i)]) --j;
        if (j < 0 || b[static_cast<size_t>(j)] != a[static_cast<size_t>(i)])
            return a[static_cast<size_t>(i)];
        --i;
    }
    return std::nullopt;
}

}  // namespace detail

/// Strict partial order on labels that defines each search: true iff A < B,
/// i.e. a vertex labeled A must yield to one labeled B.
inline bool label_less(SearchKind kind, const std::vector<int>& a, const std::vector<int>& b) {
    switch (kind) {
        case SearchKind::GS:
            return a.empty() && !b.empty();
        case SearchKind::BFS:
            if (b.empty()) return false;
            return a.empty() || a.front() > b.front();
        case SearchKind::DFS:
            if (b.empty()) return false;
            return a.empty() || a.back() < b.back();
        case SearchKind::LBFS: {
            if (detail::is_strict_subset(a, b)) return true;
            auto ab = detail::min_of_difference(a, b);
            auto ba = detail::min_of_difference(b, a);
            return ab && ba && *ab > *ba;
        }
        case SearchKind::LDFS: {
            if (detail::is_strict_subset(a, b)) return true;
            auto ab = detail::max_of_difference(a, b);
            auto ba = detail::max_of_difference(b, a);
            return ab && ba && *ab < *ba;
        }
        case SearchKind::MCS:
            return a.size() < b.size();
        case SearchKind::MNS:
            return detail::is_strict_subset(a, b);
    }
    return false;
}

// ---------------------------------------------------------------------------
// Explicit label state, mirroring the generic label-search loop: numbering a
// vertex appends its 1-based position to each unnumbered neighbor's label.
// ---------------------------------------------------------------------------

struct LabelState {
    std::vector<std::vector<int>> label;  // per-vertex sorted positions of numbered neighbors
    std::vector<int> position;            // 1-based position, 0 while unnumbered
    int numbered = 0;
};

inline LabelState initial_label_state(const Graph& g) {
    LabelState s;
    s.label.assign(static_cast<size_t>(g.vertex_count()), {});
    s.position.assign(static_cast<size_t>(g.vertex_count()), 0);
    return s;
}

inline void number_vertex(const Graph& g, LabelState& s, int v) {
    if (s.position[static_cast<size_t>(v)] != 0) throw Error("vertex already numbered");
    int i = ++s.numbered;
    s.position[static_cast<size_t>(v)] = i;
    for (int w : g.neighbors(v))
        if (s.position[static_cast<size_t>(w)] == 0)
            s.label[static_cast<size_t>(w)].push_back(i);  // labels of numbered vertices stay frozen
}

/// Unnumbered vertices whose labels are maximal under the kind's order.
inline std::vector<int> eligible(const Graph& g, SearchKind kind, const LabelState& s) {
    std::vector<int> out;
    for (int x = 0; x < g.vertex_count(); ++x) {
        if (s.position[static_cast<size_t>(x)] != 0) continue;
        bool maximal = true;
        for (int y = 0; y < g.vertex_count() && maximal; ++y)
            if (y != x && s.position[static_cast<size_t>(y)] == 0 &&
                label_less(kind, s.label[static_cast<size_t>(x)], s.label[static_cast<size_t>(y)]))
                maximal = false;
        if (maximal) out.push_back(x);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Backtracking engine: packed-bitset labels plus incremental search-tree
// bookkeeping. Parents in both tree flavors are fixed the moment a vertex is
// numbered, so child counts can be maintained push/pop style.
// ---------------------------------------------------------------------------

namespace detail {

class SearchEngine {
public:
    SearchEngine(const Graph& g, SearchKind kind)
        : g_(&g),
          kind_(kind),
          n_(g.vertex_count()),
          words_((g.vertex_count() + 63) / 64),
          labels_(static_cast<size_t>(n_) * static_cast<size_t>(words_), 0),
          size_(static_cast<size_t>(n_), 0),
          pos_(static_cast<size_t>(n_), 0),
          f_parent_(static_cast<size_t>(n_), -1),
          l_parent_(static_cast<size_t>(n_), -1),
          f_children_(static_cast<size_t>(n_), 0),
          l_children_(static_cast<size_t>(n_), 0) {
        order_.reserve(static_cast<size_t>(n_));
    }

    int n() const { return n_; }
    SearchKind kind() const { return kind_; }
    int numbered() const { return static_cast<int>(order_.size()); }
    const std::vector<int>& order() const { return order_; }
    int position(int v) const { return pos_[static_cast<size_t>(v)]; }
    bool is_numbered(int v) const { return pos_[static_cast<size_t>(v)] != 0; }

    int f_parent(int v) const { return f_parent_[static_cast<size_t>(v)]; }
    int l_parent(int v) const { return l_parent_[static_cast<size_t>(v)]; }
    int f_children(int v) const { return f_children_[static_cast<size_t>(v)]; }
    int l_children(int v) const { return l_children_[static_cast<size_t>(v)]; }

    void number(int v) {
        int i = numbered() + 1;
        pos_[static_cast<size_t>(v)] = i;
        order_.push_back(v);
        int fp = -1, lp = -1, fpos = 0, lpos = 0;
        for (int w : g_->neighbors(v)) {
            int p = pos_[static_cast<size_t>(w)];
            if (p == 0) {
                set_bit(w, i);
                ++size_[static_cast<size_t>(w)];
            } else {
                if (fp < 0 || p < fpos) fp = w, fpos = p;
                if (lp < 0 || p > lpos) lp = w, lpos = p;
            }
        }
        f_parent_[static_cast<size_t>(v)] = fp;
        l_parent_[static_cast<size_t>(v)] = lp;
        if (fp >= 0) ++f_children_[static_cast<size_t>(fp)];
        if (lp >= 0) ++l_children_[static_cast<size_t>(lp)];
    }

    void unnumber() {
        int v = order_.back();
        int i = pos_[static_cast<size_t>(v)];
        for (int w : g_->neighbors(v)) {
            if (pos_[static_cast<size_t>(w)] == 0) {
                clear_bit(w, i);
                --size_[static_cast<size_t>(w)];
            }
        }
        int fp = f_parent_[static_cast<size_t>(v)];
        int lp = l_parent_[static_cast<size_t>(v)];
        if (fp >= 0) --f_children_[static_cast<size_t>(fp)];
        if (lp >= 0) --l_children_[static_cast<size_t>(lp)];
        f_parent_[static_cast<size_t>(v)] = -1;
        l_parent_[static_cast<size_t>(v)] = -1;
        pos_[static_cast<size_t>(v)] = 0;
        order_.pop_back();
    }

    /// label(a) strictly below label(b) under this engine's kind.
    bool less(int a, int b) const {
        int sa = size_[static_cast<size_t>(a)];
        int sb = size_[static_cast<size_t>(b)];
        switch (kind_) {
            case SearchKind::GS:
                return sa == 0 && sb != 0;
            case SearchKind::BFS:
                if (sb == 0) return false;
                return sa == 0 || min_bit(a) > min_bit(b);
            case SearchKind::DFS:
                if (sb == 0) return false;
                return sa == 0 || max_bit(a) < max_bit(b);
            case SearchKind::MCS:
                return sa < sb;
            case SearchKind::MNS:
                return sa < sb && subset(a, b);
            case SearchKind::LBFS:
                // strictly below iff the labels differ and the lowest
                // differing position lies in b
                return lowest_diff_in_b(a, b);
            case SearchKind::LDFS:
                return highest_diff_in_b(a, b);
        }
        return false;
    }

    void eligible(std::vector<int>& out) const {
        out.clear();
        if (numbered() == 0) {
            for (int v = 0; v < n_; ++v) out.push_back(v);
            return;
        }
        for (int x = 0; x < n_; ++x) {
            if (pos_[static_cast<size_t>(x)] != 0) continue;
            bool maximal = true;
            for (int y = 0; y < n_; ++y) {
                if (y == x || pos_[static_cast<size_t>(y)] != 0) continue;
                if (less(x, y)) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) out.push_back(x);
        }
    }

    bool is_eligible(int x) const {
        if (pos_[static_cast<size_t>(x)] != 0) return false;
        for (int y = 0; y < n_; ++y)
            if (y != x && pos_[static_cast<size_t>(y)] == 0 && less(x, y)) return false;
        return true;
    }

private:
    const uint64_t* row(int v) const { return labels_.data() + static_cast<size_t>(v) * words_; }
    uint64_t* row(int v) { return labels_.data() + static_cast<size_t>(v) * words_; }

    void set_bit(int v, int pos1) { row(v)[(pos1 - 1) >> 6] |= uint64_t{1} << ((pos1 - 1) & 63); }
    void clear_bit(int v, int pos1) {
        row(v)[(pos1 - 1) >> 6] &= ~(uint64_t{1} << ((pos1 - 1) & 63));
    }

    int min_bit(int v) const {
        const uint64_t* r = row(v);
        for (int w = 0; w < words_; ++w)
            if (r[w]) return w * 64 + std::countr_zero(r[w]);
        return -1;
    }

    int max_bit(int v) const {
        const uint64_t* r = row(v);
        for (int w = words_ - 1; w >= 0; --w)
            if (r[w]) return w * 64 + 63 - std::countl_zero(r[w]);
        return -1;
    }

    bool subset(int a, int b) const {
        const uint64_t* ra = row(a);
        const uint64_t* rb = row(b);
        for (int w = 0; w < words_; ++w)
            if (ra[w] & ~rb[w]) return false;
        return true;
    }

    bool lowest_diff_in_b(int a, int b) const {
        const uint64_t* ra = row(a);
        const uint64_t* rb = row(b);
        for (int w = 0; w < words_; ++w) {
            uint64_t x = ra[w] ^ rb[w];
            if (x) return (rb[w] >> std::countr_zero(x)) & 1;
        }
        return false;
    }

    bool highest_diff_in_b(int a, int b) const {
        const uint64_t* ra = row(a);
        const uint64_t* rb = row(b);
        for (int w = words_ - 1; w >= 0; --w) {
            uint64_t x = ra[w] ^ rb[w];
            if (x) return (rb[w] >> (63 - std::countl_zero(x))) & 1;
        }
        return false;
    }

    const Graph* g_;
    SearchKind kind_;
    int n_;
    int words_;
    std::vector<uint64_t> labels_;
    std::vector<int> size_;
    std::vector<int> pos_;
    std::vector<int> order_;
    std::vector<int> f_parent_, l_parent_;
    std::vector<int> f_children_, l_children_;
};

struct EnumerateRawOptions {
    std::optional<int> start;         // force the first vertex
    long long limit = -1;             // stop after this many orderings (<0: all)
};

/// Depth-first enumeration of all kind-orderings. `visit` runs at every full
/// ordering; returning false aborts. Children are explored in ascending id
/// order, so the stream is deterministic. Returns the number visited.
template <typename Visit>
long long enumerate_raw(SearchEngine& engine, const EnumerateRawOptions& opts, Visit&& visit) {
    const int n = engine.n();
    if (n == 0) return 0;
    long long count = 0;
    bool stop = false;
    std::vector<std::vector<int>> buf(static_cast<size_t>(n));
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            ++count;
            if (!visit(engine)) stop = true;
            if (opts.limit >= 0 && count >= opts.limit) stop = true;
            return;
        }
        auto& elig = buf[static_cast<size_t>(depth)];
        engine.eligible(elig);
        for (int v : elig) {
            if (depth == 0 && opts.start && v != *opts.start) continue;
            engine.number(v);
            self(self, depth + 1);
            engine.unnumber();
            if (stop) return;
        }
    };
    rec(rec, 0);
    return count;
}

/// Runs the label search to completion, breaking every tie with `pick`,
/// which receives the eligible set (ascending). No connectivity check.
template <typename Pick>
Ordering run_search_core(const Graph& g, SearchKind kind, Pick&& pick) {
    SearchEngine engine(g, kind);
    std::vector<int> elig;
    for (int i = 0; i < g.vertex_count(); ++i) {
        engine.eligible(elig);
        engine.number(pick(elig));
    }
    return Ordering(engine.order());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Public search operations
// ---------------------------------------------------------------------------

/// Tie-breaking rule for a search run. PlusRho picks the leftmost eligible
/// vertex of a reference ordering, which makes the run fully deterministic;
/// Arbitrary picks uniformly with a seeded generator.
struct TieBreak {
    enum class Mode { PlusRho, Arbitrary };
    Mode mode = Mode::PlusRho;
    Ordering rho;        // PlusRho only; must order all of V
    uint64_t seed = 0;   // Arbitrary only

    static TieBreak plus_rho(Ordering r) { return TieBreak{Mode::PlusRho, std::move(r), 0}; }
    static TieBreak arbitrary(uint64_t seed) { return TieBreak{Mode::Arbitrary, {}, seed}; }
};

/// The +-search: run `kind` breaking every tie by the leftmost eligible
/// vertex in rho. Each prefix of the result extends to a kind-ordering, so
/// this yields exactly the plus-search ordering for rho.
inline Ordering run_search_plus(const Graph& g, SearchKind kind, const Ordering& rho) {
    if (rho.size() != g.vertex_count()) throw Error("rho must order all vertices");
    return detail::run_search_core(g, kind, [&](const std::vector<int>& elig) {
        int best = elig.front();
        for (int v : elig)
            if (rho.position(v) < rho.position(best)) best = v;
        return best;
    });
}

inline Ordering run_search(const Graph& g, SearchKind kind, const TieBreak& tb) {
    if (g.vertex_count() == 0) throw Error("search on empty graph");
    if (!is_connected(g)) throw Error("search requires a connected graph");
    if (tb.mode == TieBreak::Mode::PlusRho) return run_search_plus(g, kind, tb.rho);
    std::mt19937_64 rng(tb.seed);
    return detail::run_search_core(g, kind, [&](const std::vector<int>& elig) {
        std::uniform_int_distribution<size_t> d(0, elig.size() - 1);
        return elig[d(rng)];
    });
}

inline Ordering run_search(const Graph& g, SearchKind kind) {
    if (g.vertex_count() == 0) throw Error("search on empty graph");
    if (!is_connected(g)) throw Error("search requires a connected graph");
    return run_search_plus(g, kind, identity_ordering(g.vertex_count()));
}

/// True iff sigma could have been produced by the kind's label search, i.e.
/// every vertex is eligible at its own step.
inline bool is_search_ordering(const Graph& g, SearchKind kind, const Ordering& sigma) {
    if (sigma.size() != g.vertex_count()) return false;
    detail::SearchEngine engine(g, kind);
    for (int i = 1; i <= sigma.size(); ++i) {
        int v = sigma.at(i);
        if (!engine.is_eligible(v)) return false;
        engine.number(v);
    }
    return true;
}

struct EnumerateOptions {
    std::optional<int> start;
    long long limit = -1;
    int cap = kDefaultExhaustiveCap;
};

/// Streams exactly the kind-orderings of g (deterministic order). The
/// visitor returns false to stop early. Returns the number streamed.
inline long long enumerate_orderings(const Graph& g, SearchKind kind,
                                     const EnumerateOptions& opts,
                                     const std::function<bool(const Ordering&)>& visit) {
    if (g.vertex_count() > opts.cap)
        throw Error("enumeration cap exceeded: n=" + std::to_string(g.vertex_count()) +
                    " > cap=" + std::to_string(opts.cap));
    if (opts.start && (*opts.start < 0 || *opts.start >= g.vertex_count()))
        throw Error("enumeration start vertex out of range");
    detail::SearchEngine engine(g, kind);
    detail::EnumerateRawOptions raw{opts.start, opts.limit};
    return detail::enumerate_raw(engine, raw,
                                 [&](detail::SearchEngine& e) { return visit(Ordering(e.order())); });
}

inline std::vector<Ordering> all_orderings(const Graph& g, SearchKind kind,
                                           int cap = kDefaultExhaustiveCap) {
    std::vector<Ordering> out;
    EnumerateOptions opts;
    opts.cap = cap;
    enumerate_orderings(g, kind, opts, [&](const Ordering& o) {
        out.push_back(o);
        return true;
    });
    return out;
}

}  // namespace gsleaf
