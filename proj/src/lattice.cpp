#include "knot/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace knot {

IntMatrix Embedding::as_matrix() const {
    IntMatrix out(vectors.size(), static_cast<std::size_t>(ambient_dim));
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < vectors[i].size(); ++j) out(i, j) = vectors[i][j];
    return out;
}

std::optional<std::pair<std::size_t, Integer>> first_nonpositive_minor(GramLattice const& g) {
    auto minors = leading_principal_minors(g.gram());
    for (std::size_t k = 0; k < minors.size(); ++k)
        if (minors[k] <= 0) return std::pair{k + 1, minors[k]};
    return std::nullopt;
}

bool is_positive_definite(GramLattice const& g) { return !first_nonpositive_minor(g).has_value(); }

bool verify_embedding(GramLattice const& g, Embedding const& e) {
    if (e.vectors.size() != g.rank()) throw std::invalid_argument("embedding has the wrong number of vectors");
    for (auto const& v : e.vectors)
        if (static_cast<int>(v.size()) != e.ambient_dim) throw std::invalid_argument("embedding vector length mismatch");
    for (std::size_t i = 0; i < g.rank(); ++i)
        for (std::size_t j = i; j < g.rank(); ++j) {
            std::int64_t dot = 0;
            for (int c = 0; c < e.ambient_dim; ++c) dot += static_cast<std::int64_t>(e.vectors[i][c]) * e.vectors[j][c];
            if (dot != g(i, j)) return false;
        }
    return true;
}

std::string to_string(SearchStatus s) {
    switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::absent: return "absent";
    case SearchStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

using Entry = std::pair<int, int>; // (coordinate, value)
using Sparse = std::vector<Entry>;

// Shared budget and cancellation state for one search.
class Budget {
public:
    explicit Budget(EmbeddingSearchOptions const& opts)
        : node_limit_(opts.node_limit.value_or(std::numeric_limits<std::uint64_t>::max())) {
        if (opts.time_limit) deadline_ = std::chrono::steady_clock::now() + *opts.time_limit;
    }

    // Accounts `n` nodes; false once a budget is exhausted.
    bool charge(std::uint64_t n) {
        std::uint64_t total = nodes_.fetch_add(n) + n;
        if (total > node_limit_ || (deadline_ && std::chrono::steady_clock::now() > *deadline_)) exhausted_ = true;
        return !exhausted_;
    }
    bool exhausted() const { return exhausted_.load(); }
    std::uint64_t nodes() const { return nodes_.load(); }
    // Nodes a searcher may count locally before charging them.
    std::uint64_t batch() const { return std::clamp<std::uint64_t>(node_limit_ / 16, 1, 256); }

private:
    std::uint64_t node_limit_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> exhausted_{false};
};

// Snapshot of a partial assignment: supports of v_1..v_depth and the number
// of coordinates introduced so far.
struct Partial {
    std::vector<Sparse> assigned;
    int used = 0;
};

class Searcher {
public:
    Searcher(GramLattice const& g, int dim, Budget& budget, std::function<bool()> cancelled)
        : g_(g), dim_(dim), rank_(g.rank()), budget_(budget), cancelled_(std::move(cancelled)), incidence_(dim),
          acc_(rank_, 0) {
        for (std::size_t i = 0; i < rank_; ++i) {
            std::vector<std::size_t> nz;
            for (std::size_t j = 0; j < i; ++j)
                if (g(i, j) != 0) nz.push_back(j);
            required_.push_back(std::move(nz));
        }
    }

    void load(Partial const& p) {
        while (!assigned_.empty()) pop();
        used_ = 0;
        for (auto const& s : p.assigned) push(s);
        used_ = p.used;
    }

    Partial snapshot() const { return {assigned_, used_}; }

    // Depth-first search from the current depth. On success the assignment
    // is left in place and true is returned. `visit_depth`, when set, stops
    // descending at that depth and reports each partial assignment instead.
    bool run(std::optional<std::size_t> visit_depth = std::nullopt,
             std::function<void(Partial const&)> const& visit = {}) {
        visit_depth_ = visit_depth;
        visit_ = &visit;
        bool hit = dfs();
        budget_.charge(std::exchange(pending_, 0));
        return hit;
    }

    Embedding embedding() const {
        Embedding e;
        e.ambient_dim = dim_;
        for (auto const& s : assigned_) {
            std::vector<int> v(dim_, 0);
            for (auto [c, x] : s) v[c] = x;
            e.vectors.push_back(std::move(v));
        }
        return e;
    }

    bool aborted() const { return aborted_; }

private:
    void push(Sparse const& s) {
        std::size_t idx = assigned_.size();
        for (auto [c, x] : s) {
            incidence_[c].emplace_back(idx, x);
            used_ = std::max(used_, c + 1);
        }
        assigned_.push_back(s);
    }

    void pop() {
        for (auto [c, x] : assigned_.back()) incidence_[c].pop_back();
        assigned_.pop_back();
    }

    bool tick() {
        if (++pending_ >= budget_.batch()) {
            std::uint64_t n = std::exchange(pending_, 0);
            if (!budget_.charge(n) || (cancelled_ && cancelled_())) aborted_ = true;
        }
        return !aborted_;
    }

    // Dot products of the old-coordinate part `cur` against every assigned
    // vector must equal row i of the Gram matrix.
    bool dots_match(std::size_t i, Sparse const& cur) {
        touched_.clear();
        for (auto [c, x] : cur)
            for (auto [j, y] : incidence_[c]) {
                if (acc_[j] == 0) touched_.push_back(j);
                acc_[j] += static_cast<std::int64_t>(x) * y;
            }
        bool ok = true;
        for (std::size_t j : touched_)
            if (acc_[j] != g_(i, j)) ok = false;
        for (std::size_t j : required_[i])
            if (acc_[j] != g_(i, j)) ok = false;
        for (std::size_t j : touched_) acc_[j] = 0;
        return ok;
    }

    bool dfs() {
        std::size_t i = assigned_.size();
        if (i == rank_) return true;
        if (visit_depth_ && i == *visit_depth_) {
            (*visit_)(snapshot());
            return false;
        }
        Sparse cur;
        return extend_old(i, 0, static_cast<int>(g_(i, i)), cur);
    }

    // Chooses entries of v_i on already-introduced coordinates >= pos.
    bool extend_old(std::size_t i, int pos, int remaining, Sparse& cur) {
        if (aborted_) return false;
        if (dots_match(i, cur)) {
            Sparse full = cur;
            if (extend_new(i, remaining, used_, std::numeric_limits<int>::max(), full)) return true;
            if (aborted_) return false;
        }
        if (remaining == 0) return false;
        for (int c = pos; c < used_; ++c)
            for (int x = 1; x * x <= remaining; ++x)
                for (int sign : {1, -1}) {
                    cur.emplace_back(c, sign * x);
                    bool hit = extend_old(i, c + 1, remaining - x * x, cur);
                    cur.pop_back();
                    if (hit) return true;
                    if (aborted_) return false;
                }
        return false;
    }

    // Spends the rest of the norm on fresh coordinates next, next+1, ...
    // with positive, non-increasing values.
    bool extend_new(std::size_t i, int remaining, int next, int cap, Sparse& full) {
        if (remaining == 0) {
            if (!tick()) return false;
            int saved = used_;
            push(full);
            bool hit = dfs();
            if (!hit) {
                pop();
                used_ = saved;
            }
            return hit;
        }
        if (next >= dim_) return false;
        for (int x = 1; x * x <= remaining && x <= cap; ++x) {
            full.emplace_back(next, x);
            bool hit = extend_new(i, remaining - x * x, next + 1, x, full);
            full.pop_back();
            if (hit) return true;
            if (aborted_) return false;
        }
        return false;
    }

    GramLattice const& g_;
    int dim_;
    std::size_t rank_;
    Budget& budget_;
    std::function<bool()> cancelled_;
    std::vector<std::vector<std::pair<std::size_t, int>>> incidence_;
    std::vector<std::vector<std::size_t>> required_;
    std::vector<std::int64_t> acc_;
    std::vector<std::size_t> touched_;
    std::vector<Sparse> assigned_;
    int used_ = 0;
    std::uint64_t pending_ = 0;
    bool aborted_ = false;
    std::optional<std::size_t> visit_depth_;
    std::function<void(Partial const&)> const* visit_ = nullptr;
};

void check_inputs(GramLattice const& g, int ambient_dim) {
    if (ambient_dim < 1) throw std::invalid_argument("ambient dimension must be >= 1");
    if (auto bad = first_nonpositive_minor(g))
        throw std::invalid_argument("not positive definite: leading principal minor " + std::to_string(bad->first) +
                                    " is " + bad->second.get_str());
}

EmbeddingSearchResult search_sequential(GramLattice const& g, int dim, Budget& budget) {
    Searcher s(g, dim, budget, {});
    EmbeddingSearchResult res;
    if (s.run()) {
        res.status = SearchStatus::found;
        res.witness = s.embedding();
    } else {
        res.status = s.aborted() ? SearchStatus::inconclusive : SearchStatus::absent;
    }
    return res;
}

// Splits the tree at the shallowest depth with enough subtrees, then hands
// subtrees to workers in order. The witness kept is the one from the
// lowest-indexed subtree, which is the sequential search's first witness.
EmbeddingSearchResult search_parallel(GramLattice const& g, int dim, Budget& budget, unsigned jobs) {
    std::vector<Partial> frontier;
    for (std::size_t depth = 1; depth <= g.rank(); ++depth) {
        frontier.clear();
        Searcher s(g, dim, budget, {});
        bool hit = s.run(depth, [&](Partial const& p) { frontier.push_back(p); });
        if (s.aborted()) return {SearchStatus::inconclusive, std::nullopt, budget.nodes()};
        if (hit) return {SearchStatus::found, s.embedding(), budget.nodes()};
        if (frontier.empty()) return {SearchStatus::absent, std::nullopt, budget.nodes()};
        if (frontier.size() >= 4 * static_cast<std::size_t>(jobs)) break;
    }

    std::size_t const n = frontier.size();
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{n};
    std::vector<std::optional<Embedding>> found(n);
    std::atomic<bool> aborted{false};

    auto worker = [&] {
        for (;;) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= n || idx > best.load() || aborted.load()) return;
            Searcher s(g, dim, budget, [&, idx] { return best.load() < idx; });
            s.load(frontier[idx]);
            if (s.run()) {
                found[idx] = s.embedding();
                std::size_t cur = best.load();
                while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
                }
            } else if (s.aborted() && budget.exhausted()) {
                aborted = true;
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    }

    // Any witness settles the question. It is the canonical first one only
    // when no lower subtree was cut short by the budget.
    std::size_t b = best.load();
    if (b < n) return {SearchStatus::found, found[b], budget.nodes()};
    if (aborted.load()) return {SearchStatus::inconclusive, std::nullopt, budget.nodes()};
    return {SearchStatus::absent, std::nullopt, budget.nodes()};
}

} // namespace

EmbeddingSearchResult search_embedding(GramLattice const& g, int ambient_dim, EmbeddingSearchOptions const& opts) {
    check_inputs(g, ambient_dim);
    Budget budget(opts);
    EmbeddingSearchResult res = opts.jobs > 1 ? search_parallel(g, ambient_dim, budget, opts.jobs)
                                              : search_sequential(g, ambient_dim, budget);
    res.nodes = budget.nodes();
    return res;
}

std::optional<Embedding> find_embedding(GramLattice const& g, int ambient_dim) {
    return search_embedding(g, ambient_dim).witness;
}

MinDimResult search_min_embedding_dim(GramLattice const& g, int cap, EmbeddingSearchOptions const& opts) {
    int rank = static_cast<int>(g.rank());
    if (cap < rank) throw std::invalid_argument("cap must be >= rank");
    check_inputs(g, std::max(cap, 1));
    MinDimResult out;
    for (int dim = std::max(rank, 1); dim <= cap; ++dim) {
        auto r = search_embedding(g, dim, opts);
        out.nodes += r.nodes;
        if (r.status == SearchStatus::inconclusive) {
            out.status = SearchStatus::inconclusive;
            return out;
        }
        if (r.status == SearchStatus::found) {
            out.status = SearchStatus::found;
            out.dim = dim;
            out.witness = std::move(r.witness);
            return out;
        }
    }
    out.status = SearchStatus::absent;
    return out;
}

std::optional<int> min_embedding_dim(GramLattice const& g, int cap) { return search_min_embedding_dim(g, cap).dim; }

} // namespace knot
