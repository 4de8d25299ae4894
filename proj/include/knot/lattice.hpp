#pragma once

// Exact decision procedure for embeddings of a positive-definite integral
// lattice into the standard lattice Z^M.
//
// The search assigns an integer vector to each basis vector in the given
// order. Candidates for v_i have norm gram(i,i) and the prescribed dot
// products with v_1..v_{i-1}. Signed coordinate permutations of Z^M are
// quotiented out by first-use canonicalisation: coordinates are introduced
// in ascending order, and the coordinates a vector introduces carry
// positive values in non-increasing order. Every embedding is equivalent to
// exactly such a one, so the search stays exhaustive.

#include "knot/int_matrix.hpp"
#include "knot/two_bridge.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace knot {

struct Embedding {
    std::vector<std::vector<int>> vectors; // image of v_1..v_r
    int ambient_dim = 0;

    IntMatrix as_matrix() const;
    /// r lines of M integers.
    std::string str() const { return format_rows(as_matrix()); }

    friend bool operator==(Embedding const&, Embedding const&) = default;
};

/// All leading principal minors > 0.
bool is_positive_definite(GramLattice const& g);

/// 1-based index and value of the first leading principal minor that is not
/// positive, if any.
std::optional<std::pair<std::size_t, Integer>> first_nonpositive_minor(GramLattice const& g);

/// Pairwise dot products agree with the Gram matrix. Throws
/// std::invalid_argument if the vector count or lengths do not match.
bool verify_embedding(GramLattice const& g, Embedding const& e);

enum class SearchStatus { found, absent, inconclusive };

std::string to_string(SearchStatus s);

struct EmbeddingSearchOptions {
    unsigned jobs = 1;
    std::optional<std::chrono::milliseconds> time_limit;
    std::optional<std::uint64_t> node_limit;
};

struct EmbeddingSearchResult {
    SearchStatus status = SearchStatus::absent;
    std::optional<Embedding> witness;
    std::uint64_t nodes = 0;
};

/// Exhaustive search with optional budgets. A budget overrun gives
/// `inconclusive`, never `absent`. Throws std::invalid_argument if g is not
/// positive definite or ambient_dim < 1.
EmbeddingSearchResult search_embedding(GramLattice const& g, int ambient_dim, EmbeddingSearchOptions const& opts = {});

/// Unbudgeted search; the canonically first witness or nullopt.
std::optional<Embedding> find_embedding(GramLattice const& g, int ambient_dim);

struct MinDimResult {
    SearchStatus status = SearchStatus::absent; // found: dim is set
    std::optional<int> dim;
    std::optional<Embedding> witness;
    std::uint64_t nodes = 0;
};

/// Smallest M <= cap admitting an embedding, trying M = rank..cap.
/// Throws std::invalid_argument if cap < rank.
MinDimResult search_min_embedding_dim(GramLattice const& g, int cap, EmbeddingSearchOptions const& opts = {});

std::optional<int> min_embedding_dim(GramLattice const& g, int cap);

inline int default_embedding_cap(GramLattice const& g) { return static_cast<int>(g.rank()) + 6; }

} // namespace knot
