#pragma once

// Slice-genus verdicts for K(m,n). The upper bound on the topological genus
// comes from a genus-one reduction certificate; the lower bound on the smooth
// genus from the absence of an embedding of the Goeritz lattice Q(m,n) into
// Z^(rank - sigma), which would be forced if g_sm = -sigma/2.

#include "knot/curve_search.hpp"
#include "knot/exact_arith.hpp"
#include "knot/lattice.hpp"
#include "knot/two_bridge.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace knot {

struct EmbeddingVerdict {
    int tested_dim = 0;
    SearchStatus status = SearchStatus::inconclusive; // found = embeddable
    std::optional<Embedding> witness;

    friend bool operator==(EmbeddingVerdict const&, EmbeddingVerdict const&) = default;
};

struct SliceReport {
    KnotParams params;
    Fraction fraction;
    int signature = 0;
    Integer determinant;
    LaurentPolynomial alexander;
    int gtop_lower = 0;
    int gtop_upper = 0;
    int gsm_lower = 0;
    int gsm_upper = 0;
    std::optional<CurveCertificate> curve_certificate;
    std::optional<EmbeddingVerdict> embedding_verdict;
    std::vector<std::string> notes;

    std::optional<int> gtop() const { return gtop_lower == gtop_upper ? std::optional(gtop_lower) : std::nullopt; }
    std::optional<int> gsm() const { return gsm_lower == gsm_upper ? std::optional(gsm_lower) : std::nullopt; }
    bool conclusive() const { return !embedding_verdict || embedding_verdict->status != SearchStatus::inconclusive; }

    friend bool operator==(SliceReport const&, SliceReport const&) = default;
};

/// Invariants and the standing bounds |sigma|/2 <= g_top <= g_sm <= g(S) = 2.
/// No searches.
SliceReport genus_bounds(KnotParams k);

/// rank - sigma. Throws std::invalid_argument("proposition requires σ ≤ 0")
/// for sigma > 0.
int obstruction_dim(int rank, int sigma);

/// sigma = rank(G) - n_+
int signature_from_goeritz(int rank, int n_plus);

struct Budgets {
    int curve_bound = 0; // 0: default_curve_bound(m, n)
    std::optional<std::chrono::milliseconds> embed_time_limit;
    std::optional<std::uint64_t> embed_node_limit;
    unsigned jobs = 1;
};

/// Runs the certificate search and the embedding search at
/// obstruction_dim(rank Q, sigma) and tightens the bounds accordingly.
SliceReport full_report(KnotParams k, Budgets const& budgets);

/// One report per (m, n), lexicographic in (m, n). `on_row` is called as
/// each row completes.
std::vector<SliceReport> verify_theorem(int m_max, int n_max, Budgets const& budgets,
                                        std::function<void(SliceReport const&)> const& on_row = {});

/// Provenance label of the explicit certificate family that applies:
/// "m=n=0", "m+2 square", "n+3 square", or "empirical certificate only".
std::string certificate_case(KnotParams k);

} // namespace knot
