#include "knot/pipeline.hpp"

#include "knot/seifert.hpp"

#include <algorithm>
#include <stdexcept>

namespace knot {

int obstruction_dim(int rank, int sigma) {
    if (sigma > 0) throw std::invalid_argument("proposition requires σ ≤ 0");
    return rank - sigma;
}

int signature_from_goeritz(int rank, int n_plus) { return rank - n_plus; }

std::string certificate_case(KnotParams k) {
    std::vector<std::string> cases;
    if (k.m == 0 && k.n == 0) cases.emplace_back("m=n=0");
    if (is_perfect_square(k.m + 2L)) cases.emplace_back("m+2 square");
    if (is_perfect_square(k.n + 3L)) cases.emplace_back("n+3 square");
    if (cases.empty()) return "empirical certificate only";
    std::string out = cases.front();
    for (std::size_t i = 1; i < cases.size(); ++i) out += ", " + cases[i];
    return out;
}

SliceReport genus_bounds(KnotParams k) {
    IntMatrix const m = seifert_matrix(k);
    SliceReport r;
    r.params = k;
    r.fraction = knot_fraction(k);
    r.signature = signature(symmetrization(m));
    r.determinant = knot_determinant(m);
    r.alexander = alexander(m);

    int const seifert_genus = static_cast<int>(m.rows() / 2);
    r.gtop_lower = (std::abs(r.signature) + 1) / 2;
    r.gsm_upper = seifert_genus;
    r.gtop_upper = r.gsm_upper;
    r.gsm_lower = r.gtop_lower;

    int const rank = static_cast<int>(qmn_gram(k).rank());
    r.notes.push_back("g_top >= |sigma|/2 and g_sm <= Seifert genus " + std::to_string(seifert_genus));
    r.notes.push_back("n_+ = " + std::to_string(positive_crossings(k)) +
                      " is inferred from sigma = rank(Q) - n_+ (rank " + std::to_string(rank) +
                      "), not read off a diagram");
    if (signature_from_goeritz(rank, positive_crossings(k)) != r.signature)
        r.notes.push_back("warning: Goeritz signature formula disagrees with the Seifert signature");
    if (k.m == 0 && k.n == 0) r.notes.push_back("K(0,0) is 12a255 in the knot tables");
    return r;
}

SliceReport full_report(KnotParams k, Budgets const& budgets) {
    SliceReport r = genus_bounds(k);
    IntMatrix const m = seifert_matrix(k);

    int bound = budgets.curve_bound > 0 ? budgets.curve_bound : default_curve_bound(k.m, k.n);
    std::optional<CurveCertificate> cert = family_certificate(k.m, k.n);
    std::string source = "certificate case: " + certificate_case(k);
    if (!cert) {
        cert = find_genus1_certificate(m, CurveSearchOptions{bound, budgets.jobs});
        source = "certificate case: empirical certificate only (box search, bound " + std::to_string(bound) + ")";
    }
    if (cert && verify_certificate(m, *cert)) {
        r.curve_certificate = cert;
        r.gtop_upper = std::min(r.gtop_upper, 1);
        r.gtop_lower = std::min(r.gtop_lower, r.gtop_upper);
        r.notes.push_back(source);
    } else {
        r.notes.push_back("no genus-one certificate within bound " + std::to_string(bound) +
                          " (exhaustive in the box); g_top left in [" + std::to_string(r.gtop_lower) + "," +
                          std::to_string(r.gtop_upper) + "]");
    }
    if ((is_perfect_square(k.m + 3L) && !is_perfect_square(k.m + 2L)) ||
        (is_perfect_square(k.n + 2L) && !is_perfect_square(k.n + 3L)))
        r.notes.push_back("m+3 or n+2 is a perfect square while the matching m+2 / n+3 is not");

    GramLattice const q = qmn_gram(k);
    int const dim = obstruction_dim(static_cast<int>(q.rank()), r.signature);
    EmbeddingSearchOptions eo;
    eo.jobs = budgets.jobs;
    eo.time_limit = budgets.embed_time_limit;
    eo.node_limit = budgets.embed_node_limit;
    auto res = search_embedding(q, dim, eo);

    EmbeddingVerdict v;
    v.tested_dim = dim;
    v.status = res.status;
    v.witness = res.witness;
    r.embedding_verdict = v;

    switch (res.status) {
    case SearchStatus::absent:
        // g_sm = -sigma/2 would force an embedding into Z^dim.
        r.gsm_lower = std::max(r.gsm_lower, -r.signature / 2 + 1);
        r.notes.push_back("Q(m,n) does not embed in Z^" + std::to_string(dim) + " (exhaustive, " +
                          std::to_string(res.nodes) + " nodes)");
        break;
    case SearchStatus::found:
        r.notes.push_back("Q(m,n) embeds in Z^" + std::to_string(dim) + "; lattice obstruction is silent");
        break;
    case SearchStatus::inconclusive:
        r.notes.push_back("embedding search in Z^" + std::to_string(dim) + " exceeded its budget; g_sm undecided");
        break;
    }
    return r;
}

std::vector<SliceReport> verify_theorem(int m_max, int n_max, Budgets const& budgets,
                                        std::function<void(SliceReport const&)> const& on_row) {
    if (m_max < 0 || n_max < 0) throw std::invalid_argument("ranges must be >= 0");
    std::vector<SliceReport> rows;
    for (int m = 0; m <= m_max; ++m)
        for (int n = 0; n <= n_max; ++n) {
            rows.push_back(full_report(KnotParams{m, n}, budgets));
            if (on_row) on_row(rows.back());
        }
    return rows;
}

} // namespace knot
