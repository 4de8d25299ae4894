#pragma once

// The 2-bridge family K(m,n) = [2m+3, 1, 2n+4, 1, 1, 2]^+ and the matrices
// attached to its standard diagram and genus-two Seifert surface.

#include "knot/exact_arith.hpp"
#include "knot/int_matrix.hpp"

#include <vector>

namespace knot {

/// All-positive continued fraction a0 + 1/(a1 + 1/(...)). Every coefficient
/// is >= 1 and the sequence is nonempty.
class ContinuedFraction {
public:
    explicit ContinuedFraction(std::vector<Integer> coeffs);
    ContinuedFraction(std::initializer_list<long> coeffs);

    std::vector<Integer> const& coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }
    std::string str() const; // "[3,1,4,1,1,2]"

    friend bool operator==(ContinuedFraction const&, ContinuedFraction const&) = default;

private:
    std::vector<Integer> coeffs_;
};

Fraction cf_to_fraction(ContinuedFraction const& cf);

/// Euclidean expansion of p/q with p > q >= 1, canonicalised so the last
/// coefficient is >= 2 (or the expansion is a single integer).
ContinuedFraction fraction_to_cf(Fraction const& f);

struct KnotParams {
    int m = 0;
    int n = 0;

    /// Throws std::invalid_argument("m must be >= 0") and likewise for n.
    static KnotParams make(long m, long n);

    friend auto operator<=>(KnotParams const&, KnotParams const&) = default;
};

ContinuedFraction knot_cf(KnotParams k);

/// (20mn + 56m + 40n + 107) / (10n + 28), reduced.
Fraction knot_fraction(KnotParams k);

/// Seifert matrix of the genus-two surface, entry (i,j) = lk(d_i, d_j^+):
///   [[-m-2,  1,  0, 0],
///    [   0, -n-3, 1, 0],
///    [   0,  0, -1, 0],
///    [   0,  0, -1, 1]]
IntMatrix seifert_matrix(KnotParams k);

/// Positive-definite symmetric integer Gram matrix.
class GramLattice {
public:
    /// Throws std::invalid_argument unless `gram` is square and symmetric.
    explicit GramLattice(IntMatrix gram);

    IntMatrix const& gram() const { return gram_; }
    std::size_t rank() const { return gram_.rows(); }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return gram_(i, j); }

private:
    IntMatrix gram_;
};

/// Tridiagonal Gram matrix of a linear plumbing: weights on the diagonal,
/// -1 between neighbours.
IntMatrix path_gram(std::vector<int> const& weights);

/// Chain weights: 2m+2 twos, a 3, 2n+3 twos, then 3, 3.
std::vector<int> plumbing_weights(KnotParams k);

/// Goeritz lattice Q(m,n) of rank 2m+2n+8: diagonal 3 at the (1-based)
/// positions 2m+3, 2m+2n+7, 2m+2n+8, 2 elsewhere, -1 on the off-diagonal.
GramLattice qmn_gram(KnotParams k);

/// Sum of the continued-fraction coefficients, 2m+2n+12.
int crossing_count(KnotParams k);

/// Positive crossings of the standard alternating diagram. Not read off a
/// diagram: it is the value forced by sigma = rank(Q) - n_+ with sigma = -2,
/// i.e. 2m+2n+10.
int positive_crossings(KnotParams k);

} // namespace knot
