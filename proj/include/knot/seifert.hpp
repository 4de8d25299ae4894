#pragma once

#include "knot/exact_arith.hpp"
#include "knot/int_matrix.hpp"

namespace knot {

/// Square integer matrix that is known to be symmetric.
class SymmetricIntMatrix {
public:
    /// Throws std::invalid_argument for non-symmetric input.
    explicit SymmetricIntMatrix(IntMatrix entries);

    IntMatrix const& entries() const { return entries_; }
    std::size_t size() const { return entries_.rows(); }

private:
    IntMatrix entries_;
};

/// M + M^T
SymmetricIntMatrix symmetrization(IntMatrix const& m);

/// (#positive - #negative) eigenvalues, by symmetric congruence
/// diagonalisation over the rationals.
int signature(SymmetricIntMatrix const& s);

/// |det(M + M^T)|
Integer knot_determinant(IntMatrix const& m);

/// laurent_normalize(det(M - t M^T)) for any square integer matrix.
/// A degenerate matrix whose polynomial vanishes returns the zero polynomial.
LaurentPolynomial alexander(IntMatrix const& m);

/// For a 2x2 form with |S12 - S21| = 1, whether its Alexander polynomial is
/// 1. det(S - t S^T) = D t^2 + (1 - 2D) t + D with D = det S, so this is
/// exactly det S == 0. Throws std::invalid_argument("not a genus-1 knot
/// form") when the precondition fails.
bool alexander_trivial_2x2(IntMatrix const& form);

} // namespace knot
