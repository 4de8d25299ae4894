#include "knot/seifert.hpp"

#include <stdexcept>
#include <vector>

namespace knot {

SymmetricIntMatrix::SymmetricIntMatrix(IntMatrix entries) : entries_(std::move(entries)) {
    if (!entries_.is_symmetric()) throw std::invalid_argument("matrix is not symmetric");
}

SymmetricIntMatrix symmetrization(IntMatrix const& m) { return SymmetricIntMatrix(m + m.transposed()); }

int signature(SymmetricIntMatrix const& s) {
    std::size_t n = s.size();
    std::vector<std::vector<Fraction>> a(n, std::vector<Fraction>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Fraction(static_cast<long>(s.entries()(i, j)));

    auto swap_index = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        for (auto& row : a) std::swap(row[i], row[j]);
    };
    // row/col i += row/col j
    auto add_index = [&](std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < n; ++c) a[i][c] += a[j][c];
        for (std::size_t r = 0; r < n; ++r) a[r][i] += a[r][j];
    };

    int sig = 0;
    for (std::size_t p = 0; p < n; ++p) {
        if (a[p][p].sign() == 0) {
            std::size_t q = p + 1;
            while (q < n && a[q][q].sign() == 0) ++q;
            if (q < n) {
                swap_index(p, q);
            } else {
                q = p + 1;
                while (q < n && a[p][q].sign() == 0) ++q;
                if (q == n) continue; // zero row: a zero eigenvalue
                // Both diagonals vanish, so the new pivot is 2 a[p][q] != 0.
                add_index(p, q);
            }
        }
        Fraction const pivot = a[p][p];
        sig += pivot.sign();
        // Schur complement on the trailing block, then clear row/col p.
        for (std::size_t r = p + 1; r < n; ++r) {
            if (a[r][p].sign() == 0) continue;
            Fraction f = a[r][p] / pivot;
            for (std::size_t c = p + 1; c < n; ++c) a[r][c] -= f * a[p][c];
        }
        for (std::size_t r = p + 1; r < n; ++r) a[r][p] = a[p][r] = Fraction(0L);
    }
    return sig;
}

Integer knot_determinant(IntMatrix const& m) { return abs(determinant(symmetrization(m).entries())); }

namespace {

// Coefficients (constant first) of the unique polynomial of degree < xs.size()
// through the points (xs[i], ys[i]), via Newton divided differences.
std::vector<Fraction> interpolate(std::vector<long> const& xs, std::vector<Integer> const& ys) {
    std::size_t n = xs.size();
    std::vector<Fraction> dd(ys.begin(), ys.end());
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / Fraction(xs[i] - xs[i - level]);

    std::vector<Fraction> poly{dd[n - 1]};
    for (std::size_t k = n - 1; k-- > 0;) {
        // poly = poly * (t - xs[k]) + dd[k]
        std::vector<Fraction> next(poly.size() + 1);
        for (std::size_t e = 0; e < poly.size(); ++e) {
            next[e + 1] += poly[e];
            next[e] -= poly[e] * Fraction(xs[k]);
        }
        next[0] += dd[k];
        poly = std::move(next);
    }
    return poly;
}

} // namespace

LaurentPolynomial alexander(IntMatrix const& m) {
    if (!m.is_square()) throw std::invalid_argument("alexander: matrix must be square");
    std::size_t k = m.rows();
    IntMatrix mt = m.transposed();

    // det(M - t M^T) has degree <= k; sample it at t = 0..k.
    std::vector<long> xs;
    std::vector<Integer> ys;
    for (long t = 0; t <= static_cast<long>(k); ++t) {
        IntMatrix e(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) e(i, j) = m(i, j) - t * mt(i, j);
        xs.push_back(t);
        ys.push_back(determinant(e));
    }
    LaurentPolynomial::Terms terms;
    auto coeffs = interpolate(xs, ys);
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        if (!coeffs[e].is_integer()) throw std::logic_error("alexander: non-integral interpolation");
        terms.emplace(static_cast<long>(e), coeffs[e].num());
    }
    LaurentPolynomial p(std::move(terms));
    return p.is_zero() ? p : laurent_normalize(p);
}

bool alexander_trivial_2x2(IntMatrix const& form) {
    if (form.rows() != 2 || form.cols() != 2) throw std::invalid_argument("not a genus-1 knot form");
    std::int64_t skew = form(0, 1) - form(1, 0);
    if (skew != 1 && skew != -1) throw std::invalid_argument("not a genus-1 knot form");
    return form(0, 0) * form(1, 1) == form(0, 1) * form(1, 0);
}

} // namespace knot
