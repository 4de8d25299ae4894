#pragma once

// Independent reference implementations used only by the tests. None of
// these share code paths with the library routines they check.

#include "knot/exact_arith.hpp"
#include "knot/int_matrix.hpp"
#include "knot/two_bridge.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace knot::oracle {

// ------------------------------------------------------------- signature

/// Characteristic polynomial det(xI - A), coefficients from x^n down to x^0,
/// by Faddeev-LeVerrier over the rationals.
inline std::vector<Fraction> charpoly(IntMatrix const& a) {
    std::size_t n = a.rows();
    using Mat = std::vector<std::vector<Fraction>>;
    Mat A(n, std::vector<Fraction>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) A[i][j] = Fraction(static_cast<long>(a(i, j)));
    auto mul = [n](Mat const& x, Mat const& y) {
        Mat z(n, std::vector<Fraction>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
        return z;
    };
    std::vector<Fraction> c(n + 1);
    c[0] = Fraction(1L);
    Mat Mk(n, std::vector<Fraction>(n)); // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{k-1} I ; c_k = -tr(A M_k) / k
        Mat next = mul(A, Mk);
        for (std::size_t i = 0; i < n; ++i) next[i][i] += c[k - 1];
        Mk = std::move(next);
        Mat AM = mul(A, Mk);
        Fraction tr;
        for (std::size_t i = 0; i < n; ++i) tr += AM[i][i];
        c[k] = -tr / Fraction(static_cast<long>(k));
    }
    return c;
}

inline int sign_changes(std::vector<Fraction> const& c) {
    int changes = 0, last = 0;
    for (auto const& x : c) {
        int s = x.sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

/// For a symmetric matrix the characteristic polynomial is real-rooted, so
/// Descartes' rule of signs counts positive and negative roots exactly.
inline int signature_by_descartes(IntMatrix const& a) {
    auto c = charpoly(a);
    std::size_t n = c.size() - 1;
    int pos = sign_changes(c);
    std::vector<Fraction> neg = c; // p(-x)
    for (std::size_t i = 0; i <= n; ++i)
        if ((n - i) % 2 == 1) neg[i] = -neg[i];
    return pos - sign_changes(neg);
}

// ------------------------------------------------------------- Alexander

/// det(M - t M^T) by Laplace expansion over Laurent-polynomial entries.
inline LaurentPolynomial alexander_laplace(IntMatrix const& m) {
    std::size_t n = m.rows();
    std::vector<std::vector<LaurentPolynomial>> e(n, std::vector<LaurentPolynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            e[i][j] = LaurentPolynomial(Integer(static_cast<long>(m(i, j)))) -
                      LaurentPolynomial(Integer(static_cast<long>(m(j, i))), 1);
    std::vector<std::size_t> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = j;
    auto rec = [&](auto&& self, std::size_t row, std::vector<std::size_t> const& free) -> LaurentPolynomial {
        if (free.empty()) return LaurentPolynomial(Integer(1));
        LaurentPolynomial acc;
        for (std::size_t k = 0; k < free.size(); ++k) {
            std::vector<std::size_t> rest = free;
            rest.erase(rest.begin() + static_cast<long>(k));
            LaurentPolynomial term = e[row][free[k]] * self(self, row + 1, rest);
            if (k % 2 == 0) acc += term;
            else acc -= term;
        }
        return acc;
    };
    return rec(rec, 0, cols);
}

// ---------------------------------------------------------- curve search

struct PairHit {
    std::vector<int> a, b;
};

/// Unpruned double loop over all (a, b) in [-bound, bound]^k x [-bound, bound]^k.
/// Returns every valid pair in lexicographic order (a then b) when `all` is
/// set, else stops after the first.
inline std::vector<PairHit> curve_pairs_bruteforce(IntMatrix const& m, int bound, bool all) {
    std::size_t k = m.rows();
    std::vector<PairHit> hits;
    std::vector<int> a(k, -bound), b(k, -bound);
    auto bump = [bound](std::vector<int>& v) {
        for (std::size_t i = v.size(); i-- > 0;) {
            if (v[i] < bound) {
                ++v[i];
                return true;
            }
            v[i] = -bound;
        }
        return false;
    };
    auto dot = [&](std::vector<int> const& x, std::vector<int> const& y, bool skew) {
        long s = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) s += x[i] * (skew ? m(i, j) - m(j, i) : m(i, j)) * y[j];
        return s;
    };
    do {
        std::fill(b.begin(), b.end(), -bound);
        do {
            long x = dot(a, b, true);
            if (x != 1 && x != -1) continue;
            bool prop = true;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    if (a[i] * b[j] != a[j] * b[i]) prop = false;
            if (prop) continue;
            if (dot(a, a, false) * dot(b, b, false) != dot(a, b, false) * dot(b, a, false)) continue;
            hits.push_back({a, b});
            if (!all) return hits;
        } while (bump(b));
    } while (bump(a));
    return hits;
}

/// Classes whose first nonzero coordinate is positive and whose coordinates
/// are coprime.
inline bool canonical_class(std::vector<int> const& a) {
    auto first = std::find_if(a.begin(), a.end(), [](int x) { return x != 0; });
    if (first == a.end() || *first < 0) return false;
    int g = 0;
    for (int x : a) g = std::gcd(g, x);
    return g == 1;
}

/// First brute-force pair whose a is canonical.
inline std::optional<PairHit> first_canonical_pair(std::vector<PairHit> const& all) {
    for (auto const& h : all)
        if (canonical_class(h.a)) return h;
    return std::nullopt;
}

// ----------------------------------------------------- lattice embedding

/// All integer vectors of squared length d in Z^dim, by full enumeration of
/// the cube [-sqrt d, sqrt d]^dim.
inline std::vector<std::vector<int>> vectors_of_norm(long d, int dim) {
    int lim = 0;
    while ((lim + 1) * (lim + 1) <= d) ++lim;
    std::vector<std::vector<int>> out;
    std::vector<int> v(dim, -lim);
    for (;;) {
        long s = 0;
        for (int x : v) s += x * x;
        if (s == d) out.push_back(v);
        int p = dim - 1;
        while (p >= 0 && v[p] == lim) v[p--] = -lim;
        if (p < 0) break;
        ++v[p];
    }
    return out;
}

/// Plain backtracking without symmetry reduction: every integer vector of
/// the right norm is tried at every step.
inline bool embeds_naive(IntMatrix const& g, int dim) {
    static std::map<std::pair<long, int>, std::vector<std::vector<int>>> cache;
    std::size_t r = g.rows();
    std::vector<std::vector<std::vector<int>> const*> by_norm(r);
    for (std::size_t i = 0; i < r; ++i) {
        auto key = std::make_pair(static_cast<long>(g(i, i)), dim);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, vectors_of_norm(key.first, dim)).first;
        by_norm[i] = &it->second;
    }
    std::vector<std::vector<int>> chosen;
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == r) return true;
        for (auto const& v : *by_norm[i]) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) {
                long s = 0;
                for (int c = 0; c < dim; ++c) s += v[c] * chosen[j][c];
                ok = s == g(i, j);
            }
            if (!ok) continue;
            chosen.push_back(v);
            if (self(self, i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return rec(rec, 0);
}

/// Hand-assembled embedding of Q(m,n): an e-chain carrying the first weight-3
/// vertex, followed by an f-chain carrying the last two. Ambient dimension is
/// 2n+11 for m = 0 and 2m+2n+12 otherwise.
struct PatternWitness {
    std::vector<std::vector<int>> vectors;
    int dim = 0;
};

inline PatternWitness chain_witness(int m, int n) {
    int const ne = m == 0 ? 3 : 2 * m + 4;
    int const nf = 2 * n + 8;
    int const dim = ne + nf;
    auto e = [](int i) { return i - 1; };
    auto f = [ne](int i) { return ne + i - 1; };
    std::vector<std::vector<int>> vs;
    auto vec = [&](std::initializer_list<std::pair<int, int>> entries) {
        std::vector<int> v(dim, 0);
        for (auto [idx, c] : entries) v[idx] += c;
        vs.push_back(v);
    };
    if (m == 0) {
        vec({{e(2), 1}, {e(1), -1}});
        vec({{e(3), 1}, {e(2), -1}});
        vec({{e(1), 1}, {e(2), 1}, {f(1), -1}});
    } else {
        for (int i = 1; i <= 2 * m + 2; ++i) vec({{e(i), 1}, {e(i + 1), -1}});
        vec({{e(2 * m + 3), 1}, {e(2 * m + 4), 1}, {f(1), -1}});
    }
    for (int j = 1; j <= 2 * n + 3; ++j) vec({{f(j), 1}, {f(j + 1), -1}});
    vec({{f(2 * n + 4), 1}, {f(2 * n + 5), 1}, {f(2 * n + 6), 1}});
    vec({{f(2 * n + 5), -1}, {f(2 * n + 7), 1}, {f(2 * n + 8), 1}});
    return {vs, dim};
}

/// Every symmetric matrix of rank <= max_rank with entries in [lo, hi] whose
/// leading principal minors are all positive.
inline std::vector<IntMatrix> small_positive_definite(int max_rank, int lo, int hi) {
    std::vector<IntMatrix> out;
    for (int r = 1; r <= max_rank; ++r) {
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < r; ++i)
            for (int j = i; j < r; ++j) slots.emplace_back(i, j);
        std::vector<int> vals(slots.size(), lo);
        for (;;) {
            IntMatrix g(r, r);
            for (std::size_t s = 0; s < slots.size(); ++s)
                g(slots[s].first, slots[s].second) = g(slots[s].second, slots[s].first) = vals[s];
            // Sylvester's criterion with integer cofactor formulas
            long d1 = g(0, 0);
            long d2 = r >= 2 ? g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0) : 1;
            long d3 = r >= 3 ? g(0, 0) * (g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1)) -
                                   g(0, 1) * (g(1, 0) * g(2, 2) - g(1, 2) * g(2, 0)) +
                                   g(0, 2) * (g(1, 0) * g(2, 1) - g(1, 1) * g(2, 0))
                             : 1;
            if (d1 > 0 && d2 > 0 && d3 > 0) out.push_back(g);
            std::size_t p = vals.size();
            while (p > 0 && vals[p - 1] == hi) vals[--p] = lo;
            if (p == 0) break;
            ++vals[p - 1];
        }
    }
    return out;
}

// ------------------------------------------------------------ unimodular

/// Random unimodular matrix as a product of elementary operations, with its
/// inverse. Entries of both stay within `max_entry`.
struct Unimodular {
    IntMatrix p, inv;
};

inline Unimodular random_unimodular(std::mt19937& rng, std::size_t n, int steps, long max_entry) {
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    for (;;) {
        IntMatrix p = IntMatrix::identity(n), inv = IntMatrix::identity(n);
        for (int s = 0; s < steps; ++s) {
            std::size_t i = idx(rng), j = idx(rng);
            if (i == j) {
                // negate row i: E = E^-1
                IntMatrix e = IntMatrix::identity(n);
                e(i, i) = -1;
                p = e * p;
                inv = inv * e;
                continue;
            }
            long c = coin(rng) ? 1 : -1;
            IntMatrix e = IntMatrix::identity(n), ei = IntMatrix::identity(n);
            e(i, j) = c;
            ei(i, j) = -c;
            p = e * p;
            inv = inv * ei;
        }
        bool small = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (std::abs(p(i, j)) > max_entry || std::abs(inv(i, j)) > max_entry) small = false;
        if (small) return {p, inv};
    }
}

/// M = P^T J0 P + S with S symmetric and J0 the standard genus-2 form, so
/// M - M^T = P^T (J0 - J0^T) P is unimodular.
inline IntMatrix random_seifert(std::mt19937& rng) {
    IntMatrix j0{{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}};
    auto u = random_unimodular(rng, 4, 5, 2);
    std::uniform_int_distribution<int> d(-2, 2);
    IntMatrix s(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i; j < 4; ++j) s(i, j) = s(j, i) = d(rng);
    return u.p.transposed() * j0 * u.p + s;
}

} // namespace knot::oracle
