#include "knot/two_bridge.hpp"

#include <sstream>
#include <stdexcept>

namespace knot {

ContinuedFraction::ContinuedFraction(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("continued fraction must be nonempty");
    for (auto const& a : coeffs_)
        if (a < 1) throw std::invalid_argument("continued fraction coefficient " + a.get_str() + " is not positive");
}

ContinuedFraction::ContinuedFraction(std::initializer_list<long> coeffs)
    : ContinuedFraction(std::vector<Integer>(coeffs.begin(), coeffs.end())) {}

std::string ContinuedFraction::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i].get_str();
    os << ']';
    return os.str();
}

Fraction cf_to_fraction(ContinuedFraction const& cf) {
    // Convergents: h_k = a_k h_{k-1} + h_{k-2}, same for the denominators.
    Integer h_prev = 1, h = cf.coeffs()[0];
    Integer k_prev = 0, k = 1;
    for (std::size_t i = 1; i < cf.size(); ++i) {
        Integer const& a = cf.coeffs()[i];
        Integer h_next = a * h + h_prev;
        Integer k_next = a * k + k_prev;
        h_prev = std::exchange(h, h_next);
        k_prev = std::exchange(k, k_next);
    }
    return Fraction(h, k);
}

ContinuedFraction fraction_to_cf(Fraction const& f) {
    if (f.num() <= f.den()) throw std::invalid_argument("fraction_to_cf needs p > q >= 1, got " + f.str());
    std::vector<Integer> out;
    Integer p = f.num(), q = f.den();
    while (q != 0) {
        Integer a, r;
        mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        out.push_back(a);
        p = q;
        q = r;
    }
    // The Euclidean expansion already ends in a coefficient >= 2 unless it
    // is a single term; [.., x, 1] would be rewritten as [.., x+1].
    if (out.size() >= 2 && out.back() == 1) {
        out.pop_back();
        out.back() += 1;
    }
    return ContinuedFraction(std::move(out));
}

KnotParams KnotParams::make(long m, long n) {
    if (m < 0) throw std::invalid_argument("m must be >= 0");
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    return KnotParams{static_cast<int>(m), static_cast<int>(n)};
}

ContinuedFraction knot_cf(KnotParams k) { return {2L * k.m + 3, 1, 2L * k.n + 4, 1, 1, 2}; }

Fraction knot_fraction(KnotParams k) {
    Integer m = k.m, n = k.n;
    return Fraction(20 * m * n + 56 * m + 40 * n + 107, 10 * n + 28);
}

IntMatrix seifert_matrix(KnotParams k) {
    std::int64_t m = k.m, n = k.n;
    return IntMatrix{
        {-m - 2, 1, 0, 0},
        {0, -n - 3, 1, 0},
        {0, 0, -1, 0},
        {0, 0, -1, 1},
    };
}

GramLattice::GramLattice(IntMatrix gram) : gram_(std::move(gram)) {
    if (!gram_.is_square()) throw std::invalid_argument("Gram matrix must be square");
    if (!gram_.is_symmetric()) throw std::invalid_argument("Gram matrix must be symmetric");
}

IntMatrix path_gram(std::vector<int> const& weights) {
    std::size_t r = weights.size();
    IntMatrix g(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        g(i, i) = weights[i];
        if (i + 1 < r) g(i, i + 1) = g(i + 1, i) = -1;
    }
    return g;
}

std::vector<int> plumbing_weights(KnotParams k) {
    std::vector<int> w(2 * k.m + 2, 2);
    w.push_back(3);
    w.insert(w.end(), 2 * k.n + 3, 2);
    w.push_back(3);
    w.push_back(3);
    return w;
}

GramLattice qmn_gram(KnotParams k) {
    long r = 2L * k.m + 2L * k.n + 8;
    long heavy[] = {2L * k.m + 3, 2L * k.m + 2L * k.n + 7, 2L * k.m + 2L * k.n + 8};
    IntMatrix g(r, r);
    for (long i = 1; i <= r; ++i) {
        for (long j = 1; j <= r; ++j) {
            std::int64_t v = 0;
            if (i == j) {
                v = (i == heavy[0] || i == heavy[1] || i == heavy[2]) ? 3 : 2;
            } else if (i - j == 1 || j - i == 1) {
                v = -1;
            }
            g(i - 1, j - 1) = v;
        }
    }
    return GramLattice(std::move(g));
}

int crossing_count(KnotParams k) {
    ContinuedFraction const cf = knot_cf(k);
    Integer sum = 0;
    for (auto const& a : cf.coeffs()) sum += a;
    return static_cast<int>(sum.get_si());
}

int positive_crossings(KnotParams k) { return 2 * k.m + 2 * k.n + 10; }

} // namespace knot
