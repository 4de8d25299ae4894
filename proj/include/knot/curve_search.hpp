#pragma once

// Search for a genus-one reduction certificate: homology classes a, b on the
// Seifert surface that meet once algebraically and on whose span the Seifert
// form has trivial Alexander polynomial. Such a pair bounds a separating
// curve with Delta = 1, which caps off with a locally flat disc.

#include "knot/int_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace knot {

struct CurveCertificate {
    std::vector<int> a;
    std::vector<int> b;
    IntMatrix restricted_form; // [[a.Ma, a.Mb], [b.Ma, b.Mb]]

    /// "a = (1, 0, 0, 1) ; b = (1, 1, 0, 2) ; form = [[-1, 1], [0, 0]]"
    std::string str() const;
    static CurveCertificate parse(std::string_view record);

    friend bool operator==(CurveCertificate const&, CurveCertificate const&) = default;
};

/// [[a^T M a, a^T M b], [b^T M a, b^T M b]]
IntMatrix restricted_form(IntMatrix const& m, std::vector<int> const& a, std::vector<int> const& b);

/// All certificate invariants: |a^T (M - M^T) b| = 1, a and b not
/// proportional, the stored form matches M, and that form is Alexander-trivial.
bool verify_certificate(IntMatrix const& m, CurveCertificate const& c);

struct CurveSearchOptions {
    int bound = 3;
    unsigned jobs = 1;
};

/// Exhaustive search over a, b in [-bound, bound]^k. Only classes a whose
/// first nonzero coordinate is positive and whose coordinates are coprime
/// are tried; (a, b) and (-a, -b) give the same form and a must be
/// primitive to meet b once, so no certificate class is lost. Returns the
/// lexicographically smallest (a then b) certificate in that space.
/// Throws std::invalid_argument if bound < 1 or m is not square.
std::optional<CurveCertificate> find_genus1_certificate(IntMatrix const& m, CurveSearchOptions const& opts);

inline std::optional<CurveCertificate> find_genus1_certificate(IntMatrix const& m, int bound) {
    return find_genus1_certificate(m, CurveSearchOptions{bound, 1});
}

/// Explicit certificates for the Seifert matrix of K(m,n), in this order of
/// preference:
///   m = n = 0:        a = d1 + d4,          b = d1 + d2 + 2 d4
///   m + 2 = s^2:      a = d1 + s d4,        b = d2
///   n + 3 = s^2:      a = d1,               b = d2 + s d4
/// nullopt when none of the cases applies.
std::optional<CurveCertificate> family_certificate(int m, int n);

/// max(3, ceil sqrt(m+2), ceil sqrt(n+3)) + 1, so the explicit family
/// certificates lie inside the default box.
int default_curve_bound(int m, int n);

int ceil_sqrt(long x);
bool is_perfect_square(long x);

} // namespace knot
