#include "knot/curve_search.hpp"

#include "knot/seifert.hpp"
#include "knot/two_bridge.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace knot {

namespace {

std::string format_vec(std::vector<int> const& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ')';
    return os.str();
}

std::vector<int> parse_ints(std::string const& s) {
    std::vector<int> out;
    std::string cleaned = s;
    for (char& c : cleaned)
        if (c == ',' || c == '(' || c == ')' || c == '[' || c == ']') c = ' ';
    std::istringstream is(cleaned);
    int v = 0;
    while (is >> v) out.push_back(v);
    if (!is.eof()) throw std::invalid_argument("bad integer list '" + s + "'");
    return out;
}

bool proportional(std::vector<int> const& a, std::vector<int> const& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (static_cast<long>(a[i]) * b[j] != static_cast<long>(a[j]) * b[i]) return false;
    return true;
}

} // namespace

std::string CurveCertificate::str() const {
    std::ostringstream os;
    os << "a = " << format_vec(a) << " ; b = " << format_vec(b) << " ; form = [[" << restricted_form(0, 0) << ", "
       << restricted_form(0, 1) << "], [" << restricted_form(1, 0) << ", " << restricted_form(1, 1) << "]]";
    return os.str();
}

CurveCertificate CurveCertificate::parse(std::string_view record) {
    static std::regex const re(R"(^\s*a\s*=\s*(\([^)]*\))\s*;\s*b\s*=\s*(\([^)]*\))\s*;\s*form\s*=\s*(\[.*\])\s*$)");
    std::string s(record);
    std::smatch mt;
    if (!std::regex_match(s, mt, re)) throw std::invalid_argument("bad certificate record");
    CurveCertificate c;
    c.a = parse_ints(mt[1]);
    c.b = parse_ints(mt[2]);
    auto f = parse_ints(mt[3]);
    if (c.a.size() != c.b.size() || f.size() != 4) throw std::invalid_argument("bad certificate record");
    c.restricted_form = IntMatrix{{f[0], f[1]}, {f[2], f[3]}};
    return c;
}

IntMatrix restricted_form(IntMatrix const& m, std::vector<int> const& a, std::vector<int> const& b) {
    return IntMatrix{
        {bilinear(m, a, a), bilinear(m, a, b)},
        {bilinear(m, b, a), bilinear(m, b, b)},
    };
}

bool verify_certificate(IntMatrix const& m, CurveCertificate const& c) {
    if (!m.is_square() || c.a.size() != m.rows() || c.b.size() != m.rows()) return false;
    std::int64_t meet = bilinear(m - m.transposed(), c.a, c.b);
    if (meet != 1 && meet != -1) return false;
    if (proportional(c.a, c.b)) return false;
    if (c.restricted_form != restricted_form(m, c.a, c.b)) return false;
    return alexander_trivial_2x2(c.restricted_form);
}

int ceil_sqrt(long x) {
    if (x <= 0) return 0;
    long r = 0;
    while (r * r < x) ++r;
    return static_cast<int>(r);
}

bool is_perfect_square(long x) {
    long r = ceil_sqrt(x);
    return r * r == x;
}

std::optional<CurveCertificate> family_certificate(int m, int n) {
    std::vector<int> a, b;
    if (m == 0 && n == 0) {
        a = {1, 0, 0, 1};
        b = {1, 1, 0, 2};
    } else if (is_perfect_square(m + 2L)) {
        a = {1, 0, 0, ceil_sqrt(m + 2L)};
        b = {0, 1, 0, 0};
    } else if (is_perfect_square(n + 3L)) {
        a = {1, 0, 0, 0};
        b = {0, 1, 0, ceil_sqrt(n + 3L)};
    } else {
        return std::nullopt;
    }
    return CurveCertificate{a, b, restricted_form(seifert_matrix(KnotParams{m, n}), a, b)};
}

int default_curve_bound(int m, int n) { return std::max({3, ceil_sqrt(m + 2L), ceil_sqrt(n + 3L)}) + 1; }

std::optional<CurveCertificate> find_genus1_certificate(IntMatrix const& m, CurveSearchOptions const& opts) {
    if (opts.bound < 1) throw std::invalid_argument("bound must be >= 1");
    if (!m.is_square()) throw std::invalid_argument("Seifert matrix must be square");
    std::size_t const k = m.rows();
    int const bound = opts.bound;
    long const side = 2L * bound + 1;
    long total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > std::numeric_limits<int>::max() / side) throw std::invalid_argument("search box too large");
        total *= side;
    }

    // Every vector of the box in lexicographic order, flattened.
    std::vector<int> box(static_cast<std::size_t>(total) * k);
    for (long idx = 0; idx < total; ++idx) {
        long rest = idx;
        for (std::size_t i = k; i-- > 0;) {
            box[idx * k + i] = static_cast<int>(rest % side) - bound;
            rest /= side;
        }
    }
    auto vec = [&](long idx) { return std::span<int const>(box.data() + idx * k, k); };

    std::vector<long> a_candidates;
    for (long idx = 0; idx < total; ++idx) {
        auto a = vec(idx);
        auto first = std::find_if(a.begin(), a.end(), [](int x) { return x != 0; });
        if (first == a.end() || *first < 0) continue;
        int g = 0;
        for (int x : a) g = std::gcd(g, x);
        if (g != 1) continue;
        a_candidates.push_back(idx);
    }

    IntMatrix const skew = m - m.transposed();

    // Smallest b index completing a, or -1.
    auto search_a = [&](long a_idx) -> long {
        auto a = vec(a_idx);
        std::vector<std::int64_t> meet(k, 0), left(k, 0), right(k, 0);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < k; ++i) {
                meet[j] += a[i] * skew(i, j);
                left[j] += a[i] * m(i, j);  // a^T M
                right[j] += m(j, i) * a[i]; // M a
            }
        std::int64_t aa = 0;
        for (std::size_t j = 0; j < k; ++j) aa += left[j] * a[j];
        for (long b_idx = 0; b_idx < total; ++b_idx) {
            auto b = vec(b_idx);
            std::int64_t x = 0;
            for (std::size_t j = 0; j < k; ++j) x += meet[j] * b[j];
            if (x != 1 && x != -1) continue;
            std::int64_t ab = 0, ba = 0;
            for (std::size_t j = 0; j < k; ++j) {
                ab += left[j] * b[j];
                ba += right[j] * b[j];
            }
            // det of the restricted form; only evaluate b^T M b when needed.
            if (aa == 0) {
                if (ab * ba == 0) return b_idx;
                continue;
            }
            std::vector<int> bv(b.begin(), b.end());
            if (aa * bilinear(m, bv, bv) == ab * ba) return b_idx;
        }
        return -1;
    };

    std::size_t const n_a = a_candidates.size();
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{n_a};
    std::vector<long> found(n_a, -1);

    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n_a || i > best.load()) return;
            long b_idx = search_a(a_candidates[i]);
            if (b_idx < 0) continue;
            found[i] = b_idx;
            std::size_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
        }
    };

    unsigned jobs = std::max(1u, opts.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    }

    std::size_t i = best.load();
    if (i >= n_a) return std::nullopt;
    CurveCertificate c;
    auto a = vec(a_candidates[i]);
    auto b = vec(found[i]);
    c.a.assign(a.begin(), a.end());
    c.b.assign(b.begin(), b.end());
    c.restricted_form = restricted_form(m, c.a, c.b);
    return c;
}

} // namespace knot
