#include "knot/int_matrix.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace knot {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (auto const& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool IntMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix operator+(IntMatrix const& a, IntMatrix const& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
    IntMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
    return c;
}

IntMatrix operator-(IntMatrix const& a, IntMatrix const& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
    IntMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
    return c;
}

IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            std::int64_t aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

namespace {

// Bareiss elimination with row pivoting. With `all` set, returns the
// determinant of every leading k x k block, otherwise only the full one.
std::vector<Integer> bareiss_minors(IntMatrix const& a, bool all) {
    if (!a.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    std::size_t n = a.rows();
    std::vector<Integer> out;
    if (n == 0) return {Integer(1)};

    auto det_of = [](std::vector<std::vector<Integer>> w) {
        std::size_t k = w.size();
        Integer prev = 1;
        int sign = 1;
        for (std::size_t p = 0; p < k; ++p) {
            if (w[p][p] == 0) {
                std::size_t s = p + 1;
                while (s < k && w[s][p] == 0) ++s;
                if (s == k) return Integer(0);
                std::swap(w[p], w[s]);
                sign = -sign;
            }
            for (std::size_t i = p + 1; i < k; ++i) {
                for (std::size_t j = p + 1; j < k; ++j) {
                    w[i][j] = (w[i][j] * w[p][p] - w[i][p] * w[p][j]);
                    mpz_divexact(w[i][j].get_mpz_t(), w[i][j].get_mpz_t(), prev.get_mpz_t());
                }
                w[i][p] = 0;
            }
            prev = w[p][p];
        }
        return Integer(sign * w[k - 1][k - 1]);
    };

    auto block = [&](std::size_t k) {
        std::vector<std::vector<Integer>> w(k, std::vector<Integer>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) w[i][j] = static_cast<long>(a(i, j));
        return w;
    };

    if (!all) return {det_of(block(n))};
    for (std::size_t k = 1; k <= n; ++k) out.push_back(det_of(block(k)));
    return out;
}

} // namespace

Integer determinant(IntMatrix const& a) { return bareiss_minors(a, false).front(); }

std::vector<Integer> leading_principal_minors(IntMatrix const& a) { return bareiss_minors(a, true); }

std::int64_t bilinear(IntMatrix const& a, std::span<int const> x, std::span<int const> y) {
    if (x.size() != a.rows() || y.size() != a.cols()) throw std::invalid_argument("bilinear: dimension mismatch");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (x[i] == 0) continue;
        std::int64_t r = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) r += a(i, j) * y[j];
        s += x[i] * r;
    }
    return s;
}

IntMatrix parse_square_matrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::vector<std::int64_t>> rows;
    long size = -1;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::vector<std::int64_t> vals;
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t used = 0;
                long long v = std::stoll(tok, &used);
                if (used != tok.size()) throw std::invalid_argument("");
                vals.push_back(v);
            } catch (std::exception const&) {
                throw std::invalid_argument("line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
            }
        }
        if (size < 0) {
            if (vals.size() != 1 || vals[0] < 0)
                throw std::invalid_argument("line " + std::to_string(lineno) + ": expected the matrix size");
            size = vals[0];
            continue;
        }
        if (static_cast<long>(vals.size()) != size)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected " + std::to_string(size) +
                                        " entries, got " + std::to_string(vals.size()));
        rows.push_back(std::move(vals));
    }
    if (size < 0) throw std::invalid_argument("empty matrix file");
    if (static_cast<long>(rows.size()) != size)
        throw std::invalid_argument("expected " + std::to_string(size) + " rows, got " + std::to_string(rows.size()));
    IntMatrix m(size, size);
    for (long i = 0; i < size; ++i)
        for (long j = 0; j < size; ++j) m(i, j) = rows[i][j];
    return m;
}

IntMatrix read_square_matrix(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_square_matrix(ss.str());
}

std::string format_rows(IntMatrix const& a) {
    std::ostringstream os;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? " " : "") << a(i, j);
        os << '\n';
    }
    return os.str();
}

std::string format_square_matrix(IntMatrix const& a) {
    if (!a.is_square()) throw std::invalid_argument("format_square_matrix: not square");
    return std::to_string(a.rows()) + "\n" + format_rows(a);
}

} // namespace knot
