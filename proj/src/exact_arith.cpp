#include "knot/exact_arith.hpp"

#include <sstream>
#include <stdexcept>

namespace knot {

std::string to_string(Integer const& z) { return z.get_str(); }

Integer parse_integer(std::string_view text) {
    std::string s(text);
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    Integer z;
    if (s.empty() || z.set_str(s, 10) != 0) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    return z;
}

std::int64_t to_int64(Integer const& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer " + z.get_str() + " does not fit in 64 bits");
    return z.get_si();
}

// ---------------------------------------------------------------- Fraction

Fraction::Fraction(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("zero denominator");
    reduce();
}

void Fraction::reduce() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Integer g = gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Fraction Fraction::operator-() const {
    Fraction r = *this;
    r.num_ = -r.num_;
    return r;
}

Fraction& Fraction::operator+=(Fraction const& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Fraction& Fraction::operator-=(Fraction const& o) { return *this += -o; }

Fraction& Fraction::operator*=(Fraction const& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Fraction& Fraction::operator/=(Fraction const& o) {
    if (o.num_ == 0) throw std::domain_error("division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
}

std::strong_ordering operator<=>(Fraction const& a, Fraction const& b) {
    int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Fraction::str() const {
    if (den_ == 1) return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

// ------------------------------------------------------- LaurentPolynomial

LaurentPolynomial::LaurentPolynomial(Terms terms) : terms_(std::move(terms)) {
    std::erase_if(terms_, [](auto const& kv) { return kv.second == 0; });
}

LaurentPolynomial::LaurentPolynomial(Integer c, long exponent) {
    if (c != 0) terms_.emplace(exponent, std::move(c));
}

Integer LaurentPolynomial::coeff(long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Integer(0) : it->second;
}

long LaurentPolynomial::min_exponent() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
    return terms_.begin()->first;
}

long LaurentPolynomial::max_exponent() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
    return terms_.rbegin()->first;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(LaurentPolynomial const& o) {
    for (auto const& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(LaurentPolynomial const& o) { return *this += -o; }

LaurentPolynomial operator*(LaurentPolynomial const& a, LaurentPolynomial const& b) {
    LaurentPolynomial::Terms out;
    for (auto const& [ea, ca] : a.terms_)
        for (auto const& [eb, cb] : b.terms_) out[ea + eb] += ca * cb;
    return LaurentPolynomial(std::move(out));
}

LaurentPolynomial LaurentPolynomial::shifted(long k) const {
    Terms out;
    for (auto const& [e, c] : terms_) out.emplace(e + k, c);
    return LaurentPolynomial(std::move(out));
}

Fraction LaurentPolynomial::evaluate(Fraction const& t) const {
    if (terms_.empty()) return Fraction(0L);
    if (t.sign() == 0 && terms_.begin()->first < 0) throw std::domain_error("negative power of zero");
    // Horner over the shifted polynomial, then rescale by t^min.
    long lo = terms_.begin()->first;
    long hi = terms_.rbegin()->first;
    Fraction acc(0L);
    for (long e = hi; e >= lo; --e) acc = acc * t + Fraction(coeff(e));
    Fraction scale(1L);
    Fraction base = lo >= 0 ? t : Fraction(1L) / t;
    for (long i = 0; i < (lo >= 0 ? lo : -lo); ++i) scale *= base;
    return acc * scale;
}

LaurentPolynomial LaurentPolynomial::inverted() const {
    Terms out;
    for (auto const& [e, c] : terms_) out.emplace(-e, c);
    return LaurentPolynomial(std::move(out));
}

std::string LaurentPolynomial::str() const {
    std::ostringstream os;
    bool first = true;
    for (auto const& [e, c] : terms_) {
        if (!first) os << ' ';
        os << e << ':' << c.get_str();
        first = false;
    }
    return os.str();
}

std::string LaurentPolynomial::pretty() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto const& [e, c] = *it;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = mag == 1;
        if (e == 0) {
            os << mag.get_str();
        } else {
            if (!unit) os << mag.get_str();
            os << 't';
            if (e != 1) os << '^' << e;
        }
        first = false;
    }
    return os.str();
}

LaurentPolynomial LaurentPolynomial::parse(std::string_view text) {
    Terms terms;
    std::istringstream is{std::string(text)};
    std::string tok;
    while (is >> tok) {
        auto colon = tok.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("bad Laurent term '" + tok + "'");
        long e = 0;
        try {
            std::size_t used = 0;
            e = std::stol(tok.substr(0, colon), &used);
            if (used != colon) throw std::invalid_argument("");
        } catch (std::exception const&) {
            throw std::invalid_argument("bad Laurent exponent in '" + tok + "'");
        }
        if (terms.contains(e)) throw std::invalid_argument("repeated exponent in '" + tok + "'");
        terms.emplace(e, parse_integer(tok.substr(colon + 1)));
    }
    return LaurentPolynomial(std::move(terms));
}

LaurentPolynomial laurent_mul(LaurentPolynomial const& p, LaurentPolynomial const& q) { return p * q; }

LaurentPolynomial laurent_normalize(LaurentPolynomial const& p) {
    if (p.is_zero()) throw std::domain_error("cannot normalize zero");
    long lo = p.min_exponent();
    long hi = p.max_exponent();
    if ((lo + hi) % 2 == 0) {
        LaurentPolynomial centred = p.shifted(-(lo + hi) / 2);
        if (centred == centred.inverted()) {
            return centred.coeff(centred.max_exponent()) > 0 ? centred : -centred;
        }
    }
    LaurentPolynomial based = p.shifted(-lo);
    return based.coeff(0) > 0 ? based : -based;
}

bool equal_up_to_units(LaurentPolynomial const& p, LaurentPolynomial const& q) {
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    LaurentPolynomial shifted = q.shifted(p.min_exponent() - q.min_exponent());
    return shifted == p || -shifted == p;
}

} // namespace knot
