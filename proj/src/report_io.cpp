#include "knot/report_io.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace knot {

namespace {

Json integer_json(Integer const& z) {
    if (z.fits_slong_p()) return Json(z.get_si());
    return Json(z.get_str());
}

Integer integer_from_json(Json const& j) {
    if (j.is_string()) return parse_integer(j.get<std::string>());
    return Integer(j.get<long>());
}

Json matrix_json(IntMatrix const& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(Json const& j) {
    std::size_t r = j.size();
    std::size_t c = r == 0 ? 0 : j.at(0).size();
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (j.at(i).size() != c) throw std::invalid_argument("ragged matrix in JSON");
        for (std::size_t k = 0; k < c; ++k) m(i, k) = j.at(i).at(k).get<std::int64_t>();
    }
    return m;
}

Fraction fraction_from_string(std::string const& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Fraction(parse_integer(s));
    return Fraction(parse_integer(s.substr(0, slash)), parse_integer(s.substr(slash + 1)));
}

std::string csv_field(std::string const& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string embeddable_label(SliceReport const& r) {
    if (!r.embedding_verdict) return "untested";
    switch (r.embedding_verdict->status) {
    case SearchStatus::found: return "yes";
    case SearchStatus::absent: return "no";
    case SearchStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

} // namespace

std::string genus_range(int lower, int upper) {
    if (lower == upper) return std::to_string(lower);
    return std::to_string(lower) + "-" + std::to_string(upper);
}

Json to_json(SliceReport const& r) {
    Json j;
    j["params"] = {{"m", r.params.m}, {"n", r.params.n}};
    j["fraction"] = r.fraction.str();
    j["signature"] = r.signature;
    j["determinant"] = integer_json(r.determinant);
    j["alexander"] = r.alexander.str();
    j["gtop_lower"] = r.gtop_lower;
    j["gtop_upper"] = r.gtop_upper;
    j["gsm_lower"] = r.gsm_lower;
    j["gsm_upper"] = r.gsm_upper;
    if (r.curve_certificate) {
        auto const& c = *r.curve_certificate;
        j["curve_certificate"] = {{"a", c.a}, {"b", c.b}, {"restricted_form", matrix_json(c.restricted_form)}};
    } else {
        j["curve_certificate"] = nullptr;
    }
    if (r.embedding_verdict) {
        auto const& v = *r.embedding_verdict;
        Json ev;
        ev["tested_dim"] = v.tested_dim;
        switch (v.status) {
        case SearchStatus::found: ev["embeddable"] = true; break;
        case SearchStatus::absent: ev["embeddable"] = false; break;
        case SearchStatus::inconclusive: ev["embeddable"] = "inconclusive"; break;
        }
        ev["witness"] = v.witness ? Json(v.witness->vectors) : Json(nullptr);
        j["embedding_verdict"] = std::move(ev);
    } else {
        j["embedding_verdict"] = nullptr;
    }
    j["notes"] = r.notes;
    return j;
}

SliceReport report_from_json(Json const& j) {
    SliceReport r;
    r.params = KnotParams::make(j.at("params").at("m").get<long>(), j.at("params").at("n").get<long>());
    r.fraction = fraction_from_string(j.at("fraction").get<std::string>());
    r.signature = j.at("signature").get<int>();
    r.determinant = integer_from_json(j.at("determinant"));
    r.alexander = LaurentPolynomial::parse(j.at("alexander").get<std::string>());
    r.gtop_lower = j.at("gtop_lower").get<int>();
    r.gtop_upper = j.at("gtop_upper").get<int>();
    r.gsm_lower = j.at("gsm_lower").get<int>();
    r.gsm_upper = j.at("gsm_upper").get<int>();
    if (auto const& c = j.at("curve_certificate"); !c.is_null()) {
        CurveCertificate cert;
        cert.a = c.at("a").get<std::vector<int>>();
        cert.b = c.at("b").get<std::vector<int>>();
        cert.restricted_form = matrix_from_json(c.at("restricted_form"));
        r.curve_certificate = std::move(cert);
    }
    if (auto const& ev = j.at("embedding_verdict"); !ev.is_null()) {
        EmbeddingVerdict v;
        v.tested_dim = ev.at("tested_dim").get<int>();
        auto const& e = ev.at("embeddable");
        if (e.is_boolean()) {
            v.status = e.get<bool>() ? SearchStatus::found : SearchStatus::absent;
        } else if (e == "inconclusive") {
            v.status = SearchStatus::inconclusive;
        } else {
            throw std::invalid_argument("bad embeddable value");
        }
        if (auto const& w = ev.at("witness"); !w.is_null()) {
            Embedding emb;
            emb.vectors = w.get<std::vector<std::vector<int>>>();
            emb.ambient_dim = v.tested_dim;
            v.witness = std::move(emb);
        }
        r.embedding_verdict = std::move(v);
    }
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
}

std::string render_json(SliceReport const& r) { return to_json(r).dump(2) + "\n"; }

std::string render_json(std::span<SliceReport const> rows) {
    Json arr = Json::array();
    for (auto const& r : rows) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
}

std::string render_csv(std::span<SliceReport const> rows) {
    std::ostringstream os;
    os << "m,n,fraction,signature,determinant,alexander,gtop,gsm,certificate,tested_dim,embeddable\n";
    for (auto const& r : rows) {
        os << r.params.m << ',' << r.params.n << ',' << r.fraction.str() << ',' << r.signature << ','
           << r.determinant.get_str() << ',' << csv_field(r.alexander.str()) << ','
           << genus_range(r.gtop_lower, r.gtop_upper) << ',' << genus_range(r.gsm_lower, r.gsm_upper) << ','
           << csv_field(r.curve_certificate ? r.curve_certificate->str() : "") << ','
           << (r.embedding_verdict ? std::to_string(r.embedding_verdict->tested_dim) : "") << ','
           << embeddable_label(r) << '\n';
    }
    return os.str();
}

std::string render_human(SliceReport const& r) {
    KnotParams const k = r.params;
    std::ostringstream os;
    os << "K(" << k.m << "," << k.n << ")\n";
    os << "  fraction      = " << r.fraction.str() << "\n";
    os << "  cf            = " << knot_cf(k).str() << "\n";
    os << "  crossings     = " << crossing_count(k) << " (n_+ = " << positive_crossings(k) << ", inferred)\n";
    os << "  sigma = " << r.signature << "\n";
    os << "  det = " << r.determinant.get_str() << "\n";
    os << "  alexander     = " << r.alexander.pretty() << "  [" << r.alexander.str() << "]\n";
    os << "  g_top         = " << genus_range(r.gtop_lower, r.gtop_upper) << "\n";
    os << "  g_sm          = " << genus_range(r.gsm_lower, r.gsm_upper) << "\n";
    if (r.curve_certificate) os << "  certificate   : " << r.curve_certificate->str() << "\n";
    if (r.embedding_verdict)
        os << "  embeds in Z^" << r.embedding_verdict->tested_dim << ": " << embeddable_label(r) << "\n";
    for (auto const& n : r.notes) os << "  note: " << n << "\n";
    return os.str();
}

std::string render_table(std::span<SliceReport const> rows) {
    std::ostringstream os;
    os << std::left << std::setw(4) << "m" << std::setw(4) << "n" << std::setw(12) << "fraction" << std::setw(7)
       << "sigma" << std::setw(7) << "det" << std::setw(7) << "g_top" << std::setw(6) << "g_sm" << std::setw(14)
       << "Z^dim embeds" << "certificate\n";
    for (auto const& r : rows) {
        std::string embeds = r.embedding_verdict
                                 ? std::to_string(r.embedding_verdict->tested_dim) + ":" + embeddable_label(r)
                                 : "-";
        os << std::left << std::setw(4) << r.params.m << std::setw(4) << r.params.n << std::setw(12) << r.fraction.str()
           << std::setw(7) << r.signature << std::setw(7) << r.determinant.get_str() << std::setw(7)
           << genus_range(r.gtop_lower, r.gtop_upper) << std::setw(6) << genus_range(r.gsm_lower, r.gsm_upper)
           << std::setw(14) << embeds << (r.curve_certificate ? r.curve_certificate->str() : "none") << "\n";
    }
    return os.str();
}

} // namespace knot
