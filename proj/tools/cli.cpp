#include "cli.hpp"

#include "knot/curve_search.hpp"
#include "knot/lattice.hpp"
#include "knot/pipeline.hpp"
#include "knot/report_io.hpp"
#include "knot/seifert.hpp"
#include "knot/two_bridge.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include <chrono>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace knot::cli {

namespace {

// Input problems the user can fix; reported with exit code 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { human, json, csv };

struct CliConfig {
    std::optional<long> m;
    std::optional<long> n;
    long m_max = 0;
    long n_max = 0;
    std::string matrix_path;
    std::string gram_path;
    long dim = -1;
    long cap = -1;
    long bound = -1;
    bool mindim = false;
    bool force_search = false;
    bool want_sig = false;
    bool want_det = false;
    bool want_alex = false;
    std::string what = "gram";
    double embed_cap_seconds = -1;
    long embed_node_limit = -1;
    Format format = Format::human;
    long jobs = 0;
};

std::shared_ptr<spdlog::logger> logger() {
    static std::shared_ptr<spdlog::logger> log = [] {
        auto l = spdlog::stderr_logger_mt("knot");
        l->set_pattern("[%l] %v");
        l->set_level(spdlog::level::off);
        if (char const* env = std::getenv("KNOT_LOG")) {
            std::string v = env;
            if (v == "info") l->set_level(spdlog::level::info);
            if (v == "debug") l->set_level(spdlog::level::debug);
        }
        return l;
    }();
    return log;
}

void require_nonneg(long v, char const* name) {
    if (v < 0) throw UsageError(std::string(name) + " must be >= 0");
}

KnotParams params_from(CliConfig const& c) {
    if (!c.m || !c.n) throw UsageError("--m and --n are required");
    try {
        return KnotParams::make(*c.m, *c.n);
    } catch (std::invalid_argument const& e) {
        throw UsageError(e.what());
    }
}

unsigned job_count(CliConfig const& c) {
    if (c.jobs > 0) return static_cast<unsigned>(c.jobs);
    return std::max(1u, std::thread::hardware_concurrency());
}

EmbeddingSearchOptions embed_options(CliConfig const& c) {
    EmbeddingSearchOptions o;
    o.jobs = job_count(c);
    if (c.embed_cap_seconds >= 0)
        o.time_limit = std::chrono::milliseconds(static_cast<long long>(c.embed_cap_seconds * 1000));
    if (c.embed_node_limit >= 0) o.node_limit = static_cast<std::uint64_t>(c.embed_node_limit);
    return o;
}

IntMatrix load_matrix(std::string const& path) {
    try {
        return read_square_matrix(path);
    } catch (std::invalid_argument const& e) {
        throw UsageError(path + ": " + e.what());
    }
}

// A Seifert matrix from --matrix or from --m/--n.
IntMatrix seifert_input(CliConfig const& c) {
    if (!c.matrix_path.empty()) return load_matrix(c.matrix_path);
    return seifert_matrix(params_from(c));
}

GramLattice gram_input(CliConfig const& c) {
    IntMatrix g = c.gram_path.empty() ? qmn_gram(params_from(c)).gram() : load_matrix(c.gram_path);
    try {
        GramLattice lattice(std::move(g));
        if (auto bad = first_nonpositive_minor(lattice))
            throw UsageError("not positive definite: leading principal minor " + std::to_string(bad->first) + " is " +
                             bad->second.get_str());
        return lattice;
    } catch (std::invalid_argument const& e) {
        throw UsageError(e.what());
    }
}

int cmd_info(CliConfig const& c, std::ostream& out) {
    SliceReport r = genus_bounds(params_from(c));
    if (c.format == Format::json) {
        out << render_json(r);
    } else if (c.format == Format::csv) {
        SliceReport const rows[] = {r};
        out << render_csv(rows);
    } else {
        out << render_human(r);
    }
    return kOk;
}

int cmd_verify(CliConfig const& c, std::ostream& out) {
    require_nonneg(c.m_max, "m-max");
    require_nonneg(c.n_max, "n-max");
    Budgets b;
    if (c.bound != -1) {
        if (c.bound < 1) throw UsageError("bound must be >= 1");
        b.curve_bound = static_cast<int>(c.bound);
    }
    auto eo = embed_options(c);
    b.embed_time_limit = eo.time_limit;
    b.embed_node_limit = eo.node_limit;
    b.jobs = eo.jobs;
    auto rows = verify_theorem(static_cast<int>(c.m_max), static_cast<int>(c.n_max), b, [](SliceReport const& r) {
        logger()->info("row K({},{}) done: g_top {}, g_sm {}", r.params.m, r.params.n,
                       genus_range(r.gtop_lower, r.gtop_upper), genus_range(r.gsm_lower, r.gsm_upper));
    });
    switch (c.format) {
    case Format::json: out << render_json(rows); break;
    case Format::csv: out << render_csv(rows); break;
    case Format::human: out << render_table(rows); break;
    }
    bool conclusive = std::all_of(rows.begin(), rows.end(), [](auto const& r) { return r.conclusive(); });
    return conclusive ? kOk : kInconclusive;
}

int cmd_lattice(CliConfig const& c, std::ostream& out) {
    GramLattice g = gram_input(c);
    auto eo = embed_options(c);
    if (c.mindim) {
        int cap = c.cap >= 0 ? static_cast<int>(c.cap) : default_embedding_cap(g);
        if (cap < static_cast<int>(g.rank())) throw UsageError("cap must be >= rank " + std::to_string(g.rank()));
        auto r = search_min_embedding_dim(g, cap, eo);
        logger()->info("min-dim search: {} nodes", r.nodes);
        if (r.status == SearchStatus::inconclusive) {
            out << "INCONCLUSIVE (budget exceeded)\n";
            return kInconclusive;
        }
        if (!r.dim) {
            out << "NOT EMBEDDABLE up to dim=" << cap << "\n";
            return kOk;
        }
        out << "MINDIM=" << *r.dim << "\n" << r.witness->str();
        return kOk;
    }
    if (c.dim < 1) throw UsageError("--dim (>= 1) or --mindim is required");
    auto r = search_embedding(g, static_cast<int>(c.dim), eo);
    logger()->info("embedding search: {} nodes", r.nodes);
    switch (r.status) {
    case SearchStatus::found: out << "EMBEDDABLE dim=" << c.dim << "\n" << r.witness->str(); return kOk;
    case SearchStatus::absent: out << "NOT EMBEDDABLE dim=" << c.dim << "\n"; return kOk;
    case SearchStatus::inconclusive: out << "INCONCLUSIVE dim=" << c.dim << "\n"; return kInconclusive;
    }
    return kOk;
}

int cmd_seifert(CliConfig const& c, std::ostream& out) {
    IntMatrix m = seifert_input(c);
    bool any = c.want_sig || c.want_det || c.want_alex;
    if (!any || c.want_sig) out << signature(symmetrization(m)) << "\n";
    if (!any || c.want_det) out << knot_determinant(m).get_str() << "\n";
    if (!any || c.want_alex) out << alexander(m).str() << "\n";
    return kOk;
}

int cmd_curve(CliConfig const& c, std::ostream& out) {
    IntMatrix m = seifert_input(c);
    int bound = 0;
    if (c.bound != -1) {
        if (c.bound < 1) throw UsageError("bound must be >= 1");
        bound = static_cast<int>(c.bound);
    } else if (c.matrix_path.empty()) {
        KnotParams k = params_from(c);
        bound = default_curve_bound(k.m, k.n);
    } else {
        bound = 3;
    }
    std::optional<CurveCertificate> cert;
    if (c.matrix_path.empty() && !c.force_search) {
        KnotParams k = params_from(c);
        cert = family_certificate(k.m, k.n);
        auto fits = [bound](std::vector<int> const& v) {
            return std::all_of(v.begin(), v.end(), [bound](int x) { return std::abs(x) <= bound; });
        };
        if (cert && !(fits(cert->a) && fits(cert->b))) cert.reset();
        if (cert) logger()->info("explicit family certificate ({})", certificate_case(k));
    }
    if (!cert) cert = find_genus1_certificate(m, CurveSearchOptions{bound, job_count(c)});
    if (!cert) {
        out << "NONE within bound " << bound << "\n";
        return kOk;
    }
    out << cert->str() << "\n";
    return kOk;
}

int cmd_export(CliConfig const& c, std::ostream& out) {
    KnotParams k = params_from(c);
    if (c.what == "gram") {
        out << "# Goeritz lattice Q(" << k.m << "," << k.n << ")\n" << format_square_matrix(qmn_gram(k).gram());
    } else if (c.what == "seifert") {
        out << "# Seifert matrix of K(" << k.m << "," << k.n << ")\n" << format_square_matrix(seifert_matrix(k));
    } else {
        throw UsageError("--what must be gram or seifert");
    }
    return kOk;
}

} // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CliConfig c;
    CLI::App app{"Exact invariants and slice-genus verification for the 2-bridge knots K(m,n)", "knot"};
    app.require_subcommand(1);

    std::map<std::string, Format> const formats{{"human", Format::human}, {"json", Format::json}, {"csv", Format::csv}};
    auto add_knot = [&](CLI::App* sub) {
        sub->add_option("--m", c.m, "parameter m >= 0");
        sub->add_option("--n", c.n, "parameter n >= 0");
    };
    auto add_jobs = [&](CLI::App* sub) {
        sub->add_option("--jobs", c.jobs, "worker threads (default: hardware concurrency)");
    };
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--embed-cap-seconds", c.embed_cap_seconds, "time budget per embedding search");
        sub->add_option("--embed-node-limit", c.embed_node_limit, "node budget per embedding search");
    };

    auto* info = app.add_subcommand("info", "invariants and genus bounds, no searches");
    add_knot(info);
    info->add_option("--format", c.format, "human|json|csv")->transform(CLI::CheckedTransformer(formats));

    auto* verify = app.add_subcommand("verify", "certificate and embedding searches over a parameter range");
    verify->add_option("--m-max", c.m_max, "largest m")->required();
    verify->add_option("--n-max", c.n_max, "largest n")->required();
    verify->add_option("--curve-bound", c.bound, "coordinate bound for the certificate search");
    verify->add_option("--format", c.format, "human|json|csv")->transform(CLI::CheckedTransformer(formats));
    add_budget(verify);
    add_jobs(verify);

    auto* lattice = app.add_subcommand("lattice", "embedding of a Gram lattice into Z^M");
    lattice->add_option("--gram", c.gram_path, "Gram matrix file");
    add_knot(lattice);
    lattice->add_option("--dim", c.dim, "ambient dimension M");
    lattice->add_flag("--mindim", c.mindim, "search for the smallest M");
    lattice->add_option("--cap", c.cap, "largest M tried by --mindim (default rank+6)");
    add_budget(lattice);
    add_jobs(lattice);

    auto* seifert = app.add_subcommand("seifert", "signature, determinant, Alexander polynomial");
    seifert->add_option("--matrix", c.matrix_path, "Seifert matrix file");
    add_knot(seifert);
    seifert->add_flag("--sig", c.want_sig, "signature of M + M^T");
    seifert->add_flag("--det", c.want_det, "|det(M + M^T)|");
    seifert->add_flag("--alex", c.want_alex, "normalised det(M - t M^T)");

    auto* curve = app.add_subcommand("curve", "genus-one reduction certificate search");
    curve->add_option("--matrix", c.matrix_path, "Seifert matrix file");
    add_knot(curve);
    curve->add_option("--bound", c.bound, "coordinate bound");
    curve->add_flag("--search", c.force_search, "always run the box search, even when an explicit certificate applies");
    add_jobs(curve);

    auto* exp = app.add_subcommand("export", "write the Gram or Seifert matrix of K(m,n)");
    add_knot(exp);
    exp->add_option("--what", c.what, "gram|seifert");

    std::vector<std::string> rest(args.rbegin(), args.rend());
    if (!rest.empty()) rest.pop_back(); // program name
    try {
        app.parse(rest);
    } catch (CLI::ParseError const& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (c.jobs < 0) throw UsageError("jobs must be >= 0");
        if (*info) return cmd_info(c, out);
        if (*verify) return cmd_verify(c, out);
        if (*lattice) return cmd_lattice(c, out);
        if (*seifert) return cmd_seifert(c, out);
        if (*curve) return cmd_curve(c, out);
        if (*exp) return cmd_export(c, out);
    } catch (UsageError const& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (std::invalid_argument const& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}

} // namespace knot::cli
