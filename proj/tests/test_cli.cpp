#include "cli.hpp"
#include "knot/int_matrix.hpp"
#include "knot/lattice.hpp"
#include "knot/two_bridge.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace knot;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome knot_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "knot");
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(std::string const& name, std::string const& body) {
    auto p = std::filesystem::temp_directory_path() / ("knot_cli_test_" + name);
    std::ofstream(p) << body;
    return p;
}

bool contains(std::string const& s, std::string_view needle) { return s.find(needle) != std::string::npos; }

std::vector<std::vector<int>> parse_rows(std::string const& text, std::size_t skip) {
    std::istringstream is(text);
    std::string line;
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; std::getline(is, line); ++i) {
        if (i < skip || line.empty()) continue;
        std::istringstream ls(line);
        std::vector<int> row;
        int v;
        while (ls >> v) row.push_back(v);
        rows.push_back(row);
    }
    return rows;
}

} // namespace

TEST_CASE("knot info") {
    auto r = knot_cli({"info", "--m", "0", "--n", "0"});
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "107/28"));
    CHECK(contains(r.out, "sigma = -2"));
    CHECK(contains(r.out, "det = 107"));

    auto j = knot_cli({"info", "--m", "1", "--n", "2", "--format", "json"});
    CHECK(j.code == cli::kOk);
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["fraction"] == "283/48");

    auto bad = knot_cli({"info", "--m", "-1", "--n", "0"});
    CHECK(bad.code == cli::kUsageError);
    CHECK(contains(bad.err, "m must be >= 0"));
    CHECK(knot_cli({"info", "--m", "x", "--n", "0"}).code == cli::kUsageError);
    CHECK(knot_cli({"info", "--m", "0", "--n", "0", "--format", "xml"}).code == cli::kUsageError);
    CHECK(knot_cli({"frobnicate"}).code == cli::kUsageError);
    CHECK(knot_cli({}).code == cli::kUsageError);
}

TEST_CASE("knot verify") {
    auto one = knot_cli({"verify", "--m-max", "0", "--n-max", "0"});
    CHECK(one.code == cli::kOk);
    CHECK(std::count(one.out.begin(), one.out.end(), '\n') == 2);

    auto csv = knot_cli({"verify", "--m-max", "0", "--n-max", "0", "--format", "csv"});
    CHECK(csv.code == cli::kOk);
    CHECK(csv.out.rfind("m,n,fraction,signature,determinant,alexander,gtop,gsm,certificate,tested_dim,embeddable\n",
                        0) == 0);
    CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 2);

    auto four = knot_cli({"verify", "--m-max", "1", "--n-max", "1", "--embed-cap-seconds", "600", "--format", "json"});
    CHECK(four.code == cli::kOk);
    auto doc = nlohmann::json::parse(four.out);
    REQUIRE(doc.size() == 4);
    for (auto const& row : doc) {
        CHECK(row["gsm_lower"] == 2);
        CHECK(row["gsm_upper"] == 2);
        CHECK(row["embedding_verdict"]["embeddable"] == false);
    }

    auto inc = knot_cli({"verify", "--m-max", "0", "--n-max", "1", "--embed-node-limit", "3"});
    CHECK(inc.code == cli::kInconclusive);
    CHECK(knot_cli({"verify", "--m-max", "-1", "--n-max", "0"}).code == cli::kUsageError);
    CHECK(knot_cli({"verify", "--m-max", "0"}).code == cli::kUsageError);
    CHECK(knot_cli({"verify", "--m-max", "0", "--n-max", "0", "--curve-bound", "0"}).code == cli::kUsageError);
}

TEST_CASE("knot lattice") {
    auto q00 = write_temp("q00.txt", format_square_matrix(qmn_gram({0, 0}).gram()));
    auto no = knot_cli({"lattice", "--gram", q00.string(), "--dim", "10"});
    CHECK(no.code == cli::kOk);
    CHECK(contains(no.out, "NOT EMBEDDABLE dim=10"));

    auto yes = knot_cli({"lattice", "--gram", q00.string(), "--dim", "11"});
    CHECK(yes.code == cli::kOk);
    CHECK(contains(yes.out, "EMBEDDABLE dim=11"));
    auto rows = parse_rows(yes.out, 1);
    REQUIRE(rows.size() == 8);
    for (auto const& row : rows) CHECK(row.size() == 11);
    CHECK(verify_embedding(qmn_gram({0, 0}), Embedding{rows, 11}));

    auto a2 = write_temp("a2.txt", "# A2\n2\n2 -1\n-1 2\n");
    auto md = knot_cli({"lattice", "--gram", a2.string(), "--mindim", "--cap", "5"});
    CHECK(md.code == cli::kOk);
    CHECK(contains(md.out, "MINDIM=3"));

    CHECK(contains(knot_cli({"lattice", "--m", "0", "--n", "0", "--mindim"}).out, "MINDIM=11"));

    auto notpd = write_temp("notpd.txt", "2\n2 3\n3 2\n");
    auto bad = knot_cli({"lattice", "--gram", notpd.string(), "--dim", "3"});
    CHECK(bad.code == cli::kUsageError);
    CHECK(contains(bad.err, "leading principal minor 2"));

    auto garbage = write_temp("garbage.txt", "3\n1 2\n");
    CHECK(knot_cli({"lattice", "--gram", garbage.string(), "--dim", "3"}).code == cli::kUsageError);
    CHECK(knot_cli({"lattice", "--gram", "/nonexistent/file", "--dim", "3"}).code == cli::kUsageError);

    auto budget = knot_cli({"lattice", "--m", "1", "--n", "1", "--dim", "14", "--embed-node-limit", "5"});
    CHECK(budget.code == cli::kInconclusive);
    CHECK(contains(budget.out, "INCONCLUSIVE"));
}

TEST_CASE("knot seifert") {
    auto m00 = write_temp("m00.txt", format_square_matrix(seifert_matrix({0, 0})));
    auto sig = knot_cli({"seifert", "--matrix", m00.string(), "--sig"});
    CHECK(sig.code == cli::kOk);
    CHECK(sig.out == "-2\n");
    CHECK(knot_cli({"seifert", "--matrix", m00.string(), "--det"}).out == "107\n");
    auto alex = knot_cli({"seifert", "--matrix", m00.string(), "--alex"});
    CHECK(alex.out == "-2:6 -1:-27 0:41 1:-27 2:6\n");
    CHECK(knot_cli({"seifert", "--m", "1", "--n", "0", "--det"}).out == "163\n");
    auto bad = write_temp("bad.txt", "two\n");
    CHECK(knot_cli({"seifert", "--matrix", bad.string(), "--sig"}).code == cli::kUsageError);
}

TEST_CASE("knot curve") {
    auto c00 = knot_cli({"curve", "--m", "0", "--n", "0", "--bound", "3"});
    CHECK(c00.code == cli::kOk);
    CHECK(contains(c00.out, "a = (1, 0, 0, 1) ; b = (1, 1, 0, 2)"));

    auto c20 = knot_cli({"curve", "--m", "2", "--n", "0"});
    CHECK(c20.code == cli::kOk);
    CHECK(contains(c20.out, "form = [[0, 1], [0, -3]]"));

    auto searched = knot_cli({"curve", "--m", "1", "--n", "1", "--bound", "1", "--search"});
    CHECK(searched.out == "a = (0, 0, 1, 1) ; b = (-1, -1, 1, -1) ; form = [[-1, -3], [-2, -6]]\n");

    auto mfile = write_temp("m10.txt", format_square_matrix(seifert_matrix({1, 0})));
    auto f = knot_cli({"curve", "--matrix", mfile.string(), "--bound", "1"});
    CHECK(f.code == cli::kOk);
    CHECK(f.out == "NONE within bound 1\n");

    CHECK(knot_cli({"curve", "--m", "0", "--n", "0", "--bound", "0"}).code == cli::kUsageError);
}

TEST_CASE("knot export round trips through the file format") {
    auto g = knot_cli({"export", "--m", "1", "--n", "0", "--what", "gram"});
    CHECK(g.code == cli::kOk);
    CHECK(parse_square_matrix(g.out) == qmn_gram({1, 0}).gram());
    auto s = knot_cli({"export", "--m", "1", "--n", "0", "--what", "seifert"});
    CHECK(parse_square_matrix(s.out) == seifert_matrix({1, 0}));
    CHECK(knot_cli({"export", "--m", "1", "--n", "0", "--what", "other"}).code == cli::kUsageError);
}
