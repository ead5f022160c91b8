#include <gtest/gtest.h>

#include <snacap/cli.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace snacap;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string data(const std::string& name) { return std::string(SNACAP_TEST_DATA_DIR) + "/" + name; }

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

} // namespace

TEST(Cli, ScoreRankListsPublishedOrder) {
    const auto r = run({"score", "--rank"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = lines(r.out);
    ASSERT_GE(ls.size(), 6u);
    EXPECT_EQ(ls[1].rfind("1,Graphistry,", 0), 0u);
    EXPECT_NE(ls[1].find(",0.67,"), std::string::npos);
    EXPECT_EQ(ls[5].rfind("5,Cytoscape,", 0), 0u);
}

TEST(Cli, RankOpenSourceWithLimit) {
    const auto r = run({"rank", "--license", "open_source", "--limit", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 3u);
    EXPECT_EQ(ls[1].rfind("1,Neo4j,", 0), 0u);
    EXPECT_EQ(ls[2].rfind("2,Cytoscape,", 0), 0u);
}

TEST(Cli, RadarIsByteIdenticalAcrossRuns) {
    const auto dir = std::filesystem::temp_directory_path() / "snacap_cli_test";
    std::filesystem::create_directories(dir);
    const auto a = dir / "a.svg", b = dir / "b.svg";
    ASSERT_EQ(run({"radar", "--tool", "Graphistry", "-o", a.string()}).code, 0);
    ASSERT_EQ(run({"radar", "--tool", "Graphistry", "-o", b.string()}).code, 0);
    const auto sa = slurp(a);
    EXPECT_FALSE(sa.empty());
    EXPECT_EQ(sa, slurp(b));
    EXPECT_NE(sa.find("class=\"capability\""), std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST(Cli, RadarFromScores) {
    const auto r = run({"radar", "--scores", "1", "1", "1", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("data-c4-raw=\"2\""), std::string::npos);
    EXPECT_EQ(run({"radar"}).code, 2);
}

TEST(Cli, DiffuseIcmOnPath) {
    const auto r = run({"graph", "diffuse", "--edges", data("p5.txt"), "--model", "icm", "--p", "1",
                        "--seeds", "0", "--rng", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(lines(r.out), (std::vector<std::string>{"step,inactive,active,active_nodes", "0,4,1,0",
                                                      "1,3,2,0 1", "2,2,3,0 1 2", "3,1,4,0 1 2 3",
                                                      "4,0,5,0 1 2 3 4"}));
}

TEST(Cli, GraphGenIsSeeded) {
    const std::vector<std::string> args{"graph", "gen", "--model", "er_gnm", "--n", "30", "--m", "40",
                                        "--seed", "5"};
    const auto a = run(args), b = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, BarabasiAlbertSeedDefaultsToM) {
    const auto r = run({"graph", "gen", "--model", "barabasi_albert", "--n", "50", "--m", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    EXPECT_EQ(net::read_edge_list(in).edge_count(), 3u + 47u * 3u);
}

TEST(Cli, CommunityAndCentrality) {
    const auto c = run({"graph", "community", "--edges", data("p5.txt"), "--method", "girvan_newman",
                        "--target", "2"});
    ASSERT_EQ(c.code, 0) << c.err;
    const auto p = run({"graph", "centrality", "--edges", data("p5.txt"), "--measure", "betweenness"});
    ASSERT_EQ(p.code, 0) << p.err;
    const auto ls = lines(p.out);
    ASSERT_EQ(ls.size(), 6u);
    EXPECT_NE(ls[3].find(",4"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"graph"}).code, 2);
    EXPECT_EQ(run({"rank", "--bogus"}).code, 2);
    EXPECT_EQ(run({"radar", "--tool", "NoSuchTool"}).code, 1);
    EXPECT_EQ(run({"rank", "--license", "shareware"}).code, 1);
    EXPECT_EQ(run({"graph", "diffuse", "--edges", data("p5.txt"), "--model", "icm", "--seeds", "9"}).code,
              1);
    EXPECT_EQ(run({"graph", "metrics", "--edges", data("missing.txt")}).code, 1);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ValidateBundledAndBrokenCatalogs) {
    const auto ok = run({"validate"});
    EXPECT_EQ(ok.code, 0);
    EXPECT_EQ(ok.out, "ok: 20 tools\n");
    const auto path = std::filesystem::temp_directory_path() / "snacap_bad_catalog.json";
    {
        std::ofstream f(path);
        f << R"({"tools": [{"name": "X", "license": "open_source", "value": {"topology_measures": ["telepathy"]}}]})";
    }
    const auto bad = run({"validate", "--catalog", path.string()});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.err.find("error:"), std::string::npos);
    std::filesystem::remove(path);
}

TEST(Cli, RpysOnSample) {
    const auto r = run({"rpys", "--citations", data("citations_sample.csv"), "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    const int first = j["first_year"];
    const auto dev = j["deviations"].get<std::vector<double>>();
    std::vector<int> peaks;
    for (std::size_t i = 0; i < dev.size(); ++i)
        if (dev[i] > 0) peaks.push_back(first + static_cast<int>(i));
    EXPECT_NE(std::find(peaks.begin(), peaks.end(), 1959), peaks.end());
    EXPECT_NE(std::find(peaks.begin(), peaks.end(), 1973), peaks.end());
}
