#include "reference.hpp"

#include <wgqed_cli/dispatch.hpp>

#include <json.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using wgqed::cli::dispatch;
namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("wgqed_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string &name) const { return (dir_ / name).string(); }

    int run(std::vector<std::string> args) {
        args.insert(args.begin(), "wgqed");
        return dispatch(args);
    }

    fs::path dir_;
};

std::string slurp(const std::string &p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Data rows of a CSV written by the tool, comment lines skipped, header first.
std::vector<std::vector<std::string>> rows(const std::string &p) {
    std::ifstream in(p);
    std::vector<std::vector<std::string>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        out.push_back(cells);
    }
    return out;
}

} // namespace

TEST_F(Cli, ProbabilitiesStartInUpperState) {
    ASSERT_EQ(run({"probabilities", "--ratio", "2", "--t-max", "1", "--steps", "10", "--out", path("p.csv")}), 0);
    const auto r = rows(path("p.csv"));
    ASSERT_EQ(r.size(), 12u);
    EXPECT_EQ(r[0], (std::vector<std::string>{"t_gamma2", "p_f0", "p_e1", "p_g2"}));
    EXPECT_EQ(r[1], (std::vector<std::string>{"0", "1", "0", "0"}));
    EXPECT_NEAR(std::stod(r[11][1]), wgqed::reference::p_f0_ratio2, 1e-15);
    EXPECT_NEAR(std::stod(r[11][3]), wgqed::reference::p_g2_ratio2, 1e-15);
    const auto m = nlohmann::json::parse(slurp(path("p.manifest.json")));
    EXPECT_EQ(m["command"], "probabilities");
    EXPECT_TRUE(m.contains("settings"));
}

TEST_F(Cli, OutputIsDeterministic) {
    ASSERT_EQ(run({"spectrum", "--n", "21", "--out", path("a.csv")}), 0);
    ASSERT_EQ(run({"spectrum", "--n", "21", "--out", path("b.csv")}), 0);
    EXPECT_EQ(rows(path("a.csv")), rows(path("b.csv")));
    EXPECT_EQ(rows(path("a.csv")).size(), 1u + 21u * 21u);
}

TEST_F(Cli, IdenticalFigureMaximumAtStationaryPoint) {
    ASSERT_EQ(run({"figure", "fig4b", "--out", path("f.csv")}), 0);
    const auto r = rows(path("f.csv"));
    ASSERT_EQ(r[0][0], "delta");
    ASSERT_EQ(r[0][1], "s_ar_m0.03");
    double best = -1.0, at = 0.0;
    for (std::size_t i = 1; i < r.size(); ++i) {
        const double s = std::stod(r[i][1]);
        if (s > best) best = s, at = std::stod(r[i][0]);
    }
    EXPECT_NEAR(at, wgqed::reference::identical_r3_argmax, 1e-4);
}

TEST_F(Cli, EveryFigureBuilds) {
    for (const char *name : {"fig2a", "fig2b", "fig2c", "fig2d", "fig3a", "fig3b", "fig3c", "fig3d", "fig3e", "fig4a",
                             "fig4b", "fig4c", "fig4d"}) {
        EXPECT_EQ(run({"figure", name, "--n", "11", "--out", path(std::string(name) + ".csv"), "--svg"}), 0) << name;
        EXPECT_TRUE(fs::exists(path(std::string(name) + ".svg"))) << name;
    }
}

TEST_F(Cli, VerifyWritesReport) {
    ASSERT_EQ(run({"verify", "--modes", "101", "--t-max", "1", "--out", path("v.json")}), 0);
    const auto j = nlohmann::json::parse(slurp(path("v.json")));
    EXPECT_EQ(j["n_modes"], 101);
    for (const char *k : {"dt", "window", "pass", "observables"}) EXPECT_TRUE(j.contains(k)) << k;
    EXPECT_TRUE(fs::exists(path("v.manifest.json")));
}

TEST_F(Cli, PulseCommand) {
    ASSERT_EQ(run({"pulse", "--steps", "20", "--t-max", "6", "--out", path("u.csv")}), 0);
    const auto r = rows(path("u.csv"));
    EXPECT_EQ(r[0], (std::vector<std::string>{"t_gamma2", "alpha_re", "alpha_im", "p_f0"}));
    EXPECT_EQ(r.size(), 22u);
    EXPECT_EQ(run({"pulse", "--pulse-shape", "triangle"}), 1);
    EXPECT_EQ(run({"pulse", "--weight", "0.8", "--alpha0", "0.8"}), 1);
    EXPECT_EQ(run({"pulse", "--pulse-shape", "sampled", "--samples", path("missing.csv")}), 3);
}

TEST_F(Cli, ConfigFileSuppliesOptions) {
    {
        std::ofstream cfg(path("run.ini"));
        cfg << "ratio=2\nt-max=1\nsteps=10\n";
    }
    ASSERT_EQ(run({"probabilities", "--config", path("run.ini"), "--out", path("c.csv")}), 0);
    const auto r = rows(path("c.csv"));
    EXPECT_NEAR(std::stod(r[11][1]), wgqed::reference::p_f0_ratio2, 1e-15);
    // Command-line values take precedence over the file.
    ASSERT_EQ(run({"probabilities", "--config", path("run.ini"), "--steps", "4", "--out", path("d.csv")}), 0);
    EXPECT_EQ(rows(path("d.csv")).size(), 6u);
}

TEST_F(Cli, ExitCodes) {
    EXPECT_EQ(run({"probabilities", "--bogus"}), 1);
    EXPECT_EQ(run({"probabilities", "--ratio", "-1"}), 1);
    EXPECT_EQ(run({"spectrum", "--n", "1"}), 1);
    EXPECT_EQ(run({"figure", "fig9"}), 1);
    EXPECT_EQ(run({"verify", "--modes", "100"}), 1);
    EXPECT_EQ(run({"probabilities", "--out", path("no/such/dir/p.csv")}), 3);
    EXPECT_EQ(run({"probabilities", "--config", path("absent.ini")}), 3);
}
