#include <gtest/gtest.h>

#include <clocale>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dimerss/cli.hpp"
#include "dimerss/sweep.hpp"

namespace dimerss {
namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> v;
    std::stringstream ss(text);
    for (std::string l; std::getline(ss, l);) v.push_back(l);
    return v;
}

std::vector<std::string> fields(const std::string& line) {
    std::vector<std::string> v;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ',');) v.push_back(f);
    if (!line.empty() && line.back() == ',') v.emplace_back();
    return v;
}

TEST(GridRange, EndpointsAndValidation) {
    const GridRange g{0.0, 3.0, 50};
    EXPECT_EQ(g.at(0), 0.0);
    EXPECT_EQ(g.at(49), 3.0);
    EXPECT_EQ((GridRange{0.7, 0.7, 1}.at(0)), 0.7);
    EXPECT_THROW((GridRange{0.0, 1.0, 0}.validate("a")), InvalidParameter);
    EXPECT_THROW((GridRange{1.0, 0.0, 3}.validate("a")), InvalidParameter);
}

TEST(OutputSelection, Parse) {
    const OutputSelection s = OutputSelection::parse("delta,purity");
    EXPECT_FALSE(s.concurrence);
    EXPECT_TRUE(s.delta);
    EXPECT_TRUE(s.purity);
    EXPECT_FALSE(s.populations);
    EXPECT_THROW(OutputSelection::parse("entropy"), InvalidParameter);
}

TEST(FormatDouble, RoundTripAndLocale) {
    for (double x : {0.1, 1.0 / 3.0, 2.5e-17, -7.25, 123456789.0}) {
        EXPECT_EQ(std::stod(format_double(x)), x);
    }
    EXPECT_EQ(format_double(0.0), "0");
    EXPECT_EQ(format_double(-0.0), "0");
    EXPECT_EQ(format_double(std::nan("")), "nan");
    const char* previous = std::setlocale(LC_NUMERIC, "de_DE.UTF-8");
    EXPECT_EQ(format_double(0.5), "0.5");
    if (previous) std::setlocale(LC_NUMERIC, "C");
}

TEST(RunSweep, RowOrderAndOrigin) {
    SweepConfig cfg;
    cfg.alpha = {0.0, 1.0, 3};
    cfg.eta = {0.0, 0.2, 2};
    const std::vector<CsvRow> rows = run_sweep(cfg);
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_EQ(rows[0].alpha, 0.0);
    EXPECT_EQ(rows[1].alpha, 0.0);
    EXPECT_EQ(rows[1].eta, 0.2);
    EXPECT_EQ(rows[2].alpha, 0.5);
    EXPECT_FALSE(rows[0].residual.has_value());
    for (const CsvRow& r : rows) {
        ASSERT_FALSE(r.error);
        EXPECT_NEAR(*r.pop00 + *r.pop01 + *r.pop10 + *r.pop11, 1.0, 1e-8);
        EXPECT_GE(*r.concurrence, 0.0);
        EXPECT_LE(*r.concurrence, 1.0);
    }
}

TEST(RunSweep, UndrivenSinglePoint) {
    SweepConfig cfg;
    cfg.j = 0.0;
    cfg.alpha = {0.0, 0.0, 1};
    cfg.eta = {0.0, 0.0, 1};
    const std::vector<CsvRow> rows = run_sweep(cfg);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(*rows[0].pop11, 1.0);
    EXPECT_EQ(*rows[0].concurrence, 0.0);
}

TEST(RunSweep, FigureGridCrossCheckAndModes) {
    for (auto mode : {DriveMode::Common, DriveMode::Independent}) {
        SweepConfig cfg;
        cfg.mode = mode;
        cfg.cross_check = true;
        cfg.threads = 2;
        const std::vector<CsvRow> rows = run_sweep(cfg);
        ASSERT_EQ(rows.size(), 2500u);
        double best_c = 0.0, best_alpha = 0.0, best_delta = 0.0;
        for (const CsvRow& r : rows) {
            ASSERT_FALSE(r.error);
            EXPECT_LT(*r.residual, 1e-9);
            if (*r.concurrence > best_c) best_c = *r.concurrence, best_alpha = r.alpha;
            best_delta = std::max(best_delta, *r.delta);
        }
        EXPECT_GT(best_c, 0.0);
        EXPECT_GT(best_alpha, 0.3);
        EXPECT_LT(best_alpha, 3.0);
        if (mode == DriveMode::Common) {
            EXPECT_GT(best_delta, 0.0);
        } else {
            EXPECT_LE(best_delta, 1e-8);
        }
    }
}

TEST(Csv, SchemaAndBlankColumns) {
    std::ostringstream os;
    write_csv_header(os);
    CsvRow row;
    row.j = 2.0;
    row.alpha = 0.5;
    row.eta = 0.1;
    row.concurrence = 0.25;
    write_csv_row(os, row);
    row.error = "boom";
    write_csv_row(os, row);
    const auto ls = lines(os.str());
    ASSERT_EQ(ls.size(), 3u);
    EXPECT_EQ(ls[0], kCsvHeader);
    EXPECT_EQ(ls[1], "common,2,1,0.5,0.10000000000000001,0.25,,,,,,,");
    EXPECT_EQ(fields(ls[2]).size(), 13u);
    EXPECT_EQ(fields(ls[2])[5], "nan");
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"bogus"}).code, kExitUsage);
    EXPECT_EQ(run({"steady", "--eta", "-1"}).code, kExitUsage);
    EXPECT_EQ(run({"steady", "--mode", "sideways"}).code, kExitUsage);
    EXPECT_EQ(run({"sweep", "--outputs", "entropy"}).code, kExitUsage);
    EXPECT_EQ(run({"snr", "--j-list", "1,x"}).code, kExitUsage);
    EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, SteadyAtOrigin) {
    const CliRun r = run({"steady", "--j", "0", "--alpha", "0", "--eta", "0"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto ls = lines(r.out);
    ASSERT_GE(ls.size(), 6u);
    EXPECT_EQ(ls[2], "0 0  0 0  0 0  0 0");
    EXPECT_EQ(ls[5], "0 0  0 0  0 0  1 0");
    EXPECT_NE(r.out.find("concurrence=0\n"), std::string::npos);
}

TEST(Cli, SteadyReportsAgreement) {
    for (const char* mode : {"common", "independent"}) {
        const CliRun r = run({"steady", "--mode", mode, "--alpha", "1", "--eta", "0.1"});
        ASSERT_EQ(r.code, kExitOk) << r.err;
        const auto pos = r.out.find("closed_form_vs_numeric=");
        ASSERT_NE(pos, std::string::npos);
        EXPECT_LT(std::stod(r.out.substr(pos + 23)), 1e-9);
    }
}

TEST(Cli, SweepDeterministicAcrossThreads) {
    const std::vector<std::string> base{"sweep", "--alpha-count", "7", "--eta-count", "5", "--cross-check"};
    auto with_threads = base;
    with_threads.insert(with_threads.end(), {"--threads", "3"});
    const CliRun a = run(base), b = run(base), c = run(with_threads);
    ASSERT_EQ(a.code, kExitOk) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
    EXPECT_EQ(lines(a.out).size(), 36u);
    EXPECT_EQ(lines(a.out)[0], kCsvHeader);
}

TEST(Cli, DeltaAndOutputFile) {
    const std::string path = ::testing::TempDir() + "dimerss_delta.csv";
    const CliRun r = run({"delta", "--alpha-count", "3", "--eta-count", "3", "--out", path});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    const auto ls = lines(text.str());
    ASSERT_EQ(ls.size(), 10u);
    const auto f = fields(ls[1]);
    ASSERT_EQ(f.size(), 13u);
    EXPECT_TRUE(f[5].empty());
    EXPECT_EQ(f[6], "0");
    std::remove(path.c_str());
    EXPECT_EQ(run({"sweep", "--out", "/nonexistent-dir/x.csv"}).code, kExitUsage);
}

TEST(Cli, ValidateAndMismatchExit) {
    const CliRun ok = run({"validate", "--samples", "40"});
    EXPECT_EQ(ok.code, kExitOk) << ok.out;
    EXPECT_NE(ok.out.find("mode=independent"), std::string::npos);
    EXPECT_EQ(run({"validate", "--samples", "5", "--tol", "0"}).code, kExitMismatch);
    EXPECT_EQ(run({"sweep", "--alpha-count", "2", "--eta-count", "2", "--cross-check", "--tol", "0"}).code,
              kExitMismatch);
}

TEST(Cli, SnrTable) {
    const CliRun r = run({"snr", "--j-list", "1,2", "--mode", "both"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 5u);
    EXPECT_EQ(ls[0], "mode,j,alpha_star,c_star,eta_star,snr");
    EXPECT_EQ(fields(ls[1])[0], "common");
    EXPECT_EQ(fields(ls[4])[0], "independent");
    const CliRun bad = run({"snr", "--j-list", "0"});
    EXPECT_EQ(bad.code, kExitNumerical);
    EXPECT_NE(bad.out.find("common,0,nan"), std::string::npos);
}

TEST(Cli, TrajShortRunIsReproducible) {
    const std::vector<std::string> args{"traj", "--n-traj", "20", "--t-end", "1", "--dt", "0.01"};
    const CliRun a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("frobenius_distance="), std::string::npos);
}

}  // namespace
}  // namespace dimerss
