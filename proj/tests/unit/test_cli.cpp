#include "holonoise/cli.hpp"
#include "holonoise/errors.hpp"
#include "holonoise/io.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace holonoise::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "holonoise");
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("holonoise_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path write_config(const std::string& text, const std::string& name = "config.json") {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p;
    }

    static constexpr const char* kSmallConfig =
        R"({"arm_length": 40, "shot_asd": 2e-20, "sample_rate": 5e7, "n_samples": 65536,
            "seed": 9, "holo_scale": 1, "segment_length": 1024, "overlap": 0.5})";

    fs::path dir_;
};

TEST_F(CliTest, Constants) {
    const auto r = invoke({"constants"});
    ASSERT_EQ(r.code, kOk);
    const auto j = json::parse(r.out);
    EXPECT_NEAR(j["t_P"].get<double>() / 5.39e-44, 1.0, 0.01);
    for (const char* key : {"c", "hbar", "G", "t_P", "l_P", "omega_P", "m_P"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
}

TEST_F(CliTest, PredictHeaderRecordsSigma2) {
    const auto r = invoke({"predict", "--arm-length", "40"});
    ASSERT_EQ(r.code, kOk);
    std::istringstream in(r.out);
    const auto header = io::read_header(in);
    EXPECT_NEAR(io::parse_double(header.at("sigma2_m2")) / 1.824e-34, 1.0, 1e-3);
    EXPECT_NEAR(io::parse_double(header.at("tau_c_s")) / 2.668e-7, 1.0, 1e-3);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "curve,abscissa,value");
}

TEST_F(CliTest, InfoJson) {
    const auto r = invoke({"info", "--length", "1.3e26"});
    ASSERT_EQ(r.code, kOk);
    const double pixel = json::parse(r.out)["pixel_size"].get<double>();
    EXPECT_GT(pixel, 3e-5);
    EXPECT_LT(pixel, 3e-4);
    EXPECT_EQ(invoke({"info", "--length", "1e-40"}).code, kDomainError);
}

TEST_F(CliTest, SlitsPatternAndSweep) {
    const auto p = invoke({"slits", "--screen-distance", "1", "--separation", "4e-18", "--n-angles", "128"});
    ASSERT_EQ(p.code, kOk);
    EXPECT_NE(p.out.find("angle,intensity"), std::string::npos);
    const auto s = invoke({"slits", "--screen-distance", "1", "--sweep", "--sweep-points", "31"});
    ASSERT_EQ(s.code, kOk);
    EXPECT_NE(s.out.find("# crossing_m="), std::string::npos);
    EXPECT_NE(s.out.find("separation,distance_metric,bound"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(invoke({}).code, kUsage);
    EXPECT_EQ(invoke({"predict", "--arm-length", "40", "--bogus"}).code, kUsage);
    EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
    EXPECT_EQ(invoke({"predict"}).code, kUsage);
    EXPECT_EQ(invoke({"--help"}).code, kOk);
}

TEST_F(CliTest, MissingConfigIsIoError) {
    EXPECT_EQ(invoke({"simulate", "--config", (dir_ / "missing.json").string()}).code, kIoError);
}

TEST_F(CliTest, MalformedConfigReportsLine) {
    const auto p = write_config("{\n  \"arm_length\": 40,\n  \"seed\": ,\n}\n");
    const auto r = invoke({"simulate", "--config", p.string(), "--out-dir", dir_.string()});
    EXPECT_EQ(r.code, kDomainError);
    EXPECT_NE(r.err.find(":3:"), std::string::npos) << r.err;
}

TEST_F(CliTest, UnknownAndMistypedFieldsRejected) {
    auto r = invoke({"simulate", "--config", write_config(R"({"arm_lenght": 40})").string(), "--out-dir", dir_.string()});
    EXPECT_EQ(r.code, kDomainError);
    EXPECT_NE(r.err.find("arm_lenght"), std::string::npos);
    r = invoke({"simulate", "--config", write_config(R"({"n_samples": 1.5})").string(), "--out-dir", dir_.string()});
    EXPECT_EQ(r.code, kDomainError);
    EXPECT_NE(r.err.find("n_samples"), std::string::npos);
    r = invoke({"simulate", "--config", write_config(R"({"sample_rate": 1e6})").string(), "--out-dir", dir_.string()});
    EXPECT_EQ(r.code, kDomainError);
}

TEST(ParseConfig, FieldsMapOntoExperimentConfig) {
    const auto c = parse_config(R"({"arm_length": 12.5, "seed": 18446744073709551615, "overlap": 0.25})");
    EXPECT_EQ(c.arm_length, 12.5);
    EXPECT_EQ(c.seed, 18446744073709551615ULL);
    EXPECT_EQ(c.overlap, 0.25);
    EXPECT_EQ(c.n_samples, ExperimentConfig{}.n_samples);
    EXPECT_THROW(parse_config("[1, 2]"), FormatError);
}

TEST_F(CliTest, SimulateWritesOutputsAndManifest) {
    const auto cfg = write_config(kSmallConfig);
    const auto r = invoke({"simulate", "--config", cfg.string(), "--out-dir", (dir_ / "run").string()});
    ASSERT_EQ(r.code, kOk) << r.err;
    const auto detection = json::parse(r.out);
    EXPECT_GT(detection["predicted_snr"].get<double>(), 0.0);
    EXPECT_TRUE(detection["report"].is_object());

    const auto manifest = json::parse(slurp(dir_ / "run" / "manifest.json"));
    EXPECT_EQ(manifest["config"]["seed"].get<int>(), 9);
    EXPECT_FALSE(manifest["prng"].get<std::string>().empty());
    EXPECT_TRUE(manifest["constants"].contains("t_P"));
    ASSERT_EQ(manifest["outputs"].size(), 2u);
    for (const auto& o : manifest["outputs"]) {
        EXPECT_EQ(o["sha256"].get<std::string>(), sha256_file(o["path"].get<std::string>()));
    }
}

TEST_F(CliTest, RepeatedRunsHaveIdenticalChecksums) {
    const auto cfg = write_config(kSmallConfig);
    ASSERT_EQ(invoke({"simulate", "--config", cfg.string(), "--out-dir", (dir_ / "a").string()}).code, kOk);
    ASSERT_EQ(invoke({"simulate", "--config", cfg.string(), "--out-dir", (dir_ / "b").string()}).code, kOk);
    const auto a = json::parse(slurp(dir_ / "a" / "manifest.json"));
    const auto b = json::parse(slurp(dir_ / "b" / "manifest.json"));
    for (std::size_t i = 0; i < a["outputs"].size(); ++i) {
        EXPECT_EQ(a["outputs"][i]["sha256"], b["outputs"][i]["sha256"]);
    }
}

TEST_F(CliTest, DumpThenAnalyzeReproducesSpectraBitwise) {
    const auto cfg = write_config(kSmallConfig);
    const auto ts = dir_ / "ts.csv";
    ASSERT_EQ(invoke({"simulate", "--config", cfg.string(), "--out-dir", dir_.string(),
                      "--dump-timeseries", ts.string()})
                  .code,
              kOk);
    const auto spectra = dir_ / "reanalyzed.csv";
    const auto r = invoke({"analyze", "--timeseries", ts.string(), "--out", spectra.string()});
    ASSERT_EQ(r.code, kOk) << r.err;
    EXPECT_EQ(slurp(spectra), slurp(dir_ / "spectra.csv"));
    const auto manifest = json::parse(slurp(dir_ / "manifest.json"));
    EXPECT_EQ(manifest["outputs"].size(), 3u);
}

TEST_F(CliTest, DetectOnSimulatedSpectra) {
    const auto cfg = write_config(kSmallConfig);
    ASSERT_EQ(invoke({"simulate", "--config", cfg.string(), "--out-dir", dir_.string()}).code, kOk);
    const auto band = json::parse(slurp(dir_ / "manifest.json"))["analysis"]["band_hz"];
    const std::string band_text =
        io::format_double(band[0].get<double>()) + ":" + io::format_double(band[1].get<double>());
    const auto r = invoke({"detect", "--estimate", (dir_ / "spectra.csv").string(), "--band", band_text});
    ASSERT_EQ(r.code, kOk) << r.err;
    const auto report = json::parse(r.out);
    const auto sim = json::parse(slurp(dir_ / "detection.json"));
    EXPECT_DOUBLE_EQ(report["sigma_level"].get<double>(), sim["report"]["sigma_level"].get<double>());
    EXPECT_EQ(invoke({"detect", "--estimate", (dir_ / "spectra.csv").string(), "--band", "oops"}).code,
              kDomainError);
    EXPECT_EQ(invoke({"detect", "--estimate", (dir_ / "nope.csv").string(), "--band", "1:2"}).code, kIoError);
}

TEST_F(CliTest, OutputDirectoryFromEnvironment) {
    const auto cfg = write_config(kSmallConfig);
    const auto target = dir_ / "from_env";
    ::setenv(kOutputDirEnv, target.c_str(), 1);
    const auto r = invoke({"simulate", "--config", cfg.string()});
    ::unsetenv(kOutputDirEnv);
    ASSERT_EQ(r.code, kOk) << r.err;
    EXPECT_TRUE(fs::exists(target / "manifest.json"));
}

} // namespace
} // namespace holonoise::cli
