#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(RTSPA_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string repo(const std::string& rel) { return std::string(RTSPA_SOURCE_DIR) + "/" + rel; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, Validate) {
  EXPECT_EQ(run("validate " + repo("configs/geometry_default.json")).code, 0);
  const auto tmp = std::filesystem::temp_directory_path() / "rtspa_bad_geometry.json";
  std::ofstream(tmp) << R"({"W":7.1,"L":10,"G":2,"B":6,"n_units":4,"unit_height":10,
    "face_side":20,"wall_thickness":1,"p_max":0.5})";
  EXPECT_EQ(run("validate " + tmp.string()).code, 1);
  EXPECT_EQ(run("validate /no/such/file.json").code, 2);
  std::ofstream(tmp) << "{not json";
  EXPECT_EQ(run("validate " + tmp.string()).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("fk --bogus 1").code, 2);
  EXPECT_EQ(run("workspace --mode mode9").code, 2);
  EXPECT_EQ(run("--help").code, 0);
  for (const char* sub : {"validate", "workspace", "fk", "solve", "fit-material", "gait", "grip",
                          "force", "manipulate"}) {
    const auto r = run(std::string(sub) + " --help");
    EXPECT_EQ(r.code, 0) << sub;
  }
  EXPECT_NE(run("workspace --help").out.find("--pressure-steps"), std::string::npos);
}

TEST(Cli, WorkspaceRowsAndDeterminism) {
  const auto dir = std::filesystem::temp_directory_path() / "rtspa_cli_ws";
  std::filesystem::remove_all(dir);
  ASSERT_EQ(run("workspace --mode mode1 --pressure-steps 4 --mirror --ply -o " + (dir / "a").string()).code, 0);
  ASSERT_EQ(run("workspace --mode mode1 --pressure-steps 4 --mirror --ply -o " + (dir / "b").string()).code, 0);
  const std::string a = slurp(dir / "a" / "workspace.csv");
  EXPECT_EQ(a, slurp(dir / "b" / "workspace.csv"));
  EXPECT_EQ(slurp(dir / "a" / "metrics.json"), slurp(dir / "b" / "metrics.json"));
  const auto rows = std::count(a.begin(), a.end(), '\n') - 1;
  EXPECT_EQ(rows, 10 * 4 * 10 * 2);
  EXPECT_TRUE(std::filesystem::exists(dir / "a" / "workspace.ply"));

  const auto bend = run("workspace --mode bending --pressure-steps 3 -o " + (dir / "c").string());
  EXPECT_EQ(nlohmann::json::parse(bend.out)["hull_volume_mm3"], 0.0);
  const auto m2 = run("workspace --mode mode2 --angle-step 60 --pressure-steps 2 -o " + (dir / "d").string());
  const std::string d = slurp(dir / "d" / "workspace.csv");
  EXPECT_EQ(std::count(d.begin(), d.end(), '\n') - 1, 2 * 2 * 10);
}

TEST(Cli, Solve) {
  const auto fk = nlohmann::json::parse(run("fk --theta1 20 -p 0.3").out);
  const auto tip = fk["tip"]["position_mm"];
  std::ostringstream target;
  target.precision(17);
  target << tip[0].get<double>() << ',' << tip[1].get<double>() << ',' << tip[2].get<double>();
  const auto ok = run("solve --target=" + target.str());
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(nlohmann::json::parse(ok.out)["status"], "converged");
  EXPECT_EQ(run("solve --target 0,0,400").code, 2);
  EXPECT_EQ(run("solve --target 1,2").code, 2);
  EXPECT_EQ(run("solve --target a,b,c").code, 2);
  EXPECT_EQ(run("solve --target 0,-30,5").code, 1);
}

TEST(Cli, FitMaterial) {
  const auto out = std::filesystem::temp_directory_path() / "rtspa_fit.json";
  const auto r = run("fit-material " + repo("data/synthetic_filament.csv") + " -o " + out.string());
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["mu_mpa"].get<double>(), 6.0, 0.06);
  EXPECT_NEAR(j["alpha"].get<double>(), 4.4, 0.044);
  EXPECT_TRUE(std::filesystem::exists(out));
  EXPECT_EQ(run("fit-material /no/such.csv").code, 2);
}

TEST(Cli, AppsCommands) {
  const auto gait = run("gait --direction=+x --cycles 2");
  ASSERT_EQ(gait.code, 0);
  for (const auto& s : nlohmann::json::parse(gait.out)["steps"]) {
    EXPECT_EQ(s["theta1_deg"], 0.0);
    EXPECT_EQ(s["theta2_deg"], 0.0);
  }
  EXPECT_EQ(run("grip --size 300").code, 1);
  EXPECT_EQ(nlohmann::json::parse(run("grip --size 50").out)["mode"], "two_finger");
  EXPECT_EQ(nlohmann::json::parse(run("grip --size 200 --shape compact").out)["mode"],
            "enhanced_opening");
  EXPECT_EQ(nlohmann::json::parse(run("force --theta1 0 -p 0").out)["blocking_force_n"], 0.0);
  EXPECT_EQ(run("force --theta1 60").code, 2);
  EXPECT_EQ(run("manipulate -k rotate-parallel").code, 0);
  EXPECT_EQ(run("grip --size 80 -l " + repo("configs/gripper_layout.json")).code, 0);
}

TEST(Cli, ThreadCapDoesNotChangeOutput) {
  const auto a = run("solve --target 5,10,30");
  const auto b = run("solve --target 5,10,30 ");
  const std::string cmd = "env RTSPA_THREADS=1 ";
  const auto c = [&] {
    const std::string full = cmd + RTSPA_CLI + " solve --target 5,10,30 2>/dev/null";
    FILE* pipe = popen(full.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    pclose(pipe);
    return out;
  }();
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c);
}
