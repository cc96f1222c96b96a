/******************************************************************************
 * Copyright 2026 The Platoon Control Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *****************************************************************************/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "platoon/config.h"

namespace fs = std::filesystem;

namespace {

const fs::path& Scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("platoon_cli_test_" + std::to_string(::getpid()));
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

int Cli(const std::string& args, const std::string& log = "cli.log") {
  const std::string cmd = std::string(PLATOON_CLI_PATH) + " " + args + " > " +
                          (Scratch() / log).string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string Value(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(key + "=", 0) == 0) return line.substr(key.size() + 1);
  }
  return "";
}

TEST_CASE("run writes trajectory, metrics, bounds and plot data") {
  const fs::path out = Scratch() / "run";
  REQUIRE(Cli("run --preset c1-n2 --controller pid --out " + out.string()) == 0);
  for (const char* f : {"trajectory.csv", "metrics.txt", "bounds.txt", "speed.csv",
                        "spacing_error.csv"}) {
    CHECK(fs::exists(out / f));
  }
  const std::string metrics = Slurp(out / "metrics.txt");
  CHECK(std::stod(Value(metrics, "h_min")) == doctest::Approx(7.2).epsilon(1e-3));
  std::istringstream speed(Slurp(out / "speed.csv"));
  std::string header;
  std::getline(speed, header);
  CHECK(header == "time,v0,v1");
  std::istringstream traj(Slurp(out / "trajectory.csv"));
  std::getline(traj, header);
  CHECK(header.rfind("time,vehicle,position,speed", 0) == 0);
}

TEST_CASE("identical invocations give identical bytes") {
  const fs::path a = Scratch() / "det_a";
  const fs::path b = Scratch() / "det_b";
  REQUIRE(Cli("run --preset c2-n4 --out " + a.string()) == 0);
  REQUIRE(Cli("run --preset c2-n4 --out " + b.string()) == 0);
  CHECK(Slurp(a / "trajectory.csv") == Slurp(b / "trajectory.csv"));
  CHECK(Slurp(a / "metrics.txt") == Slurp(b / "metrics.txt"));
}

TEST_CASE("emit-defaults output parses back to the defaults") {
  const fs::path cfg = Scratch() / "defaults.ini";
  REQUIRE(Cli("emit-defaults --out " + cfg.string()) == 0);
  const platoon::Config c = platoon::LoadConfig(cfg.string());
  const auto [control, energy] = platoon::DefaultParams();
  CHECK(c.control.kp == control.kp);
  CHECK(c.control.cbf_k2 == control.cbf_k2);
  CHECK(c.energy.cd0_a == energy.cd0_a);
  CHECK(c.energy.lhv == energy.lhv);
}

TEST_CASE("flags override the config file") {
  const fs::path cfg = Scratch() / "short.ini";
  std::ofstream(cfg) << "[scenario]\npreset = c1-n8\nduration = 5\n";
  const fs::path out = Scratch() / "override";
  REQUIRE(Cli("run --config " + cfg.string() + " --duration 2 --out " + out.string()) == 0);
  const std::string metrics = Slurp(out / "metrics.txt");
  CHECK(Value(metrics, "n_vehicles") == "8");
  CHECK(Value(metrics, "n_samples") == "201");
}

TEST_CASE("malformed config reports its location") {
  const fs::path cfg = Scratch() / "bad.ini";
  std::ofstream(cfg) << "[control]\nkp = 0.4\nkq = 1\n";
  CHECK(Cli("run --config " + cfg.string(), "bad.log") != 0);
  CHECK(Slurp(Scratch() / "bad.log").find("bad.ini:3") != std::string::npos);
}

TEST_CASE("strict mode turns a failed bound into a nonzero exit") {
  const std::string base = "run --preset c1-n8 --controller baseline-a --out " +
                           (Scratch() / "strict").string();
  CHECK(Cli(base) == 0);
  CHECK(Cli(base + " --strict") == 2);
  CHECK(Cli("run --preset c1-n8 --controller pid --strict --out " +
            (Scratch() / "strict_pid").string()) == 0);
}

TEST_CASE("optimize-speed") {
  const fs::path profile = Scratch() / "flat.txt";
  std::ofstream(profile) << "10000 0\n";
  REQUIRE(Cli("optimize-speed --profile " + profile.string() +
                  " --lambda-f 1 --lambda-t 0",
              "opt1.log") == 0);
  CHECK(Value(Slurp(Scratch() / "opt1.log"), "v_star") == "10");
  REQUIRE(Cli("optimize-speed --profile " + profile.string() +
                  " --lambda-f 0 --lambda-t 1 --v-max-e 27.5",
              "opt2.log") == 0);
  CHECK(Value(Slurp(Scratch() / "opt2.log"), "v_star") == "27.5");
  CHECK(Cli("optimize-speed --lambda-f 1") != 0);
}

TEST_CASE("sweep and analyze") {
  const fs::path out = Scratch() / "sweep";
  REQUIRE(Cli("sweep --preset c1-n2 --controller pid --controller baseline-b --threads 2 "
              "--out " + out.string()) == 0);
  const std::string summary = Slurp(out / "summary.txt");
  CHECK(summary.find("c1-n2_pid.h_min=") < summary.find("c1-n2_baseline-b.h_min="));
  CHECK(fs::exists(out / "c1-n2_baseline-b" / "trajectory.csv"));

  const fs::path an = Scratch() / "analyze";
  REQUIRE(Cli("analyze --preset c1-n2 --out " + an.string()) == 0);
  const std::string report = Slurp(an / "analysis.txt");
  CHECK(Value(report, "ovrv[1].converged") == "true");
  CHECK(Value(report, "small_lag[1].satisfied") == "true");
}

TEST_CASE("unknown subcommand or preset fails") {
  CHECK(Cli("fly") != 0);
  CHECK(Cli("run --preset c9 --out " + (Scratch() / "x").string()) != 0);
}

}  // namespace
