// Copyright (c) 2026 The prosomark Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "prosomark/config.h"
#include "test_util.h"

namespace prosomark {
namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("prosomark_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string Write(const std::string& name, const std::string& text) const {
    const fs::path p = path / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }
  static inline int counter = 0;
};

int Cli(const std::string& args) {
  const std::string cmd = std::string(PROSOMARK_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST_CASE("config defaults validate") { CHECK_NOTHROW(Config::Defaults().Validate()); }

TEST_CASE("config keys") {
  Config c = Config::Defaults();
  c.Apply("# comment\nmin_len = 3\nmax_len = 9\ntitle_mode = force\nemit_mode = tobi\n"
          "pov_tracking = off\nparagraph_final_bi4 = yes\n");
  CHECK(c.min_len == 3);
  CHECK(c.max_len == 9);
  CHECK(c.title_mode == TitleMode::kForce);
  CHECK(c.emit_mode == EmitMode::kTobi);
  CHECK_FALSE(c.pov_tracking);
  CHECK(c.paragraph_final_bi4);
}

TEST_CASE("config errors name the line") {
  Config c = Config::Defaults();
  try {
    c.Apply("min_len = 2\nbogus = 1\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(c.Apply("min_len = two\n"), ConfigError);
  CHECK_THROWS_AS(c.Apply("emit_mode = pdf\n"), ConfigError);
  CHECK_THROWS_AS(c.Apply("no equals sign\n"), ConfigError);
}

TEST_CASE("config validation") {
  Config c = Config::Defaults();
  c.min_len = 5;
  c.max_len = 3;
  CHECK_THROWS_AS(c.Validate(), ConfigError);
  c = Config::Defaults();
  c.min_len = 0;
  CHECK_THROWS_AS(c.Validate(), ConfigError);
  c = Config::Defaults();
  c.phonetic = "/nonexistent/phon.tsv";
  CHECK_THROWS_AS(c.Validate(), ConfigError);
}

TEST_CASE("relative lexicon paths resolve against the config file") {
  TempDir dir;
  dir.Write("mine.tsv", "hue\thUW\n");
  const std::string conf = dir.Write("x.conf", "phonetic = mine.tsv\n");
  const Config c = LoadConfig(conf);
  CHECK(fs::path(c.phonetic) == dir.path / "mine.tsv");
  CHECK_NOTHROW(c.Validate());
}

TEST_CASE("golden check") {
  SUBCASE("identical") { CHECK(GoldenCheck("a b\nc\n", "a b\nc\n").match); }
  SUBCASE("altered value") {
    const auto r = GoldenCheck("x [[slnc 200]] y\n", "x [[slnc 300]] y\n");
    CHECK_FALSE(r.match);
    CHECK(r.line == 1);
    CHECK(r.column == 10);
    CHECK(r.token_diff == std::vector<std::string>{"+[[slnc 200]]", "-[[slnc 300]]"});
    CHECK(r.Render().find("line 1") != std::string::npos);
  }
  SUBCASE("whitespace only") {
    const auto r = GoldenCheck("a b\n\nc\n", "a b\nc\n");
    CHECK_FALSE(r.match);
    CHECK(r.line == 2);
    CHECK(r.token_diff.empty());
  }
}

TEST_CASE("emit mode selection") {
  const auto out = testing::RunFable();
  CHECK(SelectOutput(out, EmitMode::kMarkup) == out.markup);
  CHECK(SelectOutput(out, EmitMode::kTobi) == out.tobi);
  CHECK(SelectOutput(out, EmitMode::kGroups) == out.groups_text);
  CHECK(SelectOutput(out, EmitMode::kBoth) == out.markup + "\n" + out.tobi);
}

TEST_CASE("pipeline rejects a sidecar whose spans exceed the text") {
  const std::string sidecar =
      "CLAUSE\t1\tmain/prop\texternal\tfactive\tnull\t_\tstate\tbe\tpres\tnarration\t"
      "objective\t0-50\n";
  CHECK_THROWS_AS(RunPipeline("Mice ran.", sidecar, Config::Defaults()), IntegrityError);
}

TEST_CASE("cli exit codes") {
  TempDir dir;
  const std::string text = testing::Fixture("belling_the_cat.txt");
  const std::string ann = testing::Fixture("belling_the_cat.ann");
  const std::string conf = testing::Fixture("belling_the_cat.conf");

  CHECK(Cli("--help") == 0);
  CHECK(Cli("--bogus " + text) == 1);
  CHECK(Cli(text + " --emit pdf") == 1);
  CHECK(Cli((dir.path / "missing.txt").string()) == 1);
  CHECK(Cli(text + " --config " + dir.Write("bad.conf", "max_len = 0\n")) == 1);
  CHECK(Cli(text + " --sidecar " + dir.Write("bad.ann", "CLAUSE\t1\n")) == 2);
  CHECK(Cli(text + " --sidecar " + ann + " --config " + conf) == 0);
  CHECK(Cli(text + " --sidecar " + ann + " --config " + conf + " --emit groups --check " +
            testing::Fixture("belling_the_cat.groups")) == 0);
  CHECK(Cli(text + " --sidecar " + ann + " --config " + conf + " --emit groups --check " +
            dir.Write("wrong.groups", "nothing β\n")) == 3);
}

TEST_CASE("cli writes --out atomically") {
  TempDir dir;
  const std::string out = (dir.path / "out.groups").string();
  dir.Write("out.groups", "stale\n");
  const std::string args = testing::Fixture("belling_the_cat.txt") + " --sidecar " +
                           testing::Fixture("belling_the_cat.ann") + " --config " +
                           testing::Fixture("belling_the_cat.conf") + " --emit groups --out " +
                           out;
  REQUIRE(Cli(args) == 0);
  CHECK(ReadFile(out) == testing::ReadFixture("belling_the_cat.groups"));
  CHECK_FALSE(fs::exists(out + ".tmp"));

  // A failing run leaves the previous output untouched.
  CHECK(Cli(testing::Fixture("belling_the_cat.txt") + " --sidecar " +
            dir.Write("bad.ann", "CLAUSE\t1\n") + " --out " + out) == 2);
  CHECK(ReadFile(out) == testing::ReadFixture("belling_the_cat.groups"));
}

}  // namespace
}  // namespace prosomark
