#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "catenary/report.hpp"
#include "catenary/script.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome cli(const std::string& script, const std::string& flags = "") {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path() / ("catenary_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string stem = std::to_string(counter++);
  const fs::path in = dir / (stem + ".cat");
  const fs::path out = dir / (stem + ".out");
  const fs::path err = dir / (stem + ".err");
  std::ofstream(in) << script;
  const std::string cmd = std::string(CATENARY_CLI_PATH) + " " + flags + " '" + in.string() +
                          "' > '" + out.string() + "' 2> '" + err.string() + "'";
  const int status = std::system(cmd.c_str());
  Outcome r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

/// What the library itself says about a script: 0 when it parses and every
/// command executes.
bool library_accepts(const std::string& text) {
  try {
    auto script = catenary::parse(text);
    for (const auto* c : script.commands()) catenary::execute(*c);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

TEST(Cli, AnalyzesTheDomainExample) {
  Outcome r = cli("ring Q[x,y,z,v]\nideal I = intersect((x),(y,z))\nanalyze I\n");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("noncat_domain"), std::string::npos);
}

TEST(Cli, JsonAndDotFormats) {
  Outcome j = cli("family example_domain", "--format json");
  EXPECT_EQ(j.code, 0) << j.err;
  EXPECT_EQ(j.out.front(), '{');
  Outcome d = cli("family example_ufd(2,2)\nchain example_ufd from (y1,y2)\n", "--format dot");
  EXPECT_EQ(d.code, 0) << d.err;
  EXPECT_NE(d.out.find("digraph"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("ideal I = (x)").code, 1);
  EXPECT_EQ(cli("ring Q[x] ideal I = (x $)").code, 1);
  EXPECT_EQ(cli("family example_ufd(1,1)").code, 1);
  EXPECT_EQ(cli("ring Q[x,y] ideal I = (x^2 - y^3) poset I").code, 2);
  EXPECT_EQ(cli("ring Q[x,y] ideal I = (x - 1) analyze I").code, 2);
  EXPECT_EQ(cli("ring Q[x,y,z] ideal I = (x^3 - y*z, y^3 - x*z, z^3 - x*y) analyze I",
                "--budget-gb-steps 3").code, 3);
  EXPECT_EQ(cli("family example_domain", "--format yaml").code, 1);
  EXPECT_EQ(cli("family example_domain", "--max-poset-vars 0").code, 1);
}

TEST(Cli, ParseErrorsNamePosition) {
  Outcome r = cli("ring Q[x]\nideal I = (y)\n");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("2:12"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("unknown-variable"), std::string::npos) << r.err;
}

TEST(Cli, PartialResultsSurviveLaterErrors) {
  Outcome r = cli("ring Q[x,y] ideal I = (x*y) profile I ideal J = (x^2 - y^3) poset J", "--format json");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("profile"), std::string::npos);
}

TEST(Cli, LexOrderFlag) {
  Outcome r = cli("ring Q[x,y,z] ideal I = (x - y, y - z) analyze I", "--order lex --format json");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"lex\""), std::string::npos);
}

TEST(Cli, FuzzedInvalidInputsNeverExitZero) {
  const std::vector<std::string> seeds{
      "ring Q[x,y,z,v]\nideal I = intersect((x),(y,z))\nanalyze I\n",
      "family example_ufd(2,3)\nchain example_ufd from (y1, y2)\n",
      "ring F 7[a,b]\nideal J = (a^2*b - 3a, b^2)\nprofile J\n",
  };
  const std::string alphabet = "()[],=+-*/^;#$%&@!x y1 0 9 \n ring ideal F Q intersect from family";
  std::mt19937 rng(404);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  int invalid = 0;
  for (int round = 0; round < 300 && invalid < 120; ++round) {
    std::string s = seeds[pick(seeds.size())];
    const int edits = 1 + static_cast<int>(pick(3));
    for (int e = 0; e < edits; ++e) {
      const std::size_t at = pick(s.size());
      switch (pick(3)) {
        case 0: s.erase(at, 1 + pick(3)); break;
        case 1: s.insert(at, 1, alphabet[pick(alphabet.size())]); break;
        default: s[at] = alphabet[pick(alphabet.size())]; break;
      }
    }
    if (library_accepts(s)) continue;
    ++invalid;
    Outcome r = cli(s);
    EXPECT_NE(r.code, 0) << s;
  }
  EXPECT_GT(invalid, 50);
}
