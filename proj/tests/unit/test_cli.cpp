#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

namespace fs = std::filesystem;

namespace {

const char* kCli = NSC_CLI_PATH;

struct CliResult {
  int exit_code;
  std::string output;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path temp_dir() {
  const fs::path dir = fs::path("cli_tmp");
  fs::create_directories(dir);
  return dir;
}

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path capture = temp_dir() / ("capture_" + std::to_string(counter++) + ".txt");
  const std::string cmd = std::string(kCli) + " " + args + " > " + capture.string() + " 2>&1";
  const int raw = std::system(cmd.c_str());
  return {WEXITSTATUS(raw), slurp(capture)};
}

fs::path write_probabilities(const std::string& name, const std::string& contents) {
  const fs::path path = temp_dir() / name;
  std::ofstream out(path, std::ios::binary);
  out << contents;
  return path;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::string token;
  std::istringstream ss(line);
  while (std::getline(ss, token, sep)) parts.push_back(token);
  return parts;
}

}  // namespace

TEST_CASE("entropy command computes and reports") {
  const auto file = write_probabilities("uniform2.txt", "0.5\n0.5\n");
  const auto r = run_cli("entropy --input " + file.string() + " --kind shannon");
  CHECK(r.exit_code == 0);
  const auto lines = split(r.output, '\n');
  REQUIRE(lines.size() >= 2);
  const auto fields = split(lines[1], ',');
  REQUIRE(fields.size() == 6);
  CHECK(std::stod(fields[4]) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::stod(fields[5]) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("entropy command with coupling and comments in the input") {
  const auto file = write_probabilities("three.txt", "# three states\n0.5\n0.3 # inline\n\n0.2\n");
  const auto r = run_cli("entropy --input " + file.string() + " --kind coupled --alpha 1 --kappa 1");
  CHECK(r.exit_code == 0);
  const auto fields = split(split(r.output, '\n')[1], ',');
  CHECK(std::stod(fields[3]) == doctest::Approx(0.5).epsilon(1e-12));                // moment
  CHECK(std::stod(fields[4]) == doctest::Approx(0.3688289305029882).epsilon(1e-12));  // P_avg
  CHECK(std::stod(fields[5]) == doctest::Approx(0.6465977224633543).epsilon(1e-12));
}

TEST_CASE("entropy command exit codes") {
  const auto unnormalized = write_probabilities("unnormalized.txt", "0.5\n0.6\n");
  CHECK(run_cli("entropy --input " + unnormalized.string()).exit_code == 3);
  CHECK(run_cli("entropy --input " + unnormalized.string() + " --renormalize").exit_code == 0);

  const auto garbage = write_probabilities("garbage.txt", "0.5\nnot-a-number\n");
  CHECK(run_cli("entropy --input " + garbage.string()).exit_code == 2);

  const auto negative = write_probabilities("negative.txt", "0.5\n-0.5\n1.0\n");
  CHECK(run_cli("entropy --input " + negative.string()).exit_code == 2);

  CHECK(run_cli("entropy --input cli_tmp/absent.txt").exit_code == 2);
  CHECK(run_cli("entropy --input " + unnormalized.string() + " --renormalize --kind nope")
            .exit_code == 2);
}

TEST_CASE("sample command is byte-deterministic and embeds its manifest") {
  const fs::path a = temp_dir() / "sample_a.csv";
  const fs::path b = temp_dir() / "sample_b.csv";
  CHECK(run_cli("sample --alpha 1 --kappa 0.5 --sigma 2 --n 64 --seed 9 --output " + a.string())
            .exit_code == 0);
  CHECK(run_cli("sample --alpha 1 --kappa 0.5 --sigma 2 --n 64 --seed 9 --output " + b.string())
            .exit_code == 0);
  // The manifests embed their own output paths; everything after them must
  // be byte-identical.
  const std::string data_a = slurp(a).substr(slurp(a).find('\n') + 1);
  const std::string data_b = slurp(b).substr(slurp(b).find('\n') + 1);
  CHECK(data_a == data_b);

  // Re-running the embedded manifest reproduces the file byte for byte.
  const std::string first_line = split(slurp(a), '\n')[0];
  const std::string prefix = "# manifest: nsc ";
  REQUIRE(first_line.rfind(prefix, 0) == 0);
  const std::string saved = slurp(a);
  const auto rerun = run_cli(first_line.substr(prefix.size()));
  CHECK(rerun.exit_code == 0);
  CHECK(slurp(a) == saved);

  CHECK(run_cli("sample --alpha 2 --kappa -0.2 --n 4").exit_code == 2);
}

TEST_CASE("sweep command writes manifest-led CSV that round-trips") {
  const fs::path out = temp_dir() / "fig3_small.csv";
  const auto r = run_cli("sweep --figure 3 --sigma 1 --kappa-step 0.5 --output " + out.string());
  CHECK(r.exit_code == 0);

  const std::string contents = slurp(out);
  const auto lines = split(contents, '\n');
  REQUIRE(lines.size() > 3);
  CHECK(lines[0].rfind("# manifest: nsc sweep", 0) == 0);
  CHECK(lines[2] == "alpha,sigma,kappa,kind,entropy");

  // Matched coupled entropy of the alpha = 1 family at sigma = 1 is flat 1.
  for (const auto& line : lines) {
    if (line.find(",coupled,") == std::string::npos) continue;
    const auto fields = split(line, ',');
    if (std::stod(fields[2]) == 0.0) continue;
    CHECK(std::stod(fields[4]) == doctest::Approx(1.0).epsilon(1e-10));
  }

  const auto rerun = run_cli(lines[0].substr(std::string("# manifest: nsc ").size()));
  CHECK(rerun.exit_code == 0);
  CHECK(slurp(out) == contents);
}

TEST_CASE("density sweep contains the expected spot values") {
  const fs::path out = temp_dir() / "fig1.csv";
  REQUIRE(run_cli("sweep --figure 1 --output " + out.string()).exit_code == 0);
  bool found = false;
  for (const auto& line : split(slurp(out), '\n')) {
    const auto fields = split(line, ',');
    if (fields.size() == 5 && fields[0] == "1" && fields[1] == "1" && fields[2] == "1" &&
        fields[3] == "1") {
      CHECK(std::stod(fields[4]) == doctest::Approx(0.25).epsilon(1e-14));
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("verify command exit codes") {
  CHECK(run_cli("verify --suite lemma2").exit_code == 0);
  CHECK(run_cli("verify --suite nonsense").exit_code == 2);
}
