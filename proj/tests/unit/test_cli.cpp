#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

class Sandbox {
 public:
  Sandbox() {
    std::random_device rd;
    dir_ = fs::temp_directory_path() / ("catmat_cli_" + std::to_string(rd()));
    fs::create_directories(dir_);
  }
  ~Sandbox() {
    std::error_code ec;
    fs::remove_all(dir_, ec);
  }

  fs::path write(const std::string& name, const std::string& text) const {
    const auto p = dir_ / name;
    fs::create_directories(p.parent_path());
    std::ofstream(p) << text;
    return p;
  }

  fs::path path(const std::string& name) const { return dir_ / name; }

  Run run(const std::string& args, const std::string& env = "") const {
    const auto out = dir_ / "stdout.txt";
    const auto err = dir_ / "stderr.txt";
    const std::string cmd = env + (env.empty() ? "" : " ") + "\"" CATMAT_BIN "\" " + args + " > \"" +
                            out.string() + "\" 2> \"" + err.string() + "\"";
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
  }

 private:
  fs::path dir_;
};

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

}  // namespace

TEST_CASE("decide exit codes and reasons") {
  Sandbox box;
  CHECK(box.run("decide " + q(box.write("yes.txt", "1 2\n3 7\n"))).code == 0);
  const auto no = box.run("decide " + q(box.write("no.txt", "1 2\n3 6\n")));
  CHECK(no.code == 1);
  CHECK(no.out.find("7 <= 6") != std::string::npos);
  CHECK(box.run("decide " + q(box.write("ragged.txt", "1 2\n3\n"))).code == 2);
  CHECK(box.run("decide " + q(box.path("missing.txt"))).code == 2);
  CHECK(box.run("").code == 2);
  CHECK(box.run("frobnicate").code == 2);
}

TEST_CASE("decide output variants") {
  Sandbox box;
  const auto m = box.write("m.json", R"({"n": 2, "entries": [[1,2],[3,6]]})");
  const auto j = box.run("decide --json " + q(m));
  CHECK(j.code == 1);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["exists"] == false);
  CHECK(doc["reason"]["kind"] == "u-diagonal");

  const auto e = box.run("decide --explain " + q(m));
  CHECK(e.out.find("u-diagonal[0,1]") != std::string::npos);
  CHECK(box.run("decide --via-submatrices " + q(m)).code == 1);
  CHECK(box.run("decide - < " + q(m)).code == 1);
}

TEST_CASE("witness then verify") {
  Sandbox box;
  const auto m = box.write("m.txt", "1 2\n3 7\n");
  const auto cert = box.path("m.cert.json");
  CHECK(box.run("witness " + q(m) + " --out " + q(cert)).code == 0);
  REQUIRE(fs::exists(cert));
  CHECK(box.run("verify " + q(cert) + " " + q(m)).code == 0);

  const auto other = box.write("other.txt", "1 2\n3 8\n");
  const auto bad = box.run("verify " + q(cert) + " " + q(other));
  CHECK(bad.code == 1);
  CHECK(bad.out.find("cardinality") != std::string::npos);

  const auto text = slurp(cert);
  const auto cut = box.write("cut.json", text.substr(0, text.size() / 2));
  CHECK(box.run("verify " + q(cut) + " " + q(m)).code == 2);

  CHECK(box.run("witness " + q(m), "CATMAT_TRIPLE_BUDGET=1").code == 2);
  CHECK(box.run("witness " + q(box.write("no.txt", "1 2\n3 6\n"))).code == 1);

  const auto to_stdout = box.run("witness " + q(m));
  CHECK(to_stdout.code == 0);
  CHECK(nlohmann::json::parse(to_stdout.out).contains("table"));
}

TEST_CASE("oracle and report") {
  Sandbox box;
  const auto m = box.write("m.txt", "1 2\n3 7\n");
  CHECK(box.run("oracle " + q(m)).code == 0);
  CHECK(box.run("oracle --budget 1 " + q(m)).code == 3);
  CHECK(box.run("oracle " + q(box.write("no.txt", "1 2\n1 1\n"))).code == 1);

  const auto r = box.run("report " + q(box.write("dup.txt", "1 1 2\n1 1 2\n0 0 3\n")));
  CHECK(r.code == 0);
  CHECK(r.out.find("class_of: [0,0,1]") != std::string::npos);
  CHECK(r.out.find("EXISTS") != std::string::npos);
}

TEST_CASE("batch mode") {
  Sandbox box;
  box.write("in/a.txt", "1 2\n3 7\n");
  box.write("in/b.txt", "1 2\n3 6\n");
  const auto r = box.run("decide --batch " + q(box.path("in")));
  CHECK(r.code == 1);
  CHECK(r.out.find("a.txt: EXISTS") != std::string::npos);
  CHECK(r.out.find("b.txt: DOES NOT EXIST") != std::string::npos);

  const auto j = box.run("decide --json --batch " + q(box.path("in")));
  const auto doc = nlohmann::json::parse(j.out);
  REQUIRE(doc.size() == 2);
  CHECK(doc[0]["exit"] == 0);
  CHECK(doc[1]["exit"] == 1);

  box.write("in/c.txt", "oops\n");
  CHECK(box.run("decide --batch " + q(box.path("in"))).code == 2);

  CHECK(box.run("witness --batch " + q(box.path("in")) + " --out " + q(box.path("certs"))).code ==
        2);
  CHECK(fs::exists(box.path("certs/a.cert.json")));
  CHECK_FALSE(fs::exists(box.path("certs/b.cert.json")));
}
