// Runs the command-line tool and checks exit codes and JSON output.

#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using json   = nlohmann::json;

namespace {

  struct Result {
    int         code = -1;
    std::string out;
  };

  struct ScratchDir {
    fs::path path = fs::temp_directory_path() / ("epichain_cli_" + std::to_string(::getpid()));
    ScratchDir() {
      fs::create_directories(path);
    }
    ~ScratchDir() {
      std::error_code ec;
      fs::remove_all(path, ec);
    }
  };

  fs::path scratch() {
    static ScratchDir const dir;
    return dir.path;
  }

  fs::path write(std::string const& name, std::string const& content) {
    auto const path = scratch() / name;
    std::ofstream(path) << content;
    return path;
  }

  std::string slurp(fs::path const& path) {
    std::ifstream      in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  Result run(std::string const& args) {
    auto const out = scratch() / "stdout.txt";
    auto const cmd = std::string(EPICHAIN_CLI) + " " + args + " > " + out.string() + " 2> /dev/null";
    int const  raw = std::system(cmd.c_str());
    return Result{WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out)};
  }

  json run_json(std::string const& args, int expected_code) {
    auto r = run(args);
    REQUIRE(r.code == expected_code);
    return json::parse(r.out);
  }

  std::string const kN5 = R"({"size": 5, "leq": [[0,1],[1,3],[3,4],[0,2],[2,4]], "labels": ["0","a","b","c","1"]})";

}  // namespace

TEST_CASE("applicable") {
  auto j = run_json("applicable xx abab", 0);
  CHECK(j["substitution"]["x"] == "ab");
  CHECK(run_json("applicable xx aba", 1)["applicable"] == false);
  CHECK(run("applicable xy a").code == 1);
  CHECK(run("applicable xA a").code == 2);
  CHECK(run("applicable --budget 3 xyxzx abacbcabacbabcbac").code == 3);
  CHECK(run("--budget 1000000 applicable xx abab").code == 0);
}

TEST_CASE("squarefree") {
  CHECK(run_json("squarefree check abcbc", 1)["square"]["root"] == "bc");
  CHECK(run("squarefree check abcacb").code == 0);
  CHECK(run_json("squarefree list --alphabet 2 --max-len 10", 0)["count"] == 6);
}

TEST_CASE("family") {
  auto const fam = scratch() / "fam.json";
  auto       j   = run_json("family generate 12 --out " + fam.string(), 0);
  CHECK(j["family"].size() == 12);
  CHECK(j["certificate"]["checked_pairs"] == 132);
  CHECK(run_json("family verify " + fam.string(), 0)["valid"] == true);

  auto const dup = write("dup.json", R"([{"index": "0/1", "word": "abcacb"}, {"index": "1/1", "word": "abcacb"}])");
  auto       d   = run_json("family verify " + dup.string(), 1);
  CHECK(d["kind"] == "applicable");
  CHECK(d["witness"]["substitution"]["a"] == "a");

  CHECK(run("family generate 6 --min-length 5 --max-length 12").code == 3);
  CHECK(run("family verify " + (scratch() / "missing.json").string()).code == 2);
}

TEST_CASE("variety") {
  auto const fam = scratch() / "fam59.json";
  REQUIRE(run("family generate 59 --out " + fam.string()).code == 0);
  auto c = run_json("variety compare C:1:0 C:1:1 --pool=-2..2/4 --family " + fam.string(), 0);
  CHECK(c["verdict"] == "a-strictly-below");
  CHECK(c["witnesses"]["a_only"].is_string());
  CHECK(c["witnesses"]["b_only"].is_null());

  auto a = run_json("variety compare A:1:0 A:1:1 --pool=-2..2/4 --family " + fam.string(), 0);
  CHECK(a["verdict"] == "incomparable");
  CHECK(a["witnesses"]["a_only"].is_string());
  CHECK(a["witnesses"]["b_only"].is_string());

  // Without --family the members are generated for the pool.
  CHECK(run_json("variety compare C:2:-1/2 C:2:1/2 --pool=-1..1/2", 0)["verdict"] == "a-strictly-below");

  auto const spec = write("spec.json", R"({"kind": "C", "n": 1, "xi": "0/1", "pool": ["0/1", "5/1"]})");
  auto const small = scratch() / "fam3.json";
  REQUIRE(run("family generate 3 --out " + small.string()).code == 0);
  CHECK(run_json("variety build " + spec.string() + " --family " + small.string(), 2)["error"]
        == "missing-family-member");
  CHECK(run("variety build C:1:0").code == 2);

  auto f = run_json("variety free-object --gens xx --alphabet 2 --max-len 3", 0);
  CHECK(f["words"] == json::array({"a", "b", "ab", "ba", "aba", "bab"}));
}

TEST_CASE("lattice") {
  auto const n5 = write("n5.json", kN5);
  auto       a  = run_json("lattice analyze " + n5.string(), 0);
  CHECK(a["lower_modular"] == json::array({"0", "b", "c", "1"}));

  auto l = run_json("lattice check-lemmas --eq 4", 0);
  CHECK(l["all_pass"] == true);
  CHECK(l["vv_proposition"]["partitions_checked"] == 15);
  CHECK(run_json("lattice check-lemmas " + n5.string(), 0)["mutation_witness"] == json::array({"a", "c", "b"}));

  auto dot = run("lattice dot " + n5.string());
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("digraph lattice {", 0) == 0);

  CHECK(run_json("lattice eqlattice 3", 0)["size"] == 5);
  CHECK(run("lattice eqlattice 9").code == 2);

  auto const vee = write("vee.json", R"({"size": 3, "leq": [[0,1],[0,2]]})");
  CHECK(run_json("lattice analyze " + vee.string(), 2)["error"] == "not-a-lattice");
}

TEST_CASE("epigroup") {
  auto const c3 = write("c3.json", R"({"order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]]})");
  auto       g  = run_json("epigroup analyze " + c3.string(), 0);
  CHECK(g["structure"]["index"] == 1);
  CHECK(g["E_n"][0]["holds"] == true);

  auto const null2 = write("null2.json", R"({"order": 2, "table": [[0,0],[0,0]]})");
  auto       z     = run_json("epigroup analyze " + null2.string(), 0);
  CHECK(z["structure"]["index"] == 2);
  CHECK(z["E_n"][0]["holds"] == false);
  CHECK(z["E_n"][0]["identities"][3]["counterexample"]["x"] == 1);
  CHECK(z["E_n"][1]["holds"] == true);
  CHECK(run("epigroup analyze " + null2.string() + " --n 1").code == 1);
  CHECK(run("epigroup analyze " + null2.string() + " --n 2 --pseudo-inverse 0,1").code == 1);
  CHECK(run("epigroup analyze " + null2.string() + " --n 2 --pseudo-inverse 0,0").code == 0);

  auto const bad = write("bad.json", R"({"order": 2, "table": [[1,0],[0,0]]})");
  auto       b   = run_json("epigroup analyze " + bad.string(), 2);
  CHECK(b["error"] == "not-associative");
  CHECK(b["triple"].size() == 3);

  auto s = run_json("epigroup scan", 0);
  CHECK(s["failures"] == 0);
  CHECK(s["orders"][2]["semigroups"] == 113);
}

TEST_CASE("json-out writes a manifest and reruns reproduce it") {
  auto const null2 = write("null2m.json", R"({"order": 2, "table": [[0,0],[0,0]]})");
  auto const out1  = scratch() / "r1.json";
  auto const out2  = scratch() / "r2.json";
  REQUIRE(run("--json-out " + out1.string() + " epigroup analyze " + null2.string()).code == 0);
  REQUIRE(run("epigroup analyze " + null2.string() + " --json-out " + out2.string()).code == 0);
  CHECK(slurp(out1) == slurp(out2));

  auto const m = json::parse(slurp(fs::path(out1.string() + ".manifest.json")));
  CHECK(m["subcommand"] == "epigroup analyze");
  CHECK(m["inputs"][0]["fnv1a64"].get<std::string>().size() == 16);
  CHECK(m["outputs"][0] == out1.string());
  CHECK(m["tool_version"].is_string());
  CHECK(m["exit_code"] == 0);
}
