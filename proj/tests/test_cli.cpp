#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args, const std::string& capture = "/dev/null") {
    std::string cmd = std::string(ENCLOSE_CLI_PATH) + " " + args + " >" + capture + " 2>&1";
    int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    REQUIRE(WIFEXITED(rc));
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

struct TempDir {
    fs::path p;
    explicit TempDir(const std::string& name) : p(fs::temp_directory_path() / name) {
        fs::remove_all(p);
        fs::create_directories(p);
    }
    ~TempDir() { fs::remove_all(p); }
    std::string operator/(const std::string& f) const { return (p / f).string(); }
};

const char* t1_text =
    R"({"kind":"segments","points":[[4,2]],"obstacles":[{"a":[0,0],"b":[8,0]},{"a":[8,0],"b":[4,6]},{"a":[4,6],"b":[0,0]}]})";

size_t count_of(const std::string& hay, const std::string& needle) {
    size_t n = 0;
    for (size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++n;
    return n;
}

} // namespace

TEST_CASE("gen is byte-deterministic per seed") {
    TempDir d("enclose_cli_gen");
    REQUIRE(run_cli("gen --kind unit_disks --structure ring --obstacles 6 --points 1 --seed 42 --out " +
                    (d / "a.json")) == 0);
    REQUIRE(run_cli("gen --kind unit_disks --structure ring --obstacles 6 --points 1 --seed 42 --out " +
                    (d / "b.json")) == 0);
    REQUIRE(run_cli("gen --kind unit_disks --structure ring --obstacles 6 --points 1 --seed 43 --out " +
                    (d / "c.json")) == 0);
    REQUIRE(slurp(d / "a.json") == slurp(d / "b.json"));
    REQUIRE(slurp(d / "a.json") != slurp(d / "c.json"));
}

TEST_CASE("mincut solves a disk ring and the checker accepts it") {
    TempDir d("enclose_cli_mincut");
    REQUIRE(run_cli("gen --kind unit_disks --structure ring --obstacles 6 --points 1 --seed 42 --out " +
                    (d / "h6.json")) == 0);
    REQUIRE(run_cli("solve --in " + (d / "h6.json") + " --method mincut --out " + (d / "sol.json")) ==
            0);
    auto j = nlohmann::json::parse(slurp(d / "sol.json"));
    REQUIRE(j["method"] == "mincut");
    REQUIRE(j["selected"] == nlohmann::json::array({0, 1, 2, 3, 4, 5}));
    REQUIRE(run_cli("check --in " + (d / "h6.json") + " --solution " + (d / "sol.json"),
                    d / "verdicts.txt") == 0);
    REQUIRE(slurp(d / "verdicts.txt").find(": enclosed") != std::string::npos);

    REQUIRE(run_cli("solve --in " + (d / "h6.json") + " --method exact --out " + (d / "ex.json")) ==
            0);
    REQUIRE(nlohmann::json::parse(slurp(d / "ex.json"))["objective"] == 6);
}

TEST_CASE("lp solves the triangle and incompatible methods are refused") {
    TempDir d("enclose_cli_lp");
    spit(d.p / "t1.json", t1_text);
    REQUIRE(run_cli("solve --in " + (d / "t1.json") + " --method lp --seed 7 --out " +
                    (d / "sol.json")) == 0);
    auto j = nlohmann::json::parse(slurp(d / "sol.json"));
    REQUIRE(j["selected"] == nlohmann::json::array({0, 1, 2}));
    REQUIRE(j["objective"] == 3);
    REQUIRE(j.contains("attempts"));
    REQUIRE(j["seed"] == 7);

    REQUIRE(run_cli("solve --in " + (d / "t1.json") + " --method mincut") == 2);
}

TEST_CASE("solve is byte-deterministic for a fixed seed") {
    TempDir d("enclose_cli_det");
    spit(d.p / "t1.json", t1_text);
    REQUIRE(run_cli("solve --in " + (d / "t1.json") + " --method lp --seed 5 --out " +
                    (d / "a.json")) == 0);
    REQUIRE(run_cli("solve --in " + (d / "t1.json") + " --method lp --seed 5 --out " +
                    (d / "b.json")) == 0);
    REQUIRE(slurp(d / "a.json") == slurp(d / "b.json"));
}

TEST_CASE("check rejects short solutions and malformed files") {
    TempDir d("enclose_cli_check");
    REQUIRE(run_cli("gen --kind unit_disks --structure ring --obstacles 6 --points 1 --seed 1 --out " +
                    (d / "h6.json")) == 0);
    spit(d.p / "five.json", R"({"selected":[0,1,2,3,4],"method":"exact","objective":5})");
    REQUIRE(run_cli("check --in " + (d / "h6.json") + " --solution " + (d / "five.json"),
                    d / "out.txt") == 1);
    REQUIRE(slurp(d / "out.txt").find("not enclosed") != std::string::npos);

    spit(d.p / "bad.json", "{{{");
    REQUIRE(run_cli("check --in " + (d / "bad.json") + " --solution " + (d / "five.json")) == 2);
    spit(d.p / "oob.json", R"({"selected":[0,7],"method":"exact","objective":2})");
    REQUIRE(run_cli("check --in " + (d / "h6.json") + " --solution " + (d / "oob.json")) == 2);
}

TEST_CASE("solve names an unenclosable point on infeasible input") {
    TempDir d("enclose_cli_infeasible");
    spit(d.p / "far.json",
         R"({"kind":"unit_disks","points":[[50,50]],"obstacles":[{"center":[0,0]},{"center":["3/2",0]}]})");
    REQUIRE(run_cli("solve --in " + (d / "far.json") + " --method mincut", d / "err.txt") == 1);
    std::string err = slurp(d / "err.txt");
    REQUIRE(err.find("point 0") != std::string::npos);
    REQUIRE(err.find("(50, 50)") != std::string::npos);
}

TEST_CASE("render highlights the selection and labels the points") {
    TempDir d("enclose_cli_render");
    REQUIRE(run_cli("gen --kind unit_disks --structure ring --obstacles 6 --points 1 --seed 42 --out " +
                    (d / "h6.json")) == 0);
    REQUIRE(run_cli("solve --in " + (d / "h6.json") + " --method mincut --out " + (d / "sol.json")) ==
            0);
    REQUIRE(run_cli("render --in " + (d / "h6.json") + " --solution " + (d / "sol.json") +
                    " --out " + (d / "with.svg")) == 0);
    std::string svg = slurp(d / "with.svg");
    REQUIRE(count_of(svg, "class=\"obs sel\"") == 6);
    REQUIRE(svg.find(">enclosed</text>") != std::string::npos);

    REQUIRE(run_cli("render --in " + (d / "h6.json") + " --out " + (d / "plain.svg")) == 0);
    REQUIRE(count_of(slurp(d / "plain.svg"), " sel") == 0);

    REQUIRE(run_cli("render --in " + (d / "sol.json") + " --out " + (d / "x.svg")) == 2);
}

TEST_CASE("bench reports ratios and tolerates junk and empty directories") {
    TempDir d("enclose_cli_bench");
    fs::create_directories(d.p / "suite");
    auto suite = [&](const std::string& f) { return (d.p / "suite" / f).string(); };
    REQUIRE(run_cli("gen --kind unit_disks --structure ring --obstacles 6 --points 1 --seed 2 --out " +
                    suite("a.json")) == 0);
    REQUIRE(run_cli("gen --kind segments --structure ring --obstacles 4 --points 1 --seed 3 --out " +
                    suite("b.json")) == 0);
    spit(d.p / "suite" / "junk.json", "not json");
    spit(d.p / "suite" / "far.json",
         R"({"kind":"unit_disks","points":[[50,50]],"obstacles":[{"center":[0,0]}]})");

    REQUIRE(run_cli("bench --dir " + (d / "suite") + " --out " + (d / "report.json")) == 0);
    auto rep = nlohmann::json::parse(slurp(d / "report.json"));
    REQUIRE(rep["instances"].size() == 4);
    REQUIRE(rep["aggregate"].contains("mincut"));
    REQUIRE(rep["aggregate"].contains("lp"));
    for (const auto& m : {"mincut", "lp"}) {
        REQUIRE(rep["aggregate"][m]["max_ratio"].get<double>() >= 1.0);
        REQUIRE(rep["aggregate"][m]["median_ratio"].get<double>() >= 1.0);
    }
    bool saw_skip = false, saw_infeasible = false;
    for (const auto& row : rep["instances"]) {
        saw_skip = saw_skip || row.contains("skipped");
        saw_infeasible = saw_infeasible || (row.contains("infeasible") && row["infeasible"] == true);
        if (row.contains("ratio")) REQUIRE(row["ratio"].get<double>() >= 1.0);
    }
    REQUIRE(saw_skip);
    REQUIRE(saw_infeasible);

    fs::create_directories(d.p / "empty");
    REQUIRE(run_cli("bench --dir " + (d / "empty") + " --out " + (d / "empty.json")) == 0);
    auto emptyrep = nlohmann::json::parse(slurp(d / "empty.json"));
    REQUIRE(emptyrep["instances"].empty());
}
