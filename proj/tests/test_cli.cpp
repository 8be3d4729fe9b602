#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string bin() {
    // Environment override first (handy for manual runs), then the path baked
    // in by the build.
    if (const char* b = std::getenv("MFKIT_BIN")) return b;
#ifdef MFKIT_BIN
    return MFKIT_BIN;
#else
    REQUIRE(false);
    return {};
#endif
}

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "mfkit-cli-tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

RunResult run(const std::string& args, const std::string& env = "") {
    static int counter = 0;
    fs::path out = scratch_dir() / ("out" + std::to_string(counter) + ".txt");
    fs::path err = scratch_dir() / ("err" + std::to_string(counter) + ".txt");
    ++counter;
    std::string cmd = env + (env.empty() ? "" : " ") + bin() + " " + args + " > " +
                      out.string() + " 2> " + err.string();
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, slurp(out), slurp(err)};
}

} // namespace

TEST_CASE("catalog to build to verify to rank pipeline") {
    fs::path entry = scratch_dir() / "quadric2.json";
    RunResult cat = run("catalog quadric --s 2");
    CHECK(cat.exit_code == 0);
    spit(entry, cat.out);
    json centry = json::parse(cat.out);
    CHECK(centry["name"] == "quadric-2");
    CHECK(centry.contains("decomposition"));

    fs::path mf = scratch_dir() / "quadric2-mf.json";
    RunResult build = run("mf build --decomp " + entry.string() + " --out " + mf.string());
    CHECK(build.exit_code == 0);
    json mdoc = json::parse(slurp(mf));
    CHECK(mdoc["phi"]["entries"].size() == 4);

    RunResult ver = run("mf verify " + mf.string());
    CHECK(ver.exit_code == 0);
    json vdoc = json::parse(ver.out);
    CHECK(vdoc["ok"] == true);

    RunResult rank = run("mf mcm-rank " + mf.string());
    CHECK(rank.exit_code == 0);
    json rdoc = json::parse(rank.out);
    CHECK(rdoc["r"] == 2);
}

TEST_CASE("verification failure exits 1 with a witness") {
    RunResult cat = run("catalog quadric --s 1");
    fs::path entry = scratch_dir() / "quadric1.json";
    spit(entry, cat.out);
    fs::path mf = scratch_dir() / "quadric1-mf.json";
    REQUIRE(run("mf build --decomp " + entry.string() + " --out " + mf.string()).exit_code == 0);

    json doc = json::parse(slurp(mf));
    doc["phi"]["entries"][0][0] = "x1"; // corrupt one entry
    fs::path bad = scratch_dir() / "quadric1-bad.json";
    spit(bad, doc.dump());

    RunResult ver = run("mf verify " + bad.string());
    CHECK(ver.exit_code == 1);
    json vdoc = json::parse(ver.out);
    CHECK(vdoc["ok"] == false);
    CHECK(vdoc.contains("witness"));
}

TEST_CASE("stdin and stdout dashes") {
    fs::path poly = scratch_dir() / "cubic.txt";
    spit(poly, "z0^3 + z1^3 + z2^3\n");
    RunResult viafile = run("analyze " + poly.string());
    CHECK(viafile.exit_code == 0);

    RunResult viastdin = run("analyze - < " + poly.string());
    CHECK(viastdin.exit_code == 0);
    CHECK(viastdin.out == viafile.out);

    json doc = json::parse(viastdin.out);
    CHECK(doc["degree"] == 3);
    CHECK(doc["jacobian_codim"] == 3);
    CHECK(doc["sing_codim"] == 2);
    CHECK(doc["e"] == 0);
    CHECK(doc["strength_lower"] == 1);
}

TEST_CASE("parse errors exit 2 with a position") {
    fs::path bad = scratch_dir() / "bad.txt";
    spit(bad, "^x0");
    RunResult r = run("analyze " + bad.string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("line 1") != std::string::npos);
    CHECK(r.err.find("column 1") != std::string::npos);

    // Unknown field name is a usage problem, same exit class.
    fs::path ok = scratch_dir() / "ok.txt";
    spit(ok, "z0^2 + z1^2");
    CHECK(run("analyze --field F4 " + ok.string()).exit_code == 2);

    // Degree-1 input is a domain problem.
    fs::path lin = scratch_dir() / "lin.txt";
    spit(lin, "z0 + z1");
    CHECK(run("analyze " + lin.string()).exit_code == 2);
}

TEST_CASE("search finds, misses, and overflows") {
    fs::path quad = scratch_dir() / "quad.txt";
    spit(quad, "x0*y0 + x1*y1");

    RunResult hit = run("search --field Fp:2 --rank 2 --pattern 0,0:1,1 " + quad.string());
    CHECK(hit.exit_code == 0);
    json hdoc = json::parse(hit.out);
    CHECK(hdoc["found"].is_object());

    RunResult miss = run("search --field Fp:2 --rank 1 --pattern 0:1 " + quad.string());
    CHECK(miss.exit_code == 0);
    json mdoc = json::parse(miss.out);
    CHECK(mdoc["found"].is_null());
    CHECK(mdoc["exhaustive"] == true);
    CHECK(mdoc["candidates_tried"] == 16);

    fs::path quartic = scratch_dir() / "quartic.txt";
    spit(quartic, "z0^4 + z1^4 + z2^4 + z3^4");
    RunResult big =
        run("search --field Fp:3 --rank 2 --pattern 0,0:3,3 " + quartic.string());
    CHECK(big.exit_code == 3);

    // Pattern arity must match the rank.
    CHECK(run("search --field Fp:2 --rank 2 --pattern 0:1 " + quad.string()).exit_code == 2);
}

TEST_CASE("decomposition checks and reports") {
    RunResult cat = run("catalog quadric --s 2");
    fs::path entry = scratch_dir() / "q2.json";
    spit(entry, cat.out);

    RunResult gap = run("bgs-check --decomp " + entry.string());
    CHECK(gap.exit_code == 0);
    json doc = json::parse(gap.out);
    CHECK(doc["s_exhibited"] == 2);
    CHECK(doc["e"] == 1);
    CHECK(doc["mf_rank_upper"] == 4);
    CHECK(doc["mcm_rank_upper"] == 2);
    CHECK(doc["consistent"] == true);
}

TEST_CASE("strength certificate command") {
    fs::path a = scratch_dir() / "a.txt";
    fs::path b = scratch_dir() / "b.txt";
    spit(a, "z0^2");
    spit(b, "z1^2");
    RunResult r = run("strength cert " + a.string() + " " + b.string());
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["minors_codim"] == 1);
    CHECK(doc["certified_collective_lower"] == 0);

    fs::path lin = scratch_dir() / "linear.txt";
    spit(lin, "z0 + z1");
    RunResult inf = run("strength cert " + lin.string());
    CHECK(inf.exit_code == 0);
    CHECK(json::parse(inf.out)["certified_collective_lower"] == "infinite");
}

TEST_CASE("catalog listing and samples") {
    RunResult list = run("catalog list");
    CHECK(list.exit_code == 0);
    json names = json::parse(list.out);
    CHECK(names.is_array());
    CHECK(names.size() == 15);

    RunResult s1 = run("catalog sample --mu 1,2 --d 4 --n 5 --seed 42");
    RunResult s2 = run("catalog sample --mu 1,2 --d 4 --n 5 --seed 42");
    CHECK(s1.exit_code == 0);
    CHECK(s1.out == s2.out);

    RunResult s3 = run("catalog sample --mu 1,2 --d 4 --n 5 --seed 43");
    CHECK(s3.out != s1.out);

    // The environment override takes precedence over --seed.
    RunResult s4 = run("catalog sample --mu 1,2 --d 4 --n 5 --seed 42", "MFKIT_SEED=43");
    CHECK(s4.exit_code == 0);
    CHECK(s4.out == s3.out);

    // Bad type vector is a usage error.
    CHECK(run("catalog sample --mu 3,1 --d 4 --n 5 --seed 1").exit_code == 2);

    // Sampled decompositions feed straight back into the pipeline.  A small
    // variable count keeps the Jacobian Groebner run well under a second.
    RunResult small = run("catalog sample --mu 1,2 --d 4 --n 3 --seed 42");
    CHECK(small.exit_code == 0);
    fs::path sample = scratch_dir() / "sample.json";
    spit(sample, small.out);
    RunResult gap = run("bgs-check --decomp " + sample.string());
    CHECK(gap.exit_code == 0);
    CHECK(json::parse(gap.out)["s_exhibited"] == 1);
}

TEST_CASE("usage problems exit 2") {
    CHECK(run("no-such-command").exit_code == 2);
    CHECK(run("mf build").exit_code == 2);            // missing --decomp
    CHECK(run("catalog quadric").exit_code == 2);     // missing --s
    CHECK(run("mf verify /nonexistent.json").exit_code == 2);
    fs::path notjson = scratch_dir() / "not.json";
    spit(notjson, "{{{");
    CHECK(run("mf verify " + notjson.string()).exit_code == 2);
}

TEST_CASE("help exits 0") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("mf --help").exit_code == 0);
    CHECK(run("search --help").exit_code == 0);
}
