// End-to-end checks of the mmg binary: spawns the real executable (path in
// argv[1]), captures stdout/stderr/exit status and checks the documented
// contracts, including the 0/1/2/3 exit-code scheme.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

std::string g_mmg;
fs::path g_scratch;
int g_failures = 0;

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

RunResult run(const std::string& args) {
    const fs::path out_path = g_scratch / "stdout.txt";
    const fs::path err_path = g_scratch / "stderr.txt";
    const std::string cmd =
        g_mmg + " " + args + " > " + out_path.string() + " 2> " + err_path.string();
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    return result;
}

void check(bool ok, const std::string& what) {
    if (ok) {
        std::cout << "ok: " << what << "\n";
    } else {
        ++g_failures;
        std::cout << "FAILED: " << what << "\n";
    }
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_driver <path-to-mmg>\n";
        return 2;
    }
    g_mmg = argv[1];
    g_scratch = fs::temp_directory_path() / ("mmg_cli_test_" + std::to_string(getpid()));
    fs::create_directories(g_scratch);

    const std::string g50 = (g_scratch / "g50.mg1").string();

    {
        const auto r = run("gen --family gqt --q 5 --t 0 --out " + g50);
        check(r.code == 0, "gen gqt q=5 exits 0");
        check(contains(r.out, "r=5 z=2"), "gen summary reports r=5 z=2");
        check(contains(r.out, "M={1,2}"), "gen summary prints the shift sets");
        check(contains(slurp(g50), "mg1 50 125 100"), "gen wrote a 50-vertex mg1 file");
    }
    {
        const auto r = run("verify --in " + g50 +
                           " --expect-diameter 2 --expect-z 2 --expect-r 5 --expect-order 50 "
                           "--threads 4");
        check(r.code == 0, "verify with matching expectations exits 0");
        check(contains(r.out, "PASS"), "verify prints PASS");
        check(contains(r.out, "diameter=2"), "verify recomputes the diameter");
    }
    {
        const auto r = run("verify --in " + g50 + " --expect-diameter 3");
        check(r.code == 1, "verify mismatch exits 1");
        check(contains(r.out, "FAIL"), "verify mismatch prints FAIL");
    }
    {
        const auto r = run("gen --family gqt --q 4 --t 0");
        check(r.code == 2, "gen with even q exits 2");
        check(contains(r.err, "EvenQ"), "gen reports EvenQ");
    }
    {
        const auto r = run("gen --family gqt --q 12 --t 0");
        check(r.code == 2, "gen with q=12 exits 2");
        check(contains(r.err, "NotPrimePower"), "gen reports NotPrimePower");
    }
    {
        const auto r = run("gen --family gqt --q 7 --t 2");
        check(r.code == 2, "gen with t out of range exits 2");
        check(contains(r.err, "TOutOfRange"), "gen reports TOutOfRange");
    }
    {
        const auto r = run("verify --in " + (g_scratch / "missing.mg1").string());
        check(r.code == 3, "verify on a missing file exits 3");
    }
    {
        const fs::path bad = g_scratch / "bad.mg1";
        std::ofstream(bad) << "mg1 5 9 0\nN 0\n";
        const auto r = run("verify --in " + bad.string());
        check(r.code == 2, "verify on a truncated file exits 2");
        check(contains(r.err, "MalformedFile"), "verify reports MalformedFile");
    }
    {
        const auto r = run("bounds --z 2 --r 5");
        check(r.code == 0, "bounds exits 0");
        check(contains(r.out, "52 -> 51 (Bosak) -> 50 (parity)"), "bounds prints the audit chain");
    }
    {
        const auto r = run("bounds --z 2 --r 5 --csv");
        check(contains(r.out, "z,r,moore,after_bosak,after_parity"), "bounds --csv header");
        check(contains(r.out, "2,5,52,51,50"), "bounds --csv row");
    }
    {
        const auto r = run("bounds --z 3 --r 7");
        check(contains(r.out, "104 -> 103 (Bosak) -> 102 (parity)"),
              "bounds chain for (3,7) lands on 102");
    }
    {
        const auto r = run("table --max-n 20 --csv");
        check(r.code == 0, "table exits 0");
        check(contains(r.out, "n,d,z,r,status"), "table --csv header");
        check(contains(r.out, "18,4,1,3,Bosak graph"), "table --csv contains the order-18 row");
        check(contains(r.out, "6,2,1,1,Ka(2,2)"), "table --csv contains the order-6 row");
    }
    {
        const auto r = run("table --max-n 200");
        check(contains(r.out, "Hoffman-Singleton graph"), "table text names witnesses");
        check(contains(r.out, "Jorgensen graph"), "table text includes the order-108 row");
    }
    {
        const auto r = run("certify --q 3");
        check(r.code == 0, "certify exits 0");
        check(contains(r.out, "18/18 targets certified"), "certify covers all 18 targets");
        check(contains(r.out, "0 id"), "certify lists the identity for the base vertex");
    }
    {
        const auto r = run("orbits --family gqt --q 3 --t 0");
        check(r.code == 0, "orbits exits 0");
        check(contains(r.out, "cells=1"), "orbits reports one refinement cell for G_3");
    }
    {
        const fs::path dot = g_scratch / "g50.dot";
        const auto r = run("export --in " + g50 + " --format dot --out " + dot.string());
        check(r.code == 0, "export to dot exits 0");
        check(contains(slurp(dot), "digraph"), "dot output starts a digraph");
        check(contains(slurp(dot), "[dir=none]"), "dot output renders edges undirected");
    }
    {
        const fs::path copy = g_scratch / "copy.mg1";
        const auto r = run("export --in " + g50 + " --format mg1 --out " + copy.string());
        check(r.code == 0, "export to mg1 exits 0");
        check(slurp(copy) == slurp(g50), "mg1 -> mg1 export is byte-identical");
    }
    {
        const fs::path rand_path = g_scratch / "rand.mg1";
        const auto r = run("gen --family gqt --q 7 --t 1 --random-shifts --seed 9 --out " +
                           rand_path.string());
        check(r.code == 0, "gen with random shifts exits 0");
        const auto v = run("verify --in " + rand_path.string() +
                           " --expect-diameter 2 --expect-z 1 --expect-r 9 --expect-order 98");
        check(v.code == 0, "random-shift graph keeps the (q,t) parameters");
    }
    {
        const fs::path b3 = g_scratch / "b3.mg1";
        run("gen --family biaffine --q 3 --out " + b3.string());
        const auto r = run("verify --in " + b3.string() + " --expect-diameter 4 --expect-z 0 "
                           "--expect-r 3");
        check(r.code == 0, "biaffine graph verifies with diameter 4");
    }
    {
        const fs::path g70 = g_scratch / "g70.mg1";
        run("gen --family gqt --q 7 --t 0 --out " + g70.string());
        const auto r = run("verify --in " + g70.string() +
                           " --expect-diameter 2 --expect-z 3 --expect-r 7");
        check(r.code == 0, "G_{7,0} verifies with diameter 2, z=3, r=7");
    }
    {
        const fs::path b5 = g_scratch / "b5.mg1";
        run("gen --family biaffine --q 5 --out " + b5.string());
        const auto r = run("verify --in " + b5.string() + " --expect-diameter 2");
        check(r.code == 1, "B_5 against expected diameter 2 exits 1");
        check(contains(r.out, "expected 2, got 4"), "verify names the diameter mismatch");
    }
    {
        const fs::path k4 = g_scratch / "k4.mg1";
        const auto g = run("gen --family kautz --d 4 --out " + k4.string());
        check(contains(g.out, "order=20"), "kautz d=4 has 20 vertices");
        const auto r = run("verify --in " + k4.string() + " --expect-moore 1");
        check(r.code == 0, "kautz d=4 verifies as mixed Moore");
    }
    {
        const auto r = run("nonsense");
        check(r.code == 2, "unknown subcommand exits 2");
    }

    fs::remove_all(g_scratch);
    if (g_failures == 0) {
        std::cout << "all cli checks passed\n";
        return 0;
    }
    std::cout << g_failures << " cli checks failed\n";
    return 1;
}
