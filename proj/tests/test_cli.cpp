/* Drives the installed CLI binary (path in argv[1]) through each
 * subcommand and checks exit codes, key values and byte-level
 * reproducibility of the file outputs. */

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAIL: " << what << '\n';
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run(const std::string& cmd) {
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::string dir = "cli_scratch";
    run("rm -rf " + dir);
    run("mkdir -p " + dir);

    // identical configuration twice -> byte-identical files
    for (const std::string& cmdline :
         {std::string("br --prime 3 --from 1 --to 24 --format csv"),
          std::string("br --prime 5 --from 20 --to 30 --format json"),
          std::string("graph --prime 3 --from 0 --to 6 --format dot"),
          std::string("graph --prime 2 --from 0 --to 8 --format dot"),
          std::string("en --prime 3 --from 1 --to 12 --format json")}) {
        const std::string a = dir + "/a.out", b = dir + "/b.out";
        expect(run(cli + " " + cmdline + " --out " + a) == 0, cmdline + " (first run)");
        expect(run(cli + " " + cmdline + " --out " + b) == 0, cmdline + " (second run)");
        expect(!slurp(a).empty(), cmdline + " produced output");
        expect(slurp(a) == slurp(b), cmdline + " is byte-stable");
    }

    // fixed row: p = 5, n = 23 -> br 4, bound 4, epsilon 0, oracle 4
    {
        const std::string out = dir + "/row.csv";
        expect(run(cli + " br --prime 5 --from 23 --to 23 --format csv --out " + out) == 0,
               "br row 23");
        expect(slurp(out) == "n,br,upper,epsilon,oracle\n23,4,4,0,4\n", "br row 23 content");
    }

    // p = 2 columns are all 1
    {
        const std::string out = dir + "/two.csv";
        expect(run(cli + " br --prime 2 --from 1 --to 20 --format csv --out " + out) == 0,
               "br p=2");
        std::istringstream in(slurp(out));
        std::string line;
        std::getline(in, line);
        while (std::getline(in, line))
            expect(line.find(",1,1,0,1") != std::string::npos, "p=2 row " + line);
    }

    // graph: 3 edges at the 4 -> 3 boundary, empty range -> header only
    {
        const std::string out = dir + "/graph.dot";
        expect(run(cli + " graph --prime 3 --from 3 --to 4 --format dot --out " + out) == 0,
               "graph 3..4");
        const std::string dot = slurp(out);
        size_t edges = 0;
        for (size_t pos = 0; (pos = dot.find("->", pos)) != std::string::npos; ++pos) ++edges;
        expect(edges == 3, "graph 3..4 has 3 edges");

        expect(run(cli + " graph --prime 3 --from 5 --to 5 --format dot --out " + out) == 0,
               "single-level graph");
        expect(slurp(out).find("->") == std::string::npos, "single level has no edges");
        expect(slurp(out).find("digraph") != std::string::npos, "header still present");
    }

    // the p = 2 subgraph is a tree: downward out-degree is one everywhere
    {
        const std::string out = dir + "/tree.csv";
        expect(run(cli + " graph --prime 2 --from 0 --to 8 --format csv --out " + out) == 0,
               "p=2 graph");
        std::istringstream in(slurp(out));
        std::string line;
        std::getline(in, line);
        size_t edges = 0, dup = 0;
        std::set<std::string> parents;
        while (std::getline(in, line)) {
            ++edges;
            const std::string parent = line.substr(0, line.rfind(','));
            if (!parents.insert(parent).second) ++dup;
        }
        expect(edges > 0, "p=2 graph has edges");
        expect(dup == 0, "p=2 vertices have a unique child edge");
    }

    // witness subcommand
    {
        const std::string out = dir + "/wit.json";
        expect(run(cli + " witness 2 1 --prime 5 --out " + out) == 0, "witness 2 1");
        const std::string doc = slurp(out);
        expect(doc.find("\"4+3+2+1\"") != std::string::npos, "witness partition 4+3+2+1");
        expect(doc.find("\"verified\": true") != std::string::npos, "witness verified");

        expect(run(cli + " witness 3 1 1 --prime 5 --out " + out) == 0, "witness 3 1 target 1");
        expect(slurp(out).find("\"15\"") != std::string::npos, "trivial witness is (15)");

        expect(run(cli + " witness 6 1 --prime 5 --out " + out) == 2, "witness out of region");
        expect(slurp(out).find("error") != std::string::npos, "witness error is structured");
    }

    // tower subcommand
    {
        const std::string out = dir + "/tower.json";
        expect(run(cli + " tower 3+1 --prime 3 --format json --out " + out) == 0, "tower 3+1");
        expect(slurp(out).find("\"pprime\": false") != std::string::npos, "3+1 is not 3'");
        expect(run(cli + " tower 5+1 --prime 3 --format json --out " + out) == 0, "tower 5+1");
        expect(slurp(out).find("\"pprime\": true") != std::string::npos, "5+1 is 3'");
    }

    // verify subcommand
    expect(run(cli + " verify --prime 3 --from 1 --to 12 --suite two-runner > " + dir +
               "/v.txt") == 0,
           "verify two-runner passes");
    expect(slurp(dir + "/v.txt").find("PASS two-runner") != std::string::npos,
           "verify prints PASS line");

    // usage errors exit with 2
    expect(run(cli + " br --prime 4 --to 5 2>/dev/null") == 2, "composite prime rejected");
    expect(run(cli + " br --prime 3 --from 9 --to 2 2>/dev/null") == 2, "empty range rejected");
    expect(run(cli + " br --oracle-budget 5000 2>/dev/null") == 2, "budget cap enforced");
    expect(run(cli + " frobnicate 2>/dev/null") == 2, "unknown subcommand");

    if (failures == 0) std::cout << "cli: all checks passed\n";
    return failures == 0 ? 0 : 1;
}
