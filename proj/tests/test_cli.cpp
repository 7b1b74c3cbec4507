#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

#ifndef GSLEAF_CLI_PATH
#error "GSLEAF_CLI_PATH must point at the CLI binary"
#endif

namespace {

using nlohmann::json;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(GSLEAF_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) res.out.append(buf, got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/gsleaf_cli_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

const std::string kFig1 = "u v\nv w\nw x\nx y\nw z\nz u\nz v\nz x\nz y\n";
const std::string kP3 = "a b\nb c\n";

}  // namespace

TEST_CASE("classify emits a JSON record", "[cli]") {
    std::string path = write_temp("fig1", kFig1);
    RunResult res = run_cli("classify --graph " + path);
    REQUIRE(res.exit_code == 0);
    json rec = json::parse(res.out);
    REQUIRE(rec["n"] == 6);
    REQUIRE(rec["m"] == 9);
    REQUIRE(rec["chordal"] == true);
    REQUIRE(rec["bipartite"] == false);
    REQUIRE(rec["cut_vertices"].empty());
}

TEST_CASE("leaf queries answer with witnesses and replay through check", "[cli]") {
    std::string path = write_temp("fig1", kFig1);
    RunResult res =
        run_cli("leaf --graph " + path + " --vertex z --search bfs --tree f --kind branch --witness");
    REQUIRE(res.exit_code == 0);
    json rec = json::parse(res.out);
    REQUIRE(rec["answer"] == true);
    REQUIRE(rec["witness"] == "w,v,x,z,u,y");
    std::string witness = rec["witness"];
    std::string check_kind = rec["witness_check"];

    RunResult replay = run_cli("--strict check --graph " + path + " --ordering " + witness +
                               " --search " + check_kind + " --vertex z --tree f --kind branch");
    REQUIRE(replay.exit_code == 0);
    json replay_rec = json::parse(replay.out);
    REQUIRE(replay_rec["valid"] == true);
    REQUIRE(replay_rec["role_holds"] == true);
}

TEST_CASE("negative answers exit 1 only in strict mode", "[cli]") {
    std::string path = write_temp("p3", kP3);
    std::string q = "leaf --graph " + path + " --vertex b --search gs --tree l --kind any";
    REQUIRE(run_cli(q).exit_code == 0);
    RunResult strict = run_cli("--strict " + q);
    REQUIRE(strict.exit_code == 1);
    json rec = json::parse(strict.out);
    REQUIRE(rec["answer"] == false);
    REQUIRE(rec["certificate"]["cut_vertex"] == "b");
}

TEST_CASE("search and tree subcommands", "[cli]") {
    std::string path = write_temp("fig1", kFig1);
    RunResult search = run_cli("search --graph " + path + " --search bfs --rho w,v,x,z,u,y");
    REQUIRE(search.exit_code == 0);
    REQUIRE(json::parse(search.out)["ordering"] == "w,v,x,z,u,y");

    RunResult tree = run_cli("tree --graph " + path + " --tree f --ordering w,v,x,z,u,y");
    REQUIRE(tree.exit_code == 0);
    json rec = json::parse(tree.out);
    REQUIRE(rec["root"] == "w");
    REQUIRE(rec["parents"]["u"] == "v");
    REQUIRE(rec["leaves"].size() == 3);

    RunResult pretty = run_cli("--pretty tree --graph " + path + " --tree f --ordering w,v,x,z,u,y");
    REQUIRE(pretty.out.rfind("root w\n", 0) == 0);
}

TEST_CASE("usage errors exit 2", "[cli]") {
    REQUIRE(run_cli("leaf --graph /nonexistent --vertex a --search bfs --tree f").exit_code == 2);
    REQUIRE(run_cli("nonsense").exit_code == 2);
    std::string path = write_temp("p3", kP3);
    REQUIRE(run_cli("leaf --graph " + path + " --vertex nosuch --search bfs --tree f").exit_code ==
            2);
    std::string loop = write_temp("loop", "a a\n");
    REQUIRE(run_cli("classify --graph " + loop).exit_code == 2);
}

TEST_CASE("gadget generation writes a loadable graph", "[cli]") {
    std::string path = write_temp("p3", kP3);
    std::string out = "/tmp/gsleaf_cli_gadget_out.txt";
    RunResult gen = run_cli("gadget dfs-f --in " + path + " --out " + out);
    REQUIRE(gen.exit_code == 0);
    json rec = json::parse(gen.out);
    REQUIRE(rec["n"] == 7);
    REQUIRE(rec["query_vertex"] == "y");
    RunResult reload = run_cli("classify --graph " + out);
    REQUIRE(reload.exit_code == 0);
    REQUIRE(json::parse(reload.out)["n"] == 7);

    RunResult verify = run_cli("gadget verify dfs-f --in " + path);
    REQUIRE(verify.exit_code == 0);
    REQUIRE(json::parse(verify.out)["equivalent"] == true);

    std::string cnf = write_temp("cnf", "p cnf 2 2\n1 2 2 0\n-1 2 2 0\n");
    RunResult sat = run_cli("gadget verify sat-f --in " + cnf);
    REQUIRE(sat.exit_code == 0);
    json sat_rec = json::parse(sat.out);
    REQUIRE(sat_rec["source_answer"] == true);
    REQUIRE(sat_rec["equivalent"] == true);

    RunResult bfs = run_cli("gadget verify bfs-f --in " + path + " --r a --v c --cap 12");
    REQUIRE(bfs.exit_code == 0);
    REQUIRE(json::parse(bfs.out)["equivalent"] == true);
}

TEST_CASE("oracle subcommands", "[cli]") {
    RunResult cert = run_cli("oracle certify --theorem T5 --nmax 4");
    REQUIRE(cert.exit_code == 0);
    json rec = json::parse(cert.out);
    REQUIRE(rec["pass"] == true);
    REQUIRE(rec["graphs"] == 43);

    // byte-identical reports for identical flags
    RunResult again = run_cli("oracle certify --theorem T5 --nmax 4");
    REQUIRE(again.out == cert.out);

    std::string path = write_temp("p3", kP3);
    RunResult sets = run_cli("oracle leafsets --graph " + path + " --search gs");
    REQUIRE(sets.exit_code == 0);
    json sets_rec = json::parse(sets.out);
    REQUIRE(sets_rec["l_root"].size() == 2);  // a and c
    REQUIRE(sets_rec["end_vertices"].size() == 2);

    REQUIRE(run_cli("oracle certify --theorem T99 --nmax 3").exit_code == 2);
}

TEST_CASE("mutually exclusive flags are rejected at parse time", "[cli]") {
    std::string path = write_temp("p3", kP3);
    REQUIRE(run_cli("search --graph " + path + " --search bfs --rho a,b,c --seed 4").exit_code ==
            2);
    REQUIRE(run_cli("tree --graph " + path + " --tree f --ordering a,b,c --search bfs")
                .exit_code == 2);
    REQUIRE(run_cli("check --graph " + path + " --ordering a,b,c --search gs --peo").exit_code ==
            2);
}

TEST_CASE("elimination-ordering witnesses replay in peo mode", "[cli]") {
    std::string path = write_temp("fig1", kFig1);
    RunResult res = run_cli("leaf --graph " + path +
                            " --vertex u --search mcs --tree l --kind branch --witness");
    REQUIRE(res.exit_code == 0);
    json rec = json::parse(res.out);
    REQUIRE(rec["answer"] == true);
    REQUIRE(rec["witness_check"] == "peo");
    std::string witness = rec["witness"];
    RunResult replay = run_cli("--strict check --graph " + path + " --ordering " + witness +
                               " --peo --vertex u --tree l --kind branch");
    REQUIRE(replay.exit_code == 0);
    REQUIRE(json::parse(replay.out)["role_holds"] == true);
}

TEST_CASE("classify handles disconnected input and stdin", "[cli]") {
    std::string path = write_temp("two_comp", "a b\nc d\n");
    RunResult res = run_cli("classify --graph " + path);
    REQUIRE(res.exit_code == 0);
    json rec = json::parse(res.out);
    REQUIRE(rec["connected"] == false);
    REQUIRE(rec["bipartite"] == true);
    REQUIRE_FALSE(rec.contains("diameter"));

    RunResult piped = run_cli("classify --graph - < " + path);
    REQUIRE(piped.exit_code == 0);
    REQUIRE(json::parse(piped.out)["n"] == 4);
}
