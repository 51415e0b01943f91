#include "qcomb/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = qcomb::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("map delta reproduces the worked example") {
    const CliResult r = run_cli({"map", "delta", "--perm", "2 1 3 6 7 4 5 8 10 9 11"});
    CHECK(r.code == 0);
    CHECK(r.out == "NENNNEENNEN\n");
}

TEST_CASE("map delta-inv reports the cycle structure in json") {
    const CliResult r = run_cli({"map", "delta-inv", "--path", "NENNNEENNEN", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("perm") == "2 1 3 6 7 4 5 8 10 9 11");
    CHECK(j.at("cycles") == "(1 2)(3)(4 6)(5 7)(8)(9 10)(11)");
}

TEST_CASE("map xi traces unmatched and flipped steps") {
    const CliResult r = run_cli({"map", "xi", "--path", "NENNNEENNEN", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("image") == "NEENNEEENEN");
    CHECK(j.at("unmatched_n") == nlohmann::json({3, 8, 11}));
    CHECK(j.at("flipped") == nlohmann::json({3, 8}));
    CHECK(j.at("sump_input") == 15);
    CHECK(j.at("sump_output") == 15);
}

TEST_CASE("stats text output") {
    const CliResult r = run_cli({"stats", "--perm", "2 1 4 3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("maj: 4") != std::string::npos);
    CHECK(r.out.find("ldes: 3") != std::string::npos);
    CHECK(r.out.find("des_set: 1 3") != std::string::npos);
}

TEST_CASE("qpoly binom evaluated at -1") {
    const CliResult r = run_cli({"qpoly", "binom", "--n", "4", "--k", "2", "--at", "-1"});
    CHECK(r.code == 0);
    CHECK(r.out == "2\n");
}

TEST_CASE("qpoly binom polynomial text") {
    const CliResult r = run_cli({"qpoly", "binom", "--n", "4", "--k", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 + q + 2*q^2 + q^3 + q^4\n");
}

TEST_CASE("enumerate with a where filter") {
    const CliResult all = run_cli({"enumerate", "--family", "I321", "--n", "4"});
    CHECK(all.code == 0);
    CHECK(all.out == "1 2 3 4\n1 2 4 3\n1 3 2 4\n2 1 3 4\n2 1 4 3\n3 4 1 2\n");
    const CliResult filtered = run_cli({"enumerate", "--family", "I321", "--n", "4", "--where", "lead=1"});
    CHECK(filtered.code == 0);
    CHECK(filtered.out == "1 2 3 4\n1 2 4 3\n1 3 2 4\n");
}

TEST_CASE("genfun") {
    const CliResult r =
        run_cli({"genfun", "--family", "I321", "--n", "4", "--sign", "maj", "--weight", "lead"});
    CHECK(r.code == 0);
    CHECK(r.out == "q + q^3\n");
}

TEST_CASE("verify json output") {
    const CliResult r = run_cli({"verify", "--id", "Lead-I", "--n", "1", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("equal") == true);
    CHECK(j.at("lhs_text") == "q + q^3");
}

TEST_CASE("verify respects and can raise the desk-scale bound") {
    const CliResult refused = run_cli({"verify", "--id", "JD-des", "--n", "17"});
    CHECK(refused.code == 2);
    CHECK(refused.err.find("bound") != std::string::npos);
    const CliResult forced = run_cli({"verify", "--id", "JD-des", "--n", "17", "--n-max", "17"});
    CHECK(forced.code == 0);
    CHECK(forced.err.find("warning") != std::string::npos);
}

TEST_CASE("involution verb applies maps and builders") {
    const CliResult r = run_cli({"involution", "--id", "Phi1", "--path", "NENE"});
    CHECK(r.code == 0);
    CHECK(r.out == "NEEN\n");
    const CliResult b = run_cli({"involution", "--id", "psi0", "--path", "NEENE", "--format", "json"});
    CHECK(b.code == 0);
    const auto j = nlohmann::json::parse(b.out);
    CHECK(j.at("image") == "NNEEEENNEEN");
    CHECK(j.at("sump_parity") == "even");
}

TEST_CASE("verify-all on a small cap") {
    const CliResult r = run_cli({"verify-all", "--n-max", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("all equal") != std::string::npos);
    const CliResult csv = run_cli({"verify-all", "--n-max", "5", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("id,n,param,length,equal,elapsed_ms,lhs,rhs", 0) == 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli({"map", "delta", "--perm", "1 1"}).code == 2);
    CHECK(run_cli({"map", "delta", "--nonsense", "x"}).code == 2);
    CHECK(run_cli({"enumerate", "--family", "X99", "--n", "3"}).code == 2);
    CHECK(run_cli({"verify", "--id", "Lead-V", "--n", "1"}).code == 2);
    CHECK(run_cli({"map", "delta-inv", "--path", "NEX"}).code == 2);
    CHECK(run_cli({"enumerate", "--family", "I321", "--n", "4", "--where", "zzz=1"}).code == 2);
    CHECK(run_cli({}).code == 2);
}

TEST_CASE("help exits 0") {
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"map", "--help"}).code == 0);
}
