#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "dualmin/io.hpp"
#include "fixtures.hpp"

using namespace dualmin;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    for (auto& a : args)
        if (a.size() > 5 && a.ends_with(".json")) a = fixtures::path(a);
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

MooreAutomaton moore_of(const Result& r) { return std::get<MooreAutomaton>(parse_automaton(r.out)); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("minimize the appendix automaton") {
    const Result r = invoke({"minimize", "appendixA.json", "--method", "brzozowski"});
    REQUIRE(r.code == cli::kExitOk);
    const MooreAutomaton m = moore_of(r);
    CHECK(m.size() == 2);
    CHECK(iso_check(m, fixtures::appendix_a_minimal()));
}

TEST_CASE("equivalence verdicts") {
    const Result same = invoke({"equiv", "appendixA.json", "appendixA_min.json"});
    CHECK(same.code == cli::kExitOk);
    CHECK(same.out == "equivalent\n");
    const Result nfa = invoke({"equiv", "nfa_ends_a.json", "wa_bool.json"});
    CHECK(nfa.code == cli::kExitOk);
    const Result differ = invoke({"equiv", "appendixA.json", "afa_conjunctive.json"});
    CHECK(differ.code == cli::kExitNegative);
    CHECK(differ.out.find("not equivalent") == 0);
    const Result bounded = invoke({"equiv", "wa_swap.json", "wa_lattice.json", "--max-len", "3"});
    CHECK(bounded.code == cli::kExitNegative);
    CHECK(bounded.out.find("counterexample: \"\"") != std::string::npos);
}

TEST_CASE("minimize a weighted automaton by duality") {
    const Result r = invoke({"minimize", "wa_swap.json", "--method", "duality"});
    REQUIRE(r.code == cli::kExitOk);
    const auto doc = parse_automaton(r.out);
    const auto& w = std::get<WeightedAutomaton<IntegerSemiring>>(std::get<AnyWeighted>(doc));
    CHECK(w.n == 1);
    CHECK(invoke({"hankel", "wa_swap.json", "-L", "2"}).out == "1\n");
}

TEST_CASE("brzozowski and refine agree on every Moore fixture") {
    for (const char* name : {"appendixA.json", "appendixA_min.json", "moore_mod3.json", "nfa_ends_a.json"}) {
        INFO(name);
        const Result b = invoke({"minimize", name, "--method", "brzozowski"});
        const Result r = invoke({"minimize", name, "--method", "refine"});
        const Result d = invoke({"minimize", name, "--method", "duality"});
        REQUIRE(b.code == 0);
        REQUIRE(r.code == 0);
        REQUIRE(d.code == 0);
        CHECK(iso_check(moore_of(b), moore_of(r)));
        CHECK(iso_check(moore_of(d), moore_of(r)));
    }
}

TEST_CASE("running words") {
    CHECK(invoke({"run", "appendixA.json", "-w", "ba"}).out == "accept\n");
    CHECK(invoke({"run", "appendixA.json", "-w", ""}).out == "reject\n");
    CHECK(invoke({"run", "moore_mod3.json", "-w", "101"}).out == "two\n");
    CHECK(invoke({"run", "wa_rational.json", "-w", "a"}).out == "1\n");
    CHECK(invoke({"run", "wa_tropical.json", "-w", "ab"}).out == "0\n");
    CHECK(invoke({"run", "dkm_appendixA.json", "-w", "a"}).out == "[\"p\"]\n");
}

TEST_CASE("trace formulas and closure") {
    CHECK(invoke({"trace-eval", "dkm_appendixA.json", "-f", "<a>p"}).out == "[\"x\",\"y\",\"z\"]\n");
    CHECK(invoke({"trace-eval", "appendixA.json", "-f", "<b>p"}).out == "[]\n");
    CHECK(invoke({"closure", "dkm_appendixA.json"}).out == "[[],[\"x\",\"y\",\"z\"],[\"y\",\"z\"]]\n");
}

TEST_CASE("automaton-producing verbs emit parseable files") {
    for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
             {"reverse", "appendixA.json"},
             {"reverse", "nfa_ends_a.json"},
             {"reverse", "wa_rational.json"},
             {"reverse", "afa_conjunctive.json"},
             {"reverse", "moore_mod3.json"},
             {"determinize", "nfa_ends_a.json"},
             {"determinize", "wa_bool.json"},
             {"reach", "appendixA.json"},
             {"reach", "wa_lattice.json"},
             {"reach", "afa_conjunctive.json"},
             {"dual", "appendixA.json"},
             {"dual", "wa_swap.json"},
             {"minimize", "afa_conjunctive.json"},
             {"minimize", "dkm_appendixA.json"},
             {"minimize", "dkm_appendixA.json", "--method", "refine"},
             {"minimize", "wa_bool.json"},
             {"minimize", "wa_rational.json"}}) {
        INFO(args[0] << " " << args[1]);
        const Result r = invoke(args);
        REQUIRE(r.code == cli::kExitOk);
        CHECK_NOTHROW(parse_automaton(r.out));
    }
    CHECK(moore_of(invoke({"dual", "appendixA.json"})).size() == 3);
}

TEST_CASE("stats") {
    const Result r = invoke({"stats", "appendixA.json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("minimal: 2") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(invoke({}).code == cli::kExitUsage);
    CHECK(invoke({"frobnicate", "appendixA.json"}).code == cli::kExitUsage);
    CHECK(invoke({"minimize"}).code == cli::kExitUsage);
    CHECK(invoke({"minimize", "appendixA.json", "--method", "magic"}).code == cli::kExitUsage);
    CHECK(invoke({"run", "appendixA.json"}).code == cli::kExitUsage);
    CHECK(invoke({"run", "appendixA.json", "-w", "abc"}).code == cli::kExitUsage);
    CHECK(invoke({"stats", "missing.json"}).code == cli::kExitUsage);
    CHECK(invoke({"stats", "bad_json.json"}).code == cli::kExitUsage);
    const Result bad_name = invoke({"stats", "bad_name.json"});
    CHECK(bad_name.code == cli::kExitUsage);
    CHECK(bad_name.err.find("/initial") != std::string::npos);
    const Result shape = invoke({"stats", "wa_bad_shape.json"});
    CHECK(shape.code == cli::kExitUsage);
    CHECK(shape.err.find("'b'") != std::string::npos);
    CHECK(invoke({"hankel", "wa_tropical.json", "-L", "2"}).code == cli::kExitUsage);
    CHECK(invoke({"dual", "nfa_ends_a.json"}).code == cli::kExitUsage);
    CHECK(invoke({"equiv", "wa_swap.json", "appendixA.json"}).code == cli::kExitUsage);
    CHECK(invoke({"--semiring", "octonion", "stats", "wa_swap.json"}).code == cli::kExitUsage);
    CHECK(invoke({"--help"}).code == cli::kExitOk);
}

TEST_CASE("guard violations exit 3") {
    const Result afa = invoke({"minimize", "afa_big.json"});
    CHECK(afa.code == cli::kExitGuard);
    CHECK_FALSE(afa.err.empty());
    CHECK(invoke({"--max-states", "2", "minimize", "appendixA.json"}).code == cli::kExitGuard);
    CHECK(invoke({"--max-states", "2", "determinize", "nfa_ends_a.json"}).code == cli::kExitOk);
    ::setenv("DUALMIN_MAX_STATES", "1", 1);
    CHECK(invoke({"dual", "appendixA.json"}).code == cli::kExitGuard);
    ::unsetenv("DUALMIN_MAX_STATES");
    CHECK(invoke({"dual", "appendixA.json"}).code == cli::kExitOk);
}

TEST_CASE("semiring override") {
    const Result r = invoke({"--semiring", "rational", "run", "wa_swap.json", "-w", "aaa"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");
}

TEST_CASE("selftest") {
    const Result r = invoke({"selftest", "--seed", "5", "--cases", "3"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("PASS hnf (3 cases)") != std::string::npos);
}

}
