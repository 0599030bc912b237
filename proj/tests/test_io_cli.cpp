#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "helpers.hpp"
#include "mackit/io.hpp"
#include "mackit/products.hpp"

using namespace mackit;
using namespace mackit::testing;

namespace {

SimplicialComplex parse_str(const std::string& text) {
    std::istringstream in(text);
    return parse_complex(in, "<test>");
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    std::string outfile = "/tmp/mackit_cli_out_" + std::to_string(counter++) + ".txt";
    std::string cmd = std::string(MACKIT_CLI_PATH) + " " + args + " > " + outfile +
                      " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(outfile);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    std::remove(outfile.c_str());
    return r;
}

std::string data(const std::string& name) {
    return std::string(MACKIT_TEST_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("complex file parsing") {
    SECTION("facet style") {
        auto K = parse_str("m=5\nfacet: 1 2\nfacet: 2 3\nfacet: 3 4\n"
                           "facet: 4 5\nfacet: 5 1\n");
        REQUIRE(K == pentagon());
    }
    SECTION("missing style") {
        auto K = parse_str("m=2\nmissing: 1 2\n");
        REQUIRE(K == two_points());
    }
    SECTION("comments and blank lines") {
        auto K = parse_str("# hi\n\nm=2\n  # indented comment\nfacet: 1 2 # tail\n");
        REQUIRE(K == SimplicialComplex::from_facets(2, {{1, 2}}));
    }
    SECTION("errors carry line numbers") {
        REQUIRE_THROWS_WITH(parse_str("m=x\n"), Catch::Matchers::ContainsSubstring(
                                                    "<test>:1"));
        REQUIRE_THROWS_WITH(parse_str("m=3\nfacet: 1\nmissing: 2\n"),
                            Catch::Matchers::ContainsSubstring("<test>:3"));
        REQUIRE_THROWS_WITH(parse_str("m=3\nfacet: 0\n"),
                            Catch::Matchers::ContainsSubstring("out of [1,3]"));
        REQUIRE_THROWS_WITH(parse_str("m=3\nfacet: 1 junk\n"),
                            Catch::Matchers::ContainsSubstring("invalid vertex label"));
        REQUIRE_THROWS_AS(parse_str(""), parse_error);
        REQUIRE_THROWS_AS(parse_str("m=3\nmissing:\n"), parse_error);
    }
    SECTION("render and reparse") {
        std::mt19937_64 rng(163);
        for (int trial = 0; trial < 50; ++trial) {
            auto K = random_complex(rng, 1 + int(rng() % 6), trial % 3 == 0);
            REQUIRE(parse_str(render_complex_facets(K)) == K);
        }
    }
}

TEST_CASE("word expressions") {
    SECTION("cochain words") {
        auto c = parse_word_expression("u{1,2}t{3}", 5, WordFlavor::cochain);
        REQUIRE(c == CellChain(cw({1, 2}, {3})));
    }
    SECTION("chain words with coefficients") {
        auto c = parse_word_expression("2*u{1}e{2} - u{2}e{1}", 3, WordFlavor::chain);
        CellChain expect(WordFlavor::chain);
        expect.add(ch({1}, {2}), 2);
        expect.add(ch({2}, {1}), -1);
        REQUIRE(c == expect);
    }
    SECTION("void word") {
        auto c = parse_word_expression("1", 4, WordFlavor::cochain);
        REQUIRE(c == CellChain(cw({}, {})));
    }
    SECTION("Gamma substitution") {
        CellChain g(ch({1}, {2}));
        auto c = parse_word_expression("Gamma - u{2}e{1}", 2, WordFlavor::chain, g);
        CellChain expect = g;
        expect.add(ch({2}, {1}), -1);
        REQUIRE(c == expect);
    }
    SECTION("errors") {
        REQUIRE_THROWS_AS(parse_word_expression("u{1}e{2}t{3}", 5, WordFlavor::chain),
                          parse_error);
        REQUIRE_THROWS_AS(parse_word_expression("u{1}t{2}", 5, WordFlavor::chain),
                          parse_error);
        REQUIRE_THROWS_AS(parse_word_expression("u{9}", 5, WordFlavor::cochain),
                          parse_error);
        REQUIRE_THROWS_AS(parse_word_expression("u{1}t{1}", 5, WordFlavor::cochain),
                          parse_error);
        REQUIRE_THROWS_AS(parse_word_expression("", 5, WordFlavor::cochain),
                          parse_error);
        REQUIRE_THROWS_AS(parse_word_expression("Gamma", 5, WordFlavor::cochain),
                          parse_error);
    }
}

TEST_CASE("cli betti") {
    SECTION("pentagon") {
        auto r = run_cli("betti --input " + data("pentagon.cplx"));
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out.rfind("b = 1,10,1\n", 0) == 0);
    }
    SECTION("heptagon from missing faces") {
        auto r = run_cli("betti --input " + data("heptagon.cplx"));
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out.rfind("b = 1,0,14,0,1\n", 0) == 0);
    }
    SECTION("point") {
        auto r = run_cli("betti --input " + data("point.cplx"));
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out.rfind("b = 1\n", 0) == 0);
    }
    SECTION("deterministic output") {
        auto a = run_cli("betti --input " + data("pentagon.cplx") + " --parallel 3");
        auto b = run_cli("betti --input " + data("pentagon.cplx") + " --parallel 1");
        REQUIRE(a.out == b.out);
    }
    SECTION("json round trip") {
        auto r = run_cli("betti --input " + data("pentagon.cplx") + " --format json");
        REQUIRE(r.exit_code == 0);
        auto j = nlohmann::json::parse(r.out);
        REQUIRE(j.dump(2) + "\n" == r.out);
        REQUIRE(j["betti"] == nlohmann::json({1, 10, 1}));
    }
}

TEST_CASE("cli cap") {
    SECTION("heptagon cap against Gamma") {
        auto r = run_cli("cap --input " + data("heptagon.cplx") +
                         " \"u{1,2}t{3}\" Gamma");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out.find("u{4,5}e{6,7}") != std::string::npos);
        REQUIRE(r.out.find("u{4,5}e{3,6,7}") != std::string::npos);
        REQUIRE(r.out.find("class:   nonzero in H_2") != std::string::npos);
    }
    SECTION("unit cap") {
        auto r = run_cli("cap --input " + data("pentagon.cplx") +
                         " 1 \"u{1,2}e{3}\"");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out.find("result:  + u{1,2}e{3}") != std::string::npos);
    }
    SECTION("spot-check mode") {
        auto r = run_cli("cap --input " + data("pentagon.cplx") +
                         " 1 1 --spot-check 50");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out.find("spot-check: 50/50") != std::string::npos);
    }
    SECTION("bad expression exits 2") {
        auto r = run_cli("cap --input " + data("pentagon.cplx") + " \"u{\" 1");
        REQUIRE(r.exit_code == 2);
    }
}

TEST_CASE("cli manifold") {
    SECTION("pentagon surface") {
        auto r = run_cli("manifold --input " + data("pentagon.cplx"));
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out.find("homology manifold: yes") != std::string::npos);
        REQUIRE(r.out.find("dimension: 2") != std::string::npos);
        REQUIRE(r.out.find("yes-by-low-dimension") != std::string::npos);
    }
    SECTION("heptagon with J = 2") {
        auto r = run_cli("manifold --input " + data("heptagon.cplx") + " --J 2");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out.find("dimension: 11") != std::string::npos);
        REQUIRE(r.out.find("topological manifold: yes") != std::string::npos);
    }
    SECTION("witnesses for a broken complex") {
        auto r = run_cli("manifold --input " + data("two_edges.cplx"));
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out.find("homology manifold: no") != std::string::npos);
        REQUIRE(r.out.find("witness: simplex {}") != std::string::npos);
    }
}

TEST_CASE("cli kj") {
    SECTION("S^0 with J = (2,2) emits the tetrahedron boundary") {
        auto r = run_cli("kj --input " + data("s0.cplx") + " --J 2,2");
        REQUIRE(r.exit_code == 0);
        std::istringstream in(r.out);
        auto K = parse_complex(in, "<cli>");
        REQUIRE(K == boundary_simplex(4));
        REQUIRE(r.out.find("# block B_1 = {1,2}") != std::string::npos);
    }
    SECTION("identity J reproduces the complex") {
        auto r = run_cli("kj --input " + data("pentagon.cplx"));
        REQUIRE(r.exit_code == 0);
        std::istringstream in(r.out);
        REQUIRE(parse_complex(in, "<cli>") == pentagon());
    }
}

TEST_CASE("cli ring") {
    auto r = run_cli("ring --input " + data("trunc_cube.cplx") +
                     " --J 2 --triples 1,6 2,4,7 3,5");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("triple products:") != std::string::npos);
    // the partition triple survives in cohomology
    REQUIRE(r.out.find("v{1,2,3}u{4,5,6,7}") != std::string::npos);
}

TEST_CASE("cli exit codes") {
    SECTION("missing input file") {
        auto r = run_cli("betti --input /nonexistent.cplx");
        REQUIRE(r.exit_code == 2);
    }
    SECTION("bad J length") {
        auto r = run_cli("betti --input " + data("pentagon.cplx") + " --J 1,2");
        REQUIRE(r.exit_code == 2);
    }
    SECTION("cap exceeded") {
        auto r = run_cli("betti --input " + data("pentagon.cplx") + " --cap 3");
        REQUIRE(r.exit_code == 3);
    }
    SECTION("unknown option") {
        auto r = run_cli("betti --frobnicate");
        REQUIRE(r.exit_code == 2);
    }
}
