#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "gpw/cli.hpp"

using namespace gpw;

namespace {

std::string spec(const std::string& name) { return std::string(GPW_SPEC_DIR) + "/" + name; }

struct Run {
  int code = 0;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

void expect_parse_error(const std::string& text, std::size_t line, std::size_t column, const std::string& fragment) {
  try {
    parse_spec(text);
    ADD_FAILURE() << "no error for: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

}  // namespace

TEST(Io, ParseSpec) {
  auto ctx = parse_spec("graph { vertices: a, b; edges: a-b; group a = Z; group b = Z/2; }");
  EXPECT_EQ(ctx->rank(), 2u);
  EXPECT_TRUE(ctx->graph().adjacent(0, 1));
  EXPECT_FALSE(ctx->group(0).is_finite());
  EXPECT_EQ(ctx->group(1).order, 2u);

  auto hex = load_spec(spec("hexagon.gp"));
  EXPECT_EQ(hex->rank(), 6u);
  EXPECT_EQ(hex->dim(), 2u);
  EXPECT_EQ(parse_spec(format_spec(*hex))->graph().edges(), hex->graph().edges());
}

TEST(Io, ParseSpecErrors) {
  expect_parse_error("graph { vertices: a; edges: a-a; group a = Z; }", 1, 29, "loop");
  expect_parse_error("graph { vertices: a, a; group a = Z; }", 1, 22, "duplicate vertex");
  expect_parse_error("graph { vertices: a;\n edges: a-b; group a = Z; }", 2, 11, "unknown vertex");
  expect_parse_error("graph { vertices: a, b; group a = Z; }", 1, 38, "missing group");
  expect_parse_error("graph { vertices: a; group a = Q; }", 1, 32, "");
  expect_parse_error("graph { vertices: a; group a = Z/1; }", 1, 34, "order");
  expect_parse_error("graph { vertices: a; group a = Z; group a = Z; }", 1, 41, "duplicate group");
}

TEST(Io, Words) {
  auto hex = load_spec(spec("hexagon.gp"));
  auto g = parse_word(hex, "x1^3 y2 x1^-1");
  EXPECT_EQ(format_word(g), "x1^2 y2");
  EXPECT_EQ(format_word(parse_word(hex, "1")), "1");
  EXPECT_THROW(parse_word(hex, "x9"), ParseError);
  EXPECT_THROW(parse_word(hex, "x1^"), ParseError);
  auto U = parse_word_set(hex, read_file(spec("hexagon_x.words")));
  EXPECT_EQ(U.size(), 3u);
  EXPECT_EQ(format_set(hex->graph(), support(parse_word(hex, "x2 x1"))), "{x1, x2}");
}

TEST(IoProperty, WordRoundTrip) {
  fx::Rng rng(81);
  for (int trial = 0; trial < 300; ++trial) {
    auto ctx = fx::random_context(rng, 5, 0.4, 0.3, 6);
    auto g = fx::random_element(rng, ctx, 0, 10, 5);
    EXPECT_EQ(parse_word(ctx, format_word(g)), g);
    auto reparsed = parse_spec(format_spec(*ctx));
    EXPECT_EQ(reparsed->graph().edges(), ctx->graph().edges());
  }
}

TEST(Cli, NormalForm) {
  auto r = run({"normal-form", spec("hexagon.gp"), "y2 x1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("word: x1 y2"), std::string::npos) << r.out;
}

TEST(Cli, Classify) {
  auto r = run({"--json", "classify", spec("hexagon.gp"), "x1 x2 x3"});
  EXPECT_EQ(r.code, 0);
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["command"], "classify");
  EXPECT_EQ(doc["result"]["strongly_irreducible"], true);
  EXPECT_TRUE(doc.contains("input"));
  EXPECT_TRUE(doc.contains("bounds"));
}

TEST(Cli, VerifyBipartite) {
  auto r = run({"verify", "bipartite", "--m", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  EXPECT_EQ(run({"verify", "sharpness", "--N", "3"}).code, 2);
}

TEST(Cli, SearchCommands) {
  auto r = run({"--json", "find", spec("hexagon.gp"), spec("hexagon_x.words"), "--target", "strongly-irreducible"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["certificate"]["n"], 3);
  EXPECT_EQ(doc["bounds"]["within"], true);

  EXPECT_EQ(run({"find", spec("dihedral_times_z2.gp"), spec("hexagon_x.words")}).code, 2);
  auto single = testing::TempDir() + "gpw_single.words";
  std::ofstream(single) << "# one generator\na\n";
  auto inf = run({"find", spec("free3.gp"), single, "--target", "regular"});
  EXPECT_EQ(inf.code, 1);
  EXPECT_NE(inf.out.find("acon too small"), std::string::npos) << inf.out;

  EXPECT_EQ(run({"full-support", spec("free3.gp"), spec("free3_pair.words"), "--torsion-free"}).code, 0);
  EXPECT_EQ(run({"exponent-sum", spec("free3.gp"), spec("free3_pair.words")}).code, 0);
  EXPECT_EQ(run({"exponent-sum", spec("dihedral_times_z2.gp"), spec("free3_pair.words")}).code, 2);
  EXPECT_EQ(run({"simul-lox", spec("free3.gp"), "a b", "a c", "--vertices", "a", "c"}).code, 0);
  EXPECT_EQ(run({"tau", spec("free3.gp"), "a b", "--vertex", "a"}).code, 0);
  EXPECT_EQ(run({"exceptional", spec("free3.gp"), "a", "b"}).code, 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"no-such-command"}).code, 2);
  EXPECT_EQ(run({"normal-form", spec("missing.gp"), "a"}).code, 2);
  auto bad = run({"mul", spec("hexagon.gp"), "x1", "x1^"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("1:4"), std::string::npos) << bad.err;
  EXPECT_EQ(run({"simul-lox", spec("free3.gp"), "a", "b", "--vertices", "a"}).code, 2);
}

TEST(Cli, JsonIsDeterministic) {
  std::vector<std::string> args{"--json", "--seed", "7", "--threads", "1", "growth", spec("hexagon.gp"),
                                spec("hexagon_x.words"), "--n", "4", "--ball"};
  auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto doc = nlohmann::json::parse(a.out);
  EXPECT_EQ(doc["input"]["seed"], 7);
  args[4] = "3";
  auto c = nlohmann::json::parse(run(args).out);
  EXPECT_EQ(c["result"]["sizes"], doc["result"]["sizes"]);
}

TEST(Cli, OracleMode) {
  auto r = run({"--oracle", "stsupp", spec("mixed.gp"), "a b"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("agrees: true"), std::string::npos) << r.out;
  EXPECT_EQ(run({"--oracle", "normal-form", spec("hexagon.gp"), "y2 x1 y2^-1"}).code, 0);
}

TEST(Cli, ThreadsEnvironmentOverride) {
  ::setenv("GPW_THREADS", "3", 1);
  EXPECT_EQ(thread_budget(1), 3u);
  ::unsetenv("GPW_THREADS");
  EXPECT_EQ(thread_budget(2), 2u);
}
