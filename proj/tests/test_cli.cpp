#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "sqfree/errors.hpp"
#include "sqfree/matrix_file.hpp"
#include "sqfree/report.hpp"

#ifdef SQFREE_HAVE_CLI
#include "commands.hpp"
#endif

using namespace sqfree;

namespace {

const std::string kData = SQFREE_TEST_DATA;

MatrixFile parse(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix_file(in, "t.mat");
}

std::string error_of(const std::string& text) {
  try {
    parse(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(MatrixFile, ParsesExample) {
  const auto f = load_matrix_file(kData + "/example.mat");
  EXPECT_EQ(f.n, 4);
  EXPECT_EQ(f.vars, (std::vector<std::string>{"x", "y", "z", "w"}));
  EXPECT_EQ(f.s, 2U);
  ASSERT_EQ(f.entries.size(), 4U);
  EXPECT_EQ(f.entries[3].coefficient, Rational(2));
  EXPECT_EQ(to_matrix(f), fixtures::example_matrix());
  EXPECT_EQ(to_matrix(load_matrix_file(kData + "/bad.mat")), fixtures::non_squarefree_matrix());
}

TEST(MatrixFile, Rejections) {
  const std::string head = "n 2\nsize 1 1\n";
  EXPECT_NE(error_of(head + "entry 1 1 0  1 0\n").find("t.mat:3"), std::string::npos);
  EXPECT_NE(error_of(head + "entry 1 1 1  -1 0\n"), "");
  EXPECT_NE(error_of(head + "entry 1 1 1  1\n"), "");
  EXPECT_NE(error_of(head + "entry 2 1 1  1 0\n"), "");
  EXPECT_NE(error_of(head + "entry 1 1 1  1 0\nentry 1 1 3  1 0\n"), "");
  EXPECT_NE(error_of("n 2\nn 2\n"), "");
  EXPECT_NE(error_of("size 1 1\nn 2\n"), "");
  EXPECT_NE(error_of("n 0\n"), "");
  EXPECT_NE(error_of("n 65\n"), "");
  EXPECT_NE(error_of(head + "bogus 1\n"), "");
  EXPECT_NE(error_of(head + "entry 1 1 1/0  1 0\n"), "");
  EXPECT_NO_THROW(parse(head + "# comment\n\nentry 1 1 -3/6  1 0   # trailing\n"));
  EXPECT_EQ(parse(head + "entry 1 1 -3/6  1 0\n").entries[0].coefficient, Rational(-1, 2));
  EXPECT_THROW(load_matrix_file(kData + "/missing.mat"), InputError);
}

TEST(MatrixFile, RoundTrip) {
  for (const auto& inst : fixtures::generated_instances(30)) {
    const auto f = generate_test_matrix(inst.n, inst.s, inst.l, inst.seed);
    EXPECT_EQ(parse(serialize(f)), f);
    EXPECT_EQ(serialize(parse(serialize(f))), serialize(f));
    EXPECT_EQ(to_matrix(from_matrix(to_matrix(f))), to_matrix(f));
  }
}

TEST(MatrixFile, DegreeAndIndexLists) {
  EXPECT_EQ(parse_degree("1,0,-1", 3), (ExponentVector{1, 0, -1}));
  EXPECT_THROW(parse_degree("1,0", 3), InputError);
  EXPECT_THROW(parse_degree("1,a,0", 3), InputError);
  EXPECT_EQ(parse_index_list("2,1"), (std::vector<std::size_t>{2, 1}));
  EXPECT_THROW(parse_index_list("0,1"), InputError);
}

TEST(Generator, DeterministicAndUniformRank) {
  EXPECT_EQ(serialize(generate_test_matrix(5, 3, 4, 7)), serialize(generate_test_matrix(5, 3, 4, 7)));
  EXPECT_NE(serialize(generate_test_matrix(5, 3, 4, 7)), serialize(generate_test_matrix(5, 3, 4, 8)));
  for (const auto& inst : fixtures::generated_instances(40)) {
    EXPECT_TRUE(validate_multigraded(inst.matrix).ok);
    EXPECT_TRUE(is_uniform_rank(inst.matrix));
  }
  EXPECT_THROW(generate_test_matrix(3, 3, 2, 1), InputError);
}

TEST(Report, JsonRoundTrip) {
  InvariantReport r;
  r.command = "betti";
  r.input = load_matrix_file(kData + "/example.mat");
  r.order = {1, 2};
  r.betti = std::vector<BettiEntry>{{1, ExponentVector{1, 0, 1, 1}, 1}};
  r.local_cohomology = std::vector<LocalCohomologyRow>{{IndexSet{}, IndexSet{2, 3}, {{3, 2}}}};
  r.dimension = DimensionReport{3, 3, 3, 1};
  r.annihilator = AnnihilatorReport{"fitting", {IndexSet{1, 2, 3, 4}}};
  r.warnings = {"w"};
  const auto text = render_json(r);
  EXPECT_EQ(report_from_json(Json::parse(text)), r);
  EXPECT_EQ(render_json(report_from_json(Json::parse(text))), text);
  EXPECT_THROW(report_from_json(Json::parse("{\"command\": 3}")), InputError);
}

#ifdef SQFREE_HAVE_CLI

namespace {

cli::Options opts(const std::string& command, const std::string& file = kData + "/example.mat") {
  cli::Options o;
  o.command = command;
  o.file = file;
  return o;
}

}  // namespace

TEST(Cli, CheckAndIdeals) {
  const auto check = cli::run_command(opts("check"));
  EXPECT_EQ(check.exit_code, 0);
  ASSERT_TRUE(check.report.grading);
  EXPECT_TRUE(check.report.grading->squarefree);
  EXPECT_EQ(check.report.grading->gammas[0], (ExponentVector{1, 1, 0, 1}));

  const auto ideals = cli::run_command(opts("ideals"));
  ASSERT_TRUE(ideals.report.ideals);
  EXPECT_EQ((*ideals.report.ideals)[0].generators, (std::vector<IndexSet>{{1, 2, 3}}));
  EXPECT_EQ((*ideals.report.ideals)[1].generators, (std::vector<IndexSet>{{2, 4}, {3, 4}}));

  const auto bad = cli::run_command(opts("check", kData + "/bad.mat"));
  EXPECT_FALSE(bad.report.grading->squarefree);
  EXPECT_THROW(cli::run_command(opts("ideals", kData + "/bad.mat")), InputError);
}

TEST(Cli, ReduceUsesFileRows) {
  auto o = opts("reduce");
  o.row = 2;
  o.degree = "0,0,1,1";
  const auto r = cli::run_command(o);
  EXPECT_FALSE(r.report.details["standard"].get<bool>());
  EXPECT_EQ(r.report.details["coefficients"].size(), 1U);
  EXPECT_EQ(r.report.details["coefficients"][0]["value"].get<std::string>(), "-1/2");
}

TEST(Cli, VerifyAndExitCodes) {
  auto b = opts("betti");
  b.verify = true;
  const auto betti = cli::run_command(b);
  EXPECT_EQ(betti.exit_code, 0);
  EXPECT_EQ(betti.report.verification->checked, 16U);
  EXPECT_TRUE(betti.report.verification->mismatches.empty());

  auto l = opts("localcohom");
  l.verify = true;
  const auto lc = cli::run_command(l);
  EXPECT_EQ(lc.exit_code, 0);
  EXPECT_EQ(lc.report.verification->checked, 81U);

  auto override_bad = opts("betti");
  override_bad.gammas = "1,1,0,1;1,0,1,1";
  override_bad.betas = "0,0,0,1;1,0,0,1";
  EXPECT_THROW(cli::run_command(override_bad), InputError);
  EXPECT_THROW(cli::run_command(opts("frobnicate")), InputError);
}

TEST(Cli, JsonIsDeterministic) {
  auto o = opts("localcohom");
  o.format = "json";
  EXPECT_EQ(render_json(cli::run_command(o).report), render_json(cli::run_command(o).report));
}

#endif
