#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "grc/cli.hpp"

using namespace grc;

namespace {

struct Out {
  int code;
  std::string out;
  std::string err;
};

Out call(std::vector<std::string> args) {
  std::ostringstream o, e;
  const int code = run(args, o, e);
  return {code, o.str(), e.str()};
}

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST(Cli, ReducedNormOfDihedralRotation) {
  const Out r = call({"nr", "--group", "D8", "--element", "a"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("nr = (1/4)(3C1 - C2 + C3 - C4 + C5)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("C3 = class of a (size 2)"), std::string::npos) << r.out;
  const Out j = call({"nr", "--group", "D8", "--element", "a", "--format", "json"});
  const auto js = nlohmann::json::parse(j.out);
  EXPECT_EQ(js.at("denominator"), "4");
}

TEST(Cli, ZeroAdjoint) {
  const Out r = call({"adjoint", "--group", "S3", "--zero"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("0* = (1/3)Tr_{G'}"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("H* = 1/3:1, 1/3:s, 1/3:s^2"), std::string::npos) << r.out;
  const Out m = call({"adjoint", "-g", "S3", "-m", "1:t|1:1;0|1:s"});
  EXPECT_EQ(m.code, 0) << m.err;
}

TEST(Cli, Classes) {
  const Out r = call({"classes", "--group", "C5"});
  EXPECT_EQ(r.code, 0);
  std::istringstream in(r.out);
  int lines = 0;
  for (std::string l; std::getline(in, l);) {
    ++lines;
    EXPECT_NE(l.find(" size 1 "), std::string::npos) << l;
  }
  EXPECT_EQ(lines, 5);
}

TEST(Cli, ChartabRoundTrip) {
  const auto path = temp_file("grc_cli_s4.tab");
  const Out s = call({"chartab", "-g", "S4", "--save", path.string()});
  EXPECT_EQ(s.code, 0) << s.err;
  const Out l = call({"chartab", "-g", "S4", "--load", path.string()});
  EXPECT_EQ(l.code, 0) << l.err;
  EXPECT_EQ(s.out, l.out);
  const Out j = call({"chartab", "-g", "S4", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(j.out).at("characters").size(), 5u);
  EXPECT_EQ(call({"chartab", "-g", "S4", "--load", "/nonexistent/table"}).code, 2);
  std::filesystem::remove(path);
}

TEST(Cli, Subcommands) {
  EXPECT_EQ(call({"idempotents", "-g", "S3"}).code, 0);
  const Out ed = call({"ed", "-g", "SL2_3", "2"});
  EXPECT_EQ(ed.code, 0);
  EXPECT_NE(ed.out.find("integral: yes, supported on G': yes"), std::string::npos) << ed.out;
  const Out p = call({"probe", "-g", "A4", "--trials", "10", "--format", "json"});
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(nlohmann::json::parse(p.out).at("records").size(), 13u);
  const Out w = call({"witness", "-g", "C6"});
  EXPECT_EQ(w.code, 0);
  EXPECT_NE(w.out.find("no witness: abelian"), std::string::npos);
  const Out rc = call({"restrict-check", "-g", "S4", "t", "s*t*s^-1", "--trials", "5"});
  EXPECT_EQ(rc.code, 0) << rc.out;
  EXPECT_NE(rc.out.find("agree on 5/5"), std::string::npos);
  const Out cc = call({"clifford-check", "-g", "D8"});
  EXPECT_EQ(cc.code, 0);
  EXPECT_NE(cc.out.find(" 0 failed"), std::string::npos);
  EXPECT_EQ(call({"clifford-check", "-g", "S3", "t"}).code, 2);
  const Out f = call({"frobenius", "-g", "Aff_7"});
  EXPECT_NE(f.out.find("(order 7)"), std::string::npos) << f.out;
  EXPECT_NE(call({"frobenius", "-g", "D8"}).out.find("not a Frobenius group"), std::string::npos);
}

TEST(Cli, AModP) {
  const auto path = temp_file("grc_cli_s3.deg");
  std::ofstream(path) << "1 2\n2 1\n";
  const Out r = call({"amodp", "--degrees", path.string(), "--n", "-1", "--p", "5", "--p", "7"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "p 5 residue 2 A(n) 2\np 7 residue 2 A(n) 2\n");
  EXPECT_EQ(call({"amodp", "--degrees", path.string(), "--p", "6"}).code, 2);
  EXPECT_EQ(call({"amodp", "--degrees", "/nonexistent", "--p", "5"}).code, 2);
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"nr", "-g", "D8"}).code, 2);
  EXPECT_EQ(call({"nr", "-g", "D8", "-e", "a", "-m", "a"}).code, 2);
  EXPECT_EQ(call({"nr", "-g", "Nope", "-e", "a"}).code, 2);
  EXPECT_EQ(call({"nr", "-g", "D8", "-e", "q"}).code, 2);
  EXPECT_EQ(call({"classes"}).code, 2);
  EXPECT_EQ(call({"classes", "-g", "S3", "--format", "xml"}).code, 2);
  EXPECT_EQ(call({"probe", "-g", "S3", "--bound", "0"}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, OutputFile) {
  const auto path = temp_file("grc_cli_out.json");
  EXPECT_EQ(call({"classes", "-g", "S3", "--format", "json", "-o", path.string()}).code, 0);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j.size(), 3u);
  std::filesystem::remove(path);
}

TEST(Cli, WorkedExampleSuite) {
  const Out r = call({"repro-paper"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("SKIP monster-residues"), std::string::npos);
  // a degree file with the wrong data fails the Monster row
  const auto path = temp_file("grc_cli_fake.deg");
  std::ofstream(path) << "1 1\n";
  const Out bad = call({"repro-paper", "--degrees", path.string()});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("FAIL monster-residues"), std::string::npos);
  std::filesystem::remove(path);
}
