#include "k3/cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <sstream>

namespace k3::cli {
namespace {

struct Run {
  int code;
  std::string out;
  nlohmann::json doc;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = dispatch(args, out, err);
  return {code, out.str(), nlohmann::json::parse(out.str())};
}

TEST(Cli, FourierMukaiCount) {
  const auto r = run({"rank2", "fm", "--b", "13"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.doc["classes"], 4);
  EXPECT_EQ(r.doc["fibration_total"], 6);
  EXPECT_EQ(r.doc["inputs"]["b"], "13");
  EXPECT_EQ(r.doc["command"], "rank2 fm");
}

TEST(Cli, SquareSolvable) {
  auto r = run({"brauer", "square", "--d", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.doc["solvable"], false);
  r = run({"brauer", "square", "--d", "2"});
  EXPECT_EQ(r.doc["witness"], 5);
}

TEST(Cli, TinyBoundIsInconclusive) {
  const auto r = run({"rank2", "isom", "--b", "9", "--c", "3", "--d", "6", "--bound", "10"});
  EXPECT_EQ(r.code, kExitInconclusive);
  EXPECT_EQ(r.doc["verdict"], "inconclusive");
  // With the default bounds the forms tell the two apart.
  const auto full = run({"rank2", "isom", "--b", "9", "--c", "3", "--d", "6"});
  EXPECT_EQ(full.code, kExitOk);
  EXPECT_EQ(full.doc["verdict"], "not_isometric");
}

TEST(Cli, IsometricWitness) {
  const auto r = run({"--bound", "50", "rank2", "isom", "--b", "5", "--c", "2", "--d", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.doc["verdict"], "isometric");
  EXPECT_EQ(r.doc["witness"], nlohmann::json::parse("[[-2,-1],[5,3]]"));
  EXPECT_EQ(r.doc["inputs"]["bound"], 50);
}

TEST(Cli, InvalidInput) {
  EXPECT_EQ(run({"rank2", "isom", "--b", "5", "--c", "1"}).code, kExitInvalid);
  EXPECT_EQ(run({"rank2", "fm", "--b", "13", "--bogus", "1"}).code, kExitInvalid);
  EXPECT_EQ(run({"rank2", "fm", "--b", "7"}).code, kExitInvalid);
  EXPECT_EQ(run({"brauer", "class", "--d", "1", "--a", "1", "--lambda", "101"}).code, kExitInvalid);
  EXPECT_EQ(run({"fib", "diag", "--coeffs", "1,1;0;0;0;1"}).code, kExitInvalid);
  EXPECT_EQ(run({"nothing"}).code, kExitInvalid);
}

TEST(Cli, ConicReportsIdentityFlag) {
  const auto r = run({"fib", "conic", "--coeffs", "1;0;0;0;1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.doc["identity_verified"], true);
  EXPECT_EQ(r.doc["det_text"], "4*x^3 - x");
  const auto nodal = run({"fib", "conic", "--coeffs", "0;0;1;0;0"});
  EXPECT_EQ(nodal.doc["identity_verified"], false);
  EXPECT_EQ(nodal.doc["det_text"], "4*x^3 - 3*x - 1");
  EXPECT_EQ(nodal.doc["cubic"], "4*x^3 - 3*x + 1");
}

TEST(Cli, PlainCoefficientsAndSpecialization) {
  const auto r = run({"fib", "jacobian", "--plain-coeffs", "--coeffs", "1;0;6;0;1"});
  EXPECT_EQ(r.doc["a"], nlohmann::json::parse(R"(["1","0","1","0","1"])"));
  const auto d = run({"fib", "diag", "--coeffs", "1,1;0;0;0;1", "--at", "2"});
  EXPECT_EQ(d.code, kExitOk);
  EXPECT_EQ(d.doc["identity_verified"], true);
  EXPECT_EQ(d.doc["a"][0], "3");
}

TEST(Cli, DiagAndResolvent) {
  const auto d = run({"fib", "diag", "--coeffs", "1;0;0;0;1"});
  EXPECT_EQ(d.doc["symbol"][0]["text"], "x");
  EXPECT_EQ(d.doc["symbol"][1]["text"], "4*x^2 - 1");
  const auto r = run({"fib", "resolvent", "--coeffs", "1;0;0;0;1", "--tol", "1e-8"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.doc["passed"], true);
  EXPECT_LT(r.doc["numerical"]["residual"].get<double>(), 1e-8);
  EXPECT_EQ(run({"fib", "resolvent", "--coeffs", "0;0;1;0;1"}).code, kExitInvalid);
}

TEST(Cli, LatticeCommands) {
  const auto r = run({"lattice", "show", "--name", "LAMBDA_BC", "--b", "5", "--c", "2"});
  EXPECT_EQ(r.doc["determinant"], -25);
  EXPECT_EQ(r.doc["discriminant_form"]["orders"], nlohmann::json::parse("[25]"));
  const auto z = run({"brauer", "zeros", "--lattice", "U"});
  EXPECT_EQ(z.doc["zeros"], 3);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"rank2", "census", "--b", "7"};
  EXPECT_EQ(run(args).out, run(args).out);
  EXPECT_EQ(run({"suite", "fast"}).out, run({"suite", "fast"}).out);
}

}  // namespace
}  // namespace k3::cli
