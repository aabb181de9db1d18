#include <gtest/gtest.h>

#include "reeskit/script.hpp"

namespace rs = reeskit::script;

namespace {

rs::ResultDocument runScript(const std::string& text, const rs::Config& cfg = {}) {
  return rs::executeScript(rs::parseScript(text), cfg);
}

std::string textOf(const std::string& text, const rs::Config& cfg = {}) {
  return rs::emit(runScript(text, cfg), rs::OutputMode::Text, cfg);
}

}  // namespace

TEST(ScriptParser, IdealBinding) {
  rs::Script s = rs::parseScript("ring R = zmod 101 [x, y];\nideal I = x^2 - y;");
  EXPECT_EQ(s.statements.size(), 2u);
  auto doc = rs::executeScript(rs::parseScript("ring R = zmod 101 [x, y];\nideal I = x^2 - y;\nnumgens(I)"));
  ASSERT_EQ(doc.status, rs::Status::Ok);
  EXPECT_EQ(doc.entries.back().text, "1");
}

TEST(ScriptParser, CallWithTwoArguments) {
  auto doc = runScript("ring R = zmod 101 [x, y];\nideal I = y - x^2;\nprint intersectInP(I, ideal(y));");
  ASSERT_EQ(doc.status, rs::Status::Ok);
  EXPECT_EQ(doc.entries.back().text, "{{2, ideal[ x, y ]}}");
}

TEST(ScriptParser, NonPrimeCharacteristic) {
  try {
    rs::parseScript("ring R = zmod 4 [x];");
    FAIL() << "expected a parse error";
  } catch (const rs::ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 15);
  }
}

TEST(ScriptParser, SyntaxErrorPositions) {
  try {
    rs::parseScript("ring R = zmod 7 [x];\nlet a = (x + ;");
    FAIL();
  } catch (const rs::ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 14);
  }
  EXPECT_THROW(rs::parseScript("print \"open"), rs::ParseError);
  EXPECT_THROW(rs::parseScript("let 3 = 4;"), rs::ParseError);
  EXPECT_THROW(rs::parseScript("assertEqual(1);"), rs::ParseError);
  EXPECT_THROW(rs::parseScript("x $ y"), rs::ParseError);
}

TEST(ScriptEval, UnknownIdentifierAndArity) {
  auto doc = runScript("ring R = zmod 7 [x];\nprint z + 1;");
  EXPECT_EQ(doc.status, rs::Status::Error);
  EXPECT_NE(doc.message.find("line 2"), std::string::npos);
  EXPECT_NE(doc.message.find("unknown identifier 'z'"), std::string::npos);
  doc = runScript("ring R = zmod 7 [x];\ncodim(ideal(x), 2);");
  EXPECT_EQ(doc.status, rs::Status::Error);
  EXPECT_NE(doc.message.find("wrong number of arguments"), std::string::npos);
  EXPECT_EQ(rs::exitCode(doc), 2);
}

TEST(ScriptEval, TypeErrorsCarryLine) {
  auto doc = runScript("ring R = zmod 7 [x];\n\nminors(ideal(x), 2);");
  EXPECT_EQ(doc.status, rs::Status::Error);
  EXPECT_EQ(doc.message.rfind("line 3:", 0), 0u) << doc.message;
}

TEST(ScriptEval, EmptyScript) {
  auto doc = runScript("");
  EXPECT_EQ(doc.status, rs::Status::Ok);
  EXPECT_TRUE(doc.entries.empty());
  EXPECT_EQ(rs::exitCode(doc), 0);
}

TEST(ScriptEval, AssertionFailureStops) {
  auto doc = runScript("assertEqual(1, 2);\nprint 3;");
  EXPECT_EQ(doc.status, rs::Status::AssertionFailed);
  EXPECT_EQ(rs::exitCode(doc), 1);
  EXPECT_TRUE(doc.entries.empty());
}

TEST(ScriptEval, TacnodeSessionExitsZero) {
  const char* script = R"(ring R = zmod 101 [x, y];
ideal X = y^4 - x^2;
let B = blowupOf(ideal(x, y^2));
let S = strictTransform(B, X);
assertTrue(isSmoothAwayFromIrrelevant(B, S));
)";
  EXPECT_EQ(rs::exitCode(runScript(script)), 0);
}

TEST(ScriptEval, Arithmetic) {
  EXPECT_EQ(textOf("print 2 ^ 3 ^ 2;"), "512\n");
  EXPECT_EQ(textOf("print -2 ^ 2;"), "-4\n");
  EXPECT_EQ(textOf("print gf(3, 7) / gf(2, 7);"), textOf("print gf(5, 7);"));
  EXPECT_EQ(textOf("ring R = zmod 7 [x, y];\nprint (x + y)^7;"), "x^7 + y^7\n");
  EXPECT_EQ(textOf("ring R = zmod 7 [x, y] / (x^2);\nprint (x + y)^2;"), "2*x*y + y^2\n");
  EXPECT_EQ(textOf("print INFINITY > 1000;"), "true\n");
  EXPECT_EQ(textOf("ring R = zmod 7 [x, y];\nprint ideal(x) * ideal(y) + ideal(x^2);"), "ideal[ x^2, x*y ]\n");
}

TEST(ScriptEval, RingBlocksAndWeights) {
  auto doc = runScript("ring A = zmod 5 [x, y:2 | w_0] elim;\nprint A;\nprint isHomogeneous(ideal(x^2 - y));");
  ASSERT_EQ(doc.status, rs::Status::Ok) << doc.message;
  EXPECT_EQ(doc.entries[0].text, "GF(5)[x, y | w_0]");
  EXPECT_EQ(doc.entries[1].text, "true");
}

TEST(ScriptEval, MultisetEquality) {
  EXPECT_EQ(rs::exitCode(runScript(R"(ring R = zmod 101 [x, y];
let L = intersectInP(ideal(x^2*y), ideal(x*y^2));
assertEqual(L, {{5, ideal(x, y)}, {2, ideal(x)}, {2, ideal(y)}});
assertTrue(L != {{5, ideal(x, y)}, {2, ideal(x)}});
)")),
            0);
}

TEST(ScriptEmit, CanonicalLines) {
  EXPECT_EQ(textOf("print true;"), "true\n");
  EXPECT_EQ(textOf("ring R = zmod 101 [x, y | w_0, w_1];\nprint ideal(y*w_0 - x*w_1);"),
            "ideal[ y*w_0 - x*w_1 ]\n");
}

TEST(ScriptEmit, JsonSchema) {
  rs::Config cfg;
  auto doc = runScript("ring R = zmod 101 [x, y];\nintersectInP(ideal(y - x^2), ideal(y))");
  std::string j = rs::emit(doc, rs::OutputMode::Json, cfg);
  EXPECT_NE(j.find("\"schema\": 1"), std::string::npos);
  EXPECT_NE(j.find("\"m\": 2"), std::string::npos);
  EXPECT_NE(j.find("\"generators\""), std::string::npos);
  EXPECT_NE(j.find("\"kind\": \"weighted-components\""), std::string::npos);
}

TEST(ScriptEmit, RoundTripIdealsAndMatrices) {
  const std::string ring = "ring R = zmod 101 [x, y, z | w_0, w_1];\n";
  const char* values[] = {
      "ideal(x^2 - 3*y*z, y^3 + 50*x*w_1, z)",
      "ideal(x*y - z^2)^2",
      "ideal(x^2, y^2) * ideal(w_0, w_1)",
      "matrix{{x, -y^2, 0}, {z*w_0 - 1, 7, x}}",
      "transpose(matrix{{x + y, 100*z}})",
  };
  for (const char* v : values) {
    auto first = runScript(ring + "print " + v + ";");
    ASSERT_EQ(first.status, rs::Status::Ok) << first.message;
    std::string printed = first.entries.back().text;
    std::string rebuilt = printed;
    if (rebuilt.rfind("ideal[", 0) == 0) rebuilt = "ideal(" + rebuilt.substr(6, rebuilt.size() - 7) + ")";
    auto second = runScript(ring + "assertEqual(" + rebuilt + ", " + v +
                            ");\nprint " + rebuilt + ";");
    ASSERT_EQ(second.status, rs::Status::Ok) << second.message;
    EXPECT_EQ(second.entries.back().text, printed);
  }
}

TEST(ScriptEmit, Determinism) {
  const char* script = R"(ring R = zmod 101 [x, y, z];
let I = ideal(x^2, x*y, y^2, z^3);
print minimalReduction(I);
print minimalPrimes(ideal(x*y*z, x^2 - y^2));
print randomPoly(R, 2);
print intersectInP(ideal(x^2*y), ideal(x^2*y));
)";
  rs::Config cfg;
  cfg.seed = 17;
  for (auto mode : {rs::OutputMode::Text, rs::OutputMode::Json})
    EXPECT_EQ(rs::emit(runScript(script, cfg), mode, cfg), rs::emit(runScript(script, cfg), mode, cfg));
}

TEST(ScriptEmit, VerifyFlags) {
  rs::Config cfg;
  cfg.verify = true;
  auto doc = runScript("ring R = zmod 101 [x, y];\nprint reesIdeal(ideal(x^2, y^3));", cfg);
  ASSERT_EQ(doc.status, rs::Status::Ok) << doc.message;
  ASSERT_EQ(doc.entries.size(), 1u);
  EXPECT_EQ(doc.entries[0].flags, std::vector<std::string>{"verified: universal embedding"});
}

TEST(ScriptRegistry, EveryOpExampleRuns) {
  auto ops = rs::registeredOps();
  EXPECT_GE(ops.size(), 80u);
  for (const auto& op : ops) {
    SCOPED_TRACE(op.name);
    ASSERT_NE(op.example.find(op.name + (op.name == "matrix" ? "{" : "(")), std::string::npos)
        << "example does not call " << op.name;
    auto doc = runScript(op.example);
    EXPECT_EQ(doc.status, rs::Status::Ok) << doc.message;
  }
}

TEST(ScriptRegistry, PublicOperationsReachable) {
  const char* required[] = {
      "gf", "inv", "factorUnivariate", "factorMultivariate", "makeRing", "add", "mul", "pow", "scale",
      "homogenize", "apply", "randomPoly", "groebnerBasis", "normalForm", "eliminate", "kernelOfRingMap",
      "colonAndSaturate", "intersectIdeals", "dimensionAndDegree", "hilbertSeries", "kernelOfMatrix",
      "minorsIdeal", "trimHomogeneous", "gradedPieceDim", "minimalPrimes", "universalEmbedding",
      "symmetricKernel", "symmetricAlgebraIdeal", "reesIdeal", "isLinearType", "normalCone",
      "associatedGradedRing", "multiplicity", "specialFiberIdeal", "analyticSpread", "minimalReduction",
      "isReduction", "reductionNumber", "whichGm", "jacobianDual", "expectedReesIdeal", "distinguished",
      "intersectInP", "blowupOf", "totalTransform", "strictTransform", "singularLocusIdeal",
      "isSmoothAwayFromIrrelevant"};
  std::set<std::string> names;
  for (const auto& op : rs::registeredOps()) names.insert(op.name);
  for (const char* r : required) EXPECT_TRUE(names.count(r)) << r;
}
