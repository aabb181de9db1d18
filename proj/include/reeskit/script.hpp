#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "reeskit/error.hpp"

namespace reeskit::script {

/// Syntax error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct Statement;

/// Parsed statement sequence.
struct Script {
  std::vector<std::shared_ptr<const Statement>> statements;
};

/// Grammar, one statement per `;`:
///   ring R = zmod 101 [x, y | w_0, w_1] elim / (x^2, ideal(y)^3);
///   use EXPR;   ideal I = x^2 - y, y;   let L = EXPR;   print EXPR;
///   assertEqual(EXPR, EXPR);   assertTrue(EXPR);   EXPR;  (printed)
/// Comments run from `--` or `//` to the end of the line. A final bare
/// statement may omit its `;`.
Script parseScript(const std::string& text);

struct Config {
  std::uint64_t seed = 0;
  int capReduction = 20;
  int capMultiplicity = 30;
  bool verify = false;
};

enum class Status { Ok, AssertionFailed, Error };

struct ResultEntry {
  int statement;        ///< 0-based statement index
  int line;
  std::string kind;     ///< value kind, or "assertion"
  std::string text;     ///< canonical text rendering
  std::string json;     ///< serialized JSON value
  std::vector<std::string> flags;
};

struct ResultDocument {
  std::vector<ResultEntry> entries;
  Status status = Status::Ok;
  std::string message;  ///< failure description with its line
};

/// Runs the statements in order and stops at the first failure.
ResultDocument executeScript(const Script& script, const Config& config = {});

enum class OutputMode { Text, Json };
std::string emit(const ResultDocument& document, OutputMode mode, const Config& config = {});

/// Exit status for a document: 0 ok, 1 assertion failure, 2 error.
int exitCode(const ResultDocument& document);

struct OpInfo {
  std::string name;
  std::string signature;
  std::string example;  ///< self-contained script exercising the op
};
/// Every callable operation of the script language.
std::vector<OpInfo> registeredOps();

}  // namespace reeskit::script
