#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "clifford/expr.hpp"
#include "clifford/metric.hpp"
#include "clifford/multivector.hpp"
#include "clifford/textio.hpp"

namespace clifford {

/// Calculator state. The signature is ambient here only; bound values never
/// record the signature they were computed under.
struct Session {
  Signature signature = euclidean();
  std::map<std::string, Multivector, std::less<>> variables;
  PrintOptions print_options;
};

using GradeList = std::vector<std::size_t>;

/// What an expression evaluates to: a multivector, or the list produced by
/// grades().
using Value = std::variant<Multivector, GradeList>;

/// Throws EvalError on unbound variables, bad arity or bad arguments.
[[nodiscard]] Value eval_value(const Expr& expr, const Session& session);

/// As eval_value, but the result must be a multivector.
[[nodiscard]] Multivector eval_expr(const Expr& expr, const Session& session);

/// Parses `:signature` style arguments: "inf", "p" (q = 0) or "p q"; either
/// count may be "inf".
[[nodiscard]] Signature parse_signature_args(const std::vector<std::string>& args);

struct CommandResult {
  std::string output;  // empty when nothing should be printed
  bool quit = false;
};

/// Runs one input line: a `:command`, an assignment `name = expr`, or a bare
/// expression (rendered with the session's print options). `#` starts a
/// comment. Throws ParseError or EvalError; the session is only modified
/// when the line succeeds.
CommandResult run_command(std::string_view line, Session& session);

/// Feeds `in` line by line through run_command, printing results to `out`
/// and errors to `err` as "<source>:<line>: error: ...". With
/// stop_on_error the first failure ends the run. Returns the process exit
/// code: 0 on success or :quit, 1 if any line failed.
int run_stream(std::istream& in, Session& session, std::ostream& out, std::ostream& err,
               bool stop_on_error, std::string_view source = "<stdin>",
               std::string_view prompt = "");

}  // namespace clifford
