#include "clifford/repl.hpp"

#include <cmath>
#include <filesystem>
#include <sstream>

#include "clifford/error.hpp"
#include "clifford/products.hpp"
#include "clifford/random.hpp"
#include "detail/scan.hpp"

namespace clifford {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

const Multivector& as_multivector(const Value& v, std::string_view context) {
  if (const auto* mv = std::get_if<Multivector>(&v)) return *mv;
  throw EvalError(std::string(context) + ": expected a multivector, got a grade list");
}

long long integer_arg(const Value& v, std::string_view fn, std::size_t which, long long lo,
                      long long hi) {
  const auto& mv = as_multivector(v, fn);
  const std::string where = std::string(fn) + "() argument " + std::to_string(which + 1);
  if (!mv.is_scalar()) throw EvalError(where + " must be a scalar");
  const double c = mv.scalar_part();
  if (c != std::floor(c) || c < static_cast<double>(lo) || c > static_cast<double>(hi)) {
    throw EvalError(where + " must be an integer in [" + std::to_string(lo) + ", " +
                    std::to_string(hi) + "]");
  }
  return static_cast<long long>(c);
}

void check_arity(const Call& call, std::size_t n) {
  if (call.args.size() != n) {
    throw EvalError(call.name + "() takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s") +
                    ", got " + std::to_string(call.args.size()));
  }
}

Value eval_call(const Call& call, const Session& session) {
  std::vector<Value> args;
  args.reserve(call.args.size());
  for (const auto& a : call.args) args.push_back(eval_value(*a, session));

  if (call.name == "e") {
    check_arity(call, 1);
    return Multivector::basis(static_cast<std::uint32_t>(integer_arg(args[0], "e", 0, 1, kMaxIndex)));
  }
  if (call.name == "grade") {
    check_arity(call, 2);
    const auto r = integer_arg(args[1], "grade", 1, 0, kMaxIndex);
    return grade_part(as_multivector(args[0], "grade"), static_cast<std::size_t>(r));
  }
  if (call.name == "grades") {
    check_arity(call, 1);
    return grades(as_multivector(args[0], "grades"));
  }
  if (call.name == "scalar") {
    check_arity(call, 1);
    return grade_part(as_multivector(args[0], "scalar"), 0);
  }
  if (call.name == "rand") {
    check_arity(call, 4);
    RandomSpec spec;
    spec.dimension = static_cast<std::uint32_t>(integer_arg(args[0], "rand", 0, 1, kMaxIndex));
    spec.max_grade = static_cast<std::uint32_t>(integer_arg(args[1], "rand", 1, 0, kMaxIndex));
    spec.include_fewer = integer_arg(args[2], "rand", 2, 0, 1) == 1;
    // Seeds are limited to integers a double holds exactly.
    spec.seed = static_cast<std::uint64_t>(integer_arg(args[3], "rand", 3, 0, 1LL << 53));
    try {
      return random_multivector(spec);
    } catch (const std::invalid_argument& e) {
      throw EvalError(e.what());
    }
  }
  throw EvalError("unknown function '" + call.name + "'");
}

}  // namespace

Value eval_value(const Expr& expr, const Session& session) {
  const Signature& sig = session.signature;
  return std::visit(
      overloaded{
          [](const NumberLit& n) -> Value { return Multivector::from_scalar(n.value); },
          [](const BladeLit& b) -> Value {
            try {
              return Multivector::from_terms({b.indices}, {1.0});
            } catch (const std::invalid_argument& e) {
              throw EvalError(e.what());
            }
          },
          [&](const VariableRef& v) -> Value {
            auto it = session.variables.find(v.name);
            if (it == session.variables.end()) throw EvalError("unbound variable '" + v.name + "'");
            return it->second;
          },
          [&](const Negate& n) -> Value {
            return -as_multivector(eval_value(*n.operand, session), "unary '-'");
          },
          [&](const Power& p) -> Value {
            return power(as_multivector(eval_value(*p.base, session), "'**'"), p.exponent, sig);
          },
          [&](const Binary& b) -> Value {
            const Value lv = eval_value(*b.lhs, session);
            const Value rv = eval_value(*b.rhs, session);
            const auto& l = as_multivector(lv, "binary operator");
            const auto& r = as_multivector(rv, "binary operator");
            switch (b.op) {
              case BinaryOp::Add: return l + r;
              case BinaryOp::Subtract: return l - r;
              case BinaryOp::Product: return geometric_product(l, r, sig);
              case BinaryOp::Wedge: return wedge(l, r);
              case BinaryOp::LeftContraction: return left_contraction(l, r, sig);
              case BinaryOp::RightContraction: return right_contraction(l, r, sig);
            }
            throw EvalError("unknown operator");
          },
          [&](const Call& c) -> Value { return eval_call(c, session); },
      },
      expr.node);
}

Multivector eval_expr(const Expr& expr, const Session& session) {
  return as_multivector(eval_value(expr, session), "expression");
}

Signature parse_signature_args(const std::vector<std::string>& args) {
  auto count = [](const std::string& s) -> Count {
    if (s == "inf" || s == "Inf") return unbounded;
    auto v = detail::to_uint(s);
    if (!v || *v > 0xffffffffULL) throw EvalError("bad signature count '" + s + "'");
    return static_cast<long long>(*v);
  };
  if (args.size() == 1) return Signature(count(args[0]));
  if (args.size() == 2) return Signature(count(args[0]), count(args[1]));
  throw EvalError("signature takes 1 or 2 counts");
}

namespace {

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

std::string render_value(const Value& v, const PrintOptions& opts) {
  if (const auto* mv = std::get_if<Multivector>(&v)) return render(*mv, opts);
  const auto& g = std::get<GradeList>(v);
  if (g.empty()) return "grades: (none)";
  std::string out = "grades:";
  for (auto x : g) out += " " + std::to_string(x);
  return out;
}

void check_name(const std::string& name) {
  bool ok = !name.empty() && std::isalpha(static_cast<unsigned char>(name[0])) != 0;
  for (char c : name) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_');
  if (!ok) throw EvalError("invalid variable name '" + name + "'");
  if (is_reserved_name(name)) throw EvalError("'" + name + "' is reserved");
}

CommandResult run_colon_command(std::string_view line, Session& session) {
  auto words = split_words(line.substr(1));
  if (words.empty()) throw EvalError("empty command");
  const std::string cmd = words.front();
  words.erase(words.begin());

  if (cmd == "quit" || cmd == "q") return {"", true};
  if (cmd == "signature") {
    if (words.empty()) return {"signature " + session.signature.to_string()};
    session.signature = parse_signature_args(words);
    return {};
  }
  if (cmd == "basissep") {
    if (words.size() > 1) throw EvalError(":basissep takes at most one argument");
    PrintOptions opts = session.print_options;
    opts.basis_sep = words.empty() ? "" : words[0];
    try {
      opts.validate();
    } catch (const std::invalid_argument& e) {
      throw EvalError(e.what());
    }
    session.print_options = opts;
    return {};
  }
  if (cmd == "save") {
    if (words.size() != 2) throw EvalError("usage: :save <name> <path>");
    auto it = session.variables.find(words[0]);
    if (it == session.variables.end()) throw EvalError("unbound variable '" + words[0] + "'");
    try {
      save(it->second, words[1]);
    } catch (const std::runtime_error& e) {
      throw EvalError(e.what());
    }
    return {};
  }
  if (cmd == "load") {
    if (words.empty() || words.size() > 2) throw EvalError("usage: :load <path> [name]");
    const std::filesystem::path path(words[0]);
    const std::string name = words.size() == 2 ? words[1] : path.stem().string();
    check_name(name);
    Multivector value;
    try {
      value = load(path);
    } catch (const ParseError& e) {
      throw EvalError(path.string() + ": " + e.what());
    } catch (const std::runtime_error& e) {
      throw EvalError(e.what());
    }
    session.variables.insert_or_assign(name, std::move(value));
    return {};
  }
  throw EvalError("unknown command ':" + cmd + "'");
}

}  // namespace

CommandResult run_command(std::string_view line, Session& session) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  line = detail::trim(line);
  if (line.empty()) return {};

  if (line.front() == ':') {
    // Commands validate fully before touching the session.
    Session scratch = session;
    auto result = run_colon_command(line, scratch);
    session = std::move(scratch);
    return result;
  }

  Statement st = parse_statement(line);
  Value v = eval_value(*st.expr, session);
  if (st.target) {
    session.variables.insert_or_assign(*st.target, as_multivector(v, "assignment"));
    return {};
  }
  return {render_value(v, session.print_options)};
}

int run_stream(std::istream& in, Session& session, std::ostream& out, std::ostream& err,
               bool stop_on_error, std::string_view source, std::string_view prompt) {
  int status = 0;
  std::string line;
  std::size_t line_no = 0;
  while (true) {
    if (!prompt.empty()) out << prompt << std::flush;
    if (!std::getline(in, line)) break;
    ++line_no;
    try {
      auto result = run_command(line, session);
      if (!result.output.empty()) out << result.output << '\n';
      if (result.quit) return status;
    } catch (const std::exception& e) {
      err << source << ':' << line_no << ": error: " << e.what() << '\n';
      status = 1;
      if (stop_on_error) return status;
    }
  }
  return status;
}

}  // namespace clifford
