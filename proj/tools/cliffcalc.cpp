// cliffcalc: interactive Clifford algebra calculator and script runner.

#include <unistd.h>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "clifford/clifford.hpp"

namespace {

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(part);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse Clifford algebra calculator"};
  std::string script;
  std::string signature;
  std::string basis_sep;
  app.add_option("--script", script, "Run the lines of a file, stopping at the first error");
  app.add_option("--signature", signature, "Initial signature: p,q or p (q = 0); either count may be inf");
  app.add_option("--basissep", basis_sep, "Separator printed between blade subscripts");
  CLI11_PARSE(app, argc, argv);

  clifford::Session session;
  try {
    if (!signature.empty()) session.signature = clifford::parse_signature_args(split_commas(signature));
    session.print_options.basis_sep = basis_sep;
    session.print_options.validate();
  } catch (const std::exception& e) {
    std::cerr << "cliffcalc: " << e.what() << '\n';
    return 1;
  }

  if (!script.empty()) {
    std::ifstream in(script);
    if (!in) {
      std::cerr << "cliffcalc: cannot open " << script << '\n';
      return 1;
    }
    return clifford::run_stream(in, session, std::cout, std::cerr, true, script);
  }

  const bool tty = isatty(STDIN_FILENO) != 0;
  clifford::run_stream(std::cin, session, std::cout, std::cerr, false, "<stdin>", tty ? "> " : "");
  return 0;
}
