#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "bicomplex/cli/commands.hpp"

namespace {

using namespace bicomplex;
using namespace bicomplex::cli;

std::string read_file(const std::string& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, std::string("cannot read ") + what + " '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const std::string& bytes, const std::string& output) {
  if (output.empty()) {
    std::cout << bytes;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out || !(out << bytes)) {
    throw Error(ErrorCode::IoError, "cannot write output '" + output + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variational bicomplex analyses of balance systems"};
  app.require_subcommand(1, 1);

  std::string file;
  std::string format_name = "text";
  std::string output;
  std::string at;
  std::string section_path;

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"equations", "Balance residuals, K-form and source form"},
      {"check", "Helmholtz closure, trivial quasi-Lagrangian and Godunov checks"},
      {"decompose", "Quasi-Lagrangian, K and F splittings"},
      {"hyperbolic", "Symmetric hyperbolicity at a point (--at)"},
      {"higher", "Residuals of a system with higher-order flux slots"},
      {"verify", "Residuals evaluated on a section (--section)"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "System file")->required();
    sub->add_option("--format", format_name, "text, latex or structured")
        ->check(CLI::IsMember({"text", "latex", "structured"}));
    sub->add_option("--output", output, "Write the report to this path");
    if (std::string(name) == "hyperbolic") {
      sub->add_option("--at", at, "Comma-separated rationals: x values, then y values")
          ->required();
    }
    if (std::string(name) == "verify") {
      sub->add_option("--section", section_path, "Section file")->required();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : 2;
  }

  const Format format = parse_format(format_name);
  std::unique_ptr<SystemDocument> doc;
  try {
    const Command command = parse_command(app.get_subcommands().front()->get_name());
    doc = std::make_unique<SystemDocument>(parse_system(read_file(file, "system file")));
    RunOptions options;
    if (!at.empty()) options.at = at;
    if (!section_path.empty()) options.section_text = read_file(section_path, "section file");
    emit(render(run(command, *doc, options), format), output);
    return 0;
  } catch (const Error& e) {
    Diagnostic d;
    if (const auto* de = dynamic_cast<const DiagnosticError*>(&e)) {
      d = de->diagnostic();
    } else {
      d.code = e.code();
      d.message = e.what();
    }
    std::cerr << file << ":" << d.str() << "\n";
    if (format == Format::Structured) {
      Report report = empty_report(doc.get());
      report.diagnostics.push_back(d);
      try {
        emit(render(report, format), output);
      } catch (const Error&) {
      }
    }
    return exit_status(d.code);
  } catch (const std::exception& e) {
    std::cerr << "error[InternalInvariant]: " << e.what() << "\n";
    return 3;
  }
}
