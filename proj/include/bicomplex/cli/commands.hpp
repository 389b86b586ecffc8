#pragma once

#include <optional>
#include <string>

#include "bicomplex/cli/document.hpp"
#include "bicomplex/cli/report.hpp"

namespace bicomplex::cli {

enum class Command { Equations, Check, Decompose, Hyperbolic, Higher, Verify };

/// Throws InvalidArgument for an unknown command name.
Command parse_command(const std::string& name);
std::string command_name(Command command);

struct RunOptions {
  /// "--at": comma-separated rationals, x values then y values.
  std::optional<std::string> at;
  /// "--section": contents of a section file.
  std::optional<std::string> section_text;
};

/// Runs one command. Module errors propagate as exceptions; the caller turns
/// them into diagnostics.
Report run(Command command, const SystemDocument& doc, const RunOptions& options);

/// Report holding only the document description (used for error output).
Report empty_report(const SystemDocument* doc);

}  // namespace bicomplex::cli
