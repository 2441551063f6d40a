#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypgrp::cli {

  // Exit codes.
  inline constexpr int kOk        = 0;
  inline constexpr int kInvariant = 1;
  inline constexpr int kInput     = 2;
  inline constexpr int kBudget    = 3;

  // Environment variable overriding the default area-search node budget.
  inline constexpr char const* kNodeBudgetVariable = "HYPGRP_NODE_BUDGET";

  // Runs one command. `args` excludes the program name. The JSON report
  // goes to --output when given, otherwise to `out`; diagnostics go to
  // `err`.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace hypgrp::cli
