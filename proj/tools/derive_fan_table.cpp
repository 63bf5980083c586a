// Re-derives the triangular fan base table and prints it either as the
// embedded C++ data header (--header) or as golden JSON (default).

#include <cstring>
#include <iostream>

#include "intcol/fan.hpp"
#include "intcol/io.hpp"

int main(int argc, char** argv) {
  const bool header = argc > 1 && std::strcmp(argv[1], "--header") == 0;
  const intcol::FanBaseTable table = intcol::derive_base_table();
  if (!header) {
    intcol::json out = intcol::json::object();
    for (const auto& [n, coloring] : table.entries) out[std::to_string(n)] = intcol::coloring_to_json(coloring);
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::size_t rows = 0;
  for (const auto& [n, coloring] : table.entries) rows += coloring.size();
  std::cout << "#pragma once\n// Generated by tools/derive_fan_table. Do not edit by hand.\n\n#include <array>\n\n"
            << "namespace intcol::detail {\n\nstruct FanBaseRow {\n  int n, t, a, b, color;\n};\n\n"
            << "inline constexpr std::array<FanBaseRow, " << rows << "> kFanBaseRows{{\n";
  for (const auto& [n, coloring] : table.entries) {
    for (const auto& [e, c] : coloring.assignment()) {
      std::cout << "    {" << n << ", " << coloring.t() << ", " << e.u << ", " << e.v << ", " << c << "},\n";
    }
  }
  std::cout << "}};\n\n}  // namespace intcol::detail\n";
  return 0;
}
