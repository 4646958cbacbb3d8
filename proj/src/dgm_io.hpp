#pragma once

#include <string>

#include "geometry.hpp"

namespace pdc {

// Text diagram format: one "birth death" pair per line, '#' lines are
// comments, blank lines are ignored. Writing uses 17 significant digits so
// parse(write(d)) reproduces d exactly.

struct ParseError {
  std::string file;
  long line = 0;  // 0 when the file could not be opened
  std::string message;

  std::string what() const;
};

// Throws ParseError on malformed input (including death < birth, reported with
// its line number).
Diagram read_diagram_file(const std::string& path);
Diagram parse_diagram_text(const std::string& text, const std::string& name);

std::string format_diagram(const Diagram& d);
void write_diagram_file(const Diagram& d, const std::string& path);

}  // namespace pdc
