#include "dgm_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pdc {

std::string ParseError::what() const {
  if (line <= 0) return file + ": " + message;
  return file + ":" + std::to_string(line) + ": " + message;
}

namespace {

bool is_blank(const std::string& s) {
  for (char c : s) {
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

}  // namespace

Diagram parse_diagram_text(const std::string& text, const std::string& name) {
  Diagram d;
  std::istringstream in(text);
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line) || line[0] == '#') continue;
    const char* s = line.c_str();
    char* end = nullptr;
    errno = 0;
    const double birth = std::strtod(s, &end);
    if (end == s) throw ParseError{name, lineno, "expected two numbers"};
    const char* s2 = end;
    const double death = std::strtod(s2, &end);
    if (end == s2) throw ParseError{name, lineno, "expected two numbers"};
    for (const char* q = end; *q; ++q) {
      if (*q != ' ' && *q != '\t' && *q != '\r') {
        throw ParseError{name, lineno, "trailing characters after the point"};
      }
    }
    if (!std::isfinite(birth) || !std::isfinite(death)) {
      throw ParseError{name, lineno, "coordinates must be finite"};
    }
    if (death < birth) throw ParseError{name, lineno, "death < birth"};
    d.points.push_back(Point{birth, death});
  }
  return d;
}

Diagram read_diagram_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError{path, 0, "cannot open file"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_diagram_text(buf.str(), path);
}

std::string format_diagram(const Diagram& d) {
  std::string out;
  char line[80];
  for (const Point& p : d.points) {
    std::snprintf(line, sizeof(line), "%.17g %.17g\n", p.x, p.y);
    out += line;
  }
  return out;
}

void write_diagram_file(const Diagram& d, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError{path, 0, "cannot open file for writing"};
  out << format_diagram(d);
  if (!out) throw ParseError{path, 0, "write failed"};
}

}  // namespace pdc
