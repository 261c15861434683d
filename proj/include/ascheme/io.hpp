#pragma once

// File formats. Scheme files:
//
//   ASCHEME v=<v> d=<d>
//   <v lines of v space-separated class indices>
//
// Lines starting with '#' are ignored. Clique witnesses list one vertex per
// line; spread witnesses put "# clique i" before each block.

#include "ascheme/scheme.hpp"
#include "ascheme/spreads.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace ascheme {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, std::size_t line, std::size_t column, const std::string& message);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ColorMatrix parse_scheme(std::istream& in, const std::string& source = "<input>");
ColorMatrix read_scheme(const std::string& path);
std::string format_scheme(const ColorMatrix& c);
void write_scheme(const ColorMatrix& c, const std::string& path);

/// Blocks "# P", "# Q" and "# multiplicities", entries tab-separated,
/// rationals as a or a/b.
std::string format_eigenmatrix(const Spectrum& s);
void write_eigenmatrix(const Spectrum& s, const std::string& path);

std::vector<std::size_t> read_clique(const std::string& path);
void write_clique(const std::vector<std::size_t>& clique, const std::string& path);
std::string format_spread(const Spread& s);
void write_spread(const Spread& s, const std::string& path);
/// Reads a spread witness on v vertices (cliques separated by "# clique" lines).
Spread read_spread(const std::string& path, std::size_t v);

void write_text(const std::string& text, const std::string& path);

} // namespace ascheme
