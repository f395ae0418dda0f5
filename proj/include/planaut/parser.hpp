#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "planaut/errors.hpp"
#include "planaut/mapform.hpp"
#include "planaut/poly.hpp"

namespace planaut {

/// Syntax error at a 1-based line/column, with the set of tokens that would
/// have been accepted there.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected, std::string found,
               const std::string& detail = {});

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }
    const std::string& found() const noexcept { return found_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::vector<std::string> expected_;
    std::string found_;
};

/// Grammar (highest precedence first):
///
///   primary  := integer [ "/" integer ] | "x" | "y" | "(" expr ")"
///   power    := primary [ "^" exponent ]        exponent := integer [ "^" exponent ]
///   unary    := "-" unary | power
///   term     := unary { "*" unary }
///   expr     := term { ("+" | "-") term }
BivarPoly parse_poly(std::string_view text);

/// Canonical text: terms in graded order, "-1/2*x^3*y" style, "0" for zero.
/// parse_poly(print_poly(p)) == p.
std::string print_poly(const BivarPoly& p);

/// An input file: "f = <expr>" and "g = <expr>" separated by newlines or
/// semicolons, "#" comments to end of line.
struct MapDocument {
    std::string f_source;
    std::string g_source;
    PlaneMap parsed;
};

MapDocument parse_map_document(std::string_view text);
/// Renders a document that parse_map_document reads back to the same map.
std::string print_map_document(const PlaneMap& map);

}  // namespace planaut
