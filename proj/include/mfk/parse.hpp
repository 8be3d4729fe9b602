#pragma once

#include <map>
#include <string>
#include <vector>

#include "mfk/polynomial.hpp"

namespace mfk {

// Maps variable names to ring indices.  Besides an explicit table, two
// conventions are supported when no declaration accompanies a text: names of
// the form z<k> address index k directly, and any other name set is ordered
// by natural sort (digit runs compare numerically), so x0, x1, y0, y1 get the
// conventional block layout.
class VarTable {
public:
    static VarTable defaults(std::uint32_t num_vars); // z0, z1, ...
    static VarTable from_names(std::vector<std::string> names);
    // Builds a table from every identifier appearing in the given texts.
    static VarTable inferred(const std::vector<std::string>& texts);

    std::uint32_t size() const { return (std::uint32_t)names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    bool is_default() const; // z0..z{n-1}
    std::uint32_t index_of(const std::string& name) const; // throws domain_error

private:
    std::vector<std::string> names_;
    std::map<std::string, std::uint32_t> index_;
};

// Natural-order comparison used for inferred variable tables.
bool natural_less(const std::string& a, const std::string& b);

// Parses the term grammar: terms joined by + or -, each term an optional
// integer or a/b coefficient followed by *-separated var^exp factors.
// Unknown names and syntax problems raise parse_error with 1-based position.
Polynomial parse_polynomial(const std::string& text, Field k, const VarTable& vars);

struct ParsedPolynomial {
    Polynomial poly;
    VarTable vars;
};

// Parses with an inferred variable table.
ParsedPolynomial parse_polynomial(const std::string& text, Field k);

std::vector<std::string> collect_variable_names(const std::string& text);

} // namespace mfk
