#pragma once

#include "smae/expr/context.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace smae::expr {

/// Syntax tree of the expression grammar. `Wedge` appears only for the form
/// syntax "a^dx" where the right operand of '^' is a d-identifier.
struct Node {
    enum class Kind { Number, Ident, Neg, Add, Sub, Mul, Div, Pow, Sqrt, Wedge };

    Kind kind;
    std::size_t position = 0;
    mpq_class number;
    std::string name;
    unsigned exponent = 0;
    std::vector<std::unique_ptr<Node>> children;
};

/// Parses text into a syntax tree; throws ParseError on malformed input.
std::unique_ptr<Node> parse_tree(std::string_view text);

/// Evaluates a tree to a Scalar. Throws ParseError for unknown identifiers,
/// division by zero, wedge syntax or sqrt of anything but the radicand.
Scalar evaluate(const Node& node, const VariableContext& ctx);

Scalar parse(std::string_view text, const VariableContext& ctx);

/// Splits on a separator that is not nested inside parentheses.
std::vector<std::string> split_top_level(std::string_view text, char sep);

} // namespace smae::expr
