/*
   Copyright 2026 The gop Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GOP_CLI_PARSER_HPP
#define GOP_CLI_PARSER_HPP

#include <stdexcept>
#include <string>

#include "gop/diffop.hpp"

namespace gop::cli {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line_(line), column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_, column_;
};

class MixedBasisError : public ParseError {
public:
    using ParseError::ParseError;
};

/// Parses the operator grammar
///   operator := sum
///   sum      := ["+"|"-"] prod { ("+"|"-") prod }
///   prod     := power { ("*"|"/") power }
///   power    := atom [ "^" ["-"] nat ]
///   atom     := integer | "z" | "D" | "theta" | "(" operator ")"
/// Division and negative powers apply to coefficient operands only. An expression without
/// derivations is an order-0 operator in the D basis.
DiffOp parse_operator(const std::string& text);

}  // namespace gop::cli

#endif  // GOP_CLI_PARSER_HPP
