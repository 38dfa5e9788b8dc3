#pragma once

#include "sullivan/graded.hpp"

#include <string>

namespace sullivan {

// Line-oriented presentation files:
//   dim = 6                  (optional)
//   generator <name> <deg>
//   relation <expr>          # comment
// expr  := term (('+'|'-') term)*
// term  := rational ('*' factor)* | factor ('*' factor)*
// factor:= name ('^' int)?
// rational := int ('/' posint)?
Presentation parse_presentation(const std::string& text);

// Canonical file text; parse(print(parse(t))) == parse(t).
std::string print_presentation(const Presentation& p);

}  // namespace sullivan
