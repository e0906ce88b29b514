#pragma once

#include <stdexcept>
#include <string>

namespace lot {

// Malformed input text (DSL, word syntax, presentation files).
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured search budget was exhausted before an answer was found.
// Engines that can answer "unknown" do so instead of throwing.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lot
