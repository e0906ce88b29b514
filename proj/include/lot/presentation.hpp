#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lot/word.hpp"

namespace lot {

/// Finite group presentation.  Relators are freely reduced words over gens.
struct Presentation {
  Alphabet gens;
  std::vector<Word> relators;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// File format:
///
///   gens: a b c
///   rels: a c b c^-1 ; x y
///
/// `#` starts a comment; the rels list may span lines and is split on `;`.
Presentation parse_presentation(std::string_view text);
std::string print_presentation(const Presentation& p);

/// Throws std::invalid_argument unless every relator is over p.gens.
void validate_presentation(const Presentation& p);

}  // namespace lot
