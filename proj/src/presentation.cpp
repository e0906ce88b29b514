#include "lot/presentation.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "lot/errors.hpp"

namespace lot {

namespace {

std::string strip_comments(std::string_view text) {
  std::string out;
  bool in_comment = false;
  for (char c : text) {
    if (c == '#') in_comment = true;
    if (c == '\n') in_comment = false;
    out += in_comment ? ' ' : c;
  }
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  std::string body = strip_comments(text);
  auto gpos = body.find("gens:");
  if (gpos == std::string::npos) throw parse_error("presentation: missing 'gens:' line");
  auto rpos = body.find("rels:");
  std::string gens_part =
      body.substr(gpos + 5, (rpos == std::string::npos ? body.size() : rpos) - gpos - 5);
  std::vector<std::string> names;
  std::istringstream gs(gens_part);
  std::string tok;
  while (gs >> tok) names.push_back(tok);
  if (names.empty()) throw parse_error("presentation: no generators");

  Presentation p{Alphabet(std::move(names)), {}};
  if (rpos != std::string::npos) {
    std::string rels_part = body.substr(rpos + 5);
    std::size_t start = 0;
    while (start <= rels_part.size()) {
      auto semi = rels_part.find(';', start);
      std::string chunk = trim(rels_part.substr(
          start, (semi == std::string::npos ? rels_part.size() : semi) - start));
      if (!chunk.empty()) p.relators.push_back(Word::parse(chunk));
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
  }
  try {
    validate_presentation(p);
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("presentation: ") + e.what());
  }
  return p;
}

std::string print_presentation(const Presentation& p) {
  std::string out = "gens:";
  for (const auto& g : p.gens.symbols()) out += " " + g;
  out += "\nrels:";
  bool first = true;
  for (const auto& r : p.relators) {
    out += first ? " " : " ; ";
    out += r.str();
    first = false;
  }
  out += "\n";
  return out;
}

void validate_presentation(const Presentation& p) {
  for (const auto& r : p.relators)
    for (const auto& s : r.syllables())
      if (!p.gens.contains(s.sym))
        throw std::invalid_argument("relator uses unknown generator '" + s.sym + "'");
}

}  // namespace lot
