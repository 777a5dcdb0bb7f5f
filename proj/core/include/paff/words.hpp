#pragma once

#include "paff/pamap.hpp"

#include <map>
#include <string>
#include <vector>

namespace paff {

/// One letter g^(+1) or g^(-1) of a formal word.
struct Letter {
  std::string gen;
  int exp = 1;  // +1 or -1

  bool operator==(const Letter& other) const = default;
};

/// A formal word is a plain sequence of letters; the empty word is the
/// identity. Reduction is an explicit operation, never an invariant, so
/// word_length always reports the honest letter count.
using Word = std::vector<Letter>;

inline std::size_t word_length(const Word& w) { return w.size(); }

Word concat(const Word& u, const Word& v);
Word concat(std::initializer_list<Word> parts);
Word invert(const Word& u);
Word power(const Word& u, long n);

/// Cancels adjacent inverse pairs until none remain.
Word free_reduce(const Word& u);

/// Replaces every defined generator by its definition (inverted for negative
/// letters), recursively until only undefined generators remain. Throws on a
/// cyclic definition, naming the cycle.
Word substitute(const Word& u, const std::map<std::string, Word>& defs);

/// Sum of exponents of the letters equal to gen.
long net_exponent(const Word& u, const std::string& gen);

/// Generator assignment used to evaluate words into PAHomeo.
struct Assignment {
  std::map<std::string, PAHomeo> gens;
};

/// Left-to-right composition: evaluate([a, b]) = map(a) o map(b), i.e. the
/// leftmost letter acts last, matching functional juxtaposition. Throws if a
/// letter has no assigned map, naming the generator.
PAHomeo evaluate(const Word& u, const Assignment& env, const QuadIrr& alpha);

/// Text format: whitespace-separated tokens `name` / `name^-1`. The parser
/// and printer round-trip exactly.
std::string word_to_text(const Word& u);
Word word_from_text(const std::string& text);

}  // namespace paff
