#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lamina {

// A letter is a signed generator index: +(i+1) reads generator i forward,
// -(i+1) reads its inverse. Text form: lowercase = forward, uppercase = inverse.
using Letter = std::int8_t;

inline Letter inv(Letter x) { return static_cast<Letter>(-x); }
inline int gen_index(Letter x) { return (x > 0 ? x : -x) - 1; }
inline bool is_inverse_letter(Letter x) { return x < 0; }

// Shortlex letter order follows the file order of generators, with each
// generator immediately before its own inverse: a < A < b < B < ...
inline int letter_rank(Letter x) {
  return 2 * gen_index(x) + (x < 0 ? 1 : 0);
}

struct GeneratorAlphabet {
  std::vector<char> names;  // distinct lowercase symbols, file order

  int size() const { return static_cast<int>(names.size()); }
  int index_of(char c) const;       // -1 if unknown (expects lowercase)
  Letter letter_of(char c) const;   // case encodes inversion; throws if unknown
  char symbol(Letter x) const;      // render one letter

  static GeneratorAlphabet from_string(const std::string& spaced_names);
  void validate() const;  // distinct lowercase alphabetic symbols
};

using Word = std::vector<Letter>;

Word parse_word(const GeneratorAlphabet& a, const std::string& text);
std::string print_word(const GeneratorAlphabet& a, const Word& w);

Word inverse(const Word& w);
Word concat(const Word& u, const Word& v);

// Free reduction: delete adjacent inverse pairs until none remain.
Word free_reduce(const Word& w);

// Cyclic reduction: free reduction plus wraparound cancellation.
Word cyclic_reduce(const Word& w);

Word rotate(const Word& w, int k);

// Strict shortlex comparison (length first, then letter_rank entries).
bool shortlex_less(const Word& a, const Word& b);

// Least rotation of a cyclic word under shortlex.
Word least_rotation(const Word& w);

// Compact key for words of length <= 16 over at most 7 generators.
// Letter codes occupy one nibble each; 0 terminates. Throws if unpackable.
std::uint64_t pack_word(const Word& w);
Word unpack_word(std::uint64_t key);
bool packable(const Word& w);

}  // namespace lamina
