#include "lamina/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace lamina {

int GeneratorAlphabet::index_of(char c) const {
  for (int i = 0; i < size(); ++i)
    if (names[i] == c) return i;
  return -1;
}

Letter GeneratorAlphabet::letter_of(char c) const {
  bool inv_case = std::isupper(static_cast<unsigned char>(c)) != 0;
  char low = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  int i = index_of(low);
  if (i < 0) throw std::invalid_argument(std::string("unknown generator: ") + c);
  Letter x = static_cast<Letter>(i + 1);
  return inv_case ? inv(x) : x;
}

char GeneratorAlphabet::symbol(Letter x) const {
  int i = gen_index(x);
  if (i < 0 || i >= size()) throw std::invalid_argument("letter out of range");
  char c = names[i];
  return x < 0 ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c;
}

GeneratorAlphabet GeneratorAlphabet::from_string(const std::string& spaced) {
  GeneratorAlphabet a;
  for (char c : spaced) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    a.names.push_back(c);
  }
  a.validate();
  return a;
}

void GeneratorAlphabet::validate() const {
  for (char c : names) {
    if (!std::islower(static_cast<unsigned char>(c)))
      throw std::invalid_argument("generator symbols must be lowercase letters");
  }
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw std::invalid_argument("duplicate generator symbol");
}

Word parse_word(const GeneratorAlphabet& a, const std::string& text) {
  Word w;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '1') continue;  // identity placeholder
    w.push_back(a.letter_of(c));
  }
  return w;
}

std::string print_word(const GeneratorAlphabet& a, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  s.reserve(w.size());
  for (Letter x : w) s.push_back(a.symbol(x));
  return s;
}

Word inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (Letter& x : r) x = inv(x);
  return r;
}

Word concat(const Word& u, const Word& v) {
  Word r(u);
  r.insert(r.end(), v.begin(), v.end());
  return r;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (!out.empty() && out.back() == inv(x))
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  size_t i = 0, j = r.size();
  while (j - i >= 2 && r[i] == inv(r[j - 1])) { ++i; --j; }
  return Word(r.begin() + i, r.begin() + j);
}

Word rotate(const Word& w, int k) {
  if (w.empty()) return w;
  int n = static_cast<int>(w.size());
  k = ((k % n) + n) % n;
  Word r;
  r.reserve(w.size());
  r.insert(r.end(), w.begin() + k, w.end());
  r.insert(r.end(), w.begin(), w.begin() + k);
  return r;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    int ra = letter_rank(a[i]), rb = letter_rank(b[i]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

Word least_rotation(const Word& w) {
  if (w.empty()) return w;
  Word best = w;
  for (int k = 1; k < static_cast<int>(w.size()); ++k) {
    Word r = rotate(w, k);
    if (shortlex_less(r, best)) best = r;
  }
  return best;
}

static std::uint64_t letter_code(Letter x) {
  int code = 2 * gen_index(x) + (x < 0 ? 2 : 1);  // 1..14 for <=7 generators
  return static_cast<std::uint64_t>(code);
}

bool packable(const Word& w) {
  if (w.size() > 16) return false;
  for (Letter x : w)
    if (letter_code(x) > 15) return false;
  return true;
}

std::uint64_t pack_word(const Word& w) {
  if (!packable(w)) throw std::length_error("word not packable");
  std::uint64_t key = 0;
  for (size_t i = 0; i < w.size(); ++i)
    key |= letter_code(w[i]) << (4 * i);
  return key;
}

Word unpack_word(std::uint64_t key) {
  Word w;
  while (key) {
    int code = static_cast<int>(key & 0xF);
    int idx = (code - 1) / 2;
    bool neg = (code % 2) == 0;
    Letter x = static_cast<Letter>(idx + 1);
    w.push_back(neg ? inv(x) : x);
    key >>= 4;
  }
  return w;
}

}  // namespace lamina
