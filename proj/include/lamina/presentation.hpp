#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lamina/word.hpp"

namespace lamina {

// A finite presentation. Relators are stored cyclically reduced. When
// dehn_flag is set the symmetrized relator set must satisfy C'(1/6), which
// is verified mechanically at construction time.
struct Presentation {
  GeneratorAlphabet alphabet;
  std::vector<Word> relators;
  bool dehn_flag = false;

  static Presentation make(GeneratorAlphabet a, std::vector<Word> rels,
                           bool dehn);

  bool has_relators() const { return !relators.empty(); }

  // True when every relator is a commutator pattern xyXY and every generator
  // pair appears; such presentations get exact abelian normal forms.
  bool is_flat_commutator_presentation() const;
};

// Longest piece length among distinct symmetrized relators, together with
// the smallest relator length (for the C'(1/6) test).
struct PieceReport {
  int max_piece = 0;
  int min_relator = 0;
  bool small_cancellation_c6() const {
    return min_relator > 0 && 6 * max_piece < min_relator;
  }
};
PieceReport piece_report(const Presentation& p);

// Dehn's algorithm plus the exactly-half swap closure. In a C'(1/6)
// presentation every word of more than half a symmetrized relator has a
// unique shorter complement, and geodesic representatives of an element are
// connected by half-relator swaps; the shortlex-least member of the swap
// closure is the canonical form used for equality, norms and ball keys.
class DehnRewriter {
 public:
  explicit DehnRewriter(const Presentation& p);

  const Presentation& presentation() const { return *pres_; }

  // Greedy length reduction: replace any more-than-half relator subword by
  // the shorter complement, free-reducing throughout.
  Word dehn_reduce(Word w) const;

  // Shortlex-least geodesic representative of the element of w.
  Word canonical(const Word& w) const;

  // All geodesic representatives (swap closure of canonical form).
  std::vector<Word> geodesic_representatives(const Word& w) const;

  bool is_trivial(const Word& w) const { return canonical(w).empty(); }
  bool equal(const Word& u, const Word& v) const {
    return canonical(concat(u, inverse(v))).empty();
  }
  int norm(const Word& w) const { return static_cast<int>(canonical(w).size()); }

  // Cyclic (conjugacy) variants. cyclic_canonical returns the shortlex-least
  // rotation over the cyclic swap closure; its length is the conjugacy length.
  Word cyclic_dehn_reduce(Word w) const;
  Word cyclic_canonical(const Word& w) const;
  std::vector<Word> minimal_cyclic_representatives(const Word& w) const;

  int swap_closure_cap() const { return closure_cap_; }
  void set_swap_closure_cap(int cap) { closure_cap_ = cap; }

 private:
  struct Tables {
    // Keyed by the raw letter bytes of the subword.
    std::unordered_map<std::string, Word> longhalf;  // |sub| > L/2 -> shorter
    std::unordered_map<std::string, Word> exacthalf; // |sub| = L/2 -> same length
    std::vector<int> long_lengths;   // descending
    std::vector<int> half_lengths;   // distinct exact-half lengths
    int max_sub = 0;
  };

  static std::string key_of(const Word& w, size_t pos, size_t len);
  bool scan_longhalf(Word& w) const;          // one replacement; true if changed
  bool cyclic_scan_longhalf(Word& w) const;   // on the cyclic word

  const Presentation* pres_;
  Tables tables_;
  int closure_cap_ = 50000;
};

// Exhaustive conjugacy minimization oracle: minimize cyclic length over all
// conjugators of length <= radius. Independent path used by tests and by
// certification flags; exponential in radius.
struct ConjugacySearchResult {
  Word best;         // cyclically reduced minimal representative found
  Word conjugator;   // x with x^-1 w x ~ best
};
ConjugacySearchResult conjugacy_search(const DehnRewriter& rw, const Word& w,
                                       int radius);

// conjugacy_minimal: rotation + Dehn reduction to a fixpoint (via the cyclic
// swap closure). certified reports whether the bounded exhaustive search
// confirmed minimality within its radius.
struct ConjugacyMinimalResult {
  Word minimal;
  bool certified = false;
  int oracle_radius = 0;
};
ConjugacyMinimalResult conjugacy_minimal(const DehnRewriter& rw, const Word& c,
                                         int certify_radius = 0);

// Enumerate all freely reduced words of length <= radius (free-group tree).
void enumerate_reduced_words(int ngens, int radius,
                             const std::function<void(const Word&)>& visit);

}  // namespace lamina
