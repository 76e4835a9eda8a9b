#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lamina/presentation.hpp"

namespace lamina {

// Automorphism of the fiber group, given by generator images. The inverse
// images are either supplied or found by a bounded search; both directions
// are verified against each other through the fiber word problem.
class Automorphism {
 public:
  Automorphism() = default;
  Automorphism(std::vector<Word> images, std::vector<Word> inverse_images)
      : images_(std::move(images)), inv_images_(std::move(inverse_images)) {}

  static Automorphism identity(int ngens);

  // Dehn twist along the curve of generator `along`, acting on `moved` by
  // moved -> moved * along^sign. Everything else fixed.
  static Automorphism twist(int ngens, int moved, int along, int sign);

  bool defined() const { return !images_.empty(); }
  int ngens() const { return static_cast<int>(images_.size()); }

  Word apply(const Word& w) const;      // substitute and freely reduce
  Word apply_inverse(const Word& w) const;
  Word apply_power(const Word& w, int k) const;

  Automorphism composed_with(const Automorphism& inner) const;  // this o inner
  Automorphism inverse_automorphism() const;

  const std::vector<Word>& images() const { return images_; }
  const std::vector<Word>& inverse_images() const { return inv_images_; }

 private:
  static Word substitute(const std::vector<Word>& table, const Word& w);
  std::vector<Word> images_;      // images_[i] = image of generator i+1
  std::vector<Word> inv_images_;
};

// Mapping-torus presentation: fiber surface group extended by a stable
// letter t with t x t^-1 = mu(x). Elements normalize to t^k u with u in the
// fiber; k is the t-exponent homomorphism and u is Dehn-reduced.
class FiberedPresentation {
 public:
  FiberedPresentation(Presentation fiber, Automorphism monodromy,
                      char stable_symbol);

  const Presentation& fiber() const { return fiber_; }
  const DehnRewriter& fiber_rewriter() const { return rewriter_; }
  const Automorphism& monodromy() const { return mu_; }
  char stable_symbol() const { return stable_; }

  // Alphabet of G = fiber generators followed by the stable letter.
  const GeneratorAlphabet& group_alphabet() const { return galpha_; }
  Letter stable_letter() const {
    return static_cast<Letter>(fiber_.alphabet.size() + 1);
  }

  struct NormalForm {
    int k = 0;
    Word fiber_word;  // Dehn-reduced in the fiber
  };
  // w = t^k * u; letters of w over the group alphabet.
  NormalForm normal_form(const Word& w) const;

  bool is_trivial_in_group(const Word& w) const;
  bool fiber_equal(const Word& u, const Word& v) const {
    return rewriter_.equal(u, v);
  }

  // Verifies mu(relator) ~ relator^{+-1} and mu o mu^-1 = id on generators.
  void validate() const;

 private:
  Presentation fiber_;
  DehnRewriter rewriter_;
  Automorphism mu_;
  char stable_;
  GeneratorAlphabet galpha_;
};

// Standard genus-g surface presentation <a1 b1 ... ag bg | prod [ai,bi]>,
// with generators named from `names` (2g lowercase symbols).
Presentation surface_group_presentation(int genus, const std::string& names);

}  // namespace lamina
