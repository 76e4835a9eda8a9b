#include "lamina/fibered.hpp"

#include <algorithm>
#include <stdexcept>

namespace lamina {

Automorphism Automorphism::identity(int ngens) {
  std::vector<Word> im(ngens), iv(ngens);
  for (int i = 0; i < ngens; ++i) {
    im[i] = {static_cast<Letter>(i + 1)};
    iv[i] = {static_cast<Letter>(i + 1)};
  }
  return Automorphism(std::move(im), std::move(iv));
}

Automorphism Automorphism::twist(int ngens, int moved, int along, int sign) {
  Automorphism a = identity(ngens);
  Letter m = static_cast<Letter>(moved + 1);
  Letter t = static_cast<Letter>(along + 1);
  a.images_[moved] = sign > 0 ? Word{m, t} : Word{m, inv(t)};
  a.inv_images_[moved] = sign > 0 ? Word{m, inv(t)} : Word{m, t};
  return a;
}

Word Automorphism::substitute(const std::vector<Word>& table, const Word& w) {
  Word out;
  for (Letter x : w) {
    int i = gen_index(x);
    if (i >= static_cast<int>(table.size()))
      throw std::invalid_argument("automorphism: unknown generator symbol");
    const Word& im = table[i];
    if (x > 0)
      out.insert(out.end(), im.begin(), im.end());
    else {
      Word ii = inverse(im);
      out.insert(out.end(), ii.begin(), ii.end());
    }
  }
  return free_reduce(out);
}

Word Automorphism::apply(const Word& w) const { return substitute(images_, w); }

Word Automorphism::apply_inverse(const Word& w) const {
  if (inv_images_.empty())
    throw std::logic_error("automorphism inverse not available");
  return substitute(inv_images_, w);
}

Word Automorphism::apply_power(const Word& w, int k) const {
  Word out = w;
  for (int i = 0; i < std::abs(k); ++i)
    out = k > 0 ? apply(out) : apply_inverse(out);
  return out;
}

Automorphism Automorphism::composed_with(const Automorphism& inner) const {
  std::vector<Word> im(inner.ngens()), iv(inner.ngens());
  for (int i = 0; i < inner.ngens(); ++i) {
    im[i] = apply(inner.images_[i]);
    iv[i] = inner.apply_inverse(inv_images_[i]);
  }
  return Automorphism(std::move(im), std::move(iv));
}

Automorphism Automorphism::inverse_automorphism() const {
  return Automorphism(inv_images_, images_);
}

FiberedPresentation::FiberedPresentation(Presentation fiber,
                                         Automorphism monodromy,
                                         char stable_symbol)
    : fiber_(std::move(fiber)),
      rewriter_(fiber_),
      mu_(std::move(monodromy)),
      stable_(stable_symbol) {
  if (mu_.ngens() != fiber_.alphabet.size())
    throw std::invalid_argument("monodromy arity mismatch");
  galpha_ = fiber_.alphabet;
  galpha_.names.push_back(stable_);
  galpha_.validate();
}

FiberedPresentation::NormalForm FiberedPresentation::normal_form(
    const Word& w) const {
  // Push stable letters left: t^k u . x = t^k (u x), t^k u . t = t^{k+1}
  // mu^-1(u), t^k u . t^-1 = t^{k-1} mu(u).
  NormalForm nf;
  Letter t = stable_letter();
  Word u;
  for (Letter x : w) {
    if (x == t) {
      nf.k += 1;
      u = mu_.apply_inverse(u);
    } else if (x == inv(t)) {
      nf.k -= 1;
      u = mu_.apply(u);
    } else {
      u.push_back(x);
    }
  }
  nf.fiber_word = rewriter_.dehn_reduce(u);
  return nf;
}

bool FiberedPresentation::is_trivial_in_group(const Word& w) const {
  NormalForm nf = normal_form(w);
  return nf.k == 0 && rewriter_.is_trivial(nf.fiber_word);
}

void FiberedPresentation::validate() const {
  int n = fiber_.alphabet.size();
  for (int i = 0; i < n; ++i) {
    Word g{static_cast<Letter>(i + 1)};
    if (!rewriter_.equal(mu_.apply(mu_.apply_inverse(g)), g) ||
        !rewriter_.equal(mu_.apply_inverse(mu_.apply(g)), g))
      throw std::invalid_argument("monodromy inverse images inconsistent");
  }
  for (const Word& r : fiber_.relators) {
    Word image = mu_.apply(r);
    Word m = rewriter_.cyclic_canonical(image);
    Word r1 = rewriter_.cyclic_canonical(r);
    Word r2 = rewriter_.cyclic_canonical(inverse(r));
    if (m != r1 && m != r2)
      throw std::invalid_argument(
          "monodromy does not preserve the surface relator class");
  }
}

Presentation surface_group_presentation(int genus, const std::string& names) {
  GeneratorAlphabet a = GeneratorAlphabet::from_string(names);
  if (a.size() != 2 * genus)
    throw std::invalid_argument("need 2g generator names");
  Word rel;
  for (int h = 0; h < genus; ++h) {
    Letter x = static_cast<Letter>(2 * h + 1);
    Letter y = static_cast<Letter>(2 * h + 2);
    rel.push_back(x);
    rel.push_back(y);
    rel.push_back(inv(x));
    rel.push_back(inv(y));
  }
  return Presentation::make(a, {rel}, true);
}

}  // namespace lamina
