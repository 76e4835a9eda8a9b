#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lamina/fibered.hpp"
#include "lamina/presentation.hpp"
#include "lamina/word.hpp"

using namespace lamina;

namespace {

Presentation genus2() { return surface_group_presentation(2, "abcd"); }

Word W(const Presentation& p, const std::string& s) {
  return parse_word(p.alphabet, s);
}

Word random_reduced_word(std::mt19937_64& rng, int ngens, int len) {
  std::uniform_int_distribution<int> gd(1, ngens);
  std::uniform_int_distribution<int> sd(0, 1);
  Word w;
  while (static_cast<int>(w.size()) < len) {
    Letter x = static_cast<Letter>(gd(rng));
    if (sd(rng)) x = inv(x);
    if (!w.empty() && w.back() == inv(x)) continue;
    w.push_back(x);
  }
  return w;
}

}  // namespace

TEST_CASE("free and cyclic reduction") {
  GeneratorAlphabet a = GeneratorAlphabet::from_string("a b");
  CHECK(print_word(a, free_reduce(parse_word(a, "aAb"))) == "b");
  CHECK(print_word(a, cyclic_reduce(parse_word(a, "baB"))) == "a");
  CHECK(print_word(a, free_reduce(parse_word(a, "abAB"))) == "abAB");
  CHECK(print_word(a, free_reduce(Word{})) == "1");
}

TEST_CASE("reduce properties: idempotence and inverse cancellation") {
  std::mt19937_64 rng(20260810);
  for (int it = 0; it < 500; ++it) {
    Word w = random_reduced_word(rng, 2, 1 + static_cast<int>(rng() % 10));
    CHECK(free_reduce(free_reduce(w)) == free_reduce(w));
    CHECK(free_reduce(concat(w, inverse(w))).empty());
    Word c = cyclic_reduce(w);
    CHECK(cyclic_reduce(c) == c);
  }
}

TEST_CASE("word packing round trip") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    Word w = random_reduced_word(rng, 5, static_cast<int>(rng() % 16));
    CHECK(unpack_word(pack_word(w)) == w);
  }
}

TEST_CASE("genus-2 presentation satisfies C'(1/6), flat group does not") {
  Presentation g2 = genus2();
  PieceReport pr = piece_report(g2);
  CHECK(pr.max_piece == 1);
  CHECK(pr.min_relator == 8);
  CHECK(pr.small_cancellation_c6());

  GeneratorAlphabet ab = GeneratorAlphabet::from_string("ab");
  Presentation flat;
  CHECK_THROWS(Presentation::make(ab, {parse_word(ab, "abAB")}, true));
  flat = Presentation::make(ab, {parse_word(ab, "abAB")}, false);
  CHECK(flat.is_flat_commutator_presentation());
  CHECK_FALSE(genus2().is_flat_commutator_presentation());
}

TEST_CASE("dehn_reduce on the genus-2 group") {
  Presentation p = genus2();
  DehnRewriter rw(p);
  // The relator itself is trivial.
  CHECK(rw.dehn_reduce(W(p, "abABcdCD")).empty());
  // Seven of eight letters reduce to the inverse of the complement.
  CHECK(print_word(p.alphabet, rw.dehn_reduce(W(p, "abABcdC"))) == "d");
  // Nothing longer than half a relator: untouched.
  CHECK(print_word(p.alphabet, rw.dehn_reduce(W(p, "ab"))) == "ab");
}

TEST_CASE("dehn_reduce never lengthens and preserves the element") {
  Presentation p = genus2();
  DehnRewriter rw(p);
  std::mt19937_64 rng(99);
  for (int it = 0; it < 300; ++it) {
    Word w = random_reduced_word(rng, 4, 1 + static_cast<int>(rng() % 10));
    Word r = rw.dehn_reduce(w);
    CHECK(r.size() <= w.size());
    CHECK(rw.is_trivial(concat(w, inverse(r))));
  }
}

TEST_CASE("canonical forms agree across representatives") {
  Presentation p = genus2();
  DehnRewriter rw(p);
  std::mt19937_64 rng(1234);
  Word rel = W(p, "abABcdCD");
  for (int it = 0; it < 100; ++it) {
    Word w = random_reduced_word(rng, 4, 1 + static_cast<int>(rng() % 8));
    // Splice a conjugated relator in: same element, messier word.
    Word x = random_reduced_word(rng, 4, static_cast<int>(rng() % 3));
    Word noisy =
        concat(w, free_reduce(concat(x, concat(rel, inverse(x)))));
    CHECK(rw.canonical(noisy) == rw.canonical(w));
  }
}

TEST_CASE("half-relator words have two geodesic representatives") {
  Presentation p = genus2();
  DehnRewriter rw(p);
  Word half = W(p, "abAB");
  auto reps = rw.geodesic_representatives(half);
  CHECK(reps.size() == 2);
  CHECK(rw.equal(W(p, "abAB"), W(p, "dcDC")));
  CHECK(rw.norm(half) == 4);
}

TEST_CASE("conjugacy minimal examples") {
  // Free group: cyclic word of b a a a B minimizes to aaa by rotation and
  // wraparound cancellation.
  GeneratorAlphabet ab = GeneratorAlphabet::from_string("ab");
  Presentation fp = Presentation::make(ab, {}, false);
  DehnRewriter frw(fp);
  CHECK(print_word(ab, frw.cyclic_canonical(parse_word(ab, "baaaB"))) == "aaa");
  // The literal cyclic word b a B a a is already minimal at length 5.
  auto res = conjugacy_minimal(frw, parse_word(ab, "baBaa"), 4);
  CHECK(res.minimal.size() == 5);
  CHECK(res.certified);

  Presentation p = genus2();
  DehnRewriter rw(p);
  CHECK(rw.cyclic_canonical(W(p, "abABcdCD")).empty());
  auto resa = conjugacy_minimal(rw, W(p, "a"), 3);
  CHECK(print_word(p.alphabet, resa.minimal) == "a");
  CHECK(resa.certified);
}

TEST_CASE("conjugacy_minimal output is stable under generator conjugation") {
  Presentation p = genus2();
  DehnRewriter rw(p);
  std::mt19937_64 rng(5150);
  for (int it = 0; it < 50; ++it) {
    Word w = random_reduced_word(rng, 4, 1 + static_cast<int>(rng() % 6));
    Word m = rw.cyclic_canonical(w);
    CHECK(m.size() <= cyclic_reduce(w).size());
    for (int g = 1; g <= 4; ++g) {
      Word x{static_cast<Letter>(g)};
      Word conj = concat(inverse(x), concat(w, x));
      CHECK(rw.cyclic_canonical(conj).size() == m.size());
    }
  }
}

TEST_CASE("automorphism basics") {
  Presentation p = genus2();
  DehnRewriter rw(p);
  Automorphism id = Automorphism::identity(4);
  Word w = W(p, "abAcd");
  CHECK(id.apply(w) == free_reduce(w));

  Automorphism tw = Automorphism::twist(4, 0, 1, +1);  // a -> ab
  CHECK(print_word(p.alphabet, tw.apply(W(p, "aa"))) == "abab");

  std::mt19937_64 rng(42);
  for (int it = 0; it < 1000; ++it) {
    Word u = random_reduced_word(rng, 4, static_cast<int>(rng() % 8));
    CHECK(tw.apply_inverse(tw.apply(u)) == free_reduce(u));
  }
}

TEST_CASE("fibered normal form") {
  Presentation p = genus2();
  Automorphism tb = Automorphism::twist(4, 1, 0, +1);  // b -> ba
  Automorphism ta = Automorphism::twist(4, 0, 1, +1);  // a -> ab
  Automorphism mu = tb.composed_with(ta);
  FiberedPresentation fib(p, mu, 't');
  fib.validate();

  const GeneratorAlphabet& ga = fib.group_alphabet();
  // t a t^-1 = mu(a)
  auto nf = fib.normal_form(parse_word(ga, "taT"));
  CHECK(nf.k == 0);
  CHECK(fib.fiber_equal(nf.fiber_word, mu.apply(Word{1})));

  nf = fib.normal_form(parse_word(ga, "a"));
  CHECK(nf.k == 0);
  CHECK(print_word(p.alphabet, nf.fiber_word) == "a");

  nf = fib.normal_form(parse_word(ga, "tta"));
  CHECK(nf.k == 2);
  CHECK(print_word(p.alphabet, nf.fiber_word) == "a");

  nf = fib.normal_form(parse_word(ga, "att"));
  CHECK(nf.k == 2);
  CHECK(fib.fiber_equal(nf.fiber_word, mu.apply_inverse(mu.apply_inverse(Word{1}))));

  // Multiply back: t^k u must equal the original word in G.
  std::mt19937_64 rng(31337);
  for (int it = 0; it < 100; ++it) {
    Word w;
    for (int j = 0; j < 6; ++j) {
      int c = static_cast<int>(rng() % 10);
      Letter x = c < 8 ? static_cast<Letter>(c / 2 + 1)
                       : fib.stable_letter();
      if (c % 2) x = inv(x);
      w.push_back(x);
    }
    auto n = fib.normal_form(w);
    Word back;
    Letter t = fib.stable_letter();
    for (int j = 0; j < std::abs(n.k); ++j) back.push_back(n.k > 0 ? t : inv(t));
    back = concat(back, n.fiber_word);
    CHECK(fib.is_trivial_in_group(concat(w, inverse(back))));
  }
}

TEST_CASE("monodromy growth under iteration") {
  Presentation p = genus2();
  Automorphism tb = Automorphism::twist(4, 1, 0, +1);
  Automorphism ta = Automorphism::twist(4, 0, 1, +1);
  Automorphism mu = tb.composed_with(ta);
  DehnRewriter rw(p);
  size_t prev = 1;
  for (int k = 1; k <= 6; ++k) {
    Word im = mu.apply_power(Word{1}, k);
    Word m = rw.cyclic_canonical(im);
    CHECK(m.size() >= prev);
    prev = m.size();
  }
  CHECK(prev > 8);  // exponential growth, not drift-free
}
