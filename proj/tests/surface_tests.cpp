#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "lamina/surface.hpp"

using namespace lamina;

namespace {

SurfaceData& genus2_surface() {
  static SurfaceData s(2);
  return s;
}

Word W(const SurfaceData& s, const std::string& t) {
  return parse_word(s.presentation().alphabet, t);
}

CurveClass C(const SurfaceData& s, const std::string& t) {
  return CurveClass(s, W(s, t));
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

TEST_CASE("octagon model satisfies the relator") {
  SurfaceData& s = genus2_surface();
  CHECK(s.relator_defect() < 1e-9);
}

TEST_CASE("vertex germ order of the canonical octagon") {
  SurfaceData& s = genus2_surface();
  // Frozen from the corner walk of the canonical gluing: a d C D c b A B.
  const auto& a = s.presentation().alphabet;
  std::string order;
  for (Letter x : s.germ_order()) order.push_back(a.symbol(x));
  CHECK(order == "adCDcbAB");
}

TEST_CASE("model lengths: conjugation invariance and power scaling") {
  SurfaceData& s = genus2_surface();
  std::mt19937_64 rng(2718);
  for (int it = 0; it < 40; ++it) {
    Word w = random_reduced_word(rng, 4, 1 + static_cast<int>(rng() % 5));
    if (s.rewriter().cyclic_canonical(w).empty()) continue;
    Word x = random_reduced_word(rng, 4, 1 + static_cast<int>(rng() % 4));
    Word conj = free_reduce(concat(x, concat(w, inverse(x))));
    double l = s.model_length(w);
    CHECK(std::abs(s.model_length(conj) - l) < 1e-9 * std::max(1.0, l));
    Word sq = concat(w, w);
    CHECK(std::abs(s.model_length(sq) - 2 * l) < 1e-9 * std::max(1.0, 2 * l));
  }
}

TEST_CASE("generator length is the regression constant of the model") {
  SurfaceData& s = genus2_surface();
  double la = s.model_length(W(s, "a"));
  CHECK(la > 0);
  // All four side-pairing generators are congruent in the regular octagon.
  for (const char* g : {"b", "c", "d"})
    CHECK(std::abs(s.model_length(W(s, g)) - la) < 1e-9);
  // Frozen value: 2*acosh((sqrt(2)+2)/2) for the canonical pairing.
  double expect = 2.0 * std::acosh((std::sqrt(2.0) + 2.0) / 2.0);
  CHECK(std::abs(la - expect) < 1e-9);
}

TEST_CASE("relator is non-essential") {
  SurfaceData& s = genus2_surface();
  CHECK_THROWS(s.model_length(W(s, "abABcdCD")));
}

TEST_CASE("combinatorial intersection numbers: handle generators") {
  SurfaceData& s = genus2_surface();
  CHECK(intersection_number(s, C(s, "a"), C(s, "c")) == 0);
  CHECK(intersection_number(s, C(s, "a"), C(s, "b")) == 1);
  CHECK(intersection_number(s, C(s, "abAB"), C(s, "a")) == 0);
  CHECK(intersection_number(s, C(s, "c"), C(s, "d")) == 1);
  CHECK(intersection_number(s, C(s, "a"), C(s, "d")) == 0);
}

TEST_CASE("self intersections of basic classes") {
  SurfaceData& s = genus2_surface();
  CHECK(self_intersection(s, C(s, "a")) == 0);
  CHECK(self_intersection(s, C(s, "abAB")) == 0);
  CHECK(self_intersection(s, C(s, "aab")) == 1);
}

TEST_CASE("intersection is symmetric and inversion invariant") {
  SurfaceData& s = genus2_surface();
  std::mt19937_64 rng(880);
  int done = 0;
  while (done < 15) {
    Word u = random_reduced_word(rng, 4, 2 + static_cast<int>(rng() % 3));
    Word v = random_reduced_word(rng, 4, 2 + static_cast<int>(rng() % 3));
    if (s.rewriter().cyclic_canonical(u).empty()) continue;
    if (s.rewriter().cyclic_canonical(v).empty()) continue;
    CurveClass cu(s, u), cv(s, v);
    unsigned base = intersection_number(s, cu, cv);
    CHECK(intersection_number(s, cv, cu) == base);
    CHECK(intersection_number(s, CurveClass(s, inverse(u)), cv) == base);
    CHECK(intersection_number(s, cu, CurveClass(s, inverse(v))) == base);
    ++done;
  }
}

TEST_CASE("intersection with powers is linear") {
  SurfaceData& s = genus2_surface();
  CurveClass a = C(s, "a");
  for (int n = 1; n <= 4; ++n) {
    Word bn;
    for (int k = 0; k < n; ++k) bn.push_back(2);
    CHECK(intersection_number(s, a, CurveClass(s, bn)) ==
          static_cast<unsigned>(n));
  }
}

TEST_CASE("oracle agrees on the basic pairs") {
  SurfaceData& s = genus2_surface();
  CHECK(intersection_oracle(s, C(s, "a"), C(s, "b")) == 1);
  CHECK(intersection_oracle(s, C(s, "a"), C(s, "c")) == 0);
  CHECK(intersection_oracle(s, C(s, "a"), C(s, "d")) == 0);
}

TEST_CASE("oracle self pairing convention: int(c,c) = 2 self") {
  SurfaceData& s = genus2_surface();
  CHECK(intersection_oracle(s, C(s, "a"), C(s, "a")) == 0);
  CHECK(intersection_oracle(s, C(s, "aab"), C(s, "aab")) ==
        2 * self_intersection(s, C(s, "aab")));
}

TEST_CASE("oracle cross validation on random pairs") {
  SurfaceData& s = genus2_surface();
  std::mt19937_64 rng(424242);
  int done = 0;
  while (done < 12) {
    Word u = random_reduced_word(rng, 4, 2 + static_cast<int>(rng() % 3));
    Word v = random_reduced_word(rng, 4, 2 + static_cast<int>(rng() % 3));
    if (s.rewriter().cyclic_canonical(u).empty()) continue;
    if (s.rewriter().cyclic_canonical(v).empty()) continue;
    CurveClass cu(s, u), cv(s, v);
    if (cu.same_curve(s, cv)) continue;
    CHECK(intersection_oracle(s, cu, cv) == intersection_number(s, cu, cv));
    ++done;
  }
}

TEST_CASE("multicurve merges conjugate components") {
  SurfaceData& s = genus2_surface();
  Multicurve mc;
  mc.insert(s, C(s, "a"), Rat(1));
  mc.insert(s, CurveClass(s, W(s, "bAB")), Rat(2));  // conjugate of a
  mc.insert(s, C(s, "c"), Rat(1, 2));
  CHECK(mc.components.size() == 2);
  CHECK(mc.total_weight() == Rat(7, 2));
}
