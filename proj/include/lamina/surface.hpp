#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "lamina/presentation.hpp"
#include "lamina/rational.hpp"

namespace lamina {

struct Mat2 {
  // Real 2x2 matrix, det 1 up to numerical noise.
  double a = 1, b = 0, c = 0, d = 1;

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  Mat2 inv() const { return {d, -b, -c, a}; }  // assumes det 1
  double trace() const { return a + d; }
};

// Geodesic in the upper half-plane with boundary endpoints p, q (q may be
// infinite). Oriented from p to q.
struct Geodesic {
  double p = 0;
  double q = 0;
  bool p_inf = false;
  bool q_inf = false;
};

// Closed oriented genus-g surface with the one-relator presentation
// <a1 b1 a2 b2 ... | prod [ai,bi]> and an explicit Fuchsian model built from
// the regular 4g-gon with canonical edge pairing.
class SurfaceData {
 public:
  explicit SurfaceData(int genus);

  int genus() const { return genus_; }
  const Presentation& presentation() const { return pres_; }
  const DehnRewriter& rewriter() const { return rw_; }

  const Mat2& generator_matrix(int i) const { return gens_[i]; }
  Mat2 matrix_of(const Word& w) const;

  // Translation length 2 arccosh(|tr|/2). Throws for |tr| <= 2 (non-essential).
  double model_length(const Word& w) const;

  // Counterclockwise cyclic order of the 4g out-germs around the one vertex.
  const std::vector<Letter>& germ_order() const { return germs_; }
  int germ_position(Letter x) const;

  // Worst deviation of the relator matrix from +-identity.
  double relator_defect() const;

  double polygon_circumradius() const { return circumradius_; }

 private:
  void build_matrices();
  void build_germ_order();

  int genus_;
  Presentation pres_;
  DehnRewriter rw_;
  std::vector<Mat2> gens_;
  std::vector<Letter> germs_;
  std::vector<int> germ_pos_;
  double circumradius_ = 0;
};

// Free homotopy class of an essential closed curve, stored as the canonical
// minimal cyclic word.
class CurveClass {
 public:
  CurveClass() = default;
  CurveClass(const SurfaceData& s, const Word& w);

  const Word& word() const { return word_; }
  bool same_class(const SurfaceData& s, const CurveClass& o) const;
  // Same unoriented curve: equal classes up to inversion.
  bool same_curve(const SurfaceData& s, const CurveClass& o) const;

 private:
  Word word_;
};

double model_length(const SurfaceData& s, const CurveClass& c);

// Combinatorial geometric intersection number: linked strand pairs over the
// vertex germ order, minimized over minimal cyclic representatives.
unsigned intersection_number(const SurfaceData& s, const CurveClass& c1,
                             const CurveClass& c2);
unsigned self_intersection(const SurfaceData& s, const CurveClass& c);

// Hyperbolic oracle: counts crossings of the geodesic axis of c1 (one
// fundamental segment) with translates of the axis of c2 enumerated over the
// tessellation. For distinct curves this equals intersection_number; pairing
// a primitive class with itself counts each double point twice.
unsigned intersection_oracle(const SurfaceData& s, const CurveClass& c1,
                             const CurveClass& c2);

// Weighted multicurve; components are pairwise distinct unoriented classes,
// merged on insert.
struct Multicurve {
  std::vector<std::pair<CurveClass, Rat>> components;

  void insert(const SurfaceData& s, const CurveClass& c, const Rat& w);
  Rat total_weight() const;
};

}  // namespace lamina
