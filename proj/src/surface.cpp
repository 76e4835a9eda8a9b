#include "lamina/surface.hpp"

#include "lamina/fibered.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace lamina {

namespace {

using cd = std::complex<double>;

struct Mat2c {
  cd a, b, c, d;
  friend Mat2c operator*(const Mat2c& x, const Mat2c& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
};

Mat2c rotation(double theta) {
  return {std::exp(cd(0, theta / 2)), 0, 0, std::exp(cd(0, -theta / 2))};
}

// Conjugate an SU(1,1) matrix into SL(2,R) via the disk-to-half-plane map
// z -> i(1-z)/(1+z).
Mat2 to_real(const Mat2c& m) {
  Mat2c t{cd(0, -1), cd(0, 1), 1, 1};
  cd det = t.a * t.d - t.b * t.c;
  Mat2c tinv{t.d / det, -t.b / det, -t.c / det, t.a / det};
  Mat2c r = t * m * tinv;
  double worst = std::max(std::max(std::abs(r.a.imag()), std::abs(r.b.imag())),
                          std::max(std::abs(r.c.imag()), std::abs(r.d.imag())));
  if (worst > 1e-9) throw std::logic_error("SU(1,1) conversion not real");
  Mat2 out{r.a.real(), r.b.real(), r.c.real(), r.d.real()};
  double dd = out.a * out.d - out.b * out.c;
  double s = std::sqrt(std::abs(dd));
  out.a /= s; out.b /= s; out.c /= s; out.d /= s;
  return out;
}

void renormalize(Mat2& m) {
  double dd = m.a * m.d - m.b * m.c;
  double s = std::sqrt(std::abs(dd));
  m.a /= s; m.b /= s; m.c /= s; m.d /= s;
}

}  // namespace

SurfaceData::SurfaceData(int genus)
    : genus_(genus),
      pres_(surface_group_presentation(
          genus, std::string("abcdef").substr(0, 2 * genus))),
      rw_(pres_) {
  if (genus < 2 || genus > 3)
    throw std::invalid_argument("supported genus range is 2..3");
  build_matrices();
  build_germ_order();
  if (relator_defect() > 1e-9)
    throw std::logic_error("surface model: relator does not map to identity");
}

void SurfaceData::build_matrices() {
  int n = 4 * genus_;
  double apothem = std::acosh(std::cos(M_PI / n) / std::sin(M_PI / n));
  double ch = std::cosh(apothem), sh = std::sinh(apothem);
  // pi-rotation about the midpoint of the standard edge (on the positive
  // real axis of the disk, at apothem distance).
  Mat2c sigma{cd(0, ch), cd(0, -sh), cd(0, sh), cd(0, -ch)};
  auto alpha = [&](int k) { return (2.0 * k + 1.0) * M_PI / n; };
  gens_.resize(2 * genus_);
  for (int h = 0; h < genus_; ++h) {
    for (int which = 0; which < 2; ++which) {
      int i = 4 * h + which;      // edge labeled by the generator
      int j = 4 * h + which + 2;  // edge labeled by its inverse
      Mat2c m = rotation(alpha(i)) * sigma * rotation(-alpha(j));
      gens_[2 * h + which] = to_real(m);
    }
  }
  double cot = std::cos(M_PI / n) / std::sin(M_PI / n);
  circumradius_ = std::acosh(cot * cot);
}

void SurfaceData::build_germ_order() {
  int n = 4 * genus_;
  std::vector<Letter> letters(n);
  std::vector<int> partner(n);
  for (int h = 0; h < genus_; ++h) {
    for (int which = 0; which < 2; ++which) {
      int i = 4 * h + which, j = i + 2;
      Letter x = static_cast<Letter>(2 * h + which + 1);
      letters[i] = x;
      letters[j] = inv(x);
      partner[i] = j;
      partner[j] = i;
    }
  }
  germs_.clear();
  int corner = 0;
  do {
    germs_.push_back(letters[corner]);
    corner = partner[(corner + n - 1) % n];
  } while (corner != 0 && static_cast<int>(germs_.size()) <= 2 * n);
  if (static_cast<int>(germs_.size()) != n)
    throw std::logic_error("polygon gluing does not give a one-vertex complex");
  germ_pos_.assign(2 * n, -1);
  for (int k = 0; k < n; ++k) germ_pos_[letter_rank(germs_[k])] = k;
}

int SurfaceData::germ_position(Letter x) const {
  int p = germ_pos_[letter_rank(x)];
  if (p < 0) throw std::logic_error("unknown germ");
  return p;
}

Mat2 SurfaceData::matrix_of(const Word& w) const {
  Mat2 m;
  int steps = 0;
  for (Letter x : w) {
    const Mat2& g = gens_[gen_index(x)];
    m = (x > 0) ? m * g : m * g.inv();
    if (++steps % 8 == 0) renormalize(m);
  }
  renormalize(m);
  return m;
}

double SurfaceData::model_length(const Word& w) const {
  double tr = std::abs(matrix_of(w).trace());
  if (tr <= 2.0 + 1e-9)
    throw std::domain_error("non-essential class: |trace| <= 2");
  return 2.0 * std::acosh(tr / 2.0);
}

double SurfaceData::relator_defect() const {
  Mat2 p = matrix_of(pres_.relators[0]);
  double dplus = std::max(std::max(std::abs(p.a - 1), std::abs(p.d - 1)),
                          std::max(std::abs(p.b), std::abs(p.c)));
  double dminus = std::max(std::max(std::abs(p.a + 1), std::abs(p.d + 1)),
                           std::max(std::abs(p.b), std::abs(p.c)));
  return std::min(dplus, dminus);
}

CurveClass::CurveClass(const SurfaceData& s, const Word& w) {
  word_ = s.rewriter().cyclic_canonical(w);
  if (word_.empty()) throw std::invalid_argument("inessential curve class");
}

bool CurveClass::same_class(const SurfaceData& s, const CurveClass& o) const {
  (void)s;
  return word_ == o.word_;
}

bool CurveClass::same_curve(const SurfaceData& s, const CurveClass& o) const {
  return word_ == o.word_ ||
         s.rewriter().cyclic_canonical(inverse(word_)) == o.word_;
}

double model_length(const SurfaceData& s, const CurveClass& c) {
  return s.model_length(c.word());
}

// ---------------------------------------------------------------------------
// Linked strand pairs.
//
// Every strand of a cyclic reduced word passes once through the unique vertex
// of the one-polygon complex; two strands cross exactly when their four
// boundary rays alternate around the vertex link. Rays are compared through
// angular addresses: the absolute germ position at the base vertex first,
// then the ccw offset of each next germ from the incoming direction.
// ---------------------------------------------------------------------------

namespace {

struct Ray {
  const Word* w;
  int start;
  bool forward;
};

Letter ray_letter(const Ray& r, int k) {
  int n = static_cast<int>(r.w->size());
  if (r.forward) return (*r.w)[(r.start + k) % n];
  int idx = (((r.start - 1 - k) % n) + n) % n;
  return inv((*r.w)[idx]);
}

int compare_rays(const SurfaceData& s, const Ray& r, const Ray& q, int cap) {
  int m = 4 * s.genus();
  Letter a = ray_letter(r, 0), b = ray_letter(q, 0);
  if (a != b) return s.germ_position(a) < s.germ_position(b) ? -1 : 1;
  for (int k = 1; k <= cap; ++k) {
    Letter prev = ray_letter(r, k - 1);
    a = ray_letter(r, k);
    b = ray_letter(q, k);
    if (a == b) continue;
    int base = s.germ_position(inv(prev));
    int pa = ((s.germ_position(a) - base) % m + m) % m;
    int pb = ((s.germ_position(b) - base) % m + m) % m;
    return pa < pb ? -1 : 1;
  }
  return 0;
}

bool strands_linked(const SurfaceData& s, const Word& v, int i, const Word& w,
                    int j) {
  Ray rays[4] = {{&v, i, false}, {&v, i, true}, {&w, j, false}, {&w, j, true}};
  int cap = 4 * static_cast<int>(v.size() + w.size()) + 64;
  // A tie between an A-ray and a B-ray means parallel strands: no crossing.
  for (int a = 0; a < 2; ++a)
    for (int b = 2; b < 4; ++b)
      if (compare_rays(s, rays[a], rays[b], cap) == 0) return false;
  int order[4] = {0, 1, 2, 3};
  std::sort(order, order + 4, [&](int x, int y) {
    return compare_rays(s, rays[x], rays[y], cap) < 0;
  });
  bool is_a[4];
  for (int k = 0; k < 4; ++k) is_a[k] = order[k] < 2;
  return is_a[0] != is_a[1] && is_a[1] != is_a[2] && is_a[2] != is_a[3];
}

unsigned cross_count(const SurfaceData& s, const Word& v, const Word& w) {
  unsigned n = 0;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    for (int j = 0; j < static_cast<int>(w.size()); ++j)
      if (strands_linked(s, v, i, w, j)) ++n;
  return n;
}

unsigned self_count(const SurfaceData& s, const Word& v) {
  unsigned n = 0;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(v.size()); ++j)
      if (strands_linked(s, v, i, v, j)) ++n;
  return n;
}

}  // namespace

unsigned intersection_number(const SurfaceData& s, const CurveClass& c1,
                             const CurveClass& c2) {
  auto reps1 = s.rewriter().minimal_cyclic_representatives(c1.word());
  auto reps2 = s.rewriter().minimal_cyclic_representatives(c2.word());
  unsigned best = 0;
  bool first = true;
  int combos = 0;
  for (const Word& u : reps1) {
    for (const Word& w : reps2) {
      unsigned n = cross_count(s, u, w);
      if (first || n < best) { best = n; first = false; }
      if (++combos >= 100) return best;
    }
  }
  return best;
}

unsigned self_intersection(const SurfaceData& s, const CurveClass& c) {
  auto reps = s.rewriter().minimal_cyclic_representatives(c.word());
  unsigned best = 0;
  bool first = true;
  int combos = 0;
  for (const Word& u : reps) {
    unsigned n = self_count(s, u);
    if (first || n < best) { best = n; first = false; }
    if (++combos >= 100) break;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Hyperbolic axis-crossing oracle.
// ---------------------------------------------------------------------------

namespace {

const cd kBasePoint{0.0, 1.0};

cd moebius(const Mat2& m, cd z) { return (m.a * z + m.b) / (m.c * z + m.d); }

struct Endpoint {
  double x = 0;
  bool infinite = false;
  double angle() const { return infinite ? M_PI : 2.0 * std::atan(x); }
};

Endpoint apply_boundary(const Mat2& m, const Endpoint& e) {
  if (e.infinite) {
    if (std::abs(m.c) < 1e-13) return {0, true};
    return {m.a / m.c, false};
  }
  double denom = m.c * e.x + m.d;
  if (std::abs(denom) < 1e-13) return {0, true};
  return {(m.a * e.x + m.b) / denom, false};
}

struct Axis {
  Endpoint rep;  // repelling
  Endpoint att;  // attracting
};

std::optional<Axis> axis_of(const Mat2& m) {
  double tr = m.a + m.d;
  if (std::abs(tr) <= 2.0 + 1e-12) return std::nullopt;
  Axis ax;
  if (std::abs(m.c) < 1e-13) {
    double finite = m.b / (m.d - m.a);
    bool inf_attracting = std::abs(m.a) > std::abs(m.d);
    if (inf_attracting) {
      ax.rep = {finite, false};
      ax.att = {0, true};
    } else {
      ax.rep = {0, true};
      ax.att = {finite, false};
    }
    return ax;
  }
  double disc = (m.a - m.d) * (m.a - m.d) + 4.0 * m.b * m.c;
  if (disc <= 0) return std::nullopt;
  double r = std::sqrt(disc);
  double x1 = ((m.a - m.d) + r) / (2.0 * m.c);
  double x2 = ((m.a - m.d) - r) / (2.0 * m.c);
  auto attracting = [&](double x) { return std::abs(m.c * x + m.d) > 1.0; };
  if (attracting(x1)) {
    ax.att = {x1, false};
    ax.rep = {x2, false};
  } else {
    ax.att = {x2, false};
    ax.rep = {x1, false};
  }
  return ax;
}

// Real Moebius map sending the axis to the imaginary axis, rep -> 0,
// att -> infinity.
Mat2 axis_frame(const Axis& ax) {
  Mat2 t;
  if (ax.att.infinite) {
    t = {1, -ax.rep.x, 0, 1};
  } else if (ax.rep.infinite) {
    t = {0, -1, 1, -ax.att.x};
  } else {
    double p = ax.rep.x, q = ax.att.x;
    if (p > q)
      t = {1, -p, 1, -q};
    else
      t = {-1, p, 1, -q};
  }
  renormalize(t);
  return t;
}

struct FramePoint {
  double s;      // coordinate along the axis
  double dline;  // distance to the axis line
};

FramePoint frame_point(const Mat2& frame, cd z) {
  cd w = moebius(frame, z);
  double m = std::abs(w);
  FramePoint fp;
  fp.s = std::log(m);
  double ratio = std::max(1.0, m / w.imag());
  fp.dline = std::acosh(ratio);
  return fp;
}

double segment_distance(const FramePoint& fp, double s0, double s1) {
  double e = 0;
  if (fp.s < s0) e = s0 - fp.s;
  if (fp.s > s1) e = fp.s - s1;
  return std::acosh(std::cosh(fp.dline) * std::cosh(e));
}

struct MatKey {
  std::int64_t v[4];
  bool operator==(const MatKey& o) const {
    return v[0] == o.v[0] && v[1] == o.v[1] && v[2] == o.v[2] && v[3] == o.v[3];
  }
};
struct MatKeyHash {
  size_t operator()(const MatKey& k) const {
    size_t h = 14695981039346656037ull;
    for (auto x : k.v) {
      h ^= static_cast<size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

MatKey quantize(const Mat2& m) {
  Mat2 n = m;
  double lead[4] = {n.a, n.b, n.c, n.d};
  for (double x : lead) {
    if (std::abs(x) > 1e-9) {
      if (x < 0) { n.a = -n.a; n.b = -n.b; n.c = -n.c; n.d = -n.d; }
      break;
    }
  }
  auto q = [](double x) {
    return static_cast<std::int64_t>(std::llround(x * 1e6));
  };
  return MatKey{{q(n.a), q(n.b), q(n.c), q(n.d)}};
}

struct Placed {
  Mat2 mat;
  Axis ax;
  Mat2 frame;
  double length;
};

// Choose a conjugate whose axis passes near the basepoint and has finite
// endpoints.
std::optional<Placed> place_near_base(const SurfaceData& s, const Word& w) {
  std::optional<Placed> best;
  double best_d = 0;
  std::vector<Word> conjugators;
  enumerate_reduced_words(2 * s.genus(), 2,
                          [&](const Word& x) { conjugators.push_back(x); });
  for (const Word& x : conjugators) {
    Word cw = free_reduce(concat(x, concat(w, inverse(x))));
    Mat2 m = s.matrix_of(cw);
    auto ax = axis_of(m);
    if (!ax) continue;
    if (ax->rep.infinite || ax->att.infinite) continue;
    if (std::abs(ax->rep.x - ax->att.x) < 1e-6) continue;
    Mat2 fr = axis_frame(*ax);
    FramePoint fp = frame_point(fr, kBasePoint);
    if (!best || fp.dline < best_d) {
      best = Placed{m, *ax, fr, 2.0 * std::acosh(std::abs(m.trace()) / 2.0)};
      best_d = fp.dline;
    }
  }
  return best;
}

}  // namespace

unsigned intersection_oracle(const SurfaceData& s, const CurveClass& c1,
                             const CurveClass& c2) {
  auto p1 = place_near_base(s, c1.word());
  auto p2 = place_near_base(s, c2.word());
  if (!p1 || !p2) throw std::runtime_error("oracle: could not place axes");

  FramePoint base1 = frame_point(p1->frame, kBasePoint);
  FramePoint base2 = frame_point(p2->frame, kBasePoint);
  double rho = base2.dline + p2->length / 2.0 + 1.0;
  double rho_expand = rho + 2.0 * s.polygon_circumradius() + 0.5;

  Axis ax2 = p2->ax;
  double a1p = p1->ax.rep.angle(), a1q = p1->ax.att.angle();

  for (int attempt = 0; attempt < 3; ++attempt) {
    double s_lo = base1.s + 0.37 * attempt;
    double s_hi = s_lo + p1->length;
    bool margin_bad = false;
    std::unordered_set<std::uint64_t> seen_geodesics;
    std::unordered_set<MatKey, MatKeyHash> visited;
    std::deque<Mat2> queue;
    Mat2 id;
    visited.insert(quantize(id));
    queue.push_back(id);
    unsigned crossings = 0;
    size_t guard = 0;
    while (!queue.empty()) {
      if (++guard > 4000000) throw std::runtime_error("oracle: blowup");
      Mat2 g = queue.front();
      queue.pop_front();

      Endpoint e1 = apply_boundary(g, ax2.rep);
      Endpoint e2 = apply_boundary(g, ax2.att);
      double b1 = e1.angle(), b2 = e2.angle();
      double lo = std::min(b1, b2), hi = std::max(b1, b2);
      auto gq = [](double x) {
        return static_cast<std::uint64_t>(
            static_cast<std::int64_t>(std::llround(x * 1e7)) + (1ll << 40));
      };
      std::uint64_t geo_key = gq(lo) * 2000000011ull + gq(hi);
      bool translate_is_axis1 =
          (std::abs(lo - std::min(a1p, a1q)) < 1e-7 &&
           std::abs(hi - std::max(a1p, a1q)) < 1e-7);
      if (seen_geodesics.insert(geo_key).second && !translate_is_axis1) {
        Endpoint f1 = apply_boundary(p1->frame, e1);
        Endpoint f2 = apply_boundary(p1->frame, e2);
        if (!f1.infinite && !f2.infinite && f1.x * f2.x < 0) {
          // In the frame the axis is the imaginary axis; the translate
          // crosses it at height sqrt(-f1.x * f2.x).
          double y = std::sqrt(-f1.x * f2.x);
          double sx = std::log(y);
          double m = std::min(std::abs(sx - s_lo), std::abs(sx - s_hi));
          if (m < 1e-6) margin_bad = true;
          if (sx >= s_lo && sx < s_hi) ++crossings;
        } else if ((f1.infinite && std::abs(f2.x) < 1e-9) ||
                   (f2.infinite && std::abs(f1.x) < 1e-9)) {
          margin_bad = true;  // translate shares an endpoint with the axis
        }
      }

      FramePoint fg = frame_point(p1->frame, moebius(g, kBasePoint));
      if (segment_distance(fg, s_lo, s_hi) > rho_expand) continue;
      for (int gi = 0; gi < 2 * s.genus(); ++gi) {
        for (int sign = 0; sign < 2; ++sign) {
          Mat2 h = sign ? g * s.generator_matrix(gi).inv()
                        : g * s.generator_matrix(gi);
          renormalize(h);
          MatKey k = quantize(h);
          if (visited.insert(k).second) queue.push_back(h);
        }
      }
    }
    if (!margin_bad) return crossings;
  }
  throw std::runtime_error("transversality margin too small");
}

void Multicurve::insert(const SurfaceData& s, const CurveClass& c,
                        const Rat& w) {
  if (w < Rat(0)) throw std::invalid_argument("negative weight");
  for (auto& comp : components) {
    if (comp.first.same_curve(s, c)) {
      comp.second += w;
      return;
    }
  }
  components.push_back({c, w});
}

Rat Multicurve::total_weight() const {
  Rat t(0);
  for (const auto& c : components) t += c.second;
  return t;
}

}  // namespace lamina
