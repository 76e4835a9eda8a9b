#include "lamina/presentation.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace lamina {

Presentation Presentation::make(GeneratorAlphabet a, std::vector<Word> rels,
                                bool dehn) {
  a.validate();
  Presentation p;
  p.alphabet = std::move(a);
  for (auto& r : rels) {
    Word cr = cyclic_reduce(r);
    if (cr.empty()) throw std::invalid_argument("trivial relator");
    p.relators.push_back(cr);
  }
  p.dehn_flag = dehn;
  if (dehn) {
    PieceReport pr = piece_report(p);
    if (!pr.small_cancellation_c6())
      throw std::invalid_argument(
          "dehn flag requires C'(1/6): max piece " +
          std::to_string(pr.max_piece) + " vs relator length " +
          std::to_string(pr.min_relator));
  }
  return p;
}

bool Presentation::is_flat_commutator_presentation() const {
  if (relators.empty()) return false;
  int n = alphabet.size();
  std::set<std::pair<int, int>> pairs;
  for (const Word& r : relators) {
    if (r.size() != 4) return false;
    Letter x = r[0], y = r[1];
    if (r[2] != inv(x) || r[3] != inv(y)) return false;
    int i = gen_index(x), j = gen_index(y);
    if (i == j) return false;
    pairs.insert({std::min(i, j), std::max(i, j)});
  }
  return static_cast<int>(pairs.size()) == n * (n - 1) / 2;
}

namespace {

std::vector<Word> symmetrized(const Presentation& p) {
  std::set<Word> out;
  for (const Word& r : p.relators) {
    Word ri = inverse(r);
    for (int k = 0; k < static_cast<int>(r.size()); ++k) {
      out.insert(rotate(r, k));
      out.insert(rotate(ri, k));
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

PieceReport piece_report(const Presentation& p) {
  PieceReport rep;
  auto sym = symmetrized(p);
  rep.min_relator = 0;
  for (const Word& r : p.relators) {
    int L = static_cast<int>(r.size());
    if (rep.min_relator == 0 || L < rep.min_relator) rep.min_relator = L;
  }
  for (size_t i = 0; i < sym.size(); ++i) {
    for (size_t j = 0; j < sym.size(); ++j) {
      if (i == j) continue;
      const Word& u = sym[i];
      const Word& v = sym[j];
      int lcp = 0;
      while (lcp < static_cast<int>(std::min(u.size(), v.size())) &&
             u[lcp] == v[lcp])
        ++lcp;
      rep.max_piece = std::max(rep.max_piece, lcp);
    }
  }
  return rep;
}

std::string DehnRewriter::key_of(const Word& w, size_t pos, size_t len) {
  return std::string(reinterpret_cast<const char*>(w.data()) + pos, len);
}

DehnRewriter::DehnRewriter(const Presentation& p) : pres_(&p) {
  if (!p.dehn_flag && p.has_relators())
    throw std::invalid_argument("DehnRewriter requires dehn_flag");
  std::set<int> longs, halves;
  for (const Word& rho : symmetrized(p)) {
    int L = static_cast<int>(rho.size());
    for (int h = L / 2 + 1; h <= L; ++h) {
      // rho = u v with |u| = h > L/2: u -> v^-1, strictly shorter.
      Word u(rho.begin(), rho.begin() + h);
      Word v(rho.begin() + h, rho.end());
      tables_.longhalf[key_of(u, 0, u.size())] = inverse(v);
      longs.insert(h);
    }
    if (L % 2 == 0) {
      int h = L / 2;
      Word u(rho.begin(), rho.begin() + h);
      Word v(rho.begin() + h, rho.end());
      tables_.exacthalf[key_of(u, 0, u.size())] = inverse(v);
      halves.insert(h);
    }
    tables_.max_sub = std::max(tables_.max_sub, L);
  }
  tables_.long_lengths.assign(longs.rbegin(), longs.rend());
  tables_.half_lengths.assign(halves.begin(), halves.end());
}

bool DehnRewriter::scan_longhalf(Word& w) const {
  int n = static_cast<int>(w.size());
  for (int i = 0; i < n; ++i) {
    for (int h : tables_.long_lengths) {
      if (i + h > n) continue;
      auto it = tables_.longhalf.find(key_of(w, i, h));
      if (it == tables_.longhalf.end()) continue;
      Word out;
      out.reserve(n);
      out.insert(out.end(), w.begin(), w.begin() + i);
      out.insert(out.end(), it->second.begin(), it->second.end());
      out.insert(out.end(), w.begin() + i + h, w.end());
      w = free_reduce(out);
      return true;
    }
  }
  return false;
}

Word DehnRewriter::dehn_reduce(Word w) const {
  w = free_reduce(w);
  if (!pres_->has_relators()) return w;
  while (scan_longhalf(w)) {
  }
  return w;
}

bool DehnRewriter::cyclic_scan_longhalf(Word& w) const {
  int n = static_cast<int>(w.size());
  if (n == 0) return false;
  // Scan the doubled word so wraparound subwords are visible.
  Word ww = concat(w, w);
  for (int i = 0; i < n; ++i) {
    for (int h : tables_.long_lengths) {
      if (h > n) continue;
      auto it = tables_.longhalf.find(key_of(ww, i, h));
      if (it == tables_.longhalf.end()) continue;
      Word rest(ww.begin() + i + h, ww.begin() + i + n);
      w = cyclic_reduce(concat(it->second, rest));
      return true;
    }
  }
  return false;
}

Word DehnRewriter::cyclic_dehn_reduce(Word w) const {
  w = cyclic_reduce(w);
  if (!pres_->has_relators()) return w;
  while (cyclic_scan_longhalf(w)) {
  }
  return w;
}

Word DehnRewriter::canonical(const Word& w0) const {
  Word w = dehn_reduce(w0);
  if (!pres_->has_relators() || tables_.half_lengths.empty()) return w;
  for (;;) {
    std::set<Word> closure;
    std::deque<Word> queue;
    closure.insert(w);
    queue.push_back(w);
    Word best = w;
    std::optional<Word> shorter;
    while (!queue.empty() && !shorter) {
      Word u = queue.front();
      queue.pop_front();
      int n = static_cast<int>(u.size());
      for (int h : tables_.half_lengths) {
        for (int i = 0; i + h <= n; ++i) {
          auto it = tables_.exacthalf.find(key_of(u, i, h));
          if (it == tables_.exacthalf.end()) continue;
          Word out;
          out.reserve(n);
          out.insert(out.end(), u.begin(), u.begin() + i);
          out.insert(out.end(), it->second.begin(), it->second.end());
          out.insert(out.end(), u.begin() + i + h, u.end());
          out = free_reduce(out);
          if (out.size() == u.size()) {
            // A swap can expose a more-than-half subword without changing
            // the free length; that still witnesses non-geodesity.
            Word dr = dehn_reduce(out);
            if (dr.size() < out.size()) out = dr;
          }
          if (out.size() < u.size()) {
            shorter = out;
            break;
          }
          if (closure.insert(out).second) {
            if (static_cast<int>(closure.size()) > closure_cap_)
              throw std::runtime_error("geodesic swap closure cap exceeded");
            if (shortlex_less(out, best)) best = out;
            queue.push_back(out);
          }
        }
        if (shorter) break;
      }
    }
    if (!shorter) return best;
    w = dehn_reduce(*shorter);
  }
}

std::vector<Word> DehnRewriter::geodesic_representatives(const Word& w0) const {
  Word c = canonical(w0);
  std::set<Word> closure;
  std::deque<Word> queue;
  closure.insert(c);
  queue.push_back(c);
  while (!queue.empty()) {
    Word u = queue.front();
    queue.pop_front();
    int n = static_cast<int>(u.size());
    for (int h : tables_.half_lengths) {
      for (int i = 0; i + h <= n; ++i) {
        auto it = tables_.exacthalf.find(key_of(u, i, h));
        if (it == tables_.exacthalf.end()) continue;
        Word out;
        out.insert(out.end(), u.begin(), u.begin() + i);
        out.insert(out.end(), it->second.begin(), it->second.end());
        out.insert(out.end(), u.begin() + i + h, u.end());
        out = free_reduce(out);
        if (out.size() == u.size() && closure.insert(out).second)
          queue.push_back(out);
      }
    }
  }
  return {closure.begin(), closure.end()};
}

Word DehnRewriter::cyclic_canonical(const Word& w0) const {
  Word w = cyclic_dehn_reduce(w0);
  if (!pres_->has_relators() || tables_.half_lengths.empty())
    return least_rotation(w);
  for (;;) {
    std::set<Word> closure;  // keys: least rotations
    std::deque<Word> queue;
    Word start = least_rotation(w);
    closure.insert(start);
    queue.push_back(start);
    Word best = start;
    std::optional<Word> shorter;
    while (!queue.empty() && !shorter) {
      Word u = queue.front();
      queue.pop_front();
      int n = static_cast<int>(u.size());
      Word uu = concat(u, u);
      for (int h : tables_.half_lengths) {
        if (h > n) continue;
        for (int i = 0; i < n; ++i) {
          auto it = tables_.exacthalf.find(key_of(uu, i, h));
          if (it == tables_.exacthalf.end()) continue;
          Word rest(uu.begin() + i + h, uu.begin() + i + n);
          Word out = cyclic_reduce(concat(it->second, rest));
          if (out.size() == u.size()) {
            Word dr = cyclic_dehn_reduce(out);
            if (dr.size() < out.size()) out = dr;
          }
          if (out.size() < u.size()) {
            shorter = out;
            break;
          }
          Word keyed = least_rotation(out);
          if (closure.insert(keyed).second) {
            if (static_cast<int>(closure.size()) > closure_cap_)
              throw std::runtime_error("cyclic swap closure cap exceeded");
            if (shortlex_less(keyed, best)) best = keyed;
            queue.push_back(keyed);
          }
        }
        if (shorter) break;
      }
    }
    if (!shorter) return best;
    w = cyclic_dehn_reduce(*shorter);
  }
}

std::vector<Word> DehnRewriter::minimal_cyclic_representatives(
    const Word& w0) const {
  Word c = cyclic_canonical(w0);
  std::set<Word> closure;
  std::deque<Word> queue;
  closure.insert(c);
  queue.push_back(c);
  while (!queue.empty()) {
    Word u = queue.front();
    queue.pop_front();
    int n = static_cast<int>(u.size());
    Word uu = concat(u, u);
    for (int h : tables_.half_lengths) {
      if (h > n) continue;
      for (int i = 0; i < n; ++i) {
        auto it = tables_.exacthalf.find(key_of(uu, i, h));
        if (it == tables_.exacthalf.end()) continue;
        Word rest(uu.begin() + i + h, uu.begin() + i + n);
        Word out = least_rotation(cyclic_reduce(concat(it->second, rest)));
        if (out.size() == u.size() && closure.insert(out).second)
          queue.push_back(out);
      }
    }
  }
  return {closure.begin(), closure.end()};
}

void enumerate_reduced_words(int ngens, int radius,
                             const std::function<void(const Word&)>& visit) {
  Word w;
  std::function<void()> rec = [&]() {
    visit(w);
    if (static_cast<int>(w.size()) == radius) return;
    for (int g = 1; g <= ngens; ++g) {
      for (Letter x : {static_cast<Letter>(g), static_cast<Letter>(-g)}) {
        if (!w.empty() && w.back() == inv(x)) continue;
        w.push_back(x);
        rec();
        w.pop_back();
      }
    }
  };
  rec();
}

ConjugacySearchResult conjugacy_search(const DehnRewriter& rw, const Word& w,
                                       int radius) {
  ConjugacySearchResult res;
  res.best = rw.cyclic_dehn_reduce(w);
  res.conjugator = {};
  enumerate_reduced_words(rw.presentation().alphabet.size(), radius,
                          [&](const Word& x) {
                            Word c = rw.cyclic_dehn_reduce(
                                concat(inverse(x), concat(w, x)));
                            if (c.size() < res.best.size()) {
                              res.best = c;
                              res.conjugator = x;
                            }
                          });
  return res;
}

ConjugacyMinimalResult conjugacy_minimal(const DehnRewriter& rw, const Word& c,
                                         int certify_radius) {
  ConjugacyMinimalResult out;
  out.minimal = rw.cyclic_canonical(c);
  out.oracle_radius = certify_radius;
  if (certify_radius > 0) {
    auto oracle = conjugacy_search(rw, c, certify_radius);
    out.certified = oracle.best.size() >= out.minimal.size();
  }
  return out;
}

}  // namespace lamina
