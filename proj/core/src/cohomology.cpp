#include "flop/cohomology.hpp"

#include "flop/homalg.hpp"
#include "flop/truncated.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace flop {

std::vector<int> internal_shifts(const FreeComplex& c) {
  const std::size_t n = c.gens.size();
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(n);
  for (const auto& [key, e] : c.d) {
    auto len = e.uniform_length();
    if (!len) throw std::invalid_argument("differential entry is not length homogeneous");
    // s(h) = s(g) - |c|
    int l = static_cast<int>(*len);
    adj[key.first].push_back({key.second, -l});
    adj[key.second].push_back({key.first, l});
  }
  std::vector<int> s(n, 0);
  std::vector<bool> seen(n, false);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<std::size_t> comp{root};
    seen[root] = true;
    std::deque<std::size_t> q{root};
    while (!q.empty()) {
      std::size_t g = q.front();
      q.pop_front();
      for (auto [h, delta] : adj[g]) {
        if (!seen[h]) {
          seen[h] = true;
          s[h] = s[g] + delta;
          comp.push_back(h);
          q.push_back(h);
        } else if (s[h] != s[g] + delta) {
          throw std::invalid_argument("differential is not homogeneous for any internal grading");
        }
      }
    }
    int lo = s[root];
    for (auto g : comp) lo = std::min(lo, s[g]);
    for (auto g : comp) s[g] -= lo;
  }
  return s;
}

namespace {

struct Slot {
  std::size_t gen;
  int len;
  std::size_t offset;
};

// Cochains of generator degree k, internal degree D, landing at vertex w.
struct Space {
  std::vector<Slot> slots;
  std::size_t size = 0;
};

Space space(const FreeComplex& c, const std::vector<int>& sh, const TruncatedAlgebra& a, int k, int D, Vertex w) {
  Space sp;
  for (std::size_t g = 0; g < c.gens.size(); ++g) {
    if (c.gens[g].degree != k) continue;
    int len = D - sh[g];
    if (len < 0 || len > a.cutoff()) continue;
    if (TruncatedAlgebra::component_target(c.gens[g].vertex, len) != w) continue;
    sp.slots.push_back({g, len, sp.size});
    sp.size += a.dim(c.gens[g].vertex, len);
  }
  return sp;
}

FreePathElement word_el(Vertex u, const std::string& word) {
  return word.empty() ? FreePathElement::path(idempotent(u)) : FreePathElement::word(word);
}

const Slot* find(const Space& s, std::size_t g) {
  for (const auto& sl : s.slots)
    if (sl.gen == g) return &sl;
  return nullptr;
}

Mat differential(const FreeComplex& c, const TruncatedAlgebra& a, const Space& from, const Space& to) {
  Mat m(to.size, from.size);
  for (const auto& sl : from.slots) {
    const auto& words = a.basis(c.gens[sl.gen].vertex, sl.len);
    for (std::size_t i = 0; i < words.size(); ++i) {
      FreePathElement p = word_el(c.gens[sl.gen].vertex, words[i]);
      for (std::size_t h = 0; h < c.gens.size(); ++h) {
        auto it = c.d.find({sl.gen, h});
        if (it == c.d.end()) continue;
        const Slot* t = find(to, h);
        if (!t) throw std::logic_error("differential leaves the truncation window");
        Vec v = a.reduce_component(p * it->second, c.gens[h].vertex, t->len);
        for (std::size_t r = 0; r < v.size(); ++r) m(t->offset + r, sl.offset + i) += v[r];
      }
    }
  }
  return m;
}

Vec arrow_on(const FreeComplex& c, const TruncatedAlgebra& a, Arrow ar, const Space& from, const Space& to,
             const Vec& v) {
  Vec out(to.size);
  FreePathElement ae = arrow_element(ar);
  for (const auto& sl : from.slots) {
    const Slot* t = find(to, sl.gen);
    const auto& words = a.basis(c.gens[sl.gen].vertex, sl.len);
    for (std::size_t i = 0; i < words.size(); ++i) {
      const Q& q = v[sl.offset + i];
      if (sgn(q) == 0) continue;
      if (!t) throw std::logic_error("arrow action leaves the truncation window");
      Vec r = a.reduce_component(ae * word_el(c.gens[sl.gen].vertex, words[i]), c.gens[sl.gen].vertex, t->len);
      for (std::size_t j = 0; j < r.size(); ++j) out[t->offset + j] += q * r[j];
    }
  }
  return out;
}

// Cohomology of one (k, D, w) piece: representatives of a basis and a projector onto it.
struct PieceCohomology {
  Space sp;
  std::vector<Vec> boundaries;
  std::vector<Vec> reps;
};

PieceCohomology piece(const FreeComplex& c, const std::vector<int>& sh, const TruncatedAlgebra& a, int k, int D,
                      Vertex w) {
  PieceCohomology pc;
  pc.sp = space(c, sh, a, k, D, w);
  if (pc.sp.size == 0) return pc;
  Space prev = space(c, sh, a, k - 1, D, w);
  Space next = space(c, sh, a, k + 1, D, w);
  std::vector<Vec> cycles = nullspace(differential(c, a, pc.sp, next));
  Mat b = differential(c, a, prev, pc.sp);
  pc.boundaries = b.cols() == 0 ? std::vector<Vec>{} : column_basis(b);
  std::vector<Vec> span = pc.boundaries;
  std::size_t r = span.size();
  for (const auto& z : cycles) {
    span.push_back(z);
    std::size_t r2 = rank(from_columns(span, pc.sp.size));
    if (r2 > r) {
      r = r2;
      pc.reps.push_back(z);
    } else {
      span.pop_back();
    }
  }
  return pc;
}

// Coordinates of a cocycle in the chosen representatives, modulo boundaries.
Vec class_of(const PieceCohomology& pc, const Vec& z) {
  std::vector<Vec> cols = pc.reps;
  cols.insert(cols.end(), pc.boundaries.begin(), pc.boundaries.end());
  if (cols.empty()) return {};
  auto sol = solve(from_columns(cols, pc.sp.size), z);
  if (!sol) throw std::logic_error("arrow image is not a cocycle");
  return Vec(sol->begin(), sol->begin() + static_cast<long>(pc.reps.size()));
}

}  // namespace

std::map<int, Representation> complex_cohomology_at(const FreeComplex& c, int N) {
  auto rep = d_squared_ideal_check(c, N);
  if (!rep.ok) throw std::invalid_argument("d^2 is not in the ideal: " + rep.message);
  TruncatedAlgebra a(N);
  const std::vector<int> sh = internal_shifts(c);
  const int window = N - 3;
  int kmin = INT32_MAX, kmax = INT32_MIN;
  for (const auto& g : c.gens) {
    kmin = std::min(kmin, g.degree);
    kmax = std::max(kmax, g.degree);
  }
  kmin = std::max(kmin, c.complete_from);
  std::map<int, Representation> out;
  for (int k = kmin; k <= kmax; ++k) {
    // internal degrees D whose pieces in degrees k-1, k, k+1 stay inside the window
    int smin = INT32_MAX;
    for (std::size_t g = 0; g < c.gens.size(); ++g)
      if (std::abs(c.gens[g].degree - k) <= 1) smin = std::min(smin, sh[g]);
    std::vector<std::pair<int, Vertex>> keys;
    std::map<std::pair<int, int>, PieceCohomology> pieces;
    for (int D = smin; D <= smin + window; ++D) {
      for (Vertex w : kVertices) {
        // every generator of degree k-1..k+1 must see lengths <= window
        bool inside = true;
        for (std::size_t g = 0; g < c.gens.size(); ++g)
          if (std::abs(c.gens[g].degree - k) <= 1 && D - sh[g] > window) inside = false;
        if (!inside) continue;
        PieceCohomology pc = piece(c, sh, a, k, D, w);
        if (!pc.reps.empty()) keys.push_back({D, w});
        pieces[{D, idx(w)}] = std::move(pc);
      }
    }
    if (keys.empty()) continue;
    // basis of V_w: concatenation over D of the piece representatives
    std::map<std::pair<int, int>, std::size_t> offset;
    int dims[2] = {0, 0};
    for (auto [D, w] : keys) {
      offset[{D, idx(w)}] = static_cast<std::size_t>(dims[idx(w)]);
      dims[idx(w)] += static_cast<int>(pieces[{D, idx(w)}].reps.size());
    }
    Representation r(dims[0], dims[1]);
    for (auto [D, w] : keys) {
      const PieceCohomology& src = pieces[{D, idx(w)}];
      for (Arrow ar : kArrows) {
        if (source(ar) != w) continue;
        Vertex t = target(ar);
        auto it = pieces.find({D + 1, idx(t)});
        // A target piece outside the window is caught by the N + 1 comparison.
        if (it == pieces.end()) continue;
        for (std::size_t j = 0; j < src.reps.size(); ++j) {
          Vec img = arrow_on(c, a, ar, src.sp, it->second.sp, src.reps[j]);
          Vec cls = class_of(it->second, img);
          if (cls.empty()) continue;
          std::size_t base = offset.at({D + 1, idx(t)});
          for (std::size_t i = 0; i < cls.size(); ++i)
            r.arrow(ar)(base + i, offset.at({D, idx(w)}) + j) = cls[i];
        }
      }
    }
    out.emplace(k - 3, std::move(r));
  }
  return out;
}

std::map<int, Representation> free_complex_cohomology(const FreeComplex& c, int N, std::uint64_t seed) {
  auto a = complex_cohomology_at(c, N);
  auto b = complex_cohomology_at(c, N + 1);
  bool same = a.size() == b.size();
  for (auto ia = a.begin(), ib = b.begin(); same && ia != a.end(); ++ia, ++ib)
    same = ia->first == ib->first && iso_check(ia->second, ib->second, seed);
  if (!same) throw std::runtime_error("cohomology of " + c.label + " did not stabilize between N and N+1");
  return a;
}

}  // namespace flop
