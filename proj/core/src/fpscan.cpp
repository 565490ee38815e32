#include "flop/fpscan.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>

namespace flop {

namespace {

// Subspaces of F_p^n, n <= 5, vectors encoded base p.
struct Subspace {
  int dim = 0;
  std::vector<int> basis;     // codes
  std::vector<bool> members;  // indexed by code
};

int ipow(int p, int n) {
  int r = 1;
  for (int i = 0; i < n; ++i) r *= p;
  return r;
}

std::vector<int> decode(int code, int p, int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i, code /= p) v[static_cast<std::size_t>(i)] = code % p;
  return v;
}

int encode(const std::vector<int>& v, int p) {
  int code = 0;
  for (auto it = v.rbegin(); it != v.rend(); ++it) code = code * p + *it;
  return code;
}

std::vector<Subspace> all_subspaces(int p, int n) {
  const int size = ipow(p, n);
  std::vector<Subspace> out;
  // Walk reduced row echelon forms: choose pivots, then fill the free slots.
  for (int k = 0; k <= n; ++k) {
    std::vector<int> piv(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) piv[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::vector<std::pair<int, int>> slots;
      for (int i = 0; i < k; ++i)
        for (int j = piv[static_cast<std::size_t>(i)] + 1; j < n; ++j) {
          bool pivot_col = false;
          for (int q : piv) pivot_col |= (q == j);
          if (!pivot_col) slots.push_back({i, j});
        }
      const int fills = ipow(p, static_cast<int>(slots.size()));
      for (int f = 0; f < fills; ++f) {
        std::vector<std::vector<int>> rows(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(n)));
        for (int i = 0; i < k; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(piv[static_cast<std::size_t>(i)])] = 1;
        int g = f;
        for (const auto& [i, j] : slots) {
          rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = g % p;
          g /= p;
        }
        Subspace s;
        s.dim = k;
        s.members.assign(static_cast<std::size_t>(size), false);
        for (const auto& r : rows) s.basis.push_back(encode(r, p));
        const int combos = ipow(p, k);
        for (int c = 0; c < combos; ++c) {
          std::vector<int> v(static_cast<std::size_t>(n));
          int h = c;
          for (int i = 0; i < k; ++i, h /= p)
            for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = (v[static_cast<std::size_t>(j)] + (h % p) * rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) % p;
          s.members[static_cast<std::size_t>(encode(v, p))] = true;
        }
        out.push_back(std::move(s));
      }
      // next pivot combination
      int i = k - 1;
      while (i >= 0 && piv[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++piv[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) piv[static_cast<std::size_t>(j)] = piv[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

// Arrow as a lookup table on encoded vectors.
std::vector<int> table_mod_p(const Mat& m, int p) {
  const int n = static_cast<int>(m.cols());
  const int t = static_cast<int>(m.rows());
  std::vector<std::vector<int>> a(static_cast<std::size_t>(t), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < n; ++j) {
      const Q& q = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (q.get_den() != 1) throw std::invalid_argument("non-integer entry after scaling");
      mpz_class r = q.get_num() % p;
      if (r < 0) r += p;
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<int>(r.get_si());
    }
  std::vector<int> table(static_cast<std::size_t>(ipow(p, n)));
  for (int c = 0; c < ipow(p, n); ++c) {
    auto v = decode(c, p, n);
    std::vector<int> out(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
      int s = 0;
      for (int j = 0; j < n; ++j) s += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)];
      out[static_cast<std::size_t>(i)] = s % p;
    }
    table[static_cast<std::size_t>(c)] = encode(out, p);
  }
  return table;
}

}  // namespace

std::map<DimVec, long> subrep_scan_Fp(const Representation& r, int p) {
  if (p != 2 && p != 3 && p != 5) throw std::invalid_argument("scan prime must be 2, 3 or 5");
  if (r.d0 > kScanMaxDim || r.d1 > kScanMaxDim) throw std::invalid_argument("scan dimensions exceed 4");
  r.validate_shapes();
  std::array<std::vector<int>, 4> t;
  for (Arrow a : kArrows) t[static_cast<std::size_t>(a)] = table_mod_p(primitive_integer(r.arrow(a)), p);
  const auto& tx = t[0];
  const auto& ty = t[1];
  const auto& tz = t[2];
  const auto& tw = t[3];

  auto s0 = all_subspaces(p, r.d0);
  auto s1 = all_subspaces(p, r.d1);
  std::map<DimVec, long> out;
  for (const auto& a : s0)
    for (const auto& b : s1) {
      bool closed = true;
      for (int v : a.basis) closed = closed && b.members[static_cast<std::size_t>(tx[static_cast<std::size_t>(v)])] &&
                                     b.members[static_cast<std::size_t>(tz[static_cast<std::size_t>(v)])];
      for (int v : b.basis) closed = closed && a.members[static_cast<std::size_t>(ty[static_cast<std::size_t>(v)])] &&
                                     a.members[static_cast<std::size_t>(tw[static_cast<std::size_t>(v)])];
      if (closed) ++out[{a.dim, b.dim}];
    }
  return out;
}

namespace {

// F_2 arrow data as column bitmasks, with apply tables.
struct F2Map {
  std::array<std::uint8_t, 32> t{};
};

F2Map f2_map(std::uint32_t bits, int src, int tgt) {
  F2Map m;
  const std::uint32_t mask = (1u << tgt) - 1;
  for (std::uint32_t v = 0; v < (1u << src); ++v) {
    std::uint32_t out = 0;
    for (int i = 0; i < src; ++i)
      if (v >> i & 1u) out ^= (bits >> (i * tgt)) & mask;
    m.t[v] = static_cast<std::uint8_t>(out);
  }
  return m;
}

// Rank of a set of bit vectors over F_2.
int f2_rank(std::vector<std::uint32_t> vs) {
  int r = 0;
  for (int bit = 31; bit >= 0; --bit) {
    std::size_t piv = vs.size();
    for (std::size_t i = static_cast<std::size_t>(r); i < vs.size(); ++i)
      if (vs[i] >> bit & 1u) {
        piv = i;
        break;
      }
    if (piv == vs.size()) continue;
    std::swap(vs[piv], vs[static_cast<std::size_t>(r)]);
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (i != static_cast<std::size_t>(r) && (vs[i] >> bit & 1u)) vs[i] ^= vs[static_cast<std::size_t>(r)];
    ++r;
  }
  return r;
}

struct F2Sub {
  int dim;
  std::vector<std::uint32_t> basis;
  std::uint64_t members;  // bit v set iff v in the subspace (n <= 5)
};

std::vector<F2Sub> f2_subspaces(int n) {
  std::vector<F2Sub> out;
  for (const auto& s : all_subspaces(2, n)) {
    F2Sub f{s.dim, {}, 0};
    for (int b : s.basis) f.basis.push_back(static_cast<std::uint32_t>(b));
    for (std::size_t c = 0; c < s.members.size(); ++c)
      if (s.members[c]) f.members |= std::uint64_t{1} << c;
    out.push_back(std::move(f));
  }
  return out;
}

bool f2_nilpotent(const F2Map& x, const F2Map& y, const F2Map& z, const F2Map& w, int d0, int d1) {
  std::vector<std::uint32_t> u0, u1;
  for (int i = 0; i < d0; ++i) u0.push_back(1u << i);
  for (int i = 0; i < d1; ++i) u1.push_back(1u << i);
  int prev = d0 + d1;
  while (prev > 0) {
    std::vector<std::uint32_t> n0, n1;
    for (auto v : u0) {
      n1.push_back(x.t[v]);
      n1.push_back(z.t[v]);
    }
    for (auto v : u1) {
      n0.push_back(y.t[v]);
      n0.push_back(w.t[v]);
    }
    // keep spanning sets small
    auto prune = [](std::vector<std::uint32_t>& vs) {
      std::vector<std::uint32_t> keep;
      for (auto v : vs) {
        keep.push_back(v);
        if (f2_rank(keep) < static_cast<int>(keep.size())) keep.pop_back();
      }
      vs = keep;
    };
    prune(n0);
    prune(n1);
    int now = static_cast<int>(n0.size() + n1.size());
    if (now == prev) return false;
    prev = now;
    u0 = std::move(n0);
    u1 = std::move(n1);
  }
  return true;
}

// dim_F2 of the endomorphism ring; unknowns are the entries of phi0 and phi1.
int f2_end_dim(const F2Map& x, const F2Map& y, const F2Map& z, const F2Map& w, int d0, int d1) {
  const int n0 = d0 * d0;
  auto bit = [](const F2Map& m, int row, int col) { return (m.t[1u << col] >> row) & 1u; };
  std::vector<std::uint32_t> rows;
  // phi1 M - M phi0 for x, z; phi0 M - M phi1 for y, w
  for (const F2Map* m : {&x, &z})
    for (int i = 0; i < d1; ++i)
      for (int j = 0; j < d0; ++j) {
        std::uint32_t r = 0;
        for (int k = 0; k < d1; ++k)
          if (bit(*m, k, j)) r ^= 1u << (n0 + i * d1 + k);
        for (int k = 0; k < d0; ++k)
          if (bit(*m, i, k)) r ^= 1u << (k * d0 + j);
        rows.push_back(r);
      }
  for (const F2Map* m : {&y, &w})
    for (int i = 0; i < d0; ++i)
      for (int j = 0; j < d1; ++j) {
        std::uint32_t r = 0;
        for (int k = 0; k < d0; ++k)
          if (bit(*m, k, j)) r ^= 1u << (i * d0 + k);
        for (int k = 0; k < d1; ++k)
          if (bit(*m, i, k)) r ^= 1u << (n0 + k * d1 + j);
        rows.push_back(r);
      }
  return n0 + d1 * d1 - f2_rank(rows);
}

}  // namespace

std::map<DimVec, long> stable_dimvector_scan(const StabilityParams& p, int bound) {
  if (bound < 1 || bound > kScanMaxBound) throw std::invalid_argument("scan bound must be in 1..5");
  if (chamber(p) == Chamber::Wall) throw std::invalid_argument("parameters lie on the wall");
  std::map<DimVec, long> out;
  for (int d0 = 0; d0 <= bound; ++d0)
    for (int d1 = 0; d0 + d1 <= bound; ++d1) {
      if (d0 + d1 == 0) continue;
      const CQ total = central_charge(DimVec{d0, d1}, p);
      // proper nonzero sub-dimension vectors that would break stability
      std::vector<DimVec> bad;
      for (int a = 0; a <= d0; ++a)
        for (int b = 0; b <= d1; ++b) {
          if ((a == 0 && b == 0) || (a == d0 && b == d1)) continue;
          if (!phase_lt(central_charge(DimVec{a, b}, p), total)) bad.push_back({a, b});
        }
      auto s0 = f2_subspaces(d0);
      auto s1 = f2_subspaces(d1);
      std::vector<std::pair<const F2Sub*, const F2Sub*>> pairs;
      for (const auto& [a, b] : bad)
        for (const auto& u : s0)
          if (u.dim == a)
            for (const auto& v : s1)
              if (v.dim == b) pairs.push_back({&u, &v});

      const int cells = d0 * d1;
      const std::uint64_t n = std::uint64_t{1} << cells;
      long count = 0;
      for (std::uint64_t xb = 0; xb < n; ++xb) {
        F2Map x = f2_map(static_cast<std::uint32_t>(xb), d0, d1);
        for (std::uint64_t zb = 0; zb < n; ++zb) {
          F2Map z = f2_map(static_cast<std::uint32_t>(zb), d0, d1);
          for (std::uint64_t yb = 0; yb < n; ++yb) {
            F2Map y = f2_map(static_cast<std::uint32_t>(yb), d1, d0);
            for (std::uint64_t wb = 0; wb < n; ++wb) {
              F2Map w = f2_map(static_cast<std::uint32_t>(wb), d1, d0);
              bool ok = true;
              // yzw = wzy and wxy = yxw on V1; zwx = xwz and xyz = zyx on V0
              for (int i = 0; ok && i < d1; ++i) {
                std::uint32_t f = 1u << i;
                ok = y.t[z.t[w.t[f]]] == w.t[z.t[y.t[f]]] && w.t[x.t[y.t[f]]] == y.t[x.t[w.t[f]]];
              }
              for (int i = 0; ok && i < d0; ++i) {
                std::uint32_t e = 1u << i;
                ok = z.t[w.t[x.t[e]]] == x.t[w.t[z.t[e]]] && x.t[y.t[z.t[e]]] == z.t[y.t[x.t[e]]];
              }
              if (!ok || !f2_nilpotent(x, y, z, w, d0, d1)) continue;
              bool stable = true;
              for (const auto& [u, v] : pairs) {
                bool closed = true;
                for (auto e : u->basis)
                  closed = closed && (v->members >> x.t[e] & 1u) && (v->members >> z.t[e] & 1u);
                for (auto f : v->basis)
                  closed = closed && (u->members >> y.t[f] & 1u) && (u->members >> w.t[f] & 1u);
                if (closed) {
                  stable = false;
                  break;
                }
              }
              // Stable over F_2 but with a larger division ring of endomorphisms means the
              // module splits over an extension field, so it is not geometrically stable.
              if (stable && f2_end_dim(x, y, z, w, d0, d1) == 1) ++count;
            }
          }
        }
      }
      if (count > 0) out[{d0, d1}] = count;
    }
  return out;
}

}  // namespace flop
