#include "flop/truncated.hpp"

#include <algorithm>
#include <stdexcept>

namespace flop {

std::vector<std::string> words_from(Vertex s, int len) {
  std::vector<std::string> out{""};
  Vertex cur = s;
  for (int l = 0; l < len; ++l) {
    std::vector<std::string> next;
    for (const auto& w : out)
      for (Arrow a : kArrows)
        if (source(a) == cur) next.push_back(std::string(1, arrow_char(a)) + w);
    out = std::move(next);
    cur = other(cur);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TruncatedAlgebra::TruncatedAlgebra(int N) : TruncatedAlgebra(N, relations()) {}

TruncatedAlgebra::TruncatedAlgebra(int N, std::vector<FreePathElement> rels) : n_(N), rels_(std::move(rels)) {
  if (N < 0 || N > kMaxCutoff) throw std::out_of_range("truncation N must lie in [0, 12]");
  for (const auto& r : rels_) {
    if (r.is_zero()) continue;
    if (!r.homogeneous_endpoints() || !r.uniform_length())
      throw std::invalid_argument("relation is not homogeneous: " + r.to_string());
  }
  build();
}

const TruncatedAlgebra::Component& TruncatedAlgebra::comp(Vertex s, int len) const {
  if (len < 0 || len > n_) throw std::out_of_range("component length outside truncation");
  return comps_[static_cast<std::size_t>(2 * len + idx(s))];
}

TruncatedAlgebra::Component& TruncatedAlgebra::comp(Vertex s, int len) {
  return comps_[static_cast<std::size_t>(2 * len + idx(s))];
}

TruncatedAlgebra::Row TruncatedAlgebra::to_row(const Component& c, const FreePathElement& e) const {
  Row r;
  for (const auto& [p, q] : e.terms()) {
    auto it = c.index.find(p.word);
    if (it == c.index.end()) throw std::invalid_argument("term outside component: " + p.word);
    r[it->second] += q;
  }
  for (auto it = r.begin(); it != r.end();) it = sgn(it->second) == 0 ? r.erase(it) : std::next(it);
  return r;
}

TruncatedAlgebra::Row TruncatedAlgebra::reduced(const Component& c, Row r) const {
  auto it = r.begin();
  while (it != r.end()) {
    auto pv = c.pivots.find(it->first);
    if (pv == c.pivots.end()) {
      ++it;
      continue;
    }
    std::size_t col = it->first;
    Q f = it->second / pv->second.begin()->second;
    for (const auto& [j, v] : pv->second) {
      Q& slot = r[j];
      slot -= f * v;
    }
    for (auto jt = r.begin(); jt != r.end();) jt = sgn(jt->second) == 0 ? r.erase(jt) : std::next(jt);
    it = r.upper_bound(col);
  }
  return r;
}

void TruncatedAlgebra::insert(Component& c, Row r) const {
  // semi-echelon: reduce only the leading entry repeatedly
  while (!r.empty()) {
    auto lead = r.begin();
    auto pv = c.pivots.find(lead->first);
    if (pv == c.pivots.end()) break;
    Q f = lead->second / pv->second.begin()->second;
    for (const auto& [j, v] : pv->second) r[j] -= f * v;
    for (auto jt = r.begin(); jt != r.end();) jt = sgn(jt->second) == 0 ? r.erase(jt) : std::next(jt);
  }
  if (r.empty()) return;
  std::size_t lead = r.begin()->first;
  c.pivots.emplace(lead, std::move(r));
}

void TruncatedAlgebra::build() {
  comps_.resize(static_cast<std::size_t>(2 * (n_ + 1)));
  for (int len = 0; len <= n_; ++len) {
    for (Vertex s : kVertices) {
      Component& c = comp(s, len);
      c.words = words_from(s, len);
      for (std::size_t i = 0; i < c.words.size(); ++i) c.index[c.words[i]] = i;
      if (len > 0) {
        // left multiples a*g of the previous ideal with the same source
        const Component& prev = comp(s, len - 1);
        Vertex t = component_target(s, len - 1);
        for (const auto& [lead, row] : prev.pivots)
          for (Arrow a : kArrows) {
            if (source(a) != t) continue;
            Row r;
            for (const auto& [j, v] : row) r[c.index.at(std::string(1, arrow_char(a)) + prev.words[j])] = v;
            insert(c, std::move(r));
          }
        // right multiples g*a with a leaving s
        for (Arrow a : kArrows) {
          if (source(a) != s) continue;
          const Component& from = comp(target(a), len - 1);
          for (const auto& [lead, row] : from.pivots) {
            Row r;
            for (const auto& [j, v] : row) r[c.index.at(from.words[j] + std::string(1, arrow_char(a)))] = v;
            insert(c, std::move(r));
          }
        }
      }
      for (const auto& rel : rels_) {
        if (rel.is_zero()) continue;
        const Path& p0 = rel.terms().begin()->first;
        if (static_cast<int>(p0.length()) != len || p0.source() != s) continue;
        insert(c, to_row(c, rel));
      }
      c.basis_pos.assign(c.words.size(), -1);
      for (std::size_t j = 0; j < c.words.size(); ++j) {
        if (c.pivots.count(j)) continue;
        c.basis_pos[j] = static_cast<long>(c.basis.size());
        c.basis.push_back(c.words[j]);
      }
    }
  }
  offsets_.assign(comps_.size(), 0);
  total_ = 0;
  for (std::size_t k = 0; k < comps_.size(); ++k) {
    offsets_[k] = total_;
    total_ += comps_[k].basis.size();
  }
}

const std::vector<std::string>& TruncatedAlgebra::basis(Vertex s, int len) const { return comp(s, len).basis; }

std::size_t TruncatedAlgebra::dim(Vertex s, Vertex t, int len) const {
  if (len < 0 || len > n_ || component_target(s, len) != t) return 0;
  return dim(s, len);
}

std::size_t TruncatedAlgebra::offset(Vertex s, int len) const {
  return offsets_.at(static_cast<std::size_t>(2 * len + idx(s)));
}

Vec TruncatedAlgebra::reduce_component(const FreePathElement& e, Vertex s, int len) const {
  const Component& c = comp(s, len);
  Vec out(c.basis.size());
  if (len == 0) {
    for (const auto& [p, q] : e.terms()) {
      if (!p.word.empty() || p.src != s) throw std::invalid_argument("term outside component");
      out[0] += q;
    }
    return out;
  }
  Row r = reduced(c, to_row(c, e));
  for (const auto& [j, v] : r) out[static_cast<std::size_t>(c.basis_pos[j])] = v;
  return out;
}

Vec TruncatedAlgebra::reduce(const FreePathElement& e) const {
  std::map<std::pair<int, int>, FreePathElement> parts;
  for (const auto& [p, q] : e.terms()) {
    if (static_cast<int>(p.length()) > n_) throw std::invalid_argument("word longer than truncation: " + p.word);
    parts[{static_cast<int>(p.length()), idx(p.source())}].add(p, q);
  }
  Vec out(total_);
  for (const auto& [key, part] : parts) {
    Vertex s = static_cast<Vertex>(key.second);
    Vec v = reduce_component(part, s, key.first);
    std::size_t off = offset(s, key.first);
    for (std::size_t i = 0; i < v.size(); ++i) out[off + i] = v[i];
  }
  return out;
}

FreePathElement TruncatedAlgebra::lift(Vertex s, int len, const Vec& coords) const {
  const auto& b = basis(s, len);
  if (coords.size() != b.size()) throw std::invalid_argument("lift: coordinate length mismatch");
  FreePathElement e;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (sgn(coords[i]) == 0) continue;
    e.add(len == 0 ? idempotent(s) : make_path(b[i]), coords[i]);
  }
  return e;
}

Vec TruncatedAlgebra::multiply(const Vec& a, const Vec& b) const {
  if (a.size() != total_ || b.size() != total_) throw std::invalid_argument("multiply: coordinate length mismatch");
  auto to_element = [&](const Vec& v) {
    FreePathElement e;
    for (int len = 0; len <= n_; ++len)
      for (Vertex s : kVertices) {
        std::size_t off = offset(s, len);
        Vec part(v.begin() + static_cast<long>(off), v.begin() + static_cast<long>(off + dim(s, len)));
        e = e + lift(s, len, part);
      }
    return e;
  };
  FreePathElement prod = to_element(a) * to_element(b);
  FreePathElement kept;
  for (const auto& [p, q] : prod.terms())
    if (static_cast<int>(p.length()) <= n_) kept.add(p, q);
  return reduce(kept);
}

}  // namespace flop
