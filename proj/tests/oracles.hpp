#pragma once

// Naive reference implementations used to cross-check the library.  Nothing
// here calls into schurring except for plain data (index conventions).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

// GF(p^e) as F_p[x] / (x^e + c_{e-1} x^{e-1} + ... + c_0), elements as digit
// vectors packed into base-p integers (digit i = coefficient of x^i).
struct PolyField {
  int p = 2;
  int e = 1;
  std::vector<int> modulus;  // c_0..c_{e-1}
  std::uint32_t q = 2;

  PolyField(int p_, int e_, std::vector<int> modulus_) : p(p_), e(e_), modulus(std::move(modulus_)) {
    q = 1;
    for (int i = 0; i < e; ++i) q *= static_cast<std::uint32_t>(p);
  }

  std::vector<int> digits(std::uint32_t a) const {
    std::vector<int> d(static_cast<std::size_t>(e));
    for (int i = 0; i < e; ++i) {
      d[i] = static_cast<int>(a % p);
      a /= p;
    }
    return d;
  }
  std::uint32_t pack(const std::vector<int>& d) const {
    std::uint32_t a = 0;
    for (int i = e - 1; i >= 0; --i) a = a * p + static_cast<std::uint32_t>(((d[i] % p) + p) % p);
    return a;
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    auto x = digits(a), y = digits(b);
    for (int i = 0; i < e; ++i) x[i] = (x[i] + y[i]) % p;
    return pack(x);
  }
  std::uint32_t neg(std::uint32_t a) const {
    auto x = digits(a);
    for (auto& c : x) c = (p - c) % p;
    return pack(x);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    auto x = digits(a), y = digits(b);
    std::vector<long> prod(static_cast<std::size_t>(2 * e), 0);
    for (int i = 0; i < e; ++i)
      for (int j = 0; j < e; ++j) prod[i + j] += static_cast<long>(x[i]) * y[j];
    for (int d = 2 * e - 1; d >= e; --d) {
      const long t = prod[d] % p;
      prod[d] = 0;
      for (int i = 0; i < e; ++i) prod[d - e + i] -= t * modulus[i];
    }
    std::vector<int> r(static_cast<std::size_t>(e));
    for (int i = 0; i < e; ++i) r[i] = static_cast<int>(((prod[i] % p) + p) % p);
    return pack(r);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const {
    std::uint32_t r = 1;
    while (k--) r = mul(r, a);
    return r;
  }
  std::uint32_t inv(std::uint32_t a) const {
    for (std::uint32_t b = 1; b < q; ++b)
      if (mul(a, b) == 1) return b;
    return 0;
  }
  std::uint64_t order(std::uint32_t a) const {
    std::uint32_t r = a;
    for (std::uint64_t k = 1; k <= q; ++k) {
      if (r == 1) return k;
      r = mul(r, a);
    }
    return 0;
  }
};

// First primitive monic modulus in (c_0, ..., c_{e-1}) lexicographic order with
// c_0 most significant, plus the index of the generator.
inline std::pair<std::vector<int>, std::uint32_t> first_primitive(int p, int e) {
  if (e == 1) {
    for (int g = 1; g < p; ++g) {
      PolyField f(p, 1, {(p - g) % p});
      if (f.order(static_cast<std::uint32_t>(g)) == static_cast<std::uint64_t>(p - 1)) return {{(p - g) % p}, g};
    }
    return {{}, 0};
  }
  // Enumerate lexicographically by nested digits.
  std::vector<int> c(static_cast<std::size_t>(e), 0);
  while (true) {
    PolyField f(p, e, c);
    if (c[0] != 0 && f.order(static_cast<std::uint32_t>(p)) == f.q - 1) return {c, static_cast<std::uint32_t>(p)};
    int i = e - 1;
    while (i >= 0 && ++c[i] == p) c[i--] = 0;
    if (i < 0) return {{}, 0};
  }
}

// ---- plane ---------------------------------------------------------------

inline constexpr std::uint32_t kInf = 0xFFFFFFFFu;

// Points indexed x + q y.
struct NaivePlane {
  PolyField f;
  std::uint32_t x(std::uint32_t pt) const { return pt % f.q; }
  std::uint32_t y(std::uint32_t pt) const { return pt / f.q; }
  std::uint32_t at(std::uint32_t x, std::uint32_t y) const { return x + f.q * y; }
  std::uint32_t size() const { return f.q * f.q; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return at(f.add(x(a), x(b)), f.add(y(a), y(b))); }
  std::uint32_t neg(std::uint32_t a) const { return at(f.neg(x(a)), f.neg(y(a))); }
  // Slope y / x, or kInf when x = 0.  Undefined at the origin.
  std::uint32_t slope(std::uint32_t pt) const {
    if (x(pt) == 0) return kInf;
    return f.mul(y(pt), f.inv(x(pt)));
  }
  std::vector<std::uint32_t> line(std::uint32_t s) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t t = 0; t < f.q; ++t) out.push_back(s == kInf ? at(0, t) : at(t, f.mul(s, t)));
    return out;
  }
};

// ---- set partitions ------------------------------------------------------

inline std::uint64_t stirling_bell(unsigned n) {
  std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  s[0][0] = 1;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned k = 1; k <= i; ++k) s[i][k] = k * s[i - 1][k] + s[i - 1][k - 1];
  return std::accumulate(s[n].begin(), s[n].end(), std::uint64_t{0});
}

// All set partitions of {0..n-1}, each block sorted, blocks in order of least element.
inline std::vector<std::vector<std::vector<std::uint32_t>>> set_partitions(std::uint32_t n) {
  std::vector<std::vector<std::vector<std::uint32_t>>> out;
  std::vector<std::vector<std::uint32_t>> cur;
  std::function<void(std::uint32_t)> go = [&](std::uint32_t k) {
    if (k == n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t b = 0; b < cur.size(); ++b) {
      cur[b].push_back(k);
      go(k + 1);
      cur[b].pop_back();
    }
    cur.push_back({k});
    go(k + 1);
    cur.pop_back();
  };
  go(0);
  return out;
}

// ---- subfields and the singleton condition ------------------------------

inline bool closed_subfield(const PolyField& f, const std::set<std::uint32_t>& s) {
  if (!s.count(0) || !s.count(1)) return false;
  for (auto a : s)
    for (auto b : s)
      if (!s.count(f.add(a, b)) || !s.count(f.mul(a, b))) return false;
  return true;
}

// Slopes given as dense codes 0..q-1 finite, q = infinity.
inline bool naive_condition(const PolyField& f, const std::vector<std::vector<std::uint32_t>>& classes) {
  std::set<std::uint32_t> m;
  for (const auto& c : classes)
    if (c.size() == 1) m.insert(c[0]);
  if (!m.count(f.q) || !m.count(0) || !m.count(1)) return false;
  m.erase(f.q);
  return !closed_subfield(f, m);
}

// ---- group ring ----------------------------------------------------------

// Blocks {0}, then one per class: union of punctured lines.
inline std::vector<std::vector<std::uint32_t>> naive_blocks(const NaivePlane& v,
                                                            const std::vector<std::vector<std::uint32_t>>& classes) {
  std::vector<std::vector<std::uint32_t>> blocks{{0}};
  for (const auto& cls : classes) {
    std::vector<std::uint32_t> b;
    for (std::uint32_t pt = 1; pt < v.size(); ++pt) {
      const std::uint32_t s = v.slope(pt);
      const std::uint32_t dense = s == kInf ? v.f.q : s;
      if (std::find(cls.begin(), cls.end(), dense) != cls.end()) b.push_back(pt);
    }
    blocks.push_back(b);
  }
  return blocks;
}

// Coefficients of (sum A)(sum B) at every point.
inline std::vector<std::int64_t> naive_product(const NaivePlane& v, const std::vector<std::uint32_t>& a,
                                               const std::vector<std::uint32_t>& b) {
  std::vector<std::int64_t> c(v.size(), 0);
  for (auto g : a)
    for (auto h : b) ++c[v.add(g, h)];
  return c;
}

// c[i][j][k] read from a representative of each block; nullopt if some
// product is not constant on a block.
inline std::optional<std::vector<std::int64_t>> naive_structure_constants(
    const NaivePlane& v, const std::vector<std::vector<std::uint32_t>>& blocks) {
  const std::size_t r = blocks.size();
  std::vector<std::int64_t> t(r * r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const auto prod = naive_product(v, blocks[i], blocks[j]);
      for (std::size_t k = 0; k < r; ++k) {
        for (auto g : blocks[k])
          if (prod[g] != prod[blocks[k][0]]) return std::nullopt;
        t[(i * r + j) * r + k] = prod[blocks[k][0]];
      }
    }
  return t;
}

// ---- automorphisms by plain backtracking --------------------------------

struct NaiveGraph {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> color;  // n * n
  std::uint32_t at(std::uint32_t u, std::uint32_t w) const { return color[u * n + w]; }
};

inline NaiveGraph naive_scheme(const NaivePlane& v, const std::vector<std::vector<std::uint32_t>>& blocks) {
  NaiveGraph g;
  g.n = v.size();
  std::vector<std::uint32_t> cls(g.n);
  for (std::uint32_t b = 0; b < blocks.size(); ++b)
    for (auto pt : blocks[b]) cls[pt] = b;
  g.color.resize(static_cast<std::size_t>(g.n) * g.n);
  for (std::uint32_t a = 0; a < g.n; ++a)
    for (std::uint32_t b = 0; b < g.n; ++b) g.color[a * g.n + b] = cls[v.add(b, v.neg(a))];
  return g;
}

// Extends a partial map (image[u] or kInf) vertex by vertex in index order.
// Calls `leaf` on every complete automorphism; stops when it returns false.
inline bool extend(const NaiveGraph& g, std::vector<std::uint32_t>& image, std::vector<char>& used, std::uint32_t u,
                   const std::function<bool(const std::vector<std::uint32_t>&)>& leaf) {
  if (u == g.n) return leaf(image);
  if (image[u] != kInf) {
    for (std::uint32_t w = 0; w < u; ++w)
      if (g.at(u, w) != g.at(image[u], image[w])) return true;
    return extend(g, image, used, u + 1, leaf);
  }
  for (std::uint32_t c = 0; c < g.n; ++c) {
    if (used[c]) continue;
    bool ok = g.at(u, u) == g.at(c, c);
    for (std::uint32_t w = 0; ok && w < u; ++w) ok = g.at(u, w) == g.at(c, image[w]);
    if (!ok) continue;
    image[u] = c;
    used[c] = 1;
    const bool go_on = extend(g, image, used, u + 1, leaf);
    image[u] = kInf;
    used[c] = 0;
    if (!go_on) return false;
  }
  return true;
}

inline std::uint64_t count_automorphisms(const NaiveGraph& g) {
  std::vector<std::uint32_t> image(g.n, kInf);
  std::vector<char> used(g.n, 0);
  std::uint64_t count = 0;
  extend(g, image, used, 0, [&](const std::vector<std::uint32_t>&) {
    ++count;
    return true;
  });
  return count;
}

// Whether some automorphism maps every key of `fixed` to its value.
inline bool exists_automorphism(const NaiveGraph& g, const std::map<std::uint32_t, std::uint32_t>& fixed) {
  std::vector<std::uint32_t> image(g.n, kInf);
  std::vector<char> used(g.n, 0);
  for (auto [a, b] : fixed) {
    if (used[b]) return false;
    image[a] = b;
    used[b] = 1;
  }
  bool found = false;
  extend(g, image, used, 0, [&](const std::vector<std::uint32_t>&) {
    found = true;
    return false;
  });
  return found;
}

// Orbit sizes of the stabilizer of vertex 0, ascending.
inline std::vector<std::size_t> stabilizer_orbit_sizes(const NaiveGraph& g) {
  std::vector<std::uint32_t> rep(g.n);
  std::iota(rep.begin(), rep.end(), 0u);
  std::vector<std::size_t> sizes;
  std::vector<char> done(g.n, 0);
  for (std::uint32_t a = 0; a < g.n; ++a) {
    if (done[a]) continue;
    std::size_t size = 0;
    for (std::uint32_t b = a; b < g.n; ++b) {
      if (done[b]) continue;
      if (b == a || (a != 0 && b != 0 && g.at(0, a) == g.at(0, b) && exists_automorphism(g, {{0, 0}, {a, b}}))) {
        done[b] = 1;
        ++size;
      }
    }
    sizes.push_back(size);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// ---- linear algebra over F_p ---------------------------------------------

inline int rank_mod_p(std::vector<std::vector<int>> m, int p) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] % p) piv = r;
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    int inv = 1;
    while ((m[rank][c] * inv) % p != 1) ++inv;
    for (auto& x : m[rank]) x = (x * inv) % p;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const int t = m[r][c];
      for (int k = 0; k < cols; ++k) m[r][k] = ((m[r][k] - t * m[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

inline std::uint64_t gl_order(int n, int p) {
  std::uint64_t pn = 1;
  for (int i = 0; i < n; ++i) pn *= static_cast<std::uint64_t>(p);
  std::uint64_t order = 1, pi = 1;
  for (int i = 0; i < n; ++i) {
    order *= pn - pi;
    pi *= static_cast<std::uint64_t>(p);
  }
  return order;
}

inline std::uint64_t factorial(unsigned n) {
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace oracle
