// Test-only brute-force cohomology. Shares no code with the library: the
// module is given by its own addition and action tables, cochains are
// packed base-|M| integers, and Z^n is enumerated by a constraint search
// over the cocycle equations.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_set>
#include <vector>

namespace oracle {

using Table = std::vector<std::vector<int>>;

struct FiniteModule {
  int order = 1;
  Table add;                  // add[x][y]
  std::vector<int> neg;
  Table act;                  // act[g][x]
  std::vector<int> generators;
};

inline Table cyclic_table(int n) {
  Table t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

inline Table klein_table() {
  Table t(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
  return t;
}

/// Elements of Z/d_1 + ... as mixed-radix digits, first digit fastest.
inline std::vector<std::vector<long>> digits_of(const std::vector<long>& factors) {
  long n = 1;
  for (long d : factors) n *= d;
  std::vector<std::vector<long>> out(static_cast<std::size_t>(n));
  for (long x = 0; x < n; ++x) {
    long t = x;
    for (long d : factors) {
      out[static_cast<std::size_t>(x)].push_back(t % d);
      t /= d;
    }
  }
  return out;
}

inline long index_of(const std::vector<long>& factors, const std::vector<long>& digits) {
  long idx = 0, stride = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    long d = factors[i];
    idx += (((digits[i] % d) + d) % d) * stride;
    stride *= d;
  }
  return idx;
}

/// Builds the module from integer action matrices (row-major, column j is
/// the image of generator j), evaluated elementwise.
inline FiniteModule make_module(const std::vector<long>& factors, const std::vector<std::vector<long>>& mats) {
  FiniteModule m;
  auto el = digits_of(factors);
  m.order = static_cast<int>(el.size());
  const std::size_t r = factors.size();
  m.add.assign(m.order, std::vector<int>(m.order));
  m.neg.assign(m.order, 0);
  for (int x = 0; x < m.order; ++x) {
    std::vector<long> nd(r);
    for (std::size_t i = 0; i < r; ++i) nd[i] = -el[x][i];
    m.neg[x] = static_cast<int>(index_of(factors, nd));
    for (int y = 0; y < m.order; ++y) {
      std::vector<long> s(r);
      for (std::size_t i = 0; i < r; ++i) s[i] = el[x][i] + el[y][i];
      m.add[x][y] = static_cast<int>(index_of(factors, s));
    }
  }
  for (const auto& mat : mats) {
    std::vector<int> tab(m.order);
    for (int x = 0; x < m.order; ++x) {
      std::vector<long> img(r, 0);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) img[i] += mat[i * r + j] * el[x][j];
      tab[x] = static_cast<int>(index_of(factors, img));
    }
    m.act.push_back(tab);
  }
  long stride = 1;
  for (long d : factors) {
    m.generators.push_back(static_cast<int>(stride));
    stride *= d;
  }
  return m;
}

/// All automorphisms of Z/d_1 + ... given as integer matrices.
inline std::vector<std::vector<long>> automorphism_matrices(const std::vector<long>& factors) {
  const std::size_t r = factors.size();
  std::vector<std::vector<long>> out;
  std::size_t count = 1;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) count *= static_cast<std::size_t>(factors[i]);
  auto el = digits_of(factors);
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<long> mat(r * r);
    std::size_t t = code;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        mat[i * r + j] = static_cast<long>(t % static_cast<std::size_t>(factors[i]));
        t /= static_cast<std::size_t>(factors[i]);
      }
    // well defined: d_j times column j vanishes
    bool ok = true;
    for (std::size_t j = 0; j < r && ok; ++j)
      for (std::size_t i = 0; i < r && ok; ++i) ok = (mat[i * r + j] * factors[j]) % factors[i] == 0;
    if (!ok) continue;
    // bijective on elements
    std::vector<char> hit(el.size(), 0);
    for (const auto& x : el) {
      std::vector<long> img(r, 0);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) img[i] += mat[i * r + j] * x[j];
      long idx = index_of(factors, img);
      if (hit[static_cast<std::size_t>(idx)]) {
        ok = false;
        break;
      }
      hit[static_cast<std::size_t>(idx)] = 1;
    }
    if (ok) out.push_back(mat);
  }
  return out;
}

/// Every homomorphism G -> Aut(M), as one matrix per group element.
inline std::vector<std::vector<std::vector<long>>> all_actions(const Table& g, const std::vector<long>& factors) {
  auto auts = automorphism_matrices(factors);
  const int n = static_cast<int>(g.size());
  const std::size_t r = factors.size();
  auto el = digits_of(factors);
  // permutation tables for composition checks
  std::vector<std::vector<long>> perm;
  for (const auto& mat : auts) {
    std::vector<long> p(el.size());
    for (std::size_t x = 0; x < el.size(); ++x) {
      std::vector<long> img(r, 0);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) img[i] += mat[i * r + j] * el[x][j];
      p[x] = index_of(factors, img);
    }
    perm.push_back(p);
  }
  std::vector<std::vector<std::vector<long>>> out;
  std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= auts.size();
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t t = code;
    for (int i = 0; i < n; ++i) {
      choice[static_cast<std::size_t>(i)] = t % auts.size();
      t /= auts.size();
    }
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        for (std::size_t x = 0; x < el.size() && ok; ++x)
          ok = perm[choice[a]][static_cast<std::size_t>(perm[choice[b]][x])] ==
               perm[choice[static_cast<std::size_t>(g[a][b])]][x];
    if (!ok) continue;
    // identity must act trivially
    for (std::size_t x = 0; x < el.size() && ok; ++x) ok = perm[choice[0]][x] == static_cast<long>(x);
    if (!ok) continue;
    std::vector<std::vector<long>> mats;
    for (int i = 0; i < n; ++i) mats.push_back(auts[choice[static_cast<std::size_t>(i)]]);
    out.push_back(mats);
  }
  return out;
}

class Engine {
 public:
  Engine(const Table& g, const FiniteModule& m) : g_(g), m_(m), n_(static_cast<int>(g.size())) {}

  /// Invariant factors of H^k, ascending, trivial factors omitted.
  std::vector<long> invariant_factors(int k) {
    auto z = cocycles(k);
    auto b = coboundaries(k);
    std::unordered_set<std::uint64_t> bset(b.begin(), b.end());
    const std::uint64_t h = z.size() / b.size();
    if (h * b.size() != z.size()) return {-1};
    // p-primary parts from |H[p^j]|
    std::map<long, std::vector<int>> exps;
    std::uint64_t rest = h;
    for (long p = 2; rest > 1; ++p) {
      if (rest % static_cast<std::uint64_t>(p) != 0) continue;
      while (rest % static_cast<std::uint64_t>(p) == 0) rest /= static_cast<std::uint64_t>(p);
      std::vector<std::uint64_t> counts{1};
      for (long pk = p;; pk *= p) {
        std::uint64_t c = 0;
        for (auto code : z)
          if (bset.count(scale(code, pk, k))) ++c;
        c /= b.size();
        if (c == counts.back()) break;
        counts.push_back(c);
      }
      // number of cyclic factors of order >= p^j is log_p(counts[j]/counts[j-1])
      std::vector<int> ge;
      for (std::size_t j = 1; j < counts.size(); ++j) {
        std::uint64_t ratio = counts[j] / counts[j - 1];
        int e = 0;
        while (ratio > 1) {
          ratio /= static_cast<std::uint64_t>(p);
          ++e;
        }
        ge.push_back(e);
      }
      // factor i (largest first) has exponent #{j : ge[j] > i}
      int num = ge.empty() ? 0 : ge[0];
      std::vector<int> e(static_cast<std::size_t>(num), 0);
      for (int i = 0; i < num; ++i)
        for (int x : ge)
          if (x > i) ++e[static_cast<std::size_t>(i)];
      exps[p] = e;
    }
    std::size_t len = 0;
    for (auto& [p, e] : exps) len = std::max(len, e.size());
    std::vector<long> out(len, 1);
    for (auto& [p, e] : exps)
      for (std::size_t i = 0; i < e.size(); ++i) {
        long v = 1;
        for (int j = 0; j < e[i]; ++j) v *= p;
        out[len - 1 - i] *= v;
      }
    return out;
  }

  std::uint64_t count_cocycles(int k) { return cocycles(k).size(); }

 private:
  int positions(int k) const {
    int p = 1;
    for (int i = 0; i < k; ++i) p *= (n_ - 1);
    return p;
  }
  int digit(std::uint64_t code, int pos) const {
    for (int i = 0; i < pos; ++i) code /= static_cast<std::uint64_t>(m_.order);
    return static_cast<int>(code % static_cast<std::uint64_t>(m_.order));
  }
  std::uint64_t pack(const std::vector<int>& v) const {
    std::uint64_t code = 0;
    for (std::size_t i = v.size(); i-- > 0;) code = code * static_cast<std::uint64_t>(m_.order) + static_cast<std::uint64_t>(v[i]);
    return code;
  }
  std::vector<int> unpack(std::uint64_t code, int k) const {
    std::vector<int> v(static_cast<std::size_t>(positions(k)));
    for (auto& x : v) {
      x = static_cast<int>(code % static_cast<std::uint64_t>(m_.order));
      code /= static_cast<std::uint64_t>(m_.order);
    }
    return v;
  }
  std::uint64_t scale(std::uint64_t code, long factor, int k) const {
    auto v = unpack(code, k);
    for (auto& x : v) {
      int acc = 0;
      for (long i = 0; i < factor; ++i) acc = m_.add[acc][x];
      x = acc;
    }
    return pack(v);
  }
  // position of a tuple of non-identity elements; -1 if it has an identity
  int pos_of(const std::vector<int>& t) const {
    int p = 0;
    for (int x : t) {
      if (x == 0) return -1;
      p = p * (n_ - 1) + (x - 1);
    }
    return p;
  }
  std::vector<int> tuple_of(int p, int len) const {
    std::vector<int> t(static_cast<std::size_t>(len));
    for (int i = len - 1; i >= 0; --i) {
      t[static_cast<std::size_t>(i)] = p % (n_ - 1) + 1;
      p /= (n_ - 1);
    }
    return t;
  }

  struct Term {
    int pos;
    const std::vector<int>* map;  // endomorphism applied to the value
  };

  // Terms of (dc)(t) for a (k+1)-tuple t, dropping normalized zeros.
  std::vector<Term> terms(const std::vector<int>& t, int k) {
    std::vector<Term> out;
    std::vector<int> sub(t.begin() + 1, t.end());
    if (int p = pos_of(sub); p >= 0) out.push_back({p, &m_.act[static_cast<std::size_t>(t[0])]});
    for (int i = 1; i <= k; ++i) {
      sub.clear();
      for (int j = 0; j <= k; ++j) {
        if (j == i) continue;
        sub.push_back(j == i - 1 ? g_[t[j]][t[j + 1]] : t[j]);
      }
      if (int p = pos_of(sub); p >= 0) out.push_back({p, i % 2 ? &neg_map() : &id_map()});
    }
    sub.assign(t.begin(), t.end() - 1);
    if (int p = pos_of(sub); p >= 0) out.push_back({p, (k + 1) % 2 ? &neg_map() : &id_map()});
    return out;
  }

  const std::vector<int>& id_map() {
    if (id_.empty())
      for (int x = 0; x < m_.order; ++x) id_.push_back(x);
    return id_;
  }
  const std::vector<int>& neg_map() { return m_.neg; }

  std::vector<std::vector<Term>> equations(int k) {
    std::vector<std::vector<Term>> eqs;
    for (int p = 0; p < positions(k + 1); ++p) eqs.push_back(terms(tuple_of(p, k + 1), k));
    return eqs;
  }

  std::uint64_t coboundary_code(const std::vector<int>& c, int k) {
    // c has degree k-1; returns the packed degree-k cochain
    std::vector<int> out(static_cast<std::size_t>(positions(k)));
    for (int p = 0; p < positions(k); ++p) {
      int acc = 0;
      for (const auto& term : terms(tuple_of(p, k), k - 1)) acc = m_.add[acc][(*term.map)[c[term.pos]]];
      out[static_cast<std::size_t>(p)] = acc;
    }
    return pack(out);
  }

  std::vector<std::uint64_t> coboundaries(int k) {
    // closure of the images of single-position generator cochains
    const int src = positions(k - 1);
    std::vector<std::uint64_t> gens;
    for (int p = 0; p < src; ++p)
      for (int gen : m_.generators) {
        std::vector<int> c(static_cast<std::size_t>(src), 0);
        c[static_cast<std::size_t>(p)] = gen;
        gens.push_back(coboundary_code(c, k));
      }
    std::unordered_set<std::uint64_t> seen{0};
    std::vector<std::uint64_t> list{0};
    for (std::size_t i = 0; i < list.size(); ++i) {
      auto v = unpack(list[i], k);
      for (auto gcode : gens) {
        auto w = unpack(gcode, k);
        for (std::size_t j = 0; j < v.size(); ++j) w[j] = m_.add[v[j]][w[j]];
        auto code = pack(w);
        if (seen.insert(code).second) list.push_back(code);
      }
    }
    return list;
  }

  std::vector<std::uint64_t> cocycles(int k) {
    const int npos = positions(k);
    auto eqs = equations(k);
    std::vector<std::uint64_t> out;
    double space = 1;
    for (int i = 0; i < npos; ++i) space *= m_.order;
    if (space <= 65536.0) {
      // plain enumeration
      const auto total = static_cast<std::uint64_t>(space);
      for (std::uint64_t code = 0; code < total; ++code) {
        auto c = unpack(code, k);
        bool ok = true;
        for (const auto& eq : eqs) {
          int acc = 0;
          for (const auto& t : eq) acc = m_.add[acc][(*t.map)[c[t.pos]]];
          if (acc != 0) {
            ok = false;
            break;
          }
        }
        if (ok) out.push_back(code);
      }
      return out;
    }
    // constraint search: an equation is checked when its last unknown is set
    std::vector<std::vector<int>> eqs_of(static_cast<std::size_t>(npos));
    std::vector<int> open(eqs.size(), 0);
    for (std::size_t e = 0; e < eqs.size(); ++e) {
      std::vector<int> ps;
      for (const auto& t : eqs[e]) ps.push_back(t.pos);
      std::sort(ps.begin(), ps.end());
      ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
      open[e] = static_cast<int>(ps.size());
      for (int p : ps) eqs_of[static_cast<std::size_t>(p)].push_back(static_cast<int>(e));
    }
    std::vector<int> val(static_cast<std::size_t>(npos), -1);
    search(eqs, eqs_of, open, val, npos, out);
    return out;
  }

  void search(const std::vector<std::vector<Term>>& eqs, const std::vector<std::vector<int>>& eqs_of,
              std::vector<int>& open, std::vector<int>& val, int remaining, std::vector<std::uint64_t>& out) {
    if (remaining == 0) {
      out.push_back(pack(val));
      return;
    }
    // prefer a variable that closes some equation
    int var = -1;
    for (std::size_t e = 0; e < eqs.size() && var < 0; ++e)
      if (open[e] == 1)
        for (const auto& t : eqs[e])
          if (val[static_cast<std::size_t>(t.pos)] < 0) {
            var = t.pos;
            break;
          }
    if (var < 0)
      for (std::size_t p = 0; p < val.size(); ++p)
        if (val[p] < 0) {
          var = static_cast<int>(p);
          break;
        }
    const auto& mine = eqs_of[static_cast<std::size_t>(var)];
    for (int x = 0; x < m_.order; ++x) {
      val[static_cast<std::size_t>(var)] = x;
      bool ok = true;
      for (int e : mine) {
        if (open[static_cast<std::size_t>(e)] != 1) continue;
        int acc = 0;
        for (const auto& t : eqs[static_cast<std::size_t>(e)]) acc = m_.add[acc][(*t.map)[val[static_cast<std::size_t>(t.pos)]]];
        if (acc != 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      for (int e : mine) --open[static_cast<std::size_t>(e)];
      search(eqs, eqs_of, open, val, remaining - 1, out);
      for (int e : mine) ++open[static_cast<std::size_t>(e)];
    }
    val[static_cast<std::size_t>(var)] = -1;
  }

  Table g_;
  FiniteModule m_;
  int n_;
  std::vector<int> id_;
};

}  // namespace oracle
