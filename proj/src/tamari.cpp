#include <algorithm>
#include <cctype>
#include <map>

#include "family_detail.hpp"
#include "posetforge/errors.hpp"
#include "posetforge/families.hpp"

namespace posetforge {

namespace {

std::size_t subtree_end(const std::vector<bool>& code, std::size_t i) {
  std::size_t need = 1;
  while (need > 0) need += code[i++] ? 1 : -1;
  return i;
}

std::uint64_t catalan(int n) {
  if (n > 33) return ~0ULL;
  return detail::binomial(2 * n, n) / (n + 1);
}

// '(' = -1, ')' = -2, leaf = its index starting at 1.
std::vector<int> tokens(const Paren& p) {
  std::vector<int> out;
  int leaf = 0;
  std::vector<int> open;  // children still to emit under each open bracket
  for (bool internal : p.code) {
    if (internal) {
      out.push_back(-1);
      open.push_back(2);
      continue;
    }
    out.push_back(++leaf);
    while (!open.empty() && --open.back() == 0) {
      open.pop_back();
      out.push_back(-2);
    }
  }
  return out;
}

}  // namespace

int Paren::size() const { return static_cast<int>(std::count(code.begin(), code.end(), true)); }

std::string Paren::to_string() const {
  std::string s;
  for (int t : tokens(*this)) {
    if (t == -1) s += '(';
    else if (t == -2) s += ')';
    else s += "x" + std::to_string(t);
  }
  return s;
}

Paren Paren::parse(const std::string& s) {
  Paren p;
  std::size_t pos = 0;
  int next_leaf = 1;
  auto fail = [&](const std::string& why) {
    throw FormatError("bad bracketing '" + s + "' at position " + std::to_string(pos) + ": " + why);
  };
  auto term = [&](auto&& self) -> void {
    if (pos >= s.size()) fail("unexpected end");
    if (s[pos] == '(') {
      ++pos;
      p.code.push_back(true);
      self(self);
      self(self);
      if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
      ++pos;
    } else if (s[pos] == 'x') {
      ++pos;
      const std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) fail("expected a leaf index");
      if (std::stoi(s.substr(start, pos - start)) != next_leaf++) fail("leaves out of order");
      p.code.push_back(false);
    } else {
      fail("unexpected character");
    }
  };
  term(term);
  if (pos != s.size()) fail("trailing input");
  return p;
}

std::vector<Paren> all_parens(int n) {
  std::vector<std::vector<std::vector<bool>>> memo(n + 1);
  memo[0] = {{false}};
  for (int k = 1; k <= n; ++k)
    for (int i = 0; i < k; ++i)
      for (const auto& l : memo[i])
        for (const auto& r : memo[k - 1 - i]) {
          std::vector<bool> c{true};
          c.insert(c.end(), l.begin(), l.end());
          c.insert(c.end(), r.begin(), r.end());
          memo[k].push_back(std::move(c));
        }
  std::vector<Paren> out;
  for (auto& c : memo[n]) out.push_back(Paren{std::move(c)});
  return out;
}

std::vector<Paren> rotations(const Paren& p) {
  std::vector<Paren> out;
  const auto& c = p.code;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (!c[i] || !c[i + 1]) continue;
    // c[i] = ((A B) C) with the inner node at i + 1.
    const std::size_t a0 = i + 2, a1 = subtree_end(c, a0), b1 = subtree_end(c, a1),
                      c1 = subtree_end(c, b1);
    std::vector<bool> next(c.begin(), c.begin() + i + 1);
    next.insert(next.end(), c.begin() + a0, c.begin() + a1);
    next.push_back(true);
    next.insert(next.end(), c.begin() + a1, c.begin() + c1);
    next.insert(next.end(), c.begin() + c1, c.end());
    out.push_back(Paren{std::move(next)});
  }
  return out;
}

bool is_lb_vector(const LBVector& v) {
  const int n = static_cast<int>(v.size());
  for (int i = 1; i <= n; ++i)
    if (v[i - 1] < 1 || v[i - 1] > i) return false;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const int lo_i = v[i - 1], lo_j = v[j - 1];
      const bool disjoint = i < lo_j;
      const bool nested = lo_j <= lo_i;  // [lo_i, i] inside [lo_j, j]
      if (!disjoint && !nested) return false;
    }
  return true;
}

LBVector left_bracket_vector(const Paren& p) {
  const auto tok = tokens(p);
  const int n = p.size();
  LBVector v(n);
  for (int i = 1; i <= n; ++i) {
    auto pos = std::find(tok.begin(), tok.end(), i) - tok.begin();
    int xs = 0, opens = 0, last = i;
    for (auto k = pos; k >= 0; --k) {
      if (tok[k] > 0) {
        ++xs;
        last = tok[k];
      } else if (tok[k] == -1) {
        ++opens;
      }
      if (xs == opens) break;
    }
    v[i - 1] = last;
  }
  return v;
}

std::string lb_label(const LBVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

Poset tamari(int n) {
  if (n < 1) throw InvalidIndexError("n must be at least 1");
  detail::check_family_size("tamari(" + std::to_string(n) + ")", catalan(n), catalan(9));
  const auto parens = all_parens(n);
  std::map<std::vector<bool>, int> index;
  std::vector<std::string> labels;
  for (const auto& p : parens) {
    index[p.code] = static_cast<int>(labels.size());
    labels.push_back(p.to_string());
  }
  std::vector<Cover> covers;
  for (const auto& p : parens)
    for (const auto& q : rotations(p)) covers.emplace_back(index.at(p.code), index.at(q.code));
  return Poset::from_covers(std::move(labels), covers);
}

Poset tamari_vectors(int n) {
  if (n < 1) throw InvalidIndexError("n must be at least 1");
  detail::check_family_size("tamari-vec(" + std::to_string(n) + ")", catalan(n), catalan(9));
  std::vector<LBVector> all;
  LBVector v(n, 1);
  while (true) {
    if (is_lb_vector(v)) all.push_back(v);
    int i = n;
    while (i > 0 && v[i - 1] == i) v[--i] = 1;
    if (i == 0) break;
    ++v[i - 1];
  }
  std::vector<std::string> labels;
  for (const auto& w : all) labels.push_back(lb_label(w));
  return Poset::from_order(std::move(labels), [&](int a, int b) {
    for (int i = 0; i < n; ++i)
      if (all[a][i] > all[b][i]) return false;
    return true;
  });
}

int tamari_mobius_formula(const LBVector& v) {
  std::map<int, int> k;
  for (int x : v)
    if (x >= 2) ++k[x];
  int total = 0;
  for (auto [value, count] : k) {
    if (count > 1) return 0;
    total += count;
  }
  return total % 2 ? -1 : 1;
}

std::uint64_t fuss_catalan(int m, int n) {
  const std::uint64_t c = detail::binomial((m + 1) * n, n);
  if (c == ~0ULL) return c;
  return c / (static_cast<std::uint64_t>(m) * n + 1);
}

std::vector<std::string> ballot_paths(int m, int n) {
  std::vector<std::string> out;
  std::string path;
  auto rec = [&](auto&& self, int north, int east) -> void {
    if (north == n && east == m * n) {
      out.push_back(path);
      return;
    }
    if (north < n) {
      path.push_back('N');
      self(self, north + 1, east);
      path.pop_back();
    }
    if (east < m * north) {
      path.push_back('E');
      self(self, north, east + 1);
      path.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

Poset m_tamari(int m, int n) {
  if (m < 1 || n < 1) throw InvalidIndexError("m and n must be at least 1");
  detail::check_family_size("m-tamari(" + std::to_string(m) + "," + std::to_string(n) + ")",
                            fuss_catalan(m, n), 5000);
  auto paths = ballot_paths(m, n);
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < paths.size(); ++i) index[paths[i]] = static_cast<int>(i);
  std::vector<Cover> covers;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto& p = paths[i];
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
      if (p[k] != 'E' || p[k + 1] != 'N') continue;
      int diff = 0;
      std::size_t j = k + 1;
      for (; j < p.size(); ++j) {
        diff += p[j] == 'N' ? m : -1;
        if (diff == 0) break;
      }
      std::string q = p.substr(0, k) + p.substr(k + 1, j - k) + "E" + p.substr(j + 1);
      covers.emplace_back(static_cast<int>(i), index.at(q));
    }
  }
  return Poset::from_covers(std::move(paths), covers);
}

}  // namespace posetforge
