#include <algorithm>
#include <map>
#include <tuple>

#include "posetforge/errors.hpp"
#include "posetforge/poset.hpp"

namespace posetforge {

namespace {

std::vector<int> height_to_top(const Poset& p) {
  std::vector<int> h(p.size(), 0);
  const auto& order = p.linear_extension();
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (int y : p.upper_covers(*it)) h[*it] = std::max(h[*it], h[y] + 1);
  return h;
}

// Colour refinement run jointly on both posets so colour ids are comparable.
std::pair<std::vector<int>, std::vector<int>> refine_colours(const Poset& p, const Poset& q) {
  auto initial = [](const Poset& r) {
    const auto h = height_to_top(r);
    std::vector<std::vector<long>> sig(r.size());
    for (int x = 0; x < r.size(); ++x)
      sig[x] = {r.level(x), h[x], static_cast<long>(r.down(x).count()),
                static_cast<long>(r.up(x).count()),
                static_cast<long>(r.lower_covers(x).size()),
                static_cast<long>(r.upper_covers(x).size())};
    return sig;
  };
  auto intern = [](const std::vector<std::vector<long>>& a, const std::vector<std::vector<long>>& b,
                   std::vector<int>& ca, std::vector<int>& cb) {
    std::map<std::vector<long>, int> ids;
    for (const auto& s : a) ids.emplace(s, 0);
    for (const auto& s : b) ids.emplace(s, 0);
    int next = 0;
    for (auto& [s, id] : ids) id = next++;
    ca.resize(a.size());
    cb.resize(b.size());
    for (std::size_t i = 0; i < a.size(); ++i) ca[i] = ids.at(a[i]);
    for (std::size_t i = 0; i < b.size(); ++i) cb[i] = ids.at(b[i]);
    return next;
  };
  std::vector<int> cp, cq;
  int classes = intern(initial(p), initial(q), cp, cq);
  while (true) {
    auto step = [](const Poset& r, const std::vector<int>& c) {
      std::vector<std::vector<long>> sig(r.size());
      for (int x = 0; x < r.size(); ++x) {
        std::vector<long> lo, hi;
        for (int y : r.lower_covers(x)) lo.push_back(c[y]);
        for (int y : r.upper_covers(x)) hi.push_back(c[y]);
        std::sort(lo.begin(), lo.end());
        std::sort(hi.begin(), hi.end());
        auto& s = sig[x];
        s.push_back(c[x]);
        s.push_back(-1);
        s.insert(s.end(), lo.begin(), lo.end());
        s.push_back(-2);
        s.insert(s.end(), hi.begin(), hi.end());
      }
      return sig;
    };
    std::vector<int> np, nq;
    const int refined = intern(step(p, cp), step(q, cq), np, nq);
    cp = std::move(np);
    cq = std::move(nq);
    if (refined == classes) break;
    classes = refined;
  }
  return {cp, cq};
}

class Matcher {
 public:
  Matcher(const Poset& p, const Poset& q, std::vector<int> cp, std::vector<int> cq)
      : p_(p), q_(q), cp_(std::move(cp)), cq_(std::move(cq)),
        image_(p.size(), -1), mapped_p_(p.size()), used_q_(q.size()) {
    by_colour_.resize(1 + *std::max_element(cq_.begin(), cq_.end()));
    for (int y = 0; y < q.size(); ++y) by_colour_[cq_[y]].push_back(y);
  }

  bool run() { return assign(0); }
  std::vector<int> image() const { return image_; }

 private:
  bool assign(std::size_t k) {
    const auto& order = p_.linear_extension();
    if (k == order.size()) return true;
    const int x = order[k];
    Bitset want(q_.size());
    (p_.down(x) & mapped_p_).for_each([&](int u) { want.set(image_[u]); });
    for (int y : by_colour_[cp_[x]]) {
      if (used_q_.test(y)) continue;
      if (!((q_.down(y) & used_q_) == want)) continue;
      if (q_.up(y).intersects(used_q_)) continue;
      image_[x] = y;
      mapped_p_.set(x);
      used_q_.set(y);
      if (assign(k + 1)) return true;
      image_[x] = -1;
      mapped_p_.reset(x);
      used_q_.reset(y);
    }
    return false;
  }

  const Poset& p_;
  const Poset& q_;
  std::vector<int> cp_, cq_;
  std::vector<std::vector<int>> by_colour_;
  std::vector<int> image_;
  Bitset mapped_p_;
  Bitset used_q_;
};

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const Poset& p, const Poset& q, const Limits& limits) {
  if (p.size() != q.size() || p.cover_pairs().size() != q.cover_pairs().size()) return std::nullopt;
  if (static_cast<std::size_t>(p.size()) > limits.isomorphism_elements)
    throw ResourceLimitError("isomorphism search capped at " +
                             std::to_string(limits.isomorphism_elements) + " elements");
  auto [cp, cq] = refine_colours(p, q);
  auto hist = [](std::vector<int> c) {
    std::sort(c.begin(), c.end());
    return c;
  };
  if (hist(cp) != hist(cq)) return std::nullopt;
  Matcher m(p, q, std::move(cp), std::move(cq));
  if (!m.run()) return std::nullopt;
  return m.image();
}

}  // namespace posetforge
