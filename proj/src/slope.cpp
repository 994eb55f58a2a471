#include "pantsgraph/slope.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace pantsgraph {

Slope Slope::make(BigInt p, BigInt q) {
  if (p == 0 && q == 0) {
    throw std::invalid_argument("make_slope: (0, 0) has no reduced form");
  }
  BigInt g = boost::multiprecision::gcd(p, q);
  p /= g;
  q /= g;
  if (q < 0) {
    p = -p;
    q = -q;
  }
  if (q == 0) p = 1;
  return Slope(std::move(p), std::move(q));
}

double Slope::value() const {
  if (is_infinite()) return std::numeric_limits<double>::infinity();
  return to_double(p_) / to_double(q_);
}

std::string Slope::str() const { return p_.str() + "/" + q_.str(); }

Slope Slope::parse(std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return make(parse_bigint(text), 1);
    }
    BigInt p = parse_bigint(text.substr(0, slash));
    BigInt q = parse_bigint(text.substr(slash + 1));
    return make(std::move(p), std::move(q));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a slope: '" + std::string(text) +
                                "' (expected \"p/q\" or an integer)");
  }
}

bool Slope::operator<(const Slope& other) const {
  if (is_infinite()) return false;
  if (other.is_infinite()) return true;
  return p_ * other.q_ < other.p_ * q_;
}

bool is_adjacent(const Slope& a, const Slope& b) {
  BigInt det = a.p() * b.q() - a.q() * b.p();
  return det == 1 || det == -1;
}

Slope mediant(const Slope& a, const Slope& b) {
  BigInt det = a.p() * b.q() - a.q() * b.p();
  if (det != 1 && det != -1) {
    throw std::invalid_argument("mediant: slopes " + a.str() + " and " + b.str() +
                                " are not Farey-adjacent");
  }
  // Orient the pair to determinant +1 so the vector sum is the triangle apex.
  const Slope& lo = det == 1 ? a : b;
  const Slope& hi = det == 1 ? b : a;
  return Slope::make(lo.p() + hi.p(), lo.q() + hi.q());
}

namespace {

template <typename I>
I tfloor_div(const I& a, const I& b) {  // b > 0
  I q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

template <typename I>
I tceil_div(const I& a, const I& b) {  // b > 0
  I q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

template <typename I>
void txgcd(I a, I b, I& x, I& y) {
  I old_r = a, r = b;
  I old_x = 1, xx = 0;
  I old_y = 0, yy = 1;
  while (r != 0) {
    I q = old_r / r;
    I t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * xx;
    old_x = xx;
    xx = t;
    t = old_y - q * yy;
    old_y = yy;
    yy = t;
  }
  if (old_r < 0) {
    old_x = -old_x;
    old_y = -old_y;
  }
  x = old_x;
  y = old_y;
}

// Enumerates every Farey neighbor (r, s) of the canonical slope (p, q) with
// |r| <= B and 0 <= s <= B, in a fixed deterministic order. Pairs are emitted
// in canonical form; (1, 0) may be emitted twice.
template <typename I, typename F>
void for_each_neighbor(const I& p, const I& q, const I& B, F&& fn) {
  if (q == 0) {
    for (I r = -B; r <= B; ++r) fn(r, I(1));
    return;
  }
  // Base solution of p*s - q*r = 1 with 0 <= s0 < q.
  I x, y;
  txgcd(p, q, x, y);  // p*x + q*y == 1
  I s0 = x % q;
  if (s0 < 0) s0 += q;
  I r0 = (p * s0 - 1) / q;
  for (int sign = 0; sign < 2; ++sign) {
    I rb = sign == 0 ? r0 : I(-r0);
    I sb = sign == 0 ? s0 : I(-s0);
    // 0 <= sb + t*q <= B
    I tmin = tceil_div(I(-sb), q);
    I tmax = tfloor_div(I(B - sb), q);
    // |rb + t*p| <= B
    if (p > 0) {
      tmin = std::max(tmin, tceil_div(I(-B - rb), p));
      tmax = std::min(tmax, tfloor_div(I(B - rb), p));
    } else if (p < 0) {
      I pp = -p;
      tmin = std::max(tmin, tceil_div(I(rb - B), pp));
      tmax = std::min(tmax, tfloor_div(I(rb + B), pp));
    }
    for (I t = tmin; t <= tmax; ++t) {
      I r = rb + t * p;
      I s = sb + t * q;
      if (s == 0) {
        fn(I(1), I(0));
      } else {
        fn(r, s);
      }
    }
  }
}

struct Pair64 {
  std::int64_t p, q;
  friend bool operator==(const Pair64&, const Pair64&) = default;
};

struct SearchOutcome {
  long distance = -1;
  std::vector<Pair64> path;
};

// Bidirectional level-synchronous BFS on the subgraph |p| <= B, q <= B.
// Expands whole levels and stops once the best meeting candidate can no
// longer be beaten. Deterministic: frontiers preserve insertion order and
// neighbor enumeration order is fixed.
SearchOutcome bounded_search(Pair64 a, Pair64 b, std::int64_t B, bool want_path) {
  auto key = [B](const Pair64& v) { return (v.p + B) * (B + 1) + v.q; };
  SearchOutcome out;
  if (a == b) {
    out.distance = 0;
    out.path = {a};
    return out;
  }
  std::unordered_map<std::int64_t, int> dist_a{{key(a), 0}}, dist_b{{key(b), 0}};
  std::unordered_map<std::int64_t, Pair64> parent_a, parent_b;
  std::vector<Pair64> front_a{a}, front_b{b};
  int level_a = 0, level_b = 0;
  long mu = -1;
  Pair64 meet{0, 0};

  auto expand = [&](std::vector<Pair64>& front, auto& own, auto& own_parent,
                    const auto& other, int& level) {
    ++level;
    std::vector<Pair64> next;
    for (const Pair64& node : front) {
      for_each_neighbor<std::int64_t>(node.p, node.q, B, [&](std::int64_t r, std::int64_t s) {
        Pair64 nb{r, s};
        auto [it, inserted] = own.try_emplace(key(nb), level);
        if (!inserted) return;
        if (want_path) own_parent.emplace(key(nb), node);
        next.push_back(nb);
        auto jt = other.find(key(nb));
        if (jt != other.end()) {
          long cand = level + jt->second;
          if (mu < 0 || cand < mu) {
            mu = cand;
            meet = nb;
          }
        }
      });
    }
    front = std::move(next);
  };

  while (!front_a.empty() && !front_b.empty()) {
    if (mu >= 0 && level_a + level_b + 1 >= mu) break;
    if (front_a.size() <= front_b.size()) {
      expand(front_a, dist_a, parent_a, dist_b, level_a);
    } else {
      expand(front_b, dist_b, parent_b, dist_a, level_b);
    }
  }
  if (mu < 0) return out;
  out.distance = mu;
  if (want_path) {
    std::vector<Pair64> head;  // meet back to a
    Pair64 cur = meet;
    head.push_back(cur);
    while (!(cur == a)) {
      cur = parent_a.at(key(cur));
      head.push_back(cur);
    }
    std::reverse(head.begin(), head.end());
    cur = meet;
    while (!(cur == b)) {
      cur = parent_b.at(key(cur));
      head.push_back(cur);
    }
    out.path = std::move(head);
  }
  return out;
}

constexpr std::int64_t kMaxSearchBound = std::int64_t(1) << 24;

struct DoublingResult {
  long distance;
  std::vector<Slope> path;
};

DoublingResult doubling_search(const Slope& a, const Slope& b, bool want_path) {
  if (a == b) return {0, {a}};
  if (is_adjacent(a, b)) return {1, {a, b}};
  BigInt m = 1;
  for (const BigInt& v : {a.p(), a.q(), b.p(), b.q()}) {
    BigInt av = v < 0 ? BigInt(-v) : v;
    if (av > m) m = av;
  }
  BigInt start = 4 * m;
  if (start > kMaxSearchBound) {
    throw std::domain_error(
        "farey_distance: endpoint coordinates too large for the bounded search");
  }
  std::int64_t bound = to_int64(start);
  Pair64 pa{to_int64(a.p()), to_int64(a.q())};
  Pair64 pb{to_int64(b.p()), to_int64(b.q())};

  long prev1 = -2, prev2 = -3;
  while (true) {
    SearchOutcome out = bounded_search(pa, pb, bound, want_path);
    if (out.distance >= 0 && out.distance == prev1 && out.distance == prev2) {
      DoublingResult result{out.distance, {}};
      result.path.reserve(out.path.size());
      for (const Pair64& v : out.path) result.path.push_back(Slope::make(v.p, v.q));
      return result;
    }
    prev2 = prev1;
    prev1 = out.distance;
    if (bound > kMaxSearchBound / 2) {
      throw std::domain_error("farey_distance: search bound overflow before stabilizing");
    }
    bound *= 2;
  }
}

}  // namespace

std::vector<Slope> neighbors_bounded(const Slope& a, const BigInt& bound) {
  if (bound < 1) throw std::invalid_argument("neighbors_bounded: bound must be >= 1");
  std::set<Slope> found;
  for_each_neighbor<BigInt>(a.p(), a.q(), bound, [&](const BigInt& r, const BigInt& s) {
    found.insert(Slope::make(r, s));
  });
  return {found.begin(), found.end()};
}

long farey_distance(const Slope& a, const Slope& b) {
  return doubling_search(a, b, false).distance;
}

std::vector<Slope> farey_geodesic(const Slope& a, const Slope& b) {
  return doubling_search(a, b, true).path;
}

std::vector<Slope> slopes_up_to(long bound) {
  if (bound < 1) throw std::invalid_argument("slopes_up_to: bound must be >= 1");
  std::vector<Slope> out;
  for (long q = 1; q <= bound; ++q) {
    for (long p = -bound; p <= bound; ++p) {
      if (std::gcd(std::abs(p), q) == 1) out.push_back(Slope::make(p, q));
    }
  }
  out.push_back(Slope::infinity());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Rat {
  BigInt num;
  BigInt den;  // > 0
};

bool rat_less(const Rat& a, const Rat& b) { return a.num * b.den < b.num * a.den; }

Rat rat_from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("rational bound must be finite");
  int exp = 0;
  double m = std::frexp(v, &exp);
  auto scaled = static_cast<long long>(std::ldexp(m, 53));  // exact: |m| in [0.5, 1)
  Rat r{BigInt(scaled), BigInt(1)};
  int shift = exp - 53;
  if (shift >= 0) {
    r.num <<= shift;
  } else {
    r.den <<= -shift;
  }
  return r;
}

// Smallest-denominator rational in the open interval (lo, hi).
Rat simplest_in(const Rat& lo, const Rat& hi) {
  if (lo.num < 0 && hi.num > 0) return {0, 1};
  if (hi.num <= 0) {
    Rat flipped = simplest_in({-hi.num, hi.den}, {-lo.num, lo.den});
    return {-flipped.num, flipped.den};
  }
  // Now 0 <= lo < hi.
  BigInt fl = floor_div(lo.num, lo.den);
  if ((fl + 1) * hi.den < hi.num) return {fl + 1, 1};
  Rat lo_frac{lo.num - fl * lo.den, lo.den};
  Rat hi_frac{hi.num - fl * hi.den, hi.den};
  Rat inner;
  if (lo_frac.num == 0) {
    // (0, hi_frac): reciprocal of the smallest integer above 1/hi_frac.
    inner = {floor_div(hi_frac.den, hi_frac.num) + 1, 1};
  } else {
    inner = simplest_in({hi_frac.den, hi_frac.num}, {lo_frac.den, lo_frac.num});
  }
  return {fl * inner.num + inner.den, inner.num};
}

}  // namespace

Slope simplest_slope_between(double lo, double hi) {
  if (!(lo < hi)) throw std::invalid_argument("simplest_slope_between: needs lo < hi");
  Rat a = rat_from_double(lo), b = rat_from_double(hi);
  Rat r = simplest_in(a, b);
  return Slope::make(r.num, r.den);
}

FareyEdge::FareyEdge(Slope a, Slope b) {
  if (!is_adjacent(a, b)) {
    throw std::invalid_argument("not a Farey edge: " + a.str() + " -- " + b.str());
  }
  if (b < a) std::swap(a, b);
  low_ = std::move(a);
  high_ = std::move(b);
}

FareyTriangle::FareyTriangle(Slope a, Slope b, Slope c) {
  if (b < a) std::swap(a, b);
  if (c < b) std::swap(b, c);
  if (b < a) std::swap(a, b);
  if (a == b || b == c) {
    throw std::invalid_argument("Farey triangle vertices must be distinct");
  }
  if (!is_adjacent(a, b) || !is_adjacent(b, c) || !is_adjacent(a, c)) {
    throw std::invalid_argument("not a Farey triangle: " + a.str() + ", " + b.str() +
                                ", " + c.str());
  }
  auto is_mediant_of = [](const Slope& z, const Slope& x, const Slope& y) {
    BigInt sp = x.p() + y.p(), sq = x.q() + y.q();
    if ((sp != 0 || sq != 0) && Slope::make(sp, sq) == z) return true;
    BigInt dp = x.p() - y.p(), dq = x.q() - y.q();
    return (dp != 0 || dq != 0) && Slope::make(dp, dq) == z;
  };
  if (!is_mediant_of(c, a, b) && !is_mediant_of(b, a, c) && !is_mediant_of(a, b, c)) {
    throw std::invalid_argument("Farey triangle has no mediant vertex: " + a.str() +
                                ", " + b.str() + ", " + c.str());
  }
  v_[0] = std::move(a);
  v_[1] = std::move(b);
  v_[2] = std::move(c);
}

bool FareyTriangle::has_vertex(const Slope& s) const {
  return v_[0] == s || v_[1] == s || v_[2] == s;
}

int FareyTriangle::shared_vertices(const FareyTriangle& other) const {
  int n = 0;
  for (const Slope& s : v_) n += other.has_vertex(s) ? 1 : 0;
  return n;
}

bool FareyTriangle::operator<(const FareyTriangle& other) const {
  for (int i = 0; i < 3; ++i) {
    if (v_[i] < other.v_[i]) return true;
    if (other.v_[i] < v_[i]) return false;
  }
  return false;
}

}  // namespace pantsgraph
