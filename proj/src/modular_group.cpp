#include "pantsgraph/modular_group.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace pantsgraph {

IntMatrix2::IntMatrix2(BigInt a, BigInt b, BigInt c, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  BigInt det = a_ * d_ - b_ * c_;
  if (det != 1 && det != -1) {
    throw std::invalid_argument("matrix determinant must be +-1, got " + det.str());
  }
}

int IntMatrix2::det() const {
  return (a_ * d_ - b_ * c_) == 1 ? 1 : -1;
}

IntMatrix2 IntMatrix2::inverse() const {
  // adj(M)/det; for det -1 the sign flip keeps entries integral.
  if (det() == 1) return {d_, -b_, -c_, a_};
  return {-d_, b_, c_, -a_};
}

IntMatrix2 IntMatrix2::operator*(const IntMatrix2& rhs) const {
  return {a_ * rhs.a_ + b_ * rhs.c_, a_ * rhs.b_ + b_ * rhs.d_,
          c_ * rhs.a_ + d_ * rhs.c_, c_ * rhs.b_ + d_ * rhs.d_};
}

bool IntMatrix2::projectively_equal(const IntMatrix2& other) const {
  return *this == other || *this == -other;
}

std::string IntMatrix2::str() const {
  return "[[" + a_.str() + "," + b_.str() + "],[" + c_.str() + "," + d_.str() + "]]";
}

Slope act_on_slope(const IntMatrix2& m, const Slope& s) {
  return Slope::make(m.a() * s.p() + m.b() * s.q(), m.c() * s.p() + m.d() * s.q());
}

bool acts_trivially_on_slopes(const IntMatrix2& m) {
  static const Slope probes[] = {Slope::infinity(), Slope::make(0, 1), Slope::make(1, 1)};
  for (const Slope& s : probes) {
    if (act_on_slope(m, s) != s) return false;
  }
  return true;
}

namespace {

void append_run(std::string& word, char fwd, char inv, const BigInt& count) {
  char letter = count >= 0 ? fwd : inv;
  BigInt n = count >= 0 ? count : BigInt(-count);
  // Letter strings are only practical at desk scale; cap defensively.
  if (n > 1000000) throw std::domain_error("decompose: word too long to spell out");
  for (BigInt i = 0; i < n; ++i) word.push_back(letter);
}

}  // namespace

std::string decompose(const IntMatrix2& m) {
  // Reduce to +-identity by left-multiplying with generator inverses,
  // recording the inverse operations; reversing them spells the word.
  // S^-1 = -S and R^-1 = R, so the recorded letters stay in {T, t, S, R}.
  BigInt a = m.a(), b = m.b(), c = m.c(), d = m.d();
  if (m.det() == -1) {
    // Peel the reflection off the right: M = M' * R with det M' = +1.
    b = -b;
    d = -d;
  }
  struct Syllable {
    BigInt t_power;  // applied as T^t_power
    bool then_s;
  };
  std::vector<Syllable> syllables;
  while (c != 0) {
    BigInt q = a / c;  // truncated; |a - q c| < |c| once |a| >= |c|
    // T^-q then S^-1 on the left.
    BigInt na = a - q * c, nb = b - q * d;
    a = c;
    b = d;
    c = -na;
    d = -nb;
    syllables.push_back({q, true});
  }
  // Now [[a, b], [0, d]] with a*d == 1, so a == d == +-1 and M == +-T^(a*b).
  BigInt residual = a * b;
  std::string word;
  append_run(word, 'T', 't', residual);
  for (auto it = syllables.rbegin(); it != syllables.rend(); ++it) {
    word.push_back('S');
    append_run(word, 'T', 't', it->t_power);
  }
  std::reverse(word.begin(), word.end());
  if (m.det() == -1) word.push_back('R');
  return word;
}

IntMatrix2 evaluate_word(std::string_view word) {
  IntMatrix2 result = IntMatrix2::identity();
  for (char ch : word) {
    switch (ch) {
      case 'T':
        result = result * IntMatrix2::shear();
        break;
      case 't':
        result = result * IntMatrix2::shear().inverse();
        break;
      case 'S':
        result = result * IntMatrix2::rotation();
        break;
      case 'R':
        result = result * IntMatrix2::reflection();
        break;
      default:
        throw std::invalid_argument(std::string("bad generator letter '") + ch +
                                    "' (expected T, t, S or R)");
    }
  }
  return result;
}

IntMatrix2 edge_normalizer(const FareyEdge& e) {
  // Columns (p, q) and (r, s) of the inverse-to-be; the larger endpoint maps
  // to 1/0 so that the edge {1/0, 0/1} normalizes to the identity.
  const Slope& hi = e.high();
  const Slope& lo = e.low();
  IntMatrix2 placement(hi.p(), lo.p(), hi.q(), lo.q());
  return placement.inverse();
}

Slope canonical_neighbor(const Slope& s) {
  if (s.is_infinite()) return Slope::make(0, 1);
  if (s.q() == 1) return Slope::infinity();
  XgcdResult e = xgcd(s.p(), s.q());  // p*x + q*y == 1
  BigInt s0 = e.x % s.q();
  if (s0 < 0) s0 += s.q();
  BigInt r0 = (s.p() * s0 - 1) / s.q();
  return Slope::make(r0, s0);
}

IntMatrix2 completion_matrix(const Slope& s) {
  if (s.is_infinite()) return IntMatrix2::identity();
  Slope nb = canonical_neighbor(s);
  // det = p * nb.q - q * nb.p == 1 by construction of the canonical neighbor.
  BigInt det = s.p() * nb.q() - s.q() * nb.p();
  if (det == 1) return {s.p(), nb.p(), s.q(), nb.q()};
  return {s.p(), -nb.p(), s.q(), -nb.q()};
}

}  // namespace pantsgraph
