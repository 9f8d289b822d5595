#pragma once

#include <vector>

namespace repknot {

// A word in the free group on generator indices 0..s-1.
struct Letter {
  int gen;
  int exp;  // +1 or -1
};
using Word = std::vector<Letter>;

inline Word inverse(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->gen, -it->exp});
  return r;
}

inline Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

// Free-differential fold: walks the word left to right and accumulates, for
// each generator g, the coefficient of d/dg in the chosen coefficient ring.
//
//   d(uv) = du + phi(u) dv,   d(g) = 1,   d(g^-1) = -phi(g^-1)
//
// `Ring` needs: one(), mul(a,b), add_into(acc[g], a), image(gen, exp) giving
// phi(gen^exp), and neg(a).  The same walk drives the Alexander matrix (phi =
// multiplication by t^exp) and twisted-cocycle systems (phi = Ad of the
// representation), which keeps the two conventions aligned by construction.
template <typename Ring>
void fox_fold(const Word& w, Ring& ring) {
  auto prefix = ring.one();
  for (const Letter& l : w) {
    if (l.exp == 1) {
      ring.add_into(l.gen, prefix);
      prefix = ring.mul(prefix, ring.image(l.gen, 1));
    } else {
      auto gi = ring.image(l.gen, -1);
      prefix = ring.mul(prefix, gi);
      ring.add_into(l.gen, ring.neg(prefix));
    }
  }
}

}  // namespace repknot
