#include "altq/span.hpp"

namespace altq {

namespace {

void words_of_degree(const std::vector<Sym>& letters, Deg2 deg, Word& cur,
                     std::vector<Word>& out) {
  if (deg.a == 0 && deg.b == 0) {
    out.push_back(cur);
    return;
  }
  if (deg.a < 0 || deg.b < 0) return;
  for (Sym s : letters) {
    Deg2 d = sym_deg(s);
    if (d.a > deg.a || d.b > deg.b) continue;
    cur.push_back(s);
    words_of_degree(letters, {deg.a - d.a, deg.b - d.b}, cur, out);
    cur.pop_back();
  }
}

}  // namespace

NcSpan ideal_slice(const std::vector<NCPoly>& gens, const std::vector<Sym>& letters, Deg2 deg) {
  NcSpan span;
  for (const NCPoly& g : gens) {
    Deg2 dg;
    if (!g.is_homogeneous(&dg)) continue;
    for (long la = 0; la + dg.a <= deg.a; ++la)
      for (long lb = 0; lb + dg.b <= deg.b; ++lb) {
        Deg2 left{la, lb};
        Deg2 right{deg.a - dg.a - la, deg.b - dg.b - lb};
        std::vector<Word> lws, rws;
        Word cur;
        words_of_degree(letters, left, cur, lws);
        words_of_degree(letters, right, cur, rws);
        for (const Word& x : lws)
          for (const Word& y : rws) span.add(NCPoly::word(x) * g * NCPoly::word(y));
      }
  }
  return span;
}

}  // namespace altq
