#include "altq/ncpoly.hpp"

#include <algorithm>
#include <sstream>

namespace altq {

Deg2 sym_deg(Sym s) {
  long k = sym_index(s);
  switch (sym_kind(s)) {
    case Gen::Wm:
      return {k + 1, k};
    case Gen::Wp:
      return {k, k + 1};
    case Gen::G:
    case Gen::Gt:
      return {k + 1, k + 1};
    case Gen::E1:
    case Gen::F1:
      return {1, 0};
    case Gen::E0:
    case Gen::F0:
      return {0, 1};
  }
  return {0, 0};
}

std::string sym_name(Sym s) {
  std::uint32_t k = sym_index(s);
  switch (sym_kind(s)) {
    case Gen::Wm:
      return k == 0 ? "W0" : "W-" + std::to_string(k);
    case Gen::Wp:
      return "W" + std::to_string(k + 1);
    case Gen::G:
      return "G" + std::to_string(k + 1);
    case Gen::Gt:
      return "Gt" + std::to_string(k + 1);
    case Gen::E1:
      return "E1";
    case Gen::E0:
      return "E0";
    case Gen::F1:
      return "F1";
    case Gen::F0:
      return "F0";
  }
  return "?";
}

bool is_alternating(Sym s) {
  switch (sym_kind(s)) {
    case Gen::Wm:
    case Gen::Wp:
    case Gen::G:
    case Gen::Gt:
      return true;
    default:
      return false;
  }
}

CoeffPoly CoeffPoly::delta(std::uint32_t n) {
  CoeffPoly r;
  DeltaMono m(n, 0);
  m[n - 1] = 1;
  r.t_[m] = RatFuncQ(1);
  return r;
}

bool CoeffPoly::is_scalar() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty());
}

RatFuncQ CoeffPoly::scalar_part() const {
  auto it = t_.find(DeltaMono{});
  return it == t_.end() ? RatFuncQ(0) : it->second;
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& o) {
  for (const auto& [m, c] : o.t_) {
    auto it = t_.find(m);
    if (it == t_.end()) {
      t_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }
  return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& o) {
  for (const auto& [m, c] : o.t_) {
    auto it = t_.find(m);
    if (it == t_.end()) {
      t_.emplace(m, -c);
    } else {
      it->second -= c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }
  return *this;
}

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
  CoeffPoly r;
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) {
      DeltaMono m(std::max(ma.size(), mb.size()), 0);
      for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
      for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
      RatFuncQ p = ca * cb;
      auto it = r.t_.find(m);
      if (it == r.t_.end()) {
        if (!p.is_zero()) r.t_.emplace(std::move(m), std::move(p));
      } else {
        it->second += p;
        if (it->second.is_zero()) r.t_.erase(it);
      }
    }
  return r;
}

CoeffPoly CoeffPoly::operator-() const {
  CoeffPoly r;
  for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

CoeffPoly& CoeffPoly::scale(const RatFuncQ& c) {
  if (c.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [m, v] : t_) v *= c;
  return *this;
}

CoeffPoly CoeffPoly::drop_deltas() const {
  CoeffPoly r;
  RatFuncQ s = scalar_part();
  if (!s.is_zero()) r.t_[DeltaMono{}] = s;
  return r;
}

CoeffPoly CoeffPoly::substitute_deltas(const std::vector<CoeffPoly>& values) const {
  CoeffPoly r;
  for (const auto& [m, c] : t_) {
    CoeffPoly term(c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      const CoeffPoly& v = i < values.size() ? values[i] : delta(static_cast<std::uint32_t>(i + 1));
      for (std::uint32_t e = 0; e < m[i]; ++e) term = term * v;
    }
    r += term;
  }
  return r;
}

CoeffPoly CoeffPoly::map_scalars(const std::function<RatFuncQ(const RatFuncQ&)>& f) const {
  CoeffPoly r;
  for (const auto& [m, c] : t_) {
    RatFuncQ v = f(c);
    if (!v.is_zero()) r.t_.emplace(m, std::move(v));
  }
  return r;
}

Deg2 CoeffPoly::delta_degree() const {
  // Meaningful for Delta-homogeneous coefficients; reports the degree of the
  // first monomial (all monomials of one coefficient agree in our usage).
  if (t_.empty()) return {0, 0};
  const DeltaMono& m = t_.begin()->first;
  long d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<long>(m[i]) * static_cast<long>(i + 1);
  return {d, d};
}

std::string CoeffPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) {
        os << "*D" << i + 1;
        if (m[i] > 1) os << "^" << m[i];
      }
  }
  return os.str();
}

NCPoly NCPoly::word(const Word& w, const CoeffPoly& c) {
  NCPoly r;
  if (!c.is_zero()) r.t_[w] = c;
  return r;
}

CoeffPoly NCPoly::coeff(const Word& w) const {
  auto it = t_.find(w);
  return it == t_.end() ? CoeffPoly() : it->second;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.t_) {
    auto it = t_.find(w);
    if (it == t_.end()) {
      t_.emplace(w, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.t_) {
    auto it = t_.find(w);
    if (it == t_.end()) {
      t_.emplace(w, -c);
    } else {
      it->second -= c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly r;
  for (const auto& [wa, ca] : a.t_)
    for (const auto& [wb, cb] : b.t_) {
      Word w;
      w.reserve(wa.size() + wb.size());
      w.insert(w.end(), wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      CoeffPoly p = ca * cb;
      auto it = r.t_.find(w);
      if (it == r.t_.end()) {
        if (!p.is_zero()) r.t_.emplace(std::move(w), std::move(p));
      } else {
        it->second += p;
        if (it->second.is_zero()) r.t_.erase(it);
      }
    }
  return r;
}

NCPoly NCPoly::operator-() const {
  NCPoly r;
  for (const auto& [w, c] : t_) r.t_.emplace(w, -c);
  return r;
}

NCPoly& NCPoly::scale(const RatFuncQ& c) {
  if (c.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [w, v] : t_) v.scale(c);
  return *this;
}

NCPoly& NCPoly::scale(const CoeffPoly& c) {
  NCPoly r;
  for (const auto& [w, v] : t_) {
    CoeffPoly p = v * c;
    if (!p.is_zero()) r.t_.emplace(w, std::move(p));
  }
  *this = std::move(r);
  return *this;
}

bool NCPoly::is_homogeneous(Deg2* deg) const {
  bool have = false;
  Deg2 d{};
  for (const auto& [w, c] : t_) {
    Deg2 wd = c.delta_degree();
    for (Sym s : w) wd += sym_deg(s);
    if (!have) {
      d = wd;
      have = true;
    } else if (!(wd == d)) {
      return false;
    }
  }
  if (deg && have) *deg = d;
  return true;
}

std::map<Deg2, NCPoly> NCPoly::split_by_degree() const {
  std::map<Deg2, NCPoly> r;
  for (const auto& [w, c] : t_) {
    // Split the coefficient by Delta-degree as well, so each part is graded.
    for (const auto& [m, v] : c.terms()) {
      Deg2 d{};
      for (std::size_t i = 0; i < m.size(); ++i) {
        long dd = static_cast<long>(m[i]) * static_cast<long>(i + 1);
        d += Deg2{dd, dd};
      }
      for (Sym s : w) d += sym_deg(s);
      CoeffPoly mono(v);
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::uint32_t e = 0; e < m[i]; ++e)
          mono = mono * CoeffPoly::delta(static_cast<std::uint32_t>(i + 1));
      r[d] += NCPoly::word(w, mono);
    }
  }
  return r;
}

std::map<DeltaMono, NCPoly> NCPoly::split_by_delta() const {
  std::map<DeltaMono, NCPoly> r;
  for (const auto& [w, c] : t_)
    for (const auto& [m, v] : c.terms()) r[m] += NCPoly::word(w, CoeffPoly(v));
  return r;
}

bool NCPoly::has_delta() const {
  for (const auto& [w, c] : t_)
    if (!c.is_scalar()) return true;
  return false;
}

NCPoly NCPoly::substitute(const std::function<const NCPoly*(Sym)>& image) const {
  NCPoly r;
  for (const auto& [w, c] : t_) {
    NCPoly term(c);
    for (Sym s : w) {
      const NCPoly* img = image(s);
      term = img ? term * *img : term * NCPoly::gen(s);
    }
    r += term;
  }
  return r;
}

NCPoly NCPoly::map_coeffs(const std::function<CoeffPoly(const CoeffPoly&)>& f) const {
  NCPoly r;
  for (const auto& [w, c] : t_) {
    CoeffPoly v = f(c);
    if (!v.is_zero()) r.t_.emplace(w, std::move(v));
  }
  return r;
}

namespace {
Sym sigma_sym(Sym s) {
  std::uint32_t k = sym_index(s);
  switch (sym_kind(s)) {
    case Gen::Wm:
      return make_sym(Gen::Wp, k);
    case Gen::Wp:
      return make_sym(Gen::Wm, k);
    case Gen::G:
      return make_sym(Gen::Gt, k);
    case Gen::Gt:
      return make_sym(Gen::G, k);
    default:
      throw AlphabetMismatch("sigma: not an alternating symbol: " + sym_name(s));
  }
}
Sym swapGGt_sym(Sym s) {
  std::uint32_t k = sym_index(s);
  switch (sym_kind(s)) {
    case Gen::Wm:
    case Gen::Wp:
      return s;
    case Gen::G:
      return make_sym(Gen::Gt, k);
    case Gen::Gt:
      return make_sym(Gen::G, k);
    default:
      throw AlphabetMismatch("S: not an alternating symbol: " + sym_name(s));
  }
}
}  // namespace

NCPoly NCPoly::sigma() const {
  NCPoly r;
  for (const auto& [w, c] : t_) {
    Word v;
    v.reserve(w.size());
    for (Sym s : w) v.push_back(sigma_sym(s));
    r += NCPoly::word(v, c);
  }
  return r;
}

NCPoly NCPoly::antiS() const {
  NCPoly r;
  for (const auto& [w, c] : t_) {
    Word v;
    v.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) v.push_back(swapGGt_sym(*it));
    r += NCPoly::word(v, c);
  }
  return r;
}

NCPoly NCPoly::gamma() const {
  return map_coeffs([](const CoeffPoly& c) { return c.drop_deltas(); });
}

std::string NCPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "[" << c.str() << "]";
    for (Sym s : w) os << "." << sym_name(s);
  }
  return os.str();
}

NCPoly comm(const NCPoly& x, const NCPoly& y) { return x * y - y * x; }

NCPoly qcomm(const NCPoly& x, const NCPoly& y) {
  NCPoly r = x * y;
  r.scale(rf_q());
  NCPoly l = y * x;
  l.scale(rf_qinv());
  return r - l;
}

NCPoly wcomm(const RatFuncQ& a, const NCPoly& x, const NCPoly& y) {
  NCPoly r = x * y;
  r.scale(a);
  NCPoly l = y * x;
  l.scale(a.inverse());
  return r - l;
}

}  // namespace altq
