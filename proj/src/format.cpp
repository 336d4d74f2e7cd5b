#include "weyl/format.hpp"

#include <vector>

namespace weyl {

namespace {

std::string power(char var, Index e) {
  if (e == 0) return {};
  std::string s(1, var);
  if (e > 1) s += "^" + std::to_string(e);
  return s;
}

void append_term(std::string& out, const Scalar& c, const std::string& mono, bool first) {
  const bool negative = sgn(c) < 0;
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  const Scalar mag = abs(c);
  if (mono.empty()) {
    out += to_string(mag);
  } else if (mag == 1) {
    out += mono;
  } else {
    out += to_string(mag) + "*" + mono;
  }
}

template <class Tag>
std::string render_bi(const BiPoly<Tag>& p, char xs, char ys) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono = power(xs, e.i);
    const std::string py = power(ys, e.j);
    if (!mono.empty() && !py.empty()) mono += "*";
    mono += py;
    append_term(out, c, mono, first);
    first = false;
  }
  return out;
}

}  // namespace

std::string render(const WeylElement& p) { return render_bi(p, 'X', 'Y'); }
std::string render(const CommPoly& p) { return render_bi(p, 'x', 'y'); }

std::string render(const UniPoly& f, char var) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    append_term(out, c, power(var, e), first);
    first = false;
  }
  return out;
}

std::string to_string(LatticePoint p) { return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")"; }

std::string to_string(const Direction& d) {
  return "(" + std::to_string(d.rho()) + "," + std::to_string(d.sigma()) + ")";
}

}  // namespace weyl
