#include "jumploci/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace jumploci {

MultiPoly MultiPoly::constant(int nvars, Rational c) {
  MultiPoly p(nvars);
  if (c != 0) p.terms_.emplace(Exponents(nvars, 0), std::move(c));
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw PreconditionError("variable index out of range");
  MultiPoly p(nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (unsigned k : e) s += static_cast<int>(k);
    d = std::max(d, s);
  }
  return d;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw PreconditionError("exponent vector size mismatch");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw PreconditionError("polynomial variable count mismatch");
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw PreconditionError("polynomial variable count mismatch");
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw PreconditionError("polynomial variable count mismatch");
  MultiPoly r(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      MultiPoly::Exponents e(a.nvars_);
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  if (c == 0) return MultiPoly(nvars_);
  MultiPoly r = *this;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw PreconditionError("evaluation point size mismatch");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    acc += term;
  }
  return acc;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images, int new_nvars) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw PreconditionError("substitution image count mismatch");
  MultiPoly acc(new_nvars);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = MultiPoly::constant(new_nvars, c);
    for (int i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) term = term * images[i];
    acc = acc + term;
  }
  return acc;
}

MultiPoly MultiPoly::derivative(int var) const {
  if (var < 0 || var >= nvars_) throw PreconditionError("derivative variable out of range");
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    r.add_term(d, c * Rational(static_cast<long>(e[var])));
  }
  return r;
}

MultiPoly MultiPoly::normalized() const {
  if (terms_.empty()) return *this;
  const Rational& lead = terms_.rbegin()->second;
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c /= lead;
  return r;
}

bool MultiPoly::less(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ib != b.terms_.end();
}

std::string MultiPoly::str(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  if (static_cast<int>(var_names.size()) != nvars_)
    throw PreconditionError("variable name count mismatch");
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) out << (c > 0 ? "+" : "");
    bool has_var = false;
    for (unsigned k : e)
      if (k > 0) has_var = true;
    if (!has_var) {
      out << rational_str(c);
    } else {
      if (c == -1)
        out << "-";
      else if (c != 1)
        out << rational_str(c) << "*";
      bool first_var = true;
      for (int i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (!first_var) out << "*";
        out << var_names[i];
        if (e[i] > 1) out << "^" << e[i];
        first_var = false;
      }
    }
    first = false;
  }
  return out.str();
}

MultiPoly poly_determinant(const std::vector<std::vector<MultiPoly>>& m, int nvars) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) throw PreconditionError("determinant of non-square matrix");
  if (n == 0) return MultiPoly::constant(nvars, Rational(1));
  if (n == 1) return m[0][0];
  MultiPoly acc(nvars);
  std::vector<std::vector<MultiPoly>> minor(n - 1, std::vector<MultiPoly>(n - 1, MultiPoly(nvars)));
  for (int j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = m[r][c];
      }
    }
    MultiPoly term = m[0][j] * poly_determinant(minor, nvars);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace jumploci
