#include "jumploci/lie.hpp"

#include <algorithm>
#include <bit>

#include "jumploci/exterior.hpp"

namespace jumploci {

std::vector<std::vector<unsigned>> exterior_masks(int n) {
  if (n < 0 || n > 24) throw PreconditionError("exterior generator count out of range");
  std::vector<std::vector<unsigned>> by_deg(n + 1);
  for (unsigned m = 0; m < (1u << n); ++m) by_deg[std::popcount(m)].push_back(m);
  for (auto& v : by_deg) std::sort(v.begin(), v.end());
  return by_deg;
}

int wedge_sign(unsigned a, unsigned b) {
  if ((a & b) != 0) return 0;
  int inversions = 0;
  for (int bit = 0; bit < 24; ++bit) {
    if (!(b & (1u << bit))) continue;
    unsigned higher = a >> (bit + 1);
    inversions += std::popcount(higher);
  }
  return inversions % 2 == 0 ? 1 : -1;
}

std::string mask_label(unsigned mask, const std::vector<std::string>& gen_labels) {
  if (mask == 0) return "1";
  std::string s;
  for (size_t i = 0; i < gen_labels.size(); ++i)
    if (mask & (1u << i)) s += gen_labels[i];
  return s;
}

Cdga exterior_cdga(const std::vector<std::string>& gen_labels) {
  const int n = static_cast<int>(gen_labels.size());
  auto masks = exterior_masks(n);
  std::vector<int> dims;
  std::vector<std::vector<std::string>> labels;
  for (int deg = 0; deg <= n; ++deg) {
    dims.push_back(static_cast<int>(masks[deg].size()));
    std::vector<std::string> row;
    for (unsigned m : masks[deg]) row.push_back(mask_label(m, gen_labels));
    labels.push_back(std::move(row));
  }
  Cdga a(GradedBasis(dims, labels), /*zero_above=*/true);
  // position of each mask inside its degree
  std::vector<int> pos(1u << n, 0);
  for (int deg = 0; deg <= n; ++deg)
    for (size_t k = 0; k < masks[deg].size(); ++k) pos[masks[deg][k]] = static_cast<int>(k);
  for (int da = 0; da <= n; ++da)
    for (int db = 0; db <= n; ++db) {
      if (da + db > n) continue;
      for (size_t ia = 0; ia < masks[da].size(); ++ia)
        for (size_t ib = 0; ib < masks[db].size(); ++ib) {
          const int ga = static_cast<int>(ia) + [&] {
            int off = 0;
            for (int d = 0; d < da; ++d) off += dims[d];
            return off;
          }();
          const int gb = static_cast<int>(ib) + [&] {
            int off = 0;
            for (int d = 0; d < db; ++d) off += dims[d];
            return off;
          }();
          if (ga > gb) continue;
          const unsigned ma = masks[da][ia], mb = masks[db][ib];
          std::vector<Scalar> target(dims[da + db], Scalar(0));
          const int s = wedge_sign(ma, mb);
          if (s != 0) target[pos[ma | mb]] = Scalar(s);
          a.set_product(da, static_cast<int>(ia), db, static_cast<int>(ib), std::move(target));
        }
    }
  return a;
}

std::vector<Scalar> LieAlgebra::bracket(int a, int b) const {
  if (a < 0 || a >= dim || b < 0 || b >= dim)
    throw PreconditionError("bracket index out of range");
  std::vector<Scalar> out(dim, Scalar(0));
  if (a == b) return out;
  const bool flip = a > b;
  auto it = brackets.find(flip ? std::make_pair(b, a) : std::make_pair(a, b));
  if (it == brackets.end()) return out;
  out = it->second;
  if (flip)
    for (auto& v : out) v = -v;
  return out;
}

std::vector<Scalar> LieAlgebra::bracket_elements(const std::vector<Scalar>& x,
                                                 const std::vector<Scalar>& y) const {
  if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
    throw PreconditionError("bracket element size mismatch");
  std::vector<Scalar> out(dim, Scalar(0));
  for (int a = 0; a < dim; ++a) {
    if (x[a].is_zero()) continue;
    for (int b = 0; b < dim; ++b) {
      if (y[b].is_zero()) continue;
      auto br = bracket(a, b);
      const Scalar f = x[a] * y[b];
      for (int g = 0; g < dim; ++g)
        if (!br[g].is_zero()) out[g] = out[g] + f * br[g];
    }
  }
  return out;
}

void LieAlgebra::set_bracket(int a, int b, std::vector<Scalar> coeffs) {
  if (a == b) throw PreconditionError("bracket of a generator with itself is structural zero");
  if (a < 0 || a >= dim || b < 0 || b >= dim)
    throw PreconditionError("bracket index out of range");
  if (static_cast<int>(coeffs.size()) != dim)
    throw PreconditionError("bracket coefficient size mismatch");
  if (a > b) {
    for (auto& v : coeffs) v = -v;
    std::swap(a, b);
  }
  bool all_zero = true;
  for (const auto& v : coeffs)
    if (!v.is_zero()) all_zero = false;
  if (all_zero)
    brackets.erase({a, b});
  else
    brackets[{a, b}] = std::move(coeffs);
}

std::vector<Violation> validate_lie(const LieAlgebra& e) {
  std::vector<Violation> out;
  auto unit = [&](int g) {
    std::vector<Scalar> v(e.dim, Scalar(0));
    v[g] = Scalar(1);
    return v;
  };
  for (int a = 0; a < e.dim; ++a)
    for (int b = a + 1; b < e.dim; ++b)
      for (int c = b + 1; c < e.dim; ++c) {
        auto j1 = e.bracket_elements(e.bracket(a, b), unit(c));
        auto j2 = e.bracket_elements(e.bracket(b, c), unit(a));
        auto j3 = e.bracket_elements(e.bracket(c, a), unit(b));
        bool zero = true;
        for (int g = 0; g < e.dim; ++g)
          if (!(j1[g] + j2[g] + j3[g]).is_zero()) zero = false;
        if (!zero)
          out.push_back({"jacobi", "(" + e.labels[a] + ", " + e.labels[b] + ", " +
                                       e.labels[c] + ")"});
      }
  return out;
}

std::vector<Violation> validate_rep(const LieRep& rep) {
  std::vector<Violation> out;
  const LieAlgebra& e = rep.lie;
  if (static_cast<int>(rep.theta.size()) != e.dim) {
    out.push_back({"rep-shape", "one matrix per Lie basis element required"});
    return out;
  }
  for (int g = 0; g < e.dim; ++g)
    if (rep.theta[g].rows() != rep.dimV || rep.theta[g].cols() != rep.dimV)
      out.push_back({"rep-shape", e.labels[g]});
  if (!out.empty()) return out;
  for (int a = 0; a < e.dim; ++a)
    for (int b = a + 1; b < e.dim; ++b) {
      SparseMatrix lhs(rep.dimV, rep.dimV);
      auto br = e.bracket(a, b);
      for (int g = 0; g < e.dim; ++g) {
        if (br[g].is_zero()) continue;
        SparseMatrix scaled(rep.dimV, rep.dimV);
        for (const auto& entry : rep.theta[g].entries())
          scaled.set(entry.row, entry.col, entry.value * br[g]);
        lhs = lhs + scaled;
      }
      SparseMatrix rhs = rep.theta[a] * rep.theta[b] - rep.theta[b] * rep.theta[a];
      if (lhs != rhs)
        out.push_back({"rep-bracket", "(" + e.labels[a] + ", " + e.labels[b] + ")"});
    }
  return out;
}

Cdga lie_cochain_cdga(const LieAlgebra& e) {
  auto jac = validate_lie(e);
  if (!jac.empty())
    throw PreconditionError("Jacobi identity fails at " + jac.front().witness);
  for (const auto& [key, coeffs] : e.brackets)
    for (const auto& v : coeffs)
      if (v.kind() != ScalarKind::kRational)
        throw PreconditionError("cochain algebra needs rational structure constants");

  std::vector<std::string> duals;
  for (const auto& l : e.labels) duals.push_back(l + "*");
  Cdga a = exterior_cdga(duals);
  const int n = e.dim;
  auto masks = exterior_masks(n);
  std::vector<int> pos(1u << n, 0);
  for (int deg = 0; deg <= n; ++deg)
    for (size_t k = 0; k < masks[deg].size(); ++k) pos[masks[deg][k]] = static_cast<int>(k);

  // d e_g* = - sum_{a<b} c^g_{ab} e_a* e_b*, extended as a degree-1 derivation.
  std::vector<std::vector<std::pair<unsigned, Scalar>>> dgen(n);
  for (const auto& [key, coeffs] : e.brackets) {
    const unsigned m2 = (1u << key.first) | (1u << key.second);
    for (int g = 0; g < n; ++g)
      if (!coeffs[g].is_zero()) dgen[g].emplace_back(m2, -coeffs[g]);
  }
  for (int deg = 1; deg < n; ++deg) {
    SparseMatrix d(static_cast<int>(masks[deg + 1].size()), static_cast<int>(masks[deg].size()));
    for (size_t col = 0; col < masks[deg].size(); ++col) {
      const unsigned s = masks[deg][col];
      int j = 0;
      for (int gen = 0; gen < n; ++gen) {
        if (!(s & (1u << gen))) continue;
        ++j;  // gen is the j-th factor of the monomial
        const unsigned rest = s & ~(1u << gen);
        for (const auto& [m2, c] : dgen[gen]) {
          const int sgn = wedge_sign(rest, m2);
          if (sgn == 0) continue;
          const unsigned target = rest | m2;
          Scalar v = c * Scalar((j % 2 == 1 ? 1 : -1) * sgn);
          d.set(pos[target], static_cast<int>(col), d.at(pos[target], static_cast<int>(col)) + v);
        }
      }
    }
    a.set_diff(deg, std::move(d));
  }
  return a;
}

std::vector<FlatnessFailure> degree_one_commutation_failures(const Cdga& a, const LieAlgebra& e,
                                                             const SparseMatrix& coeffs) {
  if (!a.degree_known(2))
    throw PreconditionError("flatness check needs degree 2 of the algebra");
  if (coeffs.rows() != a.dim(1) || coeffs.cols() != e.dim)
    throw PreconditionError("connection coefficient shape mismatch");
  std::vector<GradedElement> omega;
  for (int g = 0; g < e.dim; ++g) {
    GradedElement col{1, std::vector<Scalar>(a.dim(1), Scalar(0))};
    for (int i = 0; i < a.dim(1); ++i) col.c[i] = coeffs.at(i, g);
    omega.push_back(std::move(col));
  }
  std::vector<GradedElement> mismatch;
  for (int g = 0; g < e.dim; ++g) mismatch.push_back(a.d(omega[g]));
  for (int al = 0; al < e.dim; ++al)
    for (int be = al + 1; be < e.dim; ++be) {
      auto br = e.bracket(al, be);
      bool need = false;
      for (const auto& v : br)
        if (!v.is_zero()) need = true;
      if (!need) continue;
      GradedElement w = a.multiply(omega[al], omega[be]);
      for (int g = 0; g < e.dim; ++g)
        if (!br[g].is_zero()) mismatch[g] = mismatch[g] + scaled(w, br[g]);
    }
  std::vector<FlatnessFailure> failures;
  for (int g = 0; g < e.dim; ++g)
    if (!mismatch[g].is_zero()) failures.push_back({g, mismatch[g]});
  return failures;
}

ConnectionCheck connection_of_hom(const Cdga& a, const LieAlgebra& e,
                                  const SparseMatrix& assignment) {
  ConnectionCheck out{false, FlatConnection{assignment}, {}};
  out.failures = degree_one_commutation_failures(a, e, assignment);
  out.flat = out.failures.empty();
  return out;
}

SparseMatrix hom_of_connection(const Cdga& a, const LieAlgebra& e, const FlatConnection& omega) {
  auto failures = degree_one_commutation_failures(a, e, omega.coeffs);
  if (!failures.empty())
    throw PreconditionError("connection is not flat; d-commutation fails on generator " +
                            e.labels[failures.front().generator]);
  return omega.coeffs;
}

}  // namespace jumploci
