#include "jumploci/cdga.hpp"

#include <algorithm>
#include <sstream>

namespace jumploci {

GradedBasis::GradedBasis(std::vector<int> d, std::vector<std::vector<std::string>> l)
    : dims(std::move(d)), labels(std::move(l)) {
  if (dims.empty()) throw PreconditionError("graded basis needs at least degree 0");
  for (int n : dims)
    if (n < 0) throw PreconditionError("negative graded dimension");
  if (dims[0] < 1) throw PreconditionError("degree-0 dimension must be at least 1");
  if (labels.empty()) {
    labels.resize(dims.size());
    for (size_t deg = 0; deg < dims.size(); ++deg)
      for (int k = 0; k < dims[deg]; ++k) {
        if (deg == 0 && dims[0] == 1)
          labels[deg].push_back("1");
        else
          labels[deg].push_back("b" + std::to_string(deg) + "_" + std::to_string(k + 1));
      }
  }
  if (labels.size() != dims.size()) throw PreconditionError("label shape mismatch");
  for (size_t deg = 0; deg < dims.size(); ++deg)
    if (static_cast<int>(labels[deg].size()) != dims[deg])
      throw PreconditionError("label shape mismatch in degree " + std::to_string(deg));
}

int GradedBasis::total() const {
  int n = 0;
  for (int d : dims) n += d;
  return n;
}

int GradedBasis::offset(int deg) const {
  int n = 0;
  for (int i = 0; i < deg; ++i) n += dim(i);
  return n;
}

GradedElement operator+(const GradedElement& a, const GradedElement& b) {
  if (a.degree != b.degree || a.c.size() != b.c.size())
    throw PreconditionError("graded element sum shape mismatch");
  GradedElement r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
  return r;
}

GradedElement operator-(const GradedElement& a, const GradedElement& b) {
  if (a.degree != b.degree || a.c.size() != b.c.size())
    throw PreconditionError("graded element difference shape mismatch");
  GradedElement r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
  return r;
}

GradedElement scaled(const GradedElement& a, const Scalar& f) {
  GradedElement r = a;
  for (auto& v : r.c) v = v * f;
  return r;
}

Cdga::Cdga(GradedBasis basis, bool zero_above)
    : basis_(std::move(basis)), zero_above_(zero_above) {
  diffs_.resize(std::max(0, basis_.top_degree()));
  for (int deg = 0; deg < basis_.top_degree(); ++deg)
    diffs_[deg] = SparseMatrix(basis_.dim(deg + 1), basis_.dim(deg));
}

int Cdga::dim(int deg) const {
  if (deg < 0) return 0;
  if (deg > top_degree()) {
    if (zero_above_) return 0;
    throw PreconditionError("degree " + std::to_string(deg) + " not represented");
  }
  return basis_.dim(deg);
}

const std::string& Cdga::label(int deg, int k) const {
  if (deg < 0 || deg > top_degree() || k < 0 || k >= basis_.dim(deg))
    throw PreconditionError("basis label out of range");
  return basis_.labels[deg][k];
}

int Cdga::global(int deg, int k) const {
  if (deg < 0 || deg > top_degree() || k < 0 || k >= basis_.dim(deg))
    throw PreconditionError("basis index out of range");
  return basis_.offset(deg) + k;
}

std::pair<int, int> Cdga::locate(int gi) const {
  int deg = 0;
  while (gi >= basis_.dim(deg)) {
    gi -= basis_.dim(deg);
    ++deg;
    if (deg > top_degree()) throw PreconditionError("global index out of range");
  }
  return {deg, gi};
}

void Cdga::set_diff(int deg, SparseMatrix m) {
  if (deg < 0 || deg >= top_degree())
    throw PreconditionError("differential degree out of range");
  if (m.rows() != basis_.dim(deg + 1) || m.cols() != basis_.dim(deg))
    throw PreconditionError("differential shape mismatch in degree " + std::to_string(deg));
  diffs_[deg] = std::move(m);
}

SparseMatrix Cdga::diff(int deg) const {
  if (deg < 0) return SparseMatrix(basis_.dim(0), 0);
  if (deg < top_degree()) return diffs_[deg];
  if (deg == top_degree() || zero_above_) return SparseMatrix(dim(deg + 1), dim(deg));
  throw PreconditionError("differential out of represented range");
}

void Cdga::set_product(int deg_a, int ia, int deg_b, int ib, std::vector<Scalar> target) {
  const int td = deg_a + deg_b;
  if (!degree_known(td)) throw PreconditionError("product lands in unknown degree");
  if (static_cast<int>(target.size()) != dim(td))
    throw PreconditionError("product coefficient size mismatch");
  int ga = global(deg_a, ia), gb = global(deg_b, ib);
  if (ga <= gb) {
    products_[{ga, gb}] = std::move(target);
  } else {
    // store b*a = (-1)^{|a||b|} a*b
    if ((deg_a * deg_b) % 2 != 0)
      for (auto& v : target) v = -v;
    products_[{gb, ga}] = std::move(target);
  }
}

void Cdga::set_product_asserted(int deg_a, int ia, int deg_b, int ib, std::vector<Scalar> target) {
  const int td = deg_a + deg_b;
  if (!degree_known(td)) throw PreconditionError("product lands in unknown degree");
  if (static_cast<int>(target.size()) != dim(td))
    throw PreconditionError("product coefficient size mismatch");
  asserted_[{global(deg_a, ia), global(deg_b, ib)}] = std::move(target);
}

std::vector<Scalar> Cdga::product(int deg_a, int ia, int deg_b, int ib) const {
  const int td = deg_a + deg_b;
  if (!degree_known(td))
    throw PreconditionError("product lands in unknown degree " + std::to_string(td));
  const int n = dim(td);
  std::vector<Scalar> out(n, Scalar(0));
  if (n == 0) return out;
  int ga = global(deg_a, ia), gb = global(deg_b, ib);
  const bool flip = ga > gb;
  auto it = products_.find(flip ? std::make_pair(gb, ga) : std::make_pair(ga, gb));
  if (it != products_.end()) {
    out = it->second;
    if (flip && (deg_a * deg_b) % 2 != 0)
      for (auto& v : out) v = -v;
    return out;
  }
  // Unit products default to the identity; everything else defaults to zero.
  if (deg_a == 0 && ia == 0) {
    out[ib] = Scalar(1);
    return out;
  }
  if (deg_b == 0 && ib == 0) {
    out[ia] = Scalar(1);
    return out;
  }
  return out;
}

GradedElement Cdga::multiply(const GradedElement& x, const GradedElement& y) const {
  if (static_cast<int>(x.c.size()) != dim(x.degree) ||
      static_cast<int>(y.c.size()) != dim(y.degree))
    throw PreconditionError("element coordinate length does not match its degree");
  const int td = x.degree + y.degree;
  if (!degree_known(td)) throw PreconditionError("product lands in unknown degree");
  GradedElement out{td, std::vector<Scalar>(dim(td), Scalar(0))};
  for (int i = 0; i < static_cast<int>(x.c.size()); ++i) {
    if (x.c[i].is_zero()) continue;
    for (int j = 0; j < static_cast<int>(y.c.size()); ++j) {
      if (y.c[j].is_zero()) continue;
      std::vector<Scalar> p = product(x.degree, i, y.degree, j);
      const Scalar f = x.c[i] * y.c[j];
      for (size_t k = 0; k < p.size(); ++k)
        if (!p[k].is_zero()) out.c[k] = out.c[k] + f * p[k];
    }
  }
  return out;
}

GradedElement Cdga::d(const GradedElement& x) const {
  SparseMatrix m = diff(x.degree);
  return GradedElement{x.degree + 1, matvec(m, x.c)};
}

GradedElement Cdga::basis_element(int deg, int k) const {
  if (k < 0 || k >= dim(deg)) throw PreconditionError("basis element out of range");
  GradedElement e{deg, std::vector<Scalar>(dim(deg), Scalar(0))};
  e.c[k] = Scalar(1);
  return e;
}

void Cdga::set_weights(std::vector<std::vector<int>> w) {
  if (static_cast<int>(w.size()) != top_degree() + 1)
    throw PreconditionError("weight table degree count mismatch");
  for (int deg = 0; deg <= top_degree(); ++deg)
    if (static_cast<int>(w[deg].size()) != basis_.dim(deg))
      throw PreconditionError("weight table size mismatch in degree " + std::to_string(deg));
  weights_ = std::move(w);
}

const std::vector<std::vector<int>>& Cdga::weights() const {
  if (!weights_) throw PreconditionError("no weight data present");
  return *weights_;
}

int Cdga::weight(int deg, int k) const {
  const auto& w = weights();
  if (deg < 0 || deg > top_degree() || k < 0 || k >= basis_.dim(deg))
    throw PreconditionError("weight index out of range");
  return w[deg][k];
}

namespace {

std::string pair_witness(const Cdga& a, int da, int ia, int db, int ib) {
  return "(" + a.label(da, ia) + ", " + a.label(db, ib) + ")";
}

void check_weight_tables(const Cdga& a, std::vector<Violation>& out) {
  if (!a.has_weights()) return;
  const int top = a.top_degree();
  for (int da = 0; da <= top; ++da)
    for (int db = da; db <= top; ++db) {
      if (!a.degree_known(da + db)) continue;
      if (da + db > top && a.zero_above()) continue;
      for (int ia = 0; ia < a.dim(da); ++ia)
        for (int ib = 0; ib < a.dim(db); ++ib) {
          auto p = a.product(da, ia, db, ib);
          const int w = a.weight(da, ia) + a.weight(db, ib);
          for (int k = 0; k < static_cast<int>(p.size()); ++k)
            if (!p[k].is_zero() && a.weight(da + db, k) != w)
              out.push_back({"weight-multiplicativity",
                             pair_witness(a, da, ia, db, ib) + " -> " + a.label(da + db, k)});
        }
    }
  for (int deg = 0; deg < top; ++deg) {
    const SparseMatrix m = a.diff(deg);
    for (const auto& e : m.entries())
      if (!e.value.is_zero() && a.weight(deg + 1, e.row) != a.weight(deg, e.col))
        out.push_back(
            {"weight-differential", a.label(deg, e.col) + " -> " + a.label(deg + 1, e.row)});
  }
}

}  // namespace

std::vector<Violation> validate_cdga(const Cdga& a) {
  std::vector<Violation> out;
  const int top = a.top_degree();

  if (a.dim(0) != 1)
    out.push_back({"connectedness", "dim A^0 = " + std::to_string(a.dim(0))});

  // Unit acts as identity.
  if (a.dim(0) >= 1) {
    for (int deg = 0; deg <= top; ++deg)
      for (int k = 0; k < a.dim(deg); ++k) {
        if (!a.degree_known(deg)) continue;
        auto left = a.product(0, 0, deg, k);
        auto right = a.product(deg, k, 0, 0);
        bool ok_l = true, ok_r = true;
        for (int j = 0; j < a.dim(deg); ++j) {
          const Scalar want = (j == k) ? Scalar(1) : Scalar(0);
          if (!(left[j] == want)) ok_l = false;
          if (!(right[j] == want)) ok_r = false;
        }
        if (!ok_l || !ok_r) out.push_back({"unit", a.label(deg, k)});
      }
  }

  // Graded commutativity: asserted redundant products against the derived
  // mirror, and odd-degree squares.
  for (const auto& [key, coeffs] : a.asserted_products()) {
    // locate global indices
    auto loc = [&](int gi) {
      int deg = 0, k = gi;
      while (k >= a.dim(deg)) {
        k -= a.dim(deg);
        ++deg;
      }
      return std::make_pair(deg, k);
    };
    auto [da, ia] = loc(key.first);
    auto [db, ib] = loc(key.second);
    auto derived = a.product(da, ia, db, ib);
    bool same = derived.size() == coeffs.size();
    for (size_t k = 0; same && k < coeffs.size(); ++k)
      if (!(derived[k] == coeffs[k])) same = false;
    if (!same)
      out.push_back({"graded-commutativity", pair_witness(a, da, ia, db, ib)});
  }
  for (int deg = 1; deg <= top; deg += 2) {
    if (!a.degree_known(2 * deg)) continue;
    for (int k = 0; k < a.dim(deg); ++k) {
      auto sq = a.product(deg, k, deg, k);
      for (const auto& v : sq)
        if (!v.is_zero()) {
          out.push_back({"graded-commutativity",
                         "(" + a.label(deg, k) + ", " + a.label(deg, k) + ")"});
          break;
        }
    }
  }

  // Associativity on basis triples whose products stay in known degrees.
  for (int da = 0; da <= top; ++da)
    for (int db = 0; db <= top; ++db)
      for (int dc = 0; dc <= top; ++dc) {
        if (!a.degree_known(da + db) || !a.degree_known(db + dc) ||
            !a.degree_known(da + db + dc))
          continue;
        for (int ia = 0; ia < a.dim(da); ++ia)
          for (int ib = 0; ib < a.dim(db); ++ib)
            for (int ic = 0; ic < a.dim(dc); ++ic) {
              GradedElement x = a.basis_element(da, ia);
              GradedElement y = a.basis_element(db, ib);
              GradedElement z = a.basis_element(dc, ic);
              GradedElement lhs = a.multiply(a.multiply(x, y), z);
              GradedElement rhs = a.multiply(x, a.multiply(y, z));
              if (!(lhs - rhs).is_zero())
                out.push_back({"associativity",
                               "(" + a.label(da, ia) + ", " + a.label(db, ib) + ", " +
                                   a.label(dc, ic) + ")"});
            }
      }

  // d^2 = 0 wherever both maps are known.
  for (int deg = 0; deg + 1 <= top; ++deg) {
    if (!a.degree_known(deg + 2)) continue;
    SparseMatrix dd = a.diff(deg + 1) * a.diff(deg);
    if (dd.nnz() != 0) {
      for (const auto& e : dd.entries()) {
        out.push_back({"d-squared", a.label(deg, e.col)});
        break;
      }
    }
  }

  // Leibniz rule d(xy) = dx y + (-1)^{|x|} x dy.
  for (int da = 0; da <= top; ++da)
    for (int db = 0; db <= top; ++db) {
      if (!a.degree_known(da + db) || !a.degree_known(da + db + 1) ||
          !a.degree_known(da + 1) || !a.degree_known(db + 1))
        continue;
      for (int ia = 0; ia < a.dim(da); ++ia)
        for (int ib = 0; ib < a.dim(db); ++ib) {
          GradedElement x = a.basis_element(da, ia);
          GradedElement y = a.basis_element(db, ib);
          GradedElement lhs = a.d(a.multiply(x, y));
          GradedElement rhs = a.multiply(a.d(x), y) +
                              scaled(a.multiply(x, a.d(y)), Scalar(da % 2 == 0 ? 1 : -1));
          if (!(lhs - rhs).is_zero())
            out.push_back({"leibniz", pair_witness(a, da, ia, db, ib)});
        }
    }

  check_weight_tables(a, out);
  return out;
}

WeightReport validate_weights(const Cdga& a) {
  WeightReport rep;
  if (!a.has_weights()) {
    rep.violations.push_back({"weights-missing", "no weight data present"});
    return rep;
  }
  check_weight_tables(a, rep.violations);
  rep.positive = true;
  if (a.top_degree() >= 1)
    for (int k = 0; k < a.dim(1); ++k)
      if (a.weight(1, k) < 1) rep.positive = false;
  return rep;
}

std::vector<int> cohomology_dims(const Cdga& a, int q) {
  if (q < 0) throw PreconditionError("negative truncation degree");
  if (!a.degree_known(q + 1))
    throw PreconditionError("incomplete input: degree " + std::to_string(q + 1) +
                            " neither stored nor declared zero");
  std::vector<int> b;
  int prev_rank = 0;  // rank of d_{-1} = 0
  for (int i = 0; i <= q; ++i) {
    SparseMatrix di = a.diff(i);
    int r = rank_exact(di);
    b.push_back(a.dim(i) - r - prev_rank);
    prev_rank = r;
  }
  return b;
}

GradedElement apply_weight_action(const Cdga& a, const Rational& t, const GradedElement& x) {
  if (!a.has_weights()) throw PreconditionError("weight action needs weight data");
  if (t == 0) {
    WeightReport rep = validate_weights(a);
    if (!rep.positive)
      throw PreconditionError("weight action has a pole at t = 0 without positive weights");
  }
  GradedElement out = x;
  for (int k = 0; k < static_cast<int>(x.c.size()); ++k) {
    if (x.c[k].is_zero()) continue;
    const int w = a.weight(x.degree, k);
    if (t == 0) {
      if (w < 0)
        throw PreconditionError("weight action pole: negative weight at t = 0");
      if (w > 0) out.c[k] = Scalar(0);
      continue;
    }
    Rational f(1);
    for (int j = 0; j < std::abs(w); ++j) f *= t;
    if (w < 0) f = 1 / f;
    out.c[k] = out.c[k] * Scalar(f);
  }
  return out;
}

}  // namespace jumploci
