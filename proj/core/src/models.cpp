#include "jumploci/models.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "jumploci/exterior.hpp"

namespace jumploci {

Arrangement make_arrangement(int ambient_dim, std::vector<std::vector<Rational>> normals,
                             std::vector<std::string> labels) {
  Arrangement arr;
  arr.ambient_dim = ambient_dim;
  if (ambient_dim < 1) throw PreconditionError("ambient dimension must be positive");
  for (const auto& nv : normals) {
    if (static_cast<int>(nv.size()) != ambient_dim)
      throw PreconditionError("normal vector length mismatch");
    bool zero = true;
    for (const auto& c : nv)
      if (c != 0) zero = false;
    if (zero) throw PreconditionError("hyperplane normal must be nonzero");
  }
  arr.normals = std::move(normals);
  if (labels.empty())
    for (size_t i = 0; i < arr.normals.size(); ++i)
      labels.push_back("e" + std::to_string(i + 1));
  if (labels.size() != arr.normals.size())
    throw PreconditionError("hyperplane label count mismatch");
  arr.labels = std::move(labels);
  if (arr.normals.size() > 20) throw PreconditionError("arrangement too large (max 20 hyperplanes)");
  return arr;
}

Arrangement cone_arrangement(int ambient_dim, std::vector<std::vector<Rational>> normals,
                             std::vector<Rational> offsets, std::vector<std::string> labels) {
  if (normals.size() != offsets.size())
    throw PreconditionError("offset count mismatch");
  std::vector<std::vector<Rational>> coned;
  for (size_t i = 0; i < normals.size(); ++i) {
    auto nv = normals[i];
    nv.push_back(-offsets[i]);
    coned.push_back(std::move(nv));
  }
  std::vector<Rational> inf(ambient_dim + 1, Rational(0));
  inf.back() = Rational(1);
  coned.push_back(std::move(inf));
  if (!labels.empty()) labels.push_back("h_inf");
  Arrangement arr = make_arrangement(ambient_dim + 1, std::move(coned), std::move(labels));
  arr.metadata = "coned affine arrangement; last coordinate homogenizes, last hyperplane at infinity";
  return arr;
}

namespace {

int subset_rank(const Arrangement& arr, unsigned mask, std::map<unsigned, int>& cache) {
  auto it = cache.find(mask);
  if (it != cache.end()) return it->second;
  std::vector<std::tuple<int, int, Scalar>> t;
  int col = 0;
  for (size_t h = 0; h < arr.normals.size(); ++h) {
    if (!(mask & (1u << h))) continue;
    for (int r = 0; r < arr.ambient_dim; ++r)
      if (arr.normals[h][r] != 0) t.emplace_back(r, col, Scalar(arr.normals[h][r]));
    ++col;
  }
  int rk = rank_exact(SparseMatrix::from_triplets(arr.ambient_dim, col, std::move(t)));
  cache.emplace(mask, rk);
  return rk;
}

void next_combination(std::vector<int>& idx, int n, bool& done) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[i] == n - k + i) --i;
  if (i < 0) {
    done = true;
    return;
  }
  ++idx[i];
  for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
}

unsigned mask_of(const std::vector<int>& subset) {
  unsigned m = 0;
  for (int i : subset) m |= 1u << i;
  return m;
}

// Orlik-Solomon construction state: circuits, broken circuits, and the
// rewriting of arbitrary exterior monomials into the nbc basis.
struct OsBuilder {
  const Arrangement& arr;
  int n, rank;
  std::map<unsigned, int> rank_cache;
  std::vector<std::vector<int>> circs;
  std::vector<std::pair<unsigned, std::vector<int>>> broken;  // (mask of C minus min, C)
  std::map<unsigned, std::map<unsigned, Rational>> cache;

  explicit OsBuilder(const Arrangement& a) : arr(a), n(static_cast<int>(a.normals.size())) {
    rank = subset_rank(arr, n == 32 ? ~0u : ((1u << n) - 1), rank_cache);
    for (int size = 2; size <= rank + 1; ++size) {
      if (size > n) break;
      std::vector<int> idx(size);
      for (int i = 0; i < size; ++i) idx[i] = i;
      bool done = false;
      while (!done) {
        unsigned m = mask_of(idx);
        bool has_smaller = false;
        for (const auto& c : circs)
          if ((m & mask_of(c)) == mask_of(c)) {
            has_smaller = true;
            break;
          }
        if (!has_smaller && subset_rank(arr, m, rank_cache) < size) circs.push_back(idx);
        next_combination(idx, n, done);
      }
    }
    for (const auto& c : circs) {
      unsigned b = mask_of(c) & ~(1u << c.front());
      broken.emplace_back(b, c);
    }
  }

  bool dependent(unsigned mask) {
    return subset_rank(arr, mask, rank_cache) < std::popcount(mask);
  }

  int broken_inside(unsigned mask) const {
    for (size_t i = 0; i < broken.size(); ++i)
      if ((mask & broken[i].first) == broken[i].first) return static_cast<int>(i);
    return -1;
  }

  bool is_nbc(unsigned mask) const { return broken_inside(mask) == -1; }

  // Expand e_mask in the nbc basis.
  const std::map<unsigned, Rational>& reduce(unsigned mask) {
    auto it = cache.find(mask);
    if (it != cache.end()) return it->second;
    std::map<unsigned, Rational> out;
    if (!dependent(mask)) {
      int which = broken_inside(mask);
      if (which == -1) {
        out.emplace(mask, Rational(1));
      } else {
        const auto& [bmask, circuit] = broken[which];
        const unsigned rest = mask & ~bmask;
        // e_B = sum_{j>=1} (-1)^{j-1} e_{C \ c_j} from the circuit relation.
        const int base = wedge_sign(rest, bmask);
        for (size_t j = 1; j < circuit.size(); ++j) {
          unsigned cm = mask_of(circuit) & ~(1u << circuit[j]);
          int s = wedge_sign(rest, cm);
          if (s == 0) continue;
          int coeff = base * s * ((j % 2 == 1) ? 1 : -1);
          for (const auto& [m2, c] : reduce(rest | cm)) {
            auto& acc = out[m2];
            acc += c * coeff;
            if (acc == 0) out.erase(m2);
          }
        }
      }
    }
    return cache.emplace(mask, std::move(out)).first->second;
  }
};

}  // namespace

int arrangement_rank(const Arrangement& arr) {
  std::map<unsigned, int> cache;
  const int n = static_cast<int>(arr.normals.size());
  return subset_rank(arr, n >= 32 ? ~0u : ((1u << n) - 1), cache);
}

std::vector<std::vector<int>> circuits(const Arrangement& arr) {
  OsBuilder b(arr);
  return b.circs;
}

Cdga os_algebra(const Arrangement& arr, int q) {
  OsBuilder b(arr);
  const int cutoff = q < 0 ? b.rank : std::min(q + 1, b.rank);
  const bool zero_above = cutoff == b.rank;

  std::vector<std::vector<unsigned>> nbc(cutoff + 1);
  for (unsigned m = 0; m < (1u << b.n); ++m) {
    const int deg = std::popcount(m);
    if (deg <= cutoff && b.is_nbc(m) && !b.dependent(m)) nbc[deg].push_back(m);
  }
  for (auto& v : nbc) std::sort(v.begin(), v.end());

  std::vector<int> dims;
  std::vector<std::vector<std::string>> labels;
  std::map<unsigned, std::pair<int, int>> pos;
  for (int deg = 0; deg <= cutoff; ++deg) {
    dims.push_back(static_cast<int>(nbc[deg].size()));
    std::vector<std::string> row;
    for (size_t k = 0; k < nbc[deg].size(); ++k) {
      row.push_back(mask_label(nbc[deg][k], arr.labels));
      pos[nbc[deg][k]] = {deg, static_cast<int>(k)};
    }
    labels.push_back(std::move(row));
  }

  Cdga a(GradedBasis(dims, labels), zero_above);
  std::vector<int> offset(cutoff + 1, 0);
  for (int d = 1; d <= cutoff; ++d) offset[d] = offset[d - 1] + dims[d - 1];

  for (int da = 0; da <= cutoff; ++da)
    for (int db = da; db <= cutoff; ++db) {
      const int td = da + db;
      if (td > cutoff) continue;
      for (size_t ia = 0; ia < nbc[da].size(); ++ia)
        for (size_t ib = 0; ib < nbc[db].size(); ++ib) {
          const int ga = offset[da] + static_cast<int>(ia);
          const int gb = offset[db] + static_cast<int>(ib);
          if (ga > gb) continue;
          const unsigned ma = nbc[da][ia], mb = nbc[db][ib];
          std::vector<Scalar> target(dims[td], Scalar(0));
          const int s = wedge_sign(ma, mb);
          if (s != 0)
            for (const auto& [m2, c] : b.reduce(ma | mb))
              target[pos.at(m2).second] = Scalar(c * s);
          a.set_product(da, static_cast<int>(ia), db, static_cast<int>(ib), std::move(target));
        }
    }

  std::vector<std::vector<int>> weights;
  for (int deg = 0; deg <= cutoff; ++deg) weights.emplace_back(dims[deg], deg);
  a.set_weights(std::move(weights));
  return a;
}

Arrangement boolean_arrangement(int n) {
  std::vector<std::vector<Rational>> normals(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) normals[i][i] = Rational(1);
  return make_arrangement(n, std::move(normals));
}

Arrangement pencil_arrangement() {
  return make_arrangement(2, {{Rational(1), Rational(0)},
                              {Rational(0), Rational(1)},
                              {Rational(1), Rational(-1)}});
}

Arrangement braid_a3_arrangement() {
  std::vector<std::vector<Rational>> normals;
  std::vector<std::string> labels;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      std::vector<Rational> nv(4, Rational(0));
      nv[i] = Rational(1);
      nv[j] = Rational(-1);
      normals.push_back(std::move(nv));
      labels.push_back("h" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  return make_arrangement(4, std::move(normals), std::move(labels));
}

LieAlgebra preset_lie(const std::string& name) {
  if (name == "solv2") {
    LieAlgebra e(2, {"x", "y"});
    e.set_bracket(1, 0, {Scalar(1), Scalar(0)});  // [y, x] = x
    return e;
  }
  if (name == "heis3") {
    LieAlgebra e(3, {"x", "y", "z"});
    e.set_bracket(0, 1, {Scalar(0), Scalar(0), Scalar(1)});  // [x, y] = z
    return e;
  }
  if (name.rfind("abelian", 0) == 0) {
    const int n = std::stoi(name.substr(7));
    if (n < 1 || n > 12) throw PreconditionError("abelian preset dimension out of range");
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
    return LieAlgebra(n, std::move(labels));
  }
  throw PreconditionError("unknown Lie preset '" + name + "'");
}

LieRep rank_one_rep() {
  LieRep rep;
  rep.lie = LieAlgebra(1, {"e"});
  rep.dimV = 1;
  rep.theta = {SparseMatrix::identity(1)};
  return rep;
}

LieRep heis3_standard_rep() {
  LieRep rep;
  rep.lie = preset_lie("heis3");
  rep.dimV = 3;
  SparseMatrix tx(3, 3), ty(3, 3), tz(3, 3);
  tx.set(0, 1, Scalar(1));
  ty.set(1, 2, Scalar(1));
  tz.set(0, 2, Scalar(1));
  rep.theta = {tx, ty, tz};
  return rep;
}

Cdga ring_cdga(const RingTables& tables) {
  Cdga a(GradedBasis(tables.dims, tables.labels), /*zero_above=*/true);
  for (const auto& [gi, gj, coeffs] : tables.products) {
    if (gi > gj) throw PreconditionError("ring table products must have i <= j");
    auto locate = [&](int g) {
      int deg = 0, k = g;
      while (deg < static_cast<int>(tables.dims.size()) && k >= tables.dims[deg]) {
        k -= tables.dims[deg];
        ++deg;
      }
      if (deg >= static_cast<int>(tables.dims.size()))
        throw PreconditionError("ring table index out of range");
      return std::make_pair(deg, k);
    };
    auto [da, ia] = locate(gi);
    auto [db, ib] = locate(gj);
    a.set_product(da, ia, db, ib, coeffs);
  }
  std::vector<std::vector<int>> weights;
  for (size_t deg = 0; deg < tables.dims.size(); ++deg)
    weights.emplace_back(tables.dims[deg], static_cast<int>(deg));
  a.set_weights(std::move(weights));
  auto violations = validate_cdga(a);
  if (!violations.empty()) {
    std::string msg = "inconsistent ring tables:";
    for (const auto& v : violations) msg += " [" + v.check + " at " + v.witness + "]";
    throw PreconditionError(msg);
  }
  return a;
}

BigradedReport bigraded_weight_check(
    const Cdga& a, const std::vector<std::vector<std::pair<int, int>>>& bidegrees) {
  BigradedReport rep;
  const int top = a.top_degree();
  if (static_cast<int>(bidegrees.size()) != top + 1)
    throw PreconditionError("bidegree table degree count mismatch");
  for (int deg = 0; deg <= top; ++deg)
    if (static_cast<int>(bidegrees[deg].size()) != a.dim(deg))
      throw PreconditionError("bidegree table size mismatch in degree " + std::to_string(deg));

  for (int deg = 0; deg <= top; ++deg) {
    rep.induced_weights.emplace_back();
    for (int k = 0; k < a.dim(deg); ++k) {
      const auto& [p, l] = bidegrees[deg][k];
      rep.induced_weights.back().push_back(p + 2 * l);
      if (p < 0 || l < 0 || p + l != deg)
        rep.violations.push_back({"bidegree-total", a.label(deg, k)});
      if (deg == 1 && p + 2 * l < 1)
        rep.violations.push_back({"weight-positivity", a.label(deg, k)});
    }
  }

  for (int da = 0; da <= top; ++da)
    for (int db = da; db <= top; ++db) {
      if (!a.degree_known(da + db) || da + db > top) continue;
      for (int ia = 0; ia < a.dim(da); ++ia)
        for (int ib = 0; ib < a.dim(db); ++ib) {
          auto prod = a.product(da, ia, db, ib);
          const int p = bidegrees[da][ia].first + bidegrees[db][ib].first;
          const int l = bidegrees[da][ia].second + bidegrees[db][ib].second;
          for (int k = 0; k < static_cast<int>(prod.size()); ++k)
            if (!prod[k].is_zero() && bidegrees[da + db][k] != std::make_pair(p, l))
              rep.violations.push_back(
                  {"bidegree-multiplicativity",
                   "(" + a.label(da, ia) + ", " + a.label(db, ib) + ") -> " + a.label(da + db, k)});
        }
    }

  for (int deg = 0; deg < top; ++deg) {
    const SparseMatrix d = a.diff(deg);
    for (const auto& e : d.entries()) {
      const auto& src = bidegrees[deg][e.col];
      const auto& dst = bidegrees[deg + 1][e.row];
      if (dst.first != src.first + 2 || dst.second != src.second - 1)
        rep.violations.push_back(
            {"bidegree-differential", a.label(deg, e.col) + " -> " + a.label(deg + 1, e.row)});
    }
  }

  if (a.has_weights())
    for (int deg = 0; deg <= top; ++deg)
      for (int k = 0; k < a.dim(deg); ++k)
        if (a.weight(deg, k) != rep.induced_weights[deg][k])
          rep.violations.push_back({"weight-mismatch", a.label(deg, k)});

  return rep;
}

Cdga fixture_cdga(const std::string& name) {
  if (name == "torus2") {
    Cdga a = exterior_cdga({"a", "b"});
    a.set_weights({{0}, {1, 1}, {2}});
    return a;
  }
  if (name == "pencil3") return os_algebra(pencil_arrangement());
  if (name == "solv2") return lie_cochain_cdga(preset_lie("solv2"));
  if (name == "heis3") return lie_cochain_cdga(preset_lie("heis3"));
  throw PreconditionError("unknown cdga fixture '" + name + "'");
}

Presentation fixture_presentation(const std::string& name) {
  if (name == "z2")
    return make_presentation(2, {{1, 2, -1, -2}}, {"a", "b"});
  if (name == "pencil3")
    return make_presentation(3, {{1, 2, 3, -1, -3, -2}, {2, 3, 1, -2, -1, -3}},
                             {"x1", "x2", "x3"});
  if (name == "free2") return make_presentation(2, {}, {"a", "b"});
  throw PreconditionError("unknown presentation fixture '" + name + "'");
}

}  // namespace jumploci
