// Command-line front end: every subcommand runs one operation family and
// prints a deterministic JSON report {command, config, result, diagnostics}.
//
// Exit statuses: 0 success, 2 malformed input, 3 precondition violation,
// 4 internal error.

#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <jumploci/aomoto.hpp>
#include <jumploci/cdga.hpp>
#include <jumploci/errors.hpp>
#include <jumploci/exterior.hpp>
#include <jumploci/group_side.hpp>
#include <jumploci/io_json.hpp>
#include <jumploci/lie.hpp>
#include <jumploci/models.hpp>
#include <jumploci/multipoly.hpp>
#include <jumploci/resonance.hpp>
#include <jumploci/version.hpp>

namespace jl = jumploci;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw jl::ParseError("cannot open input file", path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string strip(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<jl::Rational> parse_rational_list(const std::string& s) {
  std::vector<jl::Rational> out;
  if (strip(s).empty()) return out;
  for (const auto& part : split(s, ',')) out.push_back(jl::parse_rational(strip(part)));
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& r : parse_rational_list(s)) {
    if (r.get_den() != 1) throw jl::ParseError("expected an integer", jl::rational_str(r));
    out.push_back(static_cast<int>(r.get_num().get_si()));
  }
  return out;
}

// "a,b,c;d,e,f" -> rows of scalars; a bare comma list is read as a single
// column when cols == 1.
jl::SparseMatrix parse_matrix(const std::string& text, int rows, int cols,
                              const std::string& what) {
  std::vector<std::vector<jl::Scalar>> m;
  const auto groups = split(text, ';');
  if (static_cast<int>(groups.size()) == 1 && cols == 1 && rows != 1) {
    for (const auto& e : split(groups[0], ','))
      m.push_back({jl::parse_scalar(strip(e))});
  } else {
    for (const auto& g : groups) {
      std::vector<jl::Scalar> row;
      for (const auto& e : split(g, ',')) row.push_back(jl::parse_scalar(strip(e)));
      m.push_back(std::move(row));
    }
  }
  if (static_cast<int>(m.size()) != rows)
    throw jl::ParseError(what + " needs " + std::to_string(rows) + " rows, got " +
                             std::to_string(m.size()),
                         text);
  std::vector<std::tuple<int, int, jl::Scalar>> trip;
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(m[i].size()) != cols)
      throw jl::ParseError(what + " row " + std::to_string(i + 1) + " needs " +
                               std::to_string(cols) + " entries",
                           text);
    for (int j = 0; j < cols; ++j)
      if (!m[i][j].is_zero()) trip.emplace_back(i, j, std::move(m[i][j]));
  }
  return jl::SparseMatrix::from_triplets(rows, cols, std::move(trip));
}

// Laurent polynomial over variables t1..tn:
//   expr := ['-'] term (('+'|'-') term)* ; term := factor ('*' factor)*
//   factor := rational | t<k> ['^' ['-'] digits]
jl::LaurentPoly parse_laurent(const std::string& text, int nvars) {
  size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto here = [&] { return "character " + std::to_string(pos + 1) + " of \"" + text + "\""; };
  auto digits = [&] {
    skip();
    std::string d;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      d += text[pos++];
    if (d.empty()) throw jl::ParseError("expected digits", here());
    return d;
  };
  std::map<std::vector<long>, jl::Rational> acc;
  bool negated = false;
  skip();
  if (pos < text.size() && text[pos] == '-') {
    negated = true;
    ++pos;
  }
  while (true) {
    jl::Rational coeff(1);
    std::vector<long> expo(nvars, 0);
    while (true) {
      skip();
      if (pos >= text.size()) throw jl::ParseError("expected a factor", here());
      if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
        std::string num = digits();
        skip();
        if (pos < text.size() && text[pos] == '/') {
          ++pos;
          num += "/" + digits();
        }
        coeff *= jl::parse_rational(num);
      } else if (text[pos] == 't') {
        ++pos;
        const long k = std::stol(digits());
        if (k < 1 || k > nvars)
          throw jl::ParseError("variable t" + std::to_string(k) + " out of range", here());
        long e = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip();
          bool eneg = false;
          if (pos < text.size() && text[pos] == '-') {
            eneg = true;
            ++pos;
          }
          e = std::stol(digits());
          if (eneg) e = -e;
        }
        expo[k - 1] += e;
      } else {
        throw jl::ParseError("expected a rational or a variable t<k>", here());
      }
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    acc[expo] += negated ? -coeff : coeff;
    skip();
    if (pos >= text.size()) break;
    if (text[pos] == '+') {
      negated = false;
      ++pos;
    } else if (text[pos] == '-') {
      negated = true;
      ++pos;
    } else {
      throw jl::ParseError("expected + or - between terms", here());
    }
  }
  jl::LaurentPoly f;
  f.nvars = nvars;
  for (auto& [e, c] : acc) {
    if (c == 0) continue;
    f.support.push_back(e);
    f.coeffs.push_back(c);
  }
  return f;
}

struct InputMeta {
  std::string source;
  std::string kind;  // "fixture" or "file"
  std::string digest;
};

ordered_json meta_json(const InputMeta& m) {
  return ordered_json{{"source", m.source}, {"kind", m.kind}, {"digest", m.digest}};
}

std::pair<jl::Cdga, InputMeta> load_cdga(const std::string& spec) {
  for (const char* name : {"torus2", "pencil3", "solv2", "heis3"})
    if (spec == name) {
      jl::Cdga a = jl::fixture_cdga(spec);
      InputMeta meta{spec, "fixture", jl::fnv1a64_hex(jl::cdga_json(a))};
      return {std::move(a), std::move(meta)};
    }
  const std::string text = read_file(spec);
  return {jl::parse_cdga(text), InputMeta{spec, "file", jl::fnv1a64_hex(text)}};
}

std::pair<jl::LieAlgebra, InputMeta> load_lie(const std::string& spec) {
  if (spec == "solv2" || spec == "heis3" || spec.rfind("abelian", 0) == 0) {
    jl::LieAlgebra e = jl::preset_lie(spec);
    InputMeta meta{spec, "fixture", jl::fnv1a64_hex(jl::lie_json(e))};
    return {std::move(e), std::move(meta)};
  }
  const std::string text = read_file(spec);
  return {jl::parse_lie(text), InputMeta{spec, "file", jl::fnv1a64_hex(text)}};
}

std::pair<jl::Arrangement, InputMeta> load_arrangement(const std::string& spec) {
  jl::Arrangement arr;
  bool preset = true;
  if (spec == "pencil") {
    arr = jl::pencil_arrangement();
  } else if (spec == "braid_a3") {
    arr = jl::braid_a3_arrangement();
  } else if (spec.rfind("boolean", 0) == 0) {
    try {
      arr = jl::boolean_arrangement(std::stoi(spec.substr(7)));
    } catch (const std::logic_error&) {
      throw jl::ParseError("malformed arrangement name", spec);
    }
  } else {
    preset = false;
  }
  if (preset) {
    InputMeta meta{spec, "fixture", jl::fnv1a64_hex(jl::arrangement_json(arr))};
    return {std::move(arr), std::move(meta)};
  }
  const std::string text = read_file(spec);
  return {jl::parse_arrangement(text), InputMeta{spec, "file", jl::fnv1a64_hex(text)}};
}

std::pair<jl::Presentation, InputMeta> load_presentation(const std::string& spec) {
  for (const char* name : {"z2", "pencil3", "free2"})
    if (spec == name) {
      jl::Presentation p = jl::fixture_presentation(spec);
      InputMeta meta{spec, "fixture", jl::fnv1a64_hex(jl::presentation_json(p))};
      return {std::move(p), std::move(meta)};
    }
  const std::string text = read_file(spec);
  return {jl::parse_presentation(text), InputMeta{spec, "file", jl::fnv1a64_hex(text)}};
}

std::pair<jl::LieRep, InputMeta> load_theta(const std::string& spec) {
  jl::LieRep rep;
  if (spec == "id") {
    rep = jl::rank_one_rep();
  } else if (spec == "heis3") {
    rep = jl::heis3_standard_rep();
  } else {
    throw jl::ParseError("unknown representation (expected id or heis3)", spec);
  }
  return {std::move(rep), InputMeta{spec, "fixture", jl::fnv1a64_hex("theta:" + spec)}};
}

int auto_degree_bound(const jl::Cdga& a, int q) {
  if (q >= 0) return q;
  return a.zero_above() ? a.top_degree() : a.top_degree() - 1;
}

ordered_json violations_json(const std::vector<jl::Violation>& vs) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : vs) arr.push_back(ordered_json{{"check", v.check}, {"witness", v.witness}});
  return arr;
}

ordered_json rational_list_json(const std::vector<jl::Rational>& rs) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rs) arr.push_back(jl::rational_str(r));
  return arr;
}

std::string linear_form_str(const jl::SparseMatrix& eqs, int row,
                            const std::vector<std::string>& names) {
  jl::MultiPoly p = jl::MultiPoly::constant(static_cast<int>(names.size()), jl::Rational(0));
  for (const auto& en : eqs.entries())
    if (en.row == row)
      p = p + jl::MultiPoly::variable(static_cast<int>(names.size()), en.col)
                  .scaled(en.value.as_rational());
  return p.str(names);
}

ordered_json subspace_json(const jl::LinearSubspaceQ& s, const std::vector<std::string>& names) {
  ordered_json eqs = ordered_json::array();
  for (int r = 0; r < s.equations.rows(); ++r) eqs.push_back(linear_form_str(s.equations, r, names));
  return ordered_json{{"dim", s.dim()}, {"codim", s.codim()}, {"equations", eqs}};
}

void emit(const ordered_json& report, const std::string& output_path) {
  const std::string text = report.dump(2) + "\n";
  if (output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw jl::PreconditionError("cannot write output file: " + output_path);
    out << text;
  }
}

ordered_json make_report(const std::string& command, ordered_json config, ordered_json result,
                         ordered_json diagnostics) {
  return ordered_json{{"command", command},
                      {"config", std::move(config)},
                      {"result", std::move(result)},
                      {"diagnostics", std::move(diagnostics)}};
}

ordered_json base_config(int threads) {
  return ordered_json{{"version", jl::kVersion}, {"threads", threads}};
}

ordered_json exact_diagnostics() { return ordered_json{{"arithmetic", "exact"}}; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cohomology jump loci: Aomoto complexes, resonance varieties, "
               "Orlik-Solomon algebras, Fox calculus"};
  app.require_subcommand(1);

  std::string output;
  int threads = 1;
  std::string cdga_spec, lie_spec = "abelian1", arr_spec, pres_spec, theta_spec = "id";
  std::string omega_str, ts_str = "0,1,2", nu_str, point_str, rho_str, dict_str;
  std::string poly_str, weights_str, matrix_str, mode_str = "plain", emit_path;
  int q = -1, deg_i = 1, depth = 1, samples = 25;
  long budget = 200000;
  int fox_depth = -1;
  unsigned long long seed = 12345;
  std::string germ_str = "1/100,1/50", tsamples_str = "1/2,1,2";
  jl::NumericTolerances tol;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output", output, "write the JSON report to this file instead of stdout");
    sub->add_option("--threads", threads, "worker cap, recorded in the report")
        ->capture_default_str();
  };

  auto* sc_validate = app.add_subcommand("validate", "check the axioms of one input object");
  sc_validate->add_option("--cdga", cdga_spec, "cdga file or fixture torus2|pencil3|solv2|heis3");
  sc_validate->add_option("--lie", lie_spec, "lie file or preset solv2|heis3|abelian<n>");
  sc_validate->add_option("--arrangement", arr_spec,
                          "arrangement file or preset pencil|braid_a3|boolean<n>");
  sc_validate->add_option("--presentation", pres_spec,
                          "presentation file or fixture z2|pencil3|free2");
  add_common(sc_validate);

  auto* sc_betti = app.add_subcommand("betti", "twisted Betti numbers of a flat connection");
  sc_betti->add_option("--cdga", cdga_spec)->required();
  sc_betti->add_option("--theta", theta_spec, "representation: id (rank one) or heis3")
      ->capture_default_str();
  sc_betti->add_option("--omega", omega_str, "connection coefficients, rows over degree 1")
      ->required();
  sc_betti->add_option("-q,--degree-bound", q, "compute beta_0..beta_q (default: all stored)");
  add_common(sc_betti);

  auto* sc_mc = app.add_subcommand("mc", "flatness residual of a connection");
  sc_mc->add_option("--cdga", cdga_spec)->required();
  sc_mc->add_option("--lie", lie_spec, "target lie algebra")->capture_default_str();
  sc_mc->add_option("--omega", omega_str)->required();
  add_common(sc_mc);

  auto* sc_jump = app.add_subcommand("jumploci", "determinantal equations of a jump locus");
  sc_jump->add_option("--cdga", cdga_spec)->required();
  sc_jump->add_option("--theta", theta_spec)->capture_default_str();
  sc_jump->add_option("-i,--degree", deg_i)->capture_default_str();
  sc_jump->add_option("-r,--depth", depth)->capture_default_str();
  sc_jump->add_option("--point", point_str, "also evaluate membership at this rational point");
  add_common(sc_jump);

  auto* sc_scan = app.add_subcommand("scan", "Betti numbers along a scaled line of connections");
  sc_scan->add_option("--cdga", cdga_spec)->required();
  sc_scan->add_option("--theta", theta_spec)->capture_default_str();
  sc_scan->add_option("--omega", omega_str)->required();
  sc_scan->add_option("--ts", ts_str, "comma list of rational scale factors")
      ->capture_default_str();
  sc_scan->add_option("-i,--degree", deg_i)->capture_default_str();
  sc_scan->add_option("--mode", mode_str, "plain (t.omega) or weight (weight action)")
      ->capture_default_str();
  add_common(sc_scan);

  auto* sc_comp =
      app.add_subcommand("components", "maximal linear subspaces inside a rank-one jump locus");
  sc_comp->add_option("--cdga", cdga_spec)->required();
  sc_comp->add_option("-i,--degree", deg_i)->capture_default_str();
  sc_comp->add_option("-r,--depth", depth)->capture_default_str();
  sc_comp->add_option("--budget", budget, "evaluation budget for the search")
      ->capture_default_str();
  add_common(sc_comp);

  auto* sc_wetc = app.add_subcommand("wetc", "weighted exponential tangent cone of {f = 0}");
  sc_wetc->add_option("--poly", poly_str, "Laurent polynomial in t1..tn, e.g. \"t1*t2-1\"")
      ->required();
  sc_wetc->add_option("--weights", weights_str, "positive integer weights, one per variable")
      ->required();
  sc_wetc->add_option("--matrix", matrix_str, "change-of-frame matrix M (default identity)");
  add_common(sc_wetc);

  auto* sc_fndeg = app.add_subcommand("fndeg", "spectral-sequence degeneration along a direction");
  sc_fndeg->add_option("--cdga", cdga_spec)->required();
  sc_fndeg->add_option("--nu", nu_str, "degree-1 direction, comma list of rationals")->required();
  sc_fndeg->add_option("-q,--degree-bound", q);
  add_common(sc_fndeg);

  auto* sc_os = app.add_subcommand("os", "Orlik-Solomon algebra of an arrangement");
  sc_os->add_option("--arrangement", arr_spec)->required();
  sc_os->add_option("-q,--truncate", q, "store degrees through min(q+1, rank); -1 keeps all");
  sc_os->add_option("--emit-cdga", emit_path, "also write the algebra as a cdga JSON file");
  add_common(sc_os);

  auto* sc_fox = app.add_subcommand("foxbetti", "twisted Betti numbers of a presentation");
  sc_fox->add_option("--presentation", pres_spec)->required();
  sc_fox->add_option("--rho", rho_str, "rank-one character: one scalar per generator")
      ->required();
  sc_fox->add_option("-i,--degree", deg_i)->capture_default_str();
  sc_fox->add_option("-r,--depth", fox_depth, "if >= 0, also report membership dim H^i >= r");
  add_common(sc_fox);

  auto* sc_exp = app.add_subcommand(
      "expcompare", "exact algebra Betti numbers vs numeric group Betti numbers at exp characters");
  sc_exp->add_option("--cdga", cdga_spec)->required();
  sc_exp->add_option("--presentation", pres_spec)->required();
  sc_exp->add_option("--dict", dict_str,
                     "generators x degree-1 exponent dictionary (default identity)");
  sc_exp->add_option("--samples", samples, "number of random rational classes")
      ->capture_default_str();
  sc_exp->add_option("--seed", seed)->capture_default_str();
  sc_exp->add_option("--ts", tsamples_str, "scale factors for the inequality check")
      ->capture_default_str();
  sc_exp->add_option("--germ", germ_str, "scale factors for the near-zero equality check")
      ->capture_default_str();
  sc_exp->add_option("-i,--degree", deg_i)->capture_default_str();
  sc_exp->add_option("--rank-threshold", tol.rank_threshold)->capture_default_str();
  sc_exp->add_option("--guard-low", tol.guard_low)->capture_default_str();
  sc_exp->add_option("--guard-high", tol.guard_high)->capture_default_str();
  add_common(sc_exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    ordered_json report;

    if (sc_validate->parsed()) {
      int given = 0;
      for (const std::string* s : {&cdga_spec, &arr_spec, &pres_spec})
        if (!s->empty()) ++given;
      const bool lie_given = sc_validate->count("--lie") > 0;
      if (lie_given) ++given;
      if (given != 1)
        throw jl::ParseError(
            "validate needs exactly one of --cdga, --lie, --arrangement, --presentation");
      ordered_json config = base_config(threads);
      ordered_json result;
      if (!cdga_spec.empty()) {
        auto [a, meta] = load_cdga(cdga_spec);
        config["inputs"] = ordered_json{{"cdga", meta_json(meta)}};
        const auto vs = jl::validate_cdga(a);
        result["object"] = "cdga";
        result["valid"] = vs.empty();
        result["violations"] = violations_json(vs);
        ordered_json w;
        w["present"] = a.has_weights();
        if (a.has_weights()) {
          const auto wr = jl::validate_weights(a);
          w["positive"] = wr.positive;
          w["violations"] = violations_json(wr.violations);
        }
        result["weights"] = std::move(w);
      } else if (lie_given) {
        auto [e, meta] = load_lie(lie_spec);
        config["inputs"] = ordered_json{{"lie", meta_json(meta)}};
        const auto vs = jl::validate_lie(e);
        result["object"] = "lie";
        result["dim"] = e.dim;
        result["valid"] = vs.empty();
        result["violations"] = violations_json(vs);
      } else if (!arr_spec.empty()) {
        auto [arr, meta] = load_arrangement(arr_spec);
        config["inputs"] = ordered_json{{"arrangement", meta_json(meta)}};
        result["object"] = "arrangement";
        result["ambient_dim"] = arr.ambient_dim;
        result["hyperplanes"] = static_cast<int>(arr.normals.size());
        result["rank"] = jl::arrangement_rank(arr);
        result["valid"] = true;
        result["violations"] = ordered_json::array();
      } else {
        auto [p, meta] = load_presentation(pres_spec);
        config["inputs"] = ordered_json{{"presentation", meta_json(meta)}};
        result["object"] = "presentation";
        result["generators"] = p.generators;
        result["relators"] = static_cast<int>(p.relators.size());
        result["valid"] = true;
        result["violations"] = ordered_json::array();
      }
      report = make_report("validate", std::move(config), std::move(result), exact_diagnostics());

    } else if (sc_betti->parsed()) {
      auto [a, ameta] = load_cdga(cdga_spec);
      auto [rep, tmeta] = load_theta(theta_spec);
      const int qq = auto_degree_bound(a, q);
      jl::FlatConnection omega{parse_matrix(omega_str, a.dim(1), rep.lie.dim, "omega")};
      const auto beta = jl::aomoto_betti(a, rep, omega, qq);
      ordered_json config = base_config(threads);
      config["inputs"] = ordered_json{{"cdga", meta_json(ameta)}, {"theta", meta_json(tmeta)}};
      config["omega"] = omega_str;
      config["degree_bound"] = qq;
      ordered_json result;
      result["flat"] = true;
      result["beta"] = beta;
      report = make_report("betti", std::move(config), std::move(result), exact_diagnostics());

    } else if (sc_mc->parsed()) {
      auto [a, ameta] = load_cdga(cdga_spec);
      auto [e, lmeta] = load_lie(lie_spec);
      jl::FlatConnection omega{parse_matrix(omega_str, a.dim(1), e.dim, "omega")};
      const auto residual = jl::mc_residual(a, e, omega);
      bool flat = true;
      ordered_json rows = ordered_json::array();
      for (int g = 0; g < e.dim; ++g) {
        ordered_json comps = ordered_json::array();
        for (int k = 0; k < a.dim(2); ++k)
          if (!residual[g].c[k].is_zero()) {
            comps.push_back(ordered_json{{"basis", a.label(2, k)}, {"value", residual[g].c[k].str()}});
            flat = false;
          }
        rows.push_back(ordered_json{{"generator", e.labels[g]}, {"components", comps}});
      }
      ordered_json config = base_config(threads);
      config["inputs"] = ordered_json{{"cdga", meta_json(ameta)}, {"lie", meta_json(lmeta)}};
      config["omega"] = omega_str;
      ordered_json result;
      result["flat"] = flat;
      result["residual"] = std::move(rows);
      report = make_report("mc", std::move(config), std::move(result), exact_diagnostics());

    } else if (sc_jump->parsed()) {
      auto [a, ameta] = load_cdga(cdga_spec);
      auto [rep, tmeta] = load_theta(theta_spec);
      const auto desc = jl::jump_locus_generators(a, rep, deg_i, depth);
      ordered_json config = base_config(threads);
      config["inputs"] = ordered_json{{"cdga", meta_json(ameta)}, {"theta", meta_json(tmeta)}};
      config["degree"] = deg_i;
      config["depth"] = depth;
      ordered_json result;
      result["empty"] = desc.empty;
      result["variables"] = desc.var_names;
      ordered_json mc = ordered_json::array();
      for (const auto& p : desc.mc) mc.push_back(p.str(desc.var_names));
      result["mc"] = std::move(mc);
      ordered_json pieces = ordered_json::array();
      for (const auto& piece : desc.pieces) {
        ordered_json gens = ordered_json::array();
        for (const auto& p : piece.generators) gens.push_back(p.str(desc.var_names));
        pieces.push_back(ordered_json{{"rank_bound_below", piece.rank_bound_below},
                                      {"rank_bound_above", piece.rank_bound_above},
                                      {"generators", gens}});
      }
      result["pieces"] = std::move(pieces);
      if (!point_str.empty()) {
        const auto z = parse_rational_list(point_str);
        config["point"] = point_str;
        result["member"] = jl::jump_locus_satisfied(desc, z);
      }
      report = make_report("jumploci", std::move(config), std::move(result), exact_diagnostics());

    } else if (sc_scan->parsed()) {
      auto [a, ameta] = load_cdga(cdga_spec);
      auto [rep, tmeta] = load_theta(theta_spec);
      jl::FlatConnection omega{parse_matrix(omega_str, a.dim(1), rep.lie.dim, "omega")};
      jl::ScanMode mode;
      if (mode_str == "plain")
        mode = jl::ScanMode::kPlainScaling;
      else if (mode_str == "weight")
        mode = jl::ScanMode::kWeightAction;
      else
        throw jl::ParseError("mode must be plain or weight", mode_str);
      const auto ts = parse_rational_list(ts_str);
      const auto points = jl::line_scan(a, rep, omega, ts, deg_i, mode);
      ordered_json config = base_config(threads);
      config["inputs"] = ordered_json{{"cdga", meta_json(ameta)}, {"theta", meta_json(tmeta)}};
      config["omega"] = omega_str;
      config["ts"] = ts_str;
      config["degree"] = deg_i;
      config["mode"] = mode_str;
      ordered_json result;
      ordered_json arr = ordered_json::array();
      for (const auto& p : points) {
        ordered_json pt;
        pt["t"] = jl::rational_str(p.t);
        pt["flat"] = p.flat;
        if (p.flat)
          pt["beta"] = p.beta;
        else
          pt["beta"] = nullptr;
        arr.push_back(std::move(pt));
      }
      result["points"] = std::move(arr);
      report = make_report("scan", std::move(config), std::move(result), exact_diagnostics());

    } else if (sc_comp->parsed()) {
      auto [a, ameta] = load_cdga(cdga_spec);
      const auto rep = jl::linear_components_rank_one(a, deg_i, depth, budget);
      const auto names = jl::connection_variable_names(a, jl::LieAlgebra(1, {"e"}));
      ordered_json config = base_config(threads);
      config["inputs"] = ordered_json{{"cdga", meta_json(ameta)}};
      config["degree"] = deg_i;
      config["depth"] = depth;
      config["budget"] = budget;
      ordered_json result;
      ordered_json comps = ordered_json::array();
      for (size_t k = 0; k < rep.components.size(); ++k) {
        ordered_json c = subspace_json(rep.components[k], names);
        c["weighted_homogeneous"] = static_cast<bool>(rep.weighted_homogeneous[k]);
        comps.push_back(std::move(c));
      }
      result["variables"] = names;
      result["components"] = std::move(comps);
      result["complete"] = rep.complete;
      result["evaluations"] = rep.evaluations;
      report = make_report("components", std::move(config), std::move(result), exact_diagnostics());

    } else if (sc_wetc->parsed()) {
      const auto weights = parse_int_list(weights_str);
      const int n = static_cast<int>(weights.size());
      const auto f = parse_laurent(poly_str, n);
      jl::WeightFrame frame = jl::identity_frame(n, weights);
      if (!matrix_str.empty()) frame.M = parse_matrix(matrix_str, n, n, "frame matrix");
      const auto cones = jl::wetc(f, frame);
      std::vector<std::string> names;
      for (int k = 1; k <= n; ++k) names.push_back("z" + std::to_string(k));
      ordered_json config = base_config(threads);
      config["poly"] = poly_str;
      config["weights"] = weights;
      if (!matrix_str.empty()) config["matrix"] = matrix_str;
      ordered_json result;
      ordered_json terms = ordered_json::array();
      for (size_t k = 0; k < f.coeffs.size(); ++k)
        terms.push_back(ordered_json{{"coeff", jl::rational_str(f.coeffs[k])},
                                     {"exponents", f.support[k]}});
      result["poly_terms"] = std::move(terms);
      ordered_json subs = ordered_json::array();
      for (const auto& s : cones) subs.push_back(subspace_json(s, names));
      result["subspaces"] = std::move(subs);
      report = make_report("wetc", std::move(config), std::move(result), exact_diagnostics());

    } else if (sc_fndeg->parsed()) {
      auto [a, ameta] = load_cdga(cdga_spec);
      const auto nu = parse_rational_list(nu_str);
      const int qq = auto_degree_bound(a, q);
      const auto rep = jl::fn_degeneration(a, nu, qq);
      ordered_json config = base_config(threads);
      config["inputs"] = ordered_json{{"cdga", meta_json(ameta)}};
      config["nu"] = nu_str;
      config["degree_bound"] = qq;
      ordered_json result;
      result["e2"] = rep.e2;
      result["generic"] = rep.generic;
      result["degenerate"] = rep.degenerate;
      report = make_report("fndeg", std::move(config), std::move(result), exact_diagnostics());

    } else if (sc_os->parsed()) {
      auto [arr, ameta] = load_arrangement(arr_spec);
      const auto alg = jl::os_algebra(arr, q);
      ordered_json config = base_config(threads);
      config["inputs"] = ordered_json{{"arrangement", meta_json(ameta)}};
      config["truncate"] = q;
      ordered_json result;
      result["ambient_dim"] = arr.ambient_dim;
      result["hyperplanes"] = static_cast<int>(arr.normals.size());
      result["rank"] = jl::arrangement_rank(arr);
      result["circuits"] = jl::circuits(arr);
      result["betti"] = alg.basis().dims;
      if (!emit_path.empty()) {
        const std::string text = jl::cdga_json(alg);
        std::ofstream out(emit_path, std::ios::binary);
        if (!out) throw jl::PreconditionError("cannot write output file: " + emit_path);
        out << text;
        result["emitted"] =
            ordered_json{{"path", emit_path}, {"digest", jl::fnv1a64_hex(text)}};
      }
      report = make_report("os", std::move(config), std::move(result), exact_diagnostics());

    } else if (sc_fox->parsed()) {
      auto [p, pmeta] = load_presentation(pres_spec);
      jl::GroupRep grep;
      grep.dimV = 1;
      for (const auto& part : split(rho_str, ',')) {
        const jl::Scalar s = jl::parse_scalar(strip(part));
        std::vector<std::tuple<int, int, jl::Scalar>> trip;
        if (!s.is_zero()) trip.emplace_back(0, 0, s);
        grep.images.push_back(jl::SparseMatrix::from_triplets(1, 1, std::move(trip)));
      }
      if (static_cast<int>(grep.images.size()) != p.generators)
        throw jl::ParseError("rho needs one value per generator", rho_str);
      const auto b = jl::twisted_betti_low(p, grep);
      ordered_json config = base_config(threads);
      config["inputs"] = ordered_json{{"presentation", meta_json(pmeta)}};
      config["rho"] = rho_str;
      ordered_json result;
      result["b0"] = b[0];
      result["b1"] = b[1];
      if (fox_depth >= 0) {
        config["degree"] = deg_i;
        config["depth"] = fox_depth;
        result["member"] = jl::cv_membership(p, grep, deg_i, fox_depth);
      }
      report = make_report("foxbetti", std::move(config), std::move(result), exact_diagnostics());

    } else if (sc_exp->parsed()) {
      auto [a, ameta] = load_cdga(cdga_spec);
      auto [p, pmeta] = load_presentation(pres_spec);
      jl::SparseMatrix dict;
      if (dict_str.empty()) {
        if (p.generators != a.dim(1))
          throw jl::ParseError("default dictionary needs matching dimensions; pass --dict");
        dict = jl::SparseMatrix::identity(p.generators);
      } else {
        dict = parse_matrix(dict_str, p.generators, a.dim(1), "dictionary");
      }
      const auto ts = parse_rational_list(tsamples_str);
      const auto germ = parse_rational_list(germ_str);
      std::mt19937_64 rng(seed);
      std::vector<std::vector<jl::Rational>> omegas;
      for (int s = 0; s < samples; ++s) {
        std::vector<jl::Rational> om;
        for (int m = 0; m < a.dim(1); ++m) {
          const long num = static_cast<long>(rng() % 7) - 3;
          const long den = 1 + static_cast<long>(rng() % 3);
          om.push_back(jl::rational(num, den));
        }
        omegas.push_back(std::move(om));
      }
      const auto rep = jl::exp_compare(a, p, dict, omegas, ts, germ, deg_i, tol);
      ordered_json config = base_config(threads);
      config["inputs"] =
          ordered_json{{"cdga", meta_json(ameta)}, {"presentation", meta_json(pmeta)}};
      if (!dict_str.empty()) config["dict"] = dict_str;
      config["samples"] = samples;
      config["seed"] = seed;
      config["ts"] = tsamples_str;
      config["germ"] = germ_str;
      config["degree"] = deg_i;
      config["tolerances"] = ordered_json{{"rank_threshold", tol.rank_threshold},
                                          {"guard_low", tol.guard_low},
                                          {"guard_high", tol.guard_high}};
      ordered_json result;
      result["violations"] = rep.violations;
      result["indeterminate"] = rep.indeterminate;
      result["germ_mismatches"] = rep.germ_mismatches;
      ordered_json slist = ordered_json::array();
      for (const auto& sample : rep.samples) {
        ordered_json pts = ordered_json::array();
        for (const auto& pt : sample.points) {
          ordered_json pj;
          pj["t"] = jl::rational_str(pt.t);
          pj["beta"] = pt.beta;
          if (pt.indeterminate) {
            pj["b"] = nullptr;
            pj["indeterminate"] = true;
          } else {
            pj["b"] = pt.b;
            pj["indeterminate"] = false;
            pj["inequality_ok"] = pt.inequality_ok;
            if (pt.germ_sample) pj["germ_equal"] = pt.germ_equal;
          }
          pj["germ_sample"] = pt.germ_sample;
          pts.push_back(std::move(pj));
        }
        slist.push_back(
            ordered_json{{"omega", rational_list_json(sample.omega)}, {"points", pts}});
      }
      result["samples"] = std::move(slist);
      ordered_json diagnostics;
      diagnostics["arithmetic"] = "mixed";
      diagnostics["floating_point_surface"] = "numeric ranks of exponential characters";
      report = make_report("expcompare", std::move(config), std::move(result),
                           std::move(diagnostics));
    }

    emit(report, output);
    return 0;
  } catch (const jl::ParseError& e) {
    std::cerr << ordered_json{{"error", {{"type", "parse"}, {"message", e.what()}}}}.dump(2)
              << "\n";
    return 2;
  } catch (const jl::VariantMismatchError& e) {
    std::cerr << ordered_json{{"error", {{"type", "precondition"}, {"message", e.what()}}}}.dump(2)
              << "\n";
    return 3;
  } catch (const jl::PreconditionError& e) {
    std::cerr << ordered_json{{"error", {{"type", "precondition"}, {"message", e.what()}}}}.dump(2)
              << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << ordered_json{{"error", {{"type", "internal"}, {"message", e.what()}}}}.dump(2)
              << "\n";
    return 4;
  }
}
