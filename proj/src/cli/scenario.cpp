#include "cli/scenario.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "cli/expr.hpp"
#include "qdr/chern_weil.hpp"
#include "qdr/cohomology.hpp"
#include "qdr/cpn.hpp"

namespace qdr::cli {

namespace {

const std::set<std::string> kModels = {"flat", "torus", "lie_poisson_so3", "heisenberg", "custom"};
const std::set<std::string> kTopKeys = {"model", "dim", "n", "truncation", "omega", "seed", "tasks"};

const std::map<std::string, std::set<std::string>>& task_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"product", {"expr"}},       {"power", {"expr", "k"}},     {"operator", {"op", "expr"}},
      {"spectrum", {"n", "parity"}}, {"cohomology", {"mode"}},   {"integral", {"expr"}},
      {"chern", {"theta", "N"}},   {"cpn_table", {"n"}},
  };
  return keys;
}

int get_int(const Json& j, const std::string& key) {
  if (!j.is_number_integer()) throw ScenarioError("'" + key + "' must be an integer");
  return j.get<int>();
}

std::string get_string(const Json& j, const std::string& key) {
  if (!j.is_string()) throw ScenarioError("'" + key + "' must be a string");
  return j.get<std::string>();
}

Rational get_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception&) {
      throw ScenarioError("bad rational '" + j.get<std::string>() + "' in omega");
    }
  }
  throw ScenarioError("omega entries must be \"p/q\" strings or integers");
}

const Json& required(const Json& args, const std::string& key, const std::string& task) {
  if (!args.contains(key)) throw ScenarioError("task '" + task + "' needs '" + key + "'");
  return args.at(key);
}

struct Runner {
  const Scenario& s;
  PoissonModel model;
  ExprContext ctx;

  explicit Runner(const Scenario& sc) : s(sc), model(build_model(sc)) {
    ctx.dim = model.dim;
    ctx.w = model.w;
    ctx.modes = model.modes;
  }

  ParsedExpr parse(const Json& j, const std::string& key) {
    const std::string text = get_string(j, key);
    try {
      return parse_expression(text, ctx);
    } catch (const ParseError& e) {
      throw ScenarioError("in expression \"" + text + "\": " + e.what());
    }
  }

  QForm constant_form(const ParsedExpr& e) {
    auto q = as_qform(e.value);
    if (!q) throw ScenarioError("this operator needs a form with constant real coefficients");
    return *q;
  }

  const RMatrix& omega() {
    if (!model.omega) throw ScenarioError("this task needs a symplectic model (flat, torus or custom)");
    return *model.omega;
  }

  void require_torus(const std::string& task) {
    if (model.modes < 0) throw ScenarioError("task '" + task + "' needs the torus model");
  }

  CheckOptions options() const {
    CheckOptions o;
    o.seed = s.seed;
    o.dim = s.dim;
    o.n = s.n;
    o.truncation = model.modes >= 0 ? model.modes : 0;
    o.max_dim = max_dim_from_env();
    return o;
  }

  TaskResult run(const TaskSpec& t) {
    TaskResult r;
    r.task = t.type;
    const Json& a = t.args;
    if (t.type == "product") {
      const auto e = parse(required(a, "expr", t.type), "expr");
      r.values["expr"] = a["expr"];
      r.values["result"] = form_to_json(e.value, e.uses_dx);
    } else if (t.type == "power") {
      const auto e = parse(required(a, "expr", t.type), "expr");
      const int k = get_int(required(a, "k", t.type), "k");
      if (k < 0 || k > 16) throw ScenarioError("'k' must be in 0..16");
      FieldForm p = FieldForm::constant(model.dim, Fn(1));
      for (int i = 0; i < k; ++i) p = quantum_wedge_field(e.value, p, model.w);
      r.values["expr"] = a["expr"];
      r.values["k"] = std::to_string(k);
      r.values["result"] = form_to_json(p, e.uses_dx);
    } else if (t.type == "operator") {
      run_operator(a, r);
    } else if (t.type == "spectrum") {
      const int n = a.contains("n") ? get_int(a["n"], "n") : std::max(1, s.n);
      if (n < 1 || n > 4) throw ScenarioError("spectrum: 'n' must be in 1..4");
      const std::string par = a.contains("parity") ? get_string(a["parity"], "parity") : "even";
      if (par != "even" && par != "odd") throw ScenarioError("spectrum: parity must be \"even\" or \"odd\"");
      const RMatrix m = lefschetz_matrix(n, par == "odd").matrix;
      const UPoly cp = char_poly(m);
      const Rational det = determinant(m);
      Json rows = Json::array();
      for (const auto& row : to_strings(m)) rows.push_back(row);
      r.values["n"] = std::to_string(n);
      r.values["parity"] = par;
      r.values["matrix"] = rows;
      r.values["char_poly"] = to_string(cp, "lambda");
      r.values["factors"] = describe(factor_rational_roots(cp));
      r.values["det"] = det.get_str();
      r.pass = sgn(det) != 0;
    } else if (t.type == "cohomology") {
      require_torus(t.type);
      const std::string mode = a.contains("mode") ? get_string(a["mode"], "mode") : "laurent";
      if (mode != "laurent" && mode != "polynomial") throw ScenarioError("cohomology: mode must be laurent or polynomial");
      const auto c = build_complex(model, mode == "laurent" ? CoeffMode::laurent : CoeffMode::polynomial);
      const auto deg = degeneracy_check(c);
      const auto dr = dr_cohomology_dims(c), ph = poisson_homology_dims(c);
      r.values["mode"] = mode;
      r.values["de_rham"] = dr.table();
      r.values["poisson_homology"] = ph.table();
      r.values["quantum"] = deg.quantum.table();
      r.values["e1"] = deg.e1.table();
      r.values["degenerate"] = deg.degenerate ? "yes" : "no";
      bool ok = deg.degenerate && dr.matches_expected() && ph.matches_expected() && deg.quantum.matches_expected();
      if (mode == "laurent") {
        const bool shift = h_shift_invariant(deg.quantum);
        r.values["h_shift_invariant"] = shift ? "yes" : "no";
        ok = ok && shift;
      }
      r.pass = ok;
    } else if (t.type == "integral") {
      require_torus(t.type);
      const auto e = parse(required(a, "expr", t.type), "expr");
      r.values["expr"] = a["expr"];
      try {
        r.values["integral"] = to_string(quantum_integral(e.value, model), model.dim);
      } catch (const std::domain_error& err) {
        throw ScenarioError(std::string("integral: ") + err.what());
      }
    } else if (t.type == "chern") {
      run_chern(a, r);
    } else if (t.type == "cpn_table") {
      run_cpn(a, r);
    } else {
      const CheckResult c = run_check(t.type, options());
      r.values = check_to_json(c);
      r.pass = c.pass;
    }
    return r;
  }

  void run_operator(const Json& a, TaskResult& r) {
    const std::string op = get_string(required(a, "op", "operator"), "op");
    const auto e = parse(required(a, "expr", "operator"), "expr");
    r.values["op"] = op;
    r.values["expr"] = a["expr"];
    FieldForm out(model.dim);
    if (op == "d") {
      out = exterior_d(e.value);
    } else if (op == "delta") {
      out = koszul_delta(e.value, model.w);
    } else if (op == "dh") {
      out = quantum_d(e.value, model.w);
    } else {
      const QForm q = constant_form(e);
      QForm res;
      if (op == "L") res = apply_L(q, omega());
      else if (op == "K") res = apply_K(q);
      else if (op == "Lstar") res = apply_Lstar(q, omega());
      else if (op == "A") res = apply_A(q, omega());
      else if (op == "Lh") res = apply_Lh(q, omega());
      else if (op == "Lhstar") res = apply_Lhstar(q, omega());
      else if (op == "Ah") res = apply_Ah(q, omega());
      else if (op == "star") res = symplectic_star(q, omega());
      else if (op == "iota_w") res = contract_bivector(bivector_of(omega()), q);
      else throw ScenarioError("unknown operator '" + op + "'");
      out = field_from(res);
    }
    r.values["result"] = form_to_json(out, e.uses_dx);
  }

  void run_chern(const Json& a, TaskResult& r) {
    const Json& th = required(a, "theta", "chern");
    const auto qc = QuantumCalculus::pinned(model.w);
    bool dx = false;
    MatrixForm theta(1, 1, model.dim);
    if (th.is_string()) {
      const auto e = parse(th, "theta");
      dx = e.uses_dx;
      theta(0, 0) = e.value;
    } else if (th.is_array() && !th.empty()) {
      const int rank = static_cast<int>(th.size());
      theta = MatrixForm(rank, rank, model.dim);
      for (int i = 0; i < rank; ++i) {
        if (!th[i].is_array() || static_cast<int>(th[i].size()) != rank)
          throw ScenarioError("chern: theta must be a square array of expressions");
        for (int j = 0; j < rank; ++j) {
          const auto e = parse(th[i][j], "theta");
          dx = dx || e.uses_dx;
          theta(i, j) = e.value;
        }
      }
    } else {
      throw ScenarioError("chern: theta must be an expression or a square array of expressions");
    }
    if (!theta.entries_of_degree(1)) throw ScenarioError("chern: connection entries must be 1-forms");
    const MatrixForm curv = quantum_curvature(theta, qc);
    Json rows = Json::array();
    for (int i = 0; i < curv.rows(); ++i) {
      Json row = Json::array();
      for (int j = 0; j < curv.cols(); ++j) row.push_back(format_form(curv(i, j), dx));
      rows.push_back(row);
    }
    r.values["curvature"] = rows;
    const auto bianchi = bianchi_check(theta, qc);
    r.values["bianchi"] = bianchi.ok() ? "holds" : "fails";
    bool closed = true;
    for (auto p : {CharPoly::trace, CharPoly::trace_square, CharPoly::second_elementary}) {
      const FieldForm f = char_form(curv, p, qc);
      const bool c = qc.d(f).is_zero();
      closed = closed && c;
      r.values["char_forms"][to_string(p)] = format_form(f, dx) + (c ? "  (d_h-closed)" : "  (NOT closed)");
    }
    if (theta.rows() == 1) {
      const int N = a.contains("N") ? get_int(a["N"], "N") : 4;
      if (N < 0 || N > 12) throw ScenarioError("chern: 'N' must be in 0..12");
      const auto ch = chern_character(theta, qc, N);
      Json terms = Json::array();
      for (const auto& t : ch.terms) terms.push_back(format_form(t, dx));
      r.values["chern_character"]["unit"] = ch.unit;
      r.values["chern_character"]["terms (coefficient of unit^k)"] = terms;
      const bool ch_closed = qc.d(ch.total()).is_zero();
      r.values["chern_character"]["d_h-closed"] = ch_closed ? "yes" : "no";
    }
    r.pass = bianchi.ok() && closed;
  }

  void run_cpn(const Json& a, TaskResult& r) {
    const int n = a.contains("n") ? get_int(a["n"], "n") : std::max(1, s.n);
    if (n < 1 || n > 5) throw ScenarioError("cpn_table: 'n' must be in 1..5");
    const CPnRing ring = cpn_structure_constants(n);
    r.values["n"] = std::to_string(n);
    for (int k = 1; k <= n; ++k)
      for (int l = k; l <= n; ++l)
        r.values["table"]["w^" + std::to_string(k) + " * w^" + std::to_string(l)] = ring_to_json(ring.table.at({k, l}));
    for (const auto& row : derived_recursion_report(n))
      r.values["recursion"]["k=" + std::to_string(row.k)] =
          "a=" + row.a.get_str() + " b=" + row.b.get_str() + " (reference b=" + row.printed_b().get_str() + ")";
    const auto lambda = first_chern_shift(n);
    r.values["lambda"] = lambda.lambda ? lambda.lambda->get_str() : "none";
    bool ok = table_associative(ring, n + 2) && ring.symmetric() && ring.classical_limit_ok() && ring.band_ok();
    if (n <= 4) {
      const auto rel = verify_nilpotency(n);
      r.values["relation (omega - n h)^{n+1} = 0"] = rel.ok() ? "holds" : "fails";
      const auto ex = omega_power_expansion(n);
      r.values["(omega)^{n+1}_h"] = ring_to_json(ex.computed);
      r.values["matches reference expansion"] = ex.matches_printed() ? "yes" : "no";
      r.values["matches binomial expansion"] = ex.matches_binomial() ? "yes" : "no";
      ok = ok && rel.ok();
    }
    r.pass = ok;
  }
};

}  // namespace

int max_dim_from_env() {
  if (const char* v = std::getenv("QDR_MAX_DIM")) {
    char* end = nullptr;
    const long d = std::strtol(v, &end, 10);
    if (end != v && *end == '\0' && d >= 1 && d <= kMaxVars) return static_cast<int>(d);
  }
  return 8;
}

Scenario parse_scenario(const std::string& text, int max_dim) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ScenarioError(std::string("scenario parse error: ") + e.what());
  }
  if (!j.is_object()) throw ScenarioError("scenario must be a JSON object");
  for (const auto& [k, v] : j.items())
    if (!kTopKeys.count(k)) throw ScenarioError("unknown scenario key '" + k + "'");

  Scenario s;
  if (j.contains("model")) s.model = get_string(j["model"], "model");
  if (!kModels.count(s.model)) throw ScenarioError("unknown model '" + s.model + "'");
  if (j.contains("dim")) s.dim = get_int(j["dim"], "dim");
  if (j.contains("n")) s.n = get_int(j["n"], "n");
  if (j.contains("truncation")) s.truncation = get_int(j["truncation"], "truncation");
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) throw ScenarioError("'seed' must be a nonnegative integer");
    s.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("omega")) {
    if (s.model != "custom") throw ScenarioError("'omega' is only allowed for the custom model");
    const Json& rows = j["omega"];
    if (!rows.is_array() || rows.empty()) throw ScenarioError("'omega' must be a list of rows");
    const int d = static_cast<int>(rows.size());
    RMatrix om(d, d);
    for (int r = 0; r < d; ++r) {
      if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != d) throw ScenarioError("'omega' must be square");
      for (int c = 0; c < d; ++c) om(r, c) = get_rational(rows[r][c]);
    }
    s.omega = om;
  }

  if (s.n < 0 || s.dim < 0) throw ScenarioError("'dim' and 'n' must be positive");
  if (s.model == "flat" || s.model == "torus") {
    if (s.n == 0 && s.dim == 0) s.n = 1;
    if (s.dim == 0) s.dim = 2 * s.n;
    if (s.n == 0) s.n = s.dim / 2;
    if (s.dim != 2 * s.n) throw ScenarioError("'dim' must equal 2n for the " + s.model + " model");
    if (s.model == "torus" && s.truncation < 0) throw ScenarioError("torus truncation must be nonnegative");
  } else if (s.model == "custom") {
    if (!s.omega) throw ScenarioError("the custom model needs 'omega'");
    if (s.dim != 0 && s.dim != s.omega->rows()) throw ScenarioError("'dim' does not match the size of 'omega'");
    s.dim = s.omega->rows();
    if (!is_antisymmetric(*s.omega)) throw ScenarioError("'omega' must be antisymmetric");
    if (s.dim % 2 || sgn(determinant(*s.omega)) == 0) throw ScenarioError("'omega' is singular");
    s.n = s.dim / 2;
  } else {
    if (s.n != 0) throw ScenarioError("'n' is not meaningful for the " + s.model + " model");
    if (s.dim != 0 && s.dim != 3) throw ScenarioError("the " + s.model + " model lives in dimension 3");
    s.dim = 3;
  }
  if (j.contains("truncation") && s.model != "torus") throw ScenarioError("'truncation' only applies to the torus model");
  if (s.dim > max_dim) throw ScenarioError("dimension " + std::to_string(s.dim) + " exceeds the cap " + std::to_string(max_dim));

  if (j.contains("tasks")) {
    if (!j["tasks"].is_array()) throw ScenarioError("'tasks' must be a list");
    for (const auto& t : j["tasks"]) {
      if (!t.is_object() || !t.contains("task")) throw ScenarioError("each task needs a \"task\" field");
      TaskSpec spec;
      spec.type = get_string(t["task"], "task");
      const auto it = task_keys().find(spec.type);
      if (it == task_keys().end() && !is_suite(spec.type)) throw ScenarioError("unknown task '" + spec.type + "'");
      spec.args = Json::object();
      for (const auto& [k, v] : t.items()) {
        if (k == "task") continue;
        if (it == task_keys().end() || !it->second.count(k))
          throw ScenarioError("unknown key '" + k + "' for task '" + spec.type + "'");
        spec.args[k] = v;
      }
      s.tasks.push_back(std::move(spec));
    }
  }
  return s;
}

Scenario load_scenario(const std::string& path, int max_dim) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot read scenario file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), max_dim);
}

PoissonModel build_model(const Scenario& s) {
  if (s.model == "flat") return standard_symplectic(s.n);
  if (s.model == "torus") return torus(s.n, s.truncation);
  if (s.model == "lie_poisson_so3") return lie_poisson_so3();
  if (s.model == "heisenberg") return heisenberg();
  PoissonModel m;
  m.name = "custom";
  m.dim = s.dim;
  m.omega = *s.omega;
  m.w = PoissonField::constant(bivector_of(*s.omega));
  return m;
}

Report run_scenario(const Scenario& s) {
  Report rep;
  Runner runner(s);
  for (const auto& t : s.tasks) rep.tasks.push_back(runner.run(t));
  CheckOptions o;
  o.seed = s.seed;
  o.max_dim = 4;
  for (const auto& [k, v] : run_check("conventions", o).facts) rep.ledger[k] = v;
  return rep;
}

}  // namespace qdr::cli
