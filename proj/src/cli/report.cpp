#include "cli/report.hpp"

#include <algorithm>
#include <sstream>

#include "cli/expr.hpp"

namespace qdr::cli {

int Report::failures() const {
  return static_cast<int>(std::count_if(tasks.begin(), tasks.end(), [](const TaskResult& t) { return t.pass == false; }));
}

Json laurent_to_json(const Laurent& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e.e, to_string(c)}));
  return out;
}

Laurent laurent_from_json(const Json& j) {
  Laurent p;
  for (const auto& pair : j) p.add(HPow{pair.at(0).get<int>()}, parse_rational(pair.at(1).get<std::string>()));
  return p;
}

Json form_to_json(const FieldForm& a, bool dx_prefix) {
  Json terms = Json::array();
  for (const auto& [m, c] : display_terms(a)) {
    // Group the coefficient by its h-free part so h-polynomials stay together.
    std::vector<std::pair<FnMono, Json>> groups;
    for (const auto& [mono, z] : c.terms()) {
      FnMono key = mono;
      key.h = 0;
      auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == key; });
      if (it == groups.end()) {
        groups.emplace_back(key, Json::array());
        it = groups.end() - 1;
      }
      it->second.push_back(Json::array({mono.h, to_string(z)}));
    }
    for (auto& [key, hs] : groups) {
      Json t = Json::object();
      t["blade"] = indices_of(m);
      std::vector<int> x(key.x.begin(), key.x.begin() + a.dim()), k(key.k.begin(), key.k.begin() + a.dim());
      if (std::any_of(x.begin(), x.end(), [](int v) { return v != 0; })) t["x"] = x;
      if (std::any_of(k.begin(), k.end(), [](int v) { return v != 0; })) t["k"] = k;
      if (key.tau != 0) t["tau"] = key.tau;
      t["h"] = hs;
      terms.push_back(t);
    }
  }
  return Json{{"text", format_form(a, dx_prefix)}, {"dim", a.dim()}, {"terms", terms}};
}

FieldForm form_from_json(const Json& j) {
  const int dim = j.at("dim").get<int>();
  FieldForm out(dim);
  for (const auto& t : j.at("terms")) {
    FnMono base;
    if (t.contains("x")) {
      const auto x = t["x"].get<std::vector<int>>();
      for (std::size_t i = 0; i < x.size(); ++i) base.x[i] = static_cast<std::int8_t>(x[i]);
    }
    if (t.contains("k")) {
      const auto k = t["k"].get<std::vector<int>>();
      for (std::size_t i = 0; i < k.size(); ++i) base.k[i] = static_cast<std::int8_t>(k[i]);
    }
    if (t.contains("tau")) base.tau = static_cast<std::int16_t>(t["tau"].get<int>());
    Fn c;
    for (const auto& pair : t.at("h")) {
      FnMono mono = base;
      mono.h = static_cast<std::int16_t>(pair.at(0).get<int>());
      c.add(mono, parse_gaussian(pair.at(1).get<std::string>()));
    }
    out.add(mask_of(t.at("blade").get<std::vector<int>>()), c);
  }
  return out;
}

Json ring_to_json(const RingElement& c) {
  Json out = Json::object();
  for (int j = static_cast<int>(c.size()) - 1; j >= 0; --j)
    if (!c[j].is_zero()) out["w^" + std::to_string(j)] = laurent_to_json(c[j]);
  return out;
}

Json check_to_json(const CheckResult& r) {
  Json facts = Json::object();
  for (const auto& [k, v] : r.facts) facts[k] = v;
  return Json{{"suite", r.suite}, {"title", r.title}, {"summary", r.summary}, {"facts", facts}};
}

Json to_json(const Report& r) {
  Json tasks = Json::array();
  for (const auto& t : r.tasks)
    tasks.push_back(Json{{"task", t.task}, {"pass", t.pass ? Json(*t.pass) : Json(nullptr)}, {"values", t.values}});
  return Json{{"format", "qdr-report/1"},
              {"tasks", tasks},
              {"ledger", r.ledger},
              {"summary", {{"tasks", r.tasks.size()}, {"failed", r.failures()}, {"pass", r.ok()}}}};
}

Report report_from_json(const Json& j) {
  if (j.value("format", "") != "qdr-report/1") throw std::invalid_argument("not a qdr report");
  Report r;
  for (const auto& t : j.at("tasks")) {
    TaskResult tr;
    tr.task = t.at("task").get<std::string>();
    if (!t.at("pass").is_null()) tr.pass = t["pass"].get<bool>();
    tr.values = t.at("values");
    r.tasks.push_back(std::move(tr));
  }
  r.ledger = j.at("ledger");
  return r;
}

std::string emit_machine(const Report& r) { return to_json(r).dump(2) + "\n"; }

namespace {

// Flattens nested values into (key path, printable string) rows.
void flatten(const Json& v, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (v.is_object()) {
    if (v.contains("text") && v.contains("terms")) {
      rows.emplace_back(path, v["text"].get<std::string>());
      return;
    }
    for (const auto& [k, sub] : v.items()) flatten(sub, path.empty() ? k : path + "." + k, rows);
    return;
  }
  if (v.is_string()) {
    rows.emplace_back(path, v.get<std::string>());
    return;
  }
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_string(); })) {
    std::string joined;
    for (const auto& e : v) joined += (joined.empty() ? "" : ", ") + e.get<std::string>();
    rows.emplace_back(path, joined);
    return;
  }
  if (v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_object(); })) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", rows);
    return;
  }
  rows.emplace_back(path, v.dump());
}

}  // namespace

std::string emit_text(const Report& r) {
  std::ostringstream os;
  for (std::size_t i = 0; i < r.tasks.size(); ++i) {
    const auto& t = r.tasks[i];
    os << "== task " << i + 1 << ": " << t.task;
    if (t.pass) os << (*t.pass ? "  [pass]" : "  [FAIL]");
    os << "\n";
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(t.values, "", rows);
    std::size_t width = 0;
    for (const auto& row : rows) width = std::max(width, row.first.size());
    for (const auto& [k, v] : rows) os << "  " << k << std::string(width - k.size(), ' ') << "  " << v << "\n";
  }
  if (!r.ledger.empty()) {
    os << "== convention ledger\n";
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(r.ledger, "", rows);
    std::size_t width = 0;
    for (const auto& row : rows) width = std::max(width, row.first.size());
    for (const auto& [k, v] : rows) os << "  " << k << std::string(width - k.size(), ' ') << "  " << v << "\n";
  }
  const int checked = static_cast<int>(
      std::count_if(r.tasks.begin(), r.tasks.end(), [](const TaskResult& t) { return t.pass.has_value(); }));
  os << (r.ok() ? "PASS" : "FAIL") << ": " << r.tasks.size() << " task(s), " << checked - r.failures() << " of "
     << checked << " checks passed\n";
  return os.str();
}

}  // namespace qdr::cli
