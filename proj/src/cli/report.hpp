#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qdr/checks.hpp"
#include "qdr/cpn.hpp"
#include "qdr/field_form.hpp"

namespace qdr::cli {

using Json = nlohmann::ordered_json;

// Machine format ("qdr-report/1"):
//
//   { "format": "qdr-report/1",
//     "tasks": [ { "task": <string>, "pass": true | false | null, "values": { ... } } ],
//     "ledger": { <fact>: <string> },
//     "summary": { "tasks": <int>, "failed": <int>, "pass": <bool> } }
//
// Every rational is a string "p/q" (Gaussian values "a+b*i"). Laurent
// polynomials are lists of [exponent, "coefficient"] pairs. A form is
//   { "text": <printed form>, "dim": <int>, "terms": [term...] }
// with term = { "blade": [indices], "x": [exponents], "k": [modes], "tau": <int>,
//               "h": [[exponent, "coefficient"], ...] }
// ("x", "k" and "tau" are omitted when zero). Ring elements are objects
// mapping "w^j" to a Laurent list.

struct TaskResult {
  std::string task;
  std::optional<bool> pass;  // empty for report-only tasks
  Json values = Json::object();
};

struct Report {
  std::vector<TaskResult> tasks;
  Json ledger = Json::object();
  int failures() const;
  bool ok() const { return failures() == 0; }
};

Json laurent_to_json(const Laurent& p);
Laurent laurent_from_json(const Json& j);
Json form_to_json(const FieldForm& a, bool dx_prefix);
FieldForm form_from_json(const Json& j);
Json ring_to_json(const RingElement& c);
Json check_to_json(const CheckResult& r);

Json to_json(const Report& r);
Report report_from_json(const Json& j);

std::string emit_text(const Report& r);
std::string emit_machine(const Report& r);

}  // namespace qdr::cli
