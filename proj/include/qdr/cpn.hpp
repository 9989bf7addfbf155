#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdr/symplectic.hpp"

namespace qdr {

// The deformed cohomology ring of CP^n, read off from the flat Darboux model
// Lambda(R^{2n}) with omega = e1^e2 + ... + e^{2n-1}^e^{2n}. Elements are
// coefficient vectors c[0..n] meaning sum_j c_j(h) omega^j (classical powers).
using RingElement = std::vector<Laurent>;

struct CPnRing {
  int n = 0;
  /// table[{k, l}] = omega^k ^_h omega^l, for 0 <= k, l <= n.
  std::map<std::pair<int, int>, RingElement> table;

  RingElement unit() const;
  RingElement omega_power(int j) const;  // the basis element omega^j
  RingElement multiply(const RingElement& a, const RingElement& b) const;
  /// The quantum power (a)^k_h computed through the table.
  RingElement power(const RingElement& a, int k) const;
  bool symmetric() const;
  /// h = 0 layer of every entry is omega^{k+l} (or 0 past degree n).
  bool classical_limit_ok() const;
  /// Entries only involve omega^{|k-l|}, ..., omega^{k+l}.
  bool band_ok() const;
};

/// Expresses a form of the flat model in the omega-power basis; nullopt when
/// it is not a combination of classical powers of omega.
std::optional<RingElement> omega_coordinates(const QForm& a, int n);
QForm ring_to_form(const RingElement& c, int n);

/// n <= 5; each entry is an exact product in the flat model.
CPnRing cpn_structure_constants(int n);

/// (omega^a omega^b) omega^c == omega^a (omega^b omega^c) through the table for a+b+c <= limit.
bool table_associative(const CPnRing& ring, int limit);

struct NilpotencyReport {
  int n = 0;
  bool omega_h_literal = false;  // sum e^{2i-1} ^_h e^{2i} == omega - n h
  bool top_power_vanishes = false;
  bool previous_power_nonzero = false;
  QForm previous_power;  // (omega - n h)^n_h
  bool ok() const { return omega_h_literal && top_power_vanishes && previous_power_nonzero; }
};
NilpotencyReport verify_nilpotency(int n);

struct PowerExpansionReport {
  int n = 0;
  RingElement computed;  // (omega)^{n+1}_h
  RingElement printed;   // sum (-1)^{n-k} h^{n+1-k} C(n+1,k) (omega)^k_h
  RingElement binomial;  // -sum C(n+1,k) (-n h)^{n+1-k} (omega)^k_h
  bool matches_printed() const { return computed == printed; }
  bool matches_binomial() const { return computed == binomial; }
};
PowerExpansionReport omega_power_expansion(int n);

struct RecursionRow {
  int n = 0, k = 0;
  Rational a, b;  // omega ^_h omega^k = omega^{k+1} + a h omega^k + b h^2 omega^{k-1}
  Rational printed_a() const { return 2 * k; }
  Rational printed_b() const { return -k * n; }
  Rational derived_b() const { return -k * (n - k + 1); }
};
/// k = 1..n. std::runtime_error if an entry is not of the three-term shape.
std::vector<RecursionRow> derived_recursion_report(int n);

struct LambdaReport {
  std::optional<Rational> lambda;  // the rational with (omega + lambda h)^{n+1}_h = 0
  bool unique = false;
};
LambdaReport first_chern_shift(int n);

std::string to_string(const RingElement& c);

}  // namespace qdr
