#include "qdr/cohomology.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace qdr {

namespace {

using Image = std::map<Mask, Gaussian>;

// Expands the image of mode(k) dx^I back into blades, checking it stays in
// the mode-k block with no h and a single factor of tau (set to 1).
Image block_image(const FieldForm& f, const std::vector<int>& k) {
  Image out;
  for (const auto& [m, c] : f.terms())
    for (const auto& [mono, z] : c.terms()) {
      for (std::size_t j = 0; j < k.size(); ++j)
        if (mono.k[j] != k[j] || mono.x[j] != 0) throw std::domain_error("truncation not closed under d/delta");
      if (mono.h != 0 || mono.tau != 1) throw std::domain_error("unexpected h or tau power in d/delta image");
      out[m] += z;
    }
  return out;
}

std::vector<std::vector<int>> all_modes(int dim, int N) {
  std::vector<std::vector<int>> out{{}};
  for (int j = 0; j < dim; ++j) {
    std::vector<std::vector<int>> next;
    for (const auto& v : out)
      for (int kj = -N; kj <= N; ++kj) {
        auto w = v;
        w.push_back(kj);
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

std::map<std::pair<int, Mask>, int> index_of(const std::vector<BasisElement>& b) {
  std::map<std::pair<int, Mask>, int> idx;
  for (std::size_t i = 0; i < b.size(); ++i) idx[{b[i].hexp, b[i].blade}] = static_cast<int>(i);
  return idx;
}

int binomial_int(int n, int k) { return k < 0 || k > n ? 0 : static_cast<int>(binomial(n, k).get_num().get_si()); }

struct Ranks {
  int total = 0;
  bool agree = true;
};

Ranks ranks_of(const std::vector<CMatrix>& blocks) {
  Ranks r;
  for (const auto& m : blocks) {
    if (m.rows() == 0 || m.cols() == 0) continue;
    int a = rank(m), b = rank_by_columns(m);
    r.total += a;
    r.agree = r.agree && a == b;
  }
  return r;
}

}  // namespace

std::vector<BasisElement> TruncatedComplex::basis(int m) const {
  auto b = graded_basis(dim(), m);
  if (mode == CoeffMode::polynomial) std::erase_if(b, [](const BasisElement& e) { return e.hexp < 0; });
  return b;
}

TruncatedComplex build_complex(const PoissonModel& model, CoeffMode mode, int m_lo, int m_hi) {
  if (model.modes < 0 || !model.omega)
    throw std::invalid_argument("build_complex: only flat torus models are supported, not " + model.name);
  if (m_lo > m_hi) throw std::invalid_argument("build_complex: empty degree range");
  TruncatedComplex c;
  c.model = model;
  c.mode = mode;
  c.N = model.modes;
  c.m_lo = m_lo;
  c.m_hi = m_hi;
  c.modes = all_modes(model.dim, model.modes);
  const int d = model.dim;
  const auto blades = blades_by_degree(d);

  // Images of mode(k) dx^I under d and delta, per mode.
  std::vector<std::map<Mask, std::pair<Image, Image>>> images(c.modes.size());
  for (std::size_t mi = 0; mi < c.modes.size(); ++mi) {
    const Fn fk = fn_mode(c.modes[mi]);
    for (Mask I : blades) {
      FieldForm x = FieldForm::from_mask(d, I, fk);
      images[mi][I] = {block_image(exterior_d(x), c.modes[mi]), block_image(koszul_delta(x, model.w), c.modes[mi])};
    }
  }

  for (int m = m_lo - 1; m <= m_hi; ++m) {
    const auto dom = c.basis(m), cod = c.basis(m + 1);
    const auto idx = index_of(cod);
    std::vector<CMatrix> per_mode;
    for (std::size_t mi = 0; mi < c.modes.size(); ++mi) {
      CMatrix mat(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
      for (std::size_t col = 0; col < dom.size(); ++col) {
        const auto& [dimg, deltaimg] = images[mi].at(dom[col].blade);
        auto put = [&](int hexp, Mask blade, const Gaussian& z) {
          auto it = idx.find({hexp, blade});
          if (it == idx.end()) throw std::domain_error("d_h image leaves the graded piece");
          mat(it->second, static_cast<int>(col)) += z;
        };
        for (const auto& [blade, z] : dimg) put(dom[col].hexp, blade, z);
        for (const auto& [blade, z] : deltaimg) put(dom[col].hexp + 1, blade, -z);
      }
      per_mode.push_back(std::move(mat));
    }
    c.dh.push_back(std::move(per_mode));
  }

  c.d_form.resize(d + 1);
  c.delta_form.resize(d + 1);
  for (int j = 0; j <= d; ++j) {
    const auto dom = blades_of_degree(d, j);
    const auto up = j < d ? blades_of_degree(d, j + 1) : std::vector<Mask>{};
    const auto down = j > 0 ? blades_of_degree(d, j - 1) : std::vector<Mask>{};
    auto position = [](const std::vector<Mask>& v, Mask m) {
      for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] == m) return static_cast<int>(i);
      throw std::domain_error("form degree bookkeeping failed");
    };
    for (std::size_t mi = 0; mi < c.modes.size(); ++mi) {
      CMatrix dm(static_cast<int>(up.size()), static_cast<int>(dom.size()));
      CMatrix deltam(static_cast<int>(down.size()), static_cast<int>(dom.size()));
      for (std::size_t col = 0; col < dom.size(); ++col) {
        const auto& [dimg, deltaimg] = images[mi].at(dom[col]);
        for (const auto& [blade, z] : dimg) dm(position(up, blade), static_cast<int>(col)) += z;
        for (const auto& [blade, z] : deltaimg) deltam(position(down, blade), static_cast<int>(col)) += z;
      }
      c.d_form[j].push_back(std::move(dm));
      c.delta_form[j].push_back(std::move(deltam));
    }
  }
  return c;
}

TruncatedComplex build_complex(const PoissonModel& model, CoeffMode mode) {
  const int top = model.dim + 2;
  return build_complex(model, mode, mode == CoeffMode::laurent ? -2 : 0, top);
}

bool DimensionReport::matches_expected() const {
  for (std::size_t i = 0; i < degrees.size(); ++i)
    if (expected[i] && *expected[i] != cohomology[i]) return false;
  return true;
}

std::string DimensionReport::table() const {
  std::ostringstream os;
  os << label << "\n  degree  dim  ker  im  H  expected\n";
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    os << "  " << degrees[i] << "  " << space[i] << "  " << kernel[i] << "  " << image_in[i] << "  " << cohomology[i]
       << "  " << (expected[i] ? std::to_string(*expected[i]) : "-") << "\n";
  }
  return os.str();
}

namespace {

std::vector<CMatrix> empty_blocks() { return {}; }

DimensionReport form_degree_report(const TruncatedComplex& c, bool use_delta) {
  DimensionReport r;
  r.label = use_delta ? "Poisson homology" : "de Rham cohomology";
  const int d = c.dim();
  const auto& out_maps = use_delta ? c.delta_form : c.d_form;
  for (int j = 0; j <= d; ++j) {
    const int space = binomial_int(d, j) * static_cast<int>(c.modes.size());
    Ranks out = ranks_of(out_maps[j]);
    // Incoming map: from j-1 under d, from j+1 under delta.
    const int src = use_delta ? j + 1 : j - 1;
    Ranks in = (src >= 0 && src <= d) ? ranks_of(out_maps[src]) : ranks_of(empty_blocks());
    r.degrees.push_back(j);
    r.space.push_back(space);
    r.kernel.push_back(space - out.total);
    r.image_in.push_back(in.total);
    r.cohomology.push_back(space - out.total - in.total);
    r.expected.push_back(binomial_int(d, use_delta ? d - j : j));
    r.ranks_agree = r.ranks_agree && out.agree && in.agree;
  }
  return r;
}

int admissible_sum(const TruncatedComplex& c, int m, const std::vector<int>& betti) {
  int total = 0;
  for (int j = 0; j <= c.dim(); ++j) {
    if ((m - j) % 2 != 0) continue;
    const int p = (m - j) / 2;
    if (c.mode == CoeffMode::polynomial && p < 0) continue;
    total += betti[j];
  }
  return total;
}

}  // namespace

DimensionReport dr_cohomology_dims(const TruncatedComplex& c) { return form_degree_report(c, false); }
DimensionReport poisson_homology_dims(const TruncatedComplex& c) { return form_degree_report(c, true); }

DimensionReport quantum_cohomology_dims(const TruncatedComplex& c) {
  DimensionReport r;
  r.label = c.mode == CoeffMode::laurent ? "Laurent quantum cohomology" : "polynomial quantum cohomology";
  std::vector<int> betti;
  for (int j = 0; j <= c.dim(); ++j) betti.push_back(binomial_int(c.dim(), j));
  for (int m = c.m_lo; m <= c.m_hi; ++m) {
    const int space = static_cast<int>(c.basis(m).size() * c.modes.size());
    Ranks out = ranks_of(c.dh[m - c.m_lo + 1]);
    Ranks in = ranks_of(c.dh[m - c.m_lo]);
    r.degrees.push_back(m);
    r.space.push_back(space);
    r.kernel.push_back(space - out.total);
    r.image_in.push_back(in.total);
    r.cohomology.push_back(space - out.total - in.total);
    r.expected.push_back(admissible_sum(c, m, betti));
    r.ranks_agree = r.ranks_agree && out.agree && in.agree;
  }
  return r;
}

DimensionReport e1_dims(const TruncatedComplex& c) {
  const DimensionReport dr = dr_cohomology_dims(c);
  DimensionReport r;
  r.label = "E1 page";
  for (int m = c.m_lo; m <= c.m_hi; ++m) {
    const int v = admissible_sum(c, m, dr.cohomology);
    r.degrees.push_back(m);
    r.space.push_back(v);
    r.kernel.push_back(v);
    r.image_in.push_back(0);
    r.cohomology.push_back(v);
    r.expected.push_back(std::nullopt);
  }
  r.ranks_agree = dr.ranks_agree;
  return r;
}

DegeneracyReport degeneracy_check(const TruncatedComplex& c) {
  DegeneracyReport rep;
  rep.quantum = quantum_cohomology_dims(c);
  rep.e1 = e1_dims(c);
  rep.degenerate = rep.quantum.cohomology == rep.e1.cohomology;
  return rep;
}

bool h_shift_invariant(const DimensionReport& q) {
  for (std::size_t i = 0; i + 2 < q.cohomology.size(); ++i)
    if (q.cohomology[i] != q.cohomology[i + 2]) return false;
  return true;
}

// ---------------------------------------------------------------------------

Fn quantum_integral(const FieldForm& a, const PoissonModel& model) {
  if (model.modes < 0 || !model.omega) throw std::invalid_argument("quantum_integral: torus model required");
  const int d = model.dim, n = d / 2;
  if (a.dim() != d) throw std::invalid_argument("quantum_integral: dimension mismatch");
  const Mask top = (Mask{1} << d) - 1;
  const FieldForm om = field_from(omega_form(*model.omega));
  Fn out;
  FieldForm om_k = FieldForm::constant(d, Fn(1));  // omega^k / k!
  for (int k = 0; k <= n; ++k) {
    if (k > 0) om_k = Fn(Gaussian(Rational(1, k))) * wedge(om_k, om);
    Fn top_coeff = wedge(a.degree_part(d - 2 * k), om_k).coeff(top);
    for (const auto& [mono, z] : top_coeff.terms()) {
      bool constant_mode = true;
      for (int j = 0; j < kMaxVars; ++j) {
        if (mono.x[j] != 0) throw std::invalid_argument("quantum_integral: polynomial coefficients on a torus");
        constant_mode = constant_mode && mono.k[j] == 0;
      }
      if (constant_mode) out.add(mono, z);
    }
  }
  return out;
}

StokesReport stokes_check(const FieldForm& a, const PoissonModel& model) {
  StokesReport r;
  r.int_d = quantum_integral(exterior_d(a), model);
  r.int_h_delta = quantum_integral(times_h(koszul_delta(a, model.w)), model);
  r.int_dh = quantum_integral(quantum_d(a, model.w), model);
  return r;
}

namespace {

// Finds c with lhs = c * rhs; nothing if no such constant exists.
std::optional<Rational> ratio(const QForm& lhs, const QForm& rhs) {
  if (rhs.is_zero()) return lhs.is_zero() ? std::optional<Rational>(Rational(0)) : std::nullopt;
  const auto& [m, c] = *rhs.terms().begin();
  Rational r = coeff(lhs.coeff(m), 0) / coeff(c, 0);
  if (!(lhs == Laurent(r) * rhs)) return std::nullopt;
  return r;
}

}  // namespace

ContractionReport contraction_identity_check(int n, int k) {
  if (n < 1 || k < 0 || k + 1 > n) throw std::invalid_argument("contraction_identity_check: need 0 <= k < n");
  const RMatrix omega = standard_omega(n), w = bivector_of(omega);
  const int d = 2 * n;
  const QForm om = omega_form(omega);
  QForm om_k = scalar_form(d, Laurent(1));
  for (int j = 1; j <= k; ++j) om_k = Laurent(Rational(1, j)) * wedge(om_k, om);
  const QForm om_k1 = Laurent(Rational(1, k + 1)) * wedge(om_k, om);

  ContractionReport rep;
  auto c1 = ratio(contract_bivector(w, om_k1), om_k);
  rep.proportional_i = c1.has_value();
  if (c1) rep.multiple_i = *c1;

  rep.proportional_ii = true;
  for (int p = 0; p + 2 * k <= d; ++p) {
    std::optional<Rational> cp;
    bool ok = true;
    for (Mask b : blades_of_degree(d, p)) {
      const QForm beta = QForm::from_mask(d, b, Laurent(1));
      QForm lhs(d);
      for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
          if (sgn(w(i - 1, j - 1)) != 0)
            lhs += Laurent(w(i - 1, j - 1)) * wedge(insert_first(i, beta), insert_first(j, om_k1));
      const QForm rhs = wedge(beta, om_k);
      if (rhs.is_zero()) {
        ok = ok && lhs.is_zero();
        continue;
      }
      auto r = ratio(lhs, rhs);
      if (!r || (cp && *cp != *r)) {
        ok = false;
        break;
      }
      cp = r;
    }
    rep.proportional_ii = rep.proportional_ii && ok;
    rep.multiples_ii.push_back(cp.value_or(Rational(0)));
  }
  return rep;
}

}  // namespace qdr
