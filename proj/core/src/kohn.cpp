#include "levikohn/kohn.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "levikohn/poly_matrix.hpp"

namespace levikohn {

namespace {

// Calls fn(indices) for every k-subset of [0, n) in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool is_monomial(const Polynomial& p) { return p.size() == 1; }

Polynomial squarefree_support(const Polynomial& p) {
  const Monomial& m = p.leading().monomial;
  Monomial s(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > 0) s.set(i, 1);
  return Polynomial::monomial(p.dim(), s, GaussianRational(1));
}

unsigned max_exponent(const Polynomial& p) {
  const Monomial& m = p.leading().monomial;
  unsigned e = 0;
  for (std::size_t i = 0; i < m.size(); ++i) e = std::max<unsigned>(e, m[i]);
  return e;
}

// Scales a real polynomial so that it is monic when its leading coefficient is real.
Polynomial normalize_real(const Polynomial& p) {
  const GaussianRational& lc = p.leading().coeff;
  if (lc.is_real()) return p * lc.inverse();
  return p;
}

class ChainBuilder {
 public:
  ChainBuilder(MultiplierChainState& s, const ChainOptions& opts) : s_(s), opts_(opts) {}

  // Adds p and its conjugate unless p already lies in the ideal described by
  // `basis` (pass nullptr to skip the membership filter). Returns the number
  // of generators appended.
  std::size_t add(const Polynomial& raw, Generator proto, const GroebnerBasis* basis) {
    if (raw.is_zero()) return 0;
    if (raw.total_degree() > opts_.max_degree) {
      s_.warnings.push_back("dropped generator of degree " + std::to_string(raw.total_degree()) + " at step " +
                            std::to_string(s_.h) + " (degree cap " + std::to_string(opts_.max_degree) + ")");
      return 0;
    }
    if (basis != nullptr && basis->contains(raw)) return 0;

    std::vector<Polynomial> polys;
    if (is_real(raw)) {
      polys.push_back(normalize_real(raw));
    } else {
      const Polynomial p = raw.monic();
      const Polynomial pc = conjugate(p);
      if (pc.monic() == p) {
        // p is a unit multiple of a real polynomial
        Polynomial re = p + pc;
        if (re.is_zero()) re = Polynomial::constant(p.dim(), GaussianRational::i()) * p;
        polys.push_back(normalize_real(re));
      } else {
        polys.push_back(p);
        polys.push_back(pc);
      }
    }
    for (const auto& g : s_.generators)
      if (g.poly == polys.front()) return 0;

    const std::size_t first = s_.generators.size();
    proto.poly = polys.front();
    s_.generators.push_back(proto);
    if (polys.size() == 2) {
      Generator partner;
      partner.poly = polys[1];
      partner.origin = GeneratorOrigin::Conjugate;
      partner.step = proto.step;
      partner.partner = first;
      partner.certificate = proto.certificate;
      s_.generators[first].partner = first + 1;
      s_.generators.push_back(std::move(partner));
    }
    return polys.size();
  }

  // Radical rules until no new generator appears or 1 is reached.
  void closure() {
    std::size_t scanned = 0;
    while (true) {
      s_.basis = groebner_basis(s_.generator_polys(), s_.dim, opts_.groebner);
      if (s_.basis.contains_one()) return;

      const std::size_t ideal_size = s_.generators.size();
      std::vector<RadicalCertificate> certs;

      auto consider = [&](RadicalCertificate cert) {
        bool useful = false;
        for (const auto& f : cert.factors)
          if (!f.is_constant() && !s_.basis.contains(f)) useful = true;
        if (!useful) return;
        cert.ideal_size = ideal_size;
        cert.step = s_.h;
        certs.push_back(std::move(cert));
      };

      auto unit = [&](std::size_t i, const GaussianRational& c) {
        std::vector<Polynomial> cof(ideal_size, Polynomial(s_.dim));
        cof[i] = Polynomial::constant(s_.dim, c);
        return cof;
      };

      auto try_witness = [&](const Polynomial& w, std::optional<std::vector<Polynomial>> cof) {
        if (w.is_zero()) return;
        if (is_monomial(w)) {
          RadicalCertificate c;
          c.rule = RadicalRule::Power;
          c.witness = w;
          c.factors = {squarefree_support(w)};
          c.exponent = max_exponent(w);
          c.cofactors = cof;
          if (c.exponent > 1) consider(std::move(c));
        }
        if (is_real(w)) {
          if (auto sos = hermitian_sos(w)) {
            RadicalCertificate c;
            c.rule = RadicalRule::SumOfSquares;
            c.witness = w;
            c.weights = std::move(sos->weights);
            c.factors = std::move(sos->factors);
            c.cofactors = std::move(cof);
            consider(std::move(c));
          }
        }
      };

      for (std::size_t i = scanned; i < ideal_size; ++i) {
        const Generator& g = s_.generators[i];
        if (is_real(g.poly)) {
          try_witness(g.poly, unit(i, GaussianRational(1)));
          continue;
        }
        if (is_monomial(g.poly)) try_witness(g.poly, unit(i, GaussianRational(1)));
        if (!g.partner || *g.partner < i) continue;  // the pair is handled once, from its first member
        const std::size_t j = *g.partner;
        const GaussianRational half = GaussianRational::fraction(1, 2);
        const GaussianRational half_over_i = half * GaussianRational::i().inverse();
        auto re_cof = unit(i, half);
        re_cof[j] = Polynomial::constant(s_.dim, half);
        try_witness(real_part(g.poly), std::move(re_cof));
        auto im_cof = unit(i, half_over_i);
        im_cof[j] = Polynomial::constant(s_.dim, -half_over_i);
        try_witness(imag_part(g.poly), std::move(im_cof));
      }
      scanned = ideal_size;
      // Monomials of the reduced basis lie in the ideal even when no generator is one.
      for (const auto& b : s_.basis.polynomials())
        if (is_monomial(b)) try_witness(b, std::nullopt);

      std::size_t added = 0;
      for (auto& c : certs) {
        const std::size_t cert_idx = s_.certificates.size();
        const auto origin = c.rule == RadicalRule::Power ? GeneratorOrigin::PowerRadical : GeneratorOrigin::RealRadical;
        const std::vector<Polynomial> factors = c.factors;
        s_.certificates.push_back(std::move(c));
        std::size_t by_this = 0;
        for (const auto& f : factors) {
          if (f.is_constant()) continue;
          Generator proto;
          proto.origin = origin;
          proto.step = s_.h;
          proto.certificate = cert_idx;
          by_this += add(f, proto, &s_.basis);
        }
        // an earlier certificate of this round already adjoined every factor
        if (by_this == 0) s_.certificates.pop_back();
        added += by_this;
      }
      if (added == 0) return;
    }
  }

  void add_minors(std::size_t first_new_row) {
    const std::size_t k = s_.dim - s_.q + 1;
    const GroebnerBasis before = s_.basis;
    for (auto& mnr : minors(s_.module, k, first_new_row)) {
      Generator proto;
      proto.origin = GeneratorOrigin::Minor;
      proto.step = s_.h;
      proto.minor_rows = mnr.rows;
      proto.minor_cols = mnr.cols;
      add(mnr.value, proto, before.dim() == s_.dim ? &before : nullptr);
    }
  }

  void finish_step() {
    s_.generators_per_step.push_back(s_.generators.size());
    if (!s_.basis.contains_one()) return;
    s_.status = ChainStatus::Certified;
    if (!opts_.lift_certificate) return;
    try {
      const auto gens = s_.generator_polys();
      LiftingBasis lift(gens, s_.dim, opts_.groebner);
      s_.one_cofactors = lift.represent(Polynomial::constant(s_.dim, GaussianRational(1)));
    } catch (const BudgetError&) {
      s_.warnings.push_back("cofactors of 1 not computed: Groebner budget exceeded during lifting");
    }
  }

 private:
  MultiplierChainState& s_;
  const ChainOptions& opts_;
};

}  // namespace

std::vector<Polynomial> MultiplierChainState::generator_polys(std::size_t count) const {
  std::vector<Polynomial> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count && i < generators.size(); ++i) out.push_back(generators[i].poly);
  return out;
}

std::vector<Minor> minors(const FormModuleMatrix& m, std::size_t k, std::size_t first_new_row) {
  const std::size_t n = m.dim;
  if (k < 1 || k > n) throw InputError("minor size must lie in [1, n]");
  std::vector<Minor> out;
  for_each_subset(m.rows.size(), k, [&](const std::vector<std::size_t>& rows) {
    if (rows.back() < first_new_row) return;
    for (std::size_t r : rows) {
      bool zero = true;
      for (const auto& e : m.rows[r].entries) zero = zero && e.is_zero();
      if (zero) return;
    }
    PolyMatrix full;
    for (std::size_t r : rows) full.push_back(m.rows[r].entries);
    for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
      std::vector<std::size_t> all(k);
      for (std::size_t i = 0; i < k; ++i) all[i] = i;
      Polynomial det = determinant(submatrix(full, all, cols), n);
      if (!det.is_zero()) out.push_back({rows, cols, std::move(det)});
    });
  });
  return out;
}

std::optional<SosDecomposition> hermitian_sos(const Polynomial& w) {
  if (w.is_zero() || !is_real(w)) return std::nullopt;
  const std::size_t n = w.dim();
  // Split every term z^a conj(z)^b into its holomorphic and antiholomorphic halves.
  auto holo = [n](const Monomial& m, bool conj_half) {
    Monomial h(2 * n);
    for (std::size_t j = 0; j < n; ++j) h.set(j, m[conj_half ? n + j : j]);
    return h;
  };
  std::map<Monomial, std::size_t, GrevlexGreater> index;
  for (const auto& t : w.terms()) {
    index.emplace(holo(t.monomial, false), 0);
    index.emplace(holo(t.monomial, true), 0);
  }
  std::vector<Monomial> basis;
  for (auto& [m, i] : index) {
    i = basis.size();
    basis.push_back(m);
  }
  const std::size_t N = basis.size();
  std::vector<std::vector<GaussianRational>> g(N, std::vector<GaussianRational>(N));
  for (const auto& t : w.terms()) g[index[holo(t.monomial, false)]][index[holo(t.monomial, true)]] = t.coeff;

  SosDecomposition out;
  for (std::size_t k = 0; k < N; ++k) {
    const GaussianRational d = g[k][k];
    if (!d.is_real() || sgn(d.re()) < 0) return std::nullopt;
    if (d.is_zero()) {
      for (std::size_t j = k + 1; j < N; ++j)
        if (!g[j][k].is_zero()) return std::nullopt;
      continue;
    }
    std::vector<GaussianRational> col(N);
    for (std::size_t j = k; j < N; ++j) col[j] = g[j][k] / d;
    for (std::size_t a = k; a < N; ++a)
      for (std::size_t b = k; b < N; ++b) g[a][b] -= d * col[a] * col[b].conj();
    std::vector<Term> terms;
    for (std::size_t j = k; j < N; ++j)
      if (!col[j].is_zero()) terms.push_back({basis[j], col[j]});
    out.weights.push_back(d);
    out.factors.push_back(Polynomial::from_terms(n, std::move(terms)));
  }
  return out;
}

MultiplierChainState init_chain(const DefiningFunction& d, std::size_t q, const ChainOptions& opts) {
  const std::size_t n = d.dim();
  if (q < 1 || q + 1 > n) throw InputError("q must satisfy 1 <= q <= n-1");
  MultiplierChainState s;
  s.dim = n;
  s.q = q;
  s.h = 1;
  s.r = d.r();
  s.module.dim = n;
  s.module.rows.push_back({gradient_form(d), RowOrigin::DefiningGradient, 1, 0});
  const PolyMatrix hess = complex_hessian(d);
  for (std::size_t a = 0; a < n; ++a) s.module.rows.push_back({hess[a], RowOrigin::HessianRow, 1, a});

  ChainBuilder b(s, opts);
  Generator rg;
  rg.origin = GeneratorOrigin::DefiningFunction;
  b.add(d.r(), rg, nullptr);
  s.basis = groebner_basis(s.generator_polys(), n, opts.groebner);
  b.add_minors(0);
  b.closure();
  b.finish_step();
  return s;
}

MultiplierChainState step_chain(const MultiplierChainState& prev, const ChainOptions& opts) {
  if (prev.status != ChainStatus::Running) throw InputError("step_chain: chain is no longer running");
  MultiplierChainState s = prev;
  s.h = prev.h + 1;
  const std::size_t old_count = prev.generators.size();
  const std::size_t first_new_row = s.module.rows.size();
  // Generators present before the previous step were already differentiated.
  const std::size_t from = prev.generators_per_step.size() >= 2 ? prev.generators_per_step[prev.generators_per_step.size() - 2] : 0;
  for (std::size_t i = from; i < old_count; ++i) {
    auto row = holomorphic_gradient(prev.generators[i].poly);
    if (std::all_of(row.begin(), row.end(), [](const Polynomial& p) { return p.is_zero(); })) continue;
    s.module.rows.push_back({std::move(row), RowOrigin::MultiplierGradient, s.h, i});
  }

  ChainBuilder b(s, opts);
  if (s.module.rows.size() > first_new_row) b.add_minors(first_new_row);
  b.closure();
  b.finish_step();
  if (s.status == ChainStatus::Certified) return s;

  const auto old_gens = prev.generator_polys();
  bool stable = true;
  for (std::size_t i = old_count; i < s.generators.size() && stable; ++i)
    stable = radical_membership(s.generators[i].poly, old_gens, s.dim, opts.groebner);
  if (stable) s.status = ChainStatus::Stuck;
  return s;
}

MultiplierChainState run_chain(const DefiningFunction& d, std::size_t q, std::size_t max_h, const ChainOptions& opts) {
  if (max_h < 1) throw InputError("max_h must be at least 1");
  MultiplierChainState s;
  s.dim = d.dim();
  s.q = q;
  s.r = d.r();
  try {
    s = init_chain(d, q, opts);
    while (s.status == ChainStatus::Running && s.h < max_h) s = step_chain(s, opts);
  } catch (const ChainBudgetError&) {
    throw;
  } catch (const BudgetError& e) {
    throw ChainBudgetError(e.what(), s);
  }
  if (s.status == ChainStatus::Running) s.status = ChainStatus::BudgetExhausted;
  return s;
}

bool verify_certificate(const MultiplierChainState& s, const RadicalCertificate& c, const GroebnerOptions& opts) {
  if (c.ideal_size > s.generators.size()) return false;
  const auto gens = s.generator_polys(c.ideal_size);
  if (c.cofactors) {
    if (c.cofactors->size() != gens.size()) return false;
    if (combine(*c.cofactors, gens, s.dim) != c.witness) return false;
  } else if (!groebner_basis(gens, s.dim, opts).contains(c.witness)) {
    return false;
  }
  switch (c.rule) {
    case RadicalRule::SumOfSquares: {
      if (c.weights.size() != c.factors.size() || c.factors.empty()) return false;
      Polynomial sum(s.dim);
      for (std::size_t k = 0; k < c.factors.size(); ++k) {
        if (!c.weights[k].is_real() || sgn(c.weights[k].re()) <= 0) return false;
        sum += c.weights[k] * (c.factors[k] * conjugate(c.factors[k]));
      }
      return sum == c.witness;
    }
    case RadicalRule::Power: {
      if (c.factors.size() != 1 || !is_monomial(c.witness) || !is_monomial(c.factors[0])) return false;
      const Polynomial p = c.factors[0].pow(c.exponent);
      return c.witness.leading().monomial.divides(p.leading().monomial);
    }
  }
  return false;
}

bool verify_one_certificate(const MultiplierChainState& s) {
  if (!s.one_cofactors) return false;
  const auto gens = s.generator_polys();
  if (s.one_cofactors->size() != gens.size()) return false;
  return combine(*s.one_cofactors, gens, s.dim) == Polynomial::constant(s.dim, GaussianRational(1));
}

std::vector<Polynomial> real_variety_equations(const MultiplierChainState& s) {
  std::vector<Polynomial> out;
  auto push = [&](const Polynomial& p) {
    if (p.is_zero()) return;
    const Polynomial c = normalize_real(p);
    for (const auto& o : out)
      if (o == c || o == -c) return;
    out.push_back(c);
  };
  for (const auto& g : s.generators) {
    if (is_real(g.poly)) {
      push(g.poly);
    } else {
      push(real_part(g.poly));
      push(imag_part(g.poly));
    }
  }
  return out;
}

std::string to_string(ChainStatus s) {
  switch (s) {
    case ChainStatus::Running: return "running";
    case ChainStatus::Certified: return "certified";
    case ChainStatus::Stuck: return "stuck";
    case ChainStatus::BudgetExhausted: return "budget-exhausted";
  }
  return "unknown";
}

std::string to_string(GeneratorOrigin o) {
  switch (o) {
    case GeneratorOrigin::DefiningFunction: return "defining-function";
    case GeneratorOrigin::Minor: return "minor";
    case GeneratorOrigin::Conjugate: return "conjugate";
    case GeneratorOrigin::RealRadical: return "real-radical";
    case GeneratorOrigin::PowerRadical: return "power-radical";
  }
  return "unknown";
}

std::string to_string(RowOrigin o) {
  switch (o) {
    case RowOrigin::DefiningGradient: return "defining-gradient";
    case RowOrigin::HessianRow: return "hessian-row";
    case RowOrigin::MultiplierGradient: return "multiplier-gradient";
  }
  return "unknown";
}

std::string to_string(RadicalRule r) {
  switch (r) {
    case RadicalRule::SumOfSquares: return "sum-of-squares";
    case RadicalRule::Power: return "power";
  }
  return "unknown";
}

}  // namespace levikohn
