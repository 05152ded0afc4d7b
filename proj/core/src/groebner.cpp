#include "levikohn/groebner.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "levikohn/error.hpp"

namespace levikohn {

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

// Selection order for the pair queue: smallest lcm first (normal strategy),
// then by indices so that runs are reproducible.
bool pair_before(const Pair& a, const Pair& b) {
  const int c = grevlex_compare(a.lcm, b.lcm);
  if (c != 0) return c < 0;
  if (a.j != b.j) return a.j < b.j;
  return a.i < b.i;
}

class Budget {
 public:
  explicit Budget(std::size_t limit) : limit_(limit) {}
  void charge() {
    if (++used_ > limit_)
      throw BudgetError("Groebner reduction budget exceeded (" + std::to_string(limit_) + " reductions)");
  }

 private:
  std::size_t limit_;
  std::size_t used_ = 0;
};

// Buchberger with optional cofactor tracking. Basis elements are kept monic.
class Engine {
 public:
  Engine(std::size_t dim, std::size_t ngens, bool track, std::size_t budget)
      : dim_(dim), ngens_(ngens), track_(track), budget_(budget) {}

  struct Element {
    Polynomial poly;
    std::vector<Polynomial> cof;
  };

  std::vector<Element> elements;

  // Full reduction of f by the current elements; cofactors of the quotient
  // are accumulated into `cof` (f - Σ cof·gens stays invariant).
  void reduce(Polynomial& f, std::vector<Polynomial>* cof) {
    Polynomial rest(dim_);
    while (!f.is_zero()) {
      const Term& lt = f.leading();
      const Element* div = nullptr;
      for (const auto& e : elements) {
        if (e.poly.leading().monomial.divides(lt.monomial)) {
          div = &e;
          break;
        }
      }
      if (div == nullptr) {
        rest.push_trailing(f.pop_leading());
        continue;
      }
      budget_.charge();
      const GaussianRational c = lt.coeff;
      const Monomial m = lt.monomial / div->poly.leading().monomial;
      if (cof != nullptr) {
        for (std::size_t k = 0; k < ngens_; ++k) {
          if (div->cof[k].is_zero()) continue;
          (*cof)[k].subtract_multiple(c, m, div->cof[k]);
        }
      }
      f.subtract_multiple(c, m, div->poly);
    }
    f = std::move(rest);
  }

  void add(Polynomial p, std::vector<Polynomial> cof) {
    if (p.is_zero()) return;
    const GaussianRational inv = p.leading().coeff.inverse();
    p *= inv;
    if (track_)
      for (auto& c : cof) c *= inv;
    const std::size_t idx = elements.size();
    const Monomial lm = p.leading().monomial;
    elements.push_back({std::move(p), std::move(cof)});
    for (std::size_t i = 0; i < idx; ++i) {
      const Monomial& li = elements[i].poly.leading().monomial;
      if (Monomial::coprime(li, lm)) continue;  // product criterion
      pending_.insert({i, idx});
      queue_.push_back({i, idx, Monomial::lcm(li, lm)});
    }
  }

  bool contains_constant() const {
    for (const auto& e : elements)
      if (e.poly.leading().monomial.is_one()) return true;
    return false;
  }

  void run() {
    while (!queue_.empty() && !contains_constant()) {
      auto best = std::min_element(queue_.begin(), queue_.end(), pair_before);
      const Pair pr = *best;
      queue_.erase(best);
      pending_.erase({pr.i, pr.j});
      if (chain_criterion(pr)) continue;

      const Element& a = elements[pr.i];
      const Element& b = elements[pr.j];
      const Monomial ma = pr.lcm / a.poly.leading().monomial;
      const Monomial mb = pr.lcm / b.poly.leading().monomial;
      const GaussianRational one(1);
      const GaussianRational minus_one(-1);
      Polynomial s(dim_);
      s.subtract_multiple(minus_one, ma, a.poly);
      s.subtract_multiple(one, mb, b.poly);
      std::vector<Polynomial> cof;
      if (track_) {
        cof.assign(ngens_, Polynomial(dim_));
        for (std::size_t k = 0; k < ngens_; ++k) {
          cof[k].subtract_multiple(minus_one, ma, a.cof[k]);
          cof[k].subtract_multiple(one, mb, b.cof[k]);
        }
      }
      reduce(s, track_ ? &cof : nullptr);
      if (!s.is_zero()) add(std::move(s), std::move(cof));
    }
  }

 private:
  // Skip (i, j) if some k has LM(k) | lcm and both (i,k), (j,k) are already
  // treated.
  bool chain_criterion(const Pair& pr) const {
    for (std::size_t k = 0; k < elements.size(); ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!elements[k].poly.leading().monomial.divides(pr.lcm)) continue;
      const auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (pending_.count(key(pr.i, k)) || pending_.count(key(pr.j, k))) continue;
      return true;
    }
    return false;
  }

  std::size_t dim_;
  std::size_t ngens_;
  bool track_;
  Budget budget_;
  std::vector<Pair> queue_;
  std::set<std::pair<std::size_t, std::size_t>> pending_;
};

void check_dims(std::span<const Polynomial> gens, std::size_t dim) {
  for (const auto& g : gens)
    if (g.dim() != dim) throw std::invalid_argument("groebner: generators of mixed dimension");
}

}  // namespace

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (f.dim() != dim_) throw std::invalid_argument("normal_form: dimension mismatch");
  Polynomial g = f;
  Polynomial rest(dim_);
  while (!g.is_zero()) {
    const Term& lt = g.leading();
    const Polynomial* div = nullptr;
    for (const auto& b : basis_) {
      if (b.leading().monomial.divides(lt.monomial)) {
        div = &b;
        break;
      }
    }
    if (div == nullptr) {
      rest.push_trailing(g.pop_leading());
      continue;
    }
    const GaussianRational c = lt.coeff;
    g.subtract_multiple(c, lt.monomial / div->leading().monomial, *div);
  }
  return rest;
}

GroebnerBasis groebner_basis(std::span<const Polynomial> gens, std::size_t dim, const GroebnerOptions& opts) {
  check_dims(gens, dim);
  Engine eng(dim, 0, false, opts.max_reductions);
  for (const auto& g : gens) {
    Polynomial p = g;
    eng.reduce(p, nullptr);
    eng.add(std::move(p), {});
  }
  eng.run();

  if (eng.contains_constant()) return GroebnerBasis(dim, {Polynomial::constant(dim, GaussianRational(1))});

  // Minimal basis: drop elements whose leading monomial is divisible by another's.
  std::vector<Polynomial> minimal;
  const auto& el = eng.elements;
  for (std::size_t i = 0; i < el.size(); ++i) {
    const Monomial& li = el[i].poly.leading().monomial;
    bool redundant = false;
    for (std::size_t j = 0; j < el.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& lj = el[j].poly.leading().monomial;
      if (lj.divides(li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(el[i].poly);
  }
  std::sort(minimal.begin(), minimal.end(), [](const Polynomial& a, const Polynomial& b) {
    return grevlex_compare(a.leading().monomial, b.leading().monomial) > 0;
  });

  // Interreduce tails.
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    GroebnerBasis tmp(dim, std::move(others));
    Polynomial lead = Polynomial::monomial(dim, minimal[i].leading().monomial, GaussianRational(1));
    Polynomial tail = minimal[i] - lead;
    reduced.push_back(lead + tmp.normal_form(tail));
  }
  return GroebnerBasis(dim, std::move(reduced));
}

bool radical_membership(const Polynomial& f, std::span<const Polynomial> ideal, std::size_t dim,
                        const GroebnerOptions& opts) {
  if (f.dim() != dim) throw std::invalid_argument("radical_membership: dimension mismatch");
  check_dims(ideal, dim);
  if (f.is_zero()) return true;
  if (dim + 1 > kMaxDimension) throw InputError("dimension too large for radical membership");
  const std::size_t ext = dim + 1;
  std::vector<Polynomial> gens;
  gens.reserve(ideal.size() + 1);
  for (const auto& g : ideal) gens.push_back(embed(g, ext));
  gens.push_back(Polynomial::constant(ext, GaussianRational(1)) - Polynomial::z(ext, dim) * embed(f, ext));
  return groebner_basis(gens, ext, opts).contains_one();
}

LiftingBasis::LiftingBasis(std::span<const Polynomial> gens, std::size_t dim, const GroebnerOptions& opts)
    : dim_(dim), ngens_(gens.size()), opts_(opts) {
  check_dims(gens, dim);
  Engine eng(dim, ngens_, true, opts.max_reductions);
  for (std::size_t k = 0; k < ngens_; ++k) {
    std::vector<Polynomial> cof(ngens_, Polynomial(dim));
    cof[k] = Polynomial::constant(dim, GaussianRational(1));
    Polynomial p = gens[k];
    eng.reduce(p, &cof);
    eng.add(std::move(p), std::move(cof));
  }
  eng.run();
  for (auto& e : eng.elements) basis_.push_back({std::move(e.poly), std::move(e.cof)});
}

std::optional<std::vector<Polynomial>> LiftingBasis::represent(const Polynomial& f) const {
  if (f.dim() != dim_) throw std::invalid_argument("represent: dimension mismatch");
  Budget budget(opts_.max_reductions);
  std::vector<Polynomial> cof(ngens_, Polynomial(dim_));
  Polynomial g = f;
  while (!g.is_zero()) {
    const Term& lt = g.leading();
    const Element* div = nullptr;
    for (const auto& e : basis_) {
      if (e.poly.leading().monomial.divides(lt.monomial)) {
        div = &e;
        break;
      }
    }
    if (div == nullptr) return std::nullopt;
    budget.charge();
    const GaussianRational c = lt.coeff;
    const Monomial m = lt.monomial / div->poly.leading().monomial;
    for (std::size_t k = 0; k < ngens_; ++k)
      if (!div->cofactors[k].is_zero()) cof[k].subtract_multiple(-c, m, div->cofactors[k]);
    g.subtract_multiple(c, m, div->poly);
  }
  return cof;
}

Polynomial combine(std::span<const Polynomial> cofactors, std::span<const Polynomial> gens, std::size_t dim) {
  if (cofactors.size() != gens.size()) throw std::invalid_argument("combine: length mismatch");
  Polynomial out(dim);
  for (std::size_t k = 0; k < gens.size(); ++k) out += cofactors[k] * gens[k];
  return out;
}

}  // namespace levikohn
