#include "levikohn/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace levikohn {

namespace {

// Merges two term lists that are each sorted and zero-free.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp;
    if (i == a.size()) {
      cmp = -1;
    } else if (j == b.size()) {
      cmp = 1;
    } else {
      cmp = grevlex_compare(a[i].monomial, b[j].monomial);
    }
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(subtract ? Term{b[j].monomial, -b[j].coeff} : b[j]);
      ++j;
    } else {
      GaussianRational c = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

void check_dims(const Polynomial& a, const Polynomial& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("polynomial dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
}

}  // namespace

Polynomial::Polynomial(std::size_t dim) : dim_(dim) {
  if (dim > kMaxDimension) throw std::invalid_argument("ambient dimension exceeds " + std::to_string(kMaxDimension));
}

Polynomial Polynomial::constant(std::size_t dim, const GaussianRational& c) {
  return monomial(dim, Monomial(2 * dim), c);
}

Polynomial Polynomial::z(std::size_t dim, std::size_t j) {
  Monomial m(2 * dim);
  m.set(j, 1);
  return monomial(dim, m, 1);
}

Polynomial Polynomial::zbar(std::size_t dim, std::size_t j) {
  Monomial m(2 * dim);
  m.set(dim + j, 1);
  return monomial(dim, m, 1);
}

Polynomial Polynomial::x(std::size_t dim, std::size_t j) {
  return (z(dim, j) + zbar(dim, j)) * GaussianRational::fraction(1, 2);
}

Polynomial Polynomial::y(std::size_t dim, std::size_t j) {
  // (z - zbar)/(2i) = -i/2 * (z - zbar)
  return (z(dim, j) - zbar(dim, j)) * GaussianRational(mpq_class(0), mpq_class(-1, 2));
}

Polynomial Polynomial::monomial(std::size_t dim, const Monomial& m, const GaussianRational& c) {
  Polynomial p(dim);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t dim, std::vector<Term> terms) {
  Polynomial p(dim);
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

void Polynomial::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return grevlex_compare(a.monomial, b.monomial) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  terms_ = std::move(out);
}

GaussianRational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return {};
}

int Polynomial::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().monomial.degree());
}

int Polynomial::lowest_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.back().monomial.degree());
}

bool Polynomial::is_holomorphic() const {
  for (const auto& t : terms_)
    for (std::size_t j = dim_; j < 2 * dim_; ++j)
      if (t.monomial[j] != 0) return false;
  return true;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_dims(*this, o);
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_dims(*this, o);
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_dims(a, b);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
  return Polynomial::from_terms(a.dim_, std::move(prod));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.dim_ != b.dim_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].monomial != b.terms_[i].monomial || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(dim_, 1);
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

void Polynomial::subtract_multiple(const GaussianRational& c, const Monomial& m, const Polynomial& g) {
  std::vector<Term> scaled;
  scaled.reserve(g.terms_.size());
  for (const auto& t : g.terms_) scaled.push_back({t.monomial * m, t.coeff * c});
  terms_ = merge_terms(terms_, scaled, true);
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coeff.is_one()) return *this;
  return *this * terms_.front().coeff.inverse();
}

Term Polynomial::pop_leading() {
  Term t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

void Polynomial::push_trailing(Term t) {
  if (t.coeff.is_zero()) return;
  if (!terms_.empty() && grevlex_compare(terms_.back().monomial, t.monomial) <= 0)
    throw std::logic_error("push_trailing: term out of order");
  terms_.push_back(std::move(t));
}

Polynomial wirtinger_d(const Polynomial& p, std::size_t var, DerivativeKind kind) {
  if (var >= p.dim()) throw std::out_of_range("variable index out of range");
  const std::size_t slot = kind == DerivativeKind::Holomorphic ? var : p.dim() + var;
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    const auto e = t.monomial[slot];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(slot, static_cast<std::uint16_t>(e - 1));
    out.push_back({m, t.coeff * GaussianRational(static_cast<long>(e))});
  }
  return Polynomial::from_terms(p.dim(), std::move(out));
}

Polynomial conjugate(const Polynomial& p) {
  const std::size_t n = p.dim();
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
      m.set(j, t.monomial[n + j]);
      m.set(n + j, t.monomial[j]);
    }
    out.push_back({m, t.coeff.conj()});
  }
  return Polynomial::from_terms(n, std::move(out));
}

bool is_real(const Polynomial& p) { return p == conjugate(p); }

Polynomial real_part(const Polynomial& p) { return (p + conjugate(p)) * GaussianRational::fraction(1, 2); }

Polynomial imag_part(const Polynomial& p) {
  return (p - conjugate(p)) * GaussianRational(mpq_class(0), mpq_class(-1, 2));
}

GaussianRational evaluate(const Polynomial& p, std::span<const GaussianRational> point) {
  const std::size_t n = p.dim();
  if (point.size() != n) throw std::invalid_argument("point has wrong number of coordinates");
  GaussianRational sum;
  for (const auto& t : p.terms()) {
    GaussianRational v = t.coeff;
    for (std::size_t j = 0; j < n; ++j) {
      for (unsigned e = 0; e < t.monomial[j]; ++e) v *= point[j];
      if (t.monomial[n + j] != 0) {
        const GaussianRational c = point[j].conj();
        for (unsigned e = 0; e < t.monomial[n + j]; ++e) v *= c;
      }
    }
    sum += v;
  }
  return sum;
}

std::complex<double> evaluate(const Polynomial& p, std::span<const std::complex<double>> point) {
  const std::size_t n = p.dim();
  if (point.size() != n) throw std::invalid_argument("point has wrong number of coordinates");
  std::complex<double> sum{0.0, 0.0};
  for (const auto& t : p.terms()) {
    std::complex<double> v = t.coeff.to_complex();
    for (std::size_t j = 0; j < n; ++j) {
      for (unsigned e = 0; e < t.monomial[j]; ++e) v *= point[j];
      for (unsigned e = 0; e < t.monomial[n + j]; ++e) v *= std::conj(point[j]);
    }
    sum += v;
  }
  return sum;
}

Polynomial embed(const Polynomial& p, std::size_t new_dim) {
  const std::size_t n = p.dim();
  if (new_dim < n) throw std::invalid_argument("embed: target dimension smaller than source");
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m(2 * new_dim);
    for (std::size_t j = 0; j < n; ++j) {
      m.set(j, t.monomial[j]);
      m.set(new_dim + j, t.monomial[n + j]);
    }
    out.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(new_dim, std::move(out));
}

std::vector<Polynomial> holomorphic_gradient(const Polynomial& p) {
  std::vector<Polynomial> g;
  g.reserve(p.dim());
  for (std::size_t j = 0; j < p.dim(); ++j) g.push_back(wirtinger_d(p, j, DerivativeKind::Holomorphic));
  return g;
}

std::string to_string(const Polynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  const std::size_t n = p.dim();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::string factors;
    auto append = [&](const std::string& f) {
      if (!factors.empty()) factors += "*";
      factors += f;
    };
    for (std::size_t j = 0; j < n; ++j) {
      const auto e = t.monomial[j];
      if (e == 0) continue;
      std::string f = var + std::to_string(j + 1);
      append(e == 1 ? f : f + "^" + std::to_string(e));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const auto e = t.monomial[n + j];
      if (e == 0) continue;
      std::string f = "conj(" + var + std::to_string(j + 1) + ")";
      append(e == 1 ? f : f + "^" + std::to_string(e));
    }

    GaussianRational c = t.coeff;
    bool negative = false;
    if (c.is_real() && sgn(c.re()) < 0) {
      negative = true;
      c = -c;
    }
    std::string coeff;
    if (factors.empty()) {
      coeff = c.to_string();
    } else if (!c.is_one()) {
      coeff = c.to_string();
      if (coeff.find('/') != std::string::npos && coeff.front() != '(') coeff = "(" + coeff + ")";
      coeff += "*";
    }
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    out += coeff + factors;
    first = false;
  }
  return out;
}

}  // namespace levikohn
