#include "catenary/poly.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "catenary/error.hpp"

namespace catenary {

// VariableContext -----------------------------------------------------------

VariableContext::VariableContext(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw ParameterError("empty variable name");
    if (!seen.insert(n).second) throw ParameterError("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> VariableContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

// Monomial ------------------------------------------------------------------

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exponents_(std::move(exponents)) {
  degree_ = std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0});
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  std::vector<std::uint32_t> e(nvars, 0);
  e.at(index) = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] != 0 && other.exponents_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<std::uint32_t> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exponents_[i], other.exponents_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  std::vector<std::uint32_t> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (divisor.exponents_[i] > exponents_[i]) {
      throw ParameterError("monomial quotient: divisor does not divide");
    }
    e[i] = exponents_[i] - divisor.exponents_[i];
  }
  return Monomial(std::move(e));
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] != 0) s.push_back(i);
  }
  return s;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> e(a.exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exponents_[i] + b.exponents_[i];
  return Monomial(std::move(e));
}

// MonomialOrder -------------------------------------------------------------

namespace {

std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                   std::size_t hi) {
  std::uint64_t da = 0;
  std::uint64_t db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.size();
  switch (kind_) {
    case Kind::lex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case Kind::grevlex:
      if (a.total_degree() != b.total_degree()) return a.total_degree() <=> b.total_degree();
      for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return b[i] <=> a[i];
      }
      return std::strong_ordering::equal;
    case Kind::elimination: {
      const std::size_t k = std::min(block_, n);
      if (auto c = grevlex_range(a, b, 0, k); c != 0) return c;
      return grevlex_range(a, b, k, n);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::lex: return "lex";
    case Kind::grevlex: return "grevlex";
    case Kind::elimination: return "elim" + std::to_string(block_);
  }
  return "?";
}

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                       const MonomialOrder& order) {
  if (a.size() != b.size()) {
    throw ContextError("monomials from different variable contexts");
  }
  return order.compare(a, b);
}

// PolyRing ------------------------------------------------------------------

RingPtr PolyRing::make(Field field, std::shared_ptr<const VariableContext> variables,
                       MonomialOrder order) {
  return RingPtr(new PolyRing(field, std::move(variables), order));
}

RingPtr PolyRing::make(Field field, std::vector<std::string> names, MonomialOrder order) {
  return make(field, std::make_shared<const VariableContext>(std::move(names)), order);
}

RingPtr PolyRing::with_order(MonomialOrder order) const {
  return make(field_, variables_, order);
}

bool PolyRing::same_context(const PolyRing& other) const {
  if (this == &other) return true;
  return field_ == other.field_ &&
         (variables_ == other.variables_ || *variables_ == *other.variables_);
}

std::string PolyRing::describe() const {
  std::string s = field_.name() + "[";
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (i) s += ",";
    s += variables_->name(i);
  }
  return s + "]";
}

// Polynomial ----------------------------------------------------------------

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring() == b.ring()) return;
  if (!a.ring()->same_context(*b.ring())) {
    throw ContextError("polynomials from different contexts: " + a.ring()->describe() + " vs " +
                       b.ring()->describe());
  }
  if (!(a.ring()->order() == b.ring()->order())) {
    throw ContextError("polynomials sorted under different orders: " +
                       a.ring()->order().name() + " vs " + b.ring()->order().name());
  }
}

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const Field& field = ring_->field();
  const MonomialOrder& order = ring_->order();
  for (auto& t : terms) {
    if (t.monomial.size() != ring_->nvars()) {
      throw ContextError("term has " + std::to_string(t.monomial.size()) +
                         " exponents, ring has " + std::to_string(ring_->nvars()) + " variables");
    }
    t.coefficient = field.normalize(t.coefficient);
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.monomial, b.monomial) > 0;
  });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coefficient = field.add(terms_.back().coefficient, t.coefficient);
      if (terms_.back().coefficient == 0) terms_.pop_back();
      continue;
    }
    if (t.coefficient != 0) terms_.push_back(std::move(t));
  }
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& value) {
  const std::size_t n = ring->nvars();
  return Polynomial(std::move(ring), {Term{value, Monomial(n)}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw ContextError("variable index out of range");
  const std::size_t n = ring->nvars();
  return Polynomial(std::move(ring), {Term{1, Monomial::variable(n, index)}});
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  auto idx = ring->variables().index_of(name);
  if (!idx) throw ContextError("unknown variable '" + std::string(name) + "'");
  return variable(std::move(ring), *idx);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const Scalar& coefficient) {
  return Polynomial(std::move(ring), {Term{coefficient, std::move(m)}});
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw ParameterError("leading term of the zero polynomial");
  return terms_.front();
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.total_degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.monomial.total_degree() != terms_.front().monomial.total_degree()) return false;
  }
  return true;
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coefficient = ring_->field().neg(t.coefficient);
  return Polynomial(ring_, std::move(out), Sorted{});
}

namespace {

// Merge of two sorted term lists: a + sign * b.
std::vector<Term> merge_terms(const PolyRing& ring, const std::vector<Term>& a,
                              const std::vector<Term>& b, bool subtract) {
  const Field& field = ring.field();
  const MonomialOrder& order = ring.order();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = order.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(Term{subtract ? field.neg(b[j].coefficient) : b[j].coefficient, b[j].monomial});
      ++j;
    } else {
      Scalar s = subtract ? field.sub(a[i].coefficient, b[j].coefficient)
                          : field.add(a[i].coefficient, b[j].coefficient);
      if (s != 0) out.push_back(Term{std::move(s), a[i].monomial});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(Term{subtract ? field.neg(b[j].coefficient) : b[j].coefficient, b[j].monomial});
  }
  return out;
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  return Polynomial(a.ring_, merge_terms(*a.ring_, a.terms_, b.terms_, false), Polynomial::Sorted{});
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  return Polynomial(a.ring_, merge_terms(*a.ring_, a.terms_, b.terms_, true), Polynomial::Sorted{});
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  const Field& field = a.ring_->field();
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      out.push_back(Term{field.mul(s.coefficient, t.coefficient), s.monomial * t.monomial});
    }
  }
  return Polynomial(a.ring_, std::move(out));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  return times_term(c, Monomial(ring_->nvars()));
}

Polynomial Polynomial::times_term(const Scalar& c, const Monomial& m) const {
  const Field& field = ring_->field();
  Scalar cc = field.normalize(c);
  if (cc == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  // Multiplying by a monomial preserves any term order.
  for (const auto& t : terms_) out.push_back(Term{field.mul(t.coefficient, cc), t.monomial * m});
  return Polynomial(ring_, std::move(out), Sorted{});
}

Polynomial Polynomial::minus_term_times(const Scalar& c, const Monomial& m,
                                        const Polynomial& g) const {
  require_same_ring(*this, g);
  Polynomial shifted = g.times_term(c, m);
  return Polynomial(ring_, merge_terms(*ring_, terms_, shifted.terms_, true), Sorted{});
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(leading_coefficient()));
}

Polynomial Polynomial::in_ring(const RingPtr& ring) const {
  if (!ring_->same_context(*ring)) {
    throw ContextError("cannot move polynomial from " + ring_->describe() + " to " +
                       ring->describe());
  }
  if (ring_->order() == ring->order()) return Polynomial(ring, terms_, Sorted{});
  return Polynomial(ring, terms_);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& vars = ring_->variables();
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coefficient;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars.name(i);
      if (t.monomial[i] > 1) mono += "^" + std::to_string(t.monomial[i]);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!a.ring_->same_context(*b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.ring_->order() == b.ring_->order()) {
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].monomial != b.terms_[i].monomial ||
          a.terms_[i].coefficient != b.terms_[i].coefficient) {
        return false;
      }
    }
    return true;
  }
  return a == b.in_ring(a.ring_);
}

// Division ------------------------------------------------------------------

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors) {
  for (const auto& g : divisors) {
    require_same_ring(f, g);
    if (g.is_zero()) throw ParameterError("division by the zero polynomial");
  }
  const Field& field = f.ring()->field();
  DivisionResult result{{}, Polynomial(f.ring())};
  result.quotients.assign(divisors.size(), Polynomial(f.ring()));
  std::vector<Term> remainder;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const auto& g = divisors[i];
      if (!g.leading_monomial().divides(lt.monomial)) continue;
      Scalar c = field.div(lt.coefficient, g.leading_coefficient());
      Monomial m = lt.monomial.quotient(g.leading_monomial());
      result.quotients[i] = result.quotients[i] + Polynomial::monomial(f.ring(), m, c);
      p = p.minus_term_times(c, m, g);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.push_back(lt);
      p = p - Polynomial::monomial(f.ring(), lt.monomial, lt.coefficient);
    }
  }
  result.remainder = Polynomial(f.ring(), std::move(remainder));
  return result;
}

Polynomial exact_quotient(const Polynomial& f, const Polynomial& g) {
  const Polynomial divisors[] = {g};
  auto r = divide(f, divisors);
  if (!r.remainder.is_zero()) {
    throw ParameterError("'" + g.to_string() + "' does not divide '" + f.to_string() + "'");
  }
  return r.quotients.front();
}

}  // namespace catenary
