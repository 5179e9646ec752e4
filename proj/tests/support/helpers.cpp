#include "helpers.hpp"

#include <stdexcept>
#include <variant>

#include "catenary/script.hpp"

namespace helpers {

using namespace catenary;

RingPtr ring(std::vector<std::string> names, MonomialOrder order) {
  return PolyRing::make(Field::rationals(), std::move(names), order);
}

std::vector<Polynomial> polys(const RingPtr& r, std::string_view text) {
  std::string src = "ring " + r->describe() + "\nideal G = (" + std::string(text) + ")\n";
  Script script = parse(src, r->order());
  const auto& decl = std::get<IdealDecl>(script.statements.at(1));
  std::vector<Polynomial> out;
  for (const auto& g : decl.presentation->generators) out.push_back(g.in_ring(r));
  return out;
}

Polynomial poly(const RingPtr& r, std::string_view text) {
  auto ps = polys(r, text);
  if (ps.size() != 1) throw std::invalid_argument("expected one polynomial");
  return ps.front();
}

Ideal ideal(const RingPtr& r, std::string_view text) {
  return text.empty() ? Ideal::zero(r) : Ideal(r, polys(r, text));
}

RingPresentation presentation(const RingPtr& r, std::string_view text) {
  return RingPresentation{r, text.empty() ? std::vector<Polynomial>{} : polys(r, text), {}, "I"};
}

MonomialIdeal monomial_ideal(const RingPtr& r, std::string_view text) {
  auto m = MonomialIdeal::from_ideal(ideal(r, text));
  if (!m) throw std::invalid_argument("not a monomial ideal");
  return *m;
}

MonomialPrime prime(const RingPtr& r, std::vector<std::string> names) {
  std::vector<std::size_t> idx;
  for (const auto& n : names) idx.push_back(*r->variables().index_of(n));
  return MonomialPrime::from_indices(idx);
}

}  // namespace helpers
