#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "catenary/analyzer.hpp"
#include "catenary/monomial_ideal.hpp"

namespace helpers {

/// Q[names] under `order`.
catenary::RingPtr ring(std::vector<std::string> names,
                       catenary::MonomialOrder order = catenary::MonomialOrder::grevlex());

/// Parses "x*y - 1, x^2" into polynomials of `ring` (through the script parser).
std::vector<catenary::Polynomial> polys(const catenary::RingPtr& ring, std::string_view text);
catenary::Polynomial poly(const catenary::RingPtr& ring, std::string_view text);
catenary::Ideal ideal(const catenary::RingPtr& ring, std::string_view text);
catenary::RingPresentation presentation(const catenary::RingPtr& ring, std::string_view text);
catenary::MonomialIdeal monomial_ideal(const catenary::RingPtr& ring, std::string_view text);

/// Prime generated by the named variables of `ring`.
catenary::MonomialPrime prime(const catenary::RingPtr& ring, std::vector<std::string> names);

}  // namespace helpers
