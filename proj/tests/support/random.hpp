#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "catenary/analyzer.hpp"
#include "oracles.hpp"

namespace gen {

/// Fixed-seed source for reproducible property runs.
using Rng = std::mt19937_64;

/// Random nonempty squarefree supports, each of size at least one.
std::vector<oracle::Mask> squarefree_supports(Rng& rng, std::size_t nvars, std::size_t max_gens);

/// Random monomial generators of degree at least one with exponents up to
/// `max_exp`.
std::vector<oracle::Exponents> monomials(Rng& rng, std::size_t nvars, std::size_t max_gens,
                                         std::uint32_t max_exp);

catenary::RingPtr ring(std::size_t nvars,
                       catenary::MonomialOrder order = catenary::MonomialOrder::grevlex());

catenary::Polynomial monomial(const catenary::RingPtr& ring, const oracle::Exponents& e);
std::vector<catenary::Polynomial> from_supports(const catenary::RingPtr& ring,
                                                const std::vector<oracle::Mask>& supports);
std::vector<catenary::Polynomial> from_exponents(const catenary::RingPtr& ring,
                                                 const std::vector<oracle::Exponents>& gens);

/// Random polynomial with up to `max_terms` terms of degree at most
/// `max_degree` and small integer coefficients.
catenary::Polynomial polynomial(Rng& rng, const catenary::RingPtr& ring, std::size_t max_terms,
                                std::uint32_t max_degree);
/// Random homogeneous polynomial of degree exactly d (nonzero).
catenary::Polynomial homogeneous(Rng& rng, const catenary::RingPtr& ring, std::size_t max_terms,
                                 std::uint32_t d);

/// Random monomial presentation in at most `max_vars` variables; never the
/// unit ideal.
catenary::RingPresentation monomial_ring(Rng& rng, std::size_t max_vars);

}  // namespace gen
