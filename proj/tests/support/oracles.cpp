#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace oracle {

namespace {

bool meets_all(Mask s, const std::vector<Mask>& supports) {
  return std::all_of(supports.begin(), supports.end(), [s](Mask g) { return (g & s) != 0; });
}

void sort_masks(std::vector<Mask>& v) { std::sort(v.begin(), v.end()); }

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

using Row = std::map<Exponents, mpq_class>;

/// Rank by forward elimination; each nonzero row's first key becomes a pivot
/// that is cleared from every later row.
std::size_t rank(std::vector<Row> rows) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) continue;
    const Exponents pivot = rows[i].begin()->first;
    const mpq_class lead = rows[i].begin()->second;
    for (auto& [k, c] : rows[i]) c /= lead;
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      auto it = rows[j].find(pivot);
      if (it == rows[j].end()) continue;
      const mpq_class factor = it->second;
      for (const auto& [k, c] : rows[i]) {
        mpq_class& cell = rows[j][k];
        cell -= factor * c;
        if (cell == 0) rows[j].erase(k);
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

std::vector<Mask> minimal_primes_by_subsets(const std::vector<Mask>& supports, std::size_t nvars) {
  std::vector<Mask> covers;
  const Mask limit = Mask{1} << nvars;
  for (Mask s = 0; s < limit; ++s) {
    if (meets_all(s, supports)) covers.push_back(s);
  }
  std::vector<Mask> out;
  for (Mask s : covers) {
    bool minimal = true;
    for (Mask t : covers) {
      if (t != s && (t & ~s) == 0) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(s);
  }
  sort_masks(out);
  return out;
}

std::size_t dimension_by_subsets(const std::vector<Mask>& supports, std::size_t nvars) {
  std::size_t best = nvars + 1;
  const Mask limit = Mask{1} << nvars;
  for (Mask s = 0; s < limit; ++s) {
    if (meets_all(s, supports)) best = std::min<std::size_t>(best, std::popcount(s));
  }
  return nvars - best;
}

std::vector<Mask> associated_primes_by_witnesses(const std::vector<Exponents>& generators,
                                                 std::size_t nvars) {
  Exponents bound(nvars, 0);
  for (const auto& g : generators) {
    for (std::size_t i = 0; i < nvars; ++i) bound[i] = std::max(bound[i], g[i]);
  }
  std::set<Mask> found;
  Exponents m(nvars, 0);
  while (true) {
    const bool in_ideal = std::any_of(generators.begin(), generators.end(),
                                      [&](const Exponents& g) { return divides(g, m); });
    if (!in_ideal) {
      // (I : m) is generated by g / gcd(g, m).
      std::vector<Exponents> colon;
      for (const auto& g : generators) {
        Exponents q(nvars);
        for (std::size_t i = 0; i < nvars; ++i) q[i] = g[i] > m[i] ? g[i] - m[i] : 0;
        colon.push_back(q);
      }
      std::vector<Exponents> minimal;
      for (std::size_t i = 0; i < colon.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < colon.size() && !redundant; ++j) {
          if (j == i) continue;
          if (divides(colon[j], colon[i]) && (colon[j] != colon[i] || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(colon[i]);
      }
      Mask prime = 0;
      bool is_prime = true;
      for (const auto& q : minimal) {
        std::uint32_t degree = 0;
        std::size_t var = 0;
        for (std::size_t i = 0; i < nvars; ++i) {
          degree += q[i];
          if (q[i]) var = i;
        }
        if (degree != 1) {
          is_prime = false;
          break;
        }
        prime |= Mask{1} << var;
      }
      if (is_prime) found.insert(prime);
    }
    std::size_t i = 0;
    while (i < nvars && m[i] == bound[i]) m[i++] = 0;
    if (i == nvars) break;
    ++m[i];
  }
  std::vector<Mask> out(found.begin(), found.end());
  sort_masks(out);
  return out;
}

std::vector<Exponents> monomials_of_degree(std::size_t nvars, std::uint32_t d) {
  std::vector<Exponents> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponents e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (std::uint32_t k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

bool member_by_linear_algebra(const std::vector<catenary::Polynomial>& generators,
                              const catenary::Polynomial& f) {
  if (f.is_zero()) return true;
  const auto degree = static_cast<std::uint32_t>(f.total_degree());
  const std::size_t nvars = f.ring()->nvars();
  std::vector<Row> rows;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    const auto dg = static_cast<std::uint32_t>(g.total_degree());
    if (dg > degree) continue;
    for (const auto& shift : monomials_of_degree(nvars, degree - dg)) {
      Row row;
      for (const auto& t : g.terms()) {
        Exponents e = t.monomial.exponents();
        for (std::size_t i = 0; i < nvars; ++i) e[i] += shift[i];
        row[e] += t.coefficient;
      }
      rows.push_back(std::move(row));
    }
  }
  Row target;
  for (const auto& t : f.terms()) target[t.monomial.exponents()] = t.coefficient;
  const std::size_t base = rank(rows);
  rows.push_back(std::move(target));
  return rank(std::move(rows)) == base;
}

}  // namespace oracle
