#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hypdet/upoly.hpp"

namespace hypdet {

// Open interval (lo, hi) containing exactly one root, or the exact root
// lo == hi.
struct RootInterval {
  Rational lo, hi;
  bool exact() const { return lo == hi; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

// Number of distinct real roots of p in (a, b]; nullopt bounds mean -inf
// and +inf. DomainError if p is zero or a finite endpoint is a root.
int sturm_count(const UniPoly& p, const std::optional<Rational>& a = std::nullopt,
                const std::optional<Rational>& b = std::nullopt);

// Distinct real roots, sorted and pairwise disjoint.
std::vector<RootInterval> isolate_real_roots(const UniPoly& p);
// Shrinks an isolating interval of a root of squarefree p below width.
RootInterval refine(const UniPoly& p, RootInterval iv, const Rational& width);

int count_distinct_real_roots(const UniPoly& p);
// All complex roots real (counted with multiplicity).
bool is_real_rooted(const UniPoly& p);
// Real rooted and squarefree.
bool is_strictly_real_rooted(const UniPoly& p);

// nullopt if p >= 0 on R, otherwise a rational x with p(x) < 0 (0 preferred).
std::optional<Rational> find_negative_point(const UniPoly& p);

// Evidence that p > 0 fails somewhere.
struct PositivityFailure {
  // p(x) <= 0 at a rational x, when one exists.
  std::optional<Rational> x;
  // Otherwise p >= 0 and vanishes at an irrational root inside this interval.
  std::optional<RootInterval> zero;
};
// nullopt iff p > 0 on all of R.
std::optional<PositivityFailure> check_positive(const UniPoly& p);

// Distinct real roots with multiplicities, sorted. DomainError unless p is
// real rooted.
std::vector<std::pair<RootInterval, int>> multiplicity_profile(const UniPoly& p);

// Approximate real roots with multiplicity, sorted (numeric output only).
std::vector<double> approximate_real_roots(const UniPoly& p);

}  // namespace hypdet
