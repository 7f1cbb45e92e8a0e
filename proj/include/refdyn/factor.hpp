#pragma once

#include <utility>
#include <vector>

#include "refdyn/unipoly.hpp"

namespace refdyn {

/// Largest degree of a rational-root-free square-free component that the
/// exhaustive factor search accepts.
inline constexpr int kMaxFactorSearchDegree = 8;

/// Irreducible factors over the rationals with multiplicities. Each factor
/// is primitive with integer coefficients and positive leading coefficient;
/// their product equals p up to a rational constant. Factors are sorted by
/// degree, then by coefficients.
///
/// Square-free decomposition first, then rational roots are stripped, and
/// what remains is searched exhaustively for integer factors whose
/// coefficients respect the Mignotte bound. Throws for the zero polynomial
/// or when a remaining component exceeds kMaxFactorSearchDegree.
std::vector<std::pair<UniPoly, int>> factor_over_rationals(const UniPoly& p);

/// Rational roots of a nonzero polynomial, ascending, without multiplicity.
std::vector<Rational> rational_roots(const UniPoly& p);

}  // namespace refdyn
