#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "sortnet/young_diagram.hpp"

namespace sortnet {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Number of standard tableaux of the given shape, |lambda|! / prod h(x).
// dimension(empty) == 1.
BigInt dimension(const YoungDiagram& diagram);

template <typename Real>
struct CornerProbability {
  Box corner;
  Real probability;
};

// Law of the box holding the largest entry of a uniform standard tableau:
// P(x) = (1/|lambda|) prod_{z in cohook(x)} h(z) / (h(z) - 1), one entry per
// corner in row-major order. Throws DomainError for the empty diagram.
std::vector<CornerProbability<double>> corner_removal_distribution(
    const YoungDiagram& diagram);

// Same law in exact rational arithmetic; the probabilities sum to exactly 1.
std::vector<CornerProbability<Rational>> corner_removal_distribution_exact(
    const YoungDiagram& diagram);

// Exact P(x) for a single corner; throws DomainError for non-corners.
Rational corner_probability_exact(const YoungDiagram& diagram, const Box& corner);

// P(x) / P(y) for corners x and y (float backend).
double corner_probability_ratio(const YoungDiagram& diagram, const Box& x,
                                const Box& y);

// The bound (l+1)(2l+1) with l = ||x - y||_inf on the ratio above.
double corner_ratio_bound(const Box& x, const Box& y);

}  // namespace sortnet
