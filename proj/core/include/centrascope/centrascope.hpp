#ifndef CENTRASCOPE_CENTRASCOPE_HPP
#define CENTRASCOPE_CENTRASCOPE_HPP

// Umbrella header for the centrascope library: exhaustive small-graph
// enumeration, five centrality measures with exact/certified arithmetic,
// structural classifiers, and the zero-variance discriminant-power
// experiments.

#include "centrascope/canonical.hpp"
#include "centrascope/centrality.hpp"
#include "centrascope/discriminance.hpp"
#include "centrascope/enumerate.hpp"
#include "centrascope/experiments.hpp"
#include "centrascope/graph.hpp"
#include "centrascope/named_graphs.hpp"
#include "centrascope/rational.hpp"
#include "centrascope/spectral.hpp"
#include "centrascope/structure.hpp"

#endif  // CENTRASCOPE_CENTRASCOPE_HPP
