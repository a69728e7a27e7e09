#pragma once

#include <span>
#include <vector>

#include "ie/cycle_space.hpp"
#include "ie/graph.hpp"
#include "ie/metric.hpp"

namespace ie {

struct AllZero : GraphError {
    AllZero() : GraphError("entropy of an all-zero weight vector") {}
};

/// Shannon entropy in bits of the normalized weight vector; zero weights
/// contribute nothing.
double entropy_of_weights(std::span<const double> weights);
double entropy_of_weights(std::span<const int> weights);

// Remoteness numerator: the reference eccentricity for every vertex, or each
// vertex's own eccentricity (an alternative reading kept for comparison).
enum class EpsVariant { Center, PerVertex };

// Inner normalization of the per-contour degree entropy.
enum class H21Normalization { Row, Global };

struct EstimatorOptions {
    Reference reference = Reference::Center;
    EpsVariant eps_variant = EpsVariant::Center;
    H21Normalization h21_normalization = H21Normalization::Row;
};

/// The two-component information estimation with amplitude and phase.
struct IEVector {
    double h11 = 0, h12 = 0, h1 = 0;
    double h21 = 0, h22 = 0, h23 = 0, h2 = 0;
    double amplitude = 0;
    double phase = 0;  // radians, in [0, pi/2]
};

double h11(const Graph& g);
double h12(const Graph& g, const DistanceProfile& d, int ref_vertex,
           EpsVariant variant = EpsVariant::Center);
double h21(const ContourSystem& cs, const Graph& g,
           H21Normalization norm = H21Normalization::Row);
double h22(const ContourSystem& cs);
double h23(const ContourSystem& cs);
double h2(const ContourSystem& cs, const Graph& g,
          H21Normalization norm = H21Normalization::Row);

// Full pipeline. The graph is canonically relabeled first (reference vertex
// distinguished) so the result is invariant under vertex relabeling; for
// K > 12 the input labeling is used as-is.
IEVector ie_vector(const Graph& g, const EstimatorOptions& opts = {});

}  // namespace ie
