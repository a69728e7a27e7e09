#pragma once

#include <string>
#include <vector>

#include "ie/cycle_space.hpp"
#include "ie/entropy.hpp"
#include "ie/graph.hpp"

namespace ie {

struct NonPositiveParameter : GraphError {
    explicit NonPositiveParameter(const std::string& what) : GraphError(what) {}
};

/// Closed-form upper estimates for the vertex-space components.
struct VertexBounds {
    double h11_extr = 0;  // log2 K
    double h12_extr = 0;  // log2 K
    double h1_extr = 0;   // 2 log2 K
    double rho_extr = 0;  // 2L / K, continuous relaxation optimum
};

VertexBounds vertex_bounds(int k, int l);

/// Closed-form upper estimates for the contour-space components.
struct ContourBounds {
    double h21_extr = 0;  // P log2 M
    double h22_extr = 0;  // log2 P
    double h23_extr = 0;  // log2 L
    double h2_extr = 0;   // sum of the above
};

ContourBounds contour_bounds(int p, int m, int l);

/// Constrained-extremum scenarios and their Lagrange sensitivities.
enum class Scenario {
    DegreeSum,           // degree total fixed at 2L
    BranchingLimit,      // per-vertex degree capped at R
    RemotenessLimit,     // reference distance capped at d
    ContourVertexLimit,  // contour vertex degrees capped at R, sizes at M
    ComplexityLimit,     // per-row branch count capped at C_max
    FrequencyLimit,      // per-branch row count capped at F_max
};

struct LagrangeParams {
    int k = 0;        // vertex count
    int l = 0;        // branch count
    int p = 0;        // contour/path count
    int m = 0;        // vertices per contour
    double r = 0;     // degree cap R
    double d = 0;     // remoteness cap
    double eps_b = 0; // reference eccentricity
    double c_max = 0;
    double f_max = 0;
};

struct LagrangeResult {
    Scenario scenario;
    double lambda = 0;
    std::string interpretation;
};

LagrangeResult lagrange_sensitivities(Scenario scenario, const LagrangeParams& params);

struct ComponentGap {
    std::string name;
    double achieved = 0;
    double bound = 0;
    double gap = 0;  // bound - achieved
};

/// Achieved-vs-bound audit for one graph.
struct ExtremalReport {
    VertexBounds vertex;
    ContourBounds contour;
    std::vector<ComponentGap> gaps;
    int max_contour_vertices = 0;  // M used for the contour bounds
    double h1_extr = 0;
    double h2_extr = 0;
    std::vector<std::string> notes;
};

ExtremalReport bound_audit(const Graph& g, const IEVector& ie, const ContourSystem& cs);

}  // namespace ie
