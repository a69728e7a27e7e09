#include "ie/extremal.hpp"

#include <algorithm>
#include <cmath>

namespace ie {

namespace {

constexpr double kE = 2.718281828459045;

void require_positive(double value, const char* name) {
    if (!(value > 0)) throw NonPositiveParameter(std::string(name) + " must be positive");
}

double log2e_times(double x) { return std::log2(kE * x); }

}  // namespace

VertexBounds vertex_bounds(int k, int l) {
    if (k < 2) throw NonPositiveParameter("vertex count must be at least 2");
    if (l < k - 1) throw NonPositiveParameter("branch count below tree minimum");
    VertexBounds b;
    b.h11_extr = std::log2(double(k));
    b.h12_extr = std::log2(double(k));
    b.h1_extr = 2 * std::log2(double(k));
    b.rho_extr = 2.0 * l / k;
    return b;
}

ContourBounds contour_bounds(int p, int m, int l) {
    if (p < 1) throw NonPositiveParameter("contour count must be at least 1");
    if (m < 2) throw NonPositiveParameter("contour vertex count must be at least 2");
    if (l < 1) throw NonPositiveParameter("branch count must be at least 1");
    ContourBounds b;
    b.h21_extr = p * std::log2(double(m));
    b.h22_extr = std::log2(double(p));
    b.h23_extr = std::log2(double(l));
    b.h2_extr = b.h21_extr + b.h22_extr + b.h23_extr;
    return b;
}

LagrangeResult lagrange_sensitivities(Scenario scenario, const LagrangeParams& p) {
    LagrangeResult res;
    res.scenario = scenario;
    res.interpretation =
        "reaction of the objective function to a change in the limitations";

    switch (scenario) {
        case Scenario::DegreeSum:
            require_positive(p.l, "L");
            require_positive(p.r, "R");
            res.lambda = -(1.0 / (2.0 * p.l)) * log2e_times(p.r);
            break;
        case Scenario::BranchingLimit:
            require_positive(p.k, "K");
            require_positive(p.r, "R");
            res.lambda = -(1.0 / (p.k * p.r)) * log2e_times(p.r);
            break;
        case Scenario::RemotenessLimit:
            require_positive(p.k, "K");
            require_positive(p.eps_b + p.d, "eps_b + d");
            res.lambda = -(double(p.k - 1) / (double(p.k) * p.k)) *
                         (1.0 / (p.eps_b + p.d)) * std::log2(kE / p.k);
            break;
        case Scenario::ContourVertexLimit:
            require_positive(p.m, "M");
            require_positive(p.r, "R");
            res.lambda = -(double(p.m - 1) / (double(p.m) * p.m)) * (1.0 / p.r) *
                         std::log2(kE / p.r);
            break;
        case Scenario::ComplexityLimit:
            require_positive(p.p, "P");
            require_positive(p.c_max, "C_max");
            res.lambda = -(double(p.p - 1) / (double(p.p) * p.p)) * (1.0 / p.c_max) *
                         std::log2(kE / p.p);
            break;
        case Scenario::FrequencyLimit:
            require_positive(p.l, "L");
            require_positive(p.f_max, "F_max");
            res.lambda = -(double(p.l - 1) / (double(p.l) * p.l)) * (1.0 / p.f_max) *
                         std::log2(kE / p.l);
            break;
    }
    return res;
}

ExtremalReport bound_audit(const Graph& g, const IEVector& ie, const ContourSystem& cs) {
    ExtremalReport rep;
    const int k = g.vertex_count();
    const int l = g.branch_count();

    rep.vertex = vertex_bounds(k, l);
    rep.gaps.push_back({"H11", ie.h11, rep.vertex.h11_extr, rep.vertex.h11_extr - ie.h11});
    rep.gaps.push_back({"H12", ie.h12, rep.vertex.h12_extr, rep.vertex.h12_extr - ie.h12});
    rep.gaps.push_back({"H1", ie.h1, rep.vertex.h1_extr, rep.vertex.h1_extr - ie.h1});
    rep.h1_extr = rep.vertex.h1_extr;

    if (!cs.empty()) {
        auto counts = cs.vertex_counts();
        rep.max_contour_vertices = *std::max_element(counts.begin(), counts.end());
        rep.contour = contour_bounds(cs.row_count(),
                                     std::max(rep.max_contour_vertices, 2), l);
        rep.gaps.push_back(
            {"H21", ie.h21, rep.contour.h21_extr, rep.contour.h21_extr - ie.h21});
        rep.gaps.push_back(
            {"H22", ie.h22, rep.contour.h22_extr, rep.contour.h22_extr - ie.h22});
        rep.gaps.push_back(
            {"H23", ie.h23, rep.contour.h23_extr, rep.contour.h23_extr - ie.h23});
        rep.gaps.push_back(
            {"H2", ie.h2, rep.contour.h2_extr, rep.contour.h2_extr - ie.h2});
        rep.h2_extr = rep.contour.h2_extr;
    }

    rep.notes.push_back(
        "degree-sum sensitivity depends on the branching limit R even though the "
        "scenario itself imposes no degree cap; it is evaluated as stated");
    rep.notes.push_back(
        "contour bounds use M = max contour vertex count, a sound upper bound when "
        "contour sizes vary");
    return rep;
}

}  // namespace ie
