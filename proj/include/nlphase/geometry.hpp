// geometry.hpp: grids, fields, cell sets, polyhedral interfaces, discrete measures.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace nlphase {

using Point = std::array<double, 3>; // unused trailing coordinates are 0

// Axis-aligned box grid, cell-centered samples. Linear index is row-major,
// first axis slowest (idx = (i0*n1 + i1)*n2 + i2).
struct Grid {
    int dim = 2;
    Point origin{0, 0, 0};
    Point extent{1, 1, 1};
    std::array<int64_t, 3> cells{1, 1, 1}; // axes >= dim have 1 cell

    int64_t cell_count() const;
    Point spacing() const;      // h per axis
    double cell_volume() const;
    Point center(int64_t idx) const;
    int64_t index(const std::array<int64_t, 3>& c) const;
    std::array<int64_t, 3> coords(int64_t idx) const;
    bool same_as(const Grid& o) const;
    std::string id() const; // short deterministic label, e.g. "2d:128x128"
};

Grid make_grid(int dim, const Point& origin, const Point& extent,
               const std::array<int64_t, 3>& cells);

struct PhaseField {
    Grid grid;
    std::vector<double> u;
};

struct SurfactantField {
    Grid grid;
    std::vector<double> rho; // nonnegative density
};

// Subset of grid cells, indices sorted ascending and unique.
struct CellSet {
    Grid grid;
    std::vector<int64_t> idx;

    int64_t size() const { return static_cast<int64_t>(idx.size()); }
    double volume() const { return static_cast<double>(idx.size()) * grid.cell_volume(); }
};

CellSet all_cells(const Grid& g);
// cells whose center lies strictly inside [lo, hi)
CellSet box_cells(const Grid& g, const Point& lo, const Point& hi);
CellSet intersect(const CellSet& a, const CellSet& b);
CellSet set_union(const CellSet& a, const CellSet& b);
CellSet complement(const CellSet& a);
bool disjoint(const CellSet& a, const CellSet& b);
bool subset_of(const CellSet& a, const CellSet& b);

// Retain cells whose center is farther than margin from the complement of Z
// (non-member cell boxes and the grid boundary both count as complement).
CellSet shrink_set(const CellSet& z, double margin);

// Flat facet of a polyhedral interface: a piece of the hyperplane
// {x : normal . x = offset}. Vertices lie on the hyperplane:
// dim 1: one point; dim 2: segment endpoints; dim 3: convex polygon loop.
struct Facet {
    Point normal{0, 0, 0}; // unit length
    double offset = 0;
    std::vector<Point> verts;

    double area(int dim) const; // H^{N-1} measure of the facet
};

// Oriented interface S_u = union of facets. Phase classification is the
// signed side of the nearest facet (normals point toward the alpha phase
// when outside_is_alpha, toward beta otherwise). Works for closed polytopes
// with outward normals and for open interfaces that span the domain.
struct PolyhedralInterface {
    int dim = 2;
    std::vector<Facet> facets;
    bool outside_is_alpha = true;

    double area() const;
};

// Distance from x to the closest point of the facet (not the hyperplane).
double facet_distance(const Facet& f, int dim, const Point& x);

// true if x lands on the beta side
bool classify_point(const PolyhedralInterface& s, const Point& x);

// Sharp two-valued field: cell-center sign test against the oriented facets.
// Facets fully outside the grid box are ignored with a warning (returned via
// ignored count if non-null); degenerate facets throw ConfigError.
PhaseField rasterize_interface(const Grid& g, const PolyhedralInterface& s,
                               double alpha, double beta, int* ignored = nullptr);

// First-hit orthogonal projection of source facet points along dir*normal
// onto the target facets: patches reported in target-side measure.
struct ProjectionPatch {
    int target = -1;    // facet index in targets
    double area = 0;    // H^{N-1} measure of the patch on the target facet
    double s0 = 0, s1 = 0; // parameter interval on the source facet
};
std::vector<ProjectionPatch> project_to_interface(const Facet& source,
                                                  const PolyhedralInterface& targets,
                                                  int dir /* +1 along normal, -1 opposite */);

// A = {u < alpha + delta}, B = {u > beta - delta}; requires 0 < delta < (beta-alpha)/2.
struct PhaseSets {
    CellSet A, B;
};
PhaseSets phase_sets(const PhaseField& u, double alpha, double beta, double delta);

double l1_distance(const PhaseField& a, const PhaseField& b);
// integral of dist(u, {alpha, beta})
double two_phase_defect(const PhaseField& u, double alpha, double beta);

struct DiscreteMeasure {
    struct Atom {
        Point x{0, 0, 0};
        double mass = 0;
        double radius = 0; // spike support hint for constructions, not part of the limit
    };
    std::vector<Atom> atoms;
    PolyhedralInterface carrier;       // facets carrying a.c. surface density
    std::vector<double> facet_density; // one density per carrier facet

    double total_mass() const;
};

} // namespace nlphase
