#include "nlphase/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "nlphase/errors.hpp"

namespace nlphase {

int64_t Grid::cell_count() const { return cells[0] * cells[1] * cells[2]; }

Point Grid::spacing() const {
    Point h{0, 0, 0};
    for (int a = 0; a < dim; ++a) h[a] = extent[a] / static_cast<double>(cells[a]);
    return h;
}

double Grid::cell_volume() const {
    Point h = spacing();
    double v = 1;
    for (int a = 0; a < dim; ++a) v *= h[a];
    return v;
}

std::array<int64_t, 3> Grid::coords(int64_t idx) const {
    std::array<int64_t, 3> c{0, 0, 0};
    c[2] = idx % cells[2];
    idx /= cells[2];
    c[1] = idx % cells[1];
    c[0] = idx / cells[1];
    return c;
}

int64_t Grid::index(const std::array<int64_t, 3>& c) const {
    return (c[0] * cells[1] + c[1]) * cells[2] + c[2];
}

Point Grid::center(int64_t idx) const {
    auto c = coords(idx);
    Point h = spacing(), p{0, 0, 0};
    for (int a = 0; a < dim; ++a) p[a] = origin[a] + (static_cast<double>(c[a]) + 0.5) * h[a];
    return p;
}

bool Grid::same_as(const Grid& o) const {
    if (dim != o.dim || cells != o.cells) return false;
    for (int a = 0; a < dim; ++a)
        if (origin[a] != o.origin[a] || extent[a] != o.extent[a]) return false;
    return true;
}

std::string Grid::id() const {
    char buf[64];
    if (dim == 1)
        std::snprintf(buf, sizeof buf, "1d:%lld", static_cast<long long>(cells[0]));
    else if (dim == 2)
        std::snprintf(buf, sizeof buf, "2d:%lldx%lld", static_cast<long long>(cells[0]),
                      static_cast<long long>(cells[1]));
    else
        std::snprintf(buf, sizeof buf, "3d:%lldx%lldx%lld", static_cast<long long>(cells[0]),
                      static_cast<long long>(cells[1]), static_cast<long long>(cells[2]));
    return buf;
}

Grid make_grid(int dim, const Point& origin, const Point& extent,
               const std::array<int64_t, 3>& cells) {
    if (dim < 1 || dim > 3) throw ConfigError("grid dim must be 1, 2 or 3");
    Grid g;
    g.dim = dim;
    g.origin = origin;
    g.extent = extent;
    g.cells = cells;
    for (int a = 0; a < dim; ++a) {
        if (cells[a] < 1) throw ConfigError("grid needs at least one cell per axis");
        if (!(extent[a] > 0)) throw ConfigError("grid extent must be positive");
    }
    for (int a = dim; a < 3; ++a) {
        g.cells[a] = 1;
        g.origin[a] = 0;
        g.extent[a] = 1;
    }
    return g;
}

CellSet all_cells(const Grid& g) {
    CellSet s;
    s.grid = g;
    s.idx.resize(static_cast<size_t>(g.cell_count()));
    for (int64_t i = 0; i < g.cell_count(); ++i) s.idx[static_cast<size_t>(i)] = i;
    return s;
}

CellSet box_cells(const Grid& g, const Point& lo, const Point& hi) {
    CellSet s;
    s.grid = g;
    for (int64_t i = 0; i < g.cell_count(); ++i) {
        Point c = g.center(i);
        bool in = true;
        for (int a = 0; a < g.dim; ++a) in = in && c[a] > lo[a] && c[a] < hi[a];
        if (in) s.idx.push_back(i);
    }
    return s;
}

CellSet intersect(const CellSet& a, const CellSet& b) {
    CellSet r;
    r.grid = a.grid;
    std::set_intersection(a.idx.begin(), a.idx.end(), b.idx.begin(), b.idx.end(),
                          std::back_inserter(r.idx));
    return r;
}

CellSet set_union(const CellSet& a, const CellSet& b) {
    CellSet r;
    r.grid = a.grid;
    std::set_union(a.idx.begin(), a.idx.end(), b.idx.begin(), b.idx.end(),
                   std::back_inserter(r.idx));
    return r;
}

CellSet complement(const CellSet& a) {
    CellSet r;
    r.grid = a.grid;
    size_t p = 0;
    for (int64_t i = 0; i < a.grid.cell_count(); ++i) {
        if (p < a.idx.size() && a.idx[p] == i)
            ++p;
        else
            r.idx.push_back(i);
    }
    return r;
}

bool disjoint(const CellSet& a, const CellSet& b) {
    size_t i = 0, j = 0;
    while (i < a.idx.size() && j < b.idx.size()) {
        if (a.idx[i] == b.idx[j]) return false;
        if (a.idx[i] < b.idx[j])
            ++i;
        else
            ++j;
    }
    return true;
}

bool subset_of(const CellSet& a, const CellSet& b) {
    return std::includes(b.idx.begin(), b.idx.end(), a.idx.begin(), a.idx.end());
}

namespace {

double point_box_distance(const Point& p, const Point& lo, const Point& hi, int dim) {
    double d2 = 0;
    for (int a = 0; a < dim; ++a) {
        double d = std::max({lo[a] - p[a], 0.0, p[a] - hi[a]});
        d2 += d * d;
    }
    return std::sqrt(d2);
}

} // namespace

CellSet shrink_set(const CellSet& z, double margin) {
    const Grid& g = z.grid;
    Point h = g.spacing();
    std::vector<char> member(static_cast<size_t>(g.cell_count()), 0);
    for (int64_t i : z.idx) member[static_cast<size_t>(i)] = 1;

    // complement candidates: non-member cells face-adjacent to a member
    std::vector<int64_t> rim;
    for (int64_t i : z.idx) {
        auto c = g.coords(i);
        for (int a = 0; a < g.dim; ++a) {
            for (int s = -1; s <= 1; s += 2) {
                auto n = c;
                n[a] += s;
                if (n[a] < 0 || n[a] >= g.cells[a]) continue;
                int64_t j = g.index(n);
                if (!member[static_cast<size_t>(j)]) rim.push_back(j);
            }
        }
    }
    std::sort(rim.begin(), rim.end());
    rim.erase(std::unique(rim.begin(), rim.end()), rim.end());

    Point glo = g.origin, ghi{0, 0, 0};
    for (int a = 0; a < g.dim; ++a) ghi[a] = g.origin[a] + g.extent[a];

    CellSet out;
    out.grid = g;
    for (int64_t i : z.idx) {
        Point p = g.center(i);
        double d = std::numeric_limits<double>::infinity();
        for (int a = 0; a < g.dim; ++a) d = std::min({d, p[a] - glo[a], ghi[a] - p[a]});
        for (int64_t j : rim) {
            auto c = g.coords(j);
            Point lo{0, 0, 0}, hi{0, 0, 0};
            for (int a = 0; a < g.dim; ++a) {
                lo[a] = g.origin[a] + static_cast<double>(c[a]) * h[a];
                hi[a] = lo[a] + h[a];
            }
            d = std::min(d, point_box_distance(p, lo, hi, g.dim));
            if (d <= margin) break;
        }
        if (d > margin) out.idx.push_back(i);
    }
    return out;
}

double Facet::area(int dim) const {
    if (dim == 1) return verts.empty() ? 0.0 : 1.0; // counting measure of a point
    if (dim == 2) {
        if (verts.size() != 2) return 0;
        double dx = verts[1][0] - verts[0][0], dy = verts[1][1] - verts[0][1];
        return std::hypot(dx, dy);
    }
    if (verts.size() < 3) return 0;
    // planar polygon: half the norm of the summed cross products (fan at verts[0])
    double cx = 0, cy = 0, cz = 0;
    for (size_t i = 1; i + 1 < verts.size(); ++i) {
        double ax = verts[i][0] - verts[0][0], ay = verts[i][1] - verts[0][1],
               az = verts[i][2] - verts[0][2];
        double bx = verts[i + 1][0] - verts[0][0], by = verts[i + 1][1] - verts[0][1],
               bz = verts[i + 1][2] - verts[0][2];
        cx += ay * bz - az * by;
        cy += az * bx - ax * bz;
        cz += ax * by - ay * bx;
    }
    return 0.5 * std::sqrt(cx * cx + cy * cy + cz * cz);
}

double PolyhedralInterface::area() const {
    double a = 0;
    for (const auto& f : facets) a += f.area(dim);
    return a;
}

namespace {

Point segment_closest(const Point& p, const Point& a, const Point& b) {
    double ex = b[0] - a[0], ey = b[1] - a[1], ez = b[2] - a[2];
    double len2 = ex * ex + ey * ey + ez * ez;
    double t = 0;
    if (len2 > 0)
        t = std::clamp(
            ((p[0] - a[0]) * ex + (p[1] - a[1]) * ey + (p[2] - a[2]) * ez) / len2, 0.0, 1.0);
    return {a[0] + t * ex, a[1] + t * ey, a[2] + t * ez};
}

Point facet_closest(const Facet& f, int dim, const Point& p) {
    if (dim == 1) return f.verts.at(0);
    if (dim == 2) return segment_closest(p, f.verts.at(0), f.verts.at(1));
    // 3d: foot of the perpendicular when it lands inside the polygon,
    // otherwise the nearest point of the boundary edges
    double nx = f.normal[0], ny = f.normal[1], nz = f.normal[2];
    double d = p[0] * nx + p[1] * ny + p[2] * nz - f.offset;
    Point q{p[0] - d * nx, p[1] - d * ny, p[2] - d * nz};
    int sign = 0;
    bool inside = true;
    size_t m = f.verts.size();
    for (size_t i = 0; i < m; ++i) {
        const Point& a = f.verts[i];
        const Point& b = f.verts[(i + 1) % m];
        double ex = b[0] - a[0], ey = b[1] - a[1], ez = b[2] - a[2];
        double qx = q[0] - a[0], qy = q[1] - a[1], qz = q[2] - a[2];
        double cx = ey * qz - ez * qy, cy = ez * qx - ex * qz, cz = ex * qy - ey * qx;
        double s = cx * nx + cy * ny + cz * nz;
        if (std::abs(s) < 1e-14) continue;
        int si = s > 0 ? 1 : -1;
        if (sign == 0)
            sign = si;
        else if (sign != si) {
            inside = false;
            break;
        }
    }
    if (inside) return q;
    Point best = f.verts[0];
    double bd = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < m; ++i) {
        Point c = segment_closest(p, f.verts[i], f.verts[(i + 1) % m]);
        double dx = p[0] - c[0], dy = p[1] - c[1], dz = p[2] - c[2];
        double d2 = dx * dx + dy * dy + dz * dz;
        if (d2 < bd) {
            bd = d2;
            best = c;
        }
    }
    return best;
}

// ray vs planar convex polygon in 3d; returns t or -1
double ray_polygon_hit(const Point& x, const Point& d, const Facet& f) {
    double nd = f.normal[0] * d[0] + f.normal[1] * d[1] + f.normal[2] * d[2];
    if (std::abs(nd) < 1e-14) return -1;
    double nx = f.normal[0] * x[0] + f.normal[1] * x[1] + f.normal[2] * x[2];
    double t = (f.offset - nx) / nd;
    if (t <= 1e-14) return -1;
    Point q{x[0] + t * d[0], x[1] + t * d[1], x[2] + t * d[2]};
    // in-polygon: consistent sign of edge cross products against the normal
    int sign = 0;
    size_t m = f.verts.size();
    for (size_t i = 0; i < m; ++i) {
        const Point& a = f.verts[i];
        const Point& b = f.verts[(i + 1) % m];
        double ex = b[0] - a[0], ey = b[1] - a[1], ez = b[2] - a[2];
        double qx = q[0] - a[0], qy = q[1] - a[1], qz = q[2] - a[2];
        double cx = ey * qz - ez * qy, cy = ez * qx - ex * qz, cz = ex * qy - ey * qx;
        double s = cx * f.normal[0] + cy * f.normal[1] + cz * f.normal[2];
        if (std::abs(s) < 1e-14) continue;
        int si = s > 0 ? 1 : -1;
        if (sign == 0)
            sign = si;
        else if (sign != si)
            return -1;
    }
    return t;
}

} // namespace

double facet_distance(const Facet& f, int dim, const Point& x) {
    Point c = facet_closest(f, dim, x);
    double dx = x[0] - c[0], dy = x[1] - c[1], dz = x[2] - c[2];
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

bool classify_point(const PolyhedralInterface& s, const Point& x) {
    // side of the nearest facet; with closed outward-oriented surfaces this is
    // the usual inside test, with open spanning interfaces it splits the domain
    double best = std::numeric_limits<double>::infinity();
    double side = 0;
    for (const auto& f : s.facets) {
        Point c = facet_closest(f, s.dim, x);
        double dx = x[0] - c[0], dy = x[1] - c[1], dz = x[2] - c[2];
        double d2 = dx * dx + dy * dy + dz * dz;
        if (d2 < best) {
            best = d2;
            side = dx * f.normal[0] + dy * f.normal[1] + dz * f.normal[2];
        }
    }
    bool normal_side = side >= 0;
    return s.outside_is_alpha ? !normal_side : normal_side;
}

PhaseField rasterize_interface(const Grid& g, const PolyhedralInterface& s, double alpha,
                               double beta, int* ignored) {
    if (s.dim != g.dim) throw ConfigError("interface dim does not match grid dim");
    PolyhedralInterface inside = s;
    inside.facets.clear();
    int skipped = 0;
    Point glo = g.origin, ghi{0, 0, 0};
    for (int a = 0; a < g.dim; ++a) ghi[a] = g.origin[a] + g.extent[a];
    for (const auto& f : s.facets) {
        if (f.area(g.dim) <= 0) throw ConfigError("degenerate facet (zero area)");
        bool overlaps = true;
        for (int a = 0; a < g.dim; ++a) {
            double lo = std::numeric_limits<double>::infinity(), hi = -lo;
            for (const auto& v : f.verts) {
                lo = std::min(lo, v[a]);
                hi = std::max(hi, v[a]);
            }
            if (hi < glo[a] || lo > ghi[a]) overlaps = false;
        }
        if (overlaps)
            inside.facets.push_back(f);
        else {
            ++skipped;
            std::fprintf(stderr, "warning: facet outside grid box ignored\n");
        }
    }
    if (ignored) *ignored = skipped;

    PhaseField out;
    out.grid = g;
    out.u.resize(static_cast<size_t>(g.cell_count()));
    for (int64_t i = 0; i < g.cell_count(); ++i)
        out.u[static_cast<size_t>(i)] = classify_point(inside, g.center(i)) ? beta : alpha;
    return out;
}

namespace {

struct HitFn {
    // ray from source parameter s in [0, len] hits target at distance t(s) = t0 + ts*s,
    // target parameter w(s) = w0 + ws*s (absolute along the target segment)
    int target;
    double lo, hi; // s-interval
    double t0, ts;
    double w0, ws;
    double t_at(double s) const { return t0 + ts * s; }
};

} // namespace

std::vector<ProjectionPatch> project_to_interface(const Facet& source,
                                                  const PolyhedralInterface& targets, int dir) {
    std::vector<ProjectionPatch> out;
    int dim = targets.dim;
    if (dim == 1) {
        // nearest target point along dir
        double best = std::numeric_limits<double>::infinity();
        int bi = -1;
        double x0 = source.verts.at(0)[0];
        for (size_t j = 0; j < targets.facets.size(); ++j) {
            double t = (targets.facets[j].verts.at(0)[0] - x0) * dir;
            if (t > 1e-14 && t < best) {
                best = t;
                bi = static_cast<int>(j);
            }
        }
        if (bi >= 0) out.push_back({bi, 1.0, 0.0, 1.0});
        return out;
    }
    if (dim == 3) {
        // sampled estimate, axis-aligned-friendly (documented limitation)
        if (source.verts.size() < 3) throw ConfigError("3d source facet needs a polygon");
        // sample a rectangle spanned by the first three vertices' edges
        const Point& o = source.verts[0];
        Point e1{source.verts[1][0] - o[0], source.verts[1][1] - o[1], source.verts[1][2] - o[2]};
        Point e2{source.verts.back()[0] - o[0], source.verts.back()[1] - o[1],
                 source.verts.back()[2] - o[2]};
        Point d{dir * source.normal[0], dir * source.normal[1], dir * source.normal[2]};
        const int ns = 128;
        std::vector<double> hits(targets.facets.size(), 0.0);
        double cellw = 1.0 / (ns * ns);
        for (int iu = 0; iu < ns; ++iu) {
            for (int iv = 0; iv < ns; ++iv) {
                double a = (iu + 0.5) / ns, b = (iv + 0.5) / ns;
                Point x{o[0] + a * e1[0] + b * e2[0], o[1] + a * e1[1] + b * e2[1],
                        o[2] + a * e1[2] + b * e2[2]};
                double best = std::numeric_limits<double>::infinity();
                int bi = -1;
                for (size_t j = 0; j < targets.facets.size(); ++j) {
                    double t = ray_polygon_hit(x, d, targets.facets[j]);
                    if (t > 0 && t < best) {
                        best = t;
                        bi = static_cast<int>(j);
                    }
                }
                if (bi >= 0) hits[static_cast<size_t>(bi)] += cellw;
            }
        }
        double srcarea = source.area(3);
        for (size_t j = 0; j < targets.facets.size(); ++j) {
            if (hits[j] <= 0) continue;
            // patch area on target: source patch area / |cos angle(normals)|
            double c = std::abs(source.normal[0] * targets.facets[j].normal[0] +
                                source.normal[1] * targets.facets[j].normal[1] +
                                source.normal[2] * targets.facets[j].normal[2]);
            if (c < 1e-12) c = 1e-12;
            out.push_back({static_cast<int>(j), hits[j] * srcarea / c, 0.0, 0.0});
        }
        return out;
    }

    // dim == 2: exact lower envelope over the source parameter
    if (source.verts.size() != 2) throw ConfigError("2d source facet needs 2 vertices");
    const Point& v0 = source.verts[0];
    double tx = source.verts[1][0] - v0[0], ty = source.verts[1][1] - v0[1];
    double len = std::hypot(tx, ty);
    if (len <= 0) throw ConfigError("degenerate source facet");
    tx /= len;
    ty /= len;
    Point d{dir * source.normal[0], dir * source.normal[1], 0};

    std::vector<HitFn> fns;
    for (size_t j = 0; j < targets.facets.size(); ++j) {
        const auto& f = targets.facets[j];
        if (f.verts.size() != 2) continue;
        double ex = f.verts[1][0] - f.verts[0][0], ey = f.verts[1][1] - f.verts[0][1];
        double elen = std::hypot(ex, ey);
        if (elen <= 0) continue;
        double det = d[0] * ey - d[1] * ex;
        if (std::abs(det) < 1e-14 * elen) continue; // target edge-on to the rays
        // p(s) + t d = a + w e  =>  solve per s; t and w are affine in s
        double ax = f.verts[0][0] - v0[0], ay = f.verts[0][1] - v0[1];
        // t(s) = ((a - p(s)) x e) / (d x e), p(s) = v0 + s t
        double t0 = (ax * ey - ay * ex) / det;
        double ts = -(tx * ey - ty * ex) / det;
        // w(s) = ((a - p(s)) x d) / (d x e), fraction along the target segment
        double w0 = (ax * d[1] - ay * d[0]) / det;
        double ws = -(tx * d[1] - ty * d[0]) / det;
        // s-interval where t(s) > 0 and w(s) in [0, 1]
        double lo = 0, hi = len;
        auto clip = [&](double c0, double cs, double cmin, double cmax) {
            // require cmin <= c0 + cs*s <= cmax
            if (std::abs(cs) < 1e-300) {
                if (c0 < cmin || c0 > cmax) lo = 1, hi = 0;
                return;
            }
            double sa = (cmin - c0) / cs, sb = (cmax - c0) / cs;
            if (sa > sb) std::swap(sa, sb);
            lo = std::max(lo, sa);
            hi = std::min(hi, sb);
        };
        clip(w0, ws, 0.0, 1.0);
        clip(t0, ts, 1e-14, std::numeric_limits<double>::max());
        if (hi - lo < 1e-12) continue;
        fns.push_back({static_cast<int>(j), lo, hi, t0, ts, w0 * elen, ws * elen});
    }

    // breakpoints: interval ends + pairwise crossings of the affine t functions
    std::vector<double> bp{0.0, len};
    for (const auto& f : fns) {
        bp.push_back(f.lo);
        bp.push_back(f.hi);
    }
    for (size_t i = 0; i < fns.size(); ++i)
        for (size_t j = i + 1; j < fns.size(); ++j) {
            double dts = fns[i].ts - fns[j].ts;
            if (std::abs(dts) < 1e-300) continue;
            double s = (fns[j].t0 - fns[i].t0) / dts;
            if (s > 0 && s < len) bp.push_back(s);
        }
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end(),
                         [](double a, double b) { return std::abs(a - b) < 1e-12; }),
             bp.end());

    for (size_t k = 0; k + 1 < bp.size(); ++k) {
        double s0 = bp[k], s1 = bp[k + 1];
        if (s1 - s0 < 1e-12) continue;
        double sm = 0.5 * (s0 + s1);
        double best = std::numeric_limits<double>::infinity();
        const HitFn* bf = nullptr;
        for (const auto& f : fns) {
            if (sm < f.lo || sm > f.hi) continue;
            double t = f.t_at(sm);
            if (t < best) {
                best = t;
                bf = &f;
            }
        }
        if (!bf) continue;
        ProjectionPatch p;
        p.target = bf->target;
        p.s0 = s0;
        p.s1 = s1;
        p.area = std::abs(bf->ws) * (s1 - s0);
        // merge with previous patch when contiguous on the same target
        if (!out.empty() && out.back().target == p.target &&
            std::abs(out.back().s1 - p.s0) < 1e-12) {
            out.back().s1 = p.s1;
            out.back().area += p.area;
        } else {
            out.push_back(p);
        }
    }
    return out;
}

PhaseSets phase_sets(const PhaseField& f, double alpha, double beta, double delta) {
    if (!(delta > 0) || !(delta < (beta - alpha) / 2))
        throw ConfigError("phase_sets: need 0 < delta < (beta-alpha)/2");
    PhaseSets ps;
    ps.A.grid = f.grid;
    ps.B.grid = f.grid;
    for (int64_t i = 0; i < f.grid.cell_count(); ++i) {
        double v = f.u[static_cast<size_t>(i)];
        if (v < alpha + delta) ps.A.idx.push_back(i);
        if (v > beta - delta) ps.B.idx.push_back(i);
    }
    return ps;
}

double l1_distance(const PhaseField& a, const PhaseField& b) {
    if (!a.grid.same_as(b.grid)) throw ConfigError("l1_distance: grid mismatch");
    double s = 0;
    for (size_t i = 0; i < a.u.size(); ++i) s += std::abs(a.u[i] - b.u[i]);
    return s * a.grid.cell_volume();
}

double two_phase_defect(const PhaseField& f, double alpha, double beta) {
    double s = 0;
    for (double v : f.u) s += std::min(std::abs(v - alpha), std::abs(v - beta));
    return s * f.grid.cell_volume();
}

double DiscreteMeasure::total_mass() const {
    double m = 0;
    for (const auto& a : atoms) m += a.mass;
    for (size_t j = 0; j < carrier.facets.size(); ++j)
        m += facet_density.at(j) * carrier.facets[j].area(carrier.dim);
    return m;
}

} // namespace nlphase
