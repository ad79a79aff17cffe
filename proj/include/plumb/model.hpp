#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "plumb/graph.hpp"
#include "plumb/matrix.hpp"

namespace plumb {

/// Which end of an edge. Each edge's lower-indexed vertex plays the role of v
/// (x-axis of the edge chart); the higher-indexed one is v'.
enum class Side : int { V = 0, VPrime = 1 };

inline std::size_t endpoint(const Edge& e, Side side) { return side == Side::V ? e.lo() : e.hi(); }
inline Side other(Side side) { return side == Side::V ? Side::VPrime : Side::V; }

struct Incidence {
  std::size_t edge = 0;
  Side side = Side::V;

  bool operator==(const Incidence&) const = default;
};

/// Incidences at vertex i in ascending edge order; a double edge contributes two.
std::vector<Incidence> incidences_at(const PlumbingGraph& g, std::size_t vertex);

/// A value per (edge, side) incidence.
template <typename T>
class PerIncidence {
 public:
  PerIncidence() = default;
  explicit PerIncidence(std::size_t edges) : values_(edges) {}

  T& operator[](Incidence inc) { return values_.at(inc.edge)[static_cast<int>(inc.side)]; }
  const T& operator[](Incidence inc) const { return values_.at(inc.edge)[static_cast<int>(inc.side)]; }

  std::size_t edge_count() const { return values_.size(); }
  bool operator==(const PerIncidence&) const = default;

 private:
  std::vector<std::array<T, 2>> values_;
};

using EdgeSplit = PerIncidence<long>;       // s_{v,e}
using EdgeOffsets = PerIncidence<Rational>;  // x_{v,e}

struct ModelConstants {
  Rational epsilon;
  Rational gamma;
  Rational delta;

  bool operator==(const ModelConstants&) const = default;
};

struct Point {
  Rational x;
  Rational y;

  bool operator==(const Point&) const = default;
};

struct IntVec {
  long x = 0;
  long y = 0;

  bool operator==(const IntVec&) const = default;
};

/// What a straight boundary piece of an edge region is made of.
enum class PieceKind {
  Axis,      // part of the moment image boundary (x = z_v or y = z_v')
  Clipping,  // one of the two lines that cut the region off
  Level,     // straight part of the level set g_e = delta
};

struct Segment {
  PieceKind kind = PieceKind::Axis;
  Point from;
  Point to;
  IntVec direction;  // primitive, pointing from -> to

  bool operator==(const Segment&) const = default;
};

/// Corner smoothing of the level set inside the band |y - x| < gamma. Stored as a
/// quadratic Bezier for drawing only; no exact check reads it.
struct SmoothingArc {
  Point from;
  Point control;
  Point to;

  bool operator==(const SmoothingArc&) const = default;
};

using BoundaryPiece = std::variant<Segment, SmoothingArc>;

/// Corners ordered: inner line on the axis, outer line on the axis, inner line
/// on the level set, outer line on the level set.
struct Parallelogram {
  std::array<Point, 4> corners;

  bool operator==(const Parallelogram&) const = default;
};

struct Line {
  Point through;
  IntVec direction;

  bool operator==(const Line&) const = default;
};

/// Moment image R_e of one edge chart, anchored at (z_v, z_v').
struct ToricRegion {
  std::size_t edge = 0;
  std::size_t vertex_v = 0;
  std::size_t vertex_vprime = 0;
  long split_v = 0;
  long split_vprime = 0;
  Point anchor;
  Rational epsilon;
  Rational gamma;
  Rational delta;
  /// Counter-clockwise from (z_v, z_v' + 2 eps).
  std::vector<BoundaryPiece> boundary;
  Line clip_v;
  Line clip_vprime;
  Parallelogram sub_v;
  Parallelogram sub_vprime;

  bool operator==(const ToricRegion&) const = default;
};

/// GL(2,Z) element acting on moment-map coordinates.
struct LatticeTransform {
  std::array<long, 4> m{1, 0, 0, 1};  // row-major

  long det() const { return m[0] * m[3] - m[1] * m[2]; }
  Point apply(const Point& p) const;
  IntVec apply(const IntVec& v) const;
  bool operator==(const LatticeTransform&) const = default;
};

/// (x_lo, x_hi) x [y_lo, y_hi)
struct Rectangle {
  Rational x_lo;
  Rational x_hi;
  Rational y_lo;
  Rational y_hi;

  bool operator==(const Rectangle&) const = default;
};

struct CollarInterval {
  Incidence incidence;
  Rational lo;  // x_{v,e} - 2 eps (open end)
  Rational hi;  // x_{v,e} - eps (closed end)

  bool operator==(const CollarInterval&) const = default;
};

struct SurfacePiece {
  std::size_t vertex = 0;
  long genus = 0;
  long collars = 0;
  std::vector<CollarInterval> collar_intervals;

  bool operator==(const SurfacePiece&) const = default;
};

struct NeighborhoodModel {
  PlumbingGraph graph;
  RationalVector z;
  EdgeSplit split;
  EdgeOffsets offsets;
  ModelConstants constants;
  std::vector<ToricRegion> regions;
  std::vector<SurfacePiece> surfaces;
  std::vector<Diagnostic> warnings;

  bool operator==(const NeighborhoodModel&) const = default;
};

/// Deterministic s_{v,e}. When -s_v >= d_v every part is <= -1 (surplus
/// -s_v - d_v spread evenly, remainder to the lowest edge indices); otherwise s_v
/// itself is spread evenly with the same tie-break. Throws on an isolated vertex.
EdgeSplit split_self_intersections(const PlumbingGraph& g);

/// x_{v,e} = -s_{v,e} z_v - z_w. Verifies sum_e x_{v,e} = area_hat_v.
EdgeOffsets edge_offsets(const PlumbingGraph& g, const RationalVector& z, const EdgeSplit& split);

/// eps = min_v(area_hat_v / d_v) / 2, gamma = eps / 2,
/// delta = min(gamma / 2, min over s_{v,e} + 1 > 0 of (eps - gamma) / (2 (s_{v,e} + 1))).
ModelConstants choose_constants(const PlumbingGraph& g, const EdgeOffsets& offsets, const EdgeSplit& split);

/// Incidences whose collar interval (x - 2 eps, x - eps] reaches zero or below.
std::vector<Diagnostic> collar_warnings(const PlumbingGraph& g, const EdgeOffsets& offsets,
                                        const ModelConstants& consts);

ToricRegion build_edge_region(const PlumbingGraph& g, std::size_t edge, const RationalVector& z,
                              const EdgeSplit& split, const ModelConstants& consts);

struct TransitionPair {
  LatticeTransform a_v;
  LatticeTransform a_vprime;
};

/// A_v = [[-s_{v,e}, -1], [1, 0]], A_v' = [[-1, -s_{v',e}], [0, 1]].
TransitionPair transition_matrices(const EdgeSplit& split, std::size_t edge);

/// Maps the collar parallelogram through `a` and demands the exact rectangle
/// (offset - 2 eps, offset - eps) x [weight, weight + delta). InvariantError otherwise.
Rectangle normalize_collar(const LatticeTransform& a, const Parallelogram& piece, const Rational& offset,
                           const Rational& weight, const ModelConstants& consts);

/// det[d1 | d2] == 1 for primitive d1, d2. Throws plumb::Error on non-primitive input.
bool delzant_corner_check(IntVec d1, IntVec d2);

/// Full pipeline: weight vector, split, offsets, constants, one region per edge.
/// Throws plumb::Error when a precondition fails (isolated vertex, form not
/// negative definite).
NeighborhoodModel build_model(const PlumbingGraph& g);

struct AreaItemization {
  std::size_t vertex = 0;
  Rational surface;  // sum_e (x_{v,e} - eps)
  Rational disks;    // d_v * 2 eps
  Rational overlaps; // -d_v * eps
  Rational total;
  Rational expected;  // area_hat_v

  bool operator==(const AreaItemization&) const = default;
};

struct EulerCheck {
  std::size_t vertex = 0;
  long split_sum = 0;
  long self_int = 0;

  bool operator==(const EulerCheck&) const = default;
};

struct CornerCheck {
  std::size_t edge = 0;
  std::string corner;  // "anchor", "top", "right", "top-level", "right-level"
  Point at;
  IntVec incoming;
  IntVec outgoing;
  long det = 0;
  bool anchor_adjacent = false;

  bool operator==(const CornerCheck&) const = default;
};

struct CollarCheck {
  Incidence incidence;
  LatticeTransform transform;
  std::optional<Rectangle> image;  // empty when normalization failed

  bool operator==(const CollarCheck&) const = default;
};

struct ModelFailure {
  std::string check;
  std::string detail;
  Rational discrepancy;  // exact (found - expected); 0 when not numeric

  bool operator==(const ModelFailure&) const = default;
};

struct ModelReport {
  std::vector<AreaItemization> areas;
  std::vector<EulerCheck> euler;
  std::vector<CornerCheck> corners;
  std::vector<CollarCheck> collars;
  std::vector<ModelFailure> failures;

  bool ok() const { return failures.empty(); }
  bool operator==(const ModelReport&) const = default;
};

/// Re-derives every identity of the construction from the model data and
/// itemizes it; failures carry the exact rational discrepancy.
ModelReport verify_model(const NeighborhoodModel& model);

}  // namespace plumb
