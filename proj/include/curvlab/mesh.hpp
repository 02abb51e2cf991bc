#pragma once

#include <Eigen/Sparse>
#include <array>
#include <vector>

#include "curvlab/curve.hpp"

namespace curvlab {

enum class VertexKind : char { kOrdinary = 0, kBranch = 1, kInfinity = 2 };

/// Triangulated genus-2 double cover of the sphere branched at the six
/// roots, carrying the piecewise-flat background metric
///   lambda(x) |dx|^2,  lambda(x) = (1 + eps^2 |x|^2) / |p(x)|,
/// i.e. the flat metric of the 1-form dx/y with its two cones at infinity
/// smoothed into a cap of fixed size. Edge lengths are measured in the
/// chart adapted to their region (w^2 = x - r_k near branch points,
/// s = 1/x near infinity, x elsewhere) by Gauss quadrature; the edge set is
/// then flipped to the intrinsic Delaunay triangulation so every cotangent
/// weight is nonnegative.
struct SurfaceMesh {
  HyperellipticCurve curve;
  int level = 0;

  // cover triangulation: faces index cover vertices, face_len[f][c] is the
  // length of the edge opposite corner c
  int num_vertices = 0;
  std::vector<std::array<int, 3>> faces;
  std::vector<std::array<double, 3>> face_len;
  std::vector<int> vert_base;        // cover vertex -> base vertex
  std::vector<VertexKind> vert_kind;
  std::vector<int> vert_branch;      // root index for branch vertices, else -1
  std::vector<cplx> base_x;          // stereographic coordinate per base vertex
  std::vector<char> base_at_inf;     // base vertex sits at x = infinity
  int num_edges = 0;
  int delaunay_flips = 0;

  // background PL geometry
  std::vector<std::array<double, 3>> corner_angle;
  std::vector<double> face_area;
  std::vector<double> vertex_area;    // lumped 1/3 areas
  std::vector<double> angle_defect;   // 2 pi - angle sum
  Eigen::SparseMatrix<double> stiffness;  // PSD cotangent matrix, zero row sums
  double min_angle = 0.0, max_angle = 0.0;

  int euler_characteristic() const {
    return num_vertices - num_edges + static_cast<int>(faces.size());
  }

  /// Background conformal factor at a base point, in the chart the cover
  /// vertex uses for field sampling: x generically, w at branch vertices,
  /// s at the two infinity vertices.
  double background_factor(int cover_vertex) const;

  std::vector<std::vector<int>> vertex_adjacency() const;
};

/// Cone-smoothing parameter eps^2 in lambda = (1+eps^2|x|^2)/|p(x)|.
inline constexpr double kConeSmoothing = 0.36;

/// refinement_level in 0..6; each level quadruples the face count.
SurfaceMesh build_mesh(const HyperellipticCurve& curve, int refinement_level);

}  // namespace curvlab
