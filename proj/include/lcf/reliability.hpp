#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lcf/material.hpp"
#include "lcf/mesh.hpp"

namespace lcf {

/// Hazard of one boundary face: the integral of N_det^-m over the face.
struct FaceContribution {
  ElementId element_id = 0;
  std::size_t local_face = 0;  // 0-based
  double area = 0;
  double hazard = 0;  // area * cycles^-m

  /// Hazard per unit area; times n^m it is the expected crack count density.
  double density() const { return area > 0 ? hazard / area : 0; }
  /// Weibull scale of the face alone, hazard^(-1/m).
  double eta(double m) const;
};

struct SkippedElement {
  ElementId id = 0;
  std::string reason;
};

struct HazardOptions {
  int points_per_dim = 4;
  unsigned threads = 0;  // 0: hardware concurrency
  /// Multiplies every N_det value; used to probe scale equivariance.
  double life_factor = 1;
};

struct HazardIntegration {
  double total = 0;
  std::vector<FaceContribution> faces;  // in (element id, face) order
  std::vector<SkippedElement> skipped;
  std::size_t points = 0;
  std::size_t clamped_points = 0;  // strain beyond the CMB range, life clamped
};

/// Sum over boundary faces and quadrature points of sqrt(g) N_det^-m w.
/// Faces are evaluated in parallel and folded in face order with compensated
/// summation, so the result does not depend on the thread count. Elements
/// with a degenerate Jacobian at any face point are skipped and reported;
/// throws NumericalError if every face is skipped.
HazardIntegration integrate_hazard(const Mesh& mesh, std::span<const BoundaryFace> faces,
                                   const MaterialParams& params, const HazardOptions& options = {});

/// eta = total^(-1/m); +inf when total is zero.
double weibull_scale(double total_hazard, double m);

struct ReliabilityResult {
  double eta = 0;
  double m = 0;
  HazardIntegration hazard;

  bool infinite_life() const;
};

ReliabilityResult analyze_reliability(const Mesh& mesh, std::span<const BoundaryFace> faces,
                                      const MaterialParams& params,
                                      const HazardOptions& options = {});

/// F(n) = 1 - exp(-(n/eta)^m).
double pof(double n, double eta, double m);

/// f(n) = (m/eta)(n/eta)^(m-1) exp(-(n/eta)^m).
double density_fn(double n, double eta, double m);

/// Poisson probability e^-z z^q / q! of exactly q crack initiations in a
/// region with integrated hazard z.
double crack_count_probability(int q, double z);

/// 1 - (1 - p)^count for independent identical segments.
double aggregate_segments(double single_pof, int count);

struct TopFaceRow {
  std::size_t rank = 0;  // 1-based
  ElementId element_id = 0;
  std::size_t local_face = 0;
  double density = 0;
  double hazard = 0;
  double cumulative_hazard = 0;
  double share = 0;  // cumulative hazard / total hazard
  double combined_pof = 0;  // 1 - exp(-n^m * cumulative hazard)
};

/// Faces by decreasing density (ties by element id, face) with running
/// hazard share and combined PoF at cycle n.
std::vector<TopFaceRow> top_faces_report(std::span<const FaceContribution> faces, double n,
                                         double m);

}  // namespace lcf
