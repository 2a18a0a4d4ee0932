#include "lcf/reliability.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <numeric>
#include <set>
#include <thread>

#include "lcf/compensated_sum.hpp"
#include "lcf/error.hpp"
#include "lcf/face_evaluator.hpp"
#include "lcf/simd/kernels.hpp"

namespace lcf {
namespace {

struct FaceResult {
  bool degenerate = false;
  std::string reason;
  double area = 0;
  double hazard = 0;
  std::size_t points = 0;
  std::size_t clamped = 0;
};

FaceResult evaluate_face(const Mesh& mesh, const BoundaryFace& face, const FaceQuadratureSet& quads,
                         const MaterialParams& params, const HazardOptions& options,
                         const simd::KernelTable& kernels) {
  const ElementData element = mesh.element_data(face.element_index);
  const FaceQuadrature& quad = quads.get(face.kind, face.local_face);
  const FacePointValues values = evaluate_face_points(element, quad, params.elastic(), kernels);
  const double det_tol = degeneracy_tolerance(element);
  const double h = element.characteristic_length();
  const double gram_tol = 1e-12 * h * h;

  FaceResult result;
  result.points = quad.size();
  for (std::size_t p = 0; p < quad.size(); ++p) {
    if (!(values.det_jacobian[p] > det_tol)) {
      result.degenerate = true;
      result.reason = "non-positive Jacobian determinant on face " + std::to_string(face.local_face + 1);
      return result;
    }
    if (!(values.root_gram[p] > gram_tol)) {
      result.degenerate = true;
      result.reason = "vanishing Gram determinant on face " + std::to_string(face.local_face + 1);
      return result;
    }
  }
  CompensatedSum area, hazard;
  const double m = params.weibull_shape;
  for (std::size_t p = 0; p < quad.size(); ++p) {
    const double w = quad.rule.weights[p] * values.root_gram[p];
    area += w;
    const CmbSolution life = life_from_elastic_stress(values.von_mises[p], params);
    if (life.clamped) ++result.clamped;
    const double n_det = life.cycles * options.life_factor;
    hazard += w * std::pow(n_det, -m);
  }
  result.area = area.value();
  result.hazard = hazard.value();
  return result;
}

}  // namespace

double FaceContribution::eta(double m) const { return weibull_scale(hazard, m); }

HazardIntegration integrate_hazard(const Mesh& mesh, std::span<const BoundaryFace> faces,
                                   const MaterialParams& params, const HazardOptions& options) {
  params.validate();
  if (!(options.life_factor > 0)) throw DomainError("life factor must be positive");
  const FaceQuadratureSet quads(options.points_per_dim);
  const simd::KernelTable& kernels = simd::active_kernels();

  std::vector<FaceResult> results(faces.size());
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(faces.size())));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i = next++; i < faces.size() && !failed; i = next++) {
      try {
        results[i] = evaluate_face(mesh, faces[i], quads, params, options, kernels);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  HazardIntegration out;
  std::set<ElementId> degenerate;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (results[i].degenerate && degenerate.insert(faces[i].element_id).second)
      out.skipped.push_back({faces[i].element_id, results[i].reason});
  }
  CompensatedSum total;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (degenerate.count(faces[i].element_id)) continue;
    const FaceResult& r = results[i];
    out.faces.push_back({faces[i].element_id, faces[i].local_face, r.area, r.hazard});
    out.points += r.points;
    out.clamped_points += r.clamped;
    total += r.hazard;
  }
  if (!faces.empty() && out.faces.empty())
    throw NumericalError("every boundary face belongs to a degenerate element");
  out.total = total.value();
  return out;
}

double weibull_scale(double total_hazard, double m) {
  if (!(total_hazard >= 0)) throw DomainError("hazard must be non-negative");
  if (!(m > 0)) throw DomainError("Weibull shape must be positive");
  if (total_hazard == 0) return std::numeric_limits<double>::infinity();
  return std::pow(total_hazard, -1 / m);
}

bool ReliabilityResult::infinite_life() const { return std::isinf(eta); }

ReliabilityResult analyze_reliability(const Mesh& mesh, std::span<const BoundaryFace> faces,
                                      const MaterialParams& params, const HazardOptions& options) {
  ReliabilityResult result;
  result.hazard = integrate_hazard(mesh, faces, params, options);
  result.m = params.weibull_shape;
  result.eta = weibull_scale(result.hazard.total, result.m);
  return result;
}

double pof(double n, double eta, double m) {
  if (!(n >= 0)) throw DomainError("cycle count must be non-negative");
  if (n == 0 || std::isinf(eta)) return 0;
  if (std::isinf(n)) return 1;
  return -std::expm1(-std::pow(n / eta, m));
}

double density_fn(double n, double eta, double m) {
  if (!(n >= 0)) throw DomainError("cycle count must be non-negative");
  if (std::isinf(eta) || std::isinf(n)) return 0;
  const double x = n / eta;
  if (x == 0) return m == 1 ? 1 / eta : (m < 1 ? std::numeric_limits<double>::infinity() : 0);
  return m / eta * std::pow(x, m - 1) * std::exp(-std::pow(x, m));
}

double crack_count_probability(int q, double z) {
  if (q < 0) throw DomainError("crack count must be non-negative");
  if (!(z >= 0)) throw DomainError("integrated hazard must be non-negative");
  if (z == 0) return q == 0 ? 1 : 0;
  return std::exp(-z + q * std::log(z) - std::lgamma(q + 1.0));
}

double aggregate_segments(double single_pof, int count) {
  if (!(single_pof >= 0 && single_pof <= 1)) throw DomainError("PoF must lie in [0, 1]");
  if (count < 1) throw DomainError("segment count must be at least 1");
  if (single_pof == 1) return 1;
  return -std::expm1(count * std::log1p(-single_pof));
}

std::vector<TopFaceRow> top_faces_report(std::span<const FaceContribution> faces, double n,
                                         double m) {
  std::vector<std::size_t> order(faces.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double da = faces[a].density(), db = faces[b].density();
    if (da != db) return da > db;
    if (faces[a].element_id != faces[b].element_id) return faces[a].element_id < faces[b].element_id;
    return faces[a].local_face < faces[b].local_face;
  });
  CompensatedSum all;
  for (const auto& f : faces) all += f.hazard;
  const double total = all.value();
  const double n_pow = std::pow(n, m);

  std::vector<TopFaceRow> rows;
  rows.reserve(faces.size());
  CompensatedSum running;
  for (std::size_t r = 0; r < order.size(); ++r) {
    const FaceContribution& f = faces[order[r]];
    running += f.hazard;
    TopFaceRow row;
    row.rank = r + 1;
    row.element_id = f.element_id;
    row.local_face = f.local_face;
    row.density = f.density();
    row.hazard = f.hazard;
    row.cumulative_hazard = running.value();
    row.share = total > 0 ? std::min(1.0, row.cumulative_hazard / total) : 0;
    row.combined_pof = -std::expm1(-n_pow * row.cumulative_hazard);
    rows.push_back(row);
  }
  if (!rows.empty() && total > 0) rows.back().share = 1;
  return rows;
}

}  // namespace lcf
