#include "lbd/outlier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "lbd/errors.hpp"
#include "lbd/evalkit.hpp"
#include "lbd/gzio.hpp"

namespace lbd::outlier {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const std::vector<double>& v) { return std::sqrt(dot(v, v)); }

// y = C v for the centered covariance C = (X-mu)^T (X-mu) / n, computed
// against the sparse uncentered matrix: C v = (X^T (X v) - n mu (mu.v)) / n.
struct CovarianceOp {
  const vectorspace::WeightedMatrix& m;
  std::vector<double> mu;  // column means

  explicit CovarianceOp(const vectorspace::WeightedMatrix& matrix) : m(matrix) {
    mu.assign(m.n_cols(), 0.0);
    for (const auto& row : m.rows)
      for (const auto& [col, w] : row) mu[col] += w;
    const double n = static_cast<double>(m.n_rows());
    for (auto& v : mu) v /= n;
  }

  std::vector<double> apply(const std::vector<double>& v) const {
    const double n = static_cast<double>(m.n_rows());
    std::vector<double> y(m.n_cols(), 0.0);
    for (const auto& row : m.rows) {
      double xv = 0.0;
      for (const auto& [col, w] : row) xv += w * v[col];
      for (const auto& [col, w] : row) y[col] += w * xv;
    }
    const double muv = dot(mu, v);
    for (std::size_t c = 0; c < y.size(); ++c) y[c] = (y[c] - n * mu[c] * muv) / n;
    return y;
  }
};

void fix_sign(std::vector<double>& v, std::vector<double>* projections) {
  std::size_t arg = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (std::fabs(v[i]) > std::fabs(v[arg])) arg = i;
  if (v[arg] < 0.0) {
    for (auto& x : v) x = -x;
    if (projections)
      for (auto& p : *projections) p = -p;
  }
}

}  // namespace

Pca2 pca2(const vectorspace::WeightedMatrix& m, int max_iterations, double tolerance) {
  if (m.n_rows() < 2 || m.n_cols() < 2)
    throw DataError("projection needs at least a 2x2 matrix, got " +
                    std::to_string(m.n_rows()) + "x" + std::to_string(m.n_cols()));
  CovarianceOp op(m);
  const std::size_t d = m.n_cols();

  // Total variance = sum over rows of |x - mu|^2; zero means every document
  // is the same point and no direction of variation exists.
  double sum_sq = 0.0;
  for (const auto& row : m.rows)
    for (const auto& [col, w] : row) sum_sq += w * w;
  const double n_rows = static_cast<double>(m.n_rows());
  const double mu_sq = dot(op.mu, op.mu);
  const double total_variance = sum_sq - n_rows * mu_sq;
  if (total_variance <= 1e-12 * std::max(1.0, sum_sq))
    throw DataError("degenerate matrix: all rows are identical");

  Pca2 result;
  for (int component = 0; component < 2; ++component) {
    // Fixed start, independent of the run seed.
    Rng start_rng(0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(component));
    std::vector<double> v(d);
    for (auto& x : v) x = start_rng.real01() - 0.5;
    if (component == 1) {
      const auto& v0 = result.components[0];
      const double p = dot(v, v0);
      for (std::size_t i = 0; i < d; ++i) v[i] -= p * v0[i];
    }
    double len = norm(v);
    for (auto& x : v) x /= len;

    double lambda = 0.0;
    for (int it = 0; it < max_iterations; ++it) {
      auto y = op.apply(v);
      if (component == 1) {  // deflate: stay orthogonal to the first component
        const auto& v0 = result.components[0];
        const double p = dot(y, v0);
        for (std::size_t i = 0; i < d; ++i) y[i] -= p * v0[i];
      }
      const double ylen = norm(y);
      if (ylen == 0.0) break;  // v is in the null space; keep the zero eigenvalue
      for (auto& x : y) x /= ylen;
      lambda = ylen;  // |C v| for unit v converges to the eigenvalue
      // Squared change of the (sign-stable, PSD operator) iterate.
      double vdiff = 0.0;
      for (std::size_t i = 0; i < d; ++i) {
        const double delta = y[i] - v[i];
        vdiff += delta * delta;
      }
      v.swap(y);
      if (vdiff <= tolerance) break;
    }
    result.components[component] = std::move(v);
    result.eigenvalues[component] = lambda;
  }

  // Projections of the centered rows, then the sign convention.
  std::vector<std::vector<double>> proj(2, std::vector<double>(m.n_rows(), 0.0));
  for (int component = 0; component < 2; ++component) {
    const auto& v = result.components[component];
    const double muv = dot(op.mu, v);
    for (std::size_t r = 0; r < m.n_rows(); ++r) {
      double xv = 0.0;
      for (const auto& [col, w] : m.rows[r]) xv += w * v[col];
      proj[component][r] = xv - muv;
    }
    fix_sign(result.components[component], &proj[component]);
  }
  result.projected.resize(m.n_rows());
  for (std::size_t r = 0; r < m.n_rows(); ++r)
    result.projected[r] = {proj[0][r], proj[1][r]};
  return result;
}

namespace {

double sqdist(const std::array<double, 2>& a, const std::array<double, 2>& b) {
  const double dx = a[0] - b[0], dy = a[1] - b[1];
  return dx * dx + dy * dy;
}

}  // namespace

KmeansResult kmeans(const std::vector<std::array<double, 2>>& points, std::uint32_t k,
                    Rng& rng, std::uint32_t max_iterations) {
  if (k == 0) throw ConfigError("k must be >= 1");
  if (points.size() < k)
    throw DataError("k-means needs at least k points, got " +
                    std::to_string(points.size()) + " for k=" + std::to_string(k));

  // k-means++: first center uniform, the rest d^2-weighted.
  KmeansResult result;
  result.centers.push_back(points[rng.index(points.size())]);
  std::vector<double> d2(points.size());
  while (result.centers.size() < k) {
    double total = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      double best = std::numeric_limits<double>::max();
      for (const auto& c : result.centers) best = std::min(best, sqdist(points[i], c));
      d2[i] = best;
      total += best;
    }
    std::size_t chosen;
    if (total <= 0.0) {
      chosen = rng.index(points.size());  // all points coincide with centers
    } else {
      double target = rng.real01() * total;
      chosen = points.size() - 1;
      double acc = 0.0;
      for (std::size_t i = 0; i < points.size(); ++i) {
        acc += d2[i];
        if (acc >= target) {
          chosen = i;
          break;
        }
      }
    }
    result.centers.push_back(points[chosen]);
  }

  result.assignment.assign(points.size(), 0);
  for (std::uint32_t sweep = 0; sweep < max_iterations; ++sweep) {
    // Assign.
    bool changed = false;
    double objective = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      std::uint32_t best = 0;
      double best_d = sqdist(points[i], result.centers[0]);
      for (std::uint32_t c = 1; c < k; ++c) {
        const double d = sqdist(points[i], result.centers[c]);
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      objective += best_d;
      if (result.assignment[i] != best) {
        result.assignment[i] = best;
        changed = true;
      }
    }
    result.objective.push_back(objective);
    result.iterations = sweep + 1;
    if (!changed && sweep > 0) break;

    // Update; an emptied cluster grabs the point farthest from its center.
    std::vector<std::array<double, 2>> sums(k, {0.0, 0.0});
    std::vector<std::uint32_t> sizes(k, 0);
    for (std::size_t i = 0; i < points.size(); ++i) {
      sums[result.assignment[i]][0] += points[i][0];
      sums[result.assignment[i]][1] += points[i][1];
      ++sizes[result.assignment[i]];
    }
    for (std::uint32_t c = 0; c < k; ++c) {
      if (sizes[c] == 0) {
        std::size_t far = 0;
        double far_d = -1.0;
        for (std::size_t i = 0; i < points.size(); ++i) {
          const double d = sqdist(points[i], result.centers[result.assignment[i]]);
          if (d > far_d) {
            far_d = d;
            far = i;
          }
        }
        result.centers[c] = points[far];
      } else {
        result.centers[c] = {sums[c][0] / sizes[c], sums[c][1] / sizes[c]};
      }
    }
  }
  return result;
}

OutlierResult detect(const vectorspace::WeightedMatrix& m, std::uint32_t k, Rng& rng) {
  OutlierResult result;
  result.pca = pca2(m);
  result.clusters = kmeans(result.pca.projected, k, rng);

  // Per cluster: majority domain by document count; ties resolve to domain A.
  std::vector<std::uint32_t> count_a(k, 0), count_c(k, 0);
  for (std::size_t r = 0; r < m.n_rows(); ++r) {
    auto c = result.clusters.assignment[r];
    if (m.row_domains[r] == corpus::Domain::A)
      ++count_a[c];
    else
      ++count_c[c];
  }
  result.cluster_summaries.resize(k);
  for (std::uint32_t c = 0; c < k; ++c) {
    auto& s = result.cluster_summaries[c];
    s.cluster = c;
    s.majority = count_c[c] > count_a[c] ? corpus::Domain::C : corpus::Domain::A;
    s.size = count_a[c] + count_c[c];
    s.minority_count = s.majority == corpus::Domain::C ? count_a[c] : count_c[c];
  }

  for (auto domain : {corpus::Domain::C, corpus::Domain::A}) {
    DomainOutliers out;
    out.domain = domain;
    for (std::size_t r = 0; r < m.n_rows(); ++r) {
      auto c = result.clusters.assignment[r];
      if (m.row_domains[r] == domain && result.cluster_summaries[c].majority != domain)
        out.outlier_ids.push_back(m.row_ids[r]);
    }
    result.by_domain.push_back(std::move(out));
  }
  return result;
}

void write_report(const vectorspace::WeightedMatrix& m, const OutlierResult& result,
                  const std::string& path) {
  std::vector<bool> is_outlier(m.n_rows(), false);
  for (std::size_t r = 0; r < m.n_rows(); ++r) {
    auto c = result.clusters.assignment[r];
    is_outlier[r] = result.cluster_summaries[c].majority != m.row_domains[r];
  }
  std::ostringstream out;
  out << "doc_id,domain,x,y,cluster,outlier\n";
  for (std::size_t r = 0; r < m.n_rows(); ++r) {
    out << m.row_ids[r] << ',' << corpus::domain_label(m.row_domains[r]) << ','
        << evalkit::format_double(result.pca.projected[r][0]) << ','
        << evalkit::format_double(result.pca.projected[r][1]) << ','
        << result.clusters.assignment[r] << ',' << (is_outlier[r] ? 1 : 0) << '\n';
  }
  write_file(path, out.str());
}

}  // namespace lbd::outlier
