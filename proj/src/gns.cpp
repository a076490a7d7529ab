#include "grouplogic/gns.hpp"

#include <algorithm>
#include <cmath>

#include "parallel_util.hpp"

namespace grouplogic {

double GramMatrix::max_hermiticity_dev() const {
  double dev = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      dev = std::max(dev, std::abs(at(i, j) - std::conj(at(j, i))));
  return dev;
}

GramMatrix gram(const MeasuredGroupoid& mg, int jobs) {
  [[maybe_unused]] const int nthreads = detail::thread_count(jobs);
  const FiniteGroupoid& g = mg.groupoid();
  const std::size_t n = g.morphism_count();
  GramMatrix gm;
  gm.g = mg.groupoid_ptr();
  gm.n = n;
  gm.certified = mg.bridge_certified();
  gm.entries.assign(n * n, Complex{0.0, 0.0});

  std::vector<char> excluded(n, 0);
  for (Idx m = 0; m < n; ++m)
    if (mg.modular_degenerate(g.inverse(m))) excluded[m] = 1;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
#endif
  for (std::int64_t ai = 0; ai < static_cast<std::int64_t>(n); ++ai) {
    const Idx alpha = static_cast<Idx>(ai);
    if (excluded[alpha]) continue;
    GroupoidFunction dagger =
        involution(mg, delta_function(mg.groupoid_ptr(), alpha));
    for (Idx beta = 0; beta < n; ++beta) {
      if (excluded[beta]) continue;
      gm.entries[alpha * n + beta] = state(
          mg, convolve(mg, dagger, delta_function(mg.groupoid_ptr(), beta)));
    }
  }

  for (Idx m = 0; m < n; ++m)
    if (excluded[m]) gm.excluded.push_back(m);
  return gm;
}

std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n) {
  if (n == 0) return {};
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  double scale = 0.0;
  for (double v : a) scale = std::max(scale, std::abs(v));
  const double stop = scale == 0.0 ? 0.0 : scale * 1e-15;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off = std::max(off, std::abs(at(i, j)));
    if (off <= stop) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        double apq = at(p, q);
        if (std::abs(apq) <= stop) continue;
        double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

std::vector<double> gram_eigenvalues(const GramMatrix& gm) {
  double scale = 0.0;
  for (const auto& v : gm.entries) scale = std::max(scale, std::abs(v));
  double dev = gm.max_hermiticity_dev();
  if (scale > 0.0 && dev > 1e-8 * std::max(1.0, scale))
    throw_input("gram matrix is not hermitian (deviation " +
                std::to_string(dev) + ")");
  std::vector<double> re(gm.n * gm.n);
  // Work on the symmetrized real part so rounding asymmetries cancel.
  for (std::size_t i = 0; i < gm.n; ++i)
    for (std::size_t j = 0; j < gm.n; ++j)
      re[i * gm.n + j] =
          0.5 * (gm.at(i, j).real() + gm.at(j, i).real());
  return jacobi_eigenvalues(std::move(re), gm.n);
}

bool in_gelfand_ideal(const MeasuredGroupoid& mg, const GroupoidFunction& f,
                      double tol) {
  Complex v = state(mg, convolve(mg, involution(mg, f), f));
  return v.real() <= tol && std::abs(v.imag()) <= tol;
}

std::size_t gns_dimension(const MeasuredGroupoid& mg, double tol) {
  auto eig = gram_eigenvalues(gram(mg));
  if (eig.empty()) return 0;
  double top = std::abs(eig.back());
  for (double v : eig) top = std::max(top, std::abs(v));
  if (top == 0.0) return 0;
  std::size_t rank = 0;
  for (double v : eig)
    if (v > tol * top) ++rank;
  return rank;
}

NullSetCheck null_set_correspondence(const MeasuredGroupoid& mg,
                                     const ObjectSet& a, double tol) {
  NullSetCheck out;
  out.mu2 = grade2(mg, a);
  GroupoidFunction chi = char_fn(source_fiber(mg.groupoid(), a));
  out.in_ideal = in_gelfand_ideal(mg, chi, tol);
  out.consistent = (out.mu2 <= tol) == out.in_ideal;
  return out;
}

GnsReport gns_report(const MeasuredGroupoid& mg, double ideal_tol,
                     double rank_tol, int jobs) {
  GnsReport rep;
  GramMatrix gm = gram(mg, jobs);
  rep.certified = gm.certified;
  rep.hermiticity_dev = gm.max_hermiticity_dev();
  auto eig = gram_eigenvalues(gm);
  if (!eig.empty()) {
    rep.min_eigenvalue = eig.front();
    rep.max_eigenvalue = eig.back();
    double top = std::max(std::abs(eig.front()), std::abs(eig.back()));
    for (double v : eig)
      if (top > 0.0 && v > rank_tol * top) ++rep.dimension;
  }
  const FiniteGroupoid& g = mg.groupoid();
  for (Idx j = 0; j < g.object_count(); ++j) {
    ObjectSet atom = make_object_set(mg.groupoid_ptr(), {j});
    NullSetCheck check = null_set_correspondence(mg, atom, ideal_tol);
    bool near = check.mu2 > 0.1 * ideal_tol && check.mu2 < 10.0 * ideal_tol;
    rep.atoms.push_back(
        {g.object_label(j), check.mu2, check.in_ideal, near});
  }
  for (Idx m : gm.excluded)
    rep.excluded_morphisms.push_back(g.morphism_label(m));
  return rep;
}

}  // namespace grouplogic
