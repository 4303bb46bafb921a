#include "qla/series/numeric_eval.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qla::series {

void AtomGrids::set(const Atom& a, std::vector<double> v) {
  if (sites == 0) sites = v.size();
  values[a.id()] = std::move(v);
}

const std::vector<double>& AtomGrids::get(std::uint16_t id) const {
  auto it = values.find(id);
  if (it == values.end()) {
    throw std::invalid_argument("AtomGrids: missing atom " +
                                Atom::from_id(id).to_string());
  }
  return it->second;
}

std::vector<double> evaluate_on_grid(const TruncatedSeries& s,
                                     const AtomGrids& grids, double epsilon) {
  std::vector<double> out(grids.sites, 0.0);
  double eps_pow = 1.0;
  for (int k = 0; k <= TruncatedSeries::kMaxOrder; ++k) {
    for (const auto& [m, c] : s.coeff(k).terms()) {
      const double coeff = c.to_double() * eps_pow;
      const std::vector<double>* planes[Monomial::kCapacity];
      for (int i = 0; i < m.n; ++i) planes[i] = &grids.get(m.ids[i]);
      for (std::size_t site = 0; site < out.size(); ++site) {
        double v = coeff;
        for (int i = 0; i < m.n; ++i) v *= (*planes[i])[site];
        out[site] += v;
      }
    }
    eps_pow *= epsilon;
  }
  return out;
}

double fit_loglog_slope(std::span<const double> eps,
                        std::span<const double> defect) {
  const std::size_t n = eps.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::log(eps[i]);
    const double y = std::log(defect[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double d = n * sxx - sx * sx;
  return (n * sxy - sx * sy) / d;
}

std::string DefectTable::to_text() const {
  std::string s = "eps        defect\n";
  char buf[64];
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%-10.4g %.6e\n", epsilons[i], defects[i]);
    s += buf;
  }
  std::snprintf(buf, sizeof buf, "fitted slope: %.3f\n", slope);
  s += buf;
  return s;
}

DefectTable numeric_crosscheck(const CrosscheckCase& cc,
                               std::span<const double> eps_values) {
  DefectTable table;
  for (double eps : eps_values) {
    const NumericSample sample = cc.sample(eps);
    double defect = 0.0;
    for (std::size_t c = 0; c < cc.prediction.size(); ++c) {
      const auto predicted =
          evaluate_on_grid(cc.prediction[c], sample.grids, eps);
      const auto& actual = sample.stepped[c];
      for (std::size_t s = 0; s < predicted.size(); ++s) {
        defect = std::max(defect, std::fabs(actual[s] - predicted[s]));
      }
    }
    table.epsilons.push_back(eps);
    table.defects.push_back(defect);
  }
  table.slope = fit_loglog_slope(table.epsilons, table.defects);
  return table;
}

double TrigField1D::deriv(int order, double x) const {
  double v = 0.0;
  for (const auto& m : modes) {
    v += m.amp * std::pow(m.k, order) *
         std::sin(m.k * x + m.phase + order * std::numbers::pi / 2.0);
  }
  return v;
}

double TrigField2D::deriv(int dx, int dy, double x, double y) const {
  double v = 0.0;
  for (const auto& m : modes) {
    v += m.amp * std::pow(m.kx, dx) * std::pow(m.ky, dy) *
         std::sin(m.kx * x + m.phase_x + dx * std::numbers::pi / 2.0) *
         std::sin(m.ky * y + m.phase_y + dy * std::numbers::pi / 2.0);
  }
  return v;
}

}  // namespace qla::series
