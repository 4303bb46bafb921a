#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qla/series/expansion.hpp"

namespace qla::series {

// Per-site numeric values for every atom a series mentions.
struct AtomGrids {
  std::size_t sites = 0;
  std::map<std::uint16_t, std::vector<double>> values;

  void set(const Atom& a, std::vector<double> v);
  const std::vector<double>& get(std::uint16_t id) const;
};

// Evaluates a truncated series site by site at a concrete eps.
std::vector<double> evaluate_on_grid(const TruncatedSeries& s,
                                     const AtomGrids& grids, double epsilon);

// Least-squares slope of log(defect) against log(eps).
double fit_loglog_slope(std::span<const double> eps,
                        std::span<const double> defect);

// One crosscheck subject: a symbolic one-step prediction plus a sampler
// that, for a given eps, executes the real lattice one-step on trig
// polynomial data and returns both the stepped planes and the atom grids
// the prediction needs.
struct NumericSample {
  std::vector<std::vector<double>> stepped;  // per component
  AtomGrids grids;
};

struct CrosscheckCase {
  std::string name;
  SeriesVector prediction;
  std::function<NumericSample(double eps)> sample;
};

struct DefectTable {
  std::vector<double> epsilons;
  std::vector<double> defects;  // max abs over components and sites
  double slope = 0.0;

  std::string to_text() const;
};

// Runs the case at each eps and fits the defect scaling slope. A correct
// eps^4-truncated prediction of a correct kernel gives slope ~5.
DefectTable numeric_crosscheck(const CrosscheckCase& cc,
                               std::span<const double> eps_values);

// Trig polynomial sample fields with closed-form derivatives of any order.
struct TrigField1D {
  struct Mode {
    double amp, k, phase;
  };
  std::vector<Mode> modes;

  double deriv(int order, double x) const;
  double operator()(double x) const { return deriv(0, x); }
};

struct TrigField2D {
  struct Mode {
    double amp, kx, ky, phase_x, phase_y;
  };
  std::vector<Mode> modes;

  double deriv(int dx, int dy, double x, double y) const;
  double operator()(double x, double y) const { return deriv(0, 0, x, y); }
};

}  // namespace qla::series
