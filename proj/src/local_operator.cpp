#include "qla/local_operator.hpp"

#include <cmath>
#include <string>

#include "qla/errors.hpp"

namespace qla {

const char* to_string(AngleLabel label) {
  switch (label) {
    case AngleLabel::Theta0: return "theta0";
    case AngleLabel::Theta1: return "theta1";
    case AngleLabel::Theta2: return "theta2";
    case AngleLabel::Beta0: return "beta0";
    case AngleLabel::Beta1: return "beta1";
    case AngleLabel::Beta2: return "beta2";
    case AngleLabel::Beta3: return "beta3";
    case AngleLabel::Alpha: return "alpha";
    case AngleLabel::Alpha1: return "alpha1";
  }
  return "?";
}

OpStructure OpStructure::identity(Kind kind, int ncomp, int nangles) {
  OpStructure s;
  s.kind = kind;
  s.ncomp = ncomp;
  s.nangles = nangles;
  s.rows.assign(static_cast<std::size_t>(ncomp), OpRow{});
  return s;
}

void OpStructure::add_rotation(int i, int j, int angle, int sign) {
  rows[i].cos_angle = angle;
  rows[i].sins.push_back({j, sign, angle});
  rows[j].cos_angle = angle;
  rows[j].sins.push_back({i, -sign, angle});
}

void OpStructure::add_shear_row(int row, int src, int angle, int sign) {
  rows[row].cos_angle = angle;
  rows[row].sins.push_back({src, sign, angle});
}

OpStructure OpStructure::transposed() const {
  OpStructure t = *this;
  for (auto& row : t.rows) row.sins.clear();
  // M^T[c][r] = M[r][c]; diagonal cos entries stay in place.
  for (int r = 0; r < ncomp; ++r) {
    for (const auto& s : rows[r].sins) {
      t.rows[s.col].sins.push_back({r, s.sign, s.angle});
    }
  }
  return t;
}

namespace {

constexpr int kMaxComp = 8;

// sin consistent with a given cos: sqrt(1 - c^2) with the 1 - c^2 formed by
// fma so no accuracy is lost to cancellation at small angles, and the pair
// satisfies c^2 + s^2 = 1 to ~(1 - c^2) * ulp. Sign comes from sin(angle).
double consistent_sin(double angle, double c) {
  const double one_minus_c2 = -std::fma(c, c, -1.0);
  const double mag = std::sqrt(one_minus_c2 > 0.0 ? one_minus_c2 : 0.0);
  return std::copysign(mag, std::sin(angle));
}

}  // namespace

LocalOperator::LocalOperator(OpStructure structure,
                             std::vector<AngleField> angles)
    : structure_(std::move(structure)) {
  if (static_cast<int>(angles.size()) != structure_.nangles) {
    throw ConfigError("LocalOperator: expected " +
                      std::to_string(structure_.nangles) + " angle fields, got " +
                      std::to_string(angles.size()));
  }
  if (structure_.nangles == 0) {
    throw ConfigError("LocalOperator: at least one angle field required");
  }
  sites_ = angles[0].sites();
  for (const auto& a : angles) {
    if (a.sites() != sites_) {
      throw ConfigError("LocalOperator: angle fields have mismatched site counts");
    }
  }

  auto tables = std::make_shared<AngleTables>();
  tables->angles = std::move(angles);
  tables->cos_planes.resize(tables->angles.size());
  tables->sin_planes.resize(tables->angles.size());
  for (std::size_t a = 0; a < tables->angles.size(); ++a) {
    const auto& vals = tables->angles[a].values;
    auto& cp = tables->cos_planes[a];
    auto& sp = tables->sin_planes[a];
    cp.resize(vals.size());
    sp.resize(vals.size());
    for (std::size_t s = 0; s < vals.size(); ++s) {
      const double ang = vals[s];
      if (!std::isfinite(ang)) {
        throw NumericError("LocalOperator: non-finite angle '" +
                           std::string(to_string(tables->angles[a].label)) +
                           "' at site " + std::to_string(s));
      }
      const double c = std::cos(ang);
      cp[s] = c;
      sp[s] = consistent_sin(ang, c);
    }
  }
  tables_ = std::move(tables);
  validate();
}

LocalOperator::LocalOperator(OpStructure structure,
                             std::shared_ptr<const AngleTables> t)
    : structure_(std::move(structure)), sites_(t->angles[0].sites()),
      tables_(std::move(t)) {
  validate();
}

void LocalOperator::validate() {
  if (structure_.ncomp < 1 || structure_.ncomp > kMaxComp ||
      static_cast<int>(structure_.rows.size()) != structure_.ncomp) {
    throw ConfigError("LocalOperator: bad component count");
  }
  for (const auto& row : structure_.rows) {
    if (row.cos_angle >= structure_.nangles) {
      throw ConfigError("LocalOperator: angle index out of range");
    }
    for (const auto& s : row.sins) {
      if (s.col < 0 || s.col >= structure_.ncomp || s.angle < 0 ||
          s.angle >= structure_.nangles) {
        throw ConfigError("LocalOperator: bad structure entry");
      }
    }
  }
  if (structure_.kind == Kind::Collision) {
    const double defect = max_orthogonality_defect();
    if (!(defect <= kOrthogonalityTol)) {
      throw NumericError("LocalOperator: collision operator fails orthogonality, defect " +
                         std::to_string(defect));
    }
  }
}

void LocalOperator::matrix_into(std::size_t site, double* m) const {
  const int n = structure_.ncomp;
  for (int i = 0; i < n * n; ++i) m[i] = 0.0;
  for (int r = 0; r < n; ++r) {
    const auto& row = structure_.rows[r];
    m[r * n + r] = row.cos_angle < 0 ? 1.0 : cos_plane(row.cos_angle)[site];
    for (const auto& s : row.sins) {
      m[r * n + s.col] += s.sign * sin_plane(s.angle)[site];
    }
  }
}

std::vector<double> LocalOperator::matrix_at(std::size_t site) const {
  const int n = structure_.ncomp;
  std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
  matrix_into(site, m.data());
  return m;
}

double LocalOperator::max_orthogonality_defect() const {
  const int n = structure_.ncomp;
  double m[kMaxComp * kMaxComp];
  double worst = 0.0;
  for (std::size_t site = 0; site < sites_; ++site) {
    matrix_into(site, m);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double dot = 0.0;
        for (int k = 0; k < n; ++k) dot += m[i * n + k] * m[j * n + k];
        const double defect = std::fabs(dot - (i == j ? 1.0 : 0.0));
        if (defect > worst) worst = defect;
      }
    }
  }
  return worst;
}

LocalOperator LocalOperator::transposed() const {
  return LocalOperator(structure_.transposed(), tables_);
}

}  // namespace qla
