#include "qla/series/certify.hpp"

#include <algorithm>

namespace qla::series {

bool CertificationReport::passed() const {
  for (const auto& c : components) {
    if (!c.pass) return false;
  }
  return !components.empty();
}

std::string CertificationReport::to_text() const {
  std::string out = "certification: " + scheme + "\n";
  for (const auto& c : components) {
    out += "  component " + c.name + ": " + (c.pass ? "PASS" : "FAIL") + "\n";
    for (const auto& o : c.orders) {
      out += "    eps^" + std::to_string(o.order);
      if (o.target_order) {
        out += " (minus target)";
      }
      out += ": residual " + o.residual;
      if (o.checked) {
        out += o.pass ? "  [ok]" : "  [FAIL]";
      } else {
        out += "  [unchecked]";
      }
      out += "\n";
    }
    if (c.basis_mismatch) {
      out += "    note: residual contains atoms outside the target basis\n";
    }
  }
  for (const auto& n : notes) {
    out += "  note: " + n + "\n";
  }
  out += passed() ? "overall: PASS\n" : "overall: FAIL\n";
  return out;
}

CertificationReport certify_pde(const std::string& scheme,
                                const std::vector<ComponentTarget>& targets,
                                int order_k,
                                const std::vector<int>& required_zero_above) {
  CertificationReport report;
  report.scheme = scheme;
  for (const auto& t : targets) {
    ComponentReport cr;
    cr.name = t.name;
    const TruncatedSeries diff = t.actual - t.initial;
    const auto target_atoms = t.rhs.atom_ids();
    for (int k = 0; k <= TruncatedSeries::kMaxOrder; ++k) {
      OrderResult r;
      r.order = k;
      AtomPolynomial residual = diff.coeff(k);
      if (k == order_k) {
        residual -= t.rhs;
        r.target_order = true;
      }
      r.checked = k <= order_k ||
                  std::find(required_zero_above.begin(),
                            required_zero_above.end(),
                            k) != required_zero_above.end();
      r.pass = !r.checked || residual.is_zero();
      r.residual = residual.to_string();
      if (k == order_k && !residual.is_zero()) {
        for (auto id : residual.atom_ids()) {
          if (!target_atoms.contains(id)) {
            cr.basis_mismatch = true;
            break;
          }
        }
      }
      cr.pass = cr.pass && r.pass;
      cr.orders.push_back(std::move(r));
    }
    report.components.push_back(std::move(cr));
  }
  return report;
}

}  // namespace qla::series
