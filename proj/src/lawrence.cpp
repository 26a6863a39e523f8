#include "nonrat/lawrence.hpp"

namespace nonrat {

NonrationalPolytopeCertificate certify_nonrational_polytope(const ConstructionScript& script,
                                                            const QuadExt& h1, const QuadExt& h2) {
  NonrationalPolytopeCertificate out;
  out.configuration = derive_nonrationality(script);
  if (!out.configuration.report.empty())
    throw std::domain_error("certify_nonrational_polytope: realization fails verification: " +
                            out.configuration.report.summary());
  Dehomogenized<QuadExt> deh = dehomogenize(out.configuration.realization);
  out.lifting = lawrence_lift(deh.affine, h1, h2);
  const int n = out.lifting.n;
  for (int i = 1; i <= n; ++i) {
    out.certificates.push_back(edge_certificate(out.lifting, i));
    ++out.summary.edge_certificates;
  }
  for (int i = 1; i <= n; ++i) {
    out.certificates.push_back(facet_point_certificate(out.lifting, i));
    ++out.summary.point_facet_certificates;
  }
  for (const auto& [part, witness] : line_partitions(deh.affine)) {
    out.certificates.push_back(facet_line_certificate(out.lifting, part, witness));
    ++out.summary.line_facet_certificates;
  }
  out.summary.all_verified = true;
  for (const auto& c : out.certificates) out.summary.all_verified = out.summary.all_verified && c.verified;
  out.recovery = recover_configuration(as_labeled_polytope(out.lifting));
  out.summary.roundtrip_ok =
      collinearity_pattern(out.recovery.vectors) == collinearity_pattern(homogenize(deh.affine));
  out.summary.dimension = 2 + n;
  out.summary.vertex_count = 2 * n;
  return out;
}

}  // namespace nonrat
