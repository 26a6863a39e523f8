#pragma once

#include <string>
#include <utility>

#include "nonrat/config.hpp"
#include "nonrat/lawrence.hpp"
#include "nonrat/surface.hpp"

// vendored single-header nlohmann/json
#include "json.hpp"

namespace nonrat {

using ordered_json = nlohmann::ordered_json;

/// Field descriptor for serialized exact values: "Q" or "Q(sqrt d)".
struct FieldDesc {
  bool rational = true;
  std::int64_t d = 0;

  std::string name() const { return rational ? "Q" : "Q(sqrt " + std::to_string(d) + ")"; }
  static FieldDesc parse(const std::string& s);
  static FieldDesc of(const Mat<QuadExt>& m);
};

std::string encode_scalar(const QuadExt& x, const FieldDesc& f);
QuadExt decode_scalar(const std::string& s);

Mat<QuadExt> to_quadext(const Mat<Rational>& m);

ordered_json configuration_to_json(const AbstractConfiguration& c);
AbstractConfiguration configuration_from_json(const ordered_json& j);

ordered_json realization_to_json(const Mat<QuadExt>& coords, const FieldDesc& f);
std::pair<Mat<QuadExt>, FieldDesc> realization_from_json(const ordered_json& j);

ordered_json lifting_to_json(const LawrenceLifting<QuadExt>& l, const FieldDesc& f);
/// Lifting JSON doubles as a labeled polytope; `facets` may be edited to
/// model a corrupted labeling.
struct LiftingFile {
  LawrenceLifting<QuadExt> lifting;
  LabeledPolytope<QuadExt> polytope;
  FieldDesc field;
  bool has_source = false;
};
LiftingFile lifting_from_json(const ordered_json& j);

ordered_json certificate_to_json(const FaceCertificate<QuadExt>& c, const FieldDesc& f);

ordered_json mesh_to_json(const QuadMesh<QuadExt>& m, const FieldDesc& f);
QuadMesh<QuadExt> mesh_from_json(const ordered_json& j);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace nonrat
