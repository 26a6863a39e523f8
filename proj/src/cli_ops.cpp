#include "nonrat/cli_ops.hpp"

#include <sstream>

namespace nonrat {

namespace {

std::string field_mismatch(const FieldDesc& have, const std::string& expect) {
  if (expect.empty() || have.name() == expect) return "";
  return "field mismatch: file has " + have.name() + ", expected " + expect;
}

CommandOutcome fail(int code, const std::string& msg) {
  CommandOutcome o;
  o.exit_code = code;
  o.report = msg + "\n";
  return o;
}

Mat<QuadExt> to_mat(const QuadMesh<QuadExt>& m) {
  Mat<QuadExt> out(static_cast<Eigen::Index>(m.vertices.size()), 3);
  for (std::size_t i = 0; i < m.vertices.size(); ++i)
    for (int c = 0; c < 3; ++c) out(static_cast<Eigen::Index>(i), c) = m.vertices[i](c);
  return out;
}

}  // namespace

std::string load_script_text(const std::string& path_or_name) {
  if (path_or_name == "pentagon11") return pentagon11_script();
  if (path_or_name == "pentagon9") return pentagon9_script();
  if (path_or_name == "square") return rational_square_script();
  return read_text_file(path_or_name);
}

CommandOutcome cmd_derive(const std::string& script_text, const std::string& out_path) {
  CommandOutcome o;
  std::ostringstream rep;
  try {
    ConstructionScript script = ConstructionScript::parse(script_text);
    NonrationalityCertificate cert = derive_nonrationality(script);
    rep << "constraint: " << cert.constraint.str() << "\n";
    rep << "rational roots: none\n";
    rep << "radicand d = " << cert.radicand << "\n";
    rep << "root: a = " << cert.root.str() << "\n";
    rep << "verification: " << (cert.report.empty() ? "empty report" : cert.report.summary()) << "\n";
    if (!cert.report.empty()) {
      o.exit_code = 1;
      o.report = rep.str();
      return o;
    }
    FieldDesc f{false, cert.radicand};
    ordered_json j = realization_to_json(cert.realization, f);
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : cert.constraint.coeffs()) coeffs.push_back(c.str());
    j["constraint"] = coeffs;  // constant term first
    j["radicand"] = cert.radicand;
    j["root"] = cert.root.str();
    write_text_file(out_path, j.dump(2) + "\n");
    o.artifacts.push_back(out_path);
    rep << "wrote " << out_path << "\n";
    o.report = rep.str();
  } catch (const ScriptError& e) {
    return fail(2, std::string("parse error: ") + e.what());
  } catch (const std::exception& e) {
    return fail(1, e.what());
  }
  return o;
}

CommandOutcome cmd_lift(const std::string& realization_path, const std::string& out_path,
                        const Rational& h1, const Rational& h2, const std::string& expect_field) {
  try {
    ordered_json j = ordered_json::parse(read_text_file(realization_path));
    auto [coords, field] = realization_from_json(j);
    if (auto m = field_mismatch(field, expect_field); !m.empty()) return fail(1, m);
    Dehomogenized<QuadExt> deh = dehomogenize(coords);
    LawrenceLifting<QuadExt> l = lawrence_lift(deh.affine, QuadExt(h1), QuadExt(h2));
    write_text_file(out_path, lifting_to_json(l, field).dump(2) + "\n");
    CommandOutcome o;
    o.artifacts.push_back(out_path);
    std::ostringstream rep;
    rep << "lifting: " << 2 * l.n << " rows, " << 2 + l.n << " columns (n = " << l.n << ", field "
        << field.name() << ")\n";
    rep << "wrote " << out_path << "\n";
    o.report = rep.str();
    return o;
  } catch (const std::exception& e) {
    return fail(1, e.what());
  }
}

CommandOutcome cmd_certify(const std::string& lifting_path, const std::string& certs_out_path,
                           const std::string& expect_field) {
  try {
    LiftingFile lf = lifting_from_json(ordered_json::parse(read_text_file(lifting_path)));
    if (auto m = field_mismatch(lf.field, expect_field); !m.empty()) return fail(1, m);
    if (!lf.has_source) return fail(1, "certify: lifting file has no source realization");
    std::vector<FaceCertificate<QuadExt>> certs;
    int edges = 0, points = 0, lines = 0;
    for (int i = 1; i <= lf.lifting.n; ++i) {
      certs.push_back(edge_certificate(lf.lifting, i));
      ++edges;
    }
    for (int i = 1; i <= lf.lifting.n; ++i) {
      certs.push_back(facet_point_certificate(lf.lifting, i));
      ++points;
    }
    for (const auto& [part, witness] : line_partitions(lf.lifting.source)) {
      certs.push_back(facet_line_certificate(lf.lifting, part, witness));
      ++lines;
    }
    bool all = true;
    ordered_json out = ordered_json::array();
    for (const auto& c : certs) {
      all = all && c.verified;
      out.push_back(certificate_to_json(c, lf.field));
    }
    write_text_file(certs_out_path, out.dump(2) + "\n");
    CommandOutcome o;
    o.artifacts.push_back(certs_out_path);
    std::ostringstream rep;
    rep << "certificates: " << edges << " edge, " << points << " point-facet, " << lines
        << " line-facet\n";
    rep << "all verified: " << (all ? "yes" : "no") << "\n";
    rep << "wrote " << certs_out_path << "\n";
    o.exit_code = all ? 0 : 1;
    o.report = rep.str();
    return o;
  } catch (const std::exception& e) {
    return fail(1, e.what());
  }
}

CommandOutcome cmd_recover(const std::string& lifting_path, const std::string& out_path,
                           const std::string& expect_field) {
  try {
    LiftingFile lf = lifting_from_json(ordered_json::parse(read_text_file(lifting_path)));
    if (auto m = field_mismatch(lf.field, expect_field); !m.empty()) return fail(1, m);
    Recovery<QuadExt> rec = recover_configuration(lf.polytope);
    write_text_file(out_path, realization_to_json(rec.vectors, FieldDesc::of(rec.vectors)).dump(2) + "\n");
    CommandOutcome o;
    o.artifacts.push_back(out_path);
    std::ostringstream rep;
    rep << "recovered " << rec.vectors.rows() << " vectors in the 3-dimensional space R\n";
    if (lf.has_source) {
      bool same = collinearity_pattern(rec.vectors) == collinearity_pattern(homogenize(lf.lifting.source));
      rep << "round trip: collinearity pattern " << (same ? "matches source" : "DIFFERS from source")
          << "\n";
      if (!same) o.exit_code = 1;
    }
    rep << "wrote " << out_path << "\n";
    o.report = rep.str();
    return o;
  } catch (const std::exception& e) {
    return fail(1, e.what());
  }
}

CommandOutcome cmd_surface(const std::string& target, const std::string& out_prefix, TripleMode mode,
                           int precision) {
  try {
    QuadMesh<QuadExt> mesh;
    std::ostringstream rep;
    std::string extra;
    if (target == "gadget") {
      Gadget<Rational> g = reference_gadget();
      for (const auto& v : g.vertices) {
        Vec3<QuadExt> w;
        for (int c = 0; c < 3; ++c) w(c) = QuadExt(v(c));
        mesh.add_vertex(w);
      }
      mesh.faces = g.faces;
      for (int k = 0; k < 4; ++k) mesh.tags["boundary" + std::to_string(k)] = g.boundary[k];
      std::array<int, 4> b = g.boundary;
      bool bd_ok = face_status(mesh.vertices, b) == FaceStatus::Ok;
      extra = bd_ok ? "boundary flat+convex" : "boundary INVALID";
      if (!bd_ok) return fail(1, "gadget boundary quad failed verification");
    } else if (target == "s48") {
      auto t2 = s48_template_2d<QuadExt>(QuadExt(2));
      std::array<Vec3<QuadExt>, 9> pts;
      for (int i = 0; i < 9; ++i) {
        pts[i](0) = t2[i][0];
        pts[i](1) = t2[i][1];
        pts[i](2) = QuadExt(0);
      }
      mesh = build_s48(pts);
      Mat<QuadExt> hom(9, 4);
      for (int i = 0; i < 9; ++i) {
        hom(i, 0) = QuadExt(1);
        for (int c = 0; c < 3; ++c) hom(i, c + 1) = pts[i](c);
      }
      extra = rank(hom) == 3 ? "special plane OK" : "special plane BROKEN";
      if (rank(hom) != 3) return fail(1, "s48 special vertices not coplanar");
    } else if (target == "s144") {
      std::array<Vec3<QuadExt>, 3> anchors;
      anchors[0] = Vec3<QuadExt>(QuadExt(0), QuadExt(0), QuadExt(0));
      anchors[1] = Vec3<QuadExt>(QuadExt(1), QuadExt(0), QuadExt(0));
      anchors[2] = Vec3<QuadExt>(QuadExt(3), QuadExt(0), QuadExt(0));
      mesh = build_s144(anchors);
      Mat<QuadExt> hom(3, 4);
      for (int i = 0; i < 3; ++i) {
        hom(i, 0) = QuadExt(1);
        for (int c = 0; c < 3; ++c) hom(i, c + 1) = anchors[i](c);
      }
      extra = rank(hom) == 2 ? "anchor line OK" : "anchor line BROKEN";
      if (rank(hom) != 2) return fail(1, "s144 anchors not collinear");
    } else if (target == "pentagon") {
      mesh = build_pentagon_surface(mode);
      FieldDesc f = FieldDesc::of(to_mat(mesh));
      extra = "field " + f.name();
    } else {
      return fail(1, "unknown surface target '" + target + "' (gadget|s48|s144|pentagon)");
    }
    MeshReport<QuadExt> mr = verify_flat_convex(mesh);
    auto nice = mesh_nice_failures(mesh);
    if (!mr.face_failures.empty())
      return fail(1, std::to_string(mr.face_failures.size()) + " faces failed flat/convex verification");
    if (!nice.empty()) return fail(1, std::to_string(nice.size()) + " face pairs intersect badly");
    FieldDesc f = FieldDesc::of(to_mat(mesh));
    write_text_file(out_prefix + ".exact.json", mesh_to_json(mesh, f).dump(2) + "\n");
    write_text_file(out_prefix + ".obj", export_obj(mesh, precision));
    CommandOutcome o;
    o.artifacts = {out_prefix + ".obj", out_prefix + ".exact.json"};
    rep << mesh.faces.size() << " faces, " << mesh.vertices.size() << " vertices, " << extra << "\n";
    rep << "all faces flat and convex\n";
    rep << "wrote " << out_prefix << ".obj and " << out_prefix << ".exact.json\n";
    o.report = rep.str();
    return o;
  } catch (const std::exception& e) {
    return fail(1, e.what());
  }
}

}  // namespace nonrat
