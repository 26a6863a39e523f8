#include "nonrat/json_io.hpp"

#include <fstream>
#include <sstream>

namespace nonrat {

FieldDesc FieldDesc::parse(const std::string& s) {
  if (s == "Q") return {true, 0};
  if (s.rfind("Q(sqrt ", 0) == 0 && s.back() == ')') {
    FieldDesc f;
    f.rational = false;
    f.d = std::stoll(s.substr(7, s.size() - 8));
    QuadExt::check_radicand(f.d);
    return f;
  }
  throw std::invalid_argument("unknown field descriptor '" + s + "'");
}

FieldDesc FieldDesc::of(const Mat<QuadExt>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_rational()) return {false, m(i, j).radicand()};
  return {true, 0};
}

std::string encode_scalar(const QuadExt& x, const FieldDesc& f) {
  if (f.rational) {
    if (!x.is_rational()) throw std::invalid_argument("encode_scalar: irrational value in a Q matrix");
    return x.rat().str();
  }
  return x.str(f.d);
}

QuadExt decode_scalar(const std::string& s) {
  if (s.find("sqrt") != std::string::npos) return QuadExt::parse(s);
  return QuadExt(Rational::parse(s));
}

Mat<QuadExt> to_quadext(const Mat<Rational>& m) {
  Mat<QuadExt> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = QuadExt(m(i, j));
  return out;
}

ordered_json configuration_to_json(const AbstractConfiguration& c) {
  ordered_json j;
  j["n"] = c.n;
  j["lines"] = c.lines;
  j["labels"] = c.labels;
  return j;
}

AbstractConfiguration configuration_from_json(const ordered_json& j) {
  AbstractConfiguration c;
  c.n = j.at("n").get<int>();
  c.lines = j.at("lines").get<std::vector<std::vector<int>>>();
  if (j.contains("labels")) c.labels = j.at("labels").get<std::vector<std::string>>();
  c.validate();
  return c;
}

ordered_json realization_to_json(const Mat<QuadExt>& coords, const FieldDesc& f) {
  ordered_json j;
  j["field"] = f.name();
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < coords.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < coords.cols(); ++c) row.push_back(encode_scalar(coords(i, c), f));
    rows.push_back(row);
  }
  j["coords"] = rows;
  return j;
}

std::pair<Mat<QuadExt>, FieldDesc> realization_from_json(const ordered_json& j) {
  FieldDesc f = FieldDesc::parse(j.at("field").get<std::string>());
  const auto& rows = j.at("coords");
  if (rows.empty()) throw std::invalid_argument("realization: no coordinates");
  Mat<QuadExt> m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < rows[i].size(); ++c)
      m(i, c) = decode_scalar(rows[i][c].get<std::string>());
  return {m, f};
}

ordered_json lifting_to_json(const LawrenceLifting<QuadExt>& l, const FieldDesc& f) {
  ordered_json j;
  j["n"] = l.n;
  j["field"] = f.name();
  j["heights"] = {encode_scalar(l.h1, f), encode_scalar(l.h2, f)};
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < l.rows.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < l.rows.cols(); ++c) row.push_back(encode_scalar(l.rows(i, c), f));
    rows.push_back(row);
  }
  j["rows"] = rows;
  ordered_json labels = ordered_json::array();
  for (int i = 1; i <= l.n; ++i) labels.push_back("bar_" + std::to_string(i));
  for (int i = 1; i <= l.n; ++i) labels.push_back("dbar_" + std::to_string(i));
  j["labels"] = labels;
  ordered_json facets = ordered_json::array();
  for (int i = 1; i <= l.n; ++i) {
    std::vector<int> facet;
    for (int r = 1; r <= 2 * l.n; ++r)
      if (r != i && r != l.n + i) facet.push_back(r);
    facets.push_back(facet);
  }
  j["facets"] = facets;
  ordered_json source = ordered_json::array();
  for (Eigen::Index i = 0; i < l.source.rows(); ++i)
    source.push_back({encode_scalar(l.source(i, 0), f), encode_scalar(l.source(i, 1), f)});
  j["source"] = source;
  return j;
}

LiftingFile lifting_from_json(const ordered_json& j) {
  LiftingFile out;
  out.field = FieldDesc::parse(j.at("field").get<std::string>());
  const int n = j.at("n").get<int>();
  out.lifting.n = n;
  out.lifting.h1 = decode_scalar(j.at("heights")[0].get<std::string>());
  out.lifting.h2 = decode_scalar(j.at("heights")[1].get<std::string>());
  if (n < 1) throw std::invalid_argument("lifting: need n >= 1");
  const auto& rows = j.at("rows");
  if (static_cast<int>(rows.size()) != 2 * n) throw std::invalid_argument("lifting: expected 2n rows");
  out.lifting.rows.resize(2 * n, rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < rows[i].size(); ++c)
      out.lifting.rows(i, c) = decode_scalar(rows[i][c].get<std::string>());
  // labels identify the pairs
  std::vector<int> bar(n, 0), dbar(n, 0);
  const auto& labels = j.at("labels");
  if (static_cast<int>(labels.size()) != 2 * n) throw std::invalid_argument("lifting: expected 2n labels");
  for (std::size_t r = 0; r < labels.size(); ++r) {
    std::string s = labels[r].get<std::string>();
    bool is_dbar = s.rfind("dbar_", 0) == 0;
    bool is_bar = !is_dbar && s.rfind("bar_", 0) == 0;
    if (!is_bar && !is_dbar) throw std::invalid_argument("lifting: bad label '" + s + "'");
    int i = std::stoi(s.substr(is_dbar ? 5 : 4));
    if (i < 1 || i > n) throw std::invalid_argument("lifting: label index out of range");
    (is_dbar ? dbar : bar)[i - 1] = static_cast<int>(r) + 1;
  }
  out.polytope.rows = out.lifting.rows;
  for (int i = 0; i < n; ++i) {
    if (!bar[i] || !dbar[i]) throw std::invalid_argument("lifting: labels are not a bijection");
    out.polytope.pairs.push_back({bar[i], dbar[i]});
  }
  if (j.contains("facets")) {
    out.polytope.point_facets = j.at("facets").get<std::vector<std::vector<int>>>();
  } else {
    for (int i = 0; i < n; ++i) {
      std::vector<int> facet;
      for (int r = 1; r <= 2 * n; ++r)
        if (r != bar[i] && r != dbar[i]) facet.push_back(r);
      out.polytope.point_facets.push_back(facet);
    }
  }
  if (j.contains("source")) {
    const auto& src = j.at("source");
    out.lifting.source.resize(src.size(), 2);
    for (std::size_t i = 0; i < src.size(); ++i) {
      out.lifting.source(i, 0) = decode_scalar(src[i][0].get<std::string>());
      out.lifting.source(i, 1) = decode_scalar(src[i][1].get<std::string>());
    }
    out.has_source = true;
  }
  return out;
}

ordered_json certificate_to_json(const FaceCertificate<QuadExt>& c, const FieldDesc& f) {
  ordered_json j;
  j["kind"] = c.kind;
  j["detail"] = c.detail;
  ordered_json fn = ordered_json::array();
  for (Eigen::Index i = 0; i < c.functional.size(); ++i) fn.push_back(encode_scalar(c.functional(i), f));
  j["functional"] = fn;
  j["constant"] = encode_scalar(c.constant, f);
  j["vertices"] = c.vertices;
  j["dim"] = c.dimension;
  j["verified"] = c.verified;
  return j;
}

ordered_json mesh_to_json(const QuadMesh<QuadExt>& m, const FieldDesc& f) {
  ordered_json j;
  j["field"] = f.name();
  ordered_json verts = ordered_json::object();
  for (std::size_t i = 0; i < m.vertices.size(); ++i) {
    verts[std::to_string(i)] = {encode_scalar(m.vertices[i](0), f), encode_scalar(m.vertices[i](1), f),
                                encode_scalar(m.vertices[i](2), f)};
  }
  j["vertices"] = verts;
  j["faces"] = m.faces;
  ordered_json tags = ordered_json::object();
  for (const auto& [k, v] : m.tags) tags[k] = v;
  j["tags"] = tags;
  return j;
}

QuadMesh<QuadExt> mesh_from_json(const ordered_json& j) {
  QuadMesh<QuadExt> m;
  const auto& verts = j.at("vertices");
  m.vertices.resize(verts.size());
  for (auto it = verts.begin(); it != verts.end(); ++it) {
    int id = std::stoi(it.key());
    if (id < 0 || id >= static_cast<int>(m.vertices.size()))
      throw std::invalid_argument("mesh: vertex ids must be 0..n-1");
    for (int c = 0; c < 3; ++c) m.vertices[id](c) = decode_scalar(it.value()[c].get<std::string>());
  }
  m.faces = j.at("faces").get<std::vector<std::array<int, 4>>>();
  if (j.contains("tags"))
    for (auto it = j.at("tags").begin(); it != j.at("tags").end(); ++it)
      m.tags[it.key()] = it.value().get<int>();
  return m;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

}  // namespace nonrat
