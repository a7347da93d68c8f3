#include "cartankit/json_io.hpp"

namespace cartankit {

namespace {

const json& require(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw parse_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw parse_error(path + "." + key, "missing field");
  return *it;
}

std::size_t size_t_from_json(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) throw parse_error(path, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

json to_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const StructureConstants& sc) {
  json brackets = json::array();
  for (std::size_t i = 0; i < sc.dim(); ++i)
    for (std::size_t j = i + 1; j < sc.dim(); ++j) {
      const Vec row = sc.bracket_basis(i, j);
      if (vec_is_zero(row)) continue;
      brackets.push_back(json{{"i", i}, {"j", j}, {"coeffs", to_json(row)}});
    }
  return json{{"dim", sc.dim()}, {"brackets", std::move(brackets)}};
}

json to_json(const MatrixLieBasis& b) {
  json basis = json::array();
  for (const auto& m : b.basis) basis.push_back(to_json(m));
  return json{{"ambient", b.ambient}, {"basis", std::move(basis)}};
}

json to_json(const CartanData& d) {
  json base;
  if (d.base.is_point()) {
    base = json{{"kind", "point"}};
  } else {
    json iso = json::array();
    for (const auto& v : d.base.isotropy) iso.push_back(to_json(v));
    base = json{{"kind", "homogeneous"}, {"isotropy", std::move(iso)}};
  }
  auto hom_entries = [](const HomMap2& m) {
    json arr = json::array();
    for (std::size_t i = 0; i < m.n(); ++i)
      for (std::size_t j = i + 1; j < m.n(); ++j) {
        const Vec v = m.value(i, j);
        if (vec_is_zero(v)) continue;
        arr.push_back(json{{"i", i}, {"j", j}, {"value", to_json(v)}});
      }
    return arr;
  };
  return json{{"n", d.n},
              {"g", to_json(d.g)},
              {"base", std::move(base)},
              {"T", hom_entries(d.torsion)},
              {"R", hom_entries(d.curvature)},
              {"F", d.anchor_map.is_zero() ? json(nullptr) : to_json(d.anchor_map)}};
}

json to_json(const Signature& s) {
  return json{{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}};
}

json to_json(const AlgebraFingerprint& fp) {
  return json{{"dim", fp.dim},
              {"killing_signature", to_json(fp.killing_signature)},
              {"center_dim", fp.center_dim},
              {"derived_series_dims", fp.derived_series_dims},
              {"lower_central_dims", fp.lower_central_dims}};
}

json to_json(const Witness& w) {
  return json{{"indices", w.indices}, {"residual", to_json(w.residual)}, {"note", w.note}};
}

json to_json(const ValidationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json witnesses = json::array();
    for (const auto& w : c.witnesses) witnesses.push_back(to_json(w));
    checks.push_back(json{{"name", c.name},
                          {"passed", c.passed},
                          {"witness", c.witnesses.empty() ? json(nullptr) : to_json(c.witnesses[0])},
                          {"witnesses", std::move(witnesses)}});
  }
  return json{{"valid", r.valid}, {"checks", std::move(checks)}, {"notes", r.notes}};
}

Rational rational_from_json(const json& j, const std::string& path) {
  if (!j.is_string()) throw parse_error(path, "expected a rational string like \"3/4\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const contract_error& e) {
    throw parse_error(path, e.what());
  }
}

Vec vec_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) throw parse_error(path, "expected an array of rational strings");
  Vec v;
  for (std::size_t k = 0; k < j.size(); ++k)
    v.push_back(rational_from_json(j[k], path + "[" + std::to_string(k) + "]"));
  return v;
}

Matrix matrix_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) throw parse_error(path, "expected an array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  std::vector<Vec> data;
  for (std::size_t i = 0; i < rows; ++i) {
    Vec row = vec_from_json(j[i], path + "[" + std::to_string(i) + "]");
    if (i == 0)
      cols = row.size();
    else if (row.size() != cols)
      throw parse_error(path + "[" + std::to_string(i) + "]", "ragged matrix row");
    data.push_back(std::move(row));
  }
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = data[i][k];
  return m;
}

StructureConstants structure_constants_from_json(const json& j, const std::string& path) {
  const std::size_t dim = size_t_from_json(require(j, "dim", path), path + ".dim");
  StructureConstants sc(dim);
  const json& brackets = require(j, "brackets", path);
  if (!brackets.is_array()) throw parse_error(path + ".brackets", "expected an array");
  for (std::size_t k = 0; k < brackets.size(); ++k) {
    const std::string p = path + ".brackets[" + std::to_string(k) + "]";
    const json& entry = brackets[k];
    const std::size_t i = size_t_from_json(require(entry, "i", p), p + ".i");
    const std::size_t jj = size_t_from_json(require(entry, "j", p), p + ".j");
    if (i >= jj) throw parse_error(p, "bracket entries must have i < j");
    if (jj >= dim) throw parse_error(p + ".j", "index out of range");
    Vec coeffs = vec_from_json(require(entry, "coeffs", p), p + ".coeffs");
    if (coeffs.size() != dim) throw parse_error(p + ".coeffs", "coefficient row of wrong length");
    sc.set_row(i, jj, std::move(coeffs));
  }
  return sc;
}

MatrixLieBasis matrix_lie_basis_from_json(const json& j, const std::string& path) {
  MatrixLieBasis b;
  b.ambient = size_t_from_json(require(j, "ambient", path), path + ".ambient");
  const json& basis = require(j, "basis", path);
  if (!basis.is_array()) throw parse_error(path + ".basis", "expected an array of matrices");
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const std::string p = path + ".basis[" + std::to_string(k) + "]";
    Matrix m = matrix_from_json(basis[k], p);
    if (m.rows() != b.ambient || m.cols() != b.ambient)
      throw parse_error(p, "basis matrix does not match the ambient size");
    b.basis.push_back(std::move(m));
  }
  return b;
}

namespace {

HomMap2 hom_map_from_json(const json& j, std::size_t n, std::size_t target,
                          const std::string& path) {
  if (!j.is_array()) throw parse_error(path, "expected an array of wedge entries");
  HomMap2 m(n, target);
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string p = path + "[" + std::to_string(k) + "]";
    const json& entry = j[k];
    const std::size_t i = size_t_from_json(require(entry, "i", p), p + ".i");
    const std::size_t jj = size_t_from_json(require(entry, "j", p), p + ".j");
    if (i >= jj) throw parse_error(p, "wedge entries must have i < j");
    if (jj >= n) throw parse_error(p + ".j", "index out of range");
    Vec value = vec_from_json(require(entry, "value", p), p + ".value");
    if (value.size() != target) throw parse_error(p + ".value", "value of wrong length");
    m.set(i, jj, std::move(value));
  }
  return m;
}

}  // namespace

CartanData cartan_data_from_json(const json& j, const std::string& path) {
  const std::size_t n = size_t_from_json(require(j, "n", path), path + ".n");
  MatrixLieBasis g = matrix_lie_basis_from_json(require(j, "g", path), path + ".g");
  const json& base_j = require(j, "base", path);
  const json& kind_j = require(base_j, "kind", path + ".base");
  if (!kind_j.is_string()) throw parse_error(path + ".base.kind", "expected \"point\" or \"homogeneous\"");
  const std::string kind = kind_j.get<std::string>();
  BaseDescriptor base;
  if (kind == "point") {
    base = BaseDescriptor::point();
  } else if (kind == "homogeneous") {
    const json& iso = require(base_j, "isotropy", path + ".base");
    if (!iso.is_array()) throw parse_error(path + ".base.isotropy", "expected an array of vectors");
    std::vector<Vec> vs;
    for (std::size_t k = 0; k < iso.size(); ++k)
      vs.push_back(vec_from_json(iso[k], path + ".base.isotropy[" + std::to_string(k) + "]"));
    base = BaseDescriptor::homogeneous(std::move(vs));
  } else {
    throw parse_error(path + ".base.kind", "expected \"point\" or \"homogeneous\"");
  }
  HomMap2 torsion = hom_map_from_json(require(j, "T", path), n, n, path + ".T");
  HomMap2 curvature = hom_map_from_json(require(j, "R", path), n, g.dim(), path + ".R");
  const json& f = require(j, "F", path);
  Matrix anchor_map = f.is_null() ? Matrix::zero(g.dim(), n) : matrix_from_json(f, path + ".F");
  try {
    return make_cartan_data(n, std::move(g), std::move(base), std::move(torsion),
                            std::move(curvature), std::move(anchor_map));
  } catch (const shape_error& e) {
    throw parse_error(path, e.what());
  } catch (const contract_error& e) {
    throw parse_error(path, e.what());
  }
}

MetricLieGroupSpec metric_spec_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) throw parse_error(path, "expected an object");
  MetricLieGroupSpec spec;
  if (j.contains("constants")) {
    spec.h_constants = structure_constants_from_json(j["constants"], path + ".constants");
    if (j.contains("frame") && !j["frame"].is_null())
      spec.ambient_frame = matrix_lie_basis_from_json(j["frame"], path + ".frame");
  } else if (j.contains("frame")) {
    spec.ambient_frame = matrix_lie_basis_from_json(j["frame"], path + ".frame");
    try {
      spec.h_constants = structure_constants_from_matrices(*spec.ambient_frame);
    } catch (const contract_error& e) {
      throw parse_error(path + ".frame", e.what());
    }
  } else {
    throw parse_error(path, "expected a \"constants\" or \"frame\" field");
  }
  return spec;
}

std::vector<Matrix> generator_list_from_json(const json& j, const std::string& path) {
  const json& gens = require(j, "generators", path);
  if (!gens.is_array()) throw parse_error(path + ".generators", "expected an array of matrices");
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < gens.size(); ++k)
    out.push_back(matrix_from_json(gens[k], path + ".generators[" + std::to_string(k) + "]"));
  return out;
}

}  // namespace cartankit
