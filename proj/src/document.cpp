#include "pptkit/document.hpp"

#include <cmath>

namespace pptkit {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

double require_finite_number(const json& j, const char* what) {
  if (!j.is_number()) throw DocumentError(std::string(what) + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw DocumentError(std::string(what) + ": non-finite value");
  return v;
}

std::size_t require_positive_integer(const json& j, const char* what) {
  if (!j.is_number_unsigned() || j.get<std::uint64_t>() == 0)
    throw DocumentError(std::string(what) + ": expected a positive integer");
  return j.get<std::size_t>();
}

const json& require_field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw DocumentError(std::string("missing field '") + name + "'");
  return j.at(name);
}

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw DocumentError("complex entry: expected a [re, im] pair");
  return {require_finite_number(j[0], "complex entry"),
          require_finite_number(j[1], "complex entry")};
}

HermitianMatrix hermitian_from_json(const json& j, const char* what) {
  try {
    return HermitianMatrix(matrix_from_json(j));
  } catch (const std::invalid_argument& e) {
    throw DocumentError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

std::string to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::Dense: return "dense";
    case DocumentKind::Family: return "family";
    case DocumentKind::QubitQudit: return "qubit_qudit";
    case DocumentKind::Werner: return "werner";
    case DocumentKind::Isotropic: return "isotropic";
  }
  return "dense";
}

DocumentKind MatrixDocument::kind() const {
  switch (payload.index()) {
    case 0: return DocumentKind::Dense;
    case 1: return DocumentKind::Family;
    case 2: return DocumentKind::QubitQudit;
    case 3: return DocumentKind::Werner;
    default: return DocumentKind::Isotropic;
  }
}

std::size_t MatrixDocument::dA() const {
  switch (payload.index()) {
    case 0: return std::get<DenseState>(payload).dA;
    case 1: return std::get<FamilyParams>(payload).dA;
    case 2: return 2;
    case 3: return std::get<WernerSpec>(payload).d;
    default: return std::get<IsotropicSpec>(payload).d;
  }
}

std::size_t MatrixDocument::dB() const {
  switch (payload.index()) {
    case 0: return std::get<DenseState>(payload).dB;
    case 1: return std::get<FamilyParams>(payload).dB;
    case 2: return std::get<QubitQuditParams>(payload).dB;
    case 3: return std::get<WernerSpec>(payload).d;
    default: return std::get<IsotropicSpec>(payload).d;
  }
}

ComplexMatrix MatrixDocument::to_dense() const {
  switch (payload.index()) {
    case 0: return std::get<DenseState>(payload).matrix;
    case 1: return assemble(std::get<FamilyParams>(payload));
    case 2: return assemble_qubit_qudit(std::get<QubitQuditParams>(payload));
    case 3: return werner(std::get<WernerSpec>(payload));
    default: return isotropic(std::get<IsotropicSpec>(payload));
  }
}

std::optional<FamilyParams> MatrixDocument::family_view(double tol) const {
  switch (payload.index()) {
    case 0: {
      const DenseState& d = std::get<DenseState>(payload);
      return extract_family(d.matrix, d.dA, d.dB, tol);
    }
    case 1: return std::get<FamilyParams>(payload);
    case 2: return qubit_qudit_to_family(std::get<QubitQuditParams>(payload));
    case 3: {
      const WernerSpec& w = std::get<WernerSpec>(payload);
      const auto [lo, hi] = werner_eps_range(w.d);
      if (w.eps < lo - 1e-12 || w.eps > hi + 1e-12) return std::nullopt;
      return embed_werner(w.d, w.eps);
    }
    default: return std::nullopt;  // isotropic states do not fit the family pattern
  }
}

ordered_json complex_to_json(const Complex& z) {
  return ordered_json::array({z.real(), z.imag()});
}

ordered_json matrix_to_json(const ComplexMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw DocumentError("matrix: expected an array of rows");
  const std::size_t dim = j.size();
  ComplexMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != dim)
      throw DocumentError("matrix: rows must all have length dim");
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = complex_from_json(row[c]);
  }
  return m;
}

nlohmann::ordered_json to_json(const MatrixDocument& doc) {
  ordered_json j;
  j["kind"] = to_string(doc.kind());
  j["dims"] = ordered_json::array({doc.dA(), doc.dB()});
  ordered_json payload;
  switch (doc.payload.index()) {
    case 0:
      payload["matrix"] = matrix_to_json(std::get<DenseState>(doc.payload).matrix);
      break;
    case 1: {
      const FamilyParams& p = std::get<FamilyParams>(doc.payload);
      payload["X"] = matrix_to_json(p.X.matrix());
      ordered_json m = ordered_json::array(), n = ordered_json::array();
      for (std::size_t k = 0; k < p.dA; ++k) {
        m.push_back(matrix_to_json(p.M[k].matrix()));
        n.push_back(matrix_to_json(p.N[k].matrix()));
      }
      payload["M"] = std::move(m);
      payload["N"] = std::move(n);
      break;
    }
    case 2: {
      const QubitQuditParams& q = std::get<QubitQuditParams>(doc.payload);
      payload["x00"] = q.x00;
      payload["x11"] = q.x11;
      payload["x01"] = complex_to_json(q.x01);
      payload["A"] = matrix_to_json(q.A.matrix());
      payload["B"] = matrix_to_json(q.B.matrix());
      break;
    }
    case 3: {
      const WernerSpec& w = std::get<WernerSpec>(doc.payload);
      payload["d"] = w.d;
      payload["eps"] = w.eps;
      break;
    }
    default: {
      const IsotropicSpec& s = std::get<IsotropicSpec>(doc.payload);
      payload["d"] = s.d;
      payload["eps"] = s.eps;
      break;
    }
  }
  j["payload"] = std::move(payload);
  return j;
}

MatrixDocument parse_document(const json& j) {
  const json& kind_field = require_field(j, "kind");
  if (!kind_field.is_string()) throw DocumentError("kind: expected a string");
  const std::string kind = kind_field.get<std::string>();
  const json& dims = require_field(j, "dims");
  if (!dims.is_array() || dims.size() != 2)
    throw DocumentError("dims: expected [dA, dB]");
  const std::size_t dA = require_positive_integer(dims[0], "dims[0]");
  const std::size_t dB = require_positive_integer(dims[1], "dims[1]");
  const json& payload = require_field(j, "payload");

  MatrixDocument doc;
  if (kind == "dense") {
    DenseState dense;
    dense.dA = dA;
    dense.dB = dB;
    dense.matrix = matrix_from_json(require_field(payload, "matrix"));
    if (dense.matrix.dim() != dA * dB)
      throw DocumentError("dense: matrix dim does not equal dA*dB");
    doc.payload = std::move(dense);
  } else if (kind == "family") {
    FamilyParams p;
    p.dA = dA;
    p.dB = dB;
    p.X = hermitian_from_json(require_field(payload, "X"), "X");
    const json& m = require_field(payload, "M");
    const json& n = require_field(payload, "N");
    if (!m.is_array() || !n.is_array() || m.size() != dA || n.size() != dA)
      throw DocumentError("family: M and N must be arrays of dA matrices");
    for (std::size_t k = 0; k < dA; ++k) {
      p.M.push_back(hermitian_from_json(m[k], "M[k]"));
      p.N.push_back(hermitian_from_json(n[k], "N[k]"));
    }
    try {
      check_dims(p);
    } catch (const std::invalid_argument& e) {
      throw DocumentError(std::string("family: ") + e.what());
    }
    doc.payload = std::move(p);
  } else if (kind == "qubit_qudit") {
    if (dA != 2) throw DocumentError("qubit_qudit: dims[0] must be 2");
    QubitQuditParams q;
    q.dB = dB;
    q.x00 = require_finite_number(require_field(payload, "x00"), "x00");
    q.x11 = require_finite_number(require_field(payload, "x11"), "x11");
    q.x01 = complex_from_json(require_field(payload, "x01"));
    q.A = hermitian_from_json(require_field(payload, "A"), "A");
    q.B = hermitian_from_json(require_field(payload, "B"), "B");
    try {
      check_dims(q);
    } catch (const std::invalid_argument& e) {
      throw DocumentError(std::string("qubit_qudit: ") + e.what());
    }
    doc.payload = std::move(q);
  } else if (kind == "werner" || kind == "isotropic") {
    const std::size_t d = require_positive_integer(require_field(payload, "d"), "d");
    const double eps = require_finite_number(require_field(payload, "eps"), "eps");
    if (d < 2) throw DocumentError(kind + ": d must be >= 2");
    if (d != dA || d != dB) throw DocumentError(kind + ": dims must equal [d, d]");
    if (kind == "werner")
      doc.payload = WernerSpec{d, eps};
    else
      doc.payload = IsotropicSpec{d, eps};
  } else {
    throw DocumentError("unknown kind '" + kind + "'");
  }
  return doc;
}

MatrixDocument parse_document_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
  return parse_document(j);
}

std::string serialize(const MatrixDocument& doc) { return to_json(doc).dump(2) + "\n"; }

}  // namespace pptkit
