#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "pptkit/named_states.hpp"

namespace pptkit {

class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DenseState {
  std::size_t dA = 0;
  std::size_t dB = 0;
  ComplexMatrix matrix;  // dim dA * dB
};

enum class DocumentKind { Dense, Family, QubitQudit, Werner, Isotropic };

std::string to_string(DocumentKind kind);

/// One state in any of the supported parameterizations. Complex entries
/// serialize as [re, im] pairs, matrices as row-major nested arrays;
/// parse(serialize(x)) == x bit for bit for finite doubles.
struct MatrixDocument {
  std::variant<DenseState, FamilyParams, QubitQuditParams, WernerSpec, IsotropicSpec> payload;

  DocumentKind kind() const;
  std::size_t dA() const;
  std::size_t dB() const;
  std::size_t dim() const { return dA() * dB(); }

  /// Dense SCB matrix of the state this document describes.
  ComplexMatrix to_dense() const;

  /// Family view when one exists: the family payload itself, the Werner
  /// embedding, the qubit-qubit conversion, or a dense matrix matching
  /// the family sparsity pattern.
  std::optional<FamilyParams> family_view(double tol = kDefaultTolerance) const;
};

nlohmann::ordered_json to_json(const MatrixDocument& doc);
MatrixDocument parse_document(const nlohmann::json& j);
MatrixDocument parse_document_text(const std::string& text);
std::string serialize(const MatrixDocument& doc);

nlohmann::ordered_json complex_to_json(const Complex& z);
nlohmann::ordered_json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace pptkit
