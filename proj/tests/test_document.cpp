#include <doctest.h>

#include "oracles.hpp"
#include "pptkit/reports.hpp"

using namespace pptkit;

namespace {

MatrixDocument family_doc(FamilyParams p) {
  MatrixDocument doc;
  doc.payload = std::move(p);
  return doc;
}

}  // namespace

TEST_CASE("serialize/parse round trip is byte stable") {
  std::vector<MatrixDocument> docs;
  docs.push_back(family_doc(sample_random(3, 4, 123, 0.7)));
  {
    MatrixDocument doc;
    doc.payload = WernerSpec{2, -1.0 / 3.0};
    docs.push_back(doc);
    doc.payload = IsotropicSpec{3, 0.1 + 1e-17};
    docs.push_back(doc);
    doc.payload = sample_qubit_qudit(4, 9, 0.6);
    docs.push_back(doc);
    DenseState dense;
    dense.dA = 2;
    dense.dB = 2;
    dense.matrix = werner(2, 1.0 / 3.0);
    doc.payload = std::move(dense);
    docs.push_back(doc);
  }
  for (const MatrixDocument& doc : docs) {
    const std::string first = serialize(doc);
    const MatrixDocument reparsed = parse_document_text(first);
    CHECK(serialize(reparsed) == first);
    CHECK(reparsed.kind() == doc.kind());
    CHECK(max_abs_diff(reparsed.to_dense(), doc.to_dense()) == 0.0);
  }
}

TEST_CASE("awkward doubles survive the round trip bit for bit") {
  const double values[] = {1.0 / 3.0,  5e-324,         1.7976931348623157e308,
                           -0.1,       1e-17,          0.1 + 2e-17,
                           -2.2250738585072014e-308, 0.0};
  DenseState dense;
  dense.dA = 2;
  dense.dB = 2;
  dense.matrix = ComplexMatrix(4);
  for (std::size_t i = 0; i < 4; ++i) {
    dense.matrix(i, i) = Complex(values[i], values[i + 4]);
  }
  dense.matrix(0, 1) = Complex(values[1], values[2]);
  dense.matrix(1, 0) = Complex(values[3], values[5]);
  MatrixDocument doc;
  doc.payload = std::move(dense);
  const std::string text = serialize(doc);
  const MatrixDocument round = parse_document_text(text);
  CHECK(serialize(round) == text);
  CHECK(round.to_dense() == doc.to_dense());
}

TEST_CASE("document dims and dense views") {
  MatrixDocument doc;
  doc.payload = WernerSpec{3, -0.1};
  CHECK(doc.dA() == 3);
  CHECK(doc.dB() == 3);
  CHECK(max_abs_diff(doc.to_dense(), werner(3, -0.1)) == 0.0);

  doc.payload = sample_qubit_qudit(5, 2, 0.5);
  CHECK(doc.dA() == 2);
  CHECK(doc.dB() == 5);
}

TEST_CASE("family_view") {
  SUBCASE("family payload returns itself") {
    const MatrixDocument doc = family_doc(sample_random(2, 4, 5, 0.5));
    CHECK(doc.family_view().has_value());
  }
  SUBCASE("werner payload embeds") {
    MatrixDocument doc;
    doc.payload = WernerSpec{3, -0.1};
    const auto fam = doc.family_view();
    REQUIRE(fam.has_value());
    CHECK(max_abs_diff(assemble(*fam), werner(3, -0.1)) <= 1e-12);
  }
  SUBCASE("patterned dense payload extracts") {
    DenseState dense;
    dense.dA = dense.dB = 3;
    dense.matrix = assemble(sample_random(3, 3, 8, 0.9));
    MatrixDocument doc;
    doc.payload = std::move(dense);
    CHECK(doc.family_view().has_value());
  }
  SUBCASE("isotropic payload has none") {
    MatrixDocument doc;
    doc.payload = IsotropicSpec{3, 0.5};
    CHECK_FALSE(doc.family_view().has_value());
  }
}

TEST_CASE("parse errors carry messages") {
  CHECK_THROWS_AS(parse_document_text("not json"), DocumentError);
  CHECK_THROWS_AS(parse_document_text("{}"), DocumentError);
  CHECK_THROWS_AS(parse_document_text(R"({"kind":"nope","dims":[2,2],"payload":{}})"),
                  DocumentError);
  CHECK_THROWS_AS(parse_document_text(R"({"kind":"dense","dims":[2,2],"payload":{}})"),
                  DocumentError);
  // wrong matrix size for the declared dims
  CHECK_THROWS_AS(
      parse_document_text(
          R"({"kind":"dense","dims":[2,2],"payload":{"matrix":[[[1,0]]]}})"),
      DocumentError);
  // ragged row
  CHECK_THROWS_AS(
      parse_document_text(
          R"({"kind":"dense","dims":[1,2],"payload":{"matrix":[[[1,0],[0,0]],[[0,0]]]}})"),
      DocumentError);
  // non-finite entry
  CHECK_THROWS_AS(
      parse_document_text(
          R"({"kind":"werner","dims":[2,2],"payload":{"d":2,"eps":1e999}})"),
      DocumentError);
  // werner dims must match d
  CHECK_THROWS_AS(
      parse_document_text(
          R"({"kind":"werner","dims":[2,3],"payload":{"d":2,"eps":0.0}})"),
      DocumentError);
  // non-hermitian family block
  CHECK_THROWS_AS(
      parse_document_text(
          R"({"kind":"family","dims":[2,2],"payload":{
               "X":[[[0.1,0],[0.5,0]],[[0.1,0],[0.2,0]]],
               "M":[[],[[[0.3,0]]]],
               "N":[[[[0.3,0]]],[]]}})"),
      DocumentError);
}

TEST_CASE("analysis report is stable under a round trip") {
  const MatrixDocument doc = family_doc(sample_random(3, 4, 31, 0.8));
  const MatrixDocument round = parse_document_text(serialize(doc));
  CHECK(analysis_report(doc).dump() == analysis_report(round).dump());
}

TEST_CASE("analysis report fields") {
  SUBCASE("family member") {
    const MatrixDocument doc = family_doc(sample_random(3, 4, 31, 0.8));
    const auto report = analysis_report(doc);
    CHECK(report.contains("validation"));
    CHECK(report.contains("block_spectrum"));
    CHECK(report.contains("dense_spectrum"));
    CHECK(report.contains("negativity"));
    CHECK(report.contains("is_ppt"));
    CHECK(report.contains("classification"));
    REQUIRE(report.contains("direct_sum_verified"));
    CHECK(report["direct_sum_verified"]["ok"].get<bool>());
    CHECK(report["dense_spectrum"].size() == 12);
    CHECK(report["validation"]["overall"].get<bool>());
  }
  SUBCASE("isotropic member omits the block fields") {
    MatrixDocument doc;
    doc.payload = IsotropicSpec{3, 0.5};
    const auto report = analysis_report(doc);
    CHECK_FALSE(report.contains("block_spectrum"));
    CHECK_FALSE(report.contains("direct_sum_verified"));
    CHECK(report["classification"]["verdict"] == "NPT_ENTANGLED");
  }
  SUBCASE("qubit-qudit member reports its three block spectra") {
    MatrixDocument doc;
    doc.payload = sample_qubit_qudit(4, 3, 0.9);
    const auto report = analysis_report(doc);
    REQUIRE(report.contains("block_spectrum"));
    CHECK(report["block_spectrum"].contains("x"));
    CHECK(report["block_spectrum"].contains("a"));
    CHECK(report["block_spectrum"].contains("b"));
    CHECK(report["direct_sum_verified"]["ok"].get<bool>());
  }
}

TEST_CASE("hand-written two-qubit document analyzes to negativity 1/8") {
  const std::string text = R"({
    "kind": "family",
    "dims": [2, 2],
    "payload": {
      "X": [[[0.125, 0], [0.25, 0]], [[0.25, 0], [0.125, 0]]],
      "M": [[], [[[0.375, 0]]]],
      "N": [[[[0.375, 0]]], []]
    }
  })";
  const MatrixDocument doc = parse_document_text(text);
  const auto report = analysis_report(doc);
  CHECK(report["validation"]["overall"].get<bool>());
  CHECK(report["negativity"].get<double>() == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(report["classification"]["verdict"] == "NPT_ENTANGLED");
  CHECK(report["direct_sum_verified"]["ok"].get<bool>());
}

TEST_CASE("reorder report") {
  SUBCASE("family member") {
    const MatrixDocument doc = family_doc(sample_random(2, 3, 6, 0.9));
    const auto report = reorder_report(doc);
    CHECK(report["block_sizes"] == nlohmann::ordered_json::array({2, 2, 1, 1}));
    CHECK(report["permutation"] == nlohmann::ordered_json::array({0, 4, 1, 2, 3, 5}));
    CHECK(report["block_diagonal"]["ok"].get<bool>());
    CHECK(report["block_diagonal"]["max_off_block"].get<double>() == 0.0);
    const MatrixDocument permuted = parse_document(report["document"]);
    CHECK(permuted.kind() == DocumentKind::Dense);
    CHECK(permuted.dim() == 6);
  }
  SUBCASE("isotropic member is rejected") {
    MatrixDocument doc;
    doc.payload = IsotropicSpec{2, 0.5};
    CHECK_THROWS_AS(reorder_report(doc), DocumentError);
  }
}

TEST_CASE("sweep CSV") {
  const std::string csv = sweep_csv(DocumentKind::Werner, 2, -1.0, 1.0 / 3.0, 5);
  // header plus five rows
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
  CHECK(csv.rfind("eps,min_pt_eigenvalue,negativity,verdict\n", 0) == 0);
  CHECK(csv.find("NPT_ENTANGLED") != std::string::npos);
  CHECK(csv.find("PPT_SEPARABLE") != std::string::npos);
  CHECK_THROWS_AS(sweep_csv(DocumentKind::Werner, 2, 1.0, -1.0, 5), DocumentError);
  CHECK_THROWS_AS(sweep_csv(DocumentKind::Dense, 2, -1.0, 1.0, 5), DocumentError);
  CHECK_THROWS_AS(sweep_csv(DocumentKind::Werner, 2, -1.0, 1.0, 1), DocumentError);
}
