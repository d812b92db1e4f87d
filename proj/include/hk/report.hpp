#ifndef HK_REPORT_HPP_
#define HK_REPORT_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "hk/cycle_structure.hpp"
#include "hk/graph.hpp"
#include "hk/poly.hpp"
#include "hk/radical.hpp"
#include "hk/suites.hpp"

namespace hk {

  using Json = nlohmann::json;

  // Everything the structure command prints for one layer.
  struct StructureReport {
    std::size_t                n;
    std::size_t                layer;
    SandwichMatrix             matrix;  // rows B_i, columns A_i
    Poly                       determinant;
    std::vector<std::uint64_t> shape;
  };

  //! Throws LayerOutOfRange unless 3 <= n <= 8 and layer <= n - 2.
  StructureReport structure_report(std::size_t n, std::size_t layer);

  struct RadicalReport {
    std::vector<Relation>  generators;
    TensorReport           tensor;
    AlgebraElement         element;
    std::vector<std::pair<QuotientForm, mpq_class>> classes;  // nonzero sums only
    bool                   member;
  };

  //! Throws NotPI.
  RadicalReport radical_report(OrientedGraph const& g, AlgebraElement const& alpha);

  // Words are rendered as "x1 x2" with 1-based generator indices, "1" for
  // the identity. Coefficients are integers when they fit, strings otherwise.
  Json to_json(Poly const& p);
  Json to_json(SandwichMatrix const& m);
  Json to_json(OrientedGraph const& g, GraphReport const& r);
  Json to_json(StructureReport const& r);
  Json to_json(OrientedGraph const& g, RadicalReport const& r);
  Json to_json(CheckResult const& r);
  Json to_json(RunConfig const& c, std::vector<CheckResult> const& results);

  //! Canonical form: sorted keys, two-space indent, trailing newline.
  std::string render(Json const& j);

  std::string to_text(OrientedGraph const& g, GraphReport const& r);
  std::string to_text(StructureReport const& r);
  std::string to_text(OrientedGraph const& g, RadicalReport const& r);
  std::string to_text(std::vector<CheckResult> const& results);

}  // namespace hk

#endif  // HK_REPORT_HPP_
