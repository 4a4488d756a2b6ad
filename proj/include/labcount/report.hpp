#pragma once

#include "labcount/antimagic.hpp"
#include "labcount/cones.hpp"
#include "labcount/directed.hpp"
#include "labcount/multigraph.hpp"
#include "labcount/quasipoly.hpp"

#include <json.hpp>

namespace labcount {

using json = nlohmann::json;

// Counts and rationals are strings in JSON so downstream tools never lose
// precision; witness labelings are plain integer arrays in edge order.

json graph_to_json(const Multigraph& g);
json labeling_to_json(const Labeling& labels);
json blocks_to_json(const BlockSpec& blocks);
json ray_to_json(const Ray& ray);
json qp_to_json(const QuasiPolynomial& qp);
json fit_to_json(const FitReport& fit);
json gf_to_json(const GeneratingFunctionForm& gf);
json reciprocity_to_json(const ReciprocityReport& report);
json pml2_to_json(const Pml2Report& report);

}  // namespace labcount
