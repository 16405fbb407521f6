#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "lgm/cycles.hpp"
#include "lgm/flow.hpp"
#include "lgm/graphs.hpp"
#include "lgm/thimble.hpp"

namespace lgm {

using Json = nlohmann::ordered_json;

// floats with 17 significant digits
std::string format_double(double v);
void write_json(std::ostream& os, const Json& j, int indent = 2);
std::string dump_json(const Json& j, int indent = 2);

Json to_json(const Mat& m);  // row-major [re, im] pairs
Json to_json(const OrbitPoint& x);
Json to_json(const CartanVector& h);
Json to_json(const LinearizationSpectrum& s);
Json to_json(const HessianReport& r);
Json to_json(const Thimble& t);
Json sphere_json(const CartanVector& h, double level, const std::vector<SpherePoint>& pts);
Json flag_json(const CartanVector& h, const std::vector<OrbitPoint>& pts);

void write_trajectory_csv(std::ostream& os, const Trajectory& tr);
void write_hessian_csv_header(std::ostream& os);
void write_hessian_csv(std::ostream& os, const HessianReport& r);
void write_thimble_csv(std::ostream& os, const Thimble& t);

}  // namespace lgm
