#include "lgm/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace lgm {

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

static void write_rec(std::ostream& os, const Json& j, int indent, int depth) {
  const std::string pad(static_cast<size_t>(indent * (depth + 1)), ' ');
  const std::string end_pad(static_cast<size_t>(indent * depth), ' ');
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) { os << "{}"; return; }
      os << '{' << nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',' << nl;
        first = false;
        os << pad << Json(it.key()).dump() << (indent > 0 ? ": " : ":");
        write_rec(os, it.value(), indent, depth + 1);
      }
      os << nl << end_pad << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) { os << "[]"; return; }
      // numeric leaves stay on one line
      bool flat = true;
      for (const auto& e : j) flat = flat && (e.is_number() || e.is_boolean() || e.is_null());
      if (flat) {
        os << '[';
        for (size_t k = 0; k < j.size(); ++k) {
          if (k) os << (indent > 0 ? ", " : ",");
          write_rec(os, j[k], indent, depth + 1);
        }
        os << ']';
        return;
      }
      os << '[' << nl;
      for (size_t k = 0; k < j.size(); ++k) {
        if (k) os << ',' << nl;
        os << pad;
        write_rec(os, j[k], indent, depth + 1);
      }
      os << nl << end_pad << ']';
      return;
    }
    case Json::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    default:
      os << j.dump();
  }
}

void write_json(std::ostream& os, const Json& j, int indent) {
  write_rec(os, j, indent, 0);
  os << '\n';
}

std::string dump_json(const Json& j, int indent) {
  std::ostringstream os;
  write_json(os, j, indent);
  return os.str();
}

Json to_json(const Mat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(Json::array({m(i, k).real(), m(i, k).imag()}));
    rows.push_back(row);
  }
  return rows;
}

static Json vec_json(const CVec& v) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(Json::array({v(k).real(), v(k).imag()}));
  return out;
}

Json to_json(const OrbitPoint& x) {
  Json j;
  j["n"] = x.rank();
  j["x"] = to_json(x.matrix());
  j["eigenline"] = vec_json(x.eigenline());
  j["residual"] = x.residual();
  j["transversality"] = x.transversality();
  return j;
}

Json to_json(const CartanVector& h) {
  Json out = Json::array();
  for (int k = 0; k < h.size(); ++k) out.push_back(h[k].real());
  return out;
}

Json to_json(const LinearizationSpectrum& s) {
  Json modes = Json::array();
  for (const auto& m : s.modes) {
    Json e;
    e["root"] = Json::array({m.root.i + 1, m.root.j + 1});
    e["rate"] = m.rate;
    e["degenerate"] = m.degenerate;
    e["eigenvalues"] = m.degenerate ? Json::array({0.0, 0.0}) : Json::array({-std::abs(m.rate), std::abs(m.rate)});
    modes.push_back(e);
  }
  Json j;
  j["modes"] = modes;
  j["tangent_eigenvalues"] = s.eigenvalues();
  j["degenerate_roots"] = s.degenerate_count();
  return j;
}

Json to_json(const HessianReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json e;
    e["k"] = row.k + 1;
    e["alpha_x"] = row.alpha_x.real();
    e["alpha_h"] = row.alpha_h.real();
    e["factor"] = Json::array({row.factor.real(), row.factor.imag()});
    e["value"] = Json::array({row.value.real(), row.value.imag()});
    e["multiplicity"] = row.multiplicity;
    rows.push_back(e);
  }
  Json j;
  j["j"] = r.j + 1;
  j["sign"] = r.sign ? to_string(*r.sign) : "";
  j["rows"] = rows;
  j["definiteness"] = to_string(r.definiteness);
  return j;
}

Json to_json(const Thimble& t) {
  Json meta;
  meta["n"] = t.h.rank();
  meta["j"] = t.j + 1;
  meta["sign"] = to_string(t.sign);
  meta["H"] = to_json(t.h);
  meta["m"] = vec_json(t.graph.diag());
  meta["c"] = t.level;
  meta["f1_critical"] = t.f1_critical;
  meta["f2_critical"] = t.f2_critical;
  meta["r_max"] = t.r_max;
  Json samples = Json::array();
  for (const auto& s : t.samples) {
    Json e;
    e["seed"] = s.seed;
    e["radius"] = s.radius;
    e["arc"] = s.arc;
    e["boundary"] = s.boundary;
    e["f1"] = s.f1;
    e["f2"] = s.f2;
    e["graph_residual"] = s.graph_residual;
    e["orbit_residual"] = s.point.residual();
    e["x"] = to_json(s.point.matrix());
    samples.push_back(e);
  }
  Json j;
  j["metadata"] = meta;
  j["samples"] = samples;
  return j;
}

Json sphere_json(const CartanVector& h, double level, const std::vector<SpherePoint>& pts) {
  Json arr = Json::array();
  for (const auto& p : pts) {
    const Cx f = potential(h, p.point);
    Json e = to_json(p.point);
    e["t"] = p.t;
    e["f1"] = f.real();
    e["f2"] = f.imag();
    arr.push_back(e);
  }
  Json j;
  j["H"] = to_json(h);
  j["c"] = level;
  j["points"] = arr;
  return j;
}

Json flag_json(const CartanVector& h, const std::vector<OrbitPoint>& pts) {
  Json arr = Json::array();
  for (const auto& p : pts) {
    const Cx f = potential(h, p);
    Json e = to_json(p);
    e["f1"] = f.real();
    e["f2"] = f.imag();
    arr.push_back(e);
  }
  return arr;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& tr) {
  os << "t,re_f,im_f,orbit_residual,z_norm";
  if (!tr.points.empty()) {
    const auto d = tr.points[0].dim();
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) os << ",re_x" << i + 1 << k + 1 << ",im_x" << i + 1 << k + 1;
  }
  os << '\n';
  for (size_t s = 0; s < tr.points.size(); ++s) {
    os << format_double(tr.times[s]) << ',' << format_double(tr.h_values[s]) << ',' << format_double(tr.f2_values[s])
       << ',' << format_double(tr.orbit_residuals[s]) << ',' << format_double(tr.z_norms[s]);
    const Mat& x = tr.points[s].matrix();
    for (Eigen::Index i = 0; i < x.rows(); ++i)
      for (Eigen::Index k = 0; k < x.cols(); ++k)
        os << ',' << format_double(x(i, k).real()) << ',' << format_double(x(i, k).imag());
    os << '\n';
  }
}

void write_hessian_csv_header(std::ostream& os) {
  os << "j,sign,k,alpha_wh0,alpha_h,eps_k_eps_j,value_re,value_im,definiteness\n";
}

void write_hessian_csv(std::ostream& os, const HessianReport& r) {
  for (const auto& row : r.rows) {
    os << r.j + 1 << ',' << (r.sign ? to_string(*r.sign) : "") << ',' << row.k + 1 << ','
       << format_double(row.alpha_x.real()) << ',' << format_double(row.alpha_h.real()) << ','
       << format_double(row.factor.real()) << ',' << format_double(row.value.real()) << ','
       << format_double(row.value.imag()) << ',' << to_string(r.definiteness) << '\n';
  }
}

void write_thimble_csv(std::ostream& os, const Thimble& t) {
  os << "seed,radius,arc,boundary,f1,f2,graph_residual,orbit_residual\n";
  for (const auto& s : t.samples)
    os << s.seed << ',' << s.radius << ',' << format_double(s.arc) << ',' << (s.boundary ? 1 : 0) << ','
       << format_double(s.f1) << ',' << format_double(s.f2) << ',' << format_double(s.graph_residual) << ','
       << format_double(s.point.residual()) << '\n';
}

}  // namespace lgm
