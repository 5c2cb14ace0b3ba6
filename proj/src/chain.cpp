#include "twistbeam/chain.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "twistbeam/units.hpp"

namespace twistbeam {

using nlohmann::json;

std::vector<double> distribute_mass(double mass_g, double length_mm,
                                    const std::vector<double>& segment_mm) {
  if (segment_mm.empty()) throw ConfigError("distribute_mass: empty segment list");
  if (!(mass_g > 0.0) || !(length_mm > 0.0))
    throw ConfigError("distribute_mass: mass and length must be positive");
  double sum_len = 0.0;
  for (double l : segment_mm) {
    if (l < 0.0) throw ConfigError("distribute_mass: negative segment length");
    sum_len += l;
  }
  if (std::abs(sum_len - length_mm) > 1e-9 * length_mm)
    throw ConfigError("distribute_mass: segment lengths do not sum to beam length");

  std::vector<double> masses(segment_mm.size());
  double assigned = 0.0;
  for (size_t i = 0; i + 1 < segment_mm.size(); ++i) {
    masses[i] = mass_g * (segment_mm[i] / length_mm);
    assigned += masses[i];
  }
  masses.back() = mass_g - assigned;  // exact total by construction
  return masses;
}

BeamChainSpec build_twisted_beam_l1(const BeamGeometry& geometry,
                                    double k_Nm_per_rad, double b_Nms_per_rad,
                                    double l1_mm, double l2_mm, double l3_mm,
                                    std::optional<FootSpec> foot,
                                    const BeamBuildOptions& opts) {
  if (!(geometry.length_mm > 0.0)) throw ConfigError("beam length must be positive");
  if (!(geometry.mass_g > 0.0)) throw ConfigError("beam mass must be positive");
  if (!(geometry.density_kg_m3 > 0.0)) throw ConfigError("beam density must be positive");
  if (std::abs(geometry.twist_deg) > 180.0 + 1e-9)
    throw ConfigError("total twist must satisfy |phi| <= 180 deg");
  if (k_Nm_per_rad < 0.0 || b_Nms_per_rad < 0.0)
    throw ConfigError("joint stiffness and damping must be nonnegative");
  if (l1_mm < 0.0 || l2_mm <= 0.0 || l3_mm <= 0.0)
    throw ConfigError("segment lengths must be positive (l1 may be zero)");
  const double sum = l1_mm + l2_mm + l3_mm;
  if (sum > geometry.length_mm * (1.0 + 1e-9))
    throw ConfigError("segment lengths exceed beam length");
  if (std::abs(sum - geometry.length_mm) > 1e-9 * geometry.length_mm)
    throw ConfigError("segment lengths do not sum to beam length");

  BeamChainSpec spec;
  spec.geometry = geometry;
  // Each of the two twist joints carries half the total twist as rest angle.
  const double alpha = geometry.twist_deg / 2.0;
  spec.geometry.segment_twist_deg = alpha;

  const double kt = k_Nm_per_rad * opts.twist_stiffness_scale;
  const double bt = b_Nms_per_rad * opts.twist_damping_scale;

  const Vec3d bend_axis{0.0, 1.0, 0.0};
  const Vec3d twist_axis{1.0, 0.0, 0.0};
  spec.joints = {
      {"R1", JointKind::bending, bend_axis, k_Nm_per_rad, b_Nms_per_rad, 0.0, 0.0},
      {"R4", JointKind::twist, twist_axis, kt, bt, alpha, l1_mm},
      {"R2", JointKind::bending, bend_axis, k_Nm_per_rad, b_Nms_per_rad, 0.0, l1_mm},
      {"R5", JointKind::twist, twist_axis, kt, bt, alpha, l1_mm + l2_mm},
      {"R3", JointKind::bending, bend_axis, k_Nm_per_rad, b_Nms_per_rad, 0.0,
       l1_mm + l2_mm},
  };

  const std::vector<double> seg{l1_mm, l2_mm, l3_mm};
  const std::vector<double> masses =
      distribute_mass(geometry.mass_g, geometry.length_mm, seg);
  spec.links = {{l1_mm, masses[0]}, {l2_mm, masses[1]}, {l3_mm, masses[2]}};
  spec.foot = std::move(foot);

  validate_chain(spec);
  return spec;
}

BeamChainSpec build_twisted_beam(const BeamGeometry& geometry,
                                 double k_Nm_per_rad, double b_Nms_per_rad,
                                 double l2_mm, double l3_mm,
                                 std::optional<FootSpec> foot,
                                 const BeamBuildOptions& opts) {
  return build_twisted_beam_l1(geometry, k_Nm_per_rad, b_Nms_per_rad, 0.0,
                               l2_mm, l3_mm, std::move(foot), opts);
}

BeamChainSpec mirror_chirality(const BeamChainSpec& spec) {
  BeamChainSpec m = spec;
  m.geometry.twist_deg = -m.geometry.twist_deg;
  m.geometry.segment_twist_deg = -m.geometry.segment_twist_deg;
  for (JointSpec& j : m.joints)
    if (j.kind == JointKind::twist) j.rest_angle_deg = -j.rest_angle_deg;
  return m;
}

void validate_chain(const BeamChainSpec& spec) {
  if (spec.joints.empty()) throw ConfigError("chain has no joints");
  double prev_station = -1e300;
  double twist_sum = 0.0;
  for (const JointSpec& j : spec.joints) {
    if (j.stiffness_Nm_per_rad < 0.0 || j.damping_Nms_per_rad < 0.0)
      throw ConfigError("joint " + j.name + ": negative stiffness or damping");
    if (std::abs(norm(j.axis) - 1.0) > 1e-9)
      throw ConfigError("joint " + j.name + ": axis is not a unit vector");
    if (j.kind == JointKind::bending && std::abs(j.axis.x) > 1e-9)
      throw ConfigError("joint " + j.name +
                        ": bending axis must be perpendicular to the beam axis");
    if (j.kind == JointKind::twist &&
        (std::abs(j.axis.y) > 1e-9 || std::abs(j.axis.z) > 1e-9))
      throw ConfigError("joint " + j.name +
                        ": twist axis must be along the beam axis");
    if (j.station_mm < prev_station - 1e-9)
      throw ConfigError("joint stations must be nondecreasing along the beam");
    prev_station = std::max(prev_station, j.station_mm);
    if (j.kind == JointKind::twist) twist_sum += j.rest_angle_deg;
  }
  if (std::abs(twist_sum - spec.geometry.twist_deg) > 1e-9)
    throw ConfigError("segmental twists do not sum to the total twist angle");

  if (spec.links.empty()) throw ConfigError("chain has no links");
  double len = 0.0, mass = 0.0;
  for (const LinkSpec& l : spec.links) {
    if (l.length_mm < 0.0 || l.mass_g < 0.0)
      throw ConfigError("link lengths and masses must be nonnegative");
    len += l.length_mm;
    mass += l.mass_g;
  }
  if (std::abs(len - spec.geometry.length_mm) > 1e-9)
    throw ConfigError("link lengths do not sum to the beam length");
  if (std::abs(mass - spec.geometry.mass_g) >
      1e-12 * std::max(1.0, spec.geometry.mass_g))
    throw ConfigError("link masses do not sum to the beam mass");
  if (spec.links.back().mass_g <= 0.0)
    throw ConfigError("distal link must carry mass");

  if (spec.foot) {
    if (spec.foot->length_mm < 0.0 || spec.foot->load_mass_g < 0.0)
      throw ConfigError("foot length and load mass must be nonnegative");
  }
}

static json vec_to_json(const Vec3d& v) { return json::array({v.x, v.y, v.z}); }
static Vec3d vec_from_json(const json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>()};
}

std::string chain_to_json(const BeamChainSpec& spec) {
  json j;
  j["schema"] = "twistbeam.chain";
  j["version"] = 1;
  j["geometry"] = {
      {"length_mm", spec.geometry.length_mm},
      {"width_mm", spec.geometry.width_mm},
      {"thickness_mm", spec.geometry.thickness_mm},
      {"twist_deg", spec.geometry.twist_deg},
      {"segment_twist_deg", spec.geometry.segment_twist_deg},
      {"density_kg_m3", spec.geometry.density_kg_m3},
      {"mass_g", spec.geometry.mass_g},
  };
  j["joints"] = json::array();
  for (const JointSpec& js : spec.joints) {
    j["joints"].push_back({
        {"name", js.name},
        {"kind", js.kind == JointKind::bending ? "bending" : "twist"},
        {"axis", vec_to_json(js.axis)},
        {"k_Nm_per_rad", js.stiffness_Nm_per_rad},
        {"b_Nms_per_rad", js.damping_Nms_per_rad},
        {"rest_angle_deg", js.rest_angle_deg},
        {"station_mm", js.station_mm},
    });
  }
  j["links"] = json::array();
  for (const LinkSpec& ls : spec.links)
    j["links"].push_back({{"length_mm", ls.length_mm}, {"mass_g", ls.mass_g}});
  if (spec.foot) {
    j["foot"] = {
        {"length_mm", spec.foot->length_mm},
        {"load_mass_g", spec.foot->load_mass_g},
        {"corner_offset_mm", vec_to_json(spec.foot->corner_offset_mm)},
        {"load_offset_mm", vec_to_json(spec.foot->load_offset_mm)},
    };
  }
  return j.dump(2);
}

BeamChainSpec chain_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("chain JSON parse error: ") + e.what());
  }
  try {
    if (j.at("schema").get<std::string>() != "twistbeam.chain")
      throw ConfigError("not a twistbeam.chain document");
    if (j.at("version").get<int>() != 1)
      throw ConfigError("unsupported chain schema version");

    BeamChainSpec spec;
    const json& g = j.at("geometry");
    spec.geometry.length_mm = g.at("length_mm").get<double>();
    spec.geometry.width_mm = g.at("width_mm").get<double>();
    spec.geometry.thickness_mm = g.at("thickness_mm").get<double>();
    spec.geometry.twist_deg = g.at("twist_deg").get<double>();
    spec.geometry.segment_twist_deg = g.at("segment_twist_deg").get<double>();
    spec.geometry.density_kg_m3 = g.at("density_kg_m3").get<double>();
    spec.geometry.mass_g = g.at("mass_g").get<double>();

    for (const json& js : j.at("joints")) {
      JointSpec s;
      s.name = js.at("name").get<std::string>();
      const std::string kind = js.at("kind").get<std::string>();
      if (kind == "bending")
        s.kind = JointKind::bending;
      else if (kind == "twist")
        s.kind = JointKind::twist;
      else
        throw ConfigError("unknown joint kind: " + kind);
      s.axis = vec_from_json(js.at("axis"));
      s.stiffness_Nm_per_rad = js.at("k_Nm_per_rad").get<double>();
      s.damping_Nms_per_rad = js.at("b_Nms_per_rad").get<double>();
      s.rest_angle_deg = js.at("rest_angle_deg").get<double>();
      s.station_mm = js.at("station_mm").get<double>();
      spec.joints.push_back(std::move(s));
    }
    for (const json& ls : j.at("links")) {
      spec.links.push_back(
          {ls.at("length_mm").get<double>(), ls.at("mass_g").get<double>()});
    }
    if (j.contains("foot")) {
      FootSpec f;
      f.length_mm = j["foot"].at("length_mm").get<double>();
      f.load_mass_g = j["foot"].at("load_mass_g").get<double>();
      f.corner_offset_mm = vec_from_json(j["foot"].at("corner_offset_mm"));
      f.load_offset_mm = vec_from_json(j["foot"].at("load_offset_mm"));
      spec.foot = f;
    }
    validate_chain(spec);
    return spec;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("chain JSON field error: ") + e.what());
  }
}

BeamChainSpec paper_fit_beam(bool with_foot) {
  BeamGeometry g;  // defaults are the Table I prototype
  std::optional<FootSpec> foot;
  if (with_foot) foot = FootSpec{};
  return build_twisted_beam(g, kPaperFitK, kPaperFitB, kPaperFitL2, kPaperFitL3,
                            foot);
}

}  // namespace twistbeam
