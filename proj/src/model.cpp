#include "twistbeam/model.hpp"

#include <cmath>

#include "twistbeam/units.hpp"

namespace twistbeam {

int ChainModel::site_index(const std::string& name) const {
  for (size_t i = 0; i < sites.size(); ++i)
    if (sites[i].name == name) return static_cast<int>(i);
  return -1;
}

std::vector<double> ChainModel::rest_angles() const {
  std::vector<double> q(joints.size());
  for (size_t i = 0; i < joints.size(); ++i) q[i] = joints[i].rest;
  return q;
}

Mat3d box_inertia(double mass, double lx, double ly, double lz) {
  Mat3d I{};
  I.m[0][0] = mass * (ly * ly + lz * lz) / 12.0;
  I.m[1][1] = mass * (lx * lx + lz * lz) / 12.0;
  I.m[2][2] = mass * (lx * lx + ly * ly) / 12.0;
  return I;
}

namespace {

// Merge a point mass into a body's (mass, com, inertia-about-com) triple.
void add_point_mass(ModelBody& body, double mass, const Vec3d& pos) {
  if (mass <= 0.0) return;
  const double total = body.mass + mass;
  const Vec3d com_new = (1.0 / total) * (body.mass * body.com + mass * pos);
  body.inertia =
      body.inertia + body.mass * parallel_axis(body.com - com_new) +
      mass * parallel_axis(pos - com_new);
  body.com = com_new;
  body.mass = total;
}

}  // namespace

int append_chain(ChainModel& model, const BeamChainSpec& spec, int parent_body,
                 const Vec3d& mount_offset, const Mat3d& mount_rot,
                 const std::string& prefix, const CompileOptions& opts) {
  validate_chain(spec);
  const int n = spec.joint_count();
  const int base_index = model.joint_count();
  const BeamGeometry& g = spec.geometry;

  // Joints: offsets along the parent link axis (+X); the mount rotation is
  // carried by the first joint only.
  for (int i = 0; i < n; ++i) {
    const JointSpec& js = spec.joints[i];
    ModelJoint mj;
    mj.type = ModelJointType::revolute;
    mj.parent = (i == 0) ? parent_body : base_index + i - 1;
    mj.axis = js.axis;
    mj.k = js.stiffness_Nm_per_rad;
    mj.b = js.damping_Nms_per_rad;
    mj.rest = deg_to_rad(js.rest_angle_deg);
    mj.name = prefix + js.name;
    if (i == 0) {
      mj.offset = mount_offset;
      mj.pre_rot = mount_rot;
    } else {
      const double step_mm = js.station_mm - spec.joints[i - 1].station_mm;
      mj.offset = {mm_to_m(step_mm), 0.0, 0.0};
    }
    model.joints.push_back(mj);
    model.bodies.push_back(ModelBody{});
  }

  // Body i spans [station_i, station_{i+1}); assign each link to the last
  // joint at or before its start station, which leaves the coincident-joint
  // connector bodies massless.
  const double w = mm_to_m(g.width_mm);
  const double t = mm_to_m(g.thickness_mm);
  double link_start_mm = 0.0;
  for (const LinkSpec& link : spec.links) {
    if (link.length_mm > 0.0 && link.mass_g > 0.0) {
      int owner = -1;
      for (int i = 0; i < n; ++i)
        if (spec.joints[i].station_mm <= link_start_mm + 1e-9) owner = i;
      const double len = mm_to_m(link.length_mm);
      const double mass = g_to_kg(link.mass_g);
      ModelBody& body = model.bodies[base_index + owner];
      ModelBody rod;
      rod.mass = mass;
      rod.com = {len / 2.0, 0.0, 0.0};
      rod.inertia = box_inertia(mass, len, w, t);
      if (body.mass == 0.0) {
        body = rod;
      } else {
        const ModelBody merged = body;
        body = ModelBody{};
        body.mass = merged.mass;
        body.com = merged.com;
        body.inertia = merged.inertia;
        add_point_mass(body, rod.mass, rod.com);
        body.inertia = body.inertia + rod.inertia;
      }
    }
    link_start_mm += link.length_mm;
  }

  const int distal = base_index + n - 1;
  const Vec3d tip_local{mm_to_m(spec.links.back().length_mm), 0.0, 0.0};

  const int tip_site = static_cast<int>(model.sites.size());
  model.sites.push_back({prefix + "tip", distal, tip_local});
  if (model.tip_site < 0) model.tip_site = tip_site;

  if (spec.foot) {
    const FootSpec& f = *spec.foot;
    const Vec3d corner = tip_local + kMmToM * f.corner_offset_mm;
    const Vec3d load_pos = tip_local + kMmToM * f.load_offset_mm;
    add_point_mass(model.bodies[distal], g_to_kg(f.load_mass_g), load_pos);
    const int corner_site = static_cast<int>(model.sites.size());
    model.sites.push_back({prefix + "foot", distal, corner});
    if (opts.contact_site) model.contacts.push_back({corner_site, -1.0});
    if (model.tip_site == tip_site) model.tip_site = corner_site;
  } else if (opts.contact_site) {
    model.contacts.push_back({tip_site, -1.0});
  }

  // Marker triad at the beam end, spread along the distal link's width axis.
  const double h = mm_to_m(opts.marker_halfspan_mm);
  for (int m = 0; m < 3; ++m) {
    const double off = (m == 0) ? 0.0 : (m == 1 ? h : -h);
    model.marker_sites.push_back(static_cast<int>(model.sites.size()));
    model.sites.push_back(
        {prefix + "m" + std::to_string(m + 1), distal,
         Vec3d{tip_local.x, tip_local.y + off, tip_local.z}});
  }

  return distal;
}

ChainModel compile_model(const BeamChainSpec& spec, const CompileOptions& opts) {
  ChainModel model;
  append_chain(model, spec, -1, Vec3d{0, 0, 0}, Mat3d::identity(1.0, 0.0), "",
               opts);
  return model;
}

}  // namespace twistbeam
