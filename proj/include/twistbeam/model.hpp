#pragma once

// Compiled SI simulation model: a tree of rigid bodies on revolute/prismatic
// joints rooted at a kinematically prescribed base. This is the form the
// dynamics kernel consumes; it is built once from the config-unit specs.

#include <string>
#include <vector>

#include "twistbeam/chain.hpp"
#include "twistbeam/geom.hpp"

namespace twistbeam {

enum class ModelJointType { revolute, prismatic };

struct ModelJoint {
  ModelJointType type = ModelJointType::revolute;
  int parent = -1;      // body index; -1 = prescribed base
  Vec3d axis{0, 1, 0};  // in the pre-rotated parent frame
  Vec3d offset{0, 0, 0};  // joint origin in parent body frame (m)
  Mat3d pre_rot = Mat3d::identity(1.0, 0.0);  // fixed mount rotation
  double k = 0.0;     // N*m/rad (or N/m for prismatic)
  double b = 0.0;     // N*m*s/rad
  double rest = 0.0;  // rad; natural coordinate, spring is relative to it
  std::string name;
};

// Body i is the rigid body moved by joint i. Its frame sits at the joint
// origin and rotates with the joint.
struct ModelBody {
  double mass = 0.0;   // kg
  Vec3d com{0, 0, 0};  // body frame, m
  Mat3d inertia{};     // about com, body frame, kg*m^2
};

struct Site {
  std::string name;
  int body = 0;
  Vec3d offset{0, 0, 0};  // body frame, m
};

// Prescribed base motion x(t) = origin + axis * A sin(omega t + phase).
struct BaseDrive {
  double amplitude = 0.0;  // m
  double omega = 0.0;      // rad/s
  double phase = 0.0;      // rad
  Vec3d axis{0, 0, 1};
  Vec3d origin{0, 0, 0};
};

// Rotating unbalance: world force of magnitude mass_r * omega^2 spinning in
// the (u, v) plane, applied at a site.
struct RotatingForce {
  int site = 0;
  double mass_r = 0.0;  // kg*m
  double omega = 0.0;   // rad/s
  double phase = 0.0;
  Vec3d u{1, 0, 0};
  Vec3d v{0, 0, 1};
};

struct PointContact {
  int site = 0;
  double mu_override = -1.0;  // < 0: use the contact config's mu
};

struct ChainModel {
  std::vector<ModelJoint> joints;  // parents precede children
  std::vector<ModelBody> bodies;   // one per joint
  std::vector<Site> sites;
  std::vector<PointContact> contacts;
  std::vector<RotatingForce> rotors;
  BaseDrive drive;

  int tip_site = -1;
  std::vector<int> marker_sites;

  int joint_count() const { return static_cast<int>(joints.size()); }
  int site_index(const std::string& name) const;
  std::vector<double> rest_angles() const;
};

struct CompileOptions {
  bool contact_site = true;  // register foot corner (or bare tip) for contact
  double marker_halfspan_mm = 5.0;  // tip marker triad spread along width
};

// Compile a beam spec into a standalone model rooted at the prescribed base.
ChainModel compile_model(const BeamChainSpec& spec,
                         const CompileOptions& opts = {});

// Graft a beam chain onto an existing model under `parent_body`, mounted at
// `mount_offset` (parent frame) with fixed rotation `mount_rot`. Returns the
// index of the chain's distal body.
int append_chain(ChainModel& model, const BeamChainSpec& spec, int parent_body,
                 const Vec3d& mount_offset, const Mat3d& mount_rot,
                 const std::string& prefix, const CompileOptions& opts = {});

Mat3d box_inertia(double mass, double lx, double ly, double lz);

}  // namespace twistbeam
