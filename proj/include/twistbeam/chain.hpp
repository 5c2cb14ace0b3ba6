#pragma once

// Pseudo-rigid-body description of a twisted beam: a serial chain of rigid
// links joined by revolute spring-damper joints. Three bending joints carry a
// distributed bending stiffness; interleaved twist joints carry the beam's
// twist as rest angles about the local axial direction, which is what couples
// the drive plane into the orthogonal one.
//
// Specs are carried in config units (mm, g, deg); compile_model() converts to
// SI once.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "twistbeam/geom.hpp"

namespace twistbeam {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BeamGeometry {
  double length_mm = 50.0;
  double width_mm = 20.0;      // cross-section metadata; sets axial inertia
  double thickness_mm = 3.0;   // cross-section metadata; sets axial inertia
  double twist_deg = 90.0;     // total twist phi; >0 right-handed
  double segment_twist_deg = 45.0;  // per twist joint
  double density_kg_m3 = 1210.0;
  double mass_g = 5.17;
};

enum class JointKind { bending, twist };

struct JointSpec {
  std::string name;
  JointKind kind = JointKind::bending;
  // Unit axis in the parent-link frame. Bending joints are perpendicular to
  // the local beam axis (+X), twist joints are along it.
  Vec3d axis{0.0, 1.0, 0.0};
  double stiffness_Nm_per_rad = 0.0;
  double damping_Nms_per_rad = 0.0;
  double rest_angle_deg = 0.0;
  double station_mm = 0.0;  // position along the undeformed beam axis
};

struct LinkSpec {
  double length_mm = 0.0;
  double mass_g = 0.0;
};

struct FootSpec {
  double length_mm = 66.5;   // rigid drop from the beam tip to the contact corner
  double load_mass_g = 20.0; // point load on the foot frame
  Vec3d corner_offset_mm{0.0, 0.0, -66.5};  // contact corner, tip frame
  Vec3d load_offset_mm{0.0, 0.0, -66.5};    // where the point load sits
};

struct BeamChainSpec {
  BeamGeometry geometry;
  std::vector<JointSpec> joints;  // ordered base -> tip
  std::vector<LinkSpec> links;    // ordered base -> tip, l1 may be zero
  std::optional<FootSpec> foot;

  int joint_count() const { return static_cast<int>(joints.size()); }
};

// Splits mass m proportionally to segment lengths; the last entry absorbs the
// rounding residue so the masses sum to m exactly.
std::vector<double> distribute_mass(double mass_g, double length_mm,
                                    const std::vector<double>& segment_mm);

struct BeamBuildOptions {
  // Twist joints reuse the bending spring-damper law; their magnitude is not
  // identified by the drop test, so it stays scalable.
  double twist_stiffness_scale = 1.0;
  double twist_damping_scale = 1.0;
};

// Default joint layout: base -> R1(bend) -> R4(twist) -> R2(bend) ->
// R5(twist) -> R3(bend) -> tip, with R1 and R2 coincident at station 0
// (l1 = 0) and each twist joint co-located with the bending joint that
// follows it. l2 + l3 must equal the beam length.
BeamChainSpec build_twisted_beam(const BeamGeometry& geometry,
                                 double k_Nm_per_rad, double b_Nms_per_rad,
                                 double l2_mm, double l3_mm,
                                 std::optional<FootSpec> foot = std::nullopt,
                                 const BeamBuildOptions& opts = {});

// General form with an explicit l1 segment (R1 at station 0, R2 at l1).
BeamChainSpec build_twisted_beam_l1(const BeamGeometry& geometry,
                                    double k_Nm_per_rad, double b_Nms_per_rad,
                                    double l1_mm, double l2_mm, double l3_mm,
                                    std::optional<FootSpec> foot = std::nullopt,
                                    const BeamBuildOptions& opts = {});

// Flips handedness: negates the total twist and every twist rest angle.
// Involutive; everything else is untouched.
BeamChainSpec mirror_chirality(const BeamChainSpec& spec);

// Structural checks: alternating serial chain, nondecreasing stations, unit
// axes with the right alignment per joint kind, exact length/mass sums.
// Throws ConfigError with a description of the first violation.
void validate_chain(const BeamChainSpec& spec);

// JSON round trip (schema "twistbeam.chain", version 1; fields in mm/g/deg).
std::string chain_to_json(const BeamChainSpec& spec);
BeamChainSpec chain_from_json(const std::string& text);

// The constants identified in the source experiments: k = 0.340 N*m/rad,
// b = 0.0029 N*m*s/rad, l2 = 23.66 mm, l3 = 26.34 mm on the 50 mm, 5.17 g,
// 90 degree beam.
BeamChainSpec paper_fit_beam(bool with_foot = false);

inline constexpr double kPaperFitK = 0.340;
inline constexpr double kPaperFitB = 0.0029;
inline constexpr double kPaperFitL2 = 23.66;
inline constexpr double kPaperFitL3 = 26.34;

}  // namespace twistbeam
