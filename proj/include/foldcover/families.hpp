#pragma once

#include <cstdint>

#include "foldcover/fold.hpp"
#include "foldcover/shapes.hpp"

namespace foldcover {

/// Boundary discretization allowance for the covering checks at c = 1.
inline constexpr double kFamilyTolerance = 2e-3;

struct LimaconVerification {
  double phi = 0.0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  int resolution = 0;
  double max_violation = 0.0;
  /// Trials whose violation exceeds kFamilyTolerance.
  std::size_t violations = 0;
  std::size_t near_trials = 0;       // |offset| < cos phi, every component folded
  std::size_t far_trials = 0;        // |offset| >= cos phi, every component folded
  std::size_t selective_trials = 0;  // one component of a split side folded
  /// Trials covered better by the rotation about C than by the identity.
  std::size_t rotation_poses = 0;
  Line worst_line;
};

/// Folds S_phi along seeded random lines (the side away from C) and checks each
/// folded state against two congruent placements of S_phi: the identity and
/// the rotation about C that turns the fold line parallel to AB with the
/// folded material below it.
LimaconVerification verify_limacon_one_fold(double phi, std::size_t trials, std::uint64_t seed, int resolution = 1440,
                                            unsigned threads = 0);

/// The rotation about C used above, as a placement of S_phi: the chord of
/// the placed copy faces the folded side of the line.
Pose limacon_rotation_pose(const Line& fold_line, Side folded_side);

struct CrimpCheck {
  double delta = 0.0;  // rotation of the crimped part about O
  Point O;             // (0, -1)
  Point tip_left, tip_right;
  PolyShape folded;
  double identity_violation = 0.0;
  /// Smallest violation over the identity, rotations about C and about O.
  double min_violation = 0.0;
};

/// Two-fold crimp through O = (0,-1) that turns the half of S_phi right of
/// x = 0 by delta toward the other far point.
CrimpCheck limacon_crimp_check(double phi, double delta, int resolution = 1440);

/// Area of S_phi over the area of the unit disk.
double s_phi_area_fraction(double phi, int resolution = 1440);

struct BumpsVerification {
  double d = 0.0, e = 0.0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double max_violation = 0.0;
  std::size_t violations = 0;
  std::size_t composite_trials = 0;
  /// Trials with |C'D'| > |CD| + 1e-9.
  std::size_t stretch_failures = 0;
  double max_stretch = 0.0;  // max |C'D'| / |CD|
};

/// Random single folds (even trials) and two-fold compositions (odd trials);
/// each folded state is checked against S_{d,e} placed with C at C' and D on
/// the ray C'D'.
BumpsVerification verify_bumps_cover(double d, double e, std::size_t trials, std::uint64_t seed,
                                     int resolution = 1440, unsigned threads = 0);

/// Bumps with d = e = cos(theta), where theta is the half-angle the chord AB
/// subtends at C.
double bumps_theta(double e);
/// Inradius over circumradius: 2 / (1 + sin theta + cos theta).
double bumps_radius_ratio(double theta);
/// Area of S_{d,d} over the area of its circumcircle.
double bumps_coverage_fraction(double theta);

}  // namespace foldcover
