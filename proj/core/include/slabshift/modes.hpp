#pragma once

// Field modes of the slab: travelling (left/right-incident) modes with a
// continuous spectrum and trapped modes selected by the slab-waveguide
// dispersion relations.
//
// Coordinates: slab at |z| <= L/2, transverse wave vector along the azimuth
// angle phi. Mode functions are sums of plane-wave pieces
//   A e^{i k_par (x cos phi + y sin phi) + gamma z}
// per region, each carrying the polarization vector obtained by applying the
// TE operator (-i d_y, i d_x, 0)/sqrt(-Lap_par) or the TM operator
// (-d_x d_z, -d_y d_z, Lap_par)/sqrt(Lap Lap_par) to that piece. For trapped
// modes the TM vector is complex and is deliberately not renormalized.
//
// Parity labels refer to the parity of the scalar mode function under z -> -z:
// symmetric modes satisfy kappa = c k_zd tan(k_zd L/2) and antisymmetric ones
// kappa = -c k_zd cot(k_zd L/2), with c = 1 (TE) or 1/n^2 (TM).

#include <array>
#include <vector>

#include "slabshift/core.hpp"
#include "slabshift/reflection.hpp"

namespace slabshift {

enum class Parity { symmetric, antisymmetric };
enum class Side { left, right };
enum class Region { left_vacuum, slab, right_vacuum };

std::string_view to_string(Parity parity) noexcept;

struct TrappedMode {
  Polarization pol = Polarization::te;
  Parity parity = Parity::symmetric;
  double k_par = 0.0;
  /// In (0, sqrt(n^2 - 1) k_par).
  double k_zd = 0.0;
  /// kappa = sqrt((n^2 - 1) k_par^2 - k_zd^2) / n, in (0, sqrt(n^2 - 1) k_par / n).
  double kappa = 0.0;
  /// Scaled dispersion-relation residual.
  double residual = 0.0;

  /// omega = sqrt(k_par^2 - kappa^2).
  double omega() const;
};

/// kappa(k_zd) - RHS(k_zd) of the dispersion relation for one branch; positive
/// at the left end of each monotone branch and negative at the right end.
double dispersion_function(Polarization pol, Parity parity, double k_zd, double k_par, const Slab& slab);

/// Every root of one dispersion branch, ascending in k_zd. Requires k_par > 0 and
/// a finite L > 0; n = 1 has no roots.
std::vector<TrappedMode> find_trapped_modes(Polarization pol, Parity parity, double k_par, const Slab& slab);

/// All four branches, ordered TE-S, TE-A, TM-S, TM-A.
std::vector<TrappedMode> find_all_trapped_modes(double k_par, const Slab& slab);

/// |1 - r^2 e^{2 i k_zd L}| at k_z = i kappa divided by kappa |d/dkappa (...)|: the
/// relative distance from `mode.kappa` to the pole of the slab coefficients.
double pole_alignment_check(const TrappedMode& mode, const Slab& slab);

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

using CVec3 = std::array<Complex, 3>;

class ModeField {
 public:
  struct PlaneWave {
    Complex amplitude;
    /// z dependence e^{gamma z}: gamma = +-i k_z for propagating pieces, -+kappa for evanescent ones.
    Complex gamma;
  };

  ModeField(Polarization pol, double k_par, double azimuth, double omega, const Slab& slab,
            std::array<std::vector<PlaneWave>, 3> pieces);

  Region region_at(double z) const noexcept;
  double permittivity(Region region) const noexcept;

  /// Scalar mode function.
  Complex scalar(const Vec3& r) const { return scalar_in(region_at(r.z), r); }
  /// Electric mode vector (polarization operator applied).
  CVec3 field(const Vec3& r) const { return field_in(region_at(r.z), r); }

  /// The expressions of one region, evaluated anywhere (used to compare the two
  /// sides of an interface at the interface itself).
  Complex scalar_in(Region region, const Vec3& r) const;
  CVec3 field_in(Region region, const Vec3& r) const;
  /// eps(region) times field_in().
  CVec3 displacement_in(Region region, const Vec3& r) const;
  /// curl of field_in(), evaluated analytically piece by piece.
  CVec3 curl_in(Region region, const Vec3& r) const;

  const std::vector<PlaneWave>& pieces(Region region) const noexcept;
  Polarization polarization() const noexcept { return pol_; }
  double omega() const noexcept { return omega_; }

 private:
  CVec3 polarization_vector(Region region, Complex gamma) const;
  Complex phase(const Vec3& r, Complex gamma) const;

  Polarization pol_;
  double k_par_;
  double cos_phi_;
  double sin_phi_;
  double omega_;
  double n_;
  double thickness_;
  std::array<std::vector<PlaneWave>, 3> pieces_;
};

/// Amplitudes of a left-incident travelling mode (before the (2 pi)^{-3/2}
/// normalization): R, T from the closed forms, I, J (slab interior) from the
/// interface conditions at z = -L/2.
struct TravellingCoefficients {
  Complex reflection;
  Complex transmission;
  Complex interior_forward;
  Complex interior_backward;
};

TravellingCoefficients travelling_coefficients(Polarization pol, const WaveVectors& k, const Slab& slab);

/// Left- or right-incident travelling mode; requires real k_z > 0.
ModeField travelling_mode(Side side, Polarization pol, const WaveVectors& k, const Slab& slab, double azimuth = 0.0);

/// M_TE = 1 / (4 pi sqrt(n^2 L/2 + (k_par/k)^2 / kappa))
/// M_TM = 1 / (4 pi sqrt(n^2 L/2 + n^2 k_par^2 / (kappa (k_par^2 + n^2 kappa^2))))
double trapped_normalization(const TrappedMode& mode, const Slab& slab);
/// L^S = 2 cos(k_zd L/2) e^{kappa L/2}, L^A = 2i sin(k_zd L/2) e^{kappa L/2}; times n for TM.
Complex trapped_outer_coefficient(const TrappedMode& mode, const Slab& slab);

ModeField trapped_mode(const TrappedMode& mode, const Slab& slab, double azimuth = 0.0);

}  // namespace slabshift
