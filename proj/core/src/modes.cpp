#include "slabshift/modes.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "slabshift/errors.hpp"

namespace slabshift {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

std::size_t index_of(Region region) { return static_cast<std::size_t>(region); }

double branch_factor(Polarization pol, double n) { return pol == Polarization::te ? 1.0 : 1.0 / (n * n); }

void require_guiding_slab(double k_par, const Slab& slab, const char* who) {
  if (!(k_par > 0.0) || std::isinf(k_par)) throw DomainError(std::string(who) + ": k_par must be finite and > 0");
  if (!(slab.thickness() > 0.0) || slab.is_half_space()) {
    throw DomainError(std::string(who) + ": slab thickness must be finite and > 0");
  }
}

// Dispersion function in the angle variable phi in [0, pi/2]:
// k_zd = V cos(phi), kappa = V sin(phi)/n with V = sqrt(n^2 - 1) k_par.
// Both stay accurate to full relative precision near either end of the range.
struct AngleParam {
  double v;
  double n;
  double k_zd(double phi) const { return v * std::cos(phi); }
  double kappa(double phi) const { return v * std::sin(phi) / n; }
};

double residual_of(Polarization pol, Parity parity, double k_zd, double kappa, double n, double thickness) {
  const double c = branch_factor(pol, n);
  const double x = 0.5 * k_zd * thickness;
  const double sn = std::sin(x);
  const double cs = std::cos(x);
  if (parity == Parity::symmetric) {
    return std::abs(kappa * cs - c * k_zd * sn) / (kappa * std::abs(cs) + c * k_zd * std::abs(sn));
  }
  return std::abs(kappa * sn + c * k_zd * cs) / (kappa * std::abs(sn) + c * k_zd * std::abs(cs));
}

double g_value(Parity parity, double c, double k_zd, double kappa, double thickness) {
  const double x = 0.5 * k_zd * thickness;
  if (parity == Parity::symmetric) return kappa - c * k_zd * std::tan(x);
  return kappa + c * k_zd / std::tan(x);
}

}  // namespace

std::string_view to_string(Parity parity) noexcept { return parity == Parity::symmetric ? "S" : "A"; }

double TrappedMode::omega() const { return std::sqrt((k_par - kappa) * (k_par + kappa)); }

double dispersion_function(Polarization pol, Parity parity, double k_zd, double k_par, const Slab& slab) {
  const double n = slab.n();
  const double v = std::sqrt(n * n - 1.0) * k_par;
  const double kappa = std::sqrt(std::max(0.0, (v - k_zd) * (v + k_zd))) / n;
  return g_value(parity, branch_factor(pol, n), k_zd, kappa, slab.thickness());
}

std::vector<TrappedMode> find_trapped_modes(Polarization pol, Parity parity, double k_par, const Slab& slab) {
  require_guiding_slab(k_par, slab, "find_trapped_modes");
  std::vector<TrappedMode> modes;
  const double n = slab.n();
  if (n == 1.0) return modes;
  const double thickness = slab.thickness();
  const AngleParam ap{std::sqrt(n * n - 1.0) * k_par, n};
  const double c = branch_factor(pol, n);
  auto g = [&](double phi) { return g_value(parity, c, ap.k_zd(phi), ap.kappa(phi), thickness); };

  // Branch m covers k_zd L/2 in (m pi, m pi + pi/2) for S and (m pi + pi/2, (m+1) pi) for A;
  // on each, g falls monotonically from kappa > 0 to -inf (or to a negative value at k_zd = V).
  const double offset = parity == Parity::symmetric ? 0.0 : 0.5;
  for (int m = 0;; ++m) {
    const double k_lo = 2.0 * (m + offset) * kPi / thickness;
    if (!(k_lo < ap.v)) break;
    const double k_hi = std::min(2.0 * (m + offset + 0.5) * kPi / thickness, ap.v);
    // phi decreases as k_zd increases: g > 0 at phi_hi, g < 0 at phi_lo.
    double phi_pos = std::acos(std::min(1.0, k_lo / ap.v));
    double phi_neg = std::acos(std::min(1.0, k_hi / ap.v));
    for (int it = 0; it < 400; ++it) {
      const double mid = 0.5 * (phi_pos + phi_neg);
      if (mid == phi_pos || mid == phi_neg) break;
      (g(mid) > 0.0 ? phi_pos : phi_neg) = mid;
    }
    // Pick whichever end has the smaller residual.
    TrappedMode best;
    for (double phi : {phi_pos, phi_neg}) {
      TrappedMode mode;
      mode.pol = pol;
      mode.parity = parity;
      mode.k_par = k_par;
      mode.k_zd = ap.k_zd(phi);
      mode.kappa = ap.kappa(phi);
      mode.residual = residual_of(pol, parity, mode.k_zd, mode.kappa, n, thickness);
      if (best.k_par == 0.0 || mode.residual < best.residual) best = mode;
    }
    if (best.kappa > 0.0 && best.k_zd > 0.0) modes.push_back(best);
  }
  return modes;
}

std::vector<TrappedMode> find_all_trapped_modes(double k_par, const Slab& slab) {
  std::vector<TrappedMode> all;
  for (Polarization pol : {Polarization::te, Polarization::tm}) {
    for (Parity parity : {Parity::symmetric, Parity::antisymmetric}) {
      auto branch = find_trapped_modes(pol, parity, k_par, slab);
      all.insert(all.end(), branch.begin(), branch.end());
    }
  }
  return all;
}

double pole_alignment_check(const TrappedMode& mode, const Slab& slab) {
  auto den = [&](double kappa) {
    return slab_denominator(mode.pol, Complex(0.0, kappa), mode.k_par, slab.thickness(), slab.n());
  };
  const double h = 1e-6 * mode.kappa;
  const Complex slope = (den(mode.kappa + h) - den(mode.kappa - h)) / (2.0 * h);
  return std::abs(den(mode.kappa)) / (mode.kappa * std::abs(slope));
}

// ---------------------------------------------------------------------------
// ModeField

ModeField::ModeField(Polarization pol, double k_par, double azimuth, double omega, const Slab& slab,
                     std::array<std::vector<PlaneWave>, 3> pieces)
    : pol_(pol),
      k_par_(k_par),
      cos_phi_(std::cos(azimuth)),
      sin_phi_(std::sin(azimuth)),
      omega_(omega),
      n_(slab.n()),
      thickness_(slab.thickness()),
      pieces_(std::move(pieces)) {}

Region ModeField::region_at(double z) const noexcept {
  if (z < -0.5 * thickness_) return Region::left_vacuum;
  if (z > 0.5 * thickness_) return Region::right_vacuum;
  return Region::slab;
}

double ModeField::permittivity(Region region) const noexcept { return region == Region::slab ? n_ * n_ : 1.0; }

const std::vector<ModeField::PlaneWave>& ModeField::pieces(Region region) const noexcept {
  return pieces_[index_of(region)];
}

Complex ModeField::phase(const Vec3& r, Complex gamma) const {
  const double transverse = k_par_ * (r.x * cos_phi_ + r.y * sin_phi_);
  return std::exp(kI * transverse + gamma * r.z);
}

CVec3 ModeField::polarization_vector(Region region, Complex gamma) const {
  if (pol_ == Polarization::te) return {Complex(sin_phi_), Complex(-cos_phi_), Complex(0.0)};
  const double omega_local = region == Region::slab ? n_ * omega_ : omega_;
  return {-kI * cos_phi_ * gamma / omega_local, -kI * sin_phi_ * gamma / omega_local, Complex(-k_par_ / omega_local)};
}

Complex ModeField::scalar_in(Region region, const Vec3& r) const {
  Complex sum = 0.0;
  for (const PlaneWave& p : pieces(region)) sum += p.amplitude * phase(r, p.gamma);
  return sum;
}

CVec3 ModeField::field_in(Region region, const Vec3& r) const {
  CVec3 out{};
  for (const PlaneWave& p : pieces(region)) {
    const CVec3 e = polarization_vector(region, p.gamma);
    const Complex a = p.amplitude * phase(r, p.gamma);
    for (std::size_t i = 0; i < 3; ++i) out[i] += e[i] * a;
  }
  return out;
}

CVec3 ModeField::displacement_in(Region region, const Vec3& r) const {
  CVec3 out = field_in(region, r);
  const double eps = permittivity(region);
  for (Complex& c : out) c *= eps;
  return out;
}

CVec3 ModeField::curl_in(Region region, const Vec3& r) const {
  CVec3 out{};
  for (const PlaneWave& p : pieces(region)) {
    const CVec3 e = polarization_vector(region, p.gamma);
    const Complex a = p.amplitude * phase(r, p.gamma);
    // curl(e a e^{i g.r}) = (grad) x e with grad = (i k_x, i k_y, gamma).
    const CVec3 grad{kI * k_par_ * cos_phi_, kI * k_par_ * sin_phi_, p.gamma};
    out[0] += a * (grad[1] * e[2] - grad[2] * e[1]);
    out[1] += a * (grad[2] * e[0] - grad[0] * e[2]);
    out[2] += a * (grad[0] * e[1] - grad[1] * e[0]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Travelling modes

TravellingCoefficients travelling_coefficients(Polarization pol, const WaveVectors& k, const Slab& slab) {
  if (!(k.k_z.real() > 0.0) || k.k_z.imag() != 0.0) {
    throw DomainError("travelling mode: k_z must be real and > 0");
  }
  if (!(k.k_par >= 0.0)) throw DomainError("travelling mode: k_par must be >= 0");
  if (slab.is_half_space()) throw DomainError("travelling mode: slab thickness must be finite");
  const double n = slab.n();
  const double thickness = slab.thickness();
  TravellingCoefficients c;
  c.reflection = slab_R(pol, k.k_z, k.k_par, thickness, n);
  c.transmission = slab_T(pol, k.k_z, k.k_par, thickness, n);

  // Interface conditions at z0 = -L/2: TE needs f and f' continuous; TM (with the
  // 1/omega_local of the polarization operator) needs f_vac = n f_slab and
  // f'_vac = f'_slab / n, i.e. continuous E_par and D_perp.
  const double z0 = -0.5 * thickness;
  const Complex kz = k.k_z;
  const Complex kzd = k.k_zd;
  const Complex f = std::exp(kI * kz * z0) + c.reflection * std::exp(-kI * kz * z0);
  const Complex df = kI * kz * (std::exp(kI * kz * z0) - c.reflection * std::exp(-kI * kz * z0));
  const double value_factor = pol == Polarization::te ? 1.0 : n;
  const double slope_factor = pol == Polarization::te ? 1.0 : 1.0 / n;
  const Complex sum = f / value_factor;
  const Complex diff = df / (slope_factor * kI * kzd);
  c.interior_forward = 0.5 * (sum + diff) * std::exp(-kI * kzd * z0);
  c.interior_backward = 0.5 * (sum - diff) * std::exp(kI * kzd * z0);
  return c;
}

ModeField travelling_mode(Side side, Polarization pol, const WaveVectors& k, const Slab& slab, double azimuth) {
  const TravellingCoefficients c = travelling_coefficients(pol, k, slab);
  const double norm = std::pow(2.0 * kPi, -1.5);
  const Complex ikz = kI * k.k_z;
  const Complex ikzd = kI * k.k_zd;
  std::array<std::vector<ModeField::PlaneWave>, 3> pieces;
  // Left-incident layout; the right-incident mode is its mirror image z -> -z.
  std::vector<ModeField::PlaneWave> incident_side{{norm, ikz}, {norm * c.reflection, -ikz}};
  std::vector<ModeField::PlaneWave> inside{{norm * c.interior_forward, ikzd}, {norm * c.interior_backward, -ikzd}};
  std::vector<ModeField::PlaneWave> far_side{{norm * c.transmission, ikz}};
  if (side == Side::left) {
    pieces[index_of(Region::left_vacuum)] = std::move(incident_side);
    pieces[index_of(Region::slab)] = std::move(inside);
    pieces[index_of(Region::right_vacuum)] = std::move(far_side);
  } else {
    auto mirror = [](std::vector<ModeField::PlaneWave> v) {
      for (auto& p : v) p.gamma = -p.gamma;
      return v;
    };
    pieces[index_of(Region::left_vacuum)] = mirror(std::move(far_side));
    pieces[index_of(Region::slab)] = mirror(std::move(inside));
    pieces[index_of(Region::right_vacuum)] = mirror(std::move(incident_side));
  }
  const double omega = std::abs(std::sqrt(Complex(k.k_par * k.k_par) + k.k_z * k.k_z));
  return ModeField(pol, k.k_par, azimuth, omega, slab, std::move(pieces));
}

// ---------------------------------------------------------------------------
// Trapped modes

double trapped_normalization(const TrappedMode& mode, const Slab& slab) {
  const double n2 = slab.n() * slab.n();
  const double half_l = 0.5 * slab.thickness();
  const double kp2 = mode.k_par * mode.k_par;
  double outside;
  if (mode.pol == Polarization::te) {
    const double k2 = (mode.k_par - mode.kappa) * (mode.k_par + mode.kappa);
    outside = kp2 / k2 / mode.kappa;
  } else {
    outside = n2 * kp2 / (mode.kappa * (kp2 + n2 * mode.kappa * mode.kappa));
  }
  return 1.0 / (4.0 * kPi * std::sqrt(n2 * half_l + outside));
}

Complex trapped_outer_coefficient(const TrappedMode& mode, const Slab& slab) {
  const double x = 0.5 * mode.k_zd * slab.thickness();
  const double grow = std::exp(0.5 * mode.kappa * slab.thickness());
  const double factor = mode.pol == Polarization::te ? 2.0 : 2.0 * slab.n();
  if (mode.parity == Parity::symmetric) return factor * std::cos(x) * grow;
  return kI * factor * std::sin(x) * grow;
}

ModeField trapped_mode(const TrappedMode& mode, const Slab& slab, double azimuth) {
  require_guiding_slab(mode.k_par, slab, "trapped_mode");
  if (!(mode.kappa > 0.0) || !(mode.k_zd > 0.0)) throw DomainError("trapped_mode: invalid mode");
  const double m = trapped_normalization(mode, slab);
  const Complex outer = m * trapped_outer_coefficient(mode, slab);
  const double sign = mode.parity == Parity::symmetric ? 1.0 : -1.0;
  const Complex ikzd = kI * mode.k_zd;
  std::array<std::vector<ModeField::PlaneWave>, 3> pieces;
  pieces[index_of(Region::left_vacuum)] = {{sign * outer, Complex(mode.kappa)}};
  pieces[index_of(Region::slab)] = {{Complex(m), ikzd}, {Complex(sign * m), -ikzd}};
  pieces[index_of(Region::right_vacuum)] = {{outer, Complex(-mode.kappa)}};
  return ModeField(mode.pol, mode.k_par, azimuth, mode.omega(), slab, std::move(pieces));
}

}  // namespace slabshift
