#pragma once

// Conversion layer between laboratory units (eV, nm, e*nm) and the natural units
// used internally (hbar = c = eps0 = 1). In natural units a length is measured
// in eV^-1 and the elementary charge squared is 4 pi alpha.

namespace slabshift::units {

/// hbar c in eV nm (CODATA 2018).
inline constexpr double hbar_c_ev_nm = 197.3269804;
/// Fine-structure constant (CODATA 2018).
inline constexpr double fine_structure = 7.2973525693e-3;

enum class System { natural, ev_nm };

double length_from_nm(double nm);
double length_to_nm(double natural);
/// (e nm)^2 -> natural units.
double dipole_sq_from_e_nm(double e_nm_sq);
double dipole_sq_to_e_nm(double natural);

}  // namespace slabshift::units
