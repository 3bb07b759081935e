#include "slabshift/units.hpp"

#include <numbers>

namespace slabshift::units {

double length_from_nm(double nm) { return nm / hbar_c_ev_nm; }

double length_to_nm(double natural) { return natural * hbar_c_ev_nm; }

double dipole_sq_from_e_nm(double e_nm_sq) {
  const double e_sq = 4.0 * std::numbers::pi * fine_structure;
  return e_sq * e_nm_sq / (hbar_c_ev_nm * hbar_c_ev_nm);
}

double dipole_sq_to_e_nm(double natural) {
  const double e_sq = 4.0 * std::numbers::pi * fine_structure;
  return natural * hbar_c_ev_nm * hbar_c_ev_nm / e_sq;
}

}  // namespace slabshift::units
