#pragma once

#include <span>
#include <string>
#include <vector>

#include "spdc/kernels.hpp"

// Temperature- and wavelength-dependent refractive index for periodically
// poled crystals (ppKTP shipped; other crystals load from the same file
// format). Only the principal-axis index needed for collinear type-0 QPM.

namespace spdc {

struct DispersionTable {
    std::string crystal_id;
    std::string axis;
    kernels::SellmeierCoeffs sellmeier;
    std::vector<double> thermo_optic;  // dn/dT polynomial in lam_um, 1/K
    double t_ref_c = 25.0;
    double lambda_min_um = 0.0;
    double lambda_max_um = 0.0;
    double temp_min_c = 0.0;
    double temp_max_c = 200.0;
    std::string citation;
};

// Parses the plain-text key-value dispersion file. Records are separated by
// blank lines; unknown keys are errors.
std::vector<DispersionTable> load_dispersion_records(const std::string& path);

// Single-record lookup by crystal id + axis; throws if absent.
DispersionTable load_dispersion_table(const std::string& path,
                                      const std::string& crystal_id,
                                      const std::string& axis);

// n(lambda, T). Public interfaces take nm; the _um variant is the internal
// micrometre path the Sellmeier fit is written in.
double refractive_index(const DispersionTable& table, double lambda_nm, double temp_c);
double refractive_index_um(const DispersionTable& table, double lambda_um, double temp_c);

// Grid evaluation (kernels-backed); lam_um within validity.
void refractive_index_grid(const DispersionTable& table, std::span<const double> lam_um,
                           double temp_c, std::span<double> out);

// k = 2 pi n / lambda, rad/um.
double wave_number(const DispersionTable& table, double lambda_nm, double temp_c);
double wave_number_um(const DispersionTable& table, double lambda_um, double temp_c);

}  // namespace spdc
