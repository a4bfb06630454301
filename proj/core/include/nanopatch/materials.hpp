// Optical material models: constant-index dielectrics and pole-expansion
// (Drude + Lorentz) dispersive media evaluated at optical frequencies.

#pragma once

#include <complex>
#include <string>
#include <vector>

namespace npa {

struct DrudePole {
    double plasma_omega;  // rad/s
    double damping;       // rad/s
};

struct LorentzPole {
    double strength;   // dimensionless contribution to eps(0)
    double resonance;  // rad/s
    double damping;    // rad/s
};

/// Validity window of the bundled dispersion fits, exclusive bounds.
inline constexpr double kWavelengthMinNm = 400.0;
inline constexpr double kWavelengthMaxNm = 1100.0;

class DispersiveMaterial {
public:
    /// Non-dispersive medium with refractive index n (eps = n^2 exactly).
    static DispersiveMaterial constant_index(std::string name, double n);

    /// Pole-expansion medium.
    static DispersiveMaterial poles(std::string name, double eps_inf,
                                    std::vector<DrudePole> drude,
                                    std::vector<LorentzPole> lorentz);

    /// Perfect electric conductor (tests and the mirror oracle).
    static DispersiveMaterial pec();

    /// Fitted crystalline-silver model (see core/data and the README).
    static const DispersiveMaterial& silver();

    static const DispersiveMaterial& vacuum();
    static const DispersiveMaterial& glass();     // n = 1.515
    static const DispersiveMaterial& diamond();   // n = 2.42
    static const DispersiveMaterial& alumina();   // n = 1.68
    static const DispersiveMaterial& pvp();       // n = 1.4
    static const DispersiveMaterial& silicon();   // n = 3.84

    /// Complex relative permittivity at the given vacuum wavelength.
    /// Throws std::domain_error outside the (400, 1100) nm validity window.
    std::complex<double> permittivity(double wavelength_nm) const;

    const std::string& name() const { return name_; }
    bool is_pec() const { return pec_; }
    bool is_constant_index() const { return constant_; }
    bool is_dispersive() const { return !constant_ && !pec_; }
    double constant_refractive_index() const { return index_; }

    double eps_inf = 1.0;
    std::vector<DrudePole> drude_poles;
    std::vector<LorentzPole> lorentz_poles;

private:
    std::string name_;
    bool constant_ = true;
    bool pec_ = false;
    double index_ = 1.0;
};

struct SilverTableRow {
    double wavelength_nm;
    double n;
    double k;
};

/// The bundled tabulated silver optical constants the runtime model was
/// fitted against (also shipped as core/data/silver_optical_constants.csv).
const std::vector<SilverTableRow>& silver_table();

/// Linear interpolation of the bundled table.
std::complex<double> silver_table_permittivity(double wavelength_nm);

}  // namespace npa
