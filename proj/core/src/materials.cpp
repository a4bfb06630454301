#include "nanopatch/materials.hpp"

#include <stdexcept>

#include "nanopatch/units.hpp"

namespace npa {

DispersiveMaterial DispersiveMaterial::constant_index(std::string name,
                                                      double n) {
    if (n <= 0.0) throw std::invalid_argument("refractive index must be > 0");
    DispersiveMaterial m;
    m.name_ = std::move(name);
    m.constant_ = true;
    m.index_ = n;
    return m;
}

DispersiveMaterial DispersiveMaterial::poles(std::string name, double eps_inf,
                                             std::vector<DrudePole> drude,
                                             std::vector<LorentzPole> lorentz) {
    DispersiveMaterial m;
    m.name_ = std::move(name);
    m.constant_ = false;
    m.eps_inf = eps_inf;
    m.drude_poles = std::move(drude);
    m.lorentz_poles = std::move(lorentz);
    for (const auto& p : m.drude_poles)
        if (p.damping < 0.0) throw std::invalid_argument("negative Drude damping");
    for (const auto& p : m.lorentz_poles)
        if (p.damping < 0.0)
            throw std::invalid_argument("negative Lorentz damping");
    return m;
}

DispersiveMaterial DispersiveMaterial::pec() {
    DispersiveMaterial m;
    m.name_ = "pec";
    m.pec_ = true;
    m.constant_ = false;
    return m;
}

std::complex<double> DispersiveMaterial::permittivity(
    double wavelength_nm) const {
    if (!(wavelength_nm > kWavelengthMinNm && wavelength_nm < kWavelengthMaxNm))
        throw std::domain_error(
            "wavelength " + std::to_string(wavelength_nm) +
            " nm is outside the (400, 1100) nm validity window of the "
            "bundled dispersion fits");
    if (pec_)
        throw std::domain_error("PEC has no finite permittivity");
    if (constant_) return {index_ * index_, 0.0};

    const double w = omega_from_wavelength_nm(wavelength_nm);
    std::complex<double> eps(eps_inf, 0.0);
    const std::complex<double> iw(0.0, w);
    for (const auto& p : drude_poles)
        eps -= p.plasma_omega * p.plasma_omega / (w * w + iw * p.damping);
    for (const auto& p : lorentz_poles)
        eps += p.strength * p.resonance * p.resonance /
               std::complex<double>(p.resonance * p.resonance - w * w,
                                    -p.damping * w);
    return eps;
}

const DispersiveMaterial& DispersiveMaterial::vacuum() {
    static const DispersiveMaterial m = constant_index("vacuum", 1.0);
    return m;
}
const DispersiveMaterial& DispersiveMaterial::glass() {
    static const DispersiveMaterial m = constant_index("glass", 1.515);
    return m;
}
const DispersiveMaterial& DispersiveMaterial::diamond() {
    static const DispersiveMaterial m = constant_index("diamond", 2.42);
    return m;
}
const DispersiveMaterial& DispersiveMaterial::alumina() {
    static const DispersiveMaterial m = constant_index("alumina", 1.68);
    return m;
}
const DispersiveMaterial& DispersiveMaterial::pvp() {
    static const DispersiveMaterial m = constant_index("pvp", 1.4);
    return m;
}
const DispersiveMaterial& DispersiveMaterial::silicon() {
    static const DispersiveMaterial m = constant_index("silicon", 3.84);
    return m;
}

// Drude + two-Lorentz fit to the bundled silver table; produced by
// scripts/make_silver_asset.py (max relative residual 0.02% over
// 400-1100 nm on both parts of eps).
const DispersiveMaterial& DispersiveMaterial::silver() {
    static const DispersiveMaterial m = DispersiveMaterial::poles(
        "silver", 2.603894,
        {{1.256701e16, 7.214290e13}},
        {{0.8473280, 7.308089e15, 7.968285e14},
         {31.04545, 6.555406e14, 6.029864e15}});
    return m;
}

#include "silver_table.inc"

const std::vector<SilverTableRow>& silver_table() {
    static const std::vector<SilverTableRow> t(std::begin(kSilverTable),
                                               std::end(kSilverTable));
    return t;
}

std::complex<double> silver_table_permittivity(double wavelength_nm) {
    const auto& t = silver_table();
    if (wavelength_nm < t.front().wavelength_nm ||
        wavelength_nm > t.back().wavelength_nm)
        throw std::domain_error("wavelength outside bundled silver table");
    std::size_t i = 1;
    while (i + 1 < t.size() && t[i].wavelength_nm < wavelength_nm) ++i;
    const auto& a = t[i - 1];
    const auto& b = t[i];
    const double f =
        (wavelength_nm - a.wavelength_nm) / (b.wavelength_nm - a.wavelength_nm);
    const std::complex<double> na(a.n, a.k), nb(b.n, b.k);
    const std::complex<double> n = na + f * (nb - na);
    return n * n;
}

}  // namespace npa
