#include "spdc/dispersion.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "spdc/units.hpp"

namespace spdc {

namespace {

void check_lambda(const DispersionTable& t, double lam_um) {
    if (!(lam_um >= t.lambda_min_um && lam_um <= t.lambda_max_um))
        throw std::domain_error(strf(
            "wavelength %.6g um outside valid range [%.4g, %.4g] um for %s/%s",
            lam_um, t.lambda_min_um, t.lambda_max_um, t.crystal_id.c_str(), t.axis.c_str()));
}

void check_temp(const DispersionTable& t, double temp_c) {
    if (!(temp_c >= t.temp_min_c && temp_c <= t.temp_max_c))
        throw std::domain_error(strf(
            "temperature %.6g C outside valid range [%.4g, %.4g] C for %s/%s",
            temp_c, t.temp_min_c, t.temp_max_c, t.crystal_id.c_str(), t.axis.c_str()));
}

double thermo_dn(const DispersionTable& t, double lam_um, double temp_c) {
    double poly = 0.0;
    for (std::size_t k = t.thermo_optic.size(); k-- > 0;)
        poly = poly * lam_um + t.thermo_optic[k];
    return (temp_c - t.t_ref_c) * poly;
}

struct RecordBuilder {
    DispersionTable table;
    bool any = false;
    bool has_crystal = false, has_axis = false, has_sellmeier = false,
         has_thermo = false, has_tref = false, has_range = false, has_citation = false;

    void finish(std::vector<DispersionTable>& out, const std::string& path, int line) {
        if (!any) return;
        auto need = [&](bool ok, const char* key) {
            if (!ok)
                throw std::runtime_error(strf("%s: record ending at line %d is missing key '%s'",
                                              path.c_str(), line, key));
        };
        need(has_crystal, "crystal");
        need(has_axis, "axis");
        need(has_sellmeier, "sellmeier");
        need(has_thermo, "thermo_optic");
        need(has_tref, "t_ref_c");
        need(has_range, "valid_range_um");
        need(has_citation, "citation");
        out.push_back(table);
        *this = RecordBuilder{};
    }
};

}  // namespace

std::vector<DispersionTable> load_dispersion_records(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(strf("cannot open dispersion file '%s'", path.c_str()));

    std::vector<DispersionTable> out;
    RecordBuilder rec;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) {  // blank line ends a record
            rec.finish(out, path, lineno);
            continue;
        }
        auto nums = [&](std::size_t n_min, std::size_t n_max) {
            std::vector<double> v;
            double x;
            while (ls >> x) v.push_back(x);
            if (v.size() < n_min || v.size() > n_max || !ls.eof())
                throw std::runtime_error(strf("%s:%d: bad value list for key '%s'",
                                              path.c_str(), lineno, key.c_str()));
            return v;
        };
        rec.any = true;
        if (key == "crystal") {
            ls >> rec.table.crystal_id;
            rec.has_crystal = !rec.table.crystal_id.empty();
        } else if (key == "axis") {
            ls >> rec.table.axis;
            rec.has_axis = !rec.table.axis.empty();
        } else if (key == "sellmeier") {
            auto v = nums(4, 4);
            rec.table.sellmeier = {v[0], v[1], v[2], v[3]};
            rec.has_sellmeier = true;
        } else if (key == "thermo_optic") {
            rec.table.thermo_optic = nums(1, 8);
            rec.has_thermo = true;
        } else if (key == "t_ref_c") {
            rec.table.t_ref_c = nums(1, 1)[0];
            rec.has_tref = true;
        } else if (key == "valid_range_um") {
            auto v = nums(2, 2);
            rec.table.lambda_min_um = v[0];
            rec.table.lambda_max_um = v[1];
            rec.has_range = true;
        } else if (key == "valid_temp_c") {
            auto v = nums(2, 2);
            rec.table.temp_min_c = v[0];
            rec.table.temp_max_c = v[1];
        } else if (key == "citation") {
            std::string rest;
            std::getline(ls, rest);
            auto pos = rest.find_first_not_of(" \t");
            rec.table.citation = pos == std::string::npos ? "" : rest.substr(pos);
            rec.has_citation = !rec.table.citation.empty();
        } else {
            throw std::runtime_error(strf(
                "%s:%d: unknown key '%s' (allowed: crystal, axis, sellmeier, thermo_optic, "
                "t_ref_c, valid_range_um, valid_temp_c, citation)",
                path.c_str(), lineno, key.c_str()));
        }
    }
    rec.finish(out, path, lineno);
    if (out.empty()) throw std::runtime_error(strf("%s: no dispersion records", path.c_str()));
    return out;
}

DispersionTable load_dispersion_table(const std::string& path, const std::string& crystal_id,
                                      const std::string& axis) {
    for (auto& t : load_dispersion_records(path))
        if (t.crystal_id == crystal_id && t.axis == axis) return t;
    throw std::runtime_error(strf("%s: no record for crystal '%s' axis '%s'", path.c_str(),
                                  crystal_id.c_str(), axis.c_str()));
}

double refractive_index_um(const DispersionTable& t, double lam_um, double temp_c) {
    check_lambda(t, lam_um);
    check_temp(t, temp_c);
    double n;
    kernels::sellmeier_index({&lam_um, 1}, t.sellmeier, {&n, 1});
    return n + thermo_dn(t, lam_um, temp_c);
}

double refractive_index(const DispersionTable& t, double lambda_nm, double temp_c) {
    return refractive_index_um(t, nm_to_um(lambda_nm), temp_c);
}

void refractive_index_grid(const DispersionTable& t, std::span<const double> lam_um,
                           double temp_c, std::span<double> out) {
    for (double l : lam_um) check_lambda(t, l);
    check_temp(t, temp_c);
    kernels::sellmeier_index(lam_um, t.sellmeier, out);
    for (std::size_t i = 0; i < lam_um.size(); ++i)
        out[i] += thermo_dn(t, lam_um[i], temp_c);
}

double wave_number_um(const DispersionTable& t, double lam_um, double temp_c) {
    return 2.0 * std::numbers::pi * refractive_index_um(t, lam_um, temp_c) / lam_um;
}

double wave_number(const DispersionTable& t, double lambda_nm, double temp_c) {
    return wave_number_um(t, nm_to_um(lambda_nm), temp_c);
}

}  // namespace spdc
