#include "expnls/spectral.hpp"

#include <cmath>
#include <random>

#include "expnls/fft.hpp"
#include "expnls/kernels.hpp"

namespace expnls {

void ComplexField::validate() const {
    if (values.size() != grid.size())
        throw InvalidField("ComplexField: sample count does not match grid");
    if (!kernels::all_finite(values))
        throw InvalidField("ComplexField: non-finite sample");
}

double parseval_weight(const GridSpec& grid) {
    const double box = 2.0 * grid.half_width;
    return box * box;
}

ComplexField to_spectrum(const ComplexField& field) {
    field.validate();
    ComplexField spec = field;
    fft_for(field.grid.n).forward_inplace(spec.values);
    const double scale = 1.0 / static_cast<double>(field.grid.size());
    kernels::for_each_index(spec.values.size(), [&](std::size_t i) { spec.values[i] *= scale; });
    return spec;
}

ComplexField from_spectrum(const ComplexField& spectrum) {
    spectrum.validate();
    ComplexField field = spectrum;
    fft_for(spectrum.grid.n).inverse_inplace(field.values);
    return field;
}

double l2_norm(const ComplexField& field) {
    field.validate();
    return std::sqrt(field.grid.cell_area() * kernels::sum_abs2(field.values));
}

double grad_l2_norm_of_spectrum(const ComplexField& spectrum) {
    const GridSpec& g = spectrum.grid;
    const int n = g.n;
    const double sum = kernels::reduce_sum(spectrum.values.size(), [&](std::size_t idx) {
        const int i1 = static_cast<int>(idx) / n;
        const int i2 = static_cast<int>(idx) % n;
        const double k1 = g.wavenumber(i1);
        const double k2 = g.wavenumber(i2);
        return (k1 * k1 + k2 * k2) * std::norm(spectrum.values[idx]);
    });
    return std::sqrt(parseval_weight(g) * sum);
}

double grad_l2_norm(const ComplexField& field) {
    return grad_l2_norm_of_spectrum(to_spectrum(field));
}

double lp_norm(const ComplexField& field, double p) {
    field.validate();
    if (!(p >= 1.0)) throw ConfigInvalid("lp_norm: p must be >= 1");
    if (p == 2.0) return l2_norm(field);
    const double sum = kernels::sum_abs_pow(field.values, p);
    return std::pow(field.grid.cell_area() * sum, 1.0 / p);
}

double linf_norm(const ComplexField& field) {
    field.validate();
    return std::sqrt(kernels::max_abs2(field.values));
}

double holder_seminorm(const ComplexField& field, double beta, int radius_cutoff) {
    field.validate();
    if (!(beta > 0.0 && beta <= 1.0)) throw ConfigInvalid("holder_seminorm: beta in (0, 1]");
    if (radius_cutoff < 1) throw ConfigInvalid("holder_seminorm: radius_cutoff >= 1");
    const int n = field.grid.n;
    const double h = field.grid.spacing();

    // Offsets in the upper half-plane only; each unordered pair once.
    struct Offset {
        int d1, d2;
        double inv_dist_beta;
    };
    std::vector<Offset> offsets;
    for (int d1 = 0; d1 <= radius_cutoff; ++d1) {
        for (int d2 = (d1 == 0 ? 1 : -radius_cutoff); d2 <= radius_cutoff; ++d2) {
            const double r2 = static_cast<double>(d1) * d1 + static_cast<double>(d2) * d2;
            if (r2 == 0.0 || r2 > static_cast<double>(radius_cutoff) * radius_cutoff) continue;
            offsets.push_back({d1, d2, 1.0 / std::pow(h * std::sqrt(r2), beta)});
        }
    }

    return kernels::reduce_max(static_cast<std::size_t>(n) * n, [&](std::size_t idx) {
        const int i1 = static_cast<int>(idx) / n;
        const int i2 = static_cast<int>(idx) % n;
        const Complex u = field.values[idx];
        double best = 0.0;
        for (const Offset& o : offsets) {
            const int j1 = i1 + o.d1;
            const int j2 = i2 + o.d2;
            if (j1 < 0 || j1 >= n || j2 < 0 || j2 >= n) continue;  // no wrap
            const double diff = std::abs(u - field.values[static_cast<std::size_t>(j1) * n + j2]);
            best = std::max(best, diff * o.inv_dist_beta);
        }
        return best;
    });
}

double localized_mass(const ComplexField& field, double R) {
    field.validate();
    const GridSpec& g = field.grid;
    if (!(R > 0.0)) throw ConfigInvalid("localized_mass: R must be positive");
    if (R >= g.half_width) throw RadiusOutOfBox("localized_mass: R >= box half-width");
    const int n = g.n;
    const double R2 = R * R;
    const double sum = kernels::reduce_sum(g.size(), [&](std::size_t idx) {
        const double x1 = g.coord(static_cast<int>(idx) / n);
        const double x2 = g.coord(static_cast<int>(idx) % n);
        return (x1 * x1 + x2 * x2 <= R2) ? std::norm(field.values[idx]) : 0.0;
    });
    return g.cell_area() * sum;
}

double boundary_band_mass(const ComplexField& field) {
    field.validate();
    const GridSpec& g = field.grid;
    const double L = g.half_width;
    const double lo = (L > 2.0) ? L - 1.0 : 0.75 * L;
    const int n = g.n;
    const double sum = kernels::reduce_sum(g.size(), [&](std::size_t idx) {
        const double x1 = std::abs(g.coord(static_cast<int>(idx) / n));
        const double x2 = std::abs(g.coord(static_cast<int>(idx) % n));
        return (std::max(x1, x2) >= lo) ? std::norm(field.values[idx]) : 0.0;
    });
    return g.cell_area() * sum;
}

std::array<ComplexField, 2> gradient_fields(const ComplexField& field) {
    const ComplexField spec = to_spectrum(field);
    const GridSpec& g = field.grid;
    const int n = g.n;
    ComplexField d1(g), d2(g);
    kernels::for_each_index(g.size(), [&](std::size_t idx) {
        const int i1 = static_cast<int>(idx) / n;
        const int i2 = static_cast<int>(idx) % n;
        const Complex v = spec.values[idx];
        d1.values[idx] = Complex{0.0, g.wavenumber(i1)} * v;
        d2.values[idx] = Complex{0.0, g.wavenumber(i2)} * v;
    });
    return {from_spectrum(d1), from_spectrum(d2)};
}

void apply_two_thirds_mask(ComplexField& spectrum) {
    const GridSpec& g = spectrum.grid;
    const int n = g.n;
    const int cut = n / 3;
    kernels::for_each_index(g.size(), [&](std::size_t idx) {
        const int j1 = std::abs(g.signed_index(static_cast<int>(idx) / n));
        const int j2 = std::abs(g.signed_index(static_cast<int>(idx) % n));
        if (j1 > cut || j2 > cut) spectrum.values[idx] = Complex{0.0, 0.0};
    });
}

ComplexField random_smooth_field(const GridSpec& grid, unsigned long long seed, int max_mode,
                                 double mode_decay) {
    if (max_mode < 1 || max_mode >= grid.n / 2)
        throw ConfigInvalid("random_smooth_field: max_mode out of range");
    std::mt19937_64 rng(seed);
    // Box-Muller on raw 53-bit uniforms; std::normal_distribution is
    // implementation-defined and would break byte determinism.
    auto uniform = [&rng]() { return ((rng() >> 11) + 0.5) * 0x1.0p-53; };
    auto gaussian = [&]() {
        const double u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    };

    ComplexField spec(grid);
    const int n = grid.n;
    for (int j1 = -max_mode; j1 <= max_mode; ++j1) {
        for (int j2 = -max_mode; j2 <= max_mode; ++j2) {
            const double w = std::exp(-(j1 * j1 + j2 * j2) / (2.0 * mode_decay * mode_decay));
            const Complex c{gaussian() * w, gaussian() * w};
            const int i1 = (j1 + n) % n;
            const int i2 = (j2 + n) % n;
            spec.at(i1, i2) = c;
        }
    }
    return from_spectrum(spec);
}

}  // namespace expnls
