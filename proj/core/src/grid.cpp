#include <qsmear/grid.hpp>

#include <qsmear/errors.hpp>

#include "fft.hpp"

#include <cmath>
#include <string>

namespace qsmear {

namespace {

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

double two_pi() { return 2.0 * M_PI; }

}  // namespace

Grid::Grid(int n_, double center_, double extent_) : n(n_), center(center_), extent(extent_) {
    if (n < 8 || !is_pow2(n))
        throw DomainError("grid size must be a power of two >= 8, got " + std::to_string(n));
    if (!(extent > 0.0) || !std::isfinite(extent) || !std::isfinite(center))
        throw DomainError("grid extent must be positive and finite");
}

std::vector<double> Grid::coords() const {
    std::vector<double> xs(n);
    for (int j = 0; j < n; ++j) xs[j] = coord(j);
    return xs;
}

int Grid::nearest_index(double x) const {
    const double rel = (x - coord(0)) / spacing();
    long j = std::lround(rel);
    j %= n;
    if (j < 0) j += n;
    return static_cast<int>(j);
}

bool Grid::same_lattice(const Grid& other, double rel_tol) const {
    if (n != other.n) return false;
    const double scale = std::max(std::abs(extent), std::abs(other.extent));
    return std::abs(extent - other.extent) <= rel_tol * scale &&
           std::abs(center - other.center) <= rel_tol * scale;
}

bool Grid::compatible_spacing(const Grid& other, double rel_tol) const {
    return std::abs(spacing() - other.spacing()) <= rel_tol * spacing();
}

ConjugateGrid::ConjugateGrid(const Grid& base_, double scale_) : base(base_), scale(scale_) {
    if (!(scale > 0.0))
        throw DomainError("transform scale must be positive");
}

Grid ConjugateGrid::lattice() const {
    const double dq = two_pi() * scale / base.extent;
    return Grid(base.n, 0.0, dq * base.n);
}

Field::Field(const Grid& g, std::vector<cdouble> v) : grid(g), values(std::move(v)) {
    if (static_cast<int>(values.size()) != grid.n)
        throw DomainError("field sample count does not match grid size");
}

Field::Field(const Grid& g) : grid(g), values(g.n, cdouble{0.0, 0.0}) {}

double Field::norm_squared() const {
    double s = 0.0;
    for (const auto& v : values) s += std::norm(v);
    return s * grid.spacing();
}

Field& Field::normalize() {
    const double n2 = norm_squared();
    if (!(n2 > 0.0) || !std::isfinite(n2))
        throw DomainError("cannot normalize a zero-norm field");
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& v : values) v *= inv;
    return *this;
}

Field transform(const Field& f, double scale) {
    const Grid& g = f.grid;
    const ConjugateGrid cg(g, scale);
    const int n = g.n;
    const double x0 = g.coord(0);
    const double pref = g.spacing() / std::sqrt(two_pi() * scale);

    std::vector<cdouble> work = f.values;
    detail::dft(work, -1);

    Field out(cg.lattice());
    for (int l = 0; l < n; ++l) {
        const int m = l - n / 2;
        const int k = (l + n / 2) % n;
        const cdouble phase = std::polar(1.0, -two_pi() * m * x0 / g.extent);
        out.values[l] = pref * phase * work[k];
    }
    return out;
}

Field inverse_transform(const Field& F, double scale, const Grid& target) {
    const ConjugateGrid cg(target, scale);
    if (!F.grid.same_lattice(cg.lattice()))
        throw DomainError("conjugate lattice does not match the target grid at this scale");
    const int n = target.n;
    const double x0 = target.coord(0);
    const double dq = two_pi() * scale / target.extent;
    const double pref = dq / std::sqrt(two_pi() * scale);

    std::vector<cdouble> work(n);
    for (int l = 0; l < n; ++l) {
        const int m = l - n / 2;
        const int k = (l + n / 2) % n;
        const cdouble phase = std::polar(1.0, two_pi() * m * x0 / target.extent);
        work[k] = F.values[l] * phase;
    }
    detail::dft(work, +1);
    for (cdouble& z : work) z *= pref;

    return Field(target, std::move(work));
}

Field convolve(const Field& f, const Field& g) {
    if (!f.grid.same_lattice(g.grid))
        throw DomainError("convolution requires both fields on the same grid");
    const int n = f.grid.n;
    std::vector<cdouble> a = f.values;
    std::vector<cdouble> b = g.values;
    detail::dft(a, -1);
    detail::dft(b, -1);
    const double pref = f.grid.spacing() / n;
    for (int k = 0; k < n; ++k) a[k] *= b[k] * pref;
    detail::dft(a, +1);
    return Field(f.grid, std::move(a));
}

Field spectral_derivative(const Field& f, int order) {
    if (order < 1)
        throw DomainError("derivative order must be >= 1");
    const int n = f.grid.n;
    std::vector<cdouble> work = f.values;
    detail::dft(work, -1);
    for (int k = 0; k < n; ++k) {
        const int m = (k < n / 2) ? k : k - n;
        if (m == -n / 2 && order % 2 == 1) {
            work[k] = 0.0;
            continue;
        }
        const cdouble ik(0.0, two_pi() * m / f.grid.extent);
        work[k] *= std::pow(ik, order) / static_cast<double>(n);
    }
    detail::dft(work, +1);
    return Field(f.grid, std::move(work));
}

MomentResult density_moment(const Grid& g, const std::vector<double>& density,
                            int order, double center) {
    if (static_cast<int>(density.size()) != g.n)
        throw DomainError("density sample count does not match grid size");
    if (order < 0)
        throw DomainError("moment order must be >= 0");
    double total = 0.0;
    double value = 0.0;
    const double dx = g.spacing();
    for (int j = 0; j < g.n; ++j) {
        total += density[j];
        value += density[j] * std::pow(g.coord(j) - center, order);
    }
    return {value * dx, std::abs(total * dx - 1.0) <= 1e-6};
}

DensityStats density_stats(const Grid& g, const std::vector<double>& density) {
    const auto m0 = density_moment(g, density, 0);
    if (!(m0.value > 0.0))
        throw DomainError("density has zero total mass");
    const double mean = density_moment(g, density, 1).value / m0.value;
    const double var = density_moment(g, density, 2, mean).value / m0.value;
    return {mean, var, m0.normalized};
}

MomentResult field_moment(const Field& f, int order, double center) {
    std::vector<double> density(f.values.size());
    for (std::size_t j = 0; j < f.values.size(); ++j) density[j] = std::norm(f.values[j]);
    return density_moment(f.grid, density, order, center);
}

Field gaussian_wavepacket(const Grid& g, double mean, double width, double wavenumber) {
    if (!(width > 0.0))
        throw DomainError("wave packet width must be positive");
    Field f(g);
    const double amp = std::pow(2.0 * M_PI * width * width, -0.25);
    for (int j = 0; j < g.n; ++j) {
        const double x = g.coord(j);
        const double u = (x - mean) / width;
        f.values[j] = amp * std::exp(-0.25 * u * u) * std::polar(1.0, wavenumber * x);
    }
    return f.normalize();
}

}  // namespace qsmear
