#include <qsmear/massradius.hpp>

#include <qsmear/errors.hpp>
#include <qsmear/scales.hpp>

#include <cmath>
#include <sstream>

namespace qsmear {

namespace {

void check_mass(double mass) {
    if (!(mass > 0.0) || !std::isfinite(mass)) {
        throw DomainError("mass must be positive and finite");
    }
}

void check_three_dimensional(const PhysicalConstants& consts) {
    if (consts.d != 3) {
        throw DomainError("the unified curve is defined for d = 3");
    }
}

}  // namespace

const char* to_string(MassRegime regime) {
    switch (regime) {
        case MassRegime::particle:
            return "particle";
        case MassRegime::planckian:
            return "planckian";
        default:
            return "black-hole";
    }
}

double compton(double mass, const PhysicalConstants& consts) {
    check_mass(mass);
    consts.validate();
    return consts.hbar / (mass * consts.c);
}

double schwarzschild(double mass, const PhysicalConstants& consts) {
    check_mass(mass);
    consts.validate();
    if (consts.d < 2) {
        throw DomainError("horizon radius needs d >= 2");
    }
    return std::pow(2.0 * consts.G * mass / (consts.c * consts.c),
                    1.0 / (consts.d - 1));
}

double unified_radius(double mass, const PhysicalConstants& consts) {
    check_mass(mass);
    consts.validate();
    check_three_dimensional(consts);
    return 0.5 * consts.hbar / (mass * consts.c) +
           2.0 * consts.G * mass / (consts.c * consts.c);
}

MassRegime classify_mass(double mass, const PhysicalConstants& consts) {
    check_mass(mass);
    const double m_pl = planck_scales(consts).mass;
    if (mass < 0.25 * m_pl) {
        return MassRegime::particle;
    }
    if (mass > m_pl) {
        return MassRegime::black_hole;
    }
    return MassRegime::planckian;
}

HoopResult hoop_condition(double delta_x, double delta_p, const PhysicalConstants& consts) {
    if (!(delta_x > 0.0) || !(delta_p > 0.0)) {
        throw DomainError("spreads must be positive");
    }
    consts.validate();
    check_three_dimensional(consts);
    const double l_pl = planck_scales(consts).length;
    const double packet = std::sqrt(delta_x * delta_x + 2.0 * l_pl * l_pl);
    const double bound = 2.0 * consts.G / std::pow(consts.c, 3) * delta_p +
                         0.5 * consts.hbar / delta_p;
    return HoopResult{packet <= bound, bound - packet};
}

HoopResult hoop_condition_reversed(double delta_x, double delta_p,
                                   const PhysicalConstants& consts) {
    const HoopResult forward = hoop_condition(delta_x, delta_p, consts);
    return HoopResult{forward.margin <= 0.0, -forward.margin};
}

double emission_mass(double hole_mass, const PhysicalConstants& consts) {
    check_mass(hole_mass);
    const double m_pl = planck_scales(consts).mass;
    if (hole_mass < m_pl) {
        std::ostringstream msg;
        msg << "emission formula holds for hole masses at or above the Planck mass "
            << m_pl << "; got " << hole_mass;
        throw DomainError(msg.str());
    }
    return 0.25 * m_pl * m_pl / hole_mass;
}

double dual_mass(double mass, const PhysicalConstants& consts) {
    check_mass(mass);
    const double m_pl = planck_scales(consts).mass;
    return 0.25 * m_pl * m_pl / mass;
}

double compton_schwarzschild_intersection_mass(const PhysicalConstants& consts) {
    consts.validate();
    return planck_scales(consts).mass / std::sqrt(2.0);
}

std::vector<MassRadiusRow> mass_radius_table(const std::vector<double>& masses,
                                             const PhysicalConstants& consts) {
    std::vector<MassRadiusRow> rows;
    rows.reserve(masses.size());
    for (double mass : masses) {
        rows.push_back(MassRadiusRow{mass, compton(mass, consts), schwarzschild(mass, consts),
                                     unified_radius(mass, consts), classify_mass(mass, consts)});
    }
    return rows;
}

RadiusMinimum minimize_unified_radius(const PhysicalConstants& consts) {
    consts.validate();
    check_three_dimensional(consts);
    const double m_pl = planck_scales(consts).mass;
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = m_pl / 64.0;
    double b = 4.0 * m_pl;
    double c = b - phi * (b - a);
    double d = a + phi * (b - a);
    double fc = unified_radius(c, consts);
    double fd = unified_radius(d, consts);
    while ((b - a) > 1e-9 * m_pl) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = unified_radius(c, consts);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = unified_radius(d, consts);
        }
    }
    const double mass = 0.5 * (a + b);
    return RadiusMinimum{mass, unified_radius(mass, consts)};
}

}  // namespace qsmear
