#include "exittime/catalog.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "exittime/error.hpp"
#include "exittime/special.hpp"

namespace exittime {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPolygonSlack = 1e-12;

std::string format_complex(Complex z) {
    std::ostringstream out;
    out << std::setprecision(6);
    if (z.imag() == 0.0) {
        out << z.real();
    } else if (z.real() == 0.0) {
        out << z.imag() << "i";
    } else {
        out << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    }
    return out.str();
}

// Principal argument in (-pi, pi].
double principal_arg(Complex z) {
    const double a = std::arg(z);
    return a == -kPi ? kPi : a;
}

void require_wedge_parameter(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        std::ostringstream msg;
        msg << "wedge parameter p = " << p << " outside (0, 1)";
        throw Error(ErrorKind::UnsupportedParameter, msg.str());
    }
}

// (p)_n / n! by the ratio recurrence.
CoefficientStream::SequenceFactory rising_ratio_sequence(double p) {
    return [p]() -> CoefficientStream::Cursor {
        return [p, n = std::size_t{0}, value = 1.0]() mutable {
            const double out = value;
            ++n;
            value *= (p + static_cast<double>(n) - 1.0) / static_cast<double>(n);
            return Complex{out, 0.0};
        };
    };
}

// Divergence surfaces from wedge_bounds, i.e. from the Beta domain error.
ClosedForm wedge_closed_form(double p, double special::WedgeBounds::*which) {
    try {
        return ClosedForm::finite(special::wedge_bounds(p).*which);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Divergent) throw;
        return ClosedForm::infinite();
    }
}

}  // namespace

std::string DomainSpec::label() const {
    if (params.empty()) return name;
    std::ostringstream out;
    out << name << "(";
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) out << ";";
        out << params[i].name << "=" << format_complex(params[i].value);
    }
    out << ")";
    return out.str();
}

namespace catalog {

bool in_wedge(Complex z, double p) {
    if (z == Complex{}) return false;
    return std::abs(principal_arg(z)) < kPi * p / 2.0;
}

bool in_wedge_inner(Complex z, double p) {
    if (!in_wedge(z, p)) return false;
    const double root_modulus = std::pow(std::abs(z), 1.0 / p);
    return root_modulus * std::cos(principal_arg(z) / p) > 0.5;
}

bool in_wedge_outer(Complex z, double p) {
    const double t = std::pow(2.0, p);
    return in_wedge_inner((t - 1.0) / t * z + 1.0 / t, p);
}

bool in_regular_polygon(Complex z, int m) {
    const double step = 2.0 * kPi / static_cast<double>(m);
    for (int k = 0; k < m; ++k) {
        const Complex v0 = std::polar(1.0, step * k);
        const Complex v1 = std::polar(1.0, step * (k + 1));
        const Complex edge = v1 - v0;
        const Complex rel = z - v0;
        const double cross = edge.real() * rel.imag() - edge.imag() * rel.real();
        if (cross < -kPolygonSlack) return false;
    }
    return true;
}

DomainSpec disc(double radius, Complex a) {
    if (!(radius > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "disc radius must be positive");
    }
    if (!(std::abs(a) < radius)) {
        throw Error(ErrorKind::BasePointOutside, "disc base point must satisfy |a| < radius");
    }
    const double gap = radius * radius - std::norm(a);
    const Complex ratio = -std::conj(a) / radius;
    GrowthClass growth = growth::FiniteSupport{1};
    if (a != Complex{}) growth = growth::Geometric{std::abs(a) / radius, gap / std::abs(a)};

    DomainSpec d;
    d.name = "disc";
    d.params = {{"radius", radius}, {"a", a}};
    d.base_point = a;
    d.coeffs = CoefficientStream::indexed(
        [a, gap, ratio, radius](std::size_t n) -> Complex {
            if (n == 0) return a;
            return gap / radius * std::pow(ratio, static_cast<int>(n - 1));
        },
        growth);
    d.contains = [radius](Complex z) { return std::norm(z) < radius * radius; };
    d.map = [a, radius](Complex z) {
        return radius * (radius * z + a) / (radius + std::conj(a) * z);
    };
    d.deriv = [a, radius, gap](Complex z) {
        const Complex den = radius + std::conj(a) * z;
        return radius * gap / (den * den);
    };
    d.closed_form = ClosedForm::finite(0.5 * gap);
    return d;
}

DomainSpec identity_disc() {
    DomainSpec d;
    d.name = "identity";
    d.base_point = 0.0;
    d.coeffs = CoefficientStream::polynomial({0.0, 1.0});
    d.contains = [](Complex z) { return std::norm(z) < 1.0; };
    d.map = [](Complex z) { return z; };
    d.deriv = [](Complex) { return Complex{1.0, 0.0}; };
    d.closed_form = ClosedForm::finite(0.5);
    return d;
}

DomainSpec half_plane() {
    DomainSpec d;
    d.name = "half-plane";
    d.base_point = 0.0;
    d.coeffs = CoefficientStream::indexed(
                   [](std::size_t n) { return n == 0 ? Complex{} : Complex{1.0, 0.0}; },
                   growth::PowerLaw{1.0, 0.0})
                   .with_lower_envelope({1.0, 0.0});
    d.contains = [](Complex z) { return z.real() > -0.5; };
    d.map = [](Complex z) { return z / (1.0 - z); };
    d.deriv = [](Complex z) { return 1.0 / ((1.0 - z) * (1.0 - z)); };
    d.closed_form = ClosedForm::infinite();
    d.mc_eligible = false;
    return d;
}

DomainSpec cardioid() {
    DomainSpec d;
    d.name = "cardioid";
    d.base_point = 1.0;
    d.coeffs = CoefficientStream::polynomial({1.0, 2.0, 1.0});
    // |z| < 2 (1 + cos Arg z), written without trigonometry; the cusp z = 0
    // and the negative real axis fall outside.
    d.contains = [](Complex z) {
        // |z|^2 - 2 Re z < 2 |z|, squared when the left side is non-negative.
        const double n = std::norm(z);
        if (n == 0.0) return false;
        const double lhs = n - 2.0 * z.real();
        return lhs < 0.0 || lhs * lhs < 4.0 * n;
    };
    d.map = [](Complex z) { return (z + 1.0) * (z + 1.0); };
    d.deriv = [](Complex z) { return 2.0 * (z + 1.0); };
    d.closed_form = ClosedForm::finite(2.5);
    return d;
}

DomainSpec catenary() {
    DomainSpec d;
    d.name = "catenary";
    d.base_point = 0.0;
    d.coeffs = CoefficientStream::indexed(
                   [](std::size_t n) -> Complex {
                       if (n == 0) return {};
                       const double mag = 1.0 / static_cast<double>(n);
                       return n % 2 == 1 ? mag : -mag;
                   },
                   growth::PowerLaw{1.0, 1.0})
                   .with_tail_enclosure([](std::size_t N) {
                       const double n = static_cast<double>(N);
                       return Interval{1.0 / (n + 1.0), N == 0 ? HUGE_VAL : 1.0 / n};
                   });
    d.contains = [](Complex z) {
        const double y = z.imag();
        if (!(std::abs(y) < kPi / 2.0)) return false;
        return z.real() < std::log(2.0 * std::cos(y));
    };
    d.map = [](Complex z) { return std::log(1.0 + z); };
    d.deriv = [](Complex z) { return 1.0 / (1.0 + z); };
    d.closed_form = ClosedForm::finite(kPi * kPi / 12.0);
    return d;
}

DomainSpec strip() {
    DomainSpec d;
    d.name = "strip";
    d.base_point = 0.0;
    d.coeffs =
        CoefficientStream::indexed(
            [](std::size_t n) -> Complex {
                if (n % 2 == 0) return {};
                const double mag = 1.0 / static_cast<double>(n);
                return ((n - 1) / 2) % 2 == 0 ? mag : -mag;
            },
            growth::PowerLaw{1.0, 1.0})
            .with_tail_enclosure([](std::size_t N) {
                // Odd indices up to N are 2k - 1 for k <= K; the rest of
                // sum 1/(2k-1)^2 lies in (1/(4K+2), 1/(4K-2)).
                const double K = static_cast<double>((N + 1) / 2);
                if (K < 1.0) return Interval{0.0, HUGE_VAL};
                return Interval{1.0 / (4.0 * K + 2.0), 1.0 / (4.0 * K - 2.0)};
            });
    d.contains = [](Complex z) { return std::abs(z.real()) < kPi / 4.0; };
    d.map = [](Complex z) { return std::atan(z); };
    d.deriv = [](Complex z) { return 1.0 / (1.0 + z * z); };
    d.closed_form = ClosedForm::finite(kPi * kPi / 16.0);
    return d;
}

DomainSpec wedge_inner(double p) {
    require_wedge_parameter(p);
    const double inv_gamma = 1.0 / special::gamma(p);
    CoefficientStream coeffs = CoefficientStream::sequential(
        rising_ratio_sequence(p), growth::PowerLaw{inv_gamma, 1.0 - p});
    // (n+1)^(p-1) < Gamma(n+p)/Gamma(n+1) < n^(p-1), integrated against the tail.
    coeffs = coeffs.with_lower_envelope({inv_gamma, 1.0 - p});
    if (p < 0.5) {
        const double c2 = inv_gamma * inv_gamma;
        const double e = 1.0 - 2.0 * p;
        coeffs = coeffs.with_tail_enclosure([c2, e](std::size_t N) {
            const double n = static_cast<double>(N);
            const double hi = N == 0 ? HUGE_VAL : c2 * std::pow(n, -e) / e;
            return Interval{c2 * std::pow(n + 2.0, -e) / e, hi};
        });
    }

    DomainSpec d;
    d.name = "wedge-inner";
    d.params = {{"p", p}};
    d.base_point = 1.0;
    d.coeffs = coeffs;
    d.contains = [p](Complex z) { return in_wedge_inner(z, p); };
    d.map = [p](Complex z) { return std::pow(1.0 - z, -p); };
    d.deriv = [p](Complex z) { return p * std::pow(1.0 - z, -p - 1.0); };
    d.closed_form = wedge_closed_form(p, &special::WedgeBounds::inner);
    d.mc_eligible = p < 0.5;
    return d;
}

DomainSpec wedge_outer(double p) {
    require_wedge_parameter(p);
    const double t = std::pow(2.0, p);
    const double scale = t / (t - 1.0);
    const DomainSpec inner = wedge_inner(p);

    DomainSpec d;
    d.name = "wedge-outer";
    d.params = {{"p", p}};
    d.base_point = 1.0;
    d.coeffs = inner.coeffs.affine(scale, -scale / t);
    d.contains = [p](Complex z) { return in_wedge_outer(z, p); };
    d.map = [p, scale, t](Complex z) { return scale * (std::pow(1.0 - z, -p) - 1.0 / t); };
    d.deriv = [p, scale](Complex z) { return scale * p * std::pow(1.0 - z, -p - 1.0); };
    d.closed_form = wedge_closed_form(p, &special::WedgeBounds::outer);
    d.mc_eligible = p < 0.5;
    return d;
}

DomainSpec wedge(double p) {
    require_wedge_parameter(p);
    DomainSpec d;
    d.name = "wedge";
    d.params = {{"p", p}};
    d.base_point = 1.0;
    d.coeffs = CoefficientStream::indexed([](std::size_t) { return Complex{}; },
                                          growth::Unknown{})
                   .with_note("no coefficient stream for the wedge itself");
    d.has_series = false;
    d.contains = [p](Complex z) { return in_wedge(z, p); };
    if (p < 0.5) {
        // Only the bracket is known in closed form; see special::wedge_bounds.
        d.mc_eligible = true;
    } else {
        d.closed_form = ClosedForm::infinite();
        d.mc_eligible = false;
    }
    return d;
}

DomainSpec mgon(int m) {
    if (m < 3) throw Error(ErrorKind::UnsupportedParameter, "m-gon needs m >= 3");
    const double md = static_cast<double>(m);
    const double scale = special::mgon_vertex_scale(m);
    const double q = 2.0 / md;
    // a_{mk+1} = (2/m)_k / (k! (mk + 1) W); Gautschi's inequality gives
    // |a_n| <= (m+1)^(1-2/m) / (Gamma(2/m) W) n^(2/m - 2).
    const double bound = std::pow(md + 1.0, 1.0 - q) / (special::gamma(q) * scale);

    CoefficientStream::SequenceFactory factory = [m, q, scale]() -> CoefficientStream::Cursor {
        return [m, q, scale, n = std::size_t{0}, k = std::size_t{0},
                ratio = 1.0]() mutable -> Complex {
            const std::size_t index = n++;
            if (index % static_cast<std::size_t>(m) != 1) return {};
            const double out =
                ratio / ((static_cast<double>(index)) * scale);
            ratio *= (q + static_cast<double>(k)) / static_cast<double>(k + 1);
            ++k;
            return out;
        };
    };

    DomainSpec d;
    d.name = "mgon";
    d.params = {{"m", md}};
    d.base_point = 0.0;
    d.coeffs = CoefficientStream::sequential(factory, growth::PowerLaw{bound, 2.0 - q});
    d.contains = [m](Complex z) { return in_regular_polygon(z, m); };
    d.map = [m, q, scale](Complex z) {
        const Complex zm = std::pow(z, m);
        Complex sum{};
        Complex power{1.0, 0.0};
        double ratio = 1.0;
        for (std::size_t k = 0; k < 100000; ++k) {
            const Complex term =
                ratio / (static_cast<double>(m) * static_cast<double>(k) + 1.0) * power;
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum) && k > 4) break;
            ratio *= (q + static_cast<double>(k)) / static_cast<double>(k + 1);
            power *= zm;
        }
        return z * sum / scale;
    };
    d.deriv = [m, q, scale](Complex z) {
        return std::pow(1.0 - std::pow(z, m), -q) / scale;
    };
    d.closed_form = ClosedForm::finite(special::mgon_exit_time(m).value);
    return d;
}

DomainSpec koebe() {
    DomainSpec d;
    d.name = "koebe";
    d.base_point = 0.0;
    d.coeffs = CoefficientStream::indexed(
                   [](std::size_t n) { return Complex{static_cast<double>(n), 0.0}; },
                   growth::BoundedByLinear{})
                   .with_lower_envelope({0.5, -1.0});
    d.map = [](Complex z) { return z / ((1.0 - z) * (1.0 - z)); };
    d.deriv = [](Complex z) { return (1.0 + z) / ((1.0 - z) * (1.0 - z) * (1.0 - z)); };
    d.closed_form = ClosedForm::infinite();
    d.mc_eligible = false;
    return d;
}

DomainSpec annulus_bproper() {
    // f = exp(arctan z) solves (1 + z^2) f' = f, so
    // (n+1) c_{n+1} = c_n - (n-1) c_{n-1}. |n c_n| tends to at most
    // 2/|Gamma(i/2)| ~ 1.2104 from the branch points at +-i; 1.25 covers it.
    CoefficientStream::SequenceFactory factory = []() -> CoefficientStream::Cursor {
        return [n = std::size_t{0}, prev = 0.0, cur = 1.0]() mutable -> Complex {
            const double out = cur;
            const double dn = static_cast<double>(n);
            const double next = (cur - (dn - 1.0) * prev) / (dn + 1.0);
            prev = cur;
            cur = next;
            ++n;
            return out;
        };
    };

    const double inner_radius = std::exp(-kPi / 4.0);
    const double outer_radius = std::exp(kPi / 4.0);
    DomainSpec d;
    d.name = "annulus";
    d.base_point = 1.0;
    d.coeffs = CoefficientStream::sequential(factory, growth::PowerLaw{1.25, 1.0})
                   .with_note("exp(arctan z): B-proper, not injective");
    d.contains = [inner_radius, outer_radius](Complex z) {
        const double r = std::abs(z);
        return r > inner_radius && r < outer_radius;
    };
    d.map = [](Complex z) { return std::exp(std::atan(z)); };
    d.deriv = [](Complex z) { return std::exp(std::atan(z)) / (1.0 + z * z); };
    // Radial solution of (1/2) Laplacian u = -1 vanishing on both circles.
    d.closed_form = ClosedForm::finite(-0.5 + std::cosh(kPi / 2.0) / 2.0);
    d.bproper_only = true;
    return d;
}

const std::vector<std::string>& names() {
    static const std::vector<std::string> all = {
        "disc",        "half-plane", "cardioid", "catenary", "strip",   "wedge-inner",
        "wedge-outer", "wedge",      "mgon",     "koebe",    "identity", "annulus"};
    return all;
}

DomainSpec by_name(std::string_view name, const DomainParams& params) {
    if (name == "disc") return disc(params.radius, params.a);
    if (name == "half-plane") return half_plane();
    if (name == "cardioid") return cardioid();
    if (name == "catenary") return catenary();
    if (name == "strip") return strip();
    if (name == "wedge-inner") return wedge_inner(params.p);
    if (name == "wedge-outer") return wedge_outer(params.p);
    if (name == "wedge") return wedge(params.p);
    if (name == "mgon") return mgon(params.m);
    if (name == "koebe") return koebe();
    if (name == "identity") return identity_disc();
    if (name == "annulus") return annulus_bproper();
    throw Error(ErrorKind::UnknownDomain, "unknown domain '" + std::string(name) + "'");
}

}  // namespace catalog
}  // namespace exittime
