#include "exittime/coefficients.hpp"

#include <cmath>
#include <sstream>

namespace exittime {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

GrowthClass rescale(const GrowthClass& g, double factor) {
    return std::visit(
        overloaded{
            [](const growth::FiniteSupport& f) -> GrowthClass { return f; },
            [factor](const growth::BoundedByLinear&) -> GrowthClass {
                if (factor <= 1.0) return growth::BoundedByLinear{};
                return growth::PowerLaw{factor, -1.0};
            },
            [factor](const growth::Geometric& geo) -> GrowthClass {
                return growth::Geometric{geo.ratio, geo.constant * factor};
            },
            [factor](const growth::PowerLaw& pl) -> GrowthClass {
                return growth::PowerLaw{pl.constant * factor, pl.exponent};
            },
            [](const growth::Unknown& u) -> GrowthClass { return u; },
        },
        g);
}

}  // namespace

std::string describe(const GrowthClass& g) {
    std::ostringstream out;
    std::visit(overloaded{
                   [&](const growth::FiniteSupport& f) {
                       out << "FiniteSupport(" << f.last << ")";
                   },
                   [&](const growth::BoundedByLinear&) { out << "BoundedByLinear"; },
                   [&](const growth::Geometric& geo) {
                       out << "Geometric(ratio=" << geo.ratio
                           << ",C=" << geo.constant << ")";
                   },
                   [&](const growth::PowerLaw& pl) {
                       out << "PowerLaw(C=" << pl.constant
                           << ",exponent=" << pl.exponent << ")";
                   },
                   [&](const growth::Unknown&) { out << "Unknown"; },
               },
               g);
    return out.str();
}

CoefficientStream::CoefficientStream()
    : CoefficientStream(polynomial({})) {}

CoefficientStream CoefficientStream::indexed(Indexed fn, GrowthClass growth) {
    auto state = std::make_shared<State>();
    state->indexed = std::move(fn);
    state->growth = growth;
    return CoefficientStream(std::move(state));
}

CoefficientStream CoefficientStream::sequential(SequenceFactory factory,
                                                GrowthClass growth) {
    auto state = std::make_shared<State>();
    state->sequence = std::move(factory);
    state->growth = growth;
    return CoefficientStream(std::move(state));
}

CoefficientStream CoefficientStream::polynomial(std::vector<Complex> coeffs) {
    // Trailing zeros do not count towards the support.
    std::size_t last = coeffs.size();
    while (last > 0 && coeffs[last - 1] == Complex{}) --last;
    coeffs.resize(last);
    const std::size_t degree = last == 0 ? 0 : last - 1;
    auto shared = std::make_shared<const std::vector<Complex>>(std::move(coeffs));
    return indexed(
        [shared](std::size_t n) {
            return n < shared->size() ? (*shared)[n] : Complex{};
        },
        growth::FiniteSupport{degree});
}

Complex CoefficientStream::coeff(std::size_t n) const {
    if (state_->indexed) return state_->indexed(n);
    auto next = state_->sequence();
    Complex value = next();
    for (std::size_t k = 0; k < n; ++k) value = next();
    return value;
}

std::vector<Complex> CoefficientStream::prefix(std::size_t count) const {
    std::vector<Complex> out;
    out.reserve(count);
    auto next = cursor();
    for (std::size_t k = 0; k < count; ++k) out.push_back(next());
    return out;
}

CoefficientStream::Cursor CoefficientStream::cursor() const {
    if (state_->indexed) {
        return [fn = state_->indexed, n = std::size_t{0}]() mutable {
            return fn(n++);
        };
    }
    return state_->sequence();
}

CoefficientStream CoefficientStream::modified(
    const std::function<void(State&)>& edit) const {
    auto copy = std::make_shared<State>(*state_);
    edit(*copy);
    return CoefficientStream(std::move(copy));
}

CoefficientStream CoefficientStream::with_lower_envelope(LowerEnvelope env) const {
    return modified([&](State& s) { s.lower = env; });
}

CoefficientStream CoefficientStream::with_tail_enclosure(TailEnclosure tail) const {
    return modified([&](State& s) { s.tail = std::move(tail); });
}

CoefficientStream CoefficientStream::with_note(std::string note) const {
    return modified([&](State& s) { s.note = std::move(note); });
}

CoefficientStream CoefficientStream::affine(Complex scale, Complex shift) const {
    const double factor = std::abs(scale);
    auto base = state_;
    auto result = std::make_shared<State>();
    if (base->indexed) {
        result->indexed = [base, scale, shift](std::size_t n) {
            const Complex a = base->indexed(n);
            return n == 0 ? scale * a + shift : scale * a;
        };
    } else {
        result->sequence = [base, scale, shift]() -> Cursor {
            return [next = base->sequence(), scale, shift,
                    first = true]() mutable {
                const Complex a = next();
                if (first) {
                    first = false;
                    return scale * a + shift;
                }
                return scale * a;
            };
        };
    }
    result->growth = rescale(base->growth, factor);
    if (base->lower) {
        result->lower =
            LowerEnvelope{base->lower->constant * factor, base->lower->exponent};
    }
    if (base->tail) {
        const double f2 = factor * factor;
        result->tail = [tail = base->tail, f2](std::size_t n) {
            const Interval t = tail(n);
            return Interval{t.lo * f2, t.hi * f2};
        };
    }
    result->note = base->note;
    return CoefficientStream(std::move(result));
}

}  // namespace exittime
