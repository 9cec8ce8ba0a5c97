#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace exittime {

using Complex = std::complex<double>;

/// Closed interval [lo, hi] on the real line.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double mid() const { return 0.5 * (lo + hi); }
    double half_width() const { return 0.5 * (hi - lo); }
};

/// Growth classes describing how fast |a_n| can grow or decay. They are what
/// lets the series engine certify truncation error.
namespace growth {

/// a_n = 0 for every n > last.
struct FiniteSupport {
    std::size_t last = 0;
};

/// |a_n| <= n for n >= 1 (the Schlicht coefficient bound).
struct BoundedByLinear {};

/// |a_n| <= constant * ratio^n with ratio in (0, 1).
struct Geometric {
    double ratio = 0.0;
    double constant = 1.0;
};

/// |a_n| <= constant * n^(-exponent) for n >= 1.
struct PowerLaw {
    double constant = 1.0;
    double exponent = 0.0;
};

struct Unknown {};

}  // namespace growth

using GrowthClass = std::variant<growth::FiniteSupport, growth::BoundedByLinear,
                                 growth::Geometric, growth::PowerLaw, growth::Unknown>;

std::string describe(const GrowthClass& g);

/// |a_n| >= constant * (n + 1)^(-exponent) for every n >= 1. With
/// exponent <= 1/2 this certifies that sum |a_n|^2 diverges.
struct LowerEnvelope {
    double constant = 0.0;
    double exponent = 0.0;

    bool forces_divergence() const { return constant > 0.0 && exponent <= 0.5; }
};

/// Two-sided enclosure of the tail sum_{n > N} |a_n|^2 (at radius 1) as a
/// function of N.
using TailEnclosure = std::function<Interval(std::size_t)>;

/**
 * Immutable, shareable stream of Taylor coefficients a_0, a_1, ...
 *
 * Coefficients come either from an indexed closed form or from a sequence
 * factory (for recurrences); in both cases every query is deterministic and
 * the stream holds no mutable state, so copies can be read concurrently.
 * Sequential consumers should use cursor(), which is O(1) per term for both
 * kinds; coeff(n) on a sequential stream replays the recurrence.
 */
class CoefficientStream {
  public:
    using Indexed = std::function<Complex(std::size_t)>;
    using Cursor = std::function<Complex()>;
    using SequenceFactory = std::function<Cursor()>;

    CoefficientStream();

    static CoefficientStream indexed(Indexed fn, GrowthClass growth);
    static CoefficientStream sequential(SequenceFactory factory, GrowthClass growth);
    static CoefficientStream polynomial(std::vector<Complex> coeffs);

    Complex coeff(std::size_t n) const;
    std::vector<Complex> prefix(std::size_t count) const;
    /// Fresh reader yielding a_0, a_1, ... on successive calls.
    Cursor cursor() const;

    const GrowthClass& growth() const { return state_->growth; }
    const std::optional<LowerEnvelope>& lower_envelope() const {
        return state_->lower;
    }
    const TailEnclosure& tail_enclosure() const { return state_->tail; }
    const std::string& note() const { return state_->note; }

    CoefficientStream with_lower_envelope(LowerEnvelope env) const;
    CoefficientStream with_tail_enclosure(TailEnclosure tail) const;
    CoefficientStream with_note(std::string note) const;

    /// b_0 = scale * a_0 + shift, b_n = scale * a_n for n >= 1. Growth data
    /// is rescaled accordingly.
    CoefficientStream affine(Complex scale, Complex shift) const;

  private:
    struct State {
        Indexed indexed;
        SequenceFactory sequence;
        GrowthClass growth = growth::Unknown{};
        std::optional<LowerEnvelope> lower;
        TailEnclosure tail;
        std::string note;
    };

    explicit CoefficientStream(std::shared_ptr<const State> state)
        : state_(std::move(state)) {}

    CoefficientStream modified(const std::function<void(State&)>& edit) const;

    std::shared_ptr<const State> state_;
};

}  // namespace exittime
