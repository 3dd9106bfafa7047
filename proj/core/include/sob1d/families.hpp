#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>

#include "sob1d/chebfun.hpp"
#include "sob1d/exact_poly.hpp"

namespace sob1d {

/// Name of the pseudo-random generator; embedded in every report.
inline constexpr std::string_view kGeneratorName = "mt19937_64";

/// std::mt19937_64 with integer-only conversions, so that draws do not
/// depend on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform on [lo, hi) from the top 53 bits.
    double uniform(double lo, double hi);
    /// Uniform integer on [lo, hi].
    int uniform_int(int lo, int hi);
    /// Uniform on the dyadic grid k / 2^20 in [-1, 1]; exactly representable
    /// both as a double and as a small rational.
    double dyadic_unit();

private:
    std::mt19937_64 engine_;
};

[[nodiscard]] std::uint64_t splitmix64(std::uint64_t x);

/// Seed for instance `index` of family slot `family` under the run seed.
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t run_seed, std::uint64_t family, std::uint64_t index);

enum class Family { polynomial, fourier, gaussian_bump, runge, sin, cos, exp };
enum class Backend { spectral, exact };

[[nodiscard]] std::string_view to_string(Family f) noexcept;
[[nodiscard]] Family parse_family(std::string_view name);

/// Everything needed to regenerate one concrete function bit-for-bit.
///
/// Shapes are defined in the normalized coordinate s = (x - a) / (b - a):
///   polynomial     sum_{k<=degree} c_k s^k, c_k dyadic in [-1, 1]^2
///   fourier        sum_{k<=degree} c_k cos(k pi s) + d_k sin(k pi s)
///   gaussian_bump  c exp(-((s - center) / width)^2)
///   runge          c / (1 + ((s - center) / width)^2)
/// The named families sin, cos, exp are evaluated at the physical x.
struct FunctionDescriptor {
    Family family = Family::polynomial;
    int degree = 0;
    double center = 0.5;
    double width = 0.25;
    std::optional<double> coeff;  // polynomial only: every coefficient equals this value
    std::uint64_t seed = 0;
    Interval interval{0.0, 1.0};
    Backend backend = Backend::spectral;
    std::size_t resolution = 0;  // interpolation degree; 0 selects default_resolution
};

/// polynomial: degree; fourier: 4 degree + 16; gaussian_bump and named: 64;
/// runge: 128.
[[nodiscard]] std::size_t default_resolution(const FunctionDescriptor& fd);

/// "family:key=value,..." with every field spelled out.
[[nodiscard]] std::string to_string(const FunctionDescriptor& fd);
[[nodiscard]] FunctionDescriptor parse_descriptor(std::string_view text);

/// Spectral representation. Polynomials on the exact backend go through the
/// exact Chebyshev conversion; other families reject the exact backend.
[[nodiscard]] ChebFunction generate(const FunctionDescriptor& fd);

/// Exact representation; polynomial family only.
[[nodiscard]] ExactPoly generate_exact(const FunctionDescriptor& fd);

/// Trigonometric sum on [a, b] in the normalized coordinate, interpolated at
/// the given degree. sin_coeffs[0] is ignored.
[[nodiscard]] ChebFunction fourier_function(const Interval& iv, std::span<const Complex> cos_coeffs,
                                            std::span<const Complex> sin_coeffs, std::size_t degree);

/// A family together with the ranges its instances are drawn from.
struct FamilyTemplate {
    Family family = Family::polynomial;
    int max_degree = 20;           // polynomial degree or fourier modes
    std::optional<int> degree;     // fixes the drawn degree
    std::optional<double> coeff;   // polynomial only
    Backend backend = Backend::spectral;
    std::size_t resolution = 0;
};

/// "polynomial", "polynomial:max_degree=20", "polynomial:degree=0,coeff=1",
/// "fourier:max_modes=8", "gaussian_bump", "runge", "sin", "exp:n=32", ...
[[nodiscard]] FamilyTemplate parse_family_template(std::string_view text);
[[nodiscard]] std::string to_string(const FamilyTemplate& t);

/// Draws the per-instance parameters (degree, center, width) from the seed.
[[nodiscard]] FunctionDescriptor instantiate(const FamilyTemplate& t, const Interval& iv, std::uint64_t seed);

}  // namespace sob1d
