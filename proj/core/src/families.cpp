#include "sob1d/families.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <vector>

#include "sob1d/certificate.hpp"
#include "sob1d/error.hpp"

namespace sob1d {

namespace {

constexpr std::array<std::string_view, 7> kFamilyNames = {"polynomial", "fourier", "gaussian_bump", "runge",
                                                          "sin",        "cos",     "exp"};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

/// Splits "family:k=v,k=v" into the family name and an ordered key map.
std::pair<std::string, std::map<std::string, std::string>> split_spec(std::string_view text) {
    text = trim(text);
    const auto colon = text.find(':');
    std::string head(trim(text.substr(0, colon)));
    std::map<std::string, std::string> params;
    if (colon != std::string_view::npos) {
        std::string_view rest = text.substr(colon + 1);
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const auto item = trim(rest.substr(0, comma));
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
            if (item.empty()) continue;
            const auto eq = item.find('=');
            if (eq == std::string_view::npos) throw InvalidArgument("expected key=value, got '" + std::string(item) + "'");
            params[std::string(trim(item.substr(0, eq)))] = std::string(trim(item.substr(eq + 1)));
        }
    }
    return {std::move(head), std::move(params)};
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
    T out{};
    const auto* end = value.data() + value.size();
    const auto res = std::from_chars(value.data(), end, out);
    if (res.ec != std::errc{} || res.ptr != end) {
        throw InvalidArgument("invalid value '" + value + "' for parameter '" + key + "'");
    }
    return out;
}

Backend parse_backend(const std::string& value) {
    if (value == "spectral") return Backend::spectral;
    if (value == "exact") return Backend::exact;
    throw InvalidArgument("unknown backend '" + value + "'");
}

std::string_view to_string(Backend b) { return b == Backend::spectral ? "spectral" : "exact"; }

Complex unit_box(Rng& rng) { return {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)}; }

std::vector<Complex> polynomial_coefficients(const FunctionDescriptor& fd) {
    if (fd.degree < 0) throw InvalidArgument("polynomial degree must be non-negative");
    std::vector<Complex> c(static_cast<std::size_t>(fd.degree) + 1);
    if (fd.coeff) {
        for (auto& v : c) v = *fd.coeff;
        return c;
    }
    Rng rng(splitmix64(fd.seed));
    for (auto& v : c) {
        const double re = rng.dyadic_unit();
        const double im = rng.dyadic_unit();
        v = {re, im};
    }
    return c;
}

void reject_exact(const FunctionDescriptor& fd) {
    if (fd.backend == Backend::exact) {
        throw InvalidArgument("the exact backend only supports the polynomial family, not " +
                              std::string(to_string(fd.family)));
    }
}

}  // namespace

double Rng::uniform(double lo, double hi) {
    const double unit = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
}

int Rng::uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo + 1);
    return lo + static_cast<int>(next() % span);
}

double Rng::dyadic_unit() {
    constexpr std::int64_t half = std::int64_t{1} << 20;
    const auto k = static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(2 * half + 1)) - half;
    return static_cast<double>(k) / static_cast<double>(half);
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t run_seed, std::uint64_t family, std::uint64_t index) {
    return splitmix64(splitmix64(splitmix64(run_seed) ^ family) ^ index);
}

std::string_view to_string(Family f) noexcept { return kFamilyNames[static_cast<std::size_t>(f)]; }

Family parse_family(std::string_view name) {
    for (std::size_t i = 0; i < kFamilyNames.size(); ++i) {
        if (kFamilyNames[i] == name) return static_cast<Family>(i);
    }
    throw InvalidArgument("unknown function family '" + std::string(name) + "'");
}

std::size_t default_resolution(const FunctionDescriptor& fd) {
    switch (fd.family) {
        case Family::polynomial: return static_cast<std::size_t>(std::max(fd.degree, 0));
        case Family::fourier: return static_cast<std::size_t>(4 * fd.degree + 16);
        case Family::runge: return 128;
        default: return 64;
    }
}

std::string to_string(const FunctionDescriptor& fd) {
    std::ostringstream os;
    os << to_string(fd.family) << ":degree=" << fd.degree << ",center=" << format_double(fd.center)
       << ",width=" << format_double(fd.width);
    if (fd.coeff) os << ",coeff=" << format_double(*fd.coeff);
    os << ",seed=" << fd.seed << ",a=" << format_double(fd.interval.a()) << ",b=" << format_double(fd.interval.b())
       << ",backend=" << to_string(fd.backend) << ",n=" << fd.resolution;
    return os.str();
}

FunctionDescriptor parse_descriptor(std::string_view text) {
    auto [name, params] = split_spec(text);
    FunctionDescriptor fd;
    fd.family = parse_family(name);
    double a = 0.0;
    double b = 1.0;
    for (const auto& [key, value] : params) {
        if (key == "degree") fd.degree = parse_number<int>(key, value);
        else if (key == "center") fd.center = parse_number<double>(key, value);
        else if (key == "width") fd.width = parse_number<double>(key, value);
        else if (key == "coeff") fd.coeff = parse_number<double>(key, value);
        else if (key == "seed") fd.seed = parse_number<std::uint64_t>(key, value);
        else if (key == "a") a = parse_number<double>(key, value);
        else if (key == "b") b = parse_number<double>(key, value);
        else if (key == "backend") fd.backend = parse_backend(value);
        else if (key == "n") fd.resolution = parse_number<std::size_t>(key, value);
        else throw InvalidArgument("unknown descriptor parameter '" + key + "'");
    }
    fd.interval = Interval(a, b);
    return fd;
}

ChebFunction fourier_function(const Interval& iv, std::span<const Complex> cos_coeffs,
                              std::span<const Complex> sin_coeffs, std::size_t degree) {
    const double a = iv.a();
    const double lambda = iv.length();
    return cheb_from_samples(
        iv,
        [&](double x) {
            const double s = (x - a) / lambda;
            Complex sum{0.0};
            for (std::size_t k = 0; k < cos_coeffs.size(); ++k) {
                sum += cos_coeffs[k] * std::cos(static_cast<double>(k) * std::numbers::pi * s);
            }
            for (std::size_t k = 1; k < sin_coeffs.size(); ++k) {
                sum += sin_coeffs[k] * std::sin(static_cast<double>(k) * std::numbers::pi * s);
            }
            return sum;
        },
        degree);
}

ChebFunction generate(const FunctionDescriptor& fd) {
    const Interval& iv = fd.interval;
    const std::size_t n = fd.resolution > 0 ? fd.resolution : default_resolution(fd);
    const double a = iv.a();
    const double lambda = iv.length();
    const auto normalized = [a, lambda](double x) { return (x - a) / lambda; };

    switch (fd.family) {
        case Family::polynomial: {
            if (fd.backend == Backend::exact) return to_chebfunction(generate_exact(fd));
            const auto c = polynomial_coefficients(fd);
            return cheb_from_samples(
                iv,
                [&](double x) {
                    const double s = normalized(x);
                    Complex acc = c.back();
                    for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * s + c[k];
                    return acc;
                },
                std::max(n, c.size() - 1));
        }
        case Family::fourier: {
            reject_exact(fd);
            if (fd.degree < 0) throw InvalidArgument("fourier mode count must be non-negative");
            Rng rng(splitmix64(fd.seed));
            const auto modes = static_cast<std::size_t>(fd.degree) + 1;
            std::vector<Complex> cos_c(modes), sin_c(modes);
            for (std::size_t k = 0; k < modes; ++k) {
                cos_c[k] = unit_box(rng);
                if (k > 0) sin_c[k] = unit_box(rng);
            }
            return fourier_function(iv, cos_c, sin_c, n);
        }
        case Family::gaussian_bump:
        case Family::runge: {
            reject_exact(fd);
            if (!(fd.width > 0.0)) throw InvalidArgument("width must be positive");
            Rng rng(splitmix64(fd.seed));
            const Complex amplitude = unit_box(rng);
            const bool bump = fd.family == Family::gaussian_bump;
            return cheb_from_samples(
                iv,
                [&](double x) {
                    const double z = (normalized(x) - fd.center) / fd.width;
                    return amplitude * (bump ? std::exp(-z * z) : 1.0 / (1.0 + z * z));
                },
                n);
        }
        case Family::sin:
            reject_exact(fd);
            return cheb_from_samples(iv, [](double x) { return Complex{std::sin(x)}; }, n);
        case Family::cos:
            reject_exact(fd);
            return cheb_from_samples(iv, [](double x) { return Complex{std::cos(x)}; }, n);
        case Family::exp:
            reject_exact(fd);
            return cheb_from_samples(iv, [](double x) { return Complex{std::exp(x)}; }, n);
    }
    throw InvalidArgument("unhandled family");
}

ExactPoly generate_exact(const FunctionDescriptor& fd) {
    if (fd.family != Family::polynomial) {
        throw InvalidArgument("exact representation exists only for the polynomial family");
    }
    const auto c = polynomial_coefficients(fd);
    std::vector<GaussRational> exact(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) exact[k] = {exact_rational(c[k].real()), exact_rational(c[k].imag())};
    return ExactPoly::from_normalized(ExactInterval::from(fd.interval), exact);
}

FamilyTemplate parse_family_template(std::string_view text) {
    auto [name, params] = split_spec(text);
    FamilyTemplate t;
    t.family = parse_family(name);
    t.max_degree = t.family == Family::fourier ? 8 : 20;
    for (const auto& [key, value] : params) {
        if ((key == "max_degree" && t.family == Family::polynomial) ||
            (key == "max_modes" && t.family == Family::fourier)) {
            t.max_degree = parse_number<int>(key, value);
        } else if ((key == "degree" && t.family == Family::polynomial) ||
                   (key == "modes" && t.family == Family::fourier)) {
            t.degree = parse_number<int>(key, value);
        } else if (key == "coeff" && t.family == Family::polynomial) {
            t.coeff = parse_number<double>(key, value);
        } else if (key == "backend") {
            t.backend = parse_backend(value);
        } else if (key == "n") {
            t.resolution = parse_number<std::size_t>(key, value);
        } else {
            throw InvalidArgument("parameter '" + key + "' not accepted by family " + name);
        }
    }
    if (t.max_degree < 0 || (t.degree && *t.degree < 0)) throw InvalidArgument("degrees must be non-negative");
    if (t.backend == Backend::exact && t.family != Family::polynomial) {
        throw InvalidArgument("the exact backend only supports the polynomial family");
    }
    return t;
}

std::string to_string(const FamilyTemplate& t) {
    std::ostringstream os;
    os << to_string(t.family);
    std::vector<std::string> parts;
    if (t.family == Family::polynomial) {
        parts.push_back(t.degree ? "degree=" + std::to_string(*t.degree) : "max_degree=" + std::to_string(t.max_degree));
        if (t.coeff) parts.push_back("coeff=" + format_double(*t.coeff));
    } else if (t.family == Family::fourier) {
        parts.push_back(t.degree ? "modes=" + std::to_string(*t.degree) : "max_modes=" + std::to_string(t.max_degree));
    }
    if (t.backend == Backend::exact) parts.emplace_back("backend=exact");
    if (t.resolution > 0) parts.push_back("n=" + std::to_string(t.resolution));
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i == 0 ? ':' : ',') << parts[i];
    return os.str();
}

FunctionDescriptor instantiate(const FamilyTemplate& t, const Interval& iv, std::uint64_t seed) {
    Rng rng(seed);
    FunctionDescriptor fd;
    fd.family = t.family;
    fd.seed = seed;
    fd.interval = iv;
    fd.backend = t.backend;
    fd.resolution = t.resolution;
    fd.coeff = t.coeff;
    switch (t.family) {
        case Family::polynomial: fd.degree = t.degree ? *t.degree : rng.uniform_int(0, t.max_degree); break;
        case Family::fourier: fd.degree = t.degree ? *t.degree : rng.uniform_int(1, std::max(1, t.max_degree)); break;
        case Family::gaussian_bump:
            fd.center = rng.uniform(0.0, 1.0);
            fd.width = rng.uniform(0.1, 0.5);
            break;
        case Family::runge:
            fd.center = rng.uniform(0.0, 1.0);
            fd.width = rng.uniform(0.1, 0.4);
            break;
        default: break;
    }
    return fd;
}

}  // namespace sob1d
