#include "sob1d/chebfun.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "sob1d/error.hpp"

namespace sob1d {

namespace {

double to_reference(const Interval& iv, double x) {
    // (x - a) - (b - x) keeps t = -1 and t = 1 exact at the endpoints.
    const double t = ((x - iv.a()) - (iv.b() - x)) / iv.length();
    return std::clamp(t, -1.0, 1.0);
}

Complex clenshaw(std::span<const Complex> c, double t) {
    Complex b1{0.0}, b2{0.0};
    for (std::size_t k = c.size() - 1; k >= 1; --k) {
        const Complex b0 = c[k] + 2.0 * t * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return c[0] + t * b1 - b2;
}

// cos(k pi / n) computed by a sine of the symmetric angle so that the node
// set is exactly symmetric about zero.
double lobatto_node(std::size_t k, std::size_t n) {
    const double num = static_cast<double>(static_cast<long long>(n) - 2 * static_cast<long long>(k));
    return std::sin(std::numbers::pi * num / (2.0 * static_cast<double>(n)));
}

std::shared_ptr<const std::vector<double>> cached_weights(std::size_t n) {
    static std::mutex mutex;
    static std::map<std::size_t, std::shared_ptr<const std::vector<double>>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, std::make_shared<const std::vector<double>>(clenshaw_curtis_weights(n))).first;
    }
    return it->second;
}

}  // namespace

ChebFunction::ChebFunction(Interval iv) : interval_(iv), coeffs_{Complex{0.0}} {}

ChebFunction::ChebFunction(Interval iv, std::vector<Complex> coeffs)
    : interval_(iv), coeffs_(std::move(coeffs)) {
    chop();
}

ChebFunction ChebFunction::constant(Interval iv, Complex value) { return ChebFunction(iv, {value}); }

bool ChebFunction::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex c) { return c == Complex{0.0}; });
}

void ChebFunction::chop() {
    if (coeffs_.empty()) {
        coeffs_.emplace_back(0.0);
        return;
    }
    double scale = 0.0;
    for (const auto& c : coeffs_) scale = std::max(scale, std::abs(c));
    const double floor = kChopTolerance * scale;
    while (coeffs_.size() > 1 && std::abs(coeffs_.back()) < floor) coeffs_.pop_back();
    if (scale == 0.0) coeffs_.assign(1, Complex{0.0});
}

Complex ChebFunction::operator()(double x) const { return evaluate(*this, x); }

ChebFunction& ChebFunction::operator*=(Complex alpha) {
    for (auto& c : coeffs_) c *= alpha;
    chop();
    return *this;
}

ChebFunction& ChebFunction::operator+=(const ChebFunction& other) {
    if (!(other.interval_ == interval_)) throw InvalidArgument("cannot add functions on different intervals");
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Complex{0.0});
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    chop();
    return *this;
}

std::vector<double> lobatto_points(const Interval& iv, std::size_t n) {
    if (n == 0) return {0.5 * (iv.a() + iv.b())};
    std::vector<double> x(n + 1);
    const double half = 0.5 * iv.length();
    for (std::size_t k = 0; k <= n; ++k) x[k] = iv.a() + half * (lobatto_node(k, n) + 1.0);
    x.front() = iv.b();
    x.back() = iv.a();
    return x;
}

ChebFunction cheb_from_samples(const Interval& iv, const SampleFn& f, std::size_t n) {
    const auto x = lobatto_points(iv, n);
    std::vector<Complex> values(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        values[k] = f(x[k]);
        if (!std::isfinite(values[k].real()) || !std::isfinite(values[k].imag())) {
            std::ostringstream os;
            os << "non-finite sample at Chebyshev node " << k << " (x = " << x[k] << ")";
            throw InvalidArgument(os.str());
        }
    }
    if (n == 0) return ChebFunction(iv, {values[0]});

    // Discrete cosine transform of type I; cos(j k pi / n) read from a table
    // indexed by (j k) mod 2n.
    const std::size_t period = 2 * n;
    std::vector<double> cosines(period);
    for (std::size_t m = 0; m < period; ++m) {
        cosines[m] = std::cos(std::numbers::pi * static_cast<double>(m) / static_cast<double>(n));
    }
    // Exact values at the quarter turns keep the table symmetric.
    cosines[0] = 1.0;
    cosines[n] = -1.0;
    if (n % 2 == 0) {
        cosines[n / 2] = 0.0;
        cosines[3 * n / 2] = 0.0;
    }

    std::vector<Complex> coeffs(n + 1);
    const double scale = 2.0 / static_cast<double>(n);
    for (std::size_t j = 0; j <= n; ++j) {
        Complex sum = 0.5 * (values[0] + values[n] * cosines[(j * n) % period]);
        for (std::size_t k = 1; k < n; ++k) sum += values[k] * cosines[(j * k) % period];
        coeffs[j] = scale * sum;
    }
    coeffs[0] *= 0.5;
    coeffs[n] *= 0.5;
    return ChebFunction(iv, std::move(coeffs));
}

ChebFunction differentiate(const ChebFunction& u) {
    const auto c = u.coeffs();
    const std::size_t n = c.size() - 1;
    if (n == 0) return ChebFunction(u.interval());

    std::vector<Complex> d(n, Complex{0.0});
    // d_{k-1} = d_{k+1} + 2 k c_k, then d_0 is halved.
    for (std::size_t k = n; k >= 1; --k) {
        const Complex next = (k + 1 < n) ? d[k + 1] : Complex{0.0};
        d[k - 1] = next + 2.0 * static_cast<double>(k) * c[k];
    }
    d[0] *= 0.5;
    const double chain = 2.0 / u.interval().length();
    for (auto& v : d) v *= chain;
    return ChebFunction(u.interval(), std::move(d));
}

ChebFunction differentiate(const ChebFunction& u, int order) {
    if (order < 0 || order > kMaxDerivativeOrder) {
        std::ostringstream os;
        os << "derivative order " << order << " outside [0, " << kMaxDerivativeOrder << "]";
        throw InvalidArgument(os.str());
    }
    ChebFunction out = u;
    for (int j = 0; j < order; ++j) out = differentiate(out);
    return out;
}

Complex evaluate(const ChebFunction& u, double x) {
    const auto& iv = u.interval();
    if (!iv.contains(x)) {
        std::ostringstream os;
        os << "evaluation point " << x << " outside [" << iv.a() << ", " << iv.b() << "]";
        throw InvalidArgument(os.str());
    }
    return clenshaw(u.coeffs(), to_reference(iv, x));
}

Complex evaluate(const ChebFunction& u, Endpoint e) {
    // T_k(1) = 1 and T_k(-1) = (-1)^k.
    Complex sum{0.0};
    const auto c = u.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        sum += (e == Endpoint::a && (k % 2 == 1)) ? -c[k] : c[k];
    }
    return sum;
}

std::vector<double> clenshaw_curtis_weights(std::size_t n) {
    if (n == 0) return {2.0};
    std::vector<double> w(n + 1, 0.0);
    const double nd = static_cast<double>(n);
    std::vector<double> v(n - 1, 1.0);
    if (n % 2 == 0) {
        w[0] = w[n] = 1.0 / (nd * nd - 1.0);
        for (std::size_t k = 1; k < n / 2; ++k) {
            const double kd = static_cast<double>(k);
            for (std::size_t i = 1; i < n; ++i) {
                v[i - 1] -= 2.0 * std::cos(2.0 * kd * std::numbers::pi * static_cast<double>(i) / nd) /
                            (4.0 * kd * kd - 1.0);
            }
        }
        for (std::size_t i = 1; i < n; ++i) {
            v[i - 1] -= std::cos(std::numbers::pi * static_cast<double>(i)) / (nd * nd - 1.0);
        }
    } else {
        w[0] = w[n] = 1.0 / (nd * nd);
        for (std::size_t k = 1; k <= (n - 1) / 2; ++k) {
            const double kd = static_cast<double>(k);
            for (std::size_t i = 1; i < n; ++i) {
                v[i - 1] -= 2.0 * std::cos(2.0 * kd * std::numbers::pi * static_cast<double>(i) / nd) /
                            (4.0 * kd * kd - 1.0);
            }
        }
    }
    for (std::size_t i = 1; i < n; ++i) w[i] = 2.0 * v[i - 1] / nd;
    return w;
}

double integrate_l2sq(const ChebFunction& u) {
    const std::size_t n = 2 * u.degree() + 1;
    const auto weights = cached_weights(n);
    const auto c = u.coeffs();
    double sum = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
        sum += (*weights)[k] * std::norm(clenshaw(c, lobatto_node(k, n)));
    }
    return 0.5 * u.interval().length() * sum;
}

double integrate_lp(const ChebFunction& u, double p) {
    if (!(p >= 1.0) || !std::isfinite(p)) {
        std::ostringstream os;
        os << "integrate_lp requires finite p >= 1, got " << p;
        throw InvalidArgument(os.str());
    }
    const auto c = u.coeffs();
    const auto integrand = [&](double t) { return std::pow(std::abs(clenshaw(c, t)), p); };
    const double reference = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        integrand, -1.0, 1.0, 20, kLpQuadratureTolerance);
    return 0.5 * u.interval().length() * reference;
}

}  // namespace sob1d
