#include "schurproc/specialization.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace schurproc {

Specialization::Specialization(Orientation orient, std::vector<Factor> factors)
    : orient_(orient), factors_(std::move(factors)) {}

Specialization& Specialization::add(Factor f) {
    factors_.push_back(f);
    return *this;
}

Specialization Specialization::concat(const Specialization& other) const {
    if (other.orient_ != orient_)
        throw std::invalid_argument("Specialization::concat: orientation mismatch");
    Specialization out = *this;
    out.factors_.insert(out.factors_.end(), other.factors_.begin(),
                        other.factors_.end());
    return out;
}

std::vector<double> Specialization::h_coeffs(int n) const {
    if (n < 0) throw std::invalid_argument("h_coeffs: n >= 0 required");
    std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
    c[0] = 1.0;
    for (const Factor& f : factors_) {
        switch (f.kind) {
            case FactorKind::geom_pole:
                // multiply by sum a^k u^k: prefix recurrence
                for (int k = 1; k <= n; ++k) c[k] += f.param * c[k - 1];
                break;
            case FactorKind::lin_zero:
                for (int k = n; k >= 1; --k) c[k] -= f.param * c[k - 1];
                break;
            case FactorKind::exp: {
                std::vector<double> e(static_cast<std::size_t>(n) + 1);
                e[0] = 1.0;
                for (int k = 1; k <= n; ++k) e[k] = e[k - 1] * f.param / k;
                std::vector<double> out(static_cast<std::size_t>(n) + 1, 0.0);
                for (int i = 0; i <= n; ++i)
                    for (int j = 0; i + j <= n; ++j) out[i + j] += c[i] * e[j];
                c = std::move(out);
                break;
            }
        }
    }
    return c;
}

std::vector<double> Specialization::log_coeffs(int K) const {
    if (K < 1) throw std::invalid_argument("log_coeffs: K >= 1 required");
    std::vector<double> lc(static_cast<std::size_t>(K), 0.0);
    for (const Factor& f : factors_) {
        switch (f.kind) {
            case FactorKind::geom_pole: {
                double ak = 1.0;
                for (int k = 1; k <= K; ++k) {
                    ak *= f.param;
                    lc[k - 1] += ak / k;
                }
                break;
            }
            case FactorKind::lin_zero: {
                double ak = 1.0;
                for (int k = 1; k <= K; ++k) {
                    ak *= f.param;
                    lc[k - 1] -= ak / k;
                }
                break;
            }
            case FactorKind::exp:
                lc[0] += f.param;
                break;
        }
    }
    return lc;
}

std::complex<double> Specialization::eval(std::complex<double> z) const {
    std::complex<double> u = (orient_ == Orientation::plus) ? z : 1.0 / z;
    std::complex<double> v = 1.0;
    for (const Factor& f : factors_) {
        switch (f.kind) {
            case FactorKind::geom_pole: {
                std::complex<double> d = 1.0 - f.param * u;
                if (std::abs(d) < 1e-12)
                    throw std::runtime_error("Specialization::eval: pole proximity");
                v /= d;
                break;
            }
            case FactorKind::lin_zero:
                v *= 1.0 - f.param * u;
                break;
            case FactorKind::exp:
                v *= std::exp(f.param * u);
                break;
        }
    }
    return v;
}

double Specialization::max_abs_param() const {
    double m = 0.0;
    for (const Factor& f : factors_)
        if (f.kind != FactorKind::exp) m = std::max(m, std::abs(f.param));
    return m;
}

Specialization geom_pole(Orientation o, double a) {
    return Specialization(o, {Factor{FactorKind::geom_pole, a}});
}

Specialization exp_factor(Orientation o, double c) {
    return Specialization(o, {Factor{FactorKind::exp, c}});
}

double commutation_constant(const Specialization& phi_plus,
                            const Specialization& psi_minus, int K) {
    if (phi_plus.orientation() != Orientation::plus ||
        psi_minus.orientation() != Orientation::minus)
        throw std::invalid_argument("commutation_constant: need a (plus, minus) pair");
    if (phi_plus.trivial() || psi_minus.trivial()) return 1.0;
    auto a = phi_plus.log_coeffs(K + 1);
    auto b = psi_minus.log_coeffs(K + 1);
    double s = 0.0;
    for (int k = 1; k <= K; ++k) s += k * a[k - 1] * b[k - 1];
    if (std::abs((K + 1.0) * a[K] * b[K]) > 1e-14)
        throw std::runtime_error("commutation_constant: truncation tail above 1e-14");
    return std::exp(s);
}

}  // namespace schurproc
