#pragma once

#include <complex>
#include <string>
#include <vector>

namespace schurproc {

/// Elementary analytic factor of a specialization, as a function of the
/// oriented series variable u (u = z for plus, u = 1/z for minus):
///   geom_pole(a): (1 - a u)^-1,  lin_zero(a): (1 - a u),  exp(c): e^{c u}.
enum class FactorKind { geom_pole, lin_zero, exp };

struct Factor {
    FactorKind kind;
    double param;
    auto operator<=>(const Factor&) const = default;
};

enum class Orientation { plus, minus };

/// A specialization phi^+ (series in z) or phi^- (series in 1/z), stored as a
/// finite product of elementary factors with constant term 1.
class Specialization {
public:
    explicit Specialization(Orientation orient) : orient_(orient) {}
    Specialization(Orientation orient, std::vector<Factor> factors);

    Orientation orientation() const { return orient_; }
    const std::vector<Factor>& factors() const { return factors_; }
    bool trivial() const { return factors_.empty(); }

    Specialization& add(Factor f);

    /// Product of two specializations of the same orientation.
    Specialization concat(const Specialization& other) const;

    /// Taylor coefficients [h_0 ... h_n] of the product in the oriented variable.
    std::vector<double> h_coeffs(int n) const;

    /// Oriented log coefficients (log phi)_{+-k} for k = 1..K (index k-1).
    /// geom_pole(a): a^k/k, lin_zero(a): -a^k/k, exp(c): c at k=1.
    std::vector<double> log_coeffs(int K) const;

    /// Value of the factor product as a function of z (minus side evaluates
    /// its factors at 1/z). Throws on pole proximity below 1e-12.
    std::complex<double> eval(std::complex<double> z) const;

    /// Largest |a| over geom_pole/lin_zero factors (pole/zero radius data);
    /// 0 when only entire factors are present.
    double max_abs_param() const;

private:
    Orientation orient_;
    std::vector<Factor> factors_;
};

Specialization geom_pole(Orientation o, double a);
Specialization exp_factor(Orientation o, double c);

/// exp(sum_{k=1..K} k (log phi)_k (log psi)_{-k}) for a plus/minus pair; the
/// constant by which the two vertex-operator orderings differ.
/// Throws if the k=K tail term exceeds 1e-14.
double commutation_constant(const Specialization& phi_plus,
                            const Specialization& psi_minus, int K);

}  // namespace schurproc
