#pragma once

// The five definitions of volume, their induced k-densities, the convex
// extension of the densities of the new definition, and its isoperimetrix.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "normvol/body.hpp"
#include "normvol/geomcore.hpp"
#include "normvol/optmeasure.hpp"

namespace normvol {

enum class Definition { Busemann, HolmesThompson, MassStar, Ivanov, New };

std::string_view to_string(Definition d);
/// Accepts busemann, holmes_thompson, mass_star, ivanov, new.
Definition parse_definition(std::string_view name);
std::vector<Definition> all_definitions();

/// A unit ball together with its polar, which every definition consumes.
struct UnitBall {
    SymmetricPolytope body;
    SymmetricPolytope polar;

    UnitBall(SymmetricPolytope b);  // NOLINT(google-explicit-constructor)
    int dim() const noexcept { return body.dim(); }
};

/// Default multi-start count for the convex extension mu~_k.
inline constexpr int kDensityRestarts = 8;

OptOptions density_options(std::uint64_t seed = 0);

/// omega_n^{n-1} / omega_{n-1}^n (n/2)^n: the factor in front of
/// vol(B) max_nu vol(Gamma_nu B°).
double new_volume_constant(int n);

/// omega_k^{k-1} / omega_{k-1}^k k^k / k!: the factor in mu~_k.
double density_constant(int k);

/// Scale of the isoperimetrix, omega_{n-1}^{n-2}/omega_{n-2}^{n-1} (n-1)^{n-1}/(n-1)!.
double isoperimetrix_constant(int n);

double v_busemann(const UnitBall& b);
double v_holmes_thompson(const UnitBall& b);
double v_mass_star(const UnitBall& b);
double v_ivanov(const UnitBall& b);

struct NewVolume {
    double value = 0.0;
    OptResult optimum;  // weights on b.polar.generators()
};

NewVolume v_new_detailed(const UnitBall& b, const OptOptions& opts = {});
double v_new(const UnitBall& b, const OptOptions& opts = {});

/// Associated affine invariant of the given definition.
double volume_invariant(Definition d, const UnitBall& b, const OptOptions& opts = {});

/// Shape matrix A of the John ellipsoid of B, given as the polar of the
/// minimal centered ellipsoid {xi : xi^T A xi <= 1} enclosing B°.
Matrix john_ellipsoid_dual_shape(const UnitBall& b, double tol = 1e-10, int max_rounds = 100000);

struct VolumeReport {
    std::string body_id;
    std::map<std::string, double> values;
    std::optional<OptResult> new_optimum;
};

VolumeReport compute_report(const UnitBall& b, std::string body_id, std::span<const Definition> defs,
                            const OptOptions& opts = {});

/// mu_k(a) for the simple k-vector a = a_1 ^ ... ^ a_k under the given
/// definition: the definition applied to the section of B by span(a).
double induced_density(Definition d, const UnitBall& b, std::span<const Vector> a, const OptOptions& opts = {});

struct DensityValue {
    double value = 0.0;
    OptResult optimum;
};

/// Convex extension mu~_k(tau) = c_k max_w k! sum_S prod w_i |<xi_S, tau>|.
DensityValue mu_tilde_detailed(const UnitBall& b, const KVector& tau, const OptOptions& opts = density_options());
double mu_tilde(const UnitBall& b, const KVector& tau, const OptOptions& opts = density_options());

/// h(I_mu B, xi) = mu~_{n-1}(iota(xi)).
double isoperimetrix_support(const UnitBall& b, const Vector& xi, const OptOptions& opts = density_options());

/// A_mu(K): sum over facets of the mu~_{n-1}-area of the facet (n-1)-vector.
double mu_surface_area(const UnitBall& b, const SymmetricPolytope& k, const OptOptions& opts = density_options());

/// n V_1(K, I_mu B), evaluated from the facets of K and the isoperimetrix
/// support function.
double isoperimetrix_mixed_area(const UnitBall& b, const SymmetricPolytope& k,
                                const OptOptions& opts = density_options());

/// Area-weighted (n-1)-vector of a facet, spanned by its own edges.
KVector facet_vector(const FacetData& facet, int dim);

}  // namespace normvol
