#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace branch2 {

using Cx = std::complex<double>;

// Linear fractional transformation z -> (az+b)/(cz+d), stored as an SL2(C)
// matrix and treated projectively: f and -f are the same map.
class MobiusMap {
public:
    MobiusMap() = default;
    MobiusMap(Cx a, Cx b, Cx c, Cx d);

    Cx a() const { return a_; }
    Cx b() const { return b_; }
    Cx c() const { return c_; }
    Cx d() const { return d_; }

    static MobiusMap scaling(Cx multiplier);     // z -> m z
    static MobiusMap translation(Cx shift);      // z -> z + c
    static MobiusMap affine(Cx multiplier, Cx shift);  // z -> m z + c

    MobiusMap inverse() const;
    MobiusMap pow(std::int64_t n) const;

    // nullopt stands for the point at infinity.
    std::optional<Cx> apply(std::optional<Cx> z) const;

    Cx trace() const { return a_ + d_; }
    bool equal_up_to_sign(const MobiusMap& o, double tol) const;

    std::string str() const;

private:
    Cx a_{1.0}, b_{0.0}, c_{0.0}, d_{1.0};
};

MobiusMap compose(const MobiusMap& f, const MobiusMap& g);

// Entrywise maximum modulus of f - g, minimized over the sign lift of g.
double norm_up_to_sign(const MobiusMap& f, const MobiusMap& g);

enum class MapClass { Identity, Parabolic, Elliptic, Loxodromic };

std::string map_class_name(MapClass c);

// Trace classification with tolerance 1e-9 on the imaginary part and on the
// distance of the trace from +-2.
MapClass classify(const MobiusMap& f);

// For a loxodromic map: l with multiplier e^l, Re l > 0, Im l in (-pi, pi].
Cx complex_length(const MobiusMap& f);

// The one-parameter family of structures on the torus cross the line:
// finite w scales by e^{2 pi i / w} and e^{2 pi zeta i / w}; w = infinity
// degenerates to the parabolic pair z+1, z+zeta. E conjugates the finite
// family towards the parabolic one and exists when sin(pi/w) != 0.
struct FillingFamily {
    std::optional<Cx> w;  // nullopt = infinity
    Cx zeta{0.0, 1.0};
    MobiusMap A;
    MobiusMap B;
    std::optional<MobiusMap> E;
};

FillingFamily filling_family(Cx w, Cx zeta = Cx(0.0, 1.0));
FillingFamily filling_family_at_infinity(Cx zeta = Cx(0.0, 1.0));

// (|E A E^-1 - (z+1)|, |E B E^-1 - closed form|) in the up-to-sign norm.
std::pair<double, double> conjugation_residual(const FillingFamily& fam);

// 2 pi / (p^2 + q^2) for coprime (p, q).
double core_geodesic_length(std::int64_t p, std::int64_t q);

}  // namespace branch2
