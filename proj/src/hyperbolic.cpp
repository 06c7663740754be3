#include "branch2/hyperbolic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace branch2 {

namespace {

constexpr double kDetTol = 1e-12;
constexpr double kClassTol = 1e-9;
const Cx kI(0.0, 1.0);

double ent_norm(Cx a, Cx b, Cx c, Cx d) {
    return std::max(std::max(std::abs(a), std::abs(b)),
                    std::max(std::abs(c), std::abs(d)));
}

std::string fmt_cx(Cx z) {
    std::ostringstream out;
    out << z.real();
    if (z.imag() >= 0.0)
        out << "+" << z.imag() << "i";
    else
        out << "-" << -z.imag() << "i";
    return out.str();
}

}  // namespace

MobiusMap::MobiusMap(Cx a, Cx b, Cx c, Cx d) {
    const Cx det = a * d - b * c;
    if (!(std::abs(det) > kDetTol))
        throw std::domain_error("mobius map needs a nonzero determinant");
    const Cx s = std::sqrt(det);
    a_ = a / s;
    b_ = b / s;
    c_ = c / s;
    d_ = d / s;
}

MobiusMap MobiusMap::scaling(Cx multiplier) {
    return affine(multiplier, 0.0);
}

MobiusMap MobiusMap::translation(Cx shift) {
    return MobiusMap(1.0, shift, 0.0, 1.0);
}

MobiusMap MobiusMap::affine(Cx multiplier, Cx shift) {
    if (!(std::abs(multiplier) > kDetTol))
        throw std::domain_error("affine map needs a nonzero multiplier");
    const Cx s = std::sqrt(multiplier);
    return MobiusMap(s, shift / s, 0.0, 1.0 / s);
}

MobiusMap MobiusMap::inverse() const {
    return MobiusMap(d_, -b_, -c_, a_);
}

MobiusMap MobiusMap::pow(std::int64_t n) const {
    if (n < 0) return inverse().pow(-n);
    MobiusMap acc;
    MobiusMap base = *this;
    while (n > 0) {
        if (n & 1) acc = compose(acc, base);
        n >>= 1;
        if (n > 0) base = compose(base, base);
    }
    return acc;
}

std::optional<Cx> MobiusMap::apply(std::optional<Cx> z) const {
    constexpr double tiny = 1e-14;
    if (!z) {
        if (std::abs(c_) < tiny) return std::nullopt;
        return a_ / c_;
    }
    const Cx num = a_ * *z + b_;
    const Cx den = c_ * *z + d_;
    if (std::abs(den) < tiny * std::max(1.0, std::abs(num)))
        return std::nullopt;
    return num / den;
}

bool MobiusMap::equal_up_to_sign(const MobiusMap& o, double tol) const {
    return norm_up_to_sign(*this, o) < tol;
}

std::string MobiusMap::str() const {
    return "[" + fmt_cx(a_) + ", " + fmt_cx(b_) + "; " + fmt_cx(c_) + ", " +
           fmt_cx(d_) + "]";
}

MobiusMap compose(const MobiusMap& f, const MobiusMap& g) {
    return MobiusMap(f.a() * g.a() + f.b() * g.c(),
                     f.a() * g.b() + f.b() * g.d(),
                     f.c() * g.a() + f.d() * g.c(),
                     f.c() * g.b() + f.d() * g.d());
}

double norm_up_to_sign(const MobiusMap& f, const MobiusMap& g) {
    const double plus = ent_norm(f.a() - g.a(), f.b() - g.b(),
                                 f.c() - g.c(), f.d() - g.d());
    const double minus = ent_norm(f.a() + g.a(), f.b() + g.b(),
                                  f.c() + g.c(), f.d() + g.d());
    return std::min(plus, minus);
}

std::string map_class_name(MapClass c) {
    switch (c) {
        case MapClass::Identity: return "identity";
        case MapClass::Parabolic: return "parabolic";
        case MapClass::Elliptic: return "elliptic";
        case MapClass::Loxodromic: return "loxodromic";
    }
    return "unknown";
}

MapClass classify(const MobiusMap& f) {
    const Cx t = f.trace();
    if (std::abs(t.imag()) <= kClassTol) {
        const double r = std::abs(t.real());
        if (std::abs(r - 2.0) <= kClassTol) {
            if (f.equal_up_to_sign(MobiusMap(), kClassTol))
                return MapClass::Identity;
            return MapClass::Parabolic;
        }
        if (r < 2.0) return MapClass::Elliptic;
    }
    return MapClass::Loxodromic;
}

Cx complex_length(const MobiusMap& f) {
    if (classify(f) != MapClass::Loxodromic)
        throw std::domain_error("complex length needs a loxodromic map");
    const Cx t = f.trace();
    const Cx disc = std::sqrt(t * t - 4.0);
    Cx lambda = (t + disc) / 2.0;
    if (std::abs(lambda) < 1.0) lambda = (t - disc) / 2.0;
    Cx len = 2.0 * std::log(lambda);
    const double two_pi = 2.0 * std::numbers::pi_v<double>;
    while (len.imag() > std::numbers::pi_v<double>)
        len -= Cx(0.0, two_pi);
    while (len.imag() <= -std::numbers::pi_v<double>)
        len += Cx(0.0, two_pi);
    return len;
}

FillingFamily filling_family(Cx w, Cx zeta) {
    if (!(std::abs(w) > 0.0))
        throw std::domain_error("w must be nonzero; use the family at infinity");
    if (!(zeta.imag() > 0.0))
        throw std::domain_error("zeta must have positive imaginary part");
    const double pi = std::numbers::pi_v<double>;
    FillingFamily fam;
    fam.w = w;
    fam.zeta = zeta;
    fam.A = MobiusMap::scaling(std::exp(2.0 * pi * kI / w));
    fam.B = MobiusMap::scaling(std::exp(2.0 * pi * kI * zeta / w));
    const Cx s = std::sin(pi / w);
    if (std::abs(s) > kDetTol)
        fam.E = MobiusMap::affine(-(kI / 2.0) / s, (kI / 2.0) / s);
    return fam;
}

FillingFamily filling_family_at_infinity(Cx zeta) {
    if (!(zeta.imag() > 0.0))
        throw std::domain_error("zeta must have positive imaginary part");
    FillingFamily fam;
    fam.zeta = zeta;
    fam.A = MobiusMap::translation(1.0);
    fam.B = MobiusMap::translation(zeta);
    return fam;
}

std::pair<double, double> conjugation_residual(const FillingFamily& fam) {
    if (!fam.E || !fam.w)
        throw std::domain_error("family has no conjugating map");
    const MobiusMap& e = *fam.E;
    const MobiusMap einv = e.inverse();
    const MobiusMap conj_a = compose(compose(e, fam.A), einv);
    const double first = norm_up_to_sign(conj_a, MobiusMap::translation(1.0));

    const double pi = std::numbers::pi_v<double>;
    const Cx w = *fam.w;
    const Cx half = pi * kI / w;
    const Cx shift = std::exp(half * fam.zeta) *
                     (std::exp(half * fam.zeta) - std::exp(-half * fam.zeta)) /
                     (std::exp(half) - std::exp(-half));
    const MobiusMap target =
        MobiusMap::affine(std::exp(2.0 * half * fam.zeta), shift);
    const MobiusMap conj_b = compose(compose(e, fam.B), einv);
    const double second = norm_up_to_sign(conj_b, target);
    return {first, second};
}

double core_geodesic_length(std::int64_t p, std::int64_t q) {
    if (p == 0 && q == 0)
        throw std::domain_error("core geodesic needs a nonzero slope");
    if (std::gcd(p, q) != 1)
        throw std::domain_error("core geodesic needs coprime p, q");
    const double n = double(p) * double(p) + double(q) * double(q);
    return 2.0 * std::numbers::pi_v<double> / n;
}

}  // namespace branch2
