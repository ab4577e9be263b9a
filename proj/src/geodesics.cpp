#include "arithgeo/geodesics.hpp"

#include <cmath>
#include <numbers>

#include "arithgeo/errors.hpp"

namespace arithgeo {

std::string to_string(TraceClass c) {
    switch (c) {
        case TraceClass::Elliptic: return "elliptic";
        case TraceClass::Parabolic: return "parabolic";
        case TraceClass::LoxodromicNonHyperbolic: return "loxodromic";
        case TraceClass::Hyperbolic: return "hyperbolic";
    }
    return "?";
}

TraceClass classify_trace(std::complex<double> t) {
    if (!std::isfinite(t.real()) || !std::isfinite(t.imag())) throw PreconditionError("trace must be finite");
    if (t.imag() != 0.0) return TraceClass::LoxodromicNonHyperbolic;
    const double a = std::abs(t.real());
    if (a < 2.0) return TraceClass::Elliptic;
    if (a == 2.0) return TraceClass::Parabolic;
    return TraceClass::Hyperbolic;
}

GeodesicLength length_from_trace(std::complex<double> t) {
    const auto cls = classify_trace(t);
    if (cls == TraceClass::Elliptic || cls == TraceClass::Parabolic)
        throw PreconditionError(to_string(cls) + " trace has no translation length");
    const auto s = std::sqrt(t * t - 4.0);
    const auto l1 = (t + s) / 2.0;
    const auto l2 = (t - s) / 2.0;
    const auto lambda = std::abs(l1) >= std::abs(l2) ? l1 : l2;

    GeodesicLength out;
    out.length = 2.0 * std::log(std::abs(lambda));
    if (cls == TraceClass::Hyperbolic) return out;
    double h = 2.0 * std::arg(lambda);
    if (h > std::numbers::pi) h -= 2.0 * std::numbers::pi;
    if (h <= -std::numbers::pi) h += 2.0 * std::numbers::pi;
    out.holonomy = h;
    return out;
}

bool surface_obstruction(const RelQuadExt& ext) { return !is_galois_over_Q(ext); }

namespace {

i64 floor_div(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

RealQuadraticUnit fundamental_unit(i64 d) {
    if (d <= 0 || !is_fundamental_discriminant(d))
        throw PreconditionError(std::to_string(d) + " is not a positive fundamental discriminant");
    const i64 s = static_cast<i64>(isqrt(static_cast<u64>(d)));
    const i64 b0 = d % 2;

    // Continued fraction of omega = (b0 + sqrt d)/2 through complete
    // quotients (P + sqrt d)/Q; convergent p/q gives (2p - q b0 + q sqrt d)/2.
    i64 P = b0, Q = 2;
    BigInt p_prev = 1, p = 0, q_prev = 0, q = 1;
    for (;;) {
        const i64 a = Q > 0 ? floor_div(P + s, Q) : -(floor_div(P + s, -Q) + 1);
        BigInt p_next = a * p_prev + p;
        BigInt q_next = a * q_prev + q;
        p = std::move(p_prev);
        q = std::move(q_prev);
        p_prev = std::move(p_next);
        q_prev = std::move(q_next);

        RealQuadraticUnit u{d, 2 * p_prev - q_prev * b0, q_prev, 0};
        if (u.a > 0) {
            const BigInt n4 = u.a * u.a - BigInt(d) * u.b * u.b;
            if (n4 == 4 || n4 == -4) {
                u.norm = n4 > 0 ? 1 : -1;
                return u;
            }
        }
        P = a * Q - P;
        Q = (d - P * P) / Q;
    }
}

double log_unit(const RealQuadraticUnit& u) {
    // a = eps + norm/eps, so eps = (a + sqrt(a^2 - 4 norm))/2
    const std::size_t bits = boost::multiprecision::msb(u.a);
    if (bits < 900) {
        const long double a = u.a.convert_to<long double>();
        return static_cast<double>(std::log((a + std::sqrt(a * a - 4.0L * u.norm)) / 2.0L));
    }
    const std::size_t shift = bits - 60;
    const double top = static_cast<double>(static_cast<BigInt>(u.a >> shift).convert_to<long double>());
    // eps = a - norm/eps differs from a by far less than one ulp here
    return std::log(top) + static_cast<double>(shift) * std::numbers::ln2;
}

GeodesicLength geodesic_length_real_quadratic(i64 d) {
    const auto u = fundamental_unit(d);
    return {(u.norm == 1 ? 2.0 : 4.0) * log_unit(u), 0.0};
}

HeightLengthBounds height_and_length_bounds(const BigInt& abs_disc, std::optional<int> n) {
    if (abs_disc < 1) throw PreconditionError("|disc| must be positive");
    HeightLengthBounds out;
    const BigInt sq = abs_disc * abs_disc;
    out.height_bound = (BigInt(1) << 44) * 81 * sq;
    out.length_bound = (BigInt(1) << 47) * 81 * sq;
    if (n) {
        if (*n < 1) throw PreconditionError("n must be positive");
        out.length_over_n16 = out.length_bound.convert_to<double>() / std::pow(static_cast<double>(*n), 16.0);
    }
    return out;
}

QuarticElement::QuarticElement(i64 delta_k, i64 x, bool conjugate, std::array<BigInt, 4> coords)
    : delta_(delta_k), x_(x), conj_(conjugate), c_(std::move(coords)) {}

QuarticElement::QuarticElement(const RelQuadExt& ext, const std::array<i64, 4>& coords)
    : QuarticElement(ext.delta_k(), ext.x(), ext.is_conjugate(),
                     {BigInt(coords[0]), BigInt(coords[1]), BigInt(coords[2]), BigInt(coords[3])}) {}

QuarticElement QuarticElement::operator*(const QuarticElement& o) const {
    std::array<BigInt, 7> r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i + j] += c_[i] * o.c_[j];
    // t^4 = 2x t^2 - N
    const BigInt two_x = 2 * BigInt(x_);
    const BigInt norm = BigInt(x_) * x_ - delta_;
    for (int k = 6; k >= 4; --k) {
        r[k - 2] += two_x * r[k];
        r[k - 4] -= norm * r[k];
    }
    return QuarticElement(delta_, x_, conj_, {r[0], r[1], r[2], r[3]});
}

QuarticElement QuarticElement::pow(unsigned m) const {
    QuarticElement result(delta_, x_, conj_, {BigInt(1), BigInt(0), BigInt(0), BigInt(0)});
    QuarticElement base = *this;
    while (m > 0) {
        if (m & 1) result = result * base;
        base = base * base;
        m >>= 1;
    }
    return result;
}

std::pair<BigInt, BigInt> QuarticElement::relative_norm() const {
    // u = A + B t with A, B in Z[s], s = sqrt(delta), beta = t^2 = x + sign*s
    using Zs = std::pair<BigInt, BigInt>;
    const int sign = conj_ ? -1 : 1;
    auto mul = [&](const Zs& a, const Zs& b) -> Zs {
        return {a.first * b.first + BigInt(delta_) * a.second * b.second,
                a.first * b.second + a.second * b.first};
    };
    const Zs beta{BigInt(x_), BigInt(sign)};
    const Zs A{c_[0] + c_[2] * x_, c_[2] * sign};
    const Zs B{c_[1] + c_[3] * x_, c_[3] * sign};
    const Zs a2 = mul(A, A);
    const Zs bb = mul(beta, mul(B, B));
    return {a2.first - bb.first, a2.second - bb.second};
}

std::array<std::complex<double>, 4> QuarticElement::conjugates() const {
    const std::complex<double> root_delta(0.0, std::sqrt(static_cast<double>(-delta_)));
    const auto beta = static_cast<double>(x_) + root_delta;
    const auto t1 = std::sqrt(beta);
    const auto t2 = std::sqrt(std::conj(beta));
    const std::array<std::complex<double>, 4> thetas{t1, -t1, t2, -t2};
    std::array<std::complex<double>, 4> out;
    for (int i = 0; i < 4; ++i) {
        std::complex<double> acc = 0.0;
        for (int k = 3; k >= 0; --k) acc = acc * thetas[i] + c_[k].convert_to<double>();
        out[i] = acc;
    }
    return out;
}

double QuarticElement::log_height() const {
    double h = 0.0;
    for (const auto& z : conjugates()) h += std::log(std::max(1.0, std::abs(z)));
    return h / 4.0;
}

bool QuarticElement::is_root_of_unity() const {
    for (const auto& z : conjugates())
        if (std::abs(std::abs(z) - 1.0) > 1e-9) return false;
    // orders of roots of unity in a quartic field
    const QuarticElement one(delta_, x_, conj_, {BigInt(1), BigInt(0), BigInt(0), BigInt(0)});
    for (unsigned m : {1u, 2u, 3u, 4u, 5u, 6u, 8u, 10u, 12u})
        if (pow(m) == one) return true;
    return false;
}

namespace {

struct FastNorm {
    i128 delta, x, sign;

    // Norm_{L/k}(u) == 1, in i128.
    bool is_one(const std::array<i64, 4>& c) const {
        const i128 a0 = c[0] + c[2] * x, a1 = c[2] * sign;
        const i128 b0 = c[1] + c[3] * x, b1 = c[3] * sign;
        const i128 a2_0 = a0 * a0 + delta * a1 * a1, a2_1 = 2 * a0 * a1;
        const i128 b2_0 = b0 * b0 + delta * b1 * b1, b2_1 = 2 * b0 * b1;
        const i128 bb_0 = x * b2_0 + delta * sign * b2_1;
        const i128 bb_1 = x * b2_1 + sign * b2_0;
        return a2_0 - bb_0 == 1 && a2_1 - bb_1 == 0;
    }
};

}  // namespace

std::optional<NormOneUnit> norm_one_unit_search(const RelQuadExt& ext, u64 height_cap) {
    if (height_cap > 2'000) throw PreconditionError("height_cap above 2000 is not supported");
    const FastNorm fast{ext.delta_k(), ext.x(), ext.is_conjugate() ? -1 : 1};
    const i64 cap = static_cast<i64>(height_cap);
    for (i64 h = 1; h <= cap; ++h) {
        std::array<i64, 4> c{};
        for (c[0] = -h; c[0] <= h; ++c[0])
            for (c[1] = -h; c[1] <= h; ++c[1])
                for (c[2] = -h; c[2] <= h; ++c[2])
                    for (c[3] = -h; c[3] <= h; ++c[3]) {
                        if (std::max({std::abs(c[0]), std::abs(c[1]), std::abs(c[2]), std::abs(c[3])}) != h)
                            continue;
                        if (!fast.is_one(c)) continue;
                        const QuarticElement u(ext, c);
                        if (u.is_root_of_unity()) continue;
                        if (u.relative_norm() != std::pair<BigInt, BigInt>{1, 0})
                            throw VerificationFailure("fast and exact relative norms disagree");
                        return NormOneUnit{c, u.log_height()};
                    }
    }
    return std::nullopt;
}

}  // namespace arithgeo
