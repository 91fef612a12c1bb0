#include "axial/verifier.hpp"

#include "axial/constructions.hpp"
#include "axial/error.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace axial {

namespace {

// Expression helpers over one frame: keeps the suite bodies close to the
// displayed identities.
struct Ctx {
    const AlgebraTable& t;
    const TwoGeneratedFrame& f;
    Element a, b;

    Ctx(const AlgebraTable& table, const TwoGeneratedFrame& frame)
        : t(table), f(frame), a(frame.profile_a.axis), b(frame.profile_b.axis)
    {
    }

    Element mul(const Element& u, const Element& v) const { return multiply(t, u, v); }
    Element sq(const Element& u) const { return multiply(t, u, u); }
    static Element add(const Element& u, const Element& v) { return vec_add(u, v); }
    static Element sub(const Element& u, const Element& v) { return vec_sub(u, v); }
    static Element sc(const Rational& s, const Element& v) { return vec_scale(s, v); }
};

} // namespace

SigmaScalars sigma_scalars(const AlgebraTable& table, const TwoGeneratedFrame& frame)
{
    Ctx c(table, frame);
    SigmaScalars s;
    s.sigma = Ctx::sub(Ctx::sub(c.mul(c.a, c.b), Ctx::sc(frame.delta_p, c.a)),
                       Ctx::sc(frame.lambda, c.b));
    s.gamma_scalar = frame.alpha_b * (Rational(1) - frame.lambda) - frame.delta_p;
    s.rho_scalar = frame.beta_a * (Rational(1) - frame.delta_p) - frame.lambda;
    return s;
}

VerificationReport verify_bab(const AlgebraTable& table, const TwoGeneratedFrame& frame)
{
    Ctx c(table, frame);
    const Rational &L = frame.lambda, &D = frame.delta, &A = frame.alpha_b;
    const Element &x = frame.x, &y = frame.y, &z = frame.z, &cc = frame.c;

    Element bab = c.mul(c.b, c.mul(c.a, c.b));
    TwoSidedDecomposition d = decompose(frame.profile_a, bab);

    VerificationReport r;
    auto entry = [&](const char* part, const Element& proj, const Element& first,
                     const Element& second) {
        r.add_residual(std::string("bab[") + part + "]:proj", Ctx::sub(proj, first));
        r.add_residual(std::string("bab[") + part + "]:alt", Ctx::sub(first, second));
    };

    // ++ component: alpha a + (bab)_{0,0} = alpha_b^2 a + L x^2 + L z^2
    //                                     = alpha_b^2 a + D y^2 + D z^2
    entry("pp", Ctx::add(Ctx::sc(d.alpha, c.a), d.comp_00),
          Ctx::add(Ctx::sc(A * A, c.a), Ctx::add(Ctx::sc(L, c.sq(x)), Ctx::sc(L, c.sq(z)))),
          Ctx::add(Ctx::sc(A * A, c.a), Ctx::add(Ctx::sc(D, c.sq(y)), Ctx::sc(D, c.sq(z)))));

    // (lambda, 0): A L^2 x + L cx + L yz = D yz + D zy + A L x
    entry("mp", d.comp_L0,
          Ctx::add(Ctx::sc(A * L * L, x),
                   Ctx::add(Ctx::sc(L, c.mul(cc, x)), Ctx::sc(L, c.mul(y, z)))),
          Ctx::add(Ctx::add(Ctx::sc(D, c.mul(y, z)), Ctx::sc(D, c.mul(z, y))),
                   Ctx::sc(A * L, x)));

    // (0, delta): L xz + L zx + A D y = A D^2 y + D yc + D zx
    entry("pm", d.comp_0D,
          Ctx::add(Ctx::add(Ctx::sc(L, c.mul(x, z)), Ctx::sc(L, c.mul(z, x))),
                   Ctx::sc(A * D, y)),
          Ctx::add(Ctx::sc(A * D * D, y),
                   Ctx::add(Ctx::sc(D, c.mul(y, cc)), Ctx::sc(D, c.mul(z, x)))));

    // (lambda, delta): A (L^2 + D) z + L cz + L yx = A (L + D^2) z + D zc + D yx
    entry("mm", d.comp_LD,
          Ctx::add(Ctx::sc(A * (L * L + D), z),
                   Ctx::add(Ctx::sc(L, c.mul(cc, z)), Ctx::sc(L, c.mul(y, x)))),
          Ctx::add(Ctx::sc(A * (L + D * D), z),
                   Ctx::add(Ctx::sc(D, c.mul(z, cc)), Ctx::sc(D, c.mul(y, x)))));
    return r;
}

VerificationReport verify_bsquare(const AlgebraTable& table, const TwoGeneratedFrame& frame)
{
    Ctx c(table, frame);
    const Rational &L = frame.lambda, &D = frame.delta, &A = frame.alpha_b;
    const Element &x = frame.x, &y = frame.y, &z = frame.z, &cc = frame.c;

    VerificationReport r;
    // alpha_b a + c = alpha_b^2 a + c^2 + x^2 + y^2 + z^2
    r.add_residual("bsq[pp]",
                   Ctx::sub(Ctx::add(Ctx::sc(A, c.a), cc),
                            Ctx::add(Ctx::sc(A * A, c.a),
                                     Ctx::add(Ctx::add(c.sq(cc), c.sq(x)),
                                              Ctx::add(c.sq(y), c.sq(z))))));
    // x = alpha_b L x + xc + cx + yz + zy
    r.add_residual("bsq[mp]",
                   Ctx::sub(x,
                            Ctx::add(Ctx::sc(A * L, x),
                                     Ctx::add(Ctx::add(c.mul(x, cc), c.mul(cc, x)),
                                              Ctx::add(c.mul(y, z), c.mul(z, y))))));
    // y = alpha_b D y + cy + yc + xz + zx
    r.add_residual("bsq[pm]",
                   Ctx::sub(y,
                            Ctx::add(Ctx::sc(A * D, y),
                                     Ctx::add(Ctx::add(c.mul(cc, y), c.mul(y, cc)),
                                              Ctx::add(c.mul(x, z), c.mul(z, x))))));
    // z = alpha_b (L + D) z + cz + zc + xy + yx
    r.add_residual("bsq[mm]",
                   Ctx::sub(z,
                            Ctx::add(Ctx::sc(A * (L + D), z),
                                     Ctx::add(Ctx::add(c.mul(cc, z), c.mul(z, cc)),
                                              Ctx::add(c.mul(x, y), c.mul(y, x))))));
    return r;
}

VerificationReport verify_abb(const AlgebraTable& table, const TwoGeneratedFrame& frame)
{
    Ctx c(table, frame);
    const Rational &L = frame.lambda, &D = frame.delta, &A = frame.alpha_b, &B = frame.beta_a;
    const Rational &Lp = frame.lambda_p, &Dp = frame.delta_p;
    const Element &x = frame.x, &y = frame.y, &z = frame.z, &cc = frame.c;
    const Rational one(1);

    VerificationReport r;
    // From b(ba): D (y^2 + z^2) = alpha_b(beta_a(1-L') + (L'-alpha_b)) a + beta_a(1-L') c
    r.add_residual("bba[pp]",
                   Ctx::sub(Ctx::sc(D, Ctx::add(c.sq(y), c.sq(z))),
                            Ctx::add(Ctx::sc(A * (B * (one - Lp) + (Lp - A)), c.a),
                                     Ctx::sc(B * (one - Lp), cc))));
    // D (yz + zy) = beta_a (1 - L') x
    r.add_residual("bba[mp]",
                   Ctx::sub(Ctx::sc(D, Ctx::add(c.mul(y, z), c.mul(z, y))),
                            Ctx::sc(B * (one - Lp), x)));
    // D (cy + xz) = (beta_a(1-L') + D(L'-alpha_b)) y
    r.add_residual("bba[pm]",
                   Ctx::sub(Ctx::sc(D, Ctx::add(c.mul(cc, y), c.mul(x, z))),
                            Ctx::sc(B * (one - Lp) + D * (Lp - A), y)));
    // D (cz + xy) = (beta_a(1-L') + D(L'-alpha_b-alpha_b L)) z
    r.add_residual("bba[mm]",
                   Ctx::sub(Ctx::sc(D, Ctx::add(c.mul(cc, z), c.mul(x, y))),
                            Ctx::sc(B * (one - Lp) + D * (Lp - A - A * L), z)));

    // From (ab)b: L (x^2 + z^2) = alpha_b(beta_a(1-D') + (D'-alpha_b)) a + beta_a(1-D') c
    r.add_residual("abb[pp]",
                   Ctx::sub(Ctx::sc(L, Ctx::add(c.sq(x), c.sq(z))),
                            Ctx::add(Ctx::sc(A * (B * (one - Dp) + (Dp - A)), c.a),
                                     Ctx::sc(B * (one - Dp), cc))));
    // L (xc + zy) = (beta_a(1-D') + L(D'-alpha_b)) x
    r.add_residual("abb[mp]",
                   Ctx::sub(Ctx::sc(L, Ctx::add(c.mul(x, cc), c.mul(z, y))),
                            Ctx::sc(B * (one - Dp) + L * (Dp - A), x)));
    // L (xz + zx) = beta_a (1 - D') y
    r.add_residual("abb[pm]",
                   Ctx::sub(Ctx::sc(L, Ctx::add(c.mul(x, z), c.mul(z, x))),
                            Ctx::sc(B * (one - Dp), y)));
    // L (zc + xy) = (beta_a(1-D') + L(D'-alpha_b-D alpha_b)) z
    r.add_residual("abb[mm]",
                   Ctx::sub(Ctx::sc(L, Ctx::add(c.mul(z, cc), c.mul(x, y))),
                            Ctx::sc(B * (one - Dp) + L * (Dp - A - D * A), z)));

    // Drivers: b(ba) = beta_a(1-L') b + L'(ba) and (ab)b = beta_a(1-D') b + D'(ab)
    Element ba = c.mul(c.b, c.a);
    Element ab = c.mul(c.a, c.b);
    r.add_residual("driver:bba",
                   Ctx::sub(c.mul(c.b, ba),
                            Ctx::add(Ctx::sc(B * (one - Lp), c.b), Ctx::sc(Lp, ba))));
    r.add_residual("driver:abb",
                   Ctx::sub(c.mul(ab, c.b),
                            Ctx::add(Ctx::sc(B * (one - Dp), c.b), Ctx::sc(Dp, ab))));
    return r;
}

VerificationReport verify_sigma(const AlgebraTable& table, const TwoGeneratedFrame& frame)
{
    Ctx c(table, frame);
    SigmaScalars s = sigma_scalars(table, frame);
    const Rational &L = frame.lambda, &Dp = frame.delta_p, &A = frame.alpha_b;
    const Element &y = frame.y, &cc = frame.c;

    VerificationReport r;
    // sigma = gamma a - L (y + c)
    r.add_residual("sigma:a-form",
                   Ctx::sub(s.sigma, Ctx::sub(Ctx::sc(s.gamma_scalar, c.a),
                                              Ctx::sc(L, Ctx::add(y, cc)))));
    // sigma = rho b - D' (c' + x')
    r.add_residual("sigma:b-form",
                   Ctx::sub(s.sigma,
                            Ctx::sub(Ctx::sc(s.rho_scalar, c.b),
                                     Ctx::sc(Dp, Ctx::add(frame.c_prime, frame.x_prime)))));
    // L (c^2 + y^2) = alpha_b (gamma - rho) a - rho c
    r.add_residual("sigma:csq",
                   Ctx::sub(Ctx::sc(L, Ctx::add(c.sq(cc), c.sq(y))),
                            Ctx::sub(Ctx::sc(A * (s.gamma_scalar - s.rho_scalar), c.a),
                                     Ctx::sc(s.rho_scalar, cc))));
    return r;
}

VerificationReport verify_offdiag(const AlgebraTable& table, const TwoGeneratedFrame& frame)
{
    Ctx c(table, frame);
    const Rational &L = frame.lambda, &D = frame.delta, &A = frame.alpha_b, &B = frame.beta_a;
    const Rational &Lp = frame.lambda_p, &Dp = frame.delta_p;
    const Rational one(1);
    const std::size_t dim = frame.closure.dim();
    const std::string dim_note = "closure dim = " + std::to_string(dim);

    VerificationReport r;
    // (beta_a(1-D') + beta_a(1-L')) x = L (1-D') x
    r.add_residual("offdiag:x",
                   Ctx::sub(Ctx::sc(B * (one - Dp) + B * (one - Lp), frame.x),
                            Ctx::sc(L * (one - Dp), frame.x)));
    // (beta_a(1-L') + beta_a(1-D')) y = D (1-L') y
    r.add_residual("offdiag:y",
                   Ctx::sub(Ctx::sc(B * (one - Lp) + B * (one - Dp), frame.y),
                            Ctx::sc(D * (one - Lp), frame.y)));

    // If beta_a = 0 then x = y = 0.
    if (B == 0) {
        r.add_residual("offdiag:beta0.x", frame.x);
        r.add_residual("offdiag:beta0.y", frame.y);
    } else {
        r.add_pass("offdiag:beta0", table.dim(), "vacuous (beta_a = " + rational_str(B) + ")");
    }

    // If dim >= 4 then x, y, z, x', y', z' are all nonzero.
    if (dim >= 4) {
        const std::pair<const Element*, const char*> comps[] = {
            {&frame.x, "x"},       {&frame.y, "y"},       {&frame.z, "z"},
            {&frame.x_prime, "x'"}, {&frame.y_prime, "y'"}, {&frame.z_prime, "z'"}};
        bool ok = true;
        std::string zeroes;
        for (const auto& [e, name] : comps)
            if (vec_is_zero(*e)) {
                ok = false;
                zeroes += zeroes.empty() ? name : std::string(", ") + name;
            }
        if (ok)
            r.add_pass("offdiag:dim4-nonzero", table.dim(), dim_note);
        else
            r.add_fail("offdiag:dim4-nonzero", c.a, "zero component(s): " + zeroes);
    } else {
        r.add_pass("offdiag:dim4-nonzero", table.dim(), "vacuous (" + dim_note + ")");
    }

    // If dim >= 4 and both types agree then L' = D' = L = D = 2 alpha_b = 2 beta_a.
    if (dim >= 4 && Lp == L && Dp == D) {
        Element residual = Ctx::sc(L - D, c.a);
        residual = Ctx::add(residual, Ctx::sc(L - 2 * A, c.a));
        residual = Ctx::add(residual, Ctx::sc(L - 2 * B, c.a));
        r.add_residual("offdiag:dim4-equal", std::move(residual), dim_note);
    } else {
        r.add_pass("offdiag:dim4-equal", table.dim(),
                   dim >= 4 ? "vacuous (types differ; " + dim_note + ")"
                            : "vacuous (" + dim_note + ")");
    }
    return r;
}

VerificationReport verify_frame(const AlgebraTable& table, const TwoGeneratedFrame& frame)
{
    VerificationReport r;
    r.append(verify_bab(table, frame));
    r.append(verify_bsquare(table, frame));
    r.append(verify_abb(table, frame));
    r.append(verify_sigma(table, frame));
    r.append(verify_offdiag(table, frame));
    return r;
}

VerificationReport verify_axes(const AlgebraTable& table, const std::vector<Element>& axes)
{
    VerificationReport r;
    const std::size_t n = table.dim();
    std::vector<AxisProfile> profiles;
    profiles.reserve(axes.size());
    for (std::size_t k = 0; k < axes.size(); ++k) {
        profiles.push_back(classify_axis(table, axes[k]));
        if (!profiles.back().primitive_two_sided()) {
            Element witness = vec_sub(multiply(table, axes[k], axes[k]), axes[k]);
            if (vec_is_zero(witness))
                witness = axes[k];
            r.add_fail("axis(" + std::to_string(k) + ")", std::move(witness),
                       "not a primitive two-sided axis: " + profiles.back().failure);
        }
    }

    for (std::size_t i = 0; i < axes.size(); ++i) {
        if (!profiles[i].primitive_two_sided())
            continue;
        for (std::size_t j = i + 1; j < axes.size(); ++j) {
            if (!profiles[j].primitive_two_sided())
                continue;
            const std::string id = "pair-dim(" + std::to_string(i) + "," + std::to_string(j) + ")";
            if (axes[i] == axes[j]) {
                r.add_pass(id, n, "generators coincide; closure dim = 1");
                continue;
            }
            Closure cl = subalgebra_closure(table, {axes[i], axes[j]});
            std::size_t d = cl.space.dim();
            if (d <= 3)
                r.add_pass(id, n, "closure dim = " + std::to_string(d));
            else
                r.add_fail(id, cl.space.basis_rows().row(3),
                           "closure dim = " + std::to_string(d) + " exceeds 3");
        }
    }

    for (std::size_t k = 0; k < axes.size(); ++k) {
        const AxisProfile& p = profiles[k];
        if (!p.primitive_two_sided())
            continue;
        const std::string id = "jordan(" + std::to_string(k) + ")";
        // Jordan type: the ambient space is span(a) + A_{0,0} + A_{lambda,delta}.
        Subspace jordan_sum =
            Subspace::span(n, {p.axis}).sum(p.spaces.s00).sum(p.spaces.sLD);
        if (jordan_sum.dim() == n)
            r.add_pass(id, n);
        else {
            Element witness = p.spaces.sL0.dim() > 0 ? p.spaces.sL0.basis_rows().row(0)
                                                     : p.spaces.s0D.basis_rows().row(0);
            r.add_fail(id, std::move(witness), "off-diagonal eigenspace is nonzero");
        }
    }
    return r;
}

VerificationReport verify_pair(const AlgebraTable& table, const Element& a, const Element& b)
{
    VerificationReport r;
    const std::size_t n = table.dim();

    AxisProfile pa = classify_axis(table, a);
    AxisProfile pb = classify_axis(table, b);
    auto record_axis = [&](const char* id, const AxisProfile& p, const Element& e) {
        if (p.primitive_two_sided()) {
            r.add_pass(id, n);
        } else {
            Element witness = vec_sub(multiply(table, e, e), e);
            if (vec_is_zero(witness))
                witness = e;
            r.add_fail(id, std::move(witness), "not a primitive two-sided axis: " + p.failure);
        }
    };
    record_axis("axis:a", pa, a);
    record_axis("axis:b", pb, b);
    if (!pa.primitive_two_sided() || !pb.primitive_two_sided())
        return r;

    VerificationReport fusion_a = check_fusion(table, pa);
    r.add_pass("fusion:a", n, fusion_a.entries.empty() ? "no violations" : "");
    r.append(fusion_a, "a:");
    VerificationReport fusion_b = check_fusion(table, pb);
    r.add_pass("fusion:b", n, fusion_b.entries.empty() ? "no violations" : "");
    r.append(fusion_b, "b:");

    auto run_frame = [&](const char* tag, const Element& first, const Element& second) {
        const std::string prefix = std::string(tag) + ":";
        try {
            TwoGeneratedFrame frame = build_frame(table, first, second);
            r.add_pass(prefix + "frame", n,
                       "closure dim = " + std::to_string(frame.closure.dim()));
            r.append(verify_frame(table, frame), prefix);
            return std::optional<TwoGeneratedFrame>(std::move(frame));
        } catch (const input_error& err) {
            r.add_fail(prefix + "frame", first, err.what());
            return std::optional<TwoGeneratedFrame>();
        }
    };
    auto frame_ab = run_frame("ab", a, b);
    run_frame("ba", b, a);

    if (frame_ab) {
        std::size_t d = frame_ab->closure.dim();
        if (d <= 3)
            r.add_pass("pair-dim", n, "closure dim = " + std::to_string(d));
        else
            r.add_fail("pair-dim", frame_ab->closure.basis_rows().row(3),
                       "closure dim = " + std::to_string(d) + " exceeds 3");
    }

    auto record_jordan = [&](const char* id, const AxisProfile& p) {
        Subspace jordan_sum =
            Subspace::span(n, {p.axis}).sum(p.spaces.s00).sum(p.spaces.sLD);
        if (jordan_sum.dim() == n)
            r.add_pass(id, n);
        else {
            Element witness = p.spaces.sL0.dim() > 0 ? p.spaces.sL0.basis_rows().row(0)
                                                     : p.spaces.s0D.basis_rows().row(0);
            r.add_fail(id, std::move(witness), "off-diagonal eigenspace is nonzero");
        }
    };
    record_jordan("jordan:a", pa);
    record_jordan("jordan:b", pb);
    return r;
}

namespace {

// Deterministic 64-bit generator (splitmix64); self-contained so seeded runs
// are reproducible across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Uniform in [lo, hi].
    long long range(long long lo, long long hi)
    {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

Rational sample_scalar(Rng& rng, const std::vector<Rational>& excluded)
{
    for (;;) {
        long long num = rng.range(-9, 9);
        long long den = rng.range(-9, 9);
        if (den == 0)
            continue;
        Rational q = Rational(num) / Rational(den);
        bool bad = false;
        for (const auto& e : excluded)
            if (q == e)
                bad = true;
        if (!bad)
            return q;
    }
}

} // namespace

VerificationReport verify_random(std::uint64_t seed, std::size_t count)
{
    Rng rng(seed);
    const std::vector<Rational> lambda_excluded{Rational(0), Rational(1), Rational(1, 2)};
    const std::vector<Rational> eta_excluded{Rational(0), Rational(2)};
    const FischerSpace line = line3_space();

    VerificationReport r;
    for (std::size_t i = 0; i < count; ++i) {
        Rational lambda = sample_scalar(rng, lambda_excluded);
        Rational eta = sample_scalar(rng, eta_excluded);

        AlgebraTable dim2 = dim2_algebra(lambda);
        r.append(verify_pair(dim2, dim2.basis_element(0), dim2.basis_element(1)),
                 "case" + std::to_string(i) + ":dim2(lambda=" + rational_str(lambda) + "):");

        AlgebraTable matsuo = matsuo_algebra(line, eta);
        r.append(verify_pair(matsuo, matsuo.basis_element(0), matsuo.basis_element(1)),
                 "case" + std::to_string(i) + ":matsuo3(eta=" + rational_str(eta) + "):");
    }
    return r;
}

} // namespace axial
