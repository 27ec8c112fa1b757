#include "msnake/oracle.hpp"

#include "msnake/matchings.hpp"
#include "msnake/snake.hpp"

namespace msnake {

namespace {

FareyFrame seed_frame() {
    TriPoly hi = TriPoly::monomial({2, 0, -1}) + TriPoly::monomial({0, 2, -1});  // (x^2+y^2)/z
    return {0, 1, 1, 1, TriPoly::x(), std::move(hi), TriPoly::y(), 0};
}

TriPoly mediant_poly(const FareyFrame& f) {
    return poly_exact_div(f.p_lo * f.p_lo + f.p_hi * f.p_hi, f.p_div);
}

}  // namespace

TriPoly mutation_polynomial(RationalIndex rho) {
    FareyFrame f = seed_frame();
    if (rho.a == 1 && rho.b == 1) return f.p_hi;
    for (;;) {
        long ma = f.la + f.ha, mb = f.lb + f.hb;
        TriPoly pm = mediant_poly(f);
        if (ma == rho.a && mb == rho.b) return pm;
        if (static_cast<long>(rho.a) * mb < ma * static_cast<long>(rho.b)) {
            // rho < mediant: recurse into [lo, mediant]; the far endpoint hi
            // becomes the divisor.
            f.p_div = std::move(f.p_hi);
            f.p_hi = std::move(pm);
            f.ha = ma;
            f.hb = mb;
        } else {
            f.p_div = std::move(f.p_lo);
            f.p_lo = std::move(pm);
            f.la = ma;
            f.lb = mb;
        }
    }
}

bool verify_markov_identity(const TriPoly& X, const TriPoly& Y, const TriPoly& Z) {
    TriPoly lhs = X * X + Y * Y + Z * Z;
    lhs.scale({1, 1, 1}, 1);  // times xyz
    TriPoly sq = TriPoly::x(2) + TriPoly::y(2) + TriPoly::z(2);
    TriPoly rhs = ((sq * X) * Y) * Z;
    return lhs == rhs;
}

mpz_class markov_number(RationalIndex rho) {
    mpq_class v = poly_eval_ints(numerator_dp(build_snake(rho)), 1, 1, 1);
    if (v.get_den() != 1) throw std::logic_error("numerator evaluated to a non-integer");
    return v.get_num();
}

mpz_class markov_number_vieta(RationalIndex rho) {
    // The seed frame over integers: every polynomial evaluated at (1,1,1).
    long la = 0, lb = 1, ha = 1, hb = 1;
    mpz_class lo = 1, hi = 2, div = 1;
    if (rho.a == 1 && rho.b == 1) return hi;
    for (;;) {
        long ma = la + ha, mb = lb + hb;
        mpz_class med = (lo * lo + hi * hi);
        if (!mpz_divisible_p(med.get_mpz_t(), div.get_mpz_t()))
            throw std::logic_error("integer Vieta step is not exact");
        med /= div;
        if (ma == rho.a && mb == rho.b) return med;
        if (static_cast<long>(rho.a) * mb < ma * static_cast<long>(rho.b)) {
            div = hi;
            hi = med;
            ha = ma;
            hb = mb;
        } else {
            div = lo;
            lo = med;
            la = ma;
            lb = mb;
        }
    }
}

std::vector<FareyFrame> farey_tree(int depth) {
    std::vector<FareyFrame> frames{seed_frame()};
    for (std::size_t k = 0; k < frames.size(); ++k) {
        if (frames[k].depth >= depth) continue;
        FareyFrame f = frames[k];  // push_back below may reallocate
        TriPoly pm = mediant_poly(f);
        long ma = f.la + f.ha, mb = f.lb + f.hb;
        FareyFrame left{f.la, f.lb, ma, mb, f.p_lo, pm, f.p_hi, f.depth + 1};
        FareyFrame right{ma, mb, f.ha, f.hb, std::move(pm), f.p_hi, f.p_lo, f.depth + 1};
        frames.push_back(std::move(left));
        frames.push_back(std::move(right));
    }
    return frames;
}

TriPoly laurent_from_numerator(RationalIndex rho, const TriPoly& numerator) {
    TriPoly p = poly_double_exponents(numerator);
    p.scale({-(rho.a - 1), -(rho.b - 1), -(rho.a + rho.b - 1)}, 1);
    return p;
}

}  // namespace msnake
