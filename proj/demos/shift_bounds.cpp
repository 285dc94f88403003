// Walks the k = 3 bound chain for a few uniformities: the best n for the
// cyclic construction, then one and three augmented blow-up steps.

#include "daisy/daisy.hpp"

#include <cstdio>

using namespace daisy;

int main()
{
    std::printf("%3s %5s %14s %10s %10s %10s %10s\n", "r", "n*", "ex(n*)", "direct", "one step", "3 steps",
                "r^2 pi");
    for (unsigned r : {4u, 5u, 6u, 7u, 8u, 10u}) {
        OptimizeResult best = optimize_n(r, 3, {Pipeline::Kind::C3aBlowup});
        const unsigned n = best.n_star;
        BoundReport ex = bound_C3a(n, r);
        BoundReport direct = pi_blowup(ex, n, r);
        BoundReport once = pi_blowup(bound_T3(ex.ceil(), n, r, 3), 2 * n, r);
        BoundReport thrice = pi_blowup(bound_recurs(ex.ceil(), n, r, 3, 3), 8 * n, r);
        long double scaled = to_long_double(thrice.value) * r * r;
        std::printf("%3u %5u %14s %10s %10s %10s %10.4Lf\n", r, n, ex.ceil().get_str().c_str(),
                    direct.decimal().c_str(), once.decimal().c_str(), thrice.decimal().c_str(), scaled);
    }

    Maximum m = maximize_F();
    std::printf("\nlimit of r^2 pi along this chain is at least %.6Lf (x* = %.4Lf)\n", m.value.lo, m.x);
    return 0;
}
