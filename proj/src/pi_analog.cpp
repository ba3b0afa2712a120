#include "econv/pi_analog.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <thread>

namespace econv {

PiForm pi_eval_exact(const PiIntegrandParams& params) {
    if (params.a == 0 && params.b == 0 && params.c == 0)
        throw std::domain_error("pi_eval_exact: (a,b,c) = (0,0,0) is degenerate");
    Poly numer = Poly::integrand_numerator(params.n, params.m, Rational(params.a),
                                           Rational(params.b), Rational(params.c));
    DivmodX2P1Result d = poly_divmod_by_x2p1(numer);
    return {d.quotient.integral01(), d.u / 4, d.v / 2};
}

bool dalzell_check() {
    PiForm dalzell = pi_eval_exact({4, 4, 1, 0, 0});
    return dalzell == PiForm{make_rational(22, 7), Rational(-1), Rational(0)};
}

namespace {

using IntRow = std::array<Int, 3>;

// Scales a rational row to a primitive integer row (zero row stays zero).
IntRow primitive_row(const std::array<Rational, 3>& row) {
    Int l = lcm(lcm(row[0].get_den(), row[1].get_den()), row[2].get_den());
    IntRow out;
    for (int j = 0; j < 3; ++j) out[j] = row[j].get_num() * (l / row[j].get_den());
    Int g = gcd(gcd(out[0], out[1]), out[2]);
    if (g > 1)
        for (auto& z : out) z /= g;
    return out;
}

bool is_zero(const IntRow& r) { return r[0] == 0 && r[1] == 0 && r[2] == 0; }

IntRow cross(const IntRow& u, const IntRow& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

struct CellSearcher {
    const Rational& target;
    unsigned max_coeff;
    std::array<PiForm, 3> base;  // integrals for (a,b,c) = unit vectors
    std::vector<SearchHit>& hits;

    void consider(unsigned a, unsigned b, unsigned c, unsigned n, unsigned m) {
        if (a == 0) return;  // canonical representative has a >= 1
        PiForm v = Rational(a) * base[0] + Rational(b) * base[1] + Rational(c) * base[2];
        if (v.t != 0 || v.s == 0) return;
        if (-v.r / v.s != target) return;
        PiIntegrandParams params{n, m, a, b, c};
        PiForm reverified = pi_eval_exact(params);  // independent of the solve path
        if (reverified != v) return;
        hits.push_back({params, reverified, abs(reverified.s),
                        reverified.s < 0 ? Side::above : Side::below});
    }

    // Kernel line: multiples of a primitive direction vector.
    void enumerate_line(const IntRow& dir, unsigned n, unsigned m) {
        IntRow g = dir;
        bool has_pos = g[0] > 0 || g[1] > 0 || g[2] > 0;
        bool has_neg = g[0] < 0 || g[1] < 0 || g[2] < 0;
        if (has_pos && has_neg) return;  // no nonzero solution in the positive orthant
        if (has_neg)
            for (auto& z : g) z = -z;
        Int top = std::max({g[0], g[1], g[2]});
        if (top == 0) return;
        unsigned long lambda_max = Int(Int(max_coeff) / top).get_ui();
        for (unsigned long lambda = 1; lambda <= lambda_max; ++lambda)
            consider(Int(g[0] * lambda).get_ui(), Int(g[1] * lambda).get_ui(),
                     Int(g[2] * lambda).get_ui(), n, m);
    }

    // Kernel plane of a single row: two free coordinates, solve the pivot.
    void enumerate_plane(const IntRow& row, unsigned n, unsigned m) {
        int pivot = row[0] != 0 ? 0 : (row[1] != 0 ? 1 : 2);
        int f1 = (pivot + 1) % 3, f2 = (pivot + 2) % 3;
        for (unsigned long x1 = 0; x1 <= max_coeff; ++x1) {
            for (unsigned long x2 = 0; x2 <= max_coeff; ++x2) {
                Int num = -(row[f1] * x1 + row[f2] * x2);
                if (num % row[pivot] != 0) continue;
                Int xp = num / row[pivot];
                if (xp < 0 || xp > max_coeff) continue;
                std::array<unsigned long, 3> x{};
                x[pivot] = xp.get_ui();
                x[f1] = x1;
                x[f2] = x2;
                consider(x[0], x[1], x[2], n, m);
            }
        }
    }

    void run(unsigned n, unsigned m) {
        for (int j = 0; j < 3; ++j) {
            PiIntegrandParams unit{n, m, j == 0 ? 1u : 0u, j == 1 ? 1u : 0u, j == 2 ? 1u : 0u};
            base[j] = pi_eval_exact(unit);
        }
        // Hits solve two homogeneous linear conditions in (a,b,c):
        //   t-coefficient vanishes, and r + target * s vanishes.
        IntRow row_t = primitive_row({base[0].t, base[1].t, base[2].t});
        IntRow row_w = primitive_row({base[0].r + target * base[0].s,
                                      base[1].r + target * base[1].s,
                                      base[2].r + target * base[2].s});
        if (is_zero(row_t) && is_zero(row_w)) {
            for (unsigned long a = 1; a <= max_coeff; ++a)
                for (unsigned long b = 0; b <= max_coeff; ++b)
                    for (unsigned long c = 0; c <= max_coeff; ++c) consider(a, b, c, n, m);
            return;
        }
        if (is_zero(row_t)) return enumerate_plane(row_w, n, m);
        if (is_zero(row_w)) return enumerate_plane(row_t, n, m);
        IntRow dir = cross(row_t, row_w);
        if (is_zero(dir)) return enumerate_plane(row_t, n, m);  // proportional rows
        Int g = gcd(gcd(dir[0], dir[1]), dir[2]);
        if (g > 1)
            for (auto& z : dir) z /= g;
        enumerate_line(dir, n, m);
    }
};

}  // namespace

std::vector<SearchHit> lucas_search(const Rational& target, unsigned max_nm,
                                    unsigned max_coeff) {
    if (target <= 0) throw std::domain_error("lucas_search: target must be positive");
    if (max_coeff == 0) throw std::domain_error("lucas_search: max_coeff >= 1 required");

    struct Cell { unsigned n, m; };
    std::vector<Cell> grid;
    for (unsigned n = 0; n <= max_nm; ++n)
        for (unsigned m = 0; m <= max_nm; ++m) grid.push_back({n, m});

    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, grid.size());
    std::vector<std::future<std::vector<SearchHit>>> futures;
    for (unsigned w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&, w] {
            std::vector<SearchHit> local;
            for (size_t i = w; i < grid.size(); i += workers) {
                CellSearcher searcher{target, max_coeff, {}, local};
                searcher.run(grid[i].n, grid[i].m);
            }
            return local;
        }));
    }
    std::vector<SearchHit> hits;
    for (auto& f : futures) {
        auto local = f.get();
        hits.insert(hits.end(), local.begin(), local.end());
    }
    std::sort(hits.begin(), hits.end(), [](const SearchHit& x, const SearchHit& y) {
        auto key = [](const PiIntegrandParams& p) {
            return std::array<unsigned, 5>{p.n, p.m, p.a, p.b, p.c};
        };
        return key(x.params) < key(y.params);
    });
    return hits;
}

}  // namespace econv
