#include "pltopo/oracle.hpp"

#include "pltopo/errors.hpp"
#include "pltopo/homology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pltopo {

namespace {

struct DoubleNet {
    std::vector<std::vector<std::vector<double>>> w;
    std::vector<std::vector<double>> b;

    explicit DoubleNet(const Network& net)
    {
        for (const auto& l : net.layers()) {
            std::vector<std::vector<double>> rows;
            for (const auto& r : l.weights) {
                std::vector<double> row;
                for (const auto& x : r)
                    row.push_back(to_double(x));
                rows.push_back(std::move(row));
            }
            std::vector<double> bias;
            for (const auto& x : l.bias)
                bias.push_back(to_double(x));
            w.push_back(std::move(rows));
            b.push_back(std::move(bias));
        }
    }

    double operator()(std::vector<double> x) const
    {
        for (std::size_t l = 0; l < w.size(); ++l) {
            std::vector<double> y(w[l].size());
            for (std::size_t r = 0; r < y.size(); ++r) {
                long double s = b[l][r];
                for (std::size_t c = 0; c < x.size(); ++c)
                    s += static_cast<long double>(w[l][r][c]) * x[c];
                y[r] = static_cast<double>(s);
                if (l + 1 < w.size())
                    y[r] = std::max(y[r], 0.0);
            }
            x = std::move(y);
        }
        return x[0];
    }
};

} // namespace

OracleResult grid_oracle(const Network& net, const Vec& lo, const Vec& hi, const Rational& resolution,
                         const GridPredicate& pred)
{
    const std::size_t n = net.input_dim();
    if (n > 3)
        throw UnsupportedError("grid_oracle: input dimension above 3");
    if (lo.size() != n || hi.size() != n)
        throw InputError("grid_oracle: box has wrong dimension");
    if (sign(resolution) <= 0)
        throw InputError("grid_oracle: resolution must be positive");

    std::vector<std::size_t> steps(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (hi[k] < lo[k])
            throw InputError("grid_oracle: empty box");
        Rational q = (hi[k] - lo[k]) / resolution;
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
        steps[k] = f.get_ui() + 1;
    }
    std::size_t points = 1;
    for (auto s : steps)
        points *= s;

    const DoubleNet f(net);
    const double c = to_double(pred.c);
    const double blo = to_double(pred.lo);
    const double bhi = to_double(pred.hi);
    std::vector<char> ok(points, 0);
    double margin = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> coord(n, 0);
    for (std::size_t p = 0; p < points; ++p) {
        std::size_t rest = p;
        std::vector<double> x(n);
        for (std::size_t k = 0; k < n; ++k) {
            coord[k] = rest % steps[k];
            rest /= steps[k];
            x[k] = to_double(lo[k] + resolution * static_cast<unsigned long>(coord[k]));
        }
        const double y = f(x);
        switch (pred.kind) {
        case GridPredicate::Kind::Sublevel:
            ok[p] = y <= c;
            margin = std::min(margin, std::abs(y - c));
            break;
        case GridPredicate::Kind::Superlevel:
            ok[p] = y >= c;
            margin = std::min(margin, std::abs(y - c));
            break;
        case GridPredicate::Kind::Band:
            ok[p] = y >= blo && y <= bhi;
            margin = std::min({margin, std::abs(y - blo), std::abs(y - bhi)});
            break;
        }
    }

    std::vector<std::size_t> stride(n, 1);
    for (std::size_t k = 1; k < n; ++k)
        stride[k] = stride[k - 1] * steps[k - 1];
    const std::size_t masks = std::size_t{1} << n;
    // Elementary cube = (base point, mask of extended axes).
    std::vector<long> id(points * masks, -1);
    ChainComplex cc;
    cc.sizes.assign(n + 1, 0);
    cc.boundary.assign(n + 1, {});
    auto decode = [&](std::size_t p, std::vector<std::size_t>& out) {
        for (std::size_t k = 0; k < n; ++k) {
            out[k] = p % steps[k];
            p /= steps[k];
        }
    };
    std::vector<std::size_t> base(n);
    for (std::size_t dim = 0; dim <= n; ++dim) {
        for (std::size_t mask = 0; mask < masks; ++mask) {
            if (static_cast<std::size_t>(__builtin_popcountll(mask)) != dim)
                continue;
            for (std::size_t p = 0; p < points; ++p) {
                decode(p, base);
                bool fits = true;
                for (std::size_t k = 0; k < n && fits; ++k)
                    if ((mask >> k & 1) && base[k] + 1 >= steps[k])
                        fits = false;
                if (!fits)
                    continue;
                // All corners must satisfy the predicate.
                bool all = true;
                for (std::size_t sub = mask;; sub = (sub - 1) & mask) {
                    std::size_t q = p;
                    for (std::size_t k = 0; k < n; ++k)
                        if (sub >> k & 1)
                            q += stride[k];
                    all = all && ok[q];
                    if (sub == 0 || !all)
                        break;
                }
                if (!all)
                    continue;
                id[p * masks + mask] = static_cast<long>(cc.sizes[dim]++);
                if (dim == 0)
                    continue;
                std::vector<std::pair<std::size_t, int>> col;
                int i = 0;
                for (std::size_t k = 0; k < n; ++k) {
                    if (!(mask >> k & 1))
                        continue;
                    const std::size_t face = mask & ~(std::size_t{1} << k);
                    const int s = i % 2 == 0 ? 1 : -1;
                    col.emplace_back(static_cast<std::size_t>(id[(p + stride[k]) * masks + face]), s);
                    col.emplace_back(static_cast<std::size_t>(id[p * masks + face]), -s);
                    ++i;
                }
                cc.boundary[dim].push_back(std::move(col));
            }
        }
    }
    OracleResult out;
    out.betti = resize_ranks(cc.sizes[0] == 0 ? std::vector<std::size_t>{} : betti(cc), n + 1);
    out.min_margin = margin;
    out.grid_points = points;
    out.top_cubes = cc.sizes[n];
    return out;
}

} // namespace pltopo
