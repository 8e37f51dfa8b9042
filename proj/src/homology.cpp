#include "pltopo/homology.hpp"

#include "pltopo/compact.hpp"
#include "pltopo/errors.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <unordered_set>

namespace pltopo {

std::size_t SimplicialComplex::add(Simplex s)
{
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty())
        throw InputError("empty simplex");
    const std::size_t d = s.size() - 1;
    if (by_dim_.size() <= d) {
        by_dim_.resize(d + 1);
        index_.resize(d + 1);
    }
    if (auto it = index_[d].find(s); it != index_[d].end())
        return it->second;
    if (d > 0) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex f = s;
            f.erase(f.begin() + static_cast<long>(i));
            add(std::move(f));
        }
    }
    const std::size_t id = by_dim_[d].size();
    index_[d].emplace(s, id);
    by_dim_[d].push_back(std::move(s));
    return id;
}

std::optional<std::size_t> SimplicialComplex::find(const Simplex& s) const
{
    if (s.empty() || s.size() > by_dim_.size())
        return std::nullopt;
    const auto& idx = index_[s.size() - 1];
    auto it = idx.find(s);
    if (it == idx.end())
        return std::nullopt;
    return it->second;
}

const std::vector<Simplex>& SimplicialComplex::of_dimension(int d) const
{
    static const std::vector<Simplex> none;
    if (d < 0 || static_cast<std::size_t>(d) >= by_dim_.size())
        return none;
    return by_dim_[static_cast<std::size_t>(d)];
}

std::size_t SimplicialComplex::size() const
{
    std::size_t n = 0;
    for (const auto& v : by_dim_)
        n += v.size();
    return n;
}

namespace {

struct Overflow {};

long long checked_mul(long long a, long long b)
{
    long long r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw Overflow{};
    return r;
}

long long checked_sub(long long a, long long b)
{
    long long r = 0;
    if (__builtin_sub_overflow(a, b, &r))
        throw Overflow{};
    return r;
}

long long gcd_of(long long a, long long b) { return std::gcd(a, b); }
mpz_class gcd_of(const mpz_class& a, const mpz_class& b)
{
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}
long long mul(long long a, long long b) { return checked_mul(a, b); }
mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
long long minus(long long a, long long b) { return checked_sub(a, b); }
mpz_class minus(const mpz_class& a, const mpz_class& b) { return a - b; }
bool is_zero(long long a) { return a == 0; }
bool is_zero(const mpz_class& a) { return sgn(a) == 0; }
bool is_one(long long a) { return a == 1 || a == -1; }
bool is_one(const mpz_class& a) { return abs(a) == 1; }

template <typename T>
using Column = std::vector<std::pair<std::size_t, T>>;

// col = a * col - b * other, rows kept sorted, then divided by the content.
template <typename T>
void eliminate(Column<T>& col, const Column<T>& other, const T& a, const T& b)
{
    Column<T> out;
    out.reserve(col.size() + other.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < col.size() || j < other.size()) {
        if (j == other.size() || (i < col.size() && col[i].first < other[j].first)) {
            out.emplace_back(col[i].first, mul(a, col[i].second));
            ++i;
        } else if (i == col.size() || other[j].first < col[i].first) {
            out.emplace_back(other[j].first, minus(T(0), mul(b, other[j].second)));
            ++j;
        } else {
            T v = minus(mul(a, col[i].second), mul(b, other[j].second));
            if (!is_zero(v))
                out.emplace_back(col[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    T g(0);
    for (const auto& e : out) {
        g = gcd_of(g, e.second);
        if (is_one(g))
            break;
    }
    if (!is_zero(g) && !is_one(g))
        for (auto& e : out)
            e.second /= g;
    col = std::move(out);
}

// Column reduction of one boundary matrix; returns the rank and the set of
// pivot rows. Columns listed in `skip` are known to reduce to zero.
template <typename T>
std::size_t reduce(const std::vector<std::vector<std::pair<std::size_t, int>>>& columns,
                   const std::vector<char>& skip, std::vector<char>& pivot_rows)
{
    std::vector<Column<T>> reduced(columns.size());
    std::vector<long> owner;
    std::size_t rows = 0;
    for (const auto& c : columns)
        for (const auto& e : c)
            rows = std::max(rows, e.first + 1);
    owner.assign(rows, -1);
    std::size_t rank = 0;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (!skip.empty() && skip[j])
            continue;
        Column<T> col;
        for (const auto& e : columns[j])
            col.emplace_back(e.first, T(e.second));
        std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        while (!col.empty()) {
            const std::size_t low = col.back().first;
            if (owner[low] < 0)
                break;
            const Column<T>& other = reduced[static_cast<std::size_t>(owner[low])];
            const T a = other.back().second;
            const T b = col.back().second;
            const T g = gcd_of(a, b);
            eliminate(col, other, T(a / g), T(b / g));
        }
        if (!col.empty()) {
            owner[col.back().first] = static_cast<long>(j);
            pivot_rows[col.back().first] = 1;
            reduced[j] = std::move(col);
            ++rank;
        }
    }
    return rank;
}

std::size_t boundary_rank(const std::vector<std::vector<std::pair<std::size_t, int>>>& columns,
                          const std::vector<char>& skip, std::vector<char>& pivot_rows)
{
    try {
        return reduce<long long>(columns, skip, pivot_rows);
    } catch (const Overflow&) {
        std::fill(pivot_rows.begin(), pivot_rows.end(), 0);
        return reduce<mpz_class>(columns, skip, pivot_rows);
    }
}

ChainComplex simplicial_chains(const SimplicialComplex& x, const SimplicialComplex* a)
{
    ChainComplex cc;
    const int top = x.dimension();
    if (top < 0)
        return cc;
    // Renumber simplices outside a.
    std::vector<std::vector<long>> id(static_cast<std::size_t>(top) + 1);
    cc.sizes.assign(static_cast<std::size_t>(top) + 1, 0);
    for (int d = 0; d <= top; ++d) {
        const auto& s = x.of_dimension(d);
        auto& ids = id[static_cast<std::size_t>(d)];
        ids.assign(s.size(), -1);
        for (std::size_t i = 0; i < s.size(); ++i)
            if (!a || !a->contains(s[i]))
                ids[i] = static_cast<long>(cc.sizes[static_cast<std::size_t>(d)]++);
    }
    cc.boundary.resize(static_cast<std::size_t>(top) + 1);
    for (int d = 1; d <= top; ++d) {
        const auto& s = x.of_dimension(d);
        auto& cols = cc.boundary[static_cast<std::size_t>(d)];
        cols.resize(cc.sizes[static_cast<std::size_t>(d)]);
        for (std::size_t i = 0; i < s.size(); ++i) {
            const long j = id[static_cast<std::size_t>(d)][i];
            if (j < 0)
                continue;
            for (std::size_t k = 0; k < s[i].size(); ++k) {
                Simplex f = s[i];
                f.erase(f.begin() + static_cast<long>(k));
                const long row = id[static_cast<std::size_t>(d - 1)][*x.find(f)];
                if (row >= 0)
                    cols[static_cast<std::size_t>(j)].emplace_back(static_cast<std::size_t>(row), k % 2 == 0 ? 1 : -1);
            }
        }
    }
    return cc;
}

} // namespace

std::vector<std::size_t> betti(const ChainComplex& cc)
{
    const std::size_t dims = cc.sizes.size();
    std::vector<std::size_t> rank(dims + 1, 0);
    // Clearing: a pivot row of the (d+1)-boundary is a d-cell whose column reduces to zero.
    std::vector<char> cleared;
    for (std::size_t d = dims; d-- > 1;) {
        std::vector<char> pivots(cc.sizes[d - 1], 0);
        const auto& cols = d < cc.boundary.size() ? cc.boundary[d] : decltype(cc.boundary)::value_type{};
        rank[d] = boundary_rank(cols, cleared, pivots);
        cleared = std::move(pivots);
    }
    std::vector<std::size_t> out(dims, 0);
    for (std::size_t d = 0; d < dims; ++d)
        out[d] = cc.sizes[d] - rank[d] - rank[d + 1];
    return out;
}

std::vector<std::size_t> betti(const SimplicialComplex& sc)
{
    return betti(simplicial_chains(sc, nullptr));
}

std::optional<Simplex> fullness_violation(const SimplicialComplex& x, const SimplicialComplex& a)
{
    std::unordered_set<std::size_t> verts;
    for (const auto& v : a.of_dimension(0))
        verts.insert(v[0]);
    for (int d = 1; d <= x.dimension(); ++d)
        for (const auto& s : x.of_dimension(d))
            if (std::all_of(s.begin(), s.end(), [&](std::size_t v) { return verts.count(v) > 0; })
                && !a.contains(s))
                return s;
    return std::nullopt;
}

std::vector<std::size_t> relative_betti(const SimplicialComplex& x, const SimplicialComplex& a, bool require_full)
{
    for (int d = 0; d <= a.dimension(); ++d)
        for (const auto& s : a.of_dimension(d))
            if (!x.contains(s))
                throw InputError("relative_betti: subcomplex is not contained in the complex");
    if (require_full) {
        if (auto bad = fullness_violation(x, a)) {
            std::string s;
            for (auto v : *bad)
                s += (s.empty() ? "" : ",") + std::to_string(v);
            throw PreconditionError("relative_betti: subcomplex is not full; simplex {" + s + "} is spanned but missing");
        }
    }
    auto out = betti(simplicial_chains(x, &a));
    out.resize(static_cast<std::size_t>(std::max(x.dimension(), 0) + 1), 0);
    return out;
}

SimplicialComplex complement_complex(const SimplicialComplex& sc, const SimplicialComplex& k)
{
    if (auto bad = fullness_violation(sc, k))
        throw PreconditionError("complement_complex: K is not full");
    std::unordered_set<std::size_t> in_k;
    for (const auto& v : k.of_dimension(0))
        in_k.insert(v[0]);
    SimplicialComplex out;
    for (int d = sc.dimension(); d >= 0; --d)
        for (const auto& s : sc.of_dimension(d))
            if (std::none_of(s.begin(), s.end(), [&](std::size_t v) { return in_k.count(v) > 0; }))
                out.add(s);
    return out;
}

Subdivision barycentric(const SimplicialComplex& sc)
{
    Subdivision out;
    // Vertex of the subdivision for each simplex, dimension-major.
    std::vector<std::vector<std::size_t>> vid(static_cast<std::size_t>(std::max(sc.dimension() + 1, 0)));
    for (int d = 0; d <= sc.dimension(); ++d) {
        for (const auto& s : sc.of_dimension(d)) {
            vid[static_cast<std::size_t>(d)].push_back(out.origin.size());
            out.origin.push_back(s);
        }
    }
    // Maximal chains ending at each simplex; shorter chains come in as faces.
    std::vector<std::vector<std::vector<Simplex>>> chains(vid.size());
    for (int d = 0; d <= sc.dimension(); ++d) {
        const auto& simplices = sc.of_dimension(d);
        auto& level = chains[static_cast<std::size_t>(d)];
        level.resize(simplices.size());
        for (std::size_t i = 0; i < simplices.size(); ++i) {
            const std::size_t me = vid[static_cast<std::size_t>(d)][i];
            if (d == 0) {
                level[i].push_back({me});
                continue;
            }
            for (std::size_t k = 0; k < simplices[i].size(); ++k) {
                Simplex f = simplices[i];
                f.erase(f.begin() + static_cast<long>(k));
                const std::size_t fi = *sc.find(f);
                for (const auto& c : chains[static_cast<std::size_t>(d - 1)][fi]) {
                    Simplex ext = c;
                    ext.push_back(me);
                    level[i].push_back(std::move(ext));
                }
            }
        }
    }
    // Add maximal chains of maximal simplices; every other chain is a face of one.
    std::vector<std::vector<char>> has_coface(vid.size());
    for (int d = 0; d <= sc.dimension(); ++d)
        has_coface[static_cast<std::size_t>(d)].assign(sc.of_dimension(d).size(), 0);
    for (int d = 1; d <= sc.dimension(); ++d)
        for (const auto& s : sc.of_dimension(d))
            for (std::size_t k = 0; k < s.size(); ++k) {
                Simplex f = s;
                f.erase(f.begin() + static_cast<long>(k));
                has_coface[static_cast<std::size_t>(d - 1)][*sc.find(f)] = 1;
            }
    for (int d = sc.dimension(); d >= 0; --d)
        for (std::size_t i = 0; i < sc.of_dimension(d).size(); ++i)
            if (!has_coface[static_cast<std::size_t>(d)][i])
                for (const auto& c : chains[static_cast<std::size_t>(d)][i])
                    out.complex.add(c);
    return out;
}

SimplicialComplex subdivide(const Subdivision& sd, const SimplicialComplex& sub)
{
    SimplicialComplex out;
    for (int d = sd.complex.dimension(); d >= 0; --d)
        for (const auto& c : sd.complex.of_dimension(d))
            if (std::all_of(c.begin(), c.end(), [&](std::size_t v) { return sub.contains(sd.origin[v]); })
                && !out.contains(c))
                out.add(c);
    return out;
}

Triangulation triangulate(const PolytopalModel& model)
{
    Triangulation tri;
    const std::size_t n = model.cells.size();
    std::vector<std::optional<std::vector<Simplex>>> memo(n);
    std::function<const std::vector<Simplex>&(std::size_t)> pull = [&](std::size_t c) -> const std::vector<Simplex>& {
        if (memo[c])
            return *memo[c];
        const auto& verts = model.cells[c];
        std::vector<Simplex> out;
        if (verts.size() == static_cast<std::size_t>(model.dimensions[c]) + 1) {
            out.push_back(verts);
        } else {
            const std::size_t apex = verts.front();
            for (auto f : model.facets[c]) {
                const auto& fv = model.cells[f];
                if (std::binary_search(fv.begin(), fv.end(), apex))
                    continue;
                for (const auto& s : pull(f)) {
                    Simplex t = s;
                    t.insert(t.begin(), apex);
                    out.push_back(std::move(t));
                }
            }
        }
        memo[c] = std::move(out);
        return *memo[c];
    };
    tri.cell_simplices.resize(n);
    for (std::size_t c = 0; c < n; ++c) {
        tri.cell_simplices[c] = pull(c);
        for (const auto& s : tri.cell_simplices[c])
            tri.complex.add(s);
    }
    return tri;
}

SimplicialComplex marked_subcomplex(const Triangulation& tri, const PolytopalModel& model, std::uint32_t mask)
{
    SimplicialComplex out;
    for (std::size_t c = 0; c < model.cells.size(); ++c)
        if (model.marks[c] & mask)
            for (const auto& s : tri.cell_simplices[c])
                out.add(s);
    return out;
}

long euler_characteristic(const SimplicialComplex& sc)
{
    long chi = 0;
    for (int d = 0; d <= sc.dimension(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(sc.of_dimension(d).size());
    return chi;
}

std::vector<std::size_t> resize_ranks(std::vector<std::size_t> ranks, std::size_t length)
{
    ranks.resize(length, 0);
    return ranks;
}

} // namespace pltopo
