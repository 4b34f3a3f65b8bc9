#include "wv/embedding.hpp"

#include <algorithm>
#include <set>

namespace wv {

bool SubRootSystem::is_dominant(const Weight& x) const {
    for (const Weight& s : simple_roots)
        if (wdot(x, s) < Rat(0)) return false;
    return true;
}

bool SubRootSystem::is_strictly_dominant(const Weight& x) const {
    for (const Weight& s : simple_roots)
        if (wdot(x, s) <= Rat(0)) return false;
    return true;
}

std::vector<Rat> SubRootSystem::dynkin_labels(const Weight& x) const {
    std::vector<Rat> out;
    out.reserve(simple_roots.size());
    for (const Weight& s : simple_roots) out.push_back(Rat(2) * wdot(x, s) / wdot(s, s));
    return out;
}

bool SubRootSystem::is_integral(const Weight& x) const {
    for (const Rat& l : dynkin_labels(x))
        if (!rat_is_integer(l)) return false;
    return true;
}

bool SubRootSystem::contains_root(const Weight& x) const {
    for (const Weight& r : positive_roots)
        if (r == x || wneg(r) == x) return true;
    return false;
}

namespace {

// Indecomposable elements of a positive subsystem: those not a sum of two members.
std::vector<Weight> indecomposables(const std::vector<Weight>& pos) {
    std::set<Weight> set(pos.begin(), pos.end());
    std::vector<Weight> out;
    for (const Weight& x : pos) {
        bool decomposable = false;
        for (const Weight& y : pos) {
            if (y == x) continue;
            Weight z = wsub(x, y);
            if (set.count(z)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) out.push_back(x);
    }
    return out;
}

Weight half_sum(const std::vector<Weight>& roots, std::size_t dim) {
    Weight r = wzero(dim);
    for (const Weight& w : roots) r = wadd(r, wscale(Rat(1, 2), w));
    return r;
}

// Projection matrix onto the span of the given vectors (standard dot product).
std::vector<std::vector<Rat>> projection_matrix(const std::vector<Weight>& span, int dim) {
    std::vector<std::vector<Rat>> p(static_cast<std::size_t>(dim), std::vector<Rat>(static_cast<std::size_t>(dim), Rat(0)));
    if (span.empty()) return p;
    const std::size_t n = span.size();
    std::vector<std::vector<Rat>> gram(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gram[i][j] = wdot(span[i], span[j]);
    // inverse of gram, column by column
    std::vector<std::vector<Rat>> ginv(n, std::vector<Rat>(n));
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<Rat> e(n, Rat(0));
        e[col] = Rat(1);
        std::vector<Rat> x = solve_linear(gram, e);
        for (std::size_t row = 0; row < n; ++row) ginv[row][col] = x[row];
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (ginv[i][j] == Rat(0)) continue;
            for (int aa = 0; aa < dim; ++aa)
                for (int bb = 0; bb < dim; ++bb)
                    p[static_cast<std::size_t>(aa)][static_cast<std::size_t>(bb)] +=
                        span[i][static_cast<std::size_t>(aa)] * ginv[i][j] * span[j][static_cast<std::size_t>(bb)];
        }
    return p;
}

Weight apply_matrix(const std::vector<std::vector<Rat>>& m, const Weight& x) {
    Weight y(x.size(), Rat(0));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += m[i][j] * x[j];
    return y;
}

// Basis of {x in span(columns) : <x, c> = 0 for all constraints}, via exact
// reduced row echelon on the coefficient matrix. Deterministic.
std::vector<Weight> orthocomplement_in_span(const std::vector<Weight>& span_basis,
                                            const std::vector<Weight>& constraints, std::size_t dim) {
    if (span_basis.empty()) return {};
    const std::size_t n = span_basis.size();
    std::vector<std::vector<Rat>> m;
    for (const Weight& c : constraints) {
        std::vector<Rat> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = wdot(c, span_basis[j]);
        m.push_back(row);
    }
    // reduced row echelon form
    std::size_t row = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < n && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col] == Rat(0)) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[row]);
        Rat d = m[row][col];
        for (std::size_t j = 0; j < n; ++j) m[row][j] /= d;
        for (std::size_t r2 = 0; r2 < m.size(); ++r2) {
            if (r2 == row || m[r2][col] == Rat(0)) continue;
            Rat f = m[r2][col];
            for (std::size_t j = 0; j < n; ++j) m[r2][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    std::vector<Weight> basis;
    for (std::size_t col = 0; col < n; ++col) {
        if (std::find(pivots.begin(), pivots.end(), col) != pivots.end()) continue;
        std::vector<Rat> t(n, Rat(0));
        t[col] = Rat(1);
        for (std::size_t r2 = 0; r2 < pivots.size(); ++r2) t[pivots[r2]] = -m[r2][col];
        Weight v = wzero(dim);
        for (std::size_t j = 0; j < n; ++j) v = wadd(v, wscale(t[j], span_basis[j]));
        basis.push_back(v);
    }
    return basis;
}

} // namespace

EmbeddingSpec build_embedding(const RootDatum& ambient, const std::vector<std::vector<long long>>& a_roots) {
    EmbeddingSpec spec;
    spec.ambient = ambient;
    spec.a_root_coords = a_roots;
    const std::size_t dim = static_cast<std::size_t>(ambient.ambient_dim);

    std::vector<Weight> simple;
    for (const auto& coords : a_roots) {
        if (static_cast<int>(coords.size()) != ambient.rank())
            throw Error("a-root coefficient vector length does not match rank");
        Weight beta = wzero(dim);
        for (std::size_t i = 0; i < coords.size(); ++i)
            beta = wadd(beta, wscale(Rat(coords[i]), ambient.simple_roots[i]));
        if (!ambient.is_positive_root(beta))
            throw Error("a-root " + wstr(beta) + " is not a positive root of " + ambient.id.str());
        simple.push_back(beta);
    }
    std::set<Weight> simple_set(simple.begin(), simple.end());
    if (simple_set.size() != simple.size()) throw Error("duplicate a-roots");

    for (std::size_t i = 0; i < simple.size(); ++i)
        for (std::size_t j = 0; j < simple.size(); ++j) {
            if (i == j) continue;
            Rat c = Rat(2) * wdot(simple[i], simple[j]) / wdot(simple[j], simple[j]);
            if (!rat_is_integer(c) || c > Rat(0))
                throw Error("a-roots are not a valid simple system (positive Cartan integer)");
        }

    // Closed subsystem generated by +/- the inputs (addition inside Delta).
    std::set<Weight> closure;
    for (const Weight& b : simple) {
        closure.insert(b);
        closure.insert(wneg(b));
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Weight> cur(closure.begin(), closure.end());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j) {
                Weight s = wadd(cur[i], cur[j]);
                if (wis_zero(s) || closure.count(s)) continue;
                if (ambient.is_root(s)) {
                    closure.insert(s);
                    grew = true;
                }
            }
    }

    // Every member must be an all-nonnegative or all-nonpositive integer
    // combination of the inputs, else the inputs are not a simple system of
    // the subalgebra they generate.
    std::vector<Weight> a_pos;
    if (!simple.empty()) {
        const std::size_t n = simple.size();
        std::vector<std::vector<Rat>> gram(n, std::vector<Rat>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) gram[i][j] = wdot(simple[i], simple[j]);
        for (const Weight& x : closure) {
            std::vector<Rat> rhs(n);
            for (std::size_t i = 0; i < n; ++i) rhs[i] = wdot(x, simple[i]);
            std::vector<Rat> c = solve_linear(gram, rhs);
            Weight check = wzero(dim);
            bool nonneg = true, nonpos = true;
            for (std::size_t i = 0; i < n; ++i) {
                check = wadd(check, wscale(c[i], simple[i]));
                if (c[i] < Rat(0)) nonneg = false;
                if (c[i] > Rat(0)) nonpos = false;
            }
            if (check != x || (!nonneg && !nonpos))
                throw Error("a-roots do not form the simple system of a closed subsystem");
            if (nonneg) a_pos.push_back(x);
        }
    }
    std::sort(a_pos.begin(), a_pos.end());

    std::vector<Weight> indec = indecomposables(a_pos);
    std::sort(indec.begin(), indec.end());
    std::vector<Weight> simple_sorted = simple;
    std::sort(simple_sorted.begin(), simple_sorted.end());
    if (indec != simple_sorted)
        throw Error("a-roots are decomposable inside the generated subsystem");

    spec.a.simple_roots = simple;
    spec.a.positive_roots = a_pos;
    spec.a.rho = half_sum(a_pos, dim);

    // Orthogonal partner: all positive roots orthogonal to every a-root.
    std::vector<Weight> perp_pos;
    for (const auto& [root, mult] : ambient.positive_roots) {
        bool ortho = true;
        for (const Weight& b : simple)
            if (wdot(root, b) != Rat(0)) {
                ortho = false;
                break;
            }
        if (ortho) perp_pos.push_back(root);
    }
    spec.perp.positive_roots = perp_pos;
    spec.perp.simple_roots = indecomposables(perp_pos);
    std::sort(spec.perp.simple_roots.begin(), spec.perp.simple_roots.end());
    spec.perp.rho = half_sum(perp_pos, dim);

    spec.proj_a_ = projection_matrix(spec.a.simple_roots, ambient.ambient_dim);
    spec.proj_perp_ = projection_matrix(spec.perp.simple_roots, ambient.ambient_dim);

    std::vector<Weight> constraints = spec.a.simple_roots;
    constraints.insert(constraints.end(), spec.perp.simple_roots.begin(), spec.perp.simple_roots.end());
    spec.h_perp_basis = orthocomplement_in_span(ambient.simple_roots, constraints, dim);
    spec.proj_hperp_ = projection_matrix(spec.h_perp_basis, ambient.ambient_dim);

    if (spec.a.rank() + spec.perp.rank() + static_cast<int>(spec.h_perp_basis.size()) != ambient.rank())
        throw Error("internal: Cartan splitting ranks do not add up");

    spec.defect_a = wsub(spec.a.rho, spec.project_a(ambient.rho));
    spec.defect_perp = wsub(spec.perp.rho, spec.project_perp(ambient.rho));

    // W_{a_perp}: close the perp-simple reflections under composition.
    std::set<WeylElement> group{identity_element(ambient)};
    std::vector<WeylElement> gens;
    for (const Weight& s : spec.perp.simple_roots) gens.push_back(reflection_element(ambient, s));
    std::vector<WeylElement> frontier(group.begin(), group.end());
    while (!frontier.empty()) {
        std::vector<WeylElement> next;
        for (const WeylElement& w : frontier)
            for (const WeylElement& g : gens) {
                WeylElement prod = compose(ambient, g, w);
                if (group.insert(prod).second) next.push_back(prod);
            }
        frontier = std::move(next);
    }
    spec.perp_weyl.assign(group.begin(), group.end());
    std::sort(spec.perp_weyl.begin(), spec.perp_weyl.end(), [](const WeylElement& x, const WeylElement& y) {
        if (x.length() != y.length()) return x.length() < y.length();
        return x.rho_image < y.rho_image;
    });

    return spec;
}

Weight EmbeddingSpec::project_a(const Weight& x) const { return apply_matrix(proj_a_, x); }
Weight EmbeddingSpec::project_perp(const Weight& x) const { return apply_matrix(proj_perp_, x); }
Weight EmbeddingSpec::project_hperp(const Weight& x) const { return apply_matrix(proj_hperp_, x); }

Weight EmbeddingSpec::project_atilde(const Weight& x) const {
    return wadd(apply_matrix(proj_a_, x), apply_matrix(proj_hperp_, x));
}

std::vector<Rat> EmbeddingSpec::hperp_coords(const Weight& x) const {
    if (h_perp_basis.empty()) return {};
    const std::size_t n = h_perp_basis.size();
    std::vector<std::vector<Rat>> gram(n, std::vector<Rat>(n));
    std::vector<Rat> rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        rhs[i] = wdot(x, h_perp_basis[i]);
        for (std::size_t j = 0; j < n; ++j) gram[i][j] = wdot(h_perp_basis[i], h_perp_basis[j]);
    }
    return solve_linear(gram, rhs);
}

std::string EmbeddingSpec::descriptor() const {
    std::string s = ambient.id.str() + " <- [";
    for (std::size_t k = 0; k < a_root_coords.size(); ++k) {
        if (k) s += ";";
        for (std::size_t i = 0; i < a_root_coords[k].size(); ++i) {
            if (i) s += ",";
            s += std::to_string(a_root_coords[k][i]);
        }
    }
    return s + "]";
}

std::vector<WeylElement> orthogonal_weyl_subgroup(const EmbeddingSpec& spec) { return spec.perp_weyl; }

} // namespace wv
