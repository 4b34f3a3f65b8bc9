#include "wv/rootspace.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wv {

Weight wadd(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) throw Error("weight dimension mismatch");
    Weight r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Weight wsub(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) throw Error("weight dimension mismatch");
    Weight r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Weight wscale(const Rat& c, const Weight& a) {
    Weight r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

Weight wneg(const Weight& a) { return wscale(Rat(-1), a); }

Weight wzero(std::size_t dim) { return Weight(dim, Rat(0)); }

bool wis_zero(const Weight& a) {
    return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == Rat(0); });
}

Rat wdot(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) throw Error("weight dimension mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::string wstr(const Weight& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += rat_str(a[i]);
    }
    return s + ")";
}

AlgebraId parse_algebra_id(const std::string& s) {
    if (s.size() < 2) throw Error("bad algebra descriptor: '" + s + "'");
    char c = s[0];
    if (c < 'A' || c > 'G') throw Error("bad series letter: '" + s + "'");
    int rank = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw Error("bad rank in descriptor: '" + s + "'");
        rank = rank * 10 + (s[i] - '0');
    }
    AlgebraId id{static_cast<Series>(c), rank};
    bool ok = false;
    switch (id.series) {
        case Series::A: ok = rank >= 1; break;
        case Series::B: ok = rank >= 2; break;
        case Series::C: ok = rank >= 2; break;
        case Series::D: ok = rank >= 3; break;
        case Series::E: ok = rank == 6 || rank == 7 || rank == 8; break;
        case Series::F: ok = rank == 4; break;
        case Series::G: ok = rank == 2; break;
    }
    if (!ok || rank > 8) throw Error("unsupported series/rank: '" + s + "'");
    return id;
}

std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs) {
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == Rat(0)) ++piv;
        if (piv == n) throw Error("singular linear system");
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        Rat d = m[col][col];
        for (std::size_t j = col; j < n; ++j) m[col][j] /= d;
        rhs[col] /= d;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == Rat(0)) continue;
            Rat f = m[row][col];
            for (std::size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
            rhs[row] -= f * rhs[col];
        }
    }
    return rhs;
}

namespace {

Weight ebasis(int dim, std::initializer_list<std::pair<int, Rat>> entries) {
    Weight w(static_cast<std::size_t>(dim), Rat(0));
    for (auto& [i, v] : entries) w[static_cast<std::size_t>(i)] = v;
    return w;
}

std::vector<Weight> simple_roots_for(const AlgebraId& id, int& ambient_dim) {
    const int r = id.rank;
    std::vector<Weight> s;
    const Rat h(1, 2);
    switch (id.series) {
        case Series::A:
            ambient_dim = r + 1;
            for (int i = 0; i < r; ++i) s.push_back(ebasis(r + 1, {{i, 1}, {i + 1, -1}}));
            break;
        case Series::B:
            ambient_dim = r;
            for (int i = 0; i + 1 < r; ++i) s.push_back(ebasis(r, {{i, 1}, {i + 1, -1}}));
            s.push_back(ebasis(r, {{r - 1, 1}}));
            break;
        case Series::C:
            ambient_dim = r;
            for (int i = 0; i + 1 < r; ++i) s.push_back(ebasis(r, {{i, 1}, {i + 1, -1}}));
            s.push_back(ebasis(r, {{r - 1, 2}}));
            break;
        case Series::D:
            ambient_dim = r;
            for (int i = 0; i + 1 < r; ++i) s.push_back(ebasis(r, {{i, 1}, {i + 1, -1}}));
            s.push_back(ebasis(r, {{r - 2, 1}, {r - 1, 1}}));
            break;
        case Series::E: {
            ambient_dim = 8;
            Weight a1(8, -h);
            a1[0] = h;
            a1[7] = h;
            for (int i = 2; i <= 6; ++i) a1[static_cast<std::size_t>(i - 1)] = -h;
            s.push_back(a1);
            s.push_back(ebasis(8, {{0, 1}, {1, 1}}));
            s.push_back(ebasis(8, {{1, 1}, {0, -1}}));
            for (int i = 0; i < r - 3; ++i) s.push_back(ebasis(8, {{i + 2, 1}, {i + 1, -1}}));
            break;
        }
        case Series::F:
            ambient_dim = 4;
            s.push_back(ebasis(4, {{1, 1}, {2, -1}}));
            s.push_back(ebasis(4, {{2, 1}, {3, -1}}));
            s.push_back(ebasis(4, {{3, 1}}));
            s.push_back(Weight{h, -h, -h, -h});
            break;
        case Series::G:
            ambient_dim = 3;
            s.push_back(ebasis(3, {{0, 1}, {1, -1}}));
            s.push_back(ebasis(3, {{0, -2}, {1, 1}, {2, 1}}));
            break;
    }
    return s;
}

int classical_positive_count(const AlgebraId& id) {
    const int r = id.rank;
    switch (id.series) {
        case Series::A: return r * (r + 1) / 2;
        case Series::B: return r * r;
        case Series::C: return r * r;
        case Series::D: return r * (r - 1);
        case Series::E: return r == 6 ? 36 : (r == 7 ? 63 : 120);
        case Series::F: return 24;
        case Series::G: return 6;
    }
    return 0;
}

} // namespace

RootDatum build_root_datum(const AlgebraId& id) {
    RootDatum d;
    d.id = id;
    d.simple_roots = simple_roots_for(id, d.ambient_dim);
    const int r = id.rank;

    d.symmetrizer.resize(static_cast<std::size_t>(r));
    d.cartan.assign(static_cast<std::size_t>(r), std::vector<long long>(static_cast<std::size_t>(r), 0));
    for (int i = 0; i < r; ++i) {
        d.symmetrizer[static_cast<std::size_t>(i)] =
            wdot(d.simple_roots[static_cast<std::size_t>(i)], d.simple_roots[static_cast<std::size_t>(i)]) / 2;
        for (int j = 0; j < r; ++j) {
            Rat a = Rat(2) * wdot(d.simple_roots[static_cast<std::size_t>(i)], d.simple_roots[static_cast<std::size_t>(j)]) /
                    wdot(d.simple_roots[static_cast<std::size_t>(j)], d.simple_roots[static_cast<std::size_t>(j)]);
            if (!rat_is_integer(a)) throw Error("non-integral Cartan pairing in " + id.str());
            d.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a.numerator();
        }
    }

    // Close the simple-root set under root strings, level by level in height.
    std::set<Weight> known(d.simple_roots.begin(), d.simple_roots.end());
    std::vector<Weight> frontier = d.simple_roots;
    std::vector<Weight> all = d.simple_roots;
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const Weight& beta : frontier) {
            for (int i = 0; i < r; ++i) {
                const Weight& ai = d.simple_roots[static_cast<std::size_t>(i)];
                // p = how far the alpha_i-string continues below beta
                int p = 0;
                Weight down = wsub(beta, ai);
                while (known.count(down)) {
                    ++p;
                    down = wsub(down, ai);
                }
                Rat pairing = Rat(2) * wdot(beta, ai) / wdot(ai, ai);
                if (!rat_is_integer(pairing)) throw Error("non-integral root string pairing");
                long long q = p - pairing.numerator();
                if (q > 0) {
                    Weight up = wadd(beta, ai);
                    if (known.insert(up).second) next.push_back(up);
                }
            }
        }
        for (const Weight& w : next) all.push_back(w);
        frontier = std::move(next);
    }
    if (static_cast<int>(all.size()) != classical_positive_count(id))
        throw Error("positive root count mismatch for " + id.str());
    std::sort(all.begin(), all.end());
    d.positive_roots.reserve(all.size());
    for (const Weight& w : all) d.positive_roots.emplace_back(w, 1);

    d.rho = wzero(static_cast<std::size_t>(d.ambient_dim));
    for (const auto& [root, mult] : d.positive_roots) d.rho = wadd(d.rho, wscale(Rat(mult, 2), root));

    // Fundamental weights from the inverse Cartan matrix: omega_i = sum_j invA[i][j] alpha_j.
    std::vector<std::vector<Rat>> a(static_cast<std::size_t>(r), std::vector<Rat>(static_cast<std::size_t>(r)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rat(d.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    for (int i = 0; i < r; ++i) {
        // row i of A^{-1}: solve A^T x = e_i  (since (A^{-1})_{ij} solves sum_j x_j A_{jk} = delta_ik)
        std::vector<std::vector<Rat>> at(static_cast<std::size_t>(r), std::vector<Rat>(static_cast<std::size_t>(r)));
        for (int p = 0; p < r; ++p)
            for (int q2 = 0; q2 < r; ++q2) at[static_cast<std::size_t>(p)][static_cast<std::size_t>(q2)] = a[static_cast<std::size_t>(q2)][static_cast<std::size_t>(p)];
        std::vector<Rat> e(static_cast<std::size_t>(r), Rat(0));
        e[static_cast<std::size_t>(i)] = Rat(1);
        std::vector<Rat> c = solve_linear(at, e);
        Weight omega = wzero(static_cast<std::size_t>(d.ambient_dim));
        for (int j = 0; j < r; ++j) omega = wadd(omega, wscale(c[static_cast<std::size_t>(j)], d.simple_roots[static_cast<std::size_t>(j)]));
        d.fundamental_weights.push_back(omega);
    }

    // Covectors recovering simple-root coordinates: cv_j = sum_i invGram[j][i] alpha_i.
    {
        std::vector<std::vector<Rat>> gram(static_cast<std::size_t>(r), std::vector<Rat>(static_cast<std::size_t>(r)));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    wdot(d.simple_roots[static_cast<std::size_t>(i)], d.simple_roots[static_cast<std::size_t>(j)]);
        for (int j = 0; j < r; ++j) {
            std::vector<Rat> e(static_cast<std::size_t>(r), Rat(0));
            e[static_cast<std::size_t>(j)] = Rat(1);
            std::vector<Rat> g = solve_linear(gram, e);
            Weight cv = wzero(static_cast<std::size_t>(d.ambient_dim));
            for (int i = 0; i < r; ++i) cv = wadd(cv, wscale(g[static_cast<std::size_t>(i)], d.simple_roots[static_cast<std::size_t>(i)]));
            d.coord_covectors.push_back(cv);
        }
    }

    auto labels = d.dynkin_labels(d.rho);
    for (const Rat& l : labels)
        if (l != Rat(1)) throw Error("Weyl vector pairing check failed for " + id.str());

    d.highest_root = d.positive_roots.front().first;
    Rat best = d.height(d.highest_root);
    for (const auto& [root, mult] : d.positive_roots) {
        Rat h = d.height(root);
        if (h > best) {
            best = h;
            d.highest_root = root;
        }
    }
    return d;
}

Rat RootDatum::inner_product(const Weight& x, const Weight& y) const {
    if (static_cast<int>(x.size()) != ambient_dim || static_cast<int>(y.size()) != ambient_dim)
        throw Error("weight does not match ambient dimension of " + id.str());
    return wdot(x, y);
}

std::vector<Rat> RootDatum::dynkin_labels(const Weight& x) const {
    std::vector<Rat> out;
    out.reserve(simple_roots.size());
    for (const Weight& a : simple_roots) out.push_back(Rat(2) * inner_product(x, a) / wdot(a, a));
    return out;
}

bool RootDatum::is_dominant(const Weight& x) const {
    for (const Weight& a : simple_roots)
        if (wdot(x, a) < Rat(0)) return false;
    return true;
}

bool RootDatum::is_integral(const Weight& x) const {
    for (const Rat& l : dynkin_labels(x))
        if (!rat_is_integer(l)) return false;
    return true;
}

bool RootDatum::is_positive_root(const Weight& x) const {
    for (const auto& [root, mult] : positive_roots)
        if (root == x) return true;
    return false;
}

bool RootDatum::is_root(const Weight& x) const { return is_positive_root(x) || is_positive_root(wneg(x)); }

Weight RootDatum::weight_from_labels(const std::vector<Rat>& labels) const {
    if (static_cast<int>(labels.size()) != rank()) throw Error("label count does not match rank of " + id.str());
    Weight w = wzero(static_cast<std::size_t>(ambient_dim));
    for (std::size_t i = 0; i < labels.size(); ++i) w = wadd(w, wscale(labels[i], fundamental_weights[i]));
    return w;
}

std::vector<Rat> RootDatum::simple_root_coords(const Weight& x) const {
    const int r = rank();
    std::vector<Rat> c(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) c[static_cast<std::size_t>(j)] = wdot(coord_covectors[static_cast<std::size_t>(j)], x);
    Weight check = wzero(static_cast<std::size_t>(ambient_dim));
    for (int j = 0; j < r; ++j) check = wadd(check, wscale(c[static_cast<std::size_t>(j)], simple_roots[static_cast<std::size_t>(j)]));
    if (check != x) throw Error("weight lies outside the root span of " + id.str());
    return c;
}

Rat RootDatum::height(const Weight& x) const {
    Rat s(0);
    for (const Rat& c : simple_root_coords(x)) s += c;
    return s;
}

} // namespace wv
