#pragma once

#include "wv/rational.hpp"

#include <string>
#include <vector>

namespace wv {

/// A weight in the fixed orthogonal ambient basis of h* (exact rationals).
using Weight = std::vector<Rat>;

Weight wadd(const Weight& a, const Weight& b);
Weight wsub(const Weight& a, const Weight& b);
Weight wscale(const Rat& c, const Weight& a);
Weight wneg(const Weight& a);
Weight wzero(std::size_t dim);
bool wis_zero(const Weight& a);
Rat wdot(const Weight& a, const Weight& b); // plain ambient dot product
std::string wstr(const Weight& a);

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct AlgebraId {
    Series series;
    int rank;

    std::string str() const { return std::string(1, static_cast<char>(series)) + std::to_string(rank); }
    bool operator==(const AlgebraId&) const = default;
};

/// Parses descriptor strings like "B2", "A3", "G2". Throws on invalid series/rank.
AlgebraId parse_algebra_id(const std::string& s);

/// Root system of a finite-dimensional simple Lie algebra.
///
/// Weights live in an orthogonal ambient basis with the standard dot product:
/// rank coordinates for B, C, D, F and E8; rank+1 zero-sum coordinates for A_r
/// and G2; eight coordinates for E6 and E7 (whose lattices do not embed in
/// rank-many rational coordinates). All data is exact.
struct RootDatum {
    AlgebraId id;
    int ambient_dim = 0;
    std::vector<std::vector<long long>> cartan;      // cartan[i][j] = <alpha_i, alpha_j^vee>
    std::vector<Rat> symmetrizer;                    // d_i = <alpha_i, alpha_i>/2
    std::vector<Weight> simple_roots;
    std::vector<std::pair<Weight, int>> positive_roots; // (root, multiplicity); mult = 1 throughout
    Weight rho;
    std::vector<Weight> fundamental_weights;
    Weight highest_root;
    std::vector<Weight> coord_covectors; // coords_j(x) = <coord_covectors[j], x> on span S

    int rank() const { return id.rank; }

    Rat inner_product(const Weight& x, const Weight& y) const;
    /// Component i is 2<x, alpha_i> / <alpha_i, alpha_i>.
    std::vector<Rat> dynkin_labels(const Weight& x) const;
    bool is_dominant(const Weight& x) const;
    /// True iff all Dynkin labels are integers (weight-lattice membership in span S).
    bool is_integral(const Weight& x) const;
    bool is_positive_root(const Weight& x) const;
    bool is_root(const Weight& x) const;

    /// Weight with the given Dynkin labels (sum of label_i * omega_i).
    Weight weight_from_labels(const std::vector<Rat>& labels) const;

    /// Coordinates of x in the simple-root basis; throws if x is outside span S.
    std::vector<Rat> simple_root_coords(const Weight& x) const;
    /// Sum of simple-root coordinates; the grading used for truncation windows.
    Rat height(const Weight& x) const;
};

RootDatum build_root_datum(const AlgebraId& id);
inline RootDatum build_root_datum(const std::string& s) { return build_root_datum(parse_algebra_id(s)); }

/// Solves M x = rhs exactly; M must be square invertible.
std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs);

} // namespace wv
