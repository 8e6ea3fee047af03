#pragma once

#include "derange/intpoly.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace derange {

/// A face is a sorted list of vertex indices; the empty face is {}.
using Face = std::vector<int>;

Face face_union(const Face& a, const Face& b);
Face face_difference(const Face& a, const Face& b);
bool face_subset(const Face& a, const Face& b);

/// Finite abstract simplicial complex with an explicit, downward-closed
/// face set. The empty face belongs to every complex; the smallest complex
/// is {{}} with h = 1.
class SimplicialComplex {
public:
    SimplicialComplex();

    static SimplicialComplex from_facets(std::vector<std::string> labels, const std::vector<Face>& facets);
    static SimplicialComplex from_faces(std::vector<std::string> labels, std::set<Face> faces);
    /// Full simplex on n vertices labeled "1".."n".
    static SimplicialComplex simplex(int n);

    int num_vertices() const noexcept { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::set<Face>& faces() const noexcept { return faces_; }
    std::vector<Face> facets() const;
    bool contains(const Face& f) const { return faces_.count(f) > 0; }

    /// Dimension; -1 when only the empty face is present.
    int dim() const;
    bool is_pure() const;

    /// Face counts (f_{-1}, f_0, ..., f_{dim}), so entry i counts faces of
    /// cardinality i.
    std::vector<Int> f_vector() const;
    IntPoly h_polynomial() const;
    Int facet_count() const;

    SimplicialComplex link(const Face& f) const;

    friend SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.faces_ == b.faces_;
    }

    /// h(a * b) = h(a) h(b).
    friend bool join_h_check(const SimplicialComplex& a, const SimplicialComplex& b);

private:
    std::vector<std::string> labels_;
    std::set<Face> faces_;
};

/// Simplicial subdivision: a complex refining a target complex, with the
/// carrier of every nonempty face stored explicitly. The carrier of the
/// empty face is the empty face.
class Subdivision {
public:
    Subdivision(SimplicialComplex target, SimplicialComplex complex, std::map<Face, Face> carrier);

    static Subdivision trivial(const SimplicialComplex& c);

    const SimplicialComplex& target() const noexcept { return target_; }
    const SimplicialComplex& complex() const noexcept { return complex_; }
    const Face& carrier(const Face& f) const;

    /// Faces carried into the given target face.
    SimplicialComplex restriction_complex(const Face& target_face) const;
    /// The restriction viewed as a subdivision of the full simplex on the
    /// vertices of target_face (target vertex ids are renumbered 0..k-1).
    Subdivision restriction(const Face& target_face) const;

    /// Checks carrier monotonicity, carrier values being target faces, and
    /// every restriction having the dimension of its target face. Throws on
    /// the first violation.
    void validate() const;

private:
    SimplicialComplex target_;
    SimplicialComplex complex_;
    std::map<Face, Face> carrier_;
};

/// Views a subdivision of a subdivision as one subdivision of the original
/// target by composing carriers. gamma_prime.target() must equal
/// gamma.complex().
Subdivision compose(const Subdivision& gamma, const Subdivision& gamma_prime);

/// Inclusion-exclusion of restriction h-polynomials over the faces of the
/// subdivided simplex. The target must be a full simplex.
IntPoly local_h(const Subdivision& s);

/// Same alternating sum with links at a fixed face e of the subdivision,
/// over target faces containing the carrier of e. Reduces to local_h for
/// the empty face.
IntPoly relative_local_h(const Subdivision& s, const Face& e);

/// h(complex) = sum over target faces F of local_h(restriction to F) times
/// h(link of F in the target). The target must be pure.
bool h_formula_check(const Subdivision& s);

/// local_h(composed subdivision) = sum over faces e of gamma.complex() of
/// local_h(gamma_prime restricted to e) * relative_local_h(gamma, e).
bool decomposition_formula_check(const Subdivision& gamma, const Subdivision& gamma_prime);

/// h-polynomial of the r-fold edgewise refinement, computed from h and the
/// facet cardinality d alone.
IntPoly edgewise_h(const IntPoly& h, int d, int r);

/// Finite poset with an explicit strict order and an integer level per
/// element (used as the rank data for flag vectors).
class Poset {
public:
    Poset(std::vector<std::string> labels, std::vector<std::vector<bool>> strictly_less,
          std::vector<int> levels);

    int size() const noexcept { return static_cast<int>(labels_.size()); }
    bool less(int a, int b) const { return less_[a][b]; }
    const std::string& label(int i) const { return labels_[i]; }
    int level(int i) const { return levels_[i]; }

    static Poset face_poset(const SimplicialComplex& c, std::map<Face, int>* ids = nullptr);

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<bool>> less_;
    std::vector<int> levels_;
};

/// Simplicial complex of chains of the poset.
SimplicialComplex order_complex(const Poset& p);

/// Barycentric subdivision of a complex: chains of nonempty faces, carried
/// to the largest face of the chain.
Subdivision barycentric_subdivision(const SimplicialComplex& c);

/// Poset of nonempty closed intervals [F, G] of the face poset, ordered by
/// containment of intervals.
Poset cubical_barycentric_poset(const SimplicialComplex& c);

/// The order complex of the interval poset of the simplex on [n], carrying
/// two subdivision structures: over the simplex itself (carrier = top
/// endpoint of the largest interval) and over the barycentric subdivision
/// (carrier = all interval endpoints).
struct KnComplex {
    SimplicialComplex complex;
    Subdivision over_simplex;
    Subdivision over_sd;
    Subdivision sd;  // the barycentric subdivision serving as the middle target
    /// Endpoints (A, B) of the interval labeling each vertex of the complex.
    std::vector<std::pair<Face, Face>> intervals;
};

KnComplex k_n(int n);  // guarded at 1 <= n <= 6

/// The poset of sign-choice subsets with at least one positive entry,
/// ordered by reverse inclusion and leveled by cardinality; isomorphic to
/// the interval poset of the simplex on [n].
Poset p_n_poset(int n);

/// Flag f- and h-vectors indexed by level sets S, encoded as bitmasks with
/// bit s-1 for level s in [n].
struct FlagVectors {
    std::map<unsigned, Int> alpha;
    std::map<unsigned, Int> beta;
};

FlagVectors flag_vectors(const Poset& p, int n);

}  // namespace derange
