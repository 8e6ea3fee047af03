#include "derange/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace derange {

Face face_union(const Face& a, const Face& b) {
    Face out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Face face_difference(const Face& a, const Face& b) {
    Face out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool face_subset(const Face& a, const Face& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// ---------------------------------------------------------------------------

SimplicialComplex::SimplicialComplex() { faces_.insert(Face{}); }

SimplicialComplex SimplicialComplex::from_faces(std::vector<std::string> labels, std::set<Face> faces) {
    SimplicialComplex c;
    c.labels_ = std::move(labels);
    faces.insert(Face{});
    for (const Face& f : faces) {
        for (int v : f)
            if (v < 0 || v >= c.num_vertices())
                throw std::invalid_argument("SimplicialComplex: face uses an unknown vertex");
        if (!std::is_sorted(f.begin(), f.end()) ||
            std::adjacent_find(f.begin(), f.end()) != f.end())
            throw std::invalid_argument("SimplicialComplex: faces must be sorted vertex sets");
    }
    // verify closure under subsets
    for (const Face& f : faces) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            Face sub = f;
            sub.erase(sub.begin() + i);
            if (!faces.count(sub))
                throw std::invalid_argument("SimplicialComplex: face set is not downward closed");
        }
    }
    c.faces_ = std::move(faces);
    return c;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> labels,
                                                 const std::vector<Face>& facets) {
    std::set<Face> faces;
    faces.insert(Face{});
    std::function<void(const Face&)> close = [&](const Face& f) {
        if (!faces.insert(f).second) return;
        for (std::size_t i = 0; i < f.size(); ++i) {
            Face sub = f;
            sub.erase(sub.begin() + i);
            close(sub);
        }
    };
    for (Face f : facets) {
        std::sort(f.begin(), f.end());
        close(f);
    }
    SimplicialComplex c;
    c.labels_ = std::move(labels);
    for (const Face& f : faces)
        for (int v : f)
            if (v < 0 || v >= c.num_vertices())
                throw std::invalid_argument("SimplicialComplex: facet uses an unknown vertex");
    c.faces_ = std::move(faces);
    return c;
}

SimplicialComplex SimplicialComplex::simplex(int n) {
    if (n < 0) throw std::invalid_argument("simplex: negative vertex count");
    std::vector<std::string> labels;
    Face top;
    for (int i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i + 1));
        top.push_back(i);
    }
    return from_facets(std::move(labels), {top});
}

std::vector<Face> SimplicialComplex::facets() const {
    std::set<Face> covered;
    for (const Face& f : faces_) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            Face sub = f;
            sub.erase(sub.begin() + i);
            covered.insert(std::move(sub));
        }
    }
    std::vector<Face> out;
    for (const Face& f : faces_)
        if (!covered.count(f)) out.push_back(f);
    return out;
}

int SimplicialComplex::dim() const {
    std::size_t top = 0;
    for (const Face& f : faces_) top = std::max(top, f.size());
    return static_cast<int>(top) - 1;
}

bool SimplicialComplex::is_pure() const {
    auto fs = facets();
    for (const Face& f : fs)
        if (f.size() != fs.front().size()) return false;
    return true;
}

std::vector<Int> SimplicialComplex::f_vector() const {
    std::vector<Int> f(dim() + 2, Int(0));
    for (const Face& face : faces_) f[face.size()] += 1;
    return f;
}

IntPoly SimplicialComplex::h_polynomial() const {
    const std::vector<Int> f = f_vector();
    const int d = dim() + 1;
    IntPoly h;
    const IntPoly one_minus_x{1, -1};
    for (int i = 0; i <= d; ++i)
        h += f[i] * (IntPoly::monomial(1, i) * pow(one_minus_x, d - i));
    return h;
}

Int SimplicialComplex::facet_count() const { return Int(facets().size()); }

SimplicialComplex SimplicialComplex::link(const Face& f) const {
    if (!contains(f)) throw std::invalid_argument("link: face not in the complex");
    std::set<Face> out;
    for (const Face& g : faces_)
        if (face_subset(f, g)) out.insert(face_difference(g, f));
    SimplicialComplex c;
    c.labels_ = labels_;
    c.faces_ = std::move(out);
    return c;
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    SimplicialComplex c;
    c.labels_ = a.labels_;
    for (const std::string& l : b.labels_) c.labels_.push_back(l + "'");
    const int shift = a.num_vertices();
    for (const Face& fa : a.faces_) {
        for (const Face& fb : b.faces_) {
            Face f = fa;
            for (int v : fb) f.push_back(v + shift);
            c.faces_.insert(std::move(f));
        }
    }
    return c;
}

bool join_h_check(const SimplicialComplex& a, const SimplicialComplex& b) {
    return join(a, b).h_polynomial() == a.h_polynomial() * b.h_polynomial();
}

// ---------------------------------------------------------------------------

Subdivision::Subdivision(SimplicialComplex target, SimplicialComplex complex,
                         std::map<Face, Face> carrier)
    : target_(std::move(target)), complex_(std::move(complex)), carrier_(std::move(carrier)) {
    carrier_[Face{}] = Face{};
    for (const Face& f : complex_.faces()) {
        auto it = carrier_.find(f);
        if (it == carrier_.end()) throw std::invalid_argument("Subdivision: face without a carrier");
        if (!target_.contains(it->second))
            throw std::invalid_argument("Subdivision: carrier is not a target face");
    }
}

Subdivision Subdivision::trivial(const SimplicialComplex& c) {
    std::map<Face, Face> carrier;
    for (const Face& f : c.faces()) carrier[f] = f;
    return Subdivision(c, c, std::move(carrier));
}

const Face& Subdivision::carrier(const Face& f) const {
    auto it = carrier_.find(f);
    if (it == carrier_.end()) throw std::invalid_argument("carrier: unknown face");
    return it->second;
}

SimplicialComplex Subdivision::restriction_complex(const Face& target_face) const {
    if (!target_.contains(target_face))
        throw std::invalid_argument("restriction: face not in the target");
    std::set<Face> faces;
    for (const Face& f : complex_.faces())
        if (face_subset(carrier(f), target_face)) faces.insert(f);
    return SimplicialComplex::from_faces(complex_.labels(), std::move(faces));
}

Subdivision Subdivision::restriction(const Face& target_face) const {
    SimplicialComplex sub = restriction_complex(target_face);
    std::map<int, int> renumber;
    for (std::size_t i = 0; i < target_face.size(); ++i)
        renumber[target_face[i]] = static_cast<int>(i);
    SimplicialComplex simplex_target =
        SimplicialComplex::simplex(static_cast<int>(target_face.size()));
    std::map<Face, Face> carrier;
    for (const Face& f : sub.faces()) {
        Face c = this->carrier(f);
        for (int& v : c) v = renumber.at(v);
        std::sort(c.begin(), c.end());
        carrier[f] = std::move(c);
    }
    return Subdivision(std::move(simplex_target), std::move(sub), std::move(carrier));
}

void Subdivision::validate() const {
    for (const Face& f : complex_.faces()) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            Face sub = f;
            sub.erase(sub.begin() + i);
            if (!face_subset(carrier(sub), carrier(f)))
                throw std::logic_error("Subdivision: carrier is not monotone");
        }
    }
    for (const Face& t : target_.faces()) {
        SimplicialComplex r = restriction_complex(t);
        if (r.dim() != static_cast<int>(t.size()) - 1)
            throw std::logic_error("Subdivision: restriction has the wrong dimension");
    }
}

Subdivision compose(const Subdivision& gamma, const Subdivision& gamma_prime) {
    if (!(gamma_prime.target() == gamma.complex()))
        throw std::invalid_argument("compose: middle complexes differ");
    std::map<Face, Face> carrier;
    for (const Face& f : gamma_prime.complex().faces())
        carrier[f] = gamma.carrier(gamma_prime.carrier(f));
    return Subdivision(gamma.target(), gamma_prime.complex(), std::move(carrier));
}

namespace {

unsigned face_mask(const Face& f) {
    unsigned m = 0;
    for (int v : f) m |= 1u << v;
    return m;
}

void require_simplex_target(const Subdivision& s) {
    const int n = s.target().num_vertices();
    if (n > 25 || s.target().faces().size() != (std::size_t{1} << n))
        throw std::invalid_argument("local_h: target is not a full simplex");
}

IntPoly h_from_counts(const std::vector<Int>& count_by_size) {
    int d = 0;
    for (std::size_t i = 0; i < count_by_size.size(); ++i)
        if (count_by_size[i] != 0) d = static_cast<int>(i);
    IntPoly h;
    const IntPoly one_minus_x{1, -1};
    for (int i = 0; i <= d; ++i)
        h += count_by_size[i] * (IntPoly::monomial(1, i) * pow(one_minus_x, d - i));
    return h;
}

}  // namespace

IntPoly local_h(const Subdivision& s) {
    require_simplex_target(s);
    const int n = s.target().num_vertices();
    // bucket face counts by carrier mask and face size
    std::map<unsigned, std::vector<Int>> buckets;
    for (const Face& f : s.complex().faces()) {
        auto& counts = buckets[face_mask(s.carrier(f))];
        if (counts.size() < f.size() + 1) counts.resize(f.size() + 1, Int(0));
        counts[f.size()] += 1;
    }
    IntPoly acc;
    for (unsigned f_mask = 0; f_mask < (1u << n); ++f_mask) {
        std::vector<Int> counts(n + 1, Int(0));
        for (const auto& [mask, by_size] : buckets) {
            if ((mask & f_mask) != mask) continue;
            for (std::size_t i = 0; i < by_size.size(); ++i) counts[i] += by_size[i];
        }
        IntPoly h = h_from_counts(counts);
        int size = __builtin_popcount(f_mask);
        acc += (n - size) % 2 == 0 ? h : -h;
    }
    return acc;
}

IntPoly relative_local_h(const Subdivision& s, const Face& e) {
    require_simplex_target(s);
    if (!s.complex().contains(e))
        throw std::invalid_argument("relative_local_h: face not in the subdivision");
    const int n = s.target().num_vertices();
    const unsigned base = face_mask(s.carrier(e));
    IntPoly acc;
    for (unsigned f_mask = 0; f_mask < (1u << n); ++f_mask) {
        if ((f_mask & base) != base) continue;
        Face f;
        for (int v = 0; v < n; ++v)
            if (f_mask >> v & 1) f.push_back(v);
        SimplicialComplex restriction = s.restriction_complex(f);
        IntPoly h = restriction.link(e).h_polynomial();
        int size = __builtin_popcount(f_mask);
        acc += (n - size) % 2 == 0 ? h : -h;
    }
    return acc;
}

bool h_formula_check(const Subdivision& s) {
    if (!s.target().is_pure()) throw std::invalid_argument("h_formula_check: target is not pure");
    IntPoly rhs;
    for (const Face& f : s.target().faces())
        rhs += local_h(s.restriction(f)) * s.target().link(f).h_polynomial();
    return rhs == s.complex().h_polynomial();
}

bool decomposition_formula_check(const Subdivision& gamma, const Subdivision& gamma_prime) {
    IntPoly lhs = local_h(compose(gamma, gamma_prime));
    IntPoly rhs;
    for (const Face& e : gamma.complex().faces())
        rhs += local_h(gamma_prime.restriction(e)) * relative_local_h(gamma, e);
    return lhs == rhs;
}

IntPoly edgewise_h(const IntPoly& h, int d, int r) {
    if (d < 0 || r < 1) throw std::invalid_argument("edgewise_h: need d >= 0 and r >= 1");
    std::vector<Int> ruler(r, Int(1));
    return er_operator(pow(IntPoly(std::move(ruler)), d) * h, r);
}

// ---------------------------------------------------------------------------

Poset::Poset(std::vector<std::string> labels, std::vector<std::vector<bool>> strictly_less,
             std::vector<int> levels)
    : labels_(std::move(labels)), less_(std::move(strictly_less)), levels_(std::move(levels)) {
    const std::size_t m = labels_.size();
    if (less_.size() != m || levels_.size() != m)
        throw std::invalid_argument("Poset: inconsistent sizes");
    for (std::size_t a = 0; a < m; ++a) {
        if (less_[a].size() != m) throw std::invalid_argument("Poset: inconsistent sizes");
        if (less_[a][a]) throw std::invalid_argument("Poset: order is not irreflexive");
        for (std::size_t b = 0; b < m; ++b) {
            if (less_[a][b] && less_[b][a]) throw std::invalid_argument("Poset: order is not antisymmetric");
            for (std::size_t c = 0; less_[a][b] && c < m; ++c)
                if (less_[b][c] && !less_[a][c])
                    throw std::invalid_argument("Poset: order is not transitive");
        }
    }
}

Poset Poset::face_poset(const SimplicialComplex& c, std::map<Face, int>* ids) {
    std::vector<Face> elems;
    for (const Face& f : c.faces())
        if (!f.empty()) elems.push_back(f);
    std::sort(elems.begin(), elems.end(), [](const Face& a, const Face& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<std::string> labels;
    std::vector<int> levels;
    for (const Face& f : elems) {
        std::ostringstream os;
        os << "{";
        for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << c.labels()[f[i]];
        os << "}";
        labels.push_back(os.str());
        levels.push_back(static_cast<int>(f.size()));
    }
    std::vector<std::vector<bool>> less(elems.size(), std::vector<bool>(elems.size(), false));
    for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = 0; b < elems.size(); ++b)
            less[a][b] = a != b && face_subset(elems[a], elems[b]);
    if (ids) {
        ids->clear();
        for (std::size_t i = 0; i < elems.size(); ++i) (*ids)[elems[i]] = static_cast<int>(i);
    }
    return Poset(std::move(labels), std::move(less), std::move(levels));
}

SimplicialComplex order_complex(const Poset& p) {
    const int m = p.size();
    std::vector<std::vector<int>> above(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (p.less(a, b)) above[a].push_back(b);

    std::set<Face> faces;
    faces.insert(Face{});
    Face chain;
    std::function<void(int)> extend = [&](int last) {
        Face sorted = chain;
        std::sort(sorted.begin(), sorted.end());
        faces.insert(std::move(sorted));
        for (int next : above[last]) {
            chain.push_back(next);
            extend(next);
            chain.pop_back();
        }
    };
    for (int start = 0; start < m; ++start) {
        chain.push_back(start);
        extend(start);
        chain.pop_back();
    }
    std::vector<std::string> labels;
    for (int i = 0; i < m; ++i) labels.push_back(p.label(i));
    return SimplicialComplex::from_faces(std::move(labels), std::move(faces));
}

Subdivision barycentric_subdivision(const SimplicialComplex& c) {
    std::map<Face, int> ids;
    Poset fp = Poset::face_poset(c, &ids);
    SimplicialComplex sd = order_complex(fp);
    std::vector<Face> face_of_vertex(fp.size());
    for (const auto& [face, id] : ids) face_of_vertex[id] = face;
    std::map<Face, Face> carrier;
    for (const Face& chain : sd.faces()) {
        if (chain.empty()) continue;
        Face top;
        for (int v : chain)
            if (face_of_vertex[v].size() > top.size()) top = face_of_vertex[v];
        carrier[chain] = std::move(top);
    }
    return Subdivision(c, std::move(sd), std::move(carrier));
}

namespace {

// interval poset elements with their endpoints
struct IntervalPosetData {
    Poset poset;
    std::vector<std::pair<Face, Face>> intervals;
};

IntervalPosetData interval_poset(const SimplicialComplex& c) {
    std::vector<std::pair<Face, Face>> elems;
    for (const Face& a : c.faces()) {
        if (a.empty()) continue;
        for (const Face& b : c.faces())
            if (face_subset(a, b)) elems.emplace_back(a, b);
    }
    std::sort(elems.begin(), elems.end());
    std::vector<std::string> labels;
    std::vector<int> levels;
    for (const auto& [a, b] : elems) {
        std::ostringstream os;
        os << "[";
        auto put = [&](const Face& f) {
            os << "{";
            for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << c.labels()[f[i]];
            os << "}";
        };
        put(a);
        os << ",";
        put(b);
        os << "]";
        labels.push_back(os.str());
        levels.push_back(static_cast<int>(b.size() - a.size()) + 1);
    }
    std::vector<std::vector<bool>> less(elems.size(), std::vector<bool>(elems.size(), false));
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j)
            less[i][j] = i != j && face_subset(elems[j].first, elems[i].first) &&
                         face_subset(elems[i].second, elems[j].second);
    return {Poset(std::move(labels), std::move(less), std::move(levels)), std::move(elems)};
}

}  // namespace

Poset cubical_barycentric_poset(const SimplicialComplex& c) { return interval_poset(c).poset; }

KnComplex k_n(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("k_n: n out of the supported range [1,6]");
    SimplicialComplex target = SimplicialComplex::simplex(n);
    IntervalPosetData ip = interval_poset(target);
    SimplicialComplex kn = order_complex(ip.poset);

    Subdivision sd = barycentric_subdivision(target);
    std::map<Face, int> sd_ids;
    Poset::face_poset(target, &sd_ids);

    std::map<Face, Face> carrier_simplex, carrier_sd;
    for (const Face& chain : kn.faces()) {
        if (chain.empty()) continue;
        Face top_b;
        std::set<Face> endpoints;
        for (int v : chain) {
            const auto& [a, b] = ip.intervals[v];
            if (b.size() > top_b.size()) top_b = b;
            endpoints.insert(a);
            endpoints.insert(b);
        }
        carrier_simplex[chain] = std::move(top_b);
        Face sd_face;
        for (const Face& f : endpoints) sd_face.push_back(sd_ids.at(f));
        std::sort(sd_face.begin(), sd_face.end());
        carrier_sd[chain] = std::move(sd_face);
    }

    KnComplex out{kn,
                  Subdivision(target, kn, std::move(carrier_simplex)),
                  Subdivision(sd.complex(), kn, std::move(carrier_sd)),
                  sd,
                  std::move(ip.intervals)};
    return out;
}

Poset p_n_poset(int n) {
    if (n < 0 || n > 10) throw std::invalid_argument("p_n_poset: n out of the supported range [0,10]");
    // sign choices: digit 0 = absent, 1 = +i, 2 = -i; at least one positive
    std::vector<std::vector<int>> elems;  // signed element lists
    std::vector<int> digits(n, 0);
    while (true) {
        std::vector<int> signed_set;
        bool has_positive = false;
        for (int i = 0; i < n; ++i) {
            if (digits[i] == 1) {
                signed_set.push_back(i + 1);
                has_positive = true;
            } else if (digits[i] == 2) {
                signed_set.push_back(-(i + 1));
            }
        }
        if (has_positive) elems.push_back(std::move(signed_set));
        int i = 0;
        while (i < n && digits[i] == 2) digits[i++] = 0;
        if (i == n) break;
        ++digits[i];
    }
    std::sort(elems.begin(), elems.end());
    std::vector<std::string> labels;
    std::vector<int> levels;
    for (const auto& s : elems) {
        std::ostringstream os;
        os << "{";
        for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
        os << "}";
        labels.push_back(os.str());
        levels.push_back(static_cast<int>(s.size()));
    }
    auto contains_all = [](const std::vector<int>& big, const std::vector<int>& small) {
        for (int v : small)
            if (std::find(big.begin(), big.end(), v) == big.end()) return false;
        return true;
    };
    // reverse inclusion: a < b when the set of a strictly contains that of b
    std::vector<std::vector<bool>> less(elems.size(), std::vector<bool>(elems.size(), false));
    for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = 0; b < elems.size(); ++b)
            less[a][b] = a != b && elems[a].size() > elems[b].size() && contains_all(elems[a], elems[b]);
    return Poset(std::move(labels), std::move(less), std::move(levels));
}

FlagVectors flag_vectors(const Poset& p, int n) {
    const int m = p.size();
    if (n < 0 || n > 20) throw std::invalid_argument("flag_vectors: n out of range");
    for (int i = 0; i < m; ++i)
        if (p.level(i) < 1 || p.level(i) > n)
            throw std::invalid_argument("flag_vectors: element level outside [1,n]");

    // topological order along the strict order
    std::vector<int> order, indegree(m, 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (p.less(a, b)) ++indegree[b];
    std::vector<int> queue;
    for (int i = 0; i < m; ++i)
        if (indegree[i] == 0) queue.push_back(i);
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        order.push_back(v);
        for (int b = 0; b < m; ++b)
            if (p.less(v, b) && --indegree[b] == 0) queue.push_back(b);
    }

    // chains counted by level set; dp[v][mask] = chains with maximum v
    std::vector<std::map<unsigned, Int>> dp(m);
    FlagVectors out;
    out.alpha[0] = 1;
    for (int v : order) {
        unsigned bit = 1u << (p.level(v) - 1);
        dp[v][bit] += 1;
        for (int u = 0; u < m; ++u) {
            if (!p.less(u, v)) continue;
            for (const auto& [mask, count] : dp[u]) {
                if (mask & bit) throw std::logic_error("flag_vectors: repeated level along a chain");
                dp[v][mask | bit] += count;
            }
        }
        for (const auto& [mask, count] : dp[v]) out.alpha[mask] += count;
    }
    // Moebius inversion over subsets
    for (unsigned s = 0; s < (1u << n); ++s) {
        Int b = 0;
        for (unsigned t = s;; t = (t - 1) & s) {
            auto it = out.alpha.find(t);
            if (it != out.alpha.end()) {
                int diff = __builtin_popcount(s) - __builtin_popcount(t);
                b += diff % 2 == 0 ? it->second : -it->second;
            }
            if (t == 0) break;
        }
        out.beta[s] = b;
    }
    return out;
}

}  // namespace derange
