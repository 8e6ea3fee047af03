#include "derange/verify.hpp"

#include "derange/analysis.hpp"
#include "derange/bijection.hpp"
#include "derange/permutation.hpp"
#include "derange/signed_permutation.hpp"
#include "derange/simplicial.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace derange::verify {

namespace {

struct Checker {
    SuiteResult result;

    void expect(const std::string& check, bool ok, const std::string& expected = "true",
                const std::string& got = "false") {
        ++result.cases;
        if (!ok) result.failures.push_back({check, expected, got});
    }

    void expect_eq(const std::string& check, const IntPoly& expected, const IntPoly& got) {
        ++result.cases;
        if (!(expected == got)) result.failures.push_back({check, expected.str(), got.str()});
    }

    void expect_eq_int(const std::string& check, const Int& expected, const Int& got) {
        ++result.cases;
        if (expected != got) result.failures.push_back({check, expected.str(), got.str()});
    }

    void run_guarded(const std::string& check, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            ++result.cases;
            result.failures.push_back({check, "no exception", e.what()});
        }
    }
};

FamilyCalculator make_calc(const Options& opt) {
    FamilyCalculator::Options o;
    o.jobs = opt.jobs;
    o.allow_large = opt.allow_large;
    return FamilyCalculator(o);
}

int bound(const Options& opt, int fallback) { return opt.max_n >= 0 ? opt.max_n : fallback; }

}  // namespace

IntPoly enumerated(Family f, int n, bool allow_large) {
    std::vector<Int> acc(n + 1, Int(0));
    auto bump = [&](int k) { acc[k] += 1; };
    switch (f) {
        case Family::A:
            for_each_sn(n, [&](const Permutation& p) { bump(p.des()); });
            break;
        case Family::DA:
            for_each_sn(n, [&](const Permutation& p) {
                if (p.is_derangement()) bump(p.exc());
            });
            break;
        case Family::B:
            for_each_bn(n, [&](const SignedPermutation& w) { bump(w.des_b()); }, allow_large);
            break;
        case Family::BPlus:
            if (n == 0) return IntPoly::constant(1);
            for_each_bn(n, [&](const SignedPermutation& w) {
                if (w.classify() == SignedPermutation::Half::Plus) bump(w.des_b());
            }, allow_large);
            break;
        case Family::BMinus:
            if (n == 0) return IntPoly{};
            for_each_bn(n, [&](const SignedPermutation& w) {
                if (w.classify() == SignedPermutation::Half::Minus) bump(w.des_b());
            }, allow_large);
            break;
        case Family::DB:
            for_each_bn(n, [&](const SignedPermutation& w) {
                if (w.is_derangement_b()) bump(w.exc_b());
            }, allow_large);
            break;
        case Family::FPlus:
            if (n == 0) return IntPoly::constant(1);
            for_each_bn(n, [&](const SignedPermutation& w) {
                if (w.is_derangement_b() && w.in_b_star()) bump(w.exc_b());
            }, allow_large);
            break;
        case Family::FMinus:
            if (n == 0) return IntPoly{};
            for_each_bn(n, [&](const SignedPermutation& w) {
                if (w.is_derangement_b() && !w.in_b_star()) bump(w.exc_b());
            }, allow_large);
            break;
        default:
            throw std::invalid_argument("enumerated: family has no direct enumeration");
    }
    return IntPoly(std::move(acc));
}

namespace {

// ---- suites -------------------------------------------------------------

SuiteResult suite_main_formula(const Options& opt) {
    Checker c;
    FamilyCalculator calc = make_calc(opt);
    const int max_n = bound(opt, 6);
    for (int n = 0; n <= max_n; ++n) {
        std::string tag = "main-formula n=" + std::to_string(n);
        c.run_guarded(tag, [&] {
            IntPoly formula = main_formula(n, calc);
            IntPoly reference = n <= 7 ? enumerated(Family::DB, n, opt.allow_large) : calc.value(Family::DB, n);
            c.expect_eq(tag, reference, formula);
        });
    }
    return c.result;
}

SuiteResult suite_decomposition(const Options& opt) {
    Checker c;
    FamilyCalculator calc = make_calc(opt);
    const int max_n = bound(opt, 7);
    for (int n = 0; n <= max_n; ++n) {
        std::string tag = "decomposition n=" + std::to_string(n);
        c.run_guarded(tag, [&] {
            IntPoly db = calc.value(Family::DB, n);
            auto [plus, minus] = symmetric_decompose(db, n);
            c.expect_eq(tag + " symmetric part", f_plus_multinomial(n, calc), plus);
            c.expect_eq(tag + " shifted part", f_minus_multinomial(n, calc), minus);
            const IntPoly xi_plus = calc.value(Family::XiPlus, n);
            const IntPoly xi_minus = calc.value(Family::XiMinus, n);
            auto nonneg = [](const IntPoly& p) {
                return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                                   [](const Int& v) { return v >= 0; });
            };
            c.expect(tag + " xi+ nonnegative", nonneg(xi_plus));
            c.expect(tag + " xi- nonnegative", nonneg(xi_minus));
            auto [uni, peaks] = unimodal_peaks(db);
            bool peak_ok = uni && std::find(peaks.begin(), peaks.end(), (n + 1) / 2) != peaks.end();
            c.expect(tag + " peak at floor((n+1)/2)", peak_ok);
        });
    }
    return c.result;
}

SuiteResult suite_localint(const Options& opt) {
    Checker c;
    FamilyCalculator calc = make_calc(opt);
    const int max_n = bound(opt, 8);
    for (int n = 1; n <= std::min(max_n, 5); ++n) {
        std::string tag = "local-h of K_n n=" + std::to_string(n);
        c.run_guarded(tag, [&] {
            KnComplex kn = k_n(n);
            c.expect_eq(tag, calc.value(Family::FPlus, n), local_h(kn.over_simplex));
        });
    }
    for (int n = 0; n <= max_n; ++n) {
        std::string tag = "alternating sums n=" + std::to_string(n);
        c.run_guarded(tag, [&] {
            c.expect_eq(tag + " f+", calc.value(Family::FPlus, n), f_plus_alt_sum(n, calc));
            c.expect_eq(tag + " f-", calc.value(Family::FMinus, n), f_minus_alt_sum(n, calc));
        });
    }
    return c.result;
}

SuiteResult suite_relative_local_h(const Options& opt) {
    Checker c;
    FamilyCalculator calc = make_calc(opt);
    const int max_n = bound(opt, 4);
    for (int n = 1; n <= std::min(max_n, 5); ++n) {
        std::string tag = "relative local h over sd n=" + std::to_string(n);
        c.run_guarded(tag, [&] {
            SimplicialComplex simplex = SimplicialComplex::simplex(n);
            Subdivision sd = barycentric_subdivision(simplex);
            std::map<Face, int> ids;
            Poset::face_poset(simplex, &ids);
            std::vector<Face> face_of_vertex(ids.size());
            for (const auto& [face, id] : ids) face_of_vertex[id] = face;

            for (const Face& e : sd.complex().faces()) {
                // chain S_1 c S_2 c ... c S_k gives block sizes
                std::vector<Face> chain;
                for (int v : e) chain.push_back(face_of_vertex[v]);
                std::sort(chain.begin(), chain.end(),
                          [](const Face& a, const Face& b) { return a.size() < b.size(); });
                IntPoly expected = IntPoly::constant(1);
                std::size_t covered = chain.empty() ? 0 : chain.back().size();
                expected *= calc.value(Family::DA, n - static_cast<int>(covered));
                std::size_t prev = 0;
                for (const Face& s : chain) {
                    expected *= calc.value(Family::A, static_cast<int>(s.size() - prev));
                    prev = s.size();
                }
                IntPoly direct = relative_local_h(sd, e);
                c.expect_eq(tag + " face " + std::to_string(e.size()), expected, direct);
                int center = n - static_cast<int>(e.size());
                c.expect(tag + " symmetry", direct.is_zero() || direct.reversed(center) == direct);
                c.expect(tag + " nonnegative",
                         std::all_of(direct.coeffs().begin(), direct.coeffs().end(),
                                     [](const Int& v) { return v >= 0; }));
            }
        });
    }
    for (int n = 1; n <= std::min(max_n, 4); ++n) {
        std::string tag = "subdivision decomposition (sd, K_n) n=" + std::to_string(n);
        c.run_guarded(tag, [&] {
            KnComplex kn = k_n(n);
            c.expect(tag, decomposition_formula_check(kn.sd, kn.over_sd));
            c.expect(tag + " trivial refinement",
                     decomposition_formula_check(kn.sd, Subdivision::trivial(kn.sd.complex())));
        });
    }
    return c.result;
}

SuiteResult suite_h_formula(const Options& opt) {
    Checker c;
    FamilyCalculator calc = make_calc(opt);
    const int max_n = bound(opt, 4);
    for (int n = 1; n <= std::min(max_n, 5); ++n) {
        std::string tag = "h of K_n n=" + std::to_string(n);
        c.run_guarded(tag, [&] {
            KnComplex kn = k_n(n);
            IntPoly h = kn.complex.h_polynomial();
            c.expect_eq(tag, n <= 6 ? enumerated(Family::BPlus, n, opt.allow_large) : calc.value(Family::BPlus, n), h);
            c.expect_eq_int(tag + " facet count", factorial(n) * (Int(1) << (n - 1)),
                            kn.complex.facet_count());
            c.expect_eq_int(tag + " h(1) equals facet count", kn.complex.facet_count(),
                            h.sum_of_coeffs());
        });
    }
    for (int n = 1; n <= std::min(max_n, 4); ++n) {
        std::string tag = "h formula n=" + std::to_string(n);
        c.run_guarded(tag, [&] {
            KnComplex kn = k_n(n);
            c.expect(tag + " K_n over simplex", h_formula_check(kn.over_simplex));
            c.expect(tag + " K_n over sd", h_formula_check(kn.over_sd));
            c.expect(tag + " sd over simplex", h_formula_check(kn.sd));
            c.expect(tag + " trivial",
                     h_formula_check(Subdivision::trivial(SimplicialComplex::simplex(n))));
        });
    }
    for (int n = 1; n <= std::min(max_n, 5); ++n) {
        std::string tag = "interval restrictions n=" + std::to_string(n);
        c.run_guarded(tag, [&] {
            KnComplex kn = k_n(n);
            for (const Face& v : kn.sd.complex().faces()) {
                if (v.empty()) continue;
                int d = static_cast<int>(v.size());
                SimplicialComplex r = kn.over_sd.restriction_complex(v);
                c.expect_eq_int(tag + " facet count 2^(d-1)", Int(1) << (d - 1), r.facet_count());
                IntPoly lh = local_h(kn.over_sd.restriction(v));
                IntPoly expected = d % 2 == 0 ? IntPoly::monomial(1, d / 2) : IntPoly{};
                c.expect_eq(tag + " local h of restriction", expected, lh);
            }
        });
    }
    for (int n = 1; n <= std::min(max_n, 4); ++n) {
        std::string tag = "flag vectors n=" + std::to_string(n);
        c.run_guarded(tag, [&] {
            Poset pn = p_n_poset(n);
            FlagVectors fv = flag_vectors(pn, n);
            IntPoly h = k_n(n).complex.h_polynomial();
            for (int k = 0; k <= n; ++k) {
                Int sum = 0;
                for (const auto& [mask, beta] : fv.beta)
                    if (__builtin_popcount(mask) == k) sum += beta;
                c.expect_eq_int(tag + " h_" + std::to_string(k), h.coeff(k), sum);
            }
            for (const auto& [mask, beta] : fv.beta)
                c.expect(tag + " beta nonnegative", beta >= 0, "true", beta.str());
        });
    }
    return c.result;
}

SuiteResult suite_egf(const Options& opt) {
    Checker c;
    const int max_n = bound(opt, 7);
    const int order = std::min(max_n, 7);
    c.run_guarded("egf", [&] {
        EgfSeries a = egf_eulerian_a(order);
        EgfSeries d = egf_derangement_a(order);
        EgfSeries db = egf_derangement_b(order);
        EgfSeries fp = egf_f_plus(order);
        EgfSeries fm = egf_f_minus(order);
        EgfSeries bp = egf_b_plus(order);
        EgfSeries bm = egf_b_minus(order);
        for (int n = 0; n <= order; ++n) {
            std::string tag = "egf entry n=" + std::to_string(n);
            if (n >= 1) c.expect_eq(tag + " eulerian", enumerated(Family::A, n), a.at(n).to_int());
            c.expect_eq(tag + " derangement", enumerated(Family::DA, n), d.at(n).to_int());
            c.expect_eq(tag + " derangement-b", enumerated(Family::DB, n), db.at(n).to_int());
            c.expect_eq(tag + " f+", enumerated(Family::FPlus, n), fp.at(n).to_int());
            c.expect_eq(tag + " f-", enumerated(Family::FMinus, n), fm.at(n).to_int());
            c.expect_eq(tag + " b+", enumerated(Family::BPlus, n), bp.at(n).to_int());
            c.expect_eq(tag + " b-", enumerated(Family::BMinus, n), bm.at(n).to_int());
        }
    });
    FamilyCalculator calc = make_calc(opt);
    const int series_max = std::max(max_n, 8);
    for (int n = 0; n <= series_max; ++n) {
        std::string tag = "series identity n=" + std::to_string(n);
        c.run_guarded(tag, [&] {
            IntPoly series = series_div_one_minus_x_pow(calc.value(Family::BPlus, n), n, 10);
            std::vector<Int> expected(11);
            for (int i = 0; i <= 10; ++i) {
                Int odd = 1, even = 1;
                for (int j = 0; j < n; ++j) {
                    odd *= 2 * i + 1;
                    even *= 2 * i;
                }
                // 0^0 counts as 0 here so that the n = 0 row is the constant 1
                expected[i] = n == 0 && i == 0 ? Int(1) : odd - even;
            }
            c.expect_eq(tag, IntPoly(std::move(expected)), series);
        });
    }
    return c.result;
}

SuiteResult suite_recurrences(const Options& opt) {
    Checker c;
    FamilyCalculator calc = make_calc(opt);
    const int max_n = bound(opt, 8);
    for (int n = 1; n <= max_n; ++n) {
        std::string tag = "recurrences n=" + std::to_string(n);
        c.run_guarded(tag, [&] {
            c.expect_eq(tag + " b+ recurrence", calc.value(Family::BPlus, n),
                        b_plus_recurrence(n, calc));
            c.expect_eq(tag + " f+ recurrence", calc.value(Family::FPlus, n),
                        f_plus_recurrence(n, calc));
            if (n >= 2)
                for (int k = 1; k <= n; ++k) {
                    c.expect(tag + " coeff+ k=" + std::to_string(k),
                             coeff_recurrence_check_plus(n, k, calc));
                    c.expect(tag + " coeff- k=" + std::to_string(k),
                             coeff_recurrence_check_minus(n, k, calc));
                }
        });
    }
    return c.result;
}

SuiteResult suite_bijection(const Options& opt) {
    Checker c;
    const int max_n = bound(opt, 6);
    for (int n = 0; n <= max_n; ++n) {
        std::string tag = "bijection n=" + std::to_string(n);
        c.run_guarded(tag, [&] {
            std::set<PermutationSeq> images;
            long count = 0;
            bool round_trip = true, identity = true, parity = true;
            bool involution = true, negation = true;
            for_each_bn(n, [&](const SignedPermutation& w) {
                SignedPermutation inv = w.inverse();
                if (w.exc_b() != inv.iexc_b() || w.is_derangement_b() != inv.is_derangement_b())
                    involution = false;
                SignedPermutation neg = w.negated();
                if (w.asc_b() != neg.des_b() || w.des_b() != neg.asc_b()) negation = false;
                if (!w.is_derangement_b()) return;
                ++count;
                PermutationSeq seq = phi(w);
                images.insert(seq);
                if (!(phi_inverse(seq) == w)) round_trip = false;
                if (!statistic_identity_check(w)) identity = false;
                if (n >= 1) {
                    bool even = seq.blocks.size() % 2 == 0;
                    auto cycles = w.cycles_type_b();
                    bool last_positive = cycles.back().back() > 0;
                    bool inv_positive = inv.apply(w.min_ground()) > 0;
                    if (even != last_positive || even != inv_positive) parity = false;
                }
            }, opt.allow_large);
            c.expect(tag + " inversion preserves the statistics", involution);
            c.expect(tag + " negation swaps ascents and descents", negation);
            c.expect(tag + " round trip", round_trip);
            c.expect(tag + " statistic identity", identity);
            c.expect(tag + " parity law", parity);
            c.expect_eq_int(tag + " injective", Int(count), Int(images.size()));
            c.expect_eq_int(tag + " image cardinality", cn_cardinality(n), Int(images.size()));
            if (n <= 5) {
                auto cn = enumerate_cn(n);
                c.expect(tag + " image equals block sequences",
                         std::equal(cn.begin(), cn.end(), images.begin(), images.end()));
            }
        });
    }
    return c.result;
}

SuiteResult suite_gamma(const Options& opt) {
    Checker c;
    FamilyCalculator calc = make_calc(opt);
    const int max_n = bound(opt, 8);
    for (int n = 0; n <= max_n; ++n) {
        std::string tag = "gamma n=" + std::to_string(n);
        c.run_guarded(tag, [&] {
            IntPoly fplus = calc.value(Family::FPlus, n);
            IntPoly fminus = calc.value(Family::FMinus, n);
            GammaVector gp = gamma_extract(fplus, n);
            GammaVector gm = gamma_extract(fminus, n + 1);
            c.expect_eq(tag + " f+ reconstruct", fplus, gp.reconstruct());
            c.expect_eq(tag + " f- reconstruct", fminus, gm.reconstruct());
            c.expect(tag + " xi+ nonnegative", gp.nonnegative());
            c.expect(tag + " xi- nonnegative", gm.nonnegative());
            if (n >= 1) {
                GammaVector ga = gamma_extract(calc.value(Family::A, n), n - 1);
                c.expect(tag + " eulerian gamma nonnegative", ga.nonnegative());
                c.expect_eq(tag + " eulerian reconstruct", calc.value(Family::A, n), ga.reconstruct());
            }
            GammaVector gd = gamma_extract(calc.value(Family::DA, n), n);
            c.expect(tag + " derangement xi nonnegative", gd.nonnegative());
        });
    }
    return c.result;
}

SuiteResult suite_realroots(const Options& opt) {
    Checker c;
    FamilyCalculator calc = make_calc(opt);
    const int max_n = bound(opt, 10);
    for (int n = 1; n <= max_n; ++n) {
        std::string tag = "real roots n=" + std::to_string(n);
        c.run_guarded(tag, [&] {
            c.expect(tag + " b+ real-rooted", sturm_real_rooted(calc.value(Family::BPlus, n)));
            c.expect(tag + " b- real-rooted", sturm_real_rooted(calc.value(Family::BMinus, n)));
            if (n >= 2) {
                c.expect(tag + " f+ real-rooted", sturm_real_rooted(calc.value(Family::FPlus, n)));
                c.expect(tag + " f- real-rooted", sturm_real_rooted(calc.value(Family::FMinus, n)));
            }
        });
    }
    // shape implications on the computed corpus
    for (int n = 1; n <= std::min(max_n, 8); ++n) {
        std::string tag = "shape implications n=" + std::to_string(n);
        c.run_guarded(tag, [&] {
            for (Family f : {Family::A, Family::B, Family::BPlus, Family::BMinus, Family::DA,
                             Family::DB, Family::FPlus, Family::FMinus}) {
                IntPoly p = calc.value(f, n);
                if (p.is_zero()) continue;
                if (!sturm_real_rooted(p)) continue;
                std::string sub = tag + " " + family_tag(f);
                c.expect(sub + " log-concave", is_log_concave(p));
                c.expect(sub + " unimodal", unimodal_peaks(p).first);
                c.expect(sub + " no internal zeros", !has_internal_zeros(p));
                for (int r : {2, 3}) {
                    IntPoly er = er_operator(p, r);
                    if (er.is_zero()) continue;
                    std::string ert = sub + " E_" + std::to_string(r);
                    c.expect(ert + " real-rooted", sturm_real_rooted(er));
                    c.expect(ert + " log-concave", is_log_concave(er));
                    c.expect(ert + " unimodal", unimodal_peaks(er).first);
                }
            }
        });
    }
    return c.result;
}

using SuiteFn = SuiteResult (*)(const Options&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"main-formula", suite_main_formula},
        {"decomposition", suite_decomposition},
        {"localint", suite_localint},
        {"relative-local-h", suite_relative_local_h},
        {"h-formula", suite_h_formula},
        {"egf", suite_egf},
        {"recurrences", suite_recurrences},
        {"bijection", suite_bijection},
        {"gamma", suite_gamma},
        {"realroots", suite_realroots},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : suite_table()) out.push_back(name);
        out.push_back("all");
        return out;
    }();
    return names;
}

bool is_suite(const std::string& name) {
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteResult run_suite(const std::string& name, const Options& opt) {
    for (const auto& [suite, fn] : suite_table()) {
        if (suite != name) continue;
        auto start = std::chrono::steady_clock::now();
        SuiteResult r = fn(opt);
        r.suite = suite;
        r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return r;
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<SuiteResult> run_all(const Options& opt) {
    std::vector<SuiteResult> out;
    for (const auto& [suite, fn] : suite_table()) out.push_back(run_suite(suite, opt));
    return out;
}

}  // namespace derange::verify
