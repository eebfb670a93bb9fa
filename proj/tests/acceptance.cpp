// Acceptance suite: runs the ten release criteria at their stated
// tolerances and time budgets, printing one pass/fail line each.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "zetalogic/formula.hpp"
#include "zetalogic/logic.hpp"
#include "zetalogic/square.hpp"
#include "zetalogic/zeta.hpp"

using namespace zetalogic;

namespace {

constexpr double kZeta2 = 1.6449340668482264365;  // pi^2 / 6

int failures = 0;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ");
        detail += "over time budget";
    }
    if (!ok) ++failures;
    std::printf("[%s] criterion %d: %s (%.3fs)%s%s\n", ok ? "PASS" : "FAIL",
                number, label.c_str(), elapsed, detail.empty() ? "" : " -- ",
                detail.c_str());
}

// ── Criterion 1: the published connective tables, entry for entry ───────────

constexpr TruthValue T = TV_T;
constexpr TruthValue X = TV_X;
constexpr TruthValue F = TV_F;

struct TableGolden {
    const char* logic;
    UnaryTable not_golden;
    BinaryTable and_golden, or_golden, implies_golden;
    bool has_iff;
    BinaryTable iff_golden;
};

bool check_tables(std::string& detail) {
    // Transcribed gap tables: the bar propagates through every connective;
    // both operands classical => classical result.
    const TableGolden frege = {
        "frege",
        {F, X, T},
        {{{T, X, F}, {X, X, X}, {F, X, F}}},
        {{{T, X, T}, {X, X, X}, {T, X, F}}},
        {{{T, X, F}, {X, X, X}, {T, X, T}}},
        true,
        {{{T, X, F}, {X, X, X}, {F, X, T}}},
    };
    // Strong tables; the biconditional column reads "means the same as".
    const TableGolden kleene = {
        "k3",
        {F, X, T},
        {{{T, X, F}, {X, X, F}, {F, F, F}}},
        {{{T, T, T}, {T, X, X}, {T, X, F}}},
        {{{T, X, F}, {T, X, X}, {T, T, T}}},
        true,
        {{{T, F, F}, {F, T, F}, {F, F, T}}},
    };
    // Internal tables: any meaningless operand poisons the result.
    const TableGolden bochvar = {
        "bochvar",
        {F, X, T},
        {{{T, X, F}, {X, X, X}, {F, X, F}}},
        {{{T, X, T}, {X, X, X}, {T, X, F}}},
        {{{T, X, F}, {X, X, X}, {T, X, T}}},
        false,
        {},
    };
    const UnaryTable bochvar_assert = {T, F, F};
    // The three-valued conditional with X -> X = T; other connectives are
    // the strong ones and are checked through the kleene golden above.
    const BinaryTable lukasiewicz_implies = {
        {{T, X, F}, {T, T, X}, {T, T, T}}};

    auto mismatch = [&](const char* what) {
        detail = std::string("mismatch in ") + what;
        return false;
    };

    for (const TableGolden& g : {frege, kleene, bochvar}) {
        const LogicSystem* sys = find_logic(g.logic);
        if (sys == nullptr) return mismatch(g.logic);
        for (int i = 0; i < 3; ++i) {
            if (sys->not_table[i] != g.not_golden[i]) return mismatch("not");
            for (int j = 0; j < 3; ++j) {
                if (sys->and_table[i][j] != g.and_golden[i][j]) {
                    return mismatch("and");
                }
                if (sys->or_table[i][j] != g.or_golden[i][j]) {
                    return mismatch("or");
                }
                if (sys->implies_table[i][j] != g.implies_golden[i][j]) {
                    return mismatch("implies");
                }
                if (g.has_iff && sys->iff_table[i][j] != g.iff_golden[i][j]) {
                    return mismatch("iff");
                }
            }
        }
    }
    const LogicSystem* b = find_logic("bochvar");
    for (int i = 0; i < 3; ++i) {
        if (b->assert_table[i] != bochvar_assert[i]) {
            return mismatch("assertion column");
        }
    }
    const LogicSystem* l3 = find_logic("l3");
    const LogicSystem* k3 = find_logic("k3");
    for (int i = 0; i < 3; ++i) {
        if (l3->not_table[i] != k3->not_table[i]) return mismatch("l3 not");
        for (int j = 0; j < 3; ++j) {
            if (l3->implies_table[i][j] != lukasiewicz_implies[i][j]) {
                return mismatch("l3 implies");
            }
            if (l3->and_table[i][j] != k3->and_table[i][j]) {
                return mismatch("l3 and");
            }
            if (l3->or_table[i][j] != k3->or_table[i][j]) {
                return mismatch("l3 or");
            }
        }
    }
    // The strong tables double as the glut system's tables.
    const LogicSystem* lp = find_logic("lp");
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (lp->and_table[i][j] != k3->and_table[i][j] ||
                lp->or_table[i][j] != k3->or_table[i][j] ||
                lp->implies_table[i][j] != k3->implies_table[i][j] ||
                lp->iff_table[i][j] != k3->iff_table[i][j]) {
                return mismatch("lp tables");
            }
        }
    }
    return true;
}

// ── Criterion 2: the law matrix ─────────────────────────────────────────────

bool check_law(const LawReport& report, const char* law, bool expect_holds,
               std::string& detail) {
    for (const LawResult& r : report.laws) {
        if (r.law == law) {
            if (r.holds == expect_holds) return true;
            detail = report.logic_name + std::string(": ") + law +
                     (expect_holds ? " should hold" : " should fail");
            return false;
        }
    }
    detail = std::string("law not reported: ") + law;
    return false;
}

bool check_laws(std::string& detail) {
    const LawReport classical = classify_laws(*find_logic("classical"));
    for (const char* law : {"LOI", "LEM", "LNC", "DN", "ECQ", "DeM1", "DeM2"}) {
        if (!check_law(classical, law, true, detail)) return false;
    }

    const LawReport k3 = classify_laws(*find_logic("k3"));
    if (!check_law(k3, "LEM", false, detail)) return false;
    if (!check_law(k3, "LNC", false, detail)) return false;
    if (!check_law(k3, "ECQ", true, detail)) return false;

    const LawReport lp = classify_laws(*find_logic("lp"));
    if (!check_law(lp, "LNC", true, detail)) return false;
    if (!check_law(lp, "ECQ", false, detail)) return false;
    for (const LawResult& r : lp.laws) {
        if (r.law == "ECQ") {
            if (!r.witness || r.witness->at("p") != TV_X ||
                r.witness->at("q") != TV_F) {
                detail = "lp ECQ witness is not p=X, q=F";
                return false;
            }
        }
    }

    const LogicSystem* l3 = find_logic("l3");
    if (l3->apply_binary(Formula::Kind::Implies, TV_X, TV_X) != TV_T) {
        detail = "l3 conditional at X,X is not T";
        return false;
    }
    return true;
}

// ── Criterion 3: random finite models ───────────────────────────────────────

bool check_squares(std::string& detail) {
    std::mt19937 rng(20250810);
    std::uniform_int_distribution<int> size(1, 8);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 1000; ++trial) {
        FiniteModel m;
        const int n = size(rng);
        for (int i = 0; i < n; ++i) m.domain.push_back("e" + std::to_string(i));
        for (const char* name : {"S", "P"}) {
            std::set<std::string> ext;
            for (const std::string& e : m.domain) {
                if (coin(rng)) ext.insert(e);
            }
            m.predicates[name] = std::move(ext);
        }
        const SquareVerdict v = square_report("S", "P", m);
        const bool a = v.truth.at(Form::A), e = v.truth.at(Form::E);
        const bool i = v.truth.at(Form::I), o = v.truth.at(Form::O);
        if (a == o || e == i || v.contradictories != RelationStatus::Holds) {
            detail = "contradictory opposition failed";
            return false;
        }
        if (!v.vacuous_subject) {
            if ((a && !i) || (e && !o) || (a && e) || (!i && !o) ||
                v.contraries != RelationStatus::Holds ||
                v.subcontraries != RelationStatus::Holds ||
                v.subalternation != RelationStatus::Holds) {
                detail = "traditional relations failed on a nonempty subject";
                return false;
            }
        } else {
            if (!(a && e) || i || o || !v.paradox_flag) {
                detail = "empty-subject square did not flag the paradox";
                return false;
            }
        }
    }
    return true;
}

// ── Criterion 4: case-study goldens ─────────────────────────────────────────

bool check_case_studies(std::string& detail) {
    const std::pair<const char*, const char*> rh_cells[] = {
        {"classical", "trivially-true-by-ECQ"},
        {"intuitionistic", "trivially-true-by-ECQ"},
        {"lp", "third-value"},
        {"bochvar", "third-value"},
    };
    for (const auto& [logic, expect] : rh_cells) {
        if (case_study_rh(true, logic).verdict != expect) {
            detail = std::string("rh(true, ") + logic + ")";
            return false;
        }
    }
    const std::pair<const char*, const char*> rh_cells_false[] = {
        {"classical", "paradox"},
        {"intuitionistic", "false"},
        {"lp", "third-value"},
        {"bochvar", "third-value"},
    };
    for (const auto& [logic, expect] : rh_cells_false) {
        if (case_study_rh(false, logic).verdict != expect) {
            detail = std::string("rh(false, ") + logic + ")";
            return false;
        }
    }

    const std::map<std::string, bool> expected = {
        {"A1", true},  {"E1", false}, {"I1", true},  {"O1", false},
        {"A2", false}, {"E2", false}, {"I2", true},  {"O2", true},
        {"A3", false}, {"E3", true},  {"I3", false}, {"O3", true},
        {"A4", true},  {"E4", true},  {"I4", false}, {"O4", false},
    };
    const PnpResult pnp = case_study_pnp();
    if (pnp.verdicts.size() != 16) {
        detail = "wrong verdict count";
        return false;
    }
    for (const PnpVerdict& v : pnp.verdicts) {
        if (expected.at(v.id) != v.truth) {
            detail = "pnp verdict " + v.id;
            return false;
        }
    }
    if (!pnp.a4_e4_paradox) {
        detail = "A4/E4 paradox flag missing";
        return false;
    }
    return true;
}

// ── Criteria 5-10: numerics ─────────────────────────────────────────────────

bool check_zeta_minus_one(std::string& detail) {
    const SeriesResult r = em_zeta(Complex(-1, 0), {5, 20});
    const double err = std::abs(r.value.real() - (-1.0 / 12.0)) +
                       std::abs(r.value.imag());
    if (err >= 1e-12) {
        detail = "absolute error " + std::to_string(err);
        return false;
    }
    return true;
}

bool check_zeta_two(std::string& detail) {
    const SeriesResult em = em_zeta(Complex(2, 0), {5, 20});
    const SeriesResult eta = eta_zeta(Complex(2, 0), 1e-12);
    if (std::abs(em.value.real() - kZeta2) >= 1e-10) {
        detail = "euler-maclaurin value off";
        return false;
    }
    if (std::abs(eta.value.real() - kZeta2) >= 1e-10) {
        detail = "eta value off";
        return false;
    }
    if (std::abs(em.value - eta.value) > em.error_bound + eta.error_bound) {
        detail = "values disagree beyond summed bounds";
        return false;
    }
    return true;
}

bool check_region_map(std::string& detail) {
    const GridSpec grid{-3.0, 3.0, 400, -10.0, 10.0, 200};
    struct Rule {
        ZetaMethod method;
        int m;
        double threshold;
    };
    const Rule rules[] = {
        {ZetaMethod::Dirichlet, 5, 1.0},
        {ZetaMethod::EulerProduct, 5, 1.0},
        {ZetaMethod::Eta, 5, 0.0},
        {ZetaMethod::EulerMaclaurin, 5, -11.0},  // sigma > -(2*5+1)
    };
    for (const Rule& rule : rules) {
        const RegionMap map = region_map(grid, rule.method, rule.m);
        std::size_t idx = 0;
        for (int j = 0; j < grid.im_count; ++j) {
            for (int i = 0; i < grid.re_count; ++i, ++idx) {
                const double sigma = grid.re_at(i);
                const bool expect_converged = sigma > rule.threshold;
                const bool got_converged =
                    map.statuses[idx] == SeriesStatus::Converged;
                if (expect_converged != got_converged) {
                    detail = std::string(to_string(rule.method)) + " at re=" +
                             std::to_string(sigma);
                    return false;
                }
            }
        }
    }
    return true;
}

bool check_derivation_identity(std::string& detail) {
    for (double s : {1.5, 2.0, 3.0, 4.0}) {
        const IntegralCheck check = bose_integral_check(s, 1e-9);
        if (!(check.difference < 1e-6)) {
            detail = "difference " + std::to_string(check.difference) +
                     " at s = " + std::to_string(s);
            return false;
        }
    }
    return true;
}

bool check_bound_honesty_and_symmetry(std::string& detail) {
    std::mt19937 rng(424243);
    std::uniform_real_distribution<double> sigma(-6.0, 4.0);
    std::uniform_real_distribution<double> t(-15.0, 15.0);
    int tested = 0;
    while (tested < 100) {
        const Complex s(sigma(rng), t(rng));
        if (std::abs(s - Complex(1, 0)) < 0.3) continue;
        ++tested;
        const SeriesResult coarse = em_zeta(s, {4, 16});
        const SeriesResult fine = em_zeta(s, {8, 64});
        if (std::abs(coarse.value - fine.value) >
            coarse.error_bound + fine.error_bound) {
            detail = "error bound dishonest at re=" + std::to_string(s.real()) +
                     " im=" + std::to_string(s.imag());
            return false;
        }
    }

    std::uniform_real_distribution<double> sig2(0.2, 4.0);
    std::uniform_real_distribution<double> t2(0.05, 15.0);
    for (int i = 0; i < 100; ++i) {
        const Complex s(sig2(rng), t2(rng));
        const SeriesResult a = eta_zeta(s, 1e-8);
        const SeriesResult b = eta_zeta(std::conj(s), 1e-8);
        if (std::abs(b.value - std::conj(a.value)) >
            1e-12 * std::max(1.0, std::abs(a.value))) {
            detail = "conjugate symmetry failed (eta)";
            return false;
        }
        const SeriesResult c = em_zeta(s, {6, 24});
        const SeriesResult d = em_zeta(std::conj(s), {6, 24});
        if (std::abs(d.value - std::conj(c.value)) >
            1e-12 * std::max(1.0, std::abs(c.value))) {
            detail = "conjugate symmetry failed (euler-maclaurin)";
            return false;
        }
    }
    return true;
}

bool check_cross_method(std::string& detail) {
    const SeriesResult prod = euler_product_partial(Complex(3, 0), 10'000);
    const SeriesResult sum = dirichlet_partial(Complex(3, 0), 10'000'000);
    const double diff = std::abs(prod.value - sum.value);
    if (!(diff < 1e-5)) {
        detail = "difference " + std::to_string(diff);
        return false;
    }
    return true;
}

}  // namespace

int main() {
    criterion(1, "published truth tables match the builtin systems", 1.0,
              check_tables);
    criterion(2, "law matrix across the builtin systems", 1.0, check_laws);
    criterion(3, "square relations on 1000 random finite models", 5.0,
              check_squares);
    criterion(4, "case-study verdict goldens", 1.0, check_case_studies);
    criterion(5, "zeta(-1) = -1/12 within 1e-12", 0.1, check_zeta_minus_one);
    criterion(6, "zeta(2) = pi^2/6 within 1e-10 by two routes", 1.0,
              check_zeta_two);
    criterion(7, "region statuses on the 400x200 grid", 10.0, check_region_map);
    criterion(8, "integral identity at s in {1.5, 2, 3, 4}", 5.0,
              check_derivation_identity);
    criterion(9, "error-bound honesty and conjugate symmetry", 10.0,
              check_bound_honesty_and_symmetry);
    criterion(10, "euler product vs dirichlet sum at s = 3", 5.0,
              check_cross_method);

    if (failures != 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
