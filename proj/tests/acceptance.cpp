#include <algorithm>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "skewhopf/catalog.hpp"
#include "skewhopf/galois.hpp"
#include "skewhopf/genhopf.hpp"
#include "skewhopf/lie.hpp"
#include "skewhopf/torsor.hpp"

using namespace skewhopf;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream note;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) note << what;
            else note << "; " << what;
            pass = false;
        }
    }
    void require(const Report& r, const std::string& what) { require(r.pass(), what + ": " + r.first_failure()); }
};

std::vector<HopfData> small_builtins() {
    const Field F3 = cyclotomic(3);
    std::vector<HopfData> hs;
    hs.push_back(group_algebra(symmetric_group3()));
    for (int n = 1; n <= 6; ++n) hs.push_back(group_algebra(cyclic_group(n)));
    hs.push_back(dual_group_algebra(cyclic_group(4)));
    hs.push_back(dual_group_algebra(symmetric_group3()));
    hs.push_back(taft(2, Scalar(-1)));
    hs.push_back(taft(3, root_of_unity(F3, 3)));
    hs.push_back(circle_hopf());
    hs.push_back(tensor_hopf(group_algebra(cyclic_group(2)), group_algebra(cyclic_group(2))));
    return hs;
}

// 1
void hopf_suite(Outcome& o) {
    const Field F3 = cyclotomic(3);
    std::vector<std::pair<HopfData, size_t>> cases;
    cases.emplace_back(group_algebra(symmetric_group3()), 6);
    for (int n = 1; n <= 6; ++n) cases.emplace_back(group_algebra(cyclic_group(n)), n);
    cases.emplace_back(dual_group_algebra(cyclic_group(4)), 4);
    cases.emplace_back(taft(2, Scalar(-1)), 4);
    cases.emplace_back(taft(3, root_of_unity(F3, 3)), 9);
    cases.emplace_back(circle_hopf(), 4);
    cases.emplace_back(tensor_hopf(group_algebra(cyclic_group(2)), group_algebra(cyclic_group(2))), 4);
    for (const auto& [H, d] : cases) {
        o.require(H.dim() == d, H.name + " has dimension " + std::to_string(H.dim()));
        Report r = check_hopf(H);
        o.require(r.find("coassociativity") && r.find("antipode_left") && r.find("antipode_right"),
                  H.name + ": bialgebra or antipode checks missing");
        o.require(r, H.name);
    }
}

// 2
void antipode_orders(Outcome& o) {
    auto a = antipode_order(taft(2, Scalar(-1)));
    auto b = antipode_order(taft(3, root_of_unity(cyclotomic(3), 3)));
    o.require(a && *a == 4, "order of S on taft(2) is " + (a ? std::to_string(*a) : std::string("unbounded")));
    o.require(b && *b == 6, "order of S on taft(3) is " + (b ? std::to_string(*b) : std::string("unbounded")));
}

// 3
void hopf_galois_objects(Outcome& o) {
    for (const auto& H : small_builtins()) {
        if (H.dim() > 9) continue;
        auto g = galois_check(regular_comodule(H));
        o.require(g.report, H.name);
        o.require(g.bijective && g.rank_beta == static_cast<long>(H.dim() * H.dim()), H.name + ": beta not bijective");
        o.require(g.coinvariants.size() == 1, H.name + ": coinvariants are not the ground field");
        auto mm = inverse_mismatch(g, hopf_galois_inverse(H));
        o.require(!mm, H.name + ": closed-form inverse differs at column " + (mm ? std::to_string(*mm) : ""));
    }
}

// 4
void strongly_graded(Outcome& o) {
    const Field Q = rationals();
    auto G3 = cyclic_group(3);
    Report good = strongly_graded_check(group_algebra(G3).alg, G3, {0, 1, 2});
    o.require(good, "kZ3 natural grading");
    o.require(good.find("strongly_graded") && good.find("galois"), "kZ3: both sides reported");

    std::vector<SVec> tab{SVec::unit(0, Q), SVec(), SVec(), SVec::unit(1, Q)};
    auto kk = algebra_make(Q, {"e1", "e2"}, tab, SVec::unit(0, Q) + SVec::unit(1, Q));
    Report bad = strongly_graded_check(kk, cyclic_group(2), {0, 0});
    const Check* sg = bad.find("strongly_graded");
    const Check* ga = bad.find("galois");
    o.require(sg && !sg->pass, "k x k with zero g-part is reported strongly graded");
    o.require(ga && !ga->pass, "k x k with zero g-part is reported Galois");
    o.require(ga && ga->rank && *ga->rank == 2 && ga->dims.size() == 2 && ga->dims[1] == 4,
              "rank deficit of beta not reported as rank 2 of 4");
    const Check* ag = bad.find("agreement");
    o.require(ag && ag->pass, "the two criteria disagree");
}

// 5
void quartic(Outcome& o) {
    auto ex = quartic_example();
    for (const auto& c : ex.report.checks)
        if (c.name.rfind("action.", 0) == 0) o.require(c.pass, "action table: " + c.name + " " + c.witness);
    o.require(ex.report.find("action.measuring") != nullptr, "module algebra checks missing");
    auto B = coinvariants(ex.coaction);
    o.require(B.size() == 1 && Subspace(ex.E.field(), ex.E.dim(), B).contains(ex.E.unit()),
              "coinvariants have dimension " + std::to_string(B.size()));
    const Check* b = ex.report.find("galois.beta_bijective");
    o.require(b && b->pass && b->rank && *b->rank == 16, "beta is not bijective of rank 16");
    o.require(ex.fixed_field.size() >= 2, "automorphism fixed field has dimension " + std::to_string(ex.fixed_field.size()));
    o.require(ex.report, "quartic report");
}

// 6
void ore_product_oracle(Outcome& o) {
    auto p = catalog("weyl");
    const auto& R = p->ring;
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> exp(0, 5), deg(0, 3), coef(-4, 4);
    auto random_relem = [&] {
        RElem r(R);
        int d = deg(rng);
        for (int e = 0; e <= d; ++e) r += RElem::gen(R, 0, e).scaled(Scalar(coef(rng)));
        return r;
    };
    int bad = 0;
    for (int k = 0; k < 100; ++k) {
        RElem r = random_relem(), s = random_relem();
        int i = exp(rng), j = exp(rng);
        SkewPoly fast = multiply(SkewPoly::monomial(p, {i}, r), SkewPoly::monomial(p, {j}, s));
        if (r.is_zero() || s.is_zero()) fast = SkewPoly(p);
        if (fast != word_sum_product(p, r, i, s, j)) ++bad;
    }
    o.require(bad == 0, std::to_string(bad) + " of 100 products disagree");
}

LieData random_bracket(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-1, 1), kind(0, 4);
    Field Q = rationals();
    LieData g = LieData::abelian(Q, {"x1", "x2", "x3"});
    auto v = [&](int a, int b, int d) { return std::vector<Scalar>{Scalar(a), Scalar(b), Scalar(d)}; };
    switch (kind(rng)) {
        case 0: break;
        case 1: g.set(0, 1, v(0, 0, 1)); break;
        case 2:
            g.set(0, 1, v(0, 1, 0));
            break;
        case 3:
            g.set(0, 1, v(0, 0, 1));
            g.set(0, 2, v(0, -1, 0));
            g.set(1, 2, v(1, 0, 0));
            break;
        default:
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) g.set(i, j, v(c(rng), c(rng), c(rng)));
    }
    return g;
}

// 7
void pbw_diamond(Outcome& o) {
    for (int t = 1; t <= 10; ++t) {
        auto r = pbw_check(catalog("sridharan_table1", {{"type", std::to_string(t)}}));
        o.require(r.pass, "table type " + std::to_string(t) + ": " + r.to_report().first_failure());
    }
    PresentationBuilder b("broken_jacobi", rationals());
    b.vars({"x1", "x2", "x3"});
    b.relation("x2", "x1", "1", "1", "x3");
    b.relation("x3", "x1", "1", "1", "x1");
    b.relation("x3", "x2", "1", "1", "0");
    auto br = pbw_check(b.build());
    o.require(!br.pass, "Jacobi-violating presentation passes");
    o.require(!br.failures.empty() && br.failures.front().overlap == "x3*x2*x1", "witness is not the x3*x2*x1 overlap");

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> fc(-2, 2);
    int agree = 0, valid = 0;
    for (int k = 0; k < 20; ++k) {
        LieData g = random_bracket(rng);
        LieCocycle f = LieCocycle::zero(g.field, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) f.set(i, j, Scalar(fc(rng)));
        bool expected = check_lie(g).pass() && check_cocycle(g, f).pass();
        bool got = pbw_check(sridharan_presentation(g, f)).pass;
        agree += expected == got;
        valid += expected;
    }
    o.require(agree == 20, "pbw_check disagrees with Jacobi + cocycle on " + std::to_string(20 - agree) + " cases");
    o.require(valid > 0 && valid < 20, "randomized family is one-sided");
}

// 8
void uq_sl2(Outcome& o) {
    auto u = catalog("uq_sl2");
    const auto& R = u->ring;
    Scalar q = parse_scalar(R->field, "q");
    Scalar c = (q - q.inverse()).inverse();
    SkewPoly expected = normal_form(u, "f*e") + SkewPoly(u, (RElem::gen(R, 0, 1) - RElem::gen(R, 0, -1)).scaled(c));
    o.require(normal_form(u, "e*f") == expected, "e*f normal form is " + normal_form(u, "e*f").str());
    auto h = genhopf_make("uq_sl2", u, {{"e", "1 @ e + e @ k"}, {"f", "k^-1 @ f + f @ 1"}, {"k", "k @ k"}},
                          {{"e", "0"}, {"f", "0"}, {"k", "1"}}, {{"e", "-e*k^-1"}, {"f", "-k*f"}, {"k", "k^-1"}});
    Report r = check_hopf_on_generators(h, 3);
    o.require(r.degree_bound && *r.degree_bound == 3, "degree bound not recorded");
    o.require(r, "generator-level Hopf checks");
}

// 9
void torsors(Outcome& o) {
    for (const auto& H : {group_algebra(cyclic_group(2)), sweedler(), taft(3, root_of_unity(cyclotomic(3), 3))}) {
        auto t = hopf_to_torsor(H);
        o.require(check_torsor(t), H.name + " torsor");
        auto g = grunspan_map(t);
        o.require(g.report, H.name + " Grunspan");
        o.require(g.theta == H.S.after(H.S), H.name + ": theta differs from S^2");
    }
    const Field F3 = cyclotomic(3);
    for (const auto& t : {no_character_torsor(2, Scalar(1), Scalar(1), Scalar(-1)),
                          no_character_torsor(3, Scalar(1).in(F3), Scalar(2).in(F3), root_of_unity(F3, 3))}) {
        o.require(check_torsor(t), t.name + " torsor");
        o.require(grunspan_map(t).report, t.name + " Grunspan");
    }
}

// 10
void reconstruction(Outcome& o) {
    for (const auto& [H, d] : {std::pair{group_algebra(cyclic_group(2)), size_t(2)}, std::pair{sweedler(), size_t(4)}}) {
        auto r = reconstruct_hopf(hopf_to_torsor(H));
        o.require(r.report, H.name + " reconstruction");
        o.require(r.H.dim() == d, H.name + ": reconstructed dimension " + std::to_string(r.H.dim()));
        o.require(check_hopf(r.H), H.name + ": reconstructed Hopf axioms");
        o.require(r.galois && r.galois->bijective, H.name + ": T is not Galois over the reconstruction");
    }
    for (const auto& H : small_builtins()) {
        if (H.dim() > 9) continue;
        auto r = reconstruct_hopf(galois_to_torsor(regular_comodule(H)));
        o.require(r.report, H.name + " round trip");
        o.require(r.H.dim() == H.dim(), H.name + ": round trip changes the dimension");
    }
}

// 11
void smash_and_crossed(Outcome& o) {
    const Field Q = rationals();
    auto G = cyclic_group(2);
    auto H = group_algebra(G);
    std::vector<SVec> tab{SVec::unit(0, Q), SVec::unit(1, Q), SVec::unit(1, Q), SVec()};
    auto R = algebra_make(Q, {"1", "s"}, tab, SVec::unit(0, Q));
    LinMap act(Q, Space{2, 2}, Space{2});
    act.cols()[0] = SVec::unit(0, Q);
    act.cols()[1] = SVec::unit(1, Q);
    act.cols()[2] = SVec::unit(0, Q);
    act.cols()[3] = SVec::unit(1, Q).scaled(Scalar(-1));
    ActionSpec spec{H, R, act};
    o.require(check_module_algebra(spec), "module algebra");
    auto C = smash_product(spec);
    o.require(check_algebra(C.A), "smash product associativity");
    auto g = galois_check(C);
    o.require(g.report, "smash Galois");
    const size_t e = H.alg.index_of(G.labels[G.identity]);
    Subspace expected(Q, C.A.dim(), {SVec::unit(0 * 2 + e, Q), SVec::unit(1 * 2 + e, Q)});
    o.require(Subspace(Q, C.A.dim(), g.coinvariants) == expected, "coinvariants differ from R # 1");
    auto mm = inverse_mismatch(g, smash_galois_inverse(spec));
    o.require(!mm, "smash inverse formula differs at column " + (mm ? std::to_string(*mm) : ""));

    auto G3 = cyclic_group(3);
    auto k = ground_field_alg(Q);
    LinMap triv(Q, Space{3, 1}, Space{1});
    for (int i = 0; i < 3; ++i) triv.cols()[i] = SVec::unit(0, Q);
    auto cr = crossed_product(group_algebra(G3), k, triv, group_cocycle(G3, k, {{1, 1, Scalar(2)}}));
    const Check* cc = cr.report.find("cocycle");
    o.require(cc && !cc->pass, "broken cocycle accepted");
    o.require(cc && cc->witness.size() > 2 && cc->witness.front() == '(' && std::count(cc->witness.begin(), cc->witness.end(), ',') == 2,
              "no witness triple for the broken cocycle");
}

// 12
void integral_spaces(Outcome& o) {
    const Field Q = rationals();
    auto H3 = group_algebra(cyclic_group(3));
    auto I = integrals(H3);
    o.require(I.report, "kZ3 integrals");
    SVec sum = SVec::unit(0, Q) + SVec::unit(1, Q) + SVec::unit(2, Q);
    o.require(Subspace(Q, 3, I.left) == Subspace(Q, 3, {sum}) && Subspace(Q, 3, I.right) == Subspace(Q, 3, {sum}),
              "kZ3 integrals are not span{1 + g + g^2}");
    o.require(I.unimodular && I.semisimple, "kZ3 not unimodular and semisimple");
    auto J = integrals(sweedler());
    o.require(J.report, "Sweedler integrals");
    o.require(J.left.size() == 1, "Sweedler left integral space has dimension " + std::to_string(J.left.size()));
    o.require(!J.unimodular && !J.semisimple, "Sweedler reported unimodular or semisimple");
    o.require(J.report.find("integrals_reverified") != nullptr, "integrals not re-verified");
}

// 13
void induced_ore(Outcome& o) {
    const Field Q = rationals();
    auto Rc = regular_comodule(group_algebra(cyclic_group(2)));
    auto ic = induced_ore_coaction(Rc, LinMap::identity(Q, Space{2}), LinMap::zero(Q, Space{2}, Space{2}), 4);
    o.require(ic.report, "induced coaction");
    o.require(ic.coinvariants.size() == 5, "coinvariants of F4 have dimension " + std::to_string(ic.coinvariants.size()));
    // k[x] inside F4 is spanned by e * x^i, with R-index 0 the unit
    std::vector<SVec> kx;
    for (size_t i = 0; i <= 4; ++i) kx.push_back(SVec::unit(i * 2, Q));
    o.require(Subspace(Q, 10, ic.coinvariants) == Subspace(Q, 10, kx), "coinvariants differ from F4 and k[x]");
    for (const auto& R : {group_algebra(cyclic_group(2)), sweedler()}) {
        Report r = truncated_galois_check(regular_comodule(R), LinMap::identity(Q, Space{R.dim()}), 3);
        o.require(r, R.name + " truncated Galois");
        o.require(r.find("beta_surjective_preimage") != nullptr, R.name + ": preimage identity not checked");
        o.require(r.degree_bound && *r.degree_bound == 3, R.name + ": degree bound not recorded");
    }
}

// 14
void hopf_galois_systems(Outcome& o) {
    o.require(check_hgs(hopf_hgs(sweedler())), "Sweedler system");
    auto [g, f] = sridharan_table1_data(7);
    auto sys = sridharan_build(g, f);
    o.require(sys.pbw, "Sridharan type 7 PBW");
    Report r = check_hgs(sys.hgs, 4);
    for (const char* law : {"eta_l_beta_l", "beta_l_eta_l", "eta_r_beta_r", "beta_r_eta_r"})
        o.require(r.find(law) != nullptr, std::string(law) + " not checked");
    o.require(r.degree_bound && *r.degree_bound == 4, "degree bound not recorded");
    o.require(r, "Sridharan type 7 system");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"Hopf axiom suite on the builtin family", hopf_suite},
        {"antipode order 2n for taft(2) and taft(3)", antipode_orders},
        {"regular Galois objects and the closed-form inverse", hopf_galois_objects},
        {"strongly graded iff Galois", strongly_graded},
        {"Q(2^(1/4)) action, coinvariants, rank and fixed field", quartic},
        {"Ore product formula against multiply", ore_product_oracle},
        {"PBW diamond check on Sridharan families", pbw_diamond},
        {"U_q(sl2) relation and generator-level Hopf checks", uq_sl2},
        {"torsor and Grunspan laws", torsors},
        {"Hopf reconstruction from torsors", reconstruction},
        {"smash and crossed products", smash_and_crossed},
        {"integrals of kZ3 and Sweedler", integral_spaces},
        {"induced Ore coaction and truncated Galois check", induced_ore},
        {"Hopf Galois systems", hopf_galois_systems},
    };
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first;
        if (!o.pass) std::cout << "  [" << o.note.str() << "]";
        std::cout << std::endl;
        failed += !o.pass;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed ? 1 : 0;
}
