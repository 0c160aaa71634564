#pragma once

// Input parsing, the full invariant pipeline, and the JSON / text report.
//
// JSON schema (field order fixed; arbitrary-precision integers and rationals
// are decimal strings; polynomials and Chow classes are coefficient arrays,
// lowest degree first):
//
//   arrangement:   {n, d, essential, center_dim, forms: [[rational]]}
//   lattice:       [{codim, count, mobius: [int]}]        one entry per codim
//   char_poly, reduced_char_poly, poincare, reduced_poincare: [int]
//   grothendieck_class: {variable: "L", projective: [int], affine: [int]}
//   hodge_deligne: {variable: "uv", coeffs: [int]}
//   stable_birational_constant: int
//   csm_complement, csm_arrangement: {basis: "P^k", coeffs: [int]}
//   effectivity:   {poly: [int], effective: bool}
//   betti:         {projective: [int], affine: [int]}
//   segre:         {sigma: [int], pushforward: {basis: "P^k", coeffs: [int]}}
//   exponents:     {split, roots: [int], exponents: [int], sum_matches_d: bool|null}
//   point_counts:  [{p, status, reduced_char_at_p, projective_count, char_at_p,
//                    affine_count}]  status: pass|mismatch|bad_prime|over_budget
//   consistency:   [{check, ok}]

#include <hyparr/charpoly.hpp>
#include <hyparr/classes.hpp>
#include <hyparr/errors.hpp>
#include <hyparr/ffcount.hpp>
#include <hyparr/lattice.hpp>
#include <hyparr/segre.hpp>

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hyparr {

using Json = nlohmann::ordered_json;

// {"n": int, "forms": [[rational-string]]}
inline Arrangement parse_input(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("input is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("forms"))
        throw InputError("input must be an object with keys \"n\" and \"forms\"");
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 0)
        throw InputError("\"n\" must be a nonnegative integer");
    const auto n = doc["n"].get<std::size_t>();
    const Json& forms = doc["forms"];
    if (!forms.is_array() || forms.empty())
        throw InputError("\"forms\" must be a nonempty array of rows");

    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        const Json& row = forms[i];
        if (!row.is_array())
            throw InputError("forms[" + std::to_string(i) + "] is not an array");
        if (row.size() != n + 1)
            throw InputError("forms[" + std::to_string(i) + "] has " +
                             std::to_string(row.size()) + " entries, expected n+1 = " +
                             std::to_string(n + 1));
        std::vector<Rational> r;
        for (std::size_t j = 0; j < row.size(); ++j) {
            const std::string where = "forms[" + std::to_string(i) + "][" + std::to_string(j) + "]";
            if (row[j].is_number_integer()) {
                r.emplace_back(row[j].get<long long>());
            } else if (row[j].is_string()) {
                try {
                    r.push_back(parse_rational(row[j].get<std::string>()));
                } catch (const InputError& e) {
                    throw InputError(where + ": " + e.what());
                }
            } else {
                throw InputError(where + ": expected a rational string");
            }
        }
        rows.push_back(std::move(r));
    }
    return Arrangement(n, RatMatrix::from_rows(rows, n + 1));
}

inline Arrangement parse_input_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_input(ss.str());
}

struct PointCountEntry {
    std::uint64_t p = 0;
    std::string status; // pass | mismatch | bad_prime | over_budget
    std::optional<PointCountReport> counts;
    friend bool operator==(const PointCountEntry&, const PointCountEntry&) = default;
};

struct ConsistencyCheck {
    std::string check;
    bool ok = false;
    friend bool operator==(const ConsistencyCheck&, const ConsistencyCheck&) = default;
};

struct Report {
    std::size_t n = 0;
    std::size_t d = 0;
    bool essential = false;
    std::size_t center_dim = 0;
    RatMatrix forms;
    std::vector<LevelSummary> levels;
    IntPoly chi, chibar, pi, pibar;
    GrothClass grothendieck;
    HodgeDeligne hodge;
    Integer stable_birational;
    ChowClass csm_complement, csm_arrangement;
    IntPoly effectivity;
    bool effective = false;
    BettiVector betti, affine_betti;
    SigmaVector sigma;
    ChowClass segre_pushforward;
    SplitResult exponents;
    std::vector<PointCountEntry> point_counts;
    std::vector<ConsistencyCheck> consistency;

    bool consistent() const {
        return std::all_of(consistency.begin(), consistency.end(),
                           [](const ConsistencyCheck& c) { return c.ok; });
    }
    bool verification_failed() const {
        return std::any_of(point_counts.begin(), point_counts.end(),
                           [](const PointCountEntry& e) { return e.status == "mismatch"; });
    }

    friend bool operator==(const Report&, const Report&) = default;
};

struct ReportOptions {
    std::vector<std::uint64_t> verify_primes;
    CountOptions count;
};

// lattice -> charpoly -> classes -> segre, then optional point counts.
inline Report run_report(const Arrangement& a, const ReportOptions& opt = {}) {
    Report r;
    const IntersectionLattice l = build_lattice(a);
    const Flat c = center(a);
    r.n = a.n();
    r.d = a.d();
    r.center_dim = c.dim;
    r.essential = c.dim == 0;
    r.forms = a.forms();
    r.levels = level_summary(l);

    auto check = [&r](std::string name, bool ok) { r.consistency.push_back({std::move(name), ok}); };

    r.chi = char_poly(l);
    r.chibar = reduced_char(r.chi);
    r.pi = poincare(r.chi);
    r.pibar = reduced_poincare(r.pi);
    check("chi(1) = 0", r.chi(1) == 0);
    check("pi(-1) = 0", r.pi(-1) == 0);
    check("pibar(t) = (-t)^n chibar(-1/t)", r.pibar == r.chibar.sign_reversed(r.n));

    bool mobius_ok = l.flat(0).mobius == 1;
    for (std::size_t x = 1; x < l.size(); ++x) {
        Integer s = l.flat(x).mobius;
        for (auto y : l.below(x))
            s += l.flat(y).mobius;
        mobius_ok = mobius_ok && s == 0;
    }
    check("Moebius sums vanish on every down-set", mobius_ok);

    r.grothendieck = grothendieck_class(r.chibar);
    r.hodge = hodge_deligne(r.chibar);
    r.stable_birational = stable_birational_constant(r.chibar);

    r.csm_complement = csm_complement(r.chibar, r.n);
    check("csm(M) = h^n chibar(1 + 1/h)", r.csm_complement == csm_complement_h_form(r.chibar, r.n));
    check("csm(M) = (1+h)^n pibar(-h/(1+h))",
          r.csm_complement == csm_complement_poincare_form(r.pibar, r.n));
    check("csm(M) degree-0 coefficient = chibar(1)", r.csm_complement[0] == r.chibar(1));

    r.csm_arrangement = csm_arrangement_by_mobius(l);
    check("csm(A): Moebius sum = c(TP^n) - csm(M)",
          r.csm_arrangement == csm_arrangement_by_complement(l));

    r.effectivity = effectivity_poly(l);
    r.effective = is_effective(r.effectivity);
    bool eff_ok = r.effectivity.coeff(0) == 1;
    for (std::size_t k = 1; k <= r.n + 1; ++k)
        eff_ok = eff_ok && r.effectivity.coeff(k) == r.csm_arrangement[k - 1];
    check("effectivity coefficients match csm(A)", eff_ok);
    check("effective iff csm(A) effective", r.effective == r.csm_arrangement.is_effective());

    try {
        r.betti = betti(r.pibar, r.n);
        r.affine_betti = affine_betti(r.pibar, r.n);
        check("Betti numbers nonnegative", true);
    } catch (const NegativeBetti&) {
        r.betti = {r.pibar.padded(r.n + 1)};
        r.affine_betti = {(r.pibar * IntPoly{1, 1}).padded(r.n + 2)};
        check("Betti numbers nonnegative", false);
    }
    check("1 - chibar(0) = 1 - (-1)^n r_n",
          r.stable_birational == stable_birational_from_betti(r.betti, r.n));

    r.sigma = sigma_from_pi(r.pibar, r.d, r.n);
    r.segre_pushforward = segre_pushforward(r.sigma);
    check("pi_from_sigma(sigma) = pibar", pi_from_sigma(r.sigma, r.d) == r.pibar);

    r.exponents = split_over_Z(r.chibar, r.d);
    if (r.exponents.split)
        check("csm(M) = prod (1 + (1 - alpha_i) h)",
              r.csm_complement == csm_complement_from_roots(r.exponents.roots, r.n));

    for (auto p : opt.verify_primes) {
        PointCountEntry e;
        e.p = p;
        try {
            e.counts = verify_point_count(a, l, p, opt.count);
            e.status = e.counts->passed() ? "pass" : "mismatch";
        } catch (const BadPrime&) {
            e.status = "bad_prime";
        } catch (const BudgetExceeded&) {
            e.status = "over_budget";
        }
        r.point_counts.push_back(std::move(e));
    }
    return r;
}

namespace detail {

inline Json int_array(const std::vector<Integer>& v) {
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(x.str());
    return a;
}

inline std::vector<Integer> read_ints(const Json& a) {
    std::vector<Integer> out;
    for (const auto& x : a)
        out.emplace_back(x.get<std::string>());
    return out;
}

inline Json chow_json(const ChowClass& c) {
    return Json{{"basis", "P^k"}, {"coeffs", int_array(c.coeffs())}};
}

inline ChowClass read_chow(const Json& j) {
    auto coeffs = read_ints(j.at("coeffs"));
    const std::size_t n = coeffs.size() - 1;
    return ChowClass(n, std::move(coeffs));
}

} // namespace detail

inline Json to_json(const Report& r) {
    using detail::int_array;
    Json forms = Json::array();
    for (std::size_t i = 0; i < r.forms.rows(); ++i) {
        Json row = Json::array();
        for (const auto& v : r.forms.row(i))
            row.push_back(to_string(v));
        forms.push_back(std::move(row));
    }
    Json levels = Json::array();
    for (const auto& s : r.levels)
        levels.push_back({{"codim", s.codim}, {"count", s.count}, {"mobius", int_array(s.mobius)}});
    Json counts = Json::array();
    for (const auto& e : r.point_counts) {
        Json j{{"p", e.p}, {"status", e.status}};
        if (e.counts) {
            j["reduced_char_at_p"] = e.counts->reduced_char_at_p.str();
            j["projective_count"] = std::to_string(e.counts->projective_count);
            j["char_at_p"] = e.counts->char_at_p.str();
            j["affine_count"] = std::to_string(e.counts->affine_count);
        } else {
            j["reduced_char_at_p"] = nullptr;
            j["projective_count"] = nullptr;
            j["char_at_p"] = nullptr;
            j["affine_count"] = nullptr;
        }
        counts.push_back(std::move(j));
    }
    Json consistency = Json::array();
    for (const auto& c : r.consistency)
        consistency.push_back({{"check", c.check}, {"ok", c.ok}});

    Json out;
    out["arrangement"] = {{"n", r.n},
                          {"d", r.d},
                          {"essential", r.essential},
                          {"center_dim", r.center_dim},
                          {"forms", forms}};
    out["lattice"] = levels;
    out["char_poly"] = int_array(r.chi.coeffs());
    out["reduced_char_poly"] = int_array(r.chibar.coeffs());
    out["poincare"] = int_array(r.pi.coeffs());
    out["reduced_poincare"] = int_array(r.pibar.coeffs());
    out["grothendieck_class"] = {{"variable", "L"},
                                 {"projective", int_array(r.grothendieck.in_L.coeffs())},
                                 {"affine", int_array(r.grothendieck.affine().coeffs())}};
    out["hodge_deligne"] = {{"variable", "uv"}, {"coeffs", int_array(r.hodge.in_uv.coeffs())}};
    out["stable_birational_constant"] = r.stable_birational.str();
    out["csm_complement"] = detail::chow_json(r.csm_complement);
    out["csm_arrangement"] = detail::chow_json(r.csm_arrangement);
    out["effectivity"] = {{"poly", int_array(r.effectivity.coeffs())}, {"effective", r.effective}};
    out["betti"] = {{"projective", int_array(r.betti.ranks)},
                    {"affine", int_array(r.affine_betti.ranks)}};
    out["segre"] = {{"sigma", int_array(r.sigma.sigma)},
                    {"pushforward", detail::chow_json(r.segre_pushforward)}};
    out["exponents"] = {{"split", r.exponents.split},
                        {"roots", int_array(r.exponents.roots)},
                        {"exponents", int_array(r.exponents.exponents)},
                        {"sum_matches_d", r.exponents.sum_matches_d
                                              ? Json(*r.exponents.sum_matches_d)
                                              : Json(nullptr)}};
    out["point_counts"] = counts;
    out["consistency"] = consistency;
    return out;
}

inline Report report_from_json(const Json& j) {
    using detail::read_ints;
    Report r;
    const Json& a = j.at("arrangement");
    r.n = a.at("n").get<std::size_t>();
    r.d = a.at("d").get<std::size_t>();
    r.essential = a.at("essential").get<bool>();
    r.center_dim = a.at("center_dim").get<std::size_t>();
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : a.at("forms")) {
        std::vector<Rational> rr;
        for (const auto& v : row)
            rr.push_back(parse_rational(v.get<std::string>()));
        rows.push_back(std::move(rr));
    }
    r.forms = RatMatrix::from_rows(rows, r.n + 1);
    for (const auto& s : j.at("lattice"))
        r.levels.push_back({s.at("codim").get<std::size_t>(), s.at("count").get<std::size_t>(),
                            read_ints(s.at("mobius"))});
    r.chi = IntPoly(read_ints(j.at("char_poly")));
    r.chibar = IntPoly(read_ints(j.at("reduced_char_poly")));
    r.pi = IntPoly(read_ints(j.at("poincare")));
    r.pibar = IntPoly(read_ints(j.at("reduced_poincare")));
    r.grothendieck = {IntPoly(read_ints(j.at("grothendieck_class").at("projective")))};
    r.hodge = {IntPoly(read_ints(j.at("hodge_deligne").at("coeffs")))};
    r.stable_birational = Integer(j.at("stable_birational_constant").get<std::string>());
    r.csm_complement = detail::read_chow(j.at("csm_complement"));
    r.csm_arrangement = detail::read_chow(j.at("csm_arrangement"));
    r.effectivity = IntPoly(read_ints(j.at("effectivity").at("poly")));
    r.effective = j.at("effectivity").at("effective").get<bool>();
    r.betti = {read_ints(j.at("betti").at("projective"))};
    r.affine_betti = {read_ints(j.at("betti").at("affine"))};
    const auto sigma = read_ints(j.at("segre").at("sigma"));
    r.sigma = SigmaVector(sigma.size() - 1, sigma);
    r.segre_pushforward = detail::read_chow(j.at("segre").at("pushforward"));
    const Json& e = j.at("exponents");
    r.exponents.split = e.at("split").get<bool>();
    r.exponents.roots = read_ints(e.at("roots"));
    r.exponents.exponents = read_ints(e.at("exponents"));
    if (!e.at("sum_matches_d").is_null())
        r.exponents.sum_matches_d = e.at("sum_matches_d").get<bool>();
    for (const auto& c : j.at("point_counts")) {
        PointCountEntry pe;
        pe.p = c.at("p").get<std::uint64_t>();
        pe.status = c.at("status").get<std::string>();
        if (!c.at("projective_count").is_null()) {
            PointCountReport pc;
            pc.p = pe.p;
            pc.reduced_char_at_p = Integer(c.at("reduced_char_at_p").get<std::string>());
            pc.projective_count = std::stoull(c.at("projective_count").get<std::string>());
            pc.char_at_p = Integer(c.at("char_at_p").get<std::string>());
            pc.affine_count = std::stoull(c.at("affine_count").get<std::string>());
            pc.projective_ok = pc.reduced_char_at_p == Integer(pc.projective_count);
            pc.affine_ok = pc.char_at_p == Integer(pc.affine_count);
            pe.counts = pc;
        }
        r.point_counts.push_back(std::move(pe));
    }
    for (const auto& c : j.at("consistency"))
        r.consistency.push_back({c.at("check").get<std::string>(), c.at("ok").get<bool>()});
    return r;
}

inline std::string to_text(const Report& r) {
    std::ostringstream o;
    auto row = [&o](const std::string& key, const std::string& value) {
        o << key;
        for (std::size_t i = key.size(); i < 28; ++i)
            o << ' ';
        o << value << '\n';
    };
    auto ints = [](const std::vector<Integer>& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? ", " : "") + v[i].str();
        return s + ")";
    };

    row("ambient", "P^" + std::to_string(r.n));
    row("hyperplanes", std::to_string(r.d));
    row("essential", r.essential ? "yes" : "no");
    row("center dimension", std::to_string(r.center_dim));
    for (const auto& s : r.levels) {
        std::string mu;
        for (std::size_t i = 0; i < s.mobius.size();) {
            std::size_t k = i;
            while (k < s.mobius.size() && s.mobius[k] == s.mobius[i])
                ++k;
            mu += (mu.empty() ? "" : ", ") + s.mobius[i].str() + " x" + std::to_string(k - i);
            i = k;
        }
        row("  codim " + std::to_string(s.codim), std::to_string(s.count) + " flats, mu: " + mu);
    }
    row("chi(t)", r.chi.to_string());
    row("reduced chi(t)", r.chibar.to_string());
    row("pi(t)", r.pi.to_string());
    row("reduced pi(t)", r.pibar.to_string());
    row("[M] (Grothendieck)", r.grothendieck.in_L.to_string("L"));
    row("Hodge-Deligne", r.hodge.to_string());
    row("stable birational class", r.stable_birational.str());
    row("csm(M)", r.csm_complement.to_string());
    row("csm(A)", r.csm_arrangement.to_string());
    row("effectivity polynomial", r.effectivity.to_string());
    row("csm(A) effective", r.effective ? "yes" : "no");
    row("Betti (projective)", ints(r.betti.ranks));
    row("Betti (affine)", ints(r.affine_betti.ranks));
    row("sigma", ints(r.sigma.sigma));
    row("Segre push-forward", r.segre_pushforward.to_string());
    if (r.exponents.split) {
        std::string s = ints(r.exponents.exponents);
        if (r.exponents.sum_matches_d)
            s += *r.exponents.sum_matches_d ? ", sum = d" : ", sum != d";
        row("exponents (splits over Z)", s);
    } else {
        row("exponents", "chi does not split over Z");
    }
    for (const auto& e : r.point_counts) {
        std::string s = e.status;
        if (e.counts)
            s += ": P^n count " + std::to_string(e.counts->projective_count) + " vs chibar(p) " +
                 e.counts->reduced_char_at_p.str() + ", affine count " +
                 std::to_string(e.counts->affine_count) + " vs chi(p) " +
                 e.counts->char_at_p.str();
        row("F_" + std::to_string(e.p) + " point count", s);
    }
    std::size_t bad = 0;
    for (const auto& c : r.consistency)
        if (!c.ok) {
            row("FAILED check", c.check);
            ++bad;
        }
    row("consistency checks",
        std::to_string(r.consistency.size() - bad) + "/" + std::to_string(r.consistency.size()) +
            " passed");
    return o.str();
}

} // namespace hyparr
