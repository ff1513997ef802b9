#pragma once

// Command surface of waring_cli. run() never calls exit and writes only to
// the given streams, so tests drive it in-process.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "waring/waring.hpp"

namespace waring::cli {

using json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kValidation = 2, kComputation = 3 };

template <ExactField F>
std::string str(F const& x) {
    return waring::to_string(x);
}

template <ExactField F>
json form_json(std::optional<BinaryForm<F>> const& f, char x = 'X', char y = 'Y') {
    if (!f) return nullptr;
    return f->to_string(x, y);
}

template <ExactField F>
json coefficient_json(BinaryForm<F> const& f) {
    json out = json::array();
    for (auto const& c : f.coeffs()) out.push_back(str(c));
    return out;
}

// Adding 0.0 folds -0.0 into 0.0 so output does not depend on sign-of-zero noise.
inline json complex_json(complex z) { return json::array({z.real() + 0.0, z.imag() + 0.0}); }

// Calls fn with the form over Q when every coefficient is rational and over
// Q(sqrt D) otherwise.
template <class Fn>
auto with_form(std::string const& text, Fn&& fn) {
    auto f = parse_form(text);
    if (form_radicand(f) == 0) return fn(to_rational_form(f));
    return fn(f);
}

template <class Fn>
auto with_scalars(std::vector<std::string> const& texts, Fn&& fn) {
    std::vector<QuadExt> values;
    for (auto const& t : texts) values.push_back(parse_scalar(t));
    // Also rejects two different radicands.
    QuadExt sum;
    for (auto const& v : values) sum = sum + v;
    if (sum.is_rational() && std::all_of(values.begin(), values.end(), [](auto const& v) { return v.is_rational(); })) {
        std::vector<Rational> r;
        for (auto const& v : values) r.push_back(v.rational_part());
        return fn(r);
    }
    return fn(values);
}

// ---------------------------------------------------------------------------
// JSON views of library results

template <ExactField F>
json rank_json(BinaryForm<F> const& f) {
    auto r = waring_rank(f);
    json out;
    out["form"] = f.to_string();
    out["degree"] = f.degree();
    out["coefficients"] = coefficient_json(f);
    out["rank"] = r.rank;
    out["case"] = to_string(r.kind);
    if (r.pair) {
        out["d1"] = r.pair->d1();
        out["d2"] = r.pair->d2();
        out["g1"] = r.pair->g1.to_string('X', 'Y');
        out["g2"] = r.pair->g2.to_string('X', 'Y');
    } else {
        out["d1"] = 1;
        out["d2"] = f.degree() + 1;
        out["g1"] = form_json(r.witness);
        out["g2"] = nullptr;
    }
    out["witness"] = form_json(r.witness);
    out["witness_status"] = to_string(r.witness_status);
    return out;
}

template <ExactField F>
json quartic_json(BinaryForm<F> const& f) {
    auto q = quartic_report(f);
    json out;
    out["form"] = f.to_string();
    out["S"] = str(q.S);
    out["T"] = str(q.T);
    out["j"] = q.j.to_string();
    out["harmonic"] = q.harmonic;
    out["rank"] = q.rank;
    out["sylvester_rank"] = waring_rank(f).rank;
    return out;
}

template <ExactField F>
json g1_json(QuinticG1<F> const& g) {
    json out;
    json minors = json::array();
    for (auto const& m : g.minors) minors.push_back(str(m));
    out["minors"] = minors;
    out["a"] = str(g.a);
    out["b"] = str(g.b);
    out["c"] = str(g.c);
    out["d"] = str(g.d);
    out["g1"] = BinaryForm<F>(g.raw()).to_string('X', 'Y');
    out["alpha"] = str(g.alpha());
    out["beta"] = str(g.beta());
    out["gamma"] = str(g.gamma());
    out["delta"] = str(g.delta());
    return out;
}

template <ExactField F>
json quintic_json(QuinticReport<F> const& r) {
    json out;
    if (r.st) {
        out["s"] = str(r.st->first);
        out["t"] = str(r.st->second);
    }
    out["S"] = str(r.S);
    out["P"] = str(r.P);
    out["form"] = quintic_family_SP(r.S, r.P).to_string();
    out["golden"] = r.golden;
    out["g1"] = r.g1 ? json(BinaryForm<F>(r.g1->raw()).to_string('X', 'Y')) : json(nullptr);
    auto d = r.delta();
    out["delta"] = d ? json(str(*d)) : json(nullptr);
    out["rank"] = r.rank;
    if (r.st) {
        json jt = json::array();
        for (auto const& j : quintic_j_tuple(r.st->first, r.st->second)) jt.push_back(str(j));
        out["j_tuple"] = jt;
    }
    return out;
}

template <ExactField F>
json ternary_json(BinaryForm<F> const& f) {
    auto r = ternary_rank_zf(f);
    auto pair = apolar_pair(f);
    json out;
    out["f"] = f.to_string();
    out["F"] = "z*(" + f.to_string() + ")";
    out["d1"] = r.d1;
    out["d2"] = r.d2;
    out["ternary_rank"] = r.ternary_rank;
    out["ann_generators"] = json::array({pair.g1.to_string('X', 'Y'), pair.g2.to_string('X', 'Y'), "Z^2"});
    out["ann_generator_degrees"] = json::array({r.ann_generator_degrees[0], r.ann_generator_degrees[1],
                                                r.ann_generator_degrees[2]});
    out["ann_verified"] = verify_ann_zf(f);
    return out;
}

template <ExactField F>
json decompose_json(BinaryForm<F> const& f, bool probe, ProbeOptions const& probe_options) {
    auto r = waring_rank(f);
    if (!r.witness)
        throw computation_error("no squarefree annihilator of degree " + std::to_string(r.rank) + " (" +
                                to_string(r.witness_status) + ")");
    auto dec = extract_decomposition(f, *r.witness);
    json out;
    out["form"] = f.to_string();
    out["rank"] = r.rank;
    out["witness"] = r.witness->to_string('X', 'Y');
    json terms = json::array();
    for (auto const& t : dec.terms) terms.push_back({{"alpha", complex_json(t.alpha)}, {"beta", complex_json(t.beta)}});
    out["terms"] = terms;
    out["residual"] = dec.residual;
    if (probe) {
        auto p = border_rank_probe(f, r.rank, probe_options);
        out["probe"] = {{"r", r.rank},
                        {"fits", p.fits},
                        {"residual", p.residual},
                        {"best_restart", p.best_restart},
                        {"converged", p.converged}};
    }
    return out;
}

// ---------------------------------------------------------------------------
// Sweeps

struct SweepRow {
    std::optional<std::string> csv;
    std::string skipped_reason;
};

// Evaluates rows concurrently; results keep the order of `count`.
inline std::vector<SweepRow> parallel_rows(std::size_t count, std::function<SweepRow(std::size_t)> const& row) {
    std::vector<SweepRow> rows(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                rows[i] = row(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned n = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 16));
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < n; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (auto const& e : errors)
        if (e) std::rethrow_exception(e);
    return rows;
}

inline GridAxis const& require_axis(std::vector<GridAxis> const& axes, std::string const& name) {
    for (auto const& a : axes)
        if (a.name == name) return a;
    throw validation_error("grid has no axis named '" + name + "'");
}

inline std::vector<std::string> sweep_quartic(std::vector<GridAxis> const& axes, std::ostream& err) {
    if (axes.size() != 1) throw validation_error("a degree-4 sweep takes exactly one axis, t");
    auto ts = require_axis(axes, "t").points();
    auto rows = parallel_rows(ts.size(), [&](std::size_t i) -> SweepRow {
        Rational const& t = ts[i];
        if (t.is_zero() || t == Rational(1)) return {std::nullopt, "t=" + t.to_string() + ": multiple factor"};
        auto f = quartic_family(t);
        auto q = quartic_report(f);
        auto r = waring_rank(f);
        return {t.to_string() + "," + q.S.to_string() + "," + q.T.to_string() + "," + q.j.to_string() + "," +
                    (q.harmonic ? "true" : "false") + "," + std::to_string(q.rank) + "," + std::to_string(r.rank),
                ""};
    });
    std::vector<std::string> lines{"t,S,T,j,harmonic,j_rank,rank"};
    for (auto const& r : rows) {
        if (r.csv)
            lines.push_back(*r.csv);
        else
            err << "skipped " << r.skipped_reason << "\n";
    }
    return lines;
}

inline std::vector<std::string> sweep_quintic(std::vector<GridAxis> const& axes, std::ostream& err) {
    if (axes.size() != 2) throw validation_error("a degree-5 sweep takes two axes, s and t (or S and P)");
    bool sp = std::any_of(axes.begin(), axes.end(), [](auto const& a) { return a.name == "S"; });
    auto xs = require_axis(axes, sp ? "S" : "s").points();
    auto ys = require_axis(axes, sp ? "P" : "t").points();
    std::size_t count = xs.size() * ys.size();
    auto rows = parallel_rows(count, [&](std::size_t k) -> SweepRow {
        Rational const& x = xs[k / ys.size()];
        Rational const& y = ys[k % ys.size()];
        std::string point = std::string(sp ? "S=" : "s=") + x.to_string() + (sp ? " P=" : " t=") + y.to_string();
        try {
            auto r = sp ? classify_quintic_SP(x, y) : classify_quintic(x, y);
            auto d = r.delta();
            std::string prefix = sp ? "" : x.to_string() + "," + y.to_string() + ",";
            return {prefix + r.S.to_string() + "," + r.P.to_string() + "," + (r.golden ? "true" : "false") + "," +
                        (d ? d->to_string() : "") + "," + std::to_string(r.rank),
                    ""};
        } catch (validation_error const& e) {
            return {std::nullopt, point + ": " + e.what()};
        }
    });
    std::vector<std::string> lines{sp ? "S,P,golden,delta,rank" : "s,t,S,P,golden,delta,rank"};
    for (auto const& r : rows) {
        if (r.csv)
            lines.push_back(*r.csv);
        else
            err << "skipped " << r.skipped_reason << "\n";
    }
    return lines;
}

// ---------------------------------------------------------------------------

inline void emit_json(std::ostream& out, json const& j) { out << j.dump(2) << "\n"; }

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Waring ranks of binary forms and related invariants", "waring_cli"};
    app.require_subcommand(1);

    std::string form;
    auto* rank = app.add_subcommand("rank", "Waring rank with apolar generators and a witness");
    rank->add_option("form", form, "binary form, e.g. \"x*y*(x+y)*(x+2*y)\" or \"coeffs:3:[1,0,0,1]\"")->required();

    auto* invariants = app.add_subcommand("invariants", "S, T, j and rank of a squarefree quartic");
    invariants->add_option("form", form, "quartic form")->required();

    std::optional<std::string> s_opt, t_opt, S_opt, P_opt;
    auto* quintic = app.add_subcommand("classify-quintic", "rank of xy(x+y)(x+sy)(x+ty) or xy(x+y)(x^2+Sxy+Py^2)");
    auto* qs = quintic->add_option("--s", s_opt, "root parameter s");
    auto* qt = quintic->add_option("--t", t_opt, "root parameter t");
    auto* qS = quintic->add_option("--S", S_opt, "S = s + t");
    auto* qP = quintic->add_option("--P", P_opt, "P = s t");
    qs->needs(qt);
    qt->needs(qs);
    qS->needs(qP);
    qP->needs(qS);
    qs->excludes(qS);
    qs->excludes(qP);
    qt->excludes(qS);
    qt->excludes(qP);

    bool print_polynomial = false;
    auto* delta = app.add_subcommand("delta", "cubic generator g1 of a quintic and its discriminant Delta(S, P)");
    auto* dS = delta->add_option("--S", S_opt, "S = s + t");
    auto* dP = delta->add_option("--P", P_opt, "P = s t");
    auto* dpoly = delta->add_flag("--print-polynomial", print_polynomial, "print Delta as a polynomial in S, P");
    dS->needs(dP);
    dP->needs(dS);
    dpoly->excludes(dS);
    dpoly->excludes(dP);

    auto* golden = app.add_subcommand("golden-pairs", "the twelve (s, t) with rank 2 quintics");

    auto* ternary = app.add_subcommand("ternary-rank", "rank of z*f(x, y) and the generators of its apolar ideal");
    ternary->add_option("form", form, "binary form f")->required();

    bool probe = false;
    ProbeOptions probe_options;
    auto* decompose = app.add_subcommand("decompose", "numeric Waring decomposition from the exact witness");
    decompose->add_option("form", form, "binary form")->required();
    decompose->add_flag("--probe", probe, "also fit rank-many linear forms by least squares");
    decompose->add_option("--tolerance", probe_options.tolerance, "probe fit tolerance")->check(CLI::PositiveNumber);
    decompose->add_option("--restarts", probe_options.restarts, "probe restarts")->check(CLI::PositiveNumber);
    decompose->add_option("--seed", probe_options.seed, "probe seed");

    int degree = 0;
    std::string format = "csv";
    auto* demo = app.add_subcommand("demo-combinatorics", "equal line-arrangement combinatorics, different ranks");
    demo->add_option("--degree", degree, "4 or 5")->required()->check(CLI::IsMember({4, 5}));
    demo->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    std::vector<std::string> grid_specs;
    std::string out_path;
    auto* sweep = app.add_subcommand("sweep", "rank over a rational parameter grid, as CSV");
    sweep->add_option("--degree", degree, "4 (axis t) or 5 (axes s, t or S, P)")
        ->required()
        ->check(CLI::IsMember({4, 5}));
    sweep->add_option("--grid", grid_specs, "\"name=a..b step h\"; repeat or separate axes with ';'")->required();
    sweep->add_option("--out", out_path, "CSV path (default: stdout)");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (CLI::ParseError const& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kValidation;
    }

    try {
        if (rank->parsed()) {
            emit_json(out, with_form(form, [](auto const& f) { return rank_json(f); }));
        } else if (invariants->parsed()) {
            emit_json(out, with_form(form, [](auto const& f) { return quartic_json(f); }));
        } else if (quintic->parsed()) {
            bool by_roots = s_opt.has_value();
            if (!by_roots && !S_opt) throw validation_error("classify-quintic needs --s and --t, or --S and --P");
            std::vector<std::string> texts = by_roots ? std::vector{*s_opt, *t_opt} : std::vector{*S_opt, *P_opt};
            emit_json(out, with_scalars(texts, [&](auto const& v) {
                          return quintic_json(by_roots ? classify_quintic(v[0], v[1]) : classify_quintic_SP(v[0], v[1]));
                      }));
        } else if (delta->parsed()) {
            if (print_polynomial) {
                auto p = delta_polynomial();
                json terms = json::array();
                for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
                    terms.push_back({{"S", it->first[0]}, {"P", it->first[1]}, {"coefficient", it->second.to_string()}});
                json j;
                j["polynomial"] = p.to_string({"S", "P"});
                j["term_count"] = p.terms().size();
                j["primitive"] = primitive_part(p).to_string({"S", "P"});
                j["terms"] = terms;
                emit_json(out, j);
            } else {
                if (!S_opt) throw validation_error("delta needs --S and --P, or --print-polynomial");
                emit_json(out, with_scalars({*S_opt, *P_opt}, [](auto const& v) {
                              require_distinct_quintic_SP(v[0], v[1]);
                              json j;
                              j["S"] = str(v[0]);
                              j["P"] = str(v[1]);
                              j.update(g1_json(quintic_g1(v[0], v[1])));
                              return j;
                          }));
            }
        } else if (golden->parsed()) {
            json pairs = json::array();
            for (auto const& [s, t] : golden_pairs())
                pairs.push_back({{"s", s.to_string()},
                                 {"t", t.to_string()},
                                 {"S", (s + t).to_string()},
                                 {"P", (s * t).to_string()},
                                 {"rank2_test", quintic_catalecticant_rank2_test(s, t)},
                                 {"rank", classify_quintic(s, t).rank}});
            emit_json(out, {{"count", pairs.size()}, {"pairs", pairs}});
        } else if (ternary->parsed()) {
            emit_json(out, with_form(form, [](auto const& f) { return ternary_json(f); }));
        } else if (decompose->parsed()) {
            emit_json(out, with_form(form, [&](auto const& f) { return decompose_json(f, probe, probe_options); }));
        } else if (demo->parsed()) {
            auto rows = combinatorics_vs_rank_demo(degree);
            if (format == "json") {
                json arr = json::array();
                for (auto const& r : rows)
                    arr.push_back({{"label", r.label},
                                   {"parameters", r.parameters},
                                   {"d1", r.d1},
                                   {"d2", r.d2},
                                   {"ternary_rank", r.ternary_rank},
                                   {"lattice", r.lattice},
                                   {"ann_verified", r.ann_verified}});
                emit_json(out, {{"degree", degree}, {"rows", arr}});
            } else {
                out << "label,parameters,d1,d2,ternary_rank,lattice,ann_verified\n";
                for (auto const& r : rows)
                    out << r.label << "," << r.parameters << "," << r.d1 << "," << r.d2 << "," << r.ternary_rank
                        << "," << r.lattice << "," << (r.ann_verified ? "true" : "false") << "\n";
            }
        } else if (sweep->parsed()) {
            std::vector<GridAxis> axes;
            for (auto const& spec : grid_specs)
                for (auto& a : parse_grid(spec)) axes.push_back(std::move(a));
            auto lines = degree == 4 ? sweep_quartic(axes, err) : sweep_quintic(axes, err);
            if (out_path.empty()) {
                for (auto const& l : lines) out << l << "\n";
            } else {
                std::ofstream file(out_path);
                if (!file) throw validation_error("cannot open '" + out_path + "' for writing");
                for (auto const& l : lines) file << l << "\n";
                if (!file) throw computation_error("write to '" + out_path + "' failed");
                err << "wrote " << lines.size() - 1 << " rows to " << out_path << "\n";
            }
        }
    } catch (validation_error const& e) {
        err << "error: " << e.what() << "\n";
        return kValidation;
    } catch (std::exception const& e) {
        err << "error: " << e.what() << "\n";
        return kComputation;
    }
    return kOk;
}

}  // namespace waring::cli
