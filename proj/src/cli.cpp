#include "tangency/cli.hpp"

#include "tangency/expression.hpp"
#include "tangency/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iomanip>
#include <memory>
#include <optional>
#include <random>

namespace tangency::cli {

namespace {

using nlohmann::json;

enum class Format { Text, Json, Csv };

struct Flags {
    int n = 5;
    int arity = 2;
    int d = 0;
    int k = 1;
    std::uint64_t q = 0;
    unsigned threads = 1;
    std::optional<std::uint64_t> seed;
    std::optional<long long> at;
    std::string input;
    std::string line;
    std::string point;
    std::string field = "Q";
    std::string format = "text";
    std::string order = "desc";
    std::string emit;
    std::string series;
    std::string route = "truncated";
    std::string fermat;
    std::vector<std::string> exprs;
    bool corrupt = false;
    int trials = 200;
    std::uint64_t smooth_samples = 0;
};

Format parse_format(const std::string& s, bool csv_allowed) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    if (s == "csv" && csv_allowed) return Format::Csv;
    throw PreconditionError("unsupported --format \"" + s + "\" for this command");
}

TermOrder parse_order(const std::string& s) {
    if (s == "desc") return TermOrder::Descending;
    if (s == "asc") return TermOrder::Ascending;
    throw PreconditionError("--order must be asc or desc");
}

std::ifstream open_input(const std::string& path) {
    if (path.empty()) throw PreconditionError("missing input path");
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open \"" + path + "\"");
    return in;
}

json bigint_json(const BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return json(v.convert_to<long long>());
    return json(v.str());
}

std::uint64_t resolve_seed(const Flags& f) {
    if (f.seed) return *f.seed;
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

// ---- rings -----------------------------------------------------------------

int cmd_schubert_mult(const Flags& f, std::ostream& out) {
    const Format fmt = parse_format(f.format, false);
    if (f.exprs.size() < 2) throw PreconditionError("schubert mult needs at least two expressions");
    SchubertElt prod = parse_schubert_expression(f.exprs.front(), f.n);
    for (std::size_t i = 1; i < f.exprs.size(); ++i) prod = prod * parse_schubert_expression(f.exprs[i], f.n);
    if (fmt == Format::Json)
        out << json{{"n", f.n}, {"schubert", prod.to_string()}}.dump() << '\n';
    else
        out << prod.to_string() << '\n';
    return Ok;
}

int cmd_schubert_degree(const Flags& f, std::ostream& out) {
    const Format fmt = parse_format(f.format, false);
    if (f.exprs.size() != 1) throw PreconditionError("schubert degree takes one expression");
    const DPoly deg = degree(parse_schubert_expression(f.exprs.front(), f.n));
    const std::string text = deg.to_string(parse_order(f.order));
    if (fmt == Format::Json)
        out << json{{"n", f.n}, {"degree", text}}.dump() << '\n';
    else
        out << text << '\n';
    return Ok;
}

int cmd_flag_integrate(const Flags& f, std::ostream& out) {
    const Format fmt = parse_format(f.format, false);
    if (f.exprs.size() != 1) throw PreconditionError("flag integrate takes one expression");
    if (f.arity != 1 && f.arity != 2) throw PreconditionError("--arity must be 1 or 2");
    const FlagElt x = parse_flag_expression(f.exprs.front(), f.n, f.arity);
    const std::string value = integrate(x).to_string(parse_order(f.order));
    const bool with_class = f.emit == "class";
    if (!f.emit.empty() && !with_class) throw PreconditionError("--emit accepts only \"class\"");
    if (fmt == Format::Json) {
        json j{{"n", f.n}, {"arity", f.arity}, {"integral", value}};
        if (with_class) j["class"] = x.to_string();
        out << j.dump() << '\n';
    } else {
        out << value << '\n';
        if (with_class) out << "class: " << x.to_string() << '\n';
    }
    return Ok;
}

// ---- bounds ----------------------------------------------------------------

struct BoundCommand {
    std::function<BoundResult()> compute;
    ContactClassSpec spec;
    int arity;
};

int cmd_bound(const BoundCommand& cmd, const Flags& f, std::ostream& out) {
    const Format fmt = parse_format(f.format, false);
    const TermOrder order = parse_order(f.order);
    const bool with_class = f.emit == "class";
    if (!f.emit.empty() && !with_class) throw PreconditionError("--emit accepts only \"class\"");
    const BoundResult r = cmd.compute();
    json j = to_json(r, order);
    std::string cls;
    if (with_class) {
        cls = principal_parts_class(cmd.spec, HFactor::H1, cmd.arity).to_string();
        j["class"] = cls;
    }
    std::optional<BigInt> value;
    if (f.at) {
        value = r.polynomial.evaluate(BigInt(*f.at));
        j["at"] = json{{"d", *f.at}, {"value", bigint_json(*value)}, {"inRange", r.in_range(*f.at)}};
    }
    if (fmt == Format::Json) {
        out << j.dump() << '\n';
        return Ok;
    }
    out << r.polynomial.to_string(order) << '\n';
    out << "validity: " << r.validity << '\n';
    if (value) {
        out << "at d=" << *f.at << ": " << *value;
        if (!r.in_range(*f.at)) out << " (outside validity range d >= " << r.valid_from_d << ")";
        out << '\n';
    }
    if (with_class) out << "class: " << cls << '\n';
    return Ok;
}

int cmd_fano(const Flags& f, std::ostream& out) {
    const Format fmt = parse_format(f.format, false);
    const BigInt lines = fano_line_count(f.n, f.d);
    if (fmt == Format::Json)
        out << json{{"n", f.n}, {"d", f.d}, {"lines", bigint_json(lines)}}.dump() << '\n';
    else
        out << lines << '\n';
    return Ok;
}

// ---- deformation lab -------------------------------------------------------

template <class S>
struct Tag {
    using type = S;
};

// Calls fn(Tag<S>{}, ctx) with S = Rational for "Q" and Fp for a prime.
template <class Fn>
int with_field(const Flags& f, Fn&& fn) {
    if (f.field == "Q") return fn(Tag<Rational>{}, ScalarOps<Rational>::Context{});
    std::uint64_t p = 0;
    try {
        std::size_t used = 0;
        p = std::stoull(f.field, &used);
        if (used != f.field.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw PreconditionError("--field must be Q or a prime");
    }
    if (!is_prime(p)) throw PreconditionError("--field " + f.field + " is not prime");
    return fn(Tag<Fp>{}, ScalarOps<Fp>::Context{p});
}

template <class S>
HyperForm<S> load_form(const Flags& f, const typename ScalarOps<S>::Context& ctx) {
    auto in = open_input(f.input);
    HyperForm<S> form = read_hypersurface<S>(in, ctx);
    if constexpr (std::is_same_v<S, Fp>) {
        if (ctx.p <= static_cast<std::uint64_t>(form.degree()))
            throw PreconditionError("characteristic too small for contact order d");
    }
    return form;
}

template <class S>
LineParam<S> load_line(const Flags& f, const typename ScalarOps<S>::Context& ctx, int n) {
    auto in = open_input(f.line);
    LineParam<S> line = read_line<S>(in, ctx);
    if (line.ambient() != n)
        throw PreconditionError("line lives in P^" + std::to_string(line.ambient()) + " but the hypersurface in P^" +
                                std::to_string(n));
    return line;
}

template <class S>
Vec<S> parse_point(const std::string& text, const typename ScalarOps<S>::Context& ctx) {
    std::string s = text;
    for (char& c : s)
        if (c == ',') c = ' ';
    std::istringstream is(s);
    std::vector<S> coords;
    for (std::string tok; is >> tok;) coords.push_back(ScalarOps<S>::parse(tok, ctx));
    if (coords.empty()) throw PreconditionError("--point is empty");
    Vec<S> v(static_cast<Eigen::Index>(coords.size()));
    for (std::size_t i = 0; i < coords.size(); ++i) v(static_cast<Eigen::Index>(i)) = coords[i];
    return v;
}

template <class S>
json matrix_json(const Mat<S>& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(ScalarOps<S>::to_string(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

void print_flat(const json& j, std::ostream& out) {
    for (const auto& [key, value] : j.items())
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
}

void emit(const json& j, Format fmt, std::ostream& out) {
    if (fmt == Format::Json)
        out << j.dump() << '\n';
    else
        print_flat(j, out);
}

json contact_json(const ContactOrder& c) { return c.contained() ? json("contained") : json(*c.order); }

int cmd_deform_contact(const Flags& f, std::ostream& out) {
    const Format fmt = parse_format(f.format, false);
    return with_field(f, [&](auto tag, const auto& ctx) {
        using S = typename decltype(tag)::type;
        const HyperForm<S> form = load_form<S>(f, ctx);
        const LineParam<S> line = load_line<S>(f, ctx, form.ambient());
        emit(json{{"contactOrder", contact_json(contact_order(form, line))}}, fmt, out);
        return Ok;
    });
}

int cmd_deform_truncate(const Flags& f, std::ostream& out) {
    const Format fmt = parse_format(f.format, false);
    return with_field(f, [&](auto tag, const auto& ctx) {
        using S = typename decltype(tag)::type;
        const HyperForm<S> form = load_form<S>(f, ctx);
        const Truncation<S> tr = truncate(form, parse_point<S>(f.point, ctx), f.k);
        json j{{"k", tr.k},
               {"fk", tr.fk.to_string()},
               {"pivot", tr.frame.pivot},
               {"frameToOriginal", matrix_json(tr.frame.to_original)},
               {"smoothAtPoint", tr.smooth_at_point}};
        emit(j, fmt, out);
        return Ok;
    });
}

SectionRoute parse_route(const std::string& s) {
    if (s == "truncated") return SectionRoute::Truncated;
    if (s == "full") return SectionRoute::Full;
    throw PreconditionError("--route must be truncated or full");
}

int cmd_deform_sections(const Flags& f, std::ostream& out) {
    const Format fmt = parse_format(f.format, false);
    const SectionRoute route = parse_route(f.route);
    return with_field(f, [&](auto tag, const auto& ctx) {
        using S = typename decltype(tag)::type;
        const HyperForm<S> form = load_form<S>(f, ctx);
        const LineParam<S> line = load_line<S>(f, ctx, form.ambient());
        const DeformationSpace<S> space = log_sections(form, line, f.k, route);
        json j = deformation_report(form.ambient(), f.k, space, !space.log_variant);
        j["eulerInKernel"] = contains(space, euler_tuple(line));
        emit(j, fmt, out);
        return Ok;
    });
}

int cmd_deform_congruence(const Flags& f, std::ostream& out) {
    const Format fmt = parse_format(f.format, false);
    return with_field(f, [&](auto tag, const auto& ctx) {
        using S = typename decltype(tag)::type;
        const HyperForm<S> form = load_form<S>(f, ctx);
        const LineParam<S> line = load_line<S>(f, ctx, form.ambient());
        const CongruenceReport<S> rep = congruence_check(form, line, f.k, f.corrupt);
        json per = json::array();
        for (bool ok : rep.per_index) per.push_back(ok);
        emit(json{{"k", rep.k}, {"perIndex", per}, {"allPass", rep.all_pass()}, {"corrupted", f.corrupt}}, fmt, out);
        return Ok;
    });
}

int cmd_deform_experiment(const Flags& f, std::ostream& out) {
    const Format fmt = parse_format(f.format, true);
    const std::uint64_t seed = resolve_seed(f);
    const ExperimentSummary s = run_deformation_experiment(f.trials, seed, f.threads);
    if (fmt == Format::Csv) {
        out << "# seed " << seed << '\n';
        out << "trial,n,d,k,p,h0,expected,eulerInKernel,congruencePass,routesAgree\n";
        for (const auto& t : s.trials)
            out << t.index << ',' << t.n << ',' << t.d << ',' << t.k << ',' << t.p << ',' << t.h0 << ','
                << expected_h0(t.n, t.k) << ',' << t.euler_in_kernel << ',' << t.congruence_pass << ','
                << t.routes_agree << '\n';
        return Ok;
    }
    json failures = json::array();
    for (const auto& t : s.trials)
        if (!t.h0_match() || !t.euler_in_kernel || !t.congruence_pass || !t.routes_agree)
            failures.push_back(json{{"trial", t.index},
                                    {"n", t.n},
                                    {"d", t.d},
                                    {"k", t.k},
                                    {"p", t.p},
                                    {"h0", t.h0},
                                    {"expectedValue", expected_h0(t.n, t.k)},
                                    {"eulerInKernel", t.euler_in_kernel},
                                    {"congruencePass", t.congruence_pass},
                                    {"routesAgree", t.routes_agree}});
    const double rate = s.trials.empty() ? 1.0 : static_cast<double>(s.h0_matches()) / static_cast<double>(s.trials.size());
    json j{{"seed", seed},
           {"trials", s.trials.size()},
           {"h0Matches", s.h0_matches()},
           {"h0MatchRate", rate},
           {"exactChecksPass", s.exact_checks_pass()},
           {"failures", failures}};
    if (fmt == Format::Json) {
        out << j.dump() << '\n';
    } else {
        out << "seed: " << seed << '\n';
        out << "trials: " << s.trials.size() << '\n';
        out << "h0 = 2n-k+1: " << s.h0_matches() << " (" << std::fixed << std::setprecision(3) << rate << ")\n";
        out << "exact checks: " << (s.exact_checks_pass() ? "pass" : "FAIL") << '\n';
        for (const auto& fl : failures) out << "  failure: " << fl.dump() << '\n';
    }
    return Ok;
}

// ---- finite fields ---------------------------------------------------------

HyperForm<Fp> count_input(const Flags& f) {
    if (f.q == 0) throw PreconditionError("--q is required");
    if (!is_prime(f.q)) throw PreconditionError("--q " + std::to_string(f.q) + " is not prime");
    if (!f.fermat.empty()) {
        if (!f.input.empty()) throw PreconditionError("give --input or --fermat, not both");
        std::string spec = f.fermat;
        for (char& c : spec)
            if (c == ',') c = ' ';
        std::istringstream is(spec);
        int n = 0;
        int d = 0;
        if (!(is >> n >> d) || n < 1 || d < 1) throw PreconditionError("--fermat expects \"n,d\"");
        if (f.q <= static_cast<std::uint64_t>(d)) throw PreconditionError("characteristic too small for contact order d");
        return fermat_form(n, d, f.q);
    }
    auto in = open_input(f.input);
    HyperForm<Fp> form = read_hypersurface<Fp>(in, ScalarOps<Fp>::Context{f.q});
    if (f.q <= static_cast<std::uint64_t>(form.degree()))
        throw PreconditionError("characteristic too small for contact order d");
    if (form.is_zero()) throw PreconditionError("hypersurface is identically zero mod q");
    return form;
}

int cmd_count_vk(const Flags& f, std::ostream& out) {
    const Format fmt = parse_format(f.format, true);
    if (f.k < 1) throw PreconditionError("--k must be >= 1");
    const HyperForm<Fp> form = count_input(f);
    json smooth;
    if (f.smooth_samples > 0) {
        const std::uint64_t seed = resolve_seed(f);
        std::mt19937_64 rng(seed);
        const SmoothnessCheck chk = probably_smooth(form, f.smooth_samples, rng);
        smooth = json{{"seed", seed},
                      {"noSingularPointFound", chk.no_singular_point_found},
                      {"pointsChecked", chk.points_checked},
                      {"exhaustive", chk.exhaustive}};
        if (fmt != Format::Json) out << "# smoothness check seed " << seed << '\n';
    }
    CountRecord rec = count_vk(form, f.k, f.threads);
    rec.source = f.fermat.empty() ? f.input : "fermat " + f.fermat;
    json j = to_json(rec);
    if (!smooth.is_null()) j["smoothness"] = smooth;
    if (fmt == Format::Json) {
        out << j.dump() << '\n';
    } else if (fmt == Format::Csv) {
        out << "q,k,count,n,d,elapsedMs\n"
            << rec.q << ',' << rec.k << ',' << rec.count << ',' << rec.n << ',' << rec.d << ',' << rec.elapsed_ms << '\n';
    } else {
        out << "q=" << rec.q << " k=" << rec.k << " count=" << rec.count << " n=" << rec.n << " d=" << rec.d
            << " elapsedMs=" << rec.elapsed_ms << '\n';
        if (!smooth.is_null())
            out << "smooth: " << (smooth["noSingularPointFound"].get<bool>() ? "no singular point found" : "SINGULAR")
                << " (" << smooth["pointsChecked"] << " points)\n";
    }
    return Ok;
}

int cmd_slope(const Flags& f, std::ostream& out) {
    const Format fmt = parse_format(f.format, false);
    auto in = open_input(f.series);
    json data;
    try {
        data = json::parse(in);
    } catch (const json::parse_error& e) {
        throw PreconditionError(std::string("series is not valid JSON: ") + e.what());
    }
    const SlopeReport r = dimension_slope(read_count_series(data));
    if (fmt == Format::Json) {
        out << to_json(r).dump() << '\n';
        return Ok;
    }
    out << "slope: " << std::fixed << std::setprecision(4) << r.slope << '\n';
    for (std::size_t i = 0; i < r.step_ratios.size(); ++i)
        out << "step q=" << r.q_used[i] << "->" << r.q_used[i + 1] << ": " << r.step_ratios[i] << '\n';
    for (const auto& w : r.warnings) out << "warning: " << w << '\n';
    return Ok;
}

int cmd_fermat_planes(const Flags& f, std::ostream& out) {
    const Format fmt = parse_format(f.format, false);
    if (f.d < 1) throw PreconditionError("--d must be >= 1");
    const auto planes = fermat_planes(f.d);
    const std::size_t expected = 15 * static_cast<std::size_t>(f.d) * static_cast<std::size_t>(f.d) * static_cast<std::size_t>(f.d);
    const BoundResult bound = plane_bound();
    const BigInt at = bound.polynomial.evaluate(BigInt(f.d));
    json j{{"d", f.d},
           {"count", planes.size()},
           {"expected", expected},
           {"allVerified", true},
           {"planeBound", bigint_json(at)},
           {"boundApplies", bound.in_range(f.d)},
           {"withinBound", BigInt(planes.size()) <= at}};
    if (!f.emit.empty()) {
        json list = json::array();
        for (const auto& p : planes) list.push_back(to_json(p));
        std::ofstream file(f.emit);
        if (!file) throw PreconditionError("cannot write \"" + f.emit + "\"");
        file << json{{"d", f.d}, {"count", planes.size()}, {"planes", list}}.dump(1) << '\n';
        j["emitted"] = f.emit;
    }
    emit(j, fmt, out);
    return Ok;
}

// ---- replication table -----------------------------------------------------

struct Row {
    std::string check;
    std::string expected;
    std::string got;
    bool pass;
};

std::vector<Row> replication_rows() {
    std::vector<Row> rows;
    auto poly_row = [&](const std::string& name, const BoundResult& r, const std::string& expected_asc) {
        const std::string got = r.polynomial.to_string(TermOrder::Ascending);
        rows.push_back({name, expected_asc, got, got == expected_asc});
    };
    poly_row("plane bound", plane_bound(), "120 d^2 - 150 d^3 + 35 d^4");
    poly_row("Z6 conditional bound", z6_conditional_bound(), "1800 d - 1370 d^2 + 225 d^3");
    poly_row("flecnodal degree", flecnodal_degree(), "-24 d + 11 d^2");
    const DPoly flex = flex_count().polynomial;
    rows.push_back({"flex count", "3 (-2 + d) d", flex.to_string(), flex == DPoly{0, -6, 3}});

    const int n = 5;
    const SchubertElt s1 = SchubertElt::sigma(n, 1);
    const SchubertElt s11 = SchubertElt::sigma(n, 1, 1);
    struct Rule {
        std::string name;
        SchubertElt monomial;
        long long value;
    };
    const std::vector<Rule> rules{{"s11*s1^6", power(s1, 6), 5},
                                  {"s11*s1^4*s11", power(s1, 4) * s11, 2},
                                  {"s11*s1^2*s11^2", power(s1, 2) * power(s11, 2), 1},
                                  {"s11*s11^3", power(s11, 3), 1}};
    for (const auto& r : rules) {
        const DPoly got = degree(s11 * r.monomial);
        rows.push_back({"degree " + r.name + " on G(1,5)", std::to_string(r.value), got.to_string(), got == DPoly(r.value)});
    }
    // The class of the lines in a 2-plane is s[3,3] on G(1,5) and s[2,2]
    // on G(1,4); the literal s[2,2]*s11*H1*H2 is not top-dimensional on
    // G(1,5).
    const DPoly plane5 = integrate(parse_flag_expression("s[3,3]*s11*H1*H2", 5, 2));
    rows.push_back({"integrate s33*s11*H1*H2 on G(1,5)", "1", plane5.to_string(), plane5 == DPoly(1)});
    const DPoly plane4 = integrate(parse_flag_expression("s[2,2]*s11*H1*H2", 4, 2));
    rows.push_back({"integrate s22*s11*H1*H2 on G(1,4)", "1", plane4.to_string(), plane4 == DPoly(1)});
    return rows;
}

int cmd_replicate(const Flags& f, std::ostream& out) {
    const Format fmt = parse_format(f.format, false);
    const auto rows = replication_rows();
    bool all = true;
    for (const auto& r : rows) all = all && r.pass;
    if (fmt == Format::Json) {
        json list = json::array();
        for (const auto& r : rows)
            list.push_back(json{{"check", r.check}, {"expected", r.expected}, {"got", r.got}, {"pass", r.pass}});
        out << json{{"rows", list}, {"allPass", all}}.dump() << '\n';
    } else {
        std::size_t w0 = 5;
        std::size_t w1 = 8;
        for (const auto& r : rows) {
            w0 = std::max(w0, r.check.size());
            w1 = std::max(w1, r.expected.size());
        }
        out << std::left << std::setw(static_cast<int>(w0)) << "check" << "  " << std::setw(static_cast<int>(w1))
            << "expected"
            << "  result  got\n";
        for (const auto& r : rows)
            out << std::setw(static_cast<int>(w0)) << r.check << "  " << std::setw(static_cast<int>(w1)) << r.expected
                << "  " << (r.pass ? "PASS  " : "FAIL  ") << "  " << r.got << '\n';
        out << (all ? "all checks passed" : "SOME CHECKS FAILED") << '\n';
    }
    return all ? Ok : InternalError;
}

// ---- argument wiring -------------------------------------------------------

void add_format(CLI::App* app, Flags& f) { app->add_option("--format", f.format, "text or json"); }
void add_order(CLI::App* app, Flags& f) { app->add_option("--order", f.order, "polynomial term order: desc or asc"); }

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Flags f;
    std::function<int()> action;
    CLI::App app{"tangency: Schubert calculus on G(1,n), contact-order bounds and finite-field experiments", "tangency"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);
    auto on = [&](CLI::App* sub, std::function<int(const Flags&, std::ostream&)> fn) {
        sub->callback([&, fn] { action = [&, fn] { return fn(f, out); }; });
    };

    auto* schubert = app.add_subcommand("schubert", "products and degrees in A(G(1,n))");
    schubert->require_subcommand(1);
    auto* smult = schubert->add_subcommand("mult", "product of Schubert expressions");
    smult->add_option("--n", f.n, "ambient projective dimension")->check(CLI::Range(2, 64));
    smult->add_option("exprs", f.exprs, "expressions such as s[2,1], s1^2 - s11")->required();
    add_format(smult, f);
    on(smult, cmd_schubert_mult);
    auto* sdeg = schubert->add_subcommand("degree", "coefficient of the point class");
    sdeg->add_option("--n", f.n, "ambient projective dimension")->check(CLI::Range(2, 64));
    sdeg->add_option("exprs", f.exprs, "top-codimension expression")->required();
    add_format(sdeg, f);
    add_order(sdeg, f);
    on(sdeg, cmd_schubert_degree);

    auto* flag = app.add_subcommand("flag", "the universal line and its fiber square");
    flag->require_subcommand(1);
    auto* fint = flag->add_subcommand("integrate", "degree of the pushforward of a class");
    fint->add_option("--n", f.n, "ambient projective dimension")->check(CLI::Range(2, 64));
    fint->add_option("--arity", f.arity, "1 for P(S), 2 for P(S) x_G P(S)");
    fint->add_option("exprs", f.exprs, "expression in s.., H1, H2, d")->required();
    fint->add_option("--emit", f.emit, "\"class\" also prints the reduced class");
    add_format(fint, f);
    add_order(fint, f);
    on(fint, cmd_flag_integrate);

    auto bound_leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, BoundCommand cmd) {
        auto* sub = parent->add_subcommand(name, help);
        add_format(sub, f);
        add_order(sub, f);
        sub->add_option("--emit", f.emit, "\"class\" also prints the principal parts class");
        sub->add_option("--at", f.at, "evaluate at this degree");
        on(sub, [cmd](const Flags& fl, std::ostream& o) { return cmd_bound(cmd, fl, o); });
        return sub;
    };
    auto* bound = app.add_subcommand("bound", "bounds on 2-planes in 4-folds of P^5");
    bound->require_subcommand(1);
    bound_leaf(bound, "planes", "unconditional plane bound", {plane_bound, {5, 4}, 2});
    bound_leaf(bound, "z6", "bound assuming Z6 of expected dimension 3", {z6_conditional_bound, {5, 5}, 1});

    auto* classic = app.add_subcommand("classic", "classical counts from the same machinery");
    classic->require_subcommand(1);
    bound_leaf(classic, "flecnodal", "degree of the flecnodal curve of a surface in P^3", {flecnodal_degree, {3, 3}, 1});
    bound_leaf(classic, "flex", "flexes of a plane curve", {flex_count, {2, 2}, 1});
    auto* fano = classic->add_subcommand("fano", "lines on a general hypersurface, d + 1 = 2(n - 1)");
    fano->add_option("--n", f.n, "ambient projective dimension")->required()->check(CLI::Range(2, 64));
    fano->add_option("--d", f.d, "degree")->required()->check(CLI::Range(1, 200));
    add_format(fano, f);
    on(fano, cmd_fano);

    auto* deform = app.add_subcommand("deform", "first-order deformations of lines with contact");
    deform->require_subcommand(1);
    auto deform_leaf = [&](const std::string& name, const std::string& help, bool needs_line) {
        auto* sub = deform->add_subcommand(name, help);
        sub->add_option("--input", f.input, "hypersurface file (\"c m0 ... mn\" per line)")->required();
        if (needs_line) sub->add_option("--line", f.line, "line file (n+1 rows \"cs ct\")")->required();
        sub->add_option("--field", f.field, "Q or a prime p > d");
        add_format(sub, f);
        return sub;
    };
    on(deform_leaf("contact", "contact order of the line at [0:1]", true), cmd_deform_contact);
    auto* dtr = deform_leaf("truncate", "F_k in a frame centred at a point of X", false);
    dtr->add_option("--point", f.point, "coordinates, e.g. \"1 0 0\"")->required();
    dtr->add_option("--k", f.k, "truncation order")->required();
    on(dtr, cmd_deform_truncate);
    auto* dsec = deform_leaf("sections", "contact-preserving deformation tuples", true);
    dsec->add_option("--k", f.k, "contact order to preserve")->required();
    dsec->add_option("--route", f.route, "truncated (F_k) or full (F)");
    on(dsec, cmd_deform_sections);
    auto* dcon = deform_leaf("congruence", "gradient congruence between F and F_k along the line", true);
    dcon->add_option("--k", f.k, "contact order")->required();
    dcon->add_flag("--corrupt", f.corrupt, "perturb F_k (negative control)");
    on(dcon, cmd_deform_congruence);
    auto* dexp = deform->add_subcommand("experiment", "random smooth hypersurfaces with lines of exact contact k");
    dexp->add_option("--trials", f.trials, "number of trials")->check(CLI::Range(0, 1000000));
    dexp->add_option("--seed", f.seed, "RNG seed (printed either way)");
    dexp->add_option("--threads", f.threads, "worker threads")->check(CLI::Range(1u, 1024u));
    dexp->add_option("--format", f.format, "text, json or csv");
    on(dexp, cmd_deform_experiment);

    auto* cvk = app.add_subcommand("count-vk", "count F_q-pairs (p, l) with contact >= k");
    cvk->add_option("--input", f.input, "hypersurface file");
    cvk->add_option("--fermat", f.fermat, "\"n,d\": use sum x_i^d instead of a file");
    cvk->add_option("--q", f.q, "prime field size")->required();
    cvk->add_option("--k", f.k, "contact order")->required();
    cvk->add_option("--threads", f.threads, "worker threads")->check(CLI::Range(1u, 1024u));
    cvk->add_option("--check-smooth", f.smooth_samples, "sample this many points of X for singularities");
    cvk->add_option("--seed", f.seed, "RNG seed for the smoothness check");
    cvk->add_option("--format", f.format, "text, json or csv");
    on(cvk, cmd_count_vk);

    auto* slope = app.add_subcommand("slope", "log-log slope of a count series");
    slope->add_option("--series", f.series, "JSON array of count records")->required();
    add_format(slope, f);
    on(slope, cmd_slope);

    auto* fp = app.add_subcommand("fermat-planes", "the 15 d^3 planes on the Fermat 4-fold");
    fp->add_option("--d", f.d, "degree")->required()->check(CLI::Range(1, 64));
    fp->add_option("--emit", f.emit, "write the planes to this JSON file");
    add_format(fp, f);
    on(fp, cmd_fermat_planes);

    auto* rep = app.add_subcommand("replicate-paper", "reproduce the published bounds and degree rules");
    add_format(rep, f);
    on(rep, cmd_replicate);

    if (!args.empty() && !args.front().empty() && args.front().front() != '-' &&
        app.get_subcommand_no_throw(args.front()) == nullptr) {
        err << "error: unknown subcommand \"" << args.front() << "\"\n\n" << app.help();
        return ValidationError;
    }
    try {
        std::vector<std::string> argv_store{"tangency"};
        argv_store.insert(argv_store.end(), args.begin(), args.end());
        std::vector<const char*> argv;
        for (const auto& a : argv_store) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        // Help requests exit 0; anything else prints the error and usage.
        return app.exit(e, out, err) == 0 ? Ok : ValidationError;
    }

    try {
        return action ? action() : ValidationError;
    } catch (const AssertionFailure& e) {
        err << "internal error: " << e.what() << '\n';
        return InternalError;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return ValidationError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return InternalError;
    }
}

}  // namespace tangency::cli
