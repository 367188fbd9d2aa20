#include "dlin/cli.hpp"

#include "dlin/corpus.hpp"
#include "dlin/error.hpp"
#include "dlin/parse.hpp"
#include "dlin/random.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <random>

namespace dlin {

using Json = nlohmann::ordered_json;

std::string certified_caveat(std::size_t bound) { return "certified given order ≤ " + std::to_string(bound); }

namespace {

using Table = std::vector<std::vector<std::string>>;

void print_table(std::ostream& out, const Table& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) {
                line += std::string(width[c] - row[c].size() + 2, ' ');
            }
        }
        line.erase(line.find_last_not_of(' ') + 1);
        out << line << '\n';
    }
}

Table seq_table(const std::vector<std::string>& headers, const std::vector<Seq>& columns) {
    Table t;
    std::vector<std::string> head{"n"};
    head.insert(head.end(), headers.begin(), headers.end());
    t.push_back(head);
    std::size_t len = 0;
    for (const auto& c : columns) {
        len = std::max(len, c.size());
    }
    for (std::size_t n = 0; n < len; ++n) {
        std::vector<std::string> row{std::to_string(n)};
        for (const auto& c : columns) {
            row.push_back(n < c.size() ? to_string(c[n]) : "");
        }
        t.push_back(std::move(row));
    }
    return t;
}

Json terms_json(const Seq& s) {
    Json arr = Json::array();
    for (const auto& x : s.terms()) {
        arr.push_back(to_string(x));
    }
    return arr;
}

Json seq_json(const Seq& s) {
    Json j;
    j["field"] = std::string(field_name(s.field()));
    j["terms"] = terms_json(s);
    return j;
}

Json drs_json(const DRSeq& r) {
    Json j;
    j["annihilator"] = to_string(r.annihilator());
    Json inits = Json::array();
    for (const auto& x : r.inits()) {
        inits.push_back(to_string(x));
    }
    j["inits"] = inits;
    j["field"] = std::string(field_name(r.field()));
    return j;
}

Json report_json(const CheckReport& r) {
    Json j;
    j["check"] = r.check;
    j["status"] = r.pass ? "pass" : "fail";
    if (r.first_failure.empty()) {
        j["first_failure"] = nullptr;
    } else {
        Json f;
        for (const auto& [k, v] : r.first_failure) {
            f[k] = v;
        }
        j["first_failure"] = f;
    }
    if (!r.note.empty()) {
        j["note"] = r.note;
    }
    return j;
}

std::string join(const std::vector<FieldElem>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? ", " : "") + to_string(xs[i]);
    }
    return out;
}

DRSeq make_generator(const std::string& annihilator, const std::string& inits, Field field) {
    return DRSeq(parse_ore_expr(annihilator, field), parse_csv(inits, field));
}

// A generator when the input has one; literal and embedded inputs have none
// except through embed_as_drs.
std::optional<DRSeq> input_generator(const SeqInput& in, Field field) {
    switch (in.kind) {
    case SeqInput::Kind::Generator:
        return make_generator(in.text, in.inits, field);
    case SeqInput::Kind::Source:
        return embed_as_drs(parse_field_expr(in.text, field), Embedding::Source);
    case SeqInput::Kind::Target:
        return embed_as_drs(parse_field_expr(in.text, field), Embedding::Target);
    case SeqInput::Kind::Literal:
        return std::nullopt;
    }
    return std::nullopt;
}

// Prefix of at least `length` terms; literal sequences are used as given.
Seq input_seq(const SeqInput& in, Field field, std::size_t length) {
    switch (in.kind) {
    case SeqInput::Kind::Literal:
        return parse_seq(in.text, field);
    case SeqInput::Kind::Source:
        return source(parse_field_expr(in.text, field), length);
    case SeqInput::Kind::Target:
        return target(parse_field_expr(in.text, field), length);
    case SeqInput::Kind::Generator:
        return materialize(make_generator(in.text, in.inits, field), length);
    }
    return Seq(field);
}

DRSeq require_generator(const SeqInput& in, Field field, const char* what) {
    auto g = input_generator(in, field);
    if (!g) {
        throw Error(ErrorKind::ArityMismatch, std::string(what) + " needs a generator, not a literal sequence");
    }
    return *g;
}

void emit_seq(std::ostream& out, bool json, const Seq& s) {
    if (json) {
        out << seq_json(s).dump(2) << '\n';
    } else {
        print_table(out, seq_table({"value"}, {s}));
    }
}

int emit_combined(std::ostream& out, bool json, const DRSeq& r, std::size_t bound, std::size_t terms) {
    const Seq s = materialize(r, terms);
    if (json) {
        Json j = drs_json(r);
        j["caveat"] = certified_caveat(bound);
        j["terms"] = terms_json(s);
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "annihilator: " << to_string(r.annihilator()) << '\n';
    out << "inits: " << join(r.inits()) << '\n';
    out << certified_caveat(bound) << '\n';
    print_table(out, seq_table({"value"}, {s}));
    return 0;
}

std::vector<CheckReport> run_suite(const std::string& name) {
    std::vector<CheckReport> out;
    if (name == "hopf-axioms" || name == "all") {
        auto h = hopf_suite(regression_sequences());
        out.insert(out.end(), h.begin(), h.end());
    }
    if (name == "generation" || name == "all") {
        auto g = generation_suite(20);
        out.insert(out.end(), g.begin(), g.end());
    }
    if (out.empty()) {
        throw Error(ErrorKind::SyntaxError, "unknown suite '" + name + "'");
    }
    return out;
}

struct Runner {
    const Command& cmd;
    std::ostream& out;

    int operator()(const ExpandCmd& c) const {
        const FieldElem x = parse_field_expr(c.x, cmd.field);
        emit_seq(out, cmd.json, c.which == Embedding::Source ? source(x, c.terms) : target(x, c.terms));
        return 0;
    }

    int operator()(const SolveCmd& c) const {
        emit_seq(out, cmd.json, materialize(make_generator(c.annihilator, c.inits, cmd.field), c.terms));
        return 0;
    }

    int operator()(const FundCmd& c) const {
        const OrePoly p = parse_ore_expr(c.annihilator, cmd.field);
        const FundMatrix m = fundamental_matrix(p, std::max<std::size_t>(c.terms, static_cast<std::size_t>(std::max(p.degree(), 0))));
        if (cmd.json) {
            Json j;
            j["field"] = std::string(field_name(cmd.field));
            j["annihilator"] = to_string(p);
            Json rows = Json::array();
            for (const auto& s : m.solutions) {
                rows.push_back(terms_json(s));
            }
            j["solutions"] = rows;
            out << j.dump(2) << '\n';
            return 0;
        }
        std::vector<std::string> heads;
        for (std::size_t i = 0; i < m.degree; ++i) {
            heads.push_back("o_" + std::to_string(i));
        }
        print_table(out, seq_table(heads, m.solutions));
        return 0;
    }

    int operator()(const AnnihilateCmd& c) const {
        const auto gen = input_generator(c.input, cmd.field);
        std::size_t bound = 0;
        if (c.bound) {
            bound = *c.bound;
        } else if (gen) {
            bound = gen->order();
        } else {
            throw Error(ErrorKind::ArityMismatch, "--bound is required for a literal sequence");
        }
        const std::size_t window = c.window.value_or(default_window(bound));
        const Seq s = input_seq(c.input, cmd.field, std::max(2 * bound, window));
        const auto p = min_annihilator(s, bound, window);
        if (cmd.json) {
            Json j;
            if (p) {
                const std::size_t e = static_cast<std::size_t>(p->degree());
                j = drs_json(DRSeq(*p, std::vector<FieldElem>(s.terms().begin(), s.terms().begin() + static_cast<std::ptrdiff_t>(e))));
            } else {
                j["annihilator"] = nullptr;
                j["inits"] = nullptr;
                j["field"] = std::string(field_name(cmd.field));
            }
            j["caveat"] = certified_caveat(bound);
            out << j.dump(2) << '\n';
            return 0;
        }
        out << "annihilator: " << (p ? to_string(*p) : "none") << '\n';
        if (p) {
            out << "order: " << p->degree() << '\n';
        }
        out << certified_caveat(bound) << '\n';
        return 0;
    }

    int combine(const SeqInput& a, const SeqInput& b, std::size_t terms, std::optional<std::size_t> bound,
                bool is_product) const {
        const DRSeq x = require_generator(a, cmd.field, is_product ? "product" : "sum");
        const DRSeq y = require_generator(b, cmd.field, is_product ? "product" : "sum");
        const std::size_t guaranteed = is_product ? x.order() * y.order() : x.order() + y.order();
        const std::size_t d = bound.value_or(guaranteed);
        const std::size_t len = std::max({terms, 2 * d, default_window(d)});
        const Seq sx = materialize(x, len);
        const Seq sy = materialize(y, len);
        const Seq combined = is_product ? hmul(sx, sy) : hadd(sx, sy);
        const auto p = min_annihilator(combined, d);
        if (!p) {
            if (cmd.json) {
                Json j;
                j["annihilator"] = nullptr;
                j["inits"] = nullptr;
                j["field"] = std::string(field_name(cmd.field));
                j["caveat"] = certified_caveat(d);
                j["terms"] = terms_json(combined.prefix(terms));
                out << j.dump(2) << '\n';
            } else {
                out << "annihilator: none\n" << certified_caveat(d) << '\n';
                print_table(out, seq_table({"value"}, {combined.prefix(terms)}));
            }
            return 0;
        }
        const std::size_t e = static_cast<std::size_t>(p->degree());
        const DRSeq r(*p, std::vector<FieldElem>(combined.terms().begin(),
                                                 combined.terms().begin() + static_cast<std::ptrdiff_t>(e)));
        return emit_combined(out, cmd.json, r, d, terms);
    }

    int operator()(const ProductCmd& c) const { return combine(c.first, c.second, c.terms, c.bound, true); }
    int operator()(const SumCmd& c) const { return combine(c.first, c.second, c.terms, c.bound, false); }

    int operator()(const AntipodeCmd& c) const {
        emit_seq(out, cmd.json, antipode(input_seq(c.input, cmd.field, c.terms).prefix(c.terms)));
        return 0;
    }

    int operator()(const ComultCmd& c) const {
        const DRSeq r = require_generator(c.input, cmd.field, "comult");
        const ComultLegs legs = comult(r, std::max(c.terms, r.order()));
        if (cmd.json) {
            Json j;
            j["field"] = std::string(field_name(cmd.field));
            j["annihilator"] = to_string(r.annihilator());
            Json pairs = Json::array();
            for (const auto& [l, rt] : legs.pairs) {
                Json p;
                p["left"] = terms_json(l);
                p["right"] = terms_json(rt);
                pairs.push_back(p);
            }
            j["pairs"] = pairs;
            out << j.dump(2) << '\n';
            return 0;
        }
        std::vector<std::string> heads;
        std::vector<Seq> cols;
        for (std::size_t i = 0; i < legs.degree; ++i) {
            heads.push_back("N^" + std::to_string(i) + "(a)");
            heads.push_back("o_" + std::to_string(i));
            cols.push_back(legs.pairs[i].first);
            cols.push_back(legs.pairs[i].second);
        }
        print_table(out, seq_table(heads, cols));
        return 0;
    }

    int operator()(const RecurCmd& c) const {
        const std::size_t window = c.window.value_or(default_window(c.bound));
        const Seq s = input_seq(c.input, cmd.field, window + c.bound);
        const auto rec = find_linear_recurrence(s, c.bound, window);
        if (cmd.json) {
            Json j;
            j["field"] = std::string(field_name(cmd.field));
            if (rec) {
                Json arr = Json::array();
                for (const auto& x : *rec) {
                    arr.push_back(to_string(x));
                }
                j["coefficients"] = arr;
            } else {
                j["coefficients"] = nullptr;
            }
            out << j.dump(2) << '\n';
            return 0;
        }
        out << (rec ? join(*rec) : "none") << '\n';
        return 0;
    }

    int operator()(const CheckCmd& c) const {
        const auto reports = run_suite(c.suite);
        const bool all = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.pass; });
        if (cmd.json) {
            Json arr = Json::array();
            for (const auto& r : reports) {
                arr.push_back(report_json(r));
            }
            out << arr.dump(2) << '\n';
        } else {
            Table t{{"check", "status", "first_failure"}};
            for (const auto& r : reports) {
                std::string detail;
                for (const auto& [k, v] : r.first_failure) {
                    detail += (detail.empty() ? "" : " ") + k + "=" + v;
                }
                if (!r.note.empty()) {
                    detail += (detail.empty() ? "" : "; ") + r.note;
                }
                t.push_back({r.check, r.pass ? "pass" : "fail", detail});
            }
            print_table(out, t);
        }
        return all ? 0 : 1;
    }
};

CheckReport pass_report(std::string name) {
    CheckReport r;
    r.check = std::move(name);
    return r;
}

// Empty when generation agrees three ways and the annihilator round-trips.
std::vector<std::pair<std::string, std::string>> generation_failure(const DRSeq& r, std::size_t length,
                                                                    std::string& which) {
    const Seq m = materialize(r, length);
    const Seq f = from_initial(r.annihilator(), r.inits(), length);
    const SeqComparison c = compare(m, f);
    if (!c.equal || c.compared != length) {
        which = "three-way-generation";
        const std::size_t n = c.first_mismatch.value_or(c.compared);
        return {{"annihilator", to_string(r.annihilator())}, {"index", std::to_string(n)}};
    }
    const Seq residual = act(m, r.annihilator());
    for (std::size_t n = 0; n < residual.size(); ++n) {
        if (!residual[n].is_zero()) {
            which = "three-way-generation";
            return {{"annihilator", to_string(r.annihilator())}, {"act-index", std::to_string(n)}};
        }
    }
    const auto p = min_annihilator(m, r.order());
    if (!p || !(*p == r.annihilator())) {
        which = "round-trip";
        return {{"annihilator", to_string(r.annihilator())}, {"found", p ? to_string(*p) : "none"}};
    }
    return {};
}

} // namespace

std::vector<CheckReport> generation_suite(std::size_t random_cases) {
    constexpr std::size_t length = 12;
    std::vector<DRSeq> cases = regression_sequences();
    std::mt19937_64 rng(20260);
    for (std::size_t i = 0; i < random_cases; ++i) {
        const Field f = i % 2 == 0 ? Field::QZ : Field::Q;
        const std::size_t d = 1 + i % 3;
        const OrePoly p = random_monic(f, d, rng);
        std::vector<FieldElem> inits;
        // the zero sequence has no annihilator of degree d
        for (std::size_t j = 0; j < d; ++j) {
            inits.push_back(random_nonzero_elem(f, rng));
        }
        cases.emplace_back(p, std::move(inits));
    }
    CheckReport gen = pass_report("three-way-generation");
    CheckReport trip = pass_report("round-trip");
    for (std::size_t i = 0; i < cases.size(); ++i) {
        std::string which;
        auto bad = generation_failure(cases[i], length, which);
        if (bad.empty()) {
            continue;
        }
        CheckReport& target_report = which == "round-trip" ? trip : gen;
        if (target_report.pass) {
            target_report.pass = false;
            bad.insert(bad.begin(), {"case", std::to_string(i)});
            target_report.first_failure = std::move(bad);
        }
    }
    return {gen, trip};
}

int run(const Command& cmd, std::ostream& out) { return std::visit(Runner{cmd, out}, cmd.op); }

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with differentially recursive sequences", "dlin"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string field = "qz";
    bool json = false;
    app.add_option("--field", field, "Base field: q or qz")->check(CLI::IsMember({"q", "qz"}));
    app.add_flag("--json", json, "Emit JSON instead of a table");

    std::size_t terms = 10;
    std::optional<std::size_t> bound;
    std::optional<std::size_t> window;
    std::string poly1, inits1, poly2, inits2, seq_text, src_text, tgt_text, suite = "all";

    auto add_terms = [&](CLI::App* s) { s->add_option("--terms", terms, "Number of terms")->check(CLI::PositiveNumber); };
    auto add_bound = [&](CLI::App* s) {
        s->add_option("--bound", bound, "Largest order searched");
        s->add_option("--window", window, "Verification window");
    };
    auto add_input = [&](CLI::App* s) {
        auto* p = s->add_option("-P,--annihilator", poly1, "Monic skew polynomial");
        s->add_option("--inits", inits1, "Initial values, comma separated")->needs(p);
        auto* lit = s->add_option("--seq", seq_text, "Literal prefix \"[a, b, ...]\"");
        auto* so = s->add_option("--source", src_text, "Use s(x)");
        auto* ta = s->add_option("--target", tgt_text, "Use t(x)");
        p->excludes(lit)->excludes(so)->excludes(ta);
        lit->excludes(so)->excludes(ta);
        so->excludes(ta);
    };
    auto add_second = [&](CLI::App* s) {
        auto* q = s->add_option("-Q,--annihilator2", poly2, "Second monic skew polynomial")->required();
        s->add_option("--inits2", inits2, "Initial values of the second sequence")->needs(q)->required();
    };

    auto* expand = app.add_subcommand("expand", "Print s(x) or t(x)");
    {
        auto* so = expand->add_option("--source", src_text, "Use s(x)");
        auto* ta = expand->add_option("--target", tgt_text, "Use t(x)");
        so->excludes(ta);
        add_terms(expand);
    }
    auto* solve = app.add_subcommand("solve", "Materialize a sequence from its generator");
    solve->add_option("-P,--annihilator", poly1, "Monic skew polynomial")->required();
    solve->add_option("--inits", inits1, "Initial values, comma separated")->required();
    add_terms(solve);
    auto* fund = app.add_subcommand("fund", "Fundamental matrix of solutions");
    fund->add_option("-P,--annihilator", poly1, "Monic skew polynomial")->required();
    add_terms(fund);
    auto* annihilate = app.add_subcommand("annihilate", "Least-order annihilator search");
    add_input(annihilate);
    add_bound(annihilate);
    auto* product_cmd = app.add_subcommand("product", "Generator of the Hurwitz product");
    auto* sum_cmd = app.add_subcommand("sum", "Generator of the entrywise sum");
    for (auto* s : {product_cmd, sum_cmd}) {
        s->add_option("-P,--annihilator", poly1, "First monic skew polynomial")->required();
        s->add_option("--inits", inits1, "Initial values of the first sequence")->required();
        add_second(s);
        add_terms(s);
        s->add_option("--bound", bound, "Largest order searched");
    }
    auto* antipode_cmd = app.add_subcommand("antipode", "Apply the antipode");
    add_input(antipode_cmd);
    add_terms(antipode_cmd);
    auto* comult_cmd = app.add_subcommand("comult", "Comultiplication legs");
    add_input(comult_cmd);
    add_terms(comult_cmd);
    auto* recur = app.add_subcommand("recur", "Linear recurrence with constant-free coefficients");
    add_input(recur);
    add_bound(recur);
    auto* check = app.add_subcommand("check", "Run an axiom suite");
    check->add_option("suite", suite, "hopf-axioms, generation or all")
        ->check(CLI::IsMember({"hopf-axioms", "generation", "all"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    auto input = [&]() {
        SeqInput in;
        if (!poly1.empty()) {
            in.kind = SeqInput::Kind::Generator;
            in.text = poly1;
            in.inits = inits1;
        } else if (!seq_text.empty()) {
            in.kind = SeqInput::Kind::Literal;
            in.text = seq_text;
        } else if (!src_text.empty()) {
            in.kind = SeqInput::Kind::Source;
            in.text = src_text;
        } else if (!tgt_text.empty()) {
            in.kind = SeqInput::Kind::Target;
            in.text = tgt_text;
        } else {
            throw Error(ErrorKind::ArityMismatch, "one of -P, --seq, --source or --target is required");
        }
        return in;
    };

    try {
        Command cmd;
        cmd.field = parse_field_name(field);
        cmd.json = json;
        if (expand->parsed()) {
            if (expand->count("--source") + expand->count("--target") != 1) {
                throw Error(ErrorKind::ArityMismatch, "expand needs --source or --target");
            }
            ExpandCmd c;
            c.which = src_text.empty() ? Embedding::Target : Embedding::Source;
            c.x = src_text.empty() ? tgt_text : src_text;
            c.terms = terms;
            cmd.op = c;
        } else if (solve->parsed()) {
            cmd.op = SolveCmd{poly1, inits1, terms};
        } else if (fund->parsed()) {
            cmd.op = FundCmd{poly1, terms};
        } else if (annihilate->parsed()) {
            cmd.op = AnnihilateCmd{input(), bound, window};
        } else if (product_cmd->parsed() || sum_cmd->parsed()) {
            SeqInput a{SeqInput::Kind::Generator, poly1, inits1};
            SeqInput b{SeqInput::Kind::Generator, poly2, inits2};
            if (product_cmd->parsed()) {
                cmd.op = ProductCmd{a, b, terms, bound};
            } else {
                cmd.op = SumCmd{a, b, terms, bound};
            }
        } else if (antipode_cmd->parsed()) {
            cmd.op = AntipodeCmd{input(), terms};
        } else if (comult_cmd->parsed()) {
            cmd.op = ComultCmd{input(), terms};
        } else if (recur->parsed()) {
            if (!bound) {
                throw Error(ErrorKind::ArityMismatch, "recur needs --bound");
            }
            cmd.op = RecurCmd{input(), *bound, window};
        } else {
            cmd.op = CheckCmd{suite};
        }
        return run(cmd, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace dlin
