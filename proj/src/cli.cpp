#include "tight/cli.hpp"

#include <chrono>
#include <fstream>

#include <CLI11.hpp>

#include "tight/report.hpp"

namespace tight {

namespace {

using nlohmann::json;

/// Raised after the report is written when a check did not pass.
struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string algebra;
    std::string weight;
    std::string sub;
    std::int64_t max = 10;
    std::string p_range;
    std::string target;
    std::string format = "md";
    std::string out;
    bool timing = false;
    std::uint32_t seed = 20240601;
    int cases = 400;
};

json verdict_kahler(const TightnessVerdict& v)
{
    const auto map = verdict_class_map(v);
    if (!map)
        return nullptr;
    const KahlerClass pulled = map->pullback_distinguished();
    json names = json::array();
    for (const auto& f : map->source())
        names.push_back(f.name);
    json pull = json::array();
    for (const auto& c : pulled.coefficients)
        pull.push_back(to_string(c));
    return {{"source", names},
            {"target", map->target().front().name},
            {"pullback", pull},
            {"norm", to_string(norm(pulled))},
            {"target_norm", to_string(Rational(total_rank(map->target())))},
            {"tight", is_tight(*map)}};
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text)
{
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            const auto p = std::stoll(text);
            return {p, p};
        }
        return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
    } catch (const std::logic_error&) {
        throw std::invalid_argument("bad --p-range '" + text + "', expected a:b");
    }
}

void cmd_classify(const Options& o, ReportDocument& doc)
{
    const AlgebraId algebra = parse_algebra(o.algebra);
    const CrossCheck check = cross_check(algebra, parse_weight(o.weight), true);
    doc.command = "classify";
    doc.params = {{"algebra", o.algebra}, {"weight", o.weight}};
    doc.rows.push_back(make_row(check));
    doc.agreement = check.agree;
    doc.details["kahler"] = verdict_kahler(check.theorem);
    doc.details["replayed"] = replay_witness(check.theorem) && replay_witness(check.constructive);
    if (!doc.agreement || !doc.details["replayed"].get<bool>())
        throw VerificationFailure("routes disagree or a witness failed to replay");
}

void cmd_sweep(const Options& o, ReportDocument& doc)
{
    const AlgebraId algebra = parse_algebra(o.algebra);
    const SweepResult result = sweep(algebra, o.max);
    doc.command = "sweep";
    doc.params = {{"algebra", o.algebra}, {"max", std::to_string(o.max)}};
    json tight_weights = json::array();
    bool replayed = true;
    for (const auto& row : result.rows) {
        doc.rows.push_back(make_row(row));
        if (row.theorem.tight)
            tight_weights.push_back(weight_string(row.theorem.highest_weight));
        replayed = replayed && replay_witness(row.theorem) && replay_witness(row.constructive);
    }
    doc.agreement = result.agreement;
    doc.details = {{"tight_count", result.tight_count},
                   {"nontight_count", result.nontight_count},
                   {"tight_weights", tight_weights},
                   {"replayed", replayed}};
    if (!result.agreement || !replayed)
        throw VerificationFailure("sweep: routes disagree or a witness failed to replay");
}

void cmd_branch(const Options& o, ReportDocument& doc)
{
    const AlgebraId algebra = parse_algebra(o.algebra);
    const RootSystem system = build_root_system(root_system_kind(algebra));
    const auto w = parse_weight(o.weight);
    std::vector<Rational> coords(w.begin(), w.end());
    const Weight highest(coords);
    if (coords.size() != system.rank() || !system.is_dominant_integral(highest))
        throw std::invalid_argument("weight " + o.weight + " is not dominant integral for " + o.algebra);
    const SubalgebraSpec sub = parse_subalgebra(system, o.sub);
    const BranchingResult result = restrict_rep(system, highest, sub);

    doc.command = "branch";
    doc.params = {{"algebra", o.algebra}, {"weight", o.weight}, {"sub", o.sub}};
    json factors = json::array();
    json signatures = json::array();
    for (std::size_t i = 0; i < result.factors.size(); ++i) {
        factors.push_back(result.factors[i]);
        signatures.push_back(to_string(result.signatures[i]));
    }
    json generated = json::array();
    for (const auto& g : sub.generated_roots_C)
        generated.push_back(system.root_label(g));
    doc.details = {{"subalgebra", sub.selector()},
                   {"target_kind", sub.target_kind == TargetKind::Sl2 ? "sl2" : "sl2+sl2"},
                   {"generated_roots", generated},
                   {"factors", factors},
                   {"signatures", signatures},
                   {"dimension", result.dimension()}};
    if (const auto even = even_witness(system, highest, sub)) {
        json evals = json::array();
        for (const auto& e : even->evaluations)
            evals.push_back(to_string(e));
        doc.details["even_witness"] = {{"weight", to_string(even->weight)},
                                       {"evaluations", evals},
                                       {"coroot", sub.labels[even->component]},
                                       {"value", to_string(even->value)}};
    } else {
        doc.details["even_witness"] = nullptr;
    }
}

json pairing_json(const PairingCheck& pc)
{
    return {{"signature", to_string(pc.signature)},
            {"lhs", to_string(pc.lhs)},
            {"rhs", to_string(pc.rhs)},
            {"degenerate", pc.degenerate},
            {"tight", pc.tight}};
}

void cmd_pair(const Options& o, ReportDocument& doc)
{
    const AlgebraId algebra = parse_algebra(o.algebra);
    const auto w = parse_weight(o.weight);
    for (auto x : w)
        if (x < 0)
            throw std::invalid_argument("weight " + o.weight + " is not dominant");
    doc.command = "pair";
    doc.params = {{"algebra", o.algebra}, {"weight", o.weight}};
    if (algebra.kind == AlgebraKind::Su11 && w.size() == 1) {
        doc.details = pairing_json(su11_pairing(w[0]));
    } else if (algebra.kind == AlgebraKind::Su11xSu11 && w.size() == 2) {
        const TensorPairing tp = tensor_pairing(w[0], w[1]);
        json structures = json::array();
        for (std::size_t s = 0; s < tp.structures.size(); ++s) {
            json entry = pairing_json(tp.checks[s]);
            entry["structure"] = to_string(tp.structures[s]);
            structures.push_back(entry);
        }
        doc.details = {{"structures", structures}, {"tight", tp.tight()}};
    } else {
        throw std::invalid_argument("pair needs --algebra su11 with one weight or su11xsu11 with two");
    }
}

void cmd_verify(const Options& o, ReportDocument& doc)
{
    doc.command = "verify";
    if (o.target == "kahler-lemmas") {
        doc.params = {{"target", o.target}, {"seed", std::to_string(o.seed)}, {"cases", std::to_string(o.cases)}};
        json fixtures = json::array();
        bool passed = true;
        for (const auto& r : kahler_lemma_fixtures(o.seed, o.cases)) {
            fixtures.push_back({{"lemma", r.lemma},
                                {"cases", r.cases},
                                {"failures", r.failures},
                                {"positive_cases", r.positive_cases},
                                {"negative_cases", r.negative_cases},
                                {"passed", r.passed()},
                                {"failure_details", r.failure_details}});
            passed = passed && r.passed();
        }
        json norms = json::array();
        for (const auto& row : embedding_table()) {
            const KahlerClass kappa = KahlerClass::distinguished({row.algebra});
            norms.push_back({{"factor", row.algebra.name},
                             {"rank", row.algebra.rank},
                             {"tube_type", row.algebra.tube_type},
                             {"norm", to_string(norm(kappa))}});
        }
        doc.details = {{"fixtures", fixtures}, {"norms", norms}};
        doc.agreement = passed;
        if (!passed)
            throw VerificationFailure("a Kaehler lemma fixture failed");
        return;
    }

    if (o.p_range.empty())
        throw std::invalid_argument("verify lemma-bla needs --p-range a:b");
    const auto [lo, hi] = parse_range(o.p_range);
    if (lo > hi)
        throw std::invalid_argument("empty --p-range " + o.p_range);
    doc.params = {{"target", o.target}, {"p-range", o.p_range}};
    json lines = json::array();
    std::int64_t checked = 0;
    bool all_infeasible = true;
    for (std::int64_t p = lo; p <= hi; ++p) {
        try {
            const InfeasibilityReport r = verify_su_n1_to_sostar(p);
            ++checked;
            all_infeasible = all_infeasible && r.infeasible;
            lines.push_back({{"p", p},
                             {"status", r.infeasible ? "infeasible" : "feasible"},
                             {"n", r.n},
                             {"l", r.l},
                             {"residual", r.residual},
                             {"enumerated_solutions", r.enumerated_solutions}});
        } catch (const ReducedCase& e) {
            lines.push_back({{"p", p}, {"status", "reduced"}, {"reduction", e.what()}});
        }
    }
    doc.details = {{"cases", lines}};
    doc.agreement = all_infeasible;
    if (!all_infeasible)
        throw VerificationFailure("a constraint system turned out feasible");
    if (checked == 0)
        throw ReducedCase("no odd p >= 5 in --p-range " + o.p_range + "; every case reduces");
}

void emit(const ReportDocument& doc, const Options& o, std::ostream& out)
{
    const std::string text = o.format == "json" ? serialize(doc) : render_markdown(doc);
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out);
    if (!file)
        throw std::invalid_argument("cannot write " + o.out);
    file << text;
}

void add_output_options(CLI::App* cmd, Options& o)
{
    cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "md"}))->capture_default_str();
    cmd->add_option("--out", o.out, "Write the report to this file instead of stdout");
    cmd->add_flag("--timing", o.timing, "Include wall-clock timing in the report");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact tightness classification of Hermitian representations", "tightcheck"};
    app.require_subcommand(1);
    const std::vector<std::string> algebras{"su11", "su11xsu11", "sp4", "sp4su11", "su21"};

    auto* classify_cmd = app.add_subcommand("classify", "Classify one highest weight");
    classify_cmd->add_option("--algebra", o.algebra)->required()->check(CLI::IsMember(algebras));
    classify_cmd->add_option("--weight", o.weight, "k[,l[,m]]")->required();

    auto* sweep_cmd = app.add_subcommand("sweep", "Classify all weights with coordinate sum <= max");
    sweep_cmd->add_option("--algebra", o.algebra)->required()->check(CLI::IsMember(algebras));
    sweep_cmd->add_option("--max", o.max)->capture_default_str();

    auto* branch_cmd = app.add_subcommand("branch", "Restrict a representation to a regular subalgebra");
    branch_cmd->add_option("--algebra", o.algebra)->required()->check(CLI::IsMember(algebras));
    branch_cmd->add_option("--weight", o.weight)->required();
    branch_cmd->add_option("--sub", o.sub, "e.g. a1+a2 or a2,2a1+a2")->required();

    o.algebra = "su11";
    auto* pair_cmd = app.add_subcommand("pair", "Diagonal-disc pairing for su(1,1) and su(1,1)+su(1,1)");
    pair_cmd->add_option("--algebra", o.algebra)->capture_default_str()->check(CLI::IsMember({"su11", "su11xsu11"}));
    pair_cmd->add_option("--weight", o.weight)->required();

    auto* verify_cmd = app.add_subcommand("verify", "Run lemma-bla or kahler-lemmas");
    verify_cmd->add_option("target", o.target)->required()->check(CLI::IsMember({"lemma-bla", "kahler-lemmas"}));
    verify_cmd->add_option("--p-range", o.p_range, "a:b");
    verify_cmd->add_option("--seed", o.seed)->capture_default_str();
    verify_cmd->add_option("--cases", o.cases)->capture_default_str()->check(CLI::PositiveNumber);

    for (auto* cmd : {classify_cmd, sweep_cmd, branch_cmd, pair_cmd, verify_cmd})
        add_output_options(cmd, o);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty())
        reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    ReportDocument doc;
    const auto start = std::chrono::steady_clock::now();
    auto finish = [&] {
        if (o.timing)
            doc.timing_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        emit(doc, o, out);
    };
    try {
        if (*classify_cmd)
            cmd_classify(o, doc);
        else if (*sweep_cmd)
            cmd_sweep(o, doc);
        else if (*branch_cmd)
            cmd_branch(o, doc);
        else if (*pair_cmd)
            cmd_pair(o, doc);
        else
            cmd_verify(o, doc);
        finish();
        return kExitOk;
    } catch (const VerificationFailure& e) {
        finish();
        err << "verification failed: " << e.what() << "\n";
        return kExitVerification;
    } catch (const SubalgebraError& e) {
        err << "invalid subalgebra (condition " << e.condition() << "): " << e.what() << "\n";
        return kExitValidation;
    } catch (const ReducedCase& e) {
        if (!doc.command.empty())
            finish();
        err << "rejected: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitVerification;
    }
}

}  // namespace tight
