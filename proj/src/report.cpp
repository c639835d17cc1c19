#include "tight/report.hpp"

#include <sstream>

namespace tight {

using nlohmann::json;

namespace {

json int_weight(const Weight& w)
{
    json out = json::array();
    for (const auto& c : w.coords) {
        if (!is_integer(c))
            throw std::invalid_argument("report: non-integral weight coordinate " + to_string(c));
        out.push_back(c.numerator());
    }
    return out;
}

Weight weight_from(const json& j)
{
    std::vector<Rational> coords;
    for (const auto& c : j)
        coords.emplace_back(c.get<std::int64_t>());
    return Weight(std::move(coords));
}

std::string md_witness(const Witness& w)
{
    std::string out = to_string(w.kind);
    if (w.factor) {
        out += " [";
        for (std::size_t i = 0; i < w.factor->size(); ++i)
            out += (i ? "," : "") + std::to_string((*w.factor)[i]);
        out += "]";
    }
    return out;
}

std::string md_opt(const std::optional<Rational>& r)
{
    return r ? to_string(*r) : "";
}

std::string md_escape(std::string s)
{
    std::string out;
    for (char c : s) {
        if (c == '|')
            out += "\\|";
        else
            out += c;
    }
    return out;
}

}  // namespace

ReportRow make_row(const TightnessVerdict& v)
{
    ReportRow row;
    row.weight = v.highest_weight;
    row.tight = v.tight;
    row.holomorphic = v.holomorphic;
    row.witness = v.witness;
    return row;
}

ReportRow make_row(const CrossCheck& check)
{
    ReportRow row = make_row(check.theorem);
    row.agree = check.agree;
    row.constructive = check.constructive.witness;
    return row;
}

json witness_to_json(const Witness& w)
{
    json j = json::object();
    j["kind"] = to_string(w.kind);
    if (w.subalgebra)
        j["subalgebra"] = *w.subalgebra;
    if (w.coroot)
        j["coroot"] = *w.coroot;
    if (w.weight)
        j["weight"] = int_weight(*w.weight);
    if (w.evaluation)
        j["evaluation"] = to_string(*w.evaluation);
    if (w.pairing_lhs)
        j["pairing_lhs"] = to_string(*w.pairing_lhs);
    if (w.pairing_rhs)
        j["pairing_rhs"] = to_string(*w.pairing_rhs);
    if (w.factor)
        j["factor"] = *w.factor;
    if (w.structure)
        j["structure"] = *w.structure;
    if (!w.chain.empty()) {
        json chain = json::array();
        for (const auto& step : w.chain)
            chain.push_back({{"weight", int_weight(step.weight)}, {"evaluation", to_string(step.evaluation)}});
        j["chain"] = chain;
    }
    if (!w.clause.empty())
        j["clause"] = w.clause;
    return j;
}

Witness witness_from_json(const json& j)
{
    Witness w;
    w.kind = parse_witness_kind(j.at("kind").get<std::string>());
    if (j.contains("subalgebra"))
        w.subalgebra = j["subalgebra"].get<std::string>();
    if (j.contains("coroot"))
        w.coroot = j["coroot"].get<std::string>();
    if (j.contains("weight"))
        w.weight = weight_from(j["weight"]);
    if (j.contains("evaluation"))
        w.evaluation = parse_rational(j["evaluation"].get<std::string>());
    if (j.contains("pairing_lhs"))
        w.pairing_lhs = parse_rational(j["pairing_lhs"].get<std::string>());
    if (j.contains("pairing_rhs"))
        w.pairing_rhs = parse_rational(j["pairing_rhs"].get<std::string>());
    if (j.contains("factor"))
        w.factor = j["factor"].get<std::vector<std::int64_t>>();
    if (j.contains("structure"))
        w.structure = j["structure"].get<std::string>();
    if (j.contains("chain"))
        for (const auto& step : j["chain"])
            w.chain.push_back({weight_from(step.at("weight")),
                               parse_rational(step.at("evaluation").get<std::string>())});
    if (j.contains("clause"))
        w.clause = j["clause"].get<std::string>();
    return w;
}

json to_json(const ReportDocument& doc)
{
    json rows = json::array();
    for (const auto& r : doc.rows) {
        json row = {{"weight", r.weight}, {"tight", r.tight}, {"witness", witness_to_json(r.witness)}};
        row["holomorphic"] = r.holomorphic ? json(*r.holomorphic) : json(nullptr);
        if (r.agree)
            row["agree"] = *r.agree;
        if (r.constructive)
            row["constructive"] = witness_to_json(*r.constructive);
        rows.push_back(std::move(row));
    }
    json j = {{"command", doc.command}, {"params", doc.params}, {"rows", rows},
              {"agreement", doc.agreement}, {"details", doc.details}};
    if (doc.timing_seconds)
        j["timing_seconds"] = *doc.timing_seconds;
    return j;
}

ReportDocument report_from_json(const json& j)
{
    ReportDocument doc;
    doc.command = j.at("command").get<std::string>();
    doc.params = j.at("params").get<std::map<std::string, std::string>>();
    doc.agreement = j.at("agreement").get<bool>();
    doc.details = j.value("details", json::object());
    if (j.contains("timing_seconds"))
        doc.timing_seconds = j["timing_seconds"].get<double>();
    for (const auto& r : j.at("rows")) {
        ReportRow row;
        row.weight = r.at("weight").get<std::vector<std::int64_t>>();
        row.tight = r.at("tight").get<bool>();
        if (!r.at("holomorphic").is_null())
            row.holomorphic = r["holomorphic"].get<bool>();
        row.witness = witness_from_json(r.at("witness"));
        if (r.contains("agree"))
            row.agree = r["agree"].get<bool>();
        if (r.contains("constructive"))
            row.constructive = witness_from_json(r["constructive"]);
        doc.rows.push_back(std::move(row));
    }
    return doc;
}

std::string serialize(const ReportDocument& doc)
{
    return to_json(doc).dump(2) + "\n";
}

ReportDocument parse_report(const std::string& text)
{
    return report_from_json(json::parse(text));
}

std::string render_markdown(const ReportDocument& doc)
{
    std::ostringstream out;
    out << "# tightcheck " << doc.command << "\n\n";
    if (!doc.params.empty()) {
        out << "| parameter | value |\n|---|---|\n";
        for (const auto& [k, v] : doc.params)
            out << "| " << k << " | " << md_escape(v) << " |\n";
        out << "\n";
    }
    if (!doc.rows.empty()) {
        out << "| weight | tight | holomorphic | witness | subalgebra | weight used | evaluation | pairing | agree |\n"
            << "|---|---|---|---|---|---|---|---|---|\n";
        for (const auto& r : doc.rows) {
            const Witness& w = r.witness;
            std::string pairing;
            if (w.pairing_lhs && w.pairing_rhs)
                pairing = to_string(*w.pairing_lhs) + " vs " + to_string(*w.pairing_rhs);
            out << "| " << weight_string(r.weight) << " | " << (r.tight ? "yes" : "no") << " | "
                << (r.holomorphic ? (*r.holomorphic ? "yes" : "no") : "-") << " | " << md_witness(w) << " | "
                << md_escape(w.subalgebra.value_or("")) << " | " << (w.weight ? to_string(*w.weight) : "")
                << " | " << md_opt(w.evaluation) << " | " << pairing << " | "
                << (r.agree ? (*r.agree ? "yes" : "NO") : "-") << " |\n";
        }
        out << "\n";
    }
    if (!doc.details.empty())
        out << "```json\n" << doc.details.dump(2) << "\n```\n\n";
    out << "agreement: " << (doc.agreement ? "yes" : "no") << "\n";
    if (doc.timing_seconds)
        out << "timing: " << *doc.timing_seconds << " s\n";
    return out.str();
}

}  // namespace tight
